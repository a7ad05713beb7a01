// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "iscong/congruence.hpp"

namespace iscong {

/// Least congruence containing both. Both inputs must be pair-generated
/// (meets are not); otherwise throws std::invalid_argument. The trace is
/// the closure of the conjugation graph seeded with both trace partitions.
Congruence join(const Congruence& c1, const Congruence& c2);

/// Greatest congruence below both: the trace is the blockwise intersection
/// of the traces, and the normal subgroup at each meet idempotent f is the
/// intersection of the two groups H_f n f/rho_k. The result carries no
/// generating pairs.
Congruence meet(const Congruence& c1, const Congruence& c2);

}  // namespace iscong
