// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "iscong/pperm.hpp"
#include "iscong/semigroup.hpp"

namespace iscong {

using Rng = std::mt19937_64;

/// Uniformly random partial permutation of the given rank.
PartialPerm random_pperm(std::size_t degree, std::size_t rank, Rng& rng);

/// Random rank chosen uniformly in [min_rank, degree].
PartialPerm random_pperm(std::size_t degree, Rng& rng,
                         std::size_t min_rank = 0);

/// Keeps sampling generating sets (1..degree generators of mixed ranks)
/// until the closure lands in [min_size, max_size].
std::shared_ptr<const InverseSemigroup> random_inverse_semigroup(
    std::size_t degree, std::size_t min_size, std::size_t max_size, Rng& rng);

/// Random pairs of elements of s.
std::vector<std::pair<PartialPerm, PartialPerm>> random_pairs(
    const InverseSemigroup& s, std::size_t count, Rng& rng);

}  // namespace iscong
