// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace iscong::kernels {

// Partial permutations of degree <= 16 are stored as one 16-byte row:
// row[p] is the 0-based image of the point p, or `undef` when p is not in
// the domain. Bytes past the degree are always `undef`, so the row alone
// determines composition, rank and the idempotent predicate.
inline constexpr std::size_t row_bytes = 16;
inline constexpr std::uint8_t undef = 0xFF;

struct Ops {
  const char* name;
  // dst[p] = g[f[p]] with undefined propagating (left-to-right action).
  // dst may alias f; it must not alias g.
  void (*compose)(std::uint8_t* dst, const std::uint8_t* f,
                  const std::uint8_t* g);
  // n contiguous rows, dst_i = rows_i followed by g.
  void (*compose_batch)(std::uint8_t* dst, const std::uint8_t* rows,
                        std::size_t n, const std::uint8_t* g);
  std::uint32_t (*rank)(const std::uint8_t* row);
  bool (*is_idempotent)(const std::uint8_t* row);
};

const Ops& scalar();

// All variants usable on this machine, scalar first.
std::vector<const Ops*> available();

// The preferred usable variant, selected once at startup from CPU features.
// Set ISCONG_KERNELS=<variant name> to override (unknown names are ignored).
const Ops& active();

}  // namespace iscong::kernels
