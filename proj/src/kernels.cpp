// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace iscong::kernels {

// Defined in kernels_x86.cpp / kernels_neon.cpp; null when the variant is
// not usable on the current machine.
const Ops* detail_ssse3();
const Ops* detail_avx2();
const Ops* detail_neon();

namespace {

void compose_ref(std::uint8_t* dst, const std::uint8_t* f,
                 const std::uint8_t* g) {
  for (std::size_t p = 0; p < row_bytes; ++p) {
    const std::uint8_t v = f[p];
    dst[p] = (v == undef) ? undef : g[v];
  }
}

void compose_batch_ref(std::uint8_t* dst, const std::uint8_t* rows,
                       std::size_t n, const std::uint8_t* g) {
  for (std::size_t i = 0; i < n; ++i) {
    compose_ref(dst + i * row_bytes, rows + i * row_bytes, g);
  }
}

std::uint32_t rank_ref(const std::uint8_t* row) {
  std::uint32_t r = 0;
  for (std::size_t p = 0; p < row_bytes; ++p) {
    r += (row[p] != undef);
  }
  return r;
}

bool is_idempotent_ref(const std::uint8_t* row) {
  for (std::size_t p = 0; p < row_bytes; ++p) {
    if (row[p] != undef && row[p] != p) {
      return false;
    }
  }
  return true;
}

constexpr Ops scalar_ops = {"scalar", compose_ref, compose_batch_ref, rank_ref,
                            is_idempotent_ref};

const Ops* select_active() {
  std::vector<const Ops*> variants;
  for (const Ops* ops : available()) {
    variants.push_back(ops);
  }
  if (const char* forced = std::getenv("ISCONG_KERNELS")) {
    for (const Ops* ops : variants) {
      if (std::strcmp(ops->name, forced) == 0) {
        return ops;
      }
    }
  }
  return variants.back();  // best variant registers last
}

}  // namespace

const Ops& scalar() { return scalar_ops; }

std::vector<const Ops*> available() {
  std::vector<const Ops*> variants{&scalar_ops};
  if (const Ops* ops = detail_ssse3()) {
    variants.push_back(ops);
  }
  if (const Ops* ops = detail_neon()) {
    variants.push_back(ops);
  }
  if (const Ops* ops = detail_avx2()) {
    variants.push_back(ops);
  }
  return variants;
}

const Ops& active() {
  static const Ops* selected = select_active();
  return *selected;
}

}  // namespace iscong::kernels
