// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/kernels.hpp"

#if defined(__aarch64__)

#include <arm_neon.h>

namespace iscong::kernels {
namespace {

// TBL returns 0 for out-of-range indices; undef lanes (0xFF) are patched
// back afterwards, exactly as in the x86 variant.
inline uint8x16_t compose_neon_vec(uint8x16_t f, uint8x16_t g) {
  const uint8x16_t undef_vec = vdupq_n_u8(undef);
  return vorrq_u8(vqtbl1q_u8(g, f), vceqq_u8(f, undef_vec));
}

void compose_neon(std::uint8_t* dst, const std::uint8_t* f,
                  const std::uint8_t* g) {
  vst1q_u8(dst, compose_neon_vec(vld1q_u8(f), vld1q_u8(g)));
}

void compose_batch_neon(std::uint8_t* dst, const std::uint8_t* rows,
                        std::size_t n, const std::uint8_t* g) {
  const uint8x16_t gv = vld1q_u8(g);
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_u8(dst + i * row_bytes,
             compose_neon_vec(vld1q_u8(rows + i * row_bytes), gv));
  }
}

std::uint32_t rank_neon(const std::uint8_t* row) {
  const uint8x16_t defined =
      vmvnq_u8(vceqq_u8(vld1q_u8(row), vdupq_n_u8(undef)));
  // Defined lanes are 0xFF; summing bit counts gives 8 per defined lane.
  return vaddvq_u8(vcntq_u8(defined)) / 8;
}

bool is_idempotent_neon(const std::uint8_t* row) {
  static constexpr std::uint8_t iota_bytes[row_bytes] = {
      0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  const uint8x16_t rv = vld1q_u8(row);
  const uint8x16_t ok = vorrq_u8(vceqq_u8(rv, vld1q_u8(iota_bytes)),
                                 vceqq_u8(rv, vdupq_n_u8(undef)));
  return vminvq_u8(ok) == 0xFF;
}

constexpr Ops neon_ops = {"neon", compose_neon, compose_batch_neon, rank_neon,
                          is_idempotent_neon};

}  // namespace

const Ops* detail_neon() { return &neon_ops; }

}  // namespace iscong::kernels

#else

namespace iscong::kernels {
const Ops* detail_neon() { return nullptr; }
}  // namespace iscong::kernels

#endif
