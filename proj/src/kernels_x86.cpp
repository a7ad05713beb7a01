// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

namespace iscong::kernels {
namespace {

// Row values are either < 16 or 0xFF, so PSHUFB looks the image up directly:
// lanes with the high bit set come out as zero and are patched back to undef.
__attribute__((target("ssse3"))) inline __m128i compose128(__m128i f,
                                                           __m128i g) {
  const __m128i undef128 = _mm_set1_epi8(static_cast<char>(undef));
  const __m128i looked_up = _mm_shuffle_epi8(g, f);
  return _mm_or_si128(looked_up, _mm_cmpeq_epi8(f, undef128));
}

__attribute__((target("ssse3"))) void compose_ssse3(std::uint8_t* dst,
                                                    const std::uint8_t* f,
                                                    const std::uint8_t* g) {
  const __m128i fv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(f));
  const __m128i gv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(g));
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), compose128(fv, gv));
}

__attribute__((target("ssse3"))) void compose_batch_ssse3(
    std::uint8_t* dst, const std::uint8_t* rows, std::size_t n,
    const std::uint8_t* g) {
  const __m128i gv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(g));
  for (std::size_t i = 0; i < n; ++i) {
    const __m128i row = _mm_loadu_si128(
        reinterpret_cast<const __m128i*>(rows + i * row_bytes));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + i * row_bytes),
                     compose128(row, gv));
  }
}

__attribute__((target("avx2"))) void compose_batch_avx2(std::uint8_t* dst,
                                                        const std::uint8_t* rows,
                                                        std::size_t n,
                                                        const std::uint8_t* g) {
  // VPSHUFB shuffles within 128-bit lanes, so one 256-bit op composes two
  // independent rows against a broadcast right factor.
  const __m256i gv = _mm256_broadcastsi128_si256(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(g)));
  const __m256i undef256 = _mm256_set1_epi8(static_cast<char>(undef));
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < pairs; ++i) {
    const __m256i two_rows = _mm256_loadu_si256(
        reinterpret_cast<const __m256i*>(rows + 2 * i * row_bytes));
    const __m256i looked_up = _mm256_shuffle_epi8(gv, two_rows);
    const __m256i result = _mm256_or_si256(
        looked_up, _mm256_cmpeq_epi8(two_rows, undef256));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 2 * i * row_bytes),
                        result);
  }
  if (n % 2 != 0) {
    compose_ssse3(dst + (n - 1) * row_bytes, rows + (n - 1) * row_bytes, g);
  }
}

__attribute__((target("ssse3"))) std::uint32_t rank_ssse3(
    const std::uint8_t* row) {
  const __m128i rv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row));
  const __m128i undef128 = _mm_set1_epi8(static_cast<char>(undef));
  const int undef_mask = _mm_movemask_epi8(_mm_cmpeq_epi8(rv, undef128));
  return static_cast<std::uint32_t>(row_bytes) -
         static_cast<std::uint32_t>(__builtin_popcount(undef_mask & 0xFFFF));
}

__attribute__((target("ssse3"))) bool is_idempotent_ssse3(
    const std::uint8_t* row) {
  const __m128i rv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(row));
  const __m128i iota =
      _mm_setr_epi8(0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15);
  const __m128i undef128 = _mm_set1_epi8(static_cast<char>(undef));
  const __m128i fixed_or_undef = _mm_or_si128(_mm_cmpeq_epi8(rv, iota),
                                              _mm_cmpeq_epi8(rv, undef128));
  return _mm_movemask_epi8(fixed_or_undef) == 0xFFFF;
}

constexpr Ops ssse3_ops = {"ssse3", compose_ssse3, compose_batch_ssse3,
                           rank_ssse3, is_idempotent_ssse3};
constexpr Ops avx2_ops = {"avx2", compose_ssse3, compose_batch_avx2,
                          rank_ssse3, is_idempotent_ssse3};

}  // namespace

const Ops* detail_ssse3() {
  return __builtin_cpu_supports("ssse3") ? &ssse3_ops : nullptr;
}

const Ops* detail_avx2() {
  return __builtin_cpu_supports("avx2") ? &avx2_ops : nullptr;
}

}  // namespace iscong::kernels

#else

namespace iscong::kernels {
const Ops* detail_ssse3() { return nullptr; }
const Ops* detail_avx2() { return nullptr; }
}  // namespace iscong::kernels

#endif
