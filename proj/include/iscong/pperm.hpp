// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "iscong/kernels.hpp"

namespace iscong {

/// A partial permutation of {0, .., degree - 1}: an injective map from a
/// subset of the points to a subset of the points. Composition acts on the
/// right, so (p)(f * g) = ((p)f)g and words multiply out left to right.
///
/// Values are immutable once built. The image table is padded with `undef`
/// to a multiple of 16 bytes; degree 16 and below runs on the SIMD kernels.
class PartialPerm {
 public:
  static constexpr std::uint8_t undef = kernels::undef;
  static constexpr std::size_t max_degree = 255;

  PartialPerm() : degree_(0) {}

  /// The partial permutation of the given degree with empty domain.
  explicit PartialPerm(std::size_t degree);

  static PartialPerm identity(std::size_t degree);

  /// Build from 0-based images; -1 marks points outside the domain.
  /// Throws std::invalid_argument if images repeat or are out of range.
  static PartialPerm from_images(std::size_t degree,
                                 const std::vector<int>& images);

  /// Reinterpret one padded kernel row of the given degree (degree <= 16).
  static PartialPerm from_row(std::size_t degree, const std::uint8_t* row);

  std::size_t degree() const { return degree_; }
  std::size_t rank() const;
  bool defined(std::size_t p) const { return img_[p] != undef; }
  /// 0-based image of p, or `undef`.
  std::uint8_t image(std::size_t p) const { return img_[p]; }

  bool is_idempotent() const;
  bool empty() const { return rank() == 0; }

  PartialPerm inverse() const;
  /// s * s^-1: the identity on the domain of s.
  PartialPerm domain_one() const;
  /// s^-1 * s: the identity on the image of s.
  PartialPerm range_one() const;

  std::vector<std::uint32_t> domain() const;

  const std::uint8_t* data() const { return img_.data(); }
  std::size_t padded_size() const { return img_.size(); }

  friend PartialPerm operator*(const PartialPerm& f, const PartialPerm& g);

  bool operator==(const PartialPerm& other) const = default;
  /// Total order: degree first, then images pointwise with undef least.
  bool operator<(const PartialPerm& other) const;

  std::size_t hash() const;

 private:
  std::uint32_t degree_;
  std::vector<std::uint8_t> img_;
};

/// The natural partial order: s <= t iff s is a restriction of t.
/// Throws std::invalid_argument on degree mismatch.
bool natural_leq(const PartialPerm& s, const PartialPerm& t);

/// Meet of two idempotents: the identity on the intersection of domains.
/// Throws std::invalid_argument unless both arguments are idempotent.
PartialPerm meet_idem(const PartialPerm& e, const PartialPerm& f);

}  // namespace iscong

template <>
struct std::hash<iscong::PartialPerm> {
  std::size_t operator()(const iscong::PartialPerm& p) const {
    return p.hash();
  }
};
