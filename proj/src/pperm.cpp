// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/pperm.hpp"

#include <cstring>
#include <stdexcept>

namespace iscong {

namespace {

std::size_t padded_length(std::size_t degree) {
  const std::size_t blocks = (degree + kernels::row_bytes - 1) /
                             kernels::row_bytes;
  return std::max<std::size_t>(1, blocks) * kernels::row_bytes;
}

void check_degree(std::size_t degree) {
  if (degree > PartialPerm::max_degree) {
    throw std::invalid_argument("degree exceeds " +
                                std::to_string(PartialPerm::max_degree));
  }
}

}  // namespace

PartialPerm::PartialPerm(std::size_t degree)
    : degree_(static_cast<std::uint32_t>(degree)),
      img_(padded_length(degree), undef) {
  check_degree(degree);
}

PartialPerm PartialPerm::identity(std::size_t degree) {
  PartialPerm result(degree);
  for (std::size_t p = 0; p < degree; ++p) {
    result.img_[p] = static_cast<std::uint8_t>(p);
  }
  return result;
}

PartialPerm PartialPerm::from_images(std::size_t degree,
                                     const std::vector<int>& images) {
  check_degree(degree);
  if (images.size() != degree) {
    throw std::invalid_argument("image list length differs from degree");
  }
  PartialPerm result(degree);
  std::vector<bool> seen(degree, false);
  for (std::size_t p = 0; p < degree; ++p) {
    const int v = images[p];
    if (v == -1) {
      continue;
    }
    if (v < 0 || static_cast<std::size_t>(v) >= degree) {
      throw std::invalid_argument("image out of range");
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("images are not distinct");
    }
    seen[static_cast<std::size_t>(v)] = true;
    result.img_[p] = static_cast<std::uint8_t>(v);
  }
  return result;
}

PartialPerm PartialPerm::from_row(std::size_t degree, const std::uint8_t* row) {
  PartialPerm result(degree);
  std::memcpy(result.img_.data(), row, kernels::row_bytes);
  return result;
}

std::size_t PartialPerm::rank() const {
  if (img_.size() == kernels::row_bytes) {
    return kernels::active().rank(img_.data());
  }
  std::size_t r = 0;
  for (std::size_t p = 0; p < degree_; ++p) {
    r += (img_[p] != undef);
  }
  return r;
}

bool PartialPerm::is_idempotent() const {
  if (img_.size() == kernels::row_bytes) {
    return kernels::active().is_idempotent(img_.data());
  }
  for (std::size_t p = 0; p < degree_; ++p) {
    if (img_[p] != undef && img_[p] != p) {
      return false;
    }
  }
  return true;
}

PartialPerm PartialPerm::inverse() const {
  PartialPerm result(degree_);
  for (std::size_t p = 0; p < degree_; ++p) {
    if (img_[p] != undef) {
      result.img_[img_[p]] = static_cast<std::uint8_t>(p);
    }
  }
  return result;
}

PartialPerm PartialPerm::domain_one() const {
  PartialPerm result(degree_);
  for (std::size_t p = 0; p < degree_; ++p) {
    if (img_[p] != undef) {
      result.img_[p] = static_cast<std::uint8_t>(p);
    }
  }
  return result;
}

PartialPerm PartialPerm::range_one() const {
  PartialPerm result(degree_);
  for (std::size_t p = 0; p < degree_; ++p) {
    if (img_[p] != undef) {
      result.img_[img_[p]] = img_[p];
    }
  }
  return result;
}

std::vector<std::uint32_t> PartialPerm::domain() const {
  std::vector<std::uint32_t> points;
  for (std::size_t p = 0; p < degree_; ++p) {
    if (img_[p] != undef) {
      points.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return points;
}

PartialPerm operator*(const PartialPerm& f, const PartialPerm& g) {
  if (f.degree_ != g.degree_) {
    throw std::invalid_argument("degree mismatch in composition");
  }
  PartialPerm result(f.degree_);
  if (f.img_.size() == kernels::row_bytes) {
    kernels::active().compose(result.img_.data(), f.img_.data(),
                              g.img_.data());
    return result;
  }
  for (std::size_t p = 0; p < f.degree_; ++p) {
    const std::uint8_t v = f.img_[p];
    result.img_[p] = (v == PartialPerm::undef) ? PartialPerm::undef
                                               : g.img_[v];
  }
  return result;
}

bool PartialPerm::operator<(const PartialPerm& other) const {
  if (degree_ != other.degree_) {
    return degree_ < other.degree_;
  }
  for (std::size_t p = 0; p < degree_; ++p) {
    // +1 wraps undef (0xFF) to 0 so that undefined compares least.
    const std::uint8_t a = static_cast<std::uint8_t>(img_[p] + 1);
    const std::uint8_t b = static_cast<std::uint8_t>(other.img_[p] + 1);
    if (a != b) {
      return a < b;
    }
  }
  return false;
}

std::size_t PartialPerm::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ degree_;
  for (std::size_t i = 0; i < img_.size(); i += 8) {
    std::uint64_t chunk;
    std::memcpy(&chunk, img_.data() + i, 8);
    h ^= chunk;
    h *= 0x00000100000001B3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool natural_leq(const PartialPerm& s, const PartialPerm& t) {
  if (s.degree() != t.degree()) {
    throw std::invalid_argument("degree mismatch in natural_leq");
  }
  for (std::size_t p = 0; p < s.degree(); ++p) {
    if (s.image(p) != PartialPerm::undef && s.image(p) != t.image(p)) {
      return false;
    }
  }
  return true;
}

PartialPerm meet_idem(const PartialPerm& e, const PartialPerm& f) {
  if (!e.is_idempotent() || !f.is_idempotent()) {
    throw std::invalid_argument("meet_idem requires idempotent arguments");
  }
  return e * f;
}

}  // namespace iscong
