// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "iscong/pperm.hpp"
#include "iscong/semigroup.hpp"

namespace iscong {

/// Atoms of the least boolean algebra on {0, .., n - 1} containing the
/// element domains: two points share an atom iff they lie in exactly the
/// same idempotent domains. Atom ids are assigned by least point.
struct AtomPartition {
  std::vector<std::uint32_t> atom_of;  // per point
  std::uint32_t n_atoms = 0;

  std::vector<std::vector<std::uint32_t>> atoms() const;
};

AtomPartition boolean_atoms(const InverseSemigroup& s);

/// The maximum idempotent-separating congruence: trace is trivial and the
/// kernel is the centraliser of the idempotents, computed as the elements
/// that fix setwise every atom inside their domain.
class MuCongruence {
 public:
  explicit MuCongruence(std::shared_ptr<const InverseSemigroup> base);

  const InverseSemigroup& base() const { return *base_; }
  const AtomPartition& atoms() const { return atoms_; }

  /// Element indices of C_S(E(S)), ascending.
  std::span<const std::uint32_t> centraliser_indices() const {
    return centraliser_;
  }
  std::vector<PartialPerm> centraliser() const;

  /// a mu b iff a^-1 a = b^-1 b and a b^-1 centralises the idempotents.
  bool contains(const PartialPerm& a, const PartialPerm& b) const;

  /// mu is the identity congruence iff its kernel is exactly E(S).
  bool is_identity_congruence() const;

 private:
  std::shared_ptr<const InverseSemigroup> base_;
  AtomPartition atoms_;
  std::vector<std::uint32_t> centraliser_;
  std::vector<bool> in_centraliser_;  // per element index
};

}  // namespace iscong
