// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "iscong/pperm.hpp"

namespace iscong {

/// A finite permutation group on the domain of an idempotent partial
/// permutation f: every element g satisfies g g^-1 = g^-1 g = f. Membership
/// and order are answered from a stabilizer chain built at construction;
/// the element list is enumerated on first use and cached.
///
/// Handles are internally memoizing: mutation is confined to construction
/// and the first resolution of a query, after which they are read-only.
class GroupHandle {
 public:
  GroupHandle() = default;

  /// The trivial group {f}.
  explicit GroupHandle(PartialPerm identity_idempotent);

  /// Throws std::invalid_argument unless `identity_idempotent` is idempotent
  /// and every generator is a permutation of its domain.
  GroupHandle(PartialPerm identity_idempotent,
              const std::vector<PartialPerm>& generators);

  const PartialPerm& one() const { return one_; }
  const std::vector<PartialPerm>& generators() const { return gens_; }

  std::uint64_t size() const;

  /// True iff p lies in the group; anything that is not a permutation of
  /// the domain of one() simply returns false.
  bool contains(const PartialPerm& p) const;

  /// Least normal subgroup of this group containing the seeds.
  /// Throws std::invalid_argument if a seed lies outside the group.
  GroupHandle normal_closure(std::span<const PartialPerm> seeds) const;

  /// One representative per right coset of `sub`, canonically least in its
  /// coset, sorted ascending (so one() comes first).
  /// Throws std::invalid_argument unless `sub` is a subgroup.
  std::vector<PartialPerm> coset_transversal(const GroupHandle& sub) const;

  /// The group of elements common to both handles.
  /// Throws std::invalid_argument on a base idempotent mismatch.
  GroupHandle intersect(const GroupHandle& other) const;

  /// All elements, sorted ascending; enumerated once then cached.
  const std::vector<PartialPerm>& elements() const;

 private:
  struct Level {
    std::uint8_t base = 0;
    std::vector<PartialPerm> gens;
    std::vector<std::uint8_t> orbit;  // discovery order, starts with base
    // Indexed by point; u with (base)u = point, degree 0 when absent.
    std::vector<PartialPerm> transversal;
  };

  void add_strong_generator(const PartialPerm& g);
  // Strong generators fixing the first `level` base points.
  std::vector<PartialPerm> effective_gens(std::size_t level) const;
  // Store g at the first level whose base it moves (appending a level when
  // it fixes every base) and refresh the orbits it participates in.
  std::size_t place_generator(const PartialPerm& g);
  // Re-establish completeness after orbit changes down to the given level.
  void verify_from(std::size_t deepest_changed);
  void recompute_orbit(std::size_t level);
  // Reduce g through levels [from, end); returns the residue and the level
  // at which sifting stopped.
  std::pair<PartialPerm, std::size_t> sift(PartialPerm g,
                                           std::size_t from) const;

  PartialPerm one_;
  std::vector<PartialPerm> gens_;
  std::vector<Level> levels_;
  mutable std::vector<PartialPerm> elements_;
};

}  // namespace iscong
