// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/group.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace iscong {

namespace {

bool is_perm_of_domain(const PartialPerm& g, const PartialPerm& f) {
  return g.degree() == f.degree() && g.domain_one() == f &&
         g.range_one() == f;
}

}  // namespace

GroupHandle::GroupHandle(PartialPerm identity_idempotent)
    : one_(std::move(identity_idempotent)) {
  if (!one_.is_idempotent()) {
    throw std::invalid_argument("group identity must be idempotent");
  }
}

GroupHandle::GroupHandle(PartialPerm identity_idempotent,
                         const std::vector<PartialPerm>& generators)
    : GroupHandle(std::move(identity_idempotent)) {
  for (const PartialPerm& g : generators) {
    if (!is_perm_of_domain(g, one_)) {
      throw std::invalid_argument(
          "generator is not a permutation of the identity's domain");
    }
    if (g != one_ && !contains(g)) {
      add_strong_generator(g);
    }
  }
}

std::uint64_t GroupHandle::size() const {
  std::uint64_t n = 1;
  for (const Level& level : levels_) {
    n *= level.orbit.size();
  }
  return n;
}

bool GroupHandle::contains(const PartialPerm& p) const {
  if (!is_perm_of_domain(p, one_)) {
    return false;
  }
  auto [residue, stop] = sift(p, 0);
  (void)stop;
  return residue == one_;
}

void GroupHandle::add_strong_generator(const PartialPerm& g) {
  gens_.push_back(g);
  verify_from(place_generator(g));
  elements_.clear();
}

std::vector<PartialPerm> GroupHandle::effective_gens(
    std::size_t level_index) const {
  // The generators available at level i are all strong generators fixing
  // the first i base points, i.e. everything stored at levels >= i.
  std::vector<PartialPerm> gens;
  for (std::size_t j = level_index; j < levels_.size(); ++j) {
    gens.insert(gens.end(), levels_[j].gens.begin(), levels_[j].gens.end());
  }
  return gens;
}

void GroupHandle::recompute_orbit(std::size_t level_index) {
  Level& level = levels_[level_index];
  const std::vector<PartialPerm> gens = effective_gens(level_index);
  level.orbit.clear();
  level.transversal.assign(one_.degree(), PartialPerm());
  level.orbit.push_back(level.base);
  level.transversal[level.base] = one_;
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    const std::uint8_t p = level.orbit[i];
    for (const PartialPerm& s : gens) {
      const std::uint8_t q = s.image(p);
      if (level.transversal[q].degree() == 0) {
        level.orbit.push_back(q);
        level.transversal[q] = level.transversal[p] * s;
      }
    }
  }
}

std::size_t GroupHandle::place_generator(const PartialPerm& g) {
  // A strong generator lives at the first level whose base point it moves.
  std::size_t placement = levels_.size();
  for (std::size_t j = 0; j < levels_.size(); ++j) {
    if (g.image(levels_[j].base) != levels_[j].base) {
      placement = j;
      break;
    }
  }
  if (placement == levels_.size()) {
    std::uint8_t base = 0;
    for (std::size_t p = 0; p < one_.degree(); ++p) {
      if (one_.defined(p) && g.image(p) != p) {
        base = static_cast<std::uint8_t>(p);
        break;
      }
    }
    levels_.push_back(Level{base, {}, {}, {}});
  }
  levels_[placement].gens.push_back(g);
  // The generator participates in every level above its placement too.
  for (std::size_t j = placement + 1; j-- > 0;) {
    recompute_orbit(j);
  }
  return placement;
}

void GroupHandle::verify_from(std::size_t deepest_changed) {
  // A level is complete when all of its Schreier generators sift to the
  // identity through the levels below it. Placing a generator refreshes
  // the orbits of every level down to its placement, so the sweep starts
  // at the deepest changed level and climbs to the top, one clean pass per
  // level; any failure places the residue (always deeper) and restarts
  // the sweep from there.
  std::size_t i = deepest_changed;
  while (true) {
    bool complete = true;
    if (i < levels_.size()) {
      const std::vector<PartialPerm> gens = effective_gens(i);
      for (std::size_t oi = 0;
           complete && oi < levels_[i].orbit.size(); ++oi) {
        for (std::size_t k = 0; complete && k < gens.size(); ++k) {
          const Level& level = levels_[i];
          const std::uint8_t p = level.orbit[oi];
          const PartialPerm& s = gens[k];
          const PartialPerm schreier_gen =
              level.transversal[p] * s *
              level.transversal[s.image(p)].inverse();
          if (schreier_gen == one_) {
            continue;
          }
          auto [residue, stop] = sift(schreier_gen, i + 1);
          (void)stop;
          if (residue != one_) {
            i = std::max(i + 1, place_generator(residue));
            complete = false;
          }
        }
      }
    }
    if (complete) {
      if (i == 0) {
        return;
      }
      --i;
    }
  }
}

std::pair<PartialPerm, std::size_t> GroupHandle::sift(PartialPerm g,
                                                      std::size_t from) const {
  for (std::size_t j = from; j < levels_.size(); ++j) {
    if (g == one_) {
      return {g, j};
    }
    const std::uint8_t p = g.image(levels_[j].base);
    const PartialPerm& u = levels_[j].transversal[p];
    if (u.degree() == 0) {
      return {g, j};
    }
    g = g * u.inverse();
  }
  return {g, levels_.size()};
}

const std::vector<PartialPerm>& GroupHandle::elements() const {
  if (!elements_.empty()) {
    return elements_;
  }
  std::vector<PartialPerm> found{one_};
  std::unordered_set<PartialPerm> seen{one_};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (const PartialPerm& g : gens_) {
      PartialPerm next = found[i] * g;
      if (seen.insert(next).second) {
        found.push_back(std::move(next));
      }
    }
  }
  std::sort(found.begin(), found.end());
  elements_ = std::move(found);
  return elements_;
}

GroupHandle GroupHandle::normal_closure(
    std::span<const PartialPerm> seeds) const {
  GroupHandle closure(one_);
  std::deque<PartialPerm> work;
  for (const PartialPerm& seed : seeds) {
    if (!contains(seed)) {
      throw std::invalid_argument("normal closure seed outside the group");
    }
    work.push_back(seed);
  }
  while (!work.empty()) {
    PartialPerm w = std::move(work.front());
    work.pop_front();
    if (w == one_ || closure.contains(w)) {
      continue;
    }
    closure.add_strong_generator(w);
    for (const PartialPerm& g : gens_) {
      work.push_back(g.inverse() * w * g);
    }
  }
  return closure;
}

std::vector<PartialPerm> GroupHandle::coset_transversal(
    const GroupHandle& sub) const {
  if (sub.one() != one_) {
    throw std::invalid_argument("coset_transversal: base idempotent mismatch");
  }
  for (const PartialPerm& g : sub.generators()) {
    if (!contains(g)) {
      throw std::invalid_argument("coset_transversal: not a subgroup");
    }
  }
  const std::vector<PartialPerm>& all = elements();
  const std::vector<PartialPerm>& sub_elements = sub.elements();
  std::vector<PartialPerm> reps;
  std::unordered_set<PartialPerm> seen;
  for (const PartialPerm& g : all) {
    if (seen.contains(g)) {
      continue;
    }
    reps.push_back(g);
    for (const PartialPerm& n : sub_elements) {
      seen.insert(n * g);
    }
  }
  if (reps.size() * sub_elements.size() != all.size()) {
    throw std::logic_error("coset_transversal: cosets do not tile the group");
  }
  return reps;
}

GroupHandle GroupHandle::intersect(const GroupHandle& other) const {
  if (other.one() != one_) {
    throw std::invalid_argument("intersect: base idempotent mismatch");
  }
  GroupHandle result(one_);
  for (const PartialPerm& g : elements()) {
    if (g != one_ && other.contains(g) && !result.contains(g)) {
      result.add_strong_generator(g);
    }
  }
  return result;
}

}  // namespace iscong
