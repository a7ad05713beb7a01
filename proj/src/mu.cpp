// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/mu.hpp"

#include <algorithm>
#include <map>

namespace iscong {

std::vector<std::vector<std::uint32_t>> AtomPartition::atoms() const {
  std::vector<std::vector<std::uint32_t>> out(n_atoms);
  for (std::uint32_t p = 0; p < atom_of.size(); ++p) {
    out[atom_of[p]].push_back(p);
  }
  return out;
}

AtomPartition boolean_atoms(const InverseSemigroup& s) {
  // Pattern refinement: per point, the bitset of idempotent domains it
  // belongs to. Every element domain is dom(t t^-1), so the idempotent
  // domains generate the same algebra as all domains.
  const std::size_t degree = s.degree();
  const std::size_t n_idem = s.n_idempotents();
  const std::size_t words = (n_idem + 63) / 64;
  std::vector<std::uint64_t> patterns(degree * words, 0);
  for (std::uint32_t node = 0; node < n_idem; ++node) {
    const PartialPerm& e = s.node_idempotent(node);
    for (std::size_t p = 0; p < degree; ++p) {
      if (e.defined(p)) {
        patterns[p * words + node / 64] |= std::uint64_t{1} << (node % 64);
      }
    }
  }
  AtomPartition result;
  result.atom_of.assign(degree, 0);
  std::map<std::vector<std::uint64_t>, std::uint32_t> ids;
  for (std::size_t p = 0; p < degree; ++p) {
    std::vector<std::uint64_t> key(patterns.begin() + p * words,
                                   patterns.begin() + (p + 1) * words);
    result.atom_of[p] =
        ids.try_emplace(std::move(key), ids.size()).first->second;
  }
  result.n_atoms = static_cast<std::uint32_t>(ids.size());
  return result;
}

MuCongruence::MuCongruence(std::shared_ptr<const InverseSemigroup> base)
    : base_(std::move(base)), atoms_(boolean_atoms(*base_)) {
  const std::vector<std::vector<std::uint32_t>> atom_points = atoms_.atoms();
  in_centraliser_.assign(base_->size(), false);
  for (std::uint32_t index = 0; index < base_->size(); ++index) {
    const PartialPerm& s = base_->element(index);
    bool fixes_atoms = true;
    for (const std::vector<std::uint32_t>& atom : atom_points) {
      std::size_t defined = 0;
      for (std::uint32_t p : atom) {
        defined += s.defined(p);
      }
      if (defined != atom.size()) {
        continue;  // atom not inside dom(s), unconstrained
      }
      for (std::uint32_t p : atom) {
        if (atoms_.atom_of[s.image(p)] != atoms_.atom_of[p]) {
          fixes_atoms = false;
          break;
        }
      }
      if (!fixes_atoms) {
        break;
      }
    }
    if (fixes_atoms) {
      in_centraliser_[index] = true;
      centraliser_.push_back(index);
    }
  }
}

std::vector<PartialPerm> MuCongruence::centraliser() const {
  std::vector<PartialPerm> out;
  out.reserve(centraliser_.size());
  for (std::uint32_t index : centraliser_) {
    out.push_back(base_->element(index));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool MuCongruence::contains(const PartialPerm& a, const PartialPerm& b) const {
  base_->require_index(a);
  base_->require_index(b);
  if (a.range_one() != b.range_one()) {
    return false;
  }
  return in_centraliser_[base_->require_index(a * b.inverse())];
}

bool MuCongruence::is_identity_congruence() const {
  return centraliser_.size() == base_->n_idempotents();
}

}  // namespace iscong
