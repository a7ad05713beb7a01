// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "iscong/group.hpp"
#include "iscong/pperm.hpp"
#include "iscong/wordgraph.hpp"

namespace iscong {

struct NotInSemigroupError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An inverse semigroup of partial permutations, fully enumerated from its
/// generators, together with the structure everything else is built on:
///
///  - the elements of S = <X u X^-1> in a fixed order (breadth first by
///    word length, then the canonical element order), one factorization
///    per element over the alphabet X' = X u X^-1;
///  - the conjugation graph on E(S), with nodes the idempotents (plus an
///    adjoined identity node when 1 is not an element) and an edge
///    (e, x, x^-1 e x) per letter;
///  - its strongly connected components, which match the D-classes of S;
///  - per component: a connecting element per node and the group H-class
///    of the least idempotent, generated Schreier-style from the edges.
///
/// Instances are immutable after construction and safe to share.
class InverseSemigroup {
 public:
  static constexpr std::uint32_t npos =
      std::numeric_limits<std::uint32_t>::max();

  struct SccInfo {
    std::uint32_t rep_node = 0;        // least node, i.e. least idempotent
    std::vector<std::uint32_t> nodes;  // ascending
    GroupHandle group;                 // H-class of the rep idempotent
    bool is_adjoined_identity = false;
  };

  /// Enumerates everything eagerly. Throws std::invalid_argument on an
  /// empty generating set or mismatched degrees.
  InverseSemigroup(std::size_t degree,
                   const std::vector<PartialPerm>& generators);

  /// As the constructor, but gives up and returns nullopt as soon as more
  /// than `max_size` elements have been found.
  static std::optional<InverseSemigroup> try_enumerate(
      std::size_t degree, const std::vector<PartialPerm>& generators,
      std::size_t max_size);

  std::size_t degree() const { return degree_; }
  std::size_t size() const { return elements_.size(); }
  std::span<const PartialPerm> elements() const { return elements_; }
  std::span<const PartialPerm> generators() const { return gens_; }
  std::span<const PartialPerm> alphabet() const { return alphabet_; }

  std::optional<std::uint32_t> index_of(const PartialPerm& p) const;
  /// Throws NotInSemigroupError.
  std::uint32_t require_index(const PartialPerm& p) const;
  bool contains_element(const PartialPerm& p) const {
    return index_of(p).has_value();
  }
  const PartialPerm& element(std::uint32_t index) const {
    return elements_[index];
  }

  /// A word over the alphabet that multiplies out (left to right) to the
  /// element; the word found first during enumeration.
  std::vector<std::uint16_t> factorize_index(std::uint32_t index) const;
  std::vector<std::uint16_t> factorize(const PartialPerm& p) const;
  /// Throws std::invalid_argument on the empty word.
  PartialPerm evaluate_word(std::span<const std::uint16_t> word) const;

  // Conjugation graph on E(S).
  std::size_t n_idempotents() const { return idem_nodes_.size(); }
  std::uint32_t gamma_node_count() const { return gamma_.node_count(); }
  /// Node of an idempotent element index, npos for non-idempotents.
  std::uint32_t node_of_element_index(std::uint32_t index) const {
    return node_of_elem_[index];
  }
  /// Node of an idempotent of S. Throws NotInSemigroupError or
  /// std::invalid_argument (non-idempotent).
  std::uint32_t node_of(const PartialPerm& idempotent) const;
  const PartialPerm& node_idempotent(std::uint32_t node) const;
  bool identity_adjoined() const { return identity_adjoined_; }
  /// The node of 1_S (an ordinary node when the identity is an element).
  std::uint32_t identity_node() const { return identity_node_; }

  const WordGraph& gamma() const { return gamma_; }
  const NodePartition& gamma_sccs() const { return gamma_sccs_; }
  std::uint32_t scc_count() const {
    return static_cast<std::uint32_t>(sccs_.size());
  }
  std::uint32_t scc_of_node(std::uint32_t node) const {
    return gamma_sccs_.block_of(node);
  }
  const SccInfo& scc(std::uint32_t scc_id) const { return sccs_[scc_id]; }
  /// Number of D-classes of S (components of real idempotent nodes).
  std::uint32_t d_class_count() const { return d_class_count_; }

  /// u with u u^-1 = rep and u^-1 rep u = e, where rep is the idempotent of
  /// the representative node of e's component.
  const PartialPerm& connector(std::uint32_t node) const {
    return connector_[node];
  }

 private:
  InverseSemigroup() = default;

  void init(std::size_t degree, const std::vector<PartialPerm>& generators);
  bool enumerate(std::size_t max_size);
  void build_gamma();
  void build_sccs();

  std::size_t degree_ = 0;
  std::vector<PartialPerm> gens_;
  std::vector<PartialPerm> alphabet_;
  std::vector<PartialPerm> elements_;
  std::unordered_map<PartialPerm, std::uint32_t> index_;
  // (parent element, letter) per element; parent npos on first-level words.
  std::vector<std::pair<std::uint32_t, std::uint16_t>> parent_;

  std::vector<std::uint32_t> idem_nodes_;     // node -> element index
  std::vector<std::uint32_t> node_of_elem_;   // element index -> node | npos
  bool identity_adjoined_ = false;
  std::uint32_t identity_node_ = 0;
  PartialPerm identity_pperm_;

  WordGraph gamma_;
  NodePartition gamma_sccs_;
  std::vector<SccInfo> sccs_;
  std::vector<PartialPerm> connector_;
  std::uint32_t d_class_count_ = 0;
};

}  // namespace iscong
