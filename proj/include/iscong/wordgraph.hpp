// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace iscong {

/// A complete deterministic edge-labelled digraph: every (node, letter) has
/// exactly one target.
class WordGraph {
 public:
  WordGraph() = default;
  WordGraph(std::uint32_t node_count, std::uint32_t alphabet_size);

  std::uint32_t node_count() const { return nodes_; }
  std::uint32_t alphabet_size() const { return letters_; }

  std::uint32_t target(std::uint32_t node, std::uint32_t letter) const {
    return targets_[node * letters_ + letter];
  }
  void set_target(std::uint32_t node, std::uint32_t letter, std::uint32_t to);

  /// Iterated target lookup; the empty word returns `start`.
  /// Throws std::out_of_range on a bad node or letter.
  std::uint32_t follow_path(std::uint32_t start,
                            std::span<const std::uint16_t> word) const;

  /// Throws std::logic_error unless every target is set and in range.
  void validate() const;

  /// DOT text with one color index per letter, for eyeballing small graphs.
  std::string to_dot() const;

 private:
  std::uint32_t nodes_ = 0;
  std::uint32_t letters_ = 0;
  std::vector<std::uint32_t> targets_;
};

/// A partition of {0, .., n - 1} held as a union-find forest. Canonical
/// block ids are assigned in order of the least node they contain and are
/// recomputed lazily after merges.
class NodePartition {
 public:
  NodePartition() = default;
  explicit NodePartition(std::uint32_t n);

  /// Build directly from a block id per node (ids need not be canonical).
  static NodePartition from_block_ids(const std::vector<std::uint32_t>& ids);

  std::uint32_t size() const {
    return static_cast<std::uint32_t>(parent_.size());
  }
  std::uint32_t find(std::uint32_t node) const;
  bool same(std::uint32_t a, std::uint32_t b) const {
    return find(a) == find(b);
  }
  /// Returns true when the blocks were distinct.
  bool merge(std::uint32_t a, std::uint32_t b);

  std::uint32_t n_blocks() const;
  std::uint32_t block_of(std::uint32_t node) const;
  /// Blocks in canonical order, each sorted ascending.
  const std::vector<std::vector<std::uint32_t>>& blocks() const;

  /// Every block of this partition lies inside a block of `coarser`.
  bool refines(const NodePartition& coarser) const;

  bool operator==(const NodePartition& other) const;

 private:
  void canonicalize() const;

  mutable std::vector<std::uint32_t> parent_;
  mutable bool dirty_ = true;
  mutable std::vector<std::uint32_t> block_of_;
  mutable std::vector<std::vector<std::uint32_t>> blocks_;
};

/// Strongly connected components (iterative Tarjan).
NodePartition strongly_connected_components(const WordGraph& graph);

/// The graph on the canonical blocks of `partition` induced by `graph`.
/// Throws std::logic_error when the quotient is not deterministic.
WordGraph quotient_graph_of(const WordGraph& graph,
                            const NodePartition& partition);

struct QuotientResult {
  NodePartition partition;
  WordGraph graph;  // nodes are the canonical blocks of `partition`
};

/// The least equivalence containing `seeds` whose quotient graph is
/// deterministic, and that quotient. Merges are driven by a worklist of
/// node pairs in the style of the Hopcroft-Karp equivalence check.
QuotientResult quotient_closure(
    const WordGraph& graph,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> seeds);

}  // namespace iscong
