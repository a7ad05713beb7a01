// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/wordgraph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace iscong {

namespace {
constexpr std::uint32_t unset = std::numeric_limits<std::uint32_t>::max();
}

WordGraph::WordGraph(std::uint32_t node_count, std::uint32_t alphabet_size)
    : nodes_(node_count),
      letters_(alphabet_size),
      targets_(static_cast<std::size_t>(node_count) * alphabet_size, unset) {}

void WordGraph::set_target(std::uint32_t node, std::uint32_t letter,
                           std::uint32_t to) {
  if (node >= nodes_ || letter >= letters_ || to >= nodes_) {
    throw std::out_of_range("set_target out of range");
  }
  targets_[node * letters_ + letter] = to;
}

std::uint32_t WordGraph::follow_path(
    std::uint32_t start, std::span<const std::uint16_t> word) const {
  if (start >= nodes_) {
    throw std::out_of_range("follow_path: bad start node");
  }
  std::uint32_t node = start;
  for (std::uint16_t letter : word) {
    if (letter >= letters_) {
      throw std::out_of_range("follow_path: bad letter");
    }
    node = target(node, letter);
  }
  return node;
}

void WordGraph::validate() const {
  for (std::uint32_t t : targets_) {
    if (t >= nodes_) {
      throw std::logic_error("word graph is not complete");
    }
  }
}

std::string WordGraph::to_dot() const {
  static const char* palette[] = {"magenta", "blue",  "orange", "green",
                                  "red",     "brown", "cyan",   "black"};
  std::string out = "digraph WordGraph {\n";
  for (std::uint32_t v = 0; v < nodes_; ++v) {
    for (std::uint32_t a = 0; a < letters_; ++a) {
      out += "  " + std::to_string(v) + " -> " + std::to_string(target(v, a)) +
             " [color=" + palette[a % 8] + ", label=" + std::to_string(a) +
             "];\n";
    }
  }
  out += "}\n";
  return out;
}

NodePartition::NodePartition(std::uint32_t n) : parent_(n) {
  std::iota(parent_.begin(), parent_.end(), 0U);
}

NodePartition NodePartition::from_block_ids(
    const std::vector<std::uint32_t>& ids) {
  NodePartition p(static_cast<std::uint32_t>(ids.size()));
  std::vector<std::uint32_t> first_seen(ids.size(), unset);
  for (std::uint32_t node = 0; node < ids.size(); ++node) {
    const std::uint32_t id = ids[node];
    if (id >= ids.size()) {
      throw std::out_of_range("block id out of range");
    }
    if (first_seen[id] == unset) {
      first_seen[id] = node;
    } else {
      p.merge(first_seen[id], node);
    }
  }
  return p;
}

std::uint32_t NodePartition::find(std::uint32_t node) const {
  std::uint32_t root = node;
  while (parent_[root] != root) {
    root = parent_[root];
  }
  while (parent_[node] != root) {
    node = std::exchange(parent_[node], root);
  }
  return root;
}

bool NodePartition::merge(std::uint32_t a, std::uint32_t b) {
  const std::uint32_t ra = find(a);
  const std::uint32_t rb = find(b);
  if (ra == rb) {
    return false;
  }
  // Keep the smaller root so that roots stay canonical representatives.
  parent_[std::max(ra, rb)] = std::min(ra, rb);
  dirty_ = true;
  return true;
}

void NodePartition::canonicalize() const {
  if (!dirty_) {
    return;
  }
  block_of_.assign(parent_.size(), unset);
  blocks_.clear();
  for (std::uint32_t node = 0; node < parent_.size(); ++node) {
    const std::uint32_t root = find(node);
    if (block_of_[root] == unset) {
      block_of_[root] = static_cast<std::uint32_t>(blocks_.size());
      blocks_.emplace_back();
    }
    block_of_[node] = block_of_[root];
    blocks_[block_of_[node]].push_back(node);
  }
  dirty_ = false;
}

std::uint32_t NodePartition::n_blocks() const {
  canonicalize();
  return static_cast<std::uint32_t>(blocks_.size());
}

std::uint32_t NodePartition::block_of(std::uint32_t node) const {
  canonicalize();
  return block_of_[node];
}

const std::vector<std::vector<std::uint32_t>>& NodePartition::blocks() const {
  canonicalize();
  return blocks_;
}

bool NodePartition::refines(const NodePartition& coarser) const {
  if (size() != coarser.size()) {
    return false;
  }
  for (std::uint32_t node = 0; node < size(); ++node) {
    if (!coarser.same(node, find(node))) {
      return false;
    }
  }
  return true;
}

bool NodePartition::operator==(const NodePartition& other) const {
  if (size() != other.size()) {
    return false;
  }
  canonicalize();
  other.canonicalize();
  return block_of_ == other.block_of_;
}

NodePartition strongly_connected_components(const WordGraph& graph) {
  graph.validate();
  const std::uint32_t n = graph.node_count();
  const std::uint32_t a = graph.alphabet_size();
  NodePartition partition(n);

  std::vector<std::uint32_t> index(n, unset);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t node;
    std::uint32_t letter;  // next letter to explore
  };
  std::vector<Frame> call_stack;

  for (std::uint32_t start = 0; start < n; ++start) {
    if (index[start] != unset) {
      continue;
    }
    call_stack.push_back({start, 0});
    index[start] = low[start] = next_index++;
    stack.push_back(start);
    on_stack[start] = true;

    while (!call_stack.empty()) {
      Frame& frame = call_stack.back();
      if (frame.letter < a) {
        const std::uint32_t next = graph.target(frame.node, frame.letter);
        ++frame.letter;
        if (index[next] == unset) {
          index[next] = low[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          call_stack.push_back({next, 0});
        } else if (on_stack[next]) {
          low[frame.node] = std::min(low[frame.node], index[next]);
        }
      } else {
        const std::uint32_t node = frame.node;
        call_stack.pop_back();
        if (!call_stack.empty()) {
          low[call_stack.back().node] =
              std::min(low[call_stack.back().node], low[node]);
        }
        if (low[node] == index[node]) {
          std::uint32_t member;
          do {
            member = stack.back();
            stack.pop_back();
            on_stack[member] = false;
            partition.merge(node, member);
          } while (member != node);
        }
      }
    }
  }
  return partition;
}

QuotientResult quotient_closure(
    const WordGraph& graph,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> seeds) {
  graph.validate();
  const std::uint32_t n = graph.node_count();
  const std::uint32_t a = graph.alphabet_size();

  NodePartition partition(n);
  std::deque<std::pair<std::uint32_t, std::uint32_t>> work(seeds.begin(),
                                                           seeds.end());
  for (const auto& [x, y] : work) {
    if (x >= n || y >= n) {
      throw std::out_of_range("quotient_closure: seed node out of range");
    }
  }
  while (!work.empty()) {
    const auto [x, y] = work.front();
    work.pop_front();
    const std::uint32_t rx = partition.find(x);
    const std::uint32_t ry = partition.find(y);
    if (rx == ry) {
      continue;
    }
    partition.merge(rx, ry);
    for (std::uint32_t letter = 0; letter < a; ++letter) {
      work.emplace_back(graph.target(rx, letter), graph.target(ry, letter));
    }
  }

  WordGraph quotient = quotient_graph_of(graph, partition);
  return {std::move(partition), std::move(quotient)};
}

WordGraph quotient_graph_of(const WordGraph& graph,
                            const NodePartition& partition) {
  const std::uint32_t a = graph.alphabet_size();
  WordGraph quotient(partition.n_blocks(), a);
  for (std::uint32_t node = 0; node < graph.node_count(); ++node) {
    for (std::uint32_t letter = 0; letter < a; ++letter) {
      const std::uint32_t from = partition.block_of(node);
      const std::uint32_t to = partition.block_of(graph.target(node, letter));
      const std::uint32_t existing = quotient.target(from, letter);
      if (existing == unset) {
        quotient.set_target(from, letter, to);
      } else if (existing != to) {
        throw std::logic_error("quotient graph is not deterministic");
      }
    }
  }
  quotient.validate();
  return quotient;
}

}  // namespace iscong
