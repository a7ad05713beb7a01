// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "iscong/io.hpp"
#include "iscong/pperm.hpp"
#include "iscong/random.hpp"
#include "iscong/semigroup.hpp"
#include "iscong/wordgraph.hpp"

namespace iscong::testing {

inline PartialPerm pp(std::string_view text, std::size_t degree) {
  return parse_pperm(text, degree);
}

/// The generators of the running symmetric inverse monoid example.
inline std::vector<PartialPerm> i4_generators() {
  return {pp("(1 2 3 4)", 4), pp("(1 2)(3)(4)", 4), pp("[4 3 2 1]", 4)};
}

/// D-classes by brute force: the join of Green's R (equal s s^-1) and L
/// (equal s^-1 s), independent of the conjugation graph machinery.
inline NodePartition brute_d_classes(const InverseSemigroup& s) {
  NodePartition d(static_cast<std::uint32_t>(s.size()));
  std::unordered_map<PartialPerm, std::uint32_t> first_r;
  std::unordered_map<PartialPerm, std::uint32_t> first_l;
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    const auto [r_it, r_new] = first_r.try_emplace(s.element(i).domain_one(), i);
    if (!r_new) {
      d.merge(r_it->second, i);
    }
    const auto [l_it, l_new] = first_l.try_emplace(s.element(i).range_one(), i);
    if (!l_new) {
      d.merge(l_it->second, i);
    }
  }
  return d;
}

/// Merge-until-deterministic fixpoint, the oracle for quotient_closure.
inline NodePartition naive_quotient_partition(
    const WordGraph& graph,
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds) {
  NodePartition p(graph.node_count());
  for (const auto& [a, b] : seeds) {
    p.merge(a, b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t a = 0; a < graph.node_count(); ++a) {
      for (std::uint32_t b = 0; b < a; ++b) {
        if (!p.same(a, b)) {
          continue;
        }
        for (std::uint32_t letter = 0; letter < graph.alphabet_size();
             ++letter) {
          if (p.merge(graph.target(a, letter), graph.target(b, letter))) {
            changed = true;
          }
        }
      }
    }
  }
  return p;
}

inline WordGraph random_word_graph(std::uint32_t nodes, std::uint32_t letters,
                                   Rng& rng) {
  WordGraph g(nodes, letters);
  std::uniform_int_distribution<std::uint32_t> node_dist(0, nodes - 1);
  for (std::uint32_t v = 0; v < nodes; ++v) {
    for (std::uint32_t a = 0; a < letters; ++a) {
      g.set_target(v, a, node_dist(rng));
    }
  }
  return g;
}

}  // namespace iscong::testing
