// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/lattice.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>

namespace iscong {

namespace {

void check_same_base(const Congruence& c1, const Congruence& c2) {
  if (c1.base_ptr() != c2.base_ptr()) {
    throw std::invalid_argument("congruences live on different semigroups");
  }
}

void append_partition_pairs(
    const NodePartition& partition,
    std::vector<std::pair<std::uint32_t, std::uint32_t>>& seeds) {
  for (const std::vector<std::uint32_t>& block : partition.blocks()) {
    for (std::size_t i = 1; i < block.size(); ++i) {
      seeds.emplace_back(block.front(), block[i]);
    }
  }
}

}  // namespace

Congruence join(const Congruence& c1, const Congruence& c2) {
  check_same_base(c1, c2);
  if (!c1.has_pairs() || !c2.has_pairs()) {
    throw std::invalid_argument(
        "join is unsupported for congruences without generating pairs");
  }
  Congruence c;
  c.base_ = c1.base_;
  c.kind_ = Congruence::Kind::pairs;
  c.pairs_ = c1.pairs_;
  c.pairs_.insert(c.pairs_.end(), c2.pairs_.begin(), c2.pairs_.end());
  for (const auto& source : {c1.pairs_sym_, c2.pairs_sym_}) {
    for (const auto& pair : source) {
      if (std::find(c.pairs_sym_.begin(), c.pairs_sym_.end(), pair) ==
          c.pairs_sym_.end()) {
        c.pairs_sym_.push_back(pair);
      }
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
  append_partition_pairs(c1.trace(), seeds);
  append_partition_pairs(c2.trace(), seeds);
  c.finish(std::move(seeds));
  return c;
}

Congruence meet(const Congruence& c1, const Congruence& c2) {
  check_same_base(c1, c2);
  Congruence c;
  c.base_ = c1.base_;
  c.kind_ = Congruence::Kind::meet;
  c.meet_left_ = std::make_shared<const Congruence>(c1);
  c.meet_right_ = std::make_shared<const Congruence>(c2);

  // Blockwise intersection of the traces; the intersection of normal
  // congruences is again normal, so the quotient stays deterministic.
  const std::uint32_t n = c.base_->gamma().node_count();
  std::vector<std::uint32_t> ids(n);
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> pair_ids;
  for (std::uint32_t node = 0; node < n; ++node) {
    const auto key = std::make_pair(c1.trace().block_of(node),
                                    c2.trace().block_of(node));
    ids[node] = pair_ids.try_emplace(key, pair_ids.size()).first->second;
  }
  c.trace_ = NodePartition::from_block_ids(ids);
  c.finish_with_trace();
  return c;
}

}  // namespace iscong
