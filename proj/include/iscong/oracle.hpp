// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "iscong/pperm.hpp"
#include "iscong/semigroup.hpp"
#include "iscong/wordgraph.hpp"

namespace iscong {

/// Ground truth by brute force: the least congruence containing the pairs,
/// as a partition of the element indices, computed by a worklist of merges
/// closed under left and right multiplication by the alphabet. This stays
/// deliberately independent from the trace/normal-subgroup machinery it is
/// used to check.
class ElementPartition {
 public:
  ElementPartition() = default;
  explicit ElementPartition(std::uint32_t n) : partition_(n) {}

  std::uint32_t n_blocks() const { return partition_.n_blocks(); }
  bool same(std::uint32_t a, std::uint32_t b) const {
    return partition_.same(a, b);
  }
  bool merge(std::uint32_t a, std::uint32_t b) {
    return partition_.merge(a, b);
  }
  std::uint32_t block_of(std::uint32_t index) const {
    return partition_.block_of(index);
  }
  const std::vector<std::vector<std::uint32_t>>& blocks() const {
    return partition_.blocks();
  }
  const NodePartition& as_partition() const { return partition_; }

 private:
  NodePartition partition_;
};

/// Least congruence on S containing the pairs. Throws NotInSemigroupError
/// when a pair member is not an element.
ElementPartition pair_closure(
    const InverseSemigroup& s,
    std::span<const std::pair<PartialPerm, PartialPerm>> pairs);

/// The oracle's view of the trace: the partition of the conjugation graph
/// nodes induced by restricting `classes` to the idempotents (an adjoined
/// identity node stays a singleton).
NodePartition trace_of_closure(const InverseSemigroup& s,
                               const ElementPartition& classes);

/// Element indices related to some idempotent, ascending.
std::vector<std::uint32_t> kernel_of_closure(const InverseSemigroup& s,
                                             const ElementPartition& classes);

}  // namespace iscong
