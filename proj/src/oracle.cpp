// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/oracle.hpp"

#include <deque>

#include "iscong/kernels.hpp"

namespace iscong {

ElementPartition pair_closure(
    const InverseSemigroup& s,
    std::span<const std::pair<PartialPerm, PartialPerm>> pairs) {
  const auto n = static_cast<std::uint32_t>(s.size());
  ElementPartition classes(n);

  std::deque<std::pair<std::uint32_t, std::uint32_t>> work;
  for (const auto& [a, b] : pairs) {
    work.emplace_back(s.require_index(a), s.require_index(b));
  }

  const std::span<const PartialPerm> letters = s.alphabet();
  const auto n_letters = letters.size();
  const bool use_batch = s.degree() <= kernels::row_bytes;

  // Letter rows packed once so one batch kernel call computes all the
  // left translates x * rep of a merged representative.
  std::vector<std::uint8_t> letter_rows(n_letters * kernels::row_bytes);
  std::vector<std::uint8_t> scratch(letter_rows.size());
  if (use_batch) {
    for (std::size_t i = 0; i < n_letters; ++i) {
      std::copy_n(letters[i].data(), kernels::row_bytes,
                  letter_rows.data() + i * kernels::row_bytes);
    }
  }

  auto push_translates = [&](std::uint32_t rep_a, std::uint32_t rep_b) {
    const PartialPerm& a = s.element(rep_a);
    const PartialPerm& b = s.element(rep_b);
    std::vector<std::uint32_t> left_a(n_letters);
    std::vector<std::uint32_t> left_b(n_letters);
    if (use_batch) {
      for (const auto* rep : {&a, &b}) {
        auto& out = (rep == &a) ? left_a : left_b;
        kernels::active().compose_batch(scratch.data(), letter_rows.data(),
                                        n_letters, rep->data());
        for (std::size_t i = 0; i < n_letters; ++i) {
          out[i] = s.require_index(PartialPerm::from_row(
              s.degree(), scratch.data() + i * kernels::row_bytes));
        }
      }
    } else {
      for (std::size_t i = 0; i < n_letters; ++i) {
        left_a[i] = s.require_index(letters[i] * a);
        left_b[i] = s.require_index(letters[i] * b);
      }
    }
    for (std::size_t i = 0; i < n_letters; ++i) {
      work.emplace_back(left_a[i], left_b[i]);
      work.emplace_back(s.require_index(a * letters[i]),
                        s.require_index(b * letters[i]));
    }
  };

  while (!work.empty()) {
    const auto [x, y] = work.front();
    work.pop_front();
    const std::uint32_t rx = classes.as_partition().find(x);
    const std::uint32_t ry = classes.as_partition().find(y);
    if (rx == ry) {
      continue;
    }
    classes.merge(rx, ry);
    push_translates(rx, ry);
  }
  return classes;
}

NodePartition trace_of_closure(const InverseSemigroup& s,
                               const ElementPartition& classes) {
  NodePartition trace(s.gamma().node_count());
  std::vector<std::uint32_t> first_node_of_block(classes.blocks().size(),
                                                 InverseSemigroup::npos);
  for (std::uint32_t node = 0; node < s.n_idempotents(); ++node) {
    const std::uint32_t index = s.require_index(s.node_idempotent(node));
    const std::uint32_t block = classes.block_of(index);
    if (first_node_of_block[block] == InverseSemigroup::npos) {
      first_node_of_block[block] = node;
    } else {
      trace.merge(first_node_of_block[block], node);
    }
  }
  return trace;
}

std::vector<std::uint32_t> kernel_of_closure(const InverseSemigroup& s,
                                             const ElementPartition& classes) {
  std::vector<bool> block_has_idempotent(classes.blocks().size(), false);
  for (std::uint32_t node = 0; node < s.n_idempotents(); ++node) {
    block_has_idempotent[classes.block_of(
        s.require_index(s.node_idempotent(node)))] = true;
  }
  std::vector<std::uint32_t> kernel;
  for (std::uint32_t index = 0; index < s.size(); ++index) {
    if (block_has_idempotent[classes.block_of(index)]) {
      kernel.push_back(index);
    }
  }
  return kernel;
}

}  // namespace iscong
