// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/semigroup.hpp"

#include <algorithm>
#include <unordered_set>

#include "iscong/io.hpp"
#include "iscong/kernels.hpp"

namespace iscong {

InverseSemigroup::InverseSemigroup(
    std::size_t degree, const std::vector<PartialPerm>& generators) {
  init(degree, generators);
  enumerate(std::numeric_limits<std::size_t>::max());
  build_gamma();
  build_sccs();
}

std::optional<InverseSemigroup> InverseSemigroup::try_enumerate(
    std::size_t degree, const std::vector<PartialPerm>& generators,
    std::size_t max_size) {
  InverseSemigroup s;
  s.init(degree, generators);
  if (!s.enumerate(max_size)) {
    return std::nullopt;
  }
  s.build_gamma();
  s.build_sccs();
  return s;
}

void InverseSemigroup::init(std::size_t degree,
                            const std::vector<PartialPerm>& generators) {
  if (generators.empty()) {
    throw std::invalid_argument("generating set is empty");
  }
  degree_ = degree;
  for (const PartialPerm& g : generators) {
    if (g.degree() != degree) {
      throw std::invalid_argument("generator degree mismatch");
    }
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end()) {
      gens_.push_back(g);
    }
  }
  alphabet_ = gens_;
  for (const PartialPerm& g : gens_) {
    PartialPerm inv = g.inverse();
    if (std::find(alphabet_.begin(), alphabet_.end(), inv) ==
        alphabet_.end()) {
      alphabet_.push_back(std::move(inv));
    }
  }
}

bool InverseSemigroup::enumerate(std::size_t max_size) {
  struct Candidate {
    PartialPerm element;
    std::uint32_t parent;
    std::uint16_t letter;
  };

  const auto use_batch_kernel = degree_ <= kernels::row_bytes;
  const std::size_t n_letters = alphabet_.size();

  std::vector<Candidate> batch;
  std::vector<std::uint32_t> frontier;

  auto absorb_batch = [&]() {
    // First occurrence wins, then new elements are ordered canonically.
    std::vector<std::uint32_t> novel;
    std::unordered_set<PartialPerm> in_batch;
    for (std::uint32_t i = 0; i < batch.size(); ++i) {
      if (!index_.contains(batch[i].element) &&
          in_batch.insert(batch[i].element).second) {
        novel.push_back(i);
      }
    }
    std::sort(novel.begin(), novel.end(),
              [&](std::uint32_t a, std::uint32_t b) {
                return batch[a].element < batch[b].element;
              });
    frontier.clear();
    for (std::uint32_t i : novel) {
      const auto index = static_cast<std::uint32_t>(elements_.size());
      index_.emplace(batch[i].element, index);
      elements_.push_back(batch[i].element);
      parent_.emplace_back(batch[i].parent, batch[i].letter);
      frontier.push_back(index);
    }
    batch.clear();
  };

  for (std::uint16_t letter = 0; letter < n_letters; ++letter) {
    batch.push_back({alphabet_[letter], npos, letter});
  }
  absorb_batch();

  std::vector<std::uint8_t> rows;
  std::vector<std::uint8_t> scratch;
  while (!frontier.empty()) {
    if (elements_.size() > max_size) {
      return false;
    }
    if (use_batch_kernel) {
      rows.resize(frontier.size() * kernels::row_bytes);
      scratch.resize(rows.size());
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::copy_n(elements_[frontier[i]].data(), kernels::row_bytes,
                    rows.data() + i * kernels::row_bytes);
      }
      for (std::uint16_t letter = 0; letter < n_letters; ++letter) {
        kernels::active().compose_batch(scratch.data(), rows.data(),
                                        frontier.size(),
                                        alphabet_[letter].data());
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          batch.push_back(
              {PartialPerm::from_row(degree_,
                                     scratch.data() + i * kernels::row_bytes),
               frontier[i], letter});
        }
      }
    } else {
      for (std::uint16_t letter = 0; letter < n_letters; ++letter) {
        for (std::uint32_t index : frontier) {
          batch.push_back(
              {elements_[index] * alphabet_[letter], index, letter});
        }
      }
    }
    absorb_batch();
  }
  return elements_.size() <= max_size;
}

std::optional<std::uint32_t> InverseSemigroup::index_of(
    const PartialPerm& p) const {
  const auto it = index_.find(p);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::uint32_t InverseSemigroup::require_index(const PartialPerm& p) const {
  const auto index = index_of(p);
  if (!index) {
    throw NotInSemigroupError("element " + format_images(p) +
                              " is not in the semigroup");
  }
  return *index;
}

std::vector<std::uint16_t> InverseSemigroup::factorize_index(
    std::uint32_t index) const {
  std::vector<std::uint16_t> word;
  std::uint32_t at = index;
  while (at != npos) {
    word.push_back(parent_[at].second);
    at = parent_[at].first;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::uint16_t> InverseSemigroup::factorize(
    const PartialPerm& p) const {
  return factorize_index(require_index(p));
}

PartialPerm InverseSemigroup::evaluate_word(
    std::span<const std::uint16_t> word) const {
  if (word.empty()) {
    throw std::invalid_argument("cannot evaluate the empty word");
  }
  PartialPerm value = alphabet_.at(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) {
    value = value * alphabet_.at(word[i]);
  }
  return value;
}

std::uint32_t InverseSemigroup::node_of(const PartialPerm& idempotent) const {
  if (!idempotent.is_idempotent()) {
    throw std::invalid_argument("node_of requires an idempotent");
  }
  return node_of_elem_[require_index(idempotent)];
}

const PartialPerm& InverseSemigroup::node_idempotent(
    std::uint32_t node) const {
  if (identity_adjoined_ && node == identity_node_) {
    return identity_pperm_;
  }
  return elements_[idem_nodes_[node]];
}

void InverseSemigroup::build_gamma() {
  node_of_elem_.assign(elements_.size(), npos);
  for (std::uint32_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].is_idempotent()) {
      idem_nodes_.push_back(i);
    }
  }
  std::sort(idem_nodes_.begin(), idem_nodes_.end(),
            [&](std::uint32_t a, std::uint32_t b) {
              return elements_[a] < elements_[b];
            });
  for (std::uint32_t node = 0; node < idem_nodes_.size(); ++node) {
    node_of_elem_[idem_nodes_[node]] = node;
  }

  identity_pperm_ = PartialPerm::identity(degree_);
  const auto identity_index = index_of(identity_pperm_);
  identity_adjoined_ = !identity_index.has_value();
  identity_node_ = identity_adjoined_
                       ? static_cast<std::uint32_t>(idem_nodes_.size())
                       : node_of_elem_[*identity_index];

  const auto n_nodes = static_cast<std::uint32_t>(
      idem_nodes_.size() + (identity_adjoined_ ? 1 : 0));
  const auto n_letters = static_cast<std::uint32_t>(alphabet_.size());
  gamma_ = WordGraph(n_nodes, n_letters);

  std::vector<PartialPerm> letter_inverses;
  letter_inverses.reserve(alphabet_.size());
  for (const PartialPerm& x : alphabet_) {
    letter_inverses.push_back(x.inverse());
  }

  for (std::uint32_t node = 0; node < idem_nodes_.size(); ++node) {
    const PartialPerm& e = elements_[idem_nodes_[node]];
    for (std::uint32_t letter = 0; letter < n_letters; ++letter) {
      const PartialPerm conj = letter_inverses[letter] * e * alphabet_[letter];
      gamma_.set_target(node, letter, node_of_elem_[require_index(conj)]);
    }
  }
  if (identity_adjoined_) {
    for (std::uint32_t letter = 0; letter < n_letters; ++letter) {
      const std::uint32_t to =
          node_of_elem_[require_index(alphabet_[letter].range_one())];
      gamma_.set_target(identity_node_, letter, to);
    }
  }
  gamma_.validate();
}

void InverseSemigroup::build_sccs() {
  gamma_sccs_ = strongly_connected_components(gamma_);
  const std::uint32_t n_sccs = gamma_sccs_.n_blocks();
  d_class_count_ = n_sccs - (identity_adjoined_ ? 1 : 0);

  connector_.assign(gamma_.node_count(), PartialPerm());
  sccs_.resize(n_sccs);
  for (std::uint32_t id = 0; id < n_sccs; ++id) {
    SccInfo& info = sccs_[id];
    info.nodes = gamma_sccs_.blocks()[id];
    info.rep_node = info.nodes.front();
    info.is_adjoined_identity =
        identity_adjoined_ && info.rep_node == identity_node_;
    if (info.is_adjoined_identity) {
      connector_[info.rep_node] = identity_pperm_;
      info.group = GroupHandle(identity_pperm_);
      continue;
    }

    const PartialPerm& rep = node_idempotent(info.rep_node);

    // Connectors along a breadth-first spanning tree of the component,
    // pre-multiplied by rep so that u u^-1 = rep exactly.
    std::vector<std::uint32_t> queue{info.rep_node};
    connector_[info.rep_node] = rep;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::uint32_t node = queue[i];
      for (std::uint32_t letter = 0; letter < gamma_.alphabet_size();
           ++letter) {
        const std::uint32_t to = gamma_.target(node, letter);
        if (gamma_sccs_.block_of(to) == id && connector_[to].degree() == 0) {
          connector_[to] = connector_[node] * alphabet_[letter];
          queue.push_back(to);
        }
      }
    }

    // Schreier generators from the edges inside the component, filtered to
    // permutations of dom(rep).
    std::vector<PartialPerm> group_gens;
    std::unordered_set<PartialPerm> seen;
    for (std::uint32_t node : info.nodes) {
      for (std::uint32_t letter = 0; letter < gamma_.alphabet_size();
           ++letter) {
        const std::uint32_t to = gamma_.target(node, letter);
        if (gamma_sccs_.block_of(to) != id) {
          continue;
        }
        PartialPerm candidate =
            connector_[node] * alphabet_[letter] * connector_[to].inverse();
        if (candidate.domain_one() != rep || candidate.range_one() != rep) {
          continue;
        }
        if (candidate != rep && seen.insert(candidate).second) {
          group_gens.push_back(std::move(candidate));
        }
      }
    }
    info.group = GroupHandle(rep, group_gens);
  }
}

}  // namespace iscong
