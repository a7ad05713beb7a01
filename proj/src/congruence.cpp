// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/congruence.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace iscong {

namespace {
constexpr std::uint32_t npos = InverseSemigroup::npos;
}

struct CongruenceCaches {
  std::mutex mutex;
  std::unordered_map<std::uint32_t, PartialPerm> class_meet;
  std::unordered_map<std::uint32_t, GroupHandle> kernel_group;
  std::unordered_map<std::uint32_t, GroupHandle> hclass_group;
};

Congruence Congruence::from_pairs(
    std::shared_ptr<const InverseSemigroup> base,
    std::vector<std::pair<PartialPerm, PartialPerm>> pairs) {
  Congruence c;
  c.base_ = std::move(base);
  c.kind_ = Kind::pairs;
  c.pairs_ = std::move(pairs);
  for (const auto& [a, b] : c.pairs_) {
    c.base_->require_index(a);
    c.base_->require_index(b);
  }
  for (const auto& [a, b] : c.pairs_) {
    if (a == b) {
      continue;
    }
    const auto forward = std::make_pair(a, b);
    const auto backward = std::make_pair(b, a);
    if (std::find(c.pairs_sym_.begin(), c.pairs_sym_.end(), forward) ==
        c.pairs_sym_.end()) {
      c.pairs_sym_.push_back(forward);
    }
    if (std::find(c.pairs_sym_.begin(), c.pairs_sym_.end(), backward) ==
        c.pairs_sym_.end()) {
      c.pairs_sym_.push_back(backward);
    }
  }
  c.finish(trace_seed_pairs(*c.base_, c.pairs_));
  return c;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>>
Congruence::trace_seed_pairs(
    const InverseSemigroup& base,
    std::span<const std::pair<PartialPerm, PartialPerm>> pairs) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  for (const auto& [a, b] : pairs) {
    if (a == b) {
      continue;
    }
    const PartialPerm a_inv = a.inverse();
    const PartialPerm b_inv = b.inverse();
    for (std::uint32_t node = 0; node < base.n_idempotents(); ++node) {
      const PartialPerm& e = base.node_idempotent(node);
      const std::uint32_t left = base.node_of(a * e * a_inv);
      const std::uint32_t right = base.node_of(b * e * b_inv);
      if (left == right) {
        continue;
      }
      const auto key = std::minmax(left, right);
      if (seen.insert(key).second) {
        seeds.emplace_back(key.first, key.second);
      }
    }
  }
  return seeds;
}

void Congruence::finish(
    std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds) {
  trace_ = quotient_closure(base_->gamma(), seeds).partition;
  finish_with_trace();
}

void Congruence::finish_with_trace() {
  qgraph_ = quotient_graph_of(base_->gamma(), trace_);
  qsccs_ = strongly_connected_components(qgraph_);
  caches_ = std::make_shared<CongruenceCaches>();
  build_components();
}

bool Congruence::is_adjoined_class(std::uint32_t class_id) const {
  return base_->identity_adjoined() &&
         class_id == trace_.block_of(base_->identity_node());
}

void Congruence::build_components() {
  component_of_class_.assign(qgraph_.node_count(), npos);
  const std::span<const PartialPerm> alphabet = base_->alphabet();

  for (const std::vector<std::uint32_t>& scc_classes : qsccs_.blocks()) {
    if (is_adjoined_class(scc_classes.front())) {
      // The adjoined identity keeps its own node; it is not an element.
      continue;
    }
    Component comp;
    comp.classes = scc_classes;
    comp.rep_class = scc_classes.front();
    comp.meet_idempotent = class_meet(comp.rep_class);
    const PartialPerm& f = comp.meet_idempotent;

    const std::uint32_t node_f = base_->node_of(f);
    comp.group = hclass_group_at(node_f);
    comp.normal_subgroup = kernel_group_at_class(comp.rep_class);
    comp.transversal = comp.group.coset_transversal(comp.normal_subgroup);

    // Connecting elements along a spanning tree of the component of the
    // quotient graph, pre-multiplied by f.
    std::unordered_map<std::uint32_t, std::uint32_t> position;
    for (std::uint32_t i = 0; i < comp.classes.size(); ++i) {
      position.emplace(comp.classes[i], i);
    }
    comp.connectors.assign(comp.classes.size(), PartialPerm());
    comp.connectors[position.at(comp.rep_class)] = f;
    std::vector<std::uint32_t> queue{comp.rep_class};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::uint32_t at = queue[i];
      for (std::uint32_t letter = 0; letter < qgraph_.alphabet_size();
           ++letter) {
        const std::uint32_t to = qgraph_.target(at, letter);
        const auto pos = position.find(to);
        if (pos == position.end() ||
            comp.connectors[pos->second].degree() != 0) {
          continue;
        }
        comp.connectors[pos->second] =
            comp.connectors[position.at(at)] * alphabet[letter];
        queue.push_back(to);
      }
    }

    for (std::uint32_t class_id : comp.classes) {
      component_of_class_[class_id] =
          static_cast<std::uint32_t>(components_.size());
    }
    components_.push_back(std::move(comp));
  }
}

const PartialPerm& Congruence::class_meet(std::uint32_t class_id) const {
  std::scoped_lock lock(caches_->mutex);
  const auto hit = caches_->class_meet.find(class_id);
  if (hit != caches_->class_meet.end()) {
    return hit->second;
  }
  PartialPerm meet;
  for (std::uint32_t node : trace_.blocks()[class_id]) {
    const PartialPerm& e = base_->node_idempotent(node);
    meet = (meet.degree() == 0) ? e : meet_idem(meet, e);
  }
  return caches_->class_meet.emplace(class_id, std::move(meet)).first->second;
}

const GroupHandle& Congruence::hclass_group_at(std::uint32_t node) const {
  std::scoped_lock lock(caches_->mutex);
  const auto hit = caches_->hclass_group.find(node);
  if (hit != caches_->hclass_group.end()) {
    return hit->second;
  }
  const InverseSemigroup::SccInfo& info =
      base_->scc(base_->scc_of_node(node));
  GroupHandle group;
  if (node == info.rep_node) {
    group = info.group;
  } else {
    // Translate the component's representative group along the connector.
    const PartialPerm& u = base_->connector(node);
    const PartialPerm u_inv = u.inverse();
    std::vector<PartialPerm> gens;
    gens.reserve(info.group.generators().size());
    for (const PartialPerm& g : info.group.generators()) {
      gens.push_back(u_inv * g * u);
    }
    group = GroupHandle(base_->node_idempotent(node), gens);
  }
  group.elements();  // materialize while still exclusively owned
  return caches_->hclass_group.emplace(node, std::move(group)).first->second;
}

const GroupHandle& Congruence::kernel_group_at_class(
    std::uint32_t class_id) const {
  {
    std::scoped_lock lock(caches_->mutex);
    const auto hit = caches_->kernel_group.find(class_id);
    if (hit != caches_->kernel_group.end()) {
      return hit->second;
    }
  }
  const PartialPerm f = class_meet(class_id);
  const std::uint32_t node_f = base_->node_of(f);
  const GroupHandle& h_class = hclass_group_at(node_f);

  GroupHandle kernel_group;
  if (kind_ == Kind::pairs) {
    // Normal closure of {f v a b^-1 v^-1} n H_f over the connectors v of
    // the component of f, rooted at f.
    const InverseSemigroup::SccInfo& info =
        base_->scc(base_->scc_of_node(node_f));
    const PartialPerm u_f_inv = base_->connector(node_f).inverse();
    std::vector<PartialPerm> rooted;
    rooted.reserve(info.nodes.size());
    for (std::uint32_t node : info.nodes) {
      rooted.push_back(u_f_inv * base_->connector(node));
    }
    std::vector<PartialPerm> seeds;
    std::unordered_set<PartialPerm> seen;
    for (const auto& [a, b] : pairs_sym_) {
      const PartialPerm ab = a * b.inverse();
      for (const PartialPerm& v : rooted) {
        PartialPerm candidate = f * v * ab * v.inverse();
        if (candidate.domain_one() != f || candidate.range_one() != f) {
          continue;
        }
        if (candidate != f && seen.insert(candidate).second) {
          seeds.push_back(std::move(candidate));
        }
      }
    }
    kernel_group = h_class.normal_closure(seeds);
  } else {
    // Meet: H_f n f/(rho1 ^ rho2), filtering with both parents.
    std::vector<PartialPerm> members;
    for (const PartialPerm& h : h_class.elements()) {
      if (h != f && meet_left_->contains(h, f) && meet_right_->contains(h, f)) {
        members.push_back(h);
      }
    }
    kernel_group = GroupHandle(f, members);
  }
  kernel_group.elements();  // materialize while still exclusively owned

  std::scoped_lock lock(caches_->mutex);
  return caches_->kernel_group.emplace(class_id, std::move(kernel_group))
      .first->second;
}

std::uint64_t Congruence::nr_classes() const {
  std::uint64_t total = 0;
  for (const Component& comp : components_) {
    const std::uint64_t quotient_order =
        comp.group.size() / comp.normal_subgroup.size();
    total += quotient_order * comp.classes.size() * comp.classes.size();
  }
  return total;
}

std::vector<PartialPerm> Congruence::class_reps() const {
  std::vector<PartialPerm> reps;
  for (const Component& comp : components_) {
    const PartialPerm& f = comp.meet_idempotent;
    for (const PartialPerm& from : comp.connectors) {
      const PartialPerm from_inv = from.inverse();
      for (const PartialPerm& coset_rep : comp.transversal) {
        const PartialPerm left = from_inv * f * coset_rep;
        for (const PartialPerm& to : comp.connectors) {
          reps.push_back(left * to);
        }
      }
    }
  }
  return reps;
}

bool Congruence::trace_related(const PartialPerm& e,
                               const PartialPerm& f) const {
  return trace_.same(base_->node_of(e), base_->node_of(f));
}

std::uint32_t Congruence::component_of(const PartialPerm& y) const {
  base_->require_index(y);
  return component_of_class_[class_of_node(base_->node_of(y.domain_one()))];
}

PartialPerm Congruence::mu_of(const PartialPerm& y) const {
  base_->require_index(y);
  return class_meet(class_of_node(base_->node_of(y.domain_one())));
}

PartialPerm Congruence::nu_of(const PartialPerm& y) const {
  base_->require_index(y);
  return class_meet(class_of_node(base_->node_of(y.range_one())));
}

PartialPerm Congruence::phi(const PartialPerm& y) const {
  return mu_of(y) * y * nu_of(y);
}

bool Congruence::coset_contains(const GroupHandle& k_group,
                                const PartialPerm& coset_rep,
                                const PartialPerm& g) const {
  const PartialPerm& f = k_group.one();
  if (coset_rep.rank() == f.rank()) {
    const PartialPerm k = g * coset_rep.inverse();
    return k_group.contains(k) && k * coset_rep == g;
  }
  for (const PartialPerm& k : k_group.elements()) {
    if (k * coset_rep == g) {
      return true;
    }
  }
  return false;
}

bool Congruence::contains(const PartialPerm& a, const PartialPerm& b) const {
  base_->require_index(a);
  base_->require_index(b);
  if (a == b) {
    return true;
  }
  if (!trace_.same(base_->node_of(a.range_one()),
                   base_->node_of(b.range_one()))) {
    return false;
  }
  const PartialPerm x = a * b.inverse();
  const std::uint32_t left_node = base_->node_of(x.domain_one());
  const std::uint32_t right_node = base_->node_of(x.range_one());
  if (!trace_.same(left_node, right_node)) {
    return false;
  }
  const std::uint32_t class_id = class_of_node(left_node);
  const PartialPerm& f = class_meet(class_id);
  const GroupHandle& kernel_group = kernel_group_at_class(class_id);
  const PartialPerm g = f * x * f;          // phi(x)
  const PartialPerm coset_rep = f * x * x;  // representative of K x^2
  return coset_contains(kernel_group, coset_rep, g);
}

std::vector<PartialPerm> Congruence::class_of(const PartialPerm& x) const {
  base_->require_index(x);
  const std::uint32_t left_node = base_->node_of(x.domain_one());
  const std::uint32_t right_node = base_->node_of(x.range_one());
  const std::uint32_t left_class = class_of_node(left_node);
  const std::uint32_t right_class = class_of_node(right_node);

  const PartialPerm& f0 = class_meet(left_class);  // = mu_of(x)
  const GroupHandle& kernel_group = kernel_group_at_class(left_class);

  std::vector<PartialPerm> result;
  for (std::uint32_t e_node : trace_.blocks()[left_class]) {
    for (std::uint32_t f_node : trace_.blocks()[right_class]) {
      if (base_->scc_of_node(e_node) != base_->scc_of_node(f_node)) {
        continue;
      }
      // s with s^-1 e s = f exactly, from the component's connectors.
      const PartialPerm s =
          base_->connector(e_node).inverse() * base_->connector(f_node);
      const PartialPerm coset_rep = f0 * x * s.inverse();
      for (const PartialPerm& h : hclass_group_at(e_node).elements()) {
        const PartialPerm h_phi = f0 * h * f0;  // phi(h)
        if (coset_contains(kernel_group, coset_rep, h_phi)) {
          result.push_back(h * s);
        }
      }
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<PartialPerm> Congruence::kernel_elements() const {
  std::vector<PartialPerm> kernel;
  for (std::uint32_t class_id = 0; class_id < qgraph_.node_count();
       ++class_id) {
    if (is_adjoined_class(class_id)) {
      continue;
    }
    const std::uint32_t least_node = trace_.blocks()[class_id].front();
    std::vector<PartialPerm> members =
        class_of(base_->node_idempotent(least_node));
    kernel.insert(kernel.end(), std::make_move_iterator(members.begin()),
                  std::make_move_iterator(members.end()));
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

}  // namespace iscong
