// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "iscong/group.hpp"
#include "iscong/pperm.hpp"
#include "iscong/semigroup.hpp"
#include "iscong/wordgraph.hpp"

namespace iscong {

struct CongruenceCaches;

/// A two-sided congruence on an inverse semigroup, represented without
/// enumerating its classes:
///
///  - the trace, as a partition of the nodes of the conjugation graph
///    together with the (deterministic) quotient graph;
///  - the components of the quotient graph, each carrying the meet
///    idempotent f of its representative trace class, the group H-class G
///    of f, the normal subgroup N = H_f n f/rho, a transversal of N in G,
///    and one connecting element per trace class in the component.
///
/// Built either from generating pairs or as a meet of two congruences
/// (meets carry no generating pairs). Queries on a finished congruence are
/// read-only and may run concurrently; internal memo tables are locked.
class Congruence {
 public:
  struct Component {
    std::uint32_t rep_class = 0;         // quotient node of the rep class
    PartialPerm meet_idempotent;         // f, least element of the rep class
    std::vector<std::uint32_t> classes;  // quotient nodes, ascending
    std::vector<PartialPerm> connectors; // per class; connectors[0] = f
    GroupHandle group;                   // G = H-class of f
    GroupHandle normal_subgroup;         // N = H_f n f/rho
    std::vector<PartialPerm> transversal;  // of N in G, canonical
  };

  /// The least congruence containing the given pairs. Throws
  /// NotInSemigroupError if a pair member is not an element.
  static Congruence from_pairs(
      std::shared_ptr<const InverseSemigroup> base,
      std::vector<std::pair<PartialPerm, PartialPerm>> pairs);

  /// The conjugated seed pairs (a e a^-1, b e b^-1) over all idempotents e
  /// and pairs (a, b), as deduplicated graph node pairs.
  static std::vector<std::pair<std::uint32_t, std::uint32_t>>
  trace_seed_pairs(const InverseSemigroup& base,
                   std::span<const std::pair<PartialPerm, PartialPerm>> pairs);

  const InverseSemigroup& base() const { return *base_; }
  const std::shared_ptr<const InverseSemigroup>& base_ptr() const {
    return base_;
  }

  bool has_pairs() const { return kind_ == Kind::pairs; }
  std::span<const std::pair<PartialPerm, PartialPerm>> pairs() const {
    return pairs_;
  }

  const NodePartition& trace() const { return trace_; }
  const WordGraph& quotient_graph() const { return qgraph_; }
  const NodePartition& quotient_sccs() const { return qsccs_; }
  std::span<const Component> components() const { return components_; }

  std::uint64_t nr_classes() const;

  /// One representative per class, ordered by (component, j, k, l) where
  /// the representative is connectors[j]^-1 * f * transversal[k] *
  /// connectors[l].
  std::vector<PartialPerm> class_reps() const;

  /// Both arguments must be idempotents of S.
  bool trace_related(const PartialPerm& e, const PartialPerm& f) const;

  /// Index into components() of the component holding the class of y y^-1;
  /// two elements are D-related in the quotient iff this agrees.
  std::uint32_t component_of(const PartialPerm& y) const;

  /// Least element of the trace class of y y^-1 (respectively y^-1 y).
  PartialPerm mu_of(const PartialPerm& y) const;
  PartialPerm nu_of(const PartialPerm& y) const;
  /// mu_of(y) * y * nu_of(y).
  PartialPerm phi(const PartialPerm& y) const;

  bool contains(const PartialPerm& a, const PartialPerm& b) const;

  /// All elements related to x, sorted.
  std::vector<PartialPerm> class_of(const PartialPerm& x) const;

  /// All elements related to an idempotent, sorted.
  std::vector<PartialPerm> kernel_elements() const;

 private:
  enum class Kind { pairs, meet };

  friend Congruence join(const Congruence& c1, const Congruence& c2);
  friend Congruence meet(const Congruence& c1, const Congruence& c2);

  Congruence() = default;

  void finish(std::vector<std::pair<std::uint32_t, std::uint32_t>> seeds);
  // Builds the quotient graph, its components and the caches from trace_.
  void finish_with_trace();
  void build_components();

  std::uint32_t class_of_node(std::uint32_t node) const {
    return trace_.block_of(node);
  }
  bool is_adjoined_class(std::uint32_t class_id) const;
  const PartialPerm& class_meet(std::uint32_t class_id) const;
  /// K = H_f n f/rho at the meet idempotent f of the class; elements are
  /// materialized before the handle is cached.
  const GroupHandle& kernel_group_at_class(std::uint32_t class_id) const;
  /// Group H-class of the idempotent of a graph node.
  const GroupHandle& hclass_group_at(std::uint32_t node) const;
  // g in K * r? Fast path peels r off when ranks allow, else scans K.
  bool coset_contains(const GroupHandle& k_group, const PartialPerm& coset_rep,
                      const PartialPerm& g) const;

  std::shared_ptr<const InverseSemigroup> base_;
  Kind kind_ = Kind::pairs;
  std::vector<std::pair<PartialPerm, PartialPerm>> pairs_;      // as given
  std::vector<std::pair<PartialPerm, PartialPerm>> pairs_sym_;  // R u R^-1
  std::shared_ptr<const Congruence> meet_left_;
  std::shared_ptr<const Congruence> meet_right_;

  NodePartition trace_;
  WordGraph qgraph_;
  NodePartition qsccs_;
  std::vector<Component> components_;
  std::vector<std::uint32_t> component_of_class_;

  std::shared_ptr<CongruenceCaches> caches_;
};

}  // namespace iscong
