// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <memory>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "helpers.hpp"
#include "iscong/congruence.hpp"
#include "iscong/oracle.hpp"

using namespace iscong;
using iscong::testing::i4_generators;
using iscong::testing::pp;

namespace {

std::shared_ptr<const InverseSemigroup> i4() {
  static const auto s =
      std::make_shared<const InverseSemigroup>(4, i4_generators());
  return s;
}

Congruence i4_congruence() {
  return Congruence::from_pairs(
      i4(), {{pp("(1)(2)(3)", 4), pp("(1 2 3)", 4)}});
}

std::vector<PartialPerm> sorted_elements(std::vector<PartialPerm> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("trace seed pairs") {
  const auto s = i4();
  CHECK(Congruence::trace_seed_pairs(*s, {}).empty());

  // Reflexive pairs contribute nothing.
  std::vector<std::pair<PartialPerm, PartialPerm>> reflexive{
      {pp("(1 2 3 4)", 4), pp("(1 2 3 4)", 4)}};
  CHECK(Congruence::trace_seed_pairs(*s, reflexive).empty());

  // The generated trace agrees with the one generated by a known
  // maximal irreflexive seed set.
  std::vector<std::pair<PartialPerm, PartialPerm>> generating{
      {pp("(1)(2)(3)", 4), pp("(1 2 3)", 4)}};
  const auto seeds = Congruence::trace_seed_pairs(*s, generating);
  const std::vector<std::pair<std::string, std::string>> m_literals{
      {"(1)", "(2)"},       {"(1)", "(3)"},       {"(2)", "(3)"},
      {"(1)(2)", "(2)(3)"}, {"(1)(2)", "(1)(3)"}, {"(2)(3)", "(1)(3)"}};
  std::vector<std::pair<std::uint32_t, std::uint32_t>> m_pairs;
  for (const auto& [a, b] : m_literals) {
    m_pairs.emplace_back(s->node_of(pp(a, 4)), s->node_of(pp(b, 4)));
  }
  CHECK(quotient_closure(s->gamma(), seeds).partition ==
        quotient_closure(s->gamma(), m_pairs).partition);
}

TEST_CASE("determinizing over the generator letters alone refines the trace") {
  // The trace needs closure under conjugation by every element, and the
  // inverse letters matter whenever the generators alone do not span the
  // semigroup under plain products (one chain generator is enough: its
  // inverse is no product of its powers). Dropping them can only leave the
  // partition finer; when the generators do span, the partitions agree.
  Rng rng(55);
  for (int instance = 0; instance < 12; ++instance) {
    const auto s = instance == 0
                       ? i4()
                       : random_inverse_semigroup(3 + rng() % 3, 2, 300, rng);
    const auto pairs = random_pairs(*s, 1 + rng() % 3, rng);
    const auto seeds = Congruence::trace_seed_pairs(*s, pairs);

    const auto n_original = static_cast<std::uint32_t>(s->generators().size());
    WordGraph original_letters_only(s->gamma().node_count(), n_original);
    for (std::uint32_t node = 0; node < s->gamma().node_count(); ++node) {
      for (std::uint32_t letter = 0; letter < n_original; ++letter) {
        original_letters_only.set_target(node, letter,
                                         s->gamma().target(node, letter));
      }
    }
    const NodePartition full = quotient_closure(s->gamma(), seeds).partition;
    const NodePartition generators_only =
        quotient_closure(original_letters_only, seeds).partition;
    CHECK(generators_only.refines(full));

    // Do the generators alone span S under plain products?
    std::unordered_set<PartialPerm> plain(s->generators().begin(),
                                          s->generators().end());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<PartialPerm> snapshot(plain.begin(), plain.end());
      for (const PartialPerm& a : snapshot) {
        for (const PartialPerm& g : s->generators()) {
          grew = plain.insert(a * g).second || grew;
        }
      }
    }
    if (plain.size() == s->size()) {
      CHECK(generators_only == full);
    }
  }
}

TEST_CASE("the worked example on I4") {
  const Congruence c = i4_congruence();

  CHECK(c.nr_classes() == 57);
  CHECK(c.quotient_graph().node_count() == 6);
  REQUIRE(c.components().size() == 3);

  std::multiset<std::size_t> class_counts;
  std::multiset<std::uint64_t> quotient_orders;
  std::multiset<std::uint64_t> normal_orders;
  for (const auto& comp : c.components()) {
    class_counts.insert(comp.classes.size());
    quotient_orders.insert(comp.group.size() / comp.normal_subgroup.size());
    normal_orders.insert(comp.normal_subgroup.size());
  }
  CHECK(class_counts == std::multiset<std::size_t>{1, 4, 1});
  CHECK(quotient_orders == std::multiset<std::uint64_t>{24, 2, 1});
  CHECK(normal_orders == std::multiset<std::uint64_t>{1, 3, 1});

  // N at f = (1)(2)(3) is the normal closure of (1 3 2): the alternating
  // group, which is exactly the class of the idempotent.
  CHECK(c.class_of(pp("(1)(2)(3)", 4)) ==
        sorted_elements({pp("(1)(2)(3)", 4), pp("(1 2 3)", 4),
                         pp("(1 3 2)", 4)}));
}

TEST_CASE("class of a chain-with-fixed-point element") {
  const Congruence c = i4_congruence();
  CHECK(c.class_of(pp("[1 2 4] (3)", 4)) ==
        sorted_elements({pp("[1 2 4] (3)", 4), pp("[1 4] (2 3)", 4),
                         pp("[1 3 4] (2)", 4)}));
  CHECK(c.class_of(PartialPerm(4)).size() == 89);
}

TEST_CASE("membership") {
  const Congruence c = i4_congruence();
  CHECK(c.contains(pp("(1)(2)(3)", 4), pp("(1 2 3)", 4)));
  CHECK(!c.contains(pp("(1)(2)(3)", 4), pp("(1 2)(3)", 4)));
  CHECK(c.contains(pp("[1 2 4] (3)", 4), pp("[1 4] (2 3)", 4)));
  for (int i = 0; i < 50; ++i) {
    const PartialPerm& x = c.base().element(i * 4 % c.base().size());
    CHECK(c.contains(x, x));
  }
  CHECK_THROWS_AS(c.contains(pp("(1 2 3 4 5)", 5), PartialPerm(5)),
                  NotInSemigroupError);
}

TEST_CASE("kernel of the worked example") {
  const Congruence c = i4_congruence();
  const auto kernel = c.kernel_elements();
  CHECK(kernel.size() == 102);  // 1 + 4 * 3 + 89

  const ElementPartition oracle = pair_closure(c.base(), c.pairs());
  const auto expected_indices = kernel_of_closure(c.base(), oracle);
  REQUIRE(expected_indices.size() == 102);
  std::vector<PartialPerm> expected;
  for (std::uint32_t index : expected_indices) {
    expected.push_back(c.base().element(index));
  }
  CHECK(kernel == sorted_elements(expected));
}

TEST_CASE("degenerate congruences") {
  const auto s = i4();
  const Congruence identity_cong = Congruence::from_pairs(s, {});
  CHECK(identity_cong.nr_classes() == s->size());
  const Congruence reflexive = Congruence::from_pairs(
      s, {{pp("(1 2 3 4)", 4), pp("(1 2 3 4)", 4)}});
  CHECK(reflexive.nr_classes() == s->size());
  for (int i = 0; i < 30; ++i) {
    const PartialPerm& x = s->element(i * 7 % s->size());
    CHECK(identity_cong.class_of(x) == std::vector<PartialPerm>{x});
    CHECK(identity_cong.phi(x) == x);  // mu and nu are then x x^-1, x^-1 x
  }
  CHECK(identity_cong.kernel_elements().size() == s->n_idempotents());
}

TEST_CASE("class representatives of the trivial congruence list everything") {
  const auto c2 = std::make_shared<const InverseSemigroup>(
      2, std::vector<PartialPerm>{pp("(1 2)", 2)});
  REQUIRE(c2->size() == 2);
  const auto reps = Congruence::from_pairs(c2, {}).class_reps();
  CHECK(reps.size() == 2);
  CHECK(std::set<PartialPerm>(reps.begin(), reps.end()) ==
        std::set<PartialPerm>{pp("(1 2)", 2), pp("(1)(2)", 2)});
}

TEST_CASE("class representatives") {
  const Congruence c = i4_congruence();
  const auto reps = c.class_reps();
  REQUIRE(reps.size() == 57);

  // Known representatives from the middle component.
  const auto has = [&](std::string_view literal) {
    return std::find(reps.begin(), reps.end(), pp(literal, 4)) != reps.end();
  };
  CHECK(has("[4 3 2 1]"));
  CHECK(has("(1)(2 3)"));

  // Pairwise inequivalent and jointly exhaustive.
  std::size_t total = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    total += c.class_of(reps[i]).size();
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      CHECK(!c.contains(reps[i], reps[j]));
    }
  }
  CHECK(total == c.base().size());
}

TEST_CASE("phi and the minimum maps") {
  const Congruence c = i4_congruence();
  const auto s = c.base_ptr();

  // On the rank-3 classes the trace is trivial, so phi is the identity.
  for (const char* literal : {"[1 2 4] (3)", "(1 2 3 4)", "(1)(2)(3)"}) {
    CHECK(c.phi(pp(literal, 4)) == pp(literal, 4));
  }

  Rng rng(51);
  for (int i = 0; i < 400; ++i) {
    const PartialPerm& y = s->element(rng() % s->size());
    const PartialPerm mu = c.mu_of(y);
    const PartialPerm nu = c.nu_of(y);
    CHECK(c.trace_related(mu, y.domain_one()));
    CHECK(natural_leq(mu, y.domain_one()));
    CHECK(natural_leq(nu, y.range_one()));
    CHECK(natural_leq(c.phi(y), y));
    CHECK(c.phi(c.phi(y)) == c.phi(y));
    CHECK(c.contains(c.phi(y), y));

    // Within one quotient D-class phi keeps its minimum-of-trace shape.
    const PartialPerm& z = s->element(rng() % s->size());
    if (c.component_of(y) == c.component_of(z)) {
      const PartialPerm py = c.phi(y);
      CHECK(py * py.inverse() == mu);
      CHECK(py.inverse() * py == nu);
    }
  }
}

TEST_CASE("phi is a functor on D-classes") {
  const Congruence c = i4_congruence();
  const auto s = c.base_ptr();
  Rng rng(52);
  int hits = 0;
  for (int i = 0; i < 4000 && hits < 200; ++i) {
    const PartialPerm& y = s->element(rng() % s->size());
    const PartialPerm& z = s->element(rng() % s->size());
    const std::uint32_t d_y = s->scc_of_node(s->node_of(y.domain_one()));
    const std::uint32_t d_z = s->scc_of_node(s->node_of(z.domain_one()));
    if (d_y != d_z) {
      continue;
    }
    const PartialPerm yz = y * z;
    if (s->scc_of_node(s->node_of(yz.domain_one())) != d_y) {
      continue;
    }
    ++hits;
    CHECK(c.phi(yz) == c.phi(y) * c.phi(z));
  }
  CHECK(hits >= 200);
}

TEST_CASE("trace membership through factorization paths") {
  // Following an idempotent's factorization from the identity node of the
  // quotient graph lands in that idempotent's class, so two idempotents
  // are trace-related iff their words end at the same quotient node.
  Rng rng(56);
  for (int instance = 0; instance < 6; ++instance) {
    const auto s = instance == 0
                       ? i4()
                       : random_inverse_semigroup(3 + rng() % 3, 2, 300, rng);
    const auto pairs = random_pairs(*s, 1 + rng() % 2, rng);
    const Congruence c = Congruence::from_pairs(s, pairs);
    const std::uint32_t start = c.trace().block_of(s->identity_node());
    for (std::uint32_t e = 0; e < s->n_idempotents(); ++e) {
      const auto word = s->factorize(s->node_idempotent(e));
      CHECK(c.quotient_graph().follow_path(start, word) ==
            c.trace().block_of(e));
    }
  }
}

TEST_CASE("congruences on a semigroup with an adjoined identity node") {
  // No generator has full rank, so 1 is not an element and the graph gets
  // the extra node; the machinery must leave it alone.
  const auto s = std::make_shared<const InverseSemigroup>(
      4, std::vector<PartialPerm>{pp("[4 3 2 1]", 4), pp("[1 2](3)", 4)});
  REQUIRE(s->identity_adjoined());

  Rng rng(54);
  const auto pairs = random_pairs(*s, 2, rng);
  const Congruence c = Congruence::from_pairs(s, pairs);
  const ElementPartition oracle = pair_closure(*s, pairs);
  CHECK(c.nr_classes() == oracle.n_blocks());
  CHECK(c.class_reps().size() == c.nr_classes());
  for (int k = 0; k < 400; ++k) {
    const std::uint32_t i = rng() % s->size();
    const std::uint32_t j = rng() % s->size();
    CHECK(c.contains(s->element(i), s->element(j)) == oracle.same(i, j));
  }
  const auto kernel = c.kernel_elements();
  CHECK(kernel.size() == kernel_of_closure(*s, oracle).size());
}

TEST_CASE("random congruences agree with the pair-closure oracle") {
  Rng rng(53);
  int instances = 0;
  while (instances < 12) {
    const std::size_t degree = 3 + rng() % 3;
    const auto s = random_inverse_semigroup(degree, 2, 400, rng);
    const auto pairs = random_pairs(*s, 1 + rng() % 3, rng);
    const Congruence c = Congruence::from_pairs(s, pairs);
    const ElementPartition oracle = pair_closure(*s, pairs);
    ++instances;

    CHECK(c.nr_classes() == oracle.n_blocks());
    CHECK(c.trace() == trace_of_closure(*s, oracle));

    for (int k = 0; k < 300; ++k) {
      const std::uint32_t i = rng() % s->size();
      const std::uint32_t j = rng() % s->size();
      CHECK(c.contains(s->element(i), s->element(j)) == oracle.same(i, j));
    }

    const auto kernel = c.kernel_elements();
    const auto expected = kernel_of_closure(*s, oracle);
    REQUIRE(kernel.size() == expected.size());
    std::vector<PartialPerm> expected_elements;
    for (std::uint32_t index : expected) {
      expected_elements.push_back(s->element(index));
    }
    CHECK(kernel == sorted_elements(expected_elements));

    // class_of agrees with the oracle's blocks on a sample element.
    const std::uint32_t probe = rng() % s->size();
    std::vector<PartialPerm> block;
    for (std::uint32_t index = 0; index < s->size(); ++index) {
      if (oracle.same(probe, index)) {
        block.push_back(s->element(index));
      }
    }
    CHECK(c.class_of(s->element(probe)) == sorted_elements(block));
  }
}
