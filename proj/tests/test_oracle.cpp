// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include <memory>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "iscong/congruence.hpp"
#include "iscong/oracle.hpp"

using namespace iscong;
using iscong::testing::i4_generators;
using iscong::testing::pp;

TEST_CASE("pair closure on degenerate inputs") {
  const InverseSemigroup s(4, i4_generators());
  CHECK(pair_closure(s, {}).n_blocks() == s.size());

  // Two comparable idempotents identified collapse their semilattice.
  const InverseSemigroup chain2(2, {pp("(1)(2)", 2), pp("(1)", 2)});
  REQUIRE(chain2.size() == 2);
  const std::vector<std::pair<PartialPerm, PartialPerm>> collapse{
      {pp("(1)", 2), pp("(1)(2)", 2)}};
  CHECK(pair_closure(chain2, collapse).n_blocks() == 1);
}

TEST_CASE("the worked example has 57 blocks") {
  const InverseSemigroup s(4, i4_generators());
  const std::vector<std::pair<PartialPerm, PartialPerm>> pairs{
      {pp("(1)(2)(3)", 4), pp("(1 2 3)", 4)}};
  CHECK(pair_closure(s, pairs).n_blocks() == 57);
}

TEST_CASE("closure is stable under translation and conjugation") {
  Rng rng(81);
  for (int instance = 0; instance < 8; ++instance) {
    const auto s = random_inverse_semigroup(3 + instance % 3, 2, 300, rng);
    const auto pairs = random_pairs(*s, 1 + rng() % 3, rng);
    const ElementPartition closure = pair_closure(*s, pairs);

    // Multiplying two related elements by a letter never escapes blocks.
    for (int k = 0; k < 500; ++k) {
      const std::uint32_t i = rng() % s->size();
      const std::uint32_t j = rng() % s->size();
      if (!closure.same(i, j)) {
        continue;
      }
      for (const PartialPerm& g : s->alphabet()) {
        CHECK(closure.same(s->require_index(s->element(i) * g),
                           s->require_index(s->element(j) * g)));
        CHECK(closure.same(s->require_index(g * s->element(i)),
                           s->require_index(g * s->element(j))));
      }
    }

    // The restriction to E(S) is a normal congruence: closed under the
    // conjugation action of the letters.
    const NodePartition trace = trace_of_closure(*s, closure);
    for (std::uint32_t a = 0; a < s->n_idempotents(); ++a) {
      for (std::uint32_t b = 0; b < a; ++b) {
        if (!trace.same(a, b)) {
          continue;
        }
        for (std::uint32_t letter = 0; letter < s->alphabet().size();
             ++letter) {
          CHECK(trace.same(s->gamma().target(a, letter),
                           s->gamma().target(b, letter)));
        }
      }
    }
  }
}

TEST_CASE("a unit identified with the zero collapses everything") {
  const auto s =
      std::make_shared<const InverseSemigroup>(4, i4_generators());
  const std::vector<std::pair<PartialPerm, PartialPerm>> pairs{
      {pp("(1 2 3 4)", 4), PartialPerm(4)}};
  CHECK(pair_closure(*s, pairs).n_blocks() == 1);

  const Congruence universal = Congruence::from_pairs(s, pairs);
  CHECK(universal.nr_classes() == 1);
  CHECK(universal.kernel_elements().size() == s->size());
  CHECK(universal.class_reps().size() == 1);
  CHECK(universal.contains(pp("(1)(2)", 4), pp("(1 3)(2 4)", 4)));
}

TEST_CASE("membership reconstructs from trace and kernel") {
  Rng rng(82);
  const auto s = random_inverse_semigroup(4, 2, 300, rng);
  const auto pairs = random_pairs(*s, 1 + rng() % 2, rng);
  const Congruence c = Congruence::from_pairs(s, pairs);
  const auto kernel = c.kernel_elements();
  const std::set<PartialPerm> kernel_set(kernel.begin(), kernel.end());
  for (int k = 0; k < 1000; ++k) {
    const PartialPerm& a = s->element(rng() % s->size());
    const PartialPerm& b = s->element(rng() % s->size());
    const bool reconstructed =
        c.trace_related(a.range_one(), b.range_one()) &&
        kernel_set.contains(a * b.inverse());
    CHECK(c.contains(a, b) == reconstructed);
  }
}
