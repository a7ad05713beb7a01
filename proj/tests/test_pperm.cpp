// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <set>
#include "iscong/semigroup.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace iscong;
using iscong::testing::pp;

TEST_CASE("composition matches the hand-evaluated examples") {
  const PartialPerm id4 = PartialPerm::identity(4);
  const PartialPerm x3 = pp("[-,1,2,3]", 4);
  CHECK(id4 * x3 == x3);
  CHECK(x3 * id4 == x3);
  CHECK(x3 * x3 == pp("[-,-,1,2]", 4));
  CHECK(pp("[2,3,1,-]", 4) * pp("[2,4,3,-]", 4) == pp("[4,3,2,-]", 4));
  CHECK_THROWS_AS(pp("(1 2)", 2) * pp("(1 2 3)", 3), std::invalid_argument);
}

TEST_CASE("inverse is the transpose") {
  CHECK(PartialPerm::identity(4).inverse() == PartialPerm::identity(4));
  CHECK(pp("[-,1,2,3]", 4).inverse() == pp("[2,3,4,-]", 4));
  CHECK(PartialPerm(4).inverse() == PartialPerm(4));
}

TEST_CASE("natural partial order") {
  const PartialPerm t = pp("[1,2,3,-]", 4);
  CHECK(natural_leq(PartialPerm(4), t));
  CHECK(natural_leq(pp("[1,2,-,-]", 4), t));
  CHECK(!natural_leq(pp("[2,1,-,-]", 4), t));
  CHECK_THROWS_AS(natural_leq(PartialPerm(3), t), std::invalid_argument);
}

TEST_CASE("meet of idempotents") {
  const PartialPerm e = pp("[1,2,-,-]", 4);
  const PartialPerm f = pp("[-,2,3,-]", 4);
  CHECK(meet_idem(e, f) == pp("[-,2,-,-]", 4));
  CHECK(meet_idem(e, e) == e);
  CHECK(meet_idem(e, PartialPerm(4)) == PartialPerm(4));
  CHECK_THROWS_AS(meet_idem(e, pp("[2,1,-,-]", 4)), std::invalid_argument);
}

TEST_CASE("inverse semigroup axioms and associativity on random elements") {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    const std::size_t degree = 1 + i % 9;
    const PartialPerm s = random_pperm(degree, rng);
    const PartialPerm t = random_pperm(degree, rng);
    const PartialPerm u = random_pperm(degree, rng);
    const PartialPerm s_inv = s.inverse();
    CHECK(s * s_inv * s == s);
    CHECK(s_inv * s * s_inv == s_inv);
    CHECK((s * t) * u == s * (t * u));
    CHECK(s * s_inv == s.domain_one());
    CHECK(s_inv * s == s.range_one());
  }
}

TEST_CASE("natural_leq is a partial order") {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t degree = 2 + i % 6;
    const PartialPerm s = random_pperm(degree, rng);
    const PartialPerm t = random_pperm(degree, rng);
    const PartialPerm u = random_pperm(degree, rng);
    CHECK(natural_leq(s, s));
    if (natural_leq(s, t) && natural_leq(t, s)) {
      CHECK(s == t);
    }
    if (natural_leq(s, t) && natural_leq(t, u)) {
      CHECK(natural_leq(s, u));
    }
    // s <= t iff s = te for an idempotent e (the defining form).
    if (natural_leq(s, t)) {
      CHECK(t * s.range_one() == s);
    }
  }
}

TEST_CASE("natural order is compatible with multiplication") {
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t degree = 2 + i % 6;
    const PartialPerm t = random_pperm(degree, rng);
    const PartialPerm v = random_pperm(degree, rng);
    // Restrictions of t and v: s <= t and u <= v by construction.
    const PartialPerm s = random_pperm(degree, rng).domain_one() * t;
    const PartialPerm u = random_pperm(degree, rng).domain_one() * v;
    REQUIRE(natural_leq(s, t));
    REQUIRE(natural_leq(u, v));
    CHECK(natural_leq(s * u, t * v));

    const PartialPerm x = random_pperm(degree, rng);
    const PartialPerm y = random_pperm(degree, rng);
    const PartialPerm e = random_pperm(degree, rng).domain_one();
    CHECK(natural_leq(x * e * y, x * y));
  }
}

TEST_CASE("idempotents drop out of rank-preserving products") {
  Rng rng(9);
  int hits = 0;
  for (int i = 0; i < 5000; ++i) {
    const std::size_t degree = 2 + i % 5;
    const PartialPerm z = random_pperm(degree, rng);
    const PartialPerm x = random_pperm(degree, rng);
    const PartialPerm y = random_pperm(degree, rng);
    const PartialPerm e = random_pperm(degree, rng).domain_one();
    const PartialPerm with_e = z * x * e * y;
    const PartialPerm without_e = z * x * y;
    if (with_e.rank() == z.rank() && without_e.rank() == z.rank()) {
      ++hits;
      CHECK(with_e == without_e);
    }
  }
  CHECK(hits > 100);  // the sampled condition must actually fire
}

TEST_CASE("canonical order puts undefined least and is total") {
  const PartialPerm empty(4);
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    const PartialPerm s = random_pperm(4, rng);
    if (s != empty) {
      CHECK(empty < s);
      CHECK(!(s < empty));
    }
    CHECK(!(s < s));
  }
  // Sorting is strict-weak-order sane and deduplicates consistently.
  std::vector<PartialPerm> sample;
  for (int i = 0; i < 300; ++i) {
    sample.push_back(random_pperm(3, rng));
  }
  std::sort(sample.begin(), sample.end());
  for (std::size_t i = 0; i + 1 < sample.size(); ++i) {
    CHECK(!(sample[i + 1] < sample[i]));
  }
}

TEST_CASE("degrees past the 16-byte kernel rows take the generic path") {
  Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const std::size_t degree = 17 + i % 40;
    const PartialPerm s = random_pperm(degree, rng);
    const PartialPerm t = random_pperm(degree, rng);
    CHECK(s.padded_size() > kernels::row_bytes);
    CHECK(s * s.inverse() * s == s);
    CHECK((s * t).rank() <= std::min(s.rank(), t.rank()));
    CHECK(s.domain_one().is_idempotent());
    CHECK(natural_leq(meet_idem(s.domain_one(), t.domain_one()),
                      s.domain_one()));
    CHECK(pp(format_images(s), degree) == s);
    // Composition agrees point by point with the definition.
    const PartialPerm st = s * t;
    for (std::size_t p = 0; p < degree; ++p) {
      const std::uint8_t expected =
          s.defined(p) ? t.image(s.image(p)) : PartialPerm::undef;
      CHECK(st.image(p) == expected);
    }
  }
  // A degree-20 semigroup runs entirely on the generic path; its size is
  // checked against an independent closure loop.
  const PartialPerm chain =
      pp("[20 19 18 17 16 15 14 13 12 11 10 9 8 7 6 5 4 3 2 1]", 20);
  const InverseSemigroup s20(20, {chain});
  CHECK(s20.identity_adjoined());
  std::vector<PartialPerm> closure{chain, chain.inverse()};
  std::set<PartialPerm> seen(closure.begin(), closure.end());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (const PartialPerm& g : {chain, chain.inverse()}) {
      for (const PartialPerm& p : {closure[i] * g, g * closure[i]}) {
        if (seen.insert(p).second) {
          closure.push_back(p);
        }
      }
    }
  }
  CHECK(s20.size() == closure.size());
  for (const PartialPerm& a : closure) {
    CHECK(s20.contains_element(a));
  }
}

TEST_CASE("element literals parse in both notations") {
  CHECK(pp("(1 2 3 4)", 4) == PartialPerm::from_images(4, {1, 2, 3, 0}));
  CHECK(pp("[4 3 2 1]", 4) == PartialPerm::from_images(4, {-1, 0, 1, 2}));
  CHECK(pp("[1 2 4] (3)", 4) == PartialPerm::from_images(4, {1, 3, 2, -1}));
  CHECK(pp("[2,4,3,-]", 4) == PartialPerm::from_images(4, {1, 3, 2, -1}));
  CHECK(pp("identity", 4) == PartialPerm::identity(4));
  CHECK(pp("empty", 4) == PartialPerm(4));
  CHECK(pp("(1 2)(3)(4)", 4) == PartialPerm::from_images(4, {1, 0, 2, 3}));

  CHECK_THROWS_AS(pp("(1 2 2)", 4), ParseError);
  CHECK_THROWS_AS(pp("(1 5)", 4), ParseError);
  CHECK_THROWS_AS(pp("[1,2,3]", 4), ParseError);
  CHECK_THROWS_AS(pp("(1 2", 4), ParseError);
  CHECK_THROWS_AS(pp("[1,1,2,3]", 4), ParseError);
  CHECK_THROWS_AS(pp("", 4), ParseError);
}

TEST_CASE("malformed literals throw instead of crashing") {
  Rng rng(14);
  const std::string alphabet = "()[]0123456789,- ";
  for (int i = 0; i < 3000; ++i) {
    std::string garbage;
    const std::size_t length = rng() % 12;
    for (std::size_t k = 0; k < length; ++k) {
      garbage += alphabet[rng() % alphabet.size()];
    }
    try {
      const PartialPerm p = pp(garbage, 1 + rng() % 9);
      CHECK(p.degree() >= 1);  // parsed fine, must be well-formed
    } catch (const ParseError&) {
    }
  }
  CHECK_THROWS_AS(pp("(1)", 0), ParseError);
  CHECK_THROWS_AS(pp("(1)", 300), ParseError);
  CHECK_THROWS_AS(PartialPerm(300), std::invalid_argument);
}

TEST_CASE("formatting round-trips through both notations") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const std::size_t degree = 1 + i % 9;
    const PartialPerm s = random_pperm(degree, rng);
    CHECK(pp(format_images(s), degree) == s);
    CHECK(pp(format_cycles(s), degree) == s);
  }
  CHECK(format_images(pp("[1 2 4] (3)", 4)) == "[2,4,3,-]");
  CHECK(format_cycles(pp("[2,4,3,-]", 4)) == "[1 2 4](3)");
  CHECK(format_cycles(PartialPerm(4)) == "empty");
}
