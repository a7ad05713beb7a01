// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/random.hpp"

#include <algorithm>
#include <numeric>

namespace iscong {

namespace {

std::vector<int> random_subset(std::size_t degree, std::size_t size,
                               Rng& rng) {
  std::vector<int> points(degree);
  std::iota(points.begin(), points.end(), 0);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(size);
  return points;
}

}  // namespace

PartialPerm random_pperm(std::size_t degree, std::size_t rank, Rng& rng) {
  const std::vector<int> dom = random_subset(degree, rank, rng);
  std::vector<int> img = random_subset(degree, rank, rng);
  std::vector<int> images(degree, -1);
  for (std::size_t i = 0; i < rank; ++i) {
    images[static_cast<std::size_t>(dom[i])] = img[i];
  }
  return PartialPerm::from_images(degree, images);
}

PartialPerm random_pperm(std::size_t degree, Rng& rng, std::size_t min_rank) {
  std::uniform_int_distribution<std::size_t> rank_dist(min_rank, degree);
  return random_pperm(degree, rank_dist(rng), rng);
}

std::shared_ptr<const InverseSemigroup> random_inverse_semigroup(
    std::size_t degree, std::size_t min_size, std::size_t max_size, Rng& rng) {
  std::uniform_int_distribution<std::size_t> n_gens_dist(1, degree);
  while (true) {
    const std::size_t n_gens = n_gens_dist(rng);
    std::vector<PartialPerm> gens;
    for (std::size_t i = 0; i < n_gens; ++i) {
      // Lean towards high ranks so the closure is usually interesting.
      std::uniform_int_distribution<std::size_t> min_rank_dist(
          degree / 2, degree);
      gens.push_back(random_pperm(degree, rng, min_rank_dist(rng)));
    }
    auto s = InverseSemigroup::try_enumerate(degree, gens, max_size);
    if (s && s->size() >= min_size) {
      return std::make_shared<const InverseSemigroup>(*std::move(s));
    }
  }
}

std::vector<std::pair<PartialPerm, PartialPerm>> random_pairs(
    const InverseSemigroup& s, std::size_t count, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> index_dist(
      0, static_cast<std::uint32_t>(s.size()) - 1);
  std::vector<std::pair<PartialPerm, PartialPerm>> pairs;
  pairs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    pairs.emplace_back(s.element(index_dist(rng)), s.element(index_dist(rng)));
  }
  return pairs;
}

}  // namespace iscong
