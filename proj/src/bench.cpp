// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/bench.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "iscong/congruence.hpp"
#include "iscong/oracle.hpp"
#include "iscong/random.hpp"

namespace iscong {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchConfig& config,
                                std::ostream* progress) {
  Rng rng(config.seed);
  std::uniform_int_distribution<std::size_t> degree_dist(config.degree_min,
                                                         config.degree_max);
  std::uniform_int_distribution<std::size_t> pairs_dist(config.pairs_min,
                                                        config.pairs_max);
  std::vector<BenchRow> rows;
  for (std::size_t i = 0; i < config.instances; ++i) {
    BenchRow row;
    row.degree = degree_dist(rng);
    const auto s = random_inverse_semigroup(row.degree, config.min_size,
                                            config.max_size, rng);
    row.size = s->size();
    row.n_pairs = pairs_dist(rng);
    const auto pairs = random_pairs(*s, row.n_pairs, rng);

    const auto engine_start = std::chrono::steady_clock::now();
    const Congruence congruence = Congruence::from_pairs(s, pairs);
    const std::uint64_t engine_classes = congruence.nr_classes();
    row.engine_ms = ms_since(engine_start);

    const auto naive_start = std::chrono::steady_clock::now();
    const ElementPartition closure = pair_closure(*s, pairs);
    const std::uint64_t naive_classes = closure.n_blocks();
    row.naive_ms = ms_since(naive_start);

    if (engine_classes != naive_classes) {
      throw std::logic_error("bench engines disagree on the class count");
    }
    row.nr_classes = engine_classes;
    row.ratio = row.naive_ms / std::max(row.engine_ms, 1e-6);
    rows.push_back(row);
    if (progress != nullptr) {
      *progress << "instance " << (i + 1) << "/" << config.instances
                << ": degree " << row.degree << ", |S| = " << row.size
                << ", classes = " << row.nr_classes << ", engine "
                << row.engine_ms << " ms, naive " << row.naive_ms
                << " ms, ratio " << row.ratio << "\n";
    }
  }
  return rows;
}

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out) {
  out << "degree,size,n_pairs,nr_classes,engine_ms,naive_ms,ratio\n";
  for (const BenchRow& row : rows) {
    out << row.degree << ',' << row.size << ',' << row.n_pairs << ','
        << row.nr_classes << ',' << row.engine_ms << ',' << row.naive_ms
        << ',' << row.ratio << "\n";
  }
}

double median_ratio(const std::vector<BenchRow>& rows, std::size_t min_size) {
  std::vector<double> ratios;
  for (const BenchRow& row : rows) {
    if (row.size >= min_size) {
      ratios.push_back(row.ratio);
    }
  }
  if (ratios.empty()) {
    return 0.0;
  }
  std::sort(ratios.begin(), ratios.end());
  const std::size_t mid = ratios.size() / 2;
  if (ratios.size() % 2 == 1) {
    return ratios[mid];
  }
  return (ratios[mid - 1] + ratios[mid]) / 2.0;
}

}  // namespace iscong
