// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

namespace iscong {

struct BenchConfig {
  std::uint64_t seed = 0;
  std::size_t instances = 8;
  std::size_t degree_min = 6;
  std::size_t degree_max = 7;
  std::size_t min_size = 5000;
  std::size_t max_size = 200000;
  std::size_t pairs_min = 1;
  std::size_t pairs_max = 3;
};

struct BenchRow {
  std::size_t degree = 0;
  std::size_t size = 0;
  std::size_t n_pairs = 0;
  std::uint64_t nr_classes = 0;
  double engine_ms = 0.0;  // trace/normal-subgroup data structure
  double naive_ms = 0.0;   // pair-closure oracle
  double ratio = 0.0;      // naive_ms / engine_ms
};

/// One row per random instance; both engines must agree on the class count
/// (std::logic_error otherwise). Timings cover the congruence computation
/// only; enumerating the semigroup is shared and untimed.
std::vector<BenchRow> run_bench(const BenchConfig& config,
                                std::ostream* progress = nullptr);

void write_csv(const std::vector<BenchRow>& rows, std::ostream& out);

/// Median of the ratio column over rows with size >= min_size; 0 if none.
double median_ratio(const std::vector<BenchRow>& rows, std::size_t min_size);

}  // namespace iscong
