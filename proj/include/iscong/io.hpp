// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "iscong/pperm.hpp"

namespace iscong {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a partial permutation literal of the given degree. Two notations
/// are accepted, plus the keywords `identity` and `empty`:
///
///  - image list: `[2,3,4,1]`, `[-,1,2,3]` (1-based, `-` outside the domain);
///  - cycles and chains: `(1 2 3 4)`, `[4 3 2 1]`, `[1 2 4] (3)`. A chain
///    `[i1 .. ik]` maps i1 -> i2 -> .. -> ik and drops ik from the domain;
///    `(i)` fixes i; points not mentioned anywhere are not in the domain.
///    Groups multiply left to right, each extended by the identity on the
///    points mentioned in the other groups.
///
/// Brackets with commas are an image list, without commas a chain.
PartialPerm parse_pperm(std::string_view text, std::size_t degree);

/// `[2,3,4,1]` style, 1-based, `-` for points outside the domain.
std::string format_images(const PartialPerm& p);

/// Cycle/chain notation: chains first (by starting point), then cycles (by
/// least point). The empty map prints as `empty`.
std::string format_cycles(const PartialPerm& p);

struct SemigroupInput {
  std::size_t degree = 0;
  std::vector<PartialPerm> generators;
};

/// `.sgp` file: `degree n` on the first line, then one generator per line.
/// Blank lines and lines starting with `#` are skipped.
SemigroupInput load_semigroup_file(const std::string& path);

/// `.prs` file: one pair per line, the two elements separated by a tab.
std::vector<std::pair<PartialPerm, PartialPerm>> load_pairs_file(
    const std::string& path, std::size_t degree);

}  // namespace iscong
