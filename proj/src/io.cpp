// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0

#include "iscong/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace iscong {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

int parse_point(std::string_view token, std::size_t degree) {
  if (token.empty()) {
    throw ParseError("empty point");
  }
  std::size_t value = 0;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError("bad point '" + std::string(token) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > PartialPerm::max_degree) {
      throw ParseError("point out of range '" + std::string(token) + "'");
    }
  }
  if (value < 1 || value > degree) {
    throw ParseError("point " + std::to_string(value) +
                     " outside 1.." + std::to_string(degree));
  }
  return static_cast<int>(value) - 1;  // to 0-based
}

PartialPerm parse_image_list(std::string_view body, std::size_t degree) {
  std::vector<int> images;
  std::size_t start = 0;
  while (start <= body.size()) {
    const std::size_t comma = std::min(body.find(',', start), body.size());
    const std::string_view token = trim(body.substr(start, comma - start));
    if (token == "-") {
      images.push_back(-1);
    } else {
      images.push_back(parse_point(token, degree));
    }
    start = comma + 1;
    if (comma == body.size()) {
      break;
    }
  }
  if (images.size() != degree) {
    throw ParseError("image list has " + std::to_string(images.size()) +
                     " entries, expected " + std::to_string(degree));
  }
  try {
    return PartialPerm::from_images(degree, images);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

struct Group {
  bool is_cycle;
  std::vector<int> points;  // 0-based
};

PartialPerm parse_cycles_chains(std::string_view text, std::size_t degree) {
  std::vector<Group> groups;
  std::size_t i = 0;
  while (i < text.size()) {
    const char open = text[i];
    if (std::isspace(static_cast<unsigned char>(open))) {
      ++i;
      continue;
    }
    if (open != '(' && open != '[') {
      throw ParseError("expected '(' or '[' in '" + std::string(text) + "'");
    }
    const char close = (open == '(') ? ')' : ']';
    const std::size_t end = text.find(close, i + 1);
    if (end == std::string_view::npos) {
      throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
    }
    Group group{open == '(', {}};
    std::istringstream points(std::string(text.substr(i + 1, end - i - 1)));
    std::string token;
    while (points >> token) {
      const int p = parse_point(token, degree);
      if (std::find(group.points.begin(), group.points.end(), p) !=
          group.points.end()) {
        throw ParseError("repeated point " + std::to_string(p + 1));
      }
      group.points.push_back(p);
    }
    if (group.points.empty()) {
      throw ParseError("empty cycle or chain");
    }
    groups.push_back(std::move(group));
    i = end + 1;
  }
  if (groups.empty()) {
    throw ParseError("no cycles or chains in '" + std::string(text) + "'");
  }

  std::vector<bool> mentioned(degree, false);
  for (const Group& group : groups) {
    for (int p : group.points) {
      mentioned[static_cast<std::size_t>(p)] = true;
    }
  }

  PartialPerm result;
  bool first = true;
  for (const Group& group : groups) {
    std::vector<int> images(degree, -1);
    for (std::size_t p = 0; p < degree; ++p) {
      if (mentioned[p]) {
        images[p] = static_cast<int>(p);
      }
    }
    for (std::size_t k = 0; k + 1 < group.points.size(); ++k) {
      images[static_cast<std::size_t>(group.points[k])] = group.points[k + 1];
    }
    const int last = group.points.back();
    if (group.is_cycle) {
      images[static_cast<std::size_t>(last)] = group.points.front();
    } else {
      images[static_cast<std::size_t>(last)] = -1;
    }
    PartialPerm factor;
    try {
      factor = PartialPerm::from_images(degree, images);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    result = first ? factor : result * factor;
    first = false;
  }
  return result;
}

}  // namespace

PartialPerm parse_pperm(std::string_view text, std::size_t degree) {
  if (degree < 1 || degree > PartialPerm::max_degree) {
    throw ParseError("degree outside 1.." +
                     std::to_string(PartialPerm::max_degree));
  }
  const std::string_view body = trim(text);
  if (body.empty()) {
    throw ParseError("empty element literal");
  }
  if (body == "empty") {
    return PartialPerm(degree);
  }
  if (body == "identity") {
    return PartialPerm::identity(degree);
  }
  // Brackets with commas are an image list; everything else is cycles and
  // chains, except that at degree 1 a one-entry bracket like `[1]` or `[-]`
  // can only be an image list (a chain there would be the empty map, which
  // is spelled `empty`).
  const bool bracketed = body.front() == '[' && body.back() == ']';
  const bool has_comma = body.find(',') != std::string_view::npos;
  const bool degree_one_list =
      degree == 1 && bracketed &&
      body.find_first_of("[]", 1) == body.size() - 1;
  if (has_comma || degree_one_list) {
    if (!bracketed) {
      throw ParseError("unbalanced brackets in '" + std::string(body) + "'");
    }
    return parse_image_list(body.substr(1, body.size() - 2), degree);
  }
  return parse_cycles_chains(body, degree);
}

std::string format_images(const PartialPerm& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.degree(); ++i) {
    if (i > 0) {
      out += ',';
    }
    if (p.defined(i)) {
      out += std::to_string(p.image(i) + 1);
    } else {
      out += '-';
    }
  }
  out += ']';
  return out;
}

std::string format_cycles(const PartialPerm& p) {
  if (p.rank() == 0) {
    return "empty";
  }
  const PartialPerm inv = p.inverse();
  std::vector<bool> used(p.degree(), false);
  std::string out;

  // Chains start at domain points with no preimage.
  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (!p.defined(start) || inv.defined(start)) {
      continue;
    }
    out += '[';
    std::size_t point = start;
    bool first = true;
    while (true) {
      if (!first) {
        out += ' ';
      }
      out += std::to_string(point + 1);
      first = false;
      used[point] = true;
      if (!p.defined(point)) {
        break;
      }
      point = p.image(point);
    }
    out += ']';
  }

  for (std::size_t start = 0; start < p.degree(); ++start) {
    if (!p.defined(start) || used[start]) {
      continue;
    }
    out += '(';
    std::size_t point = start;
    bool first = true;
    do {
      if (!first) {
        out += ' ';
      }
      out += std::to_string(point + 1);
      first = false;
      used[point] = true;
      point = p.image(point);
    } while (point != start);
    out += ')';
  }
  return out;
}

SemigroupInput load_semigroup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  SemigroupInput input;
  std::string line;
  std::size_t line_no = 0;
  bool have_degree = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      continue;
    }
    if (!have_degree) {
      std::istringstream header{std::string(body)};
      std::string keyword;
      std::size_t degree = 0;
      if (!(header >> keyword >> degree) || keyword != "degree" ||
          degree < 1 || degree > PartialPerm::max_degree) {
        throw ParseError(path + ":" + std::to_string(line_no) +
                         ": expected 'degree n'");
      }
      input.degree = degree;
      have_degree = true;
      continue;
    }
    try {
      input.generators.push_back(parse_pperm(body, input.degree));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!have_degree) {
    throw ParseError(path + ": missing 'degree n' header");
  }
  if (input.generators.empty()) {
    throw ParseError(path + ": no generators");
  }
  return input;
}

std::vector<std::pair<PartialPerm, PartialPerm>> load_pairs_file(
    const std::string& path, std::size_t degree) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open '" + path + "'");
  }
  std::vector<std::pair<PartialPerm, PartialPerm>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') {
      continue;
    }
    const std::size_t tab = body.find('\t');
    if (tab == std::string_view::npos) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": expected two tab-separated elements");
    }
    try {
      pairs.emplace_back(parse_pperm(body.substr(0, tab), degree),
                         parse_pperm(body.substr(tab + 1), degree));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return pairs;
}

}  // namespace iscong
