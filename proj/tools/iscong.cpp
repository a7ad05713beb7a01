// Copyright (c) 2026, iscong authors
// SPDX-License-Identifier: Apache-2.0
//
// Batch front end: compute congruences on inverse semigroups of partial
// permutations from files of generators and generating pairs.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "iscong/bench.hpp"
#include "iscong/congruence.hpp"
#include "iscong/io.hpp"
#include "iscong/lattice.hpp"
#include "iscong/mu.hpp"
#include "iscong/oracle.hpp"
#include "iscong/semigroup.hpp"

namespace {

using json = nlohmann::json;
using namespace iscong;

constexpr int exit_false = 1;
constexpr int exit_usage = 2;
constexpr int exit_parse = 3;
constexpr int exit_not_in_semigroup = 4;

struct Options {
  std::string semigroup_file;
  std::string pairs_file;
  std::string pairs_file2;
  std::string element;
  std::string element2;
  std::string engine = "fast";
  std::string dot_file;
  bool as_json = false;
};

std::shared_ptr<const InverseSemigroup> load_semigroup(const Options& opt) {
  const SemigroupInput input = load_semigroup_file(opt.semigroup_file);
  return std::make_shared<const InverseSemigroup>(input.degree,
                                                  input.generators);
}

void emit(const Options& opt, const json& machine, const std::string& human) {
  if (opt.as_json) {
    std::cout << machine.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

json elements_to_json(const std::vector<PartialPerm>& elements) {
  json out = json::array();
  for (const PartialPerm& p : elements) {
    out.push_back(format_images(p));
  }
  return out;
}

std::string elements_to_text(const std::vector<PartialPerm>& elements) {
  std::string out;
  for (const PartialPerm& p : elements) {
    out += format_cycles(p);
    out += "\n";
  }
  return out;
}

void write_dot(const std::string& path, const WordGraph& graph) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot write '" + path + "'");
  }
  out << graph.to_dot();
}

std::vector<PartialPerm> naive_block_of(const InverseSemigroup& s,
                                        const ElementPartition& closure,
                                        std::uint32_t index) {
  std::vector<PartialPerm> block;
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    if (closure.same(index, i)) {
      block.push_back(s.element(i));
    }
  }
  std::sort(block.begin(), block.end());
  return block;
}

int run_info(const Options& opt) {
  const auto s = load_semigroup(opt);
  json machine{{"degree", s->degree()},
               {"size", s->size()},
               {"n_idempotents", s->n_idempotents()},
               {"n_d_classes", s->d_class_count()}};
  json d_classes = json::array();
  std::string human =
      "degree          " + std::to_string(s->degree()) +
      "\nsize            " + std::to_string(s->size()) +
      "\nidempotents     " + std::to_string(s->n_idempotents()) +
      "\nD-classes       " + std::to_string(s->d_class_count()) + "\n";
  for (std::uint32_t id = 0; id < s->scc_count(); ++id) {
    const auto& scc = s->scc(id);
    if (scc.is_adjoined_identity) {
      continue;
    }
    const PartialPerm& rep = s->node_idempotent(scc.rep_node);
    d_classes.push_back({{"rep", format_images(rep)},
                         {"rank", rep.rank()},
                         {"n_idempotents", scc.nodes.size()},
                         {"group_order", scc.group.size()}});
    human += "D-class at " + format_cycles(rep) + ": rank " +
             std::to_string(rep.rank()) + ", " +
             std::to_string(scc.nodes.size()) + " idempotents, group order " +
             std::to_string(scc.group.size()) + "\n";
  }
  machine["d_classes"] = std::move(d_classes);
  if (!opt.dot_file.empty()) {
    write_dot(opt.dot_file, s->gamma());
  }
  emit(opt, machine, human);
  return 0;
}

json congruence_report_json(const Congruence& c, const std::string& engine) {
  json components = json::array();
  for (const auto& comp : c.components()) {
    components.push_back(
        {{"meet_idempotent", format_images(comp.meet_idempotent)},
         {"n_classes", comp.classes.size()},
         {"group_order", comp.group.size()},
         {"normal_order", comp.normal_subgroup.size()},
         {"quotient_order", comp.group.size() / comp.normal_subgroup.size()}});
  }
  return json{{"engine", engine},
              {"nr_classes", c.nr_classes()},
              {"components", std::move(components)}};
}

std::string congruence_report_text(const Congruence& c) {
  std::string out = "classes         " + std::to_string(c.nr_classes()) + "\n";
  for (const auto& comp : c.components()) {
    out += "component at " + format_cycles(comp.meet_idempotent) +
           ": |C| = " + std::to_string(comp.classes.size()) +
           ", |G| = " + std::to_string(comp.group.size()) +
           ", |N| = " + std::to_string(comp.normal_subgroup.size()) +
           ", |G/N| = " +
           std::to_string(comp.group.size() / comp.normal_subgroup.size()) +
           "\n";
  }
  return out;
}

int run_congruence(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  if (opt.engine == "naive") {
    const ElementPartition closure = pair_closure(*s, pairs);
    emit(opt, json{{"engine", "naive"}, {"nr_classes", closure.n_blocks()}},
         "classes         " + std::to_string(closure.n_blocks()) + "\n");
    return 0;
  }
  const Congruence c = Congruence::from_pairs(s, pairs);
  emit(opt, congruence_report_json(c, "fast"), congruence_report_text(c));
  return 0;
}

int run_trace(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  NodePartition trace;
  std::optional<Congruence> c;
  if (opt.engine == "naive") {
    trace = trace_of_closure(*s, pair_closure(*s, pairs));
  } else {
    c = Congruence::from_pairs(s, pairs);
    trace = c->trace();
  }
  json blocks = json::array();
  std::string human;
  for (const auto& block : trace.blocks()) {
    json json_block = json::array();
    std::string line = "{";
    bool first = true;
    for (std::uint32_t node : block) {
      if (s->identity_adjoined() && node == s->identity_node()) {
        continue;  // not an idempotent of S
      }
      const PartialPerm& e = s->node_idempotent(node);
      json_block.push_back(format_images(e));
      line += (first ? " " : ", ") + format_cycles(e);
      first = false;
    }
    line += " }\n";
    if (!json_block.empty()) {
      blocks.push_back(std::move(json_block));
      human += line;
    }
  }
  if (!opt.dot_file.empty() && c.has_value()) {
    write_dot(opt.dot_file, c->quotient_graph());
  }
  emit(opt, json{{"engine", opt.engine}, {"blocks", std::move(blocks)}},
       human);
  return 0;
}

int run_contains(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  const PartialPerm a = parse_pperm(opt.element, s->degree());
  const PartialPerm b = parse_pperm(opt.element2, s->degree());
  bool result = false;
  if (opt.engine == "naive") {
    const ElementPartition closure = pair_closure(*s, pairs);
    result = closure.same(s->require_index(a), s->require_index(b));
  } else {
    result = Congruence::from_pairs(s, pairs).contains(a, b);
  }
  emit(opt, json{{"result", result}}, result ? "true\n" : "false\n");
  return result ? 0 : exit_false;
}

int run_class_of(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  const PartialPerm x = parse_pperm(opt.element, s->degree());
  std::vector<PartialPerm> block;
  if (opt.engine == "naive") {
    const ElementPartition closure = pair_closure(*s, pairs);
    block = naive_block_of(*s, closure, s->require_index(x));
  } else {
    block = Congruence::from_pairs(s, pairs).class_of(x);
  }
  emit(opt,
       json{{"element", format_images(x)},
            {"size", block.size()},
            {"class", elements_to_json(block)}},
       elements_to_text(block));
  return 0;
}

int run_kernel(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  std::vector<PartialPerm> kernel;
  if (opt.engine == "naive") {
    const ElementPartition closure = pair_closure(*s, pairs);
    for (std::uint32_t index : kernel_of_closure(*s, closure)) {
      kernel.push_back(s->element(index));
    }
    std::sort(kernel.begin(), kernel.end());
  } else {
    kernel = Congruence::from_pairs(s, pairs).kernel_elements();
  }
  emit(opt, json{{"size", kernel.size()}, {"kernel", elements_to_json(kernel)}},
       elements_to_text(kernel));
  return 0;
}

int run_reps(const Options& opt) {
  const auto s = load_semigroup(opt);
  const auto pairs = load_pairs_file(opt.pairs_file, s->degree());
  std::vector<PartialPerm> reps;
  if (opt.engine == "naive") {
    const ElementPartition closure = pair_closure(*s, pairs);
    for (const auto& block : closure.blocks()) {
      PartialPerm least = s->element(block.front());
      for (std::uint32_t index : block) {
        least = std::min(least, s->element(index));
      }
      reps.push_back(least);
    }
    std::sort(reps.begin(), reps.end());
  } else {
    reps = Congruence::from_pairs(s, pairs).class_reps();
  }
  emit(opt, json{{"size", reps.size()}, {"reps", elements_to_json(reps)}},
       elements_to_text(reps));
  return 0;
}

int run_join_meet(const Options& opt, bool is_join) {
  const auto s = load_semigroup(opt);
  const auto pairs1 = load_pairs_file(opt.pairs_file, s->degree());
  const auto pairs2 = load_pairs_file(opt.pairs_file2, s->degree());
  if (opt.engine == "naive") {
    std::uint32_t blocks = 0;
    if (is_join) {
      auto all = pairs1;
      all.insert(all.end(), pairs2.begin(), pairs2.end());
      blocks = pair_closure(*s, all).n_blocks();
    } else {
      const ElementPartition c1 = pair_closure(*s, pairs1);
      const ElementPartition c2 = pair_closure(*s, pairs2);
      std::set<std::pair<std::uint32_t, std::uint32_t>> ids;
      for (std::uint32_t i = 0; i < s->size(); ++i) {
        ids.emplace(c1.block_of(i), c2.block_of(i));
      }
      blocks = static_cast<std::uint32_t>(ids.size());
    }
    emit(opt, json{{"engine", "naive"}, {"nr_classes", blocks}},
         "classes         " + std::to_string(blocks) + "\n");
    return 0;
  }
  const Congruence c1 = Congruence::from_pairs(s, pairs1);
  const Congruence c2 = Congruence::from_pairs(s, pairs2);
  const Congruence combined = is_join ? join(c1, c2) : meet(c1, c2);
  emit(opt, congruence_report_json(combined, "fast"),
       congruence_report_text(combined));
  return 0;
}

int run_mu(const Options& opt) {
  const auto s = load_semigroup(opt);
  const MuCongruence mu(s);
  json atoms = json::array();
  std::string human = "atoms          ";
  for (const auto& atom : mu.atoms().atoms()) {
    json points = json::array();
    human += " {";
    for (std::size_t i = 0; i < atom.size(); ++i) {
      points.push_back(atom[i] + 1);
      human += (i ? "," : "") + std::to_string(atom[i] + 1);
    }
    human += "}";
    atoms.push_back(std::move(points));
  }
  const auto centraliser = mu.centraliser();
  human +=
      "\ncentraliser     " + std::to_string(centraliser.size()) + " elements\n";
  for (const PartialPerm& p : centraliser) {
    human += "  " + format_cycles(p) + "\n";
  }
  human += std::string("mu is the identity congruence: ") +
           (mu.is_identity_congruence() ? "yes" : "no") + "\n";
  emit(opt,
       json{{"n_atoms", mu.atoms().n_atoms},
            {"atoms", std::move(atoms)},
            {"centraliser_size", centraliser.size()},
            {"centraliser", elements_to_json(centraliser)},
            {"is_identity", mu.is_identity_congruence()}},
       human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congruences on inverse semigroups of partial permutations"};
  app.require_subcommand(1);

  Options opt;
  BenchConfig bench_config;
  std::string csv_file;

  const auto add_common = [&](CLI::App* cmd, bool with_pairs) {
    cmd->add_option("semigroup", opt.semigroup_file,
                    ".sgp file: 'degree n' then one generator per line")
        ->required();
    if (with_pairs) {
      cmd->add_option("pairs", opt.pairs_file,
                      ".prs file: tab-separated element pairs")
          ->required();
    }
    cmd->add_flag("--json", opt.as_json, "machine-readable output");
    cmd->add_option("--engine", opt.engine, "fast|naive")
        ->check(CLI::IsMember({"fast", "naive"}));
    return cmd;
  };

  auto* info =
      add_common(app.add_subcommand("info", "semigroup structure"), false);
  info->add_option("--dot", opt.dot_file, "write the conjugation graph");

  add_common(
      app.add_subcommand("congruence",
                         "number of classes and component structure"),
      true);

  auto* trace = add_common(
      app.add_subcommand("trace", "partition of the idempotents"), true);
  trace->add_option("--dot", opt.dot_file, "write the quotient graph");

  auto* contains = add_common(
      app.add_subcommand("contains",
                         "is the pair in the congruence (exit 0/1)"),
      true);
  contains->add_option("a", opt.element, "first element")->required();
  contains->add_option("b", opt.element2, "second element")->required();

  auto* class_of = add_common(
      app.add_subcommand("class-of", "all elements related to one element"),
      true);
  class_of->add_option("x", opt.element, "element")->required();

  add_common(app.add_subcommand("kernel", "elements related to an idempotent"),
             true);
  add_common(app.add_subcommand("reps", "one representative per class"), true);

  auto* join_cmd = add_common(
      app.add_subcommand("join", "least congruence containing both"), true);
  join_cmd->add_option("pairs2", opt.pairs_file2, "second .prs file")
      ->required();
  auto* meet_cmd = add_common(
      app.add_subcommand("meet", "greatest congruence below both"), true);
  meet_cmd->add_option("pairs2", opt.pairs_file2, "second .prs file")
      ->required();

  auto* mu_cmd =
      app.add_subcommand("mu", "maximum idempotent-separating congruence");
  mu_cmd->add_option("semigroup", opt.semigroup_file, ".sgp file")->required();
  mu_cmd->add_flag("--json", opt.as_json, "machine-readable output");

  auto* bench = app.add_subcommand(
      "bench", "time the engine against the naive oracle on random input");
  bench->add_option("--seed", bench_config.seed, "random seed");
  bench->add_option("--instances", bench_config.instances, "instance count");
  bench->add_option("--degree-min", bench_config.degree_min, "least degree");
  bench->add_option("--degree-max", bench_config.degree_max,
                    "greatest degree");
  bench->add_option("--min-size", bench_config.min_size,
                    "least semigroup size");
  bench->add_option("--max-size", bench_config.max_size,
                    "greatest semigroup size");
  bench->add_option("--csv", csv_file, "write rows as CSV to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_usage;
  }

  try {
    if (info->parsed()) {
      return run_info(opt);
    }
    if (app.get_subcommand("congruence")->parsed()) {
      return run_congruence(opt);
    }
    if (trace->parsed()) {
      return run_trace(opt);
    }
    if (contains->parsed()) {
      return run_contains(opt);
    }
    if (class_of->parsed()) {
      return run_class_of(opt);
    }
    if (app.get_subcommand("kernel")->parsed()) {
      return run_kernel(opt);
    }
    if (app.get_subcommand("reps")->parsed()) {
      return run_reps(opt);
    }
    if (join_cmd->parsed()) {
      return run_join_meet(opt, true);
    }
    if (meet_cmd->parsed()) {
      return run_join_meet(opt, false);
    }
    if (mu_cmd->parsed()) {
      return run_mu(opt);
    }
    if (bench->parsed()) {
      const auto rows = run_bench(bench_config, &std::cerr);
      if (csv_file.empty()) {
        write_csv(rows, std::cout);
      } else {
        std::ofstream out(csv_file);
        if (!out) {
          throw ParseError("cannot write '" + csv_file + "'");
        }
        write_csv(rows, out);
      }
      std::cout << "median ratio (size >= " << bench_config.min_size
                << "): " << median_ratio(rows, bench_config.min_size) << "\n";
      return 0;
    }
  } catch (const NotInSemigroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_not_in_semigroup;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
