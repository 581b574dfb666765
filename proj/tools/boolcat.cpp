// Command-line front end: validate and check nets, compose and transpose
// them, run the equation suites, export DOT.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "boolcat/catalog.hpp"
#include "boolcat/dot_export.hpp"
#include "boolcat/json_io.hpp"
#include "boolcat/sexpr.hpp"
#include "boolcat/suite.hpp"

using namespace boolcat;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnexpectedVerdict = 1;
constexpr int kExitInputError = 2;

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw BoolcatError("cannot write " + path);
  out << text;
}

// Two-formula net as an arrow: (S0, S1) houses negate(S0) -> S1.
HomX as_arrow(const ParsedNet& p, const std::string& what) {
  if (p.sequent.size() != 2)
    throw BoolcatError(what + ": an arrow needs exactly two formulas in its sequent");
  return HomX{negate(p.sequent[0]), p.sequent[1], p.net};
}

int cmd_check(const std::string& file) {
  ParsedNet p = load_net_file(file);
  std::vector<Violation> violations =
      p.extended ? validate_extended(p.net) : validate(p.sequent, p.simple_links);
  if (!violations.empty()) {
    std::cout << "invalid " << (p.extended ? "extended " : "") << "prenet:\n";
    for (const auto& v : violations) std::cout << "  " << v.message << "\n";
    return kExitInputError;
  }
  if (p.extended) {
    bool ok = is_correct_extended(p.net);
    std::uint64_t total = 1ull << LeafTable(p.sequent).and_count();
    std::cout << (ok ? "correct" : "incorrect") << " ("
              << (ok ? "all " + std::to_string(total) + " prunings connected"
                     : "a pruning without a complete path exists")
              << ")\n";
    return kExitOk;
  }
  SimpleNet net(p.sequent, p.simple_links);
  std::uint64_t total = pruning_count(net);
  std::uint64_t linked = 0;
  for_each_pruning(net, [&](const Pruning&, const std::vector<int>&,
                            const std::vector<std::pair<int, int>>& restricted) {
    if (!restricted.empty()) ++linked;
    return true;
  });
  std::cout << (linked == total ? "correct" : "incorrect") << " (" << linked << "/" << total
            << " prunings linked)\n";
  return kExitOk;
}

int cmd_compose(const std::string& ffile, const std::string& gfile, bool extended,
                const std::string& out) {
  ParsedNet pf = load_net_file(ffile);
  ParsedNet pg = load_net_file(gfile);
  if (extended || pf.extended || pg.extended) {
    HomX f = as_arrow(pf, ffile);
    HomX g = as_arrow(pg, gfile);
    HomX r = hom_compose<ENetCat>(g, f);
    write_output(out, net_to_json(r.net).dump(2) + "\n");
  } else {
    Hom f{negate(pf.sequent[0]), pf.sequent[1], SimpleNet(pf.sequent, pf.simple_links)};
    Hom g{negate(pg.sequent[0]), pg.sequent[1], SimpleNet(pg.sequent, pg.simple_links)};
    Hom r = hom_compose<SNetCat>(g, f);
    write_output(out, net_to_json(r.net).dump(2) + "\n");
  }
  return kExitOk;
}

int cmd_transpose(const std::string& file, const std::string& shape, const std::string& out) {
  ParsedNet p = load_net_file(file);
  HomX h = as_arrow(p, file);
  HomX r = shape == "curry" ? transpose_curry<ENetCat>(h) : transpose_uncurry<ENetCat>(h);
  write_output(out, net_to_json(r.net).dump(2) + "\n");
  return kExitOk;
}

int cmd_sum(const std::string& ffile, const std::string& gfile, const std::string& out) {
  ParsedNet pf = load_net_file(ffile);
  ParsedNet pg = load_net_file(gfile);
  if (pf.extended || pg.extended)
    throw BoolcatError("sum acts on simple nets; the extended sum is the categorical one");
  SimpleNet f(pf.sequent, pf.simple_links);
  SimpleNet g(pg.sequent, pg.simple_links);
  write_output(out, net_to_json(sum(f, g)).dump(2) + "\n");
  return kExitOk;
}

int cmd_eliminate(const std::string& file, const std::string& anchor, bool all_orders,
                  const std::string& out) {
  ParsedNet p = load_net_file(file);
  if (all_orders) {
    auto results = all_elimination_results(p.net);
    ordered_json j;
    j["distinct_normal_forms"] = results.size();
    ordered_json arr = ordered_json::array();
    for (const auto& n : results) arr.push_back(net_to_json(n));
    j["nets"] = arr;
    write_output(out, j.dump(2) + "\n");
    return kExitOk;
  }
  if (anchor.empty()) throw BoolcatError("eliminate needs --anchor ID or --all-orders");
  if (anchor.size() < 2 || anchor[0] != 'k')
    throw BoolcatError("anchor ids look like k0, k1, ...");
  int id = std::atoi(anchor.c_str() + 1);
  write_output(out, net_to_json(eliminate_anchor(p.net, id)).dump(2) + "\n");
  return kExitOk;
}

int cmd_suite(const std::string& level, const std::string& category, const SamplerConfig& cfg,
              bool exhaustive, const std::string& json_out, const std::string& catalog_file) {
  std::vector<Equation> catalog;
  if (catalog_file.empty()) {
    catalog = builtin_catalog();
  } else {
    std::ifstream in(catalog_file);
    if (!in) throw BoolcatError("cannot open " + catalog_file);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    catalog = parse_catalog(text);
  }
  CatKind cat = category == "enet" ? CatKind::ENet : CatKind::SNet;
  SuiteReport report = run_suite(catalog, level, cat, cfg, exhaustive);
  std::cout << report_table(report);
  if (!json_out.empty()) write_output(json_out, report_json(report).dump(2) + "\n");
  return report.ok() ? kExitOk : kExitUnexpectedVerdict;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
  ParsedNet p = load_net_file(file);
  if (p.extended) {
    write_output(out, to_dot(p.net));
  } else {
    write_output(out, to_dot(SimpleNet(p.sequent, p.simple_links)));
  }
  return kExitOk;
}

int cmd_elab(const std::string& file, const std::string& category, const std::string& out) {
  std::ifstream in(file);
  if (!in) throw BoolcatError("cannot open " + file);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto forms = parse_sexprs(text);
  if (forms.size() != 1) throw BoolcatError(file + ": expected exactly one expression");
  ExprEnv env;
  MExpr e = expr_from_sexpr(forms[0], env);
  if (category == "enet") {
    HomX h = elaborate<ENetCat>(e);
    write_output(out, net_to_json(h.net).dump(2) + "\n");
  } else {
    Hom h = elaborate<SNetCat>(e);
    write_output(out, net_to_json(h.net).dump(2) + "\n");
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proof-net engine for classical propositional logic"};
  app.require_subcommand(1);

  std::string file, gfile, out, shape = "curry", anchor, category = "snet", level = "all";
  std::string json_out, catalog_file;
  bool extended = false, all_orders = false, exhaustive = false;
  SamplerConfig cfg;

  auto* check = app.add_subcommand("check", "validate a net and test correctness");
  check->add_option("file", file)->required();

  auto* compose = app.add_subcommand("compose", "compose two arrows (first, then second)");
  compose->add_option("f", file)->required();
  compose->add_option("g", gfile)->required();
  compose->add_flag("--extended", extended, "compose as extended nets");
  compose->add_option("-o,--out", out);

  auto* transpose = app.add_subcommand("transpose", "transpose an arrow");
  transpose->add_option("f", file)->required();
  transpose->add_option("--shape", shape)->check(CLI::IsMember({"curry", "uncurry"}));
  transpose->add_option("-o,--out", out);

  auto* sum_cmd = app.add_subcommand("sum", "union of two linkings over one sequent");
  sum_cmd->add_option("f", file)->required();
  sum_cmd->add_option("g", gfile)->required();
  sum_cmd->add_option("-o,--out", out);

  auto* eliminate = app.add_subcommand("eliminate", "eliminate anchors of an extended net");
  eliminate->add_option("f", file)->required();
  eliminate->add_option("--anchor", anchor, "anchor id (k0, k1, ...)");
  eliminate->add_flag("--all-orders", all_orders,
                      "report every normal form reachable by elimination orders");
  eliminate->add_option("-o,--out", out);

  auto* suite = app.add_subcommand("suite", "run the equation catalog");
  suite->add_option("level", level)
      ->check(CLI::IsMember({"all", "monoidal", "star", "mix", "B1", "B2", "LK", "B3", "B4",
                             "B5", "flat", "contractible", "collapse"}));
  suite->add_option("--category", category)->check(CLI::IsMember({"snet", "enet"}));
  suite->add_option("--bindings", cfg.bindings);
  suite->add_option("--depth", cfg.max_depth);
  suite->add_option("--atoms", cfg.num_atoms);
  suite->add_option("--seed", cfg.seed);
  suite->add_flag("--exhaustive", exhaustive, "sweep small object bindings exhaustively");
  suite->add_option("--json", json_out, "also write the report as JSON");
  suite->add_option("--catalog", catalog_file, "equation catalog file (default: built in)");

  auto* export_dot = app.add_subcommand("export-dot", "write a DOT drawing of a net");
  export_dot->add_option("f", file)->required();
  export_dot->add_option("out", out)->required();

  auto* elab = app.add_subcommand("elab", "elaborate a morphism expression file into a net");
  elab->add_option("f", file)->required();
  elab->add_option("--category", category)->check(CLI::IsMember({"snet", "enet"}));
  elab->add_option("-o,--out", out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return cmd_check(file);
    if (compose->parsed()) return cmd_compose(file, gfile, extended, out);
    if (transpose->parsed()) return cmd_transpose(file, shape, out);
    if (sum_cmd->parsed()) return cmd_sum(file, gfile, out);
    if (eliminate->parsed()) return cmd_eliminate(file, anchor, all_orders, out);
    if (suite->parsed()) return cmd_suite(level, category, cfg, exhaustive, json_out, catalog_file);
    if (export_dot->parsed()) return cmd_export_dot(file, out);
    if (elab->parsed()) return cmd_elab(file, category, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
