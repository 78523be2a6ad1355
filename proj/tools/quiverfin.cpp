#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quiverfin/classify.hpp"
#include "quiverfin/fq_orbits.hpp"
#include "quiverfin/io.hpp"

namespace {

using namespace quiverfin;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Limits limits_from_env() {
  Limits limits;
  if (const char* env = std::getenv("QUIVERFIN_BUDGET")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || value < 1)
      throw std::runtime_error("QUIVERFIN_BUDGET must be a positive integer");
    limits.subroot_budget = value;
    limits.witness_budget = value;
  }
  return limits;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiverfin: decides representation finiteness of quiver settings"};
  app.require_subcommand(1);
  int exit_code = 0;

  std::string file;
  bool checked = false;
  auto* cmd_classify = app.add_subcommand(
      "classify", "FINITE or INFINITE with a witness block; exit 0/10");
  cmd_classify->add_option("file", file)->required();
  cmd_classify->add_flag("--checked", checked, "also run the quadratic-form path");

  auto* cmd_witness =
      app.add_subcommand("witness", "Euclidean witness block or NONE");
  cmd_witness->add_option("file", file)->required();

  auto* cmd_subroot = app.add_subcommand("subroot", "subroot vector or NONE");
  cmd_subroot->add_option("file", file)->required();

  auto* cmd_tits = app.add_subcommand("tits", "value of the Tits form");
  cmd_tits->add_option("file", file)->required();

  auto* cmd_minimal = app.add_subcommand(
      "minimal", "MINIMAL-INFINITE, NOT-MINIMAL, or FINITE");
  cmd_minimal->add_option("file", file)->required();

  auto* cmd_verify = app.add_subcommand(
      "verify-witness", "recompute and re-validate the witness from the file");
  cmd_verify->add_option("file", file)->required();

  bool or_check = false, distributive = false;
  auto* cmd_algebra = app.add_subcommand(
      "algebra", "orbit finiteness of a radical-square-zero algebra");
  cmd_algebra->add_option("file", file)->required();
  cmd_algebra->add_flag("--or-check", or_check, "report the three conditions");
  cmd_algebra->add_flag("--distributive", distributive,
                        "report ideal-lattice distributivity");
  cmd_algebra->add_flag("--checked", checked, "also run the quadratic-form path");

  i64 prime = 0, orbit_budget = kDefaultOrbitBudget;
  auto* cmd_orbits = app.add_subcommand(
      "orbits", "count group orbits on the representation space over F_q");
  cmd_orbits->add_option("file", file)->required();
  cmd_orbits->add_option("--q", prime, "prime field size")->required();
  cmd_orbits->add_option("--budget", orbit_budget, "point/group budget");

  int max_vertices = 3, max_dim = 2, max_mult = 2, max_loops = 1;
  i64 max_arrows = -1;
  auto* cmd_selfcheck = app.add_subcommand(
      "selfcheck", "compare the two decision paths over all small settings");
  cmd_selfcheck->add_option("--max-vertices", max_vertices);
  cmd_selfcheck->add_option("--max-dim", max_dim);
  cmd_selfcheck->add_option("--max-multiplicity", max_mult,
                            "arrows per ordered vertex pair");
  cmd_selfcheck->add_option("--max-loops", max_loops);
  cmd_selfcheck->add_option("--max-arrows", max_arrows, "total arrows, -1 = unbounded");

  try {
    app.parse(argc, argv);
    const Limits limits = limits_from_env();

    if (cmd_classify->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      Classification c = classify(s, checked, limits);
      if (c.infinite) {
        std::cout << "INFINITE\n" << witness_report(*c.witness);
        exit_code = 10;
      } else {
        std::cout << "FINITE\n";
      }
    } else if (cmd_witness->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      auto w = find_euclidean_witness(s, limits);
      if (w)
        std::cout << witness_report(*w);
      else
        std::cout << "NONE\n";
    } else if (cmd_subroot->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      auto d = find_subroot(s, limits);
      if (d)
        std::cout << subroot_report({*d, tits_form(s.quiver, *d)}, s.quiver);
      else
        std::cout << "NONE\n";
    } else if (cmd_tits->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      std::cout << tits_form(s) << "\n";
    } else if (cmd_minimal->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      if (!classify(s, false, limits).infinite)
        std::cout << "FINITE\n";
      else
        std::cout << (is_minimal_infinite(s, limits) ? "MINIMAL-INFINITE\n"
                                                     : "NOT-MINIMAL\n");
    } else if (cmd_verify->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      auto w = find_euclidean_witness(s, limits);
      if (!w) {
        std::cout << "NONE\n";
      } else {
        validate_witness(*w, s);
        std::cout << "WITNESS-OK\n" << witness_report(*w);
      }
    } else if (cmd_algebra->parsed()) {
      AlgebraSpec spec = parse_algebra(read_file(file));
      BipartiteSetting bs = algebra_to_setting(spec);
      Classification c = classify(bs.setting, checked, limits);
      if (c.infinite)
        std::cout << "ORBITS INFINITE\n" << witness_report(*c.witness);
      else
        std::cout << "ORBITS FINITE\n";
      if (or_check) {
        OrConditionReport rep = check_or_conditions(bs);
        std::cout << "OR-CONDITIONS\n";
        const OrConditionReport::Item* items[3] = {&rep.c1, &rep.c2, &rep.c3};
        for (int i = 0; i < 3; ++i) {
          std::cout << "c" << i + 1 << (items[i]->pass ? " PASS" : " FAIL") << "\n";
          for (const auto& v : items[i]->violations) std::cout << "  " << v << "\n";
        }
      }
      if (distributive)
        std::cout << "DISTRIBUTIVE " << (is_distributive(spec) ? "yes" : "no") << "\n";
    } else if (cmd_orbits->parsed()) {
      QuiverSetting s = parse_setting(read_file(file), limits.dim_limit);
      std::cout << count_orbits(s, prime, orbit_budget) << "\n";
    } else if (cmd_selfcheck->parsed()) {
      CrossCheckBounds bounds;
      bounds.max_vertices = max_vertices;
      bounds.max_dim = max_dim;
      bounds.max_ordered_multiplicity = max_mult;
      bounds.max_loops_per_vertex = max_loops;
      bounds.max_total_arrows = max_arrows;
      CrossCheckReport rep = cross_check_suite(bounds, limits);
      std::cout << "SELFCHECK vertices<=" << max_vertices << " dim<=" << max_dim
                << " multiplicity<=" << max_mult << " loops<=" << max_loops << "\n";
      std::cout << "graphs " << rep.graphs << "\n";
      std::cout << "settings " << rep.settings << "\n";
      std::cout << "runs " << rep.runs << "\n";
      std::cout << "infinite " << rep.infinite << "\n";
      std::cout << "mismatches " << rep.mismatches.size() << "\n";
      for (const auto& m : rep.mismatches) std::cout << m << "\n";
      if (!rep.ok()) exit_code = 1;
    }
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
