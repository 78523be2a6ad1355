// Acceptance suite: runs every criterion, prints one PASS/FAIL line each,
// exits nonzero if any fail. `acceptance --write-golden` regenerates the
// golden CLI outputs instead of comparing against them.

#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "quiverfin/algebra.hpp"
#include "quiverfin/classify.hpp"
#include "quiverfin/fq_orbits.hpp"
#include "quiverfin/io.hpp"
#include "test_util.hpp"

using namespace quiverfin;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool cond, const std::string& msg) {
  if (!cond) throw std::runtime_error(msg);
}

void run(const std::string& id, const std::string& label, double time_limit_s,
         const std::function<std::string()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  try {
    detail = body();
  } catch (const std::exception& e) {
    ok = false;
    detail = e.what();
  }
  const double dt =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (ok && time_limit_s > 0 && dt > time_limit_s) {
    ok = false;
    detail += " [exceeded " + std::to_string(time_limit_s) + " s limit]";
  }
  if (!ok) ++failures;
  std::printf("%s %s (%.2f s) %s: %s\n", ok ? "PASS" : "FAIL", id.c_str(), dt,
              label.c_str(), detail.c_str());
  std::fflush(stdout);
}

std::string c1_radical_nullity() {
  std::mt19937 rng(20260810);
  int instances = 0;
  for (const Quiver& fixed : qftest::all_euclidean_shapes()) {
    for (int variant = 0; variant < 4; ++variant) {
      Quiver q = variant == 0 ? fixed : qftest::reorient(fixed, rng);
      auto shape = analyze_euclidean(q);
      expect(shape.has_value(), "shape not recognized after reorientation");
      const DimVector& h = shape->radical;
      expect(tits_form(q, h) == 0, "q(h) != 0 on " + shape->type.name());
      for (int x = 0; x < q.vertex_count(); ++x)
        expect(bilinear_form(q, h, DimVector::basis(q.vertex_count(), x)) == 0,
               "(h, e_x) != 0 on " + shape->type.name());
      ++instances;
    }
  }
  return std::to_string(instances) + " instances, q(h) = 0 and (h, e_x) = 0 exactly";
}

std::string c2_dual_path_equivalence() {
  CrossCheckBounds bounds;
  bounds.max_vertices = 4;
  bounds.max_dim = 3;
  bounds.max_ordered_multiplicity = 2;
  bounds.max_loops_per_vertex = 1;
  CrossCheckReport rep = cross_check_suite(bounds);
  expect(rep.ok(), "exhaustive sweep found " +
                       std::to_string(rep.mismatches.size()) + " mismatches, first: " +
                       (rep.mismatches.empty() ? "" : rep.mismatches[0]));

  std::mt19937 rng(424242);
  int random_infinite = 0;
  for (int it = 0; it < 1000; ++it) {
    Quiver q = qftest::random_quiver(rng, 7);
    DimVector d = qftest::random_vector(rng, q.vertex_count(), 0, 6);
    QuiverSetting s(q, d);
    auto direct = find_euclidean_witness(s);
    Classification tits = decide_by_tits(s);
    expect(direct.has_value() == tits.infinite,
           "random instance disagreement:\n" + serialize_setting(s));
    if (tits.infinite) {
      ++random_infinite;
      validate_witness(*tits.witness, s);
      validate_witness(*direct, s);
    }
  }
  std::ostringstream out;
  out << rep.runs << " exhaustive runs over " << rep.settings
      << " canonical settings + 1000 random (" << random_infinite
      << " infinite), zero mismatches";
  return out.str();
}

std::string c3_minimality() {
  int shapes = 0;
  for (const Quiver& q : qftest::all_euclidean_shapes()) {
    QuiverSetting s = qftest::with_radical(q);
    expect(is_minimal_infinite(s), "not minimal: " + serialize_setting(s));
    for (int x = 0; x < q.vertex_count(); ++x) {
      QuiverSetting smaller = s;
      smaller.dim[x] -= 1;
      expect(!classify(smaller).infinite,
             "still infinite after decrementing " + q.name(x));
    }
    for (int a = 0; a < q.arrow_count(); ++a) {
      std::vector<Arrow> arrows = q.arrows();
      arrows.erase(arrows.begin() + a);
      QuiverSetting smaller(Quiver(q.names(), arrows), s.dim);
      expect(!classify(smaller).infinite, "still infinite after deleting an arrow");
    }
    ++shapes;
  }
  return std::to_string(shapes) +
         " shapes minimal infinite; every one-step-smaller setting finite";
}

std::string c4_counterexample() {
  QuiverSetting s = parse_setting(
      "vertices: t1 t2 t3 b1 b2\n"
      "arrow: t1 b1\narrow: t1 b2\narrow: t2 b2\narrow: t3 b2\n"
      "dim: t1=2 t2=1 t3=1 b1=1 b2=2\n");
  expect(!classify(s, true).infinite, "counterexample classified infinite");
  expect(!decide_by_tits(s).infinite, "quadratic path classified infinite");
  BipartiteSetting bs = make_bipartite(s, {0, 1, 2}, {3, 4});
  OrConditionReport rep = check_or_conditions(bs);
  expect(rep.c1.pass, "condition 1 failed");
  expect(rep.c2.pass, "condition 2 failed");
  expect(!rep.c3.pass, "condition 3 passed");
  expect(rep.c3.violations.size() == 1, "expected exactly one violation");
  expect(rep.c3.violations[0].find("t1 -> b2") != std::string::npos,
         "violation not at t1 -> b2: " + rep.c3.violations[0]);
  return "finite by both paths; exactly condition 3 fails, at arrow t1 -> b2";
}

std::string c5_algebra_round_trip() {
  std::mt19937 rng(555);
  long long specs = 0;
  long long max_dim_seen = 0;
  for (int l = 1; l <= 3; ++l) {
    std::vector<i64> blocks(l, 1);
    std::vector<std::vector<i64>> ranks(l, std::vector<i64>(l, 0));
    std::vector<int> perm(l);
    const int wstates = 1 << l;
    const int rcells = l * l;
    std::vector<int> rstate(rcells, 0);
    for (int w = 0; w < wstates; ++w) {
      for (int i = 0; i < l; ++i) blocks[i] = (w >> i & 1) ? 2 : 1;
      std::fill(rstate.begin(), rstate.end(), 0);
      while (true) {
        for (int c = 0; c < rcells; ++c) ranks[c / l][c % l] = rstate[c];

        // canonical under simultaneous block permutation
        bool canonical = true;
        for (int i = 0; i < l; ++i) perm[i] = i;
        while (std::next_permutation(perm.begin(), perm.end())) {
          std::vector<i64> pb(l);
          std::vector<i64> pr(rcells);
          for (int i = 0; i < l; ++i) pb[perm[i]] = blocks[i];
          for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) pr[perm[i] * l + perm[j]] = ranks[i][j];
          std::vector<i64> cr(rcells);
          for (int c = 0; c < rcells; ++c) cr[c] = ranks[c / l][c % l];
          if (std::pair(pb, pr) < std::pair(blocks, cr)) {
            canonical = false;
            break;
          }
        }

        if (canonical) {
          ++specs;
          AlgebraSpec spec{blocks, ranks};
          BipartiteSetting bs = algebra_to_setting(spec);
          MultTable t = setting_to_algebra(bs);
          max_dim_seen = std::max<long long>(max_dim_seen, t.dim);
          expect(table_is_associative(t), "table not associative");
          expect(table_radical_square_zero(t), "radical square nonzero");
          expect(table_has_identity(t), "table has no identity");

          AlgebraSpec back = recover_spec(bs);
          expect(back.block_sizes == spec.block_sizes && back.ranks == spec.ranks,
                 "direct recovery changed the spec");

          // scrambled relabeling, recovered up to block permutation
          const Quiver& q = bs.setting.quiver;
          const int n = q.vertex_count();
          std::vector<int> vperm(n);
          for (int i = 0; i < n; ++i) vperm[i] = i;
          std::shuffle(vperm.begin(), vperm.end(), rng);
          std::vector<std::string> names(n);
          std::vector<i64> dims(n);
          for (int i = 0; i < n; ++i) {
            names[vperm[i]] = q.name(i);
            dims[vperm[i]] = bs.setting.dim[i];
          }
          std::vector<Arrow> arrows;
          for (const Arrow& a : q.arrows())
            arrows.push_back({vperm[a.src], vperm[a.dst]});
          std::vector<int> sources, targets;
          std::vector<std::pair<int, int>> pairing;
          for (int src : bs.sources) sources.push_back(vperm[src]);
          for (int tgt : bs.targets) targets.push_back(vperm[tgt]);
          for (auto [src, tgt] : bs.pairing)
            pairing.push_back({vperm[src], vperm[tgt]});
          BipartiteSetting scrambled =
              make_bipartite(QuiverSetting(Quiver(names, arrows), DimVector(dims)),
                             sources, targets, pairing);
          AlgebraSpec back2 = recover_spec(scrambled);
          auto canon = [&](const AlgebraSpec& sp) {
            const int ll = sp.blocks();
            std::vector<int> p(ll);
            for (int i = 0; i < ll; ++i) p[i] = i;
            std::pair<std::vector<i64>, std::vector<i64>> best;
            bool first = true;
            do {
              std::vector<i64> b(ll);
              std::vector<i64> r(ll * ll);
              for (int i = 0; i < ll; ++i) b[p[i]] = sp.block_sizes[i];
              for (int i = 0; i < ll; ++i)
                for (int j = 0; j < ll; ++j) r[p[i] * ll + p[j]] = sp.ranks[i][j];
              auto cand = std::pair(std::move(b), std::move(r));
              if (first || cand < best) {
                best = std::move(cand);
                first = false;
              }
            } while (std::next_permutation(p.begin(), p.end()));
            return best;
          };
          expect(canon(back2) == canon(spec),
                 "scrambled recovery changed the spec class");
          if (specs % 20 == 0) {
            MultTable t2 = setting_to_algebra(scrambled);
            expect(t2.dim == t.dim, "scrambled table dimension differs");
            expect(table_is_associative(t2), "scrambled table not associative");
            expect(table_radical_square_zero(t2), "scrambled radical square nonzero");
            expect(table_has_identity(t2), "scrambled table has no identity");
          }
        }

        int c = rcells - 1;
        while (c >= 0 && rstate[c] == 2) rstate[c--] = 0;
        if (c < 0) break;
        ++rstate[c];
      }
    }
  }
  std::ostringstream out;
  out << specs << " canonical algebras, largest table dimension " << max_dim_seen
      << "; associative, rad^2 = 0, unital, recovery exact";
  return out.str();
}

std::string c6_finite_field_consistency() {
  struct Curated {
    const char* file;
    bool infinite;
    std::array<i64, 3> anchor;  // counts for q = 2, 3, 5; all zero = no anchor
  };
  const Curated list[] = {
      {"arrow_11.quiver", false, {2, 2, 2}},
      {"a_tilde_1.quiver", true, {4, 5, 7}},
      {"a_tilde_0.quiver", true, {2, 3, 5}},
      {"a3_path.quiver", false, {0, 0, 0}},
      {"a2_21.quiver", false, {0, 0, 0}},
      {"d4_dynkin.quiver", false, {0, 0, 0}},
      {"d_tilde_4.quiver", true, {0, 0, 0}},
  };
  const std::array<i64, 3> primes{2, 3, 5};
  std::ostringstream out;
  for (const Curated& c : list) {
    std::ifstream in(std::string(QF_CORPUS_DIR) + "/" + c.file);
    expect(in.good(), std::string("missing corpus file ") + c.file);
    std::stringstream buf;
    buf << in.rdbuf();
    QuiverSetting s = parse_setting(buf.str());
    expect(classify(s, true).infinite == c.infinite,
           std::string(c.file) + ": classification changed");
    std::array<i64, 3> counts{};
    for (int i = 0; i < 3; ++i) counts[i] = count_orbits(s, primes[i]);
    if (c.anchor != std::array<i64, 3>{0, 0, 0})
      expect(counts == c.anchor, std::string(c.file) + ": anchor counts moved");
    if (c.infinite)
      expect(counts[0] < counts[1] && counts[1] < counts[2],
             std::string(c.file) + ": counts not strictly growing");
    else
      expect(counts[0] == counts[1] && counts[1] == counts[2],
             std::string(c.file) + ": counts not constant");
    out << c.file << "(" << counts[0] << "," << counts[1] << "," << counts[2] << ") ";
  }
  return out.str();
}

std::string capture(const std::string& cmd, int* exit_code = nullptr) {
  const std::string full = cmd + " 2>/dev/null";
  FILE* pipe = popen(full.c_str(), "r");
  expect(pipe != nullptr, "cannot run " + cmd);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  if (exit_code) *exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::string c7_determinism(bool write_golden) {
  const fs::path corpus(QF_CORPUS_DIR);
  const fs::path golden(QF_GOLDEN_DIR);
  if (write_golden) fs::create_directories(golden);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(corpus))
    if (entry.path().extension() == ".quiver") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  expect(!files.empty(), "empty corpus");

  int compared = 0;
  for (const fs::path& f : files) {
    for (const std::string mode : {"classify", "witness"}) {
      const std::string cmd =
          std::string(QF_CLI_PATH) + " " + mode + " " + f.string();
      int code1 = -1, code2 = -1;
      const std::string first = capture(cmd, &code1);
      const std::string second = capture(cmd, &code2);
      expect(first == second && code1 == code2, "repeated runs differ for " + cmd);
      if (mode == "classify") {
        const bool infinite = first.rfind("INFINITE", 0) == 0;
        expect(code1 == (infinite ? 10 : 0), "exit code contract broken for " + cmd);
      } else {
        expect(code1 == 0, "exit code contract broken for " + cmd);
      }
      const fs::path gfile = golden / (f.stem().string() + "." + mode + ".txt");
      if (write_golden) {
        std::ofstream gout(gfile);
        gout << first;
      } else {
        std::ifstream in(gfile);
        expect(in.good(), "missing golden file " + gfile.string());
        std::stringstream buf;
        buf << in.rdbuf();
        expect(buf.str() == first, "output drifted from golden for " + cmd);
      }
      ++compared;
    }

    // the canonical serializer reproduces every corpus file byte for byte
    std::ifstream in(f);
    std::stringstream buf;
    buf << in.rdbuf();
    expect(serialize_setting(parse_setting(buf.str())) == buf.str(),
           "serializer does not reproduce " + f.string());

    // every printed witness re-validates from the raw file alone
    int vcode = -1;
    const std::string verified =
        capture(std::string(QF_CLI_PATH) + " verify-witness " + f.string(), &vcode);
    expect(vcode == 0, "verify-witness failed on " + f.string());
    expect(verified.rfind("WITNESS-OK", 0) == 0 || verified == "NONE\n",
           "unexpected verify-witness output on " + f.string());
  }

  int err_code = -1;
  capture(std::string(QF_CLI_PATH) + " classify " + (corpus / "no_such_file").string(),
          &err_code);
  expect(err_code == 2, "missing-file error must exit 2");
  capture(std::string(QF_CLI_PATH) + " frobnicate", &err_code);
  expect(err_code == 2, "unknown command must exit 2");

  int tits_code = -1;
  const std::string tits_out = capture(
      std::string(QF_CLI_PATH) + " tits " + (corpus / "e_tilde_8.quiver").string(),
      &tits_code);
  expect(tits_out == "0\n" && tits_code == 0, "tits on e_tilde_8 must print 0");

  return std::to_string(compared) + " command outputs byte-identical" +
         (write_golden ? " (golden files rewritten)" : " and equal to golden") +
         "; exit codes and serializer round trip hold";
}

}  // namespace

int main(int argc, char** argv) {
  const bool write_golden = argc > 1 && std::string(argv[1]) == "--write-golden";
  const std::string only = argc > 1 && !write_golden ? argv[1] : "";
  auto want = [&](const char* id) { return only.empty() || only == id; };

  if (want("C1")) run("C1", "radical-vector nullity", 1.0, c1_radical_nullity);
  if (want("C2")) run("C2", "dual-path equivalence", 300.0, c2_dual_path_equivalence);
  if (want("C3")) run("C3", "minimality at the radical vectors", 60.0, c3_minimality);
  if (want("C4")) run("C4", "counterexample reproduction", 0.0, c4_counterexample);
  if (want("C5")) run("C5", "algebra round trip", 60.0, c5_algebra_round_trip);
  if (want("C6"))
    run("C6", "finite-field consistency", 120.0, c6_finite_field_consistency);
  if (want("C7"))
    run("C7", "determinism over the corpus", 0.0,
        [&] { return c7_determinism(write_golden); });

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
