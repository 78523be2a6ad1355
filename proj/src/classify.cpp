#include "quiverfin/classify.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "quiverfin/io.hpp"

namespace quiverfin {

Classification classify(const QuiverSetting& s, bool checked, const Limits& limits) {
  auto w = find_euclidean_witness(s, limits);
  if (checked) {
    auto sub = find_subroot(s, limits);
    if (sub.has_value() != w.has_value()) {
      std::string msg = "decision paths disagree\n" + serialize_setting(s);
      msg += "euclidean witness: ";
      msg += w ? w->type.name() : "none";
      msg += "\nsubroot: ";
      if (sub) {
        for (int i = 0; i < sub->size(); ++i)
          msg += (i ? " " : "") + std::to_string((*sub)[i]);
      } else {
        msg += "none";
      }
      throw CrossCheckError(msg);
    }
    if (sub) {
      RadicalReduction red = reduce_to_radical(QuiverSetting(s.quiver, *sub));
      validate_witness(red.witness, s);
    }
  }
  if (!w) return {};
  return {true, std::move(*w)};
}

bool is_minimal_infinite(const QuiverSetting& s, const Limits& limits) {
  if (!classify(s, false, limits).infinite) return false;

  for (int x = 0; x < s.quiver.vertex_count(); ++x) {
    if (s.dim[x] < 1) continue;
    if (s.dim[x] == 1) {
      std::vector<int> keep;
      for (int v = 0; v < s.quiver.vertex_count(); ++v)
        if (v != x) keep.push_back(v);
      if (classify(restrict_setting(s, keep), false, limits).infinite) return false;
    } else {
      QuiverSetting t = s;
      t.dim[x] -= 1;
      if (classify(t, false, limits).infinite) return false;
    }
  }
  for (int a = 0; a < s.quiver.arrow_count(); ++a) {
    std::vector<Arrow> arrows = s.quiver.arrows();
    arrows.erase(arrows.begin() + a);
    QuiverSetting t(Quiver(s.quiver.names(), std::move(arrows)), s.dim);
    if (classify(t, false, limits).infinite) return false;
  }
  return true;
}

namespace {

struct GraphConfig {
  std::vector<int> loops;     // per vertex
  std::vector<int> pair_mult; // per unordered pair, lexicographic pair order

  friend auto operator<=>(const GraphConfig&, const GraphConfig&) = default;
};

struct ClassEnumerator {
  int v;
  std::vector<std::array<int, 2>> pairs;
  std::vector<int> pair_index;  // i * v + j -> pair position
  std::vector<std::vector<int>> perms;

  explicit ClassEnumerator(int nvertices) : v(nvertices) {
    pair_index.assign(v * v, -1);
    for (int i = 0; i < v; ++i)
      for (int j = i + 1; j < v; ++j) {
        pair_index[i * v + j] = static_cast<int>(pairs.size());
        pair_index[j * v + i] = static_cast<int>(pairs.size());
        pairs.push_back({i, j});
      }
    std::vector<int> p(v);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  GraphConfig apply(const std::vector<int>& perm, const GraphConfig& g) const {
    GraphConfig out;
    out.loops.assign(v, 0);
    out.pair_mult.assign(pairs.size(), 0);
    for (int i = 0; i < v; ++i) out.loops[perm[i]] = g.loops[i];
    for (size_t p = 0; p < pairs.size(); ++p)
      out.pair_mult[pair_index[perm[pairs[p][0]] * v + perm[pairs[p][1]]]] =
          g.pair_mult[p];
    return out;
  }

  bool connected(const GraphConfig& g) const {
    if (v == 1) return true;
    std::vector<char> seen(v, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < v; ++y) {
        if (y == x || seen[y]) continue;
        if (g.pair_mult[pair_index[x * v + y]] > 0) {
          seen[y] = 1;
          ++count;
          stack.push_back(y);
        }
      }
    }
    return count == v;
  }
};

}  // namespace

CrossCheckReport cross_check_suite(const CrossCheckBounds& bounds,
                                   const Limits& limits) {
  CrossCheckReport report;
  const int mo = bounds.max_ordered_multiplicity;
  const int max_pair = 2 * mo;

  for (int v = 1; v <= bounds.max_vertices; ++v) {
    ClassEnumerator en(v);
    const int npairs = static_cast<int>(en.pairs.size());
    GraphConfig g;
    g.loops.assign(v, 0);
    g.pair_mult.assign(npairs, 0);

    while (true) {
      i64 total = std::accumulate(g.loops.begin(), g.loops.end(), i64{0}) +
                  std::accumulate(g.pair_mult.begin(), g.pair_mult.end(), i64{0});
      bool in_bounds =
          bounds.max_total_arrows < 0 || total <= bounds.max_total_arrows;

      if (in_bounds && en.connected(g)) {
        // Keep only canonical representatives; collect automorphisms.
        bool canonical = true;
        std::vector<const std::vector<int>*> auts;
        for (const auto& perm : en.perms) {
          GraphConfig h = en.apply(perm, g);
          if (h < g) {
            canonical = false;
            break;
          }
          if (h == g) auts.push_back(&perm);
        }
        if (canonical) {
          ++report.graphs;

          // Up to two orientation samples per underlying class.
          std::vector<std::vector<Arrow>> samples;
          for (int sample = 0; sample < 2; ++sample) {
            std::vector<Arrow> arrows;
            for (int p = 0; p < npairs; ++p) {
              const int m = g.pair_mult[p];
              const int fwd = sample == 0 ? std::min(mo, m) : m - std::min(mo, m);
              const auto [i, j] = en.pairs[p];
              for (int t = 0; t < fwd; ++t) arrows.push_back({i, j});
              for (int t = 0; t < m - fwd; ++t) arrows.push_back({j, i});
            }
            for (int i = 0; i < v; ++i)
              for (int t = 0; t < g.loops[i]; ++t) arrows.push_back({i, i});
            if (samples.empty() || arrows != samples[0])
              samples.push_back(std::move(arrows));
          }
          std::vector<std::string> names;
          for (int i = 0; i < v; ++i) names.push_back("v" + std::to_string(i));
          std::vector<Quiver> quivers;
          for (auto& arrows : samples) quivers.emplace_back(names, arrows);

          std::vector<i64> d(v, 0);
          while (true) {
            bool dcanonical = true;
            for (const auto* perm : auts) {
              if (std::is_sorted(perm->begin(), perm->end())) continue;  // identity
              std::vector<i64> dd(v);
              for (int i = 0; i < v; ++i) dd[(*perm)[i]] = d[i];
              if (std::lexicographical_compare(dd.begin(), dd.end(), d.begin(),
                                               d.end())) {
                dcanonical = false;
                break;
              }
            }
            if (dcanonical) {
              ++report.settings;
              for (const Quiver& quiver : quivers) {
                QuiverSetting qs(quiver, DimVector(d));
                const bool direct = find_euclidean_witness(qs, limits).has_value();
                const auto sub = find_subroot(qs, limits);
                ++report.runs;
                if (direct) ++report.infinite;
                if (direct != sub.has_value()) {
                  if (report.mismatches.size() < 16) {
                    std::string msg = serialize_setting(qs);
                    msg += direct ? "euclidean witness found, no subroot"
                                  : "subroot found, no euclidean witness";
                    report.mismatches.push_back(std::move(msg));
                  }
                } else if (sub && report.runs % 64 == 0) {
                  // Periodically exercise the full reduction on top of the
                  // verdict comparison.
                  RadicalReduction red =
                      reduce_to_radical(QuiverSetting(qs.quiver, *sub));
                  validate_witness(red.witness, qs);
                }
              }
            }
            int i = v - 1;
            while (i >= 0 && d[i] == bounds.max_dim) {
              d[i] = 0;
              --i;
            }
            if (i < 0) break;
            ++d[i];
          }
        }
      }

      // next graph config (odometer over loops then pair multiplicities)
      int i = 0;
      bool advanced = false;
      for (; i < v; ++i) {
        if (g.loops[i] < bounds.max_loops_per_vertex) {
          ++g.loops[i];
          for (int j = 0; j < i; ++j) g.loops[j] = 0;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        for (int j = 0; j < v; ++j) g.loops[j] = 0;
        for (i = 0; i < npairs; ++i) {
          if (g.pair_mult[i] < max_pair) {
            ++g.pair_mult[i];
            for (int j = 0; j < i; ++j) g.pair_mult[j] = 0;
            advanced = true;
            break;
          }
        }
      }
      if (!advanced) break;
    }
  }
  return report;
}

}  // namespace quiverfin
