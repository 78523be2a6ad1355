#include "quiverfin/tits_search.hpp"

#include <algorithm>

namespace quiverfin {

namespace {

constexpr i64 kSubrootCap = 6;

// Connected components of the induced subgraph on a vertex subset,
// returned as ambient index lists ordered by smallest member.
std::vector<std::vector<int>> subset_components(const Quiver& q,
                                                const std::vector<char>& in) {
  const int n = q.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (!in[root] || comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{root}, members;
    comp[root] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : q.simple_neighbors(v))
        if (in[w] && comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace

std::optional<DimVector> find_subroot(const QuiverSetting& s, const Limits& limits) {
  const Quiver& q = s.quiver;
  const int n = q.vertex_count();
  if (n == 0) return std::nullopt;

  std::vector<i64> cap(n);
  for (int x = 0; x < n; ++x) cap[x] = std::min(s.dim[x], kSubrootCap);

  i64 budget = limits.subroot_budget;
  auto charge = [&]() {
    if (--budget < 0) throw BudgetError("subroot search budget exceeded");
  };

  std::vector<char> in(n, 0);
  std::vector<int> pos(n, -1);

  // Connected supports enumerated by size then lexicographically on the
  // ascending vertex list; within a support, vectors lexicographically.
  for (int k = 1; k <= n; ++k) {
    std::vector<int> supp(k);
    for (int i = 0; i < k; ++i) supp[i] = i;
    while (true) {
      charge();
      bool usable = true;
      for (int v : supp)
        if (cap[v] == 0) {
          usable = false;
          break;
        }
      if (usable) {
        std::fill(in.begin(), in.end(), 0);
        for (int v : supp) in[v] = 1;
        usable = subset_components(q, in).size() == 1;
      }
      if (usable) {
        std::fill(pos.begin(), pos.end(), -1);
        for (int i = 0; i < k; ++i) pos[supp[i]] = i;
        std::vector<std::pair<int, int>> arrows;
        for (const Arrow& a : q.arrows())
          if (pos[a.src] >= 0 && pos[a.dst] >= 0)
            arrows.push_back({pos[a.src], pos[a.dst]});

        std::vector<i64> val(k, 1);
        while (true) {
          charge();
          i64 qv = 0;
          for (int i = 0; i < k; ++i) qv += val[i] * val[i];
          for (const auto& [a, b] : arrows) qv -= val[a] * val[b];
          if (qv <= 0) {
            DimVector out = DimVector::zeros(n);
            for (int i = 0; i < k; ++i) out[supp[i]] = val[i];
            return out;
          }
          int i = k - 1;
          while (i >= 0 && val[i] == cap[supp[i]]) {
            val[i] = 1;
            --i;
          }
          if (i < 0) break;
          ++val[i];
        }
      }
      // next k-combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && supp[i] == n - k + i) --i;
      if (i < 0) break;
      ++supp[i];
      for (int j = i + 1; j < k; ++j) supp[j] = supp[j - 1] + 1;
    }
  }
  return std::nullopt;
}

RadicalReduction reduce_to_radical(const QuiverSetting& s) {
  const Quiver& q = s.quiver;
  if (!s.dim.nonzero())
    throw std::invalid_argument("reduce_to_radical requires a nonzero vector");
  if (tits_form(s) > 0)
    throw std::invalid_argument("reduce_to_radical requires q(d) <= 0");

  DimVector d = s.dim;
  std::vector<int> comp;

  while (true) {
    // Restrict to a support component with q <= 0. One exists because q is
    // additive across the components of the support.
    std::vector<char> in(q.vertex_count(), 0);
    for (int x = 0; x < q.vertex_count(); ++x) in[x] = d[x] > 0;
    auto comps = subset_components(q, in);
    comp.clear();
    for (const auto& c : comps) {
      DimVector restricted = DimVector::zeros(q.vertex_count());
      for (int x : c) restricted[x] = d[x];
      if (tits_form(q, restricted) <= 0) {
        comp = c;
        d = restricted;
        break;
      }
    }
    if (comp.empty())
      throw InternalError("no support component with q <= 0; additivity violated");

    // Loops or multiple arrows inside the component give an A~ witness.
    for (int x : comp) {
      auto loops = q.loops_at(x);
      if (loops.empty()) continue;
      Quiver pattern({"a0"}, std::vector<Arrow>{{0, 0}});
      Embedding emb(std::move(pattern), q, {x}, {loops[0]});
      EuclideanWitness w{{EuclideanFamily::A, 0}, std::move(emb), DimVector({1})};
      return {std::move(w), d[x]};
    }
    for (size_t i = 0; i < comp.size(); ++i)
      for (size_t j = i + 1; j < comp.size(); ++j) {
        int x = comp[i], y = comp[j];
        auto arrows = q.arrows_between(x, y);
        if (arrows.size() < 2) continue;
        std::vector<Arrow> pa;
        for (int t = 0; t < 2; ++t) {
          const Arrow& a = q.arrows()[arrows[t]];
          pa.push_back(a.src == x ? Arrow{0, 1} : Arrow{1, 0});
        }
        Quiver pattern({"a0", "a1"}, std::move(pa));
        Embedding emb(std::move(pattern), q, {x, y}, {arrows[0], arrows[1]});
        EuclideanWitness w{{EuclideanFamily::A, 1}, std::move(emb), DimVector({1, 1})};
        return {std::move(w), std::min(d[x], d[y])};
      }

    // Subtraction step of the reduction.
    const i64 qv = tits_form(q, d);
    int pick = -1;
    for (int x : comp) {
      if (bilinear_form(q, d, DimVector::basis(q.vertex_count(), x)) >= qv + 1) {
        pick = x;
        break;
      }
    }
    if (pick < 0) break;
    d[pick] -= 1;
    if (tits_form(q, d) > 0)
      throw InternalError("q(d) <= 0 loop invariant violated during reduction");
  }

  // Exit: q(d) = 0 and (d, e_x) = 0 for every support vertex, the support
  // quiver is Euclidean and d is an integer multiple of its radical vector.
  if (tits_form(q, d) != 0)
    throw InternalError("reduction finished with q(d) != 0");
  for (int x : comp)
    if (bilinear_form(q, d, DimVector::basis(q.vertex_count(), x)) != 0)
      throw InternalError("reduction finished with (d, e_x) != 0");

  InducedSubquiver sub = induced_subquiver(q, comp);
  auto shape = analyze_euclidean(sub.quiver);
  if (!shape)
    throw InternalError("reduced support quiver is not Euclidean");
  i64 m = 0;
  for (size_t i = 0; i < comp.size(); ++i) {
    i64 hv = shape->radical[static_cast<int>(i)];
    i64 dv = d[comp[i]];
    if (hv <= 0 || dv % hv != 0)
      throw InternalError("reduced vector is not a multiple of the radical vector");
    i64 mi = dv / hv;
    if (m == 0) m = mi;
    if (mi != m)
      throw InternalError("reduced vector is not a multiple of the radical vector");
  }
  if (m < 1) throw InternalError("reduction produced a nonpositive multiplier");

  // Pattern quiver: the support subquiver relabeled by canonical positions.
  Quiver pattern(shape->positions, sub.quiver.arrows());
  Embedding emb(std::move(pattern), q, sub.vertex_of, sub.arrow_of);
  return {{shape->type, std::move(emb), shape->radical}, m};
}

Classification decide_by_tits(const QuiverSetting& s, const Limits& limits) {
  auto sub = find_subroot(s, limits);
  if (!sub) return {};
  RadicalReduction red = reduce_to_radical(QuiverSetting(s.quiver, *sub));
  validate_witness(red.witness, s);
  return {true, std::move(red.witness)};
}

}  // namespace quiverfin
