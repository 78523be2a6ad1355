#include "quiverfin/algebra.hpp"

#include <algorithm>

namespace quiverfin {

void validate_spec(const AlgebraSpec& spec) {
  const int l = spec.blocks();
  if (l < 1) throw std::invalid_argument("algebra needs at least one block");
  for (i64 n : spec.block_sizes)
    if (n < 1) throw std::invalid_argument("block sizes must be positive");
  if (static_cast<int>(spec.ranks.size()) != l)
    throw std::invalid_argument("rank matrix must have one row per block");
  for (const auto& row : spec.ranks) {
    if (static_cast<int>(row.size()) != l)
      throw std::invalid_argument("rank matrix rows must have one entry per block");
    for (i64 r : row)
      if (r < 0) throw std::invalid_argument("ranks must be nonnegative");
  }
}

BipartiteSetting make_bipartite(QuiverSetting s, std::vector<int> sources,
                                std::vector<int> targets,
                                std::vector<std::pair<int, int>> pairing) {
  const int n = s.quiver.vertex_count();
  std::sort(sources.begin(), sources.end());
  std::sort(targets.begin(), targets.end());
  std::vector<int> side(n, -1);  // 0 = source, 1 = target
  if (static_cast<int>(sources.size() + targets.size()) != n)
    throw std::invalid_argument("sides must partition the vertex set");
  for (int v : sources) {
    if (v < 0 || v >= n || side[v] != -1)
      throw std::invalid_argument("sides must partition the vertex set");
    side[v] = 0;
  }
  for (int v : targets) {
    if (v < 0 || v >= n || side[v] != -1)
      throw std::invalid_argument("sides must partition the vertex set");
    side[v] = 1;
  }
  for (const Arrow& a : s.quiver.arrows())
    if (side[a.src] != 0 || side[a.dst] != 1)
      throw std::invalid_argument("every arrow must start at a source and end at a target");
  if (!pairing.empty()) {
    if (pairing.size() != sources.size() || sources.size() != targets.size())
      throw std::invalid_argument("pairing must match each source with one target");
    std::vector<char> sseen(n, 0), tseen(n, 0);
    for (const auto& [src, tgt] : pairing) {
      if (src < 0 || src >= n || side[src] != 0 || sseen[src])
        throw std::invalid_argument("pairing is not a bijection from the sources");
      if (tgt < 0 || tgt >= n || side[tgt] != 1 || tseen[tgt])
        throw std::invalid_argument("pairing is not a bijection onto the targets");
      sseen[src] = tseen[tgt] = 1;
      if (s.dim[src] != s.dim[tgt])
        throw std::invalid_argument("paired vertices must have equal weights");
    }
  }
  return {std::move(s), std::move(sources), std::move(targets), std::move(pairing)};
}

BipartiteSetting algebra_to_setting(const AlgebraSpec& spec) {
  validate_spec(spec);
  const int l = spec.blocks();
  std::vector<std::string> names;
  for (int i = 1; i <= l; ++i) names.push_back("t" + std::to_string(i));
  for (int i = 1; i <= l; ++i) names.push_back("b" + std::to_string(i));
  std::vector<Arrow> arrows;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (i64 t = 0; t < spec.ranks[i][j]; ++t)
        arrows.push_back({j, l + i});  // tj -> bi
  std::vector<i64> dim;
  for (int i = 0; i < l; ++i) dim.push_back(spec.block_sizes[i]);
  for (int i = 0; i < l; ++i) dim.push_back(spec.block_sizes[i]);
  QuiverSetting s(Quiver(std::move(names), std::move(arrows)),
                  DimVector(std::move(dim)));
  std::vector<int> sources, targets;
  std::vector<std::pair<int, int>> pairing;
  for (int i = 0; i < l; ++i) {
    sources.push_back(i);
    targets.push_back(l + i);
    pairing.push_back({i, l + i});
  }
  return make_bipartite(std::move(s), std::move(sources), std::move(targets),
                        std::move(pairing));
}

MultTable setting_to_algebra(const BipartiteSetting& bs) {
  if (bs.pairing.empty())
    throw std::invalid_argument("algebra reconstruction needs the source/target pairing");
  const Quiver& q = bs.setting.quiver;
  const DimVector& w = bs.setting.dim;

  // delta(source) = paired target
  std::vector<int> delta(q.vertex_count(), -1);
  for (const auto& [src, tgt] : bs.pairing) delta[src] = tgt;

  MultTable t;
  // Semisimple part: matrix units per target block.
  std::vector<int> block_base(q.vertex_count(), -1);
  for (int x : bs.targets) {
    block_base[x] = t.dim;
    const int n = static_cast<int>(w[x]);
    for (int p = 0; p < n; ++p)
      for (int qq = 0; qq < n; ++qq)
        t.labels.push_back("E[" + q.name(x) + "]_" + std::to_string(p + 1) + "," +
                           std::to_string(qq + 1));
    t.dim += n * n;
  }
  t.radical_begin = t.dim;
  // Radical part: one rectangular component per arrow.
  std::vector<int> arrow_base(q.arrow_count(), -1);
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    arrow_base[a] = t.dim;
    const int rows = static_cast<int>(w[ar.dst]);
    const int cols = static_cast<int>(w[ar.src]);
    for (int p = 0; p < rows; ++p)
      for (int qq = 0; qq < cols; ++qq)
        t.labels.push_back("F[" + q.name(ar.src) + "->" + q.name(ar.dst) + "#" +
                           std::to_string(a) + "]_" + std::to_string(p + 1) + "," +
                           std::to_string(qq + 1));
    t.dim += rows * cols;
  }

  t.table.assign(static_cast<size_t>(t.dim) * t.dim, -1);
  auto set = [&](int a, int b, int c) { t.table[a * t.dim + b] = static_cast<std::int32_t>(c); };

  // E^(x)_{p,q} E^(x)_{q,s} = E^(x)_{p,s}
  for (int x : bs.targets) {
    const int n = static_cast<int>(w[x]);
    const int base = block_base[x];
    for (int p = 0; p < n; ++p)
      for (int qq = 0; qq < n; ++qq)
        for (int ss = 0; ss < n; ++ss)
          set(base + p * n + qq, base + qq * n + ss, base + p * n + ss);
  }
  // E^(dst a)_{p,q} F^(a)_{q,s} = F^(a)_{p,s} and
  // F^(a)_{p,q} E^(delta(src a))_{q,s} = F^(a)_{p,s}
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrows()[a];
    const int rows = static_cast<int>(w[ar.dst]);
    const int cols = static_cast<int>(w[ar.src]);
    const int fbase = arrow_base[a];
    const int lbase = block_base[ar.dst];
    for (int p = 0; p < rows; ++p)
      for (int qq = 0; qq < rows; ++qq)
        for (int ss = 0; ss < cols; ++ss)
          set(lbase + p * rows + qq, fbase + qq * cols + ss, fbase + p * cols + ss);
    const int rbase = block_base[delta[ar.src]];
    const int rn = static_cast<int>(w[delta[ar.src]]);  // equals cols by pairing
    for (int p = 0; p < rows; ++p)
      for (int qq = 0; qq < cols; ++qq)
        for (int ss = 0; ss < rn; ++ss)
          set(fbase + p * cols + qq, rbase + qq * rn + ss, fbase + p * cols + ss);
  }

  for (int x : bs.targets) {
    const int n = static_cast<int>(w[x]);
    for (int p = 0; p < n; ++p)
      t.identity_components.push_back(block_base[x] + p * n + p);
  }
  return t;
}

bool table_is_associative(const MultTable& t) {
  const int n = t.dim;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const std::int32_t ab = t.table[a * n + b];
      for (int c = 0; c < n; ++c) {
        const std::int32_t bc = t.table[b * n + c];
        const std::int32_t left = ab < 0 ? -1 : t.table[ab * n + c];
        const std::int32_t right = bc < 0 ? -1 : t.table[a * n + bc];
        if (left != right) return false;
      }
    }
  return true;
}

bool table_radical_square_zero(const MultTable& t) {
  for (int a = t.radical_begin; a < t.dim; ++a)
    for (int b = t.radical_begin; b < t.dim; ++b)
      if (t.product(a, b) != -1) return false;
  return true;
}

bool table_has_identity(const MultTable& t) {
  for (int a = 0; a < t.dim; ++a) {
    int left_hits = 0, right_hits = 0;
    for (int e : t.identity_components) {
      const std::int32_t ea = t.product(e, a);
      if (ea == a) ++left_hits;
      else if (ea != -1) return false;
      const std::int32_t ae = t.product(a, e);
      if (ae == a) ++right_hits;
      else if (ae != -1) return false;
    }
    if (left_hits != 1 || right_hits != 1) return false;
  }
  return true;
}

AlgebraSpec recover_spec(const BipartiteSetting& bs) {
  if (bs.pairing.empty())
    throw std::invalid_argument("spec recovery needs the source/target pairing");
  const int l = static_cast<int>(bs.targets.size());
  std::vector<int> source_of_target(bs.setting.quiver.vertex_count(), -1);
  for (const auto& [src, tgt] : bs.pairing) source_of_target[tgt] = src;

  AlgebraSpec spec;
  for (int x : bs.targets) spec.block_sizes.push_back(bs.setting.dim[x]);
  spec.ranks.assign(l, std::vector<i64>(l, 0));
  for (const Arrow& a : bs.setting.quiver.arrows()) {
    int i = static_cast<int>(std::find(bs.targets.begin(), bs.targets.end(), a.dst) -
                             bs.targets.begin());
    int j = -1;
    for (int jj = 0; jj < l; ++jj)
      if (source_of_target[bs.targets[jj]] == a.src) j = jj;
    if (i >= l || j < 0) throw InternalError("bipartite arrow outside the pairing");
    ++spec.ranks[i][j];
  }
  validate_spec(spec);
  return spec;
}

Classification finitely_many_orbits(const AlgebraSpec& spec, const Limits& limits) {
  return classify(algebra_to_setting(spec).setting, false, limits);
}

OrConditionReport check_or_conditions(const BipartiteSetting& bs) {
  const Quiver& q = bs.setting.quiver;
  const DimVector& w = bs.setting.dim;
  OrConditionReport report;

  // c1: any loop, parallel pair, or simple cycle in the underlying graph.
  for (int v = 0; v < q.vertex_count(); ++v)
    if (q.has_loop(v))
      report.c1.violations.push_back("loop at " + q.name(v));
  for (int u = 0; u < q.vertex_count() && report.c1.violations.empty(); ++u)
    for (int v = u + 1; v < q.vertex_count(); ++v)
      if (q.pair_multiplicity(u, v) >= 2) {
        report.c1.violations.push_back("parallel arrows between " + q.name(u) +
                                       " and " + q.name(v));
        break;
      }
  if (report.c1.violations.empty()) {
    // simple-graph cycle test: edges >= vertices - components
    int simple_edges = 0;
    for (int u = 0; u < q.vertex_count(); ++u)
      for (int v = u + 1; v < q.vertex_count(); ++v)
        if (q.pair_multiplicity(u, v) > 0) ++simple_edges;
    const int comps = static_cast<int>(components(q).size());
    if (simple_edges > q.vertex_count() - comps)
      report.c1.violations.push_back("underlying graph contains a cycle");
  }
  report.c1.pass = report.c1.violations.empty();

  std::vector<int> out(q.vertex_count(), 0), in(q.vertex_count(), 0);
  for (const Arrow& a : q.arrows()) {
    ++out[a.src];
    ++in[a.dst];
  }

  for (int v = 0; v < q.vertex_count(); ++v) {
    if (w[v] < 2) continue;
    if (out[v] > 3)
      report.c2.violations.push_back("vertex " + q.name(v) + ": " +
                                     std::to_string(out[v]) +
                                     " arrows starting (limit 3)");
    if (in[v] > 3)
      report.c2.violations.push_back("vertex " + q.name(v) + ": " +
                                     std::to_string(in[v]) +
                                     " arrows terminating (limit 3)");
  }
  report.c2.pass = report.c2.violations.empty();

  std::vector<std::pair<int, int>> seen;
  for (const Arrow& a : q.arrows()) {
    if (w[a.src] < 2 || w[a.dst] < 2) continue;
    if (out[a.src] + in[a.dst] <= 4) continue;
    if (std::find(seen.begin(), seen.end(), std::pair{a.src, a.dst}) != seen.end())
      continue;
    seen.push_back({a.src, a.dst});
    report.c3.violations.push_back(
        "arrow " + q.name(a.src) + " -> " + q.name(a.dst) + ": " +
        std::to_string(out[a.src]) + " starting + " + std::to_string(in[a.dst]) +
        " terminating = " + std::to_string(out[a.src] + in[a.dst]) + " > 4");
  }
  report.c3.pass = report.c3.violations.empty();
  return report;
}

bool is_distributive(const AlgebraSpec& spec) {
  validate_spec(spec);
  for (const auto& row : spec.ranks)
    for (i64 r : row)
      if (r > 1) return false;
  return true;
}

}  // namespace quiverfin
