#include "quiverfin/euclid.hpp"

#include <algorithm>
#include <functional>

namespace quiverfin {

int EuclideanType::vertex_count() const {
  switch (family) {
    case EuclideanFamily::A:
    case EuclideanFamily::D:
      return n + 1;
    case EuclideanFamily::E6:
      return 7;
    case EuclideanFamily::E7:
      return 8;
    case EuclideanFamily::E8:
      return 9;
  }
  return 0;
}

std::string EuclideanType::name() const {
  switch (family) {
    case EuclideanFamily::A:
      return "A~" + std::to_string(n);
    case EuclideanFamily::D:
      return "D~" + std::to_string(n);
    case EuclideanFamily::E6:
      return "E~6";
    case EuclideanFamily::E7:
      return "E~7";
    case EuclideanFamily::E8:
      return "E~8";
  }
  return "?";
}

namespace {

// Unique path between two vertices of a tree (simple underlying graph).
std::vector<int> tree_path(const Quiver& q, int from, int to) {
  std::vector<int> parent(q.vertex_count(), -2);
  std::vector<int> stack{from};
  parent[from] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (v == to) break;
    for (int w : q.simple_neighbors(v))
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  std::vector<int> path;
  for (int x = to; x != -1; x = parent[x]) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

struct ArmInfo {
  std::vector<int> vertices;  // outward from the branch vertex
};

EuclideanShape make_shape(EuclideanType t, int vertex_count,
                          const std::vector<std::pair<int, std::string>>& named,
                          const std::vector<std::pair<int, i64>>& hvals) {
  EuclideanShape shape;
  shape.type = t;
  shape.positions.assign(vertex_count, "");
  std::vector<i64> h(vertex_count, 0);
  for (const auto& [v, name] : named) shape.positions[v] = name;
  for (const auto& [v, val] : hvals) h[v] = val;
  shape.radical = DimVector(std::move(h));
  return shape;
}

}  // namespace

std::optional<EuclideanShape> analyze_euclidean(const Quiver& q) {
  const int v = q.vertex_count();
  const int e = q.arrow_count();
  if (v == 0) return std::nullopt;

  if (v == 1) {
    if (e == 1 && q.arrows()[0] == Arrow{0, 0})
      return make_shape({EuclideanFamily::A, 0}, 1, {{0, "a0"}}, {{0, 1}});
    return std::nullopt;
  }
  if (q.has_loops()) return std::nullopt;

  if (v == 2) {
    if (e == 2 && q.pair_multiplicity(0, 1) == 2)
      return make_shape({EuclideanFamily::A, 1}, 2, {{0, "a0"}, {1, "a1"}},
                        {{0, 1}, {1, 1}});
    return std::nullopt;
  }
  if (q.has_multiple_arrows()) return std::nullopt;
  if (!q.connected()) return std::nullopt;

  if (e == v) {
    for (int x = 0; x < v; ++x)
      if (q.simple_degree(x) != 2) return std::nullopt;
    // A single cycle. Walk it from vertex 0 toward its smaller neighbor.
    std::vector<std::pair<int, std::string>> named;
    std::vector<std::pair<int, i64>> hvals;
    int prev = 0;
    int cur = std::min(q.simple_neighbors(0)[0], q.simple_neighbors(0)[1]);
    named.push_back({0, "a0"});
    hvals.push_back({0, 1});
    int idx = 1;
    while (cur != 0) {
      named.push_back({cur, "a" + std::to_string(idx)});
      hvals.push_back({cur, 1});
      ++idx;
      const auto& ns = q.simple_neighbors(cur);
      int next = (ns[0] == prev) ? ns[1] : ns[0];
      prev = cur;
      cur = next;
    }
    if (idx != v) return std::nullopt;
    return make_shape({EuclideanFamily::A, v - 1}, v, named, hvals);
  }

  if (e != v - 1) return std::nullopt;
  // Connected with e = v - 1: a tree.
  std::vector<int> branch;
  for (int x = 0; x < v; ++x)
    if (q.simple_degree(x) >= 3) branch.push_back(x);

  if (branch.size() == 1) {
    const int b = branch[0];
    const int deg = q.simple_degree(b);
    if (deg == 4) {
      if (v != 5) return std::nullopt;
      const auto& ls = q.simple_neighbors(b);
      for (int w : ls)
        if (q.simple_degree(w) != 1) return std::nullopt;
      static const char* leaf_names[4] = {"p1", "p2", "q1", "q2"};
      std::vector<std::pair<int, std::string>> named{{b, "s1"}};
      std::vector<std::pair<int, i64>> hvals{{b, 2}};
      for (int i = 0; i < 4; ++i) {
        named.push_back({ls[i], leaf_names[i]});
        hvals.push_back({ls[i], 1});
      }
      return make_shape({EuclideanFamily::D, 4}, v, named, hvals);
    }
    if (deg != 3) return std::nullopt;
    // Three arms hanging off the single branch vertex.
    std::vector<ArmInfo> arms;
    for (int n0 : q.simple_neighbors(b)) {
      ArmInfo arm;
      int prev = b, cur = n0;
      while (true) {
        arm.vertices.push_back(cur);
        if (q.simple_degree(cur) == 1) break;
        const auto& ns = q.simple_neighbors(cur);
        int next = (ns[0] == prev) ? ns[1] : ns[0];
        prev = cur;
        cur = next;
      }
      arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const ArmInfo& x, const ArmInfo& y) {
      if (x.vertices.size() != y.vertices.size())
        return x.vertices.size() < y.vertices.size();
      return x.vertices[0] < y.vertices[0];
    });
    const auto len = [&](int i) { return static_cast<int>(arms[i].vertices.size()); };
    EuclideanType type;
    std::vector<std::string> prefixes;
    std::vector<std::vector<i64>> values;
    i64 center_h = 0;
    if (len(0) == 2 && len(1) == 2 && len(2) == 2) {
      type = {EuclideanFamily::E6, 6};
      center_h = 3;
      prefixes = {"a", "b", "c"};
      values = {{2, 1}, {2, 1}, {2, 1}};
    } else if (len(0) == 1 && len(1) == 3 && len(2) == 3) {
      type = {EuclideanFamily::E7, 7};
      center_h = 4;
      prefixes = {"s", "a", "b"};
      values = {{2}, {3, 2, 1}, {3, 2, 1}};
    } else if (len(0) == 1 && len(1) == 2 && len(2) == 5) {
      type = {EuclideanFamily::E8, 8};
      center_h = 6;
      prefixes = {"s", "m", "a"};
      values = {{3}, {4, 2}, {5, 4, 3, 2, 1}};
    } else {
      return std::nullopt;
    }
    std::vector<std::pair<int, std::string>> named{{b, "z"}};
    std::vector<std::pair<int, i64>> hvals{{b, center_h}};
    for (int k = 0; k < 3; ++k)
      for (int j = 0; j < len(k); ++j) {
        named.push_back({arms[k].vertices[j], prefixes[k] + std::to_string(j + 1)});
        hvals.push_back({arms[k].vertices[j], values[k][j]});
      }
    return make_shape(type, v, named, hvals);
  }

  if (branch.size() == 2) {
    int u = branch[0], w = branch[1];
    if (q.simple_degree(u) != 3 || q.simple_degree(w) != 3) return std::nullopt;
    std::vector<int> path = tree_path(q, u, w);
    auto off_path_leaves = [&](int end, int path_nbr) {
      std::vector<int> out;
      for (int x : q.simple_neighbors(end))
        if (x != path_nbr) out.push_back(x);
      return out;
    };
    std::vector<int> uleaves = off_path_leaves(u, path[1]);
    std::vector<int> wleaves = off_path_leaves(w, path[path.size() - 2]);
    if (uleaves.size() != 2 || wleaves.size() != 2) return std::nullopt;
    for (int x : uleaves)
      if (q.simple_degree(x) != 1) return std::nullopt;
    for (int x : wleaves)
      if (q.simple_degree(x) != 1) return std::nullopt;
    if (v != static_cast<int>(path.size()) + 4) return std::nullopt;
    std::vector<std::pair<int, std::string>> named;
    std::vector<std::pair<int, i64>> hvals;
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
      named.push_back({path[i], "s" + std::to_string(i + 1)});
      hvals.push_back({path[i], 2});
    }
    named.push_back({uleaves[0], "p1"});
    named.push_back({uleaves[1], "p2"});
    named.push_back({wleaves[0], "q1"});
    named.push_back({wleaves[1], "q2"});
    for (int x : uleaves) hvals.push_back({x, 1});
    for (int x : wleaves) hvals.push_back({x, 1});
    return make_shape({EuclideanFamily::D, v - 1}, v, named, hvals);
  }

  return std::nullopt;
}

std::optional<EuclideanType> recognize_euclidean(const Quiver& q) {
  auto shape = analyze_euclidean(q);
  if (!shape) return std::nullopt;
  return shape->type;
}

DimVector radical_vector(EuclideanType t, const Quiver& shape) {
  auto analyzed = analyze_euclidean(shape);
  if (!analyzed || !(analyzed->type == t))
    throw std::invalid_argument("quiver is not of Euclidean type " + t.name());
  return analyzed->radical;
}

namespace {

// Accumulates a pattern quiver together with its embedding into the ambient
// quiver. Pattern arrows copy the orientation of the ambient arrow chosen
// for each edge.
struct PatternBuilder {
  const Quiver& ambient;
  std::vector<std::string> positions;
  std::vector<i64> h;
  std::vector<int> images;
  std::vector<Arrow> pattern_arrows;
  std::vector<int> arrow_images;

  explicit PatternBuilder(const Quiver& amb) : ambient(amb) {}

  int add_vertex(std::string pos, i64 hval, int ambient_vertex) {
    positions.push_back(std::move(pos));
    h.push_back(hval);
    images.push_back(ambient_vertex);
    return static_cast<int>(positions.size()) - 1;
  }

  void add_edge(int pi, int pj, int ambient_arrow) {
    const Arrow& a = ambient.arrows()[ambient_arrow];
    Arrow pa;
    if (a.src == images[pi] && a.dst == images[pj])
      pa = {pi, pj};
    else if (a.src == images[pj] && a.dst == images[pi])
      pa = {pj, pi};
    else
      throw InternalError("pattern edge does not match the ambient arrow");
    pattern_arrows.push_back(pa);
    arrow_images.push_back(ambient_arrow);
  }

  // First ambient arrow realizing the underlying edge {u, w}.
  void add_edge_between(int pi, int pj) {
    auto arrows = ambient.arrows_between(images[pi], images[pj]);
    if (arrows.empty()) throw InternalError("pattern edge has no ambient arrow");
    add_edge(pi, pj, arrows[0]);
  }

  EuclideanWitness build(EuclideanType type) && {
    Quiver pattern(std::move(positions), std::move(pattern_arrows));
    Embedding emb(std::move(pattern), ambient, std::move(images),
                  std::move(arrow_images));
    return EuclideanWitness{type, std::move(emb), DimVector(std::move(h))};
  }
};

struct WitnessSearch {
  const Quiver& q;
  const DimVector& d;
  const Limits& limits;
  i64 steps = 0;
  std::vector<char> supp;

  WitnessSearch(const QuiverSetting& s, const Limits& lim)
      : q(s.quiver), d(s.dim), limits(lim) {
    supp.resize(q.vertex_count());
    for (int x = 0; x < q.vertex_count(); ++x) supp[x] = d[x] >= 1;
  }

  void charge() {
    if (++steps > limits.witness_budget)
      throw BudgetError("witness search budget exceeded");
  }

  std::optional<EuclideanWitness> loop_case() {
    for (int x = 0; x < q.vertex_count(); ++x) {
      charge();
      if (!supp[x]) continue;
      auto loops = q.loops_at(x);
      if (loops.empty()) continue;
      PatternBuilder pb(q);
      int p = pb.add_vertex("a0", 1, x);
      pb.add_edge(p, p, loops[0]);
      return std::move(pb).build({EuclideanFamily::A, 0});
    }
    return std::nullopt;
  }

  std::optional<EuclideanWitness> pair_case() {
    for (int x = 0; x < q.vertex_count(); ++x) {
      if (!supp[x]) continue;
      for (int y = x + 1; y < q.vertex_count(); ++y) {
        charge();
        if (!supp[y]) continue;
        auto arrows = q.arrows_between(x, y);
        if (arrows.size() < 2) continue;
        PatternBuilder pb(q);
        int p0 = pb.add_vertex("a0", 1, x);
        int p1 = pb.add_vertex("a1", 1, y);
        pb.add_edge(p0, p1, arrows[0]);
        pb.add_edge(p0, p1, arrows[1]);
        return std::move(pb).build({EuclideanFamily::A, 1});
      }
    }
    return std::nullopt;
  }

  // DFS over the support-restricted simple graph; the first back edge seen
  // always runs from the active vertex to one of its ancestors, so the
  // parent chain yields the cycle.
  std::optional<std::vector<int>> find_support_cycle() {
    const int n = q.vertex_count();
    std::vector<int> parent(n, -1);
    std::vector<char> visited(n, 0);
    for (int root = 0; root < n; ++root) {
      if (!supp[root] || visited[root]) continue;
      std::vector<std::pair<int, int>> stack;
      visited[root] = 1;
      parent[root] = -1;
      stack.push_back({root, 0});
      while (!stack.empty()) {
        auto& [u, pos] = stack.back();
        const auto& ns = q.simple_neighbors(u);
        bool descended = false;
        while (pos < static_cast<int>(ns.size())) {
          int w = ns[pos++];
          charge();
          if (!supp[w]) continue;
          if (!visited[w]) {
            visited[w] = 1;
            parent[w] = u;
            stack.push_back({w, 0});
            descended = true;
            break;
          }
          if (w != parent[u]) {
            std::vector<int> cycle;
            int guard = 0;
            for (int x = u; x != w; x = parent[x]) {
              cycle.push_back(x);
              if (++guard > n) throw InternalError("cycle extraction ran away");
            }
            cycle.push_back(w);
            return cycle;
          }
        }
        if (!descended) stack.pop_back();
      }
    }
    return std::nullopt;
  }

  std::optional<EuclideanWitness> cycle_case() {
    auto cyc = find_support_cycle();
    if (!cyc) return std::nullopt;
    std::vector<int> c = *cyc;
    // Canonical rotation: smallest vertex first, then toward its smaller
    // cycle neighbor.
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    const int len = static_cast<int>(c.size());
    PatternBuilder pb(q);
    for (int i = 0; i < len; ++i)
      pb.add_vertex("a" + std::to_string(i), 1, c[i]);
    for (int i = 0; i < len; ++i) pb.add_edge_between(i, (i + 1) % len);
    return std::move(pb).build({EuclideanFamily::A, len - 1});
  }

  // Spine path of vertices with d >= 2, two extra distinct neighbors with
  // d >= 1 at each end, all vertices pairwise distinct.
  std::optional<EuclideanWitness> d_case() {
    const int n = q.vertex_count();
    std::vector<char> h2(n, 0);
    for (int x = 0; x < n; ++x) h2[x] = d[x] >= 2;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    std::optional<EuclideanWitness> found;

    auto leaves_of = [&](int end) {
      std::vector<int> out;
      for (int w : q.simple_neighbors(end))
        if (supp[w] && !on_path[w]) out.push_back(w);
      return out;
    };

    auto emit = [&](const std::vector<int>& front_leaves,
                    const std::vector<int>& back_leaves) {
      const int k = static_cast<int>(path.size());
      PatternBuilder pb(q);
      std::vector<int> spine;
      for (int i = 0; i < k; ++i)
        spine.push_back(pb.add_vertex("s" + std::to_string(i + 1), 2, path[i]));
      int p1 = pb.add_vertex("p1", 1, front_leaves[0]);
      int p2 = pb.add_vertex("p2", 1, front_leaves[1]);
      int q1 = pb.add_vertex("q1", 1, back_leaves[0]);
      int q2 = pb.add_vertex("q2", 1, back_leaves[1]);
      for (int i = 0; i + 1 < k; ++i) pb.add_edge_between(spine[i], spine[i + 1]);
      pb.add_edge_between(p1, spine.front());
      pb.add_edge_between(p2, spine.front());
      pb.add_edge_between(q1, spine.back());
      pb.add_edge_between(q2, spine.back());
      found = std::move(pb).build({EuclideanFamily::D, k + 3});
    };

    auto test_path = [&]() -> bool {
      charge();
      if (path.size() == 1) {
        auto ls = leaves_of(path[0]);
        if (ls.size() < 4) return false;
        emit({ls[0], ls[1]}, {ls[2], ls[3]});
        return true;
      }
      if (path.front() > path.back()) return false;  // reversal duplicate
      auto left = leaves_of(path.front());
      auto right = leaves_of(path.back());
      for (size_t a = 0; a < left.size(); ++a)
        for (size_t b = a + 1; b < left.size(); ++b)
          for (size_t cc = 0; cc < right.size(); ++cc)
            for (size_t ee = cc + 1; ee < right.size(); ++ee) {
              charge();
              int la = left[a], lb = left[b], rc = right[cc], re = right[ee];
              if (la == rc || la == re || lb == rc || lb == re) continue;
              emit({la, lb}, {rc, re});
              return true;
            }
      return false;
    };

    std::function<bool()> extend = [&]() -> bool {
      if (test_path()) return true;
      int last = path.back();
      for (int w : q.simple_neighbors(last)) {
        if (!h2[w] || on_path[w]) continue;
        charge();
        path.push_back(w);
        on_path[w] = 1;
        if (extend()) return true;
        path.pop_back();
        on_path[w] = 0;
      }
      return false;
    };

    for (int start = 0; start < n; ++start) {
      if (!h2[start]) continue;
      path.assign(1, start);
      std::fill(on_path.begin(), on_path.end(), 0);
      on_path[start] = 1;
      if (extend()) return found;
    }
    return std::nullopt;
  }

  // Rooted tree matching for the fixed E patterns, anchored at candidate
  // branch vertices.
  std::optional<EuclideanWitness> e_case(EuclideanType type, i64 center_h,
                                         const std::vector<std::string>& prefixes,
                                         const std::vector<std::vector<i64>>& arms) {
    const int n = q.vertex_count();
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> chosen(arms.size());

    for (int z = 0; z < n; ++z) {
      if (!supp[z] || d[z] < center_h || q.simple_degree(z) < 3) continue;
      std::fill(used.begin(), used.end(), 0);
      used[z] = 1;
      for (auto& c : chosen) c.clear();

      std::function<bool(size_t, size_t, int)> place_arm =
          [&](size_t arm, size_t pos, int prev) -> bool {
        if (pos == arms[arm].size())
          return arm + 1 == arms.size() ? true : place_arm(arm + 1, 0, z);
        for (int w : q.simple_neighbors(prev)) {
          if (!supp[w] || used[w] || d[w] < arms[arm][pos]) continue;
          charge();
          used[w] = 1;
          chosen[arm].push_back(w);
          if (place_arm(arm, pos + 1, w)) return true;
          used[w] = 0;
          chosen[arm].pop_back();
        }
        return false;
      };

      if (!place_arm(0, 0, z)) continue;
      PatternBuilder pb(q);
      int pz = pb.add_vertex("z", center_h, z);
      for (size_t k = 0; k < arms.size(); ++k) {
        int prev = pz;
        for (size_t j = 0; j < arms[k].size(); ++j) {
          int p = pb.add_vertex(prefixes[k] + std::to_string(j + 1), arms[k][j],
                                chosen[k][j]);
          pb.add_edge_between(prev, p);
          prev = p;
        }
      }
      return std::move(pb).build(type);
    }
    return std::nullopt;
  }

  std::optional<EuclideanWitness> run() {
    if (auto w = loop_case()) return w;
    if (auto w = pair_case()) return w;
    if (auto w = cycle_case()) return w;
    if (auto w = d_case()) return w;
    if (auto w = e_case({EuclideanFamily::E6, 6}, 3, {"a", "b", "c"},
                        {{2, 1}, {2, 1}, {2, 1}}))
      return w;
    if (auto w = e_case({EuclideanFamily::E7, 7}, 4, {"s", "a", "b"},
                        {{2}, {3, 2, 1}, {3, 2, 1}}))
      return w;
    if (auto w = e_case({EuclideanFamily::E8, 8}, 6, {"s", "m", "a"},
                        {{3}, {4, 2}, {5, 4, 3, 2, 1}}))
      return w;
    return std::nullopt;
  }
};

}  // namespace

std::optional<EuclideanWitness> find_euclidean_witness(const QuiverSetting& s,
                                                       const Limits& limits) {
  WitnessSearch search(s, limits);
  auto w = search.run();
  if (w) validate_witness(*w, s);
  return w;
}

void validate_witness(const EuclideanWitness& w, const QuiverSetting& ambient) {
  if (!(w.embedding.target() == ambient.quiver))
    throw InternalError("witness embedding does not target the ambient quiver");
  auto shape = analyze_euclidean(w.embedding.source());
  if (!shape) throw InternalError("witness pattern is not a Euclidean quiver");
  if (!(shape->type == w.type)) throw InternalError("witness type mismatch");
  if (!(w.radical == shape->radical)) throw InternalError("witness radical mismatch");
  if (tits_form(w.embedding.source(), w.radical) != 0)
    throw InternalError("witness radical is not a null vector of the Tits form");
  if (!pushforward(w.embedding, w.radical).leq(ambient.dim))
    throw InternalError("witness exceeds the ambient dimension vector");
}

}  // namespace quiverfin
