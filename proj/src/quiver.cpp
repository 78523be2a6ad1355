#include "quiverfin/quiver.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace quiverfin {

namespace {

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow while evaluating a form");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow while evaluating a form");
  return r;
}

}  // namespace

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows)
    : names_(std::move(vertex_names)), arrows_(std::move(arrows)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("empty vertex name");
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate vertex name: " + n);
  }
  const int v = vertex_count();
  for (const Arrow& a : arrows_) {
    if (a.src < 0 || a.src >= v || a.dst < 0 || a.dst >= v)
      throw std::invalid_argument("arrow endpoint is not a declared vertex");
  }
  nbrs_.assign(v, {});
  for (const Arrow& a : arrows_) {
    if (a.src != a.dst) {
      nbrs_[a.src].push_back(a.dst);
      nbrs_[a.dst].push_back(a.src);
    }
  }
  for (auto& ns : nbrs_) {
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  }
}

Quiver::Quiver(std::vector<std::string> vertex_names,
               const std::vector<std::pair<std::string, std::string>>& arrows_by_name) {
  std::unordered_map<std::string_view, int> idx;
  for (int i = 0; i < static_cast<int>(vertex_names.size()); ++i)
    idx.emplace(vertex_names[i], i);
  std::vector<Arrow> resolved;
  resolved.reserve(arrows_by_name.size());
  for (const auto& [s, t] : arrows_by_name) {
    auto is = idx.find(s);
    auto it = idx.find(t);
    if (is == idx.end()) throw std::invalid_argument("arrow endpoint not declared: " + s);
    if (it == idx.end()) throw std::invalid_argument("arrow endpoint not declared: " + t);
    resolved.push_back({is->second, it->second});
  }
  *this = Quiver(std::move(vertex_names), std::move(resolved));
}

std::optional<int> Quiver::index_of(std::string_view name) const {
  for (int i = 0; i < vertex_count(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

bool Quiver::has_loop(int v) const {
  for (const Arrow& a : arrows_)
    if (a.src == v && a.dst == v) return true;
  return false;
}

int Quiver::loop_count(int v) const {
  int c = 0;
  for (const Arrow& a : arrows_)
    if (a.src == v && a.dst == v) ++c;
  return c;
}

std::vector<int> Quiver::loops_at(int v) const {
  std::vector<int> out;
  for (int i = 0; i < arrow_count(); ++i)
    if (arrows_[i].src == v && arrows_[i].dst == v) out.push_back(i);
  return out;
}

int Quiver::pair_multiplicity(int u, int v) const {
  if (u == v) return 0;
  int c = 0;
  for (const Arrow& a : arrows_)
    if ((a.src == u && a.dst == v) || (a.src == v && a.dst == u)) ++c;
  return c;
}

std::vector<int> Quiver::arrows_between(int u, int v) const {
  std::vector<int> out;
  for (int i = 0; i < arrow_count(); ++i) {
    const Arrow& a = arrows_[i];
    if ((a.src == u && a.dst == v) || (a.src == v && a.dst == u)) out.push_back(i);
  }
  return out;
}

bool Quiver::has_loops() const {
  for (const Arrow& a : arrows_)
    if (a.src == a.dst) return true;
  return false;
}

bool Quiver::has_multiple_arrows() const {
  for (int i = 0; i < arrow_count(); ++i)
    for (int j = i + 1; j < arrow_count(); ++j) {
      const Arrow &a = arrows_[i], &b = arrows_[j];
      const bool same = (a.src == b.src && a.dst == b.dst) ||
                        (a.src == b.dst && a.dst == b.src);
      if (same && a.src != a.dst) return true;
      if (same && a.src == a.dst && b.src == b.dst) return true;  // two loops
    }
  return false;
}

bool Quiver::connected() const {
  return components(*this).size() <= 1;
}

bool operator==(const Quiver& a, const Quiver& b) {
  return a.names_ == b.names_ && a.arrows_ == b.arrows_;
}

DimVector DimVector::basis(int n, int i) {
  std::vector<i64> e(n, 0);
  e.at(i) = 1;
  return DimVector(std::move(e));
}

bool DimVector::nonzero() const {
  for (i64 v : entries_)
    if (v != 0) return true;
  return false;
}

bool DimVector::nonnegative() const {
  for (i64 v : entries_)
    if (v < 0) return false;
  return true;
}

bool DimVector::sincere() const {
  for (i64 v : entries_)
    if (v <= 0) return false;
  return true;
}

i64 DimVector::sum() const {
  i64 s = 0;
  for (i64 v : entries_) s = checked_add(s, v);
  return s;
}

bool DimVector::leq(const DimVector& other) const {
  if (size() != other.size())
    throw std::invalid_argument("dimension vectors live on different vertex sets");
  for (int i = 0; i < size(); ++i)
    if (entries_[i] > other.entries_[i]) return false;
  return true;
}

QuiverSetting::QuiverSetting(Quiver q, DimVector d, i64 dim_limit)
    : quiver(std::move(q)), dim(std::move(d)) {
  if (dim.size() != quiver.vertex_count())
    throw std::invalid_argument("dimension vector does not match the vertex set");
  for (int i = 0; i < dim.size(); ++i) {
    if (dim[i] < 0)
      throw std::invalid_argument("negative dimension at vertex " + quiver.name(i));
    if (dim[i] > dim_limit)
      throw std::overflow_error("dimension at vertex " + quiver.name(i) +
                                " exceeds the configured limit");
  }
}

i64 tits_form(const Quiver& q, const DimVector& d) {
  if (d.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector does not match the vertex set");
  i64 acc = 0;
  for (int x = 0; x < q.vertex_count(); ++x)
    acc = checked_add(acc, checked_mul(d[x], d[x]));
  for (const Arrow& a : q.arrows())
    acc = checked_add(acc, -checked_mul(d[a.src], d[a.dst]));
  return acc;
}

i64 bilinear_form(const Quiver& q, const DimVector& a, const DimVector& b) {
  if (a.size() != q.vertex_count() || b.size() != q.vertex_count())
    throw std::invalid_argument("dimension vector does not match the vertex set");
  i64 acc = 0;
  for (int x = 0; x < q.vertex_count(); ++x)
    acc = checked_add(acc, checked_mul(2, checked_mul(a[x], b[x])));
  for (const Arrow& ar : q.arrows()) {
    acc = checked_add(acc, -checked_mul(a[ar.src], b[ar.dst]));
    acc = checked_add(acc, -checked_mul(b[ar.src], a[ar.dst]));
  }
  return acc;
}

std::vector<std::vector<int>> components(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> stack{root}, members;
    comp[root] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : q.simple_neighbors(v))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

InducedSubquiver induced_subquiver(const Quiver& q, std::span<const int> keep) {
  std::vector<int> verts(keep.begin(), keep.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  std::vector<int> pos(q.vertex_count(), -1);
  std::vector<std::string> names;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    int v = verts[i];
    if (v < 0 || v >= q.vertex_count())
      throw std::invalid_argument("vertex index out of range in restriction");
    pos[v] = i;
    names.push_back(q.name(v));
  }
  std::vector<Arrow> arrows;
  std::vector<int> arrow_of;
  for (int i = 0; i < q.arrow_count(); ++i) {
    const Arrow& a = q.arrows()[i];
    if (pos[a.src] >= 0 && pos[a.dst] >= 0) {
      arrows.push_back({pos[a.src], pos[a.dst]});
      arrow_of.push_back(i);
    }
  }
  return {Quiver(std::move(names), std::move(arrows)), std::move(verts),
          std::move(arrow_of)};
}

QuiverSetting restrict_setting(const QuiverSetting& s, std::span<const int> keep) {
  InducedSubquiver sub = induced_subquiver(s.quiver, keep);
  std::vector<i64> d;
  d.reserve(sub.vertex_of.size());
  for (int v : sub.vertex_of) d.push_back(s.dim[v]);
  return QuiverSetting(std::move(sub.quiver), DimVector(std::move(d)));
}

QuiverSetting normalize(const QuiverSetting& s) {
  std::vector<int> keep;
  for (int v = 0; v < s.quiver.vertex_count(); ++v)
    if (s.dim[v] > 0) keep.push_back(v);
  return restrict_setting(s, keep);
}

Embedding::Embedding(Quiver source, Quiver target, std::vector<int> vertex_map,
                     std::vector<int> arrow_map)
    : source_(std::move(source)),
      target_(std::move(target)),
      vertex_map_(std::move(vertex_map)),
      arrow_map_(std::move(arrow_map)) {
  if (static_cast<int>(vertex_map_.size()) != source_.vertex_count() ||
      static_cast<int>(arrow_map_.size()) != source_.arrow_count())
    throw std::invalid_argument("embedding maps do not match the source quiver");
  std::vector<char> vseen(target_.vertex_count(), 0);
  for (int img : vertex_map_) {
    if (img < 0 || img >= target_.vertex_count())
      throw std::invalid_argument("embedding vertex image out of range");
    if (vseen[img]) throw std::invalid_argument("embedding vertex map is not injective");
    vseen[img] = 1;
  }
  std::vector<char> aseen(target_.arrow_count(), 0);
  for (int i = 0; i < source_.arrow_count(); ++i) {
    int img = arrow_map_[i];
    if (img < 0 || img >= target_.arrow_count())
      throw std::invalid_argument("embedding arrow image out of range");
    if (aseen[img]) throw std::invalid_argument("embedding arrow map is not injective");
    aseen[img] = 1;
    const Arrow& sa = source_.arrows()[i];
    const Arrow& ta = target_.arrows()[img];
    if (ta.src != vertex_map_[sa.src] || ta.dst != vertex_map_[sa.dst])
      throw std::invalid_argument("embedding arrow map is not compatible");
  }
}

Embedding Embedding::identity(const Quiver& q) {
  std::vector<int> vm(q.vertex_count()), am(q.arrow_count());
  for (int i = 0; i < q.vertex_count(); ++i) vm[i] = i;
  for (int i = 0; i < q.arrow_count(); ++i) am[i] = i;
  return Embedding(q, q, std::move(vm), std::move(am));
}

DimVector pushforward(const Embedding& e, const DimVector& d) {
  if (d.size() != e.source().vertex_count())
    throw std::invalid_argument("vector does not live on the embedding source");
  DimVector out = DimVector::zeros(e.target().vertex_count());
  for (int x = 0; x < d.size(); ++x) out[e.vertex_map()[x]] += d[x];
  return out;
}

DimVector pullback(const Embedding& e, const DimVector& d) {
  if (d.size() != e.target().vertex_count())
    throw std::invalid_argument("vector does not live on the embedding target");
  DimVector out = DimVector::zeros(e.source().vertex_count());
  for (int x = 0; x < out.size(); ++x) out[x] = d[e.vertex_map()[x]];
  return out;
}

}  // namespace quiverfin
