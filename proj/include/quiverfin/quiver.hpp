#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quiverfin {

using i64 = std::int64_t;

inline constexpr i64 kDefaultDimLimit = 1'000'000;

/// Search budgets and input bounds shared by the decision routines.
/// A search that would exceed its budget throws BudgetError instead of
/// returning a possibly wrong answer.
struct Limits {
  i64 dim_limit = kDefaultDimLimit;
  i64 subroot_budget = 100'000'000;  // vectors evaluated by find_subroot
  i64 witness_budget = 10'000'000;   // states visited by find_euclidean_witness
};

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Thrown when a step that the mathematics guarantees to succeed fails;
/// always an implementation bug, never an input problem.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

struct Arrow {
  int src = 0;
  int dst = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite directed multigraph. Vertex names are unique; their declaration
/// order is the canonical order used everywhere (serialization, witness
/// preference, enumeration). Loops and parallel arrows are allowed and
/// counted with multiplicity.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_names, std::vector<Arrow> arrows);
  Quiver(std::vector<std::string> vertex_names,
         const std::vector<std::pair<std::string, std::string>>& arrows_by_name);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& name(int v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::optional<int> index_of(std::string_view name) const;

  /// Sorted distinct neighbors of v in the underlying simple graph
  /// (loops ignored, multiplicities collapsed).
  const std::vector<int>& simple_neighbors(int v) const { return nbrs_[v]; }
  int simple_degree(int v) const { return static_cast<int>(nbrs_[v].size()); }

  bool has_loop(int v) const;
  int loop_count(int v) const;
  std::vector<int> loops_at(int v) const;
  /// Number of arrows whose endpoint set is {u, v} with u != v,
  /// orientation ignored.
  int pair_multiplicity(int u, int v) const;
  /// Indices of arrows with endpoint set {u, v}, in arrow order.
  std::vector<int> arrows_between(int u, int v) const;
  bool has_loops() const;
  bool has_multiple_arrows() const;

  bool connected() const;

  friend bool operator==(const Quiver&, const Quiver&);

 private:
  std::vector<std::string> names_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> nbrs_;
};

/// An integer vector indexed by the vertices of some quiver. Settings
/// constrain entries to [0, dim_limit]; the forms below accept arbitrary
/// integer entries so that bilinearity can be tested over Z.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::vector<i64> entries) : entries_(std::move(entries)) {}
  static DimVector zeros(int n) { return DimVector(std::vector<i64>(n, 0)); }
  static DimVector basis(int n, int i);

  int size() const { return static_cast<int>(entries_.size()); }
  i64 operator[](int i) const { return entries_[i]; }
  i64& operator[](int i) { return entries_[i]; }
  const std::vector<i64>& entries() const { return entries_; }

  bool nonzero() const;
  bool nonnegative() const;
  bool sincere() const;
  i64 sum() const;
  /// Componentwise <=.
  bool leq(const DimVector& other) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;

 private:
  std::vector<i64> entries_;
};

/// A quiver together with a nonnegative dimension vector on its vertices.
struct QuiverSetting {
  Quiver quiver;
  DimVector dim;

  QuiverSetting() = default;
  QuiverSetting(Quiver q, DimVector d, i64 dim_limit = kDefaultDimLimit);
};

/// q_Q(d) = sum of d(x)^2 over vertices minus sum of d(s a) d(t a) over
/// arrows. Exact; throws std::overflow_error rather than wrapping.
i64 tits_form(const Quiver& q, const DimVector& d);
inline i64 tits_form(const QuiverSetting& s) { return tits_form(s.quiver, s.dim); }

/// The symmetric bilinearization: (a, b) = q(a + b) - q(a) - q(b).
i64 bilinear_form(const Quiver& q, const DimVector& a, const DimVector& b);

/// Connected components of the underlying graph (walk relation; arrow
/// direction ignored). Components are listed by smallest member, each
/// sorted ascending.
std::vector<std::vector<int>> components(const Quiver& q);

/// Induced subquiver on a vertex subset: all arrows with both endpoints in
/// the subset. Keeps the maps back to the original indices.
struct InducedSubquiver {
  Quiver quiver;
  std::vector<int> vertex_of;  // new index -> old vertex index
  std::vector<int> arrow_of;   // new index -> old arrow index
};
InducedSubquiver induced_subquiver(const Quiver& q, std::span<const int> keep);

/// Restriction of a setting to a vertex subset (induced subquiver, dim
/// restricted).
QuiverSetting restrict_setting(const QuiverSetting& s, std::span<const int> keep);

/// Drops every vertex with dim 0 together with its incident arrows.
/// Classification is invariant under this.
QuiverSetting normalize(const QuiverSetting& s);

/// An injective quiver morphism. The arrow map is compatible with the
/// vertex map: image arrows have the mapped endpoints.
class Embedding {
 public:
  Embedding(Quiver source, Quiver target, std::vector<int> vertex_map,
            std::vector<int> arrow_map);
  static Embedding identity(const Quiver& q);

  const Quiver& source() const { return source_; }
  const Quiver& target() const { return target_; }
  const std::vector<int>& vertex_map() const { return vertex_map_; }
  const std::vector<int>& arrow_map() const { return arrow_map_; }

 private:
  Quiver source_;
  Quiver target_;
  std::vector<int> vertex_map_;
  std::vector<int> arrow_map_;
};

/// (psi_* d)(y) = sum of d(x) over preimages x of y.
DimVector pushforward(const Embedding& e, const DimVector& d);
/// (psi^* d')(x) = d'(psi x).
DimVector pullback(const Embedding& e, const DimVector& d);

}  // namespace quiverfin
