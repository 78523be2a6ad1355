#pragma once

#include <string>
#include <vector>

#include "quiverfin/tits_search.hpp"

namespace quiverfin {

/// Thrown when the two decision paths disagree; carries both traces.
struct CrossCheckError : InternalError {
  using InternalError::InternalError;
};

/// Decides representation finiteness. The primary path is the direct
/// Euclidean-subquiver search; with checked = true the quadratic-form path
/// runs as well and any disagreement throws CrossCheckError.
Classification classify(const QuiverSetting& s, bool checked = false,
                        const Limits& limits = {});

/// True iff the setting is representation infinite and every one-step-smaller
/// setting is finite. One step smaller: decrement one dimension entry
/// (deleting the vertex when it reaches 0), or delete one arrow. These moves
/// generate the preorder on settings, so checking them suffices.
bool is_minimal_infinite(const QuiverSetting& s, const Limits& limits = {});

struct CrossCheckBounds {
  int max_vertices = 2;
  int max_dim = 2;
  int max_ordered_multiplicity = 2;  // arrows per ordered vertex pair
  int max_loops_per_vertex = 1;
  i64 max_total_arrows = -1;  // -1: unbounded
};

struct CrossCheckReport {
  long long graphs = 0;    // canonical underlying multigraphs visited
  long long settings = 0;  // canonical (graph, dim) pairs
  long long runs = 0;      // classification runs, counting orientation samples
  long long infinite = 0;
  std::vector<std::string> mismatches;  // capped; empty means agreement

  bool ok() const { return mismatches.empty(); }
};

/// Compares the two decision paths over every connected setting within the
/// bounds, up to isomorphism of the underlying data. Both paths only depend
/// on the underlying multigraph (the forms use unordered endpoint products
/// and the pattern search ignores orientation), so the enumeration
/// canonicalizes underlying multigraphs and runs up to two orientation
/// samples per class.
CrossCheckReport cross_check_suite(const CrossCheckBounds& bounds,
                                   const Limits& limits = {});

}  // namespace quiverfin
