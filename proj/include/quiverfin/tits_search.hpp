#pragma once

#include <optional>

#include "quiverfin/euclid.hpp"
#include "quiverfin/quiver.hpp"

namespace quiverfin {

/// Searches for a nonzero d' <= d with q(d') <= 0. Candidates are capped
/// componentwise at 6 (the largest radical-vector entry over all Euclidean
/// diagrams, so the cap loses nothing), supported on one connected vertex
/// subset at a time, subsets enumerated by size then lexicographically and
/// vectors within a support lexicographically. First hit wins.
std::optional<DimVector> find_subroot(const QuiverSetting& s, const Limits& limits = {});

struct RadicalReduction {
  EuclideanWitness witness;
  i64 multiplier = 1;  // m >= 1 with pushforward(m * radical) <= input dim
};

/// Runs the subtraction argument: restrict to a q <= 0 support component,
/// peel off basis vectors e_x while (d, e_x) >= q(d) + 1, and read the
/// resulting null vector as m * h on a Euclidean support quiver. Loops and
/// multiple arrows short-circuit to an A~0 / A~1 witness. Preconditions
/// (d nonzero, q(d) <= 0) are checked; a failure after them is a bug and
/// throws InternalError.
RadicalReduction reduce_to_radical(const QuiverSetting& s);

struct Classification {
  bool infinite = false;
  std::optional<EuclideanWitness> witness;  // present iff infinite
};

/// Finite iff no subroot exists; otherwise Infinite with the Euclidean
/// witness extracted from the subroot.
Classification decide_by_tits(const QuiverSetting& s, const Limits& limits = {});

}  // namespace quiverfin
