#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverfin/quiver.hpp"

namespace quiverfin {

enum class EuclideanFamily { A, D, E6, E7, E8 };

/// One of the five Euclidean (affine) diagram families with its parameter:
/// A~n has n+1 vertices for n >= 0 (n = 0 is a single loop, n = 1 two
/// vertices joined by two arrows), D~n has n+1 vertices for n >= 4, and
/// E~6/E~7/E~8 have 7/8/9 vertices.
struct EuclideanType {
  EuclideanFamily family = EuclideanFamily::A;
  int n = 0;

  int vertex_count() const;
  std::string name() const;  // "A~3", "D~4", "E~8"

  friend bool operator==(const EuclideanType&, const EuclideanType&) = default;
};

/// Structural analysis of a Euclidean quiver: the type, a canonical
/// position name for every vertex (cycle positions a0..an; D spine s1..sk
/// with leaf pairs p1,p2 and q1,q2; E center z with arms s/m/a/b/c), and
/// the radical vector placed on the vertices.
struct EuclideanShape {
  EuclideanType type;
  std::vector<std::string> positions;  // per vertex of the analyzed quiver
  DimVector radical;
};

/// Recognizes whether the whole underlying multigraph of q is exactly one
/// of the five Euclidean diagrams, orientation ignored.
std::optional<EuclideanShape> analyze_euclidean(const Quiver& q);
std::optional<EuclideanType> recognize_euclidean(const Quiver& q);

/// The distinguished null vector of the Tits form, placed on a concrete
/// quiver whose underlying graph is of type t. Throws std::invalid_argument
/// if the shape does not match t.
DimVector radical_vector(EuclideanType t, const Quiver& shape);

/// An embedded Euclidean subquiver certifying representation infinity:
/// the pattern (vertices named by canonical positions), an injective
/// morphism into the ambient quiver, and the radical vector on the pattern.
/// pushforward(embedding, radical) <= ambient dim always holds.
struct EuclideanWitness {
  EuclideanType type;
  Embedding embedding;
  DimVector radical;
};

/// A nonzero vector d' <= d with q(d') <= 0, the quadratic-form side
/// certificate.
struct SubrootWitness {
  DimVector vector;
  i64 q_value = 0;
};

/// Searches for a Euclidean subquiver Q' (not necessarily induced) with
/// h_{Q'} <= d on its vertices. Checks, in order: loops, parallel or
/// opposite arrow pairs, cycles in the underlying simple graph, D~ spine
/// patterns, then the three E trees. Deterministic: the first witness in
/// that fixed search order is returned.
std::optional<EuclideanWitness> find_euclidean_witness(const QuiverSetting& s,
                                                       const Limits& limits = {});

/// Re-checks a witness from raw data: embedding well-formed, pattern of the
/// claimed type with the correct radical, tits form zero, and the
/// pushforward bound against the ambient dimension vector. Throws
/// InternalError on any violation.
void validate_witness(const EuclideanWitness& w, const QuiverSetting& ambient);

}  // namespace quiverfin
