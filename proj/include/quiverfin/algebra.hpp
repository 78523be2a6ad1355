#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quiverfin/classify.hpp"
#include "quiverfin/quiver.hpp"

namespace quiverfin {

/// A radical-square-zero algebra presented by its Wedderburn block sizes
/// n_1..n_l and the rank matrix r[i][j] of the radical bimodule components.
struct AlgebraSpec {
  std::vector<i64> block_sizes;
  std::vector<std::vector<i64>> ranks;  // l x l, r[i][j] >= 0

  int blocks() const { return static_cast<int>(block_sizes.size()); }
};

void validate_spec(const AlgebraSpec& spec);

/// A setting whose vertices split into a source side and a target side with
/// every arrow running source -> target. The source/target pairing (equal
/// weights) is present when the setting carries it; it is required for the
/// algebra reconstruction but not for the condition checks.
struct BipartiteSetting {
  QuiverSetting setting;
  std::vector<int> sources;  // ascending vertex indices
  std::vector<int> targets;  // ascending vertex indices
  std::vector<std::pair<int, int>> pairing;  // (source, target); may be empty
};

BipartiteSetting make_bipartite(QuiverSetting s, std::vector<int> sources,
                                std::vector<int> targets,
                                std::vector<std::pair<int, int>> pairing = {});

/// The quiver setting of an algebra: source vertices t1..tl and target
/// vertices b1..bl, r[i][j] arrows tj -> bi, weights w(ti) = w(bi) = n_i.
BipartiteSetting algebra_to_setting(const AlgebraSpec& spec);

/// Structure constants of the reconstructed algebra. Every product of two
/// basis elements is either zero or a single basis element, so the table
/// stores the product index or -1.
struct MultTable {
  int dim = 0;
  int radical_begin = 0;  // basis [0, radical_begin) is the semisimple part
  std::vector<std::string> labels;
  std::vector<std::int32_t> table;        // dim * dim
  std::vector<int> identity_components;  // diagonal matrix units summing to 1

  std::int32_t product(int a, int b) const { return table[a * dim + b]; }
};

/// Builds the multiplication table of the algebra reconstructed from a
/// paired bipartite setting: block matrix algebras on the target side and
/// one rectangular radical component per arrow, with
/// (M, R) (N, S) = (M N, M S + R N).
MultTable setting_to_algebra(const BipartiteSetting& bs);

bool table_is_associative(const MultTable& t);
bool table_radical_square_zero(const MultTable& t);
bool table_has_identity(const MultTable& t);

/// Reads the algebra data back from a paired bipartite setting: block i is
/// the i-th target vertex, block sizes are its weights, r[i][j] counts the
/// arrows from the source paired with target j into target i.
AlgebraSpec recover_spec(const BipartiteSetting& bs);

/// Finitely many unit-orbit classes iff the associated setting is
/// representation finite.
Classification finitely_many_orbits(const AlgebraSpec& spec, const Limits& limits = {});

struct OrConditionReport {
  struct Item {
    bool pass = true;
    std::vector<std::string> violations;
  };
  Item c1;  // no cycles in the underlying graph (parallel arrows count)
  Item c2;  // weight >= 2 vertices: at most 3 arrows out and at most 3 in
  Item c3;  // arrows between weight >= 2 endpoints: out(src) + in(dst) <= 4

  bool all_pass() const { return c1.pass && c2.pass && c3.pass; }
};

/// Evaluates the three classical finiteness conditions literally as stated.
OrConditionReport check_or_conditions(const BipartiteSetting& bs);

/// The ideal lattice is distributive iff every rank is at most 1.
bool is_distributive(const AlgebraSpec& spec);

}  // namespace quiverfin
