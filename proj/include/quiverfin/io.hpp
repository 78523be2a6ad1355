#pragma once

#include <string>
#include <string_view>

#include "quiverfin/algebra.hpp"
#include "quiverfin/euclid.hpp"
#include "quiverfin/quiver.hpp"

namespace quiverfin {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

/// Line-oriented setting format. '#' starts a comment, tokens are
/// whitespace separated, vertex names match [A-Za-z0-9_]+.
///
///   vertices: a b c
///   arrow: a b
///   dim: a=1 b=2 c=0
///
/// Repeated arrow lines accumulate multiplicity; every declared vertex
/// needs exactly one dimension assignment.
QuiverSetting parse_setting(std::string_view text, i64 dim_limit = kDefaultDimLimit);

/// Canonical form of the setting format; parse(serialize(s)) reproduces s.
std::string serialize_setting(const QuiverSetting& s);

/// Algebra format: "blocks: n1 ... nl" followed by l "rank:" rows.
AlgebraSpec parse_algebra(std::string_view text);

std::string serialize_algebra(const AlgebraSpec& spec);

/// Witness block: header "WITNESS type=<family> m=<int>", one line per
/// embedded vertex in ambient declaration order, then one line per pattern
/// arrow ordered by ambient endpoints. Bit-stable for golden tests.
std::string witness_report(const EuclideanWitness& w, i64 multiplier = 1);

/// Subroot block: "SUBROOT q=<value>" plus the vector in dim-line form.
std::string subroot_report(const SubrootWitness& w, const Quiver& q);

}  // namespace quiverfin
