#include "doctest.h"
#include "quiverfin/tits_search.hpp"
#include "test_util.hpp"

using namespace quiverfin;
using qftest::make;

TEST_CASE("subroot search on the stated instances") {
  auto kron = make({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {1, 1});
  auto sub = find_subroot(kron);
  REQUIRE(sub.has_value());
  CHECK(*sub == DimVector({1, 1}));
  CHECK(tits_form(kron.quiver, *sub) == 0);

  // a^2 - ab + b^2 > 0 for every nonzero vector, so nothing exists
  auto arrow = make({"a", "b"}, {{"a", "b"}}, {7, 7});
  CHECK(!find_subroot(arrow).has_value());

  QuiverSetting star = qftest::with_radical(qftest::d_tilde(4));
  auto sub2 = find_subroot(star);
  REQUIRE(sub2.has_value());
  CHECK(*sub2 == star.dim);
}

TEST_CASE("subroot entries stay under the cap and the input vector") {
  QuiverSetting big(qftest::a_tilde(2), DimVector({40, 40, 40}));
  auto sub = find_subroot(big);
  REQUIRE(sub.has_value());
  for (int i = 0; i < sub->size(); ++i) CHECK((*sub)[i] <= 6);
  CHECK(sub->leq(big.dim));
  CHECK(tits_form(big.quiver, *sub) <= 0);
}

TEST_CASE("subroot search respects its budget") {
  Limits tiny;
  tiny.subroot_budget = 3;
  QuiverSetting big(qftest::d_tilde(8), radical_vector({EuclideanFamily::D, 8},
                                                       qftest::d_tilde(8)));
  CHECK_THROWS_AS(find_subroot(big, tiny), BudgetError);
}

TEST_CASE("reduction on a scalar multiple of a radical vector") {
  Quiver star = qftest::d_tilde(4);
  QuiverSetting s(star, DimVector({4, 2, 2, 2, 2}));
  REQUIRE(tits_form(s) == 0);
  RadicalReduction red = reduce_to_radical(s);
  CHECK(red.multiplier == 2);
  CHECK(red.witness.type == EuclideanType{EuclideanFamily::D, 4});
  CHECK(red.witness.embedding.source().vertex_count() == 5);
  validate_witness(red.witness, s);
}

TEST_CASE("reduction peels a pendant vertex off a D~4 star") {
  // pendant p declared first so the subtraction picks it
  auto s = make({"p", "c", "p1", "p2", "q1", "q2"},
                {{"p", "c"}, {"p1", "c"}, {"p2", "c"}, {"c", "q1"}, {"c", "q2"}},
                {1, 2, 1, 1, 1, 1});
  REQUIRE(tits_form(s) == -1);
  RadicalReduction red = reduce_to_radical(s);
  CHECK(red.multiplier == 1);
  CHECK(red.witness.type == EuclideanType{EuclideanFamily::D, 4});
  // the pendant vertex is gone from the witness
  for (int img : red.witness.embedding.vertex_map()) CHECK(img != 0);
  validate_witness(red.witness, s);
}

TEST_CASE("reduction short-circuits on loops") {
  auto s = make({"x"}, {{"x", "x"}}, {3});
  RadicalReduction red = reduce_to_radical(s);
  CHECK(red.witness.type == EuclideanType{EuclideanFamily::A, 0});
  CHECK(red.witness.radical == DimVector({1}));
  CHECK(red.multiplier == 3);
}

TEST_CASE("reduction rejects bad inputs") {
  auto pos = make({"a", "b"}, {{"a", "b"}}, {1, 1});
  CHECK_THROWS_AS(reduce_to_radical(pos), std::invalid_argument);  // q = 1 > 0
  auto zero = make({"a"}, {}, {0});
  CHECK_THROWS_AS(reduce_to_radical(zero), std::invalid_argument);
}

TEST_CASE("decide_by_tits on the stated instances") {
  auto kron = make({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {1, 1});
  Classification c = decide_by_tits(kron);
  CHECK(c.infinite);
  REQUIRE(c.witness.has_value());
  CHECK(c.witness->type == EuclideanType{EuclideanFamily::A, 1});

  auto path = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {9, 9, 9});
  CHECK(!decide_by_tits(path).infinite);

  auto zero = make({"a", "b"}, {{"a", "b"}}, {0, 0});
  CHECK(!decide_by_tits(zero).infinite);

  CHECK(!decide_by_tits(QuiverSetting(Quiver{}, DimVector{})).infinite);
}

TEST_CASE("reduction handles every subroot the search produces") {
  std::mt19937 rng(7201);
  int reduced = 0;
  for (int it = 0; it < 300; ++it) {
    Quiver q = qftest::random_quiver(rng, 6);
    DimVector d = qftest::random_vector(rng, q.vertex_count(), 0, 4);
    QuiverSetting s(q, d);
    auto sub = find_subroot(s);
    if (!sub) continue;
    QuiverSetting subsetting(q, *sub);
    RadicalReduction red = reduce_to_radical(subsetting);
    ++reduced;
    CHECK(red.multiplier >= 1);
    validate_witness(red.witness, subsetting);
    // m * h stays under the vector the reduction started from
    DimVector mh = red.witness.radical;
    for (int i = 0; i < mh.size(); ++i) mh[i] *= red.multiplier;
    CHECK(pushforward(red.witness.embedding, mh).leq(*sub));
  }
  CHECK(reduced > 50);  // the sample must actually exercise the reduction
}

TEST_CASE("the verdict is invariant under relabeling, reversal, and zero-removal") {
  std::mt19937 rng(7202);
  for (int it = 0; it < 120; ++it) {
    Quiver q = qftest::random_quiver(rng, 6);
    const int n = q.vertex_count();
    DimVector d = qftest::random_vector(rng, n, 0, 3);
    QuiverSetting s(q, d);
    const bool verdict = decide_by_tits(s).infinite;

    CHECK(decide_by_tits(QuiverSetting(qftest::reorient(q, rng), d)).infinite ==
          verdict);

    CHECK(decide_by_tits(normalize(s)).infinite == verdict);

    // random relabeling: permute the vertex order
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::string> names(n);
    std::vector<i64> dd(n);
    for (int i = 0; i < n; ++i) {
      names[perm[i]] = q.name(i);
      dd[perm[i]] = d[i];
    }
    std::vector<Arrow> arrows;
    for (const Arrow& a : q.arrows()) arrows.push_back({perm[a.src], perm[a.dst]});
    QuiverSetting permuted(Quiver(names, arrows), DimVector(dd));
    CHECK(decide_by_tits(permuted).infinite == verdict);
  }
}
