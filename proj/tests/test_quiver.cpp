#include "doctest.h"
#include "test_util.hpp"

using namespace quiverfin;
using qftest::make;

TEST_CASE("tits form on the stated instances") {
  auto kron = make({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {1, 1});
  CHECK(tits_form(kron) == 0);

  auto point = make({"a"}, {}, {1});
  CHECK(tits_form(point) == 1);

  auto arrow = make({"a", "b"}, {{"a", "b"}}, {2, 3});
  CHECK(tits_form(arrow) == 7);  // 4 - 6 + 9

  auto loop = make({"x"}, {{"x", "x"}}, {3});
  CHECK(tits_form(loop) == 0);  // 9 - 9, loops subtract d(x)^2
}

TEST_CASE("bilinear form on the stated instances") {
  auto arrow = make({"x", "y"}, {{"x", "y"}}, {0, 0});
  CHECK(bilinear_form(arrow.quiver, DimVector::zeros(2), DimVector({5, -3})) == 0);

  auto kron = make({"a", "b"}, {{"a", "b"}, {"a", "b"}}, {1, 1});
  CHECK(bilinear_form(kron.quiver, kron.dim, kron.dim) == 0);

  CHECK(bilinear_form(arrow.quiver, DimVector::basis(2, 0), DimVector::basis(2, 1)) ==
        -1);

  CHECK_THROWS_AS(bilinear_form(arrow.quiver, DimVector::zeros(3), DimVector::zeros(2)),
                  std::invalid_argument);
}

TEST_CASE("tits form is half the bilinear square, over Z") {
  std::mt19937 rng(7001);
  for (int it = 0; it < 200; ++it) {
    Quiver q = qftest::random_quiver(rng, 6);
    DimVector d = qftest::random_vector(rng, q.vertex_count(), -9, 9);
    CHECK(2 * tits_form(q, d) == bilinear_form(q, d, d));
  }
}

TEST_CASE("bilinear form is symmetric and additive") {
  std::mt19937 rng(7002);
  for (int it = 0; it < 200; ++it) {
    Quiver q = qftest::random_quiver(rng, 6);
    const int n = q.vertex_count();
    DimVector a = qftest::random_vector(rng, n, -9, 9);
    DimVector b = qftest::random_vector(rng, n, -9, 9);
    DimVector c = qftest::random_vector(rng, n, -9, 9);
    CHECK(bilinear_form(q, a, b) == bilinear_form(q, b, a));
    std::vector<i64> sum(n);
    for (int i = 0; i < n; ++i) sum[i] = a[i] + c[i];
    CHECK(bilinear_form(q, DimVector(sum), b) ==
          bilinear_form(q, a, b) + bilinear_form(q, c, b));
  }
}

TEST_CASE("tits form ignores arrow orientation") {
  std::mt19937 rng(7003);
  for (int it = 0; it < 100; ++it) {
    Quiver q = qftest::random_quiver(rng, 6);
    DimVector d = qftest::random_vector(rng, q.vertex_count(), 0, 9);
    CHECK(tits_form(q, d) == tits_form(qftest::reorient(q, rng), d));
  }
}

TEST_CASE("tits form adds up over connected components") {
  std::mt19937 rng(7004);
  for (int it = 0; it < 100; ++it) {
    Quiver q = qftest::random_quiver(rng, 4);
    Quiver r = qftest::random_quiver(rng, 4);
    // disjoint union
    std::vector<std::string> names;
    for (const auto& n : q.names()) names.push_back("L" + n);
    for (const auto& n : r.names()) names.push_back("R" + n);
    std::vector<Arrow> arrows = q.arrows();
    for (Arrow a : r.arrows())
      arrows.push_back({a.src + q.vertex_count(), a.dst + q.vertex_count()});
    Quiver both(names, arrows);
    DimVector d = qftest::random_vector(rng, both.vertex_count(), 0, 5);
    QuiverSetting s(both, d);
    i64 total = 0;
    for (const auto& comp : components(both))
      total += tits_form(restrict_setting(s, comp));
    CHECK(total == tits_form(s));
  }
}

TEST_CASE("restriction") {
  auto path = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {1, 2, 3});

  std::vector<int> all{0, 1, 2};
  QuiverSetting full = restrict_setting(path, all);
  CHECK(full.quiver == path.quiver);
  CHECK(full.dim == path.dim);

  QuiverSetting empty = restrict_setting(path, std::vector<int>{});
  CHECK(empty.quiver.vertex_count() == 0);

  std::vector<int> ab{0, 1};
  QuiverSetting sub = restrict_setting(path, ab);
  CHECK(sub.quiver.vertex_count() == 2);
  CHECK(sub.quiver.arrow_count() == 1);
  CHECK(sub.dim == DimVector({1, 2}));
}

TEST_CASE("components") {
  auto tri = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {1, 1, 1});
  CHECK(components(tri.quiver).size() == 1);

  Quiver two({"a", "b"}, std::vector<Arrow>{});
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0});
  CHECK(comps[1] == std::vector<int>{1});

  CHECK(components(Quiver{}).empty());
}

TEST_CASE("pushforward and pullback") {
  auto tri = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}, {1, 1, 1});
  Embedding id = Embedding::identity(tri.quiver);
  DimVector d({3, 1, 4});
  CHECK(pushforward(id, d) == d);
  CHECK(pullback(id, d) == d);

  Quiver point({"p"}, std::vector<Arrow>{});
  Embedding into(point, tri.quiver, {1}, {});
  CHECK(pushforward(into, DimVector({5})) == DimVector({0, 5, 0}));
  CHECK(pushforward(into, DimVector({0})) == DimVector({0, 0, 0}));
  CHECK(pullback(into, DimVector({7, 7, 7})) == DimVector({7}));
}

TEST_CASE("pushforward/pullback adjunction, exhaustively on a small embedding") {
  Quiver tri({"a", "b", "c"},
             std::vector<Arrow>{{0, 1}, {1, 2}, {2, 0}});
  Quiver edge({"x", "y"}, std::vector<Arrow>{{0, 1}});
  Embedding e(edge, tri, {0, 1}, {0});
  for (i64 d0 = 0; d0 <= 2; ++d0)
    for (i64 d1 = 0; d1 <= 2; ++d1)
      for (i64 t0 = 0; t0 <= 2; ++t0)
        for (i64 t1 = 0; t1 <= 2; ++t1)
          for (i64 t2 = 0; t2 <= 2; ++t2) {
            DimVector d({d0, d1});
            DimVector t({t0, t1, t2});
            CHECK(d.leq(pullback(e, t)) == pushforward(e, d).leq(t));
          }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Quiver({"a", "a"}, std::vector<Arrow>{}), std::invalid_argument);
  CHECK_THROWS_AS(Quiver({"a"}, std::vector<Arrow>{{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(QuiverSetting(Quiver({"a"}, std::vector<Arrow>{}), DimVector({-1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(QuiverSetting(Quiver({"a"}, std::vector<Arrow>{}),
                                DimVector({kDefaultDimLimit + 1})),
                  std::overflow_error);
  CHECK_THROWS_AS(QuiverSetting(Quiver({"a"}, std::vector<Arrow>{}), DimVector({1, 2})),
                  std::invalid_argument);

  // forms must not silently wrap
  Quiver point({"a"}, std::vector<Arrow>{});
  CHECK_THROWS_AS(tits_form(point, DimVector({i64{1} << 40})), std::overflow_error);
}

TEST_CASE("embedding validation") {
  Quiver tri({"a", "b", "c"}, std::vector<Arrow>{{0, 1}, {1, 2}, {2, 0}});
  Quiver edge({"x", "y"}, std::vector<Arrow>{{0, 1}});
  CHECK_THROWS_AS(Embedding(edge, tri, {0, 0}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(Embedding(edge, tri, {1, 2}, {0}), std::invalid_argument);
  CHECK_NOTHROW(Embedding(edge, tri, {1, 2}, {1}));
}

TEST_CASE("normalization drops zero vertices") {
  auto s = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {1, 0, 3});
  QuiverSetting n = normalize(s);
  CHECK(n.quiver.vertex_count() == 2);
  CHECK(n.quiver.arrow_count() == 0);
  CHECK(n.dim == DimVector({1, 3}));
}
