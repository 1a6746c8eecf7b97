#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "kostant/root_system.hpp"

using namespace kostant;

TEST_CASE("type parsing") {
  auto t = LieType::parse("A4");
  REQUIRE(t.has_value());
  CHECK(t->family == Family::A);
  CHECK(t->rank == 4);
  CHECK(t->name() == "A4");

  CHECK(LieType::parse("e8").has_value());
  CHECK(LieType::parse("f4").has_value());
  CHECK_FALSE(LieType::parse("Z9").has_value());
  CHECK_FALSE(LieType::parse("A0").has_value());
  CHECK_FALSE(LieType::parse("B1").has_value());
  CHECK_FALSE(LieType::parse("D3").has_value());
  CHECK_FALSE(LieType::parse("E5").has_value());
  CHECK_FALSE(LieType::parse("E9").has_value());
  CHECK_FALSE(LieType::parse("F5").has_value());
  CHECK_FALSE(LieType::parse("G3").has_value());
  CHECK_FALSE(LieType::parse("A").has_value());
  CHECK_FALSE(LieType::parse("A4x").has_value());
}

TEST_CASE("all_types enumeration") {
  auto ts = all_types(4);
  std::vector<std::string> names;
  for (auto t : ts) names.push_back(t.name());
  CHECK(names == std::vector<std::string>{"A1", "A2", "B2", "C2", "G2", "A3", "B3", "C3", "A4",
                                          "B4", "C4", "D4", "F4"});
  CHECK(all_types(8).size() == 32);
}

TEST_CASE("Cartan matrices and arrows") {
  CartanData f4 = build(*LieType::parse("F4"));
  // Double arrow into vertex 3 (0-based 2) from vertex 2.
  CHECK(f4.A[2][1] == -2);
  CHECK(f4.A[1][2] == -1);
  CHECK(f4.arrows(2, 1) == 2);
  CHECK(f4.arrows(1, 2) == 1);
  CHECK(f4.arrows(3, 2) == 1);

  CartanData g2 = build(*LieType::parse("G2"));
  CHECK(g2.A[0][1] == -3);
  CHECK(g2.arrows(0, 1) == 3);

  CartanData b3 = build(*LieType::parse("B3"));
  CHECK(b3.A[2][1] == -2);  // alpha_3 short
  CartanData c3 = build(*LieType::parse("C3"));
  CHECK(c3.A[1][2] == -2);  // alpha_3 long

  // Symmetrizer identity d_i A[i][j] = d_j A[j][i].
  for (auto t : all_types(8)) {
    CartanData d = build(t);
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) CHECK(d.sym[i] * d.A[i][j] == d.sym[j] * d.A[j][i]);
  }
}

TEST_CASE("dual is an involution that transposes") {
  for (auto t : all_types(6)) {
    CartanData d = build(t);
    CartanData co = dual(d);
    CHECK(co.dualized);
    for (int i = 0; i < d.n; ++i)
      for (int j = 0; j < d.n; ++j) CHECK(co.A[i][j] == d.A[j][i]);
    CartanData back = dual(co);
    CHECK_FALSE(back.dualized);
    CHECK(back.A == d.A);
  }
}

TEST_CASE("positive root counts") {
  auto count = [](const char* name) {
    return positive_roots(build(*LieType::parse(name))).size();
  };
  CHECK(count("A1") == 1);
  CHECK(count("A2") == 3);
  CHECK(count("A4") == 10);
  CHECK(count("B3") == 9);
  CHECK(count("C3") == 9);
  CHECK(count("D4") == 12);
  CHECK(count("G2") == 6);
  CHECK(count("F4") == 24);
  CHECK(count("E6") == 36);
  CHECK(count("E7") == 63);
  CHECK(count("E8") == 120);
}

TEST_CASE("closure enumeration matches reflection-orbit enumeration") {
  for (auto t : all_types(6)) {
    CartanData d = build(t);
    CHECK(positive_roots(d) == positive_roots_by_reflection(d));
    CartanData co = dual(d);
    CHECK(positive_roots(co) == positive_roots_by_reflection(co));
  }
}

TEST_CASE("reflections are involutions preserving the root set") {
  for (auto name : {"A3", "B3", "G2", "F4"}) {
    CartanData d = build(*LieType::parse(name));
    auto roots = positive_roots(d);
    RootSet all;
    for (auto& r : roots) {
      all.insert(r);
      IntVec neg = r;
      for (auto& x : neg) x = -x;
      all.insert(neg);
    }
    for (auto& r : roots)
      for (int i = 0; i < d.n; ++i) {
        IntVec img = reflect(d, i, r);
        CHECK(all.count(img) == 1);
        CHECK(reflect(d, i, img) == r);
      }
  }
}

TEST_CASE("coroots") {
  CartanData g2 = build(*LieType::parse("G2"));
  // Simple roots map to the matching simple coroot.
  CHECK(coroot_of(g2, IntVec{1, 0}) == IntVec{1, 0});
  CHECK(coroot_of(g2, IntVec{0, 1}) == IntVec{0, 1});
  // Highest (long) root 3a1+2a2 has a short coroot.
  CHECK(coroot_of(g2, IntVec{3, 2}) == IntVec{1, 2});

  // coroot_of maps positive roots onto the positive roots of the dual.
  for (auto t : all_types(6)) {
    CartanData d = build(t);
    std::set<IntVec> images, expected;
    for (const auto& r : positive_roots(d)) images.insert(coroot_of(d, r));
    for (const auto& r : positive_roots(dual(d))) expected.insert(r);
    CHECK(images == expected);
  }
}

TEST_CASE("sum of positive roots") {
  CartanData a4 = build(*LieType::parse("A4"));
  CHECK(sum_positive_roots(a4) == IntVec{4, 6, 6, 4});
  CartanData a2 = build(*LieType::parse("A2"));
  CHECK(sum_positive_roots(a2) == IntVec{2, 2});
}

TEST_CASE("parabolic subsets") {
  CartanData a3 = build(*LieType::parse("A3"));
  ParabolicSubset p{{0, 2}};
  CHECK(p.contains(0));
  CHECK_FALSE(p.contains(1));
  CHECK(p.components(a3) == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(p.adjacent_vertices(a3) == std::vector<int>{1});
  CHECK(p.components_adjacent_to(a3, 1) == std::vector<std::vector<int>>{{0}, {2}});
  CHECK(parabolic_positive_roots(a3, p).size() == 2);

  CartanData f4 = build(*LieType::parse("F4"));
  ParabolicSubset q{{0, 1, 2}};
  CHECK(q.components(f4) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(q.adjacent_vertices(f4) == std::vector<int>{3});
  CHECK(parabolic_positive_roots(f4, q).size() == 9);
}

TEST_CASE("c1 coefficients") {
  CartanData a3 = build(*LieType::parse("A3"));
  CHECK(c1_coefficient(a3, ParabolicSubset{{0, 2}}, 1) == 4);
  CartanData f4 = build(*LieType::parse("F4"));
  CHECK(c1_coefficient(f4, ParabolicSubset{{0, 1, 2}}, 3) == 11);
  // Full flag: every coefficient is 2.
  for (auto t : all_types(5)) {
    CartanData d = build(t);
    for (int beta = 0; beta < d.n; ++beta) CHECK(c1_coefficient(d, ParabolicSubset{}, beta) == 2);
  }
  CHECK_THROWS_AS(c1_coefficient(a3, ParabolicSubset{{0, 2}}, 0), std::invalid_argument);
}

TEST_CASE("induced subdiagram") {
  CartanData f4 = build(*LieType::parse("F4"));
  CartanData sub = induced(f4, {0, 1, 2});
  CHECK(sub.n == 3);
  CHECK(sub.A[2][1] == -2);
  CHECK(positive_roots(sub).size() == 9);  // B3
}

TEST_CASE("parabolic parsing") {
  auto p = parse_parabolic("1,2,3", 4);
  REQUIRE(p.has_value());
  CHECK(p->members == std::vector<int>{0, 1, 2});
  auto empty = parse_parabolic("", 4);
  REQUIRE(empty.has_value());
  CHECK(empty->members.empty());
  auto dup = parse_parabolic("2,1,2", 4);
  REQUIRE(dup.has_value());
  CHECK(dup->members == std::vector<int>{0, 1});
  CHECK_FALSE(parse_parabolic("0", 4).has_value());
  CHECK_FALSE(parse_parabolic("5", 4).has_value());
  CHECK_FALSE(parse_parabolic("1,,2", 4).has_value());
  CHECK_FALSE(parse_parabolic("x", 4).has_value());
}
