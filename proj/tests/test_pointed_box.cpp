#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "kostant/pointed_box.hpp"

using namespace kostant;

namespace {

BigInt factorial_product(const IntVec& m) {
  BigInt v = 1;
  for (int mi : m)
    for (int j = 2; j <= mi; ++j) v *= j;
  return v;
}

Rational basis_eval(const std::map<IntVec, Rational>& h, const IntVec& k) {
  Rational v = 0;
  for (const auto& [s, hs] : h) {
    BigInt m = 1;
    for (std::size_t i = 0; i < s.size(); ++i) m *= falling_factorial(k[i], s[i]);
    v += hs * Rational(m);
  }
  return v;
}

void visit_grid(const IntVec& hi, const std::function<void(const IntVec&)>& fn) {
  IntVec k(hi.size(), 0);
  for (;;) {
    fn(k);
    std::size_t i = 0;
    while (i < hi.size() && k[i] == hi[i]) k[i++] = 0;
    if (i == hi.size()) break;
    ++k[i];
  }
}

}  // namespace

TEST_CASE("falling factorials") {
  CHECK(falling_factorial(0, 0) == 1);
  CHECK(falling_factorial(5, 0) == 1);
  for (int s = 1; s <= 6; ++s)
    for (int k = 0; k < s; ++k) CHECK(falling_factorial(k, s) == 0);
  CHECK(falling_factorial(3, 3) == 6);
  CHECK(falling_factorial(4, 4) == 24);
  CHECK(falling_factorial(7, 3) == 7 * 6 * 5);
  CHECK(falling_factorial(-1, 2) == 2);  // (-1)(-2)
}

TEST_CASE("box cardinality and iteration") {
  PointedBox pointed{{2, 3}, BoxMode::Pointed};
  CHECK(pointed.cardinality() == 11);  // 3*4 - 1
  long seen = 0;
  int last_ht = -1;
  pointed.visit([&](const IntVec& k) {
    ++seen;
    CHECK(k != IntVec{2, 3});
    CHECK(height(k) >= last_ht);
    last_ht = height(k);
  });
  CHECK(seen == pointed.cardinality());

  PointedBox strict{{2, 3}, BoxMode::Strict};
  CHECK(strict.cardinality() == 5);  // 2*3 - 1
  seen = 0;
  strict.visit([&](const IntVec& k) {
    ++seen;
    for (int x : k) CHECK(x >= 1);
  });
  CHECK(seen == 5);

  // m with a zero entry: strict box is empty.
  long none = 0;
  PointedBox{{0, 3}, BoxMode::Strict}.visit([&](const IntVec&) { ++none; });
  CHECK(none == 0);
}

TEST_CASE("coefficients of simple polynomials") {
  // P(z) = z over m = (2).
  BoxCoeffs linear = coeffs([](const IntVec& k) { return Rational(k[0]); }, {2});
  CHECK(linear.h.size() == 1);
  CHECK(linear.h.at(IntVec{1}) == 1);

  // P(z1, z2) = z1 z2 over m = (1,1).
  BoxCoeffs prod = coeffs([](const IntVec& k) { return Rational(k[0] * k[1]); }, {1, 1});
  CHECK(prod.h.size() == 1);
  CHECK(prod.h.at(IntVec{1, 1}) == 1);

  // Shifted A2 full-flag index map, m = (1,1): corner coefficient nonzero.
  auto a2 = [](const IntVec& k) {
    return Rational((k[0] + 1) * (k[1] + 1) * (k[0] + k[1] + 2), 2);
  };
  BoxCoeffs shifted = coeffs(shift_transform(a2), {1, 1});
  CHECK(shifted.h.count(IntVec{1, 1}) == 1);
  CHECK(shifted.h.at(IntVec{1, 1}) != 0);
}

TEST_CASE("reconstruction reproduces random basis polynomials") {
  std::mt19937 rng(321);
  std::uniform_int_distribution<int> dim_pick(1, 3), deg_pick(0, 3), coef(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    int l = dim_pick(rng);
    IntVec m(l);
    for (auto& x : m) x = deg_pick(rng);
    std::map<IntVec, Rational> truth;
    visit_grid(m, [&](const IntVec& s) {
      int c = coef(rng);
      if (c != 0) truth[s] = c;
    });
    EvalOracle oracle = [&truth](const IntVec& k) { return basis_eval(truth, k); };
    BoxCoeffs bc = coeffs(oracle, m);
    CHECK(bc.h == truth);
    // Grid strictly larger than the box.
    IntVec hi = m;
    for (auto& x : hi) x += 2;
    visit_grid(hi, [&](const IntVec& k) { CHECK(bc.reconstruct(k) == oracle(k)); });
  }
}

TEST_CASE("degree bound certificates") {
  // P(z) = z(z-1), m = (2).
  DegreeBound quad = degree_bound([](const IntVec& k) { return Rational(k[0] * (k[0] - 1)); }, {2});
  CHECK(quad.applies);
  CHECK(quad.bound == 2);
  CHECK(quad.witness == 1);

  // Degenerate m = 0: empty pointed box, constant 1 at the corner.
  DegreeBound con = degree_bound([](const IntVec&) { return Rational(1); }, {0, 0});
  CHECK(con.applies);
  CHECK(con.bound == 0);
  CHECK(con.witness == 1);

  // Nonzero inside the box: does not apply.
  DegreeBound no = degree_bound([](const IntVec&) { return Rational(1); }, {1});
  CHECK_FALSE(no.applies);
}

TEST_CASE("vanishing on a pointed box collapses the coefficients") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> dim_pick(1, 3), deg_pick(1, 3), coef(1, 9), sign(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    int l = dim_pick(rng);
    IntVec m(l);
    for (auto& x : m) x = deg_pick(rng);
    // c * M_m plus junk supported strictly above the box.
    std::map<IntVec, Rational> truth;
    int c = coef(rng) * (sign(rng) ? 1 : -1);
    truth[m] = c;
    for (int extra = 0; extra < 3; ++extra) {
      IntVec s = m;
      s[static_cast<std::size_t>(rng() % l)] += 1 + static_cast<int>(rng() % 2);
      truth[s] = coef(rng);
    }
    EvalOracle oracle = [&truth](const IntVec& k) { return basis_eval(truth, k); };
    DegreeBound db = degree_bound(oracle, m);
    REQUIRE(db.applies);
    CHECK(db.bound == height(m));
    CHECK(db.witness == c);
    CHECK(db.witness == oracle(m) / Rational(factorial_product(m)));
    // The triangular solve agrees: h_s = 0 below m, h_m = the witness.
    BoxCoeffs bc = coeffs(oracle, m);
    for (const auto& [s, hs] : bc.h)
      if (s != m) CHECK(hs == 0);
    CHECK(bc.h.at(m) == c);
  }
}

TEST_CASE("shift transform") {
  // A1: H(k) = k+1, Q(k) = H(-k-1) = -k.
  EvalOracle q = shift_transform([](const IntVec& k) { return Rational(k[0] + 1); });
  CHECK(q(IntVec{0}) == 0);
  CHECK(q(IntVec{1}) == -1);
  DegreeBound db = degree_bound(q, {1});
  CHECK(db.applies);
  CHECK(db.bound == 1);
}

TEST_CASE("dimension-4 index formula") {
  Dim4Chern trivial{0, 0, 0, 0, 0, 1};
  for (int k1 = -3; k1 <= 3; ++k1)
    for (int k2 = -3; k2 <= 3; ++k2) CHECK(dim4_index(trivial, k1, k2) == 1);

  // CP1 x CP1: index (k1+1)(k2+1).
  Dim4Chern p1p1{0, 0, 1, 2, 2, 1};
  for (int k1 = -4; k1 <= 4; ++k1)
    for (int k2 = -4; k2 <= 4; ++k2)
      CHECK(dim4_index(p1p1, k1, k2) == Rational((k1 + 1) * (k2 + 1)));
}
