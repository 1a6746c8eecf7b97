#include "kostant/pointed_box.hpp"

#include <algorithm>
#include <stdexcept>

namespace kostant {

long PointedBox::cardinality() const {
  long total = 1;
  for (int mi : m) total *= (mode == BoxMode::Pointed) ? mi + 1 : mi;
  return total - 1;
}

void PointedBox::visit(const std::function<void(const IntVec&)>& fn) const {
  int lo = (mode == BoxMode::Pointed) ? 0 : 1;
  for (int mi : m)
    if (mi < lo) return;  // empty box
  std::vector<IntVec> points;
  IntVec k(m.size(), lo);
  for (;;) {
    if (k != m) points.push_back(k);
    std::size_t i = 0;
    while (i < m.size() && k[i] == m[i]) k[i++] = lo;
    if (i == m.size()) break;
    ++k[i];
  }
  std::stable_sort(points.begin(), points.end(), [](const IntVec& a, const IntVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  for (const auto& p : points) fn(p);
}

BigInt falling_factorial(int k, int s) {
  BigInt v = 1;
  for (int j = 0; j < s; ++j) v *= (k - j);
  return v;
}

namespace {

bool leq(const IntVec& a, const IntVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

BigInt product_factorial(const IntVec& k) {
  BigInt v = 1;
  for (int ki : k)
    for (int j = 2; j <= ki; ++j) v *= j;
  return v;
}

BigInt basis_value(const IntVec& s, const IntVec& k) {
  BigInt v = 1;
  for (std::size_t i = 0; i < s.size(); ++i) v *= falling_factorial(k[i], s[i]);
  return v;
}

}  // namespace

Rational BoxCoeffs::reconstruct(const IntVec& k) const {
  Rational v = 0;
  for (const auto& [s, hs] : h)
    if (leq(s, k)) v += hs * Rational(basis_value(s, k));
  return v;
}

BoxCoeffs coeffs(const EvalOracle& oracle, const IntVec& m) {
  BoxCoeffs bc;
  bc.m = m;
  std::vector<IntVec> points;
  IntVec k(m.size(), 0);
  for (;;) {
    points.push_back(k);
    std::size_t i = 0;
    while (i < m.size() && k[i] == m[i]) k[i++] = 0;
    if (i == m.size()) break;
    ++k[i];
  }
  std::stable_sort(points.begin(), points.end(), [](const IntVec& a, const IntVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  // Finite induction on height: at each point all lower coefficients are
  // known, so M_k(k) = k_1! ... k_l! isolates h_k.
  for (const auto& pt : points) {
    Rational rest = 0;
    for (const auto& [s, hs] : bc.h)
      if (s != pt && leq(s, pt)) rest += hs * Rational(basis_value(s, pt));
    Rational hk = (oracle(pt) - rest) / Rational(product_factorial(pt));
    if (hk != 0) bc.h.emplace(pt, std::move(hk));
  }
  return bc;
}

DegreeBound degree_bound(const EvalOracle& oracle, const IntVec& m) {
  DegreeBound db;
  PointedBox box{m, BoxMode::Pointed};
  bool vanishes = true;
  box.visit([&](const IntVec& k) { vanishes = vanishes && oracle(k) == 0; });
  Rational at_m = oracle(m);
  db.applies = vanishes && at_m != 0;
  if (db.applies) {
    db.bound = height(m);
    // With the pointed box all zero, the triangular solve collapses to
    // h_m = P(m) / (m_1! ... m_l!).
    db.witness = at_m / Rational(product_factorial(m));
  }
  return db;
}

EvalOracle shift_transform(EvalOracle index_map) {
  return [index_map = std::move(index_map)](const IntVec& k) {
    IntVec shifted(k.size());
    for (std::size_t i = 0; i < k.size(); ++i) shifted[i] = -k[i] - 1;
    return index_map(shifted);
  };
}

Rational dim4_index(const Dim4Chern& c, long k1, long k2) {
  Rational v = Rational(k1 * k1 * c.t11, 2) + Rational(k2 * k2 * c.t22, 2) +
               Rational(k1 * k2 * c.t12) + Rational(k1 * (c.a1 * c.t11 + c.a2 * c.t12), 2) +
               Rational(k2 * (c.a1 * c.t12 + c.a2 * c.t22), 2) + Rational(c.todd);
  return v;
}

}  // namespace kostant
