#include "kostant/hilbert_index.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "kostant/coroot_strings.hpp"

namespace kostant {

long long AffineForm::evaluate(const IntVec& k) const {
  long long v = constant;
  for (std::size_t i = 0; i < coeff.size(); ++i) v += static_cast<long long>(coeff[i]) * k[i];
  return v;
}

namespace {

std::vector<int> complement(const ParabolicSubset& p, int n) {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (!p.contains(i)) out.push_back(i);
  return out;
}

}  // namespace

C1Data c1(const CartanData& d, const ParabolicSubset& p) {
  C1Data c;
  std::vector<int> vars = complement(p, d.n);
  if (vars.empty()) throw std::invalid_argument("c1: S_P = S makes G/P a point");
  c.b2 = static_cast<int>(vars.size());
  c.dim = static_cast<int>(positive_roots(d).size() - parabolic_positive_roots(d, p).size());
  std::vector<int> adjacent = p.adjacent_vertices(d);
  for (int beta : vars) {
    int n_beta = c1_coefficient(d, p, beta);
    bool adj = std::find(adjacent.begin(), adjacent.end(), beta) != adjacent.end();
    if (!adj && n_beta != 2) throw std::logic_error("c1: non-adjacent beta with n_beta != 2");
    c.n_beta[beta] = n_beta;
    c.k0 = std::gcd(c.k0, n_beta);
  }
  // Sanity: the formula gives 0 on S_P itself.
  return c;
}

HilbertPoly hilbert(const CartanData& d, const ParabolicSubset& p) {
  HilbertPoly h;
  h.n = d.n;
  h.parabolic = p.members;
  h.variables = complement(p, d.n);
  if (h.variables.empty()) throw std::invalid_argument("hilbert: S_P = S makes G/P a point");
  h.denominator = 1;

  RootSet in_parabolic;
  for (const auto& r : parabolic_positive_roots(d, p)) in_parabolic.insert(r);
  for (const auto& alpha : positive_roots(d)) {
    if (in_parabolic.count(alpha)) continue;
    IntVec cor = coroot_of(d, alpha);
    AffineForm f;
    f.coeff.assign(d.n, 0);
    for (int v : h.variables) f.coeff[v] = cor[v];
    f.constant = height(cor);  // <rho, alpha_check>
    h.denominator *= f.constant;
    h.factors.push_back(std::move(f));
  }
  return h;
}

Rational evaluate(const HilbertPoly& h, const IntVec& k) {
  BigInt num = 1;
  for (const auto& f : h.factors) {
    long long v = f.evaluate(k);
    if (v == 0) return Rational(0);
    num *= v;
  }
  return Rational(num, h.denominator);
}

BoxReport verify_vanishing_box(const CartanData& d, const ParabolicSubset& p) {
  BoxReport report;
  C1Data c = c1(d, p);
  HilbertPoly h = hilbert(d, p);
  std::vector<int> vars = h.variables;

  // Iterate 1 <= ntilde_beta <= n_beta, skipping the corner ntilde = n.
  IntVec ntilde(vars.size(), 1);
  IntVec k(d.n, 0);
  for (;;) {
    bool corner = true;
    for (std::size_t i = 0; i < vars.size(); ++i) corner = corner && ntilde[i] == c.n_beta[vars[i]];
    if (!corner) {
      for (std::size_t i = 0; i < vars.size(); ++i) k[vars[i]] = -ntilde[i];
      ++report.points_checked;
      if (evaluate(h, k) != 0) {
        report.all_zero = false;
        report.witnesses.push_back(ntilde);
      }
    }
    std::size_t i = 0;
    while (i < vars.size() && ntilde[i] == c.n_beta[vars[i]]) ntilde[i++] = 1;
    if (i == vars.size()) break;
    ++ntilde[i];
  }

  for (int v : vars) k[v] = -c.n_beta[v];
  report.value_at_minus_c1 = evaluate(h, k);
  Rational expected = (c.dim % 2 == 0) ? Rational(1) : Rational(-1);
  report.c1_value_ok = (report.value_at_minus_c1 == expected);
  return report;
}

std::vector<FactorCertificate> certify_linear_factors(const CartanData& d,
                                                      const ParabolicSubset& p) {
  std::vector<FactorCertificate> out;
  C1Data c = c1(d, p);
  RootSet coroots;
  for (const auto& r : positive_roots(dual(d))) coroots.insert(r);
  for (auto [beta, n_beta] : c.n_beta) {
    FactorCertificate cert;
    cert.beta = beta;
    CorootString s = maximal_good_string(d, p, beta);
    cert.string_elements = s.elements;
    cert.ok = static_cast<int>(s.elements.size()) == n_beta - 1;
    if (!cert.ok) cert.error = "string has wrong number of elements";
    for (std::size_t j = 0; cert.ok && j < s.elements.size(); ++j) {
      const IntVec& cor = s.elements[j];
      // The factor of H_P indexed by this coroot must be exactly
      // k_beta + (j+1): coefficient 1 on k_beta, 0 on the other variables.
      bool form_ok = coroots.count(cor) > 0 && cor[beta] == 1 &&
                     height(cor) == static_cast<int>(j) + 1;
      for (int v = 0; v < d.n && form_ok; ++v)
        if (v != beta && !p.contains(v)) form_ok = (cor[v] == 0);
      if (!form_ok) {
        cert.ok = false;
        cert.error = "element " + std::to_string(j) + " has support outside k_beta";
      }
    }
    out.push_back(std::move(cert));
  }
  return out;
}

Inequalities inequalities(const CartanData& d, const ParabolicSubset& p) {
  Inequalities q;
  C1Data c = c1(d, p);
  q.dim = c.dim;
  q.b2 = c.b2;
  q.k0 = c.k0;
  for (auto [beta, n_beta] : c.n_beta) q.pasquier_lhs += n_beta - 1;
  q.mukai_lhs = static_cast<long>(c.b2) * (c.k0 - 1);
  q.pasquier_ok = q.pasquier_lhs <= q.dim;
  q.mukai_ok = q.mukai_lhs <= q.dim;
  q.mukai_equality = q.mukai_lhs == q.dim;
  return q;
}

}  // namespace kostant
