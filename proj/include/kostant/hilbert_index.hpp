#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kostant/root_system.hpp"

// The factored Hilbert polynomial of G_C/P, exact evaluation, the c_1
// coefficients n_beta, pointed-box vanishing verification, symbolic linear
// factor certificates from good strings, and the Pasquier/Mukai checks.

namespace kostant {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Integer affine-linear form in the variables k_beta (beta outside S_P).
// For the factor built from a coroot: coeff[beta] is the beta_check
// coefficient of the coroot, constant its height.
struct AffineForm {
  IntVec coeff;  // full length n; zero on S_P
  int constant = 0;

  long long evaluate(const IntVec& k) const;
};

struct HilbertPoly {
  int n = 0;
  std::vector<int> parabolic;       // S_P, sorted
  std::vector<int> variables;       // S \ S_P, sorted
  std::vector<AffineForm> factors;  // one per alpha in R+ \ R_P+
  BigInt denominator;               // product of coroot heights
};

struct C1Data {
  std::map<int, int> n_beta;  // per beta in S \ S_P
  int k0 = 0;                 // gcd of the n_beta
  int dim = 0;                // |R+ \ R_P+|
  int b2 = 0;                 // |S \ S_P|
};

// Rejects S_P = S (G/P a point).
C1Data c1(const CartanData& d, const ParabolicSubset& p);

HilbertPoly hilbert(const CartanData& d, const ParabolicSubset& p);

// Exact value at an integer weight; k is a full-length vector, entries on
// S_P ignored.
Rational evaluate(const HilbertPoly& h, const IntVec& k);

struct BoxReport {
  long points_checked = 0;
  bool all_zero = true;
  std::vector<IntVec> witnesses;  // box points with nonzero value (ntilde coordinates)
  Rational value_at_minus_c1;
  bool c1_value_ok = false;  // equals (-1)^dim
};

// Evaluates H_P at -sum ntilde_beta varpi_beta over the strict box
// (0 < ntilde <= n_beta, sum ntilde < sum n_beta) and at -c_1.
BoxReport verify_vanishing_box(const CartanData& d, const ParabolicSubset& p);

struct FactorCertificate {
  int beta = 0;
  bool ok = false;
  std::vector<IntVec> string_elements;
  std::string error;  // first falsified element, when not ok
};

// Builds the maximal good string for every beta outside S_P and checks each
// element's affine form is literally k_beta + (height), heights 1..n_beta-1.
std::vector<FactorCertificate> certify_linear_factors(const CartanData& d,
                                                      const ParabolicSubset& p);

struct Inequalities {
  long pasquier_lhs = 0;
  long mukai_lhs = 0;
  int dim = 0;
  int b2 = 0;
  int k0 = 0;
  bool pasquier_ok = false;
  bool mukai_ok = false;
  bool mukai_equality = false;
};

Inequalities inequalities(const CartanData& d, const ParabolicSubset& p);

}  // namespace kostant
