#pragma once

#include <functional>
#include <map>
#include <vector>

#include "kostant/hilbert_index.hpp"

// Lattice-polynomial machinery: pointed boxes, falling-factorial basis
// coefficients recovered from evaluations, the degree lower bound, the
// shift transform, and the dimension-4 index formula.

namespace kostant {

// Deterministic, pure evaluation at an integer lattice point.
using EvalOracle = std::function<Rational(const IntVec&)>;

enum class BoxMode {
  Pointed,  // 0 <= k <= m, k != m
  Strict,   // 0 <  k <= m, k != m  (equivalently sum k < sum m)
};

struct PointedBox {
  IntVec m;
  BoxMode mode = BoxMode::Pointed;

  long cardinality() const;
  // Visits every lattice point exactly once, height order then lexicographic.
  void visit(const std::function<void(const IntVec&)>& fn) const;
};

// M_s(z) = z (z-1) ... (z-s+1), the degree-s falling factorial, evaluated at
// an integer; M_s(k) = 0 for 0 <= k < s and M_k(k) = k!.
BigInt falling_factorial(int k, int s);

struct BoxCoeffs {
  IntVec m;
  std::map<IntVec, Rational> h;  // sparse; multi-index -> coefficient

  // sum over s <= k of h_s M_s(k); reproduces the oracle on the box.
  Rational reconstruct(const IntVec& k) const;
};

// Height-ordered triangular solve for the falling-factorial coefficients of
// any polynomial matching the oracle on 0 <= k <= m.
BoxCoeffs coeffs(const EvalOracle& oracle, const IntVec& m);

struct DegreeBound {
  bool applies = false;  // oracle vanishes on the pointed box at m, nonzero at m
  int bound = 0;         // ht(m) when applies
  Rational witness;      // h_m
};

// h_m != 0 certifies deg P >= ht(m) for any polynomial matching the
// evaluations.
DegreeBound degree_bound(const EvalOracle& oracle, const IntVec& m);

// Q(k) = H'(-k-1) componentwise: strict-box zeros of the index map become
// pointed-box-at-(m-1) zeros of Q.
EvalOracle shift_transform(EvalOracle index_map);

struct Dim4Chern {
  long t11 = 0;   // tau_1^2 [M]
  long t22 = 0;   // tau_2^2 [M]
  long t12 = 0;   // tau_1 tau_2 [M]
  long a1 = 0;    // c_1 = a1 tau_1 + a2 tau_2
  long a2 = 0;
  long todd = 0;  // Todd genus
};

// Index of the line bundle with Chern class k1 tau_1 + k2 tau_2 on an almost
// complex 4-manifold.
Rational dim4_index(const Dim4Chern& chern, long k1, long k2);

}  // namespace kostant
