#pragma once

#include <optional>
#include <vector>

#include "kostant/root_system.hpp"

// Strings of coroots for (P, beta): built by playing the modified Kostant
// game on the coroot diagram of each S_P component adjacent to beta, filled
// to good strings via the unbroken alpha-string property, and glued across
// components.

namespace kostant {

struct CorootString {
  int beta = 0;                   // vertex index of the simple root beta
  std::vector<int> parabolic;     // the S_P vertices the string is built for
  std::vector<IntVec> elements;   // coroot coefficient vectors, elements[0] = beta_check
};

// Maximal string for one connected component of S_P adjacent to beta.  Plays
// the modified game on the component's coroot diagram at the attachment
// vertex with k arrows (k read off the full diagram), with the canonical
// lowest-index strategy unless an explicit move sequence (full-diagram
// vertex labels) is given.
CorootString component_string(const CartanData& d, const std::vector<int>& component, int beta,
                              const std::optional<std::vector<int>>& moves = std::nullopt);

// Inserts the intermediate multiples of the single simple coroot direction
// at every jump.  Every inserted vector must be a positive coroot; a miss is
// a fatal internal error.  The result is good.
CorootString fill_gaps(const CartanData& d, const CorootString& s);

// Concatenates component strings (ascending component order) into a string
// for (P, beta).
CorootString glue(const CartanData& d, const std::vector<CorootString>& parts,
                  const ParabolicSubset& p, int beta);

// component_string + fill_gaps + glue over all components adjacent to beta.
CorootString maximal_good_string(const CartanData& d, const ParabolicSubset& p, int beta);

struct StringCertificate {
  bool good = false;
  bool maximal = false;
  std::vector<int> gaps;      // indices j with ht(elem[j]) + 1 < ht(elem[j+1])
  int length = 0;             // height of the last element
  int n_beta = 0;
  bool elements_are_coroots = false;
  bool beta_coefficient_one = false;
};

// Recomputes every invariant from scratch against the enumerated dual root
// system and the c_1 coefficient formula.
StringCertificate certify(const CartanData& d, const ParabolicSubset& p, const CorootString& s);

}  // namespace kostant
