#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

// Finite-type Cartan/Dynkin data in the Bourbaki labeling, plus root and
// coroot enumeration in simple-(co)root coordinates.  All arithmetic is
// integer arithmetic derived from the Cartan matrix; no real geometry.

namespace kostant {

// Coefficient vector over simple roots (or simple coroots, on the dual
// diagram).  Also used for chip configurations and weight coordinates.
using IntVec = std::vector<int>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u + static_cast<std::size_t>(x + 512);
    return h;
  }
};

using RootSet = std::unordered_set<IntVec, IntVecHash>;

int height(const IntVec& v);

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct LieType {
  Family family;
  int rank;

  // Parses e.g. "A4", "e8", "F4" (case-insensitive).  Rejects ranks outside
  // the classification (D needs rank >= 4, E in {6,7,8}, ...).
  static std::optional<LieType> parse(std::string_view s);

  std::string name() const;
  bool operator==(const LieType&) const = default;
};

// All finite types with rank <= max_rank, in a fixed deterministic order.
std::vector<LieType> all_types(int max_rank);

struct CartanData {
  LieType type;
  bool dualized = false;  // true if this is the coroot diagram of `type`
  int n = 0;
  // A[i][j] = <alpha_j, alpha_check_i>; rows pair against the i-th coroot.
  std::vector<IntVec> A;
  std::vector<std::vector<int>> neighbors;
  // Symmetrizer: positive integers with sym[i]*A[i][j] == sym[j]*A[j][i].
  std::vector<int> sym;

  // Number of arrows coming into vertex i from vertex j (1, 2 or 3).
  int arrows(int i, int j) const { return -A[i][j]; }

  // <v, alpha_check_i> for v in simple-root coordinates.
  int pair_with_simple_coroot(const IntVec& v, int i) const;
};

// Bourbaki-labeled Cartan data for the given type.
CartanData build(LieType t);

// Coroot diagram: Cartan matrix transposed, arrows reversed.  Involution.
CartanData dual(const CartanData& d);

// Subdiagram induced on the given (sorted, 0-based) vertices.  Coordinates of
// the result are local; callers keep the vertex map.
CartanData induced(const CartanData& d, const std::vector<int>& vertices);

// s_i(v) = v - <v, alpha_check_i> alpha_i, in simple-root coordinates.
IntVec reflect(const CartanData& d, int i, IntVec v);

// All positive roots via the unbroken-string closure algorithm, sorted by
// height then lexicographically.
std::vector<IntVec> positive_roots(const CartanData& d);

// Independent enumeration: closure of the simple roots under all simple
// reflections, restricted to nonnegative vectors.  Used as a cross-check.
std::vector<IntVec> positive_roots_by_reflection(const CartanData& d);

// Coefficients of alpha_check over the simple coroots, for a root alpha given
// in simple-root coordinates.  These are exactly the positive roots of
// dual(d) when alpha ranges over positive roots of d.
IntVec coroot_of(const CartanData& d, const IntVec& root);

IntVec sum_positive_roots(const CartanData& d);

struct ParabolicSubset {
  std::vector<int> members;  // sorted, 0-based

  bool contains(int v) const;
  // Connected components of the induced subdiagram, each sorted.
  std::vector<std::vector<int>> components(const CartanData& d) const;
  // Vertices outside the subset with a neighbor inside it.
  std::vector<int> adjacent_vertices(const CartanData& d) const;
  // Components adjacent to the given external vertex.
  std::vector<std::vector<int>> components_adjacent_to(const CartanData& d, int beta) const;
};

// Positive roots supported on S_P.
std::vector<IntVec> parabolic_positive_roots(const CartanData& d, const ParabolicSubset& p);

// Coefficient n_beta of the fundamental weight of beta in c_1(T(G/P)):
// n_beta = 2 - <sum of R_P^+, beta_check>.  Requires beta outside S_P.
int c1_coefficient(const CartanData& d, const ParabolicSubset& p, int beta);

// Parses a 1-based comma-separated vertex list such as "1,2,3" into a
// 0-based ParabolicSubset.  Empty string means the empty subset.
std::optional<ParabolicSubset> parse_parabolic(std::string_view s, int rank);

}  // namespace kostant
