#include "kostant/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace kostant {

int height(const IntVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::optional<LieType> LieType::parse(std::string_view s) {
  if (s.size() < 2) return std::nullopt;
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') return std::nullopt;
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    rank = rank * 10 + (s[i] - '0');
    if (rank > 1000) return std::nullopt;
  }
  LieType t{static_cast<Family>(f), rank};
  switch (t.family) {
    case Family::A: if (rank < 1) return std::nullopt; break;
    case Family::B: if (rank < 2) return std::nullopt; break;
    case Family::C: if (rank < 2) return std::nullopt; break;
    case Family::D: if (rank < 4) return std::nullopt; break;
    case Family::E: if (rank < 6 || rank > 8) return std::nullopt; break;
    case Family::F: if (rank != 4) return std::nullopt; break;
    case Family::G: if (rank != 2) return std::nullopt; break;
  }
  return t;
}

std::string LieType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

std::vector<LieType> all_types(int max_rank) {
  std::vector<LieType> out;
  for (int r = 1; r <= max_rank; ++r)
    for (char f : {'A', 'B', 'C', 'D', 'E', 'F', 'G'})
      if (auto t = LieType::parse(std::string(1, f) + std::to_string(r))) out.push_back(*t);
  return out;
}

int CartanData::pair_with_simple_coroot(const IntVec& v, int i) const {
  int s = 0;
  for (int j = 0; j < n; ++j) s += A[i][j] * v[j];
  return s;
}

namespace {

void set_bond(std::vector<IntVec>& A, int i, int j, int aij, int aji) {
  A[i][j] = aij;
  A[j][i] = aji;
}

std::vector<IntVec> cartan_matrix(LieType t) {
  int n = t.rank;
  std::vector<IntVec> A(n, IntVec(n, 0));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) set_bond(A, i, i + 1, -1, -1);
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::B:
      // alpha_n short: two arrows come into n from n-1.
      chain(n);
      set_bond(A, n - 1, n - 2, -2, -1);
      break;
    case Family::C:
      chain(n);
      set_bond(A, n - 2, n - 1, -2, -1);
      break;
    case Family::D:
      chain(n - 1);
      set_bond(A, n - 3, n - 1, -1, -1);
      break;
    case Family::E:
      // Bourbaki: 1-3-4-5-...-n with 2 attached to 4.
      set_bond(A, 0, 2, -1, -1);
      for (int i = 2; i + 1 < n; ++i) set_bond(A, i, i + 1, -1, -1);
      set_bond(A, 1, 3, -1, -1);
      break;
    case Family::F:
      // alpha_1 - alpha_2 => alpha_3 - alpha_4, double arrow into alpha_3.
      chain(4);
      set_bond(A, 2, 1, -2, -1);
      break;
    case Family::G:
      // alpha_1 short: triple arrow into alpha_1 from alpha_2.
      set_bond(A, 0, 1, -3, -1);
      break;
  }
  return A;
}

std::vector<int> symmetrizer(const std::vector<IntVec>& A) {
  int n = static_cast<int>(A.size());
  // d_j / d_i = A[i][j] / A[j][i] along bonds; propagate by BFS with exact
  // integer scaling, then normalize by the gcd.
  std::vector<long long> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j = 0; j < n; ++j) {
        if (i == j || A[i][j] == 0 || d[j] != 0) continue;
        // d_i * A[i][j] == d_j * A[j][i]
        long long num = d[i] * A[i][j];
        if (num % A[j][i] != 0) {
          for (auto& x : d)
            if (x != 0) x *= static_cast<long long>(-A[j][i]);
          num = d[i] * A[i][j];
        }
        d[j] = num / A[j][i];
        q.push(j);
      }
    }
  }
  long long g = 0;
  for (auto x : d) g = std::gcd(g, x);
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<int>(d[i] / g);
  return out;
}

std::vector<std::vector<int>> adjacency(const std::vector<IntVec>& A) {
  int n = static_cast<int>(A.size());
  std::vector<std::vector<int>> nbr(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && A[i][j] != 0) nbr[i].push_back(j);
  return nbr;
}

void sort_roots(std::vector<IntVec>& roots) {
  std::sort(roots.begin(), roots.end(), [](const IntVec& a, const IntVec& b) {
    int ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
}

}  // namespace

CartanData build(LieType t) {
  CartanData d;
  d.type = t;
  d.n = t.rank;
  d.A = cartan_matrix(t);
  d.neighbors = adjacency(d.A);
  d.sym = symmetrizer(d.A);
  return d;
}

CartanData dual(const CartanData& d) {
  CartanData out = d;
  out.dualized = !d.dualized;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) out.A[i][j] = d.A[j][i];
  out.neighbors = adjacency(out.A);
  out.sym = symmetrizer(out.A);
  return out;
}

CartanData induced(const CartanData& d, const std::vector<int>& vertices) {
  CartanData out;
  out.type = d.type;  // nominal; the submatrix is what matters
  out.dualized = d.dualized;
  out.n = static_cast<int>(vertices.size());
  out.A.assign(out.n, IntVec(out.n, 0));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.A[i][j] = d.A[vertices[i]][vertices[j]];
  out.neighbors = adjacency(out.A);
  out.sym = symmetrizer(out.A);
  return out;
}

IntVec reflect(const CartanData& d, int i, IntVec v) {
  v[i] -= d.pair_with_simple_coroot(v, i);
  return v;
}

std::vector<IntVec> positive_roots(const CartanData& d) {
  RootSet seen;
  std::vector<IntVec> roots;
  for (int i = 0; i < d.n; ++i) {
    IntVec e(d.n, 0);
    e[i] = 1;
    seen.insert(e);
    roots.push_back(e);
  }
  // Extend by height: beta + alpha_i is a root iff p - <beta, alpha_check_i>
  // > 0, where p is the number of times alpha_i can be subtracted.
  for (std::size_t k = 0; k < roots.size(); ++k) {
    IntVec beta = roots[k];
    for (int i = 0; i < d.n; ++i) {
      int p = 0;
      IntVec down = beta;
      for (;;) {
        down[i] -= 1;
        if (down[i] < 0 || !seen.count(down)) break;
        ++p;
      }
      if (p - d.pair_with_simple_coroot(beta, i) > 0) {
        IntVec up = beta;
        up[i] += 1;
        if (seen.insert(up).second) roots.push_back(up);
      }
    }
  }
  sort_roots(roots);
  return roots;
}

std::vector<IntVec> positive_roots_by_reflection(const CartanData& d) {
  RootSet seen;
  std::vector<IntVec> orbit;
  for (int i = 0; i < d.n; ++i) {
    IntVec e(d.n, 0);
    e[i] = 1;
    seen.insert(e);
    orbit.push_back(e);
  }
  for (std::size_t k = 0; k < orbit.size(); ++k) {
    IntVec v = orbit[k];
    for (int i = 0; i < d.n; ++i) {
      IntVec w = reflect(d, i, v);
      if (seen.insert(w).second) orbit.push_back(w);
    }
  }
  std::vector<IntVec> pos;
  for (auto& v : orbit)
    if (std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; })) pos.push_back(v);
  sort_roots(pos);
  return pos;
}

IntVec coroot_of(const CartanData& d, const IntVec& root) {
  // (alpha_i, alpha_j) = sym[i] * A[i][j] is a symmetric form with
  // (alpha_i, alpha_i) = 2 sym[i]; then alpha_check = sum 2 sym[i] a_i /
  // (alpha, alpha) alpha_check_i.
  long long norm = 0;
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j)
      norm += static_cast<long long>(root[i]) * root[j] * d.sym[i] * d.A[i][j];
  IntVec out(d.n);
  for (int i = 0; i < d.n; ++i) {
    long long num = 2LL * d.sym[i] * root[i];
    if (num % norm != 0) throw std::logic_error("coroot_of: non-integer coefficient");
    out[i] = static_cast<int>(num / norm);
  }
  return out;
}

IntVec sum_positive_roots(const CartanData& d) {
  IntVec s(d.n, 0);
  for (const auto& r : positive_roots(d))
    for (int i = 0; i < d.n; ++i) s[i] += r[i];
  return s;
}

bool ParabolicSubset::contains(int v) const {
  return std::binary_search(members.begin(), members.end(), v);
}

std::vector<std::vector<int>> ParabolicSubset::components(const CartanData& d) const {
  std::vector<std::vector<int>> comps;
  std::unordered_set<int> done;
  for (int v : members) {
    if (done.count(v)) continue;
    std::vector<int> comp{v};
    done.insert(v);
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int w : d.neighbors[comp[k]])
        if (contains(w) && !done.count(w)) {
          done.insert(w);
          comp.push_back(w);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

std::vector<int> ParabolicSubset::adjacent_vertices(const CartanData& d) const {
  std::vector<int> out;
  for (int v = 0; v < d.n; ++v) {
    if (contains(v)) continue;
    for (int w : d.neighbors[v])
      if (contains(w)) {
        out.push_back(v);
        break;
      }
  }
  return out;
}

std::vector<std::vector<int>> ParabolicSubset::components_adjacent_to(const CartanData& d,
                                                                      int beta) const {
  std::vector<std::vector<int>> out;
  for (auto& comp : components(d)) {
    bool adj = false;
    for (int v : comp)
      adj = adj || std::find(d.neighbors[beta].begin(), d.neighbors[beta].end(), v) !=
                       d.neighbors[beta].end();
    if (adj) out.push_back(comp);
  }
  return out;
}

std::vector<IntVec> parabolic_positive_roots(const CartanData& d, const ParabolicSubset& p) {
  std::vector<IntVec> out;
  for (const auto& r : positive_roots(d)) {
    bool ok = true;
    for (int i = 0; i < d.n && ok; ++i) ok = (r[i] == 0 || p.contains(i));
    if (ok) out.push_back(r);
  }
  return out;
}

int c1_coefficient(const CartanData& d, const ParabolicSubset& p, int beta) {
  if (p.contains(beta)) throw std::invalid_argument("c1_coefficient: beta in S_P");
  int s = 0;
  for (const auto& r : parabolic_positive_roots(d, p)) s += d.pair_with_simple_coroot(r, beta);
  return 2 - s;
}

std::optional<ParabolicSubset> parse_parabolic(std::string_view s, int rank) {
  ParabolicSubset p;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = s.find(',', pos);
    if (end == std::string_view::npos) end = s.size();
    std::string_view tok = s.substr(pos, end - pos);
    if (tok.empty()) return std::nullopt;
    int v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
      v = v * 10 + (c - '0');
    }
    if (v < 1 || v > rank) return std::nullopt;
    p.members.push_back(v - 1);
    pos = end + 1;
  }
  std::sort(p.members.begin(), p.members.end());
  p.members.erase(std::unique(p.members.begin(), p.members.end()), p.members.end());
  return p;
}

}  // namespace kostant
