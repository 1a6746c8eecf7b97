#include "kostant/coroot_strings.hpp"

#include <algorithm>
#include <stdexcept>

#include "kostant/kostant_game.hpp"

namespace kostant {

namespace {

int attachment_vertex(const CartanData& d, const std::vector<int>& component, int beta) {
  int found = -1;
  for (int v : component) {
    if (d.A[beta][v] == 0) continue;
    if (found >= 0) throw std::invalid_argument("component attaches to beta at two vertices");
    found = v;
  }
  if (found < 0) throw std::invalid_argument("component not adjacent to beta");
  return found;
}

IntVec embed(const std::vector<int>& component, const IntVec& local, int beta, int n) {
  IntVec out(n, 0);
  out[beta] = 1;
  for (std::size_t i = 0; i < component.size(); ++i) out[component[i]] = local[i];
  return out;
}

}  // namespace

CorootString component_string(const CartanData& d, const std::vector<int>& component, int beta,
                              const std::optional<std::vector<int>>& moves) {
  int j = attachment_vertex(d, component, beta);
  // k arrows point from alpha_j into beta: k = -<alpha_j, beta_check>.
  int k = d.arrows(beta, j);
  int j_local = static_cast<int>(std::lower_bound(component.begin(), component.end(), j) -
                                 component.begin());
  Game g = modified_game(dual(induced(d, component)), j_local, k);

  CorootString s;
  s.beta = beta;
  s.parabolic = component;
  IntVec chips(component.size(), 0);
  s.elements.push_back(embed(component, chips, beta, d.n));
  if (moves) {
    for (std::size_t step = 0; step < moves->size(); ++step) {
      int v = (*moves)[step];
      auto it = std::lower_bound(component.begin(), component.end(), v);
      if (it == component.end() || *it != v)
        throw IllegalMove(static_cast<int>(step), "move outside the component");
      chips = fire(g, std::move(chips), static_cast<int>(it - component.begin()));
      s.elements.push_back(embed(component, chips, beta, d.n));
    }
    if (has_unhappy(g, chips))
      throw std::invalid_argument("move sequence does not reach the terminal configuration");
  } else {
    for (;;) {
      int pick = -1;
      for (int i = 0; i < g.diagram.n && pick < 0; ++i)
        if (status(g, chips, i) == VertexStatus::Unhappy) pick = i;
      if (pick < 0) break;
      chips = fire(g, std::move(chips), pick);
      s.elements.push_back(embed(component, chips, beta, d.n));
    }
  }
  return s;
}

CorootString fill_gaps(const CartanData& d, const CorootString& s) {
  RootSet coroots;
  for (const auto& r : positive_roots(dual(d))) coroots.insert(r);

  CorootString out;
  out.beta = s.beta;
  out.parabolic = s.parabolic;
  for (std::size_t k = 0; k < s.elements.size(); ++k) {
    if (k == 0) {
      out.elements.push_back(s.elements[0]);
      continue;
    }
    const IntVec& prev = s.elements[k - 1];
    const IntVec& next = s.elements[k];
    int dir = -1, jump = 0;
    for (int i = 0; i < d.n; ++i) {
      if (prev[i] == next[i]) continue;
      if (dir >= 0) throw std::logic_error("fill_gaps: consecutive elements differ in two places");
      dir = i;
      jump = next[i] - prev[i];
    }
    if (dir < 0 || jump <= 0) throw std::logic_error("fill_gaps: non-increasing step");
    for (int m = 1; m <= jump; ++m) {
      IntVec mid = prev;
      mid[dir] += m;
      // Unbroken alpha-string: every intermediate vector is a coroot.
      if (!coroots.count(mid)) throw std::logic_error("fill_gaps: inserted vector is not a coroot");
      out.elements.push_back(std::move(mid));
    }
  }
  return out;
}

CorootString glue(const CartanData& d, const std::vector<CorootString>& parts,
                  const ParabolicSubset& p, int beta) {
  if (parts.size() > 3) throw std::invalid_argument("glue: more than three component strings");
  CorootString out;
  out.beta = beta;
  out.parabolic = p.members;
  IntVec offset(d.n, 0);
  out.elements.push_back([&] {
    IntVec e(d.n, 0);
    e[beta] = 1;
    return e;
  }());
  for (const auto& part : parts) {
    if (part.beta != beta) throw std::invalid_argument("glue: component string for wrong beta");
    for (std::size_t k = 1; k < part.elements.size(); ++k) {
      IntVec e = part.elements[k];
      for (int i = 0; i < d.n; ++i) e[i] += offset[i];
      e[beta] = 1;  // offsets never touch the beta coordinate
      out.elements.push_back(std::move(e));
    }
    for (int i = 0; i < d.n; ++i)
      if (i != beta) offset[i] = out.elements.back()[i];
  }
  return out;
}

CorootString maximal_good_string(const CartanData& d, const ParabolicSubset& p, int beta) {
  std::vector<CorootString> parts;
  for (const auto& comp : p.components_adjacent_to(d, beta))
    parts.push_back(fill_gaps(d, component_string(d, comp, beta)));
  return glue(d, parts, p, beta);
}

StringCertificate certify(const CartanData& d, const ParabolicSubset& p, const CorootString& s) {
  StringCertificate c;
  RootSet coroots;
  for (const auto& r : positive_roots(dual(d))) coroots.insert(r);

  c.elements_are_coroots = true;
  c.beta_coefficient_one = true;
  for (const auto& e : s.elements) {
    c.elements_are_coroots = c.elements_are_coroots && coroots.count(e) > 0;
    c.beta_coefficient_one = c.beta_coefficient_one && e[s.beta] == 1;
    for (int i = 0; i < d.n; ++i)
      if (e[i] != 0 && i != s.beta && !p.contains(i)) c.beta_coefficient_one = false;
  }

  c.good = true;
  for (std::size_t k = 0; k < s.elements.size(); ++k) {
    int ht = height(s.elements[k]);
    if (ht != static_cast<int>(k) + 1) c.good = false;
    if (k + 1 < s.elements.size() && ht + 1 < height(s.elements[k + 1]))
      c.gaps.push_back(static_cast<int>(k));
  }
  c.length = s.elements.empty() ? 0 : height(s.elements.back());
  c.n_beta = c1_coefficient(d, p, s.beta);
  c.maximal = (c.length == c.n_beta - 1);
  return c;
}

}  // namespace kostant
