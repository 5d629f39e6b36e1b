#include "casc/cascade.hpp"

#include <algorithm>
#include <stdexcept>

namespace casc {

CascadeSet CascadeSet::from_tree(const CascadeTree& t) {
  CascadeSet cs;
  for (const CascadeNode& n : t.nodes) cs.root_indices.push_back(n.root_index);
  return cs;
}

bool strongly_orthogonal(int a, int b, const RootSystem& rs) {
  if (a == b || b == rs.negative_of(a))
    throw std::invalid_argument("strongly_orthogonal: equal or opposite roots");
  const std::size_t l = rs.rank();
  Coords sum(l), diff(l);
  for (std::size_t i = 0; i < l; ++i) {
    sum[i] = rs.roots[a][i] + rs.roots[b][i];
    diff[i] = rs.roots[a][i] - rs.roots[b][i];
  }
  return !rs.is_root(sum) && !rs.is_root(diff);
}

namespace {

// Connected components of a set of positive-root indices under the graph
// with an edge where the inner product is nonzero; these are exactly the
// positive systems of the irreducible components.
std::vector<std::vector<int>> components(const std::vector<int>& pos,
                                         const RootSystem& rs) {
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(pos.size(), false);
  for (std::size_t s = 0; s < pos.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      comp.push_back(pos[c]);
      for (std::size_t t = 0; t < pos.size(); ++t) {
        if (seen[t]) continue;
        if (rs.inner(rs.roots[pos[c]], rs.roots[pos[t]]) != 0) {
          seen[t] = true;
          stack.push_back(t);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  // order by the lowest simple-root index occurring in the support
  auto support_key = [&](const std::vector<int>& comp) {
    std::size_t k = rs.rank();
    for (int idx : comp)
      for (std::size_t i = 0; i < rs.rank(); ++i)
        if (rs.roots[idx][i] != 0 && i < k) k = i;
    return k;
  };
  std::sort(comps.begin(), comps.end(),
            [&](const auto& a, const auto& b) { return support_key(a) < support_key(b); });
  return comps;
}

// Highest root of an irreducible component: the long dominant root.
int component_highest(const std::vector<int>& comp, const RootSystem& rs) {
  int best = -1;
  Rat best_len = 0;
  for (int c : comp) {
    bool dominant = true;
    for (int d : comp)
      if (rs.inner(rs.roots[c], rs.roots[d]) < 0) {
        dominant = false;
        break;
      }
    if (!dominant) continue;
    Rat len = rs.inner(rs.roots[c], rs.roots[c]);
    if (best < 0 || len > best_len) {
      best = c;
      best_len = len;
    }
  }
  return best;
}

void recurse(const std::vector<int>& pos, const RootSystem& rs, int parent,
             int depth, bool reverse, CascadeTree& out) {
  if (pos.empty()) return;
  auto comps = components(pos, rs);
  if (reverse) std::reverse(comps.begin(), comps.end());
  for (const auto& comp : comps) {
    int beta = component_highest(comp, rs);
    int node = static_cast<int>(out.nodes.size());
    out.nodes.push_back({beta, parent, depth});
    std::vector<int> orth;
    for (int c : comp)
      if (c != beta && rs.inner(rs.roots[c], rs.roots[beta]) == 0)
        orth.push_back(c);
    recurse(orth, rs, node, depth + 1, reverse, out);
  }
}

}  // namespace

CascadeTree compute_cascade(const RootSystem& rs, bool reverse_component_order) {
  std::vector<int> pos(rs.n_positive);
  for (std::size_t k = 0; k < rs.n_positive; ++k) pos[k] = static_cast<int>(k);
  CascadeTree t;
  recurse(pos, rs, -1, 0, reverse_component_order, t);
  return t;
}

namespace {

void branch(const std::vector<int>& pos, const RootSystem& rs,
            std::vector<std::vector<bool>>& compat, std::size_t start,
            std::vector<int>& chosen, std::size_t& best) {
  if (chosen.size() > best) best = chosen.size();
  if (chosen.size() + (pos.size() - start) <= best) return;  // bound
  for (std::size_t i = start; i < pos.size(); ++i) {
    bool ok = true;
    for (int c : chosen)
      if (!compat[c][pos[i]]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(pos[i]);
    branch(pos, rs, compat, i + 1, chosen, best);
    chosen.pop_back();
  }
}

}  // namespace

std::size_t max_strongly_orthogonal_bruteforce(const RootSystem& rs,
                                               std::size_t rank_limit) {
  if (rs.rank() > rank_limit)
    throw std::invalid_argument(
        "max_strongly_orthogonal_bruteforce: rank exceeds search budget");
  const std::size_t p = rs.n_positive;
  std::vector<std::vector<bool>> compat(p, std::vector<bool>(p, false));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b)
      compat[a][b] = compat[b][a] =
          strongly_orthogonal(static_cast<int>(a), static_cast<int>(b), rs);
  std::vector<int> pos(p);
  for (std::size_t k = 0; k < p; ++k) pos[k] = static_cast<int>(k);
  std::vector<int> chosen;
  std::size_t best = 0;
  branch(pos, rs, compat, 0, chosen, best);
  return best;
}

bool verify_w0_product(const RootSystem& rs, const CascadeSet& cs) {
  std::vector<WeylElement> refl;
  for (int idx : cs.root_indices) refl.push_back(reflection(rs, rs.roots[idx]));
  for (std::size_t i = 0; i < refl.size(); ++i)
    for (std::size_t j = i + 1; j < refl.size(); ++j)
      if (!(refl[i] * refl[j] == refl[j] * refl[i])) return false;
  WeylElement prod = WeylElement::identity(rs.rank());
  for (const WeylElement& s : refl) prod = prod * s;
  return prod == longest_element(rs);
}

bool cascade_independence(const RootSystem& rs, const CascadeSet& cs) {
  RatMatrix m(cs.m(), rs.rank());
  for (std::size_t i = 0; i < cs.m(); ++i)
    for (std::size_t j = 0; j < rs.rank(); ++j)
      m.at(i, j) = rs.roots[cs.root_indices[i]][j];
  return rank(m) == cs.m();
}

}  // namespace casc
