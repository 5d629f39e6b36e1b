#include "casc/chevalley.hpp"

#include <cstdlib>
#include <stdexcept>

namespace casc {

Element operator+(const Element& a, const Element& b) {
  Element r = a;
  for (const auto& [k, v] : b) {
    Rat s = r.count(k) ? r[k] + v : v;
    if (s == 0)
      r.erase(k);
    else
      r[k] = s;
  }
  return r;
}

Element operator-(const Element& a, const Element& b) {
  return a + scale(-1, b);
}

Element scale(const Rat& c, const Element& x) {
  Element r;
  if (c == 0) return r;
  for (const auto& [k, v] : x) r[k] = c * v;
  return r;
}

bool is_zero(const Element& x) { return x.empty(); }

bool LieAlgebra::in_part(Part p, int basis_idx) const {
  const bool h = is_h(basis_idx);
  if (h) return p == Part::H || p == Part::B || p == Part::BMinus;
  const bool pos = rs.is_positive(root_of(basis_idx));
  switch (p) {
    case Part::H: return false;
    case Part::N: return pos;
    case Part::NMinus: return !pos;
    case Part::B: return pos;
    case Part::BMinus: return !pos;
  }
  return false;
}

namespace {

// Largest p with b - p*a a root (the length of the a-string through b
// downward); |N_{a,b}| = p + 1.
int string_down(const RootSystem& rs, int a, int b) {
  const std::size_t l = rs.rank();
  Coords c = rs.roots[b];
  int p = 0;
  for (;;) {
    for (std::size_t i = 0; i < l; ++i) c[i] -= rs.roots[a][i];
    if (!rs.is_root(c)) break;
    ++p;
  }
  return p;
}

struct ConstantBuilder {
  const RootSystem& rs;
  const std::size_t P;
  std::vector<std::vector<int>> n;  // 2P x 2P

  explicit ConstantBuilder(const RootSystem& r)
      : rs(r), P(r.n_positive), n(2 * P, std::vector<int>(2 * P, 0)) {}

  int sum_index(int a, int b) const {
    Coords c(rs.rank());
    for (std::size_t i = 0; i < rs.rank(); ++i)
      c[i] = rs.roots[a][i] + rs.roots[b][i];
    return rs.index_of(c);
  }

  // N for arbitrary root pairs, reduced to the positive-pair table through
  // the standard relations N_{a,b} = -N_{-a,-b} and, for a+b+c = 0,
  // N_{a,b}/(c,c) = N_{b,c}/(a,a).
  Rat n_any(int a, int b) const {
    int s = sum_index(a, b);
    if (s < 0) return 0;
    bool ap = rs.is_positive(a), bp = rs.is_positive(b);
    if (ap && bp) return n[a][b];
    if (!ap && !bp) return -n_any(rs.negative_of(a), rs.negative_of(b));
    if (!rs.is_positive(s))
      return -n_any(rs.negative_of(a), rs.negative_of(b));
    Rat ratio = rs.inner(rs.roots[s], rs.roots[s]) /
                rs.inner(rs.roots[a], rs.roots[a]);
    return ratio * n_any(b, rs.negative_of(s));
  }

  int n_any_int(int a, int b) const {
    Rat v = n_any(a, b);
    if (denominator(v) != 1)
      throw std::logic_error("non-integer structure constant");
    return static_cast<int>(numerator(v));
  }

  void build() {
    // positive roots come first in index order = height order, so all
    // constants referenced below are already known when needed
    for (int g = 0; g < static_cast<int>(P); ++g) {
      std::vector<std::pair<int, int>> special;
      for (int a = 0; a < static_cast<int>(P); ++a)
        for (int b = a + 1; b < static_cast<int>(P); ++b)
          if (sum_index(a, b) == g) special.emplace_back(a, b);
      if (special.empty()) continue;
      auto [a1, b1] = special.front();  // extraspecial: minimal first member
      n[a1][b1] = string_down(rs, a1, b1) + 1;
      n[b1][a1] = -n[a1][b1];
      const Rat gg = rs.inner(rs.roots[g], rs.roots[g]);
      for (std::size_t k = 1; k < special.size(); ++k) {
        auto [a, b] = special[k];
        // four-root relation on (a, b, -a1, -b1)
        Rat t = 0;
        int d2 = sum_index(b, rs.negative_of(a1));
        if (d2 >= 0)
          t += n_any(b, rs.negative_of(a1)) * n_any(a, rs.negative_of(b1)) /
               rs.inner(rs.roots[d2], rs.roots[d2]);
        int d3 = sum_index(rs.negative_of(a1), a);
        if (d3 >= 0)
          t += n_any(rs.negative_of(a1), a) * n_any(b, rs.negative_of(b1)) /
               rs.inner(rs.roots[d3], rs.roots[d3]);
        Rat nab = gg * t / Rat(n[a1][b1]);  // N_{-a1,-b1} = -N_{a1,b1}; sign folded in
        if (denominator(nab) != 1)
          throw std::logic_error("non-integer structure constant");
        int v = static_cast<int>(numerator(nab));
        if (std::abs(v) != string_down(rs, a, b) + 1)
          throw std::logic_error("structure constant magnitude mismatch");
        n[a][b] = v;
        n[b][a] = -v;
      }
    }
    // extend to all root pairs
    for (int a = 0; a < static_cast<int>(2 * P); ++a)
      for (int b = 0; b < static_cast<int>(2 * P); ++b) {
        if (b == rs.negative_of(a)) continue;
        int s = sum_index(a, b);
        if (s >= 0) n[a][b] = n_any_int(a, b);
      }
  }
};

Element bracket_basis(const LieAlgebra& g, int i, int j);

Element jacobi_defect(const LieAlgebra& g, int a, int b, int c) {
  Element r;
  {
    Element xy = bracket_basis(g, b, c);
    for (const auto& [k, v] : xy) {
      Element t = scale(v, bracket_basis(g, a, k));
      r = r + t;
    }
  }
  {
    Element xy = bracket_basis(g, c, a);
    for (const auto& [k, v] : xy) r = r + scale(v, bracket_basis(g, b, k));
  }
  {
    Element xy = bracket_basis(g, a, b);
    for (const auto& [k, v] : xy) r = r + scale(v, bracket_basis(g, c, k));
  }
  return r;
}

}  // namespace

LieAlgebra build_algebra(const RootSystem& rs) {
  LieAlgebra g;
  g.rs = rs;
  const std::size_t l = rs.rank();
  const std::size_t nr = rs.roots.size();

  g.pairing_.assign(nr, std::vector<int>(l, 0));
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t i = 0; i < l; ++i) {
      int p = 0;
      for (std::size_t j = 0; j < l; ++j) p += rs.roots[r][j] * rs.cartan[i][j];
      g.pairing_[r][i] = p;
    }

  g.coroot_.assign(nr, std::vector<int>(l, 0));
  for (std::size_t r = 0; r < nr; ++r) {
    Rat phi2 = rs.inner(rs.roots[r], rs.roots[r]);
    for (std::size_t j = 0; j < l; ++j) {
      Rat c = rs.roots[r][j] * rs.len2[j] / phi2;
      if (denominator(c) != 1) throw std::logic_error("non-integer coroot");
      g.coroot_[r][j] = static_cast<int>(numerator(c));
    }
  }

  ConstantBuilder cb(rs);
  cb.build();
  g.n_ = std::move(cb.n);

  // Jacobi self-test: exhaustive on basis triples for small algebras, a
  // deterministic sample otherwise. A failure here means a broken sign
  // convention, not bad input.
  const std::size_t d = g.dim();
  if (d <= 25) {
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = a + 1; b < d; ++b)
        for (std::size_t c = b + 1; c < d; ++c)
          if (!is_zero(jacobi_defect(g, static_cast<int>(a), static_cast<int>(b),
                                     static_cast<int>(c))))
            throw std::logic_error("Jacobi identity violated");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    auto next = [&] {
      state ^= state << 13;
      state ^= state >> 7;
      state ^= state << 17;
      return state;
    };
    for (int t = 0; t < 500; ++t) {
      int a = static_cast<int>(next() % d);
      int b = static_cast<int>(next() % d);
      int c = static_cast<int>(next() % d);
      if (!is_zero(jacobi_defect(g, a, b, c)))
        throw std::logic_error("Jacobi identity violated");
    }
  }
  return g;
}

namespace {

Element bracket_basis(const LieAlgebra& g, int i, int j) {
  Element r;
  const bool hi = g.is_h(i), hj = g.is_h(j);
  if (hi && hj) return r;
  if (hi || hj) {
    int h = hi ? i : j;
    int e = hi ? j : i;
    int ridx = g.root_of(e);
    int c = g.pairing(ridx, h);
    if (c != 0) r[e] = hi ? c : -c;
    return r;
  }
  int a = g.root_of(i), b = g.root_of(j);
  if (b == g.rs.negative_of(a)) {
    const auto& co = g.coroot(a);
    for (std::size_t k = 0; k < co.size(); ++k)
      if (co[k] != 0) r[static_cast<int>(k)] = co[k];
    return r;
  }
  int nc = g.structure_constant(a, b);
  if (nc != 0) {
    Coords s(g.rs.rank());
    for (std::size_t k = 0; k < g.rs.rank(); ++k)
      s[k] = g.rs.roots[a][k] + g.rs.roots[b][k];
    r[g.e_index(g.rs.index_of(s))] = nc;
  }
  return r;
}

}  // namespace

Element bracket(const LieAlgebra& g, const Element& x, const Element& y) {
  Element r;
  for (const auto& [i, ci] : x)
    for (const auto& [j, cj] : y) {
      Element t = bracket_basis(g, i, j);
      if (!t.empty()) r = r + scale(ci * cj, t);
    }
  return r;
}

Rat invariant_form(const LieAlgebra& g, const Element& x, const Element& y) {
  Rat s = 0;
  for (const auto& [i, ci] : x) {
    if (g.is_h(i)) {
      for (const auto& [j, cj] : y) {
        if (!g.is_h(j)) continue;
        // (h_i, h_j) = (alpha_i^vee, alpha_j^vee)
        s += ci * cj * 2 * g.rs.cartan[i][j] / g.rs.len2[j];
      }
    } else {
      int a = g.root_of(i);
      int na = g.rs.negative_of(a);
      auto it = y.find(g.e_index(na));
      if (it != y.end())
        s += ci * it->second * 2 / g.rs.inner(g.rs.roots[a], g.rs.roots[a]);
    }
  }
  return s;
}

Element project(const LieAlgebra& g, Part which, const Element& x) {
  Element r;
  for (const auto& [k, v] : x)
    if (g.in_part(which, k)) r[k] = v;
  return r;
}

bool r_is_abelian(const LieAlgebra& g, const CascadeSet& cs) {
  for (std::size_t i = 0; i < cs.m(); ++i)
    for (std::size_t j = i + 1; j < cs.m(); ++j) {
      Element x{{g.e_index(cs.root_indices[i]), 1}};
      Element y{{g.e_index(cs.root_indices[j]), 1}};
      if (!is_zero(bracket(g, x, y))) return false;
    }
  return true;
}

}  // namespace casc
