#include "casc/coadjoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace casc {

std::string kind_name(ActionKind k) {
  switch (k) {
    case ActionKind::CoadN: return "coad_N";
    case ActionKind::CoadB: return "coad_B";
    case ActionKind::NMinusActionOfB: return "nminus_action_of_B";
  }
  return "?";
}

std::vector<int> domain_basis(const LieAlgebra& g, ActionKind kind) {
  std::vector<int> v;
  const int l = static_cast<int>(g.rank());
  const int P = static_cast<int>(g.n_positive());
  if (kind != ActionKind::CoadN)
    for (int i = 0; i < l; ++i) v.push_back(g.h_index(i));
  for (int k = 0; k < P; ++k) v.push_back(g.e_index(k));
  return v;
}

std::vector<int> target_basis(const LieAlgebra& g, ActionKind kind) {
  std::vector<int> v;
  const int l = static_cast<int>(g.rank());
  const int P = static_cast<int>(g.n_positive());
  if (kind == ActionKind::CoadB)
    for (int i = 0; i < l; ++i) v.push_back(g.h_index(i));
  for (int k = 0; k < P; ++k) v.push_back(g.e_index(P + k));
  return v;
}

namespace {

Part target_part(ActionKind kind) {
  return kind == ActionKind::CoadB ? Part::BMinus : Part::NMinus;
}

void check_support(const LieAlgebra& g, ActionKind kind, const Element& w) {
  Part ambient = kind == ActionKind::CoadB ? Part::BMinus : Part::NMinus;
  for (const auto& [k, v] : w)
    if (!g.in_part(ambient, k))
      throw std::invalid_argument("point supported outside the " +
                                  kind_name(kind) + " ambient");
}

}  // namespace

RatMatrix action_matrix(const LieAlgebra& g, ActionKind kind, const Element& w) {
  check_support(g, kind, w);
  auto dom = domain_basis(g, kind);
  auto tgt = target_basis(g, kind);
  std::map<int, std::size_t> tgt_pos;
  for (std::size_t i = 0; i < tgt.size(); ++i) tgt_pos[tgt[i]] = i;
  RatMatrix m(tgt.size(), dom.size());
  const Part tp = target_part(kind);
  for (std::size_t c = 0; c < dom.size(); ++c) {
    Element x{{dom[c], 1}};
    Element img = project(g, tp, bracket(g, x, w));
    for (const auto& [k, v] : img) m.at(tgt_pos.at(k), c) = v;
  }
  return m;
}

IsotropyResult isotropy(const LieAlgebra& g, ActionKind kind, const Element& w) {
  RatMatrix m = action_matrix(g, kind, w);
  IsotropyResult r;
  r.kind = kind;
  r.isotropy = kernel(m);
  r.orbit_dim = m.cols() - r.isotropy.dim();
  r.codim = m.rows() - r.orbit_dim;
  return r;
}

Element standard_point(const LieAlgebra& g, const CascadeSet& cs) {
  Element w;
  for (int idx : cs.root_indices) w[g.e_index(g.rs.negative_of(idx))] = 1;
  return w;
}

Element random_rx_point(const LieAlgebra& g, const CascadeSet& cs, Rng& rng) {
  Element w;
  for (int idx : cs.root_indices)
    w[g.e_index(g.rs.negative_of(idx))] = Rat(rng.nonzero_in(-99, 99));
  return w;
}

Element random_element(const LieAlgebra& g, Part part, Rng& rng) {
  std::vector<int> basis;
  for (std::size_t k = 0; k < g.dim(); ++k)
    if (g.in_part(part, static_cast<int>(k))) basis.push_back(static_cast<int>(k));
  Element w;
  do {
    w.clear();
    for (int b : basis) {
      long long c = rng.int_in(-99, 99);
      if (c != 0) w[b] = Rat(c);
    }
  } while (w.empty());
  return w;
}

Subspace h_naught(const LieAlgebra& g, const CascadeSet& cs) {
  const std::size_t l = g.rank();
  RatMatrix m(cs.m(), l);
  for (std::size_t k = 0; k < cs.m(); ++k)
    for (std::size_t i = 0; i < l; ++i)
      m.at(k, i) = g.pairing(cs.root_indices[k], static_cast<int>(i));
  return kernel(m);
}

Subspace r_in_domain(const LieAlgebra& g, const CascadeSet& cs, ActionKind kind) {
  auto dom = domain_basis(g, kind);
  std::map<int, std::size_t> pos;
  for (std::size_t i = 0; i < dom.size(); ++i) pos[dom[i]] = i;
  RatMatrix m(cs.m(), dom.size());
  for (std::size_t k = 0; k < cs.m(); ++k)
    m.at(k, pos.at(g.e_index(cs.root_indices[k]))) = 1;
  return Subspace::span(m);
}

Subspace h_naught_in_domain(const LieAlgebra& g, const CascadeSet& cs,
                            ActionKind kind) {
  if (kind == ActionKind::CoadN)
    throw std::invalid_argument("h is not contained in the CoadN domain");
  Subspace h0 = h_naught(g, cs);
  auto dom = domain_basis(g, kind);
  RatMatrix m(h0.dim(), dom.size());
  for (std::size_t i = 0; i < h0.dim(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      m.at(i, j) = h0.basis().at(i, j);  // coroots sit first in the b domain
  return Subspace::span(m);
}

std::vector<Element> sample_rx_points(const LieAlgebra& g, const CascadeSet& cs,
                                      std::size_t extra, std::uint64_t seed) {
  std::vector<Element> pts{standard_point(g, cs)};
  Rng rng(seed);
  for (std::size_t i = 0; i < extra; ++i)
    pts.push_back(random_rx_point(g, cs, rng));
  return pts;
}

TheoremReport verify_n_isotropy(const LieAlgebra& g, const CascadeSet& cs,
                                const std::vector<Element>& points) {
  TheoremReport rep;
  rep.id = "n_isotropy_is_r";
  Subspace expected = r_in_domain(g, cs, ActionKind::CoadN);
  rep.pass = true;
  for (const Element& tau : points) {
    IsotropyResult ir = isotropy(g, ActionKind::CoadN, tau);
    if (!subspace_equal(ir.isotropy, expected) || ir.isotropy.dim() != cs.m())
      rep.pass = false;
    rep.dims["isotropy_dim"] = static_cast<long long>(ir.isotropy.dim());
  }
  rep.dims["m"] = static_cast<long long>(cs.m());
  rep.dims["points"] = static_cast<long long>(points.size());
  return rep;
}

TheoremReport verify_nminus_isotropy(const LieAlgebra& g, const CascadeSet& cs,
                                     const std::vector<Element>& points) {
  TheoremReport rep;
  rep.id = "b_on_nminus_isotropy_is_h0_plus_r";
  Subspace expected =
      subspace_sum(h_naught_in_domain(g, cs, ActionKind::NMinusActionOfB),
                   r_in_domain(g, cs, ActionKind::NMinusActionOfB));
  rep.pass = expected.dim() == g.rank();
  for (const Element& w : points) {
    IsotropyResult ir = isotropy(g, ActionKind::NMinusActionOfB, w);
    if (!subspace_equal(ir.isotropy, expected) || ir.isotropy.dim() != g.rank())
      rep.pass = false;
    rep.dims["isotropy_dim"] = static_cast<long long>(ir.isotropy.dim());
  }
  rep.dims["ell"] = static_cast<long long>(g.rank());
  rep.dims["points"] = static_cast<long long>(points.size());
  return rep;
}

TheoremReport verify_b_isotropy(const LieAlgebra& g, const CascadeSet& cs,
                                const std::vector<Element>& points) {
  TheoremReport rep;
  rep.id = "b_coadjoint_isotropy_is_h0";
  Subspace expected = h_naught_in_domain(g, cs, ActionKind::CoadB);
  rep.pass = expected.dim() == g.rank() - cs.m();
  for (const Element& w : points) {
    IsotropyResult ir = isotropy(g, ActionKind::CoadB, w);
    if (!subspace_equal(ir.isotropy, expected)) rep.pass = false;
    rep.dims["isotropy_dim"] = static_cast<long long>(ir.isotropy.dim());
    // injectivity of r -> h, x |-> Phi_h [x, w]
    RatMatrix rh(g.rank(), cs.m());
    for (std::size_t k = 0; k < cs.m(); ++k) {
      Element x{{g.e_index(cs.root_indices[k]), 1}};
      Element img = project(g, Part::H, bracket(g, x, w));
      for (const auto& [b, v] : img) rh.at(static_cast<std::size_t>(b), k) = v;
    }
    if (rank(rh) != cs.m()) rep.pass = false;
    rep.dims["r_to_h_rank"] = static_cast<long long>(rank(rh));
  }
  rep.dims["codim"] = static_cast<long long>(g.rank() - cs.m());
  rep.dims["points"] = static_cast<long long>(points.size());
  return rep;
}

TheoremReport verify_codim_bounds(const LieAlgebra& g, const CascadeSet& cs,
                                  std::size_t samples, std::uint64_t seed) {
  TheoremReport rep;
  rep.id = "codim_bounds";
  Rng rng(seed);
  const std::size_t m = cs.m(), l = g.rank();
  std::size_t ok_n = 0, eq_n = 0, ok_b = 0, eq_b = 0;
  std::size_t min_n = g.n_positive() + 1, min_b = g.dim();
  for (std::size_t s = 0; s < samples; ++s) {
    Element v = random_element(g, Part::NMinus, rng);
    IsotropyResult ir = isotropy(g, ActionKind::CoadN, v);
    min_n = std::min(min_n, ir.codim);
    if (ir.codim >= m) ++ok_n;
    if (ir.codim == m) ++eq_n;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    Element w = random_element(g, Part::BMinus, rng);
    IsotropyResult ir = isotropy(g, ActionKind::CoadB, w);
    min_b = std::min(min_b, ir.codim);
    if (ir.codim >= l - m) ++ok_b;
    if (ir.codim == l - m) ++eq_b;
  }
  // 95% genericity proxy: exact equality must hold on at least 19/20 samples
  auto generic = [&](std::size_t eq) { return 20 * eq >= 19 * samples; };
  rep.pass = ok_n == samples && ok_b == samples && generic(eq_n) && generic(eq_b);
  rep.dims["samples"] = static_cast<long long>(samples);
  rep.dims["bound_n"] = static_cast<long long>(m);
  rep.dims["bound_b"] = static_cast<long long>(l - m);
  rep.dims["min_codim_n"] = static_cast<long long>(min_n);
  rep.dims["min_codim_b"] = static_cast<long long>(min_b);
  rep.dims["equality_n"] = static_cast<long long>(eq_n);
  rep.dims["equality_b"] = static_cast<long long>(eq_b);
  return rep;
}

TheoremReport verify_shift_invariance(const LieAlgebra& g, std::size_t samples,
                                      std::uint64_t seed) {
  TheoremReport rep;
  rep.id = "shift_invariance";
  Rng rng(seed);
  rep.pass = true;
  for (std::size_t s = 0; s < samples; ++s) {
    Element w = random_element(g, Part::BMinus, rng);
    Element z = random_element(g, Part::H, rng);
    IsotropyResult a = isotropy(g, ActionKind::CoadB, w);
    IsotropyResult b = isotropy(g, ActionKind::CoadB, w + z);
    if (!subspace_equal(a.isotropy, b.isotropy)) rep.pass = false;
  }
  rep.dims["samples"] = static_cast<long long>(samples);
  return rep;
}

TheoremReport verify_fixed_set(const LieAlgebra& g) {
  TheoremReport rep;
  rep.id = "fixed_set_is_h";
  auto tgt = target_basis(g, ActionKind::CoadB);  // coordinates of b_-
  std::map<int, std::size_t> tgt_pos;
  for (std::size_t i = 0; i < tgt.size(); ++i) tgt_pos[tgt[i]] = i;
  const std::size_t n = tgt.size();
  // intersect ker(w -> Phi_b [x, w]) over a basis x of b, shrinking the
  // candidate subspace as we go
  Subspace fixed = Subspace::span(RatMatrix::identity(n));
  for (int x : domain_basis(g, ActionKind::CoadB)) {
    if (fixed.dim() == 0) break;
    RatMatrix m(n, fixed.dim());
    for (std::size_t j = 0; j < fixed.dim(); ++j) {
      Element w;
      for (std::size_t c = 0; c < n; ++c) {
        const Rat& v = fixed.basis().at(j, c);
        if (v != 0) w[tgt[c]] = v;
      }
      Element img = project(g, Part::BMinus, bracket(g, Element{{x, 1}}, w));
      for (const auto& [k, v] : img) m.at(tgt_pos.at(k), j) = v;
    }
    Subspace ker = kernel(m);  // coordinates relative to fixed's basis
    RatMatrix lifted(ker.dim(), n);
    for (std::size_t i = 0; i < ker.dim(); ++i)
      for (std::size_t j = 0; j < fixed.dim(); ++j) {
        const Rat& c = ker.basis().at(i, j);
        if (c == 0) continue;
        for (std::size_t t = 0; t < n; ++t)
          lifted.at(i, t) += c * fixed.basis().at(j, t);
      }
    fixed = Subspace::span(lifted);
  }
  RatMatrix hgen(g.rank(), n);
  for (std::size_t i = 0; i < g.rank(); ++i) hgen.at(i, i) = 1;
  rep.pass = subspace_equal(fixed, Subspace::span(hgen));
  rep.dims["fixed_dim"] = static_cast<long long>(fixed.dim());
  rep.dims["ell"] = static_cast<long long>(g.rank());
  return rep;
}

TheoremReport verify_h_transitivity_tangent(const LieAlgebra& g,
                                            const CascadeSet& cs,
                                            const std::vector<Element>& points) {
  TheoremReport rep;
  rep.id = "h_transitivity_tangent";
  rep.pass = true;
  std::map<int, std::size_t> row;  // e_{-beta} basis index -> row
  for (std::size_t k = 0; k < cs.m(); ++k)
    row[g.e_index(g.rs.negative_of(cs.root_indices[k]))] = k;
  for (const Element& tau : points) {
    RatMatrix m(cs.m(), g.rank());
    for (std::size_t i = 0; i < g.rank(); ++i) {
      Element img = bracket(g, Element{{g.h_index(static_cast<int>(i)), 1}}, tau);
      for (const auto& [k, v] : img) m.at(row.at(k), i) = v;
    }
    std::size_t rk = rank(m);
    rep.dims["rank"] = static_cast<long long>(rk);
    if (rk != cs.m()) rep.pass = false;
  }
  rep.dims["m"] = static_cast<long long>(cs.m());
  rep.dims["points"] = static_cast<long long>(points.size());
  return rep;
}

std::vector<ClassRow> classify(int max_rank) {
  if (max_rank < 2)
    throw std::invalid_argument("classify: max_rank must be >= 2");
  std::vector<SimpleType> types;
  for (int r = 1; r <= max_rank; ++r) types.push_back({Family::A, r});
  for (int r = 2; r <= max_rank; ++r) types.push_back({Family::B, r});
  for (int r = 3; r <= max_rank; ++r) types.push_back({Family::C, r});
  for (int r = 4; r <= max_rank; ++r) types.push_back({Family::D, r});
  for (int r = 6; r <= std::min(8, max_rank); ++r) types.push_back({Family::E, r});
  if (max_rank >= 4) types.push_back({Family::F, 4});
  types.push_back({Family::G, 2});
  std::vector<ClassRow> rows;
  for (const SimpleType& t : types) {
    RootSystem rs = make_root_system(t);
    CascadeSet cs = CascadeSet::from_tree(compute_cascade(rs));
    ClassRow row;
    row.type = t;
    row.ell = rs.rank();
    row.m = cs.m();
    row.minus_one_in_weyl = is_minus_identity(longest_element(rs));
    row.open_coadjoint_orbit = row.m == row.ell;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace casc
