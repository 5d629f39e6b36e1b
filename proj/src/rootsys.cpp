#include "casc/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace casc {

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

void SimpleType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 2; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok)
    throw std::invalid_argument("invalid simple type " + name());
}

Family parse_family(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'A' && s[0] <= 'G')
    return static_cast<Family>(s[0]);
  throw std::invalid_argument("invalid family '" + s + "'");
}

std::vector<std::vector<int>> cartan_matrix(const SimpleType& t) {
  t.validate();
  const int l = t.rank;
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) a[i][i] = 2;
  auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };  // 1-based
  auto link1 = [&](int i, int j) { link(i - 1, j - 1); };
  switch (t.family) {
    case Family::A:
      for (int i = 1; i < l; ++i) link1(i, i + 1);
      break;
    case Family::B:
      for (int i = 1; i < l; ++i) link1(i, i + 1);
      a[l - 1][l - 2] = -2;  // alpha_l short
      break;
    case Family::C:
      for (int i = 1; i < l; ++i) link1(i, i + 1);
      a[l - 2][l - 1] = -2;  // alpha_l long
      break;
    case Family::D:
      for (int i = 1; i < l - 1; ++i) link1(i, i + 1);
      link1(l - 2, l);
      break;
    case Family::E:
      // chain 1-3-4-5-...-l, node 2 hangs off node 4
      link1(1, 3);
      for (int i = 3; i < l; ++i) link1(i, i + 1);
      link1(2, 4);
      break;
    case Family::F:
      link1(1, 2);
      link1(2, 3);
      link1(3, 4);
      a[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case Family::G:
      link1(1, 2);
      a[1][0] = -3;  // alpha_1 long
      break;
  }
  return a;
}

int RootSystem::index_of(const Coords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

Rat RootSystem::inner(const Coords& a, const Coords& b) const {
  Rat s = 0;
  const std::size_t l = rank();
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j)
      if (b[j] != 0) s += a[i] * b[j] * gram(i, j);
  }
  return s;
}

Rat RootSystem::inner_rat(const std::vector<Rat>& a, const Coords& b) const {
  Rat s = 0;
  const std::size_t l = rank();
  for (std::size_t i = 0; i < l; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < l; ++j)
      if (b[j] != 0) s += a[i] * b[j] * gram(i, j);
  }
  return s;
}

int RootSystem::pairing(const Coords& v, const Coords& alpha) const {
  Rat p = 2 * inner(v, alpha) / inner(alpha, alpha);
  if (denominator(p) != 1)
    throw std::logic_error("non-integer root pairing");
  return static_cast<int>(numerator(p));
}

int RootSystem::height(int idx) const {
  return std::accumulate(roots[idx].begin(), roots[idx].end(), 0);
}

int RootSystem::highest_root() const {
  int best = 0, besth = height(0);
  for (std::size_t k = 1; k < n_positive; ++k) {
    int h = height(static_cast<int>(k));
    if (h > besth) {
      besth = h;
      best = static_cast<int>(k);
    }
  }
  return best;
}

namespace {

// Symmetrizing lengths: d_j / d_i = a[i][j] / a[j][i] along edges, scaled so
// the longest simple root has squared length 2.
std::vector<Rat> simple_lengths(const std::vector<std::vector<int>>& a) {
  const std::size_t l = a.size();
  std::vector<Rat> d(l, 0);
  d[0] = 1;
  // propagate over the (connected, for simple types) Coxeter graph
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t j = 0; j < l; ++j) {
        if (i == j || a[i][j] == 0) continue;
        if (d[i] != 0 && d[j] == 0) {
          d[j] = d[i] * a[i][j] / a[j][i];
          changed = true;
        }
      }
  }
  for (std::size_t i = 0; i < l; ++i)
    if (d[i] == 0) d[i] = 1;  // disconnected vertex (rank 1 pieces)
  Rat mx = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x = 2 * x / mx;
  return d;
}

}  // namespace

RootSystem generate_roots(const std::vector<std::vector<int>>& cartan) {
  const std::size_t l = cartan.size();
  for (const auto& row : cartan)
    if (row.size() != l) throw std::invalid_argument("cartan matrix not square");
  // finite-type bound: no simple system of rank l has more than 4*l^2
  // positive roots (E8 attains 120 <= 256)
  const std::size_t max_pos = 4 * l * l + 1;

  std::set<Coords> pos;
  std::vector<Coords> frontier;
  for (std::size_t i = 0; i < l; ++i) {
    Coords a(l, 0);
    a[i] = 1;
    pos.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Coords> next;
    for (const Coords& v : frontier) {
      for (std::size_t i = 0; i < l; ++i) {
        // s_i(v) = v - <v, alpha_i^vee> alpha_i, <v,alpha_i^vee> = sum_j v_j a[i][j]
        int p = 0;
        for (std::size_t j = 0; j < l; ++j) p += v[j] * cartan[i][j];
        Coords w = v;
        w[i] -= p;
        bool positive = true;
        for (int c : w)
          if (c < 0) {
            positive = false;
            break;
          }
        if (positive && pos.insert(w).second) next.push_back(w);
      }
    }
    if (pos.size() > max_pos)
      throw std::invalid_argument("cartan matrix is not of finite type");
    frontier = std::move(next);
  }

  RootSystem rs;
  rs.cartan = cartan;
  rs.len2 = simple_lengths(cartan);
  std::vector<Coords> sorted(pos.begin(), pos.end());
  std::sort(sorted.begin(), sorted.end(), [](const Coords& a, const Coords& b) {
    int ha = std::accumulate(a.begin(), a.end(), 0);
    int hb = std::accumulate(b.begin(), b.end(), 0);
    return ha != hb ? ha < hb : a < b;
  });
  rs.n_positive = sorted.size();
  rs.roots = sorted;
  for (const Coords& v : sorted) {
    Coords n(l);
    for (std::size_t i = 0; i < l; ++i) n[i] = -v[i];
    rs.roots.push_back(n);
  }
  for (std::size_t k = 0; k < rs.roots.size(); ++k)
    rs.index_[rs.roots[k]] = static_cast<int>(k);
  return rs;
}

RootSystem make_root_system(const SimpleType& t) {
  RootSystem rs = generate_roots(cartan_matrix(t));
  rs.simple_type = t;
  return rs;
}

Coords WeylElement::apply(const Coords& v) const {
  const std::size_t l = rank();
  Coords r(l, 0);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) r[i] += mat[i][j] * v[j];
  return r;
}

WeylElement WeylElement::identity(std::size_t ell) {
  WeylElement w;
  w.mat.assign(ell, std::vector<int>(ell, 0));
  for (std::size_t i = 0; i < ell; ++i) w.mat[i][i] = 1;
  return w;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  const std::size_t l = rank();
  WeylElement r;
  r.mat.assign(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t k = 0; k < l; ++k) {
      if (mat[i][k] == 0) continue;
      for (std::size_t j = 0; j < l; ++j) r.mat[i][j] += mat[i][k] * o.mat[k][j];
    }
  return r;
}

Coords reflect(const RootSystem& rs, const Coords& phi, const Coords& v) {
  if (!rs.is_root(phi))
    throw std::invalid_argument("reflect: not a root of the system");
  int p = rs.pairing(v, phi);
  Coords r = v;
  for (std::size_t i = 0; i < rs.rank(); ++i) r[i] -= p * phi[i];
  return r;
}

WeylElement reflection(const RootSystem& rs, const Coords& phi) {
  if (!rs.is_root(phi))
    throw std::invalid_argument("reflection: not a root of the system");
  const std::size_t l = rs.rank();
  WeylElement w = WeylElement::identity(l);
  for (std::size_t j = 0; j < l; ++j) {
    Coords ej(l, 0);
    ej[j] = 1;
    Rat p = 2 * rs.inner(ej, phi) / rs.inner(phi, phi);
    // image of alpha_j is alpha_j - <alpha_j,phi^vee> phi; pairing is integer
    int pi = static_cast<int>(numerator(p));
    if (denominator(p) != 1) throw std::logic_error("non-integer pairing");
    for (std::size_t i = 0; i < l; ++i) w.mat[i][j] -= pi * phi[i];
  }
  return w;
}

WeylElement longest_element(const RootSystem& rs) {
  const std::size_t l = rs.rank();
  // start at a strictly dominant vector: sum of positive roots
  std::vector<Rat> v(l, 0);
  for (std::size_t k = 0; k < rs.n_positive; ++k)
    for (std::size_t i = 0; i < l; ++i) v[i] += rs.roots[k][i];
  WeylElement w = WeylElement::identity(l);
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i < l; ++i) {
      Coords ai(l, 0);
      ai[i] = 1;
      if (rs.inner_rat(v, ai) > 0) {
        // apply s_i: v -= <v, alpha_i^vee> alpha_i
        Rat p = 2 * rs.inner_rat(v, ai) / rs.inner(ai, ai);
        v[i] -= p;
        w = reflection(rs, ai) * w;
        moved = true;
      }
    }
  }
  return w;
}

bool is_minus_identity(const WeylElement& w) {
  const std::size_t l = w.rank();
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j)
      if (w.mat[i][j] != (i == j ? -1 : 0)) return false;
  return true;
}

std::vector<int> subsystem_simples(const std::vector<int>& subset,
                                   const RootSystem& rs) {
  std::set<int> s(subset.begin(), subset.end());
  for (int idx : s)
    if (!s.count(rs.negative_of(idx)))
      throw std::invalid_argument("subsystem_simples: set not closed under negation");
  std::vector<int> positives;
  for (int idx : s)
    if (rs.is_positive(idx)) positives.push_back(idx);
  std::vector<int> simples;
  for (int p : positives) {
    bool decomposable = false;
    for (int q : positives) {
      if (q == p) continue;
      Coords diff(rs.rank());
      for (std::size_t i = 0; i < rs.rank(); ++i)
        diff[i] = rs.roots[p][i] - rs.roots[q][i];
      int d = rs.index_of(diff);
      if (d >= 0 && rs.is_positive(d) && s.count(d)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simples.push_back(p);
  }
  std::sort(simples.begin(), simples.end());
  return simples;
}

}  // namespace casc
