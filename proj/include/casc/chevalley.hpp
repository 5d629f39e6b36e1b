#ifndef CASC_CHEVALLEY_HPP
#define CASC_CHEVALLEY_HPP

#include <map>
#include <vector>

#include "casc/cascade.hpp"
#include "casc/exactla.hpp"
#include "casc/rootsys.hpp"

namespace casc {

/// Sparse coordinate vector over the Chevalley basis.
/// Basis indexing: 0..ell-1 are the simple coroots h_i, ell+k is the root
/// vector e_{phi} for phi = rs.roots[k].
using Element = std::map<int, Rat>;

Element operator+(const Element& a, const Element& b);
Element operator-(const Element& a, const Element& b);
Element scale(const Rat& c, const Element& x);
bool is_zero(const Element& x);

enum class Part { NMinus, H, N, B, BMinus };

class LieAlgebra {
public:
  RootSystem rs;

  std::size_t dim() const { return rs.rank() + rs.roots.size(); }
  std::size_t rank() const { return rs.rank(); }
  std::size_t n_positive() const { return rs.n_positive; }

  int e_index(int root_idx) const { return static_cast<int>(rs.rank()) + root_idx; }
  int h_index(int i) const { return i; }
  bool is_h(int basis_idx) const { return basis_idx < static_cast<int>(rs.rank()); }
  int root_of(int basis_idx) const { return basis_idx - static_cast<int>(rs.rank()); }

  /// <phi_r, alpha_i^vee>, integer.
  int pairing(int root_idx, int i) const { return pairing_[root_idx][i]; }
  /// Structure constant N_{phi_a, phi_b}; 0 when phi_a + phi_b is not a root.
  int structure_constant(int a, int b) const { return n_[a][b]; }
  /// Coroot phi^vee of rs.roots[r] in the simple-coroot basis, integer.
  const std::vector<int>& coroot(int root_idx) const { return coroot_[root_idx]; }

  bool in_part(Part p, int basis_idx) const;

private:
  std::vector<std::vector<int>> pairing_;  // |roots| x ell
  std::vector<std::vector<int>> n_;        // |roots| x |roots|
  std::vector<std::vector<int>> coroot_;   // |roots| x ell

  friend LieAlgebra build_algebra(const RootSystem& rs);
};

/// Chevalley basis with integer structure constants, |N_{a,b}| = p+1,
/// signs fixed by choosing +(p+1) on extraspecial pairs. Runs a Jacobi
/// self-test on construction and throws std::logic_error if it fails.
LieAlgebra build_algebra(const RootSystem& rs);

Element bracket(const LieAlgebra& g, const Element& x, const Element& y);

/// Invariant form: dual to the root-space form on h (long roots of squared
/// length 2), (e_phi, e_{-phi}) = 2/(phi,phi), all other basis pairs 0.
Rat invariant_form(const LieAlgebra& g, const Element& x, const Element& y);

/// Coordinate restriction to the chosen part of the triangular decomposition.
Element project(const LieAlgebra& g, Part which, const Element& x);

/// True iff all brackets [e_beta, e_beta'] over the cascade vanish.
bool r_is_abelian(const LieAlgebra& g, const CascadeSet& cs);

}  // namespace casc

#endif
