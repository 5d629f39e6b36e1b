#ifndef CASC_ROOTSYS_HPP
#define CASC_ROOTSYS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "casc/exactla.hpp"

namespace casc {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct SimpleType {
  Family family;
  int rank;

  std::string name() const;
  /// Throws std::invalid_argument on an invalid family/rank combination
  /// (A: rank>=1, B,C: rank>=2, D: rank>=4, E: 6..8, F: 4, G: 2).
  void validate() const;
};

/// Parses e.g. "A" or "E"; throws on anything else.
Family parse_family(const std::string& s);

/// Roots live in Z^ell, coordinates in the simple-root basis.
using Coords = std::vector<int>;

/// Standard Cartan matrix in Bourbaki numbering. Conventions fixed here once:
///   A_l chain 1..l;  B_l: alpha_l short (-2 at (l,l-1));  C_l transpose of B_l;
///   D_l fork at l-2; E_l: node 2 attached to node 4 of the chain 1,3,4,..,l;
///   F4: -2 at (3,2);  G2: [[2,-1],[-3,2]] with alpha_1 long.
/// Entry (i,j) is <alpha_j, alpha_i^vee>.
std::vector<std::vector<int>> cartan_matrix(const SimpleType& t);

class RootSystem {
public:
  std::optional<SimpleType> simple_type;
  std::vector<std::vector<int>> cartan;  // ell x ell
  /// All roots; the first n_positive entries are the positive roots sorted by
  /// (height, lex), entry n_positive + k is the negative of entry k.
  std::vector<Coords> roots;
  std::size_t n_positive = 0;
  /// Squared lengths (alpha_i, alpha_i) of the simple roots, normalized so
  /// long roots have squared length 2.
  std::vector<Rat> len2;

  std::size_t rank() const { return cartan.size(); }

  /// Index into `roots`, or -1 if not a root.
  int index_of(const Coords& c) const;
  bool is_root(const Coords& c) const { return index_of(c) >= 0; }
  int negative_of(int idx) const {
    return idx < static_cast<int>(n_positive) ? idx + static_cast<int>(n_positive)
                                              : idx - static_cast<int>(n_positive);
  }
  bool is_positive(int idx) const { return idx < static_cast<int>(n_positive); }

  /// (alpha_i, alpha_j) of simple roots.
  Rat gram(std::size_t i, std::size_t j) const { return cartan[i][j] * len2[i] / 2; }
  /// Bilinear extension to arbitrary coordinate vectors.
  Rat inner(const Coords& a, const Coords& b) const;
  Rat inner_rat(const std::vector<Rat>& a, const Coords& b) const;
  /// <v, alpha^vee> = 2 (v, alpha) / (alpha, alpha); integer for roots.
  int pairing(const Coords& v, const Coords& alpha) const;

  int height(int idx) const;
  /// Index of the highest root (irreducible systems).
  int highest_root() const;

private:
  std::map<Coords, int> index_;
  friend RootSystem generate_roots(const std::vector<std::vector<int>>& cartan);
};

/// Builds the full root set by closing the simple roots under simple
/// reflections. Throws std::invalid_argument if the matrix is not a Cartan
/// matrix of finite type (closure exceeds the finite-type bound).
RootSystem generate_roots(const std::vector<std::vector<int>>& cartan);

/// Convenience: cartan_matrix + generate_roots, tagging the type.
RootSystem make_root_system(const SimpleType& t);

/// Integer ell x ell matrix acting on h^* in simple-root coordinates
/// (columns are the images of the simple roots).
struct WeylElement {
  std::vector<std::vector<int>> mat;

  std::size_t rank() const { return mat.size(); }
  Coords apply(const Coords& v) const;
  static WeylElement identity(std::size_t ell);
  WeylElement operator*(const WeylElement& o) const;  // composition
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

/// s_phi(v) = v - <v, phi^vee> phi. Throws if phi is not a root of rs.
Coords reflect(const RootSystem& rs, const Coords& phi, const Coords& v);

/// The reflection s_phi as a matrix. Throws if phi is not a root.
WeylElement reflection(const RootSystem& rs, const Coords& phi);

/// The unique element mapping positive roots to negative ones, found by
/// descending a strictly dominant vector to the antidominant chamber.
WeylElement longest_element(const RootSystem& rs);

bool is_minus_identity(const WeylElement& w);

/// Induced simple roots of a subsystem given as a negation-closed set of
/// root indices: the positive members not expressible as a sum of two
/// positive members. Throws std::invalid_argument if the set is not
/// symmetric under negation.
std::vector<int> subsystem_simples(const std::vector<int>& subset,
                                   const RootSystem& rs);

}  // namespace casc

#endif
