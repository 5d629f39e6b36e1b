#ifndef CASC_EXACTLA_HPP
#define CASC_EXACTLA_HPP

#include <boost/multiprecision/gmp.hpp>
#include <cstddef>
#include <vector>

namespace casc {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Dense rational matrix, row-major. Immutable in spirit: operations return
/// new matrices.
class RatMatrix {
public:
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  bool operator==(const RatMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const RatMatrix& o) const { return !(*this == o); }

  /// Vertical concatenation; column counts must agree.
  static RatMatrix vstack(const RatMatrix& a, const RatMatrix& b);

  bool is_zero() const;

private:
  std::size_t rows_, cols_;
  std::vector<Rat> data_;
};

/// Exact row rank, fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Canonical reduced row-echelon form (pivots 1, zeros above and below).
/// Idempotent; the subspace identity used throughout.
RatMatrix rref(const RatMatrix& m);

/// A linear subspace of Q^n held as its canonical RREF basis (no zero rows).
class Subspace {
public:
  /// Zero subspace of the given ambient dimension.
  explicit Subspace(std::size_t ambient_dim)
      : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Span of the rows of `generators` (canonicalized internally).
  static Subspace span(const RatMatrix& generators);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const RatMatrix& basis() const { return basis_; }

private:
  Subspace(std::size_t ambient, RatMatrix basis)
      : ambient_(ambient), basis_(std::move(basis)) {}

  std::size_t ambient_;
  RatMatrix basis_;  // canonical RREF, linearly independent rows

  friend Subspace kernel(const RatMatrix&);
  friend Subspace subspace_sum(const Subspace&, const Subspace&);
};

/// Right null space {x : m x = 0}.
Subspace kernel(const RatMatrix& m);

/// Throws std::invalid_argument on ambient-dimension mismatch.
bool subspace_equal(const Subspace& a, const Subspace& b);

/// Smallest subspace containing both; throws on ambient mismatch.
Subspace subspace_sum(const Subspace& a, const Subspace& b);

/// True iff a is contained in b.
bool subspace_contains(const Subspace& outer, const Subspace& inner);

}  // namespace casc

#endif
