#include "casc/exactla.hpp"

#include <stdexcept>
#include <utility>

namespace casc {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::vstack(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.cols())
    throw std::invalid_argument("vstack: column count mismatch");
  RatMatrix m(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      m.at(a.rows() + i, j) = b.at(i, j);
  return m;
}

bool RatMatrix::is_zero() const {
  for (const Rat& x : data_)
    if (x != 0) return false;
  return true;
}

namespace {

// Clear denominators row by row: returns an integer matrix with the same
// row space and null space.
std::vector<std::vector<Int>> integerize(const RatMatrix& m) {
  std::vector<std::vector<Int>> a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int lcm = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Int d = denominator(m.at(i, j));
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rat& x = m.at(i, j);
      a[i][j] = numerator(x) * (lcm / denominator(x));
    }
  }
  return a;
}

// Fraction-free (Bareiss) forward elimination. On return `a` is in row
// echelon form up to row scaling; pivot columns are reported in order.
// All intermediate entries are minors of the scaled input, so growth stays
// polynomial in the entry size.
std::vector<std::size_t> bareiss(std::vector<std::vector<Int>>& a,
                                 std::size_t cols) {
  std::vector<std::size_t> pivot_cols;
  const std::size_t rows = a.size();
  Int prev_pivot = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    const Int& pivot = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) {
        // Row untouched this step still needs the Bareiss rescale.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (a[i][j] != 0) a[i][j] = pivot * a[i][j] / prev_pivot;
        }
        continue;
      }
      Int factor = a[i][c];
      a[i][c] = 0;
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (pivot * a[i][j] - factor * a[r][j]) / prev_pivot;
      }
    }
    prev_pivot = pivot;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  auto a = integerize(m);
  return bareiss(a, m.cols()).size();
}

RatMatrix rref(const RatMatrix& m) {
  auto a = integerize(m);
  auto pivots = bareiss(a, m.cols());
  const std::size_t r = pivots.size();
  // Normalization pass: back-substitute on the echelon rows in exact
  // rational arithmetic, then scale pivots to 1.
  RatMatrix out(m.rows(), m.cols());
  std::vector<std::vector<Rat>> e(r, std::vector<Rat>(m.cols()));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e[i][j] = Rat(a[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = pivots[i];
    Rat inv = Rat(1) / e[i][pc];
    for (std::size_t j = pc; j < m.cols(); ++j) e[i][j] *= inv;
    for (std::size_t k = 0; k < i; ++k) {
      Rat f = e[k][pc];
      if (f == 0) continue;
      e[k][pc] = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j) e[k][j] -= f * e[i][j];
    }
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = e[i][j];
  return out;
}

Subspace Subspace::span(const RatMatrix& generators) {
  RatMatrix r = rref(generators);
  std::size_t nz = 0;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) {
        zero = false;
        break;
      }
    if (zero) break;  // rref sorts zero rows to the bottom
    ++nz;
  }
  RatMatrix basis(nz, r.cols());
  for (std::size_t i = 0; i < nz; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) basis.at(i, j) = r.at(i, j);
  return Subspace(generators.cols(), std::move(basis));
}

Subspace kernel(const RatMatrix& m) {
  RatMatrix r = rref(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    for (std::size_t j = 0; j < r.cols(); ++j) {
      if (r.at(i, j) != 0) {
        pivot_col.push_back(j);
        is_pivot[j] = true;
        break;
      }
    }
  }
  const std::size_t rk = pivot_col.size();
  const std::size_t nullity = m.cols() - rk;
  RatMatrix gen(nullity, m.cols());
  std::size_t v = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    gen.at(v, j) = 1;
    for (std::size_t i = 0; i < rk; ++i)
      gen.at(v, pivot_col[i]) = -r.at(i, j);
    ++v;
  }
  return Subspace::span(gen);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  return a.basis() == b.basis();
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient dimension mismatch");
  if (a.dim() == 0) return b;
  if (b.dim() == 0) return a;
  return Subspace::span(RatMatrix::vstack(a.basis(), b.basis()));
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  return subspace_equal(subspace_sum(outer, inner), outer);
}

}  // namespace casc
