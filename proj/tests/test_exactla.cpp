#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "casc/coadjoint.hpp"  // Rng
#include "casc/exactla.hpp"

using namespace casc;

namespace {

RatMatrix random_int_matrix(Rng& rng, std::size_t r, std::size_t c, long long lo,
                            long long hi) {
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rat(rng.int_in(lo, hi));
  return m;
}

Rat det_cofactor(const RatMatrix& m, std::vector<std::size_t> rows,
                 std::vector<std::size_t> cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  Rat d = 0;
  for (std::size_t k = 0; k < n; ++k) {
    Rat a = m.at(rows[0], cols[k]);
    if (a == 0) continue;
    std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    std::vector<std::size_t> sub_cols;
    for (std::size_t j = 0; j < n; ++j)
      if (j != k) sub_cols.push_back(cols[j]);
    Rat sign = (k % 2 == 0) ? 1 : -1;
    d += sign * a * det_cofactor(m, sub_rows, sub_cols);
  }
  return d;
}

// Independent rank oracle: largest k admitting a nonzero k x k minor,
// determinants by cofactor expansion.
std::size_t rank_by_minors(const RatMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t k = n; k >= 1; --k) {
    std::vector<std::size_t> rsel(k), csel(k);
    std::vector<bool> rmask(m.rows(), false), cmask(m.cols(), false);
    std::fill(rmask.begin(), rmask.begin() + k, true);
    do {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m.rows(); ++i)
        if (rmask[i]) rows.push_back(i);
      std::fill(cmask.begin(), cmask.end(), false);
      std::fill(cmask.begin(), cmask.begin() + k, true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < m.cols(); ++j)
          if (cmask[j]) cols.push_back(j);
        if (det_cofactor(m, rows, cols) != 0) return k;
      } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
  }
  return 0;
}

// Intersection oracle: solutions of u A = v B recovered from the kernel of
// [A^T | -B^T].
Subspace intersect_oracle(const Subspace& a, const Subspace& b) {
  const std::size_t n = a.ambient_dim();
  RatMatrix m(n, a.dim() + b.dim());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < a.dim(); ++i) m.at(j, i) = a.basis().at(i, j);
    for (std::size_t i = 0; i < b.dim(); ++i)
      m.at(j, a.dim() + i) = -b.basis().at(i, j);
  }
  Subspace k = kernel(m);
  RatMatrix gen(k.dim(), n);
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t t = 0; t < n; ++t)
      for (std::size_t j = 0; j < a.dim(); ++j)
        gen.at(i, t) += k.basis().at(i, j) * a.basis().at(j, t);
  return Subspace::span(gen);
}

RatMatrix reverse_rows(const RatMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = m.at(m.rows() - 1 - i, j);
  return r;
}

}  // namespace

TEST_CASE("rank basics") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(RatMatrix(4, 4)) == 0);
}

TEST_CASE("rank agrees with the minor oracle on random matrices") {
  Rng rng(12345);
  for (int t = 0; t < 25; ++t) {
    RatMatrix m = random_int_matrix(rng, 5, 5, -9, 9);
    // push some singularity into the mix: duplicate a row half the time
    if (t % 2 == 0) {
      for (std::size_t j = 0; j < 5; ++j) m.at(4, j) = m.at(1, j);
    }
    CHECK(rank(m) == rank_by_minors(m));
  }
}

TEST_CASE("kernel basics") {
  CHECK(kernel(RatMatrix::identity(3)).dim() == 0);

  RatMatrix m(1, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = -1;
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  CHECK(k.basis().at(0, 0) == 1);
  CHECK(k.basis().at(0, 1) == 1);
}

TEST_CASE("kernel vectors multiply back to zero, rank-nullity holds") {
  Rng rng(777);
  for (int t = 0; t < 20; ++t) {
    RatMatrix m = random_int_matrix(rng, 6, 4, -9, 9);
    // rational entries too
    m.at(0, 0) = Rat(rng.int_in(-9, 9)) / 7;
    Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == m.cols());
    for (std::size_t v = 0; v < k.dim(); ++v)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
          s += m.at(i, j) * k.basis().at(v, j);
        CHECK(s == 0);
      }
  }
}

TEST_CASE("rref canonical form") {
  CHECK(rref(RatMatrix::identity(4)) == RatMatrix::identity(4));

  RatMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 4;
  m.at(1, 0) = 1;
  m.at(1, 1) = 2;
  RatMatrix r = rref(m);
  CHECK(r.at(0, 0) == 1);
  CHECK(r.at(0, 1) == 2);
  CHECK(r.at(1, 0) == 0);
  CHECK(r.at(1, 1) == 0);
}

TEST_CASE("rref is idempotent, rank-preserving and row-order independent") {
  Rng rng(4242);
  for (int t = 0; t < 20; ++t) {
    RatMatrix m = random_int_matrix(rng, 5, 7, -9, 9);
    RatMatrix r = rref(m);
    CHECK(rref(r) == r);
    CHECK(rank(r) == rank(m));
    CHECK(rref(reverse_rows(m)) == r);
  }
}

TEST_CASE("subspace_equal basics") {
  RatMatrix a(1, 2), b(1, 2), c(1, 2);
  a.at(0, 0) = 1;
  b.at(0, 0) = 2;
  c.at(0, 1) = 1;
  CHECK(subspace_equal(Subspace::span(a), Subspace::span(b)));
  CHECK(!subspace_equal(Subspace::span(a), Subspace::span(c)));
  CHECK_THROWS_AS(subspace_equal(Subspace(2), Subspace(3)),
                  std::invalid_argument);
}

TEST_CASE("subspace_equal is an equivalence relation on random subspaces") {
  Rng rng(99);
  for (int t = 0; t < 15; ++t) {
    Subspace a = Subspace::span(random_int_matrix(rng, 2, 5, -5, 5));
    Subspace b = Subspace::span(random_int_matrix(rng, 2, 5, -5, 5));
    Subspace c = Subspace::span(random_int_matrix(rng, 2, 5, -5, 5));
    CHECK(subspace_equal(a, a));
    CHECK(subspace_equal(a, b) == subspace_equal(b, a));
    if (subspace_equal(a, b) && subspace_equal(b, c))
      CHECK(subspace_equal(a, c));
  }
}

TEST_CASE("subspace_sum basics") {
  RatMatrix a(1, 2);
  a.at(0, 0) = 1;
  Subspace sa = Subspace::span(a);
  CHECK(subspace_equal(subspace_sum(sa, Subspace(2)), sa));
  RatMatrix b(1, 2);
  b.at(0, 1) = 1;
  Subspace full = subspace_sum(sa, Subspace::span(b));
  CHECK(full.dim() == 2);
  CHECK_THROWS_AS(subspace_sum(Subspace(2), Subspace(3)),
                  std::invalid_argument);
}

TEST_CASE("sum matches the concatenated-generator column space") {
  Rng rng(31337);
  for (int t = 0; t < 15; ++t) {
    RatMatrix ga = random_int_matrix(rng, 3, 6, -5, 5);
    RatMatrix gb = random_int_matrix(rng, 2, 6, -5, 5);
    Subspace a = Subspace::span(ga), b = Subspace::span(gb);
    CHECK(subspace_equal(subspace_sum(a, b),
                         Subspace::span(RatMatrix::vstack(ga, gb))));
  }
}

TEST_CASE("modular law: dim(a+b) = dim a + dim b - dim(a intersect b)") {
  Rng rng(2024);
  for (int t = 0; t < 15; ++t) {
    Subspace a = Subspace::span(random_int_matrix(rng, 3, 5, -5, 5));
    Subspace b = Subspace::span(random_int_matrix(rng, 3, 5, -5, 5));
    Subspace s = subspace_sum(a, b);
    Subspace i = intersect_oracle(a, b);
    CHECK(s.dim() == a.dim() + b.dim() - i.dim());
    CHECK(subspace_contains(a, i));
    CHECK(subspace_contains(b, i));
  }
}
