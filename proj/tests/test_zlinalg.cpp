#include <random>

#include "doctest.h"
#include "pgb/errors.hpp"
#include "pgb/zlinalg.hpp"

using namespace pgb;

namespace {

IntMat mat(std::initializer_list<std::initializer_list<long>> rows) {
  const Index m = static_cast<Index>(rows.size());
  const Index n = m == 0 ? 0 : static_cast<Index>(rows.begin()->size());
  IntMat A(m, n);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (long v : r) A(i, j++) = v;
    ++i;
  }
  return A;
}

IntVec vec(std::initializer_list<long> xs) {
  IntVec v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v(i++) = x;
  return v;
}

IntMat random_matrix(std::mt19937_64& rng, Index m, Index n, long h) {
  std::uniform_int_distribution<long> dist(-h, h);
  IntMat A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = dist(rng);
  return A;
}

bool is_canonical_hnf(const IntMat& H) {
  Index prev = -1;
  for (Index i = 0; i < H.rows(); ++i) {
    Index p = 0;
    while (p < H.cols() && H(i, p) == 0) ++p;
    if (p == H.cols() || p <= prev || H(i, p) <= 0) return false;
    for (Index k = 0; k < i; ++k) {
      if (H(k, p) < 0 || H(k, p) >= H(i, p)) return false;
    }
    prev = p;
  }
  return true;
}

bool same_lattice(const IntMat& A, const IntMat& B) {
  for (Index i = 0; i < A.rows(); ++i)
    if (!solve_in_rowspace(B, A.row(i))) return false;
  for (Index i = 0; i < B.rows(); ++i)
    if (!solve_in_rowspace(A, B.row(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("hnf examples") {
  auto r = hnf(mat({{1, 0}, {0, 1}}));
  CHECK(r.rank == 2);
  CHECK(r.H == mat({{1, 0}, {0, 1}}));

  r = hnf(mat({{4, 6}, {6, 9}}));
  CHECK(r.rank == 1);
  CHECK(r.H == mat({{2, 3}}));

  r = hnf(mat({{0, 0}}));
  CHECK(r.rank == 0);
  CHECK(r.H.rows() == 0);
}

TEST_CASE("solve_in_rowspace examples") {
  auto x = solve_in_rowspace(mat({{2}, {3}}), vec({1}));
  REQUIRE(x);
  CHECK(*x * mat({{2}, {3}}) == vec({1}));

  CHECK_FALSE(solve_in_rowspace(mat({{2}}), vec({1})));

  x = solve_in_rowspace(mat({{2, 0}, {0, 3}}), vec({4, 3}));
  REQUIRE(x);
  CHECK(*x == vec({2, 1}));

  CHECK_THROWS_AS(solve_in_rowspace(mat({{2, 0}}), vec({1})), DomainError);
}

TEST_CASE("lattice_intersect examples") {
  CHECK(lattice_intersect(mat({{2}}), mat({{3}})) == mat({{6}}));
  CHECK(lattice_intersect(mat({{1, 0}, {0, 1}}), mat({{1, 0}, {0, 1}})) == mat({{1, 0}, {0, 1}}));
  CHECK(lattice_intersect(mat({{2, 0}, {0, 1}}), mat({{1, 0}, {0, 3}})) == mat({{2, 0}, {0, 3}}));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(mat({{1}, {1}})) == mat({{1, -1}}));
  CHECK(kernel(mat({{1, 0}, {0, 1}})).rows() == 0);
  CHECK(kernel(mat({{2, 3}, {4, 6}})) == mat({{2, -1}}));
}

TEST_CASE("hnf properties on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Index m = 1 + static_cast<Index>(rng() % 5);
    const Index n = 1 + static_cast<Index>(rng() % 4);
    IntMat A = random_matrix(rng, m, n, 20);
    auto r = hnf(A);
    CHECK(is_canonical_hnf(r.H));
    CHECK(hnf(r.H).H == r.H);
    if (r.rank > 0) CHECK(same_lattice(A, r.H));

    auto tr = hnf_with_transform(A);
    CHECK(tr.U * A == tr.H);
    CHECK(tr.H.topRows(tr.rank) == r.H);

    IntMat K = kernel(A);
    for (Index i = 0; i < K.rows(); ++i) CHECK((K.row(i) * A).isZero());
    CHECK(K.rows() == m - r.rank);
  }
}

TEST_CASE("solve_in_rowspace returns exact solutions") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> small(-3, 3);
  for (int t = 0; t < 200; ++t) {
    const Index m = 1 + static_cast<Index>(rng() % 4);
    const Index n = 1 + static_cast<Index>(rng() % 4);
    IntMat A = random_matrix(rng, m, n, 15);
    IntVec c(m);
    for (Index i = 0; i < m; ++i) c(i) = small(rng);
    IntVec b = c * A;
    auto x = solve_in_rowspace(A, b);
    REQUIRE(x);
    CHECK(*x * A == b);
  }
}

TEST_CASE("lattice_intersect properties") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> small(-4, 4);
  for (int t = 0; t < 100; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 3);
    IntMat A = random_matrix(rng, n, n, 9);
    IntMat B = random_matrix(rng, n, n, 9);
    if (hnf(A).rank < n || hnf(B).rank < n) continue;
    IntMat C = lattice_intersect(A, B);
    CHECK(C.rows() == n);
    for (Index i = 0; i < C.rows(); ++i) {
      CHECK(solve_in_rowspace(A, C.row(i)));
      CHECK(solve_in_rowspace(B, C.row(i)));
    }
    // Multiples of det(B) * A-vectors lie in B as well.
    IntVec c(n);
    for (Index i = 0; i < n; ++i) c(i) = small(rng);
    IntVec v = c * A;
    if (solve_in_rowspace(B, v)) CHECK(solve_in_rowspace(C, v));
    IntVec w = v * triangular_det(hnf(B).H);
    CHECK(solve_in_rowspace(C, w));
  }
}

TEST_CASE("hnf_modular agrees with hnf on full-rank lattices") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const Index n = 1 + static_cast<Index>(rng() % 4);
    IntMat A = random_matrix(rng, n + static_cast<Index>(rng() % 3), n, 12);
    auto r = hnf(A);
    if (r.rank < n) continue;
    const Integer D = abs(triangular_det(r.H));
    CHECK(hnf_modular(A, D) == r.H);
    CHECK(hnf_modular(A, 3 * D) == r.H);
  }
}

TEST_CASE("rational helpers") {
  RatMat M(2, 2);
  M << Rational(1), Rational(2), Rational(3), Rational(4);
  CHECK(rational_det(M) == -2);
  auto inv = rational_inverse(M);
  REQUIRE(inv);
  CHECK(M * *inv == RatMat::Identity(2, 2));
  RatMat S(2, 2);
  S << Rational(1), Rational(2), Rational(2), Rational(4);
  CHECK_FALSE(rational_inverse(S));
  CHECK(centered_quotient(Rational(7), Rational(5)) == 1);
  CHECK(centered_quotient(Rational(-7), Rational(5)) == -1);
  CHECK(centered_quotient(Rational(5, 2), Rational(5)) == 0);
}
