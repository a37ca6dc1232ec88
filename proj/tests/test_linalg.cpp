#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrep/linalg.hpp"

using namespace qrep;

namespace {

// Deterministic pseudo-random stream for property tests.
struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

template <class S>
Mat<S> random_matrix(Lcg& rng, const FieldSpec& fs, Index r, Index c, long long lo = -4, long long hi = 4) {
  Mat<S> m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j) m(i, j) = FieldOps<S>::from_long(fs, rng.range(lo, hi));
  return m;
}

template <class S>
bool matrices_equal(const Mat<S>& a, const Mat<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST_CASE("rref: identity and zero") {
  FieldSpec fs = FieldSpec::rationals();
  Mat<Rational> id = Mat<Rational>::Identity(2, 2);
  auto e = rref<Rational>(id);
  CHECK(matrices_equal<Rational>(e.reduced, id));
  CHECK(e.pivots == std::vector<Index>{0, 1});

  Mat<Rational> z = Mat<Rational>::Zero(2, 2);
  auto ez = rref<Rational>(z);
  CHECK(matrices_equal<Rational>(ez.reduced, z));
  CHECK(ez.pivots.empty());
  (void)fs;
}

TEST_CASE("rref: rank-one example reduces as by hand") {
  // [[2,4],[1,2]]: r0 /= 2 -> [1,2]; r1 -= r0 -> 0. Pivot column 0 only.
  Mat<Rational> m(2, 2);
  m << Rational(2), Rational(4), Rational(1), Rational(2);
  auto e = rref<Rational>(m);
  Mat<Rational> want(2, 2);
  want << Rational(1), Rational(2), Rational(0), Rational(0);
  CHECK(matrices_equal<Rational>(e.reduced, want));
  CHECK(e.pivots == std::vector<Index>{0});
}

TEST_CASE("rref is idempotent") {
  Lcg rng(11);
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f5 = FieldSpec::prime(5);
  for (int it = 0; it < 25; ++it) {
    Mat<Rational> a = random_matrix<Rational>(rng, q, rng.range(1, 5), rng.range(1, 5));
    auto e1 = rref<Rational>(a);
    auto e2 = rref<Rational>(e1.reduced);
    CHECK(matrices_equal<Rational>(e1.reduced, e2.reduced));

    Mat<Fp> b = random_matrix<Fp>(rng, f5, rng.range(1, 5), rng.range(1, 5), 0, 4);
    auto g1 = rref<Fp>(b);
    auto g2 = rref<Fp>(g1.reduced);
    CHECK(matrices_equal<Fp>(g1.reduced, g2.reduced));
  }
}

TEST_CASE("kernel_basis: edge cases and a hand solve") {
  Mat<Rational> id = Mat<Rational>::Identity(3, 3);
  CHECK(kernel_basis<Rational>(id).cols() == 0);

  Mat<Rational> z = Mat<Rational>::Zero(2, 3);
  Mat<Rational> kz = kernel_basis<Rational>(z);
  CHECK(kz.cols() == 3);
  CHECK(rank<Rational>(kz) == 3);

  // [[1,1]] x = 0 has solution space spanned by (1,-1) (hand solve: x0 = -x1).
  Mat<Rational> m(1, 2);
  m << Rational(1), Rational(1);
  Mat<Rational> k = kernel_basis<Rational>(m);
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());
  CHECK(is_zero_matrix<Rational>(Mat<Rational>(m * k)));
}

TEST_CASE("solve: deterministic representative and inconsistency") {
  Mat<Rational> id = Mat<Rational>::Identity(2, 2);
  Vec<Rational> b(2);
  b << Rational(3), Rational(-7);
  auto x = solve<Rational>(id, b);
  REQUIRE(x.has_value());
  CHECK((*x)(0) == Rational(3));
  CHECK((*x)(1) == Rational(-7));

  Mat<Rational> m(1, 2);
  m << Rational(1), Rational(1);
  Vec<Rational> zero = Vec<Rational>::Zero(1);
  auto x2 = solve<Rational>(m, zero);
  REQUIRE(x2.has_value());
  CHECK((*x2)(0).is_zero());  // free variables pinned to zero
  CHECK((*x2)(1).is_zero());

  Mat<Rational> m0 = Mat<Rational>::Zero(1, 1);
  Vec<Rational> one(1);
  one << Rational(1);
  CHECK(!solve<Rational>(m0, one).has_value());

  Vec<Rational> wrong(2);
  wrong << Rational(1), Rational(1);
  CHECK_THROWS_AS(solve<Rational>(m0, wrong), DimensionMismatch);
}

TEST_CASE("rank-nullity and solve consistency over Q and F5") {
  Lcg rng(23);
  FieldSpec q = FieldSpec::rationals();
  FieldSpec f5 = FieldSpec::prime(5);
  for (int it = 0; it < 40; ++it) {
    Index r = rng.range(1, 5), c = rng.range(1, 5);
    Mat<Rational> a = random_matrix<Rational>(rng, q, r, c);
    CHECK(rank<Rational>(a) + kernel_basis<Rational>(a).cols() == c);

    Vec<Rational> x = random_matrix<Rational>(rng, q, c, 1).col(0);
    Vec<Rational> b = a * x;
    auto sol = solve<Rational>(a, b);
    REQUIRE(sol.has_value());
    CHECK(is_zero_matrix<Rational>(Mat<Rational>(a * *sol - b)));

    Mat<Fp> a5 = random_matrix<Fp>(rng, f5, r, c, 0, 4);
    CHECK(rank<Fp>(a5) + kernel_basis<Fp>(a5).cols() == c);
    Vec<Fp> x5 = random_matrix<Fp>(rng, f5, c, 1, 0, 4).col(0);
    Vec<Fp> b5 = a5 * x5;
    auto sol5 = solve<Fp>(a5, b5);
    REQUIRE(sol5.has_value());
    CHECK(is_zero_matrix<Fp>(Mat<Fp>(a5 * *sol5 - b5)));
  }
}

TEST_CASE("prime field scalar axioms") {
  FieldSpec f5 = FieldSpec::prime(5);
  Lcg rng(37);
  for (int it = 0; it < 60; ++it) {
    Fp a = FieldOps<Fp>::from_long(f5, rng.range(-20, 20));
    Fp b = FieldOps<Fp>::from_long(f5, rng.range(-20, 20));
    Fp c = FieldOps<Fp>::from_long(f5, rng.range(-20, 20));
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    // Fermat: a^p = a.
    Fp pw = FieldOps<Fp>::from_long(f5, 1);
    for (int i = 0; i < 5; ++i) pw *= a;
    CHECK(pw == a);
    if (!a.is_zero()) CHECK(a * a.inverse() == FieldOps<Fp>::from_long(f5, 1));
  }
  CHECK_THROWS_AS(FieldSpec::prime(6), FieldError);
  CHECK_THROWS_AS(FieldSpec::prime(1), FieldError);
  CHECK(FieldSpec::prime(2).p == 2);
  CHECK(FieldSpec::prime(1000003).p == 1000003);
}

TEST_CASE("left kernel and row space helpers") {
  Mat<Rational> m(2, 3);
  m << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  Mat<Rational> lk = left_kernel_basis<Rational>(m);
  CHECK(lk.rows() == 1);
  CHECK(is_zero_matrix<Rational>(Mat<Rational>(lk * m)));
  Mat<Rational> rs = row_space_basis<Rational>(m);
  CHECK(rs.rows() == 1);

  auto inv = inverse<Rational>(Mat<Rational>::Identity(3, 3));
  REQUIRE(inv.has_value());
  CHECK(matrices_equal<Rational>(*inv, Mat<Rational>::Identity(3, 3)));
  Mat<Rational> sing = Mat<Rational>::Zero(2, 2);
  CHECK(!inverse<Rational>(sing).has_value());
}
