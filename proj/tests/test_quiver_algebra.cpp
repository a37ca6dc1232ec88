#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"

using namespace qrep;
using namespace qtest;

namespace {

// Independent enumeration oracle: composable arrow pairs by brute force.
std::vector<std::pair<int, int>> composable_pairs(const Quiver& q) {
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < q.arrows.size(); ++i)
    for (size_t j = 0; j < q.arrows.size(); ++j)
      if (q.arrows[i].target == q.arrows[j].source) out.emplace_back(static_cast<int>(i), static_cast<int>(j));
  return out;
}

Vec<Rational> basis_vec(const BoundQuiverAlgebra<Rational>::Ptr& a, int idx) {
  Vec<Rational> v = Vec<Rational>::Zero(a->dim());
  v(idx) = Rational(1);
  return v;
}

}  // namespace

TEST_CASE("enumerate_paths on the paper quiver") {
  Quiver q = paper_quiver();

  auto len0 = enumerate_paths(q, 0);
  REQUIRE(len0.size() == 3);
  for (int v = 1; v <= 3; ++v) {
    CHECK(len0[static_cast<size_t>(v - 1)].is_trivial());
    CHECK(len0[static_cast<size_t>(v - 1)].source == v);
  }

  auto len1 = enumerate_paths(q, 1);
  REQUIRE(len1.size() == 4);
  for (size_t i = 0; i < 4; ++i) CHECK(len1[i].arrows == std::vector<int>{static_cast<int>(i)});

  auto len2 = enumerate_paths(q, 2);
  auto oracle = composable_pairs(q);
  REQUIRE(len2.size() == oracle.size());
  CHECK(len2.size() == 6);
  // Lexicographic order: ab, ac, ba, cd, db, dc.
  std::vector<std::vector<int>> want = {{0, 1}, {0, 2}, {1, 0}, {2, 3}, {3, 1}, {3, 2}};
  for (size_t i = 0; i < len2.size(); ++i) CHECK(len2[i].arrows == want[i]);
}

TEST_CASE("build_algebra: paper algebra kQ/J^2") {
  auto a = paper_algebra<Rational>(FieldSpec::rationals());
  CHECK(a->dim() == 7);  // hand count: 3 trivial paths + 4 arrows survive
  CHECK(a->nilpotency == 2);
  for (int b = 0; b < a->dim(); ++b) CHECK(a->basis[static_cast<size_t>(b)].length() <= 1);
  for (int v = 1; v <= 3; ++v) CHECK(a->basis[static_cast<size_t>(a->trivial_index(v))].is_trivial());
}

TEST_CASE("build_algebra: hereditary A2 and commutative square") {
  auto a2 = a2_algebra<Rational>(FieldSpec::rationals());
  CHECK(a2->dim() == 3);

  // Hand quotient count: 4 trivial + 4 arrows + one surviving length-2 class.
  auto sq = square_algebra<Rational>(FieldSpec::rationals());
  CHECK(sq->dim() == 9);
  // ac and bd are identified in the quotient.
  auto ac = sq->path_element(Path{1, {0, 2}});
  auto bd = sq->path_element(Path{1, {1, 3}});
  REQUIRE(ac.size() == 1);
  REQUIRE(bd.size() == 1);
  CHECK(ac[0].first == bd[0].first);
  CHECK(ac[0].second == bd[0].second);
}

TEST_CASE("build_algebra error paths") {
  // Relation with a path of length 1 is not admissible-shaped.
  Quiver q = paper_quiver();
  Relation<Rational> rel;
  rel.terms.push_back({Rational(1), Path{1, {0}}});
  RelationSet<Rational> rels;
  rels.relations.push_back(rel);
  CHECK_THROWS_AS(BoundQuiverAlgebra<Rational>::build(q, rels, FieldSpec::rationals()), NotAdmissible);

  // Cyclic quiver with no relations is infinite-dimensional.
  CHECK_THROWS_AS(BoundQuiverAlgebra<Rational>::build(q, RelationSet<Rational>{}, FieldSpec::rationals()),
                  NotAdmissibleWithinCap);
}

TEST_CASE("multiplication table of the paper algebra") {
  auto a = paper_algebra<Rational>(FieldSpec::rationals());
  int e1 = a->trivial_index(1), e2 = a->trivial_index(2);

  // e_i * e_i = e_i
  for (int v = 1; v <= 3; ++v) {
    int e = a->trivial_index(v);
    auto p = a->product(e, e);
    REQUIRE(p.size() == 1);
    CHECK(p[0].first == e);
    CHECK(p[0].second == Rational(1));
  }

  // Identify arrow basis indices.
  int ia = -1, ib = -1;
  for (int b = 0; b < a->dim(); ++b) {
    const Path& p = a->basis[static_cast<size_t>(b)];
    if (p.length() == 1 && p.arrows[0] == 0) ia = b;
    if (p.length() == 1 && p.arrows[0] == 1) ib = b;
  }
  REQUIRE(ia >= 0);
  REQUIRE(ib >= 0);

  CHECK(a->product(ia, ib).empty());  // a*b dies: J^2 = 0
  auto e1a = a->product(e1, ia);      // e1 * a = a
  REQUIRE(e1a.size() == 1);
  CHECK(e1a[0].first == ia);
  CHECK(a->product(e2, ia).empty());  // e2 * a = 0 (source mismatch)
}

TEST_CASE("unit and associativity (exhaustive on small algebras)") {
  for (auto a : {paper_algebra<Rational>(FieldSpec::rationals()), square_algebra<Rational>(FieldSpec::rationals())}) {
    Vec<Rational> one = a->unit();
    for (int i = 0; i < a->dim(); ++i) {
      Vec<Rational> x = basis_vec(a, i);
      CHECK(is_zero_matrix<Rational>(Mat<Rational>(a->multiply(one, x) - x)));
      CHECK(is_zero_matrix<Rational>(Mat<Rational>(a->multiply(x, one) - x)));
    }
    for (int i = 0; i < a->dim(); ++i)
      for (int j = 0; j < a->dim(); ++j)
        for (int k = 0; k < a->dim(); ++k) {
          Vec<Rational> x = basis_vec(a, i), y = basis_vec(a, j), z = basis_vec(a, k);
          Vec<Rational> lhs = a->multiply(a->multiply(x, y), z);
          Vec<Rational> rhs = a->multiply(x, a->multiply(y, z));
          CHECK(is_zero_matrix<Rational>(Mat<Rational>(lhs - rhs)));
        }
  }
}

TEST_CASE("relations vanish and J^m = 0 in the quotient") {
  auto sq = square_algebra<Rational>(FieldSpec::rationals());
  // ac - bd reduces to zero.
  auto ac = sq->path_element(Path{1, {0, 2}});
  auto bd = sq->path_element(Path{1, {1, 3}});
  Vec<Rational> x = Vec<Rational>::Zero(sq->dim());
  for (auto& [b, c] : ac) x(b) += c;
  for (auto& [b, c] : bd) x(b) -= c;
  CHECK(is_zero_matrix<Rational>(Mat<Rational>(x)));

  // Any product of nilpotency-many arrows vanishes.
  auto a = paper_algebra<Rational>(FieldSpec::rationals());
  for (const Path& p : enumerate_paths(a->quiver, a->nilpotency)) CHECK(a->path_element(p).empty());
}

TEST_CASE("opposite algebra") {
  auto a = paper_algebra<Rational>(FieldSpec::rationals());
  auto op = a->opposite();
  CHECK(op->dim() == a->dim());
  CHECK(op->nilpotency == a->nilpotency);
  CHECK(op->quiver.arrows[0].source == 2);  // a: 1->2 reversed
  CHECK(op->quiver.arrows[0].target == 1);
  // Involution through the cache: the same object comes back.
  CHECK(op->opposite().get() == a.get());

  auto a2 = a2_algebra<Rational>(FieldSpec::rationals());
  auto a2op = a2->opposite();
  CHECK(a2op->dim() == 3);
  CHECK(a2op->quiver.arrows[0].source == 2);

  CHECK(square_algebra<Rational>(FieldSpec::rationals())->opposite()->dim() == 9);
}

TEST_CASE("algebras over F5") {
  auto a = paper_algebra<Fp>(FieldSpec::prime(5));
  CHECK(a->dim() == 7);
  auto sq = square_algebra<Fp>(FieldSpec::prime(5));
  CHECK(sq->dim() == 9);
  // Scalar type / field spec mismatch is rejected.
  RelationSet<Rational> rels;
  rels.rad_power = 2;
  CHECK_THROWS_AS(BoundQuiverAlgebra<Rational>::build(paper_quiver(), rels, FieldSpec::prime(5)), FieldError);
}

TEST_CASE("semisimple corner: quiver with no arrows") {
  auto a = BoundQuiverAlgebra<Rational>::build(Quiver(2, {}), RelationSet<Rational>{}, FieldSpec::rationals());
  CHECK(a->dim() == 2);
  CHECK(a->nilpotency == 1);
}
