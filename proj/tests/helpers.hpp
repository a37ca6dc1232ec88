#pragma once

// Shared corpus for the test suites: the three-vertex algebra A* = kQ/J^2 on
// 1 <-> 2 <-> 3 from the worked example, plus the small control algebras.

#include <cstdint>

#include "qrep/algebra.hpp"
#include "qrep/representation.hpp"

namespace qtest {

using namespace qrep;

// Q*: alpha: 1->2, beta: 2->1, gamma: 2->3, delta: 3->2.
inline Quiver paper_quiver() {
  return Quiver(3, {{"a", 1, 2}, {"b", 2, 1}, {"c", 2, 3}, {"d", 3, 2}});
}

template <class S>
typename BoundQuiverAlgebra<S>::Ptr paper_algebra(const FieldSpec& fs) {
  RelationSet<S> rels;
  rels.rad_power = 2;
  return BoundQuiverAlgebra<S>::build(paper_quiver(), rels, fs);
}

// Linear A2: single arrow 1->2, hereditary.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr a2_algebra(const FieldSpec& fs) {
  return BoundQuiverAlgebra<S>::build(Quiver(2, {{"a", 1, 2}}), RelationSet<S>{}, fs);
}

// One loop with loop^2 = 0, i.e. k[x]/(x^2).
template <class S>
typename BoundQuiverAlgebra<S>::Ptr loop_algebra(const FieldSpec& fs) {
  RelationSet<S> rels;
  rels.rad_power = 2;
  return BoundQuiverAlgebra<S>::build(Quiver(1, {{"x", 1, 1}}), rels, fs);
}

// Commutative square: a:1->2, b:1->3, c:2->4, d:3->4 with ac = bd.
template <class S>
typename BoundQuiverAlgebra<S>::Ptr square_algebra(const FieldSpec& fs) {
  Quiver q(4, {{"a", 1, 2}, {"b", 1, 3}, {"c", 2, 4}, {"d", 3, 4}});
  Relation<S> rel;
  rel.terms.push_back({FieldOps<S>::from_long(fs, 1), Path{1, {0, 2}}});
  rel.terms.push_back({FieldOps<S>::from_long(fs, -1), Path{1, {1, 3}}});
  RelationSet<S> rels;
  rels.relations.push_back(rel);
  return BoundQuiverAlgebra<S>::build(q, rels, fs);
}

// Kronecker quiver with J^2 = 0 (double arrow 1 => 2; relations vacuous).
template <class S>
typename BoundQuiverAlgebra<S>::Ptr kronecker_algebra(const FieldSpec& fs) {
  return BoundQuiverAlgebra<S>::build(Quiver(2, {{"a", 1, 2}, {"b", 1, 2}}), RelationSet<S>{}, fs);
}

struct Lcg {
  std::uint64_t s;
  explicit Lcg(std::uint64_t seed) : s(seed) {}
  std::uint64_t next() {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return s >> 33;
  }
  long long range(long long lo, long long hi) { return lo + static_cast<long long>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
};

}  // namespace qtest
