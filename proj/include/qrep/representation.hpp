#pragma once

// Modules over a bound quiver algebra as quiver representations: a vector
// space per vertex and a matrix per arrow. Module elements are row vectors
// and act from the right, so the action of a path p.q is the matrix product
// (action of p) * (action of q), matching the left-to-right path
// composition of the algebra. Morphisms compose left to right as well:
// (f.g) means "apply f, then g".

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/algebra.hpp"
#include "qrep/linalg.hpp"

namespace qrep {

struct AlgebraMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct VertexOutOfRange : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class Scalar>
struct Representation {
  typename BoundQuiverAlgebra<Scalar>::Ptr alg;
  std::vector<Index> dims;       // dims[v-1] = dimension at vertex v
  std::vector<Mat<Scalar>> maps;  // maps[a]: dims[src(a)-1] x dims[tgt(a)-1]

  Representation() = default;
  Representation(typename BoundQuiverAlgebra<Scalar>::Ptr a, std::vector<Index> d, std::vector<Mat<Scalar>> m)
      : alg(std::move(a)), dims(std::move(d)), maps(std::move(m)) {
    check_shapes();
  }

  void check_shapes() const {
    const Quiver& q = alg->quiver;
    if (static_cast<int>(dims.size()) != q.vertex_count)
      throw DimensionMismatch("representation: dimension vector length mismatch");
    if (maps.size() != q.arrows.size()) throw DimensionMismatch("representation: arrow map count mismatch");
    for (size_t a = 0; a < maps.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      if (maps[a].rows() != dims[static_cast<size_t>(ar.source - 1)] ||
          maps[a].cols() != dims[static_cast<size_t>(ar.target - 1)])
        throw DimensionMismatch("representation: map for arrow " + ar.name + " has wrong shape");
    }
  }

  Index dim_at(int vertex) const { return dims[static_cast<size_t>(vertex - 1)]; }
  Index total_dim() const {
    Index t = 0;
    for (Index d : dims) t += d;
    return t;
  }
  bool is_zero() const { return total_dim() == 0; }

  Mat<Scalar> path_action(const Path& p) const {
    if (p.is_trivial()) {
      Index d = dim_at(p.source);
      return Mat<Scalar>::Identity(d, d);
    }
    Mat<Scalar> m = maps[static_cast<size_t>(p.arrows.front())];
    for (size_t i = 1; i < p.arrows.size(); ++i) m = m * maps[static_cast<size_t>(p.arrows[i])];
    return m;
  }

  // Every algebra relation must act as the zero matrix.
  bool relations_hold() const {
    const Quiver& q = alg->quiver;
    for (const auto& rel : alg->relations.relations) {
      auto [s, t] = rel.endpoints(q);
      Mat<Scalar> acc = Mat<Scalar>::Zero(dim_at(s), dim_at(t));
      for (const auto& [c, p] : rel.terms) acc += c * path_action(p);
      if (!is_zero_matrix<Scalar>(acc)) return false;
    }
    if (alg->relations.rad_power) {
      for (const Path& p : enumerate_paths(q, *alg->relations.rad_power))
        if (!is_zero_matrix<Scalar>(path_action(p))) return false;
    }
    return true;
  }

  bool same_algebra(const Representation& o) const { return alg.get() == o.alg.get(); }

  bool structurally_equal(const Representation& o) const {
    if (!same_algebra(o) || dims != o.dims) return false;
    for (size_t a = 0; a < maps.size(); ++a) {
      if (maps[a].rows() != o.maps[a].rows() || maps[a].cols() != o.maps[a].cols()) return false;
      for (Index i = 0; i < maps[a].rows(); ++i)
        for (Index j = 0; j < maps[a].cols(); ++j)
          if (maps[a](i, j) != o.maps[a](i, j)) return false;
    }
    return true;
  }
};

template <class Scalar>
struct Morphism {
  Representation<Scalar> src, tgt;
  std::vector<Mat<Scalar>> blocks;  // blocks[v-1]: src.dims[v-1] x tgt.dims[v-1]

  Morphism() = default;
  Morphism(Representation<Scalar> s, Representation<Scalar> t, std::vector<Mat<Scalar>> b)
      : src(std::move(s)), tgt(std::move(t)), blocks(std::move(b)) {}

  static Morphism zero(const Representation<Scalar>& s, const Representation<Scalar>& t) {
    std::vector<Mat<Scalar>> b;
    for (size_t v = 0; v < s.dims.size(); ++v) b.push_back(Mat<Scalar>::Zero(s.dims[v], t.dims[v]));
    return Morphism(s, t, std::move(b));
  }

  static Morphism identity(const Representation<Scalar>& m) {
    std::vector<Mat<Scalar>> b;
    for (size_t v = 0; v < m.dims.size(); ++v) b.push_back(Mat<Scalar>::Identity(m.dims[v], m.dims[v]));
    return Morphism(m, m, std::move(b));
  }

  // this, then g.
  Morphism compose(const Morphism& g) const {
    std::vector<Mat<Scalar>> b;
    b.reserve(blocks.size());
    for (size_t v = 0; v < blocks.size(); ++v) b.push_back(blocks[v] * g.blocks[v]);
    return Morphism(src, g.tgt, std::move(b));
  }

  bool is_intertwiner() const {
    const Quiver& q = src.alg->quiver;
    for (size_t a = 0; a < q.arrows.size(); ++a) {
      const Arrow& ar = q.arrows[a];
      Mat<Scalar> lhs = blocks[static_cast<size_t>(ar.source - 1)] * tgt.maps[a];
      Mat<Scalar> rhs = src.maps[a] * blocks[static_cast<size_t>(ar.target - 1)];
      if (!is_zero_matrix<Scalar>(Mat<Scalar>(lhs - rhs))) return false;
    }
    return true;
  }

  bool is_zero() const {
    for (const auto& b : blocks)
      if (!is_zero_matrix<Scalar>(b)) return false;
    return true;
  }

  bool is_iso() const {
    for (const auto& b : blocks)
      if (!is_invertible<Scalar>(b)) return false;
    return true;
  }

  Morphism inverse() const {
    std::vector<Mat<Scalar>> b;
    for (const auto& m : blocks) {
      auto inv = qrep::inverse<Scalar>(m);
      if (!inv) throw DimensionMismatch("Morphism::inverse: block not invertible");
      b.push_back(std::move(*inv));
    }
    return Morphism(tgt, src, std::move(b));
  }

  friend Morphism operator+(const Morphism& a, const Morphism& b) {
    std::vector<Mat<Scalar>> out;
    for (size_t v = 0; v < a.blocks.size(); ++v) out.push_back(a.blocks[v] + b.blocks[v]);
    return Morphism(a.src, a.tgt, std::move(out));
  }
  friend Morphism operator-(const Morphism& a, const Morphism& b) {
    std::vector<Mat<Scalar>> out;
    for (size_t v = 0; v < a.blocks.size(); ++v) out.push_back(a.blocks[v] - b.blocks[v]);
    return Morphism(a.src, a.tgt, std::move(out));
  }
  friend Morphism operator*(const Scalar& c, const Morphism& f) {
    std::vector<Mat<Scalar>> out;
    for (const auto& b : f.blocks) out.push_back(c * b);
    return Morphism(f.src, f.tgt, std::move(out));
  }

  // Coordinates in the solver layout: vertices ascending, entries row-major.
  Vec<Scalar> flatten() const {
    Index n = 0;
    for (const auto& b : blocks) n += b.size();
    Vec<Scalar> v = Vec<Scalar>::Zero(n);
    Index at = 0;
    for (const auto& b : blocks)
      for (Index i = 0; i < b.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) v(at++) = b(i, j);
    return v;
  }

  static Morphism unflatten(const Representation<Scalar>& s, const Representation<Scalar>& t,
                            const Vec<Scalar>& coords) {
    std::vector<Mat<Scalar>> blocks;
    Index at = 0;
    for (size_t v = 0; v < s.dims.size(); ++v) {
      Mat<Scalar> b(s.dims[v], t.dims[v]);
      for (Index i = 0; i < b.rows(); ++i)
        for (Index j = 0; j < b.cols(); ++j) b(i, j) = coords(at++);
      blocks.push_back(std::move(b));
    }
    return Morphism(s, t, std::move(blocks));
  }
};

// ---------------------------------------------------------------------------
// Construction of the standard modules.

template <class Scalar>
Representation<Scalar> simple(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg, int vertex) {
  if (vertex < 1 || vertex > alg->quiver.vertex_count) throw VertexOutOfRange("simple: vertex out of range");
  std::vector<Index> dims(static_cast<size_t>(alg->quiver.vertex_count), 0);
  dims[static_cast<size_t>(vertex - 1)] = 1;
  std::vector<Mat<Scalar>> maps;
  for (const Arrow& a : alg->quiver.arrows)
    maps.push_back(Mat<Scalar>::Zero(dims[static_cast<size_t>(a.source - 1)], dims[static_cast<size_t>(a.target - 1)]));
  return Representation<Scalar>(alg, std::move(dims), std::move(maps));
}

// A direct sum of indecomposable projectives e_v A with its path basis laid
// out explicitly; the handle every cover/presentation computation works
// through.
template <class Scalar>
struct ProjectiveStructure {
  Representation<Scalar> rep;
  std::vector<int> summands;                 // vertex of the k-th summand
  std::vector<std::vector<Index>> offset;    // offset[k][v-1]: start of summand k's slice at vertex v
  std::vector<Index> gen_offset;             // position of the generator inside its slice

  // Row vector of the generator of summand k inside rep's vertex space.
  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> generator_row(size_t k) const {
    int v = summands[k];
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row =
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(rep.dim_at(v));
    row(offset[k][static_cast<size_t>(v - 1)] + gen_offset[k]) = Scalar(1);
    return row;
  }
};

template <class Scalar>
ProjectiveStructure<Scalar> projective_module(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg,
                                              const std::vector<int>& summand_vertices) {
  const Quiver& q = alg->quiver;
  for (int v : summand_vertices)
    if (v < 1 || v > q.vertex_count) throw VertexOutOfRange("projective_module: vertex out of range");

  const size_t K = summand_vertices.size();
  // Per-summand, per-vertex path lists (algebra basis indices). Each vertex
  // space is the concatenation of the summand slices, summand-major.
  std::vector<std::vector<std::vector<int>>> paths(K);
  std::vector<Index> dims(static_cast<size_t>(q.vertex_count), 0);
  std::vector<std::vector<Index>> offset(K, std::vector<Index>(static_cast<size_t>(q.vertex_count), 0));
  for (size_t k = 0; k < K; ++k) {
    paths[k].resize(static_cast<size_t>(q.vertex_count));
    for (int v = 1; v <= q.vertex_count; ++v) {
      offset[k][static_cast<size_t>(v - 1)] = dims[static_cast<size_t>(v - 1)];
      paths[k][static_cast<size_t>(v - 1)] = alg->basis_between(summand_vertices[k], v);
      dims[static_cast<size_t>(v - 1)] += static_cast<Index>(paths[k][static_cast<size_t>(v - 1)].size());
    }
  }

  std::vector<Mat<Scalar>> maps;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    Mat<Scalar> m = Mat<Scalar>::Zero(dims[static_cast<size_t>(ar.source - 1)], dims[static_cast<size_t>(ar.target - 1)]);
    for (size_t k = 0; k < K; ++k) {
      const auto& from = paths[k][static_cast<size_t>(ar.source - 1)];
      const auto& to = paths[k][static_cast<size_t>(ar.target - 1)];
      for (size_t r = 0; r < from.size(); ++r) {
        // Right-multiply the basis path by the arrow.
        Path pa;
        pa.source = ar.source;
        pa.arrows = {static_cast<int>(a)};
        const Path& base = alg->basis[static_cast<size_t>(from[r])];
        Path prod = base.concat(pa);
        if (prod.length() >= alg->nilpotency) continue;
        SparseElem<Scalar> val = alg->path_element(prod);
        for (const auto& [b, c] : val) {
          auto it = std::find(to.begin(), to.end(), b);
          if (it == to.end()) continue;  // cannot happen: product stays in the same slice
          Index col = offset[k][static_cast<size_t>(ar.target - 1)] + static_cast<Index>(it - to.begin());
          m(offset[k][static_cast<size_t>(ar.source - 1)] + static_cast<Index>(r), col) += c;
        }
      }
    }
    maps.push_back(std::move(m));
  }

  ProjectiveStructure<Scalar> P;
  P.rep = Representation<Scalar>(alg, std::move(dims), std::move(maps));
  P.summands = summand_vertices;
  P.offset = std::move(offset);
  P.gen_offset.resize(K);
  for (size_t k = 0; k < K; ++k) {
    const auto& self_paths = paths[k][static_cast<size_t>(summand_vertices[k] - 1)];
    Index pos = -1;
    for (size_t r = 0; r < self_paths.size(); ++r)
      if (alg->basis[static_cast<size_t>(self_paths[r])].is_trivial()) pos = static_cast<Index>(r);
    P.gen_offset[k] = pos;
  }
  return P;
}

template <class Scalar>
Representation<Scalar> indec_projective(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg, int vertex) {
  return projective_module<Scalar>(alg, {vertex}).rep;
}

template <class Scalar>
Representation<Scalar> direct_sum(const std::vector<Representation<Scalar>>& parts,
                                  const typename BoundQuiverAlgebra<Scalar>::Ptr& alg) {
  const Quiver& q = alg->quiver;
  std::vector<Index> dims(static_cast<size_t>(q.vertex_count), 0);
  for (const auto& p : parts) {
    if (p.alg.get() != alg.get()) throw AlgebraMismatch("direct_sum: mixed algebras");
    for (size_t v = 0; v < dims.size(); ++v) dims[v] += p.dims[v];
  }
  std::vector<Mat<Scalar>> maps;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    Mat<Scalar> m = Mat<Scalar>::Zero(dims[static_cast<size_t>(ar.source - 1)], dims[static_cast<size_t>(ar.target - 1)]);
    Index ro = 0, co = 0;
    for (const auto& p : parts) {
      m.block(ro, co, p.maps[a].rows(), p.maps[a].cols()) = p.maps[a];
      ro += p.maps[a].rows();
      co += p.maps[a].cols();
    }
    maps.push_back(std::move(m));
  }
  return Representation<Scalar>(alg, std::move(dims), std::move(maps));
}

// Canonical inclusion of the k-th part into the direct sum.
template <class Scalar>
Morphism<Scalar> summand_inclusion(const std::vector<Representation<Scalar>>& parts,
                                   const Representation<Scalar>& sum, size_t k) {
  Morphism<Scalar> f = Morphism<Scalar>::zero(parts[k], sum);
  for (size_t v = 0; v < sum.dims.size(); ++v) {
    Index off = 0;
    for (size_t i = 0; i < k; ++i) off += parts[i].dims[v];
    for (Index r = 0; r < parts[k].dims[v]; ++r) f.blocks[v](r, off + r) = Scalar(1);
  }
  return f;
}

template <class Scalar>
Morphism<Scalar> summand_projection(const std::vector<Representation<Scalar>>& parts,
                                    const Representation<Scalar>& sum, size_t k) {
  Morphism<Scalar> f = Morphism<Scalar>::zero(sum, parts[k]);
  for (size_t v = 0; v < sum.dims.size(); ++v) {
    Index off = 0;
    for (size_t i = 0; i < k; ++i) off += parts[i].dims[v];
    for (Index r = 0; r < parts[k].dims[v]; ++r) f.blocks[v](off + r, r) = Scalar(1);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Duality.

template <class Scalar>
Representation<Scalar> dual(const Representation<Scalar>& m) {
  auto op = m.alg->opposite();
  std::vector<Mat<Scalar>> maps;
  for (size_t a = 0; a < m.maps.size(); ++a) maps.push_back(m.maps[a].transpose());
  return Representation<Scalar>(op, m.dims, std::move(maps));
}

template <class Scalar>
Morphism<Scalar> dual(const Morphism<Scalar>& f) {
  std::vector<Mat<Scalar>> blocks;
  for (const auto& b : f.blocks) blocks.push_back(b.transpose());
  return Morphism<Scalar>(dual(f.tgt), dual(f.src), std::move(blocks));
}

template <class Scalar>
Representation<Scalar> indec_injective(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg, int vertex) {
  if (vertex < 1 || vertex > alg->quiver.vertex_count)
    throw VertexOutOfRange("indec_injective: vertex out of range");
  return dual(indec_projective<Scalar>(alg->opposite(), vertex));
}

template <class Scalar>
Representation<Scalar> regular_module(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg) {
  std::vector<Representation<Scalar>> parts;
  for (int v = 1; v <= alg->quiver.vertex_count; ++v) parts.push_back(indec_projective<Scalar>(alg, v));
  return direct_sum(parts, alg);
}

// D(A) as a right module: the direct sum of the indecomposable injectives.
template <class Scalar>
Representation<Scalar> coregular_module(const typename BoundQuiverAlgebra<Scalar>::Ptr& alg) {
  std::vector<Representation<Scalar>> parts;
  for (int v = 1; v <= alg->quiver.vertex_count; ++v) parts.push_back(indec_injective<Scalar>(alg, v));
  return direct_sum(parts, alg);
}

// ---------------------------------------------------------------------------
// Hom spaces.

template <class Scalar>
std::vector<Morphism<Scalar>> hom_basis(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  if (!m.same_algebra(n)) throw AlgebraMismatch("hom_basis: different algebras");
  const Quiver& q = m.alg->quiver;

  std::vector<Index> unk_offset(m.dims.size() + 1, 0);
  for (size_t v = 0; v < m.dims.size(); ++v) unk_offset[v + 1] = unk_offset[v] + m.dims[v] * n.dims[v];
  const Index unknowns = unk_offset.back();

  Index eq_count = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a)
    eq_count += m.dims[static_cast<size_t>(q.arrows[a].source - 1)] * n.dims[static_cast<size_t>(q.arrows[a].target - 1)];

  Mat<Scalar> sys = Mat<Scalar>::Zero(eq_count, unknowns);
  Index eq = 0;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    const size_t i = static_cast<size_t>(ar.source - 1), j = static_cast<size_t>(ar.target - 1);
    const Mat<Scalar>& Ma = m.maps[a];
    const Mat<Scalar>& Na = n.maps[a];
    for (Index r = 0; r < m.dims[i]; ++r) {
      for (Index c = 0; c < n.dims[j]; ++c) {
        // (f_i N_a)(r,c) - (M_a f_j)(r,c) = 0
        for (Index s = 0; s < m.dims[j]; ++s)
          if (!Ma(r, s).is_zero()) sys(eq, unk_offset[j] + s * n.dims[j] + c) -= Ma(r, s);
        for (Index s = 0; s < n.dims[i]; ++s)
          if (!Na(s, c).is_zero()) sys(eq, unk_offset[i] + r * n.dims[i] + s) += Na(s, c);
        ++eq;
      }
    }
  }

  Mat<Scalar> ker = kernel_basis<Scalar>(sys);
  std::vector<Morphism<Scalar>> out;
  out.reserve(static_cast<size_t>(ker.cols()));
  for (Index c = 0; c < ker.cols(); ++c) out.push_back(Morphism<Scalar>::unflatten(m, n, ker.col(c)));
  return out;
}

template <class Scalar>
Index hom_dim(const Representation<Scalar>& m, const Representation<Scalar>& n) {
  return static_cast<Index>(hom_basis(m, n).size());
}

// ---------------------------------------------------------------------------
// Sub- and quotient structure.

// Subrepresentation spanned by the given rows (must be closed under the
// arrow action); returns the subrep and its inclusion.
template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> subrep_from_rows(const Representation<Scalar>& m,
                                                                     std::vector<Mat<Scalar>> rows) {
  const Quiver& q = m.alg->quiver;
  std::vector<Index> dims(m.dims.size());
  for (size_t v = 0; v < rows.size(); ++v) {
    rows[v] = row_space_basis<Scalar>(rows[v]);
    dims[v] = rows[v].rows();
  }
  std::vector<Mat<Scalar>> maps;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    const size_t i = static_cast<size_t>(ar.source - 1), j = static_cast<size_t>(ar.target - 1);
    Mat<Scalar> rhs = rows[i] * m.maps[a];
    auto x = solve_left<Scalar>(rows[j], rhs);
    if (!x) throw DimensionMismatch("subrep_from_rows: rows are not closed under the action");
    maps.push_back(std::move(*x));
  }
  Representation<Scalar> sub(m.alg, std::move(dims), std::move(maps));
  std::vector<Mat<Scalar>> inc;
  for (size_t v = 0; v < rows.size(); ++v) inc.push_back(rows[v]);
  return {sub, Morphism<Scalar>(sub, m, std::move(inc))};
}

namespace detail {

// Reduction data for a quotient by a row space: projection to complement
// coordinates and the unit-row lift.
template <class Scalar>
struct QuotientCharts {
  Mat<Scalar> proj;  // d x c
  Mat<Scalar> lift;  // c x d
};

template <class Scalar>
QuotientCharts<Scalar> quotient_charts(const Mat<Scalar>& subspace_rows, Index d) {
  RrefResult<Scalar> e = rref(subspace_rows);
  std::vector<bool> is_pivot(static_cast<size_t>(d), false);
  for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<Index> np;
  for (Index j = 0; j < d; ++j)
    if (!is_pivot[static_cast<size_t>(j)]) np.push_back(j);
  const Index c = static_cast<Index>(np.size());

  QuotientCharts<Scalar> ch;
  ch.proj = Mat<Scalar>::Zero(d, c);
  ch.lift = Mat<Scalar>::Zero(c, d);
  for (Index k = 0; k < c; ++k) ch.lift(k, np[static_cast<size_t>(k)]) = Scalar(1);
  // Row r of proj: coordinates of e_r mod the subspace in the complement basis.
  for (Index r = 0; r < d; ++r) {
    Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(d);
    v(r) = Scalar(1);
    for (size_t i = 0; i < e.pivots.size(); ++i) {
      const Scalar& coeff = v(e.pivots[i]);
      if (!coeff.is_zero()) v -= coeff * e.reduced.row(static_cast<Index>(i));
    }
    for (Index k = 0; k < c; ++k) ch.proj(r, k) = v(np[static_cast<size_t>(k)]);
  }
  return ch;
}

}  // namespace detail

// Quotient of m by the submodule spanned by the given rows; returns the
// quotient and the projection.
template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> quotient_by_rows(const Representation<Scalar>& m,
                                                                     const std::vector<Mat<Scalar>>& rows) {
  const Quiver& q = m.alg->quiver;
  std::vector<detail::QuotientCharts<Scalar>> charts;
  std::vector<Index> dims(m.dims.size());
  for (size_t v = 0; v < m.dims.size(); ++v) {
    charts.push_back(detail::quotient_charts<Scalar>(rows[v], m.dims[v]));
    dims[v] = charts[v].proj.cols();
  }
  std::vector<Mat<Scalar>> maps;
  for (size_t a = 0; a < q.arrows.size(); ++a) {
    const Arrow& ar = q.arrows[a];
    const size_t i = static_cast<size_t>(ar.source - 1), j = static_cast<size_t>(ar.target - 1);
    maps.push_back(charts[i].lift * m.maps[a] * charts[j].proj);
  }
  Representation<Scalar> quo(m.alg, std::move(dims), std::move(maps));
  std::vector<Mat<Scalar>> pr;
  for (size_t v = 0; v < m.dims.size(); ++v) pr.push_back(charts[v].proj);
  return {quo, Morphism<Scalar>(m, quo, std::move(pr))};
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> kernel(const Morphism<Scalar>& f) {
  std::vector<Mat<Scalar>> rows;
  for (const auto& b : f.blocks) rows.push_back(left_kernel_basis<Scalar>(b));
  return subrep_from_rows(f.src, std::move(rows));
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> image(const Morphism<Scalar>& f) {
  std::vector<Mat<Scalar>> rows;
  for (const auto& b : f.blocks) rows.push_back(row_space_basis<Scalar>(b));
  return subrep_from_rows(f.tgt, std::move(rows));
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> cokernel(const Morphism<Scalar>& f) {
  std::vector<Mat<Scalar>> rows;
  for (const auto& b : f.blocks) rows.push_back(row_space_basis<Scalar>(b));
  return quotient_by_rows(f.tgt, rows);
}

// ---------------------------------------------------------------------------
// Radical, top, socle.

template <class Scalar>
std::vector<Mat<Scalar>> radical_rows(const Representation<Scalar>& m) {
  const Quiver& q = m.alg->quiver;
  std::vector<Mat<Scalar>> rows;
  for (int v = 1; v <= q.vertex_count; ++v) {
    std::vector<Mat<Scalar>> pieces;
    for (size_t a = 0; a < q.arrows.size(); ++a)
      if (q.arrows[a].target == v) pieces.push_back(m.maps[a]);
    Mat<Scalar> stacked = vstack<Scalar>(pieces, m.dims[static_cast<size_t>(v - 1)]);
    rows.push_back(row_space_basis<Scalar>(stacked));
  }
  return rows;
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> radical(const Representation<Scalar>& m) {
  return subrep_from_rows(m, radical_rows(m));
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> top(const Representation<Scalar>& m) {
  return quotient_by_rows(m, radical_rows(m));
}

template <class Scalar>
std::pair<Representation<Scalar>, Morphism<Scalar>> socle(const Representation<Scalar>& m) {
  auto [t, proj] = top(dual(m));
  Morphism<Scalar> inc = dual(proj);  // D(top(D m)) -> D(D m) = m
  return {inc.src, inc};
}

// Multiplicity of each simple in top(m): entry v-1 = multiplicity of S_v.
template <class Scalar>
std::vector<Index> top_multiplicities(const Representation<Scalar>& m) {
  std::vector<Mat<Scalar>> rad = radical_rows(m);
  std::vector<Index> mult(m.dims.size());
  for (size_t v = 0; v < m.dims.size(); ++v) mult[v] = m.dims[v] - rad[v].rows();
  return mult;
}

// ---------------------------------------------------------------------------
// Projective covers and syzygies.

// Extend generator images to a module morphism from a projective.
template <class Scalar>
Morphism<Scalar> morphism_from_generators(const ProjectiveStructure<Scalar>& P, const Representation<Scalar>& n,
                                          const std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>>& gen_images);

template <class Scalar>
struct CoverData {
  ProjectiveStructure<Scalar> cover;  // P(m)
  Morphism<Scalar> pi;                // P(m) ->> m
  Representation<Scalar> omega;       // ker(pi)
  Morphism<Scalar> iota;              // omega -> P(m)
};

template <class Scalar>
CoverData<Scalar> projective_cover(const Representation<Scalar>& m) {
  const Quiver& q = m.alg->quiver;
  std::vector<Mat<Scalar>> rad = radical_rows(m);

  std::vector<int> summands;
  std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> gens;
  for (int v = 1; v <= q.vertex_count; ++v) {
    RrefResult<Scalar> e = rref(rad[static_cast<size_t>(v - 1)]);
    std::vector<bool> is_pivot(static_cast<size_t>(m.dims[static_cast<size_t>(v - 1)]), false);
    for (Index p : e.pivots) is_pivot[static_cast<size_t>(p)] = true;
    for (Index j = 0; j < m.dims[static_cast<size_t>(v - 1)]; ++j) {
      if (is_pivot[static_cast<size_t>(j)]) continue;
      summands.push_back(v);
      Eigen::Matrix<Scalar, 1, Eigen::Dynamic> g =
          Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(m.dims[static_cast<size_t>(v - 1)]);
      g(j) = Scalar(1);
      gens.push_back(std::move(g));
    }
  }

  CoverData<Scalar> out;
  out.cover = projective_module<Scalar>(m.alg, summands);
  out.pi = morphism_from_generators(out.cover, m, gens);
  auto [omega, iota] = kernel(out.pi);
  out.omega = std::move(omega);
  out.iota = std::move(iota);
  return out;
}

template <class Scalar>
Morphism<Scalar> morphism_from_generators(const ProjectiveStructure<Scalar>& P, const Representation<Scalar>& n,
                                          const std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>>& gen_images) {
  const auto& alg = P.rep.alg;
  const Quiver& q = alg->quiver;
  Morphism<Scalar> f = Morphism<Scalar>::zero(P.rep, n);
  for (size_t k = 0; k < P.summands.size(); ++k) {
    int s = P.summands[k];
    for (int v = 1; v <= q.vertex_count; ++v) {
      std::vector<int> paths = alg->basis_between(s, v);
      for (size_t r = 0; r < paths.size(); ++r) {
        const Path& p = alg->basis[static_cast<size_t>(paths[r])];
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> row = gen_images[k] * n.path_action(p);
        f.blocks[static_cast<size_t>(v - 1)].row(P.offset[k][static_cast<size_t>(v - 1)] + static_cast<Index>(r)) = row;
      }
    }
  }
  return f;
}

// Iterated syzygy via minimal covers (no stripping of projective summands of
// m itself; the spec-level syzygy with its Omega^0 convention lives in
// decompose.hpp).
template <class Scalar>
Representation<Scalar> syzygy_raw(const Representation<Scalar>& m, int k) {
  Representation<Scalar> cur = m;
  for (int i = 0; i < k; ++i) {
    if (cur.is_zero()) return cur;
    cur = projective_cover(cur).omega;
  }
  return cur;
}

template <class Scalar>
bool is_projective_rep(const Representation<Scalar>& m) {
  return projective_cover(m).omega.is_zero();
}

template <class Scalar>
bool is_injective_rep(const Representation<Scalar>& m) {
  return is_projective_rep(dual(m));
}

}  // namespace qrep
