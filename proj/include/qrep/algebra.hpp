#pragma once

// Bound quiver algebras A = kQ/I for admissible-shaped ideals. Construction
// finds the least m with J^m contained in the ideal (graded-Nakayama check in
// the truncation kQ/J^{m+1}), fixes the residue-path basis as the complement
// of the ideal under the global path order, and tabulates structure
// constants.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrep/linalg.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

struct NotAdmissible : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotAdmissibleWithinCap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Paths of length 0..max_len in the global order, with index lookup.
struct PathTable {
  std::vector<Path> paths;
  std::map<Path, int> index;
  std::vector<int> length_start;  // length_start[l] = first index of length l; back() = total

  static PathTable build(const Quiver& q, int max_len) {
    PathTable t;
    t.length_start.push_back(0);
    for (int l = 0; l <= max_len; ++l) {
      std::vector<Path> layer = enumerate_paths(q, l);
      for (auto& p : layer) {
        t.index.emplace(p, static_cast<int>(t.paths.size()));
        t.paths.push_back(std::move(p));
      }
      t.length_start.push_back(static_cast<int>(t.paths.size()));
    }
    return t;
  }

  int size() const { return static_cast<int>(paths.size()); }

  std::optional<int> find(const Path& p) const {
    auto it = index.find(p);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

// Incrementally maintained reduced row echelon subspace of row vectors.
template <class Scalar>
class RowSpace {
 public:
  explicit RowSpace(Index width) : width_(width) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }
  const std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  Eigen::Matrix<Scalar, 1, Eigen::Dynamic> reduce(Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = v(pivots_[r]);
      if (!c.is_zero()) v -= c * rows_[r];
    }
    return v;
  }

  bool contains(const Eigen::Matrix<Scalar, 1, Eigen::Dynamic>& v) const {
    auto red = reduce(v);
    for (Index j = 0; j < red.cols(); ++j)
      if (!red(j).is_zero()) return false;
    return true;
  }

  // Inserts the vector, returning the normalized new basis row, or nullopt
  // if it was already in the span.
  std::optional<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> insert(Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v) {
    v = reduce(std::move(v));
    Index piv = -1;
    for (Index j = 0; j < v.cols(); ++j) {
      if (!v(j).is_zero()) {
        piv = j;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    Scalar inv = v(piv).inverse();
    v *= inv;
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Scalar& c = rows_[r](piv);
      if (!c.is_zero()) rows_[r] -= c * v;
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < piv) ++pos;
    rows_.insert(rows_.begin() + static_cast<long>(pos), v);
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), piv);
    return v;
  }

  Index width() const { return width_; }

 private:
  Index width_;
  std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> rows_;
  std::vector<Index> pivots_;
};

}  // namespace detail

template <class Scalar>
using SparseElem = std::vector<std::pair<int, Scalar>>;  // (basis index, coefficient), index ascending

template <class Scalar>
class BoundQuiverAlgebra : public std::enable_shared_from_this<BoundQuiverAlgebra<Scalar>> {
 public:
  using Ptr = std::shared_ptr<const BoundQuiverAlgebra<Scalar>>;

  // --- immutable data -------------------------------------------------
  Quiver quiver;
  RelationSet<Scalar> relations;
  FieldSpec field;
  int nilpotency = 0;        // least m with J^m = 0 in the quotient
  std::vector<Path> basis;   // residue paths, global order; all lengths < nilpotency

  static constexpr int kDefaultLenCap = 20;

  int dim() const { return static_cast<int>(basis.size()); }

  int basis_source(int b) const { return basis[static_cast<size_t>(b)].sourceOf(quiver); }
  int basis_target(int b) const { return basis[static_cast<size_t>(b)].target(quiver); }

  int trivial_index(int vertex) const { return trivial_idx_[static_cast<size_t>(vertex - 1)]; }

  // Basis indices with the given source (and target), ascending.
  std::vector<int> basis_from(int source) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
      if (basis_source(b) == source) out.push_back(b);
    return out;
  }
  std::vector<int> basis_between(int source, int target) const {
    std::vector<int> out;
    for (int b = 0; b < dim(); ++b)
      if (basis_source(b) == source && basis_target(b) == target) out.push_back(b);
    return out;
  }

  // Normal form of an arbitrary path of the quiver (zero if the path dies in
  // the quotient).
  SparseElem<Scalar> path_element(const Path& p) const {
    p.check(quiver);
    if (p.length() >= nilpotency) return {};
    auto idx = table_.find(p);
    if (!idx) return {};
    return normal_form_[static_cast<size_t>(*idx)];
  }

  // Structure constants: product of two basis elements.
  const SparseElem<Scalar>& product(int i, int j) const {
    return products_[static_cast<size_t>(i) * static_cast<size_t>(dim()) + static_cast<size_t>(j)];
  }

  Vec<Scalar> multiply(const Vec<Scalar>& x, const Vec<Scalar>& y) const {
    Vec<Scalar> out = Vec<Scalar>::Zero(dim());
    for (int i = 0; i < dim(); ++i) {
      if (x(i).is_zero()) continue;
      for (int j = 0; j < dim(); ++j) {
        if (y(j).is_zero()) continue;
        for (const auto& [b, c] : product(i, j)) out(b) += x(i) * y(j) * c;
      }
    }
    return out;
  }

  Vec<Scalar> unit() const {
    Vec<Scalar> e = Vec<Scalar>::Zero(dim());
    for (int v = 1; v <= quiver.vertex_count; ++v) e(trivial_index(v)) = FieldOps<Scalar>::from_long(field, 1);
    return e;
  }

  // --- construction ----------------------------------------------------
  static Ptr build(const Quiver& q, const RelationSet<Scalar>& rels, const FieldSpec& fs,
                   int len_cap = kDefaultLenCap) {
    q.validate();
    if (!FieldOps<Scalar>::admits(fs)) throw FieldError("scalar type does not match field spec " + fs.name());
    for (const auto& rel : rels.relations) {
      for (const auto& [c, p] : rel.terms) {
        p.check(q);
        if (p.length() < 2) throw NotAdmissible("relation contains a path of length < 2");
      }
      rel.endpoints(q);  // throws if not parallel
    }
    if (rels.rad_power && *rels.rad_power < 2) throw NotAdmissible("rad_power must be at least 2");

    auto alg = std::shared_ptr<BoundQuiverAlgebra<Scalar>>(new BoundQuiverAlgebra<Scalar>());
    alg->quiver = q;
    alg->relations = rels;
    alg->field = fs;
    alg->len_cap_ = len_cap;

    // A cyclic quiver with no relations is never finite-dimensional; a path
    // of length vertex_count must revisit a vertex, so that is a cheap test.
    if (rels.empty() && !enumerate_paths(q, q.vertex_count).empty())
      throw NotAdmissibleWithinCap("quiver has an oriented cycle and the relation set is empty");

    int m = -1;
    for (int cand = 1; cand <= len_cap; ++cand) {
      if (jm_contained(q, rels, fs, cand)) {
        m = cand;
        break;
      }
    }
    if (m < 0)
      throw NotAdmissibleWithinCap("no m <= " + std::to_string(len_cap) + " with J^m inside the ideal");
    alg->nilpotency = m;

    // Quotient basis inside kQ/J^m.
    alg->table_ = detail::PathTable::build(q, m - 1);
    detail::RowSpace<Scalar> ideal = ideal_closure(q, rels, fs, alg->table_, m - 1);

    std::vector<bool> is_pivot(static_cast<size_t>(alg->table_.size()), false);
    for (Index p : ideal.pivots()) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<int> basis_of_path(static_cast<size_t>(alg->table_.size()), -1);
    for (int i = 0; i < alg->table_.size(); ++i) {
      if (!is_pivot[static_cast<size_t>(i)]) {
        basis_of_path[static_cast<size_t>(i)] = static_cast<int>(alg->basis.size());
        alg->basis.push_back(alg->table_.paths[static_cast<size_t>(i)]);
      }
    }

    // Normal forms of all table paths over the residue basis.
    alg->normal_form_.resize(static_cast<size_t>(alg->table_.size()));
    for (int i = 0; i < alg->table_.size(); ++i) {
      Eigen::Matrix<Scalar, 1, Eigen::Dynamic> unitv =
          Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(alg->table_.size());
      unitv(i) = FieldOps<Scalar>::from_long(fs, 1);
      auto red = ideal.reduce(std::move(unitv));
      SparseElem<Scalar> nf;
      for (Index j = 0; j < red.cols(); ++j)
        if (!red(j).is_zero()) nf.emplace_back(basis_of_path[static_cast<size_t>(j)], red(j));
      alg->normal_form_[static_cast<size_t>(i)] = std::move(nf);
    }

    alg->trivial_idx_.assign(static_cast<size_t>(q.vertex_count), -1);
    for (int b = 0; b < alg->dim(); ++b)
      if (alg->basis[static_cast<size_t>(b)].is_trivial())
        alg->trivial_idx_[static_cast<size_t>(alg->basis[static_cast<size_t>(b)].source - 1)] = b;
    for (int v = 1; v <= q.vertex_count; ++v)
      if (alg->trivial_index(v) < 0) throw NotAdmissible("trivial path killed by the ideal");

    // Structure constants.
    const int D = alg->dim();
    alg->products_.resize(static_cast<size_t>(D) * static_cast<size_t>(D));
    for (int i = 0; i < D; ++i) {
      const Path& pi = alg->basis[static_cast<size_t>(i)];
      for (int j = 0; j < D; ++j) {
        const Path& pj = alg->basis[static_cast<size_t>(j)];
        SparseElem<Scalar> val;
        if (pi.target(q) == pj.sourceOf(q)) {
          Path cat = pi.concat(pj);
          if (cat.is_trivial()) cat.source = pi.source;
          if (cat.length() < m) {
            auto idx = alg->table_.find(cat);
            if (idx) val = alg->normal_form_[static_cast<size_t>(*idx)];
          }
        }
        alg->products_[static_cast<size_t>(i) * static_cast<size_t>(D) + static_cast<size_t>(j)] = std::move(val);
      }
    }
    return alg;
  }

  // The opposite algebra; involutive through the cached back pointer, so
  // opposite(opposite(a)) is the same object as a.
  Ptr opposite() const {
    if (opp_) return opp_;
    Ptr op = build(quiver.reversed(), relations.reversed(quiver), field, len_cap_);
    op->opp_ = this->shared_from_this();
    opp_ = op;
    return op;
  }

  int len_cap() const { return len_cap_; }

 private:
  BoundQuiverAlgebra() = default;

  // J^m inside the ideal, tested inside kQ/J^{m+1}: the truncated two-sided
  // closure of the relations must contain every path of length m.
  static bool jm_contained(const Quiver& q, const RelationSet<Scalar>& rels, const FieldSpec& fs, int m) {
    detail::PathTable t = detail::PathTable::build(q, m);
    if (t.size() > 200000)
      throw NotAdmissibleWithinCap("truncation kQ/J^" + std::to_string(m + 1) +
                                   " is too large; the ideal does not close at desk scale");
    detail::RowSpace<Scalar> closure = ideal_closure(q, rels, fs, t, m);
    for (int i = t.length_start[static_cast<size_t>(m)]; i < t.length_start[static_cast<size_t>(m) + 1]; ++i) {
      Eigen::Matrix<Scalar, 1, Eigen::Dynamic> unitv = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(t.size());
      unitv(i) = FieldOps<Scalar>::from_long(fs, 1);
      if (!closure.contains(unitv)) return false;
    }
    return true;
  }

  // Two-sided ideal generated by the relations inside the truncation whose
  // paths the table enumerates (products beyond max_len vanish).
  static detail::RowSpace<Scalar> ideal_closure(const Quiver& q, const RelationSet<Scalar>& rels,
                                                const FieldSpec& fs, const detail::PathTable& t, int max_len) {
    detail::RowSpace<Scalar> space(t.size());
    std::vector<Eigen::Matrix<Scalar, 1, Eigen::Dynamic>> work;

    auto push_vec = [&](Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v) {
      if (auto row = space.insert(std::move(v))) work.push_back(std::move(*row));
    };

    for (const auto& rel : rels.relations) {
      Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(t.size());
      bool any = false;
      for (const auto& [c, p] : rel.terms) {
        if (p.length() > max_len) continue;
        auto idx = t.find(p);
        if (idx) {
          v(*idx) += c;
          any = true;
        }
      }
      if (any) push_vec(std::move(v));
    }
    if (rels.rad_power && *rels.rad_power <= max_len) {
      int r = *rels.rad_power;
      for (int i = t.length_start[static_cast<size_t>(r)]; i < t.length_start[static_cast<size_t>(r) + 1]; ++i) {
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> v = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(t.size());
        v(i) = FieldOps<Scalar>::from_long(fs, 1);
        push_vec(std::move(v));
      }
    }

    while (!work.empty()) {
      auto v = std::move(work.back());
      work.pop_back();
      for (size_t ai = 0; ai < q.arrows.size(); ++ai) {
        const Arrow& a = q.arrows[ai];
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> lm = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(t.size());
        Eigen::Matrix<Scalar, 1, Eigen::Dynamic> rm = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>::Zero(t.size());
        bool l_any = false, r_any = false;
        for (Index j = 0; j < t.size(); ++j) {
          if (v(j).is_zero()) continue;
          const Path& p = t.paths[static_cast<size_t>(j)];
          if (p.length() + 1 <= max_len) {
            if (p.sourceOf(q) == a.target) {  // arrow, then path
              Path ext;
              ext.source = a.source;
              ext.arrows.reserve(p.arrows.size() + 1);
              ext.arrows.push_back(static_cast<int>(ai));
              ext.arrows.insert(ext.arrows.end(), p.arrows.begin(), p.arrows.end());
              if (auto idx = t.find(ext)) {
                lm(*idx) += v(j);
                l_any = true;
              }
            }
            if (p.target(q) == a.source) {  // path, then arrow
              Path ext = p;
              if (ext.is_trivial()) ext.source = a.source;
              ext.arrows.push_back(static_cast<int>(ai));
              if (auto idx = t.find(ext)) {
                rm(*idx) += v(j);
                r_any = true;
              }
            }
          }
        }
        if (l_any) push_vec(std::move(lm));
        if (r_any) push_vec(std::move(rm));
      }
    }
    return space;
  }

  detail::PathTable table_;
  std::vector<SparseElem<Scalar>> normal_form_;
  std::vector<SparseElem<Scalar>> products_;
  std::vector<int> trivial_idx_;
  int len_cap_ = kDefaultLenCap;
  mutable Ptr opp_;
};

}  // namespace qrep
