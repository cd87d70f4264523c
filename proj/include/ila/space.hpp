#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "label.hpp"
#include "matrix.hpp"

namespace ila {

// A vector indexed by a label set; coordinates stored in canonical order.
template <Field F>
struct Vec {
    IndexSet index;
    std::vector<F> coords;

    Vec() = default;
    Vec(IndexSet idx, std::vector<F> c) : index(std::move(idx)), coords(std::move(c)) {
        if (coords.size() != index.size()) throw IndexMismatch("coordinate count mismatch");
    }
    static Vec zero(const IndexSet& idx) {
        return Vec(idx, std::vector<F>(idx.size(), F::zero()));
    }
    static Vec unit(const IndexSet& idx, const Label& l) {
        Vec v = zero(idx);
        v.coords[idx.pos(l)] = F::one();
        return v;
    }
    const F& at(const Label& l) const { return coords[index.pos(l)]; }
    F& at(const Label& l) { return coords[index.pos(l)]; }

    bool operator==(const Vec&) const = default;
};

enum class SpaceForm { generators, constraints };
enum class ComposeMode { matched, skewed };

// A vector space on an index set, canonical as an RREF generator matrix whose
// columns follow the canonical label order. Equality is structural.
template <Field F>
class Space {
  public:
    Space() = default;

    static Space from_generators(IndexSet idx, Mat<F> rows) {
        if (rows.cols() != idx.size()) throw IndexMismatch("generator width mismatch");
        rows.rref();
        return Space(std::move(idx), std::move(rows));
    }
    static Space from_constraints(IndexSet idx, const Mat<F>& rows) {
        if (rows.cols() != idx.size()) throw IndexMismatch("constraint width mismatch");
        Mat<F> basis = rows.null_space();
        basis.rref();
        return Space(std::move(idx), std::move(basis));
    }
    static Space zero(IndexSet idx) {
        return Space(std::move(idx), Mat<F>(0, 0));
    }
    static Space full(IndexSet idx) {
        Mat<F> m(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i) m.at(i, i) = F::one();
        return Space(std::move(idx), std::move(m));
    }
    static Space span(const std::vector<Vec<F>>& rows, const IndexSet& idx) {
        Mat<F> m(0, idx.size());
        for (const auto& v : rows) {
            if (v.index != idx) throw IndexMismatch("generator on wrong index set");
            m.append_row(v.coords);
        }
        return from_generators(idx, std::move(m));
    }

    const IndexSet& index() const { return index_; }
    const Mat<F>& basis() const { return basis_; }
    std::size_t rank() const { return basis_.rows(); }
    std::size_t dim_ambient() const { return index_.size(); }

    Vec<F> basis_vec(std::size_t i) const { return Vec<F>(index_, basis_.row(i)); }

    bool operator==(const Space& o) const { return index_ == o.index_ && basis_ == o.basis_; }
    bool operator!=(const Space& o) const { return !(*this == o); }

    bool contains(const Vec<F>& v) const {
        if (v.index != index_) throw IndexMismatch("membership query on wrong index set");
        std::vector<F> w = v.coords;
        return reduce_against(w, basis_, pivots_);
    }
    bool subspace_of(const Space& o) const {
        if (index_ != o.index_) throw IndexMismatch("subspace query on wrong index set");
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            std::vector<F> w = basis_.row(i);
            if (!reduce_against(w, o.basis_, o.pivots_)) return false;
        }
        return true;
    }

    Space perp() const {
        Mat<F> n = basis_.null_space();
        n.rref();
        return Space(index_, std::move(n));
    }

    // V∘T: project generators onto the T columns.
    Space restrict_to(const IndexSet& t) const {
        require_subindex(t);
        Mat<F> m(basis_.rows(), t.size());
        std::vector<std::size_t> colmap = positions_of(t);
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < colmap.size(); ++j) m.at(i, j) = basis_.at(i, colmap[j]);
        return from_generators(t, std::move(m));
    }

    // V×T: combinations vanishing off T, found by eliminating the (S∖T)
    // columns first.
    Space contract_to(const IndexSet& t) const {
        require_subindex(t);
        IndexSet rest = minus(index_, t);
        std::vector<std::size_t> rest_cols = positions_of(rest);
        std::vector<std::size_t> t_cols = positions_of(t);
        Mat<F> m(basis_.rows(), index_.size());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            for (std::size_t j = 0; j < rest_cols.size(); ++j) m.at(i, j) = basis_.at(i, rest_cols[j]);
            for (std::size_t j = 0; j < t_cols.size(); ++j)
                m.at(i, rest_cols.size() + j) = basis_.at(i, t_cols[j]);
        }
        m.rref();
        Mat<F> keep(0, t.size());
        for (std::size_t i = 0; i < m.rows(); ++i) {
            bool head_zero = true;
            for (std::size_t j = 0; j < rest_cols.size() && head_zero; ++j)
                head_zero = m.at(i, j).is_zero();
            if (!head_zero) continue;
            std::vector<F> row(t.size());
            for (std::size_t j = 0; j < t.size(); ++j) row[j] = m.at(i, rest_cols.size() + j);
            keep.append_row(row);
        }
        return from_generators(t, std::move(keep));
    }

    // Extended sum: pad with zeros to the union index set.
    friend Space operator+(const Space& a, const Space& b) {
        IndexSet u = unite(a.index_, b.index_);
        Mat<F> m(0, u.size());
        auto push_padded = [&](const Space& s) {
            std::vector<std::size_t> colmap = u_positions(s.index_, u);
            for (std::size_t i = 0; i < s.basis_.rows(); ++i) {
                std::vector<F> row(u.size(), F::zero());
                for (std::size_t j = 0; j < colmap.size(); ++j) row[colmap[j]] = s.basis_.at(i, j);
                m.append_row(row);
            }
        };
        push_padded(a);
        push_padded(b);
        return from_generators(u, std::move(m));
    }

    // Extended intersection: pad with the full space off the own index set.
    friend Space intersect(const Space& a, const Space& b) { return (a.perp() + b.perp()).perp(); }

    Space renamed(const std::function<Label(const Label&)>& f) const {
        IndexSet nidx = index_.mapped(f);
        // Column i of the old order lands at the canonical position of f(label_i).
        Mat<F> m(basis_.rows(), nidx.size());
        for (std::size_t j = 0; j < index_.size(); ++j) {
            std::size_t nj = nidx.pos(f(index_.at(j)));
            for (std::size_t i = 0; i < basis_.rows(); ++i) m.at(i, nj) = basis_.at(i, j);
        }
        return from_generators(nidx, std::move(m));
    }
    Space renamed(const std::map<Label, Label>& f) const {
        return renamed([&f](const Label& l) {
            auto it = f.find(l);
            return it == f.end() ? l : it->second;
        });
    }

    Space sign_flipped(const IndexSet& t) const {
        require_subindex(t);
        Mat<F> m = basis_;
        for (const Label& l : t) {
            std::size_t c = index_.pos(l);
            for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, c) = -m.at(i, c);
        }
        return from_generators(index_, std::move(m));
    }

    // Matched / skewed composition; the result lives on the symmetric
    // difference. An empty surviving index set is rejected per the
    // null-subexpression rule unless allow_scalar is set.
    Space compose(const Space& o, ComposeMode mode = ComposeMode::matched,
                  bool allow_scalar = false) const {
        IndexSet shared = intersect(index_, o.index_);
        IndexSet result = unite(minus(index_, shared), minus(o.index_, shared));
        if (result.empty() && !allow_scalar)
            throw NullSubexpression("composition leaves an empty index set");
        Space flipped = (mode == ComposeMode::matched) ? o.sign_flipped(shared) : o;
        Space total = *this + flipped;
        return total.contract_to(result);
    }

    // Consistency of a scalar-degenerate composition: whether some pair of
    // vectors agrees on the shared coordinates. The zero vectors always do,
    // so for vector spaces this is constantly true; exposed to document the
    // override path rather than claim anything stronger.
    bool compose_consistent(const Space&) const { return true; }

    // One vector of the affine set V ↔ {w} = particular + V×rest, where w is
    // given on a sub-index T: finds x ∈ V with x|T = w. Returns {found, x}.
    std::pair<bool, Vec<F>> lift(const Vec<F>& w) const {
        require_subindex(w.index);
        std::vector<std::size_t> cols = positions_of(w.index);
        Mat<F> sub(basis_.rows(), cols.size());
        for (std::size_t i = 0; i < basis_.rows(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) sub.at(i, j) = basis_.at(i, cols[j]);
        auto [ok, mu] = solve_left(sub, w.coords);
        if (!ok) return {false, Vec<F>::zero(index_)};
        std::vector<F> x(index_.size(), F::zero());
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            if (mu[i].is_zero()) continue;
            for (std::size_t c = 0; c < index_.size(); ++c) x[c] = x[c] + mu[i] * basis_.at(i, c);
        }
        return {true, Vec<F>(index_, std::move(x))};
    }

  private:
    Space(IndexSet idx, Mat<F> rref_basis) : index_(std::move(idx)), basis_(std::move(rref_basis)) {
        if (basis_.cols() != index_.size()) {
            // zero() path: fix column count.
            basis_ = Mat<F>(0, index_.size());
        }
        recompute_pivots();
    }
    void recompute_pivots() {
        pivots_.clear();
        for (std::size_t i = 0; i < basis_.rows(); ++i) {
            for (std::size_t c = 0; c < basis_.cols(); ++c) {
                if (!basis_.at(i, c).is_zero()) {
                    pivots_.push_back(c);
                    break;
                }
            }
        }
    }
    void require_subindex(const IndexSet& t) const {
        if (!t.subset_of(index_)) throw IndexMismatch("index set is not a subset");
    }
    std::vector<std::size_t> positions_of(const IndexSet& t) const {
        std::vector<std::size_t> out;
        out.reserve(t.size());
        for (const Label& l : t) out.push_back(index_.pos(l));
        return out;
    }
    static std::vector<std::size_t> u_positions(const IndexSet& sub, const IndexSet& u) {
        std::vector<std::size_t> out;
        out.reserve(sub.size());
        for (const Label& l : sub) out.push_back(u.pos(l));
        return out;
    }
    IndexSet index_;
    Mat<F> basis_;
    std::vector<std::size_t> pivots_;
};

// make_space per the artifact surface: rows interpreted as generators or as
// constraint rows ([S]f = 0).
template <Field F>
Space<F> make_space(const IndexSet& idx, const std::vector<Vec<F>>& rows, SpaceForm form) {
    Mat<F> m(0, idx.size());
    for (const auto& v : rows) {
        if (v.index != idx) throw IndexMismatch("row on mismatched index set");
        m.append_row(v.coords);
    }
    if (form == SpaceForm::generators) return Space<F>::from_generators(idx, std::move(m));
    return Space<F>::from_constraints(idx, m);
}

// I_{AB}: pairs (f, f-copy) under a label bijection between two disjoint
// equal-size index sets given in matching canonical order.
template <Field F>
Space<F> identity_coupling(const IndexSet& a, const IndexSet& b) {
    if (a.size() != b.size()) throw IndexMismatch("identity coupling needs equal sizes");
    if (!a.disjoint_from(b)) throw IndexMismatch("identity coupling needs disjoint sets");
    IndexSet u = unite(a, b);
    Mat<F> m(a.size(), u.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        m.at(i, u.pos(a.at(i))) = F::one();
        m.at(i, u.pos(b.at(i))) = F::one();
    }
    return Space<F>::from_generators(u, std::move(m));
}

// Direct sum of spaces on disjoint index sets (same as extended sum there).
template <Field F>
Space<F> direct_sum(const Space<F>& a, const Space<F>& b) {
    if (!a.index().disjoint_from(b.index())) throw IndexMismatch("direct sum needs disjoint sets");
    return a + b;
}

}  // namespace ila
