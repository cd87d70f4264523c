#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "linkage.hpp"
#include "poly.hpp"
#include "space.hpp"

namespace ila {

// Generalized autonomous system: a space on W ⊎ Ẇ where Ẇ is the dot-marked
// copy of W. The copy bijection is structural (dot-marking), never by
// position.
template <Field F>
class Genaut {
  public:
    Genaut() = default;
    Genaut(Space<F> space, IndexSet w) : space_(std::move(space)), w_(std::move(w)) {
        if (unite(w_, w_.dotted()) != space_.index())
            throw BadPartition("genaut index set must be W plus its dotted copy");
    }

    const Space<F>& space() const { return space_; }
    const IndexSet& w() const { return w_; }
    IndexSet wdot() const { return w_.dotted(); }

    Linkage<F> linkage() const { return Linkage<F>(space_, w_, w_.dotted()); }

    Space<F> dom() const { return space_.restrict_to(w_); }          // V∘W
    Space<F> codom() const { return space_.restrict_to(wdot()); }    // V∘Ẇ
    Space<F> ker() const { return space_.contract_to(w_); }          // V×W
    Space<F> img0() const { return space_.contract_to(wdot()); }     // V×Ẇ

    bool operator==(const Genaut& o) const { return space_ == o.space_ && w_ == o.w_; }

  private:
    Space<F> space_;
    IndexSet w_;
};

struct GenautClass {
    bool usg = false;
    bool lsg = false;
    bool genop = false;
    bool decoupled = false;
};

namespace detail {

inline Label undot_label(const Label& l) { return l.dotted ? l.undot() : l; }
inline Label dot_swap(const Label& l) { return l.dotted ? l.undot() : l.dot(); }

template <Field F>
Space<F> as_w_copy(const Space<F>& on_wdot) {
    return on_wdot.renamed([](const Label& l) { return l.undot(); });
}

}  // namespace detail

template <Field F>
GenautClass classify(const Genaut<F>& v) {
    GenautClass c;
    Space<F> codom_w = detail::as_w_copy(v.codom());
    Space<F> img0_w = detail::as_w_copy(v.img0());
    c.usg = codom_w.subspace_of(v.dom());
    c.lsg = img0_w.subspace_of(v.ker());
    c.genop = c.usg && c.lsg;
    c.decoupled = is_decoupled(v.linkage());
    return c;
}

// Generalized dynamical system: a space on W ⊎ Ẇ ⊎ M, the manifest block
// optionally split into inputs and outputs.
template <Field F>
class Gds {
  public:
    Gds() = default;
    Gds(Space<F> space, IndexSet w, IndexSet m,
        std::optional<std::pair<IndexSet, IndexSet>> io = std::nullopt)
        : space_(std::move(space)), w_(std::move(w)), m_(std::move(m)), io_(std::move(io)) {
        if (unite(unite(w_, w_.dotted()), m_) != space_.index())
            throw BadPartition("GDS index set must be W, its dotted copy, and M");
        if (io_ && unite(io_->first, io_->second) != m_)
            throw BadPartition("io split must partition M");
    }

    const Space<F>& space() const { return space_; }
    const IndexSet& w() const { return w_; }
    IndexSet wdot() const { return w_.dotted(); }
    const IndexSet& m() const { return m_; }
    bool has_io() const { return io_.has_value(); }
    const IndexSet& mu() const { return require_io().first; }
    const IndexSet& my() const { return require_io().second; }

    // The genaut V_WẆM ↔ V_M.
    Genaut<F> relative_to(const Space<F>& v_m) const {
        return Genaut<F>(space_.compose(v_m), w_);
    }
    // Inputs zero, outputs free.
    Genaut<F> autonomous() const {
        Space<F> vm = direct_sum(Space<F>::zero(mu()), Space<F>::full(my()));
        return relative_to(vm);
    }
    // All manifest variables free.
    Genaut<F> free_manifest() const { return Genaut<F>(space_.restrict_to(unite(w_, wdot())), w_); }

    bool operator==(const Gds& o) const {
        return space_ == o.space_ && w_ == o.w_ && m_ == o.m_ && io_ == o.io_;
    }

  private:
    const std::pair<IndexSet, IndexSet>& require_io() const {
        if (!io_) throw BadPartition("GDS has no input/output split");
        return *io_;
    }
    Space<F> space_;
    IndexSet w_;
    IndexSet m_;
    std::optional<std::pair<IndexSet, IndexSet>> io_;
};

template <Field F>
bool is_regular(const Gds<F>& v) {
    Space<F> dot_w = v.space().restrict_to(v.wdot());
    Space<F> cross_w = v.space().contract_to(v.wdot());
    bool a = detail::as_w_copy(dot_w).subspace_of(v.space().restrict_to(v.w()));
    bool b = detail::as_w_copy(cross_w).subspace_of(v.space().contract_to(v.w()));
    return a && b;
}

// V1 * V2 = (V1)_{WW1} ↔ (V2)_{W1Ẇ} with a fresh dummy copy W1.
template <Field F>
Genaut<F> star(const Genaut<F>& v1, const Genaut<F>& v2) {
    if (v1.w() != v2.w()) throw BadPartition("star needs matching W blocks");
    unsigned k = std::max(v1.space().index().max_primes(), v2.space().index().max_primes()) + 1;
    Space<F> a = v1.space().renamed([k](const Label& l) {
        return l.dotted ? Label(l.base, l.primes + k, false) : l;
    });
    Space<F> b = v2.space().renamed([k](const Label& l) {
        return l.dotted ? l : Label(l.base, l.primes + k, false);
    });
    return Genaut<F>(a.compose(b), v1.w());
}

// zero(V) = V∘W ⊕ V×Ẇ.
template <Field F>
Genaut<F> zero_of(const Genaut<F>& v) {
    return Genaut<F>(v.dom() + v.img0(), v.w());
}

// V^(0) = I_WẆ +_ẇ [V∘W ⊕ V×Ẇ]; V^(k) by iterated star.
template <Field F>
Genaut<F> power(const Genaut<F>& v, unsigned k) {
    if (k == 1) return v;
    if (k == 0) {
        Linkage<F> ident(identity_coupling<F>(v.w(), v.wdot()), v.w(), v.wdot());
        Linkage<F> z = zero_of(v).linkage();
        return Genaut<F>(intersection_sum(ident, z, 1).space(), v.w());
    }
    Genaut<F> acc = v;
    for (unsigned i = 2; i <= k; ++i) acc = star(acc, v);
    return acc;
}

// p(V) = Σ^ẇ α_i^ẇ (V^(i)), every term of the expansion included.
template <Field F>
Genaut<F> poly_eval(const Poly<F>& p, const Genaut<F>& v) {
    long deg = p.degree();
    if (deg < 0) {
        // Zero polynomial: the single decoupled term 0^ẇ V^(0).
        Linkage<F> t = scalar_mul(F::zero(), power(v, 0).linkage());
        return Genaut<F>(t.space(), v.w());
    }
    std::optional<Linkage<F>> acc;
    Genaut<F> vi = power(v, 0);
    for (long i = 0; i <= deg; ++i) {
        if (i == 1) {
            vi = v;
        } else if (i > 1) {
            vi = star(vi, v);
        }
        Linkage<F> term = scalar_mul(p.coeff(static_cast<std::size_t>(i)), vi.linkage());
        acc = acc ? intersection_sum(*acc, term) : term;
    }
    return Genaut<F>(acc->space(), v.w());
}

template <Field F>
bool annihilates(const Poly<F>& p, const Genaut<F>& v) {
    return is_decoupled(poly_eval(p, v).linkage());
}

namespace detail {

// Quotient data of a genop: representatives of (V∘W)/(V×Ẇ)_W and the matrix
// of the induced endomorphism in that basis.
template <Field F>
struct Quotient {
    Space<F> dom;
    Space<F> mod;                       // (V×Ẇ)_W, as a space on W
    std::vector<Vec<F>> reps;           // coset representatives
    Mat<F> action;                      // action matrix, column j = image of rep j
    IndexSet w;

    // Quotient coordinates of a W-vector.
    std::vector<F> coords(const Vec<F>& f) const {
        // Solve against [mod basis; reps] and read off the rep part.
        Mat<F> e(0, w.size());
        for (std::size_t i = 0; i < mod.rank(); ++i) e.append_row(mod.basis().row(i));
        for (const auto& r : reps) e.append_row(r.coords);
        auto [ok, mu] = solve_left(e, f.coords);
        if (!ok) throw InternalCheck("vector outside the quotient domain");
        return std::vector<F>(mu.begin() + static_cast<std::ptrdiff_t>(mod.rank()), mu.end());
    }
};

template <Field F>
Quotient<F> quotient_of(const Genaut<F>& v) {
    Quotient<F> q;
    q.w = v.w();
    q.dom = v.dom();
    q.mod = as_w_copy(v.img0());
    // Extend the mod basis to the domain greedily along the domain basis.
    Mat<F> acc(0, q.w.size());
    for (std::size_t i = 0; i < q.mod.rank(); ++i) acc.append_row(q.mod.basis().row(i));
    for (std::size_t i = 0; i < q.dom.rank(); ++i) {
        Mat<F> trial = acc;
        trial.append_row(q.dom.basis().row(i));
        if (trial.rank() > acc.rank()) {
            acc = std::move(trial);
            q.reps.emplace_back(q.w, q.dom.basis().row(i));
        }
    }
    std::size_t dim = q.reps.size();
    q.action = Mat<F>(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        auto [ok, x] = v.space().lift(q.reps[j]);
        if (!ok) throw InternalCheck("genop domain vector has no image");
        Vec<F> img(q.w, std::vector<F>(q.w.size()));
        for (std::size_t c = 0; c < q.w.size(); ++c)
            img.coords[c] = x.at(q.w.at(c).dot());
        std::vector<F> qc = q.coords(img);
        for (std::size_t i = 0; i < dim; ++i) q.action.at(i, j) = qc[i];
    }
    return q;
}

// Minimal polynomial of a square matrix via the first linear dependence of
// its powers.
template <Field F>
Poly<F> matrix_min_poly(const Mat<F>& m) {
    std::size_t n = m.rows();
    if (n == 0) return Poly<F>::one();
    std::size_t nn = n * n;
    auto vectorize = [nn, n](const Mat<F>& a) {
        std::vector<F> v(nn);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
        return v;
    };
    Mat<F> powers(0, nn);
    Mat<F> cur(n, n);
    for (std::size_t i = 0; i < n; ++i) cur.at(i, i) = F::one();
    for (std::size_t k = 0;; ++k) {
        std::vector<F> vk = vectorize(cur);
        auto [dep, mu] = solve_left(powers, vk);
        if (dep) {
            std::vector<F> coeffs(k + 1, F::zero());
            for (std::size_t i = 0; i < k; ++i) coeffs[i] = -mu[i];
            coeffs[k] = F::one();
            return Poly<F>(std::move(coeffs));
        }
        powers.append_row(vk);
        // cur <- cur * m
        Mat<F> nxt(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                F acc = F::zero();
                for (std::size_t t = 0; t < n; ++t) acc = acc + cur.at(i, t) * m.at(t, j);
                nxt.at(i, j) = acc;
            }
        cur = std::move(nxt);
    }
}

}  // namespace detail

// Minimal annihilating polynomial of a genop: computed on the induced
// endomorphism of (V∘W)/(V×Ẇ)_W (well-defined exactly because V is a genop),
// floored at degree one, then re-certified by direct evaluation.
template <Field F>
Poly<F> minimal_annihilating_poly(const Genaut<F>& v) {
    if (!classify(v).genop) throw NotGenop("minimal annihilating polynomial needs a genop");
    auto q = detail::quotient_of(v);
    Poly<F> p = detail::matrix_min_poly(q.action);
    if (p.degree() < 1) p = Poly<F>::s();
    if (!annihilates(p, v))
        throw InternalCheck("computed minimal polynomial fails direct evaluation");
    return p;
}

// The same computation without the degree-one floor: returns 1 on a trivial
// quotient. This is the mandatory-factor form used by pole placement.
template <Field F>
Poly<F> quotient_min_poly(const Genaut<F>& v) {
    if (!classify(v).genop) throw NotGenop("quotient minimal polynomial needs a genop");
    auto q = detail::quotient_of(v);
    return detail::matrix_min_poly(q.action);
}

// Adjoint of a genaut: perp, swap the W and Ẇ roles, flip the new Ẇ part.
template <Field F>
Genaut<F> adjoint(const Genaut<F>& v) {
    Space<F> p = v.space().perp().renamed(
        [](const Label& l) { return detail::dot_swap(l); });
    return Genaut<F>(p.sign_flipped(v.wdot()), v.w());
}

// Adjoint of a GDS: additionally swaps the input/output roles of M.
template <Field F>
Gds<F> adjoint(const Gds<F>& v) {
    if (!v.has_io()) throw BadPartition("GDS adjoint needs an io split");
    IndexSet dyn = unite(v.w(), v.wdot());
    Space<F> p = v.space().perp().renamed(
        [&dyn](const Label& l) { return dyn.contains(l) ? detail::dot_swap(l) : l; });
    p = p.sign_flipped(unite(v.wdot(), v.mu()));
    return Gds<F>(std::move(p), v.w(), v.m(), std::make_pair(v.my(), v.mu()));
}

}  // namespace ila
