#pragma once

#include <utility>
#include <vector>

#include "invariant.hpp"

namespace ila {

enum class LawKind { feedback, injection };

template <Field F>
struct FeedbackLaw {
    Space<F> space;  // on W ⊎ Mu for feedback, on Ẇ ⊎ My for injection
    LawKind kind = LawKind::feedback;
    bool unique = false;
};

// --- wm_u feedback ----------------------------------------------------------

// Existence conditions for reaching `target` from `source` by feedback.
template <Field F>
bool feedback_exists(const Gds<F>& source, const Genaut<F>& target) {
    IndexSet dyn = unite(source.w(), source.wdot());
    bool dot = target.space().subspace_of(source.space().restrict_to(dyn));
    Space<F> mid = source.space().restrict_to(unite(dyn, source.mu())).contract_to(source.wdot());
    bool cross = mid.subspace_of(target.img0());
    return dot && cross;
}

template <Field F>
Genaut<F> feedback_apply(const Gds<F>& source, const Space<F>& law) {
    if (law.index() != unite(source.w(), source.mu()))
        throw BadPartition("feedback law must live on W and Mu");
    IndexSet dyn = unite(source.w(), source.wdot());
    return Genaut<F>(intersect(source.space(), law).restrict_to(dyn), source.w());
}

template <Field F>
FeedbackLaw<F> feedback_recover(const Gds<F>& source, const Genaut<F>& target) {
    if (!feedback_exists(source, target))
        throw NotReachableByFeedback("feedback existence conditions fail");
    IndexSet wmu = unite(source.w(), source.mu());
    FeedbackLaw<F> law;
    law.kind = LawKind::feedback;
    law.space = intersect(source.space(), target.space()).restrict_to(wmu);
    if (feedback_apply(source, law.space) != target)
        throw InternalCheck("recovered feedback law does not reproduce the target");
    Space<F> mid = source.space()
                       .restrict_to(unite(unite(source.w(), source.wdot()), source.mu()))
                       .contract_to(source.mu());
    law.unique = law.space.subspace_of(source.space().restrict_to(wmu)) &&
                 mid.subspace_of(law.space.contract_to(source.mu()));
    return law;
}

// --- m_y wdot injection -----------------------------------------------------

template <Field F>
bool injection_exists(const Gds<F>& source, const Genaut<F>& target) {
    IndexSet dyn = unite(source.w(), source.wdot());
    bool cross = source.space().contract_to(dyn).subspace_of(target.space());
    Space<F> mid = source.space().contract_to(unite(dyn, source.my())).restrict_to(source.w());
    bool dot = target.dom().subspace_of(mid);
    return cross && dot;
}

template <Field F>
Genaut<F> injection_apply(const Gds<F>& source, const Space<F>& law) {
    if (law.index() != unite(source.wdot(), source.my()))
        throw BadPartition("injection law must live on the dotted block and My");
    IndexSet dyn = unite(source.w(), source.wdot());
    return Genaut<F>((source.space() + law).contract_to(dyn), source.w());
}

template <Field F>
FeedbackLaw<F> injection_recover(const Gds<F>& source, const Genaut<F>& target) {
    if (!injection_exists(source, target))
        throw NotReachableByFeedback("injection existence conditions fail");
    IndexSet dwmy = unite(source.wdot(), source.my());
    FeedbackLaw<F> law;
    law.kind = LawKind::injection;
    law.space = (source.space() + target.space()).contract_to(dwmy);
    if (injection_apply(source, law.space) != target)
        throw InternalCheck("recovered injection law does not reproduce the target");
    Space<F> mid = source.space()
                       .contract_to(unite(unite(source.w(), source.wdot()), source.my()))
                       .restrict_to(source.my());
    law.unique = source.space().contract_to(dwmy).subspace_of(law.space) &&
                 law.space.restrict_to(source.my()).subspace_of(mid);
    return law;
}

// --- basic sequences and pole placement -------------------------------------

template <Field F>
struct BasicSequence {
    std::vector<Vec<F>> xs;  // x^0 .. x^k on W
    Space<F> vcom;           // V^com on W
    Space<F> vw;             // the minimal invariant space on W
    Genaut<F> genop;         // the genop of the sequence
    Poly<F> min_poly;        // its minimal annihilating polynomial
};

namespace detail {

// First vector of `inside` not lying in `avoid`, scanning canonical unit
// vectors first, then the RREF basis rows.
template <Field F>
Vec<F> pick_in_difference(const Space<F>& inside, const Space<F>& avoid) {
    for (const Label& l : inside.index()) {
        Vec<F> e = Vec<F>::unit(inside.index(), l);
        if (inside.contains(e) && !avoid.contains(e)) return e;
    }
    for (std::size_t i = 0; i < inside.rank(); ++i) {
        Vec<F> b = inside.basis_vec(i);
        if (!avoid.contains(b)) return b;
    }
    throw InternalCheck("no vector found in the set difference");
}

// Ẇ-part of the pivot lift of f through the genaut space, as a W-copy.
template <Field F>
Vec<F> pivot_image(const Genaut<F>& v, const Vec<F>& f) {
    auto [ok, x] = v.space().lift(f);
    if (!ok) throw InternalCheck("vector has no image in the genaut");
    Vec<F> img(v.w(), std::vector<F>(v.w().size()));
    for (std::size_t c = 0; c < v.w().size(); ++c) img.coords[c] = x.at(v.w().at(c).dot());
    return img;
}

template <Field F>
Genaut<F> sequence_genop(const IndexSet& w, const std::vector<Vec<F>>& xs, std::size_t k,
                         const Space<F>& vcom) {
    IndexSet all = unite(w, w.dotted());
    Mat<F> rows(0, all.size());
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<F> r(all.size(), F::zero());
        for (std::size_t c = 0; c < w.size(); ++c) {
            r[all.pos(w.at(c))] = xs[j].coords[c];
            r[all.pos(w.at(c).dot())] = xs[j + 1].coords[c];
        }
        rows.append_row(r);
    }
    Space<F> base = Space<F>::from_generators(all, std::move(rows));
    Space<F> pad = direct_sum(vcom, vcom.renamed([](const Label& l) { return l.dot(); }));
    return Genaut<F>(base + pad, w);
}

// Coefficients b with x^k + b_{k-1} x^{k-1} + ... + b_0 x^0 in V^com.
template <Field F>
Poly<F> sequence_min_poly(const IndexSet& w, const std::vector<Vec<F>>& xs, std::size_t k,
                          const Space<F>& vcom) {
    Mat<F> m(0, w.size());
    for (std::size_t j = 0; j < k; ++j) m.append_row(xs[j].coords);
    for (std::size_t i = 0; i < vcom.rank(); ++i) m.append_row(vcom.basis().row(i));
    auto [ok, mu] = solve_left(m, xs[k].coords);
    if (!ok) throw InternalCheck("final basic-sequence vector is outside the invariant space");
    std::vector<F> coeffs(k + 1, F::zero());
    for (std::size_t i = 0; i < k; ++i) coeffs[i] = -mu[i];
    coeffs[k] = F::one();
    return Poly<F>(std::move(coeffs));
}

}  // namespace detail

// Algorithm "Basic sequence": a Krylov-like chain through the affine images
// of a USG that is not yet a genop. All picks are canonical, so reruns are
// bit-identical.
template <Field F>
BasicSequence<F> basic_sequence(const Genaut<F>& v1) {
    GenautClass c = classify(v1);
    if (!c.usg) throw BadPartition("basic sequence needs a USG");
    if (c.genop) throw NothingToPlace("the genaut is already a genop");

    Space<F> img0_w = detail::as_w_copy(v1.img0());
    Space<F> vcom = intersect(v1.ker(), img0_w);

    BasicSequence<F> seq;
    seq.vcom = vcom;
    seq.xs.push_back(detail::pick_in_difference(img0_w, v1.ker()));
    Space<F> span = Space<F>::span({seq.xs[0]}, v1.w()) + vcom;
    for (;;) {
        const Vec<F>& xj = seq.xs.back();
        Vec<F> g = detail::pivot_image(v1, xj);
        // The affine image x^j ↔ V1 = g + V1×Ẇ, read on W, lies inside the
        // span iff its pivot element and the whole of (V1×Ẇ)_W do.
        if (span.contains(g) && img0_w.subspace_of(span)) {
            seq.xs.push_back(g);  // x^k, the pivot element of the affine set
            break;
        }
        // Pick an element of the affine fiber independent modulo the span:
        // scan g, then g plus single basis rows of (V1×Ẇ)_W.
        Vec<F> next = g;
        if (span.contains(next)) {
            bool found = false;
            for (std::size_t i = 0; i < img0_w.rank() && !found; ++i) {
                Vec<F> cand(v1.w(), g.coords);
                for (std::size_t cc = 0; cc < cand.coords.size(); ++cc)
                    cand.coords[cc] = cand.coords[cc] + img0_w.basis().at(i, cc);
                if (!span.contains(cand)) {
                    next = cand;
                    found = true;
                }
            }
            if (!found) throw InternalCheck("affine fiber unexpectedly inside the span");
        }
        seq.xs.push_back(next);
        span = span + Space<F>::span({next}, v1.w());
        if (seq.xs.size() > v1.w().size() + 1)
            throw InternalCheck("basic sequence exceeded dim W");
    }
    std::size_t k = seq.xs.size() - 1;
    if (k == 0) throw NothingToPlace("basic sequence is degenerate");
    seq.vw = span;
    seq.genop = detail::sequence_genop(v1.w(), seq.xs, k, vcom);
    seq.min_poly = detail::sequence_min_poly(v1.w(), seq.xs, k, vcom);
    if (!annihilates(seq.min_poly, seq.genop))
        throw InternalCheck("basic-sequence polynomial fails direct evaluation");
    return seq;
}

// Retargets a basic sequence so its genop is annihilated by c instead of b.
// The lambda weights come from the anti-triangular solve with lambda_0 = 1.
template <Field F>
BasicSequence<F> retarget(const BasicSequence<F>& seq, const Poly<F>& b, const Poly<F>& c) {
    long k = static_cast<long>(seq.xs.size()) - 1;
    if (b.degree() != k || c.degree() != k) throw DegreeMismatch("retarget needs matching degrees");
    if (!b.is_monic() || !c.is_monic()) throw DegreeMismatch("retarget needs monic polynomials");
    if (b != seq.min_poly) throw DegreeMismatch("b must be the sequence's minimal polynomial");

    // Solve (lambda_0..lambda_k) C = (b_0..b_k), C[i][j] = c_{i+j}.
    std::vector<F> lambda(static_cast<std::size_t>(k) + 1, F::zero());
    for (long j = k; j >= 0; --j) {
        F acc = b.coeff(static_cast<std::size_t>(j));
        for (long i = 0; i < k - j; ++i)
            acc = acc - lambda[static_cast<std::size_t>(i)] * c.coeff(static_cast<std::size_t>(i + j));
        lambda[static_cast<std::size_t>(k - j)] = acc;  // c_k = 1
    }
    if (!(lambda[0] == F::one())) throw InternalCheck("lambda_0 must be one for monic targets");

    BasicSequence<F> out;
    out.vcom = seq.vcom;
    out.vw = seq.vw;
    const IndexSet& w = seq.genop.w();
    for (std::size_t j = 0; j < seq.xs.size(); ++j) {
        Vec<F> y = Vec<F>::zero(w);
        for (std::size_t i = 0; i <= j; ++i) {
            if (lambda[i].is_zero()) continue;
            for (std::size_t cc = 0; cc < y.coords.size(); ++cc)
                y.coords[cc] = y.coords[cc] + lambda[i] * seq.xs[j - i].coords[cc];
        }
        out.xs.push_back(y);
    }
    std::size_t kk = static_cast<std::size_t>(k);
    out.genop = detail::sequence_genop(w, out.xs, kk, out.vcom);
    out.min_poly = detail::sequence_min_poly(w, out.xs, kk, out.vcom);
    if (out.min_poly != c) throw InternalCheck("retargeted sequence has the wrong polynomial");
    if (!annihilates(c, out.genop))
        throw InternalCheck("retargeted genop is not annihilated by the target");
    return out;
}

// Algorithm "Basic2genop": grow a genop to the full domain of the ambient
// USG by adjoining independent domain vectors with partner images.
template <Field F>
Genaut<F> grow_to_full(const Genaut<F>& vend, const Genaut<F>& v1) {
    if (!vend.space().subspace_of(v1.space()))
        throw NotInvariant("grown genop must contain the seed genop");
    Space<F> vw = vend.dom();
    if (!invariance_check(vw, v1, InvarianceKind::both))
        throw NotInvariant("seed domain must be invariant in the ambient genaut");
    Space<F> target_dom = v1.dom();
    Space<F> cur = vend.space();
    Space<F> dom_span = vw;
    while (dom_span.rank() < target_dom.rank()) {
        Vec<F> u = detail::pick_in_difference(target_dom, dom_span);
        Vec<F> img = detail::pivot_image(v1, u);
        IndexSet all = unite(v1.w(), v1.wdot());
        Vec<F> pair = Vec<F>::zero(all);
        for (std::size_t c = 0; c < v1.w().size(); ++c) {
            pair.at(v1.w().at(c)) = u.coords[c];
            pair.at(v1.w().at(c).dot()) = img.coords[c];
        }
        cur = cur + Space<F>::span({pair}, all);
        dom_span = dom_span + Space<F>::span({u}, v1.w());
    }
    Genaut<F> out(cur, v1.w());
    if (out.dom() != target_dom) throw InternalCheck("grown genop misses the full domain");
    if (!classify(out).genop) throw InternalCheck("grown space is not a genop");
    if (!vend.space().subspace_of(out.space())) throw InternalCheck("growth lost the seed");
    return out;
}

// End-to-end pole placement: factor the target against the mandatory
// uncontrollable polynomial, build and retarget a basic sequence, grow to a
// full genop, and recover the feedback law. Every step certifies itself.
template <Field F>
FeedbackLaw<F> place_poles(const Gds<F>& source, const Poly<F>& target) {
    if (!target.is_monic()) throw DegreeMismatch("pole-placement target must be monic");
    Genaut<F> v1 = source.free_manifest();
    GenautClass c1 = classify(v1);
    if (!c1.usg) throw BadPartition("pole placement needs a USG free-manifest genaut");

    if (c1.genop) {
        if (target != minimal_annihilating_poly(v1))
            throw UnplaceableFactor("system admits no feedback change; target must be its minimal polynomial");
        return feedback_recover(source, v1);
    }

    Space<F> img0_w = detail::as_w_copy(v1.img0());
    InvariantReport<F> inv = min_conditioned_invariant(v1, v1.img0());
    Space<F> vcom = intersect(v1.ker(), img0_w);
    std::size_t essential = inv.space.rank() - vcom.rank();

    Space<F> vw_dot = inv.space.renamed([](const Label& l) { return l.dot(); });
    Genaut<F> quotient(v1.space() + vw_dot, v1.w());
    Poly<F> pu = quotient_min_poly(quotient);

    auto [p2, rem] = target.divmod(pu);
    if (!rem.is_zero())
        throw UnplaceableFactor("target omits the mandatory factor " + pu.str());
    if (p2.degree() != static_cast<long>(essential))
        throw UnplaceableFactor("free factor must have degree " + std::to_string(essential));

    BasicSequence<F> seq = basic_sequence(v1);
    if (seq.vw != inv.space) throw InternalCheck("basic sequence disagrees on the invariant space");
    BasicSequence<F> end = retarget(seq, seq.min_poly, p2);
    Genaut<F> vnew = grow_to_full(end.genop, v1);

    // The dotted-side reachability condition of the feedback theorem.
    Space<F> mid = source.space()
                       .restrict_to(unite(unite(source.w(), source.wdot()), source.mu()))
                       .contract_to(source.wdot());
    if (!mid.subspace_of(vnew.img0()))
        throw NotReachableByFeedback("the feedback cross condition fails for the built genop");

    FeedbackLaw<F> law = feedback_recover(source, vnew);
    Genaut<F> applied = feedback_apply(source, law.space);
    if (!annihilates(target, applied))
        throw InternalCheck("applied law is not annihilated by the target polynomial");
    return law;
}

// Dual pole placement by output injection, through the adjoint wrap: place on
// the adjoint with feedback, then pull the law back.
template <Field F>
FeedbackLaw<F> place_poles_injection(const Gds<F>& source, const Poly<F>& target) {
    Gds<F> adj = adjoint(source);
    FeedbackLaw<F> fb = place_poles(adj, target);
    FeedbackLaw<F> law;
    law.kind = LawKind::injection;
    law.unique = fb.unique;
    law.space = fb.space.perp().renamed([&source](const Label& l) {
        return source.w().contains(l) ? l.dot() : l;
    });
    Genaut<F> applied = injection_apply(source, law.space);
    if (!annihilates(target, applied))
        throw InternalCheck("applied injection law is not annihilated by the target");
    return law;
}

}  // namespace ila
