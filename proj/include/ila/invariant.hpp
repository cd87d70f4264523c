#pragma once

#include <utility>
#include <vector>

#include "genop.hpp"

namespace ila {

enum class InvarianceKind { conditioned, controlled, both };

// Conditioned: V ↔ V_W ⊆ (V_W)_Ẇ. Controlled: V ↔ (V_W)_Ẇ ⊇ V_W.
template <Field F>
bool invariance_check(const Space<F>& vw, const Genaut<F>& v, InvarianceKind kind) {
    if (vw.index() != v.w()) throw IndexMismatch("invariant candidate must live on W");
    Space<F> vw_dot = vw.renamed([](const Label& l) { return l.dot(); });
    bool cond = true, ctrl = true;
    if (kind != InvarianceKind::controlled)
        cond = v.space().compose(vw).subspace_of(vw_dot);
    if (kind != InvarianceKind::conditioned)
        ctrl = vw.subspace_of(v.space().compose(vw_dot));
    switch (kind) {
        case InvarianceKind::conditioned: return cond;
        case InvarianceKind::controlled: return ctrl;
        default: return cond && ctrl;
    }
}

template <Field F>
struct InvariantReport {
    Space<F> space;
    InvarianceKind kind = InvarianceKind::conditioned;
    unsigned iterations = 0;
    std::vector<Space<F>> chain;
};

// Unique minimal conditioned invariant subspace of V containing the W-copy of
// the seed. The stopping criterion certifies both invariance and minimality.
template <Field F>
InvariantReport<F> min_conditioned_invariant(const Genaut<F>& v, const Space<F>& seed) {
    if (seed.index() != v.wdot()) throw BadSeed("seed must live on the dotted block");
    if (!seed.subspace_of(v.codom())) throw BadSeed("seed must lie inside V∘Ẇ");
    InvariantReport<F> rep;
    rep.kind = InvarianceKind::conditioned;
    Space<F> cur = seed.renamed([](const Label& l) { return l.undot(); });
    rep.chain.push_back(cur);
    for (;;) {
        Space<F> image = v.space().compose(cur);  // on Ẇ
        Space<F> cur_dot = cur.renamed([](const Label& l) { return l.dot(); });
        if (image.subspace_of(cur_dot)) break;
        cur = cur + image.renamed([](const Label& l) { return l.undot(); });
        rep.chain.push_back(cur);
        ++rep.iterations;
        if (rep.iterations > v.w().size())
            throw InternalCheck("conditioned-invariant iteration exceeded dim W");
    }
    rep.space = cur;
    if (!invariance_check(rep.space, v, InvarianceKind::conditioned))
        throw InternalCheck("conditioned-invariant result failed its own check");
    return rep;
}

// Unique maximal controlled invariant subspace of V contained in the cap.
template <Field F>
InvariantReport<F> max_controlled_invariant(const Genaut<F>& v, const Space<F>& cap) {
    if (cap.index() != v.w()) throw BadCap("cap must live on W");
    if (!v.ker().subspace_of(cap)) throw BadCap("cap must contain V×W");
    InvariantReport<F> rep;
    rep.kind = InvarianceKind::controlled;
    Space<F> cur = cap;
    rep.chain.push_back(cur);
    for (;;) {
        Space<F> cur_dot = cur.renamed([](const Label& l) { return l.dot(); });
        Space<F> pre = v.space().compose(cur_dot);  // on W
        if (cur.subspace_of(pre)) break;
        cur = intersect(cur, pre);
        rep.chain.push_back(cur);
        ++rep.iterations;
        if (rep.iterations > v.w().size())
            throw InternalCheck("controlled-invariant iteration exceeded dim W");
    }
    rep.space = cur;
    if (!invariance_check(rep.space, v, InvarianceKind::controlled))
        throw InternalCheck("controlled-invariant result failed its own check");
    return rep;
}

template <Field F>
struct InducedGenops {
    Genaut<F> restricted;  // V ∩ (V_W ⊕ (V_W)_Ẇ)
    Genaut<F> quotient;    // V + (V_W ⊕ (V_W)_Ẇ)
};

// The uncontrollable/unobservable-style genops induced by an invariant
// subspace. Genop-ness is asserted exactly where the theorems promise it.
template <Field F>
InducedGenops<F> induced_genops(const Genaut<F>& v, const Space<F>& vw) {
    if (!invariance_check(vw, v, InvarianceKind::both))
        throw NotInvariant("subspace is not invariant in the genaut");
    Space<F> pad = direct_sum(vw, vw.renamed([](const Label& l) { return l.dot(); }));
    InducedGenops<F> out{Genaut<F>(intersect(v.space(), pad), v.w()),
                         Genaut<F>(v.space() + pad, v.w())};
    GenautClass c = classify(v);
    if (c.usg && !classify(out.quotient).genop)
        throw InternalCheck("quotient of a USG by an invariant subspace must be a genop");
    if (c.lsg && !classify(out.restricted).genop)
        throw InternalCheck("restriction of an LSG to an invariant subspace must be a genop");
    return out;
}

}  // namespace ila
