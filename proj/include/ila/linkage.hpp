#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "space.hpp"

namespace ila {

// A vector space with a declared block partition of its index set.
template <Field F>
class Linkage {
  public:
    Linkage() = default;
    Linkage(Space<F> space, std::vector<IndexSet> blocks)
        : space_(std::move(space)), blocks_(std::move(blocks)) {
        IndexSet u;
        for (const auto& b : blocks_) {
            if (!u.disjoint_from(b)) throw BadPartition("blocks overlap");
            u = unite(u, b);
        }
        if (u != space_.index()) throw BadPartition("blocks do not cover the index set");
    }
    Linkage(Space<F> space, IndexSet a, IndexSet b)
        : Linkage(std::move(space), std::vector<IndexSet>{std::move(a), std::move(b)}) {}

    const Space<F>& space() const { return space_; }
    const std::vector<IndexSet>& blocks() const { return blocks_; }
    const IndexSet& block(std::size_t i) const { return blocks_[i]; }
    std::size_t block_of(const Label& l) const {
        for (std::size_t i = 0; i < blocks_.size(); ++i)
            if (blocks_[i].contains(l)) return i;
        throw IndexMismatch("label not in any block: " + l.str());
    }

    bool operator==(const Linkage& o) const {
        return space_ == o.space_ && blocks_ == o.blocks_;
    }

    void require_two_blocks() const {
        if (blocks_.size() != 2) throw BadPartition("operation needs a two-block linkage");
    }

  private:
    Space<F> space_;
    std::vector<IndexSet> blocks_;
};

template <Field F>
bool is_decoupled(const Linkage<F>& v) {
    for (const auto& b : v.blocks())
        if (v.space().restrict_to(b) != v.space().contract_to(b)) return false;
    return true;
}

template <Field F>
bool is_decoupled_on(const Space<F>& v, const IndexSet& a, const IndexSet& b) {
    return v.restrict_to(a) == v.contract_to(a) && v.restrict_to(b) == v.contract_to(b);
}

// V_AB^T = (V_AB^perp) with the B columns negated.
template <Field F>
Linkage<F> transpose(const Linkage<F>& v) {
    v.require_two_blocks();
    return Linkage<F>(v.space().perp().sign_flipped(v.block(1)), v.block(0), v.block(1));
}

namespace detail {

// Bumps every label by enough primes to be fresh relative to `ref`.
inline unsigned fresh_prime_step(const IndexSet& ref) { return ref.max_primes() + 1; }

}  // namespace detail

// Intersection-sum along the block `along` (0 or 1): shares the other block,
// adds the `along`-components. Implemented by the explicit coupling
// construction so one code path serves every field.
template <Field F>
Linkage<F> intersection_sum(const Linkage<F>& v1, const Linkage<F>& v2, std::size_t along = 1) {
    v1.require_two_blocks();
    v2.require_two_blocks();
    if (v1.blocks() != v2.blocks()) throw BadPartition("intersection-sum needs equal blocks");
    if (along > 1) throw BadPartition("along must name one of the two blocks");

    const IndexSet& a = v1.block(1 - along);  // matched block
    const IndexSet& b = v1.block(along);      // summed block
    unsigned k = detail::fresh_prime_step(v1.space().index());
    IndexSet a1 = a.primed(k), a2 = a.primed(2 * k);
    IndexSet b1 = b.primed(k), b2 = b.primed(2 * k);

    auto prime_all = [](const Space<F>& s, unsigned n) {
        return s.renamed([n](const Label& l) { return l.primed(n); });
    };
    Space<F> left = direct_sum(prime_all(v1.space(), k), prime_all(v2.space(), 2 * k));

    // Coupler on A ⊎ A' ⊎ A'': all three copies equal.
    IndexSet ua = unite(unite(a, a1), a2);
    Mat<F> ca(a.size(), ua.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        ca.at(i, ua.pos(a.at(i))) = F::one();
        ca.at(i, ua.pos(a.at(i).primed(k))) = F::one();
        ca.at(i, ua.pos(a.at(i).primed(2 * k))) = F::one();
    }
    // Coupler on B ⊎ B' ⊎ B'': B-component is the sum of the two copies.
    IndexSet ub = unite(unite(b, b1), b2);
    Mat<F> cb(2 * b.size(), ub.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        cb.at(i, ub.pos(b.at(i))) = F::one();
        cb.at(i, ub.pos(b.at(i).primed(k))) = F::one();
        cb.at(b.size() + i, ub.pos(b.at(i))) = F::one();
        cb.at(b.size() + i, ub.pos(b.at(i).primed(2 * k))) = F::one();
    }
    Space<F> coupler = direct_sum(Space<F>::from_generators(ua, std::move(ca)),
                                  Space<F>::from_generators(ub, std::move(cb)));
    Space<F> result = left.compose(coupler);
    return Linkage<F>(std::move(result), v1.block(0), v1.block(1));
}

// λ^b V = {(f_A, λ g_B)} + V×B, the contraction term keeping the λ=0 case in
// the dual-friendly form 0^b V = V∘A ⊕ V×B.
template <Field F>
Linkage<F> scalar_mul(const F& lambda, const Linkage<F>& v, std::size_t along = 1) {
    v.require_two_blocks();
    const IndexSet& b = v.block(along);
    unsigned k = detail::fresh_prime_step(v.space().index());
    IndexSet b1 = b.primed(k);
    IndexSet ub = unite(b, b1);
    Mat<F> sc(b.size(), ub.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        sc.at(i, ub.pos(b.at(i))) = F::one();
        sc.at(i, ub.pos(b.at(i).primed(k))) = lambda;
    }
    Space<F> scale = Space<F>::from_generators(ub, std::move(sc));
    Space<F> scaled = v.space().compose(scale).renamed(
        [k](const Label& l) { return l.primes >= k ? Label(l.base, l.primes - k, l.dotted) : l; });
    Space<F> result = scaled + v.space().contract_to(b);
    return Linkage<F>(std::move(result), v.block(0), v.block(1));
}

template <Field F>
struct IITReport {
    bool solvable = false;
    bool restriction_ok = false;
    bool contraction_ok = false;
    std::optional<Linkage<F>> solution;
    bool uniqueness_certified = false;
};

// Implicit inversion: solve V_SP ↔ V_PQ = V_SQ for V_PQ. The returned
// solution is always re-composed and verified before being reported.
template <Field F>
IITReport<F> iit_solve(const Linkage<F>& v_sp, const Linkage<F>& v_sq) {
    v_sp.require_two_blocks();
    v_sq.require_two_blocks();
    const IndexSet& s = v_sp.block(0);
    if (s != v_sq.block(0)) throw BadPartition("shared block mismatch");
    const IndexSet& p = v_sp.block(1);
    const IndexSet& q = v_sq.block(1);
    if (!p.disjoint_from(q) || !s.disjoint_from(p) || !s.disjoint_from(q))
        throw BadPartition("S, P, Q must be pairwise disjoint");

    IITReport<F> rep;
    rep.restriction_ok = v_sq.space().restrict_to(s).subspace_of(v_sp.space().restrict_to(s));
    rep.contraction_ok = v_sp.space().contract_to(s).subspace_of(v_sq.space().contract_to(s));
    rep.solvable = rep.restriction_ok && rep.contraction_ok;
    if (!rep.solvable) return rep;

    Space<F> sol = v_sp.space().compose(v_sq.space());
    if (v_sp.space().compose(sol) != v_sq.space())
        throw InternalCheck("IIT solution failed re-composition");
    rep.uniqueness_certified = sol.restrict_to(p).subspace_of(v_sp.space().restrict_to(p)) &&
                               v_sp.space().contract_to(p).subspace_of(sol.contract_to(p));
    rep.solution = Linkage<F>(std::move(sol), p, q);
    return rep;
}

// Symmetric pseudoidentity V_AB ↔ (V_AB)_{A'B} on A ⊎ A'.
template <Field F>
Linkage<F> pseudoidentity(const Linkage<F>& v_ab) {
    v_ab.require_two_blocks();
    const IndexSet& a = v_ab.block(0);
    unsigned k = detail::fresh_prime_step(v_ab.space().index());
    Space<F> copy = v_ab.space().renamed([&a, k](const Label& l) {
        return a.contains(l) ? l.primed(k) : l;
    });
    return Linkage<F>(v_ab.space().compose(copy), a, a.primed(k));
}

// Whether a symmetric linkage on A ⊎ A' is a pseudoidentity for V_AB.
template <Field F>
bool is_pseudoidentity(const Linkage<F>& v_aa, const Linkage<F>& v_ab) {
    v_aa.require_two_blocks();
    v_ab.require_two_blocks();
    const IndexSet& a = v_aa.block(0);
    const IndexSet& a1 = v_aa.block(1);
    if (a != v_ab.block(0)) throw BadPartition("pseudoidentity block mismatch");
    // Symmetry: V ⊇ I_AA' ∩ (V∘A) and swap-invariance.
    Space<F> ident = identity_coupling<F>(a, a1);
    Space<F> dom = v_aa.space().restrict_to(a);
    if (!intersect(ident, dom).subspace_of(v_aa.space())) return false;
    std::map<Label, Label> swap;
    for (std::size_t i = 0; i < a.size(); ++i) {
        swap[a.at(i)] = a1.at(i);
        swap[a1.at(i)] = a.at(i);
    }
    if (v_aa.space().renamed(swap) != v_aa.space()) return false;
    // Theorem condition on the two minors, both read on A.
    bool dot = v_ab.space().restrict_to(a).subspace_of(v_aa.space().restrict_to(a));
    bool cross = v_aa.space().contract_to(a).subspace_of(v_ab.space().contract_to(a));
    return dot && cross;
}

enum class DistributeSide { cross, dot };

// Hypothesis gate of the distributivity theorem: on the cross side,
// V_BC × B ⊆ V1_AB × B allows ↔ to distribute over +_a; on the dot side,
// V_BC ∘ B ⊇ V1_AB ∘ B allows it over +_b.
template <Field F>
bool distribute_check(const Linkage<F>& v_bc, const Linkage<F>& v1_ab, const Linkage<F>& v2_ab,
                      DistributeSide side) {
    v_bc.require_two_blocks();
    v1_ab.require_two_blocks();
    if (v1_ab.blocks() != v2_ab.blocks()) throw BadPartition("summands on different blocks");
    const IndexSet& b = v_bc.block(0);
    if (b != v1_ab.block(1)) throw BadPartition("composition block mismatch");
    if (side == DistributeSide::cross)
        return v_bc.space().contract_to(b).subspace_of(v1_ab.space().contract_to(b));
    return v1_ab.space().restrict_to(b).subspace_of(v_bc.space().restrict_to(b));
}

}  // namespace ila
