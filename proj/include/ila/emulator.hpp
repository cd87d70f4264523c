#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "control.hpp"
#include "network.hpp"

namespace ila {

// An E-linkage pair (V¹_WP, V²_ẆṖ) with the defining side condition
// V¹ ⊇ (V²)_WP.
template <Field F>
class ELinkagePair {
  public:
    ELinkagePair() = default;
    ELinkagePair(Space<F> v1, Space<F> v2, IndexSet w, IndexSet p)
        : v1_(std::move(v1)), v2_(std::move(v2)), w_(std::move(w)), p_(std::move(p)) {
        if (v1_.index() != unite(w_, p_)) throw IndexMismatch("V1 must live on W and P");
        if (v2_.index() != unite(w_.dotted(), p_.dotted()))
            throw IndexMismatch("V2 must live on the dotted copies");
        if (!detail::as_w_copy(v2_).subspace_of(v1_))
            throw NotLinked("E-linkage requires V1 to contain the undotted copy of V2");
    }

    const Space<F>& v1() const { return v1_; }
    const Space<F>& v2() const { return v2_; }
    const IndexSet& w() const { return w_; }
    const IndexSet& p() const { return p_; }

    Space<F> sum() const { return direct_sum(v1_, v2_); }

    bool operator==(const ELinkagePair& o) const {
        return v1_ == o.v1_ && v2_ == o.v2_ && w_ == o.w_ && p_ == o.p_;
    }

  private:
    Space<F> v1_;
    Space<F> v2_;
    IndexSet w_;
    IndexSet p_;
};

template <Field F>
struct ELinkReport {
    bool linked = false;
    bool forward = false;   // VP == pair ↔ VW
    bool backward = false;  // VW == pair ↔ VP
    std::array<bool, 8> dotcross{};
    bool dotcross_all = false;
};

// Verification of the emulator definition plus the dot-cross conditions; when
// all eight hold, one composition direction must imply the other, and that
// implication is checked.
template <Field F>
ELinkReport<F> elinkage_verify(const ELinkagePair<F>& pair, const Space<F>& vw,
                               const Space<F>& vp) {
    const IndexSet& w = pair.w();
    const IndexSet& p = pair.p();
    IndexSet wd = w.dotted(), pd = p.dotted();
    if (!unite(w, wd).subset_of(vw.index()) || !unite(p, pd).subset_of(vp.index()))
        throw IndexMismatch("spaces do not carry the linkage blocks");

    ELinkReport<F> rep;
    rep.dotcross[0] = vw.restrict_to(w).subspace_of(pair.v1().restrict_to(w));
    rep.dotcross[1] = pair.v1().contract_to(w).subspace_of(vw.contract_to(w));
    rep.dotcross[2] = vw.restrict_to(wd).subspace_of(pair.v2().restrict_to(wd));
    rep.dotcross[3] = pair.v2().contract_to(wd).subspace_of(vw.contract_to(wd));
    rep.dotcross[4] = vp.restrict_to(p).subspace_of(pair.v1().restrict_to(p));
    rep.dotcross[5] = pair.v1().contract_to(p).subspace_of(vp.contract_to(p));
    rep.dotcross[6] = vp.restrict_to(pd).subspace_of(pair.v2().restrict_to(pd));
    rep.dotcross[7] = pair.v2().contract_to(pd).subspace_of(vp.contract_to(pd));
    rep.dotcross_all = true;
    for (bool b : rep.dotcross) rep.dotcross_all = rep.dotcross_all && b;

    rep.forward = pair.sum().compose(vw, ComposeMode::matched, true) == vp;
    rep.backward = pair.sum().compose(vp, ComposeMode::matched, true) == vw;
    if (rep.dotcross_all && rep.forward != rep.backward)
        throw InternalCheck("dot-cross conditions hold but only one direction composes");
    rep.linked = rep.forward && rep.backward;
    return rep;
}

template <Field F>
ELinkReport<F> elinkage_verify(const ELinkagePair<F>& pair, const Genaut<F>& vw,
                               const Genaut<F>& vp) {
    return elinkage_verify(pair, vw.space(), vp.space());
}
template <Field F>
ELinkReport<F> elinkage_verify(const ELinkagePair<F>& pair, const Gds<F>& vw, const Gds<F>& vp) {
    if (vw.m() != vp.m()) throw IndexMismatch("manifest variables must agree");
    return elinkage_verify(pair, vw.space(), vp.space());
}

// Apply the linkage: (V¹ ⊕ V²) ↔ V. Manifest variables ride along.
template <Field F>
Genaut<F> linkage_apply(const ELinkagePair<F>& pair, const Genaut<F>& v) {
    return Genaut<F>(pair.sum().compose(v.space(), ComposeMode::matched, true),
                     v.w() == pair.w() ? pair.p() : pair.w());
}
template <Field F>
Gds<F> linkage_apply(const ELinkagePair<F>& pair, const Gds<F>& v) {
    IndexSet other = v.w() == pair.w() ? pair.p() : pair.w();
    std::optional<std::pair<IndexSet, IndexSet>> io;
    if (v.has_io()) io = std::make_pair(v.mu(), v.my());
    return Gds<F>(pair.sum().compose(v.space(), ComposeMode::matched, true), other, v.m(), io);
}

// Transitivity: pairs linking W to P and W to Q compose to a P-to-Q pair.
template <Field F>
ELinkagePair<F> linkage_compose(const ELinkagePair<F>& wp, const ELinkagePair<F>& wq) {
    if (wp.w() != wq.w()) throw IndexMismatch("pairs must share the W block");
    if (!wp.p().disjoint_from(wq.p())) throw IndexMismatch("target blocks must be disjoint");
    return ELinkagePair<F>(wp.v1().compose(wq.v1()), wp.v2().compose(wq.v2()), wp.p(), wq.p());
}

template <Field F>
struct AdjointLinkage {
    ELinkagePair<F> pair;
    Gds<F> vw;
    Gds<F> vp;
};

// Adjoint of an E-linked triple: the new pair is the perp pair with the
// blocks swapped between the plain and dotted sides.
template <Field F>
AdjointLinkage<F> linkage_adjoint(const ELinkagePair<F>& pair, const Gds<F>& vw,
                                  const Gds<F>& vp) {
    if (!elinkage_verify(pair, vw, vp).linked) throw NotLinked("the pair does not link the spaces");
    // (V²)^⊥ with one block negated (either one gives the same space), read
    // back on the plain side; dually for (V¹)^⊥ on the dotted side.
    Space<F> nv1 = pair.v2().perp().renamed([](const Label& l) { return l.undot(); }).sign_flipped(
        pair.w());
    Space<F> nv2 = pair.v1().perp().renamed([](const Label& l) { return l.dot(); }).sign_flipped(
        pair.w().dotted());
    AdjointLinkage<F> out{ELinkagePair<F>(std::move(nv1), std::move(nv2), pair.w(), pair.p()),
                          adjoint(vw), adjoint(vp)};
    if (!elinkage_verify(out.pair, out.vw, out.vp).linked)
        throw InternalCheck("adjoint pair fails to link the adjoint systems");
    return out;
}

template <Field F>
struct PolyTransferReport {
    bool linked = false;
    Genaut<F> pvw;
    Genaut<F> pvp;
};

// Polynomials of linked genauts remain linked when the polynomial has no
// constant term, or when the four restriction/contraction equalities hold on
// both sides.
template <Field F>
PolyTransferReport<F> poly_transfer(const ELinkagePair<F>& pair, const Genaut<F>& vw,
                                    const Genaut<F>& vp, const Poly<F>& p) {
    bool no_constant = p.coeff(0).is_zero();
    auto equalities = [](const Genaut<F>& v) {
        return v.dom() == detail::as_w_copy(v.codom()) && v.ker() == detail::as_w_copy(v.img0());
    };
    if (!no_constant && !(equalities(vw) && equalities(vp)))
        throw TransferConditionsFail(
            "polynomial has a constant term and the equality conditions fail");
    PolyTransferReport<F> rep;
    rep.pvw = poly_eval(p, vw);
    rep.pvp = poly_eval(p, vp);
    rep.linked = elinkage_verify(pair, rep.pvw, rep.pvp).linked;
    if (!rep.linked) throw InternalCheck("polynomial transfer failed under valid conditions");
    if (classify(rep.pvw).decoupled != classify(rep.pvp).decoupled)
        throw InternalCheck("decoupledness did not transfer across the linkage");
    return rep;
}

// Invariant subspaces transfer through V¹ (and through the undotted copy of
// V², which agrees under the linked hypotheses).
template <Field F>
Space<F> invariant_transfer(const ELinkagePair<F>& pair, const Genaut<F>& vw, const Genaut<F>& vp,
                            const Space<F>& sub, InvarianceKind kind) {
    bool from_w = sub.index() == pair.w();
    const Genaut<F>& src = from_w ? vw : vp;
    const Genaut<F>& dst = from_w ? vp : vw;
    if (!invariance_check(sub, src, kind))
        throw TransferConditionsFail("subspace is not invariant on its side");
    Space<F> image = pair.v1().compose(sub, ComposeMode::matched, true);
    if (!invariance_check(image, dst, kind))
        throw InternalCheck("transferred subspace lost invariance");
    return image;
}

// Feedback computed on the emulator equals feedback computed directly,
// under the cross-side condition of the transfer theorem.
template <Field F>
Space<F> feedback_transfer(const ELinkagePair<F>& pair, const Gds<F>& source_w,
                           const Space<F>& law_w) {
    IndexSet wdm = unite(unite(source_w.w(), source_w.wdot()), source_w.mu());
    Space<F> cond = source_w.space().restrict_to(wdm).contract_to(source_w.w());
    if (!pair.v1().contract_to(pair.w()).subspace_of(cond))
        throw TransferConditionsFail("feedback transfer side condition fails");
    Space<F> law_p = law_w.compose(pair.v1());
    Gds<F> source_p = linkage_apply(pair, source_w);
    Genaut<F> closed_w = feedback_apply(source_w, law_w);
    Genaut<F> closed_p = feedback_apply(source_p, law_p);
    if (linkage_apply(pair, closed_w) != closed_p)
        throw InternalCheck("feedback transfer square does not commute");
    return law_p;
}

template <Field F>
Space<F> injection_transfer(const ELinkagePair<F>& pair, const Gds<F>& source_w,
                            const Space<F>& law_w) {
    IndexSet wdm = unite(unite(source_w.w(), source_w.wdot()), source_w.my());
    Space<F> cond = source_w.space().contract_to(wdm).restrict_to(source_w.wdot());
    if (!cond.subspace_of(pair.v2().restrict_to(pair.w().dotted())))
        throw TransferConditionsFail("injection transfer side condition fails");
    Space<F> law_p = law_w.compose(pair.v2());
    Gds<F> source_p = linkage_apply(pair, source_w);
    Genaut<F> closed_w = injection_apply(source_w, law_w);
    Genaut<F> closed_p = injection_apply(source_p, law_p);
    if (linkage_apply(pair, closed_w) != closed_p)
        throw InternalCheck("injection transfer square does not commute");
    return law_p;
}

// --- topological RLC emulator ------------------------------------------------

struct FlatEmulator {
    IndexSet p;   // state order
    IndexSet mu;  // input order
    IndexSet my;  // output order
    Mat<Rat> a, b, c, d;
};

// The emulator kept implicitly: the multiport component spaces and the
// composition order. Evaluation is memoized; the flat view is a cache.
struct ImplicitEmulator {
    std::vector<Space<Rat>> factors;

    const Space<Rat>& evaluate() const {
        if (!cache_) {
            Space<Rat> acc = factors.front();
            for (std::size_t i = 1; i < factors.size(); ++i)
                acc = acc.compose(factors[i], ComposeMode::matched, true);
            cache_ = std::move(acc);
        }
        return *cache_;
    }

  private:
    mutable std::optional<Space<Rat>> cache_;
};

struct RlcEmulator {
    Gds<Rat> original;
    ELinkagePair<Rat> pair;
    ImplicitEmulator implicit;
    Gds<Rat> emulator;
    FlatEmulator flat;
    Space<Rat> zero_modes;  // W-vectors with vanishing derivative, topological
    std::size_t cap_ports = 0;
    std::size_t ind_ports = 0;
    bool no_zero_eigenvalue = false;
};

namespace detail {

// Extracts M from the graph space {(x, Mx)} over the `input` block; the
// remaining block is read off through pivot lifts.
inline Mat<Rat> graph_matrix(const Space<Rat>& sp, const IndexSet& input, const IndexSet& output) {
    if (sp.rank() != input.size() || sp.restrict_to(input) != Space<Rat>::full(input) ||
        sp.contract_to(output).rank() != 0)
        throw SingularStatic("space is not the graph of a map");
    Mat<Rat> m(output.size(), input.size());
    for (std::size_t j = 0; j < input.size(); ++j) {
        auto [ok, x] = sp.lift(Vec<Rat>::unit(input, input.at(j)));
        if (!ok) throw SingularStatic("graph extraction failed");
        for (std::size_t i = 0; i < output.size(); ++i) m.at(i, j) = x.at(output.at(i));
    }
    return m;
}

inline IndexSet vars_of(const IndexSet& edges, bool voltage, bool dotted) {
    std::vector<Label> ls;
    for (const Label& e : edges) {
        Label l = voltage ? Network::v_of(e) : Network::i_of(e);
        ls.push_back(dotted ? l.dot() : l);
    }
    return IndexSet(std::move(ls));
}

}  // namespace detail

// Builds the multiport-decomposition emulator of an RLC(EJ) network along
// with the E-linkage pair that ties it to the network's own GDS.
inline RlcEmulator build_rlc_emulator(const Network& net) {
    check_well_posed(net);
    const DirectedGraph& g = net.graph();
    IndexSet ec = net.edges_of(DeviceKind::capacitor);
    IndexSet el = net.edges_of(DeviceKind::inductor);
    IndexSet rest = minus(g.edge_labels(), ec);

    // Two-stage minimal decomposition: capacitors first, inductors second.
    MultiportDecomposition dc = multiport_decompose(g, ec, rest, "pc", "qc");
    IndexSet rest2 = minus(dc.g2.edge_labels(), el);
    MultiportDecomposition dl = multiport_decompose(dc.g2, el, rest2, "pl", "ql");

    RlcEmulator out;
    out.original = build_gds(net);
    out.cap_ports = dc.port_count;
    out.ind_ports = dl.port_count;
    // Dimension formula on the original graph; the second-stage count
    // coincides because the first decomposition preserves the inductors'
    // interaction rank.
    {
        auto rank_diff = [&](const IndexSet& e1) {
            IndexSet e2c = minus(g.edge_labels(), e1);
            return graph_rank(subgraph(g, e1)) -
                   (graph_rank(g) - graph_rank(subgraph(g, e2c)));
        };
        if (out.cap_ports + out.ind_ports != rank_diff(ec) + rank_diff(el))
            throw InternalCheck("emulator dimension disagrees with the rank formula");
    }

    // Capacitor-side coupling: KVL on the dotted voltages, KCL on currents,
    // i_C = C vdot_C; then the port relation and the Ẇ linkage component.
    auto kc = kirchhoff_spaces<Rat>(dc.g1);
    IndexSet cap_edges = dc.g1.edge_labels();
    Space<Rat> cap_all = [&] {
        IndexSet vars = unite(detail::vars_of(cap_edges, true, true),
                              detail::vars_of(cap_edges, false, false));
        Mat<Rat> rows(0, vars.size());
        detail::append_space_constraints(rows, vars, kc.voltage,
                                         [](const Label& l) { return Network::v_of(l).dot(); });
        detail::append_space_constraints(rows, vars, kc.current,
                                         [](const Label& l) { return Network::i_of(l); });
        detail::append_coupling_rows(rows, vars, ec, net.group_matrix(DeviceKind::capacitor), true);
        return Space<Rat>::from_constraints(vars, rows);
    }();
    IndexSet pc_i = detail::vars_of(dc.p1, false, false);
    IndexSet pc_vd = detail::vars_of(dc.p1, true, true);
    Space<Rat> cap_port_relation = cap_all.restrict_to(unite(pc_i, pc_vd));
    if (!ec.empty() && dc.port_count > 0) {
        Mat<Rat> m = detail::graph_matrix(cap_port_relation, pc_vd, pc_i);
        Mat<Rat> neg(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) neg.at(i, j) = -m.at(i, j);
        if (!symmetric_positive_definite(neg))
            throw InternalCheck("port capacitance matrix is not symmetric positive definite");
    }
    Space<Rat> v2_cap =
        cap_all.restrict_to(unite(detail::vars_of(ec, true, true), pc_vd));

    // Inductor side, dual roles of v and i.
    auto kl = kirchhoff_spaces<Rat>(dl.g1);
    IndexSet ind_edges = dl.g1.edge_labels();
    Space<Rat> ind_all = [&] {
        IndexSet vars = unite(detail::vars_of(ind_edges, false, true),
                              detail::vars_of(ind_edges, true, false));
        Mat<Rat> rows(0, vars.size());
        detail::append_space_constraints(rows, vars, kl.current,
                                         [](const Label& l) { return Network::i_of(l).dot(); });
        detail::append_space_constraints(rows, vars, kl.voltage,
                                         [](const Label& l) { return Network::v_of(l); });
        detail::append_coupling_rows(rows, vars, el, net.group_matrix(DeviceKind::inductor), false);
        return Space<Rat>::from_constraints(vars, rows);
    }();
    IndexSet pl_v = detail::vars_of(dl.p1, true, false);
    IndexSet pl_id = detail::vars_of(dl.p1, false, true);
    Space<Rat> ind_port_relation = ind_all.restrict_to(unite(pl_v, pl_id));
    if (!el.empty() && dl.port_count > 0) {
        Mat<Rat> m = detail::graph_matrix(ind_port_relation, pl_id, pl_v);
        Mat<Rat> neg(m.rows(), m.cols());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) neg.at(i, j) = -m.at(i, j);
        if (!symmetric_positive_definite(neg))
            throw InternalCheck("port inductance matrix is not symmetric positive definite");
    }
    Space<Rat> v2_ind =
        ind_all.restrict_to(unite(detail::vars_of(el, false, true), pl_id));

    // Static multiport with its devices; ports and sources free.
    IndexSet mu = net.mu_labels();
    IndexSet my = net.my_labels();
    const DirectedGraph& gs = dl.g2;
    Space<Rat> vstat = [&] {
        IndexSet stat_edges = gs.edge_labels();
        IndexSet vars = unite(detail::vars_of(stat_edges, true, false),
                              detail::vars_of(stat_edges, false, false));
        Mat<Rat> rows(0, vars.size());
        auto ksx = kirchhoff_spaces<Rat>(gs);
        detail::append_space_constraints(rows, vars, ksx.voltage,
                                         [](const Label& l) { return Network::v_of(l); });
        detail::append_space_constraints(rows, vars, ksx.current,
                                         [](const Label& l) { return Network::i_of(l); });
        for (const auto& [e, d] : net.devices()) {
            if (!gs.has_edge(e)) continue;
            std::vector<Rat> row(vars.size(), Rat(0));
            switch (d.kind) {
                case DeviceKind::resistor:
                    row[vars.pos(Network::v_of(e))] = Rat(1);
                    row[vars.pos(Network::i_of(e))] = -d.value;
                    rows.append_row(row);
                    break;
                case DeviceKind::isensor:
                    row[vars.pos(Network::v_of(e))] = Rat(1);
                    rows.append_row(row);
                    break;
                case DeviceKind::vsensor:
                    row[vars.pos(Network::i_of(e))] = Rat(1);
                    rows.append_row(row);
                    break;
                default:
                    break;
            }
        }
        Space<Rat> sol = Space<Rat>::from_constraints(vars, rows);
        IndexSet keep = unite(unite(detail::vars_of(dc.p2, true, false),
                                    detail::vars_of(dc.p2, false, false)),
                              unite(detail::vars_of(dl.p2, true, false),
                                    detail::vars_of(dl.p2, false, false)));
        keep = unite(keep, unite(mu, my));
        return sol.restrict_to(keep);
    }();
    // Static well-posedness: the hybrid solve must be the graph of a map.
    {
        IndexSet ins = unite(unite(detail::vars_of(dc.p2, true, false),
                                   detail::vars_of(dl.p2, false, false)),
                             mu);
        IndexSet outs = unite(unite(detail::vars_of(dc.p2, false, false),
                                    detail::vars_of(dl.p2, true, false)),
                              my);
        if (vstat.rank() != ins.size() || vstat.restrict_to(ins) != Space<Rat>::full(ins) ||
            vstat.contract_to(outs).rank() != 0)
            throw SingularStatic("static multiport has no unique hybrid solution");
    }

    // Connector spaces and the implicit composition.
    auto kcc = kirchhoff_spaces<Rat>(dc.connector);
    auto kcl = kirchhoff_spaces<Rat>(dl.connector);
    auto rename_v = [](const Label& l) { return Network::v_of(l); };
    auto rename_i = [](const Label& l) { return Network::i_of(l); };
    out.implicit.factors = {
        direct_sum(cap_port_relation, ind_port_relation),
        direct_sum(direct_sum(kcc.voltage.renamed(rename_v), kcc.current.renamed(rename_i)),
                   direct_sum(kcl.voltage.renamed(rename_v), kcl.current.renamed(rename_i))),
        vstat};
    Space<Rat> emu_space = out.implicit.evaluate();

    IndexSet p_state = unite(detail::vars_of(dc.p1, true, false),
                             detail::vars_of(dl.p1, false, false));
    out.emulator = Gds<Rat>(emu_space, p_state, unite(mu, my), std::make_pair(mu, my));

    // The linkage pair: topology on the plain side, the coupled derivative
    // relations on the dotted side.
    Space<Rat> v1 = direct_sum(kc.voltage.renamed(rename_v), kl.current.renamed(rename_i));
    Space<Rat> v2 = direct_sum(v2_cap, v2_ind);
    out.pair = ELinkagePair<Rat>(std::move(v1), std::move(v2), out.original.w(), p_state);
    if (!elinkage_verify(out.pair, out.original, out.emulator).linked)
        throw InternalCheck("emulator pair does not link the network to the emulator");

    // Flattened state-form view.
    {
        IndexSet pd = p_state.dotted();
        if (!p_state.empty()) {
            IndexSet ins = unite(p_state, mu);
            IndexSet outs = unite(pd, my);
            if (emu_space.rank() != ins.size() ||
                emu_space.restrict_to(ins) != Space<Rat>::full(ins) ||
                emu_space.contract_to(outs).rank() != 0)
                throw SingularStatic("emulator is not in state form");
            out.flat.p = p_state;
            out.flat.mu = mu;
            out.flat.my = my;
            out.flat.a = Mat<Rat>(p_state.size(), p_state.size());
            out.flat.b = Mat<Rat>(p_state.size(), mu.size());
            out.flat.c = Mat<Rat>(my.size(), p_state.size());
            out.flat.d = Mat<Rat>(my.size(), mu.size());
            // Lift unit vectors of the whole input block so the remaining
            // inputs are pinned to zero.
            for (std::size_t j = 0; j < ins.size(); ++j) {
                auto [ok, x] = emu_space.lift(Vec<Rat>::unit(ins, ins.at(j)));
                if (!ok) throw SingularStatic("flat extraction failed");
                const Label& in = ins.at(j);
                bool is_state = p_state.contains(in);
                std::size_t col = is_state ? p_state.pos(in) : mu.pos(in);
                for (std::size_t i = 0; i < p_state.size(); ++i) {
                    Rat val = x.at(p_state.at(i).dot());
                    (is_state ? out.flat.a : out.flat.b).at(i, col) = val;
                }
                for (std::size_t i = 0; i < my.size(); ++i) {
                    Rat val = x.at(my.at(i));
                    (is_state ? out.flat.c : out.flat.d).at(i, col) = val;
                }
            }
        } else {
            out.flat.p = p_state;
            out.flat.mu = mu;
            out.flat.my = my;
        }
    }

    // Topological zero modes of the original: capacitor voltages with all
    // other branches shorted, inductor currents with all others opened.
    {
        Space<Rat> vc_part = ec.empty()
                                 ? Space<Rat>::zero(IndexSet{})
                                 : kirchhoff_spaces<Rat>(
                                       graph_minor(g, rest, MinorMode::contraction))
                                       .voltage.renamed(rename_v);
        Space<Rat> il_part = el.empty() ? Space<Rat>::zero(IndexSet{})
                                        : kirchhoff_spaces<Rat>(subgraph(g, el))
                                              .current.renamed(rename_i);
        out.zero_modes = vc_part + il_part;
    }

    // Genericity flag: the autonomous emulator genaut has no zero modes.
    if (!p_state.empty()) {
        Genaut<Rat> auton = out.emulator.autonomous();
        out.no_zero_eigenvalue = auton.ker().rank() == 0;
    } else {
        out.no_zero_eigenvalue = true;
    }
    return out;
}

}  // namespace ila
