#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genop.hpp"
#include "graph.hpp"

namespace ila {

enum class DeviceKind { resistor, capacitor, inductor, vsource, isource, vsensor, isensor };

inline char device_letter(DeviceKind k) {
    switch (k) {
        case DeviceKind::resistor: return 'R';
        case DeviceKind::capacitor: return 'C';
        case DeviceKind::inductor: return 'L';
        case DeviceKind::vsource: return 'E';
        case DeviceKind::isource: return 'J';
        case DeviceKind::vsensor: return 'Y';  // YV
        default: return 'Y';                   // YI
    }
}

struct Device {
    DeviceKind kind;
    Rat value;  // positive for R, C, L; unused otherwise
};

// An electrical network: a directed graph with exactly one device per edge.
// Sensor edges carry the zero constraints (v = 0 for current sensors, i = 0
// for voltage sensors); sources contribute manifest variables.
class Network {
  public:
    void add(DeviceKind kind, const std::string& name, const std::string& node_pos,
             const std::string& node_neg, const Rat& value = Rat(0)) {
        Label l(name);
        if (devices_.count(l)) throw DuplicateDevice("duplicate device: " + name);
        graph_.add_edge(l, node_pos, node_neg);
        devices_.emplace(l, Device{kind, value});
    }

    const DirectedGraph& graph() const { return graph_; }
    const std::map<Label, Device>& devices() const { return devices_; }

    IndexSet edges_of(DeviceKind k) const {
        std::vector<Label> ls;
        for (const auto& [l, d] : devices_)
            if (d.kind == k) ls.push_back(l);
        return IndexSet(std::move(ls));
    }

    // Optional coupling matrices over the capacitor/inductor edges in
    // canonical order; defaults to diag(values).
    void set_group_matrix(DeviceKind k, Mat<Rat> m) {
        if (k == DeviceKind::capacitor)
            c_matrix_ = std::move(m);
        else if (k == DeviceKind::inductor)
            l_matrix_ = std::move(m);
        else
            throw Error("group matrices exist only for C and L");
    }
    Mat<Rat> group_matrix(DeviceKind k) const {
        const auto& store = (k == DeviceKind::capacitor) ? c_matrix_ : l_matrix_;
        IndexSet es = edges_of(k);
        if (store) {
            if (store->rows() != es.size() || store->cols() != es.size())
                throw IllPosedNetwork("group matrix size mismatch");
            return *store;
        }
        Mat<Rat> m(es.size(), es.size());
        for (std::size_t i = 0; i < es.size(); ++i) m.at(i, i) = devices_.at(es.at(i)).value;
        return m;
    }

    // Variable labels.
    static Label v_of(const Label& edge) { return Label("v:" + edge.str()); }
    static Label i_of(const Label& edge) { return Label("i:" + edge.str()); }

    IndexSet w_labels() const {
        std::vector<Label> ls;
        for (const Label& e : edges_of(DeviceKind::capacitor)) ls.push_back(v_of(e));
        for (const Label& e : edges_of(DeviceKind::inductor)) ls.push_back(i_of(e));
        return IndexSet(std::move(ls));
    }
    IndexSet mu_labels() const {
        std::vector<Label> ls;
        for (const Label& e : edges_of(DeviceKind::vsource)) ls.push_back(v_of(e));
        for (const Label& e : edges_of(DeviceKind::isource)) ls.push_back(i_of(e));
        return IndexSet(std::move(ls));
    }
    IndexSet my_labels() const {
        std::vector<Label> ls;
        for (const Label& e : edges_of(DeviceKind::isensor)) ls.push_back(i_of(e));
        for (const Label& e : edges_of(DeviceKind::vsensor)) ls.push_back(v_of(e));
        return IndexSet(std::move(ls));
    }

  private:
    DirectedGraph graph_;
    std::map<Label, Device> devices_;
    std::optional<Mat<Rat>> c_matrix_;
    std::optional<Mat<Rat>> l_matrix_;
};

// Symmetric positive definite check by leading principal minors, exact.
inline bool symmetric_positive_definite(const Mat<Rat>& m) {
    std::size_t n = m.rows();
    if (m.cols() != n) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (m.at(i, j) != m.at(j, i)) return false;
    // Gaussian elimination tracking pivots of the leading minors.
    Mat<Rat> a = m;
    for (std::size_t k = 0; k < n; ++k) {
        if (!(Rat(0) < a.at(k, k))) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            Rat f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(k, j);
        }
    }
    return true;
}

// Source/sensor placement sanity: no loops of voltage sources and current
// sensors, no cutsets of current sources and voltage sensors.
inline void check_well_posed(const Network& net) {
    IndexSet shorts = unite(net.edges_of(DeviceKind::vsource), net.edges_of(DeviceKind::isensor));
    if (!circuit_free(net.graph(), shorts))
        throw IllPosedNetwork("voltage sources and current sensors form a loop");
    IndexSet opens = unite(net.edges_of(DeviceKind::isource), net.edges_of(DeviceKind::vsensor));
    if (!cutset_free(net.graph(), opens))
        throw IllPosedNetwork("current sources and voltage sensors form a cutset");
    if (!symmetric_positive_definite(net.group_matrix(DeviceKind::capacitor)) &&
        !net.edges_of(DeviceKind::capacitor).empty())
        throw IllPosedNetwork("capacitor matrix is not symmetric positive definite");
    if (!symmetric_positive_definite(net.group_matrix(DeviceKind::inductor)) &&
        !net.edges_of(DeviceKind::inductor).empty())
        throw IllPosedNetwork("inductor matrix is not symmetric positive definite");
}

namespace detail {

// Constraint rows tying i_C = C v̇_C (or v_L = L i̇_L) over the given edges.
inline void append_coupling_rows(Mat<Rat>& rows, const IndexSet& all, const IndexSet& es,
                                 const Mat<Rat>& coupling, bool capacitor) {
    for (std::size_t r = 0; r < es.size(); ++r) {
        std::vector<Rat> row(all.size(), Rat(0));
        const Label& e = es.at(r);
        Label primary = capacitor ? Network::i_of(e) : Network::v_of(e);
        row[all.pos(primary)] = Rat(1);
        for (std::size_t c = 0; c < es.size(); ++c) {
            Label dotted = capacitor ? Network::v_of(es.at(c)).dot() : Network::i_of(es.at(c)).dot();
            row[all.pos(dotted)] = row[all.pos(dotted)] - coupling.at(r, c);
        }
        rows.append_row(row);
    }
}

inline void append_space_constraints(Mat<Rat>& rows, const IndexSet& all, const Space<Rat>& sp,
                                     const std::function<Label(const Label&)>& to_var) {
    Space<Rat> cons = sp.perp();
    for (std::size_t r = 0; r < cons.rank(); ++r) {
        std::vector<Rat> row(all.size(), Rat(0));
        for (std::size_t c = 0; c < cons.index().size(); ++c)
            row[all.pos(to_var(cons.index().at(c)))] = cons.basis().at(r, c);
        rows.append_row(row);
    }
}

}  // namespace detail

// The GDS of a network: Kirchhoff constraints on v and i, the derivative
// copies of the capacitor-voltage / inductor-current topologies, and the
// device characteristics, projected to (W, Ẇ, Mu, My).
inline Gds<Rat> build_gds(const Network& net) {
    const DirectedGraph& g = net.graph();
    IndexSet ec = net.edges_of(DeviceKind::capacitor);
    IndexSet el = net.edges_of(DeviceKind::inductor);

    std::vector<Label> vars;
    for (const auto& e : g.edges()) {
        vars.push_back(Network::v_of(e.label));
        vars.push_back(Network::i_of(e.label));
    }
    for (const Label& e : ec) vars.push_back(Network::v_of(e).dot());
    for (const Label& e : el) vars.push_back(Network::i_of(e).dot());
    IndexSet all(std::move(vars));

    Mat<Rat> rows(0, all.size());
    auto ks = kirchhoff_spaces<Rat>(g);
    detail::append_space_constraints(rows, all, ks.voltage,
                                     [](const Label& l) { return Network::v_of(l); });
    detail::append_space_constraints(rows, all, ks.current,
                                     [](const Label& l) { return Network::i_of(l); });
    // Derivative topologies: v̇_C in V^v(G∘E_C), i̇_L in V^i(G×E_L).
    if (!ec.empty()) {
        auto sub = kirchhoff_spaces<Rat>(subgraph(g, ec));
        detail::append_space_constraints(rows, all, sub.voltage,
                                         [](const Label& l) { return Network::v_of(l).dot(); });
    }
    if (!el.empty()) {
        auto sub = kirchhoff_spaces<Rat>(graph_minor(g, minus(g.edge_labels(), el),
                                                     MinorMode::contraction));
        detail::append_space_constraints(rows, all, sub.current,
                                         [](const Label& l) { return Network::i_of(l).dot(); });
    }
    // Device characteristics.
    detail::append_coupling_rows(rows, all, ec, net.group_matrix(DeviceKind::capacitor), true);
    detail::append_coupling_rows(rows, all, el, net.group_matrix(DeviceKind::inductor), false);
    for (const auto& [e, d] : net.devices()) {
        std::vector<Rat> row(all.size(), Rat(0));
        switch (d.kind) {
            case DeviceKind::resistor:
                row[all.pos(Network::v_of(e))] = Rat(1);
                row[all.pos(Network::i_of(e))] = -d.value;
                rows.append_row(row);
                break;
            case DeviceKind::isensor:
                row[all.pos(Network::v_of(e))] = Rat(1);
                rows.append_row(row);
                break;
            case DeviceKind::vsensor:
                row[all.pos(Network::i_of(e))] = Rat(1);
                rows.append_row(row);
                break;
            default:
                break;  // C/L handled above; sources free
        }
    }
    Space<Rat> sol = Space<Rat>::from_constraints(all, rows);
    IndexSet w = net.w_labels();
    IndexSet mu = net.mu_labels();
    IndexSet my = net.my_labels();
    IndexSet keep = unite(unite(w, w.dotted()), unite(mu, my));
    return Gds<Rat>(sol.restrict_to(keep), w, unite(mu, my), std::make_pair(mu, my));
}

}  // namespace ila
