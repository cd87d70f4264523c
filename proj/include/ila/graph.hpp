#pragma once

#include <algorithm>
#include <map>
#include <unordered_map>
#include <numeric>

#include <sstream>
#include <string>
#include <vector>

#include "space.hpp"

namespace ila {

struct GraphEdge {
    Label label;
    std::size_t tail = 0;
    std::size_t head = 0;
};

// Labeled directed multigraph; parallel edges and self-loops permitted.
// Edges are reported in canonical label order, which fixes every traversal;
// insertion appends and the order is restored lazily. Minor constructions
// share the vertex table of their parent and compact it afterwards, so the
// decomposition pipeline never re-hashes vertex names.
class DirectedGraph {
  public:
    std::size_t add_vertex(const std::string& id) {
        ensure_vindex();
        auto it = vindex_.find(id);
        if (it != vindex_.end()) return it->second;
        std::size_t n = vids_.size();
        vids_.push_back(id);
        vindex_.emplace(id, n);
        return n;
    }
    void add_edge(const Label& label, const std::string& tail, const std::string& head) {
        add_edge_at(label, add_vertex(tail), add_vertex(head));
    }
    // Endpoints given as indices into the vertex table.
    void add_edge_at(const Label& label, std::size_t tail, std::size_t head) {
        if (tail >= vids_.size() || head >= vids_.size())
            throw UnknownEdge("edge endpoint out of range");
        edges_.push_back(GraphEdge{label, tail, head});
        if (edges_.size() > 1 && !(edges_[edges_.size() - 2].label < label)) sorted_ = false;
    }

    const std::vector<GraphEdge>& edges() const {
        ensure_sorted();
        return edges_;
    }
    std::size_t vertex_count() const { return vids_.size(); }
    const std::vector<std::string>& vertex_ids() const { return vids_; }

    bool has_edge(const Label& l) const { return find_edge(l) != edges_.size(); }
    const GraphEdge& edge(const Label& l) const {
        std::size_t i = find_edge(l);
        if (i == edges_.size()) throw UnknownEdge("unknown edge: " + l.str());
        return edges_[i];
    }

    IndexSet edge_labels() const {
        ensure_sorted();
        std::vector<Label> ls;
        ls.reserve(edges_.size());
        for (const auto& e : edges_) ls.push_back(e.label);
        return IndexSet(std::move(ls));
    }

    // A fresh graph borrowing this graph's vertex table.
    DirectedGraph sharing_vertices() const {
        DirectedGraph out;
        out.vids_ = vids_;
        return out;
    }
    // Drop vertices not incident to any edge and renumber in first-touch
    // order along the canonical edge order.
    void compact() {
        ensure_sorted();
        constexpr std::size_t none = static_cast<std::size_t>(-1);
        std::vector<std::size_t> remap(vids_.size(), none);
        std::vector<std::string> kept;
        for (auto& e : edges_) {
            for (std::size_t* v : {&e.tail, &e.head}) {
                if (remap[*v] == none) {
                    remap[*v] = kept.size();
                    kept.push_back(vids_[*v]);
                }
                *v = remap[*v];
            }
        }
        vids_ = std::move(kept);
        vindex_.clear();
        vindex_built_ = false;
    }

    // Fixture format: one edge per line, "label tail head"; '#' comments.
    static DirectedGraph parse(const std::string& text) {
        DirectedGraph g;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line.resize(hash);
            std::istringstream ls(line);
            std::string label, tail, head;
            if (!(ls >> label)) continue;
            if (!(ls >> tail >> head)) throw UnknownEdge("bad graph line: " + line);
            g.add_edge(Label::parse(label), tail, head);
        }
        g.ensure_sorted();
        return g;
    }
    std::string serialize() const {
        ensure_sorted();
        std::string out;
        for (const auto& e : edges_)
            out += e.label.str() + " " + vids_[e.tail] + " " + vids_[e.head] + "\n";
        return out;
    }

  private:
    // Deferred canonical ordering; runs on the first query after a batch of
    // out-of-order insertions, i.e. while the graph is still being built.
    // Once queried, the graph is immutable in practice and safe to share.
    void ensure_sorted() const {
        if (sorted_) return;
        std::sort(edges_.begin(), edges_.end(),
                  [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
        for (std::size_t i = 1; i < edges_.size(); ++i)
            if (edges_[i - 1].label == edges_[i].label)
                throw UnknownEdge("duplicate edge label: " + edges_[i].label.str());
        sorted_ = true;
    }
    void ensure_vindex() {
        if (vindex_built_) return;
        vindex_.reserve(vids_.size());
        for (std::size_t i = 0; i < vids_.size(); ++i) vindex_.emplace(vids_[i], i);
        vindex_built_ = true;
    }
    std::size_t find_edge(const Label& l) const {
        ensure_sorted();
        GraphEdge probe{l, 0, 0};
        auto it = std::lower_bound(
            edges_.begin(), edges_.end(), probe,
            [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
        if (it == edges_.end() || it->label != l) return edges_.size();
        return static_cast<std::size_t>(it - edges_.begin());
    }

    std::vector<std::string> vids_;
    std::unordered_map<std::string, std::size_t> vindex_;
    bool vindex_built_ = true;  // an empty table is trivially built
    mutable std::vector<GraphEdge> edges_;
    mutable bool sorted_ = true;
};

namespace detail {

struct UnionFind {
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    // Returns false when the two were already connected.
    bool unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
    std::vector<std::size_t> parent;
};

// Visits every edge in canonical order with a membership flag for the
// sorted label set t; a single merge pass instead of per-edge searches.
template <class Fn>
void scan_membership(const std::vector<GraphEdge>& edges, const IndexSet& t, Fn&& fn) {
    auto it = t.begin();
    for (const auto& e : edges) {
        while (it != t.end() && *it < e.label) ++it;
        fn(e, it != t.end() && *it == e.label);
    }
}

}  // namespace detail

enum class MinorMode { deletion, contraction };

// G∘(E−T) or G×(E−T): remove the edges T; deletion drops isolated vertices,
// contraction fuses the endpoints of the removed edges.
inline DirectedGraph graph_minor(const DirectedGraph& g, const IndexSet& t, MinorMode mode) {
    std::size_t seen = 0;
    DirectedGraph out = g.sharing_vertices();
    if (mode == MinorMode::deletion) {
        detail::scan_membership(g.edges(), t, [&](const GraphEdge& e, bool in_t) {
            if (in_t)
                ++seen;
            else
                out.add_edge_at(e.label, e.tail, e.head);
        });
        if (seen != t.size()) throw UnknownEdge("unknown edge in minor set");
        out.compact();
        return out;
    }
    detail::UnionFind uf(g.vertex_count());
    detail::scan_membership(g.edges(), t, [&](const GraphEdge& e, bool in_t) {
        if (in_t) {
            ++seen;
            uf.unite(e.tail, e.head);
        }
    });
    if (seen != t.size()) throw UnknownEdge("unknown edge in minor set");
    detail::scan_membership(g.edges(), t, [&](const GraphEdge& e, bool in_t) {
        if (!in_t) out.add_edge_at(e.label, uf.find(e.tail), uf.find(e.head));
    });
    out.compact();
    return out;
}

inline DirectedGraph subgraph(const DirectedGraph& g, const IndexSet& keep) {
    return graph_minor(g, minus(g.edge_labels(), keep), MinorMode::deletion);
}

// Forest rank |V| - #components over the vertices touched by edges.
inline std::size_t graph_rank(const DirectedGraph& g) {
    detail::UnionFind uf(g.vertex_count());
    std::size_t rank = 0;
    for (const auto& e : g.edges())
        if (uf.unite(e.tail, e.head)) ++rank;
    return rank;
}

// Maximal circuit-free edge set containing the seed, grown in canonical edge
// order. Throws when the seed itself has a circuit.
inline IndexSet forest(const DirectedGraph& g, const IndexSet& seed = {}) {
    detail::UnionFind uf(g.vertex_count());
    std::vector<Label> out;
    for (const Label& l : seed) {
        const GraphEdge& e = g.edge(l);
        if (!uf.unite(e.tail, e.head)) throw NotAForest("seed contains a circuit");
        out.push_back(l);
    }
    detail::scan_membership(g.edges(), seed, [&](const GraphEdge& e, bool in_seed) {
        if (!in_seed && uf.unite(e.tail, e.head)) out.push_back(e.label);
    });
    return IndexSet(std::move(out));
}

// Kirchhoff spaces on the edge labels: voltage = row space of the incidence
// matrix, current = its null space. Tellegen orthogonality is structural.
template <Field F>
struct KirchhoffSpaces {
    Space<F> voltage;
    Space<F> current;
};

template <Field F>
KirchhoffSpaces<F> kirchhoff_spaces(const DirectedGraph& g) {
    IndexSet e = g.edge_labels();
    Mat<F> incidence(g.vertex_count(), e.size());
    for (const auto& ed : g.edges()) {
        std::size_t c = e.pos(ed.label);
        // Self-loops contribute nothing to the incidence matrix.
        if (ed.tail == ed.head) continue;
        incidence.at(ed.tail, c) = incidence.at(ed.tail, c) + F::one();
        incidence.at(ed.head, c) = incidence.at(ed.head, c) - F::one();
    }
    KirchhoffSpaces<F> out{Space<F>::from_generators(e, incidence),
                           Space<F>::from_constraints(e, incidence)};
    if (out.voltage.perp() != out.current)
        throw InternalCheck("Tellegen orthogonality failed");
    return out;
}

struct MultiportDecomposition {
    DirectedGraph g1;         // on E1 ⊎ P1
    DirectedGraph g2;         // on E2 ⊎ P2
    DirectedGraph connector;  // on P1 ⊎ P2
    IndexSet p1;
    IndexSet p2;
    std::size_t port_count = 0;
};

// Minimal multiport decomposition along the partition {E1, E2}. Forest work
// only; no linear algebra. Port edges are renamed copies of leftover forest
// edges, oriented opposite to their donors so that port current is measured
// into the multiport.
inline MultiportDecomposition multiport_decompose(const DirectedGraph& g, const IndexSet& e1,
                                                  const IndexSet& e2,
                                                  const std::string& p1_stem = "p1:",
                                                  const std::string& p2_stem = "p2:") {
    IndexSet all = g.edge_labels();
    if (!e1.disjoint_from(e2) || unite(e1, e2) != all)
        throw BadPartition("edge sets must partition the graph");

    // Forests of the two restrictions; everything below runs as merge scans
    // over the canonical edge order, so the whole decomposition is a handful
    // of linear passes plus union-find.
    auto forest_of = [&g](const IndexSet& keep) {
        detail::UnionFind uf(g.vertex_count());
        std::vector<Label> out;
        detail::scan_membership(g.edges(), keep, [&](const GraphEdge& e, bool in) {
            if (in && uf.unite(e.tail, e.head)) out.push_back(e.label);
        });
        return IndexSet(std::move(out));
    };
    auto grow = [&g](const IndexSet& base, const IndexSet& candidates) {
        detail::UnionFind uf(g.vertex_count());
        detail::scan_membership(g.edges(), base, [&](const GraphEdge& e, bool in) {
            if (in) uf.unite(e.tail, e.head);
        });
        std::vector<Label> out;
        detail::scan_membership(g.edges(), candidates, [&](const GraphEdge& e, bool in) {
            if (in && uf.unite(e.tail, e.head)) out.push_back(e.label);
        });
        return IndexSet(std::move(out));
    };
    IndexSet t2 = forest_of(e2);
    IndexSet t1 = forest_of(e1);
    IndexSet t12s = grow(t1, t2);
    IndexSet t21s = grow(t2, t1);

    IndexSet p1_donors = minus(t2, t12s);
    IndexSet p2_donors = minus(t1, t21s);

    MultiportDecomposition out;
    std::map<Label, Label> p1_name, p2_name;
    {
        std::size_t i = 1;
        std::vector<Label> ls;
        for (const Label& l : p1_donors) p1_name[l] = Label(p1_stem + std::to_string(i++));
        for (auto& [k, v] : p1_name) ls.push_back(v);
        out.p1 = IndexSet(std::move(ls));
        i = 1;
        ls.clear();
        for (const Label& l : p2_donors) p2_name[l] = Label(p2_stem + std::to_string(i++));
        for (auto& [k, v] : p2_name) ls.push_back(v);
        out.p2 = IndexSet(std::move(ls));
    }

    auto build = [&](const IndexSet& keep_own, const IndexSet& borrow, const IndexSet& contract_set,
                     const std::map<Label, Label>& rename) {
        // G∘(own ⊎ borrow) × (own ⊎ (borrow − contracted)), ports renamed and
        // flipped.
        DirectedGraph sub = subgraph(g, unite(keep_own, borrow));
        DirectedGraph m = graph_minor(sub, contract_set, MinorMode::contraction);
        // Keep the result pre-sorted: renamed port edges are few, so they are
        // collected and merged instead of forcing a full re-sort.
        DirectedGraph res = m.sharing_vertices();
        std::vector<GraphEdge> main, ports;
        for (const auto& e : m.edges()) {
            auto it = rename.find(e.label);
            if (it == rename.end()) {
                main.push_back(e);
            } else {
                ports.push_back(GraphEdge{it->second, e.head, e.tail});
            }
        }
        std::sort(ports.begin(), ports.end(),
                  [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
        auto mi = main.begin();
        auto pi = ports.begin();
        while (mi != main.end() || pi != ports.end()) {
            bool take_main = pi == ports.end() ||
                             (mi != main.end() && mi->label < pi->label);
            const GraphEdge& e = take_main ? *mi++ : *pi++;
            res.add_edge_at(e.label, e.tail, e.head);
        }
        res.compact();
        return res;
    };

    out.g1 = build(e1, t2, t12s, p1_name);
    out.g2 = build(e2, t1, t21s, p2_name);

    // Port connection diagram from the E1-side multiport.
    {
        DirectedGraph sub = subgraph(out.g1, unite(t1, out.p1));
        DirectedGraph m = graph_minor(sub, t21s, MinorMode::contraction);
        DirectedGraph res = m.sharing_vertices();
        for (const auto& e : m.edges()) {
            auto it = p2_name.find(e.label);
            if (it == p2_name.end()) {
                res.add_edge_at(e.label, e.tail, e.head);
            } else {
                res.add_edge_at(it->second, e.head, e.tail);
            }
        }
        res.compact();
        out.connector = res;
    }

    out.port_count = out.p1.size();
    std::size_t rank_g = graph_rank(g);
    std::size_t expect = t1.size() - (rank_g - t2.size());
    if (out.port_count != expect || out.p2.size() != out.port_count)
        throw InternalCheck("multiport decomposition is not minimal");
    return out;
}

// Circuit-freeness of a set inside a graph: the set is independent.
inline bool circuit_free(const DirectedGraph& g, const IndexSet& t) {
    detail::UnionFind uf(g.vertex_count());
    for (const Label& l : t) {
        const GraphEdge& e = g.edge(l);
        if (!uf.unite(e.tail, e.head)) return false;
    }
    return true;
}

// Cutset-freeness of a set: its complement spans the graph.
inline bool cutset_free(const DirectedGraph& g, const IndexSet& t) {
    return graph_rank(graph_minor(g, t, MinorMode::deletion)) == graph_rank(g);
}

}  // namespace ila
