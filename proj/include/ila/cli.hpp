#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "emulator.hpp"
#include "netlist.hpp"
#include "report.hpp"

namespace ila {

using Json = nlohmann::ordered_json;

struct Report {
    int status = 0;      // 0 success, 1 domain error, 2 usage error
    std::string text;    // rendered output (text or JSON, ready to print)
    Json payload;        // structured result
};

namespace cli_detail {

inline Json json_matrix(const IndexSet& cols, const Mat<Rat>& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    Json out;
    out["labels"] = Json::array();
    for (const Label& l : cols) out["labels"].push_back(l.str());
    out["rows"] = rows;
    return out;
}

inline Json json_space(const Space<Rat>& s) { return json_matrix(s.index(), s.basis()); }

inline Json json_poly(const Poly<Rat>& p) {
    Json out;
    out["str"] = p.str();
    Json coeffs = Json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(c.str());
    out["coeffs"] = coeffs;
    return out;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

template <Field F>
Space<F> random_space_cli(std::mt19937_64& g, const IndexSet& idx, std::size_t max_rank) {
    std::uniform_int_distribution<long> entry(-3, 3);
    std::uniform_int_distribution<std::size_t> rk(0, max_rank);
    Mat<F> m(0, idx.size());
    std::size_t rows = rk(g);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<F> r(idx.size());
        for (auto& x : r) x = F::from_int(entry(g));
        m.append_row(r);
    }
    return Space<F>::from_generators(idx, std::move(m));
}

inline IndexSet stem_set(const std::string& stem, std::size_t n) {
    std::vector<Label> ls;
    for (std::size_t i = 1; i <= n; ++i) ls.emplace_back(stem + std::to_string(i));
    return IndexSet(std::move(ls));
}

// One IDT case: (V_XY ↔ V_YZ)^perp == V_XY^perp ⇌ V_YZ^perp.
template <Field F>
bool idt_case(std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::uniform_int_distribution<std::size_t> dim(1, 3);
    IndexSet x = stem_set("x", dim(g));
    IndexSet y = stem_set("y", dim(g));
    IndexSet z = stem_set("z", dim(g));
    auto vxy = random_space_cli<F>(g, unite(x, y), 4);
    auto vyz = random_space_cli<F>(g, unite(y, z), 4);
    auto lhs = vxy.compose(vyz).perp();
    auto rhs = vxy.perp().compose(vyz.perp(), ComposeMode::skewed);
    return lhs == rhs;
}

template <Field F>
std::size_t run_idt(std::size_t n, std::uint64_t seed, bool parallel) {
    std::vector<char> ok(n, 0);
    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i) ok[i] = idt_case<F>(seed + i) ? 1 : 0;
    };
    if (parallel && n >= 8) {
        unsigned threads = std::max(2u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        std::size_t chunk = (n + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    } else {
        work(0, n);
    }
    std::size_t passed = 0;
    for (char c : ok) passed += c;
    return passed;
}

struct FieldChoice {
    bool rational = true;
    std::uint32_t prime = 0;
};

inline FieldChoice parse_field(std::string name) {
    if (name.empty()) {
        const char* env = std::getenv("ILA_FIELD");
        name = env ? env : "q";
    }
    if (name == "q" || name == "Q") return {true, 0};
    if (name.rfind("gf", 0) == 0) {
        long p = std::stol(name.substr(2));
        for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u})
            if (p == static_cast<long>(q)) return {false, q};
        throw Error("unsupported prime field gf" + std::to_string(p) +
                    " (supported: 2, 3, 5, 7, 11, 13)");
    }
    throw Error("unknown field " + name + " (use q or gf<p>)");
}

template <class Fn>
auto with_field(const FieldChoice& f, Fn&& fn) {
    if (f.rational) return fn(Rat{});
    switch (f.prime) {
        case 2: return fn(GF<2>{});
        case 3: return fn(GF<3>{});
        case 5: return fn(GF<5>{});
        case 7: return fn(GF<7>{});
        case 11: return fn(GF<11>{});
        default: return fn(GF<13>{});
    }
}

}  // namespace cli_detail

// The whole command surface, exposed as a function for tests: argv without
// the program name. Exit status 0/1/2 per success / domain error / usage.
inline Report run_command(const std::vector<std::string>& argv) {
    using namespace cli_detail;
    Report rep;
    CLI::App app{"implicit linear algebra toolkit"};
    app.require_subcommand(1);
    bool json_out = false;
    std::string field_name;
    std::uint64_t seed = 1;
    bool parallel = false;
    app.add_flag("--json", json_out, "machine-readable JSON report");
    app.add_option("--field", field_name, "scalar field: q or gf<p>");
    app.add_option("--seed", seed, "seed for randomized commands");
    app.add_flag("--parallel", parallel, "fan out independent randomized cases");

    std::string netfile, graphfile, e1_list, target_poly, space_sel = "original",
                                                          kind_sel = "min";
    std::size_t random_n = 100;

    CLI::App* c_decompose = app.add_subcommand("decompose", "minimal multiport decomposition");
    c_decompose->fallthrough();
    c_decompose->add_option("graph", graphfile, "graph fixture file")->required();
    c_decompose->add_option("--e1", e1_list, "comma-separated E1 edge labels")->required();

    CLI::App* c_emulate = app.add_subcommand("emulate", "build the RLC emulator");
    c_emulate->fallthrough();
    c_emulate->add_option("netlist", netfile, "netlist file")->required();

    CLI::App* c_annpoly = app.add_subcommand("annpoly", "minimal annihilating polynomial");
    c_annpoly->fallthrough();
    c_annpoly->add_option("netlist", netfile, "netlist file")->required();
    c_annpoly->add_option("--space", space_sel, "original|emulator");

    CLI::App* c_invariant = app.add_subcommand("invariant", "extremal invariant subspaces");
    c_invariant->fallthrough();
    c_invariant->add_option("netlist", netfile, "netlist file")->required();
    c_invariant->add_option("--kind", kind_sel, "min|max");

    CLI::App* c_feedback = app.add_subcommand("feedback", "pole placement by state feedback");
    c_feedback->fallthrough();
    c_feedback->add_option("netlist", netfile, "netlist file")->required();
    c_feedback->add_option("--target-poly", target_poly, "monic target, coeffs low-first")
        ->required();

    CLI::App* c_injection = app.add_subcommand("injection", "pole placement by output injection");
    c_injection->fallthrough();
    c_injection->add_option("netlist", netfile, "netlist file")->required();
    c_injection->add_option("--target-poly", target_poly, "monic target, coeffs low-first")
        ->required();

    CLI::App* c_adjoint = app.add_subcommand("adjoint", "adjoint of the network GDS");
    c_adjoint->fallthrough();
    c_adjoint->add_option("netlist", netfile, "netlist file")->required();

    CLI::App* c_idt = app.add_subcommand("verify-idt", "randomized implicit duality suite");
    c_idt->fallthrough();
    c_idt->add_option("--random", random_n, "number of cases");

    CLI::App* c_selftest = app.add_subcommand("selftest", "quick built-in property sweep");
    c_selftest->fallthrough();

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        // CLI11 renders help and usage errors through exit().
        rep.status = app.exit(e, out, err) == 0 ? 0 : 2;
        rep.text = out.str() + err.str();
        return rep;
    }

    Json j;
    j["schema"] = "ila-report/1";
    j["command"] = argv;
    std::string text;
    try {
        if (c_decompose->parsed()) {
            DirectedGraph g = DirectedGraph::parse(read_file(graphfile));
            std::vector<Label> e1l;
            std::istringstream ss(e1_list);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                if (!tok.empty()) e1l.push_back(Label::parse(tok));
            }
            IndexSet e1(std::move(e1l));
            IndexSet e2 = minus(g.edge_labels(), e1);
            auto d = multiport_decompose(g, e1, e2);
            bool minimal = true;
            for (const DirectedGraph* gr : {&d.g1, &d.connector})
                minimal = minimal && circuit_free(*gr, d.p1) && cutset_free(*gr, d.p1);
            for (const DirectedGraph* gr : {&d.g2, &d.connector})
                minimal = minimal && circuit_free(*gr, d.p2) && cutset_free(*gr, d.p2);
            j["result"] = {{"port_count", d.port_count},
                           {"ports_free_of_circuits_and_cutsets", minimal},
                           {"g1", d.g1.serialize()},
                           {"g2", d.g2.serialize()},
                           {"connector", d.connector.serialize()}};
            text += "port count: " + std::to_string(d.port_count) + "\n";
            text += "ports free of circuits and cutsets: " + std::string(minimal ? "yes" : "no") +
                    "\n";
            text += "g1:\n" + d.g1.serialize();
            text += "g2:\n" + d.g2.serialize();
            text += "connector:\n" + d.connector.serialize();
        } else if (c_emulate->parsed()) {
            Network net = parse_netlist(read_file(netfile));
            RlcEmulator emu = build_rlc_emulator(net);
            j["result"]["state"] = Json::array();
            for (const Label& l : emu.flat.p) j["result"]["state"].push_back(l.str());
            j["result"]["a"] = json_matrix(emu.flat.p, emu.flat.a);
            j["result"]["b"] = json_matrix(emu.flat.mu, emu.flat.b);
            j["result"]["c"] = json_matrix(emu.flat.p, emu.flat.c);
            j["result"]["d"] = json_matrix(emu.flat.mu, emu.flat.d);
            j["result"]["pair_v1"] = json_space(emu.pair.v1());
            j["result"]["pair_v2"] = json_space(emu.pair.v2());
            j["result"]["cap_ports"] = emu.cap_ports;
            j["result"]["ind_ports"] = emu.ind_ports;
            j["result"]["no_zero_eigenvalue"] = emu.no_zero_eigenvalue;
            j["result"]["zero_modes"] = json_space(emu.zero_modes);
            text += "emulator states (" + std::to_string(emu.flat.p.size()) + "):";
            for (const Label& l : emu.flat.p) text += " " + l.str();
            text += "\nA:\n" + format_matrix(emu.flat.p, emu.flat.a);
            text += "B (columns";
            for (const Label& l : emu.flat.mu) text += " " + l.str();
            text += "):\n" + format_matrix(emu.flat.mu, emu.flat.b);
            text += "C (rows";
            for (const Label& l : emu.flat.my) text += " " + l.str();
            text += "):\n" + format_matrix(emu.flat.p, emu.flat.c);
            text += "D:\n" + format_matrix(emu.flat.mu, emu.flat.d);
            text += "linkage pair V1:\n" + format_space(emu.pair.v1());
            text += "linkage pair V2:\n" + format_space(emu.pair.v2());
            text += "no zero eigenvalue: " + std::string(emu.no_zero_eigenvalue ? "yes" : "no") +
                    "\n";
        } else if (c_annpoly->parsed()) {
            Network net = parse_netlist(read_file(netfile));
            Genaut<Rat> g = (space_sel == "emulator")
                                ? build_rlc_emulator(net).emulator.autonomous()
                                : build_gds(net).autonomous();
            Poly<Rat> p = minimal_annihilating_poly(g);
            j["result"]["poly"] = json_poly(p);
            j["result"]["space"] = space_sel;
            text += p.str() + "\n";
        } else if (c_invariant->parsed()) {
            Network net = parse_netlist(read_file(netfile));
            Genaut<Rat> g = build_gds(net).free_manifest();
            InvariantReport<Rat> r = (kind_sel == "max")
                                         ? max_controlled_invariant(g, g.dom())
                                         : min_conditioned_invariant(g, g.img0());
            j["result"]["kind"] = kind_sel;
            j["result"]["iterations"] = r.iterations;
            j["result"]["space"] = json_space(r.space);
            text += "iterations: " + std::to_string(r.iterations) + "\n";
            text += format_space(r.space);
        } else if (c_feedback->parsed() || c_injection->parsed()) {
            Network net = parse_netlist(read_file(netfile));
            Gds<Rat> gds = build_gds(net);
            Poly<Rat> target = Poly<Rat>::parse_coeff_list(target_poly);
            FeedbackLaw<Rat> law = c_feedback->parsed() ? place_poles(gds, target)
                                                        : place_poles_injection(gds, target);
            Genaut<Rat> applied = c_feedback->parsed() ? feedback_apply(gds, law.space)
                                                       : injection_apply(gds, law.space);
            j["result"]["kind"] = c_feedback->parsed() ? "feedback" : "injection";
            j["result"]["law"] = json_space(law.space);
            j["result"]["unique"] = law.unique;
            j["result"]["achieved_poly"] = json_poly(minimal_annihilating_poly(applied));
            text += "law:\n" + format_space(law.space);
            text += "unique: " + std::string(law.unique ? "yes" : "no") + "\n";
            text += "achieved: " + minimal_annihilating_poly(applied).str() + "\n";
        } else if (c_adjoint->parsed()) {
            Network net = parse_netlist(read_file(netfile));
            Gds<Rat> adj = adjoint(build_gds(net));
            j["result"]["space"] = json_space(adj.space());
            j["result"]["mu"] = Json::array();
            for (const Label& l : adj.mu()) j["result"]["mu"].push_back(l.str());
            j["result"]["my"] = Json::array();
            for (const Label& l : adj.my()) j["result"]["my"].push_back(l.str());
            text += format_space(adj.space());
        } else if (c_idt->parsed()) {
            FieldChoice f = parse_field(field_name);
            std::size_t passed = with_field(f, [&](auto tag) {
                using F = decltype(tag);
                return run_idt<F>(random_n, seed, parallel);
            });
            j["result"]["passed"] = passed;
            j["result"]["total"] = random_n;
            text += std::to_string(passed) + "/" + std::to_string(random_n) + " pass\n";
            if (passed != random_n) rep.status = 1;
        } else if (c_selftest->parsed()) {
            FieldChoice f = parse_field(field_name);
            std::size_t idt = with_field(f, [&](auto tag) {
                using F = decltype(tag);
                return run_idt<F>(25, seed, false);
            });
            bool ok = idt == 25;
            // Dot-cross sweep over the same seeds.
            std::mt19937_64 g(seed);
            for (int it = 0; it < 25 && ok; ++it) {
                IndexSet x = stem_set("x", 3);
                auto v = random_space_cli<Rat>(g, x, 3);
                IndexSet t = stem_set("x", 2);
                ok = v.restrict_to(t).perp() == v.perp().contract_to(t) &&
                     v.perp().perp() == v;
            }
            j["result"]["ok"] = ok;
            text += ok ? "selftest: pass\n" : "selftest: FAIL\n";
            if (!ok) rep.status = 1;
        }
    } catch (const Error& e) {
        rep.status = 1;
        j["error"] = e.what();
        rep.payload = j;
        rep.text = json_out ? j.dump(2) + "\n" : std::string("error: ") + e.what() + "\n";
        return rep;
    }

    j["status"] = rep.status;
    rep.payload = j;
    rep.text = json_out ? j.dump(2) + "\n" : text;
    return rep;
}

}  // namespace ila
