#pragma once

#include <cctype>
#include <sstream>
#include <string>

#include "network.hpp"

namespace ila {

namespace detail {

inline bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace detail

// One record per line: "<KIND> <name> <node+> <node-> [<value>]",
// KIND in {R, C, L, E, J, YV, YI}; comments start with '#'. Values are
// rationals "p/q" or exact decimals, required positive for R, C, L.
inline Network parse_netlist(const std::string& text) {
    Network net;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string kind, name, npos, nneg, value;
        if (!(ls >> kind)) continue;
        if (!(ls >> name >> npos >> nneg))
            throw ParseError("expected <KIND> <name> <node+> <node->", lineno, 1);
        bool has_value = static_cast<bool>(ls >> value);
        std::string extra;
        if (ls >> extra) throw ParseError("trailing tokens", lineno, 1);
        if (!detail::valid_name(name) || !detail::valid_name(npos) || !detail::valid_name(nneg))
            throw ParseError("names and nodes must be alphanumeric", lineno, 1);

        DeviceKind dk;
        if (kind == "R")
            dk = DeviceKind::resistor;
        else if (kind == "C")
            dk = DeviceKind::capacitor;
        else if (kind == "L")
            dk = DeviceKind::inductor;
        else if (kind == "E")
            dk = DeviceKind::vsource;
        else if (kind == "J")
            dk = DeviceKind::isource;
        else if (kind == "YV")
            dk = DeviceKind::vsensor;
        else if (kind == "YI")
            dk = DeviceKind::isensor;
        else
            throw ParseError("unknown device kind " + kind, lineno, 1);

        bool needs_value =
            dk == DeviceKind::resistor || dk == DeviceKind::capacitor || dk == DeviceKind::inductor;
        Rat v(0);
        if (needs_value) {
            if (!has_value) throw ParseError("missing value for " + kind, lineno, 1);
            try {
                v = Rat::from_string(value);
            } catch (const Error&) {
                throw ParseError("bad value " + value, lineno, 1);
            }
            if (!(Rat(0) < v)) throw ParseError("non-positive value " + value, lineno, 1);
        } else if (has_value) {
            throw ParseError("sources and sensors take no value", lineno, 1);
        }
        net.add(dk, name, npos, nneg, v);
    }
    return net;
}

// Canonical text form; parse(serialize(n)) reproduces n exactly.
inline std::string serialize_netlist(const Network& net) {
    std::string out;
    for (const auto& [label, dev] : net.devices()) {
        const GraphEdge& e = net.graph().edge(label);
        std::string kind;
        switch (dev.kind) {
            case DeviceKind::resistor: kind = "R"; break;
            case DeviceKind::capacitor: kind = "C"; break;
            case DeviceKind::inductor: kind = "L"; break;
            case DeviceKind::vsource: kind = "E"; break;
            case DeviceKind::isource: kind = "J"; break;
            case DeviceKind::vsensor: kind = "YV"; break;
            case DeviceKind::isensor: kind = "YI"; break;
        }
        out += kind + " " + label.str() + " " + net.graph().vertex_ids()[e.tail] + " " +
               net.graph().vertex_ids()[e.head];
        bool needs_value = dev.kind == DeviceKind::resistor ||
                           dev.kind == DeviceKind::capacitor || dev.kind == DeviceKind::inductor;
        if (needs_value) out += " " + dev.value.str();
        out += "\n";
    }
    return out;
}

}  // namespace ila
