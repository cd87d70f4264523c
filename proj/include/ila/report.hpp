#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "space.hpp"

namespace ila {

// Matrix fixture format: one header line of labels, then rows of "p/q"
// tokens, parsed bit-exactly.
inline std::string format_matrix(const IndexSet& cols, const Mat<Rat>& m) {
    std::string out;
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (j) out += " ";
        out += cols.at(j).str();
    }
    out += "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += " ";
            out += m.at(i, j).str();
        }
        out += "\n";
    }
    return out;
}

inline std::string format_space(const Space<Rat>& s) { return format_matrix(s.index(), s.basis()); }

inline std::pair<IndexSet, Mat<Rat>> parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    // Header.
    std::vector<Label> labels;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) labels.push_back(Label::parse(tok));
        if (!labels.empty()) break;
    }
    IndexSet header{std::vector<Label>(labels)};
    Mat<Rat> m(0, labels.size());
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::vector<Rat> row;
        std::string tok;
        while (ls >> tok) row.push_back(Rat::from_string(tok));
        if (row.empty()) continue;
        if (row.size() != labels.size()) throw Error("matrix row width mismatch");
        // Reorder the row from header order into canonical order.
        std::vector<Rat> canon(labels.size(), Rat(0));
        for (std::size_t j = 0; j < labels.size(); ++j) canon[header.pos(labels[j])] = row[j];
        m.append_row(canon);
    }
    return {header, m};
}

inline Space<Rat> parse_space(const std::string& text, SpaceForm form = SpaceForm::generators) {
    auto [idx, m] = parse_matrix(text);
    if (form == SpaceForm::generators) return Space<Rat>::from_generators(idx, std::move(m));
    return Space<Rat>::from_constraints(idx, m);
}

}  // namespace ila
