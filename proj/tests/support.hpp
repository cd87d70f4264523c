#pragma once

// Shared test helpers: fixture builders, deterministic random spaces, and
// brute-force set-construction oracles over small prime fields.

#include <ila/field.hpp>
#include <ila/label.hpp>
#include <ila/linkage.hpp>
#include <ila/space.hpp>

#include <random>
#include <set>
#include <string>
#include <vector>

namespace ts {

using namespace ila;

inline IndexSet iset(std::initializer_list<std::string> names) {
    std::vector<Label> ls;
    for (const auto& n : names) ls.push_back(Label::parse(n));
    return IndexSet(std::move(ls));
}

// Index set of n labels "<stem>1".."<stem>n".
inline IndexSet iota_set(const std::string& stem, std::size_t n, bool dotted = false) {
    std::vector<Label> ls;
    for (std::size_t i = 1; i <= n; ++i) ls.emplace_back(stem + std::to_string(i), 0, dotted);
    return IndexSet(std::move(ls));
}

// Vector given on labels in the order passed, realigned to the canonical
// order internally.
template <Field F>
Vec<F> vec_on(const std::vector<Label>& order, const std::vector<long>& coords) {
    IndexSet idx{std::vector<Label>(order)};
    Vec<F> v = Vec<F>::zero(idx);
    for (std::size_t i = 0; i < order.size(); ++i) v.at(order[i]) = F::from_int(coords[i]);
    return v;
}

template <Field F>
Space<F> span_on(const std::vector<Label>& order, const std::vector<std::vector<long>>& rows) {
    IndexSet idx{std::vector<Label>(order)};
    std::vector<Vec<F>> vs;
    for (const auto& r : rows) vs.push_back(vec_on<F>(order, r));
    return make_space(idx, vs, SpaceForm::generators);
}

template <Field F>
Space<F> constrain_on(const std::vector<Label>& order, const std::vector<std::vector<long>>& rows) {
    IndexSet idx{std::vector<Label>(order)};
    std::vector<Vec<F>> vs;
    for (const auto& r : rows) vs.push_back(vec_on<F>(order, r));
    return make_space(idx, vs, SpaceForm::constraints);
}

inline std::vector<Label> order_of(const IndexSet& idx) { return idx.labels(); }

struct Rng {
    std::mt19937_64 g;
    explicit Rng(std::uint64_t seed) : g(seed) {}
    long small(long lo = -3, long hi = 3) {
        return std::uniform_int_distribution<long>(lo, hi)(g);
    }
    std::size_t upto(std::size_t n) {  // 0..n
        return std::uniform_int_distribution<std::size_t>(0, n)(g);
    }
};

template <Field F>
Space<F> random_space(Rng& rng, const IndexSet& idx, std::size_t max_rank) {
    Mat<F> m(0, idx.size());
    std::size_t rows = rng.upto(max_rank);
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<F> r(idx.size());
        for (auto& x : r) x = F::from_int(rng.small());
        m.append_row(r);
    }
    return Space<F>::from_generators(idx, std::move(m));
}

// --- brute-force oracles over GF(p) ---------------------------------------

// All vectors of a space: every linear combination of basis rows.
template <std::uint32_t P>
std::set<std::vector<std::uint32_t>> enumerate_vectors(const Space<GF<P>>& v) {
    std::set<std::vector<std::uint32_t>> out;
    std::size_t r = v.rank(), n = v.index().size();
    std::vector<std::uint32_t> lambda(r, 0);
    while (true) {
        std::vector<GF<P>> acc(n, GF<P>::zero());
        for (std::size_t i = 0; i < r; ++i) {
            GF<P> c = GF<P>::from_int(static_cast<long>(lambda[i]));
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) acc[j] = acc[j] + c * v.basis().at(i, j);
        }
        std::vector<std::uint32_t> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = acc[j].value();
        out.insert(row);
        std::size_t k = 0;
        while (k < r && ++lambda[k] == P) lambda[k++] = 0;
        if (k == r) break;
    }
    return out;
}

template <std::uint32_t P>
Space<GF<P>> space_from_set(const IndexSet& idx, const std::set<std::vector<std::uint32_t>>& vs) {
    Mat<GF<P>> m(0, idx.size());
    for (const auto& row : vs) {
        std::vector<GF<P>> r(row.size());
        for (std::size_t j = 0; j < row.size(); ++j) r[j] = GF<P>::from_int(row[j]);
        m.append_row(r);
    }
    return Space<GF<P>>::from_generators(idx, std::move(m));
}

// Brute matched/skewed composition straight from the existential definition.
template <std::uint32_t P>
Space<GF<P>> brute_compose(const Space<GF<P>>& vx, const Space<GF<P>>& vy, bool matched) {
    IndexSet shared = intersect(vx.index(), vy.index());
    IndexSet result = unite(minus(vx.index(), shared), minus(vy.index(), shared));
    auto xs = enumerate_vectors(vx);
    auto ys = enumerate_vectors(vy);
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& g : xs) {
        for (const auto& h : ys) {
            bool ok = true;
            for (const Label& l : shared) {
                std::uint32_t a = g[vx.index().pos(l)];
                std::uint32_t b = h[vy.index().pos(l)];
                std::uint32_t want = matched ? b : (b == 0 ? 0 : P - b);
                if (a != want) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<std::uint32_t> r(result.size());
            for (std::size_t j = 0; j < result.size(); ++j) {
                const Label& l = result.at(j);
                r[j] = vx.index().contains(l) ? g[vx.index().pos(l)] : h[vy.index().pos(l)];
            }
            out.insert(r);
        }
    }
    return space_from_set<P>(result, out);
}

template <std::uint32_t P>
Space<GF<P>> brute_perp(const Space<GF<P>>& v) {
    std::size_t n = v.index().size();
    std::set<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cand(n, 0);
    auto vs = enumerate_vectors(v);
    while (true) {
        bool ortho = true;
        for (const auto& f : vs) {
            std::uint64_t dot = 0;
            for (std::size_t j = 0; j < n; ++j) dot += static_cast<std::uint64_t>(f[j]) * cand[j];
            if (dot % P != 0) {
                ortho = false;
                break;
            }
        }
        if (ortho) out.insert(cand);
        std::size_t k = 0;
        while (k < n && ++cand[k] == P) cand[k++] = 0;
        if (k == n) break;
    }
    return space_from_set<P>(v.index(), out);
}

template <std::uint32_t P>
Space<GF<P>> brute_restrict(const Space<GF<P>>& v, const IndexSet& t) {
    auto vs = enumerate_vectors(v);
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& f : vs) {
        std::vector<std::uint32_t> r(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) r[j] = f[v.index().pos(t.at(j))];
        out.insert(r);
    }
    return space_from_set<P>(t, out);
}

template <std::uint32_t P>
Space<GF<P>> brute_contract(const Space<GF<P>>& v, const IndexSet& t) {
    auto vs = enumerate_vectors(v);
    IndexSet rest = minus(v.index(), t);
    std::set<std::vector<std::uint32_t>> out;
    for (const auto& f : vs) {
        bool zero_off = true;
        for (const Label& l : rest)
            if (f[v.index().pos(l)] != 0) {
                zero_off = false;
                break;
            }
        if (!zero_off) continue;
        std::vector<std::uint32_t> r(t.size());
        for (std::size_t j = 0; j < t.size(); ++j) r[j] = f[v.index().pos(t.at(j))];
        out.insert(r);
    }
    return space_from_set<P>(t, out);
}

// All subspaces of GF(p)^idx by enumerating RREF matrices.
template <std::uint32_t P>
std::vector<Space<GF<P>>> all_subspaces(const IndexSet& idx) {
    std::size_t n = idx.size();
    std::vector<Space<GF<P>>> out;
    std::vector<std::size_t> pivots;
    // Recursive choice of pivot columns, then free entries.
    auto fill_free = [&](auto&& self, Mat<GF<P>>& m, std::vector<std::pair<std::size_t, std::size_t>>& freepos,
                         std::size_t k) -> void {
        if (k == freepos.size()) {
            Mat<GF<P>> copy = m;
            out.push_back(Space<GF<P>>::from_generators(idx, std::move(copy)));
            return;
        }
        for (std::uint32_t val = 0; val < P; ++val) {
            m.at(freepos[k].first, freepos[k].second) = GF<P>::from_int(val);
            self(self, m, freepos, k + 1);
        }
    };
    auto choose = [&](auto&& self, std::size_t start) -> void {
        {
            // Build the RREF skeleton for the current pivot set.
            std::size_t r = pivots.size();
            Mat<GF<P>> m(r, n);
            std::vector<std::pair<std::size_t, std::size_t>> freepos;
            std::vector<bool> is_pivot(n, false);
            for (std::size_t c : pivots) is_pivot[c] = true;
            for (std::size_t i = 0; i < r; ++i) {
                m.at(i, pivots[i]) = GF<P>::one();
                for (std::size_t c = pivots[i] + 1; c < n; ++c)
                    if (!is_pivot[c]) freepos.emplace_back(i, c);
            }
            fill_free(fill_free, m, freepos, 0);
        }
        for (std::size_t c = start; c < n; ++c) {
            pivots.push_back(c);
            self(self, c + 1);
            pivots.pop_back();
        }
    };
    choose(choose, 0);
    return out;
}

}  // namespace ts
