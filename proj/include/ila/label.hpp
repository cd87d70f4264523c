#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ila {

// A coordinate name: base string plus structural decorations. Primes build
// disjoint copies (dummy sets for composition chains); the dot-mark builds
// the derivative copy of a dynamic variable.
struct Label {
    std::string base;
    unsigned primes = 0;
    bool dotted = false;

    Label() = default;
    Label(std::string b, unsigned p = 0, bool d = false)
        : base(std::move(b)), primes(p), dotted(d) {}

    auto operator<=>(const Label&) const = default;

    Label dot() const {
        if (dotted) throw BadRename("label already dotted: " + str());
        return Label(base, primes, true);
    }
    Label undot() const {
        if (!dotted) throw BadRename("label not dotted: " + str());
        return Label(base, primes, false);
    }
    Label primed(unsigned extra = 1) const { return Label(base, primes + extra, dotted); }

    // Injective rendering: base, then one apostrophe per prime, then a
    // trailing dot for the dot-mark. Bases must not end in ' or '.'.
    std::string str() const {
        std::string s = base;
        s.append(primes, '\'');
        if (dotted) s.push_back('.');
        return s;
    }

    static Label parse(const std::string& text) {
        std::string s = text;
        bool d = false;
        if (!s.empty() && s.back() == '.') {
            d = true;
            s.pop_back();
        }
        unsigned p = 0;
        while (!s.empty() && s.back() == '\'') {
            ++p;
            s.pop_back();
        }
        if (s.empty()) throw BadRename("empty label: " + text);
        return Label(s, p, d);
    }
};

struct LabelHash {
    std::size_t operator()(const Label& l) const {
        std::size_t h = std::hash<std::string>()(l.base);
        return h * 1000003u ^ (static_cast<std::size_t>(l.primes) << 1) ^
               static_cast<std::size_t>(l.dotted);
    }
};

// Finite set of labels in canonical (sorted) order.
class IndexSet {
  public:
    IndexSet() = default;
    IndexSet(std::initializer_list<Label> ls) : labels_(ls) { normalize(); }
    explicit IndexSet(std::vector<Label> ls) : labels_(std::move(ls)) { normalize(); }

    static IndexSet of_bases(std::initializer_list<std::string> bs) {
        std::vector<Label> ls;
        for (const auto& b : bs) ls.emplace_back(b);
        return IndexSet(std::move(ls));
    }

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<Label>& labels() const { return labels_; }
    const Label& at(std::size_t i) const { return labels_[i]; }

    bool contains(const Label& l) const {
        return std::binary_search(labels_.begin(), labels_.end(), l);
    }
    // Position of l in canonical order; throws if absent.
    std::size_t pos(const Label& l) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
        if (it == labels_.end() || *it != l) throw IndexMismatch("label not in index set: " + l.str());
        return static_cast<std::size_t>(it - labels_.begin());
    }

    bool subset_of(const IndexSet& o) const {
        return std::includes(o.labels_.begin(), o.labels_.end(), labels_.begin(), labels_.end());
    }
    bool disjoint_from(const IndexSet& o) const {
        std::vector<Label> tmp;
        std::set_intersection(labels_.begin(), labels_.end(), o.labels_.begin(), o.labels_.end(),
                              std::back_inserter(tmp));
        return tmp.empty();
    }

    friend IndexSet unite(const IndexSet& a, const IndexSet& b) {
        std::vector<Label> out;
        std::set_union(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
                       std::back_inserter(out));
        return IndexSet::presorted(std::move(out));
    }
    friend IndexSet intersect(const IndexSet& a, const IndexSet& b) {
        std::vector<Label> out;
        std::set_intersection(a.labels_.begin(), a.labels_.end(), b.labels_.begin(),
                              b.labels_.end(), std::back_inserter(out));
        return IndexSet::presorted(std::move(out));
    }
    friend IndexSet minus(const IndexSet& a, const IndexSet& b) {
        std::vector<Label> out;
        std::set_difference(a.labels_.begin(), a.labels_.end(), b.labels_.begin(), b.labels_.end(),
                            std::back_inserter(out));
        return IndexSet::presorted(std::move(out));
    }

    IndexSet mapped(const std::function<Label(const Label&)>& f) const {
        std::vector<Label> out;
        out.reserve(labels_.size());
        for (const auto& l : labels_) out.push_back(f(l));
        std::vector<Label> sorted = out;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw BadRename("label map is not injective");
        return IndexSet(std::move(out));
    }
    IndexSet dotted() const {
        return mapped([](const Label& l) { return l.dot(); });
    }
    IndexSet undotted() const {
        return mapped([](const Label& l) { return l.undot(); });
    }
    IndexSet primed(unsigned extra = 1) const {
        return mapped([extra](const Label& l) { return l.primed(extra); });
    }

    unsigned max_primes() const {
        unsigned m = 0;
        for (const auto& l : labels_) m = std::max(m, l.primes);
        return m;
    }

    bool operator==(const IndexSet&) const = default;

    auto begin() const { return labels_.begin(); }
    auto end() const { return labels_.end(); }

  private:
    static IndexSet presorted(std::vector<Label> ls) {
        IndexSet s;
        s.labels_ = std::move(ls);
        return s;
    }
    void normalize() {
        if (!std::is_sorted(labels_.begin(), labels_.end()))
            std::sort(labels_.begin(), labels_.end());
        if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end())
            throw IndexMismatch("duplicate labels in index set");
    }
    std::vector<Label> labels_;
};

}  // namespace ila
