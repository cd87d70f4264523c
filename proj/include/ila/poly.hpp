#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "field.hpp"

namespace ila {

// Dense univariate polynomial, coefficient of s^i at index i, trailing zeros
// trimmed. The zero polynomial has an empty coefficient list.
template <Field F>
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly zero() { return Poly(); }
    static Poly one() { return Poly({F::one()}); }
    static Poly s() { return Poly({F::zero(), F::one()}); }
    static Poly from_ints(const std::vector<long>& v) {
        std::vector<F> c;
        c.reserve(v.size());
        for (long x : v) c.push_back(F::from_int(x));
        return Poly(std::move(c));
    }
    // Monic with the given roots: prod (s - r_i).
    static Poly from_roots(const std::vector<F>& roots) {
        Poly p = one();
        for (const F& r : roots) p = p * Poly({-r, F::one()});
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<F>& coeffs() const { return c_; }
    F coeff(std::size_t i) const { return i < c_.size() ? c_[i] : F::zero(); }
    F leading() const { return c_.empty() ? F::zero() : c_.back(); }
    bool is_monic() const { return !c_.empty() && c_.back() == F::one(); }

    Poly monic() const {
        if (is_zero()) throw Error("cannot normalize the zero polynomial");
        F inv = leading().inv();
        std::vector<F> c = c_;
        for (F& x : c) x = x * inv;
        return Poly(std::move(c));
    }

    Poly operator+(const Poly& o) const {
        std::vector<F> c(std::max(c_.size(), o.c_.size()), F::zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
        return Poly(std::move(c));
    }
    Poly operator-(const Poly& o) const {
        std::vector<F> c(std::max(c_.size(), o.c_.size()), F::zero());
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
        return Poly(std::move(c));
    }
    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<F> c(c_.size() + o.c_.size() - 1, F::zero());
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
        return Poly(std::move(c));
    }
    Poly scaled(const F& a) const {
        std::vector<F> c = c_;
        for (F& x : c) x = x * a;
        return Poly(std::move(c));
    }

    // Euclidean division: {quotient, remainder}.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw Error("polynomial division by zero");
        Poly r = *this;
        std::vector<F> q(std::max<long>(0, degree() - d.degree() + 1), F::zero());
        while (!r.is_zero() && r.degree() >= d.degree()) {
            F f = r.leading() * d.leading().inv();
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            q[shift] = f;
            std::vector<F> sub(shift, F::zero());
            sub.insert(sub.end(), d.c_.begin(), d.c_.end());
            for (F& x : sub) x = x * f;
            r = r - Poly(std::move(sub));
        }
        return {Poly(std::move(q)), r};
    }
    bool divides(const Poly& p) const { return p.divmod(*this).second.is_zero(); }

    bool operator==(const Poly&) const = default;

    // Human rendering: "s^2 + 2/3 s + 1".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (long i = degree(); i >= 0; --i) {
            F a = coeff(static_cast<std::size_t>(i));
            if (a.is_zero()) continue;
            if (!out.empty()) out += " + ";
            std::string coeff_s = a.str();
            if (i == 0) {
                out += coeff_s;
            } else {
                if (!(a == F::one())) out += coeff_s + " ";
                out += (i == 1) ? "s" : ("s^" + std::to_string(i));
            }
        }
        return out;
    }

    // Coefficient list, lowest degree first: "a0,a1,...".
    std::string coeff_list() const {
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) out += ",";
            out += c_[i].str();
        }
        return out.empty() ? "0" : out;
    }
    static Poly parse_coeff_list(const std::string& text) {
        std::vector<F> c;
        std::string cur;
        auto flush = [&] {
            if (!cur.empty()) {
                c.push_back(F::from_string(cur));
                cur.clear();
            }
        };
        for (char ch : text) {
            if (ch == ',' || ch == ' ') {
                flush();
            } else {
                cur.push_back(ch);
            }
        }
        flush();
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<F> c_;
};

}  // namespace ila
