#pragma once

#include <gmpxx.h>

#include <concepts>
#include <cstdint>
#include <string>

#include "errors.hpp"

namespace ila {

// Exact rational scalar backed by GMP. Always canonical: lowest terms,
// positive denominator (mpq_class maintains this after canonicalize()).
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}
    explicit Rat(const mpq_class& v) : v_(v) { v_.canonicalize(); }
    Rat(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_.canonicalize();
    }

    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static Rat from_int(long n) { return Rat(n); }

    // Accepts "p", "p/q" and plain decimals ("1.25", "-0.5"), all exact.
    static Rat from_string(const std::string& s) {
        if (s.empty()) throw Error("empty rational literal");
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            std::size_t frac_len = s.size() - dot - 1;
            if (digits.empty() || digits == "-" || digits == "+")
                throw Error("bad rational literal: " + s);
            mpz_class num, den(1);
            if (num.set_str(digits, 10) != 0) throw Error("bad rational literal: " + s);
            for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
            return Rat(mpq_class(num, den));
        }
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw Error("bad rational literal: " + s);
        if (v.get_den() == 0) throw Error("rational with zero denominator: " + s);
        v.canonicalize();
        return Rat(v);
    }

    bool is_zero() const { return v_ == 0; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw Error("division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat inv() const {
        if (is_zero()) throw Error("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }
    Rat& operator+=(const Rat& o) {
        v_ += o.v_;
        return *this;
    }
    Rat& operator-=(const Rat& o) {
        v_ -= o.v_;
        return *this;
    }
    Rat& operator*=(const Rat& o) {
        v_ *= o.v_;
        return *this;
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }
    bool operator>(const Rat& o) const { return v_ > o.v_; }

    // Rendered as "p" or "p/q".
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline std::string to_string(const Rat& r) { return r.str(); }

// Prime field GF(P); P a compile-time prime below 2^31.
template <std::uint32_t P>
class GF {
    static_assert(P >= 2, "modulus must be at least 2");

  public:
    GF() : v_(0) {}
    GF(long n) {
        long m = n % static_cast<long>(P);
        if (m < 0) m += P;
        v_ = static_cast<std::uint32_t>(m);
    }

    static GF zero() { return GF(0); }
    static GF one() { return GF(1); }
    static GF from_int(long n) { return GF(n); }
    static GF from_string(const std::string& s) { return GF(std::stol(s)); }
    static constexpr std::uint32_t modulus() { return P; }

    bool is_zero() const { return v_ == 0; }
    std::uint32_t value() const { return v_; }

    GF operator-() const { return raw(v_ == 0 ? 0 : P - v_); }
    GF operator+(GF o) const {
        std::uint64_t s = static_cast<std::uint64_t>(v_) + o.v_;
        return raw(static_cast<std::uint32_t>(s >= P ? s - P : s));
    }
    GF operator-(GF o) const { return *this + (-o); }
    GF operator*(GF o) const {
        return raw(static_cast<std::uint32_t>((static_cast<std::uint64_t>(v_) * o.v_) % P));
    }
    GF operator/(GF o) const { return *this * o.inv(); }
    GF inv() const {
        if (v_ == 0) throw Error("inverse of zero in GF(" + std::to_string(P) + ")");
        // Fermat: v^(P-2).
        std::uint64_t base = v_, acc = 1, e = P - 2;
        while (e) {
            if (e & 1) acc = (acc * base) % P;
            base = (base * base) % P;
            e >>= 1;
        }
        return raw(static_cast<std::uint32_t>(acc));
    }
    GF& operator+=(GF o) { return *this = *this + o; }
    GF& operator-=(GF o) { return *this = *this - o; }
    GF& operator*=(GF o) { return *this = *this * o; }

    bool operator==(GF o) const { return v_ == o.v_; }
    bool operator!=(GF o) const { return v_ != o.v_; }

    std::string str() const { return std::to_string(v_); }

  private:
    static GF raw(std::uint32_t v) {
        GF g;
        g.v_ = v;
        return g;
    }
    std::uint32_t v_;
};

template <std::uint32_t P>
inline std::string to_string(const GF<P>& x) {
    return x.str();
}

template <class F>
concept Field = requires(const F a, const F b, F m) {
    { F::zero() } -> std::same_as<F>;
    { F::one() } -> std::same_as<F>;
    { F::from_int(long{}) } -> std::same_as<F>;
    { a + b } -> std::same_as<F>;
    { a - b } -> std::same_as<F>;
    { a * b } -> std::same_as<F>;
    { -a } -> std::same_as<F>;
    { a.inv() } -> std::same_as<F>;
    { a.is_zero() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

static_assert(Field<Rat>);
static_assert(Field<GF<2>>);

}  // namespace ila
