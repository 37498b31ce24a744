#pragma once

/**
 * @file exactnum.hpp
 * @brief Exact integers, rationals and quadratic-field elements.
 *
 * BigInt is GMP's mpz_class. Rational keeps itself in lowest terms with a
 * positive denominator after every operation, so equality is structural.
 * ExactQuad represents p + q*sqrt(D) with rational p, q and a square-free
 * D fixed per element; mixing elements with different D is a domain error.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace vieta {

using BigInt = mpz_class;

inline BigInt parse_bigint(std::string_view text) {
    std::string s(text);
    if (!s.empty() && s.front() == '+') s.erase(0, 1);
    bool ok = !s.empty();
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
        char c = s[i];
        if (c == '-' && i == 0 && s.size() > 1) continue;
        ok = c >= '0' && c <= '9';
    }
    if (!ok) throw std::invalid_argument("not a decimal integer: '" + std::string(text) + "'");
    return BigInt(s, 10);
}

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

inline BigInt gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline BigInt pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

class Rational {
    BigInt num_{0};
    BigInt den_{1};

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = gcd(num_, den_);
        if (g != 1) {
            mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
            mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
        }
    }

public:
    Rational() = default;
    Rational(long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    /// Accepts "p" or "p/q".
    static Rational parse(std::string_view text) {
        auto slash = text.find('/');
        if (slash == std::string_view::npos) return Rational(parse_bigint(text));
        return Rational(parse_bigint(text.substr(0, slash)), parse_bigint(text.substr(slash + 1)));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return sgn(num_); }

    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return {x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_};
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return {x.num_ * y.num_, x.den_ * y.den_};
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.is_zero()) throw std::domain_error("rational division by zero");
        return {x.num_ * y.den_, x.den_ * y.num_};
    }
    Rational& operator+=(const Rational& y) { return *this = *this + y; }
    Rational& operator-=(const Rational& y) { return *this = *this - y; }
    Rational& operator*=(const Rational& y) { return *this = *this * y; }
    Rational& operator/=(const Rational& y) { return *this = *this / y; }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
        int c = cmp(x.num_ * y.den_, y.num_ * x.den_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    std::string str() const { return is_integer() ? to_string(num_) : to_string(num_) + "/" + to_string(den_); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }
};

/// Element p + q*sqrt(D) of Q(sqrt(D)).
class ExactQuad {
    Rational p_;
    Rational q_;
    long d_ = 5;

    static bool square_free(long d) {
        if (d < 2) return false;
        for (long f = 2; f * f <= d; ++f)
            if (d % (f * f) == 0) return false;
        return true;
    }

    void require_same_field(const ExactQuad& y) const {
        if (d_ != y.d_)
            throw std::domain_error("mixed quadratic fields: sqrt(" + std::to_string(d_) + ") vs sqrt(" +
                                    std::to_string(y.d_) + ")");
    }

public:
    ExactQuad(Rational p, Rational q, long d) : p_(std::move(p)), q_(std::move(q)), d_(d) {
        if (!square_free(d)) throw std::domain_error("D must be a square-free integer >= 2, got " + std::to_string(d));
    }

    static ExactQuad rational(Rational p, long d) { return {std::move(p), Rational(0), d}; }
    static ExactQuad one(long d) { return rational(Rational(1), d); }
    static ExactQuad sqrt_d(long d) { return {Rational(0), Rational(1), d}; }

    const Rational& p() const { return p_; }
    const Rational& q() const { return q_; }
    long d() const { return d_; }

    ExactQuad conj() const { return {p_, -q_, d_}; }
    /// x * conj(x), always rational.
    Rational norm() const { return p_ * p_ - q_ * q_ * Rational(d_); }

    ExactQuad operator-() const { return {-p_, -q_, d_}; }

    friend ExactQuad operator+(const ExactQuad& x, const ExactQuad& y) {
        x.require_same_field(y);
        return {x.p_ + y.p_, x.q_ + y.q_, x.d_};
    }
    friend ExactQuad operator-(const ExactQuad& x, const ExactQuad& y) {
        x.require_same_field(y);
        return {x.p_ - y.p_, x.q_ - y.q_, x.d_};
    }
    friend ExactQuad operator*(const ExactQuad& x, const ExactQuad& y) {
        x.require_same_field(y);
        return {x.p_ * y.p_ + x.q_ * y.q_ * Rational(x.d_), x.p_ * y.q_ + y.p_ * x.q_, x.d_};
    }
    friend ExactQuad operator/(const ExactQuad& x, const ExactQuad& y) {
        x.require_same_field(y);
        Rational n = y.norm();
        if (n.is_zero()) throw std::domain_error("quadratic division by zero");
        ExactQuad t = x * y.conj();
        return {t.p_ / n, t.q_ / n, x.d_};
    }

    friend bool operator==(const ExactQuad& x, const ExactQuad& y) {
        return x.d_ == y.d_ && x.p_ == y.p_ && x.q_ == y.q_;
    }

    std::string str() const { return p_.str() + " + " + q_.str() + "*sqrt(" + std::to_string(d_) + ")"; }
    friend std::ostream& operator<<(std::ostream& os, const ExactQuad& x) { return os << x.str(); }
};

inline ExactQuad quad_add(const ExactQuad& x, const ExactQuad& y) { return x + y; }
inline ExactQuad quad_mul(const ExactQuad& x, const ExactQuad& y) { return x * y; }

inline ExactQuad quad_pow(ExactQuad base, std::uint64_t n) {
    ExactQuad acc = ExactQuad::one(base.d());
    while (n != 0) {
        if (n & 1U) acc = acc * base;
        n >>= 1U;
        if (n != 0) base = base * base;
    }
    return acc;
}

/// The rational value of x, or nullopt when the sqrt(D) part is nonzero.
inline std::optional<Rational> rational_part(const ExactQuad& x) {
    if (!x.q().is_zero()) return std::nullopt;
    return x.p();
}

}  // namespace vieta
