#pragma once

/**
 * @file sequences.hpp
 * @brief Fibonacci, Lucas and the two solution chains, with exact Binet forms.
 *
 * Terms are produced by their linear recurrences:
 *
 *   F_{-1} = 1, F_0 = 0,  F_n = F_{n-1} + F_{n-2}
 *   L_0 = 2,  L_1 = 1,    L_n = L_{n-1} + L_{n-2}
 *   a_0 = a_1 = 2,        a_n = 3 a_{n-1} - a_{n-2} - 1     (k = 3 chain)
 *   b_0 = b_1 = 1,        b_n = 4 b_{n-1} - b_{n-2} - 1     (k = 4 chain)
 *   d_n = gcd(x_n, x_{n+1}) for x = a or b
 *
 * Closed forms A alpha^n + B beta^n + delta are kept for verification only;
 * they are evaluated in Q(sqrt 5) or Q(sqrt 3) without rounding.
 */

#include "vieta/check.hpp"
#include "vieta/exactnum.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vieta {

enum class SequenceId { fibonacci, lucas, a_chain, b_chain, d_of_a, d_of_b };

inline const char* to_string(SequenceId id) {
    switch (id) {
        case SequenceId::fibonacci: return "fibonacci";
        case SequenceId::lucas: return "lucas";
        case SequenceId::a_chain: return "a_chain";
        case SequenceId::b_chain: return "b_chain";
        case SequenceId::d_of_a: return "d_of_a";
        case SequenceId::d_of_b: return "d_of_b";
    }
    return "?";
}

inline std::optional<SequenceId> parse_sequence_id(std::string_view name) {
    for (auto id : {SequenceId::fibonacci, SequenceId::lucas, SequenceId::a_chain, SequenceId::b_chain,
                    SequenceId::d_of_a, SequenceId::d_of_b})
        if (name == to_string(id)) return id;
    return std::nullopt;
}

/// Smallest valid index of a sequence.
inline long first_index(SequenceId id) { return id == SequenceId::fibonacci ? -1 : 0; }

namespace detail {

struct Recurrence {
    BigInt x0, x1;  // first two terms
    long mult;      // x_n = mult * x_{n-1} - sign * x_{n-2} + add
    long sign;
    long add;
};

inline Recurrence recurrence_of(SequenceId id) {
    switch (id) {
        case SequenceId::fibonacci: return {1, 0, 1, -1, 0};
        case SequenceId::lucas: return {2, 1, 1, -1, 0};
        case SequenceId::a_chain: return {2, 2, 3, 1, -1};
        case SequenceId::b_chain: return {1, 1, 4, 1, -1};
        default: throw std::domain_error(std::string("no linear recurrence for ") + to_string(id));
    }
}

inline void extend_recurrence(const Recurrence& rec, std::vector<BigInt>& terms, std::size_t count) {
    if (terms.empty() && count > 0) terms.push_back(rec.x0);
    if (terms.size() == 1 && count > 1) terms.push_back(rec.x1);
    terms.reserve(count);
    while (terms.size() < count) {
        const BigInt& p1 = terms[terms.size() - 1];
        const BigInt& p2 = terms[terms.size() - 2];
        terms.push_back(rec.mult * p1 - rec.sign * p2 + rec.add);
    }
}

}  // namespace detail

/// Immutable prefix of a sequence; indices first_index() .. first_index() + size() - 1.
/// extend() never touches the receiver, it returns a longer snapshot.
class SequenceSnapshot {
    SequenceId id_;
    std::shared_ptr<const std::vector<BigInt>> terms_;

    SequenceSnapshot(SequenceId id, std::vector<BigInt> terms)
        : id_(id), terms_(std::make_shared<const std::vector<BigInt>>(std::move(terms))) {}

    static std::vector<BigInt> build(SequenceId id, std::vector<BigInt> prefix, std::size_t count) {
        if (id == SequenceId::d_of_a || id == SequenceId::d_of_b) {
            auto chain = id == SequenceId::d_of_a ? SequenceId::a_chain : SequenceId::b_chain;
            std::vector<BigInt> xs;
            detail::extend_recurrence(detail::recurrence_of(chain), xs, count + 1);
            prefix.reserve(count);
            for (std::size_t n = prefix.size(); n < count; ++n) prefix.push_back(gcd(xs[n], xs[n + 1]));
            return prefix;
        }
        detail::extend_recurrence(detail::recurrence_of(id), prefix, count);
        return prefix;
    }

public:
    /// Terms with indices first_index(id) .. last_index.
    static SequenceSnapshot generate(SequenceId id, long last_index) {
        long count = last_index - first_index(id) + 1;
        return {id, build(id, {}, count > 0 ? static_cast<std::size_t>(count) : 0)};
    }

    SequenceSnapshot extend(long last_index) const {
        long count = last_index - first_index(id_) + 1;
        if (count <= static_cast<long>(terms_->size())) return *this;
        return {id_, build(id_, *terms_, static_cast<std::size_t>(count))};
    }

    SequenceId id() const { return id_; }
    std::size_t size() const { return terms_->size(); }
    long last_index() const { return first_index(id_) + static_cast<long>(terms_->size()) - 1; }
    const std::vector<BigInt>& terms() const { return *terms_; }

    const BigInt& operator[](long n) const { return (*terms_)[static_cast<std::size_t>(n - first_index(id_))]; }
    const BigInt& at(long n) const {
        if (n < first_index(id_) || n > last_index())
            throw std::out_of_range(std::string(to_string(id_)) + " index " + std::to_string(n) + " outside snapshot");
        return (*this)[n];
    }
};

namespace detail {
inline BigInt nth_term(SequenceId id, long n) {
    if (n < first_index(id))
        throw std::domain_error(std::string(to_string(id)) + " is undefined at index " + std::to_string(n));
    return SequenceSnapshot::generate(id, n)[n];
}
}  // namespace detail

inline BigInt fib(long n) { return detail::nth_term(SequenceId::fibonacci, n); }
inline BigInt lucas(long n) { return detail::nth_term(SequenceId::lucas, n); }
inline BigInt a_chain(long n) { return detail::nth_term(SequenceId::a_chain, n); }
inline BigInt b_chain(long n) { return detail::nth_term(SequenceId::b_chain, n); }

/// Raised when a closed form leaves an irrational or fractional residue.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// A alpha^n + B beta^n + delta with conjugate quadratic roots.
struct BinetForm {
    ExactQuad coeff_plus;
    ExactQuad coeff_minus;
    ExactQuad root_plus;
    ExactQuad root_minus;
    Rational shift;

    bool conjugate_roots() const { return rational_part(root_plus * root_minus).has_value(); }

    ExactQuad evaluate(std::uint64_t n) const {
        return coeff_plus * quad_pow(root_plus, n) + coeff_minus * quad_pow(root_minus, n) +
               ExactQuad::rational(shift, root_plus.d());
    }

    std::string str() const {
        return "A = " + coeff_plus.str() + "\nB = " + coeff_minus.str() + "\nalpha = " + root_plus.str() +
               "\nbeta = " + root_minus.str() + "\ndelta = " + shift.str();
    }
};

/// Which subsequence of a d-sequence a closed form describes: `odd` evaluated
/// at n gives d_{2n-1}, `even` gives d_{2n}. Other sequences use `whole`.
enum class Branch { whole, odd, even };

inline BinetForm closed_form(SequenceId id, Branch branch = Branch::whole) {
    const bool split = id == SequenceId::d_of_a || id == SequenceId::d_of_b;
    if (split == (branch == Branch::whole))
        throw std::domain_error(std::string("no closed form for ") + to_string(id) +
                                (split ? " without an odd/even branch" : " with an odd/even branch"));

    const auto q5 = [](long p_num, long p_den, long q_num, long q_den) {
        return ExactQuad(Rational(p_num, p_den), Rational(q_num, q_den), 5);
    };
    const auto q3 = [](long p_num, long p_den, long q_num, long q_den) {
        return ExactQuad(Rational(p_num, p_den), Rational(q_num, q_den), 3);
    };
    const ExactQuad sqrt5 = ExactQuad::sqrt_d(5);
    const ExactQuad phi = q5(1, 2, 1, 2);
    const ExactQuad psi = q5(1, 2, -1, 2);
    const ExactQuad alpha5 = q5(3, 2, 1, 2);  // roots of x^2 - 3x + 1
    const ExactQuad beta5 = q5(3, 2, -1, 2);
    const ExactQuad alpha3 = q3(2, 1, 1, 1);  // roots of x^2 - 4x + 1
    const ExactQuad beta3 = q3(2, 1, -1, 1);
    // (-1 + sqrt5)/(2 sqrt5) and (1 + sqrt5)/(2 sqrt5)
    const ExactQuad a_plus = q5(-1, 1, 1, 1) / (q5(2, 1, 0, 1) * sqrt5);
    const ExactQuad a_minus = q5(1, 1, 1, 1) / (q5(2, 1, 0, 1) * sqrt5);

    switch (id) {
        case SequenceId::fibonacci:
            return {ExactQuad::one(5) / sqrt5, -(ExactQuad::one(5) / sqrt5), phi, psi, Rational(0)};
        case SequenceId::lucas: return {ExactQuad::one(5), ExactQuad::one(5), phi, psi, Rational(0)};
        case SequenceId::a_chain: return {a_plus, a_minus, alpha5, beta5, Rational(1)};
        case SequenceId::b_chain: return {q3(1, 4, -1, 12), q3(1, 4, 1, 12), alpha3, beta3, Rational(1, 2)};
        case SequenceId::d_of_a:
            if (branch == Branch::odd) return {a_plus, a_minus, alpha5, beta5, Rational(0)};  // F_{2n-1}
            return {ExactQuad::one(5), ExactQuad::one(5), alpha5, beta5, Rational(0)};        // L_{2n}
        case SequenceId::d_of_b:
            if (branch == Branch::odd) return {q3(1, 2, -1, 6), q3(1, 2, 1, 6), alpha3, beta3, Rational(0)};
            return {q3(1, 2, 0, 1), q3(1, 2, 0, 1), alpha3, beta3, Rational(0)};
    }
    throw std::domain_error("unknown sequence id");
}

inline BigInt eval_binet(const BinetForm& form, std::uint64_t n) {
    ExactQuad v = form.evaluate(n);
    auto rat = rational_part(v);
    if (!rat) throw ConsistencyError("Binet form leaves irrational residue at n = " + std::to_string(n) + ": " + v.str());
    if (!rat->is_integer())
        throw ConsistencyError("Binet form is not integral at n = " + std::to_string(n) + ": " + rat->str());
    return rat->num();
}

/// Fibonacci/Lucas identities and their consequences for the k = 3 chain,
/// each checked exactly for 1 <= n <= n_max.
inline std::vector<CheckResult> identity_suite(long n_max) {
    if (n_max < 2) throw std::domain_error("identity_suite requires n_max >= 2");
    auto F = SequenceSnapshot::generate(SequenceId::fibonacci, 4 * n_max);
    auto L = SequenceSnapshot::generate(SequenceId::lucas, 2 * n_max);
    auto a = SequenceSnapshot::generate(SequenceId::a_chain, 2 * n_max);

    std::vector<CheckResult> out(8);
    out[0].name = "F(2n-1) = F(n)^2 + F(n-1)^2";
    out[1].name = "F(n+1)F(n-1) - F(n)^2 = (-1)^n";
    out[2].name = "L(n) = F(n-1) + F(n+1)";
    out[3].name = "F(4n-1) = F(2n-1)L(2n) - 1";
    out[4].name = "F(4n-3) = F(2n-1)L(2n-2) - 1";
    out[5].name = "a(2n) = F(2n-1)L(2n)";
    out[6].name = "a(2n-1) = F(2n-1)L(2n-2)";
    out[7].name = "a(n) = F(2n-1) + 1";

    for (long n = 1; n <= n_max; ++n) {
        const BigInt sign = n % 2 == 0 ? 1 : -1;
        if (F[2 * n - 1] != F[n] * F[n] + F[n - 1] * F[n - 1]) out[0].fail_at(n, "");
        if (F[n + 1] * F[n - 1] - F[n] * F[n] != sign) out[1].fail_at(n, "");
        if (L[n] != F[n - 1] + F[n + 1]) out[2].fail_at(n, "");
        if (F[4 * n - 1] != F[2 * n - 1] * L[2 * n] - 1) out[3].fail_at(n, "");
        if (F[4 * n - 3] != F[2 * n - 1] * L[2 * n - 2] - 1) out[4].fail_at(n, "");
        if (a[2 * n] != F[2 * n - 1] * L[2 * n]) out[5].fail_at(n, "");
        if (a[2 * n - 1] != F[2 * n - 1] * L[2 * n - 2]) out[6].fail_at(n, "");
        if (a[n] != F[2 * n - 1] + 1) out[7].fail_at(n, "");
    }
    for (auto& c : out)
        if (!c.pass) c.detail = "identity fails at n = " + std::to_string(*c.first_violation);
    return out;
}

}  // namespace vieta
