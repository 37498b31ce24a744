#pragma once

// Executable checkers for the gcd structure of the k = 3 and k = 4 chains,
// the normalized sums (a + b)/gcd(a, b)^2, and the r = 2 value-set
// conjecture. All comparisons are exact.

#include "vieta/check.hpp"
#include "vieta/exactnum.hpp"
#include "vieta/sequences.hpp"
#include "vieta/vieta_core.hpp"

#include <nlohmann/json.hpp>

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace vieta {

namespace detail {
inline SequenceId chain_d_id(SequenceId chain) {
    if (chain == SequenceId::a_chain) return SequenceId::d_of_a;
    if (chain == SequenceId::b_chain) return SequenceId::d_of_b;
    throw std::domain_error(std::string("gcd structure is defined for a_chain and b_chain, not ") + to_string(chain));
}
}  // namespace detail

struct GcdProfile {
    SequenceId chain = SequenceId::a_chain;
    long n_max = 0;
    std::vector<BigInt> d;                 // d_n = gcd(x_n, x_{n+1}), n = 0..n_max
    std::vector<BigInt> normalized_sums;   // (x_n + x_{n+1}) / d_n^2, n = 0..n_max
    std::vector<CheckResult> checks;

    bool pass() const { return all_pass(checks); }
};

/// Raised by normalized_sum when gcd^2 does not divide a + b.
class NotIntegral : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// (a + b) / gcd(a, b)^2, which is integral for every solution with r = 1.
inline BigInt normalized_sum(const PairSolution& p) {
    BigInt g = gcd(p.a, p.b);
    BigInt g2 = g * g;
    BigInt s = p.a + p.b;
    if (!divides(g2, s)) throw NotIntegral("gcd^2 does not divide a + b for " + p.str());
    return s / g2;
}

inline GcdProfile gcd_profile(SequenceId chain, long n_max) {
    if (n_max < 2) throw std::domain_error("gcd_profile requires n_max >= 2");
    const SequenceId d_id = detail::chain_d_id(chain);
    auto x = SequenceSnapshot::generate(chain, n_max + 1);
    auto d = SequenceSnapshot::generate(d_id, n_max);

    GcdProfile out;
    out.chain = chain;
    out.n_max = n_max;
    out.d = d.terms();

    CheckResult odd, even, telescoping, integrality;
    integrality.name = "gcd(x_n, x_{n+1})^2 divides x_n + x_{n+1}";
    for (long n = 0; n <= n_max; ++n) {
        BigInt g2 = d[n] * d[n];
        BigInt s = x[n] + x[n + 1];
        if (!divides(g2, s)) integrality.fail_at(n, "gcd^2 does not divide the pair sum");
        out.normalized_sums.push_back(divides(g2, s) ? BigInt(s / g2) : BigInt(0));
    }
    telescoping.name = "(x_{n-1} + x_n)/d_{n-1}^2 = (d_{n-2} + d_n)/d_{n-1}";
    if (chain == SequenceId::a_chain) {
        odd.name = "d(2n-1) = F(2n-1)";
        even.name = "d(2n) = L(2n)";
        auto F = SequenceSnapshot::generate(SequenceId::fibonacci, n_max);
        auto L = SequenceSnapshot::generate(SequenceId::lucas, n_max);
        for (long n = 1; 2 * n - 1 <= n_max; ++n)
            if (d[2 * n - 1] != F[2 * n - 1]) odd.fail_at(n, "d(2n-1) != F(2n-1)");
        for (long n = 1; 2 * n <= n_max; ++n)
            if (d[2 * n] != L[2 * n]) even.fail_at(n, "d(2n) != L(2n)");
    } else {
        odd.name = "d(2n-1) = (3-sqrt3)/6 alpha^n + (3+sqrt3)/6 beta^n";
        even.name = "d(2n) = (alpha^n + beta^n)/2";
        const BinetForm odd_form = closed_form(d_id, Branch::odd);
        const BinetForm even_form = closed_form(d_id, Branch::even);
        for (long n = 1; 2 * n - 1 <= n_max; ++n)
            if (d[2 * n - 1] != eval_binet(odd_form, static_cast<std::uint64_t>(n)))
                odd.fail_at(n, "d(2n-1) differs from closed form");
        for (long n = 1; 2 * n <= n_max; ++n)
            if (d[2 * n] != eval_binet(even_form, static_cast<std::uint64_t>(n)))
                even.fail_at(n, "d(2n) differs from closed form");
    }
    for (long n = 2; n <= n_max; ++n) {
        Rational lhs(x[n - 1] + x[n], d[n - 1] * d[n - 1]);
        Rational rhs(d[n - 2] + d[n], d[n - 1]);
        if (lhs != rhs) telescoping.fail_at(n, lhs.str() + " != " + rhs.str());
    }
    out.checks = {odd, even, telescoping, integrality};
    return out;
}

/// x_{n+1} = d_n d_{n+1} for 1 <= n < n_max.
inline CheckResult product_identity(SequenceId chain, long n_max) {
    if (n_max < 2) throw std::domain_error("product_identity requires n_max >= 2");
    auto x = SequenceSnapshot::generate(chain, n_max);
    auto d = SequenceSnapshot::generate(detail::chain_d_id(chain), n_max);
    CheckResult c;
    c.name = std::string(to_string(chain)) + ": x(n+1) = d(n) d(n+1)";
    for (long n = 1; n < n_max; ++n)
        if (x[n + 1] != d[n] * d[n + 1])
            c.fail_at(n, to_string(x[n + 1]) + " != " + to_string(d[n]) + " * " + to_string(d[n + 1]));
    return c;
}

enum class ValueSetStatus { pass, partial, fail, counterexample_candidate };

inline const char* to_string(ValueSetStatus s) {
    switch (s) {
        case ValueSetStatus::pass: return "pass";
        case ValueSetStatus::partial: return "partial";
        case ValueSetStatus::fail: return "fail";
        case ValueSetStatus::counterexample_candidate: return "counterexample-candidate";
    }
    return "?";
}

struct ValueSetReport {
    BigInt r;
    BigInt k;
    long n_max = 0;
    std::set<BigInt> observed;
    std::set<BigInt> expected;
    std::vector<BigInt> values;  // value per pair index 1..n_max
    std::optional<BigInt> seam_value;  // the (x_0, x_1) pair, kept apart from the indexed run
    ValueSetStatus status = ValueSetStatus::pass;
    std::optional<long> first_violation;
};

namespace detail {
inline void settle_status(ValueSetReport& rep, ValueSetStatus on_violation) {
    if (rep.first_violation) {
        rep.status = on_violation;
        return;
    }
    rep.status = rep.observed == rep.expected ? ValueSetStatus::pass : ValueSetStatus::partial;
}
}  // namespace detail

/// Normalized sums along the r = 1 chain for k = 3 (5 on odd pair indices,
/// 1 on even) or k = 4 (3 on odd, 2 on even), pair n = (x_n, x_{n+1}).
inline ValueSetReport value_set_check(const EquationSpec& spec, long n_max) {
    if (spec.r != 1 || (spec.k != 3 && spec.k != 4))
        throw std::domain_error("value_set_check covers r = 1 with k in {3, 4}");
    const bool k3 = spec.k == 3;
    const BigInt odd_value = k3 ? 5 : 3;
    const BigInt even_value = k3 ? 1 : 2;
    auto x = SequenceSnapshot::generate(k3 ? SequenceId::a_chain : SequenceId::b_chain, n_max + 1);

    ValueSetReport rep;
    rep.r = spec.r;
    rep.k = spec.k;
    rep.n_max = n_max;
    rep.expected = {odd_value, even_value};
    rep.seam_value = normalized_sum({x[0], x[1]});
    for (long n = 1; n <= n_max; ++n) {
        BigInt v = normalized_sum({x[n], x[n + 1]});
        if (v != (n % 2 == 1 ? odd_value : even_value) && !rep.first_violation) rep.first_violation = n;
        rep.observed.insert(v);
        rep.values.push_back(std::move(v));
    }
    detail::settle_status(rep, ValueSetStatus::fail);
    return rep;
}

/// 2(a + b)/gcd(a, b)^2 along the r = 2 chains grown from each diagonal
/// solution, pairs 0..n_max with pair 0 the diagonal seed. Expected sets are
/// {1, 5} for k = 3, {2, 3} for k = 4, {4, 8} for k = 6. A miss is reported
/// as a counterexample candidate.
inline std::vector<ValueSetReport> conjecture_r2_check(long n_max) {
    const BigInt r = 2;
    std::vector<ValueSetReport> out;
    for (const auto& diag : diagonal_solutions(r)) {
        ValueSetReport rep;
        rep.r = r;
        rep.k = diag.k;
        rep.n_max = n_max;
        if (diag.k == 3) rep.expected = {1, 5};
        else if (diag.k == 4) rep.expected = {2, 3};
        else if (diag.k == 6) rep.expected = {4, 8};

        EquationSpec spec(r, diag.k);
        std::vector<PairSolution> pairs{PairSolution(diag.u, diag.u)};
        auto up = ascend(pairs.front(), static_cast<std::size_t>(n_max), spec);
        pairs.insert(pairs.end(), up.begin(), up.end());
        for (std::size_t n = 0; n < pairs.size(); ++n) {
            const auto& p = pairs[n];
            BigInt g = gcd(p.a, p.b);
            Rational v(2 * (p.a + p.b), g * g);
            BigInt value = v.is_integer() ? v.num() : BigInt(-1);
            bool ok = v.is_integer() && rep.expected.count(value) != 0;
            if (!ok && !rep.first_violation) rep.first_violation = static_cast<long>(n);
            rep.observed.insert(value);
            rep.values.push_back(std::move(value));
        }
        detail::settle_status(rep, ValueSetStatus::counterexample_candidate);
        out.push_back(std::move(rep));
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const CheckResult& c) {
    nlohmann::json j{{"name", c.name}, {"pass", c.pass}};
    j["first_violation"] = c.first_violation ? nlohmann::json(*c.first_violation) : nlohmann::json(nullptr);
    if (!c.detail.empty()) j["detail"] = c.detail;
    return j;
}

inline nlohmann::json to_json(const std::set<BigInt>& values) {
    auto arr = nlohmann::json::array();
    for (const auto& v : values) arr.push_back(to_string(v));
    return arr;
}

/// {chain, n_max, checks: [...], observed_values}
inline nlohmann::json to_json(const GcdProfile& p) {
    nlohmann::json j;
    j["chain"] = to_string(p.chain);
    j["n_max"] = p.n_max;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : p.checks) j["checks"].push_back(to_json(c));
    std::set<BigInt> seen(p.normalized_sums.begin() + 1, p.normalized_sums.end());
    j["observed_values"] = to_json(seen);
    return j;
}

inline nlohmann::json to_json(const ValueSetReport& r) {
    nlohmann::json j{{"r", to_string(r.r)},
                     {"k", to_string(r.k)},
                     {"n_max", r.n_max},
                     {"status", to_string(r.status)},
                     {"observed_values", to_json(r.observed)},
                     {"expected_values", to_json(r.expected)}};
    j["first_violation"] = r.first_violation ? nlohmann::json(*r.first_violation) : nlohmann::json(nullptr);
    j["seam_value"] = r.seam_value ? nlohmann::json(to_string(*r.seam_value)) : nlohmann::json(nullptr);
    return j;
}

}  // namespace vieta
