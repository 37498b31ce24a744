#pragma once

// The cyclic equation sum_i (x_i + r) / x_{i+1} = k, its Vieta jumps, and
// descent/ascent along chains of solutions of the two-variable case
//
//     (a + r)/b + (b + r)/a = k   <=>   a^2 + r a + b^2 + r b = k a b.

#include "vieta/exactnum.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace vieta {

/// Raised when a jump is requested from a non-solution or would leave the
/// positive integers.
class InvalidJump : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct EquationSpec {
    BigInt r{1};
    BigInt k{3};
    int m = 2;

    EquationSpec() = default;
    EquationSpec(BigInt r_, BigInt k_, int m_ = 2) : r(std::move(r_)), k(std::move(k_)), m(m_) {
        if (r < 1) throw std::domain_error("shift r must be >= 1");
        if (m < 2) throw std::domain_error("variable count m must be >= 2");
    }

    friend bool operator==(const EquationSpec&, const EquationSpec&) = default;
};

struct PairSolution {
    BigInt a{1};
    BigInt b{1};

    PairSolution() = default;
    PairSolution(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a < 1 || b < 1) throw std::domain_error("pair coordinates must be positive");
    }

    BigInt sum() const { return a + b; }
    bool diagonal() const { return a == b; }
    std::string str() const { return "(" + to_string(a) + "," + to_string(b) + ")"; }

    friend bool operator==(const PairSolution& x, const PairSolution& y) { return x.a == y.a && x.b == y.b; }
    friend bool operator<(const PairSolution& x, const PairSolution& y) {
        int c = cmp(x.a, y.a);
        return c != 0 ? c < 0 : x.b < y.b;
    }
};

/// (a + r)/b + (b + r)/a as an exact rational.
inline Rational eval_k(const PairSolution& p, const BigInt& r) {
    return Rational(p.a + r, p.b) + Rational(p.b + r, p.a);
}

inline bool is_solution(const PairSolution& p, const EquationSpec& spec) {
    if (spec.m != 2) throw std::domain_error("is_solution requires a two-variable equation");
    return p.a * p.a + spec.r * p.a + p.b * p.b + spec.r * p.b == spec.k * p.a * p.b;
}

namespace detail {
inline void require_solution(const PairSolution& p, const EquationSpec& spec, const char* what) {
    if (!is_solution(p, spec))
        throw InvalidJump(std::string(what) + ": " + p.str() + " is not a solution (k = " + eval_k(p, spec.r).str() +
                          ", expected " + to_string(spec.k) + ")");
}
}  // namespace detail

/// (a, b) -> (k b - r - a, b)
inline PairSolution jump_left(const PairSolution& p, const EquationSpec& spec) {
    detail::require_solution(p, spec, "jump_left");
    BigInt other = spec.k * p.b - spec.r - p.a;
    if (other < 1) throw InvalidJump("jump_left produced non-positive coordinate " + to_string(other));
    return {std::move(other), p.b};
}

/// (a, b) -> (a, k a - r - b)
inline PairSolution jump_right(const PairSolution& p, const EquationSpec& spec) {
    detail::require_solution(p, spec, "jump_right");
    BigInt other = spec.k * p.a - spec.r - p.b;
    if (other < 1) throw InvalidJump("jump_right produced non-positive coordinate " + to_string(other));
    return {p.a, std::move(other)};
}

inline PairSolution flip(const PairSolution& p) { return {p.b, p.a}; }

enum class StepKind { jump_left, jump_right, flip };

inline const char* to_string(StepKind kind) {
    switch (kind) {
        case StepKind::jump_left: return "jump_left";
        case StepKind::jump_right: return "jump_right";
        case StepKind::flip: return "flip";
    }
    return "?";
}

struct JumpStep {
    StepKind kind;
    PairSolution before;
    PairSolution after;

    JumpStep(StepKind kind_, PairSolution before_, PairSolution after_, const EquationSpec& spec)
        : kind(kind_), before(std::move(before_)), after(std::move(after_)) {
        if (is_solution(before, spec) && !is_solution(after, spec))
            throw std::logic_error("jump step " + before.str() + " -> " + after.str() + " lost the solution property");
    }

    friend bool operator==(const JumpStep& x, const JumpStep& y) {
        return x.kind == y.kind && x.before == y.before && x.after == y.after;
    }
};

struct JumpTrace {
    EquationSpec spec;
    std::vector<JumpStep> steps;
    PairSolution terminal;

    std::size_t jump_count() const {
        return static_cast<std::size_t>(
            std::count_if(steps.begin(), steps.end(), [](const JumpStep& s) { return s.kind != StepKind::flip; }));
    }
};

/// Greedy descent could not make progress from `current`.
struct StallReport {
    EquationSpec spec;
    std::vector<JumpStep> steps;  // steps taken before the stall
    PairSolution current;
    std::vector<PairSolution> attempted;  // jump_left / jump_right results from `current`
};

namespace detail {

// Flip so the larger coordinate comes first, then jump it. Returns false if
// the jump does not strictly shrink the larger coordinate.
inline bool descend_round(PairSolution& cur, std::vector<JumpStep>& steps, const EquationSpec& spec) {
    if (cur.a < cur.b) {
        PairSolution f = flip(cur);
        steps.emplace_back(StepKind::flip, cur, f, spec);
        cur = std::move(f);
    }
    BigInt other = spec.k * cur.b - spec.r - cur.a;
    if (other < 1 || other >= cur.a) return false;
    PairSolution next{std::move(other), cur.b};
    steps.emplace_back(StepKind::jump_left, cur, next, spec);
    cur = std::move(next);
    return true;
}

}  // namespace detail

/// Same greedy strategy as descend(), valid for every r; stops with a
/// StallReport when no jump-plus-flip round strictly decreases the sum.
inline std::variant<JumpTrace, StallReport> try_descend(const PairSolution& start, const EquationSpec& spec) {
    detail::require_solution(start, spec, "descend");
    std::vector<JumpStep> steps;
    PairSolution cur = start;
    while (!cur.diagonal()) {
        if (!detail::descend_round(cur, steps, spec)) {
            std::vector<PairSolution> attempted;
            BigInt left = spec.k * cur.b - spec.r - cur.a;
            BigInt right = spec.k * cur.a - spec.r - cur.b;
            if (left >= 1) attempted.emplace_back(left, cur.b);
            if (right >= 1) attempted.emplace_back(cur.a, right);
            return StallReport{spec, std::move(steps), std::move(cur), std::move(attempted)};
        }
    }
    return JumpTrace{spec, std::move(steps), std::move(cur)};
}

/// Descent to a diagonal solution: flip if a < b, then jump the larger
/// coordinate, until a == b. Only r in {1, 2} is supported; the sum strictly
/// decreases on every jump there.
inline JumpTrace descend(const PairSolution& start, const EquationSpec& spec) {
    if (spec.r != 1 && spec.r != 2)
        throw std::domain_error("descend supports r in {1, 2}; use try_descend for r = " + to_string(spec.r));
    auto result = try_descend(start, spec);
    if (auto* stall = std::get_if<StallReport>(&result))
        throw std::logic_error("descent stalled at " + stall->current.str() + " for r = " + to_string(spec.r));
    return std::get<JumpTrace>(std::move(result));
}

/// `count` successive solutions obtained by jumping the smaller coordinate
/// upward. Each emitted pair is (x, k x - r - y) for the current (x, y), x >= y.
inline std::vector<PairSolution> ascend(const PairSolution& start, std::size_t count, const EquationSpec& spec) {
    if (!is_solution(start, spec)) throw InvalidJump("ascend: " + start.str() + " is not a solution");
    if (start.a < start.b) throw std::domain_error("ascend: start must satisfy a >= b");
    std::vector<PairSolution> out;
    out.reserve(count);
    BigInt x = start.a;
    BigInt y = start.b;
    for (std::size_t i = 0; i < count; ++i) {
        BigInt up = spec.k * x - spec.r - y;
        out.emplace_back(x, up);
        y = std::move(x);
        x = std::move(up);
    }
    return out;
}

struct DiagonalSolution {
    BigInt u;
    BigInt k;
    friend bool operator==(const DiagonalSolution&, const DiagonalSolution&) = default;
};

/// All (u, k) with (u, u) a solution: u = 2r/(k-2) over the divisors of 2r,
/// ordered by increasing k.
inline std::vector<DiagonalSolution> diagonal_solutions(const BigInt& r) {
    if (r < 1) throw std::domain_error("shift r must be >= 1");
    BigInt two_r = 2 * r;
    std::vector<DiagonalSolution> out;
    std::vector<BigInt> large;
    for (BigInt d = 1; d * d <= two_r; ++d) {
        if (!divides(d, two_r)) continue;
        BigInt q = two_r / d;
        out.push_back({q, d + 2});
        if (q != d) large.push_back(d);
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it) out.push_back({*it, two_r / *it + 2});
    return out;
}

/// m positive rationals, a candidate solution of the cyclic equation.
struct TupleSolution {
    std::vector<Rational> entries;

    TupleSolution() = default;
    explicit TupleSolution(std::vector<Rational> e) : entries(std::move(e)) {
        for (const auto& x : entries)
            if (x.sign() <= 0) throw std::domain_error("tuple entries must be positive");
    }

    std::size_t size() const { return entries.size(); }
    bool integral() const {
        return std::all_of(entries.begin(), entries.end(), [](const Rational& x) { return x.is_integer(); });
    }
    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < entries.size(); ++i) s += (i ? "," : "") + entries[i].str();
        return s + ")";
    }
    friend bool operator==(const TupleSolution&, const TupleSolution&) = default;
};

/// Exact value of sum_i (x_i + r)/x_{i+1}, indices mod m.
inline Rational cyclic_sum(const TupleSolution& t, const BigInt& r) {
    Rational total;
    const std::size_t m = t.size();
    for (std::size_t i = 0; i < m; ++i) total += (t.entries[i] + Rational(r)) / t.entries[(i + 1) % m];
    return total;
}

/// Rotation of t with the smallest first entry; ties go to the
/// lexicographically smallest rotation.
template <class T>
std::vector<T> canonical_rotation(const std::vector<T>& v) {
    std::vector<T> best = v;
    std::vector<T> rot = v;
    for (std::size_t i = 1; i < v.size(); ++i) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < best) best = rot;
    }
    return best;
}

/// Replaces the coordinate at `position` (1-based) by the other root of the
/// quadratic it satisfies when the rest are fixed:
///     x' = x_next * (k - rest) - r - x,   x * x' = (x_prev + r) * x_next
/// where rest is the sum of terms not involving x. For (a, b, c) and
/// position 1 this is a' = b (k - (b + r)/c) - r - a.
inline TupleSolution jump_three(const TupleSolution& t, int position, const EquationSpec& spec) {
    if (spec.m != 3 || t.size() != 3) throw std::domain_error("jump_three requires a three-variable equation");
    if (position < 1 || position > 3) throw std::domain_error("jump position must be 1, 2 or 3");
    for (const auto& x : t.entries)
        if (x.is_zero()) throw std::domain_error("zero coordinate");
    if (cyclic_sum(t, spec.r) != Rational(spec.k))
        throw InvalidJump("jump_three: " + t.str() + " is not a solution for k = " + to_string(spec.k));

    const auto i = static_cast<std::size_t>(position - 1);
    const Rational& x = t.entries[i];
    const Rational& next = t.entries[(i + 1) % 3];
    const Rational& after_next = t.entries[(i + 2) % 3];
    const Rational r(spec.r);
    Rational rest = (next + r) / after_next;
    Rational other = next * (Rational(spec.k) - rest) - r - x;
    if (other.sign() <= 0) throw InvalidJump("jump_three produced non-positive coordinate " + other.str());

    TupleSolution out = t;
    out.entries[i] = std::move(other);
    return out;
}

}  // namespace vieta
