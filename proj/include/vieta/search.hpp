#pragma once

/**
 * @file search.hpp
 * @brief Brute-force solution oracles.
 *
 * brute_pairs scans the box 1 <= a, b <= B for the two-variable equation;
 * brute_tuples scans all positive m-tuples with coordinate sum <= S, shell by
 * shell, for the cyclic equation sum_i (x_i + r)/x_{i+1} = k.
 *
 * The inner loops test integrality with cleared denominators in machine
 * integers (64-bit, 128-bit, or GMP when the bound demands it). Every hit is
 * re-verified with exact rationals before it is reported. Work is split by
 * the residue class of the first coordinate modulo the thread count and the
 * merged result is sorted by (k, coordinate sum, lexicographic), so output
 * does not depend on the number of threads.
 */

#include "vieta/check.hpp"
#include "vieta/exactnum.hpp"
#include "vieta/vieta_core.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace vieta {

using Tuple = std::vector<std::int64_t>;

struct SearchBox {
    std::int64_t r = 1;
    int m = 2;
    std::int64_t bound = 0;      // coordinate bound B, m = 2
    std::int64_t sum_bound = 0;  // coordinate-sum bound S, m >= 3
    std::optional<std::int64_t> k;
    int threads = 1;

    void validate() const {
        if (r < 1) throw std::domain_error("search: r must be >= 1");
        if (m < 2) throw std::domain_error("search: m must be >= 2");
        if (threads < 1) throw std::domain_error("search: threads must be >= 1");
        if (m == 2 && bound < 1) throw std::domain_error("search: bound must be >= 1");
        if (m >= 3 && sum_bound < m) throw std::domain_error("search: sum bound must be >= m");
        // keeps a^2 + r a + b^2 + r b inside int64
        if (m == 2 && (bound > 1'000'000'000 || r > 1'000'000'000))
            throw std::domain_error("search: bound and r are limited to 1e9 for pair search");
    }
};

struct KGroup {
    std::int64_t k = 0;
    std::vector<Tuple> solutions;   // sorted by (sum, lexicographic)
    std::int64_t minimal_sum = 0;
    std::vector<Tuple> minimal;     // all solutions attaining minimal_sum
};

struct SearchReport {
    SearchBox box;
    std::vector<KGroup> groups;     // sorted by k
    std::uint64_t candidates = 0;
    double wall_seconds = 0.0;
    bool verified = true;           // every hit re-verified exactly
    std::vector<std::string> verification_failures;

    std::set<std::int64_t> k_values() const {
        std::set<std::int64_t> ks;
        for (const auto& g : groups) ks.insert(g.k);
        return ks;
    }
    const KGroup* group(std::int64_t k) const {
        for (const auto& g : groups)
            if (g.k == k) return &g;
        return nullptr;
    }
    std::size_t solution_count() const {
        std::size_t n = 0;
        for (const auto& g : groups) n += g.solutions.size();
        return n;
    }
};

inline std::int64_t tuple_sum(const Tuple& t) { return std::accumulate(t.begin(), t.end(), std::int64_t{0}); }

/// Exact rational evaluation of the cyclic sum against k.
inline bool verify_tuple(const TupleSolution& t, const EquationSpec& spec) {
    if (t.size() != static_cast<std::size_t>(spec.m)) return false;
    return cyclic_sum(t, spec.r) == Rational(spec.k);
}

inline TupleSolution to_tuple_solution(const Tuple& t) {
    std::vector<Rational> e;
    e.reserve(t.size());
    for (auto x : t) e.emplace_back(BigInt(static_cast<long>(x)));
    return TupleSolution(std::move(e));
}

namespace detail {

struct Hit {
    std::int64_t k;
    Tuple t;
};

inline bool hit_order(const Hit& x, const Hit& y) {
    if (x.k != y.k) return x.k < y.k;
    auto sx = tuple_sum(x.t), sy = tuple_sum(y.t);
    if (sx != sy) return sx < sy;
    return x.t < y.t;
}

struct WorkerResult {
    std::vector<Hit> hits;
    std::uint64_t candidates = 0;
};

template <class Job>
std::vector<WorkerResult> run_partitioned(int threads, Job job) {
    std::vector<WorkerResult> results(static_cast<std::size_t>(threads));
    if (threads == 1) {
        results[0] = job(0, 1);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(results.size());
    for (int t = 0; t < threads; ++t)
        pool.emplace_back([&results, &job, t, threads] { results[static_cast<std::size_t>(t)] = job(t, threads); });
    for (auto& th : pool) th.join();
    return results;
}

inline void assemble(SearchReport& rep, std::vector<WorkerResult> parts,
                     const std::function<bool(const Hit&)>& reverify) {
    std::vector<Hit> hits;
    for (auto& p : parts) {
        rep.candidates += p.candidates;
        hits.insert(hits.end(), std::make_move_iterator(p.hits.begin()), std::make_move_iterator(p.hits.end()));
    }
    std::sort(hits.begin(), hits.end(), hit_order);
    for (auto& h : hits) {
        if (!reverify(h)) {
            rep.verified = false;
            std::string s = "k=" + std::to_string(h.k) + " (";
            for (std::size_t i = 0; i < h.t.size(); ++i) s += (i ? "," : "") + std::to_string(h.t[i]);
            rep.verification_failures.push_back(s + ")");
            continue;
        }
        if (rep.groups.empty() || rep.groups.back().k != h.k) {
            rep.groups.push_back(KGroup{h.k, {}, tuple_sum(h.t), {}});
        }
        auto& g = rep.groups.back();
        if (tuple_sum(h.t) == g.minimal_sum) g.minimal.push_back(h.t);
        g.solutions.push_back(std::move(h.t));
    }
}

// Cyclic kernel over one composition: numerator = sum_i (x_i + r) * prod_{j != i+1} x_j,
// denominator = prod_j x_j. Int must hold (S + r) * S^(m-1) * m without overflow.
template <class Int>
bool cyclic_integral(const Tuple& x, std::int64_t r, Int& k_out) {
    const std::size_t m = x.size();
    Int prod = 1;
    for (auto v : x) prod *= Int(v);
    Int num = 0;
    for (std::size_t i = 0; i < m; ++i) {
        Int v = Int(x[(i + 1) % m]);
        num += Int(x[i] + r) * (prod / v);
    }
    if (num % prod != 0) return false;
    k_out = num / prod;
    return true;
}

template <class Int>
WorkerResult tuples_worker(const SearchBox& box, int part, int parts) {
    WorkerResult out;
    const auto m = static_cast<std::size_t>(box.m);
    Tuple x(m, 1);
    // Only tuples whose first entry is minimal can be canonical rotations, so
    // positions 1..m-1 range over values >= x[0].
    std::function<void(std::size_t, std::int64_t)> fill = [&](std::size_t pos, std::int64_t rest) {
        if (pos == m - 1) {
            if (rest < x[0]) return;
            x[pos] = rest;
            ++out.candidates;
            Int k{};
            if (!cyclic_integral<Int>(x, box.r, k)) return;
            if (box.k && Int(*box.k) != k) return;
            if (canonical_rotation(x) != x) return;
            std::int64_t kk;
            if constexpr (std::is_same_v<Int, BigInt>) kk = k.get_si();
            else kk = static_cast<std::int64_t>(k);
            out.hits.push_back({kk, x});
            return;
        }
        const auto later_slots = static_cast<std::int64_t>(m - 1 - pos);
        for (std::int64_t v = x[0]; v + later_slots * x[0] <= rest; ++v) {
            x[pos] = v;
            fill(pos + 1, rest - v);
        }
    };
    for (std::int64_t s = box.m; s <= box.sum_bound; ++s) {
        for (std::int64_t first = 1; first * box.m <= s; ++first) {
            if (first % parts != part) continue;
            x[0] = first;
            fill(1, s - first);
        }
    }
    return out;
}

// Largest value the cleared-denominator numerator can reach, as a double.
inline double tuple_magnitude(const SearchBox& box) {
    double s = static_cast<double>(box.sum_bound);
    double mag = (s + static_cast<double>(box.r)) * static_cast<double>(box.m);
    for (int i = 0; i < box.m; ++i) mag *= s;
    return mag;
}

}  // namespace detail

inline SearchReport brute_pairs(const SearchBox& box) {
    box.validate();
    if (box.m != 2) throw std::domain_error("brute_pairs requires m = 2");
    const auto t0 = std::chrono::steady_clock::now();
    const std::int64_t B = box.bound;
    const std::int64_t r = box.r;

    auto parts = detail::run_partitioned(box.threads, [&](int part, int nparts) {
        detail::WorkerResult out;
        for (std::int64_t a = 1 + part; a <= B; a += nparts) {
            const std::int64_t ta = a * a + r * a;
            for (std::int64_t b = 1; b <= B; ++b) {
                ++out.candidates;
                const std::int64_t num = ta + b * b + r * b;
                const std::int64_t den = a * b;
                if (num % den != 0) continue;
                const std::int64_t k = num / den;
                if (box.k && *box.k != k) continue;
                out.hits.push_back({k, {a, b}});
            }
        }
        return out;
    });

    SearchReport rep;
    rep.box = box;
    detail::assemble(rep, std::move(parts), [&](const detail::Hit& h) {
        PairSolution p(BigInt(static_cast<long>(h.t[0])), BigInt(static_cast<long>(h.t[1])));
        return eval_k(p, BigInt(static_cast<long>(r))) == Rational(BigInt(static_cast<long>(h.k)));
    });
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline SearchReport brute_tuples(const SearchBox& box) {
    box.validate();
    if (box.m < 3) throw std::domain_error("brute_tuples requires m >= 3");
    const auto t0 = std::chrono::steady_clock::now();
    const double mag = detail::tuple_magnitude(box);

    std::vector<detail::WorkerResult> parts;
    if (mag < 9.0e18) {
        parts = detail::run_partitioned(
            box.threads, [&](int p, int n) { return detail::tuples_worker<std::int64_t>(box, p, n); });
    } else if (mag < 1.7e38) {
        parts = detail::run_partitioned(
            box.threads, [&](int p, int n) { return detail::tuples_worker<__int128>(box, p, n); });
    } else {
        parts = detail::run_partitioned(
            box.threads, [&](int p, int n) { return detail::tuples_worker<BigInt>(box, p, n); });
    }

    SearchReport rep;
    rep.box = box;
    const EquationSpec base(BigInt(static_cast<long>(box.r)), 0, box.m);
    detail::assemble(rep, std::move(parts), [&](const detail::Hit& h) {
        EquationSpec spec(base.r, BigInt(static_cast<long>(h.k)), box.m);
        return verify_tuple(to_tuple_solution(h.t), spec);
    });
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

inline SearchReport search(const SearchBox& box) { return box.m == 2 ? brute_pairs(box) : brute_tuples(box); }

struct CoverageGroup {
    std::int64_t k = 0;
    std::size_t found = 0;
    std::size_t chain = 0;
    std::vector<Tuple> missing;  // chain pairs inside the box that search did not find
    std::vector<Tuple> extra;    // found pairs that are not chain pairs
};

struct CoverageReport {
    std::int64_t bound = 0;
    std::vector<CoverageGroup> groups;
    std::vector<std::int64_t> unexpected_k;  // k with solutions but no diagonal seed
    bool pass = true;
};

/// Every pair found by brute force in the box lies on the ascent chain (or
/// its flip) from the diagonal solution with the same k, and vice versa.
inline CoverageReport chain_coverage_check(const SearchBox& box) {
    if (box.m != 2 || box.r != 1) throw std::domain_error("chain_coverage_check requires m = 2 and r = 1");
    SearchReport found = brute_pairs(box);
    const BigInt B = BigInt(static_cast<long>(box.bound));

    CoverageReport rep;
    rep.bound = box.bound;
    std::map<std::int64_t, std::set<Tuple>> chains;
    for (const auto& diag : diagonal_solutions(1)) {
        const std::int64_t k = diag.k.get_si();
        if (box.k && *box.k != k) continue;
        auto& set = chains[k];
        EquationSpec spec(1, diag.k);
        PairSolution cur(diag.u, diag.u);
        if (cur.a <= B) set.insert({cur.a.get_si(), cur.b.get_si()});
        while (true) {
            cur = ascend(cur.a >= cur.b ? cur : flip(cur), 1, spec).front();
            if (cur.a > B) break;
            if (cur.b <= B) {
                set.insert({cur.a.get_si(), cur.b.get_si()});
                set.insert({cur.b.get_si(), cur.a.get_si()});
            }
            cur = flip(cur);
        }
    }
    for (const auto& g : found.groups)
        if (!chains.count(g.k)) rep.unexpected_k.push_back(g.k);
    for (auto& [k, set] : chains) {
        CoverageGroup cg;
        cg.k = k;
        cg.chain = set.size();
        std::set<Tuple> got;
        if (const KGroup* g = found.group(k)) got.insert(g->solutions.begin(), g->solutions.end());
        cg.found = got.size();
        std::set_difference(set.begin(), set.end(), got.begin(), got.end(), std::back_inserter(cg.missing));
        std::set_difference(got.begin(), got.end(), set.begin(), set.end(), std::back_inserter(cg.extra));
        rep.pass = rep.pass && cg.missing.empty() && cg.extra.empty();
        rep.groups.push_back(std::move(cg));
    }
    rep.pass = rep.pass && rep.unexpected_k.empty() && found.verified;
    return rep;
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::json to_json(const SearchReport& rep) {
    nlohmann::json spec{{"r", rep.box.r}, {"m", rep.box.m}};
    spec["k"] = rep.box.k ? nlohmann::json(*rep.box.k) : nlohmann::json(nullptr);
    if (rep.box.m == 2) spec["bound"] = rep.box.bound;
    else spec["sum_bound"] = rep.box.sum_bound;

    nlohmann::json groups = nlohmann::json::array();
    for (const auto& g : rep.groups) {
        groups.push_back({{"k", g.k},
                          {"count", g.solutions.size()},
                          {"minimal_sum", g.minimal_sum},
                          {"minimal", g.minimal},
                          {"solutions", g.solutions}});
    }
    return {{"spec", spec},
            {"candidates", rep.candidates},
            {"verified", rep.verified},
            {"verification_failures", rep.verification_failures},
            {"k_values", rep.k_values()},
            {"groups", groups}};
}

}  // namespace vieta
