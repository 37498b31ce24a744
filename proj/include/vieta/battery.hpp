#pragma once

// The full verification battery behind `vieta verify`: sequence tables,
// closed-form agreement, identities, gcd structure and normalized sums for
// the k = 3 and k = 4 chains. Checks run as independent tasks on a small
// thread pool; results are stored by task index so the report does not
// depend on the thread count.

#include "vieta/check.hpp"
#include "vieta/invariants.hpp"
#include "vieta/sequences.hpp"
#include "vieta/vieta_core.hpp"

#include <nlohmann/json.hpp>

#include <atomic>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

namespace vieta {

struct VerifyConfig {
    long n_max = 60;
    std::optional<SequenceId> chain;  // a_chain or b_chain; both when empty
    int threads = 1;
};

struct ChainVerification {
    SequenceId chain;
    std::vector<CheckResult> checks;
    std::set<BigInt> observed_values;
};

struct VerifyReport {
    long n_max = 0;
    std::vector<ChainVerification> chains;

    bool pass() const {
        for (const auto& c : chains)
            if (!all_pass(c.checks)) return false;
        return true;
    }
};

/// Terms 0..10 of the two chains as tabulated for A032908 and A101879.
inline const std::vector<long>& reference_table(SequenceId chain) {
    static const std::vector<long> a{2, 2, 3, 6, 14, 35, 90, 234, 611, 1598, 4182};
    static const std::vector<long> b{1, 1, 2, 6, 21, 77, 286, 1066, 3977, 14841, 55386};
    return chain == SequenceId::a_chain ? a : b;
}

/// eval_binet(closed_form(id, branch), n) against the recurrence, n in [from, to].
inline CheckResult closed_form_agreement(SequenceId id, Branch branch, long from, long to) {
    CheckResult c;
    c.name = std::string("closed form = recurrence: ") + to_string(id) +
             (branch == Branch::odd ? " (odd)" : branch == Branch::even ? " (even)" : "");
    const BinetForm form = closed_form(id, branch);
    const long top = branch == Branch::whole ? to : (branch == Branch::even ? 2 * to : 2 * to - 1);
    auto seq = SequenceSnapshot::generate(id, std::max(top, 0L));
    for (long n = from; n <= to; ++n) {
        const long index = branch == Branch::whole ? n : (branch == Branch::even ? 2 * n : 2 * n - 1);
        try {
            if (eval_binet(form, static_cast<std::uint64_t>(n)) != seq.at(index)) c.fail_at(n, "value mismatch");
        } catch (const ConsistencyError& e) {
            c.fail_at(n, e.what());
        }
    }
    return c;
}

namespace detail {

inline std::vector<std::function<std::vector<CheckResult>()>> chain_tasks(SequenceId chain, long n_max) {
    const bool is_a = chain == SequenceId::a_chain;
    const SequenceId d_id = is_a ? SequenceId::d_of_a : SequenceId::d_of_b;
    const long k = is_a ? 3 : 4;
    std::vector<std::function<std::vector<CheckResult>()>> tasks;

    tasks.emplace_back([=] {
        CheckResult c;
        c.name = std::string(to_string(chain)) + " table terms 0..10";
        auto x = SequenceSnapshot::generate(chain, 10);
        const auto& ref = reference_table(chain);
        for (long n = 0; n <= std::min(10L, n_max); ++n)
            if (x[n] != ref[static_cast<std::size_t>(n)]) c.fail_at(n, "table mismatch");
        return std::vector<CheckResult>{c};
    });
    tasks.emplace_back([=] { return std::vector<CheckResult>{closed_form_agreement(chain, Branch::whole, 0, n_max)}; });
    tasks.emplace_back([=] {
        long half = std::max(1L, n_max / 2);
        return std::vector<CheckResult>{closed_form_agreement(d_id, Branch::odd, 1, half),
                                        closed_form_agreement(d_id, Branch::even, 1, half)};
    });
    tasks.emplace_back([=] {
        CheckResult c;
        c.name = std::string(to_string(chain)) + ": consecutive terms solve k = " + std::to_string(k);
        CheckResult d;
        d.name = std::string(to_string(chain)) + ": descent from each pair reaches the diagonal seed";
        auto x = SequenceSnapshot::generate(chain, n_max + 1);
        const EquationSpec spec(1, k);
        const PairSolution seed = is_a ? PairSolution(2, 2) : PairSolution(1, 1);
        for (long n = 0; n <= n_max; ++n) {
            PairSolution p(x[n], x[n + 1]);
            if (!is_solution(p, spec)) {
                c.fail_at(n, p.str() + " is not a solution");
                continue;
            }
            if (descend(p, spec).terminal != seed) d.fail_at(n, "descent ended elsewhere");
        }
        return std::vector<CheckResult>{c, d};
    });
    tasks.emplace_back([=] {
        auto checks = gcd_profile(chain, n_max).checks;
        for (auto& c : checks) c.name = std::string(to_string(chain)) + ": " + c.name;
        checks.push_back(product_identity(chain, n_max));
        return checks;
    });
    tasks.emplace_back([=] {
        auto rep = value_set_check(EquationSpec(1, k), n_max);
        CheckResult c;
        c.name = std::string(to_string(chain)) + ": normalized sums alternate " + (is_a ? "5, 1" : "3, 2");
        if (rep.first_violation) c.fail_at(*rep.first_violation, "unexpected normalized sum");
        return std::vector<CheckResult>{c};
    });
    if (is_a) {
        tasks.emplace_back([=] { return identity_suite(n_max); });
        tasks.emplace_back([=] {
            CheckResult c;
            c.name = "a(n) = F(2n-1) + 1 for n >= 0";
            auto a = SequenceSnapshot::generate(SequenceId::a_chain, n_max);
            auto F = SequenceSnapshot::generate(SequenceId::fibonacci, 2 * n_max - 1);
            for (long n = 0; n <= n_max; ++n)
                if (a[n] != F[2 * n - 1] + 1) c.fail_at(n, "");
            return std::vector<CheckResult>{c};
        });
        tasks.emplace_back([=] {
            return std::vector<CheckResult>{closed_form_agreement(SequenceId::fibonacci, Branch::whole, 0, n_max),
                                            closed_form_agreement(SequenceId::lucas, Branch::whole, 0, n_max)};
        });
    }
    return tasks;
}

}  // namespace detail

inline VerifyReport run_verify(const VerifyConfig& cfg) {
    if (cfg.n_max < 2) throw std::domain_error("verify requires n_max >= 2");
    std::vector<SequenceId> chains;
    if (cfg.chain) chains.push_back(*cfg.chain);
    else chains = {SequenceId::a_chain, SequenceId::b_chain};

    std::vector<std::function<std::vector<CheckResult>()>> tasks;
    std::vector<std::size_t> owner;
    for (std::size_t c = 0; c < chains.size(); ++c) {
        if (chains[c] != SequenceId::a_chain && chains[c] != SequenceId::b_chain)
            throw std::domain_error("verify --chain must be a_chain or b_chain");
        for (auto& t : detail::chain_tasks(chains[c], cfg.n_max)) {
            tasks.push_back(std::move(t));
            owner.push_back(c);
        }
    }

    std::vector<std::vector<CheckResult>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = tasks[i]();
    };
    const int nthreads = std::max(1, std::min<int>(cfg.threads, static_cast<int>(tasks.size())));
    std::vector<std::thread> pool;
    for (int t = 1; t < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    VerifyReport rep;
    rep.n_max = cfg.n_max;
    for (auto id : chains) rep.chains.push_back({id, {}, {}});
    for (std::size_t i = 0; i < tasks.size(); ++i)
        for (auto& c : results[i]) rep.chains[owner[i]].checks.push_back(std::move(c));
    for (auto& cv : rep.chains) {
        auto vs = value_set_check(EquationSpec(1, cv.chain == SequenceId::a_chain ? 3 : 4), cfg.n_max);
        cv.observed_values = vs.observed;
    }
    return rep;
}

inline nlohmann::json to_json(const VerifyReport& rep) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& cv : rep.chains) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : cv.checks) checks.push_back(to_json(c));
        reports.push_back({{"chain", to_string(cv.chain)},
                           {"n_max", rep.n_max},
                           {"checks", checks},
                           {"observed_values", to_json(cv.observed_values)}});
    }
    return {{"n_max", rep.n_max}, {"pass", rep.pass()}, {"reports", reports}};
}

}  // namespace vieta
