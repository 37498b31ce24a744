// vieta: command-line driver for the Vieta-jumping toolkit.
//
// Exit codes: 0 success, 1 invariant failure, 2 internal verification
// failure, 64 usage error, 65 invalid input data.

#include "vieta/battery.hpp"
#include "vieta/exactnum.hpp"
#include "vieta/invariants.hpp"
#include "vieta/io.hpp"
#include "vieta/search.hpp"
#include "vieta/sequences.hpp"
#include "vieta/vieta_core.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <variant>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvariant = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string r = "1";
    std::string k;
    int m = 2;
    std::string format = "text";
    std::string output;
    std::string n_max = "10";
    std::string bound = "100";
    std::string sum_bound = "100";
    std::string count = "5";
    std::string chain;
    std::string id;
    std::string branch;
    int threads = 1;
    int position = 1;
    bool timing = false;
    std::vector<std::string> coords;
};

vieta::BigInt big(const std::string& s, const char* flag) {
    try {
        return vieta::parse_bigint(s);
    } catch (const std::invalid_argument&) {
        throw UsageError(std::string(flag) + ": expected a decimal integer, got '" + s + "'");
    }
}

long small(const std::string& s, const char* flag) {
    vieta::BigInt v = big(s, flag);
    if (!v.fits_slong_p()) throw UsageError(std::string(flag) + ": value out of range");
    return v.get_si();
}

long positive(const std::string& s, const char* flag) {
    long v = small(s, flag);
    if (v < 1) throw UsageError(std::string(flag) + " must be positive");
    return v;
}

int default_threads() {
    if (const char* env = std::getenv("VIETA_THREADS")) {
        try {
            int t = std::stoi(env);
            if (t >= 1) return t;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

vieta::EquationSpec equation(const Options& o) {
    if (o.k.empty()) throw UsageError("--k is required");
    vieta::BigInt r = big(o.r, "--r");
    if (r < 1) throw UsageError("--r must be >= 1");
    return {r, big(o.k, "--k"), o.m};
}

vieta::PairSolution pair_arg(const Options& o) {
    if (o.coords.size() != 2) throw UsageError("expected two coordinates a b");
    vieta::BigInt a = big(o.coords[0], "a"), b = big(o.coords[1], "b");
    if (a < 1 || b < 1) throw DataError("coordinates must be positive");
    return {a, b};
}

void emit_json(std::ostream& os, const nlohmann::json& j) { os << j.dump(2) << '\n'; }

void require_format(const Options& o, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (o.format == f) return;
    throw UsageError("--format " + o.format + " is not supported by this subcommand");
}

int cmd_seq(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    auto id = vieta::parse_sequence_id(o.id);
    if (!id) throw UsageError("unknown sequence '" + o.id + "'");
    if (!o.branch.empty()) {
        vieta::Branch br = o.branch == "odd"    ? vieta::Branch::odd
                           : o.branch == "even" ? vieta::Branch::even
                           : o.branch == "whole" ? vieta::Branch::whole
                                                 : throw UsageError("--binet must be whole, odd or even");
        vieta::BinetForm f = vieta::closed_form(*id, br);
        if (o.format == "json")
            emit_json(os, {{"A", f.coeff_plus.str()}, {"B", f.coeff_minus.str()}, {"alpha", f.root_plus.str()},
                           {"beta", f.root_minus.str()}, {"delta", f.shift.str()}});
        else
            os << f.str() << '\n';
        return kExitOk;
    }
    long n_max = small(o.n_max, "n_max");
    if (n_max < 0) throw UsageError("n_max must be >= 0");
    auto seq = vieta::SequenceSnapshot::generate(*id, n_max);
    if (o.format == "json") {
        auto arr = nlohmann::json::array();
        for (long n = 0; n <= n_max; ++n) arr.push_back(vieta::to_string(seq[n]));
        emit_json(os, arr);
    } else {
        for (long n = 0; n <= n_max; ++n) os << seq[n] << '\n';
    }
    return kExitOk;
}

int cmd_descend(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json", "dot"});
    auto spec = equation(o);
    auto p = pair_arg(o);
    if (!vieta::is_solution(p, spec))
        throw DataError(p.str() + " is not a solution: (a+r)/b + (b+r)/a = " + vieta::eval_k(p, spec.r).str() +
                        ", expected k = " + vieta::to_string(spec.k));
    auto result = vieta::try_descend(p, spec);
    std::visit(
        [&](const auto& r) {
            if (o.format == "json") emit_json(os, vieta::to_json(r));
            else if (o.format == "dot") {
                using T = std::decay_t<decltype(r)>;
                if constexpr (std::is_same_v<T, vieta::JumpTrace>) vieta::write_dot(os, r.steps, r.terminal);
                else vieta::write_dot(os, r.steps, r.current);
            } else
                vieta::write_text(os, r);
        },
        result);
    return kExitOk;
}

int cmd_ascend(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    auto spec = equation(o);
    auto p = pair_arg(o);
    if (!vieta::is_solution(p, spec)) throw DataError(p.str() + " is not a solution");
    if (p.a < p.b) p = vieta::flip(p);
    auto chain = vieta::ascend(p, static_cast<std::size_t>(positive(o.count, "--count")), spec);
    if (o.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& q : chain) arr.push_back(vieta::to_json(q));
        emit_json(os, {{"spec", vieta::to_json(spec)}, {"start", vieta::to_json(p)}, {"pairs", arr}});
    } else {
        for (const auto& q : chain) os << q.str() << '\n';
    }
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    vieta::VerifyConfig cfg;
    cfg.n_max = small(o.n_max, "--n-max");
    if (cfg.n_max < 2) throw UsageError("--n-max must be >= 2");
    cfg.threads = o.threads;
    if (!o.chain.empty()) {
        auto id = vieta::parse_sequence_id(o.chain);
        if (!id || (*id != vieta::SequenceId::a_chain && *id != vieta::SequenceId::b_chain))
            throw UsageError("--chain must be a_chain or b_chain");
        cfg.chain = id;
    }
    auto rep = vieta::run_verify(cfg);
    if (o.format == "json") {
        emit_json(os, vieta::to_json(rep));
    } else {
        for (const auto& cv : rep.chains)
            for (const auto& c : cv.checks) {
                os << (c.pass ? "PASS " : "FAIL ") << c.name;
                if (!c.pass) os << " (first violation at n = " << *c.first_violation << ")";
                os << '\n';
            }
        os << (rep.pass() ? "all checks passed" : "verification FAILED") << '\n';
    }
    if (!rep.pass()) {
        for (const auto& cv : rep.chains)
            for (const auto& c : cv.checks)
                if (!c.pass) std::cerr << "vieta verify: failed check: " << c.name << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}

int cmd_search(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    vieta::SearchBox box;
    box.r = positive(o.r, "--r");
    box.m = o.m;
    if (box.m < 2) throw UsageError("--m must be >= 2");
    if (!o.k.empty()) box.k = small(o.k, "--k");
    if (box.m == 2) box.bound = positive(o.bound, "--bound");
    else box.sum_bound = positive(o.sum_bound, "--sum-bound");
    box.threads = o.threads;
    try {
        box.validate();
    } catch (const std::domain_error& e) {
        throw UsageError(e.what());
    }
    auto rep = vieta::search(box);
    if (o.format == "json") {
        emit_json(os, vieta::to_json(rep));
    } else {
        os << "candidates " << rep.candidates << '\n';
        for (const auto& g : rep.groups) {
            os << "k=" << g.k << " count=" << g.solutions.size() << " minimal_sum=" << g.minimal_sum << '\n';
            for (const auto& t : g.minimal) {
                os << "  minimal (";
                for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
                os << ")\n";
            }
            for (const auto& t : g.solutions) {
                os << "  (";
                for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
                os << ")\n";
            }
        }
    }
    if (o.timing) std::cerr << "wall_seconds " << rep.wall_seconds << '\n';
    if (!rep.verified) {
        for (const auto& f : rep.verification_failures) std::cerr << "vieta search: hit failed exact check: " << f << '\n';
        return kExitVerification;
    }
    return kExitOk;
}

int cmd_conjecture(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    long n_max = small(o.n_max, "--n-max");
    if (n_max < 0) throw UsageError("--n-max must be >= 0");
    auto reports = vieta::conjecture_r2_check(n_max);
    bool counterexample = false;
    for (const auto& r : reports) counterexample |= r.status == vieta::ValueSetStatus::counterexample_candidate;
    if (o.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(vieta::to_json(r));
        emit_json(os, {{"n_max", n_max}, {"counterexample_candidate", counterexample}, {"reports", arr}});
    } else {
        for (const auto& r : reports) {
            os << "r=2 k=" << r.k << " status=" << vieta::to_string(r.status) << " observed={";
            bool first = true;
            for (const auto& v : r.observed) os << (first ? "" : ",") << v, first = false;
            os << "}\n";
        }
        if (counterexample) os << "COUNTEREXAMPLE CANDIDATE FOUND\n";
    }
    return kExitOk;
}

int cmd_jump3(const Options& o, std::ostream& os) {
    require_format(o, {"text", "json"});
    auto spec = equation(o);
    spec.m = 3;
    if (o.coords.size() != 3) throw UsageError("expected three coordinates a b c");
    std::vector<vieta::Rational> e;
    for (const auto& c : o.coords) {
        try {
            e.push_back(vieta::Rational::parse(c));
        } catch (const std::exception&) {
            throw UsageError("coordinate '" + c + "' is not a rational p or p/q");
        }
    }
    vieta::TupleSolution t;
    try {
        t = vieta::TupleSolution(std::move(e));
    } catch (const std::domain_error& ex) {
        throw DataError(ex.what());
    }
    if (!vieta::verify_tuple(t, spec))
        throw DataError(t.str() + " is not a solution: cyclic sum = " + vieta::cyclic_sum(t, spec.r).str());
    auto out = vieta::jump_three(t, o.position, spec);
    if (o.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto& x : out.entries) arr.push_back(x.str());
        emit_json(os, {{"position", o.position}, {"tuple", arr}, {"integral", out.integral()}});
    } else {
        os << out.str() << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Vieta jumping toolkit for (a+r)/b + (b+r)/a = k and its cyclic generalization"};
    app.require_subcommand(1);
    Options o;
    o.threads = default_threads();

    auto add_format = [&](CLI::App* c, const std::string& allowed) {
        c->add_option("--format", o.format, "Output format: " + allowed);
        c->add_option("-o,--output", o.output, "Write output to this file instead of stdout");
    };
    auto add_rk = [&](CLI::App* c) {
        c->add_option("--r", o.r, "Shift r (default 1)");
        c->add_option("--k", o.k, "Target k");
    };

    auto* seq = app.add_subcommand("seq", "Print sequence terms 0..n_max");
    seq->add_option("id", o.id, "fibonacci | lucas | a_chain | b_chain | d_of_a | d_of_b")->required();
    seq->add_option("n_max", o.n_max, "Last index");
    seq->add_option("--binet", o.branch, "Print the closed form instead (whole | odd | even)");
    add_format(seq, "text | json");

    auto* descend = app.add_subcommand("descend", "Descend from (a, b) to a diagonal solution");
    add_rk(descend);
    descend->add_option("coords", o.coords, "a b")->expected(2)->required();
    add_format(descend, "text | json | dot");

    auto* ascend = app.add_subcommand("ascend", "Generate larger solutions from (a, b)");
    add_rk(ascend);
    ascend->add_option("coords", o.coords, "a b")->expected(2)->required();
    ascend->add_option("--count", o.count, "Number of pairs");
    add_format(ascend, "text | json");

    auto* verify = app.add_subcommand("verify", "Run the invariant battery");
    verify->add_option("--n-max", o.n_max, "Largest index checked");
    verify->add_option("--chain", o.chain, "a_chain | b_chain (default: both)");
    verify->add_option("--threads", o.threads, "Worker threads (default $VIETA_THREADS or 1)");
    add_format(verify, "text | json");

    auto* search = app.add_subcommand("search", "Brute-force solution search");
    add_rk(search);
    search->add_option("--m", o.m, "Number of variables");
    search->add_option("--bound", o.bound, "Coordinate bound (m = 2)");
    search->add_option("--sum-bound", o.sum_bound, "Coordinate-sum bound (m >= 3)");
    search->add_option("--threads", o.threads, "Worker threads (default $VIETA_THREADS or 1)");
    search->add_flag("--timing", o.timing, "Report wall time on stderr");
    add_format(search, "text | json");

    auto* conj = app.add_subcommand("conjecture", "Check the r = 2 normalized-sum value sets");
    conj->add_option("--n-max", o.n_max, "Pairs per chain");
    add_format(conj, "text | json");

    auto* jump3 = app.add_subcommand("jump3", "Vieta jump in the three-variable cyclic equation");
    add_rk(jump3);
    jump3->add_option("--pos", o.position, "Coordinate to replace (1, 2 or 3)");
    jump3->add_option("coords", o.coords, "a b c (rationals allowed)")->expected(3)->required();
    add_format(jump3, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!o.output.empty()) {
        file.open(o.output);
        if (!file) {
            std::cerr << "vieta: cannot open " << o.output << '\n';
            return kExitUsage;
        }
        out = &file;
    }

    try {
        if (*seq) return cmd_seq(o, *out);
        if (*descend) return cmd_descend(o, *out);
        if (*ascend) return cmd_ascend(o, *out);
        if (*verify) return cmd_verify(o, *out);
        if (*search) return cmd_search(o, *out);
        if (*conj) return cmd_conjecture(o, *out);
        if (*jump3) return cmd_jump3(o, *out);
    } catch (const UsageError& e) {
        std::cerr << "vieta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DataError& e) {
        std::cerr << "vieta: " << e.what() << '\n';
        return kExitData;
    } catch (const vieta::InvalidJump& e) {
        std::cerr << "vieta: " << e.what() << '\n';
        return kExitData;
    } catch (const std::domain_error& e) {
        std::cerr << "vieta: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "vieta: internal error: " << e.what() << '\n';
        return kExitVerification;
    }
    return kExitUsage;
}
