#pragma once

// Text, JSON and Graphviz renderings of jump traces. Big integers are
// emitted as decimal strings in JSON so no precision is lost.

#include "vieta/vieta_core.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <set>
#include <string>

namespace vieta {

inline nlohmann::json to_json(const PairSolution& p) { return nlohmann::json::array({to_string(p.a), to_string(p.b)}); }

inline nlohmann::json to_json(const EquationSpec& s) {
    return {{"r", to_string(s.r)}, {"k", to_string(s.k)}, {"m", s.m}};
}

inline nlohmann::json steps_json(const std::vector<JumpStep>& steps) {
    auto arr = nlohmann::json::array();
    for (const auto& s : steps)
        arr.push_back({{"kind", to_string(s.kind)}, {"before", to_json(s.before)}, {"after", to_json(s.after)}});
    return arr;
}

inline nlohmann::json to_json(const JumpTrace& t) {
    return {{"status", "diagonal"}, {"spec", to_json(t.spec)}, {"steps", steps_json(t.steps)}, {"terminal", to_json(t.terminal)}};
}

inline nlohmann::json to_json(const StallReport& s) {
    auto attempted = nlohmann::json::array();
    for (const auto& p : s.attempted) attempted.push_back(to_json(p));
    return {{"status", "stalled"},
            {"spec", to_json(s.spec)},
            {"steps", steps_json(s.steps)},
            {"terminal", to_json(s.current)},
            {"attempted", attempted}};
}

/// One step per line: `<kind> <before> <after>`, then `terminal <pair>`.
inline void write_text(std::ostream& os, const std::vector<JumpStep>& steps) {
    for (const auto& s : steps) os << to_string(s.kind) << ' ' << s.before.str() << ' ' << s.after.str() << '\n';
}

inline void write_text(std::ostream& os, const JumpTrace& t) {
    write_text(os, t.steps);
    os << "terminal " << t.terminal.str() << '\n';
}

inline void write_text(std::ostream& os, const StallReport& s) {
    write_text(os, s.steps);
    os << "stalled " << s.current.str() << '\n';
    for (const auto& p : s.attempted) os << "attempted " << p.str() << '\n';
}

/// Graphviz digraph: nodes are pairs, edges are steps labelled by kind.
inline void write_dot(std::ostream& os, const std::vector<JumpStep>& steps, const PairSolution& terminal) {
    os << "digraph jump_trace {\n";
    std::set<std::string> nodes;
    auto node = [&](const PairSolution& p) {
        std::string id = '"' + p.str() + '"';
        if (nodes.insert(id).second) os << "  " << id << (p.diagonal() ? " [shape=doublecircle]" : "") << ";\n";
        return id;
    };
    node(steps.empty() ? terminal : steps.front().before);
    for (const auto& s : steps) {
        auto from = node(s.before);
        auto to = node(s.after);
        os << "  " << from << " -> " << to << " [label=\"" << to_string(s.kind) << "\"];\n";
    }
    os << "}\n";
}

}  // namespace vieta
