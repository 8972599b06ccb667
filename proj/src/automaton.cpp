#include "kernelpath/automaton.hpp"

#include "kernelpath/errors.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace kernelpath {

Automaton::Automaton(StepSet steps, int state_count)
    : steps_(std::move(steps)), states_(state_count),
      delta_(static_cast<size_t>(state_count), std::vector<std::optional<Transition>>(static_cast<size_t>(steps_.size()))) {
    if (state_count < 1) throw InvalidConfig("automaton needs at least one state");
}

std::optional<Transition> Automaton::transition(int state, int step) const {
    return delta_[static_cast<size_t>(state)][static_cast<size_t>(step)];
}

void Automaton::set_transition(int state, int step, Transition t) {
    delta_[static_cast<size_t>(state)][static_cast<size_t>(step)] = t;
}

int Automaton::defined_transition_count() const {
    int n = 0;
    for (const auto& row : delta_)
        for (const auto& t : row)
            if (t) ++n;
    return n;
}

bool Automaton::has_marks() const {
    for (const auto& row : delta_)
        for (const auto& t : row)
            if (t && t->marked) return true;
    return false;
}

std::optional<Automaton::RunResult> Automaton::run(const std::vector<int>& word) const {
    RunResult r{initial_state, 0};
    for (int step : word) {
        auto t = transition(r.final_state, step);
        if (!t) return std::nullopt;
        r.final_state = t->target;
        if (t->marked) ++r.marks;
    }
    return r;
}

Automaton build_pattern_automaton(const StepSet& s, const Pattern& p) {
    const std::vector<int>& pat = p.step_indices;
    int len = static_cast<int>(pat.size());
    if (len == 0) throw InvalidConfig("empty pattern");
    for (int idx : pat)
        if (idx < 0 || idx >= s.size()) throw UnknownStep("pattern step index out of range");

    // failure links: fail[i] = length of the longest proper border of pat[0..i)
    std::vector<int> fail(static_cast<size_t>(len) + 1, 0);
    for (int i = 1; i < len; ++i) {
        int j = fail[static_cast<size_t>(i)];
        while (j > 0 && pat[static_cast<size_t>(i)] != pat[static_cast<size_t>(j)]) j = fail[static_cast<size_t>(j)];
        fail[static_cast<size_t>(i) + 1] = (pat[static_cast<size_t>(i)] == pat[static_cast<size_t>(j)]) ? j + 1 : 0;
    }

    Automaton a(s, len);
    for (int state = 0; state < len; ++state) {
        for (int step = 0; step < s.size(); ++step) {
            // longest pattern prefix that is a suffix of prefix(state)+step
            int j = state;
            while (j > 0 && pat[static_cast<size_t>(j)] != step) j = fail[static_cast<size_t>(j)];
            int target = (pat[static_cast<size_t>(j)] == step) ? j + 1 : 0;
            bool completes = target == len;
            if (completes) {
                if (p.mode == PatternMode::Avoid) continue; // forbidden transition
                a.set_transition(state, step, Transition{fail[static_cast<size_t>(len)], true});
            } else {
                a.set_transition(state, step, Transition{target, false});
            }
        }
    }
    return a;
}

Automaton build_ascent_automaton(const StepSet& s) {
    bool any_up = false;
    for (const auto& st : s.steps) any_up = any_up || st.altitude > 0;
    if (!any_up) throw UnsupportedStepSet("no climbing step to open an ascent");

    Automaton a(s, 2);
    for (int step = 0; step < s.size(); ++step) {
        bool up = s.at(step).altitude > 0;
        if (up) {
            a.set_transition(0, step, Transition{1, false});
            a.set_transition(1, step, Transition{1, false});
        } else {
            a.set_transition(0, step, Transition{0, false});
            a.set_transition(1, step, Transition{0, true}); // closes an ascent
        }
    }
    return a;
}

Automaton build_trivial_automaton(const StepSet& s) {
    Automaton a(s, 1);
    for (int step = 0; step < s.size(); ++step) a.set_transition(0, step, Transition{0, false});
    return a;
}

Automaton load_automaton(std::istream& in, const StepSet& s) {
    int states = -1;
    bool saw_initial = false;
    std::vector<std::tuple<int, int, int, bool>> trans; // from, step, to, marked
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (kw == "states") {
            if (!(ls >> states) || states < 1) throw ParseError("bad state count" + where());
        } else if (kw == "initial") {
            int init = -1;
            if (!(ls >> init)) throw ParseError("bad initial directive" + where());
            if (states < 0) throw ParseError("initial before states" + where());
            if (init < 0 || init >= states) throw DanglingState("initial state out of range" + where());
            if (init != 0) throw ParseError("initial state must be 0" + where());
            saw_initial = true;
        } else if (kw == "trans") {
            int from = -1, to = -1;
            std::string step_name, marked_tok;
            if (!(ls >> from >> step_name >> to)) throw ParseError("bad transition" + where());
            bool marked = false;
            if (ls >> marked_tok) {
                if (marked_tok != "marked") throw ParseError("unexpected token '" + marked_tok + "'" + where());
                marked = true;
            }
            if (states < 0) throw ParseError("trans before states" + where());
            if (from < 0 || from >= states || to < 0 || to >= states)
                throw DanglingState("transition references undefined state" + where());
            auto step = s.find(step_name);
            if (!step) throw UnknownStep("transition uses undeclared step " + step_name + where());
            trans.emplace_back(from, *step, to, marked);
        } else {
            throw ParseError("unknown directive '" + kw + "'" + where());
        }
    }
    if (states < 1) throw ParseError("automaton file missing 'states'");
    if (!saw_initial) throw ParseError("automaton file missing 'initial'");

    Automaton a(s, states);
    for (const auto& [from, step, to, marked] : trans) {
        if (a.transition(from, step)) throw ParseError("duplicate transition from state " + std::to_string(from) + " on " + s.at(step).name);
        a.set_transition(from, step, Transition{to, marked});
    }
    return a;
}

Automaton load_automaton_file(const std::string& path, const StepSet& s) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open automaton file " + path);
    return load_automaton(in, s);
}

UMatrix adjacency(const Automaton& a, int order) {
    const StepSet& s = a.steps();
    UMatrix m(a.state_count(), order);
    for (int i = 0; i < a.state_count(); ++i) {
        for (int step = 0; step < s.size(); ++step) {
            auto t = a.transition(i, step);
            if (!t) continue;
            VPoly w = t->marked ? VPoly::variable() : VPoly(1L);
            TruncSeries coef = TruncSeries::t_power(s.at(step).length, order).scaled(w);
            m.at(i, t->target) += ULaurent::term(s.at(step).altitude, coef);
        }
    }
    return m;
}

std::string export_dot(const Automaton& a) {
    std::ostringstream out;
    out << "digraph automaton {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (int i = 0; i < a.state_count(); ++i) {
        out << "  s" << i << " [label=\"" << i << "\"";
        if (i == Automaton::initial_state) out << ", shape=doublecircle";
        out << "];\n";
    }
    const StepSet& s = a.steps();
    for (int i = 0; i < a.state_count(); ++i) {
        for (int step = 0; step < s.size(); ++step) {
            auto t = a.transition(i, step);
            if (!t) continue;
            const Step& st = s.at(step);
            out << "  s" << i << " -> s" << t->target << " [label=\"" << st.name << "(" << st.length << "," << st.altitude << ")";
            if (t->marked) out << " *";
            out << "\"";
            if (t->marked) out << ", style=dashed, color=red";
            out << "];\n";
        }
    }
    out << "}\n";
    return out.str();
}

Automaton automaton_for_spec(const ConstraintSpec& spec, const std::string& base_dir) {
    switch (spec.kind) {
    case ConstraintKind::None:
        return build_trivial_automaton(spec.steps);
    case ConstraintKind::Pattern:
        return build_pattern_automaton(spec.steps, spec.pattern);
    case ConstraintKind::ExplicitAutomaton: {
        std::filesystem::path p(spec.automaton_path);
        if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
        return load_automaton_file(p.string(), spec.steps);
    }
    }
    throw InvalidConfig("unreachable constraint kind");
}

} // namespace kernelpath
