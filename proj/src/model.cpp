#include "kernelpath/model.hpp"

#include "kernelpath/errors.hpp"

#include <cctype>
#include <regex>
#include <sstream>

namespace kernelpath {

std::optional<int> StepSet::find(const std::string& name) const {
    for (size_t i = 0; i < steps.size(); ++i)
        if (steps[i].name == name) return static_cast<int>(i);
    return std::nullopt;
}

int StepSet::max_down() const {
    int worst = 0;
    for (const auto& s : steps) worst = std::min(worst, s.altitude);
    return -worst;
}

int StepSet::max_up() const {
    int best = 0;
    for (const auto& s : steps) best = std::max(best, s.altitude);
    return best;
}

int StepSet::max_length() const {
    int best = 0;
    for (const auto& s : steps) best = std::max(best, s.length);
    return best;
}

namespace {

std::vector<std::string> lex(const std::string& text) {
    std::vector<std::string> tokens;
    std::string cur;
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == ';') {
            if (!cur.empty()) {
                tokens.push_back(cur);
                cur.clear();
            }
            if (ch == ';') tokens.emplace_back(";");
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) tokens.push_back(cur);
    return tokens;
}

const std::regex step_decl_re(R"(^([A-Za-z][A-Za-z0-9]*)=\(([+-]?\d+),([+-]?\d+)\)$)");
const std::regex name_re(R"(^[A-Za-z][A-Za-z0-9]*$)");

} // namespace

ConstraintSpec parse_spec(const std::string& text) {
    std::vector<std::string> tok = lex(text);
    size_t pos = 0;
    auto peek = [&]() -> const std::string* { return pos < tok.size() ? &tok[pos] : nullptr; };
    auto next = [&]() -> const std::string& {
        if (pos >= tok.size()) throw ParseError("unexpected end of spec");
        return tok[pos++];
    };

    if (!peek() || *peek() != "steps") throw ParseError("spec must start with 'steps'");
    ++pos;

    ConstraintSpec spec;
    std::smatch m;
    while (peek() && std::regex_match(*peek(), m, step_decl_re)) {
        Step st;
        st.name = m[1];
        st.length = std::stoi(m[2]);
        st.altitude = std::stoi(m[3]);
        if (st.length < 1) throw InvalidStep("step " + st.name + " has non-positive length");
        for (const auto& prev : spec.steps.steps) {
            if (prev.name == st.name) throw ParseError("duplicate step name " + st.name);
            if (prev.length == st.length && prev.altitude == st.altitude)
                throw ParseError("steps " + prev.name + " and " + st.name + " have equal geometry");
        }
        spec.steps.steps.push_back(st);
        ++pos;
    }
    if (spec.steps.steps.empty()) throw ParseError("at least one step declaration required");
    if (!peek() || *peek() != ";") throw ParseError("missing ';' after step declarations");
    ++pos;

    if (!peek()) return spec; // no constraint

    const std::string& kw = next();
    if (kw == "avoid" || kw == "mark") {
        spec.kind = ConstraintKind::Pattern;
        spec.pattern.mode = kw == "avoid" ? PatternMode::Avoid : PatternMode::Mark;
        while (peek()) {
            const std::string& name = next();
            if (!std::regex_match(name, name_re)) throw ParseError("bad step name '" + name + "' in pattern");
            auto idx = spec.steps.find(name);
            if (!idx) throw UnknownStep("pattern references undeclared step " + name);
            spec.pattern.step_indices.push_back(*idx);
        }
        if (spec.pattern.step_indices.empty()) throw ParseError("empty pattern after '" + kw + "'");
    } else if (kw == "automaton") {
        spec.kind = ConstraintKind::ExplicitAutomaton;
        spec.automaton_path = next();
        if (peek()) throw ParseError("trailing tokens after automaton path");
    } else {
        throw ParseError("unknown constraint keyword '" + kw + "'");
    }
    return spec;
}

std::string render_spec(const ConstraintSpec& spec) {
    std::ostringstream out;
    out << "steps";
    for (const auto& s : spec.steps.steps) out << " " << s.name << "=(" << s.length << "," << s.altitude << ")";
    out << " ;";
    if (spec.kind == ConstraintKind::Pattern) {
        out << (spec.pattern.mode == PatternMode::Avoid ? " avoid" : " mark");
        for (int idx : spec.pattern.step_indices) out << " " << spec.steps.at(idx).name;
    } else if (spec.kind == ConstraintKind::ExplicitAutomaton) {
        out << " automaton " << spec.automaton_path;
    }
    return out.str();
}

ULaurent step_polynomial(const StepSet& s, int order) {
    ULaurent p = ULaurent::zero(order);
    for (const auto& st : s.steps)
        p += ULaurent::term(st.altitude, TruncSeries::t_power(st.length, order));
    return p;
}

} // namespace kernelpath
