#ifndef KERNELPATH_MODEL_HPP
#define KERNELPATH_MODEL_HPP

#include "kernelpath/ulaurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kernelpath {

struct Step {
    std::string name;
    int length = 1;   // strictly positive
    int altitude = 0; // any sign

    friend bool operator==(const Step& a, const Step& b) = default;
};

// Ordered step alphabet. No two steps may share a (length, altitude) pair
// and names are unique, so a word over the alphabet is recoverable from its
// geometry and pattern matching is unambiguous.
struct StepSet {
    std::vector<Step> steps;

    int size() const { return static_cast<int>(steps.size()); }
    const Step& at(int i) const { return steps[static_cast<size_t>(i)]; }
    std::optional<int> find(const std::string& name) const;

    int max_down() const;   // c = max(0, -min altitude)
    int max_up() const;     // d = max(0, max altitude)
    int max_length() const; // longest step

    friend bool operator==(const StepSet& a, const StepSet& b) = default;
};

enum class PatternMode { Avoid, Mark };

struct Pattern {
    PatternMode mode = PatternMode::Avoid;
    std::vector<int> step_indices; // nonempty, indices into the step set

    friend bool operator==(const Pattern& a, const Pattern& b) = default;
};

enum class ConstraintKind { None, Pattern, ExplicitAutomaton };

struct ConstraintSpec {
    StepSet steps;
    ConstraintKind kind = ConstraintKind::None;
    Pattern pattern;            // valid when kind == Pattern
    std::string automaton_path; // valid when kind == ExplicitAutomaton

    friend bool operator==(const ConstraintSpec& a, const ConstraintSpec& b) = default;
};

// Text form:
//   steps U=(1,1) D=(1,-1) F=(2,0) ; [avoid U F | mark U D | automaton PATH]
// The semicolon is a token of its own but may be glued to the previous one.
ConstraintSpec parse_spec(const std::string& text);
std::string render_spec(const ConstraintSpec& spec);

// sum over steps of t^length u^altitude
ULaurent step_polynomial(const StepSet& s, int order);

} // namespace kernelpath

#endif
