#ifndef KERNELPATH_AUTOMATON_HPP
#define KERNELPATH_AUTOMATON_HPP

#include "kernelpath/model.hpp"
#include "kernelpath/umatrix.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kernelpath {

struct Transition {
    int target = 0;
    bool marked = false;

    friend bool operator==(const Transition& a, const Transition& b) = default;
};

// Deterministic partial automaton over a step alphabet. State 0 is always
// initial. A missing transition kills the path (avoidance); a marked one
// contributes a factor v to its weight.
class Automaton {
public:
    Automaton(StepSet steps, int state_count);

    const StepSet& steps() const { return steps_; }
    int state_count() const { return states_; }
    static constexpr int initial_state = 0;

    std::optional<Transition> transition(int state, int step) const;
    void set_transition(int state, int step, Transition t);

    int defined_transition_count() const;
    bool has_marks() const;

    // weight-preserving run over a word (step indices); nullopt if killed
    struct RunResult {
        int final_state;
        int marks;
    };
    std::optional<RunResult> run(const std::vector<int>& word) const;

private:
    StepSet steps_;
    int states_;
    std::vector<std::vector<std::optional<Transition>>> delta_;
};

// Prefix automaton of the pattern: state i remembers that the longest
// pattern prefix matching a suffix of the input has length i. Transitions
// follow the maximal-suffix rule computed with failure links. In Avoid mode
// the transition completing the pattern is absent; in Mark mode it is
// present, marked, and resumes at the longest proper border so overlapping
// occurrences keep being counted.
Automaton build_pattern_automaton(const StepSet& s, const Pattern& p);

// Two states: 1 iff the previous step climbs. Transitions leaving state 1
// on a non-climbing step close an ascent and are marked.
Automaton build_ascent_automaton(const StepSet& s);

// One state, every step a self-loop: no constraint at all.
Automaton build_trivial_automaton(const StepSet& s);

// Text format, one directive per line ('#' starts a comment):
//   states N
//   initial 0
//   trans FROM STEPNAME TO [marked]
Automaton load_automaton(std::istream& in, const StepSet& s);
Automaton load_automaton_file(const std::string& path, const StepSet& s);

// A_{ij} = sum of t^length u^altitude (v-marked) over transitions i -> j
UMatrix adjacency(const Automaton& a, int order);

// GraphViz rendering; node order and edge order are stable (state, then
// step index), marked edges drawn dashed/red with a trailing asterisk.
std::string export_dot(const Automaton& a);

// Resolve any constraint to its automaton (trivial when kind == None);
// base_dir is prepended to relative explicit-automaton paths.
Automaton automaton_for_spec(const ConstraintSpec& spec, const std::string& base_dir = "");

} // namespace kernelpath

#endif
