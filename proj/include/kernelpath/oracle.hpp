#ifndef KERNELPATH_ORACLE_HPP
#define KERNELPATH_ORACLE_HPP

#include "kernelpath/automaton.hpp"
#include "kernelpath/vpoly.hpp"

#include <vector>

namespace kernelpath {

// Brute-force ground truth. Everything here works directly on path counts
// (VPoly-valued for marks) and deliberately shares nothing with the kernel
// or generating-function machinery.

enum class PathMode { Walk, Meander };

// counts[length][altitude][state], altitude offset by max |step altitude|
// times max_length so walks may dip below zero
class DPTable {
public:
    DPTable(const Automaton& a, PathMode mode, int max_length);

    int max_length() const { return max_length_; }
    PathMode mode() const { return mode_; }

    VPoly count(int length, int altitude, int state) const;
    VPoly at_altitude(int length, int altitude) const; // summed over states
    VPoly total(int length) const;                     // summed over everything

    // the four classic series: walks, bridges, meanders, excursions
    std::vector<VPoly> class_series(char cls) const;

private:
    int max_length_;
    int amp_;
    PathMode mode_;
    std::vector<std::vector<std::vector<VPoly>>> counts_;
};

DPTable dp_count(const Automaton& a, PathMode mode, int max_length);

struct PathRecord {
    std::vector<int> steps; // indices into the step set
    int total_length = 0;
    int final_altitude = 0;
    int min_altitude = 0;
};

// every word over the step set with total length <= max_length (<= 12)
std::vector<PathRecord> enumerate_paths(const StepSet& s, int max_length);

// occurrence scanning on raw words, the semantics automata must reproduce
bool contains_factor(const std::vector<int>& word, const std::vector<int>& pattern);
int count_factor_occurrences(const std::vector<int>& word, const std::vector<int>& pattern);
// maximal runs of climbing steps
int count_ascents(const std::vector<int>& word, const StepSet& s);

// Excursion distribution by total length with a sliding window over the
// last max-step-length layers, pruning altitudes that cannot return to the
// axis in the remaining length. Exact; memory stays proportional to one
// layer. result[n] is the VPoly distribution of marks at total length n.
std::vector<VPoly> excursion_distribution(const Automaton& a, int max_length);

// Semilength series of the U,F-avoiding Schroder first-passage
// decomposition F = 1 + 2xF + x(F - 1 - xF)F, solved by iteration.
std::vector<Rat> first_passage_schroder_uf(int terms);

} // namespace kernelpath

#endif
