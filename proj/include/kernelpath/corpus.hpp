#ifndef KERNELPATH_CORPUS_HPP
#define KERNELPATH_CORPUS_HPP

#include "kernelpath/vpoly.hpp"

#include <string>
#include <vector>

namespace kernelpath {

// One (model, counting class) pair with its frozen reference rows.
struct GoldenCase {
    std::string name;        // corpus case name
    std::string spec_path;   // absolute path of the model file
    std::string spec_text;   // its contents
    char cls = 'E';          // W, B, M or E
    bool semilength = false; // rows indexed by half the raw length
    std::string golden_path; // absolute path of the rows file (may not exist yet)
    std::string provenance;  // free-form note on how the rows were produced
    std::vector<VPoly> expected; // empty when the rows file is absent
};

// Parses <dir>/index.json and loads every referenced model and rows file.
// Cases come back sorted by (name, class).
std::vector<GoldenCase> corpus_list(const std::string& dir);

// Rows file format: one line per size, "n c0 [c1 c2 ...]", where ck is the
// exact count of objects of size n carrying k marks ("p/q" rationals
// allowed). Blank lines and '#' comments are skipped. Row n must appear on
// line n of the data.
std::vector<VPoly> read_rows(const std::string& path);
void write_rows(const std::string& path, const std::vector<VPoly>& rows,
                const std::string& header_comment = "");

} // namespace kernelpath

#endif
