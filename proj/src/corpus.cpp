#include "kernelpath/corpus.hpp"

#include "kernelpath/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace kernelpath {

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Rat parse_rat(const std::string& tok) {
    try {
        Rat q(tok);
        if (q.get_den() == 0) throw ParseError("zero denominator in '" + tok + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational token '" + tok + "'");
    }
}

} // namespace

std::vector<VPoly> read_rows(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open rows file " + path);
    std::vector<VPoly> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks.size() < 2)
            throw ParseError(path + ":" + std::to_string(line_no) + ": row needs an index and at least one count");
        long n;
        try {
            n = std::stol(toks[0]);
        } catch (const std::exception&) {
            throw ParseError(path + ":" + std::to_string(line_no) + ": bad row index '" + toks[0] + "'");
        }
        if (n != static_cast<long>(rows.size()))
            throw ParseError(path + ":" + std::to_string(line_no) + ": expected row " +
                             std::to_string(rows.size()) + ", found " + toks[0]);
        std::vector<Rat> coefs;
        for (std::size_t i = 1; i < toks.size(); ++i) coefs.push_back(parse_rat(toks[i]));
        rows.push_back(VPoly(coefs));
    }
    return rows;
}

void write_rows(const std::string& path, const std::vector<VPoly>& rows,
                const std::string& header_comment) {
    const fs::path parent = fs::path(path).parent_path();
    if (!parent.empty()) fs::create_directories(parent);
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw ParseError("cannot write rows file " + path);
    if (!header_comment.empty()) out << "# " << header_comment << "\n";
    for (std::size_t n = 0; n < rows.size(); ++n) {
        out << n;
        const auto& cs = rows[n].coeffs();
        if (cs.empty()) {
            out << " 0";
        } else {
            for (const Rat& c : cs) out << ' ' << rat_str(c);
        }
        out << '\n';
    }
}

std::vector<GoldenCase> corpus_list(const std::string& dir) {
    const fs::path root(dir);
    const std::string index_path = (root / "index.json").string();
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(slurp(index_path));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(index_path + ": " + e.what());
    }
    if (!doc.is_object() || doc.value("schema", 0) != 1)
        throw ParseError(index_path + ": unsupported schema");

    std::vector<GoldenCase> cases;
    for (const auto& entry : doc.at("cases")) {
        const std::string name = entry.at("name").get<std::string>();
        const fs::path spec_path = root / entry.at("spec").get<std::string>();
        const std::string spec_text = slurp(spec_path.string());
        for (const auto& g : entry.at("golden")) {
            GoldenCase gc;
            gc.name = name;
            gc.spec_path = spec_path.string();
            gc.spec_text = spec_text;
            const std::string cls = g.at("class").get<std::string>();
            if (cls.size() != 1 || std::string("WBME").find(cls[0]) == std::string::npos)
                throw ParseError(index_path + ": case " + name + ": bad class '" + cls + "'");
            gc.cls = cls[0];
            gc.semilength = g.value("semilength", false);
            gc.golden_path = (root / g.at("file").get<std::string>()).string();
            gc.provenance = g.value("provenance", "");
            if (fs::exists(gc.golden_path)) gc.expected = read_rows(gc.golden_path);
            cases.push_back(std::move(gc));
        }
    }
    std::sort(cases.begin(), cases.end(), [](const GoldenCase& a, const GoldenCase& b) {
        return a.name != b.name ? a.name < b.name : a.cls < b.cls;
    });
    return cases;
}

} // namespace kernelpath
