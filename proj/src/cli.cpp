#include "kernelpath/cli.hpp"

#include "kernelpath/asymptotics.hpp"
#include "kernelpath/automaton.hpp"
#include "kernelpath/corpus.hpp"
#include "kernelpath/decimal.hpp"
#include "kernelpath/errors.hpp"
#include "kernelpath/gf.hpp"
#include "kernelpath/kernel.hpp"
#include "kernelpath/model.hpp"
#include "kernelpath/oracle.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

namespace kernelpath {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace {

struct ModelInput {
    std::string spec_file;
    std::string inline_text;
};

void add_model_options(CLI::App* cmd, ModelInput& mi) {
    auto* spec = cmd->add_option("--spec", mi.spec_file, "model file");
    auto* inl = cmd->add_option("--inline", mi.inline_text, "model text given directly");
    spec->excludes(inl);
    inl->excludes(spec);
}

struct LoadedModel {
    ConstraintSpec spec;
    Automaton automaton;
};

LoadedModel load_model(const ModelInput& mi) {
    std::string text;
    std::string base_dir;
    if (!mi.spec_file.empty()) {
        std::ifstream in(mi.spec_file);
        if (!in) throw ParseError("cannot open model file " + mi.spec_file);
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
        base_dir = fs::path(mi.spec_file).parent_path().string();
    } else if (!mi.inline_text.empty()) {
        text = mi.inline_text;
    } else {
        throw InvalidConfig("one of --spec or --inline is required");
    }
    ConstraintSpec spec = parse_spec(text);
    Automaton a = automaton_for_spec(spec, base_dir);
    return {std::move(spec), std::move(a)};
}

Rat parse_rat_arg(const std::string& tok) {
    try {
        Rat q(tok);
        if (q.get_den() == 0) throw InvalidConfig("zero denominator in '" + tok + "'");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InvalidConfig("bad rational value '" + tok + "'");
    }
}

std::string class_name(char cls) {
    switch (cls) {
        case 'W': return "walks";
        case 'B': return "bridges";
        case 'M': return "meanders";
        default: return "excursions";
    }
}

std::string row_text(const VPoly& p) {
    if (p.is_constant()) return rat_str(p.coeff(0));
    return p.str("v");
}

std::string row_flat(const VPoly& p) {
    const auto& cs = p.coeffs();
    if (cs.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) s += ' ';
        s += rat_str(cs[i]);
    }
    return s;
}

ojson row_json(const VPoly& p) {
    if (p.is_constant()) return rat_str(p.coeff(0));
    ojson arr = ojson::array();
    for (const Rat& c : p.coeffs()) arr.push_back(rat_str(c));
    return arr;
}

// The full bivariate series of one counting class, by either route.
ULaurent class_bivariate(const Automaton& a, char cls, int order, bool closed_route) {
    const UMatrix adj = adjacency(a, order);
    const bool walk_side = (cls == 'W' || cls == 'B');
    if (closed_route) {
        const KernelSystem ks = analyze_kernel(adj);
        if (walk_side) return closed_form_walks(ks);
        const std::vector<ULaurent> mv = iterate_meanders(adj, order);
        const BoundaryData bd = boundary_data(adj, ks, mv);
        return closed_form_meanders(ks, bd);
    }
    std::vector<ULaurent> v = walk_side ? iterate_walks(adj, order) : iterate_meanders(adj, order);
    ULaurent sum = ULaurent::zero(order);
    for (const ULaurent& x : v) sum += x;
    return sum;
}

TruncSeries class_stream(const Automaton& a, char cls, int order,
                         const std::optional<Rat>& u, bool closed_route) {
    const ULaurent full = class_bivariate(a, cls, order, closed_route);
    switch (cls) {
        case 'W':
        case 'M': return u ? full.eval_u(*u) : full.eval_u1();
        case 'B': return full.coeff_u(0);
        default: return full.eval_u(Rat(0));
    }
}

// ---------------------------------------------------------------- automaton

struct AutomatonOpts {
    ModelInput model;
    std::string format = "dot";
};

int cmd_automaton(const AutomatonOpts& o, std::ostream& out) {
    const LoadedModel lm = load_model(o.model);
    const Automaton& a = lm.automaton;
    const StepSet& s = a.steps();
    if (o.format == "dot") {
        out << export_dot(a);
        return 0;
    }
    if (o.format == "text") {
        out << "model: " << render_spec(lm.spec) << "\n";
        out << "states: " << a.state_count() << "\n";
        out << "transitions: " << a.defined_transition_count()
            << (a.has_marks() ? " (with marks)" : "") << "\n";
        for (int st = 0; st < a.state_count(); ++st) {
            out << "  " << st << ":";
            bool first = true;
            for (int k = 0; k < s.size(); ++k) {
                const auto tr = a.transition(st, k);
                if (!tr) continue;
                out << (first ? " " : ", ") << s.at(k).name << " -> " << tr->target;
                if (tr->marked) out << " [marked]";
                first = false;
            }
            if (first) out << " (dead end)";
            out << "\n";
        }
        return 0;
    }
    ojson doc;
    doc["schema"] = 1;
    doc["command"] = "automaton";
    doc["model"] = render_spec(lm.spec);
    doc["states"] = a.state_count();
    doc["initial"] = Automaton::initial_state;
    doc["marked"] = a.has_marks();
    ojson trans = ojson::array();
    for (int st = 0; st < a.state_count(); ++st) {
        for (int k = 0; k < s.size(); ++k) {
            const auto tr = a.transition(st, k);
            if (!tr) continue;
            ojson t;
            t["from"] = st;
            t["step"] = s.at(k).name;
            t["to"] = tr->target;
            t["marked"] = tr->marked;
            trans.push_back(std::move(t));
        }
    }
    doc["transitions"] = std::move(trans);
    out << doc.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- kernel

struct KernelOpts {
    ModelInput model;
    int order = 12;
    std::string format = "text";
};

int cmd_kernel(const KernelOpts& o, std::ostream& out) {
    const LoadedModel lm = load_model(o.model);
    const UMatrix adj = adjacency(lm.automaton, o.order);
    const KernelSystem ks = analyze_kernel(adj);
    if (o.format == "text") {
        out << "model: " << render_spec(lm.spec) << "\n";
        out << "states: " << lm.automaton.state_count() << "\n";
        out << "K(t,u) = " << ks.kernel.str() << "\n";
        out << "pole order at u=0: c_K = " << ks.factor.c_K << "\n";
        out << "small roots: e = " << ks.factor.e << "\n";
        out << "small factor = " << ks.factor.small.str() << "\n";
        out << "unit cofactor = " << ks.factor.unit.str() << "\n";
        return 0;
    }
    ojson doc;
    doc["schema"] = 1;
    doc["command"] = "kernel";
    doc["model"] = render_spec(lm.spec);
    doc["order"] = o.order;
    doc["kernel"] = ks.kernel.str();
    doc["c_K"] = ks.factor.c_K;
    doc["e"] = ks.factor.e;
    doc["small"] = ks.factor.small.str();
    doc["unit"] = ks.factor.unit.str();
    out << doc.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- series

struct SeriesOpts {
    ModelInput model;
    std::string cls = "E";
    int terms = 10;
    int order = 0;
    bool semilength = false;
    std::string route = "closed";
    std::string format = "text";
    std::string u;
};

int cmd_series(const SeriesOpts& o, std::ostream& out) {
    const LoadedModel lm = load_model(o.model);
    const char cls = o.cls[0];
    const int maxlen = lm.spec.steps.max_length();
    const int half = o.semilength ? 2 : 1;
    const int need = half * o.terms;
    const int min_required = std::max(need, o.terms * maxlen);
    const int order = o.order > 0 ? o.order : std::max({64, 2 * o.terms * maxlen, need});
    if (order < min_required)
        throw InvalidConfig("order " + std::to_string(order) + " is too small for " +
                            std::to_string(o.terms) + " coefficients (need at least " +
                            std::to_string(min_required) + ")");
    std::optional<Rat> u;
    if (!o.u.empty()) {
        if (cls == 'B' || cls == 'E') throw InvalidConfig("--u applies to classes W and M only");
        u = parse_rat_arg(o.u);
    }

    TruncSeries s = class_stream(lm.automaton, cls, order, u, o.route == "closed");
    if (o.semilength) s = substitute_semilength(s);

    std::vector<VPoly> rows;
    for (int n = 0; n < o.terms; ++n) rows.push_back(s.coeff(n));

    if (o.format == "bfile") {
        for (int n = 0; n < o.terms; ++n) out << n << ' ' << row_flat(rows[n]) << "\n";
        return 0;
    }
    if (o.format == "text") {
        out << "# " << class_name(cls) << (o.semilength ? " by semilength" : " by length")
            << " for: " << render_spec(lm.spec) << "\n";
        for (int n = 0; n < o.terms; ++n) out << n << ": " << row_text(rows[n]) << "\n";
        return 0;
    }
    ojson doc;
    doc["schema"] = 1;
    doc["command"] = "series";
    doc["model"] = render_spec(lm.spec);
    doc["class"] = std::string(1, cls);
    doc["semilength"] = o.semilength;
    doc["route"] = o.route;
    doc["order"] = order;
    if (u) doc["u"] = rat_str(*u);
    ojson jrows = ojson::array();
    for (int n = 0; n < o.terms; ++n) jrows.push_back(ojson::array({n, row_json(rows[n])}));
    doc["rows"] = std::move(jrows);
    out << doc.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------ moments

struct MomentsOpts {
    ModelInput model;
    int terms = 100;
    bool semilength = false;
    std::string format = "text";
};

int cmd_moments(const MomentsOpts& o, std::ostream& out) {
    const LoadedModel lm = load_model(o.model);
    if (!lm.automaton.has_marks())
        throw NoMarkInSpec("moments need a marked model (a mark pattern or marked automaton transitions)");
    const int half = o.semilength ? 2 : 1;
    const int raw_top = o.terms * half;

    const std::vector<VPoly> raw = excursion_distribution(lm.automaton, raw_top);
    std::vector<VPoly> dists;
    if (o.semilength) {
        for (std::size_t i = 0; i < raw.size(); ++i) {
            if (i % 2 == 1) {
                if (!raw[i].is_zero())
                    throw OddCoefficientPresent("excursions of odd length " + std::to_string(i) +
                                                " exist; semilength indexing is invalid here");
            } else {
                dists.push_back(raw[i]);
            }
        }
    } else {
        dists = raw;
    }

    const std::vector<MomentRow> table = moment_table(dists);
    if (table.empty()) throw EmptyClass("no excursions up to the requested size");

    std::vector<Rat> counts;
    counts.reserve(dists.size());
    for (const VPoly& d : dists) counts.push_back(d.eval_one());

    std::optional<RhoEstimate> rho;
    try {
        rho = estimate_rho(counts);
    } catch (const InsufficientData&) {
    }
    std::optional<SlopeEstimate> slopes;
    if (table.back().n >= 200) {
        try {
            slopes = estimate_slopes(table);
        } catch (const InsufficientData&) {
        }
    }
    std::optional<Rat> skew;
    try {
        skew = normality_diagnostic(dists[table.back().n]);
    } catch (const ZeroVariance&) {
    }

    if (o.format == "text") {
        out << "model: " << render_spec(lm.spec) << "\n";
        out << "excursions by " << (o.semilength ? "semilength" : "length") << " up to "
            << o.terms << "\n";
        const std::size_t first = table.size() > 10 ? table.size() - 10 : 0;
        out << "last rows (n, mean, variance):\n";
        for (std::size_t i = first; i < table.size(); ++i) {
            out << "  " << table[i].n << "  " << decimal_string(table[i].mean, 15) << "  "
                << decimal_string(table[i].variance, 15) << "\n";
        }
        if (rho) {
            out << "singularity radius estimate: " << decimal_string(rho->value, 30)
                << " (raw ratio " << decimal_string(rho->raw_ratio, 15) << ")\n";
        }
        if (slopes) {
            out << "mean growth per step (top decile): "
                << decimal_string(slopes->mean_slope, 30) << "\n";
            out << "variance growth per step (top decile): "
                << decimal_string(slopes->variance_slope, 30) << "\n";
        }
        if (skew) {
            out << "skewness at n=" << table.back().n << ": " << decimal_string(*skew, 30)
                << "\n";
        }
        return 0;
    }

    ojson doc;
    doc["schema"] = 1;
    doc["command"] = "moments";
    doc["model"] = render_spec(lm.spec);
    doc["semilength"] = o.semilength;
    doc["n_max"] = table.back().n;
    ojson jrows = ojson::array();
    for (const MomentRow& r : table) {
        ojson jr;
        jr["n"] = r.n;
        jr["count"] = rat_str(counts[static_cast<std::size_t>(r.n)]);
        jr["mean"] = rat_str(r.mean);
        jr["mean_decimal"] = decimal_string(r.mean, 15);
        jr["variance"] = rat_str(r.variance);
        jr["variance_decimal"] = decimal_string(r.variance, 15);
        jrows.push_back(std::move(jr));
    }
    doc["rows"] = std::move(jrows);
    if (rho) {
        ojson jr;
        jr["value"] = rat_str(rho->value);
        jr["decimal"] = decimal_string(rho->value, 30);
        jr["raw_ratio_decimal"] = decimal_string(rho->raw_ratio, 30);
        doc["rho"] = std::move(jr);
    }
    if (slopes) {
        ojson js;
        js["mean"] = rat_str(slopes->mean_slope);
        js["mean_decimal"] = decimal_string(slopes->mean_slope, 30);
        js["variance"] = rat_str(slopes->variance_slope);
        js["variance_decimal"] = decimal_string(slopes->variance_slope, 30);
        doc["slopes"] = std::move(js);
    }
    if (skew) {
        ojson jk;
        jk["value"] = rat_str(*skew);
        jk["decimal"] = decimal_string(*skew, 30);
        doc["skewness"] = std::move(jk);
    }
    out << doc.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- verify

struct VerifyOpts {
    ModelInput model;
    std::string corpus_dir;
    int max_length = 14;
    int route_order = 24;
    int product_order = 64;
    bool regolden = false;
};

// Number of failed checks; prints one line per check.
int verify_model(const std::string& label, const Automaton& a, const VerifyOpts& o,
                 std::ostream& out) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what, const std::string& detail) {
        if (ok) {
            out << "ok    " << label << ": " << what << "\n";
        } else {
            out << "FAIL  " << label << ": " << what << ": " << detail << "\n";
            ++failures;
        }
    };

    const int L = o.max_length;
    const DPTable walks(a, PathMode::Walk, L);
    const DPTable mdrs(a, PathMode::Meander, L);
    const int lo = std::max(o.route_order, L + 1);
    const UMatrix adj = adjacency(a, lo);
    const GFBundle bundle = iterate_bundle(adj, lo);
    const KernelSystem ks = analyze_kernel(adj);
    const ULaurent cw = closed_form_walks(ks);
    const BoundaryData bd = boundary_data(adj, ks, bundle.meander_vector);
    const ULaurent cm = closed_form_meanders(ks, bd);

    {
        const TruncSeries w1 = cw.eval_u1();
        const TruncSeries b0 = cw.coeff_u(0);
        const TruncSeries m1 = cm.eval_u1();
        const TruncSeries e0 = cm.eval_u(Rat(0));
        const auto wse = walks.class_series('W');
        const auto bse = walks.class_series('B');
        const auto mse = mdrs.class_series('M');
        const auto ese = mdrs.class_series('E');
        std::string detail;
        for (int n = 0; n <= L && detail.empty(); ++n) {
            if (w1.coeff(n) != wse[n]) detail = "walks differ at length " + std::to_string(n);
            else if (b0.coeff(n) != bse[n]) detail = "bridges differ at length " + std::to_string(n);
            else if (m1.coeff(n) != mse[n]) detail = "meanders differ at length " + std::to_string(n);
            else if (e0.coeff(n) != ese[n]) detail = "excursions differ at length " + std::to_string(n);
        }
        check(detail.empty(), "closed forms match exhaustive counts to length " + std::to_string(L),
              detail);
    }

    {
        const bool okw = agree_to_order(bundle.W, cw, lo);
        const bool okm = agree_to_order(bundle.M, cm, lo);
        check(okw && okm, "iterated and closed-form series agree to t^" + std::to_string(lo),
              okw ? "meander routes disagree" : "walk routes disagree");
    }

    {
        const UMatrix prod = ks.eye_minus_a * ks.adjug;
        std::string detail;
        for (int i = 0; i < prod.dim && detail.empty(); ++i) {
            for (int j = 0; j < prod.dim && detail.empty(); ++j) {
                const ULaurent expect = i == j ? ks.kernel : ULaurent::zero(lo);
                if (!agree_to_order(prod.at(i, j), expect, lo))
                    detail = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            }
        }
        check(detail.empty(), "adjugate identity (I-A) adj = K I holds", detail);
    }

    {
        const int po = o.product_order;
        const UMatrix adj_hi = adjacency(a, po);
        const UMatrix eye_minus = UMatrix::identity(adj_hi.dim, po) - adj_hi;
        const KernelData kd = small_factor(determinant(eye_minus));
        std::string detail;
        if (kd.e != kd.c_K) {
            detail = "small-root count differs from the pole order";
        } else if (!kd.small.is_zero() && kd.small.max_deg() != kd.e) {
            detail = "small factor has the wrong u-degree";
        } else if (!agree_to_order(kd.small * kd.unit, kd.cleared, po)) {
            detail = "product differs from the cleared kernel";
        } else {
            // t = 0 slices: small must start at u^e, the unit at 1
            for (int k = 0; k <= kd.e && detail.empty(); ++k) {
                const Rat c = kd.small.coeff_u(k).coeff(0).coeff(0);
                if (c != (k == kd.e ? 1 : 0)) detail = "small factor t^0 slice is not u^e";
            }
            if (detail.empty() && kd.unit.coeff_u(0).coeff(0).coeff(0) != 1)
                detail = "unit t^0 slice does not start at 1";
        }
        check(detail.empty(),
              "factor split u^c K = small * unit verified at t^" + std::to_string(po), detail);
    }

    return failures;
}

// Number of failed checks (0 or 1); prints one line.
int verify_golden(const GoldenCase& gc, const Automaton& a, const VerifyOpts& o,
                  std::ostream& out) {
    const int half = gc.semilength ? 2 : 1;
    const std::string label = gc.name + " [" + std::string(1, gc.cls) +
                              (gc.semilength ? "/semilength]" : "]");

    std::size_t rows_wanted = o.regolden ? (gc.semilength ? 9 : 17) : gc.expected.size();
    if (rows_wanted == 0) {
        out << "FAIL  " << label << ": golden rows: file missing or empty (" << gc.golden_path
            << ")\n";
        return 1;
    }
    const int L = static_cast<int>(rows_wanted - 1) * half;
    if (L > 40) {
        out << "FAIL  " << label << ": golden rows: horizon " << L
            << " too deep for exhaustive recount\n";
        return 1;
    }

    const PathMode mode = (gc.cls == 'W' || gc.cls == 'B') ? PathMode::Walk : PathMode::Meander;
    const DPTable table(a, mode, L);
    const std::vector<VPoly> series = table.class_series(gc.cls);

    std::vector<VPoly> rows;
    for (std::size_t i = 0; i < rows_wanted; ++i) {
        const std::size_t raw = i * static_cast<std::size_t>(half);
        rows.push_back(series[raw]);
    }
    if (gc.semilength) {
        for (std::size_t raw = 1; raw < series.size(); raw += 2) {
            if (!series[raw].is_zero()) {
                out << "FAIL  " << label << ": golden rows: odd length " << raw
                    << " is populated, semilength indexing invalid\n";
                return 1;
            }
        }
    }

    if (o.regolden) {
        write_rows(gc.golden_path, rows, "exhaustive dynamic-programming counts");
        out << "wrote " << label << ": " << rows.size() << " rows -> " << gc.golden_path << "\n";
        return 0;
    }

    for (std::size_t i = 0; i < rows_wanted; ++i) {
        if (rows[i] != gc.expected[i]) {
            out << "FAIL  " << label << ": golden row " << i << ": recount gives "
                << row_flat(rows[i]) << ", golden has " << row_flat(gc.expected[i]) << "\n";
            return 1;
        }
    }
    out << "ok    " << label << ": " << rows_wanted << " golden rows match\n";
    return 0;
}

int cmd_verify(const VerifyOpts& o, std::ostream& out) {
    int failures = 0;
    if (!o.corpus_dir.empty()) {
        const std::vector<GoldenCase> cases = corpus_list(o.corpus_dir);
        if (cases.empty()) throw InvalidConfig("corpus " + o.corpus_dir + " has no cases");
        std::string current_name;
        std::optional<Automaton> a;
        for (const GoldenCase& gc : cases) {
            if (gc.name != current_name || !a) {
                current_name = gc.name;
                const ConstraintSpec spec = parse_spec(gc.spec_text);
                a = automaton_for_spec(spec, fs::path(gc.spec_path).parent_path().string());
                failures += verify_model(gc.name, *a, o, out);
            }
            failures += verify_golden(gc, *a, o, out);
        }
    } else {
        const LoadedModel lm = load_model(o.model);
        failures += verify_model("model", lm.automaton, o, out);
    }
    if (failures) {
        out << failures << " check(s) failed\n";
        return 3;
    }
    out << "all checks passed\n";
    return 0;
}

int classify(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const UnknownStep*>(&e) ||
        dynamic_cast<const InvalidStep*>(&e) || dynamic_cast<const DanglingState*>(&e) ||
        dynamic_cast<const UnsupportedStepSet*>(&e) || dynamic_cast<const InvalidConfig*>(&e) ||
        dynamic_cast<const NoMarkInSpec*>(&e))
        return 2;
    return 4;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact kernel-method engine for lattice paths with longer steps"};
    app.name("kernelpath");
    app.require_subcommand(1);

    AutomatonOpts ao;
    auto* c_auto = app.add_subcommand("automaton", "build the constraint automaton");
    add_model_options(c_auto, ao.model);
    c_auto->add_option("--format", ao.format, "dot, text or json")
        ->check(CLI::IsMember({"dot", "text", "json"}));

    KernelOpts ko;
    auto* c_kernel = app.add_subcommand("kernel", "kernel determinant and its factor split");
    add_model_options(c_kernel, ko.model);
    c_kernel->add_option("--order", ko.order, "series truncation order")->check(CLI::Range(1, 4096));
    c_kernel->add_option("--format", ko.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    SeriesOpts so;
    auto* c_series = app.add_subcommand("series", "counting series of one class");
    add_model_options(c_series, so.model);
    c_series->add_option("--class", so.cls, "W, B, M or E (default E)")
        ->check(CLI::IsMember({"W", "B", "M", "E"}));
    c_series->add_option("--terms", so.terms, "number of coefficients")->check(CLI::Range(1, 100000));
    c_series->add_option("--order", so.order, "series truncation order (default derived)")
        ->check(CLI::Range(1, 1000000));
    c_series->add_flag("--semilength", so.semilength, "index by half the raw length");
    c_series->add_option("--route", so.route, "closed or iterate")
        ->check(CLI::IsMember({"closed", "iterate"}));
    c_series->add_option("--format", so.format, "text, bfile or json")
        ->check(CLI::IsMember({"text", "bfile", "json"}));
    c_series->add_option("--u", so.u, "evaluate the altitude variable at this rational");

    MomentsOpts mo;
    auto* c_moments = app.add_subcommand("moments", "mark statistics of excursions");
    add_model_options(c_moments, mo.model);
    c_moments->add_option("--terms", mo.terms, "largest size in the table")
        ->check(CLI::Range(1, 100000));
    c_moments->add_flag("--semilength", mo.semilength, "index by half the raw length");
    c_moments->add_option("--format", mo.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    VerifyOpts vo;
    auto* c_verify = app.add_subcommand("verify", "cross-check all computation routes");
    add_model_options(c_verify, vo.model);
    c_verify->add_option("--corpus", vo.corpus_dir, "corpus directory with index.json");
    c_verify->add_option("--max-length", vo.max_length, "exhaustive-count horizon")
        ->check(CLI::Range(1, 40));
    c_verify->add_option("--order", vo.route_order, "route-agreement order")
        ->check(CLI::Range(8, 512));
    c_verify->add_option("--product-order", vo.product_order, "factor-product check order")
        ->check(CLI::Range(8, 512));
    c_verify->add_flag("--regolden", vo.regolden, "rewrite golden rows from the exhaustive counts");

    std::vector<const char*> argv;
    argv.push_back("kernelpath");
    for (const std::string& s : args) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_auto->parsed()) return cmd_automaton(ao, out);
        if (c_kernel->parsed()) return cmd_kernel(ko, out);
        if (c_series->parsed()) return cmd_series(so, out);
        if (c_moments->parsed()) return cmd_moments(mo, out);
        if (c_verify->parsed()) {
            if (vo.regolden && vo.corpus_dir.empty())
                throw InvalidConfig("--regolden needs --corpus");
            return cmd_verify(vo, out);
        }
        err << "usage error: no command given\n";
        return 1;
    } catch (const Error& e) {
        const int code = classify(e);
        err << (code == 2 ? "model error: " : "error: ") << e.what() << "\n";
        return code;
    }
}

} // namespace kernelpath
