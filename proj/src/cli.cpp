#include "flowers/cli.hpp"

#include <cmath>
#include <cstdio>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "flowers/complete_flower.hpp"
#include "flowers/cycle_flower.hpp"
#include "flowers/flower.hpp"
#include "flowers/graph.hpp"
#include "flowers/resistance.hpp"

namespace flowers::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

struct Range {
    int lo = 0;
    int hi = -1;
    bool empty() const { return hi < lo; }
};

Range parse_range(const std::string& text, const char* what) {
    Range r;
    try {
        const auto colon = text.find(':');
        if (colon == std::string::npos) {
            r.lo = r.hi = std::stoi(text);
        } else {
            r.lo = std::stoi(text.substr(0, colon));
            r.hi = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw UsageError(std::string("bad ") + what + " range '" + text + "', expected lo:hi");
    }
    if (r.empty()) {
        throw UsageError(std::string("empty ") + what + " range '" + text + "'");
    }
    return r;
}

struct FamilyOptions {
    std::string family = "complete";
    int m = 3;
    int n = 3;
    std::optional<int> p;
    std::string base_path;
    int x = -1;
    int y = -1;
};

/// One flower together with the closed forms that apply to its family.
class Instance {
public:
    std::string family;
    int m = 0;
    int n = 0;
    std::optional<int> p;
    FlowerSpec spec;
    std::shared_ptr<const BaseResistanceSource> source;

    Rational pair(const FlowerLocator& u, const FlowerLocator& v) const {
        if (canonical_locator(spec, u.petal, u.base_vertex) == canonical_locator(spec, v.petal, v.base_vertex)) {
            return Rational(0);
        }
        if (family == "complete") {
            const auto pos = complete_pair_position(spec, u, v);
            return cf_resistance(CompleteFlowerParams{m, n}, pos.pair_case, pos.d);
        }
        if (family == "cycle") {
            const CycleFlowerParams params{m, n, *p};
            return gs_resistance(params, cycle_pair_position(params, u, v));
        }
        return flower_resistance(spec, u, v, *source);
    }

    Rational kirchhoff() const {
        if (family == "complete") return cf_kirchhoff(CompleteFlowerParams{m, n});
        if (family == "cycle") return gs_kirchhoff(CycleFlowerParams{m, n, *p});
        return flower_kirchhoff_exact(spec, *source);
    }

    Rational kemeny() const {
        if (family == "complete") return cf_kemeny(CompleteFlowerParams{m, n});
        if (family == "cycle") return gs_kemeny(CycleFlowerParams{m, n, *p});
        return flower_kemeny_exact(spec, *source);
    }

};

/// Generic bases are loaded once and shared between instances.
struct GenericBase {
    std::optional<Graph> graph;
    std::shared_ptr<const BaseResistanceSource> source;
};

GenericBase load_generic(const FamilyOptions& opts) {
    if (opts.family != "generic") {
        return {};
    }
    if (opts.base_path.empty()) {
        throw UsageError("--family generic needs --base <edge-list-file>");
    }
    if (opts.x < 0 || opts.y < 0) {
        throw UsageError("--family generic needs --x and --y");
    }
    GenericBase g;
    try {
        g.graph = read_edge_list_file(opts.base_path);
    } catch (const GraphError& e) {
        throw UsageError(e.what());
    }
    g.source = std::make_shared<RationalizedOracleResistance>(*g.graph);
    return g;
}

Instance make_instance(const FamilyOptions& opts, const GenericBase& generic, int m, int n, std::optional<int> p) {
    try {
        if (opts.family == "complete") {
            const CompleteFlowerParams params{m, n};
            return Instance{"complete", m, n, std::nullopt, complete_flower_spec(params),
                            std::make_shared<CompleteBaseResistance>(m)};
        }
        if (opts.family == "cycle") {
            if (!p) {
                throw UsageError("--family cycle needs -p");
            }
            const CycleFlowerParams params{m, n, *p};
            return Instance{"cycle", m, n, p, cycle_flower_spec(params), std::make_shared<CycleBaseResistance>(m)};
        }
        FlowerSpec spec(*generic.graph, opts.x, opts.y, n);
        return Instance{"generic", generic.graph->vertex_count(), n, std::nullopt, std::move(spec), generic.source};
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

Instance single_instance(const FamilyOptions& opts) {
    const GenericBase generic = load_generic(opts);
    return make_instance(opts, generic, opts.m, opts.n, opts.p);
}

void add_family_options(CLI::App* cmd, FamilyOptions& opts) {
    cmd->add_option("--family", opts.family, "Flower family")
        ->check(CLI::IsMember({"generic", "complete", "cycle"}));
    cmd->add_option("-m", opts.m, "Base vertex count (complete/cycle)");
    cmd->add_option("-n", opts.n, "Petal count");
    cmd->add_option("-p", opts.p, "Cycle distance between x and y (cycle family)");
    cmd->add_option("--base", opts.base_path, "Base graph edge-list file (generic family)");
    cmd->add_option("--x", opts.x, "Marked vertex x of the base graph (generic family)");
    cmd->add_option("--y", opts.y, "Marked vertex y of the base graph (generic family)");
}

struct OutputMode {
    bool exact = false;
    bool oracle = false;
    bool want_exact() const { return exact || !oracle; }
    bool want_oracle() const { return oracle || !exact; }
};

void print_value(std::ostream& out, const OutputMode& mode, const Rational& closed, double oracle) {
    if (mode.exact && !mode.oracle) {
        out << closed.to_string() << '\n';
    } else if (mode.oracle && !mode.exact) {
        out << format_double(oracle) << '\n';
    } else {
        out << "closed_form " << closed.to_string() << '\n';
        out << "oracle " << format_double(oracle) << '\n';
    }
}

double max_entry(const ResistanceMatrix& r) {
    return r.size() == 0 ? 0.0 : r.entries().maxCoeff();
}

// ----------------------------------------------------------------------------

int cmd_gen(const FamilyOptions& opts, std::ostream& out) {
    const Instance inst = single_instance(opts);
    write_edge_list(out, build_flower(inst.spec).graph());
    return kExitOk;
}

int cmd_resist(const FamilyOptions& opts, const std::vector<std::string>& pair, const OutputMode& mode,
               std::ostream& out) {
    const Instance inst = single_instance(opts);
    const Flower flower = build_flower(inst.spec);
    if (!pair.empty()) {
        FlowerLocator u;
        FlowerLocator v;
        try {
            u = parse_locator(inst.spec, pair.at(0));
            v = parse_locator(inst.spec, pair.at(1));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        const Rational closed = mode.want_exact() ? inst.pair(u, v) : Rational(0);
        const double oracle =
            mode.want_oracle() ? resistance(flower.graph(), flower.label(u), flower.label(v)) : 0.0;
        print_value(out, mode, closed, oracle);
        return kExitOk;
    }
    const int size = flower.graph().vertex_count();
    if (mode.oracle && !mode.exact) {
        const ResistanceMatrix r = resistance_matrix(flower.graph());
        for (int i = 0; i < size; ++i) {
            for (int j = 0; j < size; ++j) {
                out << (j ? " " : "") << format_double(r(i, j));
            }
            out << '\n';
        }
        return kExitOk;
    }
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < size; ++j) {
            out << (j ? " " : "") << inst.pair(flower.locator(i), flower.locator(j)).to_string();
        }
        out << '\n';
    }
    return kExitOk;
}

int cmd_index(const FamilyOptions& opts, bool kemeny, const OutputMode& mode, std::ostream& out) {
    const Instance inst = single_instance(opts);
    Rational closed(0);
    double oracle = 0.0;
    if (mode.want_exact()) {
        closed = kemeny ? inst.kemeny() : inst.kirchhoff();
    }
    if (mode.want_oracle()) {
        const Flower flower = build_flower(inst.spec);
        const ResistanceMatrix r = resistance_matrix(flower.graph());
        oracle = kemeny ? kemeny_numeric(flower.graph(), r) : kirchhoff_numeric(r);
    }
    print_value(out, mode, closed, oracle);
    return kExitOk;
}

int cmd_bounds(const FamilyOptions& opts, std::ostream& out) {
    const Instance inst = single_instance(opts);
    const Graph& base = inst.spec.base();
    const Rational r_xy = (*inst.source)(inst.spec.x(), inst.spec.y());
    const Bounds kf = kirchhoff_bounds(inst.spec, base_kirchhoff_exact(base, *inst.source), r_xy);
    const Bounds kem = kemeny_bounds(inst.spec, base_kemeny_exact(base, *inst.source), r_xy, base.edge_count(),
                                     base.vertex_count());
    out << "quantity lo hi actual\n";
    out << "kirchhoff " << kf.lo << ' ' << kf.hi << ' ' << inst.kirchhoff() << '\n';
    out << "kemeny " << kem.lo << ' ' << kem.hi << ' ' << inst.kemeny() << '\n';
    return kExitOk;
}

int cmd_maxres(const FamilyOptions& opts, std::ostream& out) {
    const Instance inst = single_instance(opts);
    const MaxResistance best = max_resistance_search(inst.spec, *inst.source);
    const int n = inst.spec.n();
    out << "u=" << to_string(best.u) << " v=" << to_string(best.v) << " d=" << best.d
        << " value=" << best.value << " approx=" << format_double(best.value.to_double())
        << " window=" << (in_max_window(best.d, n) ? "ok" : "violated");
    if (n % 2 == 1 && best.d != (n + 1) / 2) {
        out << " odd_n_refinement=violated";
    }
    out << '\n';
    return kExitOk;
}

struct SweepOptions {
    std::string m_range;
    std::string n_range;
    std::string p_range;
};

template <typename Visit>
void for_each_instance(const FamilyOptions& opts, const SweepOptions& sweep, Visit&& visit) {
    const GenericBase generic = load_generic(opts);
    const Range ns = sweep.n_range.empty() ? Range{opts.n, opts.n} : parse_range(sweep.n_range, "n");
    if (opts.family == "generic") {
        for (int n = ns.lo; n <= ns.hi; ++n) {
            visit(make_instance(opts, generic, 0, n, std::nullopt));
        }
        return;
    }
    const Range ms = sweep.m_range.empty() ? Range{opts.m, opts.m} : parse_range(sweep.m_range, "m");
    for (int m = ms.lo; m <= ms.hi; ++m) {
        if (opts.family == "complete") {
            for (int n = ns.lo; n <= ns.hi; ++n) {
                visit(make_instance(opts, generic, m, n, std::nullopt));
            }
            continue;
        }
        Range ps{1, m / 2};
        if (!sweep.p_range.empty()) {
            ps = parse_range(sweep.p_range, "p");
        } else if (opts.p) {
            ps = Range{*opts.p, *opts.p};
        }
        for (int n = ns.lo; n <= ns.hi; ++n) {
            for (int p = ps.lo; p <= std::min(ps.hi, m / 2); ++p) {
                visit(make_instance(opts, generic, m, n, p));
            }
        }
    }
}

int cmd_verify(const FamilyOptions& opts, const SweepOptions& sweep, const Tolerance& tol, std::ostream& out) {
    long specs = 0;
    long checks = 0;
    long failures = 0;
    for_each_instance(opts, sweep, [&](const Instance& inst) {
        ++specs;
        const Flower flower = build_flower(inst.spec);
        const ResistanceMatrix r = resistance_matrix(flower.graph());
        auto report = [&](const std::string& what, const Rational& expected, double observed) {
            ++checks;
            if (!tol.close(expected.to_double(), observed)) {
                ++failures;
                out << failure_line(inst.family, inst.m, inst.n, inst.p, what, expected.to_string(), observed)
                    << '\n';
            }
        };
        const int size = flower.graph().vertex_count();
        for (int i = 0; i < size; ++i) {
            for (int j = i + 1; j < size; ++j) {
                const FlowerLocator& u = flower.locator(i);
                const FlowerLocator& v = flower.locator(j);
                report("pair=" + to_string(u) + "," + to_string(v), inst.pair(u, v), r(i, j));
            }
        }
        report("kirchhoff", inst.kirchhoff(), kirchhoff_numeric(r));
        report("kemeny", inst.kemeny(), kemeny_numeric(flower.graph(), r));
    });
    out << "verify: " << specs << " specs, " << checks << " checks, " << failures << " failures (tol "
        << format_double(tol.absolute) << ")\n";
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int cmd_sweep(const FamilyOptions& opts, const SweepOptions& sweep, bool json, std::ostream& out) {
    std::vector<SweepRow> rows;
    for_each_instance(opts, sweep, [&](const Instance& inst) {
        const Flower flower = build_flower(inst.spec);
        const ResistanceMatrix r = resistance_matrix(flower.graph());
        auto add = [&](const char* quantity, const Rational& closed, double oracle) {
            rows.push_back(SweepRow{inst.family, inst.m, inst.n, inst.p, quantity, closed.to_string(), oracle,
                                    std::abs(closed.to_double() - oracle)});
        };
        add("kirchhoff", inst.kirchhoff(), kirchhoff_numeric(r));
        add("kemeny", inst.kemeny(), kemeny_numeric(flower.graph(), r));
        add("max_resistance", max_resistance_search(inst.spec, *inst.source).value, max_entry(r));
    });
    if (json) {
        out << to_json(rows) << '\n';
    } else {
        out << kCsvHeader << '\n';
        for (const auto& row : rows) {
            out << to_csv(row) << '\n';
        }
    }
    return kExitOk;
}

}  // namespace

std::string failure_line(const std::string& family, int m, int n, std::optional<int> p, const std::string& what,
                         const std::string& expected, double observed) {
    return "FAIL family=" + family + " m=" + std::to_string(m) + " n=" + std::to_string(n) +
           " p=" + (p ? std::to_string(*p) : std::string("-")) + ' ' + what + " expected=" + expected +
           " observed=" + format_double(observed);
}

std::string to_csv(const SweepRow& row) {
    std::ostringstream s;
    s << row.family << ',' << row.m << ',' << row.n << ',' << (row.p ? std::to_string(*row.p) : "") << ','
      << row.quantity << ',' << row.closed_form << ',' << format_double(row.oracle) << ','
      << format_double(row.abs_error);
    return s.str();
}

std::string to_json(const std::vector<SweepRow>& rows) {
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
        doc.push_back({{"family", row.family},
                       {"m", row.m},
                       {"n", row.n},
                       {"p", row.p ? nlohmann::ordered_json(*row.p) : nlohmann::ordered_json(nullptr)},
                       {"quantity", row.quantity},
                       {"closed_form", row.closed_form},
                       {"oracle", row.oracle},
                       {"abs_error", row.abs_error}});
    }
    return doc.dump(2);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Flower graph resistances: constructions, closed forms and a numeric oracle", "flowerctl"};
    app.require_subcommand(1);

    FamilyOptions opts;
    OutputMode mode;
    SweepOptions sweep;
    std::vector<std::string> pair;
    bool json = false;
    std::optional<double> tol_flag;

    auto* gen = app.add_subcommand("gen", "Write the flower's edge list");
    auto* resist = app.add_subcommand("resist", "Resistance of one pair (--pair) or the full matrix");
    auto* kirchhoff = app.add_subcommand("kirchhoff", "Kirchhoff index");
    auto* kemeny = app.add_subcommand("kemeny", "Kemeny's constant");
    auto* bounds = app.add_subcommand("bounds", "Kirchhoff/Kemeny bounds and the actual values");
    auto* maxres = app.add_subcommand("maxres", "Maximum-resistance pair");
    auto* verify = app.add_subcommand("verify", "Closed forms vs oracle over a parameter sweep");
    auto* sweep_cmd = app.add_subcommand("sweep", "CSV/JSON rows of closed form vs oracle");

    for (auto* cmd : {gen, resist, kirchhoff, kemeny, bounds, maxres, verify, sweep_cmd}) {
        add_family_options(cmd, opts);
    }
    resist->add_option("--pair", pair, "Two locators petal:basevertex")->expected(2);
    for (auto* cmd : {resist, kirchhoff, kemeny}) {
        cmd->add_flag("--exact", mode.exact, "Closed form only, as num/den");
        cmd->add_flag("--oracle", mode.oracle, "Numeric oracle only");
    }
    for (auto* cmd : {verify, sweep_cmd}) {
        cmd->add_option("--m-range", sweep.m_range, "lo:hi (inclusive)");
        cmd->add_option("--n-range", sweep.n_range, "lo:hi (inclusive)");
        cmd->add_option("--p-range", sweep.p_range, "lo:hi (inclusive), cycle family");
        cmd->add_option("--tol", tol_flag, "Absolute tolerance (default 1e-9 or FLOWER_TOL)");
    }
    sweep_cmd->add_flag("--json", json, "Emit JSON instead of CSV");

    std::vector<const char*> argv{"flowerctl"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "flowerctl: " << e.what() << '\n';
        return kExitUsage;
    }

    Tolerance tol = Tolerance::from_env();
    if (tol_flag) {
        if (!(*tol_flag > 0.0)) {
            err << "flowerctl: --tol must be positive\n";
            return kExitUsage;
        }
        tol.absolute = *tol_flag;
    }

    try {
        if (gen->parsed()) return cmd_gen(opts, out);
        if (resist->parsed()) return cmd_resist(opts, pair, mode, out);
        if (kirchhoff->parsed()) return cmd_index(opts, false, mode, out);
        if (kemeny->parsed()) return cmd_index(opts, true, mode, out);
        if (bounds->parsed()) return cmd_bounds(opts, out);
        if (maxres->parsed()) return cmd_maxres(opts, out);
        if (verify->parsed()) return cmd_verify(opts, sweep, tol, out);
        if (sweep_cmd->parsed()) return cmd_sweep(opts, sweep, json, out);
    } catch (const UsageError& e) {
        err << "flowerctl: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "flowerctl: " << e.what() << '\n';
        return kExitUsage;
    }
    err << "flowerctl: no subcommand\n";
    return kExitUsage;
}

}  // namespace flowers::cli
