// emosc command line: evaluate observable series and wavefunctions, reproduce
// the three sample-figure datasets, and run the verification suite.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "emosc/model.hpp"
#include "emosc/observables.hpp"
#include "emosc/states.hpp"
#include "emosc/verify.hpp"

namespace {

using namespace emosc;

// 17 significant digits: round-trip safe and byte-stable across runs.
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

SystemKind parse_kind(const std::string& s) {
    if (s == "to") return SystemKind::TO;
    if (s == "tm") return SystemKind::TM;
    if (s == "tq") return SystemKind::TQ;
    throw DomainError("unknown system '" + s + "' (expected to|tm|tq)");
}

std::ostream& open_sink(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file " + path);
    return file;
}

struct SeriesConfig {
    std::string system = "tq";
    double upsilon = 3.0, omega = 2.0, t0 = 0.0;
    double x0 = 1.0, p0 = 1.0, r = 0.0, theta = 0.0;
    double t_min = 0.0, t_max = 1.0;
    int steps = 101;
    int grid_points = 2001;
    bool with_oracle = false;
    std::string out;
    std::string format = "csv";
};

int cmd_series(const SeriesConfig& cfg) {
    if (cfg.steps < 2) throw DomainError("steps must be >= 2");
    const SystemKind kind = parse_kind(cfg.system);
    const SystemSpec spec = SystemSpec::make(cfg.upsilon, cfg.omega, cfg.t0);

    struct Row {
        double t;
        ObservablePoint pt;
        std::string source;
    };
    std::vector<Row> rows;
    for (int i = 0; i < cfg.steps; ++i) {
        const double t_abs = cfg.t_min + (cfg.t_max - cfg.t_min) * i / (cfg.steps - 1);
        const double t = t_abs - cfg.t0; // native offset
        require_in_domain(spec, TimeCoord{kind, t});
        Row row{t_abs, observable_point(spec, kind, cfg.x0, cfg.p0, cfg.r, cfg.theta, t),
                "closed_form"};
        rows.push_back(row);
        if (cfg.with_oracle) {
            const StateSpec st{kind, SqueezedFamily{cfg.x0, cfg.p0, cfg.r, cfg.theta}};
            const Grid grid = default_grid(spec, st, t, cfg.grid_points);
            const Moments m = quadrature_moments(evaluate_state(spec, st, t, grid));
            Row qrow{t_abs, {}, "quadrature"};
            qrow.pt.t = TimeCoord{kind, t};
            qrow.pt.x_mean = m.x_mean;
            qrow.pt.p_mean = m.p_mean;
            qrow.pt.x_var = m.x_var;
            qrow.pt.p_var = m.p_var;
            qrow.pt.product = m.x_var * m.p_var;
            rows.push_back(qrow);
        }
    }

    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.format == "json") {
        for (const Row& r : rows) {
            nlohmann::ordered_json j;
            j["t"] = r.t;
            j["x_mean"] = r.pt.x_mean;
            j["p_mean"] = r.pt.p_mean;
            j["x_var"] = r.pt.x_var;
            j["p_var"] = r.pt.p_var;
            j["product"] = r.pt.product;
            j["source"] = r.source;
            os << j.dump() << "\n";
        }
    } else {
        os << "t,x_mean,p_mean,x_var,p_var,product,source\n";
        for (const Row& r : rows)
            os << fmt(r.t) << ',' << fmt(r.pt.x_mean) << ',' << fmt(r.pt.p_mean) << ','
               << fmt(r.pt.x_var) << ',' << fmt(r.pt.p_var) << ',' << fmt(r.pt.product) << ','
               << r.source << "\n";
    }
    return 0;
}

struct StateConfig {
    std::string system = "tq";
    std::string family = "coherent";
    double upsilon = 3.0, omega = 2.0, t0 = 0.0;
    double x0 = 1.0, p0 = 1.0, r = 0.5, theta = 0.0;
    int n = 0;
    double t = 0.0;
    int grid_points = 2001;
    std::string out;
    std::string format = "csv";
};

int cmd_state(const StateConfig& cfg) {
    const SystemKind kind = parse_kind(cfg.system);
    const SystemSpec spec = SystemSpec::make(cfg.upsilon, cfg.omega, cfg.t0);
    StateSpec st{kind, CoherentFamily{cfg.x0, cfg.p0}};
    if (cfg.family == "number")
        st.family = NumberFamily{cfg.n};
    else if (cfg.family == "coherent")
        st.family = CoherentFamily{cfg.x0, cfg.p0};
    else if (cfg.family == "squeezed")
        st.family = SqueezedFamily{cfg.x0, cfg.p0, cfg.r, cfg.theta};
    else
        throw DomainError("unknown family '" + cfg.family + "'");

    const double t = cfg.t - cfg.t0;
    const Grid grid = default_grid(spec, st, t, cfg.grid_points);
    const WavefunctionSample s = evaluate_state(spec, st, t, grid);

    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.format == "json") {
        for (int i = 0; i < grid.n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            nlohmann::ordered_json j;
            j["x"] = grid.x(i);
            j["re_psi"] = s.psi[k].real();
            j["im_psi"] = s.psi[k].imag();
            j["abs2"] = std::norm(s.psi[k]);
            j["derived_case"] = s.derived_case;
            os << j.dump() << "\n";
        }
    } else {
        os << "x,re_psi,im_psi,abs2\n";
        for (int i = 0; i < grid.n; ++i) {
            const auto k = static_cast<std::size_t>(i);
            os << fmt(grid.x(i)) << ',' << fmt(s.psi[k].real()) << ',' << fmt(s.psi[k].imag())
               << ',' << fmt(std::norm(s.psi[k])) << "\n";
        }
    }
    return 0;
}

struct FigureConfig {
    int id = 1;
    int steps = 601;
    std::optional<double> match_upsilon;
    std::string out;
    std::string format = "csv";
};

// Sample-figure parameter sets: x0 = p0 = 1, omega = 2 and Upsilon = 5, 4, 3
// for figures 1-3; <x> against native time for the three systems, plus the
// negative-Upsilon TO branch that continues the TO curve to t'-t0' < 0.
int cmd_figure(const FigureConfig& cfg) {
    if (cfg.id < 1 || cfg.id > 3) throw DomainError("figure id must be 1, 2 or 3");
    const double upsilon = cfg.id == 1 ? 5.0 : cfg.id == 2 ? 4.0 : 3.0;
    const SystemSpec spec = SystemSpec::make(upsilon, 2.0);
    const double tm_lo = -2.0, tm_hi = cfg.id == 3 ? 2.5 : 1.2;
    const double to_hi = 6.0;

    struct Row {
        std::string system;
        double t;
        double x;
    };
    std::vector<Row> rows;
    for (int i = 0; i < cfg.steps; ++i) {
        const double tp = to_hi * i / (cfg.steps - 1.0);
        rows.push_back({"to", tp, mean_x(spec, SystemKind::TO, 1.0, 1.0, tp)});
    }
    for (const char* sys : {"tm", "tq"}) {
        const SystemKind kind = sys[1] == 'm' ? SystemKind::TM : SystemKind::TQ;
        for (int i = 0; i < cfg.steps; ++i) {
            const double t = tm_lo + (tm_hi - tm_lo) * i / (cfg.steps - 1.0);
            rows.push_back({sys, t, mean_x(spec, kind, 1.0, 1.0, t)});
        }
    }
    // matched branch: the TO curve of the opposite-sign system, drawn at
    // negative t'-t0' (the original figure captions describe this overlay)
    const double um = cfg.match_upsilon.value_or(-upsilon);
    const SystemSpec mspec = SystemSpec::make(um, 2.0);
    const double s_hi = 0.999 / mspec.abs_upsilon();
    for (int i = 1; i < cfg.steps; ++i) {
        const double s = s_hi * i / (cfg.steps - 1.0);
        rows.push_back({"to_matched", -s, mean_x(mspec, SystemKind::TO, 1.0, 1.0, s)});
    }

    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    if (cfg.format == "json") {
        for (const Row& r : rows) {
            nlohmann::ordered_json j;
            j["system"] = r.system;
            j["t"] = r.t;
            j["x_mean"] = r.x;
            os << j.dump() << "\n";
        }
    } else {
        os << "system,t,x_mean\n";
        for (const Row& r : rows)
            os << r.system << ',' << fmt(r.t) << ',' << fmt(r.x) << "\n";
    }
    return 0;
}

struct VerifyConfig {
    double tolerance_scale = 1.0;
    std::string case_filter;
    std::string out;
    std::uint64_t seed = 12345;
};

int cmd_verify(const VerifyConfig& cfg) {
    VerifyOptions opt;
    opt.seed = cfg.seed;
    opt.tolerance_scale = cfg.tolerance_scale;
    if (!cfg.case_filter.empty()) opt.cases.push_back(cfg.case_filter);

    const std::vector<OracleReport> reports = run_verification(opt);

    std::ofstream file;
    std::ostream& os = open_sink(cfg.out, file);
    bool all_passed = !reports.empty();
    for (const OracleReport& r : reports) {
        os << r.to_json() << "\n";
        all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"closed-form states, observables and verification oracles for the "
                 "exponential-mass oscillator family (TO/TM/TQ)"};
    app.require_subcommand(1);

    SeriesConfig se;
    CLI::App* series = app.add_subcommand("series", "observable time series to CSV/JSON");
    series->add_option("--system", se.system, "to|tm|tq")->required();
    series->add_option("--upsilon", se.upsilon)->required();
    series->add_option("--omega", se.omega)->required();
    series->add_option("--t0", se.t0);
    series->add_option("--x0", se.x0);
    series->add_option("--p0", se.p0);
    series->add_option("--r", se.r);
    series->add_option("--theta", se.theta);
    series->add_option("--t-min", se.t_min)->required();
    series->add_option("--t-max", se.t_max)->required();
    series->add_option("--steps", se.steps);
    series->add_option("--grid-points", se.grid_points);
    series->add_flag("--with-oracle", se.with_oracle,
                     "also emit quadrature-moment rows for cross-checking");
    series->add_option("--out", se.out, "output path (default stdout)");
    series->add_option("--format", se.format)->check(CLI::IsMember({"csv", "json"}));

    StateConfig st;
    CLI::App* state = app.add_subcommand("state", "sample a wavefunction on a grid");
    state->add_option("--system", st.system, "to|tm|tq")->required();
    state->add_option("--family", st.family, "number|coherent|squeezed")->required();
    state->add_option("--upsilon", st.upsilon)->required();
    state->add_option("--omega", st.omega)->required();
    state->add_option("--t0", st.t0);
    state->add_option("--n", st.n);
    state->add_option("--x0", st.x0);
    state->add_option("--p0", st.p0);
    state->add_option("--r", st.r);
    state->add_option("--theta", st.theta);
    state->add_option("--t", st.t);
    state->add_option("--grid-points", st.grid_points);
    state->add_option("--out", st.out);
    state->add_option("--format", st.format)->check(CLI::IsMember({"csv", "json"}));

    FigureConfig fig;
    CLI::App* figure = app.add_subcommand("figure", "emit the sample-figure <x> datasets");
    figure->add_option("--id", fig.id, "figure number 1|2|3")->required();
    figure->add_option("--steps", fig.steps);
    double match_u = 0.0;
    CLI::Option* mo = figure->add_option("--match-negative-upsilon", match_u,
                                         "Upsilon of the matched branch (default: -Upsilon)");
    figure->add_option("--out", fig.out);
    figure->add_option("--format", fig.format)->check(CLI::IsMember({"csv", "json"}));

    VerifyConfig ve;
    CLI::App* verify = app.add_subcommand("verify", "run the oracle suite (JSON lines)");
    verify->add_option("--tolerance-scale", ve.tolerance_scale,
                       "multiply every tolerance by this factor");
    verify->add_option("--case", ve.case_filter, "restrict to one case, e.g. tm,under,pos");
    verify->add_option("--out", ve.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("TDQ_SEED")) {
        try {
            ve.seed = std::stoull(env);
        } catch (...) {
            std::cerr << "error: TDQ_SEED must be an unsigned integer\n";
            return 2;
        }
    }
    if (mo->count() > 0) fig.match_upsilon = match_u;

    try {
        if (series->parsed()) return cmd_series(se);
        if (state->parsed()) return cmd_state(st);
        if (figure->parsed()) return cmd_figure(fig);
        if (verify->parsed()) return cmd_verify(ve);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 2;
    } catch (const GridError& e) {
        std::cerr << "grid error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
