#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <sstream>
#include <variant>

#include <unistd.h>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "wfrac/errors.hpp"
#include "wfrac/kernels.hpp"
#include "wfrac/resolvent.hpp"
#include "wfrac/special.hpp"
#include "wfrac/symbol.hpp"
#include "wfrac/version.hpp"

namespace wfrac::cli {
namespace {

using Json = nlohmann::ordered_json;
using Cell = std::variant<double, std::string>;

const std::map<std::string, Command> kCommands{
    {"symbol", Command::symbol}, {"kernel", Command::kernel}, {"invert", Command::invert},
    {"mode", Command::mode},     {"diffuse", Command::diffuse}, {"sweep", Command::sweep},
    {"selftest", Command::selftest},
};

const char* command_name(Command c) {
    for (const auto& [name, cmd] : kCommands) {
        if (cmd == c) return name.c_str();
    }
    return "?";
}

// Default sample grid per command when no grid flag is given.
GridSpec default_grid(Command c) {
    switch (c) {
        case Command::symbol:
            return {GridKind::logarithmic, 1e-4, 1e4, 81, 1.0};
        case Command::invert:
            return {GridKind::logarithmic, 0.05, 10.0, 50, 1.0};
        case Command::sweep:
            return diffusion::default_sweep_grid().spec();
        case Command::mode:
            return {GridKind::graded, 0.01, 5.0, 100, 2.0};
        case Command::diffuse:
            return {GridKind::graded, 1e-3, 5.0, 200, 2.0};
        case Command::kernel:
        case Command::selftest:
            break;
    }
    return {GridKind::graded, 1e-3, 10.0, 100, 2.0};
}

struct TransformPair {
    std::function<Complex(Complex)> transform;
    std::function<double(double)> exact;
    std::string description;
};

TransformPair make_pair(const std::string& name, double alpha) {
    if (name == "step") return {[](Complex s) { return 1.0 / s; }, [](double) { return 1.0; }, "1/s <-> 1"};
    if (name == "ramp") return {[](Complex s) { return 1.0 / (s * s); }, [](double t) { return t; }, "1/s^2 <-> t"};
    if (name == "exp") {
        return {[](Complex s) { return 1.0 / (s + 1.0); }, [](double t) { return std::exp(-t); }, "1/(s+1) <-> exp(-t)"};
    }
    if (name == "exp5") {
        return {[](Complex s) { return 1.0 / (s + 5.0); }, [](double t) { return std::exp(-5.0 * t); },
                "1/(s+5) <-> exp(-5t)"};
    }
    if (name == "sin") {
        return {[](Complex s) { return 1.0 / (s * s + 1.0); }, [](double t) { return std::sin(t); },
                "1/(s^2+1) <-> sin(t)"};
    }
    if (name == "power") {
        return {[](Complex s) { return std::pow(s, -0.5); },
                [](double t) { return std::pow(t, -0.5) / std::sqrt(std::numbers::pi); }, "s^-0.5 <-> t^-0.5/Gamma(0.5)"};
    }
    if (name == "ml") {
        return {[alpha](Complex s) { return std::pow(s, alpha - 1.0) / (std::pow(s, alpha) + 1.0); },
                [alpha](double t) { return special::mittag_leffler(alpha, -std::pow(t, alpha)); },
                "s^(alpha-1)/(s^alpha+1) <-> E_alpha(-t^alpha)"};
    }
    throw UsageError("unknown transform pair '" + name + "'");
}

// Rounds to the CSV precision so both formats carry identical values.
Json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return std::stod(format_number(v));
}

struct Table {
    Json meta = Json::object();
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    std::string render(OutputFormat format) const {
        if (format == OutputFormat::json) {
            Json doc = Json::object();
            doc["meta"] = meta;
            doc["columns"] = columns;
            Json rows_json = Json::array();
            for (const auto& row : rows) {
                Json r = Json::array();
                for (const Cell& c : row) {
                    if (const double* d = std::get_if<double>(&c)) {
                        r.push_back(json_number(*d));
                    } else {
                        r.push_back(std::get<std::string>(c));
                    }
                }
                rows_json.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows_json);
            return doc.dump(2) + "\n";
        }
        std::string text;
        for (const auto& [key, value] : meta.items()) {
            text += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
        }
        for (std::size_t i = 0; i < columns.size(); ++i) text += (i ? "," : "") + columns[i];
        text += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) text += ",";
                if (const double* d = std::get_if<double>(&row[i])) {
                    text += format_number(*d);
                } else {
                    text += std::get<std::string>(row[i]);
                }
            }
            text += "\n";
        }
        return text;
    }
};

Json base_meta(const RunConfig& cfg) {
    Json meta = Json::object();
    meta["tool"] = std::string("wfrac ") + kVersion;
    meta["command"] = command_name(cfg.command);
    if (cfg.command == Command::sweep) {
        Json a = Json::array(), b = Json::array();
        for (double v : cfg.alphas) a.push_back(json_number(v));
        for (double v : cfg.betas) b.push_back(json_number(v));
        meta["alphas"] = a;
        meta["betas"] = b;
    } else {
        meta["params"] = cfg.params.describe();
    }
    meta["n_talbot"] = cfg.talbot.n_nodes;
    meta["contour"] = cfg.talbot.describe();
    meta["grid"] = cfg.grid.describe();
    return meta;
}

void emit(const RunConfig& cfg, const Table& table, std::ostream& out) {
    std::string content = table.render(cfg.format);
    if (cfg.output_path.empty()) {
        out << content;
        out.flush();
    } else {
        write_atomically(cfg.output_path, content);
    }
}

std::string destination(const RunConfig& cfg) {
    return cfg.output_path.empty() ? std::string("stdout") : cfg.output_path;
}

int run_symbol(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const FracParams& p = cfg.params;
    const TimeGrid grid = cfg.make_grid();
    Table table;
    table.meta = base_meta(cfg);
    const double estimate = symbol::low_freq_exponent_estimate(p);
    const double expected = p.alpha() + p.beta() * p.memory_scale();
    const symbol::FitWindow window = symbol::low_freq_fit_window(p);
    const double probe_s0 = 1e-3;
    const double convexity = symbol::convexity_probe_at_origin(p, probe_s0);
    table.meta["low_freq_exponent"] = json_number(estimate);
    table.meta["low_freq_exponent_expected"] = json_number(expected);
    table.meta["low_freq_fit_window"] = Json::array({json_number(window.s_min), json_number(window.s_max)});
    table.meta["convexity_probe_s0"] = json_number(probe_s0);
    table.meta["convexity_probe"] = json_number(convexity);
    table.columns = {"s", "phi", "h", "h_prime"};
    for (double s : grid.points()) {
        table.rows.push_back({s, symbol::eval_phi(p, s), symbol::eval_h(p, s), symbol::h_derivative(p, s)});
    }
    emit(cfg, table, out);
    log << "symbol: " << table.rows.size() << " rows to " << destination(cfg) << ", low-frequency exponent "
        << format_number(estimate) << " (expected " << format_number(expected) << "), convexity probe "
        << format_number(convexity) << "\n";
    return kExitOk;
}

int run_kernel(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const FracParams& p = cfg.params;
    const TimeGrid grid = cfg.make_grid();
    const kernels::PrabhakarKernel w = kernels::w_kernel(p, cfg.talbot);
    const kernels::PrabhakarKernel k = kernels::k_kernel(p, cfg.talbot);
    const kernels::OriginBound bound = kernels::inverse_kernel_origin_bound(p);

    Table table;
    table.meta = base_meta(cfg);
    table.meta["positivity_backed"] = p.evolution_admissible();
    table.meta["inverse_kernel_origin_constant"] = json_number(bound.constant);
    table.columns = {"t", "w", "k", "w_caputo"};
    std::vector<std::vector<Cell>> rows(grid.size());
    double min_w = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double t = grid[i];
        const double wv = w(t);
        min_w = std::min(min_w, wv);
        rows[i] = {t, wv, k(t), kernels::caputo_kernel(p.alpha(), t)};
    }
    table.rows = std::move(rows);
    emit(cfg, table, out);
    log << "kernel: " << table.rows.size() << " rows to " << destination(cfg) << ", min w "
        << format_number(min_w) << ", origin constant " << format_number(bound.constant) << "\n";
    return kExitOk;
}

int run_invert(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const TransformPair pair = make_pair(cfg.pair, cfg.params.alpha());
    std::vector<double> times = cfg.times;
    if (times.empty()) {
        const TimeGrid grid = cfg.make_grid();
        times.assign(grid.points().begin(), grid.points().end());
    }
    const std::vector<double> values =
        laplace::invert_batch(cfg.talbot, pair.transform, TimeGrid::from_points(times));

    Table table;
    table.meta = base_meta(cfg);
    if (!cfg.times.empty()) table.meta["grid"] = "explicit times";
    table.meta["pair"] = cfg.pair + ": " + pair.description;
    table.columns = {"t", "value", "exact", "abs_error", "rel_error"};
    double worst = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        const double exact = pair.exact(times[i]);
        const double abs_err = std::abs(values[i] - exact);
        const double rel_err = abs_err / std::abs(exact);
        worst = std::max(worst, rel_err);
        table.rows.push_back({times[i], values[i], exact, abs_err, rel_err});
    }
    emit(cfg, table, out);
    log << "invert: " << table.rows.size() << " rows to " << destination(cfg) << ", max relative error "
        << format_number(worst) << "\n";
    return kExitOk;
}

int run_mode(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const TimeGrid grid = cfg.make_grid();
    const resolvent::ModalProblem mp{cfg.params, cfg.lambda, cfg.u0, std::nullopt};
    const resolvent::ModeSolution sol = resolvent::solve_mode(mp, grid, cfg.talbot, cfg.experimental);

    Json metadata = Json::object();
    metadata["params"] = {{"alpha", json_number(cfg.params.alpha())}, {"beta", json_number(cfg.params.beta())}};
    metadata["lambda"] = json_number(cfg.lambda);
    metadata["u0"] = json_number(cfg.u0);
    metadata["n_talbot"] = cfg.talbot.n_nodes;
    metadata["contour"] = cfg.talbot.describe();
    metadata["admissible"] = cfg.params.evolution_admissible();
    metadata["experimental"] = sol.experimental;
    metadata["initial_deviation"] = json_number(sol.initial_deviation);

    Table table;
    table.meta = base_meta(cfg);
    table.meta["metadata"] = metadata;
    table.columns = {"t", "u"};
    for (std::size_t i = 0; i < grid.size(); ++i) table.rows.push_back({grid[i], sol.u.values[i]});
    emit(cfg, table, out);
    log << "mode: " << table.rows.size() << " rows to " << destination(cfg) << ", |u(t)-u0| near t=0 "
        << format_number(sol.initial_deviation) << (sol.experimental ? " [experimental beta > 1]" : "") << "\n";
    return kExitOk;
}

double parabola(double x) { return x * (1.0 - x); }
double sine_profile(double x) { return std::sin(std::numbers::pi * x); }

int run_diffuse(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const TimeGrid grid = cfg.make_grid();
    const bool sine = cfg.initial == InitialProfile::sine;
    const int modes = cfg.n_modes > 0 ? cfg.n_modes : (sine ? 1 : 64);
    const std::function<double(double)> profile = sine ? sine_profile : parabola;

    diffusion::DiffusionSetup setup = diffusion::DiffusionSetup::sine_mode(cfg.params, cfg.talbot);
    setup.n_modes = modes;
    setup.initial_coeffs = diffusion::project_initial(profile, modes);
    if (sine) {
        // Exact: only the first mode is present.
        std::fill(setup.initial_coeffs.begin(), setup.initial_coeffs.end(), 0.0);
        setup.initial_coeffs[0] = 1.0 / std::numbers::sqrt2;
    }
    setup.allow_experimental = cfg.experimental;
    const double tail = sine ? 0.0 : diffusion::tail_energy_bound(profile, setup.initial_coeffs);

    const diffusion::ModalSeries series = diffusion::run_diffusion(setup, grid);
    const std::vector<double> e = diffusion::energy(series);
    const double e0 = diffusion::initial_energy(setup);

    Table table;
    table.meta = base_meta(cfg);
    table.meta["initial"] = sine ? "sin(pi x)" : "x(1-x)";
    table.meta["n_modes"] = modes;
    table.meta["tail_energy_bound"] = json_number(tail);
    table.meta["metrics"] = cfg.metrics.describe();
    std::string half_life_text = "n/a";
    try {
        const diffusion::DecayMetrics m = diffusion::decay_metrics(
            e, grid, e0, cfg.metrics, [&setup](double t) { return diffusion::energy_at(setup, t); });
        table.meta["slope"] = json_number(m.slope);
        table.meta["half_life"] = json_number(m.half_life);
        half_life_text = format_number(m.half_life);
    } catch (const diffusion::NoCrossingError& err) {
        table.meta["slope"] = json_number(err.partial().slope);
        table.meta["half_life"] = std::string("none: ") + err.what();
    } catch (const DomainError& err) {
        table.meta["slope"] = std::string("unavailable: ") + err.what();
    }

    table.columns = {"t", "E", "E_over_E0"};
    if (cfg.per_mode) {
        for (int k = 1; k <= modes; ++k) table.columns.push_back("u" + std::to_string(k));
    }
    auto add_row = [&](double t, double energy_value, auto mode_value) {
        std::vector<Cell> row{t, energy_value, energy_value / e0};
        if (cfg.per_mode) {
            for (int k = 0; k < modes; ++k) row.emplace_back(mode_value(k));
        }
        table.rows.push_back(std::move(row));
    };
    add_row(0.0, e0, [&](int k) { return setup.initial_coeffs[k]; });
    for (std::size_t i = 0; i < grid.size(); ++i) {
        add_row(grid[i], e[i], [&](int k) { return series.modes[k][i]; });
    }
    emit(cfg, table, out);
    log << "diffuse: " << table.rows.size() << " rows to " << destination(cfg) << ", E(0) " << format_number(e0)
        << ", half-life " << half_life_text << "\n";
    return kExitOk;
}

std::string aligned_sweep_text(const std::vector<diffusion::SweepRow>& rows, const diffusion::MetricConfig& mc) {
    std::string text;
    char line[256];
    std::snprintf(line, sizeof line, "%-6s %-6s %14s %14s %10s %10s  %s\n", "alpha", "beta", "slope", "half_life",
                  "ref_slope", "ref_t1/2", "status");
    text += line;
    for (const auto& r : rows) {
        const auto ref = diffusion::reference_value(r.alpha, r.beta);
        const double slope = r.metrics ? r.metrics->slope : std::nan("");
        const double half = r.metrics ? r.metrics->half_life : std::nan("");
        std::snprintf(line, sizeof line, "%-6.3g %-6.3g %14.6g %14.6g %10s %10s  %s\n", r.alpha, r.beta, slope, half,
                      ref ? format_number(ref->slope).c_str() : "-", ref ? format_number(ref->half_life).c_str() : "-",
                      r.error_kind ? to_string(*r.error_kind) : (r.monotone ? "ok" : "non-monotone"));
        text += line;
    }
    text += "# " + mc.describe() + "\n";
    return text;
}

int run_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    const TimeGrid grid = cfg.make_grid();
    diffusion::DiffusionSetup base = diffusion::DiffusionSetup::sine_mode(cfg.params, cfg.talbot);
    base.allow_experimental = cfg.experimental;
    const auto rows = diffusion::sensitivity_sweep(cfg.alphas, cfg.betas, base, grid, cfg.metrics);

    Table table;
    table.meta = base_meta(cfg);
    table.meta["initial"] = "sin(pi x)";
    table.meta["metrics"] = cfg.metrics.describe();
    table.columns = {"alpha",    "beta",      "slope",   "half_life",     "slope_definition", "fit_tmin",
                     "fit_tmax", "n_talbot",  "ref_slope", "ref_half_life", "monotone",         "status"};
    std::size_t failures = 0;
    for (const auto& r : rows) {
        const auto ref = diffusion::reference_value(r.alpha, r.beta);
        const double nan = std::nan("");
        std::string status = "ok";
        if (r.error_kind) {
            ++failures;
            status = to_string(*r.error_kind);
        }
        table.rows.push_back({r.alpha, r.beta, r.metrics ? r.metrics->slope : nan,
                              r.metrics ? r.metrics->half_life : nan,
                              std::string(to_string(cfg.metrics.slope_definition)), cfg.metrics.fit_tmin,
                              cfg.metrics.fit_tmax, static_cast<double>(cfg.talbot.n_nodes),
                              ref ? ref->slope : nan, ref ? ref->half_life : nan,
                              std::string(r.monotone ? "yes" : "no"), status});
    }
    emit(cfg, table, out);
    (cfg.output_path.empty() ? log : out) << aligned_sweep_text(rows, cfg.metrics);
    log << "sweep: " << rows.size() << " rows to " << destination(cfg) << ", " << failures << " cell errors\n";
    return kExitOk;
}

}  // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

std::vector<std::string> pair_names() { return {"step", "ramp", "exp", "exp5", "sin", "power", "ml"}; }

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::domain:
        case ErrorKind::admissibility:
            return kExitDomain;
        case ErrorKind::accuracy:
        case ErrorKind::convergence:
        case ErrorKind::no_crossing:
            return kExitNumerics;
        case ErrorKind::io:
            return kExitIo;
    }
    return kExitFailure;
}

void write_atomically(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp-" + std::to_string(::getpid());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw IoError("cannot open " + tmp.string() + " for writing");
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw IoError("write to " + tmp.string() + " failed");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move output into place at " + path + ": " + ec.message());
    }
}

TimeGrid RunConfig::make_grid() const {
    switch (grid.kind) {
        case GridKind::uniform:
            return TimeGrid::uniform(grid.t_min, grid.t_max, grid.count);
        case GridKind::graded:
            return TimeGrid::graded_between(grid.t_min, grid.t_max, grid.count, grid.exponent);
        case GridKind::logarithmic:
            return TimeGrid::logarithmic(grid.t_min, grid.t_max, grid.count);
        case GridKind::custom:
            break;
    }
    throw DomainError("custom grids cannot be rebuilt from a descriptor");
}

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Fractional relaxation toolkit: symbols, memory kernels, Laplace inversion, mode relaxation, "
                 "spectral diffusion and parameter sweeps.",
                 "wfrac"};
    app.set_version_flag("--version", std::string("wfrac ") + kVersion);
    app.require_subcommand(1, 1);

    std::vector<double> alphas{0.5}, betas{0.0}, fit_window;
    int n_talbot = 24;
    double tmin = 0.0, tmax = 0.0;
    std::size_t nt = 0;
    std::string grid_kind, slope_def = "log10e-vs-t", out_path, format = "csv";
    app.add_option("--alpha", alphas, "order alpha in (0,1); comma list for sweep")->delimiter(',');
    app.add_option("--beta", betas, "modulation beta >= 0; comma list for sweep")->delimiter(',');
    app.add_option("--n-talbot", n_talbot, "Talbot nodes N (even, >= 8)")->capture_default_str();
    auto* tmin_opt = app.add_option("--tmin", tmin, "first grid point");
    auto* tmax_opt = app.add_option("--tmax", tmax, "last grid point");
    auto* nt_opt = app.add_option("--nt", nt, "number of grid points");
    auto* grid_opt = app.add_option("--grid", grid_kind, "grid spacing")
                         ->check(CLI::IsMember({"uniform", "graded", "log"}));
    app.add_option("--slope-def", slope_def, "decay slope definition")
        ->check(CLI::IsMember({"log10e-vs-t", "log10e-vs-log10t"}))
        ->capture_default_str();
    app.add_option("--fit-window", fit_window, "slope fit window a,b")->delimiter(',')->expected(2);
    app.add_option("--out", out_path, "output file (written atomically); stdout when absent");
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    std::map<std::string, CLI::App*> subs;
    auto add_sub = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();
        subs[name] = sub;
        return sub;
    };
    add_sub("symbol", "tabulate Phi, h and h' and probe the low-frequency structure");
    add_sub("kernel", "tabulate the memory kernel w, the inverse kernel k and the Caputo kernel");
    CLI::App* invert = add_sub("invert", "invert a built-in transform pair on the Talbot contour");
    CLI::App* mode = add_sub("mode", "relax a single spectral mode");
    CLI::App* diffuse = add_sub("diffuse", "1D Dirichlet diffusion by eigenfunction expansion");
    CLI::App* sweep = add_sub("sweep", "decay slope and half-life over an (alpha, beta) table");
    add_sub("selftest", "run the built-in verification suites");

    RunConfig cfg;
    std::vector<double> times;
    std::string initial = "sine";
    invert->add_option("--pair", cfg.pair, "transform pair")->check(CLI::IsMember(pair_names()))->capture_default_str();
    invert->add_option("--t", times, "evaluation times (comma list); overrides the grid")->delimiter(',');
    mode->add_option("--lambda", cfg.lambda, "eigenvalue lambda >= 0")->capture_default_str();
    mode->add_option("--u0", cfg.u0, "initial value")->capture_default_str();
    diffuse->add_option("--initial", initial, "initial profile")->check(CLI::IsMember({"sine", "parabola"}))
        ->capture_default_str();
    diffuse->add_option("--modes", cfg.n_modes, "number of modes K (default 1 for sine, 64 otherwise)");
    diffuse->add_flag("--per-mode", cfg.per_mode, "add one column per mode amplitude");
    for (CLI::App* sub : {mode, diffuse, sweep}) {
        sub->add_flag("--experimental", cfg.experimental, "allow beta > 1 (results tagged experimental)");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (const auto& [name, sub] : subs) {
            if (sub->parsed()) throw InfoRequested(sub->help());
        }
        throw InfoRequested(app.help());
    } catch (const CLI::CallForAllHelp&) {
        throw InfoRequested(app.help("", CLI::AppFormatMode::All));
    } catch (const CLI::CallForVersion&) {
        throw InfoRequested(std::string("wfrac ") + kVersion + "\n");
    } catch (const CLI::ParseError& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        throw UsageError(msg + " (see --help)");
    }

    for (const auto& [name, sub] : subs) {
        if (sub->parsed()) cfg.command = kCommands.at(name);
    }

    try {
        if (cfg.command != Command::sweep && (alphas.size() != 1 || betas.size() != 1)) {
            throw UsageError("--alpha and --beta take a single value except for sweep");
        }
        if (alphas.empty() || betas.empty()) throw UsageError("--alpha and --beta need at least one value");
        for (double a : alphas) {
            for (double b : betas) FracParams(a, b);
        }
        cfg.alphas = alphas;
        cfg.betas = betas;
        cfg.params = FracParams(alphas.front(), betas.front());

        cfg.talbot.n_nodes = n_talbot;
        cfg.talbot.validate();

        cfg.grid = default_grid(cfg.command);
        if (grid_opt->count()) {
            cfg.grid.kind = grid_kind == "uniform" ? GridKind::uniform
                            : grid_kind == "graded" ? GridKind::graded
                                                    : GridKind::logarithmic;
            cfg.grid.exponent = cfg.grid.kind == GridKind::graded ? 2.0 : 1.0;
        }
        if (tmin_opt->count()) cfg.grid.t_min = tmin;
        if (tmax_opt->count()) cfg.grid.t_max = tmax;
        if (nt_opt->count()) cfg.grid.count = nt;
        cfg.grid = cfg.make_grid().spec();

        cfg.metrics.slope_definition = diffusion::parse_slope_definition(slope_def);
        if (!fit_window.empty()) {
            cfg.metrics.fit_tmin = fit_window[0];
            cfg.metrics.fit_tmax = fit_window[1];
        }
        cfg.metrics.validate();

        cfg.output_path = out_path;
        cfg.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

        if (!(cfg.lambda >= 0.0) || !std::isfinite(cfg.lambda)) throw UsageError("--lambda must be finite and >= 0");
        if (!std::isfinite(cfg.u0)) throw UsageError("--u0 must be finite");
        if (cfg.n_modes < 0) throw UsageError("--modes must be positive");
        for (double t : times) {
            if (!(t > 0.0) || !std::isfinite(t)) throw UsageError("--t values must be positive");
        }
        if (!times.empty()) TimeGrid::from_points(times);
        cfg.times = times;
        cfg.initial = initial == "parabola" ? InitialProfile::parabola : InitialProfile::sine;
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& log) {
    try {
        switch (cfg.command) {
            case Command::symbol:
                return run_symbol(cfg, out, log);
            case Command::kernel:
                return run_kernel(cfg, out, log);
            case Command::invert:
                return run_invert(cfg, out, log);
            case Command::mode:
                return run_mode(cfg, out, log);
            case Command::diffuse:
                return run_diffuse(cfg, out, log);
            case Command::sweep:
                return run_sweep(cfg, out, log);
            case Command::selftest:
                return run_selftest(log) ? kExitOk : kExitNumerics;
        }
    } catch (const Error& e) {
        log << "wfrac: " << to_string(e.kind()) << " error: " << e.what() << "\n";
        return exit_code_for(e.kind());
    } catch (const UsageError& e) {
        log << "wfrac: usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        log << "wfrac: internal error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitFailure;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
    RunConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const InfoRequested& info) {
        out << info.what();
        return kExitOk;
    } catch (const UsageError& e) {
        log << "wfrac: usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return run(cfg, out, log);
}

}  // namespace wfrac::cli
