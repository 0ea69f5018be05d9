#include "bggl/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bggl/asympt.hpp"
#include "bggl/error.hpp"
#include "bggl/estimate.hpp"
#include "bggl/finance.hpp"
#include "bggl/montecarlo.hpp"
#include "bggl/sample.hpp"
#include "json_io.hpp"

namespace bggl::cli {

namespace {

using detail::ojson;

struct Common {
    std::uint64_t seed = kDefaultSeed;
    std::string out_path;
    std::string format;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format, std::vector<std::string> formats) {
    cmd->add_option("--seed", c.seed, "random seed")->capture_default_str();
    cmd->add_option("--out", c.out_path, "output file (default: stdout)");
    c.format = default_format;
    cmd->add_option("--format", c.format, "output format")
        ->check(CLI::IsMember(std::move(formats)))
        ->capture_default_str();
}

void add_theta(CLI::App* cmd, BgglParams& t) {
    cmd->add_option("--alpha", t.alpha, "gamma shape")->capture_default_str();
    cmd->add_option("--beta", t.beta, "gamma rate")->capture_default_str();
    cmd->add_option("--delta", t.delta, "location")->capture_default_str();
    cmd->add_option("--mu", t.mu, "drift")->capture_default_str();
    cmd->add_option("--sigma", t.sigma, "scale")->capture_default_str();
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit(const Common& c, const std::string& text, std::ostream& out) {
    if (c.out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(c.out_path, std::ios::binary);
    if (!f) throw DataError("cannot open " + c.out_path + " for writing");
    f << text;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (ch != '\r' && ch != ' ' && ch != '\t') {
            cur.push_back(ch);
        }
    }
    fields.push_back(cur);
    return fields;
}

// Numeric CSV with a header row; returns the named columns.
std::vector<std::vector<double>> read_columns(const std::string& path, const std::vector<std::string>& names) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw DataError(path + ": empty file");
    const auto header = split_csv_line(line);
    std::vector<std::size_t> idx;
    for (const auto& name : names) {
        std::size_t k = 0;
        while (k < header.size() && header[k] != name) ++k;
        if (k == header.size()) throw DataError(path + ": missing column '" + name + "'");
        idx.push_back(k);
    }
    std::vector<std::vector<double>> cols(names.size());
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size()) {
            throw DataError(path + ":" + std::to_string(lineno) + ": wrong number of fields");
        }
        for (std::size_t c = 0; c < idx.size(); ++c) {
            try {
                std::size_t used = 0;
                const double v = std::stod(fields[idx[c]], &used);
                if (used != fields[idx[c]].size()) throw std::invalid_argument("trailing");
                cols[c].push_back(v);
            } catch (const std::logic_error&) {
                throw DataError(path + ":" + std::to_string(lineno) + ": invalid number '" + fields[idx[c]] + "'");
            }
        }
    }
    return cols;
}

std::string pairs_csv(const char* h1, const char* h2, std::span<const double> a, std::span<const double> b) {
    std::string s = std::string(h1) + "," + h2 + "\n";
    for (std::size_t i = 0; i < a.size(); ++i) s += num(a[i]) + "," + num(b[i]) + "\n";
    return s;
}

std::string fit_text(const FitResult& fit, const std::string& format) {
    if (format == "json") return detail::fit_json(fit).dump(2) + "\n";
    const auto& t = fit.theta_hat;
    std::string s = "parameter,value\n";
    s += "alpha," + num(t.alpha) + "\nbeta," + num(t.beta) + "\ndelta," + num(t.delta) + "\nmu," + num(t.mu) +
         "\nsigma," + num(t.sigma) + "\ns2," + num(fit.s2) + "\nn," + std::to_string(fit.n) + "\nregime," +
         std::string(to_string(fit.regime)) + "\n";
    return s;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Bivariate gamma / generalized Laplace toolkit", "bggl"};
    app.require_subcommand(1);

    std::function<void()> action;

    // sample
    Common sample_c;
    BgglParams sample_t;
    std::size_t sample_n = 1000;
    auto* sample_cmd = app.add_subcommand("sample", "draw (x, y) pairs");
    add_common(sample_cmd, sample_c, "csv", {"csv", "json"});
    add_theta(sample_cmd, sample_t);
    sample_cmd->add_option("--n", sample_n, "number of pairs")->capture_default_str();
    sample_cmd->callback([&] {
        action = [&] {
            RngStream rng(sample_c.seed);
            const PairedSample s = sample_bggl(sample_t, sample_n, rng);
            if (sample_c.format == "json") {
                ojson j;
                j["theta"] = detail::params_json(sample_t);
                j["seed"] = sample_c.seed;
                j["x"] = std::vector<double>(s.x().begin(), s.x().end());
                j["y"] = std::vector<double>(s.y().begin(), s.y().end());
                emit(sample_c, j.dump(2) + "\n", out);
            } else {
                emit(sample_c, pairs_csv("x", "y", s.x(), s.y()), out);
            }
        };
    });

    // fit
    Common fit_c;
    std::string fit_in;
    double fit_tol = 0.02;
    auto* fit_cmd = app.add_subcommand("fit", "maximum-likelihood fit of a CSV with columns x,y");
    add_common(fit_cmd, fit_c, "json", {"csv", "json"});
    fit_cmd->add_option("--in", fit_in, "input CSV")->required();
    fit_cmd->add_option("--boundary-tol", fit_tol, "regime tolerance around alpha = 1")->capture_default_str();
    fit_cmd->callback([&] {
        action = [&] {
            auto cols = read_columns(fit_in, {"x", "y"});
            const PairedSample s(std::move(cols[0]), std::move(cols[1]));
            emit(fit_c, fit_text(fit_bggl(s, {fit_tol}), fit_c.format), out);
        };
    });

    // table1
    Common t1_c;
    std::size_t t1_reps = 5000;
    unsigned t1_threads = 0;
    auto* t1_cmd = app.add_subcommand("table1", "replicate the eight-block simulation study");
    add_common(t1_cmd, t1_c, "text", {"csv", "json", "text"});
    t1_cmd->add_option("--replications", t1_reps, "replications per block")->capture_default_str();
    t1_cmd->add_option("--threads", t1_threads, "worker threads (0: all cores)")->capture_default_str();
    t1_cmd->callback([&] {
        action = [&] {
            const auto reports = run_table1_suite(t1_c.seed, t1_reps, t1_threads);
            if (t1_c.format == "json") {
                emit(t1_c, to_json(reports), out);
            } else if (t1_c.format == "text") {
                emit(t1_c, to_text(reports), out);
            } else {
                std::string s = "alpha,n,parameter,actual,mean,variance,rmse,mae,degenerate\n";
                for (const auto& r : reports) {
                    for (const auto& row : r.rows) {
                        s += num(r.config.theta_true.alpha) + "," + std::to_string(r.config.n) + "," + row.name +
                             "," + num(row.actual) + "," + num(row.mean) + "," + num(row.variance) + "," +
                             num(row.rmse) + "," + num(row.mae) + "," + std::to_string(r.degenerate) + "\n";
                    }
                }
                emit(t1_c, s, out);
            }
        };
    });

    // finance
    Common fin_c;
    std::string fin_in;
    bool fin_daily = false;
    auto* fin_cmd = app.add_subcommand("finance", "returns / surprise-volatility pipeline on a date,close,vol CSV");
    add_common(fin_cmd, fin_c, "json", {"csv", "json"});
    fin_cmd->add_option("--in", fin_in, "input CSV")->required();
    fin_cmd->add_flag("--aggregate-daily", fin_daily, "aggregate daily rows to ISO weeks first");
    fin_cmd->callback([&] {
        action = [&] {
            VolSeries series = read_vol_csv_file(fin_in);
            if (fin_daily) series = aggregate_weekly(series);
            const PipelineResult r = run_pipeline(series);
            if (fin_c.format == "json") {
                emit(fin_c, to_json(r), out);
            } else {
                std::string s = "x,y,z\n";
                for (std::size_t i = 0; i < r.sample.size(); ++i) {
                    s += num(r.sample.x()[i]) + "," + num(r.sample.y()[i]) + "," +
                         (r.z.empty() ? std::string("nan") : num(r.z[i])) + "\n";
                }
                emit(fin_c, s, out);
            }
        };
    });

    // qq
    Common qq_c;
    BgglParams qq_t;
    std::string qq_in;
    std::string qq_column = "x";
    std::string qq_law = "normal";
    auto* qq_cmd = app.add_subcommand("qq", "quantile-quantile data for one CSV column");
    add_common(qq_cmd, qq_c, "csv", {"csv", "json"});
    add_theta(qq_cmd, qq_t);
    qq_cmd->add_option("--in", qq_in, "input CSV")->required();
    qq_cmd->add_option("--column", qq_column, "column name")->capture_default_str();
    qq_cmd->add_option("--law", qq_law, "reference law")
        ->check(CLI::IsMember({"gamma", "gal", "normal"}))
        ->capture_default_str();
    qq_cmd->callback([&] {
        action = [&] {
            const auto cols = read_columns(qq_in, {qq_column});
            const QqLaw law = qq_law == "gamma" ? QqLaw::gamma : qq_law == "gal" ? QqLaw::gal : QqLaw::normal;
            if (law != QqLaw::normal) qq_t.validate();
            const auto pts = qq_data(cols[0], law, qq_t);
            if (qq_c.format == "json") {
                ojson arr = ojson::array();
                for (const auto& p : pts) arr.push_back({{"theoretical", p.theoretical}, {"empirical", p.empirical}});
                emit(qq_c, arr.dump(2) + "\n", out);
            } else {
                emit(qq_c, qq_to_csv(pts), out);
            }
        };
    });

    // levy-path
    Common lp_c;
    BgglParams lp_t;
    double lp_tmax = 1.0;
    std::size_t lp_steps = 1000;
    auto* lp_cmd = app.add_subcommand("levy-path", "simulate (G(t), W(G(t))) on a uniform grid");
    add_common(lp_cmd, lp_c, "csv", {"csv", "json"});
    add_theta(lp_cmd, lp_t);
    lp_cmd->add_option("--t-max", lp_tmax, "final time")->capture_default_str();
    lp_cmd->add_option("--steps", lp_steps, "number of increments")->capture_default_str();
    lp_cmd->callback([&] {
        action = [&] {
            if (!(lp_tmax > 0.0) || lp_steps < 1) throw DomainError("levy-path: need t-max > 0 and steps >= 1");
            std::vector<double> times(lp_steps + 1);
            for (std::size_t k = 0; k <= lp_steps; ++k) times[k] = lp_tmax * static_cast<double>(k) / static_cast<double>(lp_steps);
            RngStream rng(lp_c.seed);
            const LevyPath p = sample_levy_path(lp_t, times, rng);
            if (lp_c.format == "json") {
                ojson j;
                j["t"] = p.times;
                j["g"] = p.g;
                j["w"] = p.w;
                emit(lp_c, j.dump(2) + "\n", out);
            } else {
                std::string s = "t,g,w\n";
                for (std::size_t k = 0; k < p.times.size(); ++k) s += num(p.times[k]) + "," + num(p.g[k]) + "," + num(p.w[k]) + "\n";
                emit(lp_c, s, out);
            }
        };
    });

    // limit-law
    Common ll_c;
    BgglParams ll_t;
    std::size_t ll_draws = 1000;
    std::string ll_regime = "auto";
    auto* ll_cmd = app.add_subcommand("limit-law", "draws of the limiting vector W");
    add_common(ll_cmd, ll_c, "csv", {"csv", "json"});
    add_theta(ll_cmd, ll_t);
    ll_cmd->add_option("--draws", ll_draws, "number of draws")->capture_default_str();
    ll_cmd->add_option("--regime", ll_regime, "regime")
        ->check(CLI::IsMember({"auto", "regular", "boundary", "heavy"}))
        ->capture_default_str();
    ll_cmd->callback([&] {
        action = [&] {
            const Regime regime = ll_regime == "auto"       ? classify_regime(ll_t.alpha)
                                  : ll_regime == "regular"  ? Regime::regular
                                  : ll_regime == "boundary" ? Regime::boundary
                                                            : Regime::heavy;
            const LimitLawSpec spec = make_limit_law(regime, ll_t);
            RngStream rng(ll_c.seed);
            std::vector<Vector5> draws(ll_draws);
            for (auto& w : draws) w = sample_limit_vector(spec, rng);
            if (ll_c.format == "json") {
                ojson j;
                j["regime"] = std::string(to_string(regime));
                j["sigma_alpha_beta"] = detail::matrix_json(spec.sigma_alpha_beta);
                j["sigma_delta_mu"] = detail::matrix_json(spec.sigma_delta_mu);
                j["mu_variance"] = spec.mu_variance;
                j["upsilon_variance"] = spec.upsilon_variance;
                j["draws"] = draws;
                emit(ll_c, j.dump(2) + "\n", out);
            } else {
                std::string s = "w_alpha,w_beta,w_delta,w_mu,w_upsilon\n";
                for (const auto& w : draws) {
                    s += num(w[0]) + "," + num(w[1]) + "," + num(w[2]) + "," + num(w[3]) + "," + num(w[4]) + "\n";
                }
                emit(ll_c, s, out);
            }
        };
    });

    // rate-slope
    Common rs_c;
    BgglParams rs_t;
    std::vector<std::size_t> rs_grid{200, 800, 3200, 12800};
    std::size_t rs_reps = 2000;
    unsigned rs_threads = 0;
    auto* rs_cmd = app.add_subcommand("rate-slope", "log-log slope of RMSE(delta_hat) against n");
    add_common(rs_cmd, rs_c, "json", {"csv", "json"});
    add_theta(rs_cmd, rs_t);
    rs_cmd->add_option("--n-grid", rs_grid, "sample sizes")->delimiter(',')->capture_default_str();
    rs_cmd->add_option("--replications", rs_reps, "replications per size")->capture_default_str();
    rs_cmd->add_option("--threads", rs_threads, "worker threads (0: all cores)")->capture_default_str();
    rs_cmd->callback([&] {
        action = [&] {
            const RateSlopeResult r = rate_slope({rs_t, rs_grid, rs_reps, rs_c.seed, rs_threads});
            if (rs_c.format == "json") {
                ojson j;
                j["theta"] = detail::params_json(rs_t);
                j["n"] = r.n;
                j["rmse"] = r.rmse;
                j["slope"] = r.slope;
                j["intercept"] = r.intercept;
                emit(rs_c, j.dump(2) + "\n", out);
            } else {
                std::string s = "n,rmse\n";
                for (std::size_t k = 0; k < r.n.size(); ++k) s += std::to_string(r.n[k]) + "," + num(r.rmse[k]) + "\n";
                s += "# slope," + num(r.slope) + "\n";
                emit(rs_c, s, out);
            }
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "bggl: " << e.what() << "\n";
        return 2;
    }

    try {
        if (action) action();
        return 0;
    } catch (const std::exception& e) {
        err << "bggl: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace bggl::cli
