#include "bggl/montecarlo.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#include "bggl/error.hpp"
#include "bggl/estimate.hpp"
#include "bggl/sample.hpp"
#include "parallel.hpp"

namespace bggl {

namespace {

struct Replicate {
    std::array<double, 3> est{};
    bool degenerate = false;
};

StudyRow summarize(const char* name, double actual, const std::vector<Replicate>& reps, std::size_t slot) {
    StudyRow row;
    row.name = name;
    row.actual = actual;
    std::size_t count = 0;
    double sum = 0.0;
    for (const auto& r : reps) {
        if (r.degenerate) continue;
        sum += r.est[slot];
        ++count;
    }
    if (count == 0) return row;
    const double c = static_cast<double>(count);
    row.mean = sum / c;
    double ss = 0.0;
    double sq_err = 0.0;
    double abs_err = 0.0;
    for (const auto& r : reps) {
        if (r.degenerate) continue;
        const double v = r.est[slot];
        ss += (v - row.mean) * (v - row.mean);
        sq_err += (v - actual) * (v - actual);
        abs_err += std::abs(v - actual);
    }
    row.variance = ss / c;
    row.rmse = std::sqrt(sq_err / c);
    row.mae = abs_err / c;
    row.mean_se = count > 1 ? std::sqrt(ss / (c - 1.0) / c) : 0.0;
    return row;
}

}  // namespace

StudyReport run_study(const StudyConfig& config) {
    config.theta_true.validate();
    if (config.n < 3) throw DomainError("run_study: n must be >= 3");
    if (config.replications < 1) throw DomainError("run_study: replications must be >= 1");

    const auto start = std::chrono::steady_clock::now();
    std::vector<Replicate> reps(config.replications);
    detail::parallel_for(config.replications, config.threads, [&](std::size_t r) {
        RngStream rng(config.seed, r);
        const PairedSample s = sample_bggl(config.theta_true, config.n, rng);
        try {
            const LocationScaleFit fit = fit_location_scale(s);
            if (!fit.delta_estimable) {
                reps[r].degenerate = true;
                return;
            }
            reps[r].est = {fit.delta, std::sqrt(fit.upsilon), fit.mu};
        } catch (const DegenerateSampleError&) {
            reps[r].degenerate = true;
        }
    });

    StudyReport report;
    report.config = config;
    const auto& th = config.theta_true;
    report.rows = {summarize("delta", th.delta, reps, 0), summarize("sigma", th.sigma, reps, 1),
                   summarize("mu", th.mu, reps, 2)};
    for (const auto& r : reps) report.degenerate += r.degenerate ? 1 : 0;
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<StudyConfig> table1_configs(std::uint64_t seed, std::size_t replications) {
    const double alphas[] = {1.0, 0.25, 2.0, 5.0};
    const std::size_t sizes[] = {50, 500};
    std::vector<StudyConfig> out;
    std::uint64_t k = 0;
    for (double a : alphas) {
        for (std::size_t n : sizes) {
            StudyConfig c;
            c.theta_true = a == 1.0 ? BgglParams{1.0, 1.0, 1.0, 3.0, 2.0} : BgglParams{a, 1.0, 0.0, 0.0, 1.0};
            c.n = n;
            c.replications = replications;
            c.seed = seed + k++;
            out.push_back(c);
        }
    }
    return out;
}

std::vector<StudyReport> run_table1_suite(std::uint64_t seed, std::size_t replications, unsigned threads) {
    std::vector<StudyReport> out;
    for (auto c : table1_configs(seed, replications)) {
        c.threads = threads;
        out.push_back(run_study(c));
    }
    return out;
}

std::string to_json(const std::vector<StudyReport>& reports, bool include_timing) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& rep : reports) {
        const auto& th = rep.config.theta_true;
        nlohmann::ordered_json j;
        j["theta"] = {{"alpha", th.alpha}, {"beta", th.beta}, {"delta", th.delta}, {"mu", th.mu}, {"sigma", th.sigma}};
        j["n"] = rep.config.n;
        j["replications"] = rep.config.replications;
        j["seed"] = rep.config.seed;
        j["degenerate"] = rep.degenerate;
        nlohmann::ordered_json rows = nlohmann::ordered_json::array();
        for (const auto& row : rep.rows) {
            rows.push_back({{"parameter", row.name},
                            {"actual", row.actual},
                            {"mean", row.mean},
                            {"variance", row.variance},
                            {"rmse", row.rmse},
                            {"mae", row.mae},
                            {"mean_se", row.mean_se}});
        }
        j["rows"] = rows;
        if (include_timing) j["wall_seconds"] = rep.wall_seconds;
        arr.push_back(j);
    }
    return arr.dump(2) + "\n";
}

std::string to_text(const std::vector<StudyReport>& reports) {
    std::ostringstream os;
    char line[160];
    std::snprintf(line, sizeof line, "%6s %5s  %-6s %8s %10s %10s %10s %10s\n", "alpha", "n", "param", "actual",
                  "mean", "variance", "rmse", "mae");
    os << line;
    for (const auto& rep : reports) {
        for (const auto& row : rep.rows) {
            std::snprintf(line, sizeof line, "%6.2f %5zu  %-6s %8.4f %10.4f %10.4f %10.4f %10.4f\n",
                          rep.config.theta_true.alpha, rep.config.n, row.name.c_str(), row.actual, row.mean,
                          row.variance, row.rmse, row.mae);
            os << line;
        }
        if (rep.degenerate != 0) os << "  (" << rep.degenerate << " degenerate replications excluded)\n";
    }
    return os.str();
}

}  // namespace bggl
