// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "bggl/asympt.hpp"
#include "bggl/dist.hpp"
#include "bggl/estimate.hpp"
#include "bggl/finance.hpp"
#include "bggl/montecarlo.hpp"
#include "bggl/sample.hpp"
#include "bggl/special.hpp"
#include "oracles.hpp"

using namespace bggl;

namespace {

constexpr std::uint64_t kSeed = 20261018;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects sub-checks for one criterion; the first few failures are echoed.
struct Tally {
    int total = 0;
    int failed = 0;
    std::vector<std::string> notes;

    void check(bool ok, const std::string& what) {
        ++total;
        if (!ok) {
            ++failed;
            if (notes.size() < 12) notes.push_back(what);
        }
    }
    [[nodiscard]] bool ok() const { return failed == 0; }
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int g_failures = 0;

void report(int id, bool pass, const std::string& summary, const Tally* tally = nullptr) {
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", id, summary.c_str());
    if (tally) {
        for (const auto& n : tally->notes) std::printf("    - %s\n", n.c_str());
    }
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void note(const std::string& text) {
    std::printf("    %s\n", text.c_str());
    std::fflush(stdout);
}

std::vector<double> to_vec(std::span<const double> s) { return {s.begin(), s.end()}; }

// ---------------------------------------------------------------------------

void criterion1() {
    const auto t0 = Clock::now();
    Tally t;
    double worst = 0.0;
    for (double a : {0.25, 1.0, 2.0, 5.0}) {
        for (double b : {1.0, 8.0}) {
            // delta = 0: the integral is translation invariant, and for delta != 0 the
            // points y = delta + mu x + sigma sqrt(x) u collapse onto one double once
            // sigma sqrt(x) drops below an ulp of delta.
            const BgglParams th{a, b, 0.0, -0.5, 1.2};
            // Inner integral over y for fixed x, in units of the conditional sd.
            auto inner = [&](double x) {
                const double m = th.delta + th.mu * x;
                const double sd = th.sigma * std::sqrt(x);
                auto f = [&](double u) { return std::exp(joint_log_pdf(th, x, m + sd * u)); };
                // Fixed panels keep the inner value a smooth function of x, so the
                // adaptive outer rule is not chasing rounding noise.
                double sum = 0.0;
                for (int k = 0; k < 16; ++k) {
                    const double lo = -40.0 + 5.0 * k;
                    sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, lo, lo + 5.0, 0);
                }
                return sd * sum;
            };
            auto logf = [&](double s) {
                const double v = inner(std::exp(s));
                return v > 0.0 ? std::log(v) + s : -std::numeric_limits<double>::infinity();
            };
            const double total = oracle::integrate_exp(logf, -50.0 / a - 10.0, std::log(400.0 / b), 1e-12);
            worst = std::max(worst, std::abs(total - 1.0));
            t.check(std::abs(total - 1.0) <= 1e-6, fmt("alpha=%g beta=%g: integral %.12f", a, b, total));
        }
    }
    const double secs = seconds_since(t0);
    t.check(secs < 30.0, fmt("runtime %.1f s exceeds 30 s", secs));
    report(1, t.ok(), fmt("density normalization, 8 points, max |I-1| = %.2e, %.1f s", worst, secs), &t);
}

void criterion2() {
    Tally t;
    struct Point {
        BgglParams th;
        double y;
    };
    std::vector<Point> pts;
    const BgglParams thetas[] = {{0.75, 1.0, 0.0, 0.5, 1.0}, {1.0, 2.0, 0.3, -0.5, 0.7}, {2.0, 1.0, -1.0, 1.0, 1.5},
                                 {5.0, 3.0, 0.0, 0.0, 1.0},  {0.3, 1.0, 0.0, 0.2, 1.0}};
    for (const auto& th : thetas) {
        for (double dy : {-2.0, 1e-6, 0.01, 1.5}) {
            if (th.alpha <= 0.5 && std::abs(dy) < 0.1) {
                pts.push_back({th, th.delta + 10.0 * dy + 0.4});
            } else {
                pts.push_back({th, th.delta + dy});
            }
        }
    }
    double worst = 0.0;
    for (const auto& p : pts) {
        const double ref = oracle::integrate_exp(
            [&](double s) { return joint_log_pdf(p.th, std::exp(s), p.y) + s; }, -200.0, std::log(500.0 / p.th.beta),
            1e-14);
        const double got = gal_marginal_pdf(p.th, p.y);
        const double err = std::abs(got - ref) / std::max(1.0, ref);
        worst = std::max(worst, err);
        t.check(err <= 1e-8, fmt("alpha=%g y-delta=%g: %.15g vs %.15g", p.th.alpha, p.y - p.th.delta, got, ref));
    }
    report(2, t.ok(), fmt("marginal vs x-integral at %zu points, max err %.2e", pts.size(), worst), &t);
}

void criterion3() {
    Tally t;
    const BgglParams thetas[] = {{2.0, 3.0, 0.1, 0.5, 0.8}, {0.7, 1.5, -0.2, -0.4, 1.1}};
    const std::pair<double, double> unit[] = {{-0.5, -0.5}, {-0.2, 0.3}, {0.0, 0.4}, {0.2, -0.3}, {0.3, 0.2},
                                              {0.5, 0.0},   {-1.0, 0.6}, {0.1, -0.6}, {0.4, 0.5}, {-0.3, -0.2}};
    constexpr std::size_t n = 1000000;
    std::uint64_t stream = 0;
    for (const auto& th : thetas) {
        RngStream rng(kSeed, stream++);
        const PairedSample smp = sample_bggl(th, n, rng);
        const auto xs = smp.x();
        const auto ys = smp.y();
        std::vector<double> v(n);
        std::vector<double> w(n);
        for (auto [a, b] : unit) {
            const double s = a * th.beta / 4.0;
            const double tt = b / (2.0 * th.sigma);
            // The doubled point must be in the domain for a finite MC variance.
            const double k2 = th.beta - 2.0 * s - 2.0 * th.mu * tt - 2.0 * th.upsilon() * tt * tt;
            t.check(k2 > 0.0, fmt("(%g, %g) doubled point outside the domain", s, tt));
            for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(s * xs[i] + tt * ys[i]);
            const auto m = oracle::mean_se(v);
            const double ex = mgf(th, s, tt);
            t.check(std::abs(m.mean - ex) <= 3.0 * m.se,
                    fmt("mgf alpha=%g (%g,%g): %.6f vs %.6f (se %.1e)", th.alpha, s, tt, ex, m.mean, m.se));

            const double cs = 2.0 * a;
            const double ct = 2.0 * b / th.sigma;
            for (std::size_t i = 0; i < n; ++i) {
                const double arg = cs * xs[i] + ct * ys[i];
                v[i] = std::cos(arg);
                w[i] = std::sin(arg);
            }
            const auto re = oracle::mean_se(v);
            const auto im = oracle::mean_se(w);
            const std::complex<double> phi = char_fn(th, cs, ct);
            t.check(std::abs(re.mean - phi.real()) <= 3.0 * re.se,
                    fmt("Re cf alpha=%g (%g,%g): %.6f vs %.6f", th.alpha, cs, ct, phi.real(), re.mean));
            t.check(std::abs(im.mean - phi.imag()) <= 3.0 * im.se,
                    fmt("Im cf alpha=%g (%g,%g): %.6f vs %.6f", th.alpha, cs, ct, phi.imag(), im.mean));
        }
        const MomentSummary mo = moments(th);
        const auto mx = oracle::mean_se(xs);
        const auto my = oracle::mean_se(ys);
        const auto cxx = oracle::cov_se(xs, xs);
        const auto cxy = oracle::cov_se(xs, ys);
        const auto cyy = oracle::cov_se(ys, ys);
        t.check(std::abs(mx.mean - mo.mean_x) <= 4.0 * mx.se, "E X");
        t.check(std::abs(my.mean - mo.mean_y) <= 4.0 * my.se, "E Y");
        t.check(std::abs(cxx.cov - mo.cov(0, 0)) <= 4.0 * cxx.se, "Var X");
        t.check(std::abs(cxy.cov - mo.cov(0, 1)) <= 4.0 * cxy.se, "Cov XY");
        t.check(std::abs(cyy.cov - mo.cov(1, 1)) <= 4.0 * cyy.se, "Var Y");
    }
    report(3, t.ok(), fmt("mgf / cf / moments vs 1e6-draw MC, %d/%d checks", t.total - t.failed, t.total), &t);
}

void criterion4() {
    Tally t;
    const BgglParams thetas[] = {{0.4, 1.0, 0.0, 0.3, 1.0},
                                 {1.0, 2.0, 0.5, -1.0, 0.5},
                                 {2.0, 1.0, 0.0, 0.0, 1.0},
                                 {5.0, 4.0, -1.0, 2.0, 2.0},
                                 {1.2, 8.0, 0.02, -0.001, 0.005}};
    constexpr std::size_t n = 1000000;
    std::uint64_t stream = 100;
    std::string detail;
    for (const auto& th : thetas) {
        RngStream rng(kSeed, stream++);
        const PairedSample smp = sample_bggl(th, n, rng);
        std::vector<double> v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = -joint_log_pdf(th, smp.x()[i], smp.y()[i]);
        const auto m = oracle::mean_se(v);
        const double h = shannon_entropy(th);
        t.check(std::abs(m.mean - h) <= 3.0 * m.se,
                fmt("alpha=%g: H=%.6f MC=%.6f se=%.1e", th.alpha, h, m.mean, m.se));
        detail += fmt(" %.2f", (m.mean - h) / m.se);
    }
    report(4, t.ok(), "entropy vs MC at 5 points, z-scores" + detail, &t);
}

// Central-difference score in (alpha, beta, delta, mu, upsilon).
std::array<double, 5> fd_score(const BgglParams& th, double x, double y) {
    std::array<double, 5> c{th.alpha, th.beta, th.delta, th.mu, th.upsilon()};
    std::array<double, 5> g{};
    auto eval = [&](const std::array<double, 5>& p) {
        return joint_log_pdf({p[0], p[1], p[2], p[3], std::sqrt(p[4])}, x, y);
    };
    for (int j = 0; j < 5; ++j) {
        const double h = 1e-5 * std::max(1.0, std::abs(c[j]));
        auto up = c;
        auto dn = c;
        up[j] += h;
        dn[j] -= h;
        g[j] = (eval(up) - eval(dn)) / (2.0 * h);
    }
    return g;
}

void criterion5() {
    Tally t;
    constexpr std::size_t n = 100000;
    std::uint64_t stream = 200;
    for (double a : {1.5, 2.0, 5.0}) {
        const BgglParams th{a, 2.0, 0.5, -0.7, 1.3};
        RngStream rng(kSeed, stream++);
        const PairedSample smp = sample_bggl(th, n, rng);
        std::array<std::vector<double>, 5> sc;
        for (auto& c : sc) c.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto g = fd_score(th, smp.x()[i], smp.y()[i]);
            for (int j = 0; j < 5; ++j) sc[j][i] = g[j];
        }
        const FisherMatrix info = fisher_information(th);
        for (int i = 0; i < 5; ++i) {
            for (int j = i; j < 5; ++j) {
                double est = 0.0;
                for (std::size_t k = 0; k < n; ++k) est += sc[i][k] * sc[j][k];
                est /= static_cast<double>(n);
                const double ref = info(i, j);
                const double scale = std::sqrt(info(i, i) * info(j, j));
                if (std::abs(ref) <= 1e-12 * scale) {
                    t.check(std::abs(est) <= 0.05 * scale,
                            fmt("alpha=%g I[%d][%d]=0, MC %.4g (scale %.4g)", a, i, j, est, scale));
                } else {
                    const double tol = (i == 0 && j == 0) ? 0.10 : 0.05;
                    t.check(std::abs(est / ref - 1.0) <= tol,
                            fmt("alpha=%g I[%d][%d]=%.6g, MC %.6g (rel %.3f)", a, i, j, ref, est, est / ref - 1.0));
                }
            }
        }
    }
    // Divergence for alpha = 1/2: E[s_delta^2] = E[1 / (upsilon X)] is infinite.
    // A single running mean of an infinite-mean variable jumps up and drifts
    // down between jumps, so each n gets the median over independent replicates.
    const BgglParams th{0.5, 1.0, 0.0, 0.0, 1.0};
    constexpr int reps = 21;
    std::vector<double> running;
    for (std::size_t m : {1000u, 10000u, 100000u}) {
        std::vector<double> est(reps);
        for (int r = 0; r < reps; ++r) {
            RngStream rng(kSeed + 250 + m, r);
            const PairedSample smp = sample_bggl(th, m, rng);
            double sum = 0.0;
            for (std::size_t k = 0; k < m; ++k) {
                const double g = fd_score(th, smp.x()[k], smp.y()[k])[2];
                sum += g * g;
            }
            est[r] = sum / static_cast<double>(m);
        }
        std::nth_element(est.begin(), est.begin() + reps / 2, est.end());
        running.push_back(est[reps / 2]);
    }
    const bool grows = running[0] < running[1] && running[1] < running[2];
    t.check(grows, fmt("alpha=0.5 delta-score second moment not increasing: %.4g %.4g %.4g", running[0], running[1],
                       running[2]));
    report(5, t.ok(),
           fmt("Fisher information vs score covariance (%d/%d); alpha=0.5 E[s_delta^2]: %.3g, %.3g, %.3g",
               t.total - t.failed, t.total, running[0], running[1], running[2]),
           &t);
}

void criterion6() {
    Tally t;
    RngStream rng(kSeed, 300);
    double worst_ls = 0.0;
    double worst_g = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        const BgglParams th{0.3 + 4.7 * rng.uniform(), 0.5 + 2.5 * rng.uniform(), -1.0 + 2.0 * rng.uniform(),
                            -1.0 + 2.0 * rng.uniform(), 0.3 + 1.7 * rng.uniform()};
        const std::size_t n = 5 + static_cast<std::size_t>(rng.uniform() * 36.0);
        const PairedSample s = sample_bggl(th, std::min<std::size_t>(n, 40), rng);
        const double nn = static_cast<double>(s.size());

        auto g = [&](double d, double m, double u) {
            double sse = 0.0;
            for (std::size_t i = 0; i < s.size(); ++i) {
                const double r = s.y()[i] - d - m * s.x()[i];
                sse += r * r / s.x()[i];
            }
            return -0.5 * nn * std::log(u) - sse / (2.0 * u);
        };
        const LocationScaleFit cf = fit_location_scale(s);
        double ybar = 0.0;
        for (double y : s.y()) ybar += y / nn;
        const auto best = oracle::nelder_mead(
            [&](const std::vector<double>& p) { return -g(p[0], p[1], std::exp(p[2])); }, {ybar, 0.0, 0.0}, 0.5);
        const double g_cf = g(cf.delta, cf.mu, cf.upsilon);
        const double g_nm = g(best[0], best[1], std::exp(best[2]));
        worst_ls = std::max(worst_ls, std::abs(g_cf - g_nm));
        t.check(std::abs(g_cf - g_nm) <= 1e-6, fmt("rep %d n=%zu: g closed %.12f, NM %.12f", rep, s.size(), g_cf, g_nm));

        // Profile gamma log-likelihood in alpha with beta = alpha / xbar.
        double xbar = 0.0;
        double mlog = 0.0;
        for (double x : s.x()) {
            xbar += x / nn;
            mlog += std::log(x) / nn;
        }
        auto ell = [&](double a) {
            return nn * (a * std::log(a / xbar) - oracle::ref_lgamma(a) + (a - 1.0) * mlog - a);
        };
        constexpr int grid = 20001;
        double best_la = 0.0;
        double best_v = -std::numeric_limits<double>::infinity();
        const double lo = std::log(1e-3);
        const double hi = std::log(1e5);
        const double step = (hi - lo) / (grid - 1);
        for (int i = 0; i < grid; ++i) {
            const double la = lo + step * i;
            const double v = ell(std::exp(la));
            if (v > best_v) {
                best_v = v;
                best_la = la;
            }
        }
        const double la_star =
            oracle::golden_max([&](double la) { return ell(std::exp(la)); }, best_la - step, best_la + step, 1e-12);
        const double a_grid = std::exp(la_star);
        const GammaFit gf = fit_gamma(s.x());
        const double d_ell = std::abs(ell(gf.alpha) - ell(a_grid));
        worst_g = std::max(worst_g, d_ell);
        t.check(d_ell <= 1e-6, fmt("rep %d: gamma objective %.12f vs grid %.12f", rep, ell(gf.alpha), ell(a_grid)));
        t.check(std::abs(gf.beta - gf.alpha / xbar) <= 1e-12 * gf.beta, fmt("rep %d: beta_hat != alpha_hat / xbar", rep));
    }
    report(6, t.ok(),
           fmt("closed-form MLE vs numerical maximization, 50 samples; max gap %.1e (delta,mu,upsilon), %.1e (alpha,beta)",
               worst_ls, worst_g),
           &t);
}

struct ReferenceCell {
    double mean;
    double variance;
    double rmse;
};

// Reference simulation table, rows delta / sigma / mu per block.
const ReferenceCell kReference[8][3] = {
    {{0.9993, 0.0214, 0.1105}, {1.9500, 0.0398, 0.1645}, {2.9998, 0.1062, 0.2581}},
    {{1.0009, 0.0012, 0.0275}, {1.9956, 0.0039, 0.0505}, {3.0010, 0.0094, 0.0770}},
    {{0.0000, 0.0000, 0.0004}, {0.9759, 0.0103, 0.0840}, {-0.0006, 0.0872, 0.2319}},
    {{0.0000, 0.0000, 0.0000}, {0.9973, 0.0010, 0.0251}, {0.0001, 0.0081, 0.0722}},
    {{-0.0006, 0.0488, 0.1728}, {0.9739, 0.0098, 0.0823}, {0.0031, 0.0219, 0.1168}},
    {{0.0004, 0.0041, 0.0509}, {0.9972, 0.0010, 0.0257}, {-0.0001, 0.0021, 0.0362}},
    {{-0.0039, 0.4507, 0.5321}, {0.9743, 0.0098, 0.0822}, {0.0004, 0.0222, 0.1179}},
    {{0.0032, 0.0399, 0.1599}, {0.9977, 0.0010, 0.0254}, {-0.0011, 0.0020, 0.0358}},
};

// A printed 0.0000 means the value rounds to zero at four decimals.
bool within15(double ours, double ref) {
    if (ref == 0.0) return std::abs(ours) < 5e-5;
    return std::abs(ours / ref - 1.0) <= 0.15;
}

void criterion7() {
    const auto t0 = Clock::now();
    const auto reports = run_table1_suite(kSeed, 5000, 0);
    const double secs = seconds_since(t0);
    Tally t;
    Tally mae_t;
    Tally var_t;
    Tally loc_t;
    Tally sig_t;
    for (std::size_t k = 0; k < reports.size(); ++k) {
        const auto& r = reports[k];
        const double a = r.config.theta_true.alpha;
        const std::size_t n = r.config.n;
        for (int p = 0; p < 3; ++p) {
            const StudyRow& row = r.rows[p];
            const ReferenceCell& ref = kReference[k][p];
            const std::string tag = fmt("alpha=%g n=%zu %s", a, n, row.name.c_str());
            t.check(std::abs(row.mean - row.actual) <= 4.0 * row.mean_se,
                    fmt("%s: mean %.4f, truth %.4f, se %.1e", tag.c_str(), row.mean, row.actual, row.mean_se));
            t.check(within15(row.variance, ref.variance),
                    fmt("%s: variance %.4f vs %.4f", tag.c_str(), row.variance, ref.variance));
            t.check(within15(row.rmse, ref.rmse), fmt("%s: rmse %.4f vs %.4f", tag.c_str(), row.rmse, ref.rmse));

            mae_t.check(within15(row.mae, ref.rmse), fmt("%s: mae %.4f vs column %.4f", tag.c_str(), row.mae, ref.rmse));
            var_t.check(within15(row.variance, ref.variance), tag);
            if (p != 1) {
                loc_t.check(std::abs(row.mean - row.actual) <= 4.0 * row.mean_se, tag);
            } else {
                // n upsilon_hat / sigma^2 ~ chi^2_{n-2}.
                const double nn = static_cast<double>(n);
                const double expect = row.actual * std::sqrt(2.0 / nn) *
                                      std::exp(oracle::ref_lgamma((nn - 1.0) / 2.0) - oracle::ref_lgamma((nn - 2.0) / 2.0));
                sig_t.check(std::abs(row.mean - expect) <= 4.0 * row.mean_se,
                            fmt("%s: mean %.4f vs E sigma_hat %.4f", tag.c_str(), row.mean, expect));
            }
        }
    }
    t.check(secs < 300.0, fmt("runtime %.1f s exceeds 300 s", secs));
    report(7, t.ok(), fmt("simulation table, 8 blocks x 5000 reps, %d/%d checks, %.1f s", t.total - t.failed, t.total, secs),
           &t);
    note(fmt("supplementary: MAE within 15%% of the table's error column: %d/%d", mae_t.total - mae_t.failed, mae_t.total));
    for (const auto& s : mae_t.notes) note("  " + s);
    note(fmt("supplementary: variance within 15%%: %d/%d", var_t.total - var_t.failed, var_t.total));
    note(fmt("supplementary: delta_hat, mu_hat means within 4 SE of truth: %d/%d", loc_t.total - loc_t.failed,
             loc_t.total));
    note(fmt("supplementary: sigma_hat means within 4 SE of the exact finite-n expectation: %d/%d",
             sig_t.total - sig_t.failed, sig_t.total));
    for (const auto& s : sig_t.notes) note("  " + s);
}

void criterion8() {
    Tally t;
    std::string detail;
    struct Case {
        double alpha;
        double lo;
        double hi;
    };
    const Case cases[] = {{0.5, -1.1, -0.9}, {2.0, -0.6, -0.4}, {1.0, -0.65, -0.5}};
    std::uint64_t k = 0;
    for (const auto& c : cases) {
        RateSlopeConfig cfg;
        cfg.theta = {c.alpha, 1.0, 0.0, 0.0, 1.0};
        cfg.n_grid = {200, 800, 3200, 12800};
        cfg.replications = 2000;
        cfg.seed = kSeed + 400 + k++;
        const RateSlopeResult r = rate_slope(cfg);
        t.check(r.slope >= c.lo && r.slope <= c.hi, fmt("alpha=%g slope %.4f outside [%g, %g]", c.alpha, r.slope, c.lo, c.hi));
        detail += fmt(" alpha=%g: %.3f;", c.alpha, r.slope);
    }
    report(8, t.ok(), "rate slopes" + detail, &t);
}

void criterion9() {
    Tally t;
    std::uint64_t stream = 500;
    constexpr std::size_t draws = 1000000;
    for (double a : {0.25, 0.5, 0.75}) {
        RngStream rng(kSeed, stream++);
        std::vector<double> xi(draws);
        for (auto& e : xi) e = sample_stable_subordinator(a, rng);
        std::vector<double> v(draws);
        for (double u : {0.25, 0.5, 1.0, 2.0}) {
            for (std::size_t i = 0; i < draws; ++i) v[i] = std::exp(-u * xi[i]);
            const auto m = oracle::mean_se(v);
            const double ex = std::exp(-std::tgamma(1.0 - a) * std::pow(u, a));
            t.check(std::abs(m.mean - ex) <= 4.0 * m.se, fmt("xi alpha=%g u=%g: %.6f vs %.6f", a, u, m.mean, ex));
        }
    }
    // Normalized sums of reciprocals at n = 1e4.
    const double beta = 1.5;
    constexpr std::size_t n = 10000;
    constexpr std::size_t reps = 4000;
    for (double a : {0.25, 0.5}) {
        std::vector<double> s(reps);
        for (std::size_t r = 0; r < reps; ++r) {
            RngStream rng(kSeed + 1, static_cast<std::uint64_t>(a * 1e6) + r);
            double sum = 0.0;
            for (std::size_t i = 0; i < n; ++i) sum += 1.0 / sample_gamma(a, beta, rng);
            s[r] = sum * std::pow(static_cast<double>(n), -1.0 / a);
        }
        std::vector<double> v(reps);
        for (double u : {0.25, 0.5, 1.0, 2.0}) {
            for (std::size_t r = 0; r < reps; ++r) v[r] = std::exp(-u * s[r]);
            const auto m = oracle::mean_se(v);
            const double ex = std::exp(-std::tgamma(1.0 - a) / std::tgamma(1.0 + a) * std::pow(beta, a) * std::pow(u, a));
            t.check(std::abs(m.mean - ex) <= 4.0 * m.se, fmt("sum alpha=%g u=%g: %.6f vs %.6f", a, u, m.mean, ex));
        }
    }
    report(9, t.ok(), fmt("stable subordinator and normalized reciprocal sums, %d/%d checks", t.total - t.failed, t.total),
           &t);
}

void criterion10() {
    const BgglParams th{1.2, 8.0, 0.02, -0.001, 0.005};
    const double a0 = 0.3;
    const double b0 = 0.7;
    const VolSeries series = oracle::synthetic_series(th, a0, b0, 5000, kSeed + 600);
    const PipelineResult r = run_pipeline(series);
    const double n = static_cast<double>(r.sample.size());

    // OLS standard errors for (a, b) from the log-volatility regression.
    std::vector<double> lv(series.size());
    for (std::size_t i = 0; i < lv.size(); ++i) lv[i] = std::log(series.vol[i]);
    double mx = 0.0;
    for (std::size_t i = 0; i + 1 < lv.size(); ++i) mx += lv[i] / n;
    double sxx = 0.0;
    double s2 = 0.0;
    for (std::size_t i = 0; i + 1 < lv.size(); ++i) sxx += (lv[i] - mx) * (lv[i] - mx);
    for (double e : r.ar1.residuals) s2 += e * e / (n - 2.0);
    const double se_b = std::sqrt(s2 / sxx);
    const double se_a = std::sqrt(s2 * (1.0 / n + mx * mx / sxx));

    const BgglParams& est = r.fit.theta_hat;
    auto check_all = [&](Tally& t, const double target[7]) {
        const Eigen::Matrix2d sab = sigma_alpha_beta(target[2], target[3]) / n;
        const BgglParams tt{target[2], target[3], target[4], target[5], target[6]};
        const Eigen::Matrix2d sdm = sigma_delta_mu(tt) / n;
        const double got[7] = {r.ar1.a, r.ar1.b, est.alpha, est.beta, est.delta, est.mu, est.sigma};
        const double se[7] = {se_a, se_b, std::sqrt(sab(0, 0)), std::sqrt(sab(1, 1)), std::sqrt(sdm(0, 0)),
                              std::sqrt(sdm(1, 1)), target[6] / std::sqrt(2.0 * n)};
        const char* names[7] = {"a", "b", "alpha", "beta", "delta", "mu", "sigma"};
        std::string line;
        for (int i = 0; i < 7; ++i) {
            const double z = (got[i] - target[i]) / se[i];
            t.check(std::abs(z) <= 3.0, fmt("%s: %.6g vs %.6g (z = %.2f)", names[i], got[i], target[i], z));
            line += fmt(" %s %.2f", names[i], z);
        }
        return line;
    };

    Tally t;
    const double literal[7] = {a0, b0, th.alpha, th.beta, th.delta, th.mu, th.sigma};
    const std::string zs = check_all(t, literal);
    const auto zm = oracle::mean_se(r.z);
    const double zvar = oracle::cov_se(r.z, r.z).cov;
    t.check(std::abs(zm.mean) <= 3.0 / std::sqrt(n), fmt("Z mean %.4f", zm.mean));
    t.check(std::abs(zvar - 1.0) <= 3.0 * std::sqrt(2.0 / n), fmt("Z variance %.4f", zvar));
    report(10, t.ok(), "finance round trip, z-scores vs generating values:" + zs, &t);

    // With E ln X = m != 0 the AR(1) intercept absorbs m and X is rescaled by e^{-m}.
    const double m = oracle::ref_digamma(th.alpha) - std::log(th.beta);
    const double ident[7] = {a0 + m, b0, th.alpha, th.beta * std::exp(m), th.delta, th.mu * std::exp(m),
                             th.sigma * std::exp(m / 2.0)};
    Tally s;
    const std::string zi = check_all(s, ident);
    note(fmt("supplementary: identifiable targets (E ln X = %.4f absorbed by the intercept) %s:%s", m,
             s.ok() ? "all within 3 SE" : "NOT all within 3 SE", zi.c_str()));
    for (const auto& x : s.notes) note("  " + x);
}

void criterion11() {
    Tally t;
    using namespace bggl::special;
    // Bessel symmetry, recurrence, asymptotics.
    for (double nu : {0.2, 0.5, 1.3, 3.7}) {
        for (double x : {0.05, 0.8, 3.0, 25.0}) {
            t.check(std::abs(bessel_k(-nu, x) / bessel_k(nu, x) - 1.0) < 1e-12, fmt("K symmetry nu=%g x=%g", nu, x));
            const double rec = bessel_k(nu - 1.0, x) + 2.0 * nu / x * bessel_k(nu, x);
            t.check(std::abs(bessel_k(nu + 1.0, x) / rec - 1.0) < 1e-11, fmt("K recurrence nu=%g x=%g", nu, x));
        }
        const double small = 1e-7;
        const double lead = 0.5 * std::tgamma(nu) * std::pow(small / 2.0, -nu);
        t.check(std::abs(bessel_k(nu, small) / lead - 1.0) < 1e-2, fmt("K small-x nu=%g", nu));
        const double big = 700.0;
        const double m4 = 4.0 * nu * nu;
        const double asym = 0.5 * std::log(std::numbers::pi / (2.0 * big)) - big +
                            std::log1p((m4 - 1.0) / (8.0 * big) + (m4 - 1.0) * (m4 - 9.0) / (128.0 * big * big));
        t.check(std::abs(log_bessel_k(nu, big) - asym) < 1e-6, fmt("K large-x nu=%g", nu));
    }
    // F_alpha(x) = x^alpha K_alpha(x) on (0, 1): decreasing from Gamma(alpha) 2^{alpha-1}.
    for (double a : {0.1, 0.5, 0.9}) {
        t.check(std::abs(f_alpha(a, 0.0) / (std::tgamma(a) * std::pow(2.0, a - 1.0)) - 1.0) < 1e-12,
                fmt("F_alpha(0) alpha=%g", a));
        double prev = f_alpha(a, 0.0);
        for (double x = 0.01; x < 20.0; x *= 1.5) {
            const double v = f_alpha(a, x);
            t.check(v < prev && v > 0.0, fmt("F_alpha monotone alpha=%g x=%g", a, x));
            prev = v;
        }
    }
    // w(delta) <= 0.
    {
        RngStream rng(kSeed, 700);
        for (int rep = 0; rep < 200; ++rep) {
            const PairedSample s = sample_bggl({0.5 + 3.0 * rng.uniform(), 1.0, 0.0, rng.normal(), 1.0}, 10, rng);
            for (double d = -5.0; d <= 5.0; d += 0.5) {
                t.check(delta_profile(s, d) <= 1e-12, fmt("w(%g) > 0 at rep %d", d, rep));
            }
        }
    }
    // Infinite divisibility.
    {
        const BgglParams th{1.2, 1.5, 0.8, -0.5, 0.7};
        const BgglParams q{th.alpha / 3.0, th.beta, th.delta / 3.0, th.mu, th.sigma};
        constexpr std::size_t n = 50000;
        RngStream ra(kSeed, 701);
        RngStream rb(kSeed, 702);
        const PairedSample full = sample_bggl(th, n, ra);
        const PairedSample parts = sample_bggl(q, 3 * n, rb);
        std::vector<double> sx(n, 0.0), sy(n, 0.0);
        for (std::size_t i = 0; i < 3 * n; ++i) {
            sx[i / 3] += parts.x()[i];
            sy[i / 3] += parts.y()[i];
        }
        t.check(oracle::ks_two_sample_pvalue(sx, to_vec(full.x())) > 1e-3, "infinite divisibility (x)");
        t.check(oracle::ks_two_sample_pvalue(sy, to_vec(full.y())) > 1e-3, "infinite divisibility (y)");
    }
    // Unbiasedness of delta_hat, mu_hat, s^2.
    {
        const BgglParams th{2.0, 1.0, 0.5, -1.0, 1.5};
        constexpr int reps = 20000;
        std::vector<double> d(reps), mu(reps), s2(reps);
        for (int r = 0; r < reps; ++r) {
            RngStream rng(kSeed + 703, r);
            const FitResult f = fit_bggl(sample_bggl(th, 15, rng));
            d[r] = f.theta_hat.delta;
            mu[r] = f.theta_hat.mu;
            s2[r] = f.s2;
        }
        const auto md = oracle::mean_se(d);
        const auto mm = oracle::mean_se(mu);
        const auto ms = oracle::mean_se(s2);
        t.check(std::abs(md.mean - th.delta) <= 4.0 * md.se, "E delta_hat");
        t.check(std::abs(mm.mean - th.mu) <= 4.0 * mm.se, "E mu_hat");
        t.check(std::abs(ms.mean - th.upsilon()) <= 4.0 * ms.se, "E s^2");
    }
    // Scale equivariance.
    {
        RngStream rng(kSeed, 704);
        const PairedSample s = sample_bggl({1.7, 2.0, 0.3, 0.4, 0.9}, 60, rng);
        const FitResult base = fit_bggl(s);
        const double c = 3.5;
        const double k = 0.2;
        std::vector<double> x2(s.size()), y2(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            x2[i] = k * s.x()[i];
            y2[i] = c * s.y()[i];
        }
        const FitResult f = fit_bggl(PairedSample(x2, y2));
        auto rel = [](double u, double v) { return std::abs(u - v) <= 1e-9 * std::max(1.0, std::abs(v)); };
        t.check(rel(f.theta_hat.alpha, base.theta_hat.alpha), "alpha_hat invariant under x -> kx");
        t.check(rel(f.theta_hat.beta, base.theta_hat.beta / k), "beta_hat -> beta_hat / k");
        t.check(rel(f.theta_hat.delta, c * base.theta_hat.delta), "delta_hat -> c delta_hat");
        t.check(rel(f.theta_hat.mu, c / k * base.theta_hat.mu), "mu_hat -> (c / k) mu_hat");
        t.check(rel(f.upsilon_hat, c * c / k * base.upsilon_hat), "upsilon_hat -> (c^2 / k) upsilon_hat");
    }
    // RngStream determinism.
    {
        RngStream a(kSeed, 9);
        RngStream b(kSeed, 9);
        RngStream c(kSeed, 10);
        bool same = true;
        bool differs = false;
        for (int i = 0; i < 10000; ++i) {
            const auto va = a();
            same = same && va == b();
            differs = differs || va != c();
        }
        t.check(same, "identical (seed, stream) pairs diverged");
        t.check(differs, "distinct streams coincide");
    }
    report(11, t.ok(), fmt("property suites, %d/%d checks", t.total - t.failed, t.total), &t);
}

}  // namespace

int main() {
    const auto t0 = Clock::now();
    const std::vector<std::function<void()>> all = {criterion1, criterion2, criterion3,  criterion4,
                                                    criterion5, criterion6, criterion7,  criterion8,
                                                    criterion9, criterion10, criterion11};
    for (std::size_t i = 0; i < all.size(); ++i) {
        try {
            all[i]();
        } catch (const std::exception& e) {
            report(static_cast<int>(i + 1), false, std::string("exception: ") + e.what());
        }
    }
    std::printf("acceptance: %d of %zu criteria failed, %.1f s\n", g_failures, all.size(), seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
