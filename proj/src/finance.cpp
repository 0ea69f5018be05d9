#include "bggl/finance.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

#include <boost/math/distributions/gamma.hpp>
#include <boost/math/distributions/normal.hpp>

#include "bggl/dist.hpp"
#include "bggl/error.hpp"
#include "bggl/quadrature.hpp"
#include "json_io.hpp"

namespace bggl {

using namespace std::chrono;

void VolSeries::validate() const {
    if (close.size() != dates.size() || vol.size() != dates.size()) {
        throw DataError("VolSeries: dates, close and vol lengths differ");
    }
    for (std::size_t i = 0; i < dates.size(); ++i) {
        if (!dates[i].ok()) throw DataError("VolSeries: invalid date at row " + std::to_string(i));
        if (i > 0 && !(sys_days(dates[i - 1]) < sys_days(dates[i]))) {
            throw DataError("VolSeries: dates not strictly increasing at row " + std::to_string(i));
        }
        if (!(close[i] > 0.0) || !std::isfinite(close[i])) {
            throw DataError("VolSeries: nonpositive close at row " + std::to_string(i));
        }
        if (!(vol[i] > 0.0) || !std::isfinite(vol[i])) {
            throw DataError("VolSeries: nonpositive vol at row " + std::to_string(i));
        }
    }
}

year_month_day parse_iso_date(std::string_view text) {
    auto bad = [&] { return DataError("invalid ISO date '" + std::string(text) + "'"); };
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') throw bad();
    int y = 0;
    unsigned m = 0;
    unsigned d = 0;
    auto num = [&](std::size_t pos, std::size_t len, auto& out) {
        const char* first = text.data() + pos;
        const auto [ptr, ec] = std::from_chars(first, first + len, out);
        if (ec != std::errc{} || ptr != first + len) throw bad();
    };
    num(0, 4, y);
    num(5, 2, m);
    num(8, 2, d);
    const year_month_day date{year{y}, month{m}, day{d}};
    if (!date.ok()) throw bad();
    return date;
}

std::string format_iso_date(year_month_day date) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(date.year()),
                  static_cast<unsigned>(date.month()), static_cast<unsigned>(date.day()));
    return buf;
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_number(std::string_view s, std::size_t line) {
    s = trim(s);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
        throw DataError("line " + std::to_string(line) + ": invalid number '" + std::string(s) + "'");
    }
    return v;
}

}  // namespace

VolSeries read_vol_csv(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    VolSeries out;
    bool header = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view row = trim(line);
        if (lineno == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
        if (row.empty()) continue;
        if (!header) {
            if (row != "date,close,vol") throw DataError("line " + std::to_string(lineno) + ": expected header date,close,vol");
            header = true;
            continue;
        }
        const auto c1 = row.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : row.find(',', c1 + 1);
        if (c2 == std::string_view::npos || row.find(',', c2 + 1) != std::string_view::npos) {
            throw DataError("line " + std::to_string(lineno) + ": expected three fields");
        }
        try {
            out.dates.push_back(parse_iso_date(trim(row.substr(0, c1))));
        } catch (const DataError& e) {
            throw DataError("line " + std::to_string(lineno) + ": " + e.what());
        }
        out.close.push_back(parse_number(row.substr(c1 + 1, c2 - c1 - 1), lineno));
        out.vol.push_back(parse_number(row.substr(c2 + 1), lineno));
    }
    if (!header) throw DataError("empty CSV input");
    out.validate();
    return out;
}

VolSeries read_vol_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path);
    return read_vol_csv(in);
}

VolSeries aggregate_weekly(const VolSeries& daily) {
    daily.validate();
    VolSeries out;
    std::size_t i = 0;
    while (i < daily.size()) {
        const sys_days day0{daily.dates[i]};
        const sys_days monday = day0 - (weekday{day0} - Monday);
        double vol_sum = 0.0;
        std::size_t count = 0;
        std::size_t last = i;
        while (i < daily.size() && sys_days{daily.dates[i]} < monday + days{7}) {
            vol_sum += daily.vol[i];
            ++count;
            last = i;
            ++i;
        }
        out.dates.push_back(daily.dates[last]);
        out.close.push_back(daily.close[last]);
        out.vol.push_back(vol_sum / static_cast<double>(count));
    }
    return out;
}

std::vector<double> compute_returns(const VolSeries& series) {
    if (series.size() < 2) throw DataError("compute_returns: need at least two observations");
    std::vector<double> y(series.size() - 1);
    for (std::size_t t = 1; t < series.size(); ++t) {
        if (!(series.close[t] > 0.0) || !(series.close[t - 1] > 0.0)) {
            throw DomainError("compute_returns: prices must be positive");
        }
        y[t - 1] = std::log(series.close[t]) - std::log(series.close[t - 1]);
    }
    return y;
}

std::vector<double> compute_surprise_vol(const VolSeries& series, double a, double b) {
    if (series.size() < 2) throw DataError("compute_surprise_vol: need at least two observations");
    std::vector<double> x(series.size() - 1);
    for (std::size_t t = 1; t < series.size(); ++t) {
        if (!(series.vol[t] > 0.0) || !(series.vol[t - 1] > 0.0)) {
            throw DomainError("compute_surprise_vol: volatility must be positive");
        }
        x[t - 1] = std::exp(std::log(series.vol[t]) - a - b * std::log(series.vol[t - 1]));
    }
    return x;
}

GalDistribution::GalDistribution(const BgglParams& theta, int segments) : theta_(theta), segments_(segments) {
    theta.validate();
    if (segments < 1) throw DomainError("GalDistribution: segments must be >= 1");
    // Power substitution y - delta = +-reach s^m removes the singularity of
    // the density at delta (it behaves like |y - delta|^{2 alpha - 1}).
    power_ = std::max(1, static_cast<int>(std::ceil(1.0 / theta.alpha)));
    const MomentSummary mom = moments(theta);
    const double sd = std::sqrt(mom.cov(1, 1));
    const double root = std::sqrt(theta.mu * theta.mu + 2.0 * theta.beta * theta.upsilon());
    const double rate_up = (root - theta.mu) / theta.upsilon();
    const double rate_down = (root + theta.mu) / theta.upsilon();
    const double shift = mom.mean_y - theta.delta;
    reach_[0] = std::max(0.0, -shift) + 12.0 * sd + 40.0 / rate_down;
    reach_[1] = std::max(0.0, shift) + 12.0 * sd + 40.0 / rate_up;

    const int k = segments_;
    cum_.assign(2 * k + 1, 0.0);
    for (int i = 0; i < k; ++i) {
        const int j = k - i - 1;
        cum_[i + 1] = cum_[i] + piece(0, static_cast<double>(j) / k, static_cast<double>(j + 1) / k);
    }
    for (int j = 0; j < k; ++j) {
        cum_[k + j + 1] = cum_[k + j] + piece(1, static_cast<double>(j) / k, static_cast<double>(j + 1) / k);
    }
    total_ = cum_.back();
}

double GalDistribution::map(int side, double s) const {
    const double off = reach_[side] * std::pow(s, power_);
    return side == 0 ? theta_.delta - off : theta_.delta + off;
}

double GalDistribution::piece(int side, double s_lo, double s_hi) const {
    if (!(s_hi > s_lo)) return 0.0;
    const double scale = reach_[side] * power_;
    return quad::kronrod15(
        [&](double s) {
            const double jac = power_ == 1 ? scale : scale * std::pow(s, power_ - 1);
            return gal_marginal_pdf(theta_, map(side, s)) * jac;
        },
        s_lo, s_hi);
}

double GalDistribution::cdf(double y) const {
    const int k = segments_;
    if (y <= theta_.delta) {
        const double s = std::pow((theta_.delta - y) / reach_[0], 1.0 / power_);
        if (s >= 1.0) return 0.0;
        const int j = std::min(k - 1, static_cast<int>(s * k));
        return (cum_[k - j - 1] + piece(0, s, static_cast<double>(j + 1) / k)) / total_;
    }
    const double s = std::pow((y - theta_.delta) / reach_[1], 1.0 / power_);
    if (s >= 1.0) return 1.0;
    const int j = std::min(k - 1, static_cast<int>(s * k));
    return std::min(1.0, (cum_[k + j] + piece(1, static_cast<double>(j) / k, s)) / total_);
}

double GalDistribution::quantile(double p) const {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("GalDistribution::quantile: p must lie in (0, 1)");
    const int k = segments_;
    const double target = p * total_;
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    const int i = std::clamp(static_cast<int>(it - cum_.begin()) - 1, 0, 2 * k - 1);
    const double need = target - cum_[i];
    const int side = i < k ? 0 : 1;
    const int j = side == 0 ? k - i - 1 : i - k;
    double lo = static_cast<double>(j) / k;
    double hi = static_cast<double>(j + 1) / k;
    // mass(s): mass between the segment's start breakpoint and the point at s;
    // increasing in s on the right side, decreasing on the left.
    const double seg_lo = lo;
    const double seg_hi = hi;
    auto mass = [&](double s) { return side == 0 ? piece(0, s, seg_hi) : piece(1, seg_lo, s); };
    const double tol = 1e-9 * total_;
    double s = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200; ++iter) {
        const double f = mass(s) - need;
        if (std::abs(f) <= tol) return map(side, s);
        // Keep the bracket: on the left mass decreases in s.
        const bool too_much = f > 0.0;
        if ((side == 1) == too_much) {
            hi = s;
        } else {
            lo = s;
        }
        if (hi - lo <= 1e-15 * std::max(1.0, hi)) return map(side, 0.5 * (lo + hi));
        double next = 0.5 * (lo + hi);
        if (s > 0.0) {
            const double jac = reach_[side] * power_ * std::pow(s, power_ - 1);
            const double dens = gal_marginal_pdf(theta_, map(side, s)) * jac;
            if (dens > 0.0 && std::isfinite(dens)) {
                const double step = side == 1 ? -f / dens : f / dens;
                const double cand = s + step;
                if (cand > lo && cand < hi) next = cand;
            }
        }
        s = next;
    }
    throw ConvergenceError("GalDistribution::quantile: inversion did not converge");
}

std::vector<QqPoint> qq_data(std::span<const double> values, QqLaw law, const BgglParams& theta) {
    if (values.size() < 2) throw DomainError("qq_data: need at least two values");
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    std::vector<QqPoint> out(n);
    auto position = [n](std::size_t i) { return (static_cast<double>(i) + 0.5) / static_cast<double>(n); };
    switch (law) {
        case QqLaw::normal: {
            const boost::math::normal_distribution<double> nd(0.0, 1.0);
            for (std::size_t i = 0; i < n; ++i) out[i] = {boost::math::quantile(nd, position(i)), sorted[i]};
            break;
        }
        case QqLaw::gamma: {
            if (!(theta.alpha > 0.0) || !(theta.beta > 0.0)) throw DomainError("qq_data: invalid gamma law");
            const boost::math::gamma_distribution<double> gd(theta.alpha, 1.0 / theta.beta);
            for (std::size_t i = 0; i < n; ++i) out[i] = {boost::math::quantile(gd, position(i)), sorted[i]};
            break;
        }
        case QqLaw::gal: {
            const GalDistribution gal(theta);
            for (std::size_t i = 0; i < n; ++i) out[i] = {gal.quantile(position(i)), sorted[i]};
            break;
        }
    }
    return out;
}

PipelineResult run_pipeline(const VolSeries& series) {
    series.validate();
    if (series.size() < 10) throw DataError("run_pipeline: need at least 10 observations");
    PipelineResult r;
    r.ar1 = fit_ar1_log(series.vol);
    std::vector<double> x = compute_surprise_vol(series, r.ar1.a, r.ar1.b);
    std::vector<double> y = compute_returns(series);
    r.sample = PairedSample(std::move(x), std::move(y));
    r.fit = fit_bggl(r.sample);
    const BgglParams& th = r.fit.theta_hat;
    r.upsilon_zero = !(r.fit.upsilon_hat > 0.0);
    r.qq_x = qq_data(r.sample.x(), QqLaw::gamma, th);
    if (!r.upsilon_zero) {
        r.z.resize(r.sample.size());
        for (std::size_t i = 0; i < r.sample.size(); ++i) {
            const double xi = r.sample.x()[i];
            r.z[i] = (r.sample.y()[i] - th.delta - th.mu * xi) / (th.sigma * std::sqrt(xi));
        }
        r.qq_y = qq_data(r.sample.y(), QqLaw::gal, th);
        r.qq_z = qq_data(r.z, QqLaw::normal);
    }
    return r;
}

namespace {

detail::ojson qq_json(const std::vector<QqPoint>& pts) {
    auto arr = detail::ojson::array();
    for (const auto& p : pts) arr.push_back(detail::ojson::array({p.theoretical, p.empirical}));
    return arr;
}

}  // namespace

std::string to_json(const PipelineResult& r) {
    detail::ojson j;
    j["ar1"] = {{"a", r.ar1.a}, {"b", r.ar1.b}};
    j["n"] = r.sample.size();
    j["fit"] = detail::fit_json(r.fit);
    j["upsilon_zero"] = r.upsilon_zero;
    j["x"] = std::vector<double>(r.sample.x().begin(), r.sample.x().end());
    j["y"] = std::vector<double>(r.sample.y().begin(), r.sample.y().end());
    j["z"] = r.z;
    j["qq"] = {{"x_gamma", qq_json(r.qq_x)}, {"y_gal", qq_json(r.qq_y)}, {"z_normal", qq_json(r.qq_z)}};
    return j.dump(2) + "\n";
}

std::string qq_to_csv(std::span<const QqPoint> points) {
    std::string out = "theoretical,empirical\n";
    char buf[64];
    for (const auto& p : points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.theoretical, p.empirical);
        out += buf;
    }
    return out;
}

}  // namespace bggl
