#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace bggl {

/// Parameter vector (alpha, beta, delta, mu, sigma) of the bivariate
/// gamma / generalized Laplace law: X ~ Gamma(alpha, rate beta),
/// Y = delta + mu X + sigma sqrt(X) Z.
struct BgglParams {
    double alpha = 1.0;  ///< gamma shape, > 0
    double beta = 1.0;   ///< gamma rate, > 0
    double delta = 0.0;  ///< location
    double mu = 0.0;     ///< drift / skewness
    double sigma = 1.0;  ///< scale, > 0

    /// upsilon = sigma^2.
    [[nodiscard]] double upsilon() const { return sigma * sigma; }

    /// Throws DomainError unless alpha, beta, sigma > 0 and all fields finite.
    void validate() const;

    bool operator==(const BgglParams&) const = default;
};

/// Aligned observations (x_i, y_i) with every x_i > 0.
class PairedSample {
public:
    PairedSample() = default;
    /// Throws DataError on unequal lengths or DomainError on a non-positive x.
    PairedSample(std::vector<double> x, std::vector<double> y);

    [[nodiscard]] std::size_t size() const { return x_.size(); }
    [[nodiscard]] bool empty() const { return x_.empty(); }
    [[nodiscard]] std::span<const double> x() const { return x_; }
    [[nodiscard]] std::span<const double> y() const { return y_; }

private:
    std::vector<double> x_;
    std::vector<double> y_;
};

}  // namespace bggl
