#include "bggl/params.hpp"

#include <cmath>
#include <string>

#include "bggl/error.hpp"

namespace bggl {

PairedSample::PairedSample(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
    if (x_.size() != y_.size()) {
        throw DataError("PairedSample: x and y lengths differ (" + std::to_string(x_.size()) +
                        " vs " + std::to_string(y_.size()) + ")");
    }
    for (std::size_t i = 0; i < x_.size(); ++i) {
        if (!(x_[i] > 0.0) || !std::isfinite(x_[i])) {
            throw DomainError("PairedSample: x[" + std::to_string(i) + "] must be finite and > 0");
        }
        if (!std::isfinite(y_[i])) {
            throw DomainError("PairedSample: y[" + std::to_string(i) + "] must be finite");
        }
    }
}

}  // namespace bggl
