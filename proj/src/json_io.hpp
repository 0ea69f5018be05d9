#pragma once

#include "json.hpp"

#include "bggl/estimate.hpp"

namespace bggl::detail {

using ojson = nlohmann::ordered_json;

inline ojson params_json(const BgglParams& t) {
    return {{"alpha", t.alpha}, {"beta", t.beta}, {"delta", t.delta}, {"mu", t.mu}, {"sigma", t.sigma}};
}

inline ojson matrix_json(const Eigen::Matrix2d& m) {
    return ojson::array({ojson::array({m(0, 0), m(0, 1)}), ojson::array({m(1, 0), m(1, 1)})});
}

inline ojson fit_json(const FitResult& f) {
    ojson j;
    j["theta_hat"] = params_json(f.theta_hat);
    j["upsilon_hat"] = f.upsilon_hat;
    j["s2"] = f.s2;
    j["n"] = f.n;
    j["regime"] = std::string(to_string(f.regime));
    j["d_n"] = f.d_n;
    ojson a;
    a["sigma_alpha_beta"] = matrix_json(f.asympt.sigma_alpha_beta);
    a["sigma_delta_mu"] = matrix_json(f.asympt.sigma_delta_mu);
    a["delta_law"] = f.asympt.delta_kind == DeltaLawKind::gaussian ? "gaussian" : "stable_mixture";
    if (f.asympt.delta_kind == DeltaLawKind::stable_mixture) a["delta_scale"] = f.asympt.delta_scale;
    a["mu_variance"] = f.asympt.mu_variance;
    a["upsilon_variance"] = f.asympt.upsilon_variance;
    j["asympt"] = a;
    j["flags"] = {{"all_x_equal", f.flags.all_x_equal},
                  {"small_n", f.flags.small_n},
                  {"collinear", f.flags.collinear}};
    return j;
}

}  // namespace bggl::detail
