#include "qaoa/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qaoa {

Schedule linear_schedule(const LinearParams& lp, int p) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    if (!std::isfinite(lp.gamma_slope) || !std::isfinite(lp.gamma_intcp) ||
        !std::isfinite(lp.beta_slope) || !std::isfinite(lp.beta_intcp))
        throw std::invalid_argument("linear parameters must be finite");
    Schedule schedule;
    schedule.gammas.resize(p);
    schedule.betas.resize(p);
    for (int l = 0; l < p; ++l) {
        const double x = static_cast<double>(l) / p;
        schedule.gammas[l] = lp.gamma_slope * x + lp.gamma_intcp;
        schedule.betas[l] = lp.beta_slope * x + lp.beta_intcp;
    }
    return schedule;
}

std::vector<double> interp_extend(const std::vector<double>& params) {
    if (params.empty()) throw std::invalid_argument("cannot extend an empty vector");
    const int p = static_cast<int>(params.size()) + 1;
    std::vector<double> tmp;
    tmp.reserve(params.size() + 2);
    tmp.push_back(0.0);
    tmp.insert(tmp.end(), params.begin(), params.end());
    tmp.push_back(0.0);

    std::vector<double> ret(p);
    for (int i = 1; i <= p; ++i) {
        const double r = static_cast<double>(i - 1) / p;
        ret[i - 1] = r * tmp[i - 1] + (1.0 - r) * tmp[i];
    }
    return ret;
}

Schedule fourier_to_schedule(const FourierCoeffs& fc, int p) {
    if (p < 1) throw std::invalid_argument("depth must be >= 1");
    if (fc.u.empty() || fc.u.size() != fc.v.size())
        throw std::invalid_argument("coefficient vectors must be non-empty and equal length");
    Schedule schedule;
    schedule.gammas.resize(p);
    schedule.betas.resize(p);
    const double pi_over_p = std::numbers::pi / p;
    for (int i = 1; i <= p; ++i) {
        double gamma = 0.0;
        double beta = 0.0;
        for (std::size_t j = 1; j <= fc.u.size(); ++j) {
            const double arg = (j - 0.5) * (i - 0.5) * pi_over_p;
            gamma += fc.u[j - 1] * std::sin(arg);
            beta += fc.v[j - 1] * std::cos(arg);
        }
        schedule.gammas[i - 1] = gamma;
        schedule.betas[i - 1] = beta;
    }
    return schedule;
}

LinearFit fit_linear(const std::vector<double>& values, int p) {
    if (p < 2 || static_cast<int>(values.size()) != p)
        throw std::invalid_argument("fit needs p >= 2 values");

    const bool constant =
        std::all_of(values.begin(), values.end(),
                    [&](double v) { return v == values.front(); });
    if (constant) return {0.0, values.front(), 1.0};

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (int l = 0; l < p; ++l) {
        const double x = static_cast<double>(l) / p;
        sx += x;
        sy += values[l];
        sxx += x * x;
        sxy += x * values[l];
    }
    const double n = static_cast<double>(p);
    const double denom = n * sxx - sx * sx;
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    double ss_res = 0.0, ss_tot = 0.0;
    const double mean = sy / n;
    for (int l = 0; l < p; ++l) {
        const double x = static_cast<double>(l) / p;
        const double r = values[l] - (fit.slope * x + fit.intercept);
        ss_res += r * r;
        ss_tot += (values[l] - mean) * (values[l] - mean);
    }
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    return fit;
}

}  // namespace qaoa
