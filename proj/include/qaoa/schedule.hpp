#pragma once

#include <vector>

namespace qaoa {

// The 4-dimensional reduced parameter point; angles in radians.
// gamma_l = gamma_slope * l/p + gamma_intcp, and likewise for beta.
struct LinearParams {
    double gamma_slope = 0.0;
    double gamma_intcp = 0.0;
    double beta_slope = 0.0;
    double beta_intcp = 0.0;
};

// Per-layer angle vectors, equal lengths p >= 1.
struct Schedule {
    std::vector<double> gammas;
    std::vector<double> betas;

    int depth() const { return static_cast<int>(gammas.size()); }
};

// k sine coefficients for gamma and k cosine coefficients for beta.
struct FourierCoeffs {
    std::vector<double> u;
    std::vector<double> v;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
};

// Evaluates the linear parameterization at layers l = 0..p-1 (abscissa l/p).
Schedule linear_schedule(const LinearParams& lp, int p);

// Extends a depth-(p-1) angle vector to depth p:
// with tmp = [0] + params + [0], output[i-1] = r*tmp[i-1] + (1-r)*tmp[i]
// for i = 1..p and r = (i-1)/p.
std::vector<double> interp_extend(const std::vector<double>& params);

// gamma_i = sum_j u_{j-1} sin((j-0.5)(i-0.5)pi/p),
// beta_i  = sum_j v_{j-1} cos((j-0.5)(i-0.5)pi/p), for i = 1..p.
Schedule fourier_to_schedule(const FourierCoeffs& fc, int p);

// Least-squares fit of values[l] against l/p. Zero-variance input returns
// slope 0 and R^2 = 1 (the residual is exactly zero).
LinearFit fit_linear(const std::vector<double>& values, int p);

namespace presets {

// Linear parameter set pre-trained on a 16-qubit, d=0.6 random Ising
// instance at p=8, stored in the source's R_ZZ/R_X gate-angle convention
// (gate = e^{-i(theta/2) Z.Z}): divide by two before feeding linear_schedule.
inline LinearParams pretrained_n16_d06_p8() {
    return {-0.376, -0.165, -0.881, 0.913};
}

// Gate angles -> evolution angles for the e^{-i gamma C} convention used by
// the simulator. Transferring the pre-trained vector without this conversion
// roughly halves the approximation ratio.
inline LinearParams gate_angles_to_evolution(const LinearParams& lp) {
    return {lp.gamma_slope / 2, lp.gamma_intcp / 2, lp.beta_slope / 2,
            lp.beta_intcp / 2};
}

// The default transfer source: the pre-trained vector expressed in evolution
// angles.
inline LinearParams pretrained_evolution_angles() {
    return gate_angles_to_evolution(pretrained_n16_d06_p8());
}

// Unit-magnitude rough guess: gamma_l = -l/p - 1, beta_l = -l/p + 1.
// Deliberately not tuned to any instance; used in normalization studies.
inline LinearParams rough_guess() { return {-1.0, -1.0, -1.0, 1.0}; }

}  // namespace presets

}  // namespace qaoa
