#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mind/rng.hpp"
#include "mind/tensor.hpp"

namespace mind {

enum class Parameterization { kEpsilon, kVelocity };

// Precomputed diffusion schedule. betas holds the defining per-step noise
// variances; alphas_bar is the operational signal table indexed 1..T with
// the alphas_bar[0] == 1 convention, rescaled when zero_snr is set. All
// sampling math reads alphas_bar only. Immutable once built.
struct Schedule {
    int64_t T = 0;
    std::vector<double> betas;       // betas[tau], tau in 1..T (betas[0] unused)
    std::vector<double> alphas_bar;  // alphas_bar[tau], tau in 0..T
    bool zero_snr = false;
    Parameterization parameterization = Parameterization::kEpsilon;
    uint32_t tag = 0;  // distinguishes processes so slow/fast timesteps cannot mix

    double alpha_bar(int64_t tau) const;
    double snr(int64_t tau) const;
};

// Process tags used across the project.
constexpr uint32_t kSlowProcessTag = 0x534c4f57;  // "SLOW"
constexpr uint32_t kFastProcessTag = 0x46415354;  // "FAST"

// Linear beta interpolation over T steps; zero_snr applies the linear
// sqrt-alpha-bar rescale (last point forced to 0, first preserved).
Schedule build_schedule(int64_t T, double beta_start, double beta_end, bool zero_snr,
                        Parameterization parameterization, uint32_t tag);

// x_tau = sqrt(abar) x0 + sqrt(1-abar) eps
Tensor add_noise(const Tensor& x0, const Tensor& eps, int64_t tau, const Schedule& s);

// v = sqrt(abar) eps - sqrt(1-abar) x0
Tensor velocity_target(const Tensor& x0, const Tensor& eps, int64_t tau, const Schedule& s);

// Exact inverses of the (x_tau, v) map.
Tensor x0_from_velocity(const Tensor& x_tau, const Tensor& v, int64_t tau, const Schedule& s);
Tensor eps_from_velocity(const Tensor& x_tau, const Tensor& v, int64_t tau, const Schedule& s);

// One DDIM update from tau to tau_next (< tau). The prediction is read per
// the schedule's parameterization, converted to (x0_hat, eps_hat) with
// x0_hat clamped to [-1, 1]. eta > 0 adds the DDIM stochastic term using
// `noise`; pass an empty tensor for eta == 0.
Tensor reverse_step(const Tensor& x_tau, const Tensor& prediction, int64_t tau, int64_t tau_next,
                    const Schedule& s, double eta, const Tensor& noise);

// Classifier-free guidance combiner: uncond + s * (cond - uncond).
Tensor cfg_combine(const Tensor& pred_uncond, const Tensor& pred_cond, double guidance);

// Evenly spaced sampling ladder T = tau_0 > tau_1 > ... > tau_n = 0.
std::vector<int64_t> ddim_taus(const Schedule& s, int64_t n_steps);

}  // namespace mind
