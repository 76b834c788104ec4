// SPDX-License-Identifier: Apache-2.0

#include "fmux/pulse.hpp"

#include "fmux/error.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

namespace fmux {
namespace {

using complex = std::complex<double>;
constexpr complex I{0.0, 1.0};

bool finite(complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_positive(const char *name, double v)
{
    if (!(v > 0.0))
        throw RangeError(std::string(name) + " must be positive, got " + std::to_string(v));
}

void require_nonzero(const char *name, double v)
{
    if (v == 0.0 || !std::isfinite(v))
        throw RangeError(std::string(name) + " must be finite and non-zero, got " + std::to_string(v));
}

// log of the integral of exp(-A t^2 + B t) over the real line.
complex log_gaussian_integral(complex A, complex B)
{
    return 0.5 * std::log(std::numbers::pi / A) + B * B / (4.0 * A);
}

} // namespace

GaussianEnvelope::GaussianEnvelope(complex curvature, complex linear, double carrier, double global_phase)
    : a_(curvature)
    , b_(linear)
    , carrier_(carrier)
    , phase_(global_phase)
{
    if (!finite(a_) || !finite(b_) || !std::isfinite(carrier_) || !std::isfinite(phase_))
        throw RangeError("envelope parameters must be finite");
    if (!(a_.real() > 0.0))
        throw RangeError("envelope curvature must have a positive real part");
}

double GaussianEnvelope::amp_width() const { return 1.0 / std::sqrt(2.0 * a_.real()); }

complex GaussianEnvelope::operator()(double t) const
{
    return std::exp(-a_ * t * t + b_ * t - I * (carrier_ * t) + I * phase_);
}

GaussianEnvelope GaussianEnvelope::with_carrier_shift(double delta_omega) const
{
    return {a_, b_, carrier_ + delta_omega, phase_};
}

GaussianEnvelope make_gaussian(double amp_width, double center_time, double chirp, double carrier)
{
    require_positive("amp_width", amp_width);
    const complex a{1.0 / (2.0 * amp_width * amp_width), chirp / 2.0};
    // -a (t - t0)^2 = -a t^2 + 2 a t0 t - a t0^2; keep the phase of the constant.
    const complex b = 2.0 * a * center_time;
    const double phase = -a.imag() * center_time * center_time;
    return {a, b, carrier, phase};
}

GaussianEnvelope apply_gvd(const GaussianEnvelope &env, double dispersion)
{
    if (dispersion == 0.0)
        return env;
    const complex a = env.curvature();
    const complex b = env.linear();
    const complex denom = 1.0 - 2.0 * I * dispersion * a;
    const complex a2 = a / denom;
    const complex b2 = b / denom;
    // Constant left over from completing the square, plus the phase of the
    // sqrt(a2/a) prefactor.
    const complex c = b * b / (4.0 * a) - a2 * b * b / (4.0 * a * a);
    const double phase = env.global_phase() + c.imag() - 0.5 * std::arg(denom);
    return {a2, b2, env.carrier(), phase};
}

GaussianEnvelope gate(const GaussianEnvelope &env, double t1, double tau)
{
    require_positive("tau", tau);
    if (std::isinf(tau))
        return env;
    const double w = 1.0 / (tau * tau);
    return {env.curvature() + 0.5 * w, env.linear() + t1 * w, env.carrier(), env.global_phase()};
}

GaussianEnvelope multiply(const GaussianEnvelope &lhs, const GaussianEnvelope &rhs)
{
    return {lhs.curvature() + rhs.curvature(), lhs.linear() + rhs.linear(), lhs.carrier() + rhs.carrier(),
            lhs.global_phase() + rhs.global_phase()};
}

GaussianEnvelope signal_after_herald(double t1, double dt_e, double dispersion, double omega_e)
{
    require_positive("dt_e", dt_e);
    require_nonzero("G", dispersion);
    const complex a{1.0 / (2.0 * dt_e * dt_e), 1.0 / (2.0 * dispersion)};
    const complex b{0.0, t1 / dispersion};
    const double phase = -t1 * t1 / (2.0 * dispersion) - omega_e * t1 / 2.0;
    return {a, b, omega_e / 2.0, phase};
}

GaussianEnvelope pump_after_carve(double t1, double tau, double dispersion, double omega_p)
{
    require_positive("tau", tau);
    require_nonzero("G", dispersion);
    const complex a{tau * tau / (2.0 * dispersion * dispersion), -1.0 / (2.0 * dispersion)};
    const complex b{0.0, -t1 / dispersion};
    return {a, b, omega_p, 0.0};
}

void PulseParams::validate() const
{
    require_positive("dt_e", dt_e);
    require_positive("tau", tau);
    require_nonzero("G", dispersion);
    if (!std::isfinite(omega_e) || !std::isfinite(omega_p))
        throw RangeError("carrier frequencies must be finite");
}

GaussianEnvelope heralded_photon(double t1, const PulseParams &p)
{
    p.validate();
    return multiply(signal_after_herald(t1, p.dt_e, p.dispersion, p.omega_e),
                    pump_after_carve(t1, p.tau, p.dispersion, p.omega_p));
}

double heralded_kappa(const PulseParams &p)
{
    p.validate();
    return 1.0 / (p.dt_e * p.dt_e) + (p.tau * p.tau) / (p.dispersion * p.dispersion);
}

double heralded_amp_width(const PulseParams &p) { return 1.0 / std::sqrt(heralded_kappa(p)); }

double heralded_spectral_width(const PulseParams &p) { return 0.5 * std::sqrt(heralded_kappa(p)); }

double pump_duration(double tau, double dispersion)
{
    require_positive("tau", tau);
    require_nonzero("G", dispersion);
    return std::abs(dispersion) / (std::numbers::sqrt2 * tau);
}

Moments moments(const GaussianEnvelope &env)
{
    const complex a = env.curvature();
    const complex b = env.linear();
    const double center_time = b.real() / (2.0 * a.real());
    return {
        .center_time = center_time,
        .intensity_std_time = 0.5 / std::sqrt(a.real()),
        .center_freq = env.carrier() - b.imag() + 2.0 * a.imag() * center_time,
        .intensity_std_freq = std::abs(a) / std::sqrt(a.real()),
        .chirp = env.chirp(),
    };
}

complex overlap(const GaussianEnvelope &lhs, const GaussianEnvelope &rhs)
{
    const complex cross = log_gaussian_integral(std::conj(lhs.curvature()) + rhs.curvature(),
                                                std::conj(lhs.linear()) + rhs.linear() +
                                                    I * (lhs.carrier() - rhs.carrier())) +
                          I * (rhs.global_phase() - lhs.global_phase());
    const auto log_norm = [](const GaussianEnvelope &e) {
        const double ar = e.curvature().real();
        const double br = e.linear().real();
        return 0.5 * std::log(std::numbers::pi / (2.0 * ar)) + br * br / (2.0 * ar);
    };
    return std::exp(cross - 0.5 * (log_norm(lhs) + log_norm(rhs)));
}

void write_envelope_csv(std::ostream &os, const GaussianEnvelope &env, double t_min, double t_max, int n_points)
{
    if (n_points < 2)
        throw RangeError("envelope dump needs at least two points");
    const auto m = moments(env);
    const double peak = std::exp(2.0 * env.curvature().real() * m.center_time * m.center_time);
    const auto old_precision = os.precision(12);
    os << "t_ps,intensity,phase_rad\n";
    for (int i = 0; i < n_points; ++i) {
        const double t = t_min + (t_max - t_min) * i / (n_points - 1);
        const complex slow = env(t) * std::exp(I * (env.carrier() * t));
        os << t << ',' << std::norm(slow) / peak << ',' << std::arg(slow) << '\n';
    }
    os.precision(old_precision);
}

} // namespace fmux
