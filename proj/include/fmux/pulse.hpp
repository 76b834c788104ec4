// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_PULSE_HPP
#define FMUX_PULSE_HPP

#include <complex>
#include <iosfwd>

namespace fmux {

// Analytic chirped Gaussian wavepacket
//
//   psi(t) = exp(-a t^2 + b t) * exp(-i w0 t) * exp(i phi)
//
// with Re(a) > 0. Times in ps, angular frequencies in rad/ps, dispersion in
// ps^2. Normalisation is not tracked; every observable below is
// scale-invariant.
//
// Width conventions:
//   amp_width      Dt with |psi| ~ exp(-t^2 / (2 Dt^2)), i.e. 1/sqrt(2 Re a)
//   intensity std  standard deviation of |psi|^2, amp_width / sqrt(2)
// The instantaneous frequency is w(t) = w0 - Im(b) + 2 Im(a) t, so the
// chirp dw/dt is 2 Im(a) and a pure chirp factor reads exp(-i C t^2 / 2).
class GaussianEnvelope
{
public:
    using complex = std::complex<double>;

    // Throws RangeError unless Re(curvature) > 0 and all parts are finite.
    GaussianEnvelope(complex curvature, complex linear, double carrier, double global_phase = 0.0);

    complex curvature() const { return a_; }
    complex linear() const { return b_; }
    double carrier() const { return carrier_; }
    double global_phase() const { return phase_; }

    double amp_width() const;
    double chirp() const { return 2.0 * a_.imag(); }

    complex operator()(double t) const;

    GaussianEnvelope with_carrier_shift(double delta_omega) const;

private:
    complex a_;
    complex b_;
    double carrier_;
    double phase_;
};

struct Moments
{
    double center_time;        // ps
    double intensity_std_time; // ps
    double center_freq;        // rad/ps
    double intensity_std_freq; // rad/ps
    double chirp;              // rad/ps^2

    double time_bandwidth() const { return intensity_std_time * intensity_std_freq; }
};

// exp(-(t-t0)^2/(2 w^2)) exp(-i chirp (t-t0)^2/2) exp(-i carrier t).
GaussianEnvelope make_gaussian(double amp_width, double center_time, double chirp, double carrier);

// Quadratic spectral phase exp(i G (w - w0)^2 / 2): a -> a/(1 - 2iGa), b -> b/(1 - 2iGa).
GaussianEnvelope apply_gvd(const GaussianEnvelope &env, double dispersion);

// Multiplies by the real window exp(-(t - t1)^2 / (2 tau^2)). tau may be +inf.
GaussianEnvelope gate(const GaussianEnvelope &env, double t1, double tau);

// Pointwise product: exponents, carriers and phases add.
GaussianEnvelope multiply(const GaussianEnvelope &lhs, const GaussianEnvelope &rhs);

// Signal photon once the idler has been detected at t1 behind dispersion G:
//   exp(-t^2/(2 dt_e^2)) exp(-i (t - t1)^2/(2G)) exp(-i omega_e (t + t1)/2)
GaussianEnvelope signal_after_herald(double t1, double dt_e, double dispersion, double omega_e);

// Pump carved at t1 with a window of duration tau from a pulse chirped by G,
// then recompressed by -G:
//   exp(-i (omega_p + t1/G) t) exp(-t^2 tau^2/(2G^2)) exp(i t^2/(2G))
GaussianEnvelope pump_after_carve(double t1, double tau, double dispersion, double omega_p);

// Pulse parameters that fix the converted photon.
struct PulseParams
{
    double dt_e = 80.0;       // excitation parameter, ps
    double tau = 10.0;        // carving window, ps
    double dispersion = 8000.0; // G, ps^2
    double omega_e = 0.0;     // excitation carrier, rad/ps
    double omega_p = 0.0;     // pump carrier, rad/ps

    void validate() const;
};

// Sum-frequency product of the heralded signal and the recompressed pump.
GaussianEnvelope heralded_photon(double t1, const PulseParams &p);

// Curvature 1/dt_e^2 + tau^2/G^2 of the converted photon, so that its
// amplitude reads exp(-kappa t^2 / 2).
double heralded_kappa(const PulseParams &p);

// Amplitude width 1/sqrt(kappa).
double heralded_amp_width(const PulseParams &p);

// Fourier-limited spectral width 1/(2 dt_h) = sqrt(kappa)/2.
double heralded_spectral_width(const PulseParams &p);

// Intensity std of the recompressed pump, G/(sqrt(2) tau).
double pump_duration(double tau, double dispersion);

Moments moments(const GaussianEnvelope &env);

// <psi1|psi2> / sqrt(<psi1|psi1><psi2|psi2>).
std::complex<double> overlap(const GaussianEnvelope &lhs, const GaussianEnvelope &rhs);

// CSV dump with header "t_ps,intensity,phase_rad". Phase is taken relative
// to the carrier so that slow envelope structure is visible.
void write_envelope_csv(std::ostream &os, const GaussianEnvelope &env, double t_min, double t_max, int n_points);

} // namespace fmux

#endif // FMUX_PULSE_HPP
