// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_PHOTON_STATISTICS_HPP
#define FMUX_PHOTON_STATISTICS_HPP

namespace fmux {

// Per-bin generative model, one clock cycle:
//   pairs n ~ (1 - lambda) lambda^n
//   threshold idler detector clicks with probability 1 - (1 - eta_i)^n
//   each signal photon reaches the output with probability eta_s
struct SourceParams
{
    double lambda = 0.031; // squeezing |xi|^2
    double eta_i = 0.3;    // idler-arm collection efficiency (incl. detector)
    double eta_s = 0.85;   // signal-arm transmission, conversion efficiency folded in
    long n_bins = 500;     // N

    // Throws RangeError naming the first violated field.
    void validate() const;
};

double pair_pmf(double lambda, long n);

// Probability that one bin heralds.
double p_click(double lambda, double eta_i);

// Probability that at least one of the N bins heralds.
double p_trig_mux(const SourceParams &p);

// 1 - exp(-N eta_i lambda); the large-N, small-eta_i form of p_trig_mux.
double p_trig_approx(const SourceParams &p);

// P(exactly one signal photon at the output | the bin heralded).
// Throws UndefinedError when p_click is zero.
double p_single(double lambda, double eta_i, double eta_s);

// Probability per cycle of delivering exactly one photon. Zero when no bin
// can ever herald (lambda = 0 or eta_i = 0).
double purity_p1(const SourceParams &p);

// Direct summation of the generative model, truncated once the pair
// distribution has accumulated mass 1 - 1e-12. Independent of the closed
// forms above; used to cross-check them.
namespace series {
double p_click(double lambda, double eta_i);
double p_single(double lambda, double eta_i, double eta_s);
} // namespace series

} // namespace fmux

#endif // FMUX_PHOTON_STATISTICS_HPP
