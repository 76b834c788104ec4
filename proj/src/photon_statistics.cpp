// SPDX-License-Identifier: Apache-2.0

#include "fmux/photon_statistics.hpp"

#include "fmux/error.hpp"

#include <cmath>
#include <string>

namespace fmux {
namespace {

void check_lambda(double lambda)
{
    if (!(lambda >= 0.0 && lambda < 1.0))
        throw RangeError("lambda must lie in [0, 1), got " + std::to_string(lambda));
}

void check_efficiency(const char *name, double eta)
{
    if (!(eta >= 0.0 && eta <= 1.0))
        throw RangeError(std::string(name) + " must lie in [0, 1], got " + std::to_string(eta));
}

// (1 - lambda) / (1 - (1 - eta_i) lambda): probability that a bin does not herald.
double no_click(double lambda, double eta_i)
{
    return (1.0 - lambda) / (1.0 - (1.0 - eta_i) * lambda);
}

// Truncate once the remaining pair mass is this small relative to the heralding
// probability accumulated so far (which is the divisor of p_single).
constexpr double series_rel_tail = 1e-16;
constexpr long series_max_terms = 1'000'000;

} // namespace

void SourceParams::validate() const
{
    check_lambda(lambda);
    check_efficiency("eta_i", eta_i);
    check_efficiency("eta_s", eta_s);
    if (n_bins < 1)
        throw RangeError("n_bins must be >= 1, got " + std::to_string(n_bins));
}

double pair_pmf(double lambda, long n)
{
    check_lambda(lambda);
    if (n < 0)
        throw RangeError("pair number must be non-negative");
    if (n == 0)
        return 1.0 - lambda;
    return (1.0 - lambda) * std::pow(lambda, static_cast<double>(n));
}

double p_click(double lambda, double eta_i)
{
    check_lambda(lambda);
    check_efficiency("eta_i", eta_i);
    // 1 - (1-l)/(1-(1-e)l) = e l / (1 - (1-e) l), cancellation-free.
    return eta_i * lambda / (1.0 - (1.0 - eta_i) * lambda);
}

double p_trig_mux(const SourceParams &p)
{
    p.validate();
    const double q = no_click(p.lambda, p.eta_i);
    return -std::expm1(static_cast<double>(p.n_bins) * std::log(q));
}

double p_trig_approx(const SourceParams &p)
{
    p.validate();
    return -std::expm1(-static_cast<double>(p.n_bins) * p.eta_i * p.lambda);
}

double p_single(double lambda, double eta_i, double eta_s)
{
    check_efficiency("eta_s", eta_s);
    const double click = p_click(lambda, eta_i);
    if (click <= 0.0)
        throw UndefinedError("p_single is undefined: the heralding probability is zero");

    // sum_n n x^(n-1) = (1-x)^-2 applied to both terms of the click indicator.
    const double all = 1.0 / std::pow(1.0 - lambda * (1.0 - eta_s), 2);
    const double missed = (1.0 - eta_i) / std::pow(1.0 - lambda * (1.0 - eta_i) * (1.0 - eta_s), 2);
    const double joint = (1.0 - lambda) * eta_s * lambda * (all - missed);
    return joint / click;
}

double purity_p1(const SourceParams &p)
{
    p.validate();
    if (p_click(p.lambda, p.eta_i) <= 0.0)
        return 0.0;
    return p_single(p.lambda, p.eta_i, p.eta_s) * p_trig_mux(p);
}

namespace series {

double p_click(double lambda, double eta_i)
{
    check_lambda(lambda);
    check_efficiency("eta_i", eta_i);
    double sum = 0.0;
    // Remaining mass after term n is lambda^(n+1).
    double tail = 1.0;
    for (long n = 0; n < series_max_terms && (n < 2 || tail >= series_rel_tail * sum); ++n) {
        const double w = pair_pmf(lambda, n);
        tail *= lambda;
        sum += w * (1.0 - std::pow(1.0 - eta_i, static_cast<double>(n)));
    }
    return sum;
}

double p_single(double lambda, double eta_i, double eta_s)
{
    check_efficiency("eta_s", eta_s);
    check_lambda(lambda);
    check_efficiency("eta_i", eta_i);
    double joint = 0.0;
    double click = 0.0;
    double tail = 1.0;
    for (long n = 0; n < series_max_terms && (n < 2 || tail >= series_rel_tail * click); ++n) {
        const double w = pair_pmf(lambda, n);
        tail *= lambda;
        const double heralds = 1.0 - std::pow(1.0 - eta_i, static_cast<double>(n));
        click += w * heralds;
        if (n >= 1)
            joint += w * heralds * static_cast<double>(n) * eta_s * std::pow(1.0 - eta_s, static_cast<double>(n - 1));
    }
    if (click <= 0.0)
        throw UndefinedError("p_single is undefined: the heralding probability is zero");
    return joint / click;
}

} // namespace series

} // namespace fmux
