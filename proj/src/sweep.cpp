// SPDX-License-Identifier: Apache-2.0

#include "fmux/config.hpp"
#include "fmux/error.hpp"

#include <ostream>

namespace fmux {

void write_sweep_csv(std::ostream &os, const RunConfig &cfg, std::string_view axis, const Quantity &from,
                     const Quantity &to, int steps)
{
    const Dimension dim = axis_dimension(axis);
    if (from.dimension() != dim || to.dimension() != dim) {
        throw ParseError("sweep range for '" + std::string(axis) + "' must be " + std::string(to_string(dim)));
    }
    if (steps < 2)
        throw ParseError("sweep needs at least 2 steps");

    const auto old_precision = os.precision(12);
    os << sweep_header << '\n';
    for (int i = 0; i < steps; ++i) {
        const double x = from.value() + (to.value() - from.value()) * i / (steps - 1);
        RunConfig point = cfg;
        set_axis(point, axis, x);
        const DesignReport r = design_report(point.source, point.hardware, point.design);
        const double axis_value = axis == "n_bins" ? static_cast<double>(point.source.n_bins) : x;
        os << axis_value << ',' << r.lambda << ',' << point.source.eta_i << ',' << r.eta_s_effective << ','
           << r.n_chosen << ',' << r.p_trig << ',' << r.p_trig_approx << ',';
        if (r.p_single)
            os << *r.p_single;
        os << ',' << r.p1 << ',' << r.lambda_star << ',' << r.p1_star << ',';
        if (r.n_max_dispersive)
            os << *r.n_max_dispersive;
        os << ',' << r.n_from_excitation << ',' << r.cw_ratio << ',' << r.dt_pump << ',' << r.dt_h << ','
           << r.visibility << '\n';
    }
    os.precision(old_precision);
}

} // namespace fmux
