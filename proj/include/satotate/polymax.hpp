#pragma once

// Certified global maximization of a Chebyshev-U series over an interval.
//
// Root isolation of the derivative by recursive subdivision: on each cell
// the series is re-expanded in the local Chebyshev basis (interpolation at
// Chebyshev-Lobatto points is exact for a polynomial of matching degree),
// giving a rigorous range bound c_0 +/- sum|c_k| up to a rounding margin.
// Cells where the derivative bound excludes zero are monotone; cells with a
// certified single sign change are bisected to an isolated critical point;
// residual clusters are bounded directly by re-expansion of the series
// itself. The reported maximum is an upper bound within ~1e-12 of the
// attained value at `arg`.

#include "satotate/cheb.hpp"

namespace satotate {

struct MaxResult {
    double value = 0.0;   // certified upper bound for max p on [lo,hi]
    double arg = 0.0;     // point attaining max within certification slack
    bool certified = true;
};

// Global max of p over [lo, hi] (subset of [-1,1] in all uses here, but any
// finite interval works). cell_budget bounds the subdivision effort; on
// exhaustion the result is flagged uncertified and `value` falls back to a
// sampled lower bound inflated by a coefficient-sum Lipschitz bound.
MaxResult certified_max(const ChebSeries& p, double lo, double hi, long cell_budget = 200000);

inline MaxResult certified_min(const ChebSeries& p, double lo, double hi, long cell_budget = 200000) {
    ChebSeries neg = p;
    for (auto& c : neg.coeffs) c = -c;
    MaxResult r = certified_max(neg, lo, hi, cell_budget);
    r.value = -r.value;
    return r;
}

// Range bound of p on [l,h] by local Chebyshev re-expansion (exact
// interpolation plus rounding margin). Exposed for tests.
void cheb_range_bound(const ChebSeries& p, double l, double h, double& out_lo, double& out_hi);

}  // namespace satotate
