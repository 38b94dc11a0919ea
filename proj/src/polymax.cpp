#include "satotate/polymax.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace satotate {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

// Interpolation coefficients of p on [l,h] in the local T_k basis.
// Exact for deg(p) <= D in exact arithmetic; rounding handled by caller.
std::vector<double> local_cheb_coeffs(const ChebSeries& p, double l, double h) {
    int D = std::max(p.degree(), 0);
    double m = 0.5 * (l + h), r = 0.5 * (h - l);
    std::vector<double> v(static_cast<std::size_t>(D) + 1);
    for (int j = 0; j <= D; ++j)
        v[static_cast<std::size_t>(j)] = eval_series(p, m + r * std::cos(kPi * j / std::max(D, 1)));
    if (D == 0) return {v[0]};
    std::vector<double> c(static_cast<std::size_t>(D) + 1, 0.0);
    for (int k = 0; k <= D; ++k) {
        double acc = 0.5 * (v[0] + (k % 2 ? -1.0 : 1.0) * v[static_cast<std::size_t>(D)]);
        for (int j = 1; j < D; ++j) acc += v[static_cast<std::size_t>(j)] * std::cos(kPi * j * k / D);
        c[static_cast<std::size_t>(k)] = 2.0 * acc / D;
    }
    c[0] *= 0.5;
    c[static_cast<std::size_t>(D)] *= 0.5;
    return c;
}

double rounding_margin(const std::vector<double>& c) {
    double s = 1.0;
    for (double x : c) s += std::abs(x);
    return 1e-14 * s * static_cast<double>(c.size() + 1);
}

ChebSeries trimmed(const ChebSeries& p) {
    ChebSeries q = p;
    while (q.coeffs.size() > 1 && q.coeffs.back() == 0.0) q.coeffs.pop_back();
    return q;
}

}  // namespace

void cheb_range_bound(const ChebSeries& p, double l, double h, double& out_lo, double& out_hi) {
    auto c = local_cheb_coeffs(p, l, h);
    double tail = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k) tail += std::abs(c[k]);
    double eps = rounding_margin(c);
    out_lo = c[0] - tail - eps;
    out_hi = c[0] + tail + eps;
}

MaxResult certified_max(const ChebSeries& p_in, double lo, double hi, long cell_budget) {
    MaxResult best;
    ChebSeries p = trimmed(p_in);
    if (p.coeffs.empty()) return MaxResult{0.0, lo, true};
    if (hi < lo) std::swap(lo, hi);
    best.value = eval_series(p, lo);
    best.arg = lo;
    auto consider = [&](double t) {
        double v = eval_series(p, t);
        if (v > best.value) {
            best.value = v;
            best.arg = t;
        }
    };
    consider(hi);
    if (hi - lo < 1e-15 || p.degree() == 0) return best;

    // seed the attained lower bound with a Chebyshev-spaced sweep
    int K = 8 * p.degree() + 8;
    for (int j = 1; j < K; ++j)
        consider(0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(kPi * j / K));

    ChebSeries d = trimmed(derivative_u(p));
    ChebSeries dd = trimmed(derivative_u(d));
    const double span = hi - lo;
    const double wmin = std::max(1e-13, 1e-12 * span);
    auto prune_eps = [&] { return 1e-12 * (1.0 + std::abs(best.value)); };
    double cluster_ub = -std::numeric_limits<double>::infinity();

    struct Cell {
        double l, h;
    };
    std::vector<Cell> stack{{lo, hi}};
    long cells = 0;
    bool certified = true;

    while (!stack.empty()) {
        Cell c = stack.back();
        stack.pop_back();
        if (++cells > cell_budget) {
            certified = false;
            break;
        }
        double m = 0.5 * (c.l + c.h);
        consider(m);

        double plo, phi;
        cheb_range_bound(p, c.l, c.h, plo, phi);
        if (phi <= best.value + prune_eps()) continue;  // cannot materially beat best

        double w = c.h - c.l;
        if (w < wmin) {
            cluster_ub = std::max(cluster_ub, phi);
            continue;
        }
        double dlo, dhi;
        cheb_range_bound(d, c.l, c.h, dlo, dhi);
        if (dlo > 0.0 || dhi < 0.0) {
            consider(c.l);
            consider(c.h);
            continue;
        }
        // single simple critical point: strict sign change of p' with p''
        // bounded away from zero on the cell -> bisect
        double vl = eval_series(d, c.l), vh = eval_series(d, c.h);
        if (vl * vh < 0.0) {
            double ddlo, ddhi;
            cheb_range_bound(dd, c.l, c.h, ddlo, ddhi);
            if (ddlo > 0.0 || ddhi < 0.0) {
                double a = c.l, b2 = c.h, fa = vl;
                for (int it = 0; it < 200 && b2 - a > 1e-15; ++it) {
                    double mid = 0.5 * (a + b2);
                    double fm = eval_series(d, mid);
                    if (fm == 0.0) {
                        a = b2 = mid;
                        break;
                    }
                    if ((fa < 0.0) == (fm < 0.0)) {
                        a = mid;
                        fa = fm;
                    } else {
                        b2 = mid;
                    }
                }
                consider(0.5 * (a + b2));
                consider(c.l);
                consider(c.h);
                continue;
            }
        }
        stack.push_back({c.l, m});
        stack.push_back({m, c.h});
    }

    if (!certified) {
        // coefficient-sum Lipschitz fallback, reported as uncertified
        double L = 0.0;
        for (int k = 0; k <= d.degree(); ++k)
            L += std::abs(d.coeffs[static_cast<std::size_t>(k)]) * (k + 1);
        best.value += L * (span / 2e6) + prune_eps();
        best.certified = false;
        return best;
    }
    double upper = best.value + prune_eps();
    if (cluster_ub > upper) upper = cluster_ub;
    best.value = upper;
    return best;
}

}  // namespace satotate
