#include "satotate/cheb.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace satotate {

namespace {

void check_degree(std::size_t n, const char* where) {
    if (n > static_cast<std::size_t>(kDegreeCap)) {
        throw std::length_error(std::string(where) + ": degree " + std::to_string(n) +
                                " exceeds cap " + std::to_string(kDegreeCap));
    }
}

}  // namespace

void ChebSeries::normalize() {
    while (coeffs.size() > 1 && std::abs(coeffs.back()) < 1e-14) coeffs.pop_back();
}

double MonomialPoly::eval(double x) const {
    double r = 0.0;
    for (std::size_t i = coeffs.size(); i-- > 0;) r = r * x + coeffs[i];
    return r;
}

MonomialPoly MonomialPoly::derivative() const {
    if (coeffs.size() <= 1) return MonomialPoly{{0.0}};
    std::vector<double> d(coeffs.size() - 1);
    for (std::size_t k = 1; k < coeffs.size(); ++k) d[k - 1] = static_cast<double>(k) * coeffs[k];
    return MonomialPoly{std::move(d)};
}

double eval_U(int n, double t) {
    if (n < 0) throw std::invalid_argument("eval_U: n < 0");
    double u0 = 1.0;
    if (n == 0) return u0;
    double u1 = 2.0 * t;
    for (int k = 1; k < n; ++k) {
        double u2 = 2.0 * t * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    return u1;
}

double eval_series(const ChebSeries& s, double t) {
    if (s.coeffs.empty()) return 0.0;
    // Clenshaw: y_k = b_k + 2t y_{k+1} - y_{k+2}; for the U-basis the
    // result is y_0 (phi_1 - 2t phi_0 = 0 kills the second term).
    double y1 = 0.0, y2 = 0.0;
    for (std::size_t k = s.coeffs.size(); k-- > 0;) {
        double y0 = s.coeffs[k] + 2.0 * t * y1 - y2;
        y2 = y1;
        y1 = y0;
    }
    return y1;
}

ChebSeries u_product(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("u_product: negative index");
    check_degree(static_cast<std::size_t>(m) + static_cast<std::size_t>(n), "u_product");
    std::vector<double> c(static_cast<std::size_t>(m + n) + 1, 0.0);
    for (int k = 0; k <= std::min(m, n); ++k) c[static_cast<std::size_t>(m + n - 2 * k)] = 1.0;
    return ChebSeries{std::move(c)};
}

double st_inner(int m, int n) { return m == n ? 1.0 : 0.0; }

double st_integral(const ChebSeries& s) { return s.coeffs.empty() ? 0.0 : s.coeffs[0]; }

Rational st_moment(int m) {
    if (m < 0) throw std::invalid_argument("st_moment: m < 0");
    if (m > 30) throw std::length_error("st_moment: m > 30 overflows int64");
    // Catalan(m) = binom(2m, m)/(m+1), built incrementally:
    // C_0 = 1, C_{k+1} = C_k * 2(2k+1)/(k+2).
    std::int64_t cat = 1;
    for (int k = 0; k < m; ++k) cat = cat * 2 * (2 * k + 1) / (k + 2);
    std::int64_t den = 1;
    for (int k = 0; k < m; ++k) den *= 4;
    return Rational{cat, den};
}

MonomialPoly to_monomial(const ChebSeries& s) {
    check_degree(s.coeffs.size() == 0 ? 0 : s.coeffs.size() - 1, "to_monomial");
    if (s.coeffs.empty()) return MonomialPoly{{0.0}};
    int n = s.degree();
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    // U_k in the power basis via the recurrence, rolling three rows.
    std::vector<double> um1{1.0};            // U_0
    std::vector<double> u{0.0, 2.0};         // U_1
    out[0] += s.coeffs[0] * um1[0];
    if (n >= 1)
        for (std::size_t i = 0; i < u.size(); ++i) out[i] += s.coeffs[1] * u[i];
    for (int k = 2; k <= n; ++k) {
        std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
        for (std::size_t i = 0; i < u.size(); ++i) next[i + 1] += 2.0 * u[i];
        for (std::size_t i = 0; i < um1.size(); ++i) next[i] -= um1[i];
        for (std::size_t i = 0; i < next.size(); ++i) out[i] += s.coeffs[static_cast<std::size_t>(k)] * next[i];
        um1 = std::move(u);
        u = std::move(next);
    }
    return MonomialPoly{std::move(out)};
}

ChebSeries from_monomial(const MonomialPoly& p) {
    check_degree(p.coeffs.size() == 0 ? 0 : p.coeffs.size() - 1, "from_monomial");
    if (p.coeffs.empty()) return ChebSeries{{0.0}};
    // x^k in the U-basis: x^k = sum_j c_{k,j} U_j with
    // x * U_j = (U_{j+1} + U_{j-1})/2 (and x*U_0 = U_1/2).
    int n = p.degree();
    std::vector<double> xk{1.0};  // x^0 = U_0
    std::vector<double> out(static_cast<std::size_t>(n) + 1, 0.0);
    out[0] += p.coeffs[0];
    for (int k = 1; k <= n; ++k) {
        std::vector<double> next(xk.size() + 1, 0.0);
        for (std::size_t j = 0; j < xk.size(); ++j) {
            next[j + 1] += 0.5 * xk[j];
            if (j >= 1) next[j - 1] += 0.5 * xk[j];
            // x*U_0 contributes only to U_1
        }
        xk = std::move(next);
        for (std::size_t j = 0; j < xk.size(); ++j) out[j] += p.coeffs[static_cast<std::size_t>(k)] * xk[j];
    }
    ChebSeries s{std::move(out)};
    s.normalize();
    return s;
}

ChebSeries t_to_u(int k) {
    if (k < 0) throw std::invalid_argument("t_to_u: k < 0");
    check_degree(static_cast<std::size_t>(k), "t_to_u");
    std::vector<double> c(static_cast<std::size_t>(k) + 1, 0.0);
    if (k == 0) {
        c[0] = 1.0;
    } else if (k == 1) {
        c[1] = 0.5;
    } else {
        c[static_cast<std::size_t>(k)] = 0.5;
        c[static_cast<std::size_t>(k - 2)] = -0.5;
    }
    return ChebSeries{std::move(c)};
}

ChebSeries derivative_u(const ChebSeries& s) {
    if (s.coeffs.size() <= 1) return ChebSeries{{0.0}};
    int n = s.degree();
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    for (int j = 1; j <= n; ++j) {
        double bj = s.coeffs[static_cast<std::size_t>(j)];
        if (bj == 0.0) continue;
        for (int k = j; k >= 1; k -= 2) d[static_cast<std::size_t>(k - 1)] += 2.0 * k * bj;
    }
    return ChebSeries{std::move(d)};
}

double st_quadrature(const std::function<double(double)>& f, int nodes) {
    constexpr double kPi = 3.14159265358979323846264338327950288;
    if (nodes < 4) nodes = 4;
    double prev = 0.0;
    bool have_prev = false;
    for (int m = nodes; m <= (1 << 21); m *= 2) {
        // sum over zeros of U_m: x_i = cos(i pi/(m+1)), weight (pi/(m+1)) sin^2.
        double acc = 0.0;
        for (int i = 1; i <= m; ++i) {
            double th = kPi * i / (m + 1);
            double snt = std::sin(th);
            acc += snt * snt * f(std::cos(th));
        }
        double est = 2.0 / (m + 1) * acc;
        if (have_prev && std::abs(est - prev) < 1e-12) return est;
        prev = est;
        have_prev = true;
    }
    return prev;
}

}  // namespace satotate
