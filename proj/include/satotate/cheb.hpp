#pragma once

// Chebyshev-U (second kind) series algebra and Sato-Tate integrals.
//
// The U_n are orthonormal in L^2([-1,1], dmu_ST) with
// dmu_ST = (2/pi) sqrt(1-t^2) dt, so the mu_ST-integral of a series
// sum b_n U_n is just b_0.

#include <cstdint>
#include <functional>
#include <vector>

namespace satotate {

inline constexpr int kDegreeCap = 1024;

// Polynomial in the U-basis: p(t) = sum_{n=0}^{N} coeffs[n] * U_n(t).
struct ChebSeries {
    std::vector<double> coeffs;

    ChebSeries() = default;
    explicit ChebSeries(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool empty() const { return coeffs.empty(); }

    // Drops trailing coefficients below 1e-14 in magnitude.
    void normalize();
};

// Polynomial in the power basis: p(x) = sum coeffs[k] * x^k.
struct MonomialPoly {
    std::vector<double> coeffs;

    MonomialPoly() = default;
    explicit MonomialPoly(std::vector<double> c) : coeffs(std::move(c)) {}

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double eval(double x) const;      // Horner
    MonomialPoly derivative() const;
};

// Exact rational (for the even Sato-Tate moments, Catalan(m)/4^m).
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// U_n(t) by the three-term recurrence U_{k+1} = 2t U_k - U_{k-1}.
// t outside [-1,1] is permitted (polynomial extrapolation).
double eval_U(int n, double t);

// Clenshaw backward recurrence for sum b_n U_n(t).
double eval_series(const ChebSeries& s, double t);

// Linearization U_m U_n = sum_{k=0}^{min(m,n)} U_{m+n-2k}.
ChebSeries u_product(int m, int n);

// <U_m, U_n>_{mu_ST} = delta_{mn}, exact.
double st_inner(int m, int n);

// integral of the series against dmu_ST; equals b_0 by orthonormality.
double st_integral(const ChebSeries& s);

// integral x^{2m} dmu_ST = Catalan(m)/4^m, exact. m <= 30 (int64 range).
Rational st_moment(int m);
// Odd moments vanish by symmetry.
inline Rational st_moment_odd(int) { return Rational{0, 1}; }

// Basis changes by the recurrence, exact up to rounding. Degrees above
// kDegreeCap signal unsupported size (std::length_error).
MonomialPoly to_monomial(const ChebSeries& s);
ChebSeries from_monomial(const MonomialPoly& p);

// T_k expressed in the U-basis: T_0=U_0, T_1=U_1/2, T_k=(U_k-U_{k-2})/2.
ChebSeries t_to_u(int k);

// Derivative of a U-series, again in the U-basis.
// Uses U_n' = 2 * sum_{k<=n, k=n mod 2, k>=1} k U_{k-1}.
ChebSeries derivative_u(const ChebSeries& s);

// Gauss-Chebyshev (second kind) quadrature of f against dmu_ST.
// Starts at `nodes` points and doubles until two successive estimates
// differ by < 1e-12 (or the node budget 2^21 is hit).
double st_quadrature(const std::function<double(double)>& f, int nodes = 64);

}  // namespace satotate
