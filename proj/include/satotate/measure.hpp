#pragma once

// Sato-Tate measure of interval sets and empirical-distribution helpers.

#include <string>
#include <vector>

namespace satotate {

// Finite union of closed subintervals of [-1,1]. Normalization sorts the
// components and merges any that overlap or touch. Degenerate components
// [a,a] are kept (they matter for the indicator, not for the measure).
struct IntervalSet {
    struct Interval {
        double a = 0.0;
        double b = 0.0;
    };
    std::vector<Interval> parts;

    IntervalSet() = default;
    IntervalSet(double a, double b);                    // single interval
    explicit IntervalSet(std::vector<Interval> v);      // normalizes

    bool empty() const { return parts.empty(); }
    bool is_single() const { return parts.size() == 1; }

    // Text format: comma-separated `a:b` pairs, e.g. "-1:-0.61,0.61:1".
    // Rejects values outside [-1,1] and a > b (std::invalid_argument).
    static IntervalSet parse(const std::string& text);
    std::string format() const;
};

// mu_ST(I) by the closed antiderivative (1/pi)(t sqrt(1-t^2) + asin t).
double mu_st(const IntervalSet& I);

// 1 iff t lies in some closed component.
int indicator(const IntervalSet& I, double t);

// Closure of [-1,1] \ I; components may share endpoints with I.
IntervalSet complement_closure(const IntervalSet& I);

// Max over grid intervals [g_i, g_j] (uniform grid of `grid_size` cells)
// of |empirical fraction - mu_ST|. Empty samples signal invalid input.
double empirical_discrepancy(const std::vector<double>& samples, int grid_size);

}  // namespace satotate
