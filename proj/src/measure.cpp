#include "satotate/measure.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace satotate {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void validate_pair(double a, double b) {
    if (!(a >= -1.0 && b <= 1.0 && a <= b)) {
        throw std::invalid_argument("IntervalSet: need -1 <= a <= b <= 1, got [" +
                                    std::to_string(a) + "," + std::to_string(b) + "]");
    }
}

std::vector<IntervalSet::Interval> normalized(std::vector<IntervalSet::Interval> v) {
    for (const auto& iv : v) validate_pair(iv.a, iv.b);
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
        return x.a < y.a || (x.a == y.a && x.b < y.b);
    });
    std::vector<IntervalSet::Interval> out;
    for (const auto& iv : v) {
        if (!out.empty() && iv.a <= out.back().b) {
            out.back().b = std::max(out.back().b, iv.b);
        } else {
            out.push_back(iv);
        }
    }
    return out;
}

// (1/pi) (t sqrt(1-t^2) + asin t), antiderivative of the ST density.
double st_cdf_part(double t) {
    double u = std::max(0.0, 1.0 - t * t);
    return (t * std::sqrt(u) + std::asin(std::clamp(t, -1.0, 1.0))) / kPi;
}

}  // namespace

IntervalSet::IntervalSet(double a, double b) {
    validate_pair(a, b);
    parts.push_back({a, b});
}

IntervalSet::IntervalSet(std::vector<Interval> v) : parts(normalized(std::move(v))) {}

IntervalSet IntervalSet::parse(const std::string& text) {
    std::vector<Interval> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto pos = item.find(':');
        if (pos == std::string::npos)
            throw std::invalid_argument("IntervalSet::parse: expected a:b, got '" + item + "'");
        std::size_t ea = 0, eb = 0;
        double a = std::stod(item.substr(0, pos), &ea);
        double b = std::stod(item.substr(pos + 1), &eb);
        if (ea != pos || eb != item.size() - pos - 1)
            throw std::invalid_argument("IntervalSet::parse: trailing characters in '" + item + "'");
        validate_pair(a, b);
        v.push_back({a, b});
    }
    return IntervalSet{std::move(v)};
}

std::string IntervalSet::format() const {
    std::string out;
    char buf[64];
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g:%.17g", parts[i].a, parts[i].b);
        if (i) out += ',';
        out += buf;
    }
    return out;
}

double mu_st(const IntervalSet& I) {
    double s = 0.0;
    for (const auto& iv : I.parts) s += st_cdf_part(iv.b) - st_cdf_part(iv.a);
    return s;
}

int indicator(const IntervalSet& I, double t) {
    for (const auto& iv : I.parts) {
        if (t < iv.a) break;
        if (t <= iv.b) return 1;
    }
    return 0;
}

IntervalSet complement_closure(const IntervalSet& I) {
    std::vector<IntervalSet::Interval> out;
    double cursor = -1.0;
    for (const auto& iv : I.parts) {
        if (iv.a > cursor) out.push_back({cursor, iv.a});
        cursor = std::max(cursor, iv.b);
    }
    if (cursor < 1.0) out.push_back({cursor, 1.0});
    return IntervalSet{std::move(out)};
}

double empirical_discrepancy(const std::vector<double>& samples, int grid_size) {
    if (samples.empty()) throw std::invalid_argument("empirical_discrepancy: empty sample list");
    if (grid_size < 1) throw std::invalid_argument("empirical_discrepancy: grid_size < 1");
    std::vector<double> sorted = samples;
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());

    // Prefix data at grid points g_i = -1 + 2i/G: counts strictly below g_i
    // and counts <= g_i (closed intervals include both endpoints).
    std::vector<double> grid(static_cast<std::size_t>(grid_size) + 1);
    std::vector<std::size_t> below(grid.size()), at_or_below(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        grid[i] = -1.0 + 2.0 * static_cast<double>(i) / grid_size;
        below[i] = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), grid[i]) - sorted.begin());
        at_or_below[i] = static_cast<std::size_t>(
            std::upper_bound(sorted.begin(), sorted.end(), grid[i]) - sorted.begin());
    }
    std::vector<double> cdf(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) cdf[i] = st_cdf_part(grid[i]);

    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i; j < grid.size(); ++j) {
            double frac = static_cast<double>(at_or_below[j] - std::min(below[i], at_or_below[j])) / n;
            double mu = cdf[j] - cdf[i];
            worst = std::max(worst, std::abs(frac - mu));
        }
    }
    return worst;
}

}  // namespace satotate
