#pragma once

// Small dense LP used by the semi-infinite exchange loop:
//
//     maximize  c . b   over b in R^K
//     subject   sum_n b_n * col_j[n]  <=  rhs_j,   j = 0..M-1
//
// Solved as its dual  min rhs.y, A y = c, y >= 0  by a two-phase revised
// simplex with Bland's rule (lowest eligible index), so reruns over the
// same data pivot identically.

#include <vector>

namespace satotate {

struct LpResult {
    enum class Status { Optimal, Unbounded, Stalled };
    Status status = Status::Stalled;
    double value = 0.0;            // optimal c.b
    std::vector<double> b;         // optimizer (size K)
};

class NodeLp {
public:
    explicit NodeLp(int K) : K_(K) {}

    // adds one constraint column (U_n values at a node) with its bound
    void add_column(const std::vector<double>& col, double rhs);
    int num_columns() const { return static_cast<int>(rhs_.size()); }

    // objective c (size K); typically e_0
    LpResult solve(const std::vector<double>& c) const;

private:
    int K_;
    std::vector<double> cols_;  // column-major, K_ per column
    std::vector<double> rhs_;
};

}  // namespace satotate
