#pragma once

#include <functional>
#include <vector>

namespace wavefunc {

/// Evaluates the objective at x and fills grad (same length as x).
using Objective = std::function<double(const std::vector<double>&, std::vector<double>&)>;

struct MinimizeOptions {
    int max_iterations = 500;
    double gradient_tolerance = 1e-8;  // infinity norm of the gradient
    int history = 10;                  // L-BFGS correction pairs
};

struct MinimizeResult {
    std::vector<double> x;
    double value = 0.0;
    double gradient_inf_norm = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Limited-memory BFGS minimization with a strong-Wolfe line search
/// (sufficient decrease c1 = 1e-4, curvature c2 = 0.9).  Fully
/// deterministic.  Guarantees value <= objective(x0): every accepted step
/// satisfies the Armijo condition, and on line-search failure the last
/// accepted iterate is returned with converged = false.
MinimizeResult minimize_lbfgs(const Objective& objective, std::vector<double> x0,
                              const MinimizeOptions& options = {});

}  // namespace wavefunc
