#pragma once

// Independent numerical oracles used to cross-check closed forms:
// quadrature, brute-force search, bisection, and distribution-fit
// statistics.  Deliberately simple and slow.

#include <functional>
#include <vector>

namespace oracles {

// Composite Simpson rule with `panels` panels (made even internally).
double simpson(const std::function<double(double)>& f, double a, double b,
               int panels);

// Argument of the maximum of f over [lo, hi], scanned at a fixed step.
double grid_argmax(const std::function<double(double)>& f, double lo, double hi,
                   double step);

// Root of a strictly increasing function by bisection; requires a
// sign change over [lo, hi].
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol);

// Two-sided Kolmogorov-Smirnov distance between a sample and a CDF.
double ks_distance(std::vector<double> samples,
                   const std::function<double(double)>& cdf);

}  // namespace oracles
