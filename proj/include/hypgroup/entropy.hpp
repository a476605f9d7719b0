#pragma once

#include <string>
#include <vector>

#include "hypgroup/ball.hpp"

namespace hypgroup {

struct EntropyEstimate {
    std::vector<double> cumulative;  // ln(counts[R])/R; entry 0 is 0
    std::vector<double> diff;        // ln of consecutive sphere-size ratios; entry 0 is 0
    double slope = 0;                // mean of diff over the trailing window
    double tail_min_cumulative = 0;  // min of cumulative over the trailing window
    int window = 0;
    std::string method = "sphere-log-ratio";
};

// diff is the primary estimator; empty spheres contribute 0 by convention
// (bounded groups have entropy 0). InsufficientData unless
// counts.size() >= window + 1 >= 2.
EntropyEstimate entropy_estimate(const GrowthSequence& growth, int window);

// ln(2k-1) for free(k); 0 for abelian and finite models; for a direct
// product with a finite factor, the other factor's value. Unsupported
// otherwise (free products go through fprod_entropy).
double exact_entropy(const MarkedGroup& g);

struct EntropyBracket {
    double lower = 0;
    double upper = 0;
    double root = 0;  // singularity of the truncated growth series
    int series_radius = 0;
    double tol = 0;
};

// Entropy bracket for a free product: the truncated-series singularity gives
// the lower end (truncation can only enlarge the root), the best ln|B(R)|/R
// gives the upper end (subadditivity makes the limit an infimum).
EntropyBracket fprod_entropy(const MarkedGroup& g, int R_series = 30, double tol = 1e-9);

double scaled_entropy(double value, double scale);

// Exact sphere sizes of a free product from its factors' growth via series
// inversion of 1/A + 1/B - 1; cross-checked against BFS in tests.
std::vector<BigInt> fprod_sphere_series(const MarkedGroup& g, int R);

} // namespace hypgroup
