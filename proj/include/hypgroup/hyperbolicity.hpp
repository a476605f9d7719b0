#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hypgroup/ball.hpp"

namespace hypgroup {

// Renders an exactly-held half-integer 2v/2 as "v" or "p/2".
std::string half_integer_string(std::int64_t twice);

// alpha = (d_xy + d_xz - d_yz)/2 for three pairwise distances.
double gromov_product(double d_xy, double d_xz, double d_yz);

struct DefectMode {
    bool exact = true;
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
};

struct DefectReport {
    std::int64_t defect2 = 0;  // doubled defect; graph distances keep it integral
    double defect() const { return static_cast<double>(defect2) / 2.0; }
    std::array<std::size_t, 4> witness_index{0, 0, 0, 0};
    std::array<std::string, 4> witness;
    bool exact_mode = true;
    bool lower_bound_only = false;
    std::uint64_t seed = 0;
    std::uint64_t scanned = 0;  // quadruples inspected
};

// Max over vertex quadruples of (S1 - S2)/2 where S1 >= S2 >= S3 are the
// three pairing sums d(a,b)+d(c,d). Exact mode scans all quadruples and
// requires |ball| <= exact_cap; sampled mode reports a lower bound.
// Witness tie-break: lexicographically least index tuple. Result is
// independent of the thread count.
DefectReport four_point_defect(const BallTable& ball, const DefectMode& mode,
                               std::size_t exact_cap = 150, int threads = 1);

struct TripodReport {
    std::int64_t insize = 0;
    std::array<std::int64_t, 3> legs2{0, 0, 0};  // doubled tripod legs at x, y, z
    std::array<std::string, 3> triple;
    std::string witness_v, witness_w;
    std::uint64_t matched_pairs = 0;
    bool degenerate = false;
};

// Max distance between arc-length-matched points on the chosen geodesic
// sides (half-integer leg ends floored). Requires the pairwise quotients
// x^-1 y etc. to lie in the enumerated ball.
TripodReport thin_triangle_insize(const BallTable& ball, const Element& x, const Element& y,
                                  const Element& z);

// Max over vertices of one side of the distance to the union of the other
// two sides, maximized over the three sides.
std::int64_t slim_insize(const BallTable& ball, const Element& x, const Element& y,
                         const Element& z);

struct ProjectionReport {
    std::int64_t defect2 = 0;
    double defect() const { return static_cast<double>(defect2) / 2.0; }
    std::uint64_t seed = 0;
    std::uint64_t samples = 0;
    std::uint64_t used = 0;  // samples whose endpoints had their quotient in the ball
    std::string witness_x, witness_y, witness_a, witness_b, witness_proj;
};

// Sampled max of (d(x, xbar) + d(xbar, y) - d(x, y)) / 2 where xbar is the
// first closest-point projection of x on a sampled geodesic, y a point on it.
ProjectionReport projection_defect(const BallTable& ball, std::uint64_t seed,
                                   std::uint64_t samples);

} // namespace hypgroup
