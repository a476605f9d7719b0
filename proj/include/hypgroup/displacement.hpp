#pragma once

#include <string>
#include <vector>

#include "hypgroup/ball.hpp"
#include "hypgroup/constants.hpp"
#include "hypgroup/marked_group.hpp"

namespace hypgroup {

struct DisplacementReport {
    std::vector<long long> powers;  // |gamma^k| for k = 1..K
    double ell_ratio = 0;           // min_k powers[k-1] / k; upper bound on the limit
    long long ell_diff = 0;         // powers[K-1] - powers[K-2]
    bool stabilized = false;        // difference constant over the last three steps
    long long s_min = 0;            // min over x in B(e,R) of |x^-1 gamma x|
    std::string witness;            // normal form of the minimizing x
    int K = 0;
    int R = 0;
};

// Fills the asymptotic part (powers, both estimators, stabilization). K >= 4.
// Subadditivity of the power lengths is asserted on all in-range pairs.
DisplacementReport asymptotic_displacement(const MarkedGroup& g, const Element& gamma, int K);

// Fills the minimal part: exact min of |x^-1 gamma x| over the ball of radius
// R with its first BFS witness; an upper bound on the global infimum.
DisplacementReport minimal_displacement(const MarkedGroup& g, const Element& gamma, int R,
                                        std::uint64_t mem_cap = kDefaultMemCap);

// Length after cyclic reduction: exact conjugacy-minimal length on free
// models and free products of such (tree actions). WrongModel otherwise.
long long cyclically_reduced_length(const MarkedGroup& g, const Element& gamma);

struct IsometryClass {
    enum class Kind { Elliptic, Hyperbolic, Unknown };
    Kind kind = Kind::Unknown;
    int order = 0;       // Elliptic: smallest m <= K with gamma^m = e
    std::string reason;  // Unknown: why no verdict
};

IsometryClass classify_isometry(const MarkedGroup& g, const Element& gamma, int K);

struct FloorConsistencyReport {
    double floor = 0;
    double min_ell = 0;
    bool pass = false;
    int evaluated = 0;
    int skipped = 0;         // identities in the sample
    std::string min_witness;
    std::string nu;
    std::string nu_provenance;
    // every number here depends on the configured census function
    std::string provenance = "consistency";
};

// Compares the closed-form floor 2(5D+d)/(nu(3^5 e^{73H(D+4d)})+2) against the
// smallest observed displacement estimate over the sample; the model must be
// torsion-free and not virtually cyclic (free of rank >= 2, or a free product
// of infinite torsion-free factors).
FloorConsistencyReport displacement_floor_consistency(const MarkedGroup& g,
                                                      const std::vector<Element>& sample,
                                                      double delta_est, double H, double D,
                                                      const NuFn& nu);

} // namespace hypgroup
