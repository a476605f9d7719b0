#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "hypgroup/ball.hpp"
#include "hypgroup/bigvalue.hpp"

namespace hypgroup {

struct ConstantsInput {
    double delta = 0;  // >= 0
    double H = 1;      // > 0
    double D = 1;      // > 0
};

// DomainError unless all fields are finite and within range.
void validate(const ConstantsInput& in);

// Pluggable census function: integer-valued, monotone nondecreasing, >= 1.
// No closed form is available for the real one, so every configuration is a
// placeholder and every result that depends on it is labeled accordingly.
class NuFn {
  public:
    virtual ~NuFn() = default;
    // Returns an integer-valued BigFloat (kept in float form so astronomically
    // large results never materialize as digit strings).
    virtual BigFloat eval(const BigFloat& K) const = 0;
    virtual std::string describe() const = 0;
    static const char* provenance() { return "non-paper placeholder"; }
};

using NuPtr = std::shared_ptr<const NuFn>;

class NuCeil final : public NuFn {
  public:
    BigFloat eval(const BigFloat& K) const override;
    std::string describe() const override;
};

class NuPoly final : public NuFn {
  public:
    NuPoly(double c, double e);  // ceil(c * K^e); c > 0, e >= 0
    BigFloat eval(const BigFloat& K) const override;
    std::string describe() const override;

  private:
    double c_;
    double e_;
};

class NuTable final : public NuFn {
  public:
    // Step function: value of the last threshold <= K (first value below all
    // thresholds). Thresholds strictly increasing, values nondecreasing >= 1.
    explicit NuTable(std::vector<std::pair<double, long long>> steps);
    BigFloat eval(const BigFloat& K) const override;
    std::string describe() const override;

  private:
    std::vector<std::pair<double, long long>> steps_;
};

// "ceil" | "poly:c,e" | "table:file.csv" (CSV rows "threshold,value").
NuPtr parse_nu(const std::string& text);

// 3 (R/r)^{25/4} e^{6H(R - (4/5)r)}; DomainError unless R > r > 0, H >= 0.
BigFloat bg_bound(double R, double r, double H);

struct BgPair {
    int r = 0;
    int R = 0;
};

struct BgReport {
    bool pass = true;
    long long pairs = 0;
    long long fail_count = 0;
    // min over pairs of ln(bound) - ln(counts ratio); the strict inequality
    // holds exactly when this is positive
    double worst_margin = 0;
    BgPair worst;
    int r_min = 0;
    int r_max = 0;
};

// Checks counts[R]/counts[r] < bg_bound(R,r,H) for every integer pair
// R > r >= ceil(10(D+delta)) available in the growth sequence.
// InsufficientRange when the sequence has no such pair.
BgReport bg_check(const GrowthSequence& growth, const ConstantsInput& in);

// ceil of nu(3^5 e^{72H(D+d)}) * (1 + (20(D+d)/(5D+d)) (nu(3^5 e^{73H(D+4d)}) + 2)).
BigValue n_generators_bound(const ConstantsInput& in, const NuFn& nu);

// sum_{k=0}^{N} 2^{(2k)^p}, exact; N >= 1, p >= 3.
BigValue presentation_count_bound(long long N, long long p);

struct NTriple {
    BigValue n0;
    BigValue n1;
    BigValue n2;
    // arguments the third value passed to the second (captured for testing
    // the substitution wiring)
    double n2_inner_delta = 0;
    double n2_inner_H = 0;
};

// n0 = sum_{i=0}^{N(in)} 2^{(2i)^{4d+6}}; n1 = n0 at D=1;
// n2 = n1 at (16(d/D+2), 10HD).
NTriple n0_n1_n2(const ConstantsInput& in, const NuFn& nu);

// 2(5D + d) / (nu(3^5 e^{73H(D+4d)}) + 2)
double displacement_floor(const ConstantsInput& in, const NuFn& nu);

// 2(2R - 19d) / (nu(3^5 e^{29HR}) + 2); DomainError if 2R <= 19d.
double decrire_bound(double R, double delta, double H, const NuFn& nu);

struct NumeratorIdentityReport {
    bool exact = false;
    double R = 0;      // the radius at which the two bounds share a numerator
    std::string lhs;   // 2(2R - 19d) as an exact rational
    std::string rhs;   // 2(5D + d) as an exact rational
};

// At R = (5/2)(D + 4d) the numerators of displacement_floor and
// decrire_bound agree; verified in exact rational arithmetic.
NumeratorIdentityReport floor_numerator_identity(double delta, double D);

// (4/a)((6L^2 + 14L + 5)d + ((4L+3)/(6L+2))C + b); a > 0, L >= 1, b,C,d >= 0.
double qi_delta(double a, double b, double lambda, double C, double delta);

// C1 = (6L+2)d + C/(6L+2); C2 = (1+L)C1 + C/2; L >= 1, C,d >= 0.
std::pair<double, double> qi_c1_c2(double lambda, double C, double delta);

// d(1 + max(log2(L/d), 0)); L >= 0, d > 0.
double stability_bound(double L, double delta);

// 4d + 6; d >= 0.
double relator_length_bound(double delta);

struct SandwichReport {
    bool pass = true;
    long long checked = 0;
    long long fail_count = 0;
    long long first_fail = 0;  // first failing length, 0 when none
};

// For each tree word length m, rescaled distance d' = ceil(m / ((k+2)D)) must
// satisfy kD(d'-1) <= m <= (k+2)D d'; verified in exact rational arithmetic.
SandwichReport sandwich_check(long long k, double D, const std::vector<long long>& lengths);
SandwichReport sandwich_check(long long k, double D, long long cap);  // lengths 1..cap

struct QiSpaceConstants {
    double lambda = 0;
    double c = 0;
    double a = 0;
};

// (5/4, 12.5 D, D); D > 0.
QiSpaceConstants qi_space_constants(double D);

struct AbsorptionReport {
    bool pass_exact = false;   // 81 * 2^25 <= 3^20 as integers
    bool pass_double = false;  // 3 * 2^{25/4} <= 243 in doubles
    std::string lhs;
    std::string rhs;
    double lhs_double = 0;
    double rhs_double = 0;
};

// The constant absorption 3 * 2^{25/4} <= 3^5, checked both as the exact
// fourth-power integer comparison and in floating point.
AbsorptionReport absorption_check();

} // namespace hypgroup
