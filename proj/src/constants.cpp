#include "hypgroup/constants.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "hypgroup/errors.hpp"

namespace hypgroup {

namespace {

bool finite(double x) { return std::isfinite(x); }

BigFloat clamp_nu(BigFloat v) {
    if (v < 1) return BigFloat(1);
    return v;
}

} // namespace

void validate(const ConstantsInput& in) {
    if (!finite(in.delta) || !finite(in.H) || !finite(in.D))
        throw DomainError("constants input must be finite");
    if (in.delta < 0) throw DomainError("delta must be >= 0");
    if (!(in.H > 0)) throw DomainError("H must be > 0");
    if (!(in.D > 0)) throw DomainError("D must be > 0");
}

BigFloat NuCeil::eval(const BigFloat& K) const {
    if (!(K > 0)) throw DomainError("nu argument must be positive");
    return clamp_nu(boost::multiprecision::ceil(K));
}

std::string NuCeil::describe() const { return "ceil"; }

NuPoly::NuPoly(double c, double e) : c_(c), e_(e) {
    if (!finite(c) || !finite(e) || !(c > 0) || e < 0)
        throw DomainError("poly nu needs c > 0 and e >= 0");
}

BigFloat NuPoly::eval(const BigFloat& K) const {
    if (!(K > 0)) throw DomainError("nu argument must be positive");
    return clamp_nu(boost::multiprecision::ceil(bf(c_) * big_pow(K, bf(e_))));
}

std::string NuPoly::describe() const {
    std::ostringstream os;
    os << "poly:" << c_ << "," << e_;
    return os.str();
}

NuTable::NuTable(std::vector<std::pair<double, long long>> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw DomainError("table nu needs at least one row");
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        if (!finite(steps_[i].first) || steps_[i].second < 1)
            throw DomainError("table nu rows need finite threshold and value >= 1");
        if (i > 0 && !(steps_[i].first > steps_[i - 1].first))
            throw DomainError("table nu thresholds must be strictly increasing");
        if (i > 0 && steps_[i].second < steps_[i - 1].second)
            throw DomainError("table nu values must be nondecreasing");
    }
}

BigFloat NuTable::eval(const BigFloat& K) const {
    if (!(K > 0)) throw DomainError("nu argument must be positive");
    long long value = steps_.front().second;
    for (const auto& [threshold, v] : steps_) {
        if (bf(threshold) <= K)
            value = v;
        else
            break;
    }
    return bf(BigInt(value));
}

std::string NuTable::describe() const {
    return "table:" + std::to_string(steps_.size()) + " steps";
}

NuPtr parse_nu(const std::string& text) {
    if (text == "ceil") return std::make_shared<NuCeil>();
    if (text.rfind("poly:", 0) == 0) {
        std::string rest = text.substr(5);
        auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw DomainError("poly nu spec must be poly:c,e");
        try {
            double c = std::stod(rest.substr(0, comma));
            double e = std::stod(rest.substr(comma + 1));
            return std::make_shared<NuPoly>(c, e);
        } catch (const std::logic_error&) {
            throw DomainError("poly nu spec must be poly:c,e with numeric c, e");
        }
    }
    if (text.rfind("table:", 0) == 0) {
        std::string path = text.substr(6);
        std::ifstream file(path);
        if (!file) throw DomainError("cannot open nu table file: " + path);
        std::vector<std::pair<double, long long>> steps;
        std::string line;
        while (std::getline(file, line)) {
            if (line.empty() || line[0] == '#') continue;
            auto comma = line.find(',');
            if (comma == std::string::npos)
                throw DomainError("nu table rows must be threshold,value");
            try {
                steps.emplace_back(std::stod(line.substr(0, comma)),
                                   std::stoll(line.substr(comma + 1)));
            } catch (const std::logic_error&) {
                throw DomainError("nu table rows must be threshold,value");
            }
        }
        return std::make_shared<NuTable>(std::move(steps));
    }
    throw DomainError("nu spec must be ceil | poly:c,e | table:file.csv");
}

BigFloat bg_bound(double R, double r, double H) {
    if (!finite(R) || !finite(r) || !finite(H))
        throw DomainError("bg_bound arguments must be finite");
    if (!(R > r) || !(r > 0)) throw DomainError("bg_bound needs R > r > 0");
    if (H < 0) throw DomainError("bg_bound needs H >= 0");
    return bf(3.0) * big_pow(bf(R) / bf(r), bf(25.0) / 4) *
           big_exp(bf(6.0) * bf(H) * (bf(R) - bf(4.0) * bf(r) / 5));
}

BgReport bg_check(const GrowthSequence& growth, const ConstantsInput& in) {
    validate(in);
    const auto& counts = growth.counts;
    BigRational r_min_q = 10 * (rational_of_double(in.D) + rational_of_double(in.delta));
    long long r_min = static_cast<long long>(ceil_rational(r_min_q));
    if (r_min < 1) r_min = 1;
    long long R_max = static_cast<long long>(counts.size()) - 1;
    if (R_max < r_min + 1)
        throw InsufficientRange("bg_check: growth must reach radius ceil(10(D+delta)) + 1");
    for (long long i = r_min; i <= R_max; ++i)
        if (counts[static_cast<std::size_t>(i)] <= 0)
            throw InsufficientRange("bg_check: ball counts must be positive over the scan range");

    std::vector<double> ln_count(static_cast<std::size_t>(R_max) + 1, 0.0);
    std::vector<double> ln_radius(static_cast<std::size_t>(R_max) + 1, 0.0);
    for (long long i = r_min; i <= R_max; ++i) {
        ln_count[static_cast<std::size_t>(i)] = to_double(big_log(bf(counts[static_cast<std::size_t>(i)])));
        ln_radius[static_cast<std::size_t>(i)] = std::log(static_cast<double>(i));
    }

    const double ln3 = std::log(3.0);
    const double p = 25.0 / 4.0;
    BgReport rep;
    rep.r_min = static_cast<int>(r_min);
    rep.r_max = static_cast<int>(R_max);
    rep.worst_margin = std::numeric_limits<double>::infinity();
    for (long long r = r_min; r < R_max; ++r) {
        for (long long R = r + 1; R <= R_max; ++R) {
            double margin = ln3 + p * (ln_radius[static_cast<std::size_t>(R)] - ln_radius[static_cast<std::size_t>(r)]) +
                            6.0 * in.H * (static_cast<double>(R) - 4.0 * static_cast<double>(r) / 5.0) -
                            (ln_count[static_cast<std::size_t>(R)] - ln_count[static_cast<std::size_t>(r)]);
            ++rep.pairs;
            if (!(margin > 0)) ++rep.fail_count;
            if (margin < rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst = {static_cast<int>(r), static_cast<int>(R)};
            }
        }
    }
    rep.pass = rep.fail_count == 0;
    return rep;
}

namespace {

// nu(3^5 e^{73H(D+4d)}) as a BigFloat (shared by the floor and N formulas)
BigFloat nu_inner_73(const ConstantsInput& in, const NuFn& nu) {
    return nu.eval(bf(243.0) * big_exp(bf(73.0) * bf(in.H) * (bf(in.D) + bf(4.0) * bf(in.delta))));
}

} // namespace

BigValue n_generators_bound(const ConstantsInput& in, const NuFn& nu) {
    validate(in);
    BigFloat t1 = nu.eval(bf(243.0) * big_exp(bf(72.0) * bf(in.H) * (bf(in.D) + bf(in.delta))));
    BigFloat t2 = nu_inner_73(in, nu);
    BigFloat factor = bf(20.0) * (bf(in.D) + bf(in.delta)) / (bf(5.0) * bf(in.D) + bf(in.delta));
    BigFloat value = t1 * (1 + factor * (t2 + 2));
    BigFloat bits = big_log2(value);
    if (bits <= bf(1 << 20))
        return BigValue::from_int(ceil_to_int(value));
    return BigValue::from_log2(bits);
}

BigValue presentation_count_bound(long long N, long long p) {
    if (N < 1) throw DomainError("presentation_count_bound needs N >= 1");
    if (p < 3) throw DomainError("presentation_count_bound needs p >= 3");
    const long long tail = 64;
    long long start = 0;
    if (N > 300000) start = N - tail;  // earlier terms vanish at float precision
    BigValue acc;
    bool first = true;
    for (long long k = start; k <= N; ++k) {
        BigInt exponent = boost::multiprecision::pow(BigInt(2 * k), static_cast<unsigned>(p));
        BigValue term = BigValue::pow2_int(exponent);
        acc = first ? term : acc.plus(term);
        first = false;
    }
    return acc;
}

namespace {

BigValue n0_sum(double delta, double H, double D, const NuFn& nu) {
    ConstantsInput in{delta, H, D};
    validate(in);
    BigValue n_limit = n_generators_bound(in, nu);
    const double E = 4.0 * delta + 6.0;

    if (n_limit.exact() && n_limit.int_value() <= 300000) {
        long long N = static_cast<long long>(n_limit.int_value());
        BigValue acc = BigValue::from_int(BigInt(1));  // i = 0 term
        for (long long i = 1; i <= N; ++i)
            acc = acc.plus(BigValue::pow2(big_pow(bf(2.0 * static_cast<double>(i)), bf(E))));
        return acc;
    }

    // Astronomically many terms: keep the last few, the rest are below float
    // precision relative to them.
    BigFloat Nf = n_limit.exact() ? bf(n_limit.int_value())
                                  : big_pow(bf(2.0), n_limit.log2());
    BigValue acc;
    bool first = true;
    for (int j = 0; j < 64; ++j) {
        BigFloat x = big_pow(2 * (Nf - j), bf(E));
        BigValue term = BigValue::from_log2(x);
        acc = first ? term : acc.plus(term);
        first = false;
    }
    return acc;
}

} // namespace

NTriple n0_n1_n2(const ConstantsInput& in, const NuFn& nu) {
    validate(in);
    NTriple out;
    out.n0 = n0_sum(in.delta, in.H, in.D, nu);
    out.n1 = n0_sum(in.delta, in.H, 1.0, nu);
    out.n2_inner_delta = 16.0 * (in.delta / in.D + 2.0);
    out.n2_inner_H = 10.0 * in.H * in.D;
    out.n2 = n0_sum(out.n2_inner_delta, out.n2_inner_H, 1.0, nu);
    return out;
}

double displacement_floor(const ConstantsInput& in, const NuFn& nu) {
    validate(in);
    BigFloat denom = nu_inner_73(in, nu) + 2;
    return to_double(bf(2.0) * (bf(5.0) * bf(in.D) + bf(in.delta)) / denom);
}

double decrire_bound(double R, double delta, double H, const NuFn& nu) {
    if (!finite(R) || !finite(delta) || !finite(H))
        throw DomainError("decrire_bound arguments must be finite");
    if (delta < 0 || H < 0) throw DomainError("decrire_bound needs delta, H >= 0");
    if (!(2.0 * R > 19.0 * delta)) throw DomainError("decrire_bound needs 2R > 19 delta");
    BigFloat denom = nu.eval(bf(243.0) * big_exp(bf(29.0) * bf(H) * bf(R))) + 2;
    return to_double(bf(2.0) * (bf(2.0) * bf(R) - bf(19.0) * bf(delta)) / denom);
}

NumeratorIdentityReport floor_numerator_identity(double delta, double D) {
    if (!finite(delta) || !finite(D) || delta < 0 || !(D > 0))
        throw DomainError("floor_numerator_identity needs delta >= 0, D > 0");
    BigRational dq = rational_of_double(delta);
    BigRational Dq = rational_of_double(D);
    BigRational Rq = BigRational(5, 2) * (Dq + 4 * dq);
    BigRational lhs = 2 * (2 * Rq - 19 * dq);
    BigRational rhs = 2 * (5 * Dq + dq);
    NumeratorIdentityReport rep;
    rep.exact = lhs == rhs;
    rep.R = static_cast<double>(Rq);
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    return rep;
}

double qi_delta(double a, double b, double lambda, double C, double delta) {
    if (!finite(a) || !finite(b) || !finite(lambda) || !finite(C) || !finite(delta))
        throw DomainError("qi_delta arguments must be finite");
    if (!(a > 0)) throw DomainError("qi_delta needs a > 0");
    if (lambda < 1) throw DomainError("qi_delta needs lambda >= 1");
    if (b < 0 || C < 0 || delta < 0) throw DomainError("qi_delta needs b, C, delta >= 0");
    double q = (6.0 * lambda * lambda + 14.0 * lambda + 5.0) * delta +
               ((4.0 * lambda + 3.0) / (6.0 * lambda + 2.0)) * C + b;
    return 4.0 / a * q;
}

std::pair<double, double> qi_c1_c2(double lambda, double C, double delta) {
    if (!finite(lambda) || !finite(C) || !finite(delta))
        throw DomainError("qi_c1_c2 arguments must be finite");
    if (lambda < 1) throw DomainError("qi_c1_c2 needs lambda >= 1");
    if (C < 0 || delta < 0) throw DomainError("qi_c1_c2 needs C, delta >= 0");
    double c1 = (6.0 * lambda + 2.0) * delta + C / (6.0 * lambda + 2.0);
    double c2 = (1.0 + lambda) * c1 + C / 2.0;
    return {c1, c2};
}

double stability_bound(double L, double delta) {
    if (!finite(L) || !finite(delta)) throw DomainError("stability_bound arguments must be finite");
    if (L < 0) throw DomainError("stability_bound needs L >= 0");
    if (!(delta > 0)) throw DomainError("stability_bound needs delta > 0");
    if (L <= 0) return delta;
    return delta * (1.0 + std::max(std::log2(L / delta), 0.0));
}

double relator_length_bound(double delta) {
    if (!finite(delta) || delta < 0) throw DomainError("relator_length_bound needs delta >= 0");
    return 4.0 * delta + 6.0;
}

SandwichReport sandwich_check(long long k, double D, const std::vector<long long>& lengths) {
    if (k < 1) throw DomainError("sandwich_check needs k >= 1");
    if (!finite(D) || !(D > 0)) throw DomainError("sandwich_check needs D > 0");
    BigRational Dq = rational_of_double(D);
    BigRational upper_unit = BigRational(k + 2) * Dq;
    BigRational lower_unit = BigRational(k) * Dq;
    SandwichReport rep;
    for (long long m : lengths) {
        if (m < 0) throw DomainError("sandwich_check lengths must be >= 0");
        BigRational mq(m);
        BigInt d = ceil_rational(mq / upper_unit);
        bool ok = lower_unit * BigRational(d - 1) <= mq && mq <= upper_unit * BigRational(d);
        ++rep.checked;
        if (!ok) {
            ++rep.fail_count;
            if (rep.first_fail == 0) rep.first_fail = m;
        }
    }
    rep.pass = rep.fail_count == 0;
    return rep;
}

SandwichReport sandwich_check(long long k, double D, long long cap) {
    if (cap < 1) throw DomainError("sandwich_check needs cap >= 1");
    std::vector<long long> lengths;
    lengths.reserve(static_cast<std::size_t>(cap));
    for (long long m = 1; m <= cap; ++m) lengths.push_back(m);
    return sandwich_check(k, D, lengths);
}

QiSpaceConstants qi_space_constants(double D) {
    if (!finite(D) || !(D > 0)) throw DomainError("qi_space_constants needs D > 0");
    return {1.25, 12.5 * D, D};
}

AbsorptionReport absorption_check() {
    BigInt lhs = BigInt(81) * (BigInt(1) << 25);
    BigInt rhs = boost::multiprecision::pow(BigInt(3), 20u);
    AbsorptionReport rep;
    rep.pass_exact = lhs <= rhs;
    rep.lhs = lhs.str();
    rep.rhs = rhs.str();
    rep.lhs_double = 3.0 * std::pow(2.0, 25.0 / 4.0);
    rep.rhs_double = 243.0;
    rep.pass_double = rep.lhs_double <= rep.rhs_double;
    return rep;
}

} // namespace hypgroup
