#include "hypgroup/bigvalue.hpp"

#include <cmath>
#include <sstream>

namespace hypgroup {

namespace {
unsigned g_precision_bits = 256;
}

void set_float_precision_bits(unsigned bits) {
    if (bits < 24 || bits > 1u << 20) throw DomainError("precision bits out of range [24, 2^20]");
    g_precision_bits = bits;
    // default_precision is counted in decimal digits; round up so the backend
    // carries at least the requested number of bits.
    unsigned digits10 = static_cast<unsigned>(std::ceil(bits * 0.3010299956639812)) + 1;
    BigFloat::default_precision(digits10);
}

unsigned float_precision_bits() { return g_precision_bits; }

namespace {
struct PrecisionInit {
    PrecisionInit() { set_float_precision_bits(256); }
};
const PrecisionInit g_precision_init;
} // namespace

BigFloat bf(double x) { return BigFloat(x); }
BigFloat bf(const BigInt& v) { return BigFloat(v); }
BigFloat big_exp(const BigFloat& x) { return exp(x); }

BigFloat big_log(const BigFloat& x) {
    if (x <= 0) throw DomainError("log of non-positive value");
    return log(x);
}

BigFloat big_log2(const BigFloat& x) {
    if (x <= 0) throw DomainError("log2 of non-positive value");
    return log2(x);
}

BigFloat big_pow(const BigFloat& base, const BigFloat& exponent) {
    return pow(base, exponent);
}

bool is_integral(const BigFloat& x) { return floor(x) == x; }

BigInt ceil_to_int(const BigFloat& x) {
    BigFloat c = ceil(x);
    return c.convert_to<BigInt>();
}

BigInt floor_to_int(const BigFloat& x) {
    BigFloat c = floor(x);
    return c.convert_to<BigInt>();
}

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

BigRational rational_of_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite double has no rational value");
    return BigRational(x);
}

BigInt ceil_rational(const BigRational& q) {
    BigInt num = numerator(q);
    BigInt den = denominator(q); // canonical form: den > 0
    BigInt quot = num / den;     // truncates toward zero
    if (num % den != 0 && num > 0) ++quot;
    return quot;
}

BigValue BigValue::from_int(BigInt v) {
    if (v < 0) throw DomainError("BigValue is restricted to nonnegative counts");
    BigValue r;
    r.exact_ = true;
    r.value_ = std::move(v);
    return r;
}

BigValue BigValue::from_log2(BigFloat log2_value) {
    BigValue r;
    r.exact_ = false;
    r.log2_ = std::move(log2_value);
    return r;
}

BigValue BigValue::pow2(const BigFloat& exponent, std::uint64_t max_exact_bits) {
    if (exponent >= 0 && is_integral(exponent) && exponent <= BigFloat(max_exact_bits)) {
        BigInt e = floor_to_int(exponent);
        return pow2_int(e, max_exact_bits);
    }
    return from_log2(exponent);
}

BigValue BigValue::pow2_int(const BigInt& exponent, std::uint64_t max_exact_bits) {
    if (exponent < 0) throw DomainError("negative power of two is not a count");
    if (exponent > BigInt(max_exact_bits)) return from_log2(bf(exponent));
    BigInt v = BigInt(1) << exponent.convert_to<unsigned long>();
    return from_int(std::move(v));
}

const BigInt& BigValue::int_value() const {
    if (!exact_) throw PrecisionCap("value held only in log2 form");
    return value_;
}

BigFloat BigValue::log2() const {
    if (!exact_) return log2_;
    if (value_ <= 0) throw DomainError("log2 of non-positive value");
    return big_log2(bf(value_));
}

BigValue BigValue::plus(const BigValue& other, std::uint64_t max_exact_bits) const {
    if (exact_ && other.exact_) {
        BigInt sum = value_ + other.value_;
        // Sums are allowed to creep past the cap by one bit; only reaching
        // roughly twice the cap forces log2 mode.
        if (sum == 0 || msb(sum) <= max_exact_bits + 1) return from_int(std::move(sum));
        return from_log2(big_log2(bf(sum)));
    }
    BigFloat la = log2();
    BigFloat lb = other.log2();
    if (la < lb) std::swap(la, lb);
    // log2(2^la + 2^lb) = la + log2(1 + 2^(lb-la))
    BigFloat tail = big_pow(bf(2.0), lb - la);
    return from_log2(la + big_log2(1 + tail));
}

int BigValue::compare(const BigValue& other) const {
    if (exact_ && other.exact_) {
        if (value_ < other.value_) return -1;
        if (value_ > other.value_) return 1;
        return 0;
    }
    BigFloat la = log2();
    BigFloat lb = other.log2();
    if (la < lb) return -1;
    if (la > lb) return 1;
    return 0;
}

std::string BigValue::str(std::size_t max_digits) const {
    if (exact_) {
        // Cheap bit-length screen before producing a giant decimal string.
        std::size_t bits = value_ == 0 ? 1 : msb(value_) + 1;
        if (bits <= max_digits * 10 / 3) {
            std::string s = value_.str();
            if (s.size() <= max_digits) return s;
        }
        return "log2:" + log2().str(30, std::ios_base::fmtflags());
    }
    return "log2:" + log2_.str(30, std::ios_base::fmtflags());
}

} // namespace hypgroup
