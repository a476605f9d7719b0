#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cstdint>
#include <string>

#include "hypgroup/errors.hpp"

namespace hypgroup {

using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;
// Variable-precision float; precision is set globally in bits (default 256).
using BigFloat = boost::multiprecision::mpfr_float;

void set_float_precision_bits(unsigned bits);
unsigned float_precision_bits();

BigFloat bf(double x);
BigFloat bf(const BigInt& v);
BigFloat big_exp(const BigFloat& x);
BigFloat big_log(const BigFloat& x);
BigFloat big_log2(const BigFloat& x);
BigFloat big_pow(const BigFloat& base, const BigFloat& exponent);
bool is_integral(const BigFloat& x);
BigInt ceil_to_int(const BigFloat& x);
BigInt floor_to_int(const BigFloat& x);
double to_double(const BigFloat& x);

// Exact binary rational of a double (every finite double is one).
BigRational rational_of_double(double x);
BigInt ceil_rational(const BigRational& q);

// Largest integer we are willing to materialize exactly: 2^29 bits = 64 MiB.
inline constexpr std::uint64_t kDefaultMaxExactBits = 1ull << 29;

// A positive count that may be far too large to hold as an integer.
// Exact mode stores the integer itself; log2 mode stores only log2(value).
class BigValue {
public:
    BigValue() : exact_(true), value_(0), log2_(0) {}

    static BigValue from_int(BigInt v);
    static BigValue from_log2(BigFloat log2_value);
    // 2^exponent. Exact iff exponent is a nonnegative integer <= max_exact_bits.
    static BigValue pow2(const BigFloat& exponent,
                         std::uint64_t max_exact_bits = kDefaultMaxExactBits);
    static BigValue pow2_int(const BigInt& exponent,
                             std::uint64_t max_exact_bits = kDefaultMaxExactBits);

    bool exact() const { return exact_; }
    // Throws PrecisionCap when the value was never materialized.
    const BigInt& int_value() const;
    // Always available; for exact values computed on demand at current precision.
    BigFloat log2() const;

    BigValue plus(const BigValue& other,
                  std::uint64_t max_exact_bits = kDefaultMaxExactBits) const;
    int compare(const BigValue& other) const;

    // Decimal string when exact and small enough, else "log2:<float>".
    std::string str(std::size_t max_digits = 10000) const;

private:
    bool exact_;
    BigInt value_;
    BigFloat log2_;
};

} // namespace hypgroup
