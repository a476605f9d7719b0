#pragma once

#include <string>
#include <vector>

#include "hypgroup/bigvalue.hpp"

namespace hypgroup {

// Letters are generator indices: 0..k-1 are a1..ak, k..2k-1 their inverses.
// A reduced word never has adjacent mutually inverse letters.
using ReducedWord = std::vector<int>;

// 1 + sum_{j=1..p} 2k(2k-1)^{j-1}: reduced words of length <= p, exact.
BigValue free_ball_count(long long k, long long p);

// All reduced words of length <= p in shortlex order (letters by index).
// CapExceeded when the count exceeds cap.
std::vector<ReducedWord> free_ball_enumerate(long long k, long long p, long long cap);

std::string word_to_string(long long k, const ReducedWord& w);

// ball count <= (2k)^p; k >= 1, p >= 3.
bool verify_ball_bound(long long k, long long p);

struct PresentationCount {
    BigValue count;         // 2^{ball count}: subsets of the ball
    BigValue cap;           // 2^{(2k)^p}
    BigInt count_exponent;  // ball count
    BigInt cap_exponent;    // (2k)^p
    bool leq = false;       // count <= cap, decided on the exact exponents
};

PresentationCount count_presentations(long long k, long long p);

} // namespace hypgroup
