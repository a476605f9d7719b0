#include "hypgroup/presentations.hpp"

#include "hypgroup/errors.hpp"

namespace hypgroup {

namespace {

BigInt ball_count_int(long long k, long long p) {
    if (k < 1) throw DomainError("free_ball_count needs k >= 1");
    if (p < 0) throw DomainError("free_ball_count needs p >= 0");
    BigInt acc = 1;
    BigInt term = 2 * k;
    for (long long j = 1; j <= p; ++j) {
        acc += term;
        term *= 2 * k - 1;
    }
    return acc;
}

} // namespace

BigValue free_ball_count(long long k, long long p) {
    return BigValue::from_int(ball_count_int(k, p));
}

std::vector<ReducedWord> free_ball_enumerate(long long k, long long p, long long cap) {
    BigInt count = ball_count_int(k, p);
    if (count > cap) throw CapExceeded("free_ball_enumerate: ball count exceeds cap");

    std::vector<ReducedWord> words;
    words.reserve(static_cast<std::size_t>(count));
    words.push_back({});
    std::size_t level_begin = 0;
    const int letters = static_cast<int>(2 * k);
    for (long long len = 1; len <= p; ++len) {
        std::size_t level_end = words.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (int x = 0; x < letters; ++x) {
                if (!words[i].empty()) {
                    int last = words[i].back();
                    if (x == (last + static_cast<int>(k)) % letters) continue;
                }
                ReducedWord next = words[i];
                next.push_back(x);
                words.push_back(std::move(next));
            }
        }
        level_begin = level_end;
    }
    return words;
}

std::string word_to_string(long long k, const ReducedWord& w) {
    if (w.empty()) return "e";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        int x = w[i];
        if (x < k)
            out += "a" + std::to_string(x + 1);
        else
            out += "a" + std::to_string(x - k + 1) + "-";
    }
    return out;
}

bool verify_ball_bound(long long k, long long p) {
    if (k < 1) throw DomainError("verify_ball_bound needs k >= 1");
    if (p < 3) throw DomainError("verify_ball_bound needs p >= 3");
    BigInt lhs = ball_count_int(k, p);
    BigInt rhs = boost::multiprecision::pow(BigInt(2 * k), static_cast<unsigned>(p));
    return lhs <= rhs;
}

PresentationCount count_presentations(long long k, long long p) {
    if (k < 1) throw DomainError("count_presentations needs k >= 1");
    if (p < 0) throw DomainError("count_presentations needs p >= 0");
    PresentationCount out;
    out.count_exponent = ball_count_int(k, p);
    out.cap_exponent = boost::multiprecision::pow(BigInt(2 * k), static_cast<unsigned>(p));
    out.count = BigValue::pow2_int(out.count_exponent);
    out.cap = BigValue::pow2_int(out.cap_exponent);
    out.leq = out.count_exponent <= out.cap_exponent;
    return out;
}

} // namespace hypgroup
