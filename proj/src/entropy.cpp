#include "hypgroup/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypgroup/errors.hpp"

namespace hypgroup {

namespace {

double log_big(const BigInt& n) {
    return to_double(big_log(bf(n)));
}

} // namespace

EntropyEstimate entropy_estimate(const GrowthSequence& growth, int window) {
    if (window < 1)
        throw InsufficientData("entropy_estimate: window must be >= 1");
    const auto& counts = growth.counts;
    if (counts.size() < static_cast<std::size_t>(window) + 1)
        throw InsufficientData("entropy_estimate: need counts for at least window + 1 radii");
    for (std::size_t r = 0; r < counts.size(); ++r) {
        if (counts[r] <= 0)
            throw InsufficientData("entropy_estimate: ball counts must be positive");
        if (r > 0 && counts[r] < counts[r - 1])
            throw InsufficientData("entropy_estimate: ball counts must be non-decreasing");
    }

    const std::size_t n = counts.size();
    std::vector<BigInt> spheres(n);
    spheres[0] = counts[0];
    for (std::size_t r = 1; r < n; ++r) spheres[r] = counts[r] - counts[r - 1];

    EntropyEstimate est;
    est.window = window;
    est.cumulative.assign(n, 0.0);
    est.diff.assign(n, 0.0);
    for (std::size_t r = 1; r < n; ++r) {
        est.cumulative[r] = log_big(counts[r]) / static_cast<double>(r);
        if (spheres[r] > 0 && spheres[r - 1] > 0)
            est.diff[r] = log_big(spheres[r]) - log_big(spheres[r - 1]);
        else
            est.diff[r] = 0.0;  // a dead sphere pins the estimate at 0
    }

    double sum = 0.0;
    double tail_min = est.cumulative[n - 1];
    for (std::size_t r = n - static_cast<std::size_t>(window); r < n; ++r) {
        sum += est.diff[r];
        tail_min = std::min(tail_min, est.cumulative[r]);
    }
    est.slope = sum / static_cast<double>(window);
    est.tail_min_cumulative = tail_min;
    return est;
}

double exact_entropy(const MarkedGroup& g) {
    switch (g.kind()) {
        case ModelKind::Free: {
            long long k = g.spec_ptr()->arg;
            if (k == 1) return 0.0;
            return std::log(static_cast<double>(2 * k - 1));
        }
        case ModelKind::ZPow:
        case ModelKind::ZGens:
        case ModelKind::CyclicFull:
            return 0.0;
        case ModelKind::Prod: {
            MarkedGroup l = g.left();
            MarkedGroup r = g.right();
            if (l.finite()) return exact_entropy(r);
            if (r.finite()) return exact_entropy(l);
            throw Unsupported("exact_entropy: product of two infinite factors");
        }
        case ModelKind::FProd:
            throw Unsupported("exact_entropy: free products are bracketed, not closed-form");
    }
    throw Unsupported("exact_entropy: unknown model");
}

std::vector<BigInt> fprod_sphere_series(const MarkedGroup& g, int R) {
    if (g.kind() != ModelKind::FProd)
        throw WrongModel("fprod_sphere_series: free-product model required");
    if (R < 0) throw OutOfRange("fprod_sphere_series: R must be >= 0");

    auto spheres_of = [&](const MarkedGroup& factor) {
        GrowthSequence gs = growth_sequence(factor, R);
        std::vector<BigInt> s(gs.counts.size());
        s[0] = gs.counts[0];
        for (std::size_t r = 1; r < s.size(); ++r) s[r] = gs.counts[r] - gs.counts[r - 1];
        return s;
    };
    std::vector<BigInt> sa = spheres_of(g.left());
    std::vector<BigInt> sb = spheres_of(g.right());

    // reciprocal of a series with constant term 1
    auto inv_series = [R](const std::vector<BigInt>& a) {
        std::vector<BigInt> b(static_cast<std::size_t>(R) + 1);
        b[0] = 1;
        for (int n = 1; n <= R; ++n) {
            BigInt acc = 0;
            for (int j = 1; j <= n; ++j) acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(n - j)];
            b[static_cast<std::size_t>(n)] = -acc;
        }
        return b;
    };
    std::vector<BigInt> ia = inv_series(sa);
    std::vector<BigInt> ib = inv_series(sb);

    // F = 1/(1/A + 1/B - 1); the combined denominator still has constant term 1
    std::vector<BigInt> denom(static_cast<std::size_t>(R) + 1);
    denom[0] = 1;
    for (int n = 1; n <= R; ++n)
        denom[static_cast<std::size_t>(n)] = ia[static_cast<std::size_t>(n)] + ib[static_cast<std::size_t>(n)];
    return inv_series(denom);
}

EntropyBracket fprod_entropy(const MarkedGroup& g, int R_series, double tol) {
    if (g.kind() != ModelKind::FProd)
        throw WrongModel("fprod_entropy: free-product model required");
    if (R_series < 8)
        throw SeriesTooShort("fprod_entropy: series radius must be >= 8");
    if (!(tol > 0))
        throw DomainError("fprod_entropy: tol must be positive");

    auto spheres_of = [&](const MarkedGroup& factor) {
        GrowthSequence gs = growth_sequence(factor, R_series);
        std::vector<BigInt> s(gs.counts.size());
        s[0] = gs.counts[0];
        for (std::size_t r = 1; r < s.size(); ++r) s[r] = gs.counts[r] - gs.counts[r - 1];
        return s;
    };
    std::vector<BigInt> sa = spheres_of(g.left());
    std::vector<BigInt> sb = spheres_of(g.right());

    // Smallest positive root of 1/A_T + 1/B_T - 1 on [0,1]. The function is 1
    // at z=0 and <= 0 at z=1 (both factor polynomials are >= 2 there), and
    // each truncation only shrinks A_T and B_T, so the root can only move
    // right of the true singularity: -ln(root) is a certified lower bound.
    auto poly_at = [](const std::vector<BigInt>& c, int T, const BigFloat& z) {
        BigFloat acc = 0;
        for (int i = T; i >= 0; --i) acc = acc * z + bf(c[static_cast<std::size_t>(i)]);
        return acc;
    };
    auto root_at = [&](int T, BigFloat& hi_out) -> BigFloat {
        BigFloat lo = 0, hi = 1;
        const BigFloat cut = bf(tol) / 1000;
        for (int it = 0; it < 400 && hi - lo > cut; ++it) {
            BigFloat mid = (lo + hi) / 2;
            BigFloat phi = 1 / poly_at(sa, T, mid) + 1 / poly_at(sb, T, mid) - 1;
            if (phi > 0)
                lo = mid;
            else
                hi = mid;
        }
        hi_out = hi;
        return (lo + hi) / 2;
    };

    BigFloat hi_full = 1, hi_prev = 1;
    BigFloat root_full = root_at(R_series, hi_full);
    BigFloat root_prev = root_at(R_series - 2, hi_prev);
    double drift = std::fabs(to_double(root_full - root_prev));
    if (drift > std::max(100.0 * tol, 1e-7))
        throw SeriesTooShort("fprod_entropy: truncated root has not stabilized; raise the series radius");

    EntropyBracket bracket;
    bracket.series_radius = R_series;
    bracket.tol = tol;
    bracket.root = to_double(root_full);
    bracket.lower = std::max(0.0, to_double(-big_log(hi_full)));

    std::vector<BigInt> spheres = fprod_sphere_series(g, R_series);
    BigInt ball = 0;
    double upper = std::numeric_limits<double>::infinity();
    for (int r = 0; r <= R_series; ++r) {
        ball += spheres[static_cast<std::size_t>(r)];
        if (r >= 1) upper = std::min(upper, log_big(ball) / static_cast<double>(r));
    }
    bracket.upper = upper;
    return bracket;
}

double scaled_entropy(double value, double scale) {
    if (!(scale > 0))
        throw DomainError("scaled_entropy: scale must be positive");
    return value / scale;
}

} // namespace hypgroup
