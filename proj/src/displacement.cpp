#include "hypgroup/displacement.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hypgroup/errors.hpp"

namespace hypgroup {

namespace {

std::vector<long long> power_lengths(const MarkedGroup& g, const Element& gamma, int K) {
    std::vector<long long> a(static_cast<std::size_t>(K));
    Element p = g.identity();
    for (int k = 1; k <= K; ++k) {
        p = g.multiply(p, gamma);
        a[static_cast<std::size_t>(k - 1)] = g.exact_word_length(p);
    }
    for (int k = 1; k <= K; ++k)
        for (int m = 1; k + m <= K; ++m)
            if (a[static_cast<std::size_t>(k + m - 1)] >
                a[static_cast<std::size_t>(k - 1)] + a[static_cast<std::size_t>(m - 1)])
                throw Error("power lengths violate subadditivity");
    return a;
}

bool diffs_stabilized(const std::vector<long long>& a) {
    // differences with a_0 = 0; constant over the last three steps
    std::size_t n = a.size();
    if (n < 3) return false;
    auto diff = [&a](std::size_t k) {
        return k == 0 ? a[0] : a[k] - a[k - 1];
    };
    return diff(n - 1) == diff(n - 2) && diff(n - 2) == diff(n - 3);
}

} // namespace

DisplacementReport asymptotic_displacement(const MarkedGroup& g, const Element& gamma, int K) {
    if (K < 4) throw OutOfRange("asymptotic_displacement: K must be >= 4");
    DisplacementReport rep;
    rep.K = K;
    rep.powers = power_lengths(g, gamma, K);
    double ratio = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= K; ++k)
        ratio = std::min(ratio, static_cast<double>(rep.powers[static_cast<std::size_t>(k - 1)]) / k);
    rep.ell_ratio = ratio;
    rep.ell_diff = rep.powers[static_cast<std::size_t>(K - 1)] - rep.powers[static_cast<std::size_t>(K - 2)];
    rep.stabilized = diffs_stabilized(rep.powers);
    return rep;
}

DisplacementReport minimal_displacement(const MarkedGroup& g, const Element& gamma, int R,
                                        std::uint64_t mem_cap) {
    if (R < 0) throw OutOfRange("minimal_displacement: R must be >= 0");
    BallTable ball = enumerate_ball(g, R, mem_cap);
    DisplacementReport rep;
    rep.R = R;
    long long best = std::numeric_limits<long long>::max();
    const Element* best_x = nullptr;
    for (const Element& x : ball.elements) {
        Element moved = g.multiply(g.multiply(g.inverse(x), gamma), x);
        long long len = g.exact_word_length(moved);
        if (len < best) {
            best = len;
            best_x = &x;
        }
    }
    rep.s_min = best;
    rep.witness = g.render(*best_x);
    return rep;
}

namespace {

bool tree_model(const GroupSpecPtr& spec) {
    if (spec->kind == ModelKind::Free) return true;
    if (spec->kind == ModelKind::FProd)
        return tree_model(spec->left) && tree_model(spec->right);
    return false;
}

} // namespace

long long cyclically_reduced_length(const MarkedGroup& g, const Element& gamma) {
    if (!tree_model(g.spec_ptr()))
        throw WrongModel("cyclically_reduced_length: free or free-product-of-free model required");
    if (g.kind() == ModelKind::Free) {
        const auto& w = gamma.word;
        std::size_t i = 0, j = w.size();
        while (j - i >= 2 && w[i] == -w[j - 1]) {
            ++i;
            --j;
        }
        return static_cast<long long>(j - i);
    }

    MarkedGroup factors[2] = {g.left(), g.right()};
    std::deque<std::pair<std::uint8_t, Element>> syllables;
    for (std::size_t s = 0; s < gamma.parts.size(); ++s)
        syllables.emplace_back(gamma.tags[s], gamma.parts[s]);

    while (syllables.size() >= 2 && syllables.front().first == syllables.back().first) {
        std::uint8_t tag = syllables.front().first;
        // conjugating by the last syllable merges it into the first
        Element merged = factors[tag].multiply(syllables.back().second, syllables.front().second);
        syllables.pop_front();
        syllables.pop_back();
        if (!factors[tag].is_identity(merged)) syllables.emplace_front(tag, merged);
    }

    if (syllables.empty()) return 0;
    if (syllables.size() == 1)
        return cyclically_reduced_length(factors[syllables.front().first], syllables.front().second);
    long long total = 0;
    for (const auto& [tag, part] : syllables) total += factors[tag].exact_word_length(part);
    return total;
}

IsometryClass classify_isometry(const MarkedGroup& g, const Element& gamma, int K) {
    if (K < 4) throw OutOfRange("classify_isometry: K must be >= 4");
    DisplacementReport rep = asymptotic_displacement(g, gamma, K);
    IsometryClass cls;
    for (int m = 1; m <= K; ++m) {
        if (rep.powers[static_cast<std::size_t>(m - 1)] == 0) {
            cls.kind = IsometryClass::Kind::Elliptic;
            cls.order = m;
            return cls;
        }
    }
    if (rep.stabilized && rep.ell_diff > 0) {
        cls.kind = IsometryClass::Kind::Hyperbolic;
        return cls;
    }
    cls.kind = IsometryClass::Kind::Unknown;
    cls.reason = rep.stabilized ? "length differences stabilized at a non-positive value"
                                : "length differences did not stabilize within K powers";
    return cls;
}

namespace {

bool infinite_torsion_free(const GroupSpecPtr& spec) {
    switch (spec->kind) {
        case ModelKind::Free:
        case ModelKind::ZPow:
        case ModelKind::ZGens:
            return true;
        case ModelKind::CyclicFull:
            return false;
        case ModelKind::Prod:
        case ModelKind::FProd:
            return infinite_torsion_free(spec->left) && infinite_torsion_free(spec->right);
    }
    return false;
}

} // namespace

FloorConsistencyReport displacement_floor_consistency(const MarkedGroup& g,
                                                      const std::vector<Element>& sample,
                                                      double delta_est, double H, double D,
                                                      const NuFn& nu) {
    const GroupSpecPtr& spec = g.spec_ptr();
    bool supported = (spec->kind == ModelKind::Free && spec->arg >= 2) ||
                     (spec->kind == ModelKind::FProd && infinite_torsion_free(spec->left) &&
                      infinite_torsion_free(spec->right));
    if (!supported)
        throw WrongModel("displacement_floor_consistency: needs free rank >= 2 or a free product "
                         "of infinite torsion-free factors");

    FloorConsistencyReport rep;
    rep.nu = nu.describe();
    rep.nu_provenance = NuFn::provenance();
    rep.floor = displacement_floor({delta_est, H, D}, nu);
    rep.min_ell = std::numeric_limits<double>::infinity();
    for (const Element& gamma : sample) {
        if (g.is_identity(gamma)) {
            ++rep.skipped;
            continue;
        }
        DisplacementReport d = asymptotic_displacement(g, gamma, 12);
        double ell = d.stabilized ? static_cast<double>(d.ell_diff) : d.ell_ratio;
        ++rep.evaluated;
        if (ell < rep.min_ell) {
            rep.min_ell = ell;
            rep.min_witness = g.render(gamma);
        }
    }
    rep.pass = rep.evaluated > 0 && rep.floor < rep.min_ell;
    return rep;
}

} // namespace hypgroup
