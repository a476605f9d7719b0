#include "hypgroup/ball.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_set>

#include <json.hpp>

namespace hypgroup {

namespace {

// Rough per-element bookkeeping cost used for mem_cap accounting:
// hash-node, Element storage, and table slack beyond the key bytes.
constexpr std::uint64_t kNodeOverhead = 160;

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

std::vector<BigInt> spheres_of_counts(const std::vector<BigInt>& counts) {
    std::vector<BigInt> s(counts.size());
    for (std::size_t r = 0; r < counts.size(); ++r)
        s[r] = r == 0 ? counts[0] : counts[r] - counts[r - 1];
    return s;
}

// Ball counts of a free group by walking its (tree) Cayley graph: every
// reduced word of length r+1 extends exactly one reduced word of length r,
// so frontiers are enumerated without a visited set. Words are packed one
// byte per letter.
GrowthSequence free_tree_growth(const MarkedGroup& g, int R, std::uint64_t mem_cap) {
    const int k = static_cast<int>(g.spec().arg);
    std::vector<std::int8_t> letters;
    for (int i = 1; i <= k; ++i) letters.push_back(static_cast<std::int8_t>(i));
    for (int i = 1; i <= k; ++i) letters.push_back(static_cast<std::int8_t>(-i));

    GrowthSequence out;
    out.source = GrowthSequence::Source::Enumerated;
    out.counts.push_back(1);
    std::string frontier;  // words of the current sphere, concatenated
    std::uint64_t frontier_words = 1;
    for (int r = 1; r <= R; ++r) {
        if (frontier_words > mem_cap / static_cast<std::uint64_t>(2 * k * (r + 1)))
            throw MemCapExceeded("free-model frontier would exceed the memory cap", r - 1);
        std::uint64_t next_words =
            r == 1 ? static_cast<std::uint64_t>(2 * k)
                   : frontier_words * static_cast<std::uint64_t>(2 * k - 1);
        std::uint64_t next_bytes = next_words * static_cast<std::uint64_t>(r);
        if (next_bytes + frontier.size() > mem_cap)
            throw MemCapExceeded("free-model frontier would exceed the memory cap", r - 1);
        std::string next;
        next.reserve(next_bytes);
        if (r == 1) {
            for (std::int8_t l : letters) next.push_back(static_cast<char>(128 + l));
        } else {
            const int stride = r - 1;
            for (std::uint64_t w = 0; w < frontier_words; ++w) {
                const char* word = frontier.data() + w * stride;
                std::int8_t last = static_cast<std::int8_t>(
                    static_cast<unsigned char>(word[stride - 1]) - 128);
                for (std::int8_t l : letters) {
                    if (l == -last) continue;
                    next.append(word, stride);
                    next.push_back(static_cast<char>(128 + l));
                }
            }
        }
        frontier.swap(next);
        frontier_words = frontier.size() / static_cast<std::size_t>(r);
        out.counts.push_back(out.counts.back() + BigInt(frontier_words));
    }
    return out;
}

} // namespace

bool BallTable::contains(const Element& g) const {
    return index.find(group.element_key(g)) != index.end();
}

std::size_t BallTable::find(const Element& g) const {
    auto it = index.find(group.element_key(g));
    if (it == index.end())
        throw OutOfRange("element not in the enumerated ball: " + group.render(g));
    return it->second;
}

std::size_t BallTable::sphere_size(int r) const {
    if (r < 0 || r > radius) throw OutOfRange("sphere radius outside the table");
    return sphere_start[static_cast<std::size_t>(r) + 1] - sphere_start[static_cast<std::size_t>(r)];
}

BallTable enumerate_ball(const MarkedGroup& g, int R, std::uint64_t mem_cap) {
    if (R < 0) throw OutOfRange("negative ball radius");
    BallTable t(g);
    t.radius = R;
    Element id = g.identity();
    std::string key = g.element_key(id);
    std::uint64_t bytes = key.size() + kNodeOverhead;
    t.index.emplace(std::move(key), 0);
    t.elements.push_back(std::move(id));
    t.dist.push_back(0);
    t.parent.push_back(-1);
    t.pgen.push_back(-1);
    t.sphere_start = {0, 1};

    const int ngen = g.sigma_size();
    for (int r = 1; r <= R; ++r) {
        std::size_t begin = t.sphere_start[static_cast<std::size_t>(r) - 1];
        std::size_t end = t.sphere_start[static_cast<std::size_t>(r)];
        for (std::size_t i = begin; i < end; ++i) {
            for (int j = 0; j < ngen; ++j) {
                // Multiplying by the inverse of the arriving generator walks
                // back to the parent, which is already enumerated.
                if (t.pgen[i] >= 0 && j == g.inverse_generator(t.pgen[i])) continue;
                Element child = g.multiply(t.elements[i], g.generator(j));
                std::string ck = g.element_key(child);
                auto it = t.index.find(ck);
                if (it != t.index.end()) continue;
                bytes += ck.size() + kNodeOverhead;
                if (bytes > mem_cap)
                    throw MemCapExceeded("ball enumeration exceeded the memory cap", r - 1);
                t.index.emplace(std::move(ck), t.elements.size());
                t.elements.push_back(std::move(child));
                t.dist.push_back(static_cast<std::uint32_t>(r));
                t.parent.push_back(static_cast<std::int64_t>(i));
                t.pgen.push_back(j);
            }
        }
        t.sphere_start.push_back(t.elements.size());
    }
    return t;
}

std::int64_t word_length(const BallTable& ball, const Element& g) {
    return ball.dist[ball.find(g)];
}

std::vector<int> geodesic(const BallTable& ball, const Element& g) {
    std::size_t at = ball.find(g);
    std::vector<int> word;
    while (ball.parent[at] >= 0) {
        word.push_back(ball.pgen[at]);
        at = static_cast<std::size_t>(ball.parent[at]);
    }
    std::reverse(word.begin(), word.end());
    return word;
}

GrowthSequence enumerated_growth(const MarkedGroup& g, int R, std::uint64_t mem_cap) {
    if (R < 0) throw OutOfRange("negative growth radius");
    if (g.kind() == ModelKind::Free) return free_tree_growth(g, R, mem_cap);

    GrowthSequence out;
    out.source = GrowthSequence::Source::Enumerated;
    std::unordered_set<std::string> visited;
    std::vector<Element> frontier{g.identity()};
    visited.insert(g.element_key(frontier[0]));
    std::uint64_t bytes = kNodeOverhead;
    out.counts.push_back(1);
    BigInt total = 1;
    const int ngen = g.sigma_size();
    for (int r = 1; r <= R; ++r) {
        std::vector<Element> next;
        for (const Element& x : frontier) {
            for (int j = 0; j < ngen; ++j) {
                Element child = g.multiply(x, g.generator(j));
                std::string ck = g.element_key(child);
                if (visited.count(ck)) continue;
                bytes += ck.size() + 2 * kNodeOverhead;
                if (bytes > mem_cap)
                    throw MemCapExceeded("growth enumeration exceeded the memory cap", r - 1);
                visited.insert(std::move(ck));
                next.push_back(std::move(child));
            }
        }
        total += BigInt(next.size());
        out.counts.push_back(total);
        frontier.swap(next);
    }
    return out;
}

GrowthSequence closed_form_growth(const MarkedGroup& g, int R) {
    if (R < 0) throw OutOfRange("negative growth radius");
    GrowthSequence out;
    out.source = GrowthSequence::Source::ClosedForm;
    switch (g.kind()) {
    case ModelKind::Free: {
        std::int64_t k = g.spec().arg;
        BigInt sphere = 1, total = 0;
        for (int r = 0; r <= R; ++r) {
            if (r == 1) sphere = 2 * k;
            else if (r > 1) sphere *= 2 * k - 1;
            total += sphere;
            out.counts.push_back(total);
        }
        return out;
    }
    case ModelKind::ZPow: {
        std::int64_t n = g.spec().arg;
        for (int r = 0; r <= R; ++r) {
            BigInt c = 0;
            for (std::int64_t j = 0; j <= std::min<std::int64_t>(n, r); ++j)
                c += (BigInt(1) << j) * binomial(n, j) * binomial(r, j);
            out.counts.push_back(c);
        }
        return out;
    }
    case ModelKind::CyclicFull: {
        for (int r = 0; r <= R; ++r) out.counts.push_back(r == 0 ? 1 : g.spec().arg);
        return out;
    }
    case ModelKind::Prod: {
        GrowthSequence lg = closed_form_growth(g.left(), R);
        GrowthSequence rg = closed_form_growth(g.right(), R);
        std::vector<BigInt> ls = spheres_of_counts(lg.counts);
        std::vector<BigInt> rs = spheres_of_counts(rg.counts);
        BigInt total = 0;
        for (int r = 0; r <= R; ++r) {
            BigInt sphere = 0;
            for (int j = 0; j <= r; ++j) sphere += ls[static_cast<std::size_t>(j)] * rs[static_cast<std::size_t>(r - j)];
            total += sphere;
            out.counts.push_back(total);
        }
        return out;
    }
    case ModelKind::ZGens:
    case ModelKind::FProd:
        throw Unsupported("no closed-form growth for " + g.name());
    }
    throw Error("unreachable model kind");
}

GrowthSequence growth_sequence(const MarkedGroup& g, int R, std::uint64_t mem_cap) {
    try {
        return closed_form_growth(g, R);
    } catch (const Unsupported&) {
        return enumerated_growth(g, R, mem_cap);
    }
}

bool generates_within(const MarkedGroup& g, const std::vector<Element>& subset, int R_test,
                      std::uint64_t vertex_cap) {
    if (R_test < 0) throw OutOfRange("negative test radius");
    std::unordered_set<std::string> subset_keys;
    for (const Element& s : subset) subset_keys.insert(g.element_key(s));
    for (const Element& s : subset)
        if (!subset_keys.count(g.element_key(g.inverse(s))))
            throw NotSymmetric("subset not closed under inverses: " + g.render(s));

    BigInt ball_count = growth_sequence(g, R_test).counts.back();
    if (ball_count > BigInt(vertex_cap))
        throw CapExceeded("target ball larger than the vertex cap; coverage not certifiable");
    const std::uint64_t target = ball_count.convert_to<std::uint64_t>();

    std::int64_t max_len = 0;
    for (const Element& s : subset) max_len = std::max(max_len, g.exact_word_length(s));
    const std::int64_t window = R_test + max_len + 4;

    std::unordered_set<std::string> visited;
    std::vector<Element> frontier{g.identity()};
    visited.insert(g.element_key(frontier[0]));
    std::uint64_t covered = 1;
    if (covered == target) return true;
    while (!frontier.empty()) {
        std::vector<Element> next;
        for (const Element& x : frontier) {
            for (const Element& s : subset) {
                Element child = g.multiply(x, s);
                if (g.exact_word_length(child) > window) continue;
                std::string ck = g.element_key(child);
                if (!visited.insert(std::move(ck)).second) continue;
                if (visited.size() > vertex_cap)
                    throw CapExceeded("generation closure outgrew the vertex cap");
                if (g.exact_word_length(child) <= R_test) {
                    if (++covered == target) return true;
                }
                next.push_back(std::move(child));
            }
        }
        frontier.swap(next);
    }
    return false;
}

Fingerprint marked_fingerprint(const MarkedGroup& g, int r, std::uint64_t mem_cap) {
    if (r < 2) throw OutOfRange("fingerprint radius must be >= 2");
    Fingerprint fp;
    fp.growth = growth_sequence(g, r, mem_cap).counts;

    std::vector<Element> points{g.identity()};
    for (const Element& s : g.sigma()) points.push_back(s);
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            fp.distance_multiset.push_back(
                g.exact_word_length(g.multiply(g.inverse(points[i]), points[j])));
    std::sort(fp.distance_multiset.begin(), fp.distance_multiset.end());

    BallTable ball = enumerate_ball(g, r, mem_cap);
    fp.degree_sequence.reserve(ball.size());
    for (const Element& x : ball.elements) {
        std::int32_t deg = 0;
        for (int j = 0; j < g.sigma_size(); ++j)
            if (ball.contains(g.multiply(x, g.generator(j)))) ++deg;
        fp.degree_sequence.push_back(deg);
    }
    std::sort(fp.degree_sequence.begin(), fp.degree_sequence.end());
    return fp;
}

void write_ball_jsonl(const BallTable& ball, std::ostream& out) {
    for (std::size_t i = 0; i < ball.size(); ++i) {
        nlohmann::ordered_json rec;
        rec["nf"] = ball.group.render(ball.elements[i]);
        rec["dist"] = ball.dist[i];
        if (ball.parent[i] < 0) {
            rec["parent"] = nullptr;
            rec["gen"] = nullptr;
        } else {
            rec["parent"] = ball.group.render(ball.elements[static_cast<std::size_t>(ball.parent[i])]);
            rec["gen"] = ball.pgen[i];
        }
        out << rec.dump() << '\n';
    }
}

std::string growth_csv(const GrowthSequence& growth) {
    std::string s = "radius,count\n";
    for (std::size_t r = 0; r < growth.counts.size(); ++r)
        s += std::to_string(r) + "," + growth.counts[r].str() + "\n";
    return s;
}

} // namespace hypgroup
