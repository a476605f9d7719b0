#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "hypgroup/bigvalue.hpp"
#include "hypgroup/marked_group.hpp"

namespace hypgroup {

inline constexpr std::uint64_t kDefaultMemCap = 4ull << 30;  // 4 GiB
inline constexpr std::uint64_t kDefaultVertexCap = 5000000;

// Exact enumeration of B(e,R): elements in BFS order, spheres contiguous,
// with one lexicographically-least geodesic parent link per element.
struct BallTable {
    explicit BallTable(MarkedGroup g) : group(std::move(g)) {}

    MarkedGroup group;
    int radius = 0;
    std::vector<Element> elements;           // BFS order; identity first
    std::vector<std::uint32_t> dist;         // word length per element
    std::vector<std::int64_t> parent;        // index of predecessor; -1 for identity
    std::vector<std::int32_t> pgen;          // generator index applied at parent; -1 for identity
    std::vector<std::size_t> sphere_start;   // sphere r occupies [start[r], start[r+1])
    std::unordered_map<std::string, std::size_t> index;  // element key -> position

    std::size_t size() const { return elements.size(); }
    bool contains(const Element& g) const;
    std::size_t find(const Element& g) const;  // OutOfRange when absent
    std::size_t sphere_size(int r) const;
};

BallTable enumerate_ball(const MarkedGroup& g, int R, std::uint64_t mem_cap = kDefaultMemCap);

std::int64_t word_length(const BallTable& ball, const Element& g);
// Generator indices of the stored lexicographically-least geodesic from e to g.
std::vector<int> geodesic(const BallTable& ball, const Element& g);

struct GrowthSequence {
    enum class Source { Enumerated, ClosedForm };
    std::vector<BigInt> counts;  // counts[r] = |B(e,r)|
    Source source = Source::Enumerated;
};

// Ball counts by full enumeration. Stores only visited keys plus the current
// frontier; free models walk their (tree) Cayley graph without a visited set.
GrowthSequence enumerated_growth(const MarkedGroup& g, int R,
                                 std::uint64_t mem_cap = kDefaultMemCap);
// Unsupported for ZGens and FProd.
GrowthSequence closed_form_growth(const MarkedGroup& g, int R);
// Closed form when available, enumeration otherwise.
GrowthSequence growth_sequence(const MarkedGroup& g, int R,
                               std::uint64_t mem_cap = kDefaultMemCap);

// True iff B(e,R_test) lies in the subgroup closure of `subset`, explored
// within a word-length window; NotSymmetric when the subset is not closed
// under inverses, CapExceeded when the window scan outgrows vertex_cap.
bool generates_within(const MarkedGroup& g, const std::vector<Element>& subset, int R_test,
                      std::uint64_t vertex_cap = kDefaultVertexCap);

struct Fingerprint {
    std::vector<BigInt> growth;                    // |B(e,0..r)|
    std::vector<std::int64_t> distance_multiset;   // sorted pairwise distances over Sigma+{e}
    std::vector<std::int32_t> degree_sequence;     // sorted degrees of the ball-r graph

    bool operator==(const Fingerprint&) const = default;
};

Fingerprint marked_fingerprint(const MarkedGroup& g, int r,
                               std::uint64_t mem_cap = kDefaultMemCap);

// One JSON object per element: {"nf":..., "dist":..., "parent":..., "gen":...}.
void write_ball_jsonl(const BallTable& ball, std::ostream& out);
std::string growth_csv(const GrowthSequence& growth);

} // namespace hypgroup
