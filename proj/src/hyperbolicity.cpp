#include "hypgroup/hyperbolicity.hpp"

#include <algorithm>
#include <thread>

#include "hypgroup/rng.hpp"

namespace hypgroup {

namespace {

std::vector<std::uint16_t> distance_matrix(const BallTable& ball) {
    const std::size_t n = ball.size();
    const MarkedGroup& g = ball.group;
    std::vector<std::uint16_t> d(n * n, 0);
    std::vector<Element> inv(n);
    for (std::size_t i = 0; i < n; ++i) inv[i] = g.inverse(ball.elements[i]);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::int64_t len = g.exact_word_length(g.multiply(inv[i], ball.elements[j]));
            d[i * n + j] = d[j * n + i] = static_cast<std::uint16_t>(len);
        }
    }
    return d;
}

std::int64_t pair_defect2(std::int64_t s1, std::int64_t s2, std::int64_t s3) {
    // Largest pairing sum minus the middle one.
    if (s1 < s2) std::swap(s1, s2);
    if (s2 < s3) std::swap(s2, s3);
    if (s1 < s2) std::swap(s1, s2);
    return s1 - s2;
}

struct QuadBest {
    std::int64_t defect2 = -1;
    std::array<std::size_t, 4> idx{0, 0, 0, 0};
    std::uint64_t scanned = 0;

    void offer(std::int64_t d2, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
        if (d2 > defect2) {
            defect2 = d2;
            idx = {i, j, k, l};
        }
    }
    void merge(const QuadBest& other) {
        scanned += other.scanned;
        if (other.defect2 > defect2 || (other.defect2 == defect2 && other.idx < idx))
            *this = QuadBest{other.defect2, other.idx, scanned};
    }
};

QuadBest exact_scan_range(const std::vector<std::uint16_t>& d, std::size_t n, std::size_t i0,
                          std::size_t stride) {
    QuadBest best;
    for (std::size_t i = i0; i < n; i += stride) {
        const std::uint16_t* di = d.data() + i * n;
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::uint16_t* dj = d.data() + j * n;
            const std::int64_t dij = di[j];
            for (std::size_t k = j + 1; k < n; ++k) {
                const std::uint16_t* dk = d.data() + k * n;
                const std::int64_t dik = di[k];
                const std::int64_t djk = dj[k];
                for (std::size_t l = k + 1; l < n; ++l) {
                    const std::int64_t s1 = dij + dk[l];
                    const std::int64_t s2 = dik + dj[l];
                    const std::int64_t s3 = di[l] + djk;
                    ++best.scanned;
                    best.offer(pair_defect2(s1, s2, s3), i, j, k, l);
                }
            }
        }
    }
    return best;
}

// Each sample is a pure function of (seed, sample index) so the drawn set
// does not depend on how samples are split across threads.
Rng sample_rng(std::uint64_t seed, std::uint64_t sample) {
    std::uint64_t state = seed;
    splitmix64_next(state);
    state += 0x9e3779b97f4a7c15ULL * (sample + 1);
    return Rng(splitmix64_next(state));
}

// Vertices of the stored geodesic from `from` to `to`; they may leave the
// enumerated ball (they stay within radius 2R), so they are returned as
// elements rather than ball indices. Only the quotient from^-1 to must be
// enumerated.
std::vector<Element> side_vertices(const BallTable& ball, const Element& from,
                                   const Element& to) {
    const MarkedGroup& g = ball.group;
    Element q = g.multiply(g.inverse(from), to);
    std::vector<int> word = geodesic(ball, q);  // OutOfRange if q not enumerated
    std::vector<Element> path;
    path.reserve(word.size() + 1);
    Element at = from;
    path.push_back(at);
    for (int j : word) {
        at = g.multiply(at, g.generator(j));
        path.push_back(at);
    }
    return path;
}

} // namespace

std::string half_integer_string(std::int64_t twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

double gromov_product(double d_xy, double d_xz, double d_yz) {
    if (d_xy < 0 || d_xz < 0 || d_yz < 0)
        throw TriangleViolation("negative distance");
    if (d_xy > d_xz + d_yz || d_xz > d_xy + d_yz || d_yz > d_xy + d_xz)
        throw TriangleViolation("distances violate the triangle inequality");
    return (d_xy + d_xz - d_yz) / 2.0;
}

DefectReport four_point_defect(const BallTable& ball, const DefectMode& mode,
                               std::size_t exact_cap, int threads) {
    const std::size_t n = ball.size();
    DefectReport rep;
    rep.exact_mode = mode.exact;
    rep.seed = mode.seed;
    if (threads < 1) threads = 1;

    if (n < 4) {
        for (auto& w : rep.witness) w = "";
        return rep;
    }

    QuadBest best;
    if (mode.exact) {
        if (n > exact_cap)
            throw CapExceeded("ball of " + std::to_string(n) + " vertices exceeds the exact cap " +
                              std::to_string(exact_cap) + "; use sampled mode");
        std::vector<std::uint16_t> d = distance_matrix(ball);
        if (threads == 1) {
            best = exact_scan_range(d, n, 0, 1);
        } else {
            std::vector<QuadBest> parts(static_cast<std::size_t>(threads));
            std::vector<std::thread> pool;
            for (int w = 0; w < threads; ++w)
                pool.emplace_back([&, w] {
                    parts[static_cast<std::size_t>(w)] =
                        exact_scan_range(d, n, static_cast<std::size_t>(w),
                                         static_cast<std::size_t>(threads));
                });
            for (auto& th : pool) th.join();
            best.defect2 = -1;
            for (const QuadBest& p : parts) best.merge(p);
        }
    } else {
        rep.lower_bound_only = true;
        const MarkedGroup& g = ball.group;
        auto dist = [&](std::size_t a, std::size_t b) {
            return g.exact_word_length(g.multiply(g.inverse(ball.elements[a]), ball.elements[b]));
        };
        auto run = [&](std::uint64_t s0, std::uint64_t s1) {
            QuadBest local;
            for (std::uint64_t s = s0; s < s1; ++s) {
                Rng rng = sample_rng(mode.seed, s);
                std::array<std::size_t, 4> q;
                for (int t = 0; t < 4; ++t) {
                    for (;;) {
                        std::size_t cand = rng.next_below(n);
                        bool dup = false;
                        for (int u = 0; u < t; ++u) dup |= (q[static_cast<std::size_t>(u)] == cand);
                        if (!dup) {
                            q[static_cast<std::size_t>(t)] = cand;
                            break;
                        }
                    }
                }
                std::sort(q.begin(), q.end());
                std::int64_t s1p = dist(q[0], q[1]) + dist(q[2], q[3]);
                std::int64_t s2p = dist(q[0], q[2]) + dist(q[1], q[3]);
                std::int64_t s3p = dist(q[0], q[3]) + dist(q[1], q[2]);
                ++local.scanned;
                local.offer(pair_defect2(s1p, s2p, s3p), q[0], q[1], q[2], q[3]);
            }
            return local;
        };
        if (threads == 1) {
            best = run(0, mode.samples);
        } else {
            std::vector<QuadBest> parts(static_cast<std::size_t>(threads));
            std::vector<std::thread> pool;
            std::uint64_t chunk = (mode.samples + static_cast<std::uint64_t>(threads) - 1) /
                                  static_cast<std::uint64_t>(threads);
            for (int w = 0; w < threads; ++w) {
                std::uint64_t s0 = chunk * static_cast<std::uint64_t>(w);
                std::uint64_t s1 = std::min(mode.samples, s0 + chunk);
                pool.emplace_back([&, w, s0, s1] {
                    parts[static_cast<std::size_t>(w)] = run(s0, std::max(s0, s1));
                });
            }
            for (auto& th : pool) th.join();
            best.defect2 = -1;
            for (const QuadBest& p : parts) best.merge(p);
        }
    }

    rep.defect2 = std::max<std::int64_t>(best.defect2, 0);
    rep.scanned = best.scanned;
    rep.witness_index = best.idx;
    for (int t = 0; t < 4; ++t)
        rep.witness[static_cast<std::size_t>(t)] =
            ball.group.render(ball.elements[best.idx[static_cast<std::size_t>(t)]]);
    return rep;
}

TripodReport thin_triangle_insize(const BallTable& ball, const Element& x, const Element& y,
                                  const Element& z) {
    const MarkedGroup& g = ball.group;
    TripodReport rep;
    rep.triple = {g.render(x), g.render(y), g.render(z)};

    std::int64_t dxy = g.exact_word_length(g.multiply(g.inverse(x), y));
    std::int64_t dxz = g.exact_word_length(g.multiply(g.inverse(x), z));
    std::int64_t dyz = g.exact_word_length(g.multiply(g.inverse(y), z));
    rep.legs2 = {dxy + dxz - dyz, dxy + dyz - dxz, dxz + dyz - dxy};

    if (x == y || x == z || y == z) {
        rep.degenerate = true;
        rep.witness_v = rep.witness_w = g.render(x);
        return rep;
    }

    std::vector<Element> sxy = side_vertices(ball, x, y);
    std::vector<Element> sxz = side_vertices(ball, x, z);
    std::vector<Element> syz = side_vertices(ball, y, z);

    auto dist = [&](const Element& a, const Element& b) {
        return g.exact_word_length(g.multiply(g.inverse(a), b));
    };
    Element wv = x, ww = x;
    std::int64_t insize = 0;
    std::uint64_t pairs = 0;
    auto scan_corner = [&](const std::vector<Element>& side_a, const std::vector<Element>& side_b,
                           std::int64_t leg2, bool a_fwd, bool b_fwd) {
        std::int64_t tmax = leg2 / 2;  // half-integer legs floored
        for (std::int64_t t = 0; t <= tmax; ++t) {
            const Element& va = a_fwd ? side_a[static_cast<std::size_t>(t)]
                                      : side_a[side_a.size() - 1 - static_cast<std::size_t>(t)];
            const Element& vb = b_fwd ? side_b[static_cast<std::size_t>(t)]
                                      : side_b[side_b.size() - 1 - static_cast<std::size_t>(t)];
            ++pairs;
            std::int64_t dv = dist(va, vb);
            if (dv > insize) {
                insize = dv;
                wv = va;
                ww = vb;
            }
        }
    };
    scan_corner(sxy, sxz, rep.legs2[0], true, true);    // matched from x
    scan_corner(sxy, syz, rep.legs2[1], false, true);   // matched from y
    scan_corner(sxz, syz, rep.legs2[2], false, false);  // matched from z

    rep.insize = insize;
    rep.matched_pairs = pairs;
    rep.witness_v = g.render(wv);
    rep.witness_w = g.render(ww);
    return rep;
}

std::int64_t slim_insize(const BallTable& ball, const Element& x, const Element& y,
                         const Element& z) {
    const MarkedGroup& g = ball.group;
    std::vector<Element> sides[3] = {side_vertices(ball, x, y), side_vertices(ball, x, z),
                                     side_vertices(ball, y, z)};
    auto dist = [&](const Element& a, const Element& b) {
        return g.exact_word_length(g.multiply(g.inverse(a), b));
    };
    std::int64_t worst = 0;
    for (int s = 0; s < 3; ++s) {
        const auto& own = sides[s];
        const auto& o1 = sides[(s + 1) % 3];
        const auto& o2 = sides[(s + 2) % 3];
        for (const Element& u : own) {
            std::int64_t best = -1;
            for (const Element& v : o1) {
                std::int64_t dv = dist(u, v);
                if (best < 0 || dv < best) best = dv;
            }
            for (const Element& v : o2) {
                std::int64_t dv = dist(u, v);
                if (best < 0 || dv < best) best = dv;
            }
            worst = std::max(worst, best);
        }
    }
    return worst;
}

ProjectionReport projection_defect(const BallTable& ball, std::uint64_t seed,
                                   std::uint64_t samples) {
    if (ball.radius < 2) throw OutOfRange("projection defect needs ball radius >= 2");
    const MarkedGroup& g = ball.group;
    const std::size_t n = ball.size();
    ProjectionReport rep;
    rep.seed = seed;
    rep.samples = samples;
    auto dist = [&](const Element& a, const Element& b) {
        return g.exact_word_length(g.multiply(g.inverse(a), b));
    };
    for (std::uint64_t s = 0; s < samples; ++s) {
        Rng rng = sample_rng(seed, s);
        const Element& a = ball.elements[rng.next_below(n)];
        const Element& b = ball.elements[rng.next_below(n)];
        Element q = g.multiply(g.inverse(a), b);
        if (!ball.contains(q)) continue;  // geodesic not available in this table
        std::vector<Element> side = side_vertices(ball, a, b);
        const Element& y = side[rng.next_below(side.size())];
        const Element& x = ball.elements[rng.next_below(n)];
        ++rep.used;
        const Element* proj = &side[0];
        std::int64_t dproj = dist(x, side[0]);
        for (std::size_t t = 1; t < side.size(); ++t) {
            std::int64_t dt = dist(x, side[t]);
            if (dt < dproj) {
                dproj = dt;
                proj = &side[t];
            }
        }
        std::int64_t d2 = dproj + dist(*proj, y) - dist(x, y);
        if (d2 > rep.defect2) {
            rep.defect2 = d2;
            rep.witness_x = g.render(x);
            rep.witness_y = g.render(y);
            rep.witness_a = g.render(a);
            rep.witness_b = g.render(b);
            rep.witness_proj = g.render(*proj);
        }
    }
    return rep;
}

} // namespace hypgroup
