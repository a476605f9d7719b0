#include "hypgroup/corpus.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <sstream>
#include <utility>

#include "hypgroup/ball.hpp"
#include "hypgroup/cli.hpp"
#include "hypgroup/constants.hpp"
#include "hypgroup/displacement.hpp"
#include "hypgroup/entropy.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/hyperbolicity.hpp"
#include "hypgroup/marked_group.hpp"
#include "hypgroup/presentations.hpp"
#include "hypgroup/rng.hpp"

namespace hypgroup {

namespace {

using Clock = std::chrono::steady_clock;

class Crit {
  public:
    void require(bool ok, const std::string& msg) {
        if (ok) return;
        pass_ = false;
        if (fail_messages_ < 3) {
            if (!fails_.empty()) fails_ += "; ";
            fails_ += msg;
        }
        ++fail_messages_;
    }
    void info(std::string msg) { info_ = std::move(msg); }
    bool pass() const { return pass_; }
    std::string detail() const {
        if (pass_) return info_;
        std::string out = fails_;
        if (fail_messages_ > 3) out += "; (+" + std::to_string(fail_messages_ - 3) + " more)";
        return out;
    }

  private:
    bool pass_ = true;
    int fail_messages_ = 0;
    std::string fails_;
    std::string info_;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

void c1_free_growth(Crit& c, int) {
    for (long long k = 1; k <= 3; ++k) {
        MarkedGroup g = MarkedGroup::build("free(" + std::to_string(k) + ")");
        GrowthSequence enumerated = enumerated_growth(g, 10);
        GrowthSequence closed = closed_form_growth(g, 300);
        c.require(enumerated.counts.size() == 11 && closed.counts.size() == 301,
                  "growth sequences must cover the requested radii");
        c.require(enumerated.counts[0] == 1 && closed.counts[0] == 1, "|B(0)| must be 1");
        BigInt ball = 1;
        BigInt sphere = 2 * k;
        for (int R = 1; R <= 300; ++R) {
            ball += sphere;  // sphere R has 2k(2k-1)^(R-1) elements
            if (closed.counts[static_cast<std::size_t>(R)] != ball) {
                c.require(false, "closed-form ball mismatch at k=" + std::to_string(k) +
                                     ", R=" + std::to_string(R));
                break;
            }
            if (R <= 10 && enumerated.counts[static_cast<std::size_t>(R)] != ball) {
                c.require(false, "enumerated ball mismatch at k=" + std::to_string(k) +
                                     ", R=" + std::to_string(R));
                break;
            }
            sphere *= 2 * k - 1;
        }
    }
    c.info("sphere sizes equal 2k(2k-1)^(R-1) for k<=3: enumeration to R=10, closed form to R=300");
}

void c2_free_entropy(Crit& c, int) {
    for (int i : {2, 3, 4}) {
        MarkedGroup g = MarkedGroup::build("free(" + std::to_string(i) + ")");
        EntropyEstimate est = entropy_estimate(growth_sequence(g, 14), 5);
        double target = std::log(2.0 * i - 1.0);
        for (int R = 2; R <= 14; ++R)
            c.require(std::fabs(est.diff[static_cast<std::size_t>(R)] - target) <= 1e-12,
                      "diff off ln(2i-1) at i=" + std::to_string(i) + ", R=" + std::to_string(R));
    }
    c.info("sphere-ratio diff equals ln(2i-1) within 1e-12 for i in {2,3,4}, R in [2,14]");
}

std::string z_spec(int n) {
    std::string s = "z(1";
    for (int v = 2; v <= n; ++v) s += "," + std::to_string(v);
    return s + ")";
}

void c3_zgens_defect(Crit& c, int threads) {
    std::string seen;
    for (int n = 1; n <= 5; ++n) {
        MarkedGroup g = MarkedGroup::build(z_spec(n));
        BallTable ball = enumerate_ball(g, 8);
        DefectReport rep = four_point_defect(ball, DefectMode{}, 150, threads);
        c.require(rep.defect() <= 3.0,
                  "four-point defect exceeds 3 for n=" + std::to_string(n));
        if (n == 1)
            c.require(rep.defect2 == 0, "defect must be 0 for n=1");
        else
            c.require(rep.defect2 == 1, "regression: doubled defect must be 1 for n=" + std::to_string(n));
        if (!seen.empty()) seen += ",";
        seen += half_integer_string(rep.defect2);
    }
    c.info("exact B(0,8) defects for n=1..5: " + seen + " (all <= 3, zero for n=1)");
}

void c4_zgens_entropy(Crit& c, int) {
    for (int n = 1; n <= 5; ++n) {
        MarkedGroup g = MarkedGroup::build(z_spec(n));
        EntropyEstimate est = entropy_estimate(growth_sequence(g, 12), 4);
        c.require(est.diff[12] <= 0.2, "diff at R=12 exceeds 0.2 for n=" + std::to_string(n));
        for (int R = 3; R <= 12; ++R)
            c.require(est.diff[static_cast<std::size_t>(R)] <=
                          est.diff[static_cast<std::size_t>(R - 1)] + 1e-9,
                      "diff must not increase, n=" + std::to_string(n) + ", R=" + std::to_string(R));
    }
    c.info("diff <= 0.2 at R=12 and nonincreasing over R in [2,12] for n=1..5");
}

void c5_z2_trend(Crit& c, int threads) {
    MarkedGroup g = MarkedGroup::build("zpow(2)");
    const int radii[3] = {2, 4, 6};
    const std::int64_t frozen2[3] = {4, 8, 12};  // doubled defects from the exact scan
    std::int64_t got[3] = {0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        BallTable ball = enumerate_ball(g, radii[i]);
        DefectReport rep = four_point_defect(ball, DefectMode{}, 150, threads);
        got[i] = rep.defect2;
        c.require(rep.defect2 == frozen2[i],
                  "regression: doubled defect at R=" + std::to_string(radii[i]) + " must be " +
                      std::to_string(frozen2[i]) + ", got " + std::to_string(rep.defect2));
    }
    c.require(got[0] < got[1] && got[1] < got[2], "defect must strictly increase over R=2,4,6");
    c.info("defects 2,4,6 at R=2,4,6: strictly increasing, matching the frozen exact scan");
}

void c6_bishop_gromov(Crit& c, int) {
    MarkedGroup g = MarkedGroup::build("free(2)");
    GrowthSequence gs = closed_form_growth(g, 300);

    BgReport good = bg_check(gs, {0.01, std::log(3.0), 1.0});
    c.require(good.pass && good.fail_count == 0, "H=ln 3 control must pass every pair");
    c.require(good.pairs == 41905, "pair count over 11 <= r < R <= 300 must be 41905");
    c.require(good.worst.r == 11 && good.worst.R == 12, "tightest pair must be (11,12)");
    c.require(std::fabs(good.worst_margin - 21.637175166932927) < 1e-6,
              "frozen worst log-margin at H=ln 3");

    // An understated H only breaks the bound once 6H drops below the growth
    // rate; H=0.5 still satisfies it (checked), H=0.05 is a true negative.
    BgReport half = bg_check(gs, {0.01, 0.5, 1.0});
    c.require(half.pass, "H=0.5 still satisfies the bound (6H > ln 3)");
    c.require(std::fabs(half.worst_margin - 10.14381922450522) < 1e-6,
              "frozen worst log-margin at H=0.5");

    BgReport bad = bg_check(gs, {0.01, 0.05, 1.0});
    c.require(!bad.pass, "H=0.05 negative control must fail");
    c.require(bad.fail_count > 30000, "H=0.05 must fail on most pairs");
    c.require(bad.worst.r == 11 && bad.worst.R == 300, "worst failing pair must be (11,300)");
    c.require(bad.worst_margin < -200.0, "worst failing log-margin must be < -200");

    c.info("ratio bound holds for all 41905 pairs at H=ln 3 (min margin 21.64) and at H=0.5 "
           "(min margin 10.14); understated H=0.05 fails " + std::to_string(bad.fail_count) +
           " pairs (worst margin " + fmt(bad.worst_margin) + " at r=11,R=300)");
}

void c7_qi_chain(Crit& c, int) {
    for (int i = 1; i <= 100; ++i) {
        for (int j = 1; j <= 100; ++j) {
            double delta = i / 10.0;
            double D = j / 10.0;
            double lhs = qi_delta(8 * D, 26 * D, 1.25, 32.5 * D, delta);
            double rhs = 16.0 * (delta / D + 2.0);
            c.require(lhs <= rhs * (1.0 + 1e-12),
                      "qi_delta chain fails at delta=" + fmt(delta) + ", D=" + fmt(D));
        }
    }
    for (int k = 0; k <= 900; ++k) {
        double lambda = 1.0 + k / 100.0;
        c.require((4.0 * lambda + 3.0) / (6.0 * lambda + 2.0) < 1.0,
                  "(4L+3)/(6L+2) must be < 1 at L=" + fmt(lambda));
    }
    c.info("qi_delta(8D,26D,5/4,65D/2,delta) <= 16(delta/D+2) on the 100x100 grid; "
           "(4L+3)/(6L+2) < 1 on [1,10]");
}

void c8_sandwich(Crit& c, int) {
    SandwichReport rep = sandwich_check(8, 1.0, 200);
    c.require(rep.checked == 200, "must check all lengths 1..200");
    c.require(rep.pass, "sandwich inequalities must hold exhaustively (first fail at |g|=" +
                            std::to_string(rep.first_fail) + ")");
    c.info("kD(d'-1) <= |g| <= (k+2)D d' holds for k=8, D=1, all |g| in 1..200");
}

void c9_presentations(Crit& c, int) {
    for (long long k = 1; k <= 3; ++k)
        for (long long p = 0; p <= 6; ++p) {
            auto words = free_ball_enumerate(k, p, 2000000);
            c.require(free_ball_count(k, p).int_value() == BigInt(words.size()),
                      "count formula must equal enumeration at k=" + std::to_string(k) +
                          ", p=" + std::to_string(p));
        }
    for (long long k = 1; k <= 8; ++k)
        for (long long p = 3; p <= 10; ++p) {
            c.require(verify_ball_bound(k, p), "ball bound fails at k=" + std::to_string(k) +
                                                   ", p=" + std::to_string(p));
            c.require(count_presentations(k, p).leq,
                      "presentation count must stay under its cap at k=" + std::to_string(k) +
                          ", p=" + std::to_string(p));
        }
    c.require(presentation_count_bound(1, 3).int_value() == 257,
              "presentation_count_bound(1,3) must be 257");
    BigInt expected = BigInt(257) + (BigInt(1) << 64);
    c.require(presentation_count_bound(2, 3).int_value() == expected,
              "presentation_count_bound(2,3) must be 257 + 2^64");
    c.info("census formula = enumeration (k<=3,p<=6); bound and cap hold on k<=8,p in [3,10]; "
           "q(1,3)=257 and q(2,3)=257+2^64 exact");
}

void c10_displacement_oracle(Crit& c, int) {
    MarkedGroup g = MarkedGroup::build("free(2)");
    Rng rng(0);
    for (int t = 0; t < 100; ++t) {
        int len = static_cast<int>(rng.next_below(13));
        Element w = g.identity();
        int prev = -1;
        for (int s = 0; s < len; ++s) {
            int letter;
            if (prev < 0) {
                letter = static_cast<int>(rng.next_below(4));
            } else {
                int forbidden = g.inverse_generator(prev);
                int pick = static_cast<int>(rng.next_below(3));
                letter = -1;
                for (int l = 0; l < 4; ++l) {
                    if (l == forbidden) continue;
                    if (pick == 0) {
                        letter = l;
                        break;
                    }
                    --pick;
                }
            }
            w = g.multiply(w, g.generator(letter));
            prev = letter;
        }

        long long crl = cyclically_reduced_length(g, w);
        DisplacementReport rep = asymptotic_displacement(g, w, 12);
        c.require(rep.stabilized, "ell_diff must stabilize for word " + std::to_string(t));
        c.require(rep.ell_diff == crl, "ell_diff must equal the cyclically reduced length, word " +
                                           std::to_string(t));
        DisplacementReport mind = minimal_displacement(g, w, 6);
        c.require(mind.s_min == crl, "s_min over B(6) must equal the cyclically reduced length, "
                                     "word " + std::to_string(t));
    }
    c.info("100 seeded words of length <= 12: stabilized ell_diff = cyclic reduction = s_min over "
           "B(6) (conjugation tails <= 6), all exact");
}

void c11_torsion_product(Crit& c, int threads) {
    MarkedGroup g = MarkedGroup::build("prod(free(2),cyclic(5))");
    EntropyEstimate est = entropy_estimate(growth_sequence(g, 14), 4);
    c.require(std::fabs(est.diff[14] - std::log(3.0)) <= 0.01,
              "diff at R=14 must be within 0.01 of ln 3, got " + fmt(est.diff[14]));

    BallTable ball = enumerate_ball(g, 4);
    c.require(ball.size() == 373, "|B(4)| must be 373, got " + std::to_string(ball.size()));
    DefectReport rep = four_point_defect(ball, DefectMode{}, 400, threads);
    c.require(rep.defect() <= 2.0,
              "four-point defect of B(4) must be <= 2, got " + half_integer_string(rep.defect2));
    c.info("diff(R=14) = " + fmt(est.diff[14]) + " (ln 3 = " + fmt(std::log(3.0)) +
           "); exact four-point defect of B(4) (373 vertices) = " + half_integer_string(rep.defect2));
}

void c12_fingerprints(Crit& c, int) {
    MarkedGroup a = MarkedGroup::build("fprod(z(1),z(2,3))");
    MarkedGroup b = MarkedGroup::build("fprod(z(1),z(3,4))");
    MarkedGroup f2 = MarkedGroup::build("fprod(z(1),z(1))");

    Fingerprint fa = marked_fingerprint(a, 4);
    Fingerprint fb = marked_fingerprint(b, 4);
    Fingerprint fc = marked_fingerprint(f2, 4);
    c.require(!(fa == fb), "fingerprints of the (2,3) and (3,4) markings must differ");
    c.require(!(fa == fc), "fingerprints of the (2,3) and standard markings must differ");
    c.require(!(fb == fc), "fingerprints of the (3,4) and standard markings must differ");

    auto balls = [](std::initializer_list<long long> v) {
        std::vector<BigInt> out;
        for (long long x : v) out.emplace_back(x);
        return out;
    };
    c.require(fa.growth == balls({1, 7, 33, 137, 569}), "frozen growth of the (2,3) marking");
    c.require(fb.growth == balls({1, 7, 33, 143, 601}), "frozen growth of the (3,4) marking");
    c.require(fc.growth == balls({1, 5, 17, 53, 161}), "frozen growth of the standard marking");

    const double ln11 = std::log(11.0);
    const double ln3 = std::log(3.0);
    std::string uppers;
    for (const MarkedGroup* g : {&a, &b, &f2}) {
        EntropyBracket br = fprod_entropy(*g);
        c.require(br.lower >= 0.0 && br.lower <= br.upper + 1e-12,
                  "entropy bracket must be ordered for " + g->name());
        c.require(br.upper < ln11, "entropy bracket must lie below ln 11 for " + g->name());
        if (!uppers.empty()) uppers += ",";
        uppers += fmt(br.upper);
    }
    EntropyBracket std_bracket = fprod_entropy(f2);
    c.require(std_bracket.lower <= ln3 + 1e-9 && ln3 <= std_bracket.upper + 1e-9,
              "standard marking bracket must contain ln 3");
    c.info("fingerprints at r=4 separate all three markings; entropy bracket uppers " + uppers +
           " all below ln 11 = " + fmt(ln11));
}

void c13_scaled_entropy(Crit& c, int) {
    for (int i = 1; i <= 20; ++i)
        c.require(scaled_entropy(std::log(2.0 * i - 1.0), i) <= 1.0,
                  "ln(2i-1)/i must be <= 1 at i=" + std::to_string(i));
    c.info("ln(2i-1)/i <= 1 for i in 1..20");
}

void c14_constants_suite(Crit& c, int) {
    const std::pair<double, double> pairs[] = {{0.0, 1.0}, {0.01, 1.0}, {1.5, 2.0}, {0.3, 0.7}};
    for (auto [d, D] : pairs)
        c.require(floor_numerator_identity(d, D).exact,
                  "numerator identity must hold exactly at delta=" + fmt(d) + ", D=" + fmt(D));

    AbsorptionReport ab = absorption_check();
    c.require(ab.pass_exact, "81*2^25 <= 3^20 must hold exactly");
    c.require(ab.pass_double, "3*2^(25/4) <= 243 must hold");

    NuCeil nu_ceil;
    NTriple t = n0_n1_n2({0.25, 0.01, 2.0}, nu_ceil);
    c.require(t.n2_inner_delta == 16.0 * (0.25 / 2.0 + 2.0),
              "third value must substitute delta' = 16(delta/D + 2)");
    c.require(t.n2_inner_H == 10.0 * 0.01 * 2.0, "third value must substitute H' = 10HD");
    NTriple t1 = n0_n1_n2({0.25, 0.01, 1.0}, nu_ceil);
    c.require(t.n1.compare(t1.n0) == 0, "second value must equal the first at D=1");

    ConstantsInput tiny{0.0, 1e-300, 1.0};
    c.require(n_generators_bound(tiny, nu_ceil).int_value() == 238383,
              "N(ceil) at delta=0, H->0, D=1 must be 238383");
    NuPoly nu_one(1.0, 0.0);
    c.require(std::fabs(displacement_floor(tiny, nu_one) - 10.0 / 3.0) < 1e-12,
              "floor with constant census 1 must be 10/3");
    NTriple ones = n0_n1_n2(tiny, nu_one);
    c.require(ones.n0.exact(), "N0 must be exact for the 14-term sum");
    c.require(std::fabs(to_double(ones.n0.log2()) - 308915776.0) < 1e-6,
              "log2 of N0 must be 26^6 = 308915776");

    ordered_json rep = constants_report_json({0.01, 0.7, 1.0}, nu_ceil);
    for (const char* key : {"n_generators_bound", "n0", "n1", "n2", "displacement_floor",
                            "decrire_bound"})
        c.require(rep.contains(key) && rep[key]["provenance"] == kProvenanceConsistency,
                  std::string("census-dependent output must carry the consistency label: ") + key);
    for (const char* key : {"qi_delta", "qi_c1_c2", "stability_bound", "relator_length_bound",
                            "qi_space_constants", "absorption", "numerator_identity", "sandwich"})
        c.require(rep.contains(key) && rep[key]["provenance"] == kProvenancePaperExact,
                  std::string("pure-formula output must be labeled paper-exact: ") + key);
    c.require(rep["nu"]["provenance"] == NuFn::provenance(),
              "census function must be flagged as a placeholder");
    c.info("numerator identity exact; 81*2^25 <= 3^20; substitution wiring captured; N=238383 and "
           "N0 log2 = 26^6 frozen; provenance labels verified");
}

CriterionResult run_one(int id, const std::string& name, double budget, int threads,
                        const std::function<void(Crit&, int)>& fn) {
    CriterionResult res;
    res.id = id;
    res.name = name;
    Crit crit;
    auto t0 = Clock::now();
    try {
        fn(crit, threads);
    } catch (const std::exception& ex) {
        crit.require(false, std::string("exception: ") + ex.what());
    }
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (budget > 0)
        crit.require(res.seconds < budget,
                     "time budget of " + fmt(budget) + "s exceeded (" + fmt(res.seconds) + "s)");
    res.pass = crit.pass();
    res.detail = crit.detail();
    return res;
}

} // namespace

CorpusReport corpus_run(int threads) {
    if (threads < 1) threads = 1;
    CorpusReport report;
    auto t0 = Clock::now();
    report.results.push_back(run_one(1, "free-growth", 10.0, threads, c1_free_growth));
    report.results.push_back(run_one(2, "free-entropy", 10.0, threads, c2_free_entropy));
    report.results.push_back(run_one(3, "z-marking-defect", 60.0, threads, c3_zgens_defect));
    report.results.push_back(run_one(4, "z-marking-entropy", 0.0, threads, c4_zgens_entropy));
    report.results.push_back(run_one(5, "z2-defect-trend", 0.0, threads, c5_z2_trend));
    report.results.push_back(run_one(6, "bishop-gromov", 5.0, threads, c6_bishop_gromov));
    report.results.push_back(run_one(7, "qi-chain", 0.0, threads, c7_qi_chain));
    report.results.push_back(run_one(8, "tree-sandwich", 0.0, threads, c8_sandwich));
    report.results.push_back(run_one(9, "presentation-census", 0.0, threads, c9_presentations));
    report.results.push_back(run_one(10, "displacement-oracle", 0.0, threads, c10_displacement_oracle));
    report.results.push_back(run_one(11, "torsion-product", 0.0, threads, c11_torsion_product));
    report.results.push_back(run_one(12, "marking-fingerprints", 0.0, threads, c12_fingerprints));
    report.results.push_back(run_one(13, "scaled-entropy", 0.0, threads, c13_scaled_entropy));
    report.results.push_back(run_one(14, "constants-suite", 0.0, threads, c14_constants_suite));
    report.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    report.all_pass = true;
    for (const auto& r : report.results) report.all_pass = report.all_pass && r.pass;
    return report;
}

} // namespace hypgroup
