#include "hypgroup/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "hypgroup/corpus.hpp"
#include "hypgroup/displacement.hpp"
#include "hypgroup/entropy.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/hyperbolicity.hpp"
#include "hypgroup/presentations.hpp"
#include "hypgroup/rng.hpp"

namespace hypgroup {

namespace {

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DomainError("cannot open output file: " + out_path);
    out << text;
}

void emit_json(const ordered_json& doc, const std::string& out_path) {
    emit_text(doc.dump(2) + "\n", out_path);
}

std::vector<std::string> counts_to_strings(const std::vector<BigInt>& counts) {
    std::vector<std::string> out;
    out.reserve(counts.size());
    for (const auto& c : counts) out.push_back(c.str());
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

std::string entropy_csv(const GrowthSequence& growth, const EntropyEstimate& est) {
    std::string out = "R,count,cumulative,diff\n";
    for (std::size_t r = 0; r < growth.counts.size(); ++r) {
        out += std::to_string(r) + "," + growth.counts[r].str() + "," +
               format_double(est.cumulative[r]) + "," + format_double(est.diff[r]) + "\n";
    }
    return out;
}

} // namespace

Element parse_element(const MarkedGroup& g, const std::string& text) {
    std::unordered_map<std::string, int> names;
    for (int i = 0; i < g.sigma_size(); ++i) names.emplace(g.generator_name(i), i);
    std::istringstream is(text);
    std::string tok;
    Element acc = g.identity();
    bool any = false;
    while (is >> tok) {
        any = true;
        if (tok == "e") continue;
        auto it = names.find(tok);
        if (it == names.end()) throw DomainError("unknown generator name: " + tok);
        acc = g.multiply(acc, g.generator(it->second));
    }
    if (!any) throw DomainError("element text must name generators or e");
    return acc;
}

ordered_json constants_report_json(const ConstantsInput& in, const NuFn& nu) {
    validate(in);
    ordered_json rep;
    rep["schema"] = 1;
    rep["command"] = "constants";
    rep["inputs"] = {{"delta", in.delta}, {"entropy", in.H}, {"diam", in.D}};
    rep["nu"] = {{"spec", nu.describe()}, {"provenance", NuFn::provenance()}};

    BigValue n = n_generators_bound(in, nu);
    rep["n_generators_bound"] = {{"value", n.str()},
                                 {"log2", to_double(n.log2())},
                                 {"exact", n.exact()},
                                 {"provenance", kProvenanceConsistency}};

    NTriple triple = n0_n1_n2(in, nu);
    auto big_entry = [](const BigValue& v) {
        return ordered_json{{"value", v.str()}, {"log2", to_double(v.log2())}, {"exact", v.exact()}};
    };
    rep["n0"] = big_entry(triple.n0);
    rep["n0"]["provenance"] = kProvenanceConsistency;
    rep["n1"] = big_entry(triple.n1);
    rep["n1"]["provenance"] = kProvenanceConsistency;
    rep["n2"] = big_entry(triple.n2);
    rep["n2"]["inner_delta"] = triple.n2_inner_delta;
    rep["n2"]["inner_entropy"] = triple.n2_inner_H;
    rep["n2"]["provenance"] = kProvenanceConsistency;

    rep["displacement_floor"] = {{"value", displacement_floor(in, nu)},
                                 {"provenance", kProvenanceConsistency}};

    double R = 2.5 * (in.D + 4.0 * in.delta);
    rep["decrire_bound"] = {{"R", R},
                            {"value", decrire_bound(R, in.delta, in.H, nu)},
                            {"provenance", kProvenanceConsistency}};

    NumeratorIdentityReport ni = floor_numerator_identity(in.delta, in.D);
    rep["numerator_identity"] = {{"R", ni.R},
                                 {"lhs", ni.lhs},
                                 {"rhs", ni.rhs},
                                 {"exact", ni.exact},
                                 {"provenance", kProvenancePaperExact}};

    double qd = qi_delta(8.0 * in.D, 26.0 * in.D, 1.25, 32.5 * in.D, in.delta);
    rep["qi_delta"] = {{"a", 8.0 * in.D},
                       {"b", 26.0 * in.D},
                       {"lambda", 1.25},
                       {"C", 32.5 * in.D},
                       {"delta", in.delta},
                       {"value", qd},
                       {"bound_16", 16.0 * (in.delta / in.D + 2.0)},
                       {"provenance", kProvenancePaperExact}};

    auto [c1, c2] = qi_c1_c2(1.25, 32.5 * in.D, in.delta);
    rep["qi_c1_c2"] = {{"lambda", 1.25},
                       {"C", 32.5 * in.D},
                       {"delta", in.delta},
                       {"c1", c1},
                       {"c2", c2},
                       {"provenance", kProvenancePaperExact}};

    if (in.delta > 0) {
        double L = 8.0 * in.delta;
        rep["stability_bound"] = {{"L", L},
                                  {"value", stability_bound(L, in.delta)},
                                  {"provenance", kProvenancePaperExact}};
    } else {
        rep["stability_bound"] = {{"value", nullptr},
                                  {"note", "needs delta > 0"},
                                  {"provenance", kProvenancePaperExact}};
    }

    rep["relator_length_bound"] = {{"value", relator_length_bound(in.delta)},
                                   {"provenance", kProvenancePaperExact}};

    QiSpaceConstants qs = qi_space_constants(in.D);
    rep["qi_space_constants"] = {{"lambda", qs.lambda},
                                 {"c", qs.c},
                                 {"a", qs.a},
                                 {"provenance", kProvenancePaperExact}};

    AbsorptionReport ab = absorption_check();
    rep["absorption"] = {{"exact_lhs", ab.lhs},
                         {"exact_rhs", ab.rhs},
                         {"pass_exact", ab.pass_exact},
                         {"double_lhs", ab.lhs_double},
                         {"double_rhs", ab.rhs_double},
                         {"pass_double", ab.pass_double},
                         {"provenance", kProvenancePaperExact}};

    SandwichReport sw = sandwich_check(8, in.D, 200);
    rep["sandwich"] = {{"k", 8},
                       {"cap", 200},
                       {"pass", sw.pass},
                       {"checked", sw.checked},
                       {"provenance", kProvenancePaperExact}};
    return rep;
}

namespace {

ordered_json defect_json(const DefectReport& rep) {
    return ordered_json{{"defect", rep.defect()},
                        {"defect2", rep.defect2},
                        {"witness", rep.witness},
                        {"witness_index", rep.witness_index},
                        {"exact", rep.exact_mode},
                        {"lower_bound_only", rep.lower_bound_only},
                        {"seed", rep.seed},
                        {"scanned", rep.scanned}};
}

struct GrowthArgs {
    std::string group;
    int radius = 0;
    bool enumerate = false;
    bool csv = false;
    std::string dump_ball;
};

struct EntropyArgs {
    std::string group;
    int radius = 0;
    int window = 5;
    int series_radius = 30;
    double tol = 1e-9;
    bool csv = false;
};

struct Delta4Args {
    std::string group;
    int radius = 0;
    std::string mode = "exact";
    std::uint64_t samples = 100000;
    std::size_t exact_cap = 150;
};

struct ThinArgs {
    std::string group;
    int radius = 0;
    std::string indices;
    std::uint64_t samples = 50;
};

struct DisplacementArgs {
    std::string group;
    std::string element;
    int K = 10;
    int radius = 4;
};

struct BgArgs {
    std::string group;
    int radius = 300;
    double delta = 0;
    double H = 1;
    double D = 1;
    bool enumerate = false;
};

struct ConstantsArgs {
    double delta = 0;
    double H = 1;
    double D = 1;
};

struct PresentationsArgs {
    long long k = 1;
    long long p = 3;
    long long cap = 1000000;
    long long N = 0;
    bool list = false;
};

struct FingerprintArgs {
    std::string group;
    int radius = 4;
    std::string compare;
};

struct QiArgs {
    double a = 0;
    double b = 0;
    double lambda = 1;
    double C = 0;
    double delta = 0;
    double L = -1;
    double diam = 0;
    bool have_ab = false;
};

int run_growth(const RunConfig& cfg, const GrowthArgs& args, const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    GrowthSequence gs = args.enumerate ? enumerated_growth(g, args.radius, cfg.mem_cap)
                                       : growth_sequence(g, args.radius, cfg.mem_cap);
    if (!args.dump_ball.empty()) {
        BallTable ball = enumerate_ball(g, args.radius, cfg.mem_cap);
        std::ofstream out(args.dump_ball);
        if (!out) throw DomainError("cannot open output file: " + args.dump_ball);
        write_ball_jsonl(ball, out);
    }
    if (args.csv) {
        emit_text(growth_csv(gs), out_path);
        return 0;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "growth";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["source"] = gs.source == GrowthSequence::Source::ClosedForm ? "closed-form" : "enumerated";
    doc["counts"] = counts_to_strings(gs.counts);
    std::vector<std::string> spheres;
    for (std::size_t r = 0; r < gs.counts.size(); ++r)
        spheres.push_back((r == 0 ? gs.counts[0] : BigInt(gs.counts[r] - gs.counts[r - 1])).str());
    doc["spheres"] = spheres;
    emit_json(doc, out_path);
    return 0;
}

int run_entropy(const RunConfig& cfg, const EntropyArgs& args, const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    GrowthSequence gs = growth_sequence(g, args.radius, cfg.mem_cap);
    EntropyEstimate est = entropy_estimate(gs, args.window);
    if (args.csv) {
        emit_text(entropy_csv(gs, est), out_path);
        return 0;
    }
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "entropy";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["window"] = est.window;
    doc["method"] = est.method;
    doc["cumulative"] = est.cumulative;
    doc["diff"] = est.diff;
    doc["slope"] = est.slope;
    doc["tail_min_cumulative"] = est.tail_min_cumulative;
    try {
        doc["exact"] = exact_entropy(g);
    } catch (const Unsupported&) {
        // no closed form for this model
    }
    if (g.kind() == ModelKind::FProd) {
        EntropyBracket br = fprod_entropy(g, args.series_radius, args.tol);
        doc["bracket"] = {{"lower", br.lower},
                          {"upper", br.upper},
                          {"root", br.root},
                          {"series_radius", br.series_radius},
                          {"tol", br.tol}};
    }
    emit_json(doc, out_path);
    return 0;
}

int run_delta4(const RunConfig& cfg, const Delta4Args& args, const std::string& out_path) {
    if (args.mode != "exact" && args.mode != "sampled")
        throw DomainError("delta4 --mode must be exact or sampled");
    MarkedGroup g = MarkedGroup::build(args.group);
    BallTable ball = enumerate_ball(g, args.radius, cfg.mem_cap);
    DefectMode mode;
    mode.exact = args.mode == "exact";
    mode.seed = cfg.seed;
    mode.samples = args.samples;
    DefectReport rep = four_point_defect(ball, mode, args.exact_cap, cfg.threads);
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "delta4";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["ball_size"] = ball.size();
    doc["report"] = defect_json(rep);
    emit_json(doc, out_path);
    return 0;
}

int run_thin(const RunConfig& cfg, const ThinArgs& args, const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    BallTable ball = enumerate_ball(g, args.radius, cfg.mem_cap);
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "thin";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["ball_size"] = ball.size();

    auto triple_json = [&](const TripodReport& tri, std::int64_t slim) {
        ordered_json t;
        t["insize"] = tri.insize;
        t["legs2"] = tri.legs2;
        t["triple"] = tri.triple;
        t["witness_v"] = tri.witness_v;
        t["witness_w"] = tri.witness_w;
        t["matched_pairs"] = tri.matched_pairs;
        t["degenerate"] = tri.degenerate;
        t["slim"] = slim;
        return t;
    };

    if (!args.indices.empty()) {
        std::istringstream is(args.indices);
        std::vector<std::size_t> idx;
        std::string part;
        while (std::getline(is, part, ','))
            idx.push_back(static_cast<std::size_t>(std::stoull(part)));
        if (idx.size() != 3) throw DomainError("--indices needs i,j,k");
        for (std::size_t i : idx)
            if (i >= ball.size()) throw OutOfRange("triple index beyond the ball");
        const Element &x = ball.elements[idx[0]], &y = ball.elements[idx[1]],
                      &z = ball.elements[idx[2]];
        TripodReport tri = thin_triangle_insize(ball, x, y, z);
        doc["triple"] = triple_json(tri, slim_insize(ball, x, y, z));
    } else {
        Rng rng(cfg.seed);
        std::uint64_t used = 0;
        TripodReport best;
        std::int64_t best_slim = -1;
        ordered_json best_json;
        for (std::uint64_t s = 0; s < args.samples; ++s) {
            std::size_t i = static_cast<std::size_t>(rng.next_below(ball.size()));
            std::size_t j = static_cast<std::size_t>(rng.next_below(ball.size()));
            std::size_t k = static_cast<std::size_t>(rng.next_below(ball.size()));
            if (i == j || i == k || j == k) continue;
            const Element &x = ball.elements[i], &y = ball.elements[j], &z = ball.elements[k];
            if (!ball.contains(g.multiply(g.inverse(x), y)) ||
                !ball.contains(g.multiply(g.inverse(x), z)) ||
                !ball.contains(g.multiply(g.inverse(y), z)))
                continue;
            ++used;
            TripodReport tri = thin_triangle_insize(ball, x, y, z);
            std::int64_t slim = slim_insize(ball, x, y, z);
            if (tri.insize > best.insize || best_slim < 0) {
                best = tri;
                best_slim = slim;
            } else if (slim > best_slim) {
                best_slim = slim;
            }
        }
        doc["samples"] = args.samples;
        doc["used"] = used;
        doc["seed"] = cfg.seed;
        if (used > 0) doc["max"] = triple_json(best, best_slim);
        ProjectionReport proj = projection_defect(ball, cfg.seed, args.samples);
        doc["projection"] = {{"defect", proj.defect()}, {"defect2", proj.defect2},
                             {"samples", proj.samples}, {"used", proj.used},
                             {"witness_x", proj.witness_x}, {"witness_y", proj.witness_y},
                             {"witness_a", proj.witness_a}, {"witness_b", proj.witness_b},
                             {"witness_proj", proj.witness_proj}};
    }
    emit_json(doc, out_path);
    return 0;
}

int run_displacement(const RunConfig& cfg, const DisplacementArgs& args,
                     const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    Element el = parse_element(g, args.element);
    DisplacementReport asym = asymptotic_displacement(g, el, args.K);
    DisplacementReport mind = minimal_displacement(g, el, args.radius, cfg.mem_cap);
    IsometryClass cls = classify_isometry(g, el, args.K);

    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "displacement";
    doc["group"] = g.name();
    doc["element"] = g.render(el);
    doc["K"] = args.K;
    doc["radius"] = args.radius;
    doc["powers"] = asym.powers;
    doc["ell_ratio"] = asym.ell_ratio;
    doc["ell_diff"] = asym.ell_diff;
    doc["stabilized"] = asym.stabilized;
    doc["s_min"] = mind.s_min;
    doc["witness"] = mind.witness;
    switch (cls.kind) {
        case IsometryClass::Kind::Elliptic:
            doc["class"] = "elliptic";
            doc["order"] = cls.order;
            break;
        case IsometryClass::Kind::Hyperbolic:
            doc["class"] = "hyperbolic";
            break;
        case IsometryClass::Kind::Unknown:
            doc["class"] = "unknown";
            doc["reason"] = cls.reason;
            break;
    }
    try {
        doc["cyclically_reduced_length"] = cyclically_reduced_length(g, el);
    } catch (const WrongModel&) {
        // exact oracle only exists on tree models
    }
    emit_json(doc, out_path);
    return 0;
}

int run_bg_check(const RunConfig& cfg, const BgArgs& args, const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    GrowthSequence gs = args.enumerate ? enumerated_growth(g, args.radius, cfg.mem_cap)
                                       : growth_sequence(g, args.radius, cfg.mem_cap);
    BgReport rep = bg_check(gs, {args.delta, args.H, args.D});
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "bg-check";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["inputs"] = {{"delta", args.delta}, {"entropy", args.H}, {"diam", args.D}};
    doc["pass"] = rep.pass;
    doc["pairs"] = rep.pairs;
    doc["fail_count"] = rep.fail_count;
    doc["worst_margin"] = rep.worst_margin;
    doc["worst"] = {{"r", rep.worst.r}, {"R", rep.worst.R}};
    doc["r_min"] = rep.r_min;
    doc["r_max"] = rep.r_max;
    doc["provenance"] = kProvenancePaperExact;
    emit_json(doc, out_path);
    return 0;
}

int run_presentations(const PresentationsArgs& args, const std::string& out_path) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "presentations";
    doc["k"] = args.k;
    doc["p"] = args.p;
    BigValue count = free_ball_count(args.k, args.p);
    doc["ball_count"] = count.str();
    if (args.p >= 3) doc["verify_bound"] = verify_ball_bound(args.k, args.p);
    PresentationCount pc = count_presentations(args.k, args.p);
    doc["presentations"] = {{"count", pc.count.str()},
                            {"cap", pc.cap.str()},
                            {"count_exponent", pc.count_exponent.str()},
                            {"cap_exponent", pc.cap_exponent.str()},
                            {"leq", pc.leq}};
    if (args.N > 0) doc["q"] = presentation_count_bound(args.N, args.p).str();
    if (args.list) {
        std::vector<std::string> words;
        for (const ReducedWord& w : free_ball_enumerate(args.k, args.p, args.cap))
            words.push_back(word_to_string(args.k, w));
        doc["words"] = words;
    }
    emit_json(doc, out_path);
    return 0;
}

int run_fingerprint(const RunConfig& cfg, const FingerprintArgs& args,
                    const std::string& out_path) {
    MarkedGroup g = MarkedGroup::build(args.group);
    Fingerprint f = marked_fingerprint(g, args.radius, cfg.mem_cap);
    auto to_json = [](const Fingerprint& fp) {
        return ordered_json{{"growth", counts_to_strings(fp.growth)},
                            {"distance_multiset", fp.distance_multiset},
                            {"degree_sequence", fp.degree_sequence}};
    };
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "fingerprint";
    doc["group"] = g.name();
    doc["radius"] = args.radius;
    doc["fingerprint"] = to_json(f);
    if (!args.compare.empty()) {
        MarkedGroup h = MarkedGroup::build(args.compare);
        Fingerprint fh = marked_fingerprint(h, args.radius, cfg.mem_cap);
        doc["compare_group"] = h.name();
        doc["compare_fingerprint"] = to_json(fh);
        doc["equal"] = f == fh;
    }
    emit_json(doc, out_path);
    return 0;
}

int run_qi(const QiArgs& args, const std::string& out_path) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["command"] = "qi";
    auto [c1, c2] = qi_c1_c2(args.lambda, args.C, args.delta);
    doc["qi_c1_c2"] = {{"lambda", args.lambda}, {"C", args.C}, {"delta", args.delta},
                       {"c1", c1}, {"c2", c2}, {"provenance", kProvenancePaperExact}};
    if (args.have_ab) {
        double v = qi_delta(args.a, args.b, args.lambda, args.C, args.delta);
        doc["qi_delta"] = {{"a", args.a}, {"b", args.b}, {"lambda", args.lambda},
                           {"C", args.C}, {"delta", args.delta}, {"value", v},
                           {"provenance", kProvenancePaperExact}};
    }
    if (args.L >= 0)
        doc["stability_bound"] = {{"L", args.L},
                                  {"value", stability_bound(args.L, args.delta)},
                                  {"provenance", kProvenancePaperExact}};
    if (args.diam > 0) {
        QiSpaceConstants qs = qi_space_constants(args.diam);
        doc["qi_space_constants"] = {{"lambda", qs.lambda}, {"c", qs.c}, {"a", qs.a},
                                     {"provenance", kProvenancePaperExact}};
    }
    emit_json(doc, out_path);
    return 0;
}

int run_corpus(const RunConfig& cfg) {
    CorpusReport report = corpus_run(cfg.threads);
    int passed = 0;
    for (const auto& r : report.results) {
        std::ostringstream line;
        line << (r.pass ? "[PASS]" : "[FAIL]") << " " << r.id << " " << r.name << " ("
             << std::fixed << std::setprecision(2) << r.seconds << "s)";
        if (!r.detail.empty()) line << " " << r.detail;
        std::cout << line.str() << "\n";
        if (r.pass) ++passed;
    }
    std::cout << "corpus: " << passed << "/" << report.results.size() << " criteria passed in "
              << std::fixed << std::setprecision(2) << report.seconds << "s\n";
    return report.all_pass ? 0 : 1;
}

} // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"marked-group geometry calculator: growth, entropy, hyperbolicity, "
                 "displacement, and closed-form constants"};
    app.require_subcommand(1);
    app.fallthrough();  // accept global flags after the subcommand, e.g. `growth ... --out f`

    RunConfig cfg;
    std::string out_path;
    app.add_option("--seed", cfg.seed, "seed for sampled modes (default 0)");
    app.add_option("--mem-cap", cfg.mem_cap, "memory cap in bytes (default 4 GiB)");
    app.add_option("--precision", cfg.precision_bits, "float precision in bits (default 256)");
    app.add_option("--nu", cfg.nu_spec, "census function: ceil | poly:c,e | table:file.csv");
    app.add_option("--threads", cfg.threads, "worker threads for scans (default 1)");
    app.add_option("--out", out_path, "write the report to FILE instead of stdout");

    GrowthArgs growth_args;
    auto* growth_cmd = app.add_subcommand("growth", "ball and sphere sizes");
    growth_cmd->add_option("--group", growth_args.group, "group spec")->required();
    growth_cmd->add_option("--radius", growth_args.radius, "max radius")->required();
    growth_cmd->add_flag("--enumerate", growth_args.enumerate, "force BFS enumeration");
    growth_cmd->add_flag("--csv", growth_args.csv, "emit radius,count CSV");
    growth_cmd->add_option("--dump-ball", growth_args.dump_ball, "write the ball as JSONL to FILE");

    EntropyArgs entropy_args;
    auto* entropy_cmd = app.add_subcommand("entropy", "growth-rate estimators");
    entropy_cmd->add_option("--group", entropy_args.group, "group spec")->required();
    entropy_cmd->add_option("--radius", entropy_args.radius, "max radius")->required();
    entropy_cmd->add_option("--window", entropy_args.window, "trailing window (default 5)");
    entropy_cmd->add_option("--series-radius", entropy_args.series_radius,
                            "series truncation for free-product brackets (default 30)");
    entropy_cmd->add_option("--tol", entropy_args.tol, "bracket root tolerance (default 1e-9)");
    entropy_cmd->add_flag("--csv", entropy_args.csv, "emit R,count,cumulative,diff CSV");

    Delta4Args delta4_args;
    auto* delta4_cmd = app.add_subcommand("delta4", "four-point hyperbolicity defect");
    delta4_cmd->add_option("--group", delta4_args.group, "group spec")->required();
    delta4_cmd->add_option("--radius", delta4_args.radius, "ball radius")->required();
    delta4_cmd->add_option("--mode", delta4_args.mode, "exact | sampled (default exact)");
    delta4_cmd->add_option("--samples", delta4_args.samples, "sample count for sampled mode");
    delta4_cmd->add_option("--exact-cap", delta4_args.exact_cap,
                           "max ball size for the exact scan (default 150)");

    ThinArgs thin_args;
    auto* thin_cmd = app.add_subcommand("thin", "tripod thinness and slimness");
    thin_cmd->add_option("--group", thin_args.group, "group spec")->required();
    thin_cmd->add_option("--radius", thin_args.radius, "ball radius")->required();
    thin_cmd->add_option("--indices", thin_args.indices, "triple of ball indices i,j,k");
    thin_cmd->add_option("--samples", thin_args.samples, "sampled triples (default 50)");

    DisplacementArgs disp_args;
    auto* disp_cmd = app.add_subcommand("displacement", "displacement estimators");
    disp_cmd->add_option("--group", disp_args.group, "group spec")->required();
    disp_cmd->add_option("--element", disp_args.element, "generator names, e.g. \"a1 a2-\"")
        ->required();
    disp_cmd->add_option("--K", disp_args.K, "max power (default 10)");
    disp_cmd->add_option("--radius", disp_args.radius, "ball radius for s_min (default 4)");

    BgArgs bg_args;
    auto* bg_cmd = app.add_subcommand("bg-check", "ball-ratio bound check");
    bg_cmd->add_option("--group", bg_args.group, "group spec")->required();
    bg_cmd->add_option("--radius", bg_args.radius, "max radius (default 300)");
    bg_cmd->add_option("--delta", bg_args.delta, "hyperbolicity constant")->required();
    bg_cmd->add_option("--entropy", bg_args.H, "entropy upper bound")->required();
    bg_cmd->add_option("--diam", bg_args.D, "quotient diameter bound")->required();
    bg_cmd->add_flag("--enumerate", bg_args.enumerate, "force BFS enumeration");

    ConstantsArgs constants_args;
    auto* constants_cmd = app.add_subcommand("constants", "closed-form constants report");
    constants_cmd->add_option("--delta", constants_args.delta, "hyperbolicity constant");
    constants_cmd->add_option("--entropy", constants_args.H, "entropy bound (default 1)");
    constants_cmd->add_option("--diam", constants_args.D, "diameter bound (default 1)");

    PresentationsArgs pres_args;
    auto* pres_cmd = app.add_subcommand("presentations", "reduced-word census");
    pres_cmd->add_option("--k", pres_args.k, "generator pairs")->required();
    pres_cmd->add_option("--p", pres_args.p, "max word length")->required();
    pres_cmd->add_option("--cap", pres_args.cap, "enumeration cap (default 10^6)");
    pres_cmd->add_option("--N", pres_args.N, "also report the census sum q(N,p)");
    pres_cmd->add_flag("--list", pres_args.list, "include the word list");

    FingerprintArgs fp_args;
    auto* fp_cmd = app.add_subcommand("fingerprint", "marked-ball invariants");
    fp_cmd->add_option("--group", fp_args.group, "group spec")->required();
    fp_cmd->add_option("--radius", fp_args.radius, "ball radius (default 4)");
    fp_cmd->add_option("--compare", fp_args.compare, "second group spec to compare");

    QiArgs qi_args;
    auto* qi_cmd = app.add_subcommand("qi", "quasi-isometry constants");
    auto* qi_a = qi_cmd->add_option("--a", qi_args.a, "scale a");
    auto* qi_b = qi_cmd->add_option("--b", qi_args.b, "offset b");
    qi_cmd->add_option("--lambda", qi_args.lambda, "multiplicative constant (>= 1)")->required();
    qi_cmd->add_option("--C", qi_args.C, "additive constant")->required();
    qi_cmd->add_option("--delta", qi_args.delta, "hyperbolicity constant")->required();
    qi_cmd->add_option("--L", qi_args.L, "geodesic length for the stability bound");
    qi_cmd->add_option("--diam", qi_args.diam, "diameter for the space constants");

    auto* corpus_cmd = app.add_subcommand("corpus", "run the full verification suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        set_float_precision_bits(cfg.precision_bits);
        if (cfg.threads < 1) throw DomainError("--threads must be >= 1");
        if (*growth_cmd) return run_growth(cfg, growth_args, out_path);
        if (*entropy_cmd) return run_entropy(cfg, entropy_args, out_path);
        if (*delta4_cmd) return run_delta4(cfg, delta4_args, out_path);
        if (*thin_cmd) return run_thin(cfg, thin_args, out_path);
        if (*disp_cmd) return run_displacement(cfg, disp_args, out_path);
        if (*bg_cmd) return run_bg_check(cfg, bg_args, out_path);
        if (*constants_cmd) {
            NuPtr nu = parse_nu(cfg.nu_spec);
            ordered_json doc = constants_report_json(
                {constants_args.delta, constants_args.H, constants_args.D}, *nu);
            emit_json(doc, out_path);
            return 0;
        }
        if (*pres_cmd) return run_presentations(pres_args, out_path);
        if (*fp_cmd) return run_fingerprint(cfg, fp_args, out_path);
        if (*qi_cmd) {
            qi_args.have_ab = qi_a->count() > 0 && qi_b->count() > 0;
            return run_qi(qi_args, out_path);
        }
        if (*corpus_cmd) return run_corpus(cfg);
        return 2;
    } catch (const SyntaxError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const OutOfRange& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace hypgroup
