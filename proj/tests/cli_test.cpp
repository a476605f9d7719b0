#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "hypgroup/cli.hpp"
#include "hypgroup/constants.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/marked_group.hpp"

using namespace hypgroup;

namespace {

int cli(const std::vector<std::string>& args) {
    std::vector<std::string> full = {"hypgroup"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : full) argv.push_back(s.data());
    return run_cli(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

} // namespace

TEST_CASE("element parsing") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    Element w = parse_element(g, "a1 a2-");
    CHECK(g.render(w) == "a1 a2-");
    CHECK(g.is_identity(parse_element(g, "e")));
    CHECK(g.is_identity(parse_element(g, "a1 a1-")));
    CHECK_THROWS_AS(parse_element(g, "b7"), DomainError);
    CHECK_THROWS_AS(parse_element(g, "   "), DomainError);

    MarkedGroup z = MarkedGroup::build("z(1,2)");
    CHECK(z.render(parse_element(z, "2 2 -1")) == "3");
}

TEST_CASE("constants report labels every entry with its provenance") {
    NuCeil nu;
    ordered_json rep = constants_report_json({0.01, 0.7, 1.0}, nu);
    CHECK(rep["schema"] == 1);
    CHECK(rep["nu"]["spec"] == "ceil");
    CHECK(rep["nu"]["provenance"] == NuFn::provenance());
    for (const char* key : {"n_generators_bound", "n0", "n1", "n2",
                            "displacement_floor", "decrire_bound"}) {
        INFO(key);
        CHECK(rep[key]["provenance"] == kProvenanceConsistency);
    }
    for (const char* key : {"qi_delta", "qi_c1_c2", "stability_bound",
                            "relator_length_bound", "qi_space_constants", "absorption",
                            "numerator_identity", "sandwich"}) {
        INFO(key);
        CHECK(rep[key]["provenance"] == kProvenancePaperExact);
    }
    CHECK(rep["numerator_identity"]["exact"] == true);
    CHECK(rep["sandwich"]["pass"] == true);
    CHECK(rep["absorption"]["pass_exact"] == true);
    CHECK(rep["stability_bound"]["value"].is_number());

    ordered_json flat = constants_report_json({0.0, 0.7, 1.0}, nu);
    CHECK(flat["stability_bound"]["value"].is_null());
}

TEST_CASE("growth command writes deterministic reports") {
    TempFile a("cli_growth_a.json"), b("cli_growth_b.json");
    REQUIRE(cli({"growth", "--group", "free(2)", "--radius", "3", "--out", a.path}) == 0);
    REQUIRE(cli({"growth", "--group", "free(2)", "--radius", "3", "--out", b.path}) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["schema"] == 1);
    CHECK(doc["command"] == "growth");
    CHECK(doc["source"] == "closed-form");
    CHECK(doc["counts"] == std::vector<std::string>{"1", "5", "17", "53"});
    CHECK(doc["spheres"] == std::vector<std::string>{"1", "4", "12", "36"});
}

TEST_CASE("growth command: enumerate flag and CSV") {
    TempFile a("cli_growth_enum.json");
    REQUIRE(cli({"growth", "--group", "z(1,2)", "--radius", "2", "--enumerate",
                 "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["source"] == "enumerated");
    CHECK(doc["counts"] == std::vector<std::string>{"1", "5", "9"});

    TempFile c("cli_growth.csv");
    REQUIRE(cli({"growth", "--group", "free(2)", "--radius", "2", "--csv",
                 "--out", c.path}) == 0);
    std::string csv = slurp(c.path);
    CHECK(csv.substr(0, csv.find('\n')) == "radius,count");
    CHECK(csv.find("2,17") != std::string::npos);
}

TEST_CASE("entropy command reports brackets for free products") {
    TempFile a("cli_entropy.json");
    REQUIRE(cli({"entropy", "--group", "fprod(z(1),z(1))", "--radius", "8",
                 "--window", "3", "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["command"] == "entropy");
    CHECK(doc.contains("bracket"));
    double lower = doc["bracket"]["lower"];
    double upper = doc["bracket"]["upper"];
    CHECK(lower <= 1.0986122886681098);
    CHECK(upper >= 1.0986122886681098);
    CHECK_FALSE(doc.contains("exact"));

    TempFile b("cli_entropy_free.json");
    REQUIRE(cli({"entropy", "--group", "free(2)", "--radius", "8", "--out", b.path}) == 0);
    ordered_json free_doc = ordered_json::parse(slurp(b.path));
    CHECK(free_doc["exact"] == doctest::Approx(1.0986122886681098));
    CHECK_FALSE(free_doc.contains("bracket"));
}

TEST_CASE("delta4 command is thread-count invariant") {
    TempFile a("cli_d4_a.json"), b("cli_d4_b.json");
    REQUIRE(cli({"--threads", "1", "delta4", "--group", "zpow(2)", "--radius", "4",
                 "--out", a.path}) == 0);
    REQUIRE(cli({"--threads", "3", "delta4", "--group", "zpow(2)", "--radius", "4",
                 "--out", b.path}) == 0);
    CHECK(slurp(a.path) == slurp(b.path));
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["report"]["defect2"] == 8);
    CHECK(doc["report"]["exact"] == true);
}

TEST_CASE("displacement command") {
    TempFile a("cli_disp.json");
    REQUIRE(cli({"displacement", "--group", "free(2)", "--element", "a1 a2 a1-",
                 "--K", "8", "--radius", "3", "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["ell_diff"] == 1);
    CHECK(doc["s_min"] == 1);
    CHECK(doc["class"] == "hyperbolic");
    CHECK(doc["cyclically_reduced_length"] == 1);
}

TEST_CASE("bg-check command") {
    TempFile a("cli_bg.json");
    REQUIRE(cli({"bg-check", "--group", "free(2)", "--radius", "40", "--delta", "0.01",
                 "--entropy", "1.0986122886681098", "--diam", "1", "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["pass"] == true);
    CHECK(doc["r_min"] == 11);
    CHECK(doc["provenance"] == "paper-exact");
}

TEST_CASE("constants command honours the nu flag") {
    TempFile a("cli_const.json");
    REQUIRE(cli({"--nu", "poly:1,0", "constants", "--delta", "0", "--entropy", "1e-300",
                 "--diam", "1", "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["displacement_floor"]["value"] == doctest::Approx(10.0 / 3.0));
    CHECK(doc["n0"]["exact"] == true);
    CHECK(doc["n0"]["log2"] == doctest::Approx(308915776.0));
    CHECK(doc["nu"]["provenance"] == "non-paper placeholder");
}

TEST_CASE("presentations and qi and fingerprint commands") {
    TempFile a("cli_pres.json");
    REQUIRE(cli({"presentations", "--k", "1", "--p", "3", "--N", "1", "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["presentations"]["leq"] == true);
    CHECK(doc["q"] == "257");

    TempFile b("cli_qi.json");
    REQUIRE(cli({"qi", "--a", "8", "--b", "26", "--lambda", "1.25", "--C", "32.5",
                 "--delta", "0.5", "--L", "4", "--diam", "1", "--out", b.path}) == 0);
    ordered_json qi = ordered_json::parse(slurp(b.path));
    CHECK(qi.contains("qi_delta"));
    CHECK(qi.contains("stability_bound"));
    CHECK(qi["qi_space_constants"]["lambda"] == 1.25);

    TempFile c("cli_fp.json");
    REQUIRE(cli({"fingerprint", "--group", "fprod(z(1),z(2,3))", "--radius", "3",
                 "--compare", "fprod(z(1),z(3,4))", "--out", c.path}) == 0);
    ordered_json fp = ordered_json::parse(slurp(c.path));
    CHECK(fp["equal"] == false);
}

TEST_CASE("thin command with explicit indices") {
    TempFile a("cli_thin.json");
    REQUIRE(cli({"thin", "--group", "free(2)", "--radius", "2", "--indices", "0,1,2",
                 "--out", a.path}) == 0);
    ordered_json doc = ordered_json::parse(slurp(a.path));
    CHECK(doc["triple"]["insize"] == 0);
    CHECK(doc["triple"]["slim"] == 0);
}

TEST_CASE("usage errors exit 2, computation failures exit 3") {
    CHECK(cli({"growth", "--radius", "3"}) == 2);                       // missing --group
    CHECK(cli({"nosuchcommand"}) == 2);
    CHECK(cli({"growth", "--group", "free(", "--radius", "3"}) == 2);   // syntax error
    CHECK(cli({"growth", "--group", "free(0)", "--radius", "3"}) == 2); // semantic error
    CHECK(cli({"delta4", "--group", "free(2)", "--radius", "2", "--mode", "bogus"}) == 2);
    CHECK(cli({"displacement", "--group", "free(2)", "--element", "zz"}) == 2);
    CHECK(cli({"--nu", "bogus", "constants"}) == 2);
    // ball too large for the exact quadruple scan: a computation-time failure
    CHECK(cli({"delta4", "--group", "free(2)", "--radius", "4", "--exact-cap", "50"}) == 3);
    // enumeration hits the memory cap
    CHECK(cli({"--mem-cap", "1024", "growth", "--group", "free(2)", "--radius", "12",
               "--enumerate"}) == 3);
}

TEST_CASE("dump-ball writes one JSON line per element") {
    TempFile a("cli_ball.jsonl"), b("cli_ball.json");
    REQUIRE(cli({"growth", "--group", "free(2)", "--radius", "2", "--dump-ball", a.path,
                 "--out", b.path}) == 0);
    std::istringstream in(slurp(a.path));
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line))
        if (!line.empty()) {
            ordered_json row = ordered_json::parse(line);
            CHECK(row.contains("nf"));
            CHECK(row.contains("dist"));
            ++lines;
        }
    CHECK(lines == 17);
}
