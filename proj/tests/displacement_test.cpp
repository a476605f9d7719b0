#include <doctest.h>

#include "hypgroup/displacement.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/marked_group.hpp"

using namespace hypgroup;

namespace {

int find_gen(const MarkedGroup& g, const std::string& name) {
    for (int i = 0; i < g.sigma_size(); ++i)
        if (g.generator_name(i) == name) return i;
    FAIL("generator not found: ", name);
    return -1;
}

Element word(const MarkedGroup& g, const std::vector<std::string>& names) {
    Element acc = g.identity();
    for (const auto& n : names) acc = g.multiply(acc, g.generator(find_gen(g, n)));
    return acc;
}

} // namespace

TEST_CASE("power lengths of a conjugated letter stabilize at the reduced length") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    Element w = word(g, {"a1", "a2", "a1-"});  // conjugate of a2
    DisplacementReport rep = asymptotic_displacement(g, w, 8);
    REQUIRE(rep.powers.size() == 8);
    CHECK(rep.powers[0] == 3);
    CHECK(rep.powers[1] == 4);   // a1 a2 a2 a1-
    CHECK(rep.powers[7] == 10);
    CHECK(rep.stabilized);
    CHECK(rep.ell_diff == 1);
    CHECK(rep.ell_ratio >= 1.0);
    CHECK(rep.K == 8);
}

TEST_CASE("minimal displacement over a ball finds the conjugacy minimum") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    Element w = word(g, {"a1", "a2", "a1-"});
    DisplacementReport rep = minimal_displacement(g, w, 3);
    CHECK(rep.s_min == 1);
    CHECK(rep.witness == "a1");
    CHECK(rep.R == 3);
    // radius 0 only sees the element itself
    CHECK(minimal_displacement(g, w, 0).s_min == 3);
}

TEST_CASE("asymptotic displacement needs K >= 4") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    CHECK_THROWS_AS(asymptotic_displacement(g, g.generator(0), 3), OutOfRange);
}

TEST_CASE("cyclic reduction on free words") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    CHECK(cyclically_reduced_length(g, g.identity()) == 0);
    CHECK(cyclically_reduced_length(g, g.generator(0)) == 1);
    CHECK(cyclically_reduced_length(g, word(g, {"a1", "a2", "a1-"})) == 1);
    CHECK(cyclically_reduced_length(g, word(g, {"a1", "a2", "a1-", "a2-"})) == 4);
    CHECK(cyclically_reduced_length(g, word(g, {"a2", "a1", "a2", "a2", "a1-", "a2-"})) == 2);
}

TEST_CASE("cyclic reduction on free products of free models") {
    MarkedGroup g = MarkedGroup::build("fprod(free(1),free(1))");
    CHECK(cyclically_reduced_length(g, word(g, {"0:(a1)", "1:(a1)", "0:(a1-)"})) == 1);
    CHECK(cyclically_reduced_length(g, word(g, {"0:(a1)", "1:(a1)"})) == 2);
    CHECK(cyclically_reduced_length(g, word(g, {"0:(a1)", "0:(a1)"})) == 2);
    CHECK(cyclically_reduced_length(g, g.identity()) == 0);
    MarkedGroup nested = MarkedGroup::build("fprod(free(2),fprod(free(1),free(1)))");
    CHECK(cyclically_reduced_length(nested, nested.generator(0)) == 1);
}

TEST_CASE("cyclic reduction rejects non-free factors") {
    CHECK_THROWS_AS(cyclically_reduced_length(MarkedGroup::build("zpow(2)"),
                                              MarkedGroup::build("zpow(2)").identity()),
                    WrongModel);
    MarkedGroup c = MarkedGroup::build("cyclic(3)");
    CHECK_THROWS_AS(cyclically_reduced_length(c, c.generator(0)), WrongModel);
    MarkedGroup m = MarkedGroup::build("fprod(free(1),cyclic(2))");
    CHECK_THROWS_AS(cyclically_reduced_length(m, m.generator(0)), WrongModel);
    // the integer line is a tree, but only the free-model marking is accepted
    MarkedGroup z = MarkedGroup::build("fprod(z(1),z(1))");
    CHECK_THROWS_AS(cyclically_reduced_length(z, z.generator(0)), WrongModel);
}

TEST_CASE("displacement matches cyclic reduction on free groups") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    for (auto names : std::vector<std::vector<std::string>>{
             {"a1"},
             {"a1", "a2"},
             {"a1", "a2", "a1-"},
             {"a1", "a1", "a2", "a1-", "a1-"},
             {"a2-", "a1", "a2", "a2", "a2"}}) {
        Element w = word(g, names);
        long long crl = cyclically_reduced_length(g, w);
        DisplacementReport rep = asymptotic_displacement(g, w, 8);
        CHECK(rep.stabilized);
        CHECK(rep.ell_diff == crl);
        CHECK(minimal_displacement(g, w, 4).s_min == crl);
    }
}

TEST_CASE("isometry classification") {
    MarkedGroup f = MarkedGroup::build("free(2)");
    IsometryClass hyp = classify_isometry(f, f.generator(0), 8);
    CHECK(hyp.kind == IsometryClass::Kind::Hyperbolic);

    IsometryClass id = classify_isometry(f, f.identity(), 8);
    CHECK(id.kind == IsometryClass::Kind::Elliptic);
    CHECK(id.order == 1);

    MarkedGroup c = MarkedGroup::build("cyclic(5)");
    IsometryClass ell = classify_isometry(c, c.generator(0), 8);
    CHECK(ell.kind == IsometryClass::Kind::Elliptic);
    CHECK(ell.order == 5);

    MarkedGroup z2 = MarkedGroup::build("zpow(2)");
    IsometryClass tr = classify_isometry(z2, z2.generator(0), 8);
    CHECK(tr.kind == IsometryClass::Kind::Hyperbolic);

    // mixed torsion direction: power lengths oscillate, no verdict at K = 12
    MarkedGroup p = MarkedGroup::build("prod(free(2),cyclic(2))");
    Element mixed = p.multiply(word(p, {"(a1,0)"}), word(p, {"(e,1)"}));
    IsometryClass unk = classify_isometry(p, mixed, 12);
    CHECK(unk.kind == IsometryClass::Kind::Unknown);
    CHECK_FALSE(unk.reason.empty());
}

TEST_CASE("floor consistency holds on free and free-product samples") {
    MarkedGroup g = MarkedGroup::build("free(2)");
    std::vector<Element> sample = {word(g, {"a1"}), word(g, {"a1", "a2"}),
                                   word(g, {"a1", "a2", "a1-"}), g.identity()};
    NuCeil nu;
    FloorConsistencyReport rep = displacement_floor_consistency(g, sample, 0.0, 1.0986, 1.0, nu);
    CHECK(rep.evaluated == 3);
    CHECK(rep.skipped == 1);
    CHECK(rep.min_ell == 1.0);
    CHECK(rep.pass);
    CHECK(rep.floor < rep.min_ell);
    CHECK(rep.provenance == "consistency");
    CHECK(rep.nu_provenance == NuFn::provenance());

    MarkedGroup fp = MarkedGroup::build("fprod(z(1),z(2,3))");
    std::vector<Element> fps = {fp.generator(0), fp.multiply(fp.generator(0), fp.generator(1))};
    FloorConsistencyReport rep2 = displacement_floor_consistency(fp, fps, 0.0, 1.1, 1.0, nu);
    CHECK(rep2.pass);
}

TEST_CASE("floor consistency rejects unsupported models") {
    NuCeil nu;
    MarkedGroup z2 = MarkedGroup::build("zpow(2)");
    CHECK_THROWS_AS(
        displacement_floor_consistency(z2, {z2.generator(0)}, 0.0, 1.0, 1.0, nu),
        WrongModel);
    MarkedGroup tor = MarkedGroup::build("fprod(z(1),cyclic(2))");
    CHECK_THROWS_AS(
        displacement_floor_consistency(tor, {tor.generator(0)}, 0.0, 1.0, 1.0, nu),
        WrongModel);
    MarkedGroup r1 = MarkedGroup::build("free(1)");
    CHECK_THROWS_AS(
        displacement_floor_consistency(r1, {r1.generator(0)}, 0.0, 1.0, 1.0, nu),
        WrongModel);
}
