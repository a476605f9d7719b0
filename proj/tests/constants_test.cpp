#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hypgroup/ball.hpp"
#include "hypgroup/constants.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/marked_group.hpp"

using namespace hypgroup;

namespace {
constexpr double kLn3 = 1.0986122886681098;
}

TEST_CASE("big values add exactly below the bit cap and degrade above it") {
    BigValue a = BigValue::pow2(bf(10.0));
    CHECK(a.exact());
    CHECK(a.int_value() == 1024);
    CHECK(a.str() == "1024");

    BigValue b = a.plus(BigValue::from_int(BigInt(1)));
    CHECK(b.exact());
    CHECK(b.int_value() == 1025);

    BigValue big = BigValue::pow2(bf(1e9));  // beyond the exact cap
    CHECK_FALSE(big.exact());
    CHECK_THROWS_AS(big.int_value(), PrecisionCap);
    CHECK(to_double(big.log2()) == doctest::Approx(1e9));
    CHECK(big.str().substr(0, 5) == "log2:");

    BigValue sum = big.plus(a);
    CHECK_FALSE(sum.exact());
    CHECK(to_double(sum.log2()) == doctest::Approx(1e9));

    CHECK(a.compare(b) < 0);
    CHECK(b.compare(a) > 0);
    CHECK(a.compare(BigValue::from_int(BigInt(1024))) == 0);
    CHECK(big.compare(a) > 0);

    // fractional exponents never pretend to be exact
    CHECK_FALSE(BigValue::pow2(bf(2.5)).exact());
}

TEST_CASE("exact rationals of doubles round-trip ceilings") {
    CHECK(ceil_rational(rational_of_double(10.0)) == 10);
    CHECK(ceil_rational(rational_of_double(10.000000001)) == 11);
    CHECK(ceil_rational(BigRational(101, 10)) == 11);
    CHECK(ceil_rational(BigRational(-101, 10)) == -10);
}

TEST_CASE("census functions: ceiling, polynomial, table") {
    NuCeil ceil_nu;
    CHECK(ceil_nu.eval(bf(2.3)) == 3);
    CHECK(ceil_nu.eval(bf(5.0)) == 5);
    CHECK(ceil_nu.eval(bf(0.2)) == 1);  // clamped to >= 1
    CHECK(ceil_nu.describe() == "ceil");

    NuPoly poly(2.0, 1.0);
    CHECK(poly.eval(bf(4.0)) == 8);
    CHECK(poly.eval(bf(0.1)) == 1);
    NuPoly constant(1.0, 0.0);
    CHECK(constant.eval(bf(1e30)) == 1);
    CHECK_THROWS_AS(NuPoly(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(NuPoly(1.0, -1.0), DomainError);

    NuTable table({{1.0, 2}, {10.0, 5}, {100.0, 9}});
    CHECK(table.eval(bf(0.5)) == 2);
    CHECK(table.eval(bf(1.0)) == 2);
    CHECK(table.eval(bf(10.0)) == 5);
    CHECK(table.eval(bf(99.0)) == 5);
    CHECK(table.eval(bf(1e6)) == 9);
    CHECK_THROWS_AS(NuTable({{1.0, 2}, {1.0, 3}}), DomainError);   // thresholds not increasing
    CHECK_THROWS_AS(NuTable({{1.0, 3}, {2.0, 2}}), DomainError);   // values decreasing
    CHECK_THROWS_AS(NuTable({{1.0, 0}}), DomainError);             // value below 1
    CHECK_THROWS_AS(NuTable({}), DomainError);
}

TEST_CASE("census function parsing") {
    CHECK(parse_nu("ceil")->describe() == "ceil");
    CHECK(parse_nu("poly:2,1")->eval(bf(4.0)) == 8);
    CHECK_THROWS_AS(parse_nu("poly:x,1"), DomainError);
    CHECK_THROWS_AS(parse_nu("poly:1"), DomainError);
    CHECK_THROWS_AS(parse_nu("bogus"), DomainError);
    CHECK_THROWS_AS(parse_nu("table:/no/such/file.csv"), DomainError);

    std::string path = "nu_table_test.csv";
    {
        std::ofstream out(path);
        out << "# threshold,value\n1,2\n10,5\n100,9\n";
    }
    NuPtr nu = parse_nu("table:" + path);
    CHECK(nu->eval(bf(50.0)) == 5);
    std::remove(path.c_str());
}

TEST_CASE("inputs are validated") {
    CHECK_NOTHROW(validate({0.0, 1.0, 1.0}));
    CHECK_THROWS_AS(validate({-0.1, 1.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({0.0, 0.0, 1.0}), DomainError);
    CHECK_THROWS_AS(validate({0.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(validate({0.0, 1.0 / 0.0, 1.0}), DomainError);
}

TEST_CASE("ball-ratio bound formula") {
    double lnb = to_double(big_log(bg_bound(12, 11, kLn3)));
    double expected = std::log(3.0) + 6.25 * std::log(12.0 / 11.0) +
                      6.0 * kLn3 * (12.0 - 0.8 * 11.0);
    CHECK(lnb == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(bg_bound(5, 5, 1.0), DomainError);
    CHECK_THROWS_AS(bg_bound(4, 5, 1.0), DomainError);
    CHECK_THROWS_AS(bg_bound(5, 4, -1.0), DomainError);
}

TEST_CASE("ball-ratio check on the free group: frozen margins") {
    GrowthSequence gs = growth_sequence(MarkedGroup::build("free(2)"), 300);

    BgReport good = bg_check(gs, {0.01, kLn3, 1.0});
    CHECK(good.pass);
    CHECK(good.pairs == 41905);
    CHECK(good.fail_count == 0);
    CHECK(good.r_min == 11);
    CHECK(good.r_max == 300);
    CHECK(good.worst.r == 11);
    CHECK(good.worst.R == 12);
    CHECK(good.worst_margin == doctest::Approx(21.637175166932927).epsilon(1e-9));

    BgReport bad = bg_check(gs, {0.01, 0.05, 1.0});
    CHECK_FALSE(bad.pass);
    CHECK(bad.fail_count == 38322);
    CHECK(bad.worst.r == 11);
    CHECK(bad.worst.R == 300);
    CHECK(bad.worst_margin < -200.0);

    GrowthSequence tiny = growth_sequence(MarkedGroup::build("free(2)"), 11);
    CHECK_THROWS_AS(bg_check(tiny, {0.01, kLn3, 1.0}), InsufficientRange);
}

TEST_CASE("generator-count bound: frozen tiny-entropy value") {
    // entropy small enough that both census arguments collapse to nu(3^5)
    BigValue n = n_generators_bound({0.0, 1e-300, 1.0}, NuCeil{});
    REQUIRE(n.exact());
    CHECK(n.int_value() == 238383);
    CHECK(n.str() == "238383");
}

TEST_CASE("tower sums under the trivial census function") {
    NuPoly one(1.0, 0.0);
    ConstantsInput tiny{0.0, 1e-300, 1.0};
    // N = ceil(1 * (1 + 20/5 * 3)) = 13, E = 4*0 + 6
    NTriple t = n0_n1_n2(tiny, one);
    REQUIRE(t.n0.exact());
    CHECK(to_double(t.n0.log2()) == doctest::Approx(308915776.0).epsilon(1e-12));
    CHECK(t.n0.compare(t.n1) == 0);  // D is already 1
    CHECK(t.n2_inner_delta == 16.0 * (0.0 / 1.0 + 2.0));
    CHECK(t.n2_inner_H == 10.0 * 1e-300 * 1.0);

    ConstantsInput in{0.25, 0.01, 2.0};
    NTriple s = n0_n1_n2(in, NuCeil{});
    CHECK(s.n2_inner_delta == 16.0 * (0.25 / 2.0 + 2.0));
    CHECK(s.n2_inner_H == 10.0 * 0.01 * 2.0);
    NTriple ref = n0_n1_n2({0.25, 0.01, 1.0}, NuCeil{});
    CHECK(s.n1.compare(ref.n0) == 0);
}

TEST_CASE("displacement floor and its sibling bound share numerators") {
    NuPoly one(1.0, 0.0);
    CHECK(displacement_floor({0.0, 1e-300, 1.0}, one) ==
          doctest::Approx(10.0 / 3.0).epsilon(1e-12));
    // same numerator at the matching radius
    NumeratorIdentityReport ni = floor_numerator_identity(0.0, 1.0);
    CHECK(ni.exact);
    CHECK(ni.R == doctest::Approx(2.5));
    for (auto [d, D] : std::vector<std::pair<double, double>>{
             {0.01, 1.0}, {1.5, 2.0}, {0.3, 0.7}, {0.1, 0.3}}) {
        NumeratorIdentityReport rep = floor_numerator_identity(d, D);
        CHECK(rep.exact);
        double R = 2.5 * (D + 4.0 * d);
        CHECK(decrire_bound(R, d, 1e-300, one) ==
              doctest::Approx(displacement_floor({d, 1e-300, D}, one)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(floor_numerator_identity(-1.0, 1.0), DomainError);
}

TEST_CASE("decrire bound needs 2R > 19 delta") {
    NuPoly one(1.0, 0.0);
    CHECK(decrire_bound(10.0, 0.0, 1e-300, one) == doctest::Approx(40.0 / 3.0));
    CHECK_THROWS_AS(decrire_bound(1.0, 0.2, 1.0, one), DomainError);   // 2 <= 3.8
    CHECK_THROWS_AS(decrire_bound(0.95, 0.1, 1.0, one), DomainError);  // 1.9 <= 1.9
    CHECK_NOTHROW(decrire_bound(0.96, 0.1, 1.0, one));
}

TEST_CASE("quasi-isometry constants from the closed forms") {
    CHECK(qi_delta(8.0, 26.0, 1.25, 32.5, 0.0) ==
          doctest::Approx(4.0 / 8.0 * ((4.0 * 1.25 + 3.0) / (6.0 * 1.25 + 2.0) * 32.5 + 26.0)));
    double d = 0.4;
    double expected_q = (6.0 * 1.25 * 1.25 + 14.0 * 1.25 + 5.0) * d +
                        (4.0 * 1.25 + 3.0) / (6.0 * 1.25 + 2.0) * 32.5 + 26.0;
    CHECK(qi_delta(8.0, 26.0, 1.25, 32.5, d) == doctest::Approx(4.0 / 8.0 * expected_q));
    CHECK_THROWS_AS(qi_delta(0.0, 1.0, 1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(qi_delta(1.0, 1.0, 0.5, 1.0, 0.0), DomainError);

    auto [c1, c2] = qi_c1_c2(1.25, 32.5, 0.01);
    CHECK(c1 == doctest::Approx((6.0 * 1.25 + 2.0) * 0.01 + 32.5 / (6.0 * 1.25 + 2.0)));
    CHECK(c2 == doctest::Approx((1.0 + 1.25) * c1 + 32.5 / 2.0));

    CHECK(stability_bound(0.8, 0.1) ==
          doctest::Approx(0.1 * (1.0 + std::log2(8.0))));
    CHECK(stability_bound(0.05, 0.1) == doctest::Approx(0.1));  // log clamped at zero
    CHECK_THROWS_AS(stability_bound(1.0, 0.0), DomainError);

    CHECK(relator_length_bound(0.0) == 6.0);
    CHECK(relator_length_bound(2.5) == 16.0);

    QiSpaceConstants qs = qi_space_constants(2.0);
    CHECK(qs.lambda == 1.25);
    CHECK(qs.c == 25.0);
    CHECK(qs.a == 2.0);
    CHECK_THROWS_AS(qi_space_constants(0.0), DomainError);
}

TEST_CASE("tree-length sandwich always verifies") {
    SandwichReport rep = sandwich_check(8, 1.0, 200);
    CHECK(rep.pass);
    CHECK(rep.checked == 200);
    CHECK(rep.fail_count == 0);
    CHECK(rep.first_fail == 0);

    SandwichReport frac = sandwich_check(8, 0.37, std::vector<long long>{1, 5, 19, 100});
    CHECK(frac.pass);
    CHECK(frac.checked == 4);
    CHECK_THROWS_AS(sandwich_check(0, 1.0, 5), DomainError);
    CHECK_THROWS_AS(sandwich_check(8, 0.0, 5), DomainError);
}

TEST_CASE("constant absorption: frozen integers") {
    AbsorptionReport rep = absorption_check();
    CHECK(rep.pass_exact);
    CHECK(rep.pass_double);
    CHECK(rep.lhs == "2717908992");
    CHECK(rep.rhs == "3486784401");
    CHECK(rep.lhs_double == doctest::Approx(3.0 * std::pow(2.0, 6.25)));
    CHECK(rep.rhs_double == 243.0);
}
