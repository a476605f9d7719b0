#include <doctest.h>

#include "hypgroup/constants.hpp"
#include "hypgroup/errors.hpp"
#include "hypgroup/presentations.hpp"

using namespace hypgroup;

TEST_CASE("reduced-word counts: closed form equals enumeration") {
    for (long long k = 1; k <= 3; ++k)
        for (long long p = 0; p <= 5; ++p) {
            BigValue count = free_ball_count(k, p);
            REQUIRE(count.exact());
            std::vector<ReducedWord> words = free_ball_enumerate(k, p, 2000000);
            CHECK(BigInt(words.size()) == count.int_value());
        }
}

TEST_CASE("small word lists are shortlex ordered") {
    std::vector<ReducedWord> words = free_ball_enumerate(1, 2, 100);
    REQUIRE(words.size() == 5);
    CHECK(word_to_string(1, words[0]) == "e");
    CHECK(word_to_string(1, words[1]) == "a1");
    CHECK(word_to_string(1, words[2]) == "a1-");
    CHECK(word_to_string(1, words[3]) == "a1 a1");
    CHECK(word_to_string(1, words[4]) == "a1- a1-");

    std::vector<ReducedWord> f2 = free_ball_enumerate(2, 1, 100);
    REQUIRE(f2.size() == 5);
    CHECK(word_to_string(2, f2[1]) == "a1");
    CHECK(word_to_string(2, f2[2]) == "a2");
    CHECK(word_to_string(2, f2[3]) == "a1-");
    CHECK(word_to_string(2, f2[4]) == "a2-");
}

TEST_CASE("no word contains an inverse pair") {
    for (const ReducedWord& w : free_ball_enumerate(2, 4, 2000000))
        for (std::size_t i = 1; i < w.size(); ++i)
            CHECK(w[i] != (w[i - 1] + 2) % 4);
}

TEST_CASE("enumeration respects the cap") {
    CHECK_THROWS_AS(free_ball_enumerate(3, 8, 10), CapExceeded);
    CHECK_THROWS_AS(free_ball_enumerate(0, 2, 10), DomainError);
    CHECK_THROWS_AS(free_ball_enumerate(1, -1, 10), DomainError);
}

TEST_CASE("ball counts stay below the crude power bound") {
    for (long long k = 1; k <= 8; ++k)
        for (long long p = 3; p <= 10; ++p)
            CHECK(verify_ball_bound(k, p));
    CHECK_THROWS_AS(verify_ball_bound(1, 2), DomainError);
}

TEST_CASE("presentation counts compare exponents exactly") {
    PresentationCount pc = count_presentations(1, 3);
    CHECK(pc.count_exponent == 7);    // |B(3)| in rank 1 = 1+2+2+2
    CHECK(pc.cap_exponent == 8);      // (2k)^p = 2^3
    CHECK(pc.count.exact());
    CHECK(pc.count.int_value() == 128);
    CHECK(pc.cap.int_value() == 256);
    CHECK(pc.leq);

    PresentationCount big = count_presentations(3, 9);
    CHECK(big.leq);
    CHECK(big.count_exponent < big.cap_exponent);
    // exponents far beyond materialization stay comparable
    PresentationCount huge = count_presentations(8, 10);
    CHECK(huge.leq);
    CHECK_FALSE(huge.count.exact());
}

TEST_CASE("census sums over presentation sizes: frozen values") {
    BigValue q13 = presentation_count_bound(1, 3);
    REQUIRE(q13.exact());
    CHECK(q13.int_value() == 257);  // 2^0 + 2^8

    BigValue q23 = presentation_count_bound(2, 3);
    REQUIRE(q23.exact());
    CHECK(q23.int_value() == BigInt(257) + (BigInt(1) << 64));

    CHECK_THROWS_AS(presentation_count_bound(0, 3), DomainError);
    CHECK_THROWS_AS(presentation_count_bound(1, 2), DomainError);

    // giant N switches to the 64-term tail in log2 form
    BigValue tail = presentation_count_bound(400000, 3);
    CHECK_FALSE(tail.exact());
    CHECK(to_double(tail.log2()) > 0);
}
