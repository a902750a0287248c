#include <catch2/catch.hpp>

#include <random>

#include "helpers.hpp"
#include "rps/guess.hpp"
#include "rps/oracle.hpp"

using namespace rps;
using rps::testing::binomial;

namespace {

std::vector<Rational> central_binomial_terms(int count) {
    std::vector<Rational> t;
    for (int n = 0; n < count; ++n)
        t.push_back(n % 2 == 0 ? binomial(n, n / 2) : Rational(0));
    return t;
}

std::vector<Rational> stanley_terms(int count) {
    InstanceSpec spec = make_pair_spec(2, Word::parse("HT", 2), Word::parse("TT", 2));
    return to_rationals(oracle_terms(spec, count - 1));
}

MultiPoly bivariate(std::initializer_list<std::tuple<int, int, long>> terms) {
    MultiPoly q(std::vector<std::string>{"t", "P"});
    for (const auto& [i, j, c] : terms) q.add_term({i, j}, Rational(c));
    return q;
}

} // namespace

TEST_CASE("central binomial equation") {
    auto eq = guess_algebraic(central_binomial_terms(30), 2, 2);
    REQUIRE(eq.has_value());
    // canonical: lowest t-term of the P^2 coefficient is positive
    CHECK(eq->q == bivariate({{0, 0, -1}, {0, 2, 1}, {2, 2, -4}}));
    CHECK(eq->deg_t == 2);
    CHECK(eq->deg_p == 2);
    CHECK(eq->verified_order == 29);
}

TEST_CASE("rational series gives a linear equation") {
    std::vector<Rational> terms;
    Integer p(1);
    for (int n = 0; n < 20; ++n) {
        terms.emplace_back(p);
        p *= 2;
    }
    auto eq = guess_algebraic(terms, 1, 1);
    REQUIRE(eq.has_value());
    // canonical form of (1-2t)P - 1 = 0
    CHECK(eq->q == bivariate({{0, 0, -1}, {0, 1, 1}, {1, 1, -2}}));
}

TEST_CASE("stanley equation is quadratic in P") {
    auto eq = guess_algebraic_auto(stanley_terms(51), 12, 12);
    REQUIRE(eq.has_value());
    CHECK(eq->deg_p == 2);
    CHECK(eq->verified_order == 50);
}

TEST_CASE("verify_algebraic grades partial matches") {
    AlgebraicEquation pm1;
    pm1.q = bivariate({{0, 0, -1}, {0, 1, 1}}); // P - 1
    pm1.deg_t = 0;
    pm1.deg_p = 1;
    CHECK(verify_algebraic(pm1, {Rational(1), Rational(0)}) == 1); // exact relation
    CHECK(verify_algebraic(pm1, {Rational(1), Rational(2)}) == 0); // mismatch at order 1
    CHECK(verify_algebraic(pm1, {Rational(2)}) == -1);             // mismatch at order 0
}

TEST_CASE("corrupted equation is rejected by verification") {
    auto terms = central_binomial_terms(50);
    auto eq = guess_algebraic(terms, 2, 2);
    REQUIRE(eq.has_value());
    AlgebraicEquation bad = *eq;
    bad.q.add_term({1, 1}, Rational(3)); // deliberate corruption
    CHECK(verify_algebraic(bad, terms) < 49);
    CHECK(verify_algebraic(*eq, terms) == 49);
}

TEST_CASE("corrupted terms are rejected by the guessers") {
    auto terms = stanley_terms(51);
    terms[37] += Rational(1);
    CHECK_FALSE(guess_algebraic_auto(terms, 12, 12).has_value());
    CHECK_FALSE(guess_recurrence(terms, 8, 12).has_value());
}

TEST_CASE("central binomial recurrence") {
    auto rec = guess_recurrence(central_binomial_terms(40), 4, 4);
    REQUIRE(rec.has_value());
    REQUIRE(rec->order() == 2);
    CHECK(rec->coeffs[2] == UniPoly({Rational(2), Rational(1)}, "n"));  // n + 2
    CHECK(rec->coeffs[1].is_zero());
    CHECK(rec->coeffs[0] == UniPoly({Rational(-4), Rational(-4)}, "n")); // -(4n + 4)
    CHECK(rec->verified_to == 37);
}

TEST_CASE("geometric sequence recurrence") {
    for (long m : {2L, 3L, 5L}) {
        std::vector<Rational> terms;
        Integer p(1);
        for (int n = 0; n < 25; ++n) {
            terms.emplace_back(p);
            p *= m;
        }
        auto rec = guess_recurrence(terms, 6, 6);
        REQUIRE(rec.has_value());
        REQUIRE(rec->order() == 1);
        CHECK(rec->coeffs[1] == UniPoly({Rational(1)}, "n"));
        CHECK(rec->coeffs[0] == UniPoly({Rational(-m)}, "n"));
    }
}

TEST_CASE("stanley recurrence verifies on all supplied terms") {
    auto terms = stanley_terms(51);
    auto rec = guess_recurrence(terms, 8, 12);
    REQUIRE(rec.has_value());
    CHECK(rec->verified_from == 0);
    CHECK(rec->verified_to == 50 - rec->order());
    CHECK_FALSE(rec->coeffs.back().is_zero());
}

TEST_CASE("guessing is deterministic and scale invariant") {
    auto terms = stanley_terms(51);
    auto rec1 = guess_recurrence(terms, 8, 12);
    auto rec2 = guess_recurrence(terms, 8, 12);
    REQUIRE(rec1.has_value());
    REQUIRE(rec2.has_value());
    CHECK(rec1->coeffs == rec2->coeffs);

    std::vector<Rational> scaled;
    for (const auto& x : terms) scaled.push_back(x * Rational(3, 7));
    auto rec3 = guess_recurrence(scaled, 8, 12);
    REQUIRE(rec3.has_value());
    CHECK(rec3->coeffs == rec1->coeffs);

    auto eq1 = guess_algebraic_auto(terms, 12, 12);
    auto eq2 = guess_algebraic_auto(terms, 12, 12);
    REQUIRE(eq1.has_value());
    REQUIRE(eq2.has_value());
    CHECK(eq1->q == eq2->q);
}

TEST_CASE("insufficient terms raise usage errors") {
    std::vector<Rational> few{Rational(1), Rational(2), Rational(4)};
    CHECK_THROWS_AS(guess_algebraic(few, 2, 2), UsageError);
    CHECK_THROWS_AS(guess_recurrence(few, 3, 3), UsageError);
    CHECK_THROWS_AS(guess_algebraic(few, 0, 0), UsageError);
}

TEST_CASE("noise admits no relation") {
    std::mt19937 rng(2025);
    std::uniform_int_distribution<long> c(1, 1000000);
    std::vector<Rational> noise;
    for (int i = 0; i < 30; ++i) noise.emplace_back(c(rng));
    CHECK_FALSE(guess_algebraic(noise, 2, 2).has_value());
    CHECK_FALSE(guess_recurrence(noise, 3, 3).has_value());
}
