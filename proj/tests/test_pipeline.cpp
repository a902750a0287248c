#include <catch2/catch.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "helpers.hpp"
#include "rps/pipeline.hpp"

using namespace rps;

namespace {

Word wp(const std::string& s, int m = 2) { return Word::parse(s, m); }

InstanceSpec stanley_spec() {
    bool ht = false;
    Word w1 = Word::parse("HT", 2, &ht);
    Word w2 = Word::parse("TT", 2, &ht);
    return make_pair_spec(2, w1, w2, 1, 1, 0, ht);
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("rps-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("solve the stanley instance end to end") {
    Proposition prop = solve_instance(stanley_spec());

    REQUIRE(prop.terms.size() == 51);
    CHECK(prop.terms[0] == 1);
    CHECK(prop.terms[1] == 2);
    CHECK(prop.terms[2] == 2);
    CHECK(prop.terms[3] == 3);
    CHECK(prop.terms[4] == 6);

    REQUIRE(prop.enumerator.has_value());
    CHECK(prop.verification.at("enumerator") == "cross-checked-against-oracle");
    REQUIRE(prop.algebraic.has_value());
    CHECK(prop.algebraic->deg_p == 2);
    REQUIRE(prop.ode.has_value());
    REQUIRE(prop.recurrence.has_value());
    CHECK(prop.recurrence_source == "guessed");
    REQUIRE(prop.derived_recurrence.has_value());
    CHECK(prop.verification.at("pipeline-coherence") == "extensions-match-to-200");
    REQUIRE(prop.asymptotics.has_value());
    CHECK(prop.asymptotics->reliable);
    CHECK(prop.asymptotics->mu == Approx(2.0).margin(1e-6));
    CHECK(prop.absences.empty());
}

TEST_CASE("several distinguished words take the holonomic path") {
    InstanceSpec spec;
    spec.alphabet_size = 2;
    spec.patterns = {wp("HH"), wp("HT"), wp("TH")};
    spec.weights = {1, 1, -2};
    spec.target = 0;
    SolveOptions opts;
    opts.terms = 60;
    opts.asymptotic_terms = 400;
    Proposition prop = solve_instance(spec, opts);

    CHECK(prop.enumerator.has_value()); // length-2 patterns never contain one another
    REQUIRE(prop.recurrence.has_value());
    auto oracle30 = oracle_terms(spec, 30);
    auto ext = extend_sequence(*prop.recurrence, to_rationals(prop.terms), 30);
    for (int n = 0; n <= 30; ++n)
        CHECK(ext[static_cast<std::size_t>(n)] == Rational(oracle30[static_cast<std::size_t>(n)]));
}

TEST_CASE("factor containment degrades to the oracle path") {
    InstanceSpec spec = make_pair_spec(2, wp("T"), wp("TT"));
    SolveOptions opts;
    opts.asymptotic_terms = 300;
    Proposition prop = solve_instance(spec, opts);
    CHECK_FALSE(prop.enumerator.has_value());
    CHECK(prop.absences.count("enumerator") == 1);
    REQUIRE(prop.recurrence.has_value()); // the all-H word is the only solution
    CHECK(prop.terms[7] == 1);
    REQUIRE(prop.asymptotics.has_value());
    CHECK(prop.asymptotics->mu == Approx(1.0).margin(1e-9));
}

TEST_CASE("rejected specs raise usage errors") {
    InstanceSpec bad;
    bad.alphabet_size = 2;
    bad.patterns = {wp("HT"), wp("HT")};
    bad.weights = {1, -1};
    CHECK_THROWS_AS(solve_instance(bad), UsageError);
}

TEST_CASE("proposition json round-trips") {
    SolveOptions opts;
    opts.terms = 40;
    opts.asymptotic_terms = 300;
    Proposition prop = solve_instance(stanley_spec(), opts);
    Json j = to_json(prop);
    Proposition back = proposition_from_json(j);
    CHECK(to_json(back) == j);
    CHECK(back.spec == prop.spec);
    CHECK(back.terms == prop.terms);
    CHECK(back.spec.ht_display);
}

TEST_CASE("text output is deterministic") {
    SolveOptions opts;
    opts.terms = 30;
    opts.asymptotic_terms = 300;
    Proposition a = solve_instance(stanley_spec(), opts);
    Proposition b = solve_instance(stanley_spec(), opts);
    CHECK(proposition_text(a) == proposition_text(b));
    CHECK(to_json(a).dump() == to_json(b).dump());
}

TEST_CASE("rendering matches the canonical shapes") {
    AlgebraicEquation eq;
    eq.q = MultiPoly(std::vector<std::string>{"t", "P"});
    eq.q.add_term({0, 0}, Rational(-1));
    eq.q.add_term({0, 2}, Rational(1));
    eq.q.add_term({2, 2}, Rational(-4));
    eq.deg_t = 2;
    eq.deg_p = 2;
    CHECK(equation_text(eq) == "(1 - 4*t^2)*P^2 - 1 = 0");

    HolonomicRecurrence rec;
    rec.coeffs = {UniPoly({Rational(-4), Rational(-4)}, "n"), UniPoly("n"),
                  UniPoly({Rational(2), Rational(1)}, "n")};
    CHECK(recurrence_text(rec) == "(n + 2)*a(n+2) - (4*n + 4)*a(n) = 0");

    LinearODE ode;
    ode.coeffs = {UniPoly({Rational(0), Rational(-4)}, "t"),
                  UniPoly({Rational(1), Rational(0), Rational(-4)}, "t")};
    CHECK(ode_text(ode) == "(1 - 4*t^2)*P' - 4*t*P = 0");

    std::vector<Integer> seq{Integer(1), Integer(2), Integer(2)};
    CHECK(sequence_file_text(seq) == "0 1\n1 2\n2 2\n");
}

TEST_CASE("multipoly text parses back") {
    std::vector<std::string> vars{"t", "z1", "z2"};
    MultiPoly p(vars);
    p.add_term({0, 0, 0}, Rational(1));
    p.add_term({1, 0, 0}, Rational(-2));
    p.add_term({2, 1, 0}, Rational(1));
    p.add_term({3, 1, 2}, Rational(-5, 3));
    CHECK(parse_multipoly(p.str(), vars) == p);
    CHECK(parse_multipoly("0", vars).is_zero());
    CHECK(parse_multipoly("-1 + 1*t", vars) ==
          MultiPoly::monomial(vars, {1, 0, 0}, Rational(1)) - MultiPoly::constant(vars, Rational(1)));
    CHECK_THROWS_AS(parse_multipoly("1*q", vars), UsageError);
}

TEST_CASE("cache round-trips and never changes results") {
    TempDir tmp;
    SolveOptions opts;
    opts.terms = 30;
    opts.asymptotic_terms = 300;
    opts.cache_dir = tmp.path.string();

    Proposition cold = solve_instance(stanley_spec(), opts);
    const std::string key = proposition_cache_key(stanley_spec(), opts);
    CHECK(std::filesystem::exists(cache_path_for(opts.cache_dir, key)));

    Proposition warm = solve_instance(stanley_spec(), opts);
    CHECK(to_json(cold) == to_json(warm));

    SolveOptions no_cache = opts;
    no_cache.cache_dir.clear();
    Proposition direct = solve_instance(stanley_spec(), no_cache);
    CHECK(to_json(direct) == to_json(warm));

    SECTION("store is idempotent") {
        cache_store(opts.cache_dir, key, cold);
        cache_store(opts.cache_dir, key, cold);
        auto loaded = cache_load(opts.cache_dir, key);
        REQUIRE(loaded.has_value());
        CHECK(to_json(*loaded) == to_json(cold));
    }

    SECTION("unknown key misses") {
        CHECK_FALSE(cache_load(opts.cache_dir, "no-such-key").has_value());
    }

    SECTION("corrupt entries are recomputed") {
        std::ofstream out(cache_path_for(opts.cache_dir, key), std::ios::trunc);
        out << "{ not json";
        out.close();
        CHECK_FALSE(cache_load(opts.cache_dir, key).has_value());
        Proposition again = solve_instance(stanley_spec(), opts); // recomputes and re-stores
        CHECK(to_json(again) == to_json(cold));
        CHECK(cache_load(opts.cache_dir, key).has_value());
    }
}

TEST_CASE("small webbook solves completely") {
    SolveOptions opts;
    opts.terms = 40;
    opts.asymptotic_terms = 300;
    Webbook wb = generate_webbook(2, 2, opts);
    CHECK(wb.propositions.size() == 3);
    CHECK(wb.classes.size() == 3);
    for (const auto& prop : wb.propositions) {
        CHECK(prop.verification.at("terms") == "cross-checked-against-oracle");
        CHECK(prop.recurrence.has_value());
        CHECK(prop.verification.count("proposition") == 0);
    }
    std::string text = webbook_text(wb);
    CHECK(text.find("Proposition 3.") != std::string::npos);
    Json j = to_json(wb);
    CHECK(j.at("propositions").size() == 3);
    // the webbook is deterministic too
    Webbook wb2 = generate_webbook(2, 2, opts);
    CHECK(to_json(wb2).dump() == j.dump());
}
