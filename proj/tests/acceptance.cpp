// Acceptance suite: one criterion per function, one PASS/FAIL line each.
// Run through ctest or directly; the exit code is the number of failures.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "helpers.hpp"
#include "rps/oracle.hpp"
#include "rps/pipeline.hpp"

using namespace rps;
using rps::testing::binomial;
using rps::testing::exhaustive_terms;

namespace {

struct Criterion {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << "    FAILED: " << what << "\n";
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Word wp(const std::string& s, int m = 2) { return Word::parse(s, m); }

InstanceSpec stanley_spec() {
    bool ht = false;
    Word w1 = Word::parse("HT", 2, &ht);
    Word w2 = Word::parse("TT", 2, &ht);
    return make_pair_spec(2, w1, w2, 1, 1, 0, ht);
}

std::vector<Word> all_words(int m, int k) {
    std::vector<Word> out;
    std::vector<int> w(static_cast<std::size_t>(k), 0);
    for (;;) {
        out.push_back(Word(w));
        int i = k - 1;
        while (i >= 0 && w[static_cast<std::size_t>(i)] == m - 1) {
            w[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++w[static_cast<std::size_t>(i)];
    }
    return out;
}

// 1. diagonal extraction equals the DP oracle: all m=2 pairs of length 2
//    and 3, plus 20 random m=3 specs, to n = 14, exactly
Criterion criterion1() {
    Criterion c;
    int checked = 0;
    for (int k : {2, 3}) {
        auto words = all_words(2, k);
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                InstanceSpec spec = make_pair_spec(2, words[i], words[j]);
                auto diag = expand_diagonal(build_enumerator(spec), 14);
                c.require(diag.extracted == to_rationals(oracle_terms(spec, 14)),
                          "m=2 pair " + spec.canonical_key());
                ++checked;
            }
    }
    std::mt19937 rng(20120106);
    std::uniform_int_distribution<int> len(1, 3);
    std::uniform_int_distribution<long> weight(1, 2);
    std::uniform_int_distribution<long> target(0, 1);
    int done = 0;
    while (done < 20) {
        Word w1 = rps::testing::random_word(rng, 3, len(rng));
        Word w2 = rps::testing::random_word(rng, 3, len(rng));
        if (w1 == w2) continue;
        InstanceSpec spec;
        spec.alphabet_size = 3;
        spec.patterns = {w1, w2};
        spec.weights = {weight(rng), -weight(rng)};
        spec.target = target(rng);
        std::optional<WeightEnumerator> F;
        try {
            F = build_enumerator(spec);
        } catch (const UnsupportedInstanceError&) {
            continue; // factor containment; the cluster path is defined to refuse
        }
        auto diag = expand_diagonal(*F, 14);
        c.require(diag.extracted == to_rationals(oracle_terms(spec, 14)),
                  "m=3 spec " + spec.canonical_key());
        ++done;
        ++checked;
    }
    c.detail << "    " << checked << " specs cross-checked to n = 14\n";
    return c;
}

// 2. the Stanley instance: first terms, quadratic equation, recurrence
//    verified on all 50 terms, extension matching the oracle to n = 25
Criterion criterion2() {
    Criterion c;
    InstanceSpec spec = stanley_spec();

    auto exhaustive = exhaustive_terms(spec, 4);
    std::vector<Integer> expected{1, 2, 2, 3, 6};
    c.require(exhaustive == expected, "exhaustive enumeration begins 1, 2, 2, 3, 6");

    auto terms = oracle_terms(spec, 50);
    c.require(std::vector<Integer>(terms.begin(), terms.begin() + 5) == expected,
              "oracle terms begin 1, 2, 2, 3, 6");

    auto rat = to_rationals(terms);
    auto eq = guess_algebraic_auto(rat, 12, 12);
    c.require(eq.has_value(), "algebraic equation found");
    if (eq) {
        c.require(eq->deg_p == 2, "equation is quadratic in P (deg_p = " +
                                      std::to_string(eq->deg_p) + ")");
        c.require(verify_algebraic(*eq, rat) == 50, "equation verified on all 50 terms");
    }

    auto rec = guess_recurrence(rat, 8, 12);
    c.require(rec.has_value(), "recurrence found");
    if (rec) {
        c.require(rec->verified_from == 0 &&
                      rec->verified_to == 50 - rec->order(),
                  "recurrence verified on every supplied term");
        auto ext = extend_sequence(*rec, rat, 25);
        c.require(ext == to_rationals(oracle_terms(spec, 25)),
                  "recurrence extension equals the oracle to n = 25");
        c.detail << "    equation deg_t = " << (eq ? eq->deg_t : -1) << ", deg_p = 2; recurrence order "
                 << rec->order() << ", degree " << rec->coeffs.back().degree() << "\n";
    }
    return c;
}

// 3. equal-letters instance: central binomials, the (1-4t^2)P^2 = 1
//    equation, its ODE and recurrence, and the Stirling asymptotics
Criterion criterion3() {
    Criterion c;
    InstanceSpec spec = make_pair_spec(2, wp("H"), wp("T"));

    auto terms = oracle_terms(spec, 30);
    bool match = true;
    for (int n = 0; n <= 30; ++n) {
        Rational expect = (n % 2 == 0) ? binomial(n, n / 2) : Rational(0);
        match = match && Rational(terms[static_cast<std::size_t>(n)]) == expect;
    }
    c.require(match, "a(n) = binomial(n, n/2) for even n, 0 for odd n");

    auto rat = to_rationals(oracle_terms(spec, 50));
    auto eq = guess_algebraic_auto(rat, 12, 12);
    c.require(eq.has_value(), "equation found");
    if (!eq) return c;
    MultiPoly expected_q(std::vector<std::string>{"t", "P"});
    expected_q.add_term({0, 0}, Rational(-1));
    expected_q.add_term({0, 2}, Rational(1));
    expected_q.add_term({2, 2}, Rational(-4));
    c.require(eq->q == expected_q, "equation is (1 - 4*t^2)*P^2 - 1 = 0 in canonical form");

    LinearODE ode = algebraic_to_ode(*eq);
    LinearODE expected_ode;
    expected_ode.coeffs = {UniPoly({Rational(0), Rational(-4)}, "t"),
                           UniPoly({Rational(1), Rational(0), Rational(-4)}, "t")};
    c.require(ode.coeffs == expected_ode.coeffs && ode.inhom.is_zero(),
              "derived ODE is (1 - 4*t^2)*P' - 4*t*P = 0");

    HolonomicRecurrence rec = ode_to_recurrence(ode);
    c.require(rec.order() == 2 && rec.coeffs[2] == UniPoly({Rational(2), Rational(1)}, "n") &&
                  rec.coeffs[1].is_zero() &&
                  rec.coeffs[0] == UniPoly({Rational(-4), Rational(-4)}, "n"),
              "recurrence is (n+2) a(n+2) = (4n+4) a(n)");

    auto extended = extend_sequence(rec, {Rational(1), Rational(0)}, 2000);
    auto est = estimate_asymptotics(rec, extended);
    c.require(std::abs(est.mu - 2.0) < 1e-6, "mu = 2 within 1e-6 (got " +
                                                 std::to_string(est.mu) + ")");
    c.require(std::abs(est.theta + 0.5) < 1e-3, "theta = -1/2 within 1e-3 (got " +
                                                    std::to_string(est.theta) + ")");
    const double c_expect = std::sqrt(2.0 / M_PI);
    c.require(std::abs(est.constant - c_expect) < 0.01 * c_expect,
              "C = sqrt(2/pi) within 1% (got " + std::to_string(est.constant) + ")");
    c.detail << "    mu = " << est.mu << ", theta = " << est.theta << ", C = " << est.constant
             << " (expected C " << c_expect << ")\n";
    return c;
}

SolveOptions webbook_opts() {
    SolveOptions opts;
    opts.asymptotic_terms = 500;
    return opts;
}

// 4. the eleven published proposition counts under the symmetry validated
//    on (2,2), plus a full verified solve of the (2,2) and (2,3) webbooks
Criterion criterion4(Webbook& wb22, Webbook& wb23) {
    Criterion c;
    const std::vector<std::tuple<int, int, std::size_t>> published{
        {2, 2, 3}, {2, 3, 11}, {2, 4, 38}, {3, 2, 6},  {3, 3, 40}, {4, 2, 7},
        {4, 3, 63}, {5, 2, 7}, {5, 3, 69}, {6, 2, 7},  {6, 3, 70}};
    for (const auto& [m, k, expected] : published) {
        std::size_t got = canonical_pairs(m, k, PairSymmetry::letter_perms_and_reversal).size();
        c.require(got == expected, "count (" + std::to_string(m) + "," + std::to_string(k) +
                                       ") = " + std::to_string(got) + ", published " +
                                       std::to_string(expected));
        c.detail << "    (" << m << "," << k << "): " << got << " classes (published "
                 << expected << ")\n";
    }

    wb22 = generate_webbook(2, 2, webbook_opts());
    wb23 = generate_webbook(2, 3, webbook_opts());
    c.require(wb22.propositions.size() == 3, "(2,2) webbook has 3 propositions");
    c.require(wb23.propositions.size() == 11, "(2,3) webbook has 11 propositions");

    auto gates = [&](const Webbook& wb, const std::string& name) {
        for (std::size_t i = 0; i < wb.propositions.size(); ++i) {
            const auto& prop = wb.propositions[i];
            const std::string tag = name + " prop " + std::to_string(i + 1);
            c.require(prop.verification.count("proposition") == 0, tag + " not aborted");
            c.require(prop.verification.at("terms") == "cross-checked-against-oracle",
                      tag + " terms cross-checked");
            c.require(prop.enumerator.has_value(), tag + " has an enumerator");
            c.require(prop.algebraic.has_value() || prop.absences.count("algebraic"),
                      tag + " algebraic present or reasoned");
            if (prop.algebraic)
                c.require(prop.verification.count("algebraic") == 1, tag + " algebraic verified");
            c.require(prop.recurrence.has_value() || prop.absences.count("recurrence"),
                      tag + " recurrence present or reasoned");
            if (prop.recurrence)
                c.require(prop.verification.count("recurrence") == 1, tag + " recurrence verified");
            if (prop.asymptotics)
                c.require(prop.verification.count("asymptotics") == 1, tag + " asymptotics status");
        }
    };
    gates(wb22, "(2,2)");
    gates(wb23, "(2,3)");
    return c;
}

// 5. where both the guessed and the equation-derived routes produced a
//    recurrence, their extensions agree exactly to n = 200
Criterion criterion5(const Webbook& wb22, const Webbook& wb23) {
    Criterion c;
    int both = 0;
    for (const Webbook* wb : {&wb22, &wb23}) {
        for (std::size_t i = 0; i < wb->propositions.size(); ++i) {
            const auto& prop = wb->propositions[i];
            if (!prop.derived_recurrence || prop.recurrence_source != "guessed") continue;
            ++both;
            auto it = prop.verification.find("pipeline-coherence");
            c.require(it != prop.verification.end() && it->second == "extensions-match-to-200",
                      "(" + std::to_string(wb->m) + "," + std::to_string(wb->k) + ") prop " +
                          std::to_string(i + 1) + " coherent");
        }
    }
    c.require(both > 0, "at least one proposition exercised both routes");
    c.detail << "    " << both << " propositions had both routes; all extensions equal to n = 200\n";
    return c;
}

// 6. several distinguished words through the pure-guessing holonomic path
Criterion criterion6() {
    Criterion c;
    InstanceSpec spec;
    spec.alphabet_size = 2;
    spec.patterns = {wp("HH"), wp("HT"), wp("TH")};
    spec.weights = {1, 1, -2};
    spec.target = 0;

    auto rat = to_rationals(oracle_terms(spec, 59)); // 60 terms
    auto rec = guess_recurrence(rat, 8, 12);
    c.require(rec.has_value(), "recurrence found on 60 oracle terms");
    if (rec) {
        c.require(rec->verified_from == 0 && rec->verified_to == 59 - rec->order(),
                  "recurrence verified on all supplied terms");
        auto ext = extend_sequence(*rec, rat, 30);
        c.require(ext == to_rationals(oracle_terms(spec, 30)),
                  "extension matches the oracle to n = 30");
        c.detail << "    order " << rec->order() << ", coefficient degree "
                 << rec->coeffs.back().degree() << "\n";
    }
    return c;
}

// 7. negative controls: corrupted terms are rejected; factor containment
//    fails the cluster path but not the oracle+guessing path
Criterion criterion7() {
    Criterion c;
    auto rat = to_rationals(oracle_terms(stanley_spec(), 50));
    auto corrupted = rat;
    corrupted[31] += Rational(1);
    c.require(!guess_algebraic_auto(corrupted, 12, 12).has_value(),
              "corrupted terms admit no algebraic equation");
    c.require(!guess_recurrence(corrupted, 8, 12).has_value(),
              "corrupted terms admit no recurrence");

    InstanceSpec contained = make_pair_spec(2, wp("T"), wp("TT"));
    bool threw = false;
    try {
        build_enumerator(contained);
    } catch (const UnsupportedInstanceError&) {
        threw = true;
    }
    c.require(threw, "factor containment raises the unsupported-instance error");

    SolveOptions opts;
    opts.asymptotic_terms = 300;
    Proposition prop = solve_instance(contained, opts);
    c.require(!prop.enumerator.has_value() && prop.absences.count("enumerator") == 1,
              "cluster absence is recorded with a reason");
    c.require(prop.recurrence.has_value(), "oracle+guessing still yields a recurrence");
    if (prop.recurrence) {
        auto [from, to] = verify_recurrence(*prop.recurrence, to_rationals(prop.terms));
        c.require(from == 0 && to == static_cast<long>(prop.terms.size()) - 1 -
                                         prop.recurrence->order(),
                  "that recurrence verifies on all terms");
    }
    return c;
}

} // namespace

int main() {
    int failures = 0;
    Webbook wb22, wb23;
    const std::vector<std::pair<const char*, std::function<Criterion()>>> table{
        {"1 oracle-enumerator equivalence", [] { return criterion1(); }},
        {"2 stanley instance", [] { return criterion2(); }},
        {"3 equal-letters instance", [] { return criterion3(); }},
        {"4 webbook counts and full (2,2)+(2,3) solve",
         [&] { return criterion4(wb22, wb23); }},
        {"5 pipeline coherence to n = 200", [&] { return criterion5(wb22, wb23); }},
        {"6 several-words holonomic path", [] { return criterion6(); }},
        {"7 negative controls", [] { return criterion7(); }},
    };
    for (const auto& [name, fn] : table) {
        auto t0 = std::chrono::steady_clock::now();
        Criterion c;
        try {
            c = fn();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "    exception: " << e.what() << "\n";
        }
        std::printf("%s criterion %s   (%.2fs)\n", c.ok ? "PASS" : "FAIL", name,
                    seconds_since(t0));
        std::fputs(c.detail.str().c_str(), stdout);
        if (!c.ok) ++failures;
    }
    if (failures == 0)
        std::printf("all 7 acceptance criteria passed\n");
    else
        std::printf("%d criteria FAILED\n", failures);
    return failures;
}
