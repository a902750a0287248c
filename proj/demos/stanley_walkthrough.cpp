// Stage-by-stage walkthrough of the library on one instance: count binary
// words with as many HT factors as TT factors, then recover the generating
// function's equation, differential equation, recurrence, and growth.

#include <cstdio>

#include "rps/asymptotics.hpp"
#include "rps/diagonal.hpp"
#include "rps/holonomic.hpp"
#include "rps/oracle.hpp"
#include "rps/report.hpp"

int main() {
    using namespace rps;

    InstanceSpec spec = make_pair_spec(2, Word::parse("HT", 2), Word::parse("TT", 2));
    spec.ht_display = true;

    // exact terms two ways: DP oracle, and constant-term extraction from
    // the cluster-method weight enumerator
    auto terms = oracle_terms(spec, 50);
    WeightEnumerator F = build_enumerator(spec);
    DiagonalSeries diag = expand_diagonal(F, 50);
    std::printf("weight enumerator: (%s) / (%s)\n", F.value.num.str().c_str(),
                F.value.den.str().c_str());
    std::printf("oracle and diagonal agree: %s\n",
                diag.extracted == to_rationals(terms) ? "yes" : "NO");

    auto rational_terms = to_rationals(terms);
    auto eq = guess_algebraic_auto(rational_terms, 12, 12);
    if (!eq) {
        std::printf("no algebraic equation within budget\n");
        return 1;
    }
    std::printf("equation: %s\n", equation_text(*eq).c_str());

    LinearODE ode = algebraic_to_ode(*eq);
    std::printf("ode: %s\n", ode_text(ode).c_str());

    HolonomicRecurrence rec = ode_to_recurrence(ode);
    std::printf("recurrence: %s\n", recurrence_text(rec).c_str());

    auto extended = extend_sequence(rec, rational_terms, 2000);
    AsymptoticEstimate est = estimate_asymptotics(rec, extended);
    std::printf("growth: %s\n", asymptotics_text(est).c_str());
    return 0;
}
