#pragma once

#include <atomic>
#include <thread>

#include "rps/cache.hpp"
#include "rps/diagonal.hpp"
#include "rps/oracle.hpp"
#include "rps/proposition.hpp"

namespace rps {

namespace detail {

// Longest interval [from, to] ending at the last checkable index on which
// the recurrence annihilates the terms. A derivation can be valid only
// from a small offset onward; the interval records exactly what holds.
inline std::pair<long, long> verify_recurrence_tail(const HolonomicRecurrence& rec,
                                                    const std::vector<Rational>& terms) {
    const int d = rec.order();
    const long last = static_cast<long>(terms.size()) - 1 - d;
    long from = last + 1;
    for (long n = last; n >= 0; --n) {
        Rational s;
        for (int i = 0; i <= d; ++i)
            s += rec.coeffs[static_cast<std::size_t>(i)].eval(Rational(n)) *
                 terms[static_cast<std::size_t>(n + i)];
        if (!s.is_zero()) break;
        from = n;
    }
    return {from, last};
}

inline std::string range_status(const char* what, long from, long to) {
    return std::string(what) + ":" + std::to_string(from) + ".." + std::to_string(to);
}

} // namespace detail

/*
 * Solve one instance end to end. Stage failures never abort the run:
 * each artifact is either present with a passing verification status or
 * absent with an explicit reason. The oracle terms are the ground truth
 * every other artifact is checked against.
 */
inline Proposition solve_instance(const InstanceSpec& spec, const SolveOptions& opts = {}) {
    spec.validate();
    if (opts.terms < 0) throw UsageError("solve_instance: negative term count");

    const std::string cache_key = proposition_cache_key(spec, opts);
    if (!opts.cache_dir.empty())
        if (auto cached = cache_load(opts.cache_dir, cache_key)) return *cached;

    Proposition prop;
    prop.spec = spec;
    std::string notes;

    // ground-truth terms
    prop.terms = oracle_terms(spec, opts.terms);
    std::vector<Rational> terms = to_rationals(prop.terms);
    prop.verification["terms"] = "oracle";

    // cluster + diagonal cross-check
    bool aborted = false;
    try {
        WeightEnumerator F = build_enumerator(spec);
        DiagonalSeries diag = expand_diagonal(F, opts.terms);
        if (diag.extracted == terms) {
            prop.enumerator = std::move(F);
            prop.verification["enumerator"] = "cross-checked-against-oracle";
            prop.verification["terms"] = "cross-checked-against-oracle";
        } else {
            prop.verification["terms"] = "failed";
            prop.verification["proposition"] = "failed:diagonal-oracle-mismatch";
            notes += "diagonal extraction disagreed with the oracle; downstream stages skipped. ";
            aborted = true;
        }
    } catch (const UnsupportedInstanceError& e) {
        prop.absences["enumerator"] = e.what();
        notes += "cluster path unsupported, oracle-only run. ";
    }

    if (aborted) {
        prop.notes = notes;
        return prop;
    }

    // guessing window, escalated once when the first pass finds nothing
    std::vector<Rational> window = terms;
    auto escalate_window = [&] {
        if (!opts.escalate) return false;
        if (static_cast<long>(window.size()) > opts.terms + 1) return false;
        window = to_rationals(oracle_terms(spec, 2 * opts.terms));
        notes += "term window doubled to " + std::to_string(window.size()) + ". ";
        return true;
    };

    // algebraic equation
    auto eq = guess_algebraic_auto(window, opts.max_deg_t, opts.max_deg_p, opts.guard);
    if (!eq && escalate_window())
        eq = guess_algebraic_auto(window, opts.max_deg_t, opts.max_deg_p, opts.guard);
    if (eq) {
        eq->verified_order = verify_algebraic(*eq, window);
        prop.verification["algebraic"] =
            "verified-to-order:" + std::to_string(eq->verified_order);
        prop.algebraic = std::move(*eq);
    } else {
        prop.absences["algebraic"] = "budget exceeded (deg_t <= " +
                                     std::to_string(opts.max_deg_t) + ", deg_p <= " +
                                     std::to_string(opts.max_deg_p) + " on " +
                                     std::to_string(window.size()) + " terms)";
    }

    // ODE and the derived recurrence
    if (prop.algebraic) {
        try {
            LinearODE ode = algebraic_to_ode(*prop.algebraic);
            long res = ode_residual_order(ode, window);
            long checkable = static_cast<long>(window.size()) - 1 - ode.order();
            if (res >= checkable) {
                prop.verification["ode"] = "verified-to-order:" + std::to_string(res);
                HolonomicRecurrence derived = ode_to_recurrence(ode);
                auto [dfrom, dto] = detail::verify_recurrence_tail(derived, window);
                long dlast = static_cast<long>(window.size()) - 1 - derived.order();
                if (dfrom <= derived.order() && dto == dlast) {
                    derived.verified_from = dfrom;
                    derived.verified_to = dto;
                    prop.derived_recurrence = std::move(derived);
                    prop.verification["derivedRecurrence"] =
                        detail::range_status("verified-for-n", dfrom, dto);
                } else {
                    prop.absences["derivedRecurrence"] =
                        "transfer did not verify (holds only for n in " +
                        std::to_string(dfrom) + ".." + std::to_string(dto) + ")";
                }
                prop.ode = std::move(ode);
            } else {
                prop.absences["ode"] = "derived operator failed verification at order " +
                                       std::to_string(res + 1);
            }
        } catch (const UsageError& e) {
            prop.absences["ode"] = e.what();
        }
    } else {
        prop.absences["ode"] = "no algebraic equation";
    }

    // directly guessed recurrence; the derived one stands in when the
    // direct search misses
    std::optional<HolonomicRecurrence> guessed;
    try {
        guessed = guess_recurrence(window, opts.max_order, opts.max_degree, opts.guard);
        if (!guessed && escalate_window())
            guessed = guess_recurrence(window, opts.max_order, opts.max_degree, opts.guard);
    } catch (const UsageError&) {
        guessed = std::nullopt;
    }
    if (guessed) {
        prop.verification["recurrence"] =
            detail::range_status("verified-for-n", guessed->verified_from, guessed->verified_to);
        prop.recurrence = *guessed;
        prop.recurrence_source = "guessed";
    } else if (prop.derived_recurrence) {
        prop.recurrence = prop.derived_recurrence;
        prop.recurrence_source = "derived-from-ode";
        prop.verification["recurrence"] = detail::range_status(
            "verified-for-n", prop.recurrence->verified_from, prop.recurrence->verified_to);
        notes += "direct recurrence guessing exhausted its budget; the equation-derived "
                 "recurrence is used instead. ";
    } else {
        prop.absences["recurrence"] =
            "budget exceeded (order <= " + std::to_string(opts.max_order) + ", degree <= " +
            std::to_string(opts.max_degree) + " on " + std::to_string(window.size()) + " terms)";
    }

    // coherence of the two routes, where both exist
    if (guessed && prop.derived_recurrence) {
        try {
            auto ext_g = extend_sequence(*guessed, terms, 200);
            auto ext_d = extend_sequence(*prop.derived_recurrence, terms, 200);
            prop.verification["pipeline-coherence"] =
                ext_g == ext_d ? "extensions-match-to-200" : "failed";
        } catch (const SingularExtensionError& e) {
            prop.verification["pipeline-coherence"] =
                std::string("not-checkable: ") + e.what();
        }
    }

    // asymptotics from an extended window
    if (prop.recurrence) {
        try {
            auto extended = extend_sequence(*prop.recurrence, terms, opts.asymptotic_terms);
            AsymptoticEstimate est = estimate_asymptotics(*prop.recurrence, extended);
            prop.verification["asymptotics"] =
                est.reliable ? "converged" : ("unreliable: " + est.note);
            prop.asymptotics = std::move(est);
        } catch (const SingularExtensionError& e) {
            prop.absences["asymptotics"] = e.what();
        }
    } else {
        prop.absences["asymptotics"] = "no recurrence within budget";
    }

    prop.notes = notes;
    if (!opts.cache_dir.empty()) cache_store(opts.cache_dir, cache_key, prop);
    return prop;
}

// Solve every canonical pair class of (m, k) with weights (1, -1) and
// target 0. Propositions are independent and solved in parallel; assembly
// order is the canonical class order.
inline Webbook generate_webbook(int m, int k, const SolveOptions& opts = {},
                                PairSymmetry symmetry = PairSymmetry::letter_perms_and_reversal) {
    if (m < 2) throw UsageError("generate_webbook: alphabet size must be >= 2");
    if (k < 1) throw UsageError("generate_webbook: word length must be >= 1");

    Webbook wb;
    wb.m = m;
    wb.k = k;
    wb.symmetry = symmetry;
    wb.classes = canonical_pairs(m, k, symmetry);
    wb.propositions.resize(wb.classes.size());

    const unsigned workers =
        std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                        static_cast<unsigned>(wb.classes.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (;;) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= wb.classes.size()) break;
                    InstanceSpec spec = make_pair_spec(m, wb.classes[i].representative.first,
                                                       wb.classes[i].representative.second);
                    wb.propositions[i] = solve_instance(spec, opts);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
            mpfr_free_cache(); // per-thread constant caches
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return wb;
}

} // namespace rps
