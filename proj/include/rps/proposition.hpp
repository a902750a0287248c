#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rps/asymptotics.hpp"
#include "rps/cluster.hpp"
#include "rps/guess.hpp"
#include "rps/holonomic.hpp"
#include "rps/pairs.hpp"

namespace rps {

inline constexpr const char* kVersion = "0.1.0";

struct SolveOptions {
    int terms = 50;             // compute a(0..terms)
    int guard = 10;             // extra equations demanded beyond unknowns
    int max_deg_t = 12;         // algebraic search caps
    int max_deg_p = 12;
    int max_order = 8;          // recurrence search caps
    int max_degree = 12;
    long asymptotic_terms = 800; // extension length for growth estimation
    bool escalate = true;        // one retry with a doubled term window
    std::string cache_dir;       // empty disables caching

    std::string fingerprint() const {
        return "N=" + std::to_string(terms) + ";g=" + std::to_string(guard) + ";dt=" +
               std::to_string(max_deg_t) + ";dp=" + std::to_string(max_deg_p) + ";ord=" +
               std::to_string(max_order) + ";deg=" + std::to_string(max_degree) + ";asy=" +
               std::to_string(asymptotic_terms) + ";esc=" + (escalate ? "1" : "0");
    }
};

// The full solved record for one counting problem. Absent artifacts carry
// their reason in `absences`; present ones carry a status in
// `verification`.
struct Proposition {
    InstanceSpec spec;
    std::vector<Integer> terms;
    std::optional<WeightEnumerator> enumerator;
    std::optional<AlgebraicEquation> algebraic;
    std::optional<LinearODE> ode;
    std::optional<HolonomicRecurrence> recurrence;
    std::string recurrence_source; // "guessed" or "derived-from-ode"
    std::optional<HolonomicRecurrence> derived_recurrence; // via the ODE route
    std::optional<AsymptoticEstimate> asymptotics;
    std::map<std::string, std::string> verification;
    std::map<std::string, std::string> absences;
    std::string notes;
    std::string version = kVersion;
};

struct Webbook {
    int m = 0;
    int k = 0;
    PairSymmetry symmetry = PairSymmetry::letter_perms_and_reversal;
    std::vector<PairClass> classes;
    std::vector<Proposition> propositions;
};

} // namespace rps
