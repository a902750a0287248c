#pragma once

#include <json.hpp>

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "rps/proposition.hpp"

namespace rps {

using Json = nlohmann::json;

namespace detail {

// one signed piece of an operator rendering: coefficient polynomial times a
// symbol ("P^2", "a(n+1)", "P''", or nothing for a plain constant)
inline void append_piece(std::string& out, const UniPoly& q, const std::string& symbol,
                         bool ascending) {
    int sign = 1;
    std::string body;
    int nonzero = 0;
    for (const auto& c : q.coeffs())
        if (!c.is_zero()) ++nonzero;
    if (nonzero == 1) {
        int k = 0;
        while (q.coeff(k).is_zero()) ++k;
        const Rational c = q.coeff(k);
        sign = c.sign();
        std::string mono;
        if (k == 0) {
            mono = c.abs().str();
        } else {
            if (!c.abs().is_one()) mono = c.abs().str() + "*";
            mono += q.var();
            if (k > 1) mono += "^" + std::to_string(k);
        }
        if (symbol.empty())
            body = mono;
        else if (mono == "1")
            body = symbol;
        else
            body = mono + "*" + symbol;
    } else {
        // fold the sign of the first displayed coefficient out of the parens
        int first_k = ascending ? 0 : q.degree();
        int step = ascending ? 1 : -1;
        while (q.coeff(first_k).is_zero()) first_k += step;
        UniPoly shown = q;
        if (q.coeff(first_k).sign() < 0) {
            sign = -1;
            shown = -q;
        }
        body = "(" + shown.str(ascending) + ")";
        if (!symbol.empty()) body += "*" + symbol;
    }
    if (out.empty())
        out += (sign < 0) ? "-" : "";
    else
        out += (sign < 0) ? " - " : " + ";
    out += body;
}

inline std::string rational_or_empty(const std::string& s) { return s.empty() ? "0" : s; }

} // namespace detail

inline std::string equation_text(const AlgebraicEquation& eq) {
    std::vector<UniPoly> by_p(static_cast<std::size_t>(eq.deg_p) + 1, UniPoly("t"));
    for (const auto& [e, c] : eq.q.terms())
        by_p[static_cast<std::size_t>(e[1])] =
            by_p[static_cast<std::size_t>(e[1])] + UniPoly::monomial(c, e[0], "t");
    std::string out;
    for (std::size_t j = by_p.size(); j-- > 0;) {
        if (by_p[j].is_zero()) continue;
        std::string symbol;
        if (j == 1) symbol = "P";
        else if (j > 1) symbol = "P^" + std::to_string(j);
        detail::append_piece(out, by_p[j], symbol, true);
    }
    return out + " = 0";
}

inline std::string ode_text(const LinearODE& ode) {
    std::string out;
    for (std::size_t i = ode.coeffs.size(); i-- > 0;) {
        if (ode.coeffs[i].is_zero()) continue;
        std::string symbol = "P";
        if (i == 1) symbol = "P'";
        else if (i == 2) symbol = "P''";
        else if (i >= 3) symbol = "P^(" + std::to_string(i) + ")";
        detail::append_piece(out, ode.coeffs[i], symbol, true);
    }
    if (out.empty()) out = "0";
    return out + " = " + (ode.inhom.is_zero() ? "0" : ode.inhom.str(true));
}

inline std::string recurrence_text(const HolonomicRecurrence& rec) {
    std::string out;
    for (std::size_t i = rec.coeffs.size(); i-- > 0;) {
        if (rec.coeffs[i].is_zero()) continue;
        std::string symbol = "a(n)";
        if (i > 0) symbol = "a(n+" + std::to_string(i) + ")";
        detail::append_piece(out, rec.coeffs[i], symbol, false);
    }
    if (out.empty()) out = "0";
    return out + " = 0";
}

inline std::string asymptotics_text(const AsymptoticEstimate& est) {
    std::ostringstream os;
    os.precision(10);
    os << "a(n) ~ " << est.constant << " * " << est.mu << "^n * n^" << est.theta;
    if (est.period == 1) {
        os << "   (support: all n";
    } else {
        os << "   (support: n ≡ ";
        for (std::size_t i = 0; i < est.support_residues.size(); ++i) {
            if (i) os << ", ";
            os << est.support_residues[i];
        }
        os << " (mod " << est.period << ")";
    }
    os.precision(3);
    os << "; deltas: mu " << est.mu_delta << ", theta " << est.theta_delta << ", C "
       << est.constant_delta << ")";
    if (!est.reliable) os << " [unreliable" << (est.note.empty() ? "" : ": " + est.note) << "]";
    return os.str();
}

// "as many occurrences of 'HT' as of 'TT'" for the classic shape, the
// explicit weighted relation otherwise
inline std::string statement_text(const InstanceSpec& spec) {
    const bool ht = spec.ht_display;
    std::string alphabet;
    for (int i = 0; i < spec.alphabet_size; ++i) {
        if (i) alphabet += ", ";
        alphabet += ht ? (i == 0 ? "H" : "T") : std::string(1, static_cast<char>('a' + i));
    }
    std::string head = "the number of n-letter words over {" + alphabet + "} ";
    if (spec.patterns.size() == 2 && spec.weights[0] == 1 && spec.weights[1] == -1 &&
        spec.target == 0) {
        return head + "with as many occurrences of " + spec.patterns[0].str(ht) + " as of " +
               spec.patterns[1].str(ht);
    }
    std::string rel;
    for (std::size_t i = 0; i < spec.patterns.size(); ++i) {
        long w = spec.weights[i];
        if (i == 0) {
            rel += (w < 0 ? "-" : "");
        } else {
            rel += (w < 0 ? " - " : " + ");
        }
        long aw = w < 0 ? -w : w;
        if (aw != 1) rel += std::to_string(aw) + "*";
        rel += "#" + spec.patterns[i].str(ht);
    }
    return head + "with " + rel + " = " + std::to_string(spec.target);
}

inline std::string sequence_file_text(const std::vector<Integer>& terms) {
    std::string out;
    for (std::size_t n = 0; n < terms.size(); ++n)
        out += std::to_string(n) + " " + terms[n].get_str() + "\n";
    return out;
}

inline std::string proposition_text(const Proposition& prop) {
    std::ostringstream os;
    os << "Let a(n) be " << statement_text(prop.spec) << ".\n";

    auto status = [&](const char* key) {
        auto it = prop.verification.find(key);
        return it == prop.verification.end() ? std::string() : "   [" + it->second + "]";
    };
    auto absent = [&](const char* key) {
        auto it = prop.absences.find(key);
        return it == prop.absences.end() ? std::string() : it->second;
    };

    os << "First " << prop.terms.size() << " terms: ";
    for (std::size_t i = 0; i < prop.terms.size(); ++i) {
        if (i) os << ", ";
        os << prop.terms[i].get_str();
    }
    os << "\n";
    if (!status("terms").empty()) os << "Terms:" << status("terms") << "\n";

    if (prop.enumerator) {
        os << "Weight enumerator F(t; z) = N/D with\n";
        os << "  N = " << prop.enumerator->value.num.str() << "\n";
        os << "  D = " << prop.enumerator->value.den.str() << status("enumerator") << "\n";
    } else if (!absent("enumerator").empty()) {
        os << "Weight enumerator: unavailable (" << absent("enumerator") << ")\n";
    }

    if (prop.algebraic) {
        os << "The generating function P(t) = sum a(n) t^n satisfies\n    "
           << equation_text(*prop.algebraic) << status("algebraic") << "\n";
    } else if (!absent("algebraic").empty()) {
        os << "Algebraic equation: not found (" << absent("algebraic") << ")\n";
    }

    if (prop.ode) {
        os << "P(t) satisfies the linear differential equation\n    " << ode_text(*prop.ode)
           << status("ode") << "\n";
    } else if (!absent("ode").empty()) {
        os << "Differential equation: unavailable (" << absent("ode") << ")\n";
    }

    if (prop.recurrence) {
        os << "The sequence satisfies the recurrence (" << prop.recurrence_source << ")\n    "
           << recurrence_text(*prop.recurrence) << status("recurrence") << "\n";
        int d = prop.recurrence->order();
        os << "with initial values ";
        for (int i = 0; i < d && i < static_cast<int>(prop.terms.size()); ++i) {
            if (i) os << ", ";
            os << "a(" << i << ") = " << prop.terms[static_cast<std::size_t>(i)].get_str();
        }
        os << "\n";
    } else if (!absent("recurrence").empty()) {
        os << "Recurrence: not found (" << absent("recurrence") << ")\n";
    }

    if (prop.asymptotics) {
        os << "Growth: " << asymptotics_text(*prop.asymptotics) << "\n";
    } else if (!absent("asymptotics").empty()) {
        os << "Growth: unavailable (" << absent("asymptotics") << ")\n";
    }

    if (!prop.notes.empty()) os << "Notes: " << prop.notes << "\n";
    return os.str();
}

inline std::string webbook_text(const Webbook& wb) {
    std::ostringstream os;
    os << "Counting words by equal occurrence counts of two length-" << wb.k
       << " factors over a " << wb.m << "-letter alphabet\n";
    os << "Symmetry: " << to_string(wb.symmetry) << "; " << wb.propositions.size()
       << " propositions.\n\n";
    for (std::size_t i = 0; i < wb.propositions.size(); ++i) {
        const auto& cls = wb.classes[i];
        os << "Proposition " << (i + 1) << ".\n";
        os << proposition_text(wb.propositions[i]);
        os << "Class members (" << cls.members.size() << "): ";
        for (std::size_t j = 0; j < cls.members.size(); ++j) {
            if (j) os << ", ";
            os << "{" << cls.members[j].first.str() << ", " << cls.members[j].second.str() << "}";
        }
        os << "\n\n";
    }
    return os.str();
}

// ---- JSON serialization ----------------------------------------------

namespace detail {

inline Json unipoly_json(const UniPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(c.str());
    return a;
}

inline UniPoly unipoly_from_json(const Json& a, const std::string& var) {
    std::vector<Rational> c;
    for (const auto& x : a) c.push_back(Rational::parse(x.get<std::string>()));
    return UniPoly(std::move(c), var);
}

inline Json recurrence_json(const HolonomicRecurrence& rec) {
    Json j;
    j["order"] = rec.order();
    Json coeffs = Json::array();
    for (const auto& c : rec.coeffs) coeffs.push_back(unipoly_json(c));
    j["coefficients"] = coeffs;
    j["verifiedRange"] = Json::array({rec.verified_from, rec.verified_to});
    return j;
}

inline HolonomicRecurrence recurrence_from_json(const Json& j) {
    HolonomicRecurrence rec;
    for (const auto& c : j.at("coefficients")) rec.coeffs.push_back(unipoly_from_json(c, "n"));
    rec.verified_from = j.at("verifiedRange").at(0).get<long>();
    rec.verified_to = j.at("verifiedRange").at(1).get<long>();
    return rec;
}

} // namespace detail

// Parser for the canonical sparse-term text ("1 - 2*t + 1*t^2*z1").
inline MultiPoly parse_multipoly(const std::string& text, const std::vector<std::string>& vars) {
    MultiPoly out(vars);
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (text.compare(i, 1, "0") == 0 && i + 1 == text.size()) return out;
    bool first = true;
    while (i < text.size()) {
        skip_ws();
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw UsageError("parse_multipoly: expected sign at '" + text.substr(i) + "'");
        }
        first = false;
        // coefficient (optional when the term starts with a variable)
        Rational coeff(1);
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isdigit(static_cast<unsigned char>(text[j])) || text[j] == '/'))
                ++j;
            coeff = Rational::parse(text.substr(i, j - i));
            i = j;
        }
        MultiPoly::Exponents e(vars.size(), 0);
        for (;;) {
            skip_ws();
            if (i >= text.size() || text[i] != '*') break;
            ++i;
            skip_ws();
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_') &&
                   text[j] != '^')
                ++j;
            std::string name = text.substr(i, j - i);
            i = j;
            int exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t k = i;
                while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
                exp = std::stoi(text.substr(i, k - i));
                i = k;
            }
            bool found = false;
            for (std::size_t v = 0; v < vars.size(); ++v)
                if (vars[v] == name) {
                    e[v] += exp;
                    found = true;
                }
            if (!found) throw UsageError("parse_multipoly: unknown variable '" + name + "'");
        }
        out.add_term(e, sign < 0 ? -coeff : coeff);
        skip_ws();
    }
    return out;
}

inline Json to_json(const Proposition& prop) {
    Json j;
    {
        Json s;
        s["m"] = prop.spec.alphabet_size;
        Json pats = Json::array();
        for (const auto& p : prop.spec.patterns) pats.push_back(p.str(prop.spec.ht_display));
        s["patterns"] = pats;
        s["weights"] = prop.spec.weights;
        s["r"] = prop.spec.target;
        j["spec"] = s;
    }
    {
        Json t = Json::array();
        for (const auto& x : prop.terms) t.push_back(x.get_str());
        j["terms"] = t;
    }
    if (prop.enumerator) {
        j["enumerator"] = Json{{"numerator", prop.enumerator->value.num.str()},
                               {"denominator", prop.enumerator->value.den.str()}};
    }
    if (prop.algebraic) {
        Json a;
        Json coeffs = Json::array();
        for (const auto& [e, c] : prop.algebraic->q.terms())
            coeffs.push_back(Json::array({e[0], e[1], c.str()}));
        a["coefficients"] = coeffs;
        a["degT"] = prop.algebraic->deg_t;
        a["degP"] = prop.algebraic->deg_p;
        a["verifiedOrder"] = prop.algebraic->verified_order;
        j["algebraic"] = a;
    }
    if (prop.ode) {
        Json o;
        o["order"] = prop.ode->order();
        Json coeffs = Json::array();
        for (const auto& c : prop.ode->coeffs) coeffs.push_back(detail::unipoly_json(c));
        o["coefficients"] = coeffs;
        o["inhomogeneous"] = detail::unipoly_json(prop.ode->inhom);
        j["ode"] = o;
    }
    if (prop.recurrence) {
        Json r = detail::recurrence_json(*prop.recurrence);
        r["source"] = prop.recurrence_source;
        j["recurrence"] = r;
    }
    if (prop.derived_recurrence)
        j["derivedRecurrence"] = detail::recurrence_json(*prop.derived_recurrence);
    if (prop.asymptotics) {
        const auto& est = *prop.asymptotics;
        Json a;
        a["mu"] = est.mu;
        a["theta"] = est.theta;
        a["C"] = est.constant;
        a["period"] = est.period;
        a["deltas"] = Json{{"mu", est.mu_delta}, {"theta", est.theta_delta},
                           {"C", est.constant_delta}};
        a["supportResidues"] = est.support_residues;
        a["charRootModulus"] = est.char_root_modulus;
        a["reliable"] = est.reliable;
        a["note"] = est.note;
        j["asymptotics"] = a;
    }
    j["verification"] = prop.verification;
    j["absences"] = prop.absences;
    j["notes"] = prop.notes;
    j["version"] = prop.version;
    return j;
}

inline Proposition proposition_from_json(const Json& j) {
    Proposition prop;
    const auto& s = j.at("spec");
    prop.spec.alphabet_size = s.at("m").get<int>();
    bool ht = false;
    for (const auto& p : s.at("patterns")) {
        bool used = false;
        prop.spec.patterns.push_back(
            Word::parse(p.get<std::string>(), prop.spec.alphabet_size, &used));
        ht = ht || used;
    }
    prop.spec.ht_display = ht;
    prop.spec.weights = s.at("weights").get<std::vector<long>>();
    prop.spec.target = s.at("r").get<long>();
    prop.spec.validate();

    for (const auto& t : j.at("terms")) prop.terms.emplace_back(t.get<std::string>(), 10);

    if (j.contains("enumerator")) {
        std::vector<std::string> vars{"t"};
        for (std::size_t i = 1; i <= prop.spec.patterns.size(); ++i)
            vars.push_back("z" + std::to_string(i));
        MultiPoly num = parse_multipoly(j["enumerator"].at("numerator").get<std::string>(), vars);
        MultiPoly den = parse_multipoly(j["enumerator"].at("denominator").get<std::string>(), vars);
        prop.enumerator = WeightEnumerator{RatFunc(std::move(num), std::move(den)), prop.spec};
    }
    if (j.contains("algebraic")) {
        const auto& a = j["algebraic"];
        AlgebraicEquation eq;
        MultiPoly q(std::vector<std::string>{"t", "P"});
        for (const auto& triple : a.at("coefficients"))
            q.add_term({triple.at(0).get<int>(), triple.at(1).get<int>()},
                       Rational::parse(triple.at(2).get<std::string>()));
        eq.q = std::move(q);
        eq.deg_t = a.at("degT").get<int>();
        eq.deg_p = a.at("degP").get<int>();
        eq.verified_order = a.at("verifiedOrder").get<long>();
        prop.algebraic = std::move(eq);
    }
    if (j.contains("ode")) {
        LinearODE ode;
        ode.coeffs.clear();
        for (const auto& c : j["ode"].at("coefficients"))
            ode.coeffs.push_back(detail::unipoly_from_json(c, "t"));
        ode.inhom = detail::unipoly_from_json(j["ode"].at("inhomogeneous"), "t");
        prop.ode = std::move(ode);
    }
    if (j.contains("recurrence")) {
        prop.recurrence = detail::recurrence_from_json(j["recurrence"]);
        prop.recurrence_source = j["recurrence"].value("source", "");
    }
    if (j.contains("derivedRecurrence"))
        prop.derived_recurrence = detail::recurrence_from_json(j["derivedRecurrence"]);
    if (j.contains("asymptotics")) {
        const auto& a = j["asymptotics"];
        AsymptoticEstimate est;
        est.mu = a.at("mu").get<double>();
        est.theta = a.at("theta").get<double>();
        est.constant = a.at("C").get<double>();
        est.period = a.at("period").get<int>();
        est.mu_delta = a.at("deltas").at("mu").get<double>();
        est.theta_delta = a.at("deltas").at("theta").get<double>();
        est.constant_delta = a.at("deltas").at("C").get<double>();
        est.support_residues = a.at("supportResidues").get<std::vector<int>>();
        est.char_root_modulus = a.at("charRootModulus").get<double>();
        est.reliable = a.at("reliable").get<bool>();
        est.note = a.at("note").get<std::string>();
        prop.asymptotics = est;
    }
    prop.verification = j.at("verification").get<std::map<std::string, std::string>>();
    prop.absences = j.at("absences").get<std::map<std::string, std::string>>();
    prop.notes = j.at("notes").get<std::string>();
    prop.version = j.at("version").get<std::string>();
    return prop;
}

inline Json to_json(const Webbook& wb) {
    Json j;
    j["m"] = wb.m;
    j["k"] = wb.k;
    j["symmetry"] = to_string(wb.symmetry);
    j["version"] = kVersion;
    Json props = Json::array();
    for (std::size_t i = 0; i < wb.propositions.size(); ++i) {
        Json p = to_json(wb.propositions[i]);
        Json members = Json::array();
        for (const auto& mem : wb.classes[i].members)
            members.push_back(Json::array({mem.first.str(), mem.second.str()}));
        p["classMembers"] = members;
        props.push_back(std::move(p));
    }
    j["propositions"] = props;
    return j;
}

} // namespace rps
