// Command-line front end: solve single word-counting instances, generate
// whole webbooks, and cross-reference sequences against the OEIS.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "rps/oeis.hpp"
#include "rps/pipeline.hpp"

namespace {

using namespace rps;

struct CommonOpts {
    int terms = 50;
    int guard = 10;
    int max_deg_t = 12;
    int max_deg_p = 12;
    int max_order = 8;
    int max_degree = 12;
    long asym_terms = 800;
    bool no_cache = false;
    std::string cache_dir;
    std::string format = "text";
    std::string out;

    SolveOptions to_solve_options() const {
        SolveOptions opts;
        opts.terms = terms;
        opts.guard = guard;
        opts.max_deg_t = max_deg_t;
        opts.max_deg_p = max_deg_p;
        opts.max_order = max_order;
        opts.max_degree = max_degree;
        opts.asymptotic_terms = asym_terms;
        if (!no_cache) opts.cache_dir = cache_dir.empty() ? default_cache_dir() : cache_dir;
        return opts;
    }
};

void add_common(CLI::App* cmd, CommonOpts& c, bool with_format = true) {
    cmd->add_option("--terms", c.terms, "Number of terms a(0..N) to compute")
        ->capture_default_str();
    cmd->add_option("--guard", c.guard, "Extra equations demanded beyond unknowns")
        ->capture_default_str();
    cmd->add_option("--max-deg-t", c.max_deg_t, "Algebraic search cap on deg_t")
        ->capture_default_str();
    cmd->add_option("--max-deg-p", c.max_deg_p, "Algebraic search cap on deg_P")
        ->capture_default_str();
    cmd->add_option("--max-order", c.max_order, "Recurrence search cap on the order")
        ->capture_default_str();
    cmd->add_option("--max-degree", c.max_degree, "Recurrence search cap on coefficient degree")
        ->capture_default_str();
    cmd->add_option("--asym-terms", c.asym_terms, "Extension length for growth estimation")
        ->capture_default_str();
    cmd->add_flag("--no-cache", c.no_cache, "Disable the result cache");
    cmd->add_option("--cache-dir", c.cache_dir,
                    "Cache directory (default: RPS_CACHE_DIR or the platform cache)");
    if (with_format)
        cmd->add_option("--format", c.format, "Output format: text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
}

void write_or_print(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(path, std::ios::trunc | std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << content;
}

int emit_proposition(const Proposition& prop, const CommonOpts& c, const std::string& seq_path) {
    write_or_print(c.out, c.format == "json" ? to_json(prop).dump(2) + "\n"
                                             : proposition_text(prop));
    if (!seq_path.empty()) write_or_print(seq_path, sequence_file_text(prop.terms));
    return 0;
}

int run_solve(int m, const std::string& w1, const std::string& w2, long a1, long a2, long r,
              const CommonOpts& c, const std::string& seq_path) {
    bool ht = false;
    Word word1 = Word::parse(w1, m, &ht);
    bool ht2 = false;
    Word word2 = Word::parse(w2, m, &ht2);
    InstanceSpec spec = make_pair_spec(m, word1, word2, a1, a2, r, ht || ht2);
    return emit_proposition(solve_instance(spec, c.to_solve_options()), c, seq_path);
}

int run_solve_multi(int m, const std::vector<std::string>& patterns, long r, const CommonOpts& c,
                    const std::string& seq_path) {
    InstanceSpec spec;
    spec.alphabet_size = m;
    spec.target = r;
    bool ht = false;
    for (const auto& entry : patterns) {
        auto colon = entry.rfind(':');
        if (colon == std::string::npos)
            throw UsageError("--pattern expects WORD:WEIGHT, got '" + entry + "'");
        bool used = false;
        spec.patterns.push_back(Word::parse(entry.substr(0, colon), m, &used));
        ht = ht || used;
        spec.weights.push_back(std::stol(entry.substr(colon + 1)));
    }
    spec.ht_display = ht;
    spec.validate();
    return emit_proposition(solve_instance(spec, c.to_solve_options()), c, seq_path);
}

int run_webbook(int m, int k, const std::string& symmetry, const CommonOpts& c) {
    PairSymmetry sym = symmetry == "perms" ? PairSymmetry::letter_perms
                                           : PairSymmetry::letter_perms_and_reversal;
    Webbook wb = generate_webbook(m, k, c.to_solve_options(), sym);
    if (c.out.empty()) {
        std::cout << (c.format == "json" ? to_json(wb).dump(2) + "\n" : webbook_text(wb));
        return 0;
    }
    std::filesystem::create_directories(c.out);
    const std::string stem =
        (std::filesystem::path(c.out) / ("rps_m" + std::to_string(m) + "_k" + std::to_string(k)))
            .string();
    write_or_print(stem + ".txt", webbook_text(wb));
    write_or_print(stem + ".json", to_json(wb).dump(2) + "\n");
    std::cout << wb.propositions.size() << " propositions written to " << stem << ".{txt,json}\n";
    return 0;
}

int run_oeis(const std::string& terms_csv, int m, const std::string& w1, const std::string& w2,
             int count, bool offline, const std::string& cache_dir) {
    std::vector<Integer> terms;
    if (!terms_csv.empty()) {
        std::size_t pos = 0;
        while (pos <= terms_csv.size()) {
            auto comma = terms_csv.find(',', pos);
            std::string tok = terms_csv.substr(
                pos, comma == std::string::npos ? std::string::npos : comma - pos);
            if (!tok.empty()) terms.emplace_back(tok, 10);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
    } else {
        Word word1 = Word::parse(w1, m);
        Word word2 = Word::parse(w2, m);
        terms = oracle_terms(make_pair_spec(m, word1, word2), count - 1);
    }
    auto res = oeis_lookup(terms, offline,
                           cache_dir.empty() ? default_cache_dir() : cache_dir);
    if (!res.available) {
        std::cout << "lookup unavailable: " << res.note << "\n";
        return 2;
    }
    if (res.matches.empty()) {
        std::cout << "no matches (" << res.source << ")\n";
        return 0;
    }
    for (const auto& match : res.matches)
        std::cout << match.id << "  (matches the first " << match.matched_prefix << " terms)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for factor-occurrence word-counting problems"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "Solve one two-word instance: a1*#w1 - a2*#w2 = r");
    CommonOpts sc;
    int sm = 2;
    std::string sw1, sw2, sseq;
    long sa1 = 1, sa2 = 1, sr = 0;
    solve->add_option("--m", sm, "Alphabet size")->required();
    solve->add_option("--w1", sw1, "First distinguished word")->required();
    solve->add_option("--w2", sw2, "Second distinguished word")->required();
    solve->add_option("--a1", sa1, "Weight of #w1")->capture_default_str();
    solve->add_option("--a2", sa2, "Weight of #w2 (subtracted)")->capture_default_str();
    solve->add_option("--r", sr, "Required value of a1*#w1 - a2*#w2")->capture_default_str();
    solve->add_option("--out", sc.out, "Write the report to this file instead of stdout");
    solve->add_option("--seq", sseq, "Also write the terms as 'n a(n)' lines to this file");
    add_common(solve, sc);

    // solve-multi
    auto* multi = app.add_subcommand("solve-multi",
                                     "Solve with several distinguished words and weights");
    CommonOpts mc;
    int mm = 2;
    long mr = 0;
    std::string mseq;
    std::vector<std::string> mpatterns;
    multi->add_option("--m", mm, "Alphabet size")->required();
    multi->add_option("--pattern", mpatterns, "Pattern as WORD:WEIGHT (repeatable)")
        ->required()
        ->expected(-1);
    multi->add_option("--r", mr, "Required weighted occurrence total")->capture_default_str();
    multi->add_option("--out", mc.out, "Write the report to this file instead of stdout");
    multi->add_option("--seq", mseq, "Also write the terms as 'n a(n)' lines to this file");
    add_common(multi, mc);

    // webbook
    auto* web = app.add_subcommand("webbook",
                                   "Solve all canonical pairs of length-k words over m letters");
    CommonOpts wc;
    int wm = 2, wk = 2;
    std::string wsym = "perms+rev";
    web->add_option("--m", wm, "Alphabet size")->required();
    web->add_option("--k", wk, "Word length")->required();
    web->add_option("--symmetry", wsym, "Pair symmetry: perms or perms+rev")
        ->check(CLI::IsMember({"perms", "perms+rev"}))
        ->capture_default_str();
    web->add_option("--out", wc.out, "Directory for the .txt and .json webbook files");
    add_common(web, wc);

    // oeis
    auto* oeis = app.add_subcommand("oeis", "Look up a sequence in the OEIS (cached)");
    std::string oterms, ow1, ow2, ocache;
    int om = 2, ocount = 20;
    bool ooffline = false;
    oeis->add_option("--terms", oterms, "Comma-separated terms to search for");
    oeis->add_option("--m", om, "Alphabet size (with --w1/--w2)");
    oeis->add_option("--w1", ow1, "First word (computes the terms first)");
    oeis->add_option("--w2", ow2, "Second word");
    oeis->add_option("--count", ocount, "How many terms to compute for the query")
        ->capture_default_str();
    oeis->add_flag("--offline", ooffline, "Serve from the cache only; never touch the network");
    oeis->add_option("--cache-dir", ocache, "Cache directory override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(sm, sw1, sw2, sa1, sa2, sr, sc, sseq);
        if (multi->parsed()) return run_solve_multi(mm, mpatterns, mr, mc, mseq);
        if (web->parsed()) return run_webbook(wm, wk, wsym, wc);
        if (oeis->parsed()) {
            if (oterms.empty() && (ow1.empty() || ow2.empty()))
                throw UsageError("oeis: pass either --terms or --m/--w1/--w2");
            return run_oeis(oterms, om, ow1, ow2, ocount, ooffline, ocache);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
