#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <acdlab/acdlab.hpp>

namespace {

using namespace acdlab;

struct GroupSelector {
    std::string positional; // .perm path or corpus entry name
    std::string family;
    std::vector<long long> params;
    std::string corpus_path = "data/corpus/core.json";

    void attach(CLI::App* cmd) {
        cmd->add_option("group", positional, ".perm file or corpus entry name");
        cmd->add_option("--family", family, "group family (cyclic, dihedral, ...)");
        cmd->add_option("--params", params, "family parameters");
        cmd->add_option("--corpus", corpus_path, "corpus manifest used for name lookup");
    }

    FiniteGroup load(std::string& name_out) const {
        if (!positional.empty() && !family.empty())
            throw input_error("give either a group argument or --family, not both");
        if (!positional.empty()) {
            std::ifstream probe(positional);
            if (probe.good()) {
                name_out = positional;
                return FiniteGroup::from_generators(read_perm_file(positional));
            }
            CorpusManifest m = load_manifest(corpus_path);
            std::string dir = corpus_path;
            std::size_t slash = dir.find_last_of('/');
            dir = slash == std::string::npos ? std::string(".") : dir.substr(0, slash);
            for (const auto& s : m.groups)
                if (s.name == positional) {
                    name_out = s.name;
                    GroupOptions opt;
                    opt.size_cap = m.cap;
                    FiniteGroup G = build_group(s, opt, dir);
                    if (s.expected_order != 0 && G.order() != s.expected_order)
                        throw input_error("group '" + s.name + "': expected order " +
                                          std::to_string(s.expected_order) + ", got " +
                                          std::to_string(G.order()));
                    return G;
                }
            throw input_error("'" + positional +
                              "' is neither a readable file nor a corpus entry name");
        }
        if (!family.empty()) {
            name_out = family;
            for (long long p : params) name_out += "_" + std::to_string(p);
            return build_family(family, params, GroupOptions{});
        }
        throw input_error("no group given: pass a .perm file, a corpus name, or --family");
    }
};

std::vector<CorpusEntry> load_corpus_at(const std::string& path) {
    CorpusManifest m = load_manifest(path);
    std::string dir = path;
    std::size_t slash = dir.find_last_of('/');
    dir = slash == std::string::npos ? std::string(".") : dir.substr(0, slash);
    return load_corpus(m, dir);
}

void print_character_table(const std::string& name, const CharacterTable& T) {
    std::cout << "group " << name << ": order " << T.order << ", exponent " << T.exponent
              << ", " << T.class_count() << " classes, field p = " << T.prime.p << "\n\n";
    std::vector<std::vector<std::string>> rows;
    internal_check(T.group != nullptr, "table lost its group");
    for (int c = 0; c < T.class_count(); ++c) {
        int rep = T.classes.class_reps[static_cast<std::size_t>(c)];
        rows.push_back({"K" + std::to_string(c),
                        cycle_string(T.group->element(rep)),
                        std::to_string(T.classes.class_sizes[static_cast<std::size_t>(c)]),
                        std::to_string(T.group->element_order(rep))});
    }
    std::cout << acdlab::detail::render_table({"class", "representative", "size", "element-order"},
                                              rows);
    std::cout << "\nvalues are written in z = exp(2*pi*i/" << T.exponent << ")\n\n";
    std::vector<std::string> header{"character", "degree", "indicator"};
    for (int c = 0; c < T.class_count(); ++c) header.push_back("K" + std::to_string(c));
    rows.clear();
    for (std::size_t i = 0; i < T.chars.size(); ++i) {
        const auto& ch = T.chars[i];
        std::vector<std::string> row{"chi_" + std::to_string(i), std::to_string(ch.degree),
                                     std::to_string(ch.fs_indicator)};
        for (const auto& v : ch.values) row.push_back(v.str());
        rows.push_back(std::move(row));
    }
    std::cout << acdlab::detail::render_table(header, rows);
}

int cmd_table(const GroupSelector& sel) {
    std::string name;
    FiniteGroup G = sel.load(name);
    CharacterTable T = character_table(G);
    SelfCheckReport rep = table_self_check(T);
    if (!rep.ok) {
        for (const auto& f : rep.failures) std::cerr << "self-check failure: " << f << "\n";
        throw internal_error("character table failed its self-check battery");
    }
    print_character_table(name, T);
    return 0;
}

int cmd_inv(const GroupSelector& sel, long long p, const std::string& variant,
            const std::string& format, const std::string& out) {
    std::string name;
    FiniteGroup G = sel.load(name);
    CharacterTable T = character_table(G);
    std::vector<long long> extras{2, 3, 5};
    if (p != 0) extras.push_back(p);
    InvariantReport R = build_invariant_report(T, name, extras);
    std::string text;
    if (format == "json") {
        text = invariant_report_to_json(R).dump(2) + "\n";
    } else if (p != 0) {
        const PrimeInvariants& PI = prime_row(R, p);
        if (variant.empty() || variant == "all")
            text += "acd_" + std::to_string(p) + " = " + PI.acd_all.str() + "\n";
        if (variant == "real")
            text += "acd_" + std::to_string(p) + ",real = " + PI.acd_real.str() + "\n";
        if (variant == "strong")
            text += "acd_" + std::to_string(p) + ",+ = " + PI.acd_strong.str() + "\n";
        if (!variant.empty() && variant != "all" && variant != "real" && variant != "strong")
            throw input_error("unknown variant: " + variant + " (expected all, real, strong)");
    } else {
        text = invariant_text_table(T, R);
    }
    write_report_text(text, out);
    return 0;
}

int cmd_verify(const std::vector<std::string>& thms, const std::string& corpus_path,
               const std::string& format, const std::string& out, unsigned threads) {
    std::vector<TheoremId> ids;
    std::vector<long long> extra_primes{2, 3, 5};
    for (const auto& s : thms) {
        ids.push_back(theorem_from_name(s));
        if (ids.back().p != 0) extra_primes.push_back(ids.back().p);
    }
    std::vector<CorpusEntry> corpus = load_corpus_at(corpus_path);
    std::vector<GroupAnalysis> analyses = analyze_corpus(corpus, threads, extra_primes);
    std::vector<VerificationResult> results;
    long long violations = 0;
    for (const auto& id : ids) {
        VerificationResult R = verify_theorem(id, analyses, corpus_path);
        std::fprintf(stderr, "%s: %zu group(s), %lld violation(s), %.3fs\n", R.theorem.c_str(),
                     R.verdicts.size(), R.violations, R.duration_seconds);
        violations += R.violations;
        results.push_back(std::move(R));
    }
    write_report_text(render_verification(results, report_format_from_name(format)), out);
    return violations > 0 ? 1 : 0;
}

int cmd_conjecture(long long p, const std::string& corpus_path, const std::string& format,
                   const std::string& out, unsigned threads) {
    std::vector<CorpusEntry> corpus = load_corpus_at(corpus_path);
    std::vector<GroupAnalysis> analyses = analyze_corpus(corpus, threads, {2, 3, 5, p});
    ConjectureReport R = explore_conjecture(p, analyses);
    std::fprintf(stderr, "conjecture p=%lld: %lld group(s) without normal Sylow, %.3fs\n", R.p,
                 R.groups_without_normal_sylow, R.duration_seconds);
    write_report_text(render_conjecture(R, report_format_from_name(format)), out);
    return R.counterexamples.empty() ? 0 : 1;
}

int cmd_checks(const std::string& corpus_path, const std::string& format, const std::string& out,
               unsigned threads) {
    std::vector<CorpusEntry> corpus = load_corpus_at(corpus_path);
    std::vector<GroupAnalysis> analyses = analyze_corpus(corpus, threads);
    std::vector<CheckReport> checks = run_structural_checks(analyses);
    write_report_text(render_checks(checks, report_format_from_name(format)), out);
    for (const auto& c : checks)
        if (c.verdict == Verdict::Fail) return 1;
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character tables and average-degree invariants for finite groups"};
    app.require_subcommand(1);

    GroupSelector table_sel, inv_sel;
    long long inv_p = 0;
    std::string inv_variant;
    std::string inv_format = "text-table", inv_out;

    CLI::App* table = app.add_subcommand("table", "print the exact character table of one group");
    table_sel.attach(table);

    CLI::App* inv = app.add_subcommand("inv", "print invariants of one group");
    inv_sel.attach(inv);
    inv->add_option("--p", inv_p, "prime for the averaged degree");
    inv->add_option("--variant", inv_variant, "character subset: all, real, strong");
    inv->add_option("--format", inv_format, "json or text-table");
    inv->add_option("--out", inv_out, "output path (default stdout)");

    std::vector<std::string> thms;
    std::string ver_corpus = "data/corpus/core.json", ver_format = "json", ver_out;
    unsigned ver_threads = 0;
    CLI::App* ver = app.add_subcommand("verify", "sweep a corpus against a theorem statement");
    ver->add_option("--thm", thms, "theorem id: 1.1, 1.2, 1.3i, 1.3ii, c1.4i, c1.4ii, ito:P, sharpness")
        ->required();
    ver->add_option("--corpus", ver_corpus, "corpus manifest");
    ver->add_option("--format", ver_format, "json, csv, or text-table");
    ver->add_option("--out", ver_out, "output path (default stdout)");
    ver->add_option("--threads", ver_threads, "worker threads (default: hardware)");

    long long conj_p = 0;
    std::string conj_corpus = "data/corpus/core.json", conj_format = "json", conj_out;
    unsigned conj_threads = 0;
    CLI::App* conj = app.add_subcommand("conjecture", "extremal averages without a normal Sylow p");
    conj->add_option("--p", conj_p, "prime")->required();
    conj->add_option("--corpus", conj_corpus, "corpus manifest");
    conj->add_option("--format", conj_format, "json, csv, or text-table");
    conj->add_option("--out", conj_out, "output path (default stdout)");
    conj->add_option("--threads", conj_threads, "worker threads (default: hardware)");

    std::string chk_corpus = "data/corpus/core.json", chk_format = "json", chk_out;
    unsigned chk_threads = 0;
    CLI::App* chk = app.add_subcommand("checks", "run the structural check battery over a corpus");
    chk->add_option("--corpus", chk_corpus, "corpus manifest");
    chk->add_option("--format", chk_format, "json, csv, or text-table");
    chk->add_option("--out", chk_out, "output path (default stdout)");
    chk->add_option("--threads", chk_threads, "worker threads (default: hardware)");

    try {
        app.parse(argc, argv);
        if (table->parsed()) return cmd_table(table_sel);
        if (inv->parsed()) return cmd_inv(inv_sel, inv_p, inv_variant, inv_format, inv_out);
        if (ver->parsed()) return cmd_verify(thms, ver_corpus, ver_format, ver_out, ver_threads);
        if (conj->parsed())
            return cmd_conjecture(conj_p, conj_corpus, conj_format, conj_out, conj_threads);
        if (chk->parsed()) return cmd_checks(chk_corpus, chk_format, chk_out, chk_threads);
        return 2;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
