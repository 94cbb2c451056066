#pragma once

#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "acdlab/clifford.hpp"
#include "acdlab/corpus.hpp"
#include "acdlab/invariants.hpp"

namespace acdlab {

struct GroupAnalysis {
    std::string name;
    const FiniteGroup* group = nullptr;
    CharacterTable table;
    InvariantReport inv;
};

inline GroupAnalysis analyze_group(const std::string& name, const FiniteGroup& G,
                                   std::vector<long long> extra_primes = {2, 3, 5}) {
    GroupAnalysis A;
    A.name = name;
    A.group = &G;
    A.table = character_table(G);
    A.inv = build_invariant_report(A.table, name, std::move(extra_primes));
    return A;
}

// Per-group analysis is independent; corpus entries are processed by a
// small pool and merged back in manifest order.
inline std::vector<GroupAnalysis> analyze_corpus(const std::vector<CorpusEntry>& corpus,
                                                 unsigned threads = 0,
                                                 std::vector<long long> extra_primes = {2, 3, 5}) {
    if (threads == 0) {
        threads = std::thread::hardware_concurrency();
        if (threads == 0) threads = 1;
    }
    if (threads > corpus.size()) threads = static_cast<unsigned>(corpus.size());
    std::vector<GroupAnalysis> out(corpus.size());
    if (corpus.empty()) return out;
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    auto worker = [&]() {
        while (!failed.load()) {
            std::size_t i = next.fetch_add(1);
            if (i >= corpus.size()) return;
            try {
                out[i] = analyze_group(corpus[i].name, corpus[i].group, extra_primes);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

// ---------------------------------------------------------------------------
// Theorem identifiers.
// ---------------------------------------------------------------------------

enum class TheoremKind { T11, T12, T13i, T13ii, C14i, C14ii, ItoMichler, Sharpness, Conjecture };

struct TheoremId {
    TheoremKind kind = TheoremKind::T11;
    long long p = 0; // ItoMichler / Conjecture only

    std::string str() const {
        switch (kind) {
            case TheoremKind::T11: return "T1.1";
            case TheoremKind::T12: return "T1.2";
            case TheoremKind::T13i: return "T1.3i";
            case TheoremKind::T13ii: return "T1.3ii";
            case TheoremKind::C14i: return "C1.4i";
            case TheoremKind::C14ii: return "C1.4ii";
            case TheoremKind::ItoMichler: return "ito-michler(" + std::to_string(p) + ")";
            case TheoremKind::Sharpness: return "sharpness";
            case TheoremKind::Conjecture: return "conjecture(" + std::to_string(p) + ")";
        }
        return "?";
    }
};

inline TheoremId theorem_from_name(const std::string& raw) {
    std::string s;
    for (char c : raw)
        if (c != ' ') s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    auto prime_suffix = [&](const std::string& head) -> long long {
        std::string rest = s.substr(head.size());
        if (!rest.empty() && (rest.front() == ':' || rest.front() == '(')) {
            rest.erase(rest.begin());
            if (!rest.empty() && rest.back() == ')') rest.pop_back();
        }
        try {
            std::size_t pos = 0;
            long long p = std::stoll(rest, &pos);
            if (pos != rest.size() || p < 2) throw std::invalid_argument("bad");
            return p;
        } catch (...) {
            throw input_error("theorem '" + raw + "': expected a prime argument, e.g. ito:3");
        }
    };
    if (s == "t1.1" || s == "1.1") return {TheoremKind::T11, 0};
    if (s == "t1.2" || s == "1.2") return {TheoremKind::T12, 0};
    if (s == "t1.3i" || s == "1.3i") return {TheoremKind::T13i, 0};
    if (s == "t1.3ii" || s == "1.3ii") return {TheoremKind::T13ii, 0};
    if (s == "c1.4i" || s == "1.4i") return {TheoremKind::C14i, 0};
    if (s == "c1.4ii" || s == "1.4ii") return {TheoremKind::C14ii, 0};
    if (s == "sharpness") return {TheoremKind::Sharpness, 0};
    for (const std::string& head : {std::string("ito-michler"), std::string("ito")})
        if (s.rfind(head, 0) == 0 && s.size() > head.size())
            return {TheoremKind::ItoMichler, prime_suffix(head)};
    for (const std::string& head : {std::string("conjecture"), std::string("conj")})
        if (s.rfind(head, 0) == 0 && s.size() > head.size())
            return {TheoremKind::Conjecture, prime_suffix(head)};
    throw input_error("unknown theorem id: '" + raw +
                      "' (expected 1.1, 1.2, 1.3i, 1.3ii, c1.4i, c1.4ii, ito:p, conj:p, sharpness)");
}

inline const PrimeInvariants& prime_row(const InvariantReport& R, long long p) {
    for (const auto& PI : R.primes)
        if (PI.p == p) return PI;
    throw input_error("no invariants computed for p = " + std::to_string(p) + " in group '" +
                      R.name + "'");
}

// ---------------------------------------------------------------------------
// Theorem sweeps.
// ---------------------------------------------------------------------------

struct GroupVerdict {
    std::string group;
    long long order = 0;
    std::string verdict; // "satisfies" | "vacuous" | "VIOLATION"
    std::string invariant;
    std::string note;
};

struct VerificationResult {
    std::string theorem;
    std::string corpus_id;
    std::vector<GroupVerdict> verdicts;
    long long violations = 0;
    std::string min_invariant, min_group;
    std::string max_invariant, max_group;
    double duration_seconds = 0; // reported on stderr, never serialized
};

namespace detail {

struct HypConcl {
    bool hypothesis = false;
    bool conclusion = false;
    Fraction value;
    std::string note;
};

inline HypConcl evaluate_theorem(const TheoremId& thm, const GroupAnalysis& A) {
    HypConcl r;
    switch (thm.kind) {
        case TheoremKind::T11: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_all;
            r.hypothesis = PI.acd_all < Fraction(4, 3);
            r.conclusion = PI.has_normal_sylow;
            r.note = PI.has_normal_sylow ? "normal Sylow 2" : "Sylow 2 not normal";
            return r;
        }
        case TheoremKind::T12: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_all;
            r.hypothesis = PI.acd_all < Fraction(5, 2);
            r.conclusion = A.inv.solvable;
            r.note = A.inv.solvable ? "solvable" : "not solvable";
            return r;
        }
        case TheoremKind::T13i: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_strong;
            r.hypothesis = !(Fraction(2) < PI.acd_strong);
            r.conclusion = A.inv.solvable;
            r.note = A.inv.solvable ? "solvable" : "not solvable";
            return r;
        }
        case TheoremKind::T13ii: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_strong;
            r.hypothesis = PI.acd_strong < Fraction(4, 3);
            r.conclusion = PI.has_normal_sylow;
            r.note = PI.has_normal_sylow ? "normal Sylow 2" : "Sylow 2 not normal";
            return r;
        }
        case TheoremKind::C14i: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_real;
            r.hypothesis = !(Fraction(2) < PI.acd_real);
            r.conclusion = A.inv.solvable;
            r.note = A.inv.solvable ? "solvable" : "not solvable";
            return r;
        }
        case TheoremKind::C14ii: {
            const auto& PI = prime_row(A.inv, 2);
            r.value = PI.acd_real;
            r.hypothesis = PI.acd_real < Fraction(4, 3);
            r.conclusion = PI.has_normal_sylow;
            r.note = PI.has_normal_sylow ? "normal Sylow 2" : "Sylow 2 not normal";
            return r;
        }
        case TheoremKind::ItoMichler: {
            const auto& PI = prime_row(A.inv, thm.p);
            r.value = PI.acd_all;
            // biconditional: both directions must agree
            bool avg_one = PI.acd_all == Fraction(1);
            bool na = PI.has_normal_sylow && PI.sylow_abelian;
            r.hypothesis = true;
            r.conclusion = avg_one == na;
            r.note = std::string(avg_one ? "average 1" : "average above 1") + ", Sylow " +
                     (na ? "normal abelian" : "not normal abelian");
            return r;
        }
        case TheoremKind::Conjecture: {
            const auto& PI = prime_row(A.inv, thm.p);
            r.value = PI.acd_all;
            r.hypothesis = PI.acd_all < Fraction(2 * thm.p, thm.p + 1);
            r.conclusion = PI.has_normal_sylow;
            r.note = PI.has_normal_sylow ? "normal Sylow p" : "Sylow p not normal";
            return r;
        }
        case TheoremKind::Sharpness:
            throw internal_error("sharpness is handled separately");
    }
    throw internal_error("unhandled theorem kind");
}

struct ExtremeTracker {
    bool seen = false;
    Fraction lo, hi;
    void feed(VerificationResult& R, const std::string& group, const Fraction& v) {
        if (!seen || v < lo) {
            lo = v;
            R.min_invariant = v.str();
            R.min_group = group;
        }
        if (!seen || hi < v) {
            hi = v;
            R.max_invariant = v.str();
            R.max_group = group;
        }
        seen = true;
    }
};

} // namespace detail

inline VerificationResult verify_theorem(const TheoremId& thm,
                                         const std::vector<GroupAnalysis>& analyses,
                                         const std::string& corpus_id = "corpus") {
    auto t0 = std::chrono::steady_clock::now();
    VerificationResult R;
    R.theorem = thm.str();
    R.corpus_id = corpus_id;
    detail::ExtremeTracker extremes;

    if (thm.kind == TheoremKind::Sharpness) {
        bool found_small = false, found_simple = false;
        for (const auto& A : analyses) {
            GroupVerdict v;
            v.group = A.name;
            v.order = A.inv.order;
            const auto& PI = prime_row(A.inv, 2);
            if (A.inv.order == 6 && !A.inv.abelian) {
                found_small = true;
                bool ok = PI.acd_all == Fraction(4, 3) && !PI.has_normal_sylow &&
                          PI.acd_strong == Fraction(4, 3);
                v.verdict = ok ? "satisfies" : "VIOLATION";
                v.invariant = PI.acd_all.str();
                v.note = "order-6 nonabelian witness: average and strongly real average 4/3, Sylow 2 not normal";
                extremes.feed(R, A.name, PI.acd_all);
            } else if (A.inv.order == 60 && !A.inv.solvable) {
                found_simple = true;
                bool ok = PI.acd_all == Fraction(5, 2) && !A.inv.solvable;
                v.verdict = ok ? "satisfies" : "VIOLATION";
                v.invariant = PI.acd_all.str();
                v.note = "order-60 nonsolvable witness: average 5/2";
                extremes.feed(R, A.name, PI.acd_all);
            } else {
                v.verdict = "vacuous";
                v.invariant = PI.acd_all.str();
                v.note = "not a sharpness witness";
            }
            if (v.verdict == "VIOLATION") ++R.violations;
            R.verdicts.push_back(std::move(v));
        }
        if (!found_small) {
            R.verdicts.push_back({"(corpus)", 0, "VIOLATION", "",
                                  "no order-6 nonabelian witness present"});
            ++R.violations;
        }
        if (!found_simple) {
            R.verdicts.push_back({"(corpus)", 0, "VIOLATION", "",
                                  "no order-60 nonsolvable witness present"});
            ++R.violations;
        }
    } else {
        if ((thm.kind == TheoremKind::ItoMichler || thm.kind == TheoremKind::Conjecture) &&
            !is_prime(thm.p))
            throw input_error("theorem argument must be prime, got " + std::to_string(thm.p));
        for (const auto& A : analyses) {
            detail::HypConcl hc = detail::evaluate_theorem(thm, A);
            GroupVerdict v;
            v.group = A.name;
            v.order = A.inv.order;
            v.invariant = hc.value.str();
            extremes.feed(R, A.name, hc.value);
            if (!hc.hypothesis) {
                v.verdict = "vacuous";
                v.note = "hypothesis not satisfied";
            } else if (hc.conclusion) {
                v.verdict = "satisfies";
                v.note = hc.note;
            } else {
                v.verdict = "VIOLATION";
                v.note = hc.note;
                ++R.violations;
            }
            R.verdicts.push_back(std::move(v));
        }
    }
    R.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

// ---------------------------------------------------------------------------
// Conjecture exploration: locate the minimum average among groups without a
// normal Sylow p-subgroup and compare against 2p/(p+1).
// ---------------------------------------------------------------------------

struct ConjectureReport {
    long long p = 0;
    std::string bound;
    bool redirected = false; // p = 2 restates the first theorem
    long long groups_without_normal_sylow = 0;
    std::string min_invariant, min_group;
    std::vector<std::string> counterexamples;
    std::vector<GroupVerdict> verdicts;
    double duration_seconds = 0;
};

inline ConjectureReport explore_conjecture(long long p, const std::vector<GroupAnalysis>& analyses) {
    if (!is_prime(p)) throw input_error("conjecture exploration needs a prime, got " + std::to_string(p));
    auto t0 = std::chrono::steady_clock::now();
    ConjectureReport R;
    R.p = p;
    Fraction bound(2 * p, p + 1);
    R.bound = bound.str();
    R.redirected = (p == 2);
    Fraction best;
    for (const auto& A : analyses) {
        const auto& PI = prime_row(A.inv, p);
        if (PI.has_normal_sylow) continue;
        ++R.groups_without_normal_sylow;
        GroupVerdict v;
        v.group = A.name;
        v.order = A.inv.order;
        v.invariant = PI.acd_all.str();
        if (PI.acd_all < bound) {
            v.verdict = "VIOLATION";
            v.note = "average below the conjectured bound";
            R.counterexamples.push_back(A.name);
        } else {
            v.verdict = "satisfies";
            v.note = "average at or above the conjectured bound";
        }
        if (R.min_invariant.empty() || PI.acd_all < best) {
            best = PI.acd_all;
            R.min_invariant = best.str();
            R.min_group = A.name;
        }
        R.verdicts.push_back(std::move(v));
    }
    R.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return R;
}

// ---------------------------------------------------------------------------
// Structural check sweep.
// ---------------------------------------------------------------------------

// Groups for which an extension of the relevant degree is assumed to exist;
// assumptions are inputs here, not computed facts.
struct ExtensionAssumption {
    std::string group;
    long long phi_degree = 0;
    bool strongly_real = false;
};

inline const std::vector<ExtensionAssumption>& extension_whitelist() {
    static const std::vector<ExtensionAssumption> W = {
        {"S5", 4, true},
        {"A5", 4, true},
    };
    return W;
}

inline std::vector<CheckReport> run_structural_checks(const std::vector<GroupAnalysis>& analyses) {
    std::vector<CheckReport> out;
    for (const auto& A : analyses) {
        const FiniteGroup& G = *A.group;
        out.push_back(check_frattini_bound(G, A.name));
        out.push_back(check_acd_plus_bound(G, A.table, A.name));
        if (G.order() <= 1) continue;
        auto mins = minimal_normal_subgroups(G);
        for (const auto& N : mins) {
            if (is_abelian(G, N)) {
                try {
                    out.push_back(check_orbit_parity(G, A.table, N, A.name));
                } catch (const precondition_error& e) {
                    CheckReport r;
                    r.check_id = "orbit_parity";
                    r.group = A.name;
                    r.verdict = Verdict::NotApplicable;
                    r.detail = e.what();
                    out.push_back(std::move(r));
                }
            }
            if ((G.order() / N.order()) % 2 == 1) {
                try {
                    out.push_back(check_odd_index_real_extension(G, A.table, N, A.name));
                } catch (const precondition_error& e) {
                    CheckReport r;
                    r.check_id = "odd_index_real_extension";
                    r.group = A.name;
                    r.verdict = Verdict::NotApplicable;
                    r.detail = e.what();
                    out.push_back(std::move(r));
                }
            }
        }
        for (const auto& W : extension_whitelist()) {
            if (W.group != A.name) continue;
            for (const auto& N : mins) {
                if (is_abelian(G, N)) continue;
                try {
                    out.push_back(check_counting_inequalities(G, A.table, N, W.phi_degree,
                                                              /*assume_extends=*/true,
                                                              W.strongly_real, A.name));
                } catch (const precondition_error& e) {
                    CheckReport r;
                    r.check_id = "counting_inequalities";
                    r.group = A.name;
                    r.verdict = Verdict::NotApplicable;
                    r.detail = e.what();
                    out.push_back(std::move(r));
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Report rendering. Output is deterministic for fixed inputs; durations are
// deliberately excluded.
// ---------------------------------------------------------------------------

enum class ReportFormat { Json, Csv, TextTable };

inline ReportFormat report_format_from_name(const std::string& s) {
    if (s == "json") return ReportFormat::Json;
    if (s == "csv") return ReportFormat::Csv;
    if (s == "text-table" || s == "table" || s == "text") return ReportFormat::TextTable;
    throw input_error("unknown report format: '" + s + "' (expected json, csv, or text-table)");
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string render_table(const std::vector<std::string>& header,
                                const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c)
            if (r[c].size() > width[c]) width[c] = r[c].size();
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t c = 0; c < r.size(); ++c) {
            s += r[c];
            if (c + 1 < r.size()) s += std::string(width[c] - r[c].size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        return s + "\n";
    };
    std::string out = line(header);
    std::string dashes;
    for (std::size_t c = 0; c < header.size(); ++c) {
        dashes += std::string(width[c], '-');
        if (c + 1 < header.size()) dashes += "  ";
    }
    out += dashes + "\n";
    for (const auto& r : rows) out += line(r);
    if (rows.empty()) out += "(no rows)\n";
    return out;
}

} // namespace detail

inline std::string render_verification(const std::vector<VerificationResult>& results,
                                       ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["kind"] = "verification";
        j["results"] = nlohmann::json::array();
        for (const auto& R : results) {
            nlohmann::json rj;
            rj["theorem"] = R.theorem;
            rj["corpus"] = R.corpus_id;
            rj["violations"] = R.violations;
            rj["extremal"] = {{"min", {{"group", R.min_group}, {"value", R.min_invariant}}},
                              {"max", {{"group", R.max_group}, {"value", R.max_invariant}}}};
            rj["groups"] = nlohmann::json::array();
            for (const auto& v : R.verdicts)
                rj["groups"].push_back({{"group", v.group},
                                        {"order", v.order},
                                        {"verdict", v.verdict},
                                        {"invariant", v.invariant},
                                        {"note", v.note}});
            j["results"].push_back(std::move(rj));
        }
        return j.dump(2) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::string out = "theorem,group,order,verdict,invariant,note\n";
        for (const auto& R : results)
            for (const auto& v : R.verdicts)
                out += detail::csv_escape(R.theorem) + "," + detail::csv_escape(v.group) + "," +
                       std::to_string(v.order) + "," + detail::csv_escape(v.verdict) + "," +
                       detail::csv_escape(v.invariant) + "," + detail::csv_escape(v.note) + "\n";
        return out;
    }
    std::string out;
    for (const auto& R : results) {
        out += R.theorem + " over corpus '" + R.corpus_id + "': " +
               std::to_string(R.violations) + " violation(s)";
        if (!R.min_invariant.empty())
            out += "; min " + R.min_invariant + " at " + R.min_group + ", max " + R.max_invariant +
                   " at " + R.max_group;
        out += "\n";
        std::vector<std::vector<std::string>> rows;
        for (const auto& v : R.verdicts)
            rows.push_back({v.group, std::to_string(v.order), v.verdict, v.invariant, v.note});
        out += detail::render_table({"group", "order", "verdict", "invariant", "note"}, rows);
        out += "\n";
    }
    if (results.empty()) out = "(no results)\n";
    return out;
}

inline std::string render_checks(const std::vector<CheckReport>& checks, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["kind"] = "checks";
        j["results"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["results"].push_back({{"check", c.check_id},
                                    {"group", c.group},
                                    {"verdict", verdict_name(c.verdict)},
                                    {"hypotheses_verified", c.hypotheses_verified},
                                    {"lhs", c.lhs},
                                    {"rhs", c.rhs},
                                    {"detail", c.detail}});
        return j.dump(2) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::string out = "check,group,verdict,hypotheses_verified,lhs,rhs,detail\n";
        for (const auto& c : checks)
            out += detail::csv_escape(c.check_id) + "," + detail::csv_escape(c.group) + "," +
                   verdict_name(c.verdict) + "," + (c.hypotheses_verified ? "true" : "false") +
                   "," + detail::csv_escape(c.lhs) + "," + detail::csv_escape(c.rhs) + "," +
                   detail::csv_escape(c.detail) + "\n";
        return out;
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : checks)
        rows.push_back({c.check_id, c.group, verdict_name(c.verdict), c.lhs, c.rhs, c.detail});
    return detail::render_table({"check", "group", "verdict", "lhs", "rhs", "detail"}, rows);
}

inline std::string render_conjecture(const ConjectureReport& R, ReportFormat fmt) {
    if (fmt == ReportFormat::Json) {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["kind"] = "conjecture";
        j["p"] = R.p;
        j["bound"] = R.bound;
        j["redirected"] = R.redirected;
        j["groups_without_normal_sylow"] = R.groups_without_normal_sylow;
        j["min"] = {{"group", R.min_group}, {"value", R.min_invariant}};
        j["counterexamples"] = R.counterexamples;
        j["groups"] = nlohmann::json::array();
        for (const auto& v : R.verdicts)
            j["groups"].push_back({{"group", v.group},
                                   {"order", v.order},
                                   {"verdict", v.verdict},
                                   {"invariant", v.invariant},
                                   {"note", v.note}});
        return j.dump(2) + "\n";
    }
    if (fmt == ReportFormat::Csv) {
        std::string out = "group,order,verdict,invariant,note\n";
        for (const auto& v : R.verdicts)
            out += detail::csv_escape(v.group) + "," + std::to_string(v.order) + "," +
                   detail::csv_escape(v.verdict) + "," + detail::csv_escape(v.invariant) + "," +
                   detail::csv_escape(v.note) + "\n";
        return out;
    }
    std::string out = "conjectured bound for p = " + std::to_string(R.p) + ": " + R.bound + "\n";
    if (R.redirected) out += "p = 2 restates the normal-Sylow theorem for the 4/3 bound\n";
    out += std::to_string(R.groups_without_normal_sylow) +
           " group(s) without a normal Sylow p-subgroup\n";
    if (R.groups_without_normal_sylow == 0) {
        out += "no groups without a normal Sylow p-subgroup in this corpus\n";
        return out;
    }
    out += "minimum average " + R.min_invariant + " at " + R.min_group + "\n";
    out += "counterexamples: " + std::to_string(R.counterexamples.size()) + "\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& v : R.verdicts)
        rows.push_back({v.group, std::to_string(v.order), v.verdict, v.invariant, v.note});
    out += detail::render_table({"group", "order", "verdict", "invariant", "note"}, rows);
    return out;
}

// Per-character summary plus one average line per prime.
inline std::string invariant_text_table(const CharacterTable& T, const InvariantReport& R) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < T.chars.size(); ++i) {
        const auto& c = T.chars[i];
        rows.push_back({"chi_" + std::to_string(i), std::to_string(c.degree),
                        std::to_string(c.fs_indicator), c.is_real ? "yes" : "no",
                        c.is_strongly_real ? "yes" : "no"});
    }
    std::string out = "group " + R.name + ": order " + std::to_string(R.order) +
                      (R.abelian ? ", abelian" : "") + (R.solvable ? ", solvable" : ", not solvable") +
                      "\n";
    out += detail::render_table({"character", "degree", "indicator", "real", "strongly-real"}, rows);
    for (const auto& PI : R.primes)
        out += "p = " + std::to_string(PI.p) + ": average " + PI.acd_all.str() + ", real " +
               PI.acd_real.str() + ", strongly real " + PI.acd_strong.str() +
               (PI.has_normal_sylow ? " (normal Sylow)" : "") + "\n";
    return out;
}

inline void write_report_text(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        if (!std::cout) throw io_error("failed writing report to standard output");
        return;
    }
    std::ofstream out(path, std::ios::trunc | std::ios::binary);
    if (!out) throw io_error("cannot open report path: " + path);
    out << text;
    out.flush();
    if (!out) throw io_error("failed writing report: " + path);
}

} // namespace acdlab
