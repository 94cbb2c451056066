#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "acdlab/chartab.hpp"
#include "acdlab/construct.hpp"
#include "acdlab/invariants.hpp"

namespace acdlab {

// A normal subgroup re-enumerated as a group in its own right, with its
// character table and index maps into the parent.
struct SubgroupTable {
    std::unique_ptr<FiniteGroup> group;
    CharacterTable table;
    std::vector<int> to_parent;   // element index in N -> element index in G
    std::vector<int> from_parent; // element index in G -> index in N, or -1
};

inline SubgroupTable make_subgroup_table(const FiniteGroup& G, const Subgroup& N) {
    if (N.parent != &G) throw input_error("subgroup belongs to a different group");
    std::vector<Permutation> gens;
    const std::vector<int>& src = N.gens.empty() ? N.members : N.gens;
    for (int i : src) gens.push_back(G.element(i));
    if (gens.empty()) gens.push_back(Permutation::identity(G.degree()));
    GroupOptions opt = G.options();
    opt.size_cap = static_cast<std::size_t>(N.order());
    SubgroupTable ST;
    ST.group = std::make_unique<FiniteGroup>(FiniteGroup::from_generators(std::move(gens), opt));
    internal_check(ST.group->order() == N.order(), "subgroup re-enumeration changed the order");
    ST.table = character_table(*ST.group);
    ST.to_parent.resize(static_cast<std::size_t>(N.order()));
    ST.from_parent.assign(static_cast<std::size_t>(G.order()), -1);
    for (int i = 0; i < ST.group->order(); ++i) {
        int pi = G.index_of(ST.group->element(i));
        internal_check(pi >= 0, "subgroup element missing from parent");
        ST.to_parent[static_cast<std::size_t>(i)] = pi;
        ST.from_parent[static_cast<std::size_t>(pi)] = i;
    }
    return ST;
}

struct InertiaData {
    std::string normal_subgroup;
    std::vector<std::vector<int>> orbits; // partition of N's character indices
    std::vector<int> orbit_of;
    std::vector<int> orbit_sizes;         // per character
    std::vector<long long> inertia_index; // per character, = orbit size
    std::vector<long long> d_value;       // per character, phi(1) * |G : I_G(phi)|
};

namespace detail {

// theta -> theta^g as a permutation of N's character indices; theta^g is
// found by permuting class values through the conjugation class map.
inline std::vector<int> character_permutation(const FiniteGroup& G, const SubgroupTable& NT,
                                              int g) {
    const CharacterTable& TN = NT.table;
    const int rN = TN.class_count();
    std::vector<int> class_map(static_cast<std::size_t>(rN));
    for (int c = 0; c < rN; ++c) {
        int rep_parent = NT.to_parent[static_cast<std::size_t>(TN.classes.class_reps[static_cast<std::size_t>(c)])];
        int conj_parent = G.conj(rep_parent, g);
        int conj_sub = NT.from_parent[static_cast<std::size_t>(conj_parent)];
        if (conj_sub < 0) throw input_error("conjugation leaves the subgroup: not normal");
        class_map[static_cast<std::size_t>(c)] = TN.classes.class_of[static_cast<std::size_t>(conj_sub)];
    }
    std::map<std::vector<CycValue>, int> lookup;
    for (std::size_t i = 0; i < TN.chars.size(); ++i) lookup.emplace(TN.chars[i].values, static_cast<int>(i));
    std::vector<int> perm(TN.chars.size());
    for (std::size_t i = 0; i < TN.chars.size(); ++i) {
        std::vector<CycValue> moved(static_cast<std::size_t>(rN));
        for (int c = 0; c < rN; ++c)
            moved[static_cast<std::size_t>(c)] =
                TN.chars[i].values[static_cast<std::size_t>(class_map[static_cast<std::size_t>(c)])];
        auto it = lookup.find(moved);
        internal_check(it != lookup.end(), "conjugated character is not a character");
        perm[i] = it->second;
    }
    return perm;
}

} // namespace detail

// Orbits of Irr(N) under conjugation by the subgroup generated by
// acting_gens (defaults to all of G).
inline InertiaData action_on_irr(const FiniteGroup& G, const SubgroupTable& NT,
                                 std::vector<int> acting_gens = {},
                                 const std::string& subgroup_name = "") {
    if (acting_gens.empty()) acting_gens = G.generator_indices();
    const std::size_t nchars = NT.table.chars.size();
    std::vector<std::vector<int>> perms;
    for (int g : acting_gens) perms.push_back(detail::character_permutation(G, NT, g));

    InertiaData D;
    D.normal_subgroup = subgroup_name;
    D.orbit_of.assign(nchars, -1);
    for (std::size_t start = 0; start < nchars; ++start) {
        if (D.orbit_of[start] >= 0) continue;
        int oid = static_cast<int>(D.orbits.size());
        std::vector<int> orbit{static_cast<int>(start)};
        D.orbit_of[start] = oid;
        for (std::size_t at = 0; at < orbit.size(); ++at)
            for (const auto& perm : perms) {
                int img = perm[static_cast<std::size_t>(orbit[at])];
                if (D.orbit_of[static_cast<std::size_t>(img)] < 0) {
                    D.orbit_of[static_cast<std::size_t>(img)] = oid;
                    orbit.push_back(img);
                }
            }
        std::sort(orbit.begin(), orbit.end());
        D.orbits.push_back(std::move(orbit));
    }
    D.orbit_sizes.resize(nchars);
    D.inertia_index.resize(nchars);
    D.d_value.resize(nchars);
    long long index = static_cast<long long>(G.order()) / NT.group->order();
    std::size_t covered = 0;
    for (const auto& orb : D.orbits) covered += orb.size();
    internal_check(covered == nchars, "orbits do not partition the characters");
    for (std::size_t i = 0; i < nchars; ++i) {
        int sz = static_cast<int>(D.orbits[static_cast<std::size_t>(D.orbit_of[i])].size());
        D.orbit_sizes[i] = sz;
        D.inertia_index[i] = sz;
        D.d_value[i] = NT.table.chars[i].degree * sz;
        // Orbit sizes divide the index only when the full group acts.
        if (acting_gens == G.generator_indices())
            internal_check(index % sz == 0, "orbit size does not divide the subgroup index");
    }
    return D;
}

// Exact [chi restricted to N, phi].
inline long long restriction_multiplicity(const CharacterTable& TG, int chi,
                                          const SubgroupTable& NT, int phi) {
    if (chi < 0 || chi >= static_cast<int>(TG.chars.size()))
        throw input_error("restriction: character index out of range");
    if (phi < 0 || phi >= static_cast<int>(NT.table.chars.size()))
        throw input_error("restriction: subgroup character index out of range");
    internal_check(TG.group != nullptr, "table lost its group");
    const FiniteGroup& G = *TG.group;
    const CharacterTable& TN = NT.table;
    const long long eG = TG.exponent;
    const long long eN = TN.exponent;
    internal_check(eG % eN == 0, "subgroup exponent does not divide group exponent");
    const long long scale = eG / eN;

    const auto& cchi = TG.chars[static_cast<std::size_t>(chi)];
    const auto& cphi = TN.chars[static_cast<std::size_t>(phi)];

    std::vector<long long> dense(static_cast<std::size_t>(eG), 0);
    for (int c = 0; c < TN.class_count(); ++c) {
        int rep_parent = NT.to_parent[static_cast<std::size_t>(TN.classes.class_reps[static_cast<std::size_t>(c)])];
        int fused = TG.classes.class_of[static_cast<std::size_t>(rep_parent)];
        long long w = TN.classes.class_sizes[static_cast<std::size_t>(c)];
        const CycValue& vchi = cchi.values[static_cast<std::size_t>(fused)];
        const CycValue& vphi = cphi.values[static_cast<std::size_t>(c)];
        for (auto& [t1, m1] : vchi.terms)
            for (auto& [t2, m2] : vphi.terms) {
                long long idx = ((t1 - t2 * scale) % eG + eG) % eG;
                dense[static_cast<std::size_t>(idx)] += w * m1 * m2;
            }
    }
    CycReducer red(eG);
    auto v = red.as_integer(dense);
    internal_check(v.has_value(), "restriction inner product is not rational");
    internal_check(*v >= 0 && *v % TN.order == 0, "restriction inner product is not a multiple of |N|");
    return *v / TN.order;
}

enum class Verdict { Pass, Fail, Vacuous, NotApplicable, ConditionalSkipped };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Vacuous: return "vacuous";
        case Verdict::NotApplicable: return "not-applicable";
        case Verdict::ConditionalSkipped: return "conditional-skipped";
    }
    return "?";
}

struct CheckReport {
    std::string check_id;
    std::string group;
    Verdict verdict = Verdict::NotApplicable;
    bool hypotheses_verified = false;
    std::string lhs, rhs; // exact values when the check compares two sides
    std::string detail;
};

namespace detail {

inline bool unique_odd_abelian_minimal_normal_with_2_power_index(const FiniteGroup& G,
                                                                 Subgroup& N_out,
                                                                 std::string& why_not) {
    if (G.order() <= 1) {
        why_not = "trivial group";
        return false;
    }
    auto mins = minimal_normal_subgroups(G);
    if (mins.size() != 1) {
        why_not = "no unique minimal normal subgroup (" + std::to_string(mins.size()) + " found)";
        return false;
    }
    Subgroup N = mins[0];
    if (!is_abelian(G, N)) {
        why_not = "minimal normal subgroup is nonabelian";
        return false;
    }
    if (N.order() % 2 == 0) {
        why_not = "minimal normal subgroup has even order";
        return false;
    }
    long long index = static_cast<long long>(G.order()) / N.order();
    while (index % 2 == 0) index /= 2;
    if (index != 1) {
        why_not = "index of the minimal normal subgroup is not a power of 2";
        return false;
    }
    N_out = std::move(N);
    return true;
}

} // namespace detail

// |N| - 1 >= |P : Phi(P)| for G = N x| P with P the Sylow 2-subgroup and N
// the unique (odd, abelian) minimal normal subgroup.
inline CheckReport check_frattini_bound(const FiniteGroup& G, const std::string& name) {
    CheckReport R;
    R.check_id = "frattini_bound";
    R.group = name;
    Subgroup N;
    std::string why;
    if (!detail::unique_odd_abelian_minimal_normal_with_2_power_index(G, N, why)) {
        R.verdict = Verdict::NotApplicable;
        R.detail = why;
        return R;
    }
    R.hypotheses_verified = true;
    Subgroup P = sylow_subgroup(G, 2);
    internal_check(static_cast<long long>(P.order()) * N.order() == G.order(),
                   "sylow 2-subgroup is not a complement");
    Subgroup Phi = frattini_of_p_group(G, P, 2);
    long long lhs = N.order() - 1;
    long long rhs = P.order() / Phi.order();
    R.lhs = std::to_string(lhs);
    R.rhs = std::to_string(rhs);
    R.verdict = lhs >= rhs ? Verdict::Pass : Verdict::Fail;
    R.detail = "|N|-1 = " + R.lhs + " vs |P:Phi(P)| = " + R.rhs;
    return R;
}

// acd over strongly real characters of degree 1 or even degree is at
// least 4/3 under the same hypotheses, with P nontrivial.
inline CheckReport check_acd_plus_bound(const FiniteGroup& G, const CharacterTable& T,
                                        const std::string& name) {
    CheckReport R;
    R.check_id = "acd_plus_bound";
    R.group = name;
    Subgroup N;
    std::string why;
    if (!detail::unique_odd_abelian_minimal_normal_with_2_power_index(G, N, why)) {
        R.verdict = Verdict::NotApplicable;
        R.detail = why;
        return R;
    }
    if (G.order() == N.order()) {
        R.verdict = Verdict::NotApplicable;
        R.detail = "Sylow 2-subgroup is trivial";
        return R;
    }
    R.hypotheses_verified = true;
    Fraction val = acd(T, 2, Variant::Strong);
    Fraction bound(4, 3);
    R.lhs = val.str();
    R.rhs = bound.str();
    R.verdict = val >= bound ? Verdict::Pass : Verdict::Fail;
    R.detail = "strongly real average " + R.lhs + " vs bound " + R.rhs;
    return R;
}

// Orbit parity: for split G = N x| M with N abelian and no nontrivial
// M-invariant character, an average below 4/3 forces all odd orbits.
inline CheckReport check_orbit_parity(const FiniteGroup& G, const CharacterTable& T,
                                      const Subgroup& N, const std::string& name) {
    CheckReport R;
    R.check_id = "orbit_parity";
    R.group = name;
    if (!is_normal(G, N)) throw precondition_error("orbit parity: subgroup is not normal");
    if (!is_abelian(G, N)) throw precondition_error("orbit parity: subgroup is not abelian");
    if (N.order() <= 1) throw precondition_error("orbit parity: subgroup is trivial");

    // Complement search over subgroups generated by small transversal subsets.
    CosetTable cosets = right_cosets(G, N);
    const int m = cosets.count();
    std::vector<int> reps(cosets.reps.begin() + 1, cosets.reps.end());
    Subgroup M;
    bool found = false;
    std::size_t budget = 20000;
    auto try_candidate = [&](std::vector<int> gens) {
        if (found || budget == 0) return;
        --budget;
        Subgroup H = subgroup_generated(G, std::move(gens));
        if (H.order() != m) return;
        if (intersect(G, H, N).order() != 1) return;
        M = std::move(H);
        found = true;
    };
    for (std::size_t i = 0; i < reps.size() && !found && budget > 0; ++i) try_candidate({reps[i]});
    for (std::size_t i = 0; i < reps.size() && !found && budget > 0; ++i)
        for (std::size_t j = i + 1; j < reps.size() && !found && budget > 0; ++j)
            try_candidate({reps[i], reps[j]});
    for (std::size_t i = 0; i < reps.size() && !found && budget > 0; ++i)
        for (std::size_t j = i + 1; j < reps.size() && !found && budget > 0; ++j)
            for (std::size_t k = j + 1; k < reps.size() && !found && budget > 0; ++k)
                try_candidate({reps[i], reps[j], reps[k]});
    if (!found)
        throw precondition_error("orbit parity: no complement found within the search budget");

    SubgroupTable NT = make_subgroup_table(G, N);
    InertiaData act = action_on_irr(G, NT, M.gens.empty() ? M.members : M.gens, name);

    // Identify the principal character of N.
    int principal = -1;
    for (std::size_t i = 0; i < NT.table.chars.size(); ++i) {
        const auto& c = NT.table.chars[i];
        if (c.degree != 1) continue;
        bool all_one = true;
        for (const auto& v : c.values)
            if (!(v.terms.size() == 1 && v.terms[0].first == 0 && v.terms[0].second == 1)) {
                all_one = false;
                break;
            }
        if (all_one) { principal = static_cast<int>(i); break; }
    }
    internal_check(principal >= 0, "principal character not found");

    std::vector<int> nontrivial_orbit_sizes;
    for (std::size_t i = 0; i < NT.table.chars.size(); ++i) {
        if (static_cast<int>(i) == principal) continue;
        if (act.orbit_sizes[i] == 1)
            throw precondition_error("orbit parity: nontrivial invariant character exists");
    }
    for (std::size_t oi = 0; oi < act.orbits.size(); ++oi) {
        const auto& orb = act.orbits[oi];
        if (orb.size() == 1 && orb[0] == principal) continue;
        nontrivial_orbit_sizes.push_back(static_cast<int>(orb.size()));
    }
    std::sort(nontrivial_orbit_sizes.begin(), nontrivial_orbit_sizes.end());
    std::string multiset = "{";
    for (std::size_t i = 0; i < nontrivial_orbit_sizes.size(); ++i) {
        if (i) multiset += ",";
        multiset += std::to_string(nontrivial_orbit_sizes[static_cast<std::size_t>(i)]);
    }
    multiset += "}";

    R.hypotheses_verified = true;
    Fraction val = acd(T, 2, Variant::All);
    Fraction bound(4, 3);
    R.lhs = val.str();
    R.rhs = bound.str();
    if (!(val < bound)) {
        R.verdict = Verdict::Vacuous;
        R.detail = "hypothesis not triggered (average " + val.str() + " not below 4/3); orbit sizes " + multiset;
        return R;
    }
    bool all_odd = true;
    for (int s : nontrivial_orbit_sizes)
        if (s % 2 == 0) all_odd = false;
    R.verdict = all_odd ? Verdict::Pass : Verdict::Fail;
    R.detail = "average " + val.str() + " below 4/3; orbit sizes " + multiset;
    return R;
}

// Every strongly real character of N lies under exactly one strongly real
// character of G when the index is odd.
inline CheckReport check_odd_index_real_extension(const FiniteGroup& G, const CharacterTable& TG,
                                                  const Subgroup& N, const std::string& name) {
    CheckReport R;
    R.check_id = "odd_index_real_extension";
    R.group = name;
    if (!is_normal(G, N)) throw precondition_error("odd index extension: subgroup is not normal");
    long long index = static_cast<long long>(G.order()) / N.order();
    if (index % 2 == 0) throw precondition_error("odd index extension: index is even");
    R.hypotheses_verified = true;

    SubgroupTable NT = make_subgroup_table(G, N);
    bool all_unique = true;
    std::string detail;
    for (std::size_t phi = 0; phi < NT.table.chars.size(); ++phi) {
        if (!NT.table.chars[phi].is_strongly_real) continue;
        long long over = 0;
        for (std::size_t chi = 0; chi < TG.chars.size(); ++chi) {
            if (!TG.chars[chi].is_strongly_real) continue;
            if (restriction_multiplicity(TG, static_cast<int>(chi), NT, static_cast<int>(phi)) > 0) ++over;
        }
        if (!detail.empty()) detail += "; ";
        detail += "phi(1)=" + std::to_string(NT.table.chars[phi].degree) + " -> " +
                  std::to_string(over) + " strongly real above";
        if (over != 1) all_unique = false;
    }
    R.verdict = all_unique ? Verdict::Pass : Verdict::Fail;
    R.detail = detail.empty() ? "no strongly real characters in the subgroup" : detail;
    return R;
}

// Counting inequalities for a minimal normal nonabelian N and a character
// phi of N assumed to extend to its inertia group; (ii) additionally
// assumes a strongly real extension.
inline CheckReport check_counting_inequalities(const FiniteGroup& G, const CharacterTable& TG,
                                               const Subgroup& N, long long phi_degree,
                                               bool assume_extends, bool strongly_real_extension,
                                               const std::string& name) {
    CheckReport R;
    R.check_id = "counting_inequalities";
    R.group = name;
    if (!is_normal(G, N)) throw precondition_error("counting inequalities: subgroup is not normal");
    if (is_abelian(G, N)) throw precondition_error("counting inequalities: subgroup is abelian");
    auto mins = minimal_normal_subgroups(G);
    bool minimal = false;
    for (const auto& Mn : mins)
        if (Mn.members == N.members) { minimal = true; break; }
    if (!minimal) throw precondition_error("counting inequalities: subgroup is not minimal normal");

    if (!assume_extends) {
        R.verdict = Verdict::ConditionalSkipped;
        R.detail = "extendibility not assumed; conditional, skipped";
        return R;
    }

    SubgroupTable NT = make_subgroup_table(G, N);
    std::vector<int> phis;
    for (std::size_t i = 0; i < NT.table.chars.size(); ++i)
        if (NT.table.chars[i].degree == phi_degree) phis.push_back(static_cast<int>(i));
    if (phis.empty())
        throw precondition_error("counting inequalities: no character of the requested degree");
    InertiaData act = action_on_irr(G, NT, {}, name);
    int oid = act.orbit_of[static_cast<std::size_t>(phis[0])];
    for (int phi : phis)
        if (act.orbit_of[static_cast<std::size_t>(phi)] != oid)
            throw precondition_error(
                "counting inequalities: requested degree is split across orbits");
    long long s = act.orbit_sizes[static_cast<std::size_t>(phis[0])];
    long long d = phi_degree * s;

    long long n1 = count_degree(TG, 1, Variant::All);
    long long nd = count_degree(TG, d, Variant::All);
    long long n2 = count_degree(TG, 2, Variant::All);
    long long n2d = count_degree(TG, 2 * d, Variant::All);

    R.hypotheses_verified = true;
    bool ok = true;
    std::string detail = "d = " + std::to_string(d) + ", |G:I| = " + std::to_string(s);

    bool i_ok = n1 <= nd * s;
    detail += "; (i) n_1 = " + std::to_string(n1) + " <= " + std::to_string(nd * s) + (i_ok ? " pass" : " FAIL");
    ok = ok && i_ok;

    // (iii) doubled to stay in integers.
    bool iii_ok = 2 * n2 <= 2 * n2d * s + nd * s;
    detail += "; (iii) 2*n_2 = " + std::to_string(2 * n2) + " <= " + std::to_string(2 * n2d * s + nd * s) +
              (iii_ok ? " pass" : " FAIL");
    ok = ok && iii_ok;

    if (strongly_real_extension) {
        long long n1p = count_degree(TG, 1, Variant::Strong);
        long long ndp = count_degree(TG, d, Variant::Strong);
        bool ii_ok = n1p <= ndp * s;
        detail += "; (ii) n_1+ = " + std::to_string(n1p) + " <= " + std::to_string(ndp * s) +
                  (ii_ok ? " pass" : " FAIL");
        ok = ok && ii_ok;
    }
    if (s == 1) {
        bool inv_ok = n2 <= n2d;
        detail += "; invariant case n_2 = " + std::to_string(n2) + " <= " + std::to_string(n2d) +
                  (inv_ok ? " pass" : " FAIL");
        ok = ok && inv_ok;
    }
    R.lhs = std::to_string(n1);
    R.rhs = std::to_string(nd * s);
    R.verdict = ok ? Verdict::Pass : Verdict::Fail;
    R.detail = detail;
    return R;
}

} // namespace acdlab
