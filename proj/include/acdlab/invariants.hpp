#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "acdlab/chartab.hpp"
#include "acdlab/fraction.hpp"
#include "acdlab/subgroups.hpp"

namespace acdlab {

// Which characters count: all of them, the real-valued ones, or the
// strongly real ones (indicator +1).
enum class Variant { All, Real, Strong };

inline const char* variant_name(Variant v) {
    switch (v) {
        case Variant::All: return "all";
        case Variant::Real: return "real";
        case Variant::Strong: return "strong";
    }
    return "?";
}

inline Variant variant_from_name(const std::string& s) {
    if (s == "all") return Variant::All;
    if (s == "real") return Variant::Real;
    if (s == "strong") return Variant::Strong;
    throw input_error("unknown variant '" + s + "' (expected all, real, strong)");
}

inline bool variant_admits(Variant v, const CharacterRecord& c) {
    switch (v) {
        case Variant::All: return true;
        case Variant::Real: return c.is_real;
        case Variant::Strong: return c.is_strongly_real;
    }
    return false;
}

// Indices of characters of degree 1 or degree divisible by p, filtered by
// variant. Always nonempty for Variant::All and Variant::Strong since the
// principal character qualifies.
inline std::vector<int> irr_subset(const CharacterTable& T, long long p, Variant v) {
    if (!is_prime(p)) throw input_error("irr_subset needs a prime");
    std::vector<int> idx;
    for (std::size_t i = 0; i < T.chars.size(); ++i) {
        const auto& c = T.chars[i];
        if (!(c.degree == 1 || c.degree % p == 0)) continue;
        if (!variant_admits(v, c)) continue;
        idx.push_back(static_cast<int>(i));
    }
    return idx;
}

// Average character degree over the p-subset.
inline Fraction acd(const CharacterTable& T, long long p, Variant v = Variant::All) {
    auto idx = irr_subset(T, p, v);
    internal_check(!idx.empty(), "degree average over an empty set");
    long long sum = 0;
    for (int i : idx) sum += T.chars[static_cast<std::size_t>(i)].degree;
    Fraction f(sum, static_cast<long long>(idx.size()));
    internal_check(f >= Fraction(1), "degree average below one");
    return f;
}

// Number of irreducibles of degree k, filtered by variant.
inline long long count_degree(const CharacterTable& T, long long k, Variant v = Variant::All) {
    long long n = 0;
    for (const auto& c : T.chars)
        if (c.degree == k && variant_admits(v, c)) ++n;
    return n;
}

// Number of degree-k irreducibles whose kernel does not contain N.
inline long long count_degree_rel(const CharacterTable& T, long long k, const Subgroup& N) {
    internal_check(T.group != nullptr, "table lost its group");
    const FiniteGroup& G = *T.group;
    if (N.parent != &G) throw input_error("count_degree_rel: subgroup of a different group");
    if (!is_normal(G, N)) throw input_error("count_degree_rel: subgroup is not normal");
    std::vector<char> class_in_N(static_cast<std::size_t>(T.class_count()), 0);
    for (int m : N.members) class_in_N[static_cast<std::size_t>(T.classes.class_of[static_cast<std::size_t>(m)])] = 1;
    long long n = 0;
    for (const auto& c : T.chars) {
        if (c.degree != k) continue;
        std::vector<char> in_kernel(static_cast<std::size_t>(T.class_count()), 0);
        for (int kc : c.kernel_classes) in_kernel[static_cast<std::size_t>(kc)] = 1;
        bool contains_N = true;
        for (int cls = 0; cls < T.class_count(); ++cls)
            if (class_in_N[static_cast<std::size_t>(cls)] && !in_kernel[static_cast<std::size_t>(cls)]) {
                contains_N = false;
                break;
            }
        if (!contains_N) ++n;
    }
    return n;
}

struct PrimeInvariants {
    long long p = 0;
    Fraction acd_all, acd_real, acd_strong;
    bool has_normal_sylow = false;
    bool sylow_abelian = false;
};

struct DegreeCount {
    long long k = 0;
    long long n = 0;      // all
    long long n_plus = 0; // strongly real
};

struct InvariantReport {
    std::string name;
    long long order = 0;
    bool solvable = false;
    bool abelian = false;
    long long derived_index = 0;  // |G : G'|
    long long squares_index = 0;  // |G : G*|
    std::vector<PrimeInvariants> primes;
    std::vector<DegreeCount> degrees;
};

// Per-prime and per-degree invariants. Primes covered: divisors of |G|
// together with any extras requested (values for p not dividing |G| are
// well defined; the p-subset is then just the linear characters).
inline InvariantReport build_invariant_report(const CharacterTable& T, const std::string& name,
                                              std::vector<long long> extra_primes = {2, 3, 5}) {
    internal_check(T.group != nullptr, "table lost its group");
    const FiniteGroup& G = *T.group;
    InvariantReport R;
    R.name = name;
    R.order = T.order;
    R.solvable = is_solvable(G);
    R.abelian = G.is_abelian();

    Subgroup derived = derived_subgroup(G, whole_subgroup(G));
    R.derived_index = T.order / derived.order();
    Subgroup squares = squares_subgroup(G);
    R.squares_index = T.order / squares.order();

    std::vector<long long> ps;
    for (u64 q : prime_factors(static_cast<u64>(T.order))) ps.push_back(static_cast<long long>(q));
    for (long long q : extra_primes)
        if (std::find(ps.begin(), ps.end(), q) == ps.end()) ps.push_back(q);
    std::sort(ps.begin(), ps.end());

    for (long long q : ps) {
        PrimeInvariants PI;
        PI.p = q;
        PI.acd_all = acd(T, q, Variant::All);
        PI.acd_real = acd(T, q, Variant::Real);
        PI.acd_strong = acd(T, q, Variant::Strong);
        Subgroup P = sylow_subgroup(G, q);
        PI.has_normal_sylow = is_normal(G, P);
        PI.sylow_abelian = is_abelian(G, P);
        R.primes.push_back(PI);
    }

    std::map<long long, DegreeCount> by_deg;
    for (const auto& c : T.chars) {
        auto& dc = by_deg[c.degree];
        dc.k = c.degree;
        dc.n++;
        if (c.is_strongly_real) dc.n_plus++;
    }
    long long total = 0;
    for (auto& [k, dc] : by_deg) {
        R.degrees.push_back(dc);
        total += dc.n;
    }
    internal_check(total == static_cast<long long>(T.chars.size()), "degree counts do not partition");
    return R;
}

// True when, for every prime dividing the order, the p-subset average is 1
// exactly when the Sylow p-subgroup is normal and abelian.
inline bool ito_michler_check(const InvariantReport& R) {
    for (const auto& PI : R.primes) {
        if (R.order % PI.p != 0) continue;
        bool avg_one = PI.acd_all == Fraction(1);
        bool normal_abelian = PI.has_normal_sylow && PI.sylow_abelian;
        if (avg_one != normal_abelian) return false;
    }
    return true;
}

inline nlohmann::json invariant_report_to_json(const InvariantReport& R) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["name"] = R.name;
    j["order"] = R.order;
    j["solvable"] = R.solvable;
    j["abelian"] = R.abelian;
    j["derived_index"] = R.derived_index;
    j["squares_index"] = R.squares_index;
    j["primes"] = nlohmann::json::array();
    for (const auto& PI : R.primes) {
        nlohmann::json pj;
        pj["p"] = PI.p;
        pj["acd"] = PI.acd_all.str();
        pj["acd_real"] = PI.acd_real.str();
        pj["acd_plus"] = PI.acd_strong.str();
        pj["has_normal_sylow"] = PI.has_normal_sylow;
        pj["sylow_abelian"] = PI.sylow_abelian;
        j["primes"].push_back(pj);
    }
    j["degrees"] = nlohmann::json::array();
    for (const auto& dc : R.degrees) {
        nlohmann::json dj;
        dj["k"] = dc.k;
        dj["n"] = dc.n;
        dj["n_plus"] = dc.n_plus;
        j["degrees"].push_back(dj);
    }
    return j;
}

} // namespace acdlab
