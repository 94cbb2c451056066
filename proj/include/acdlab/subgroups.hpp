#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "acdlab/group.hpp"

namespace acdlab {

// Subgroup of a parent FiniteGroup, stored as sorted member indices
// plus the generator indices it was built from.
struct Subgroup {
    const FiniteGroup* parent = nullptr;
    std::vector<int> members; // sorted
    std::vector<int> gens;

    int order() const { return static_cast<int>(members.size()); }
    bool contains(int i) const {
        return std::binary_search(members.begin(), members.end(), i);
    }
    friend bool operator==(const Subgroup& a, const Subgroup& b) {
        return a.members == b.members;
    }
};

namespace detail {

// Closure of {identity} under right multiplication by gens.
inline std::vector<int> closure(const FiniteGroup& G, const std::vector<int>& gens) {
    std::vector<char> in(static_cast<std::size_t>(G.order()), 0);
    std::vector<int> out;
    out.push_back(0);
    in[0] = 1;
    for (std::size_t at = 0; at < out.size(); ++at) {
        for (int g : gens) {
            int y = G.mul(out[at], g);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = 1;
                out.push_back(y);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

inline Subgroup subgroup_generated(const FiniteGroup& G, std::vector<int> gen_indices) {
    for (int g : gen_indices)
        if (g < 0 || g >= G.order()) throw input_error("generator index out of range");
    Subgroup H;
    H.parent = &G;
    H.gens = std::move(gen_indices);
    H.members = detail::closure(G, H.gens);
    return H;
}

inline Subgroup trivial_subgroup(const FiniteGroup& G) {
    Subgroup H;
    H.parent = &G;
    H.members = {0};
    return H;
}

inline Subgroup whole_subgroup(const FiniteGroup& G) {
    Subgroup H;
    H.parent = &G;
    H.members.resize(static_cast<std::size_t>(G.order()));
    for (int i = 0; i < G.order(); ++i) H.members[static_cast<std::size_t>(i)] = i;
    H.gens = G.generator_indices();
    return H;
}

// Conjugating the generators into H suffices: it forces H^g <= H, hence
// H^g = H by finiteness, for each group generator g, and the normalizer
// is a subgroup.
inline bool is_normal(const FiniteGroup& G, const Subgroup& H) {
    const std::vector<int>& hg = H.gens.empty() ? H.members : H.gens;
    for (int g : G.generator_indices())
        for (int s : hg)
            if (!H.contains(G.conj(s, g))) return false;
    return true;
}

namespace detail {

// Grows H until conjugation by each element of conj_by maps H into itself.
inline void close_under_conjugation(const FiniteGroup& G, Subgroup& H,
                                    const std::vector<int>& conj_by) {
    while (true) {
        std::vector<int> missing;
        for (int m : H.members)
            for (int g : conj_by) {
                int c = G.conj(m, g);
                if (!H.contains(c)) missing.push_back(c);
            }
        if (missing.empty()) return;
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        H.gens.insert(H.gens.end(), missing.begin(), missing.end());
        H.members = closure(G, H.gens);
    }
}

} // namespace detail

// Least subgroup containing the given elements that is normal in G.
inline Subgroup normal_closure(const FiniteGroup& G, std::vector<int> gen_indices) {
    Subgroup H = subgroup_generated(G, std::move(gen_indices));
    detail::close_under_conjugation(G, H, G.generator_indices());
    return H;
}

// Derived subgroup of H: closure of generator commutators under
// conjugation by H (normal closure taken inside H).
inline Subgroup derived_subgroup(const FiniteGroup& G, const Subgroup& H) {
    const std::vector<int>& hg = H.gens.empty() ? H.members : H.gens;
    std::vector<int> comms;
    for (int a : hg)
        for (int b : hg) {
            int c = G.commutator(a, b);
            if (c != 0) comms.push_back(c);
        }
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    Subgroup D;
    D.parent = &G;
    D.gens = comms;
    D.members = detail::closure(G, D.gens);
    detail::close_under_conjugation(G, D, hg);
    return D;
}

inline std::vector<Subgroup> derived_series(const FiniteGroup& G) {
    std::vector<Subgroup> series;
    series.push_back(whole_subgroup(G));
    while (true) {
        Subgroup next = derived_subgroup(G, series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
        if (series.back().order() == 1) break;
    }
    return series;
}

inline bool is_solvable(const FiniteGroup& G) {
    return derived_series(G).back().order() == 1;
}

inline bool is_abelian(const FiniteGroup& G, const Subgroup& H) {
    const std::vector<int>& hg = H.gens.empty() ? H.members : H.gens;
    for (int a : hg)
        for (int b : hg)
            if (G.mul(a, b) != G.mul(b, a)) return false;
    return true;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Sylow p-subgroup grown through normalizers: a p-subgroup P below full
// p-power order has p dividing |N_G(P) : P|, so some p-element of N_G(P)
// outside P extends P.
inline Subgroup sylow_subgroup(const FiniteGroup& G, long long p) {
    if (!is_prime(p)) throw input_error("sylow_subgroup needs a prime");
    long long ppow = 1;
    long long n = G.order();
    while (n % p == 0) {
        n /= p;
        ppow *= p;
    }
    Subgroup P = trivial_subgroup(G);
    while (P.order() < ppow) {
        // N_G(P) by scan; P^g = P iff all generators of P conjugate into P.
        const std::vector<int>& pg = P.gens.empty() ? P.members : P.gens;
        int extend = -1;
        for (int g = 0; g < G.order() && extend < 0; ++g) {
            bool normalizes = true;
            for (int s : pg)
                if (!P.contains(G.conj(s, g))) { normalizes = false; break; }
            if (!normalizes || P.contains(g)) continue;
            int o = G.element_order(g);
            while (o % p == 0) o /= p;
            // z = g^o is the p-part of g; it normalizes P since g does.
            int z = G.power(g, o);
            if (z != 0 && !P.contains(z)) extend = z;
        }
        internal_check(extend >= 0, "sylow growth stalled");
        P.gens.push_back(extend);
        P.members = detail::closure(G, P.gens);
        internal_check(ppow % P.order() == 0, "sylow candidate order is not a p-power divisor");
    }
    return P;
}

inline bool has_normal_sylow(const FiniteGroup& G, long long p) {
    return is_normal(G, sylow_subgroup(G, p));
}

inline Subgroup center(const FiniteGroup& G) {
    Subgroup Z;
    Z.parent = &G;
    for (int x = 0; x < G.order(); ++x) {
        bool central = true;
        for (int g : G.generator_indices())
            if (G.mul(x, g) != G.mul(g, x)) { central = false; break; }
        if (central) Z.members.push_back(x);
    }
    Z.gens = Z.members;
    return Z;
}

// Frattini subgroup of a p-group: closure of p-th powers and commutators.
inline Subgroup frattini_of_p_group(const FiniteGroup& G, const Subgroup& P, long long p) {
    if (!is_prime(p)) throw input_error("frattini_of_p_group needs a prime");
    long long o = P.order();
    while (o % p == 0) o /= p;
    if (o != 1) throw input_error("frattini_of_p_group: subgroup is not a p-group");
    std::vector<int> gens;
    for (int m : P.members) {
        int z = G.power(m, p);
        if (z != 0) gens.push_back(z);
    }
    const std::vector<int>& pg = P.gens.empty() ? P.members : P.gens;
    for (int a : pg)
        for (int b : pg) {
            int c = G.commutator(a, b);
            if (c != 0) gens.push_back(c);
        }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Subgroup F;
    F.parent = &G;
    F.gens = gens;
    F.members = detail::closure(G, F.gens);
    return F;
}

inline Subgroup frattini_of_p_group(const FiniteGroup& G, long long p) {
    return frattini_of_p_group(G, whole_subgroup(G), p);
}

// Subgroup generated by all squares; the generating set is closed under
// conjugation, so the result is normal.
inline Subgroup squares_subgroup(const FiniteGroup& G) {
    std::vector<int> gens;
    for (int x = 0; x < G.order(); ++x) {
        int s = G.mul(x, x);
        if (s != 0) gens.push_back(s);
    }
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    Subgroup S;
    S.parent = &G;
    S.gens = gens;
    S.members = detail::closure(G, S.gens);
    return S;
}

inline std::vector<Subgroup> minimal_normal_subgroups(const FiniteGroup& G) {
    if (G.order() <= 1) throw input_error("minimal_normal_subgroups needs a nontrivial group");
    std::map<std::vector<int>, Subgroup> seen;
    for (int x = 1; x < G.order(); ++x) {
        Subgroup N = normal_closure(G, {x});
        seen.emplace(N.members, std::move(N));
    }
    std::vector<Subgroup> minimal;
    for (auto& [mem, N] : seen) {
        bool is_min = true;
        for (auto& [mem2, M] : seen) {
            if (mem2.size() >= mem.size() || M.order() == 1) continue;
            if (std::includes(mem.begin(), mem.end(), mem2.begin(), mem2.end())) {
                is_min = false;
                break;
            }
        }
        if (is_min) minimal.push_back(N);
    }
    return minimal;
}

inline Subgroup intersect(const FiniteGroup& G, const Subgroup& A, const Subgroup& B) {
    Subgroup I;
    I.parent = &G;
    std::set_intersection(A.members.begin(), A.members.end(), B.members.begin(), B.members.end(),
                          std::back_inserter(I.members));
    I.gens = I.members;
    return I;
}

} // namespace acdlab
