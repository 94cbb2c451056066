#pragma once

#include <string>
#include <vector>

#include "acdlab/group.hpp"
#include "acdlab/subgroups.hpp"

namespace acdlab {

// Right cosets Ng, numbered so that coset 0 is N and representatives are
// the least element index in each coset.
struct CosetTable {
    std::vector<int> coset_of; // element index -> coset id
    std::vector<int> reps;     // coset id -> least element index
    int count() const { return static_cast<int>(reps.size()); }
};

inline CosetTable right_cosets(const FiniteGroup& G, const Subgroup& N) {
    CosetTable T;
    T.coset_of.assign(static_cast<std::size_t>(G.order()), -1);
    for (int x = 0; x < G.order(); ++x) {
        if (T.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
        int cid = static_cast<int>(T.reps.size());
        T.reps.push_back(x);
        for (int n : N.members) T.coset_of[static_cast<std::size_t>(G.mul(n, x))] = cid;
    }
    internal_check(T.count() * N.order() == G.order(), "cosets do not partition evenly");
    return T;
}

// G/N as a permutation group via right translation on cosets.
inline FiniteGroup quotient_group(const FiniteGroup& G, const Subgroup& N) {
    if (N.parent != &G) throw input_error("quotient: subgroup has a different parent");
    if (!is_normal(G, N)) throw input_error("quotient: subgroup is not normal");
    CosetTable T = right_cosets(G, N);
    const int m = T.count();
    if (static_cast<std::size_t>(m) > 65535) throw size_limit_error("quotient degree exceeds 65535");

    auto translation = [&](int g) {
        std::vector<Point> img(static_cast<std::size_t>(m));
        for (int c = 0; c < m; ++c)
            img[static_cast<std::size_t>(c)] = static_cast<Point>(
                T.coset_of[static_cast<std::size_t>(G.mul(T.reps[static_cast<std::size_t>(c)], g))]);
        return Permutation(std::move(img));
    };

    std::vector<Permutation> gens;
    for (int g : G.generator_indices()) gens.push_back(translation(g));
    if (gens.empty()) gens.push_back(Permutation::identity(static_cast<std::size_t>(m)));
    GroupOptions opt = G.options();
    opt.size_cap = static_cast<std::size_t>(m) + 1;
    FiniteGroup Q = FiniteGroup::from_generators(std::move(gens), opt);
    internal_check(Q.order() == m, "quotient order mismatch");
    return Q;
}

inline FiniteGroup direct_product(const FiniteGroup& A, const FiniteGroup& B, GroupOptions opt = {}) {
    long long target = static_cast<long long>(A.order()) * B.order();
    if (target > static_cast<long long>(opt.size_cap))
        throw size_limit_error("direct product order " + std::to_string(target) + " exceeds cap of " +
                               std::to_string(opt.size_cap));
    std::size_t dA = A.degree(), dB = B.degree();
    std::vector<Permutation> gens;
    for (const auto& g : A.generator_perms()) {
        Permutation p = Permutation::identity(dA + dB);
        for (std::size_t i = 0; i < dA; ++i) p.images[i] = g.images[i];
        gens.push_back(std::move(p));
    }
    for (const auto& g : B.generator_perms()) {
        Permutation p = Permutation::identity(dA + dB);
        for (std::size_t i = 0; i < dB; ++i) p.images[dA + i] = static_cast<Point>(g.images[i] + dA);
        gens.push_back(std::move(p));
    }
    if (gens.empty()) gens.push_back(Permutation::identity(dA + dB));
    GroupOptions geopt = opt;
    geopt.size_cap = static_cast<std::size_t>(target);
    FiniteGroup D = FiniteGroup::from_generators(std::move(gens), geopt);
    internal_check(D.order() == target, "direct product order mismatch");
    return D;
}

// Central product identifying <zA> with <zB>; zA and zB must be central
// of equal order, and zA^k is glued to zB^k.
inline FiniteGroup central_product(const FiniteGroup& A, const FiniteGroup& B, int zA, int zB,
                                   GroupOptions opt = {}) {
    if (zA < 0 || zA >= A.order() || zB < 0 || zB >= B.order())
        throw input_error("central product: amalgam element index out of range");
    for (int g : A.generator_indices())
        if (A.mul(zA, g) != A.mul(g, zA)) throw input_error("central product: zA is not central");
    for (int g : B.generator_indices())
        if (B.mul(zB, g) != B.mul(g, zB)) throw input_error("central product: zB is not central");
    if (A.element_order(zA) != B.element_order(zB))
        throw input_error("central product: amalgam elements have different orders");

    FiniteGroup D = direct_product(A, B, opt);
    // Pair (zA, zB^{-1}) inside the direct product.
    Permutation glue = Permutation::identity(A.degree() + B.degree());
    const Permutation& pa = A.element(zA);
    const Permutation& pb = B.element(B.inv(zB));
    for (std::size_t i = 0; i < A.degree(); ++i) glue.images[i] = pa.images[i];
    for (std::size_t i = 0; i < B.degree(); ++i)
        glue.images[A.degree() + i] = static_cast<Point>(pb.images[i] + A.degree());
    int gi = D.index_of(glue);
    internal_check(gi >= 0, "central product: glue element missing");
    Subgroup Z = subgroup_generated(D, {gi});
    return quotient_group(D, Z);
}

// Extends automorphism generator images to the whole group along the
// enumeration words; images_of_gens[i] is the image of generator i.
inline std::vector<int> automorphism_from_gen_images(const FiniteGroup& N,
                                                     const std::vector<int>& images_of_gens) {
    const auto& gens = N.generator_indices();
    if (images_of_gens.size() != gens.size())
        throw input_error("automorphism: expected one image per generator");
    // Walk elements in BFS order; each non-identity element is prev*gen.
    std::vector<int> img(static_cast<std::size_t>(N.order()), -1);
    img[0] = 0;
    std::vector<int> gen_img(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) gen_img[i] = images_of_gens[i];
    for (int x = 1; x < N.order(); ++x) {
        // Recover (prev, gen) from the element's word by peeling one letter.
        // Enumeration guarantees such a decomposition exists with prev < x.
        int found = -1;
        for (std::size_t gi = 0; gi < gens.size() && found < 0; ++gi) {
            int prev = N.mul(x, N.inv(gens[gi]));
            if (prev < x && img[static_cast<std::size_t>(prev)] >= 0) {
                found = N.mul(img[static_cast<std::size_t>(prev)], gen_img[gi]);
            }
        }
        if (found < 0) throw internal_error("automorphism extension failed to find a word");
        img[static_cast<std::size_t>(x)] = found;
    }
    // Verify bijectivity and multiplicativity.
    std::vector<char> seen(static_cast<std::size_t>(N.order()), 0);
    for (int v : img) {
        if (v < 0 || seen[static_cast<std::size_t>(v)])
            throw input_error("generator images do not define an automorphism (not bijective)");
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (int a = 0; a < N.order(); ++a)
        for (int b = 0; b < N.order(); ++b)
            if (img[static_cast<std::size_t>(N.mul(a, b))] !=
                N.mul(img[static_cast<std::size_t>(a)], img[static_cast<std::size_t>(b)]))
                throw input_error("generator images do not define an automorphism (not multiplicative)");
    return img;
}

// Semidirect product N x| P. action[i] is the index permutation of N
// induced by P's generator i; these extend multiplicatively along P.
// The result acts on N x P pairs by right translation; if the action
// fails to respect P's relations the closure exceeds |N||P| and the
// construction reports it.
inline FiniteGroup semidirect_product(const FiniteGroup& N, const FiniteGroup& P,
                                      const std::vector<std::vector<int>>& action,
                                      GroupOptions opt = {}) {
    const auto& pgens = P.generator_indices();
    if (action.size() != pgens.size())
        throw input_error("semidirect product: expected one automorphism per generator of P");
    for (const auto& a : action) {
        if (a.size() != static_cast<std::size_t>(N.order()))
            throw input_error("semidirect product: automorphism has wrong domain size");
        std::vector<char> seen(a.size(), 0);
        for (int v : a) {
            if (v < 0 || v >= N.order() || seen[static_cast<std::size_t>(v)])
                throw input_error("semidirect product: action entry is not a permutation of N");
            seen[static_cast<std::size_t>(v)] = 1;
        }
        for (int x = 0; x < N.order(); ++x)
            for (int y = 0; y < N.order(); ++y)
                if (a[static_cast<std::size_t>(N.mul(x, y))] !=
                    N.mul(a[static_cast<std::size_t>(x)], a[static_cast<std::size_t>(y)]))
                    throw input_error("semidirect product: action entry is not an automorphism");
    }
    long long target = static_cast<long long>(N.order()) * P.order();
    if (target > static_cast<long long>(opt.size_cap))
        throw size_limit_error("semidirect product order " + std::to_string(target) +
                               " exceeds cap of " + std::to_string(opt.size_cap));
    if (target > 65535) throw size_limit_error("semidirect product degree exceeds 65535");

    // alpha[p] for every p in P, built along P's enumeration words with
    // alpha[prev*gen] = alpha[gen] then alpha[prev].
    std::vector<std::vector<int>> alpha(static_cast<std::size_t>(P.order()));
    {
        std::vector<int> idm(static_cast<std::size_t>(N.order()));
        for (int i = 0; i < N.order(); ++i) idm[static_cast<std::size_t>(i)] = i;
        alpha[0] = idm;
        std::vector<char> have(static_cast<std::size_t>(P.order()), 0);
        have[0] = 1;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int x = 0; x < P.order(); ++x) {
                if (have[static_cast<std::size_t>(x)]) continue;
                for (std::size_t gi = 0; gi < pgens.size(); ++gi) {
                    int prev = P.mul(x, P.inv(pgens[gi]));
                    if (!have[static_cast<std::size_t>(prev)]) continue;
                    auto& ap = alpha[static_cast<std::size_t>(prev)];
                    const auto& ag = action[gi];
                    std::vector<int> ax(static_cast<std::size_t>(N.order()));
                    for (int n = 0; n < N.order(); ++n)
                        ax[static_cast<std::size_t>(n)] = ap[static_cast<std::size_t>(ag[static_cast<std::size_t>(n)])];
                    alpha[static_cast<std::size_t>(x)] = std::move(ax);
                    have[static_cast<std::size_t>(x)] = 1;
                    progress = true;
                    break;
                }
            }
        }
        for (char h : have)
            internal_check(h, "automorphism extension did not reach all of P");
    }

    const int np = P.order();
    auto pair_index = [&](int n, int p) { return static_cast<Point>(n * np + p); };
    std::vector<Permutation> gens;
    for (int mg : N.generator_indices()) {
        Permutation perm = Permutation::identity(static_cast<std::size_t>(target));
        for (int n = 0; n < N.order(); ++n)
            for (int p = 0; p < np; ++p)
                perm.images[static_cast<std::size_t>(pair_index(n, p))] =
                    pair_index(N.mul(n, alpha[static_cast<std::size_t>(p)][static_cast<std::size_t>(mg)]), p);
        gens.push_back(std::move(perm));
    }
    for (int qg : P.generator_indices()) {
        Permutation perm = Permutation::identity(static_cast<std::size_t>(target));
        for (int n = 0; n < N.order(); ++n)
            for (int p = 0; p < np; ++p)
                perm.images[static_cast<std::size_t>(pair_index(n, p))] = pair_index(n, P.mul(p, qg));
        gens.push_back(std::move(perm));
    }
    GroupOptions geopt = opt;
    geopt.size_cap = static_cast<std::size_t>(target);
    FiniteGroup S;
    try {
        S = FiniteGroup::from_generators(std::move(gens), geopt);
    } catch (const size_limit_error&) {
        throw construction_error("semidirect product: action does not respect the relations of P");
    }
    internal_check(S.order() == target, "semidirect product closed below expected order");
    return S;
}

} // namespace acdlab
