#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "acdlab/conjugacy.hpp"
#include "acdlab/cyclotomic.hpp"
#include "acdlab/group.hpp"
#include "acdlab/modp.hpp"

namespace acdlab {

// Working prime for the modular eigenvalue method: least p = 1 (mod e)
// with p > 2*floor(sqrt(|G|)), plus a root of unity of exact order e.
// Such p never divides |G|: an element of order p would force p | e,
// impossible for p = ke+1.
struct DixonPrime {
    long long p = 0;
    long long e = 0;
    long long zeta = 0;
};

inline DixonPrime choose_dixon_prime(long long order, long long exponent) {
    if (order < 1 || exponent < 1) throw input_error("choose_dixon_prime: bad order or exponent");
    long long bound = 2 * isqrt_floor(order);
    DixonPrime d;
    d.e = exponent;
    for (long long p = exponent + 1;; p += exponent) {
        if (p > (1LL << 31)) throw size_limit_error("no working prime below 2^31");
        if (p <= bound || !is_prime(p)) continue;
        d.p = p;
        break;
    }
    internal_check(order % d.p != 0, "working prime divides group order");
    d.zeta = static_cast<long long>(primitive_root_of_unity(static_cast<u64>(d.p), d.e));
    return d;
}

// M[i][k] = #{x in K_j : x^{-1} z_k in K_i} for fixed representatives z_k.
// The central character w of an irreducible satisfies M w = w_j w.
inline std::vector<std::vector<long long>> class_matrix(const FiniteGroup& G,
                                                        const ConjugacyData& C, int j) {
    const int r = C.count();
    if (j < 0 || j >= r) throw input_error("class_matrix: class index out of range");
    std::vector<std::vector<long long>> M(static_cast<std::size_t>(r),
                                          std::vector<long long>(static_cast<std::size_t>(r), 0));
    for (int k = 0; k < r; ++k) {
        int zk = C.class_reps[static_cast<std::size_t>(k)];
        for (int x : C.members[static_cast<std::size_t>(j)]) {
            int y = G.mul(G.inv(x), zk);
            M[static_cast<std::size_t>(C.class_of[static_cast<std::size_t>(y)])][static_cast<std::size_t>(k)]++;
        }
    }
    for (int k = 0; k < r; ++k) {
        long long col = 0;
        for (int i = 0; i < r; ++i) col += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
        internal_check(col == C.class_sizes[static_cast<std::size_t>(j)],
                       "class matrix column sum mismatch");
    }
    for (int i = 0; i < r; ++i) {
        long long w = 0;
        for (int k = 0; k < r; ++k)
            w += M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                 C.class_sizes[static_cast<std::size_t>(k)];
        internal_check(w == static_cast<long long>(C.class_sizes[static_cast<std::size_t>(j)]) *
                                C.class_sizes[static_cast<std::size_t>(i)],
                       "class matrix weighted row sum mismatch");
    }
    return M;
}

namespace fp {

// Dense linear algebra and polynomial arithmetic over F_p, p < 2^31.
using Vec = std::vector<u64>;
using Mat = std::vector<Vec>;
using Poly = std::vector<u64>; // ascending coefficients, no trailing zeros

inline void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return c;
}

inline Poly poly_mod(Poly a, const Poly& m, u64 p) {
    internal_check(!m.empty(), "poly_mod by zero");
    u64 lead_inv = invmod(m.back(), p);
    while (a.size() >= m.size()) {
        u64 c = mulmod(a.back(), lead_inv, p);
        if (c != 0) {
            std::size_t off = a.size() - m.size();
            for (std::size_t j = 0; j < m.size(); ++j) {
                u64 sub = mulmod(c, m[j], p);
                a[off + j] = (a[off + j] + p - sub) % p;
            }
        }
        a.pop_back();
        poly_trim(a);
        if (a.size() < m.size()) break;
    }
    poly_trim(a);
    return a;
}

inline Poly poly_gcd(Poly a, Poly b, u64 p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (u64& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

inline Poly poly_powmod_x(u64 exp, const Poly& m, u64 p) {
    // x^exp mod m
    Poly result{1};
    Poly base{0, 1};
    base = poly_mod(base, m, p);
    while (exp) {
        if (exp & 1) result = poly_mod(poly_mul(result, base, p), m, p);
        base = poly_mod(poly_mul(base, base, p), m, p);
        exp >>= 1;
    }
    return result;
}

// Characteristic polynomial via Hessenberg reduction; deterministic pivots.
inline Poly charpoly(Mat H, u64 p) {
    const std::size_t n = H.size();
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = 0;
        for (std::size_t i = j + 1; i < n; ++i)
            if (H[i][j] != 0) { piv = i; break; }
        if (piv == 0) continue;
        if (piv != j + 1) {
            std::swap(H[piv], H[j + 1]);
            for (std::size_t i = 0; i < n; ++i) std::swap(H[i][piv], H[i][j + 1]);
        }
        u64 pinv = invmod(H[j + 1][j], p);
        for (std::size_t i = j + 2; i < n; ++i) {
            if (H[i][j] == 0) continue;
            u64 f = mulmod(H[i][j], pinv, p);
            for (std::size_t k = j; k < n; ++k) {
                u64 sub = mulmod(f, H[j + 1][k], p);
                H[i][k] = (H[i][k] + p - sub) % p;
            }
            for (std::size_t k = 0; k < n; ++k)
                H[k][j + 1] = (H[k][j + 1] + mulmod(f, H[k][i], p)) % p;
        }
    }
    // det(xI - H) for upper Hessenberg H by leading principal minors.
    std::vector<Poly> minors(n + 1);
    minors[0] = {1};
    for (std::size_t m = 1; m <= n; ++m) {
        Poly f = poly_mul(minors[m - 1], Poly{(p - H[m - 1][m - 1]) % p, 1}, p);
        u64 run = 1;
        for (std::size_t i = 1; i < m; ++i) {
            run = mulmod(run, H[m - i][m - i - 1], p);
            if (run == 0) break;
            u64 coef = mulmod(run, H[m - 1 - i][m - 1], p);
            if (coef == 0) continue;
            const Poly& q = minors[m - 1 - i];
            if (f.size() < q.size()) f.resize(q.size(), 0);
            for (std::size_t t = 0; t < q.size(); ++t)
                f[t] = (f[t] + p - mulmod(coef, q[t], p)) % p;
        }
        poly_trim(f);
        minors[m] = std::move(f);
    }
    return minors[n];
}

inline void split_roots(const Poly& h, u64 p, std::vector<u64>& out) {
    if (h.size() == 2) {
        // x + c  ->  root -c
        out.push_back(mulmod((p - h[0]) % p, invmod(h[1], p), p));
        return;
    }
    internal_check(h.size() > 2, "split_roots on constant polynomial");
    for (u64 shift = 0;; ++shift) {
        internal_check(shift < p, "root splitting exhausted shifts");
        // gcd(h, (x+shift)^((p-1)/2) - 1) separates roots by residue class.
        Poly base{shift, 1};
        Poly w{1};
        u64 exp = (p - 1) / 2;
        Poly b = poly_mod(base, h, p);
        while (exp) {
            if (exp & 1) w = poly_mod(poly_mul(w, b, p), h, p);
            b = poly_mod(poly_mul(b, b, p), h, p);
            exp >>= 1;
        }
        if (w.empty()) w = {0};
        w[0] = (w[0] + p - 1) % p;
        poly_trim(w);
        Poly g = poly_gcd(h, w, p);
        if (g.size() > 1 && g.size() < h.size()) {
            // h = g * (h/g); recurse on both factors.
            Poly rest = h;
            // exact division rest / g
            Poly q(rest.size() - g.size() + 1, 0);
            u64 ginv = invmod(g.back(), p);
            for (std::size_t i = q.size(); i-- > 0;) {
                u64 c = mulmod(rest[i + g.size() - 1], ginv, p);
                q[i] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < g.size(); ++j) {
                    u64 sub = mulmod(c, g[j], p);
                    rest[i + j] = (rest[i + j] + p - sub) % p;
                }
            }
            split_roots(g, p, out);
            poly_trim(q);
            split_roots(q, p, out);
            return;
        }
    }
}

// Distinct roots of f, all known to lie in F_p; ascending order.
inline std::vector<u64> distinct_roots(const Poly& f, u64 p) {
    internal_check(f.size() >= 2, "distinct_roots of constant");
    Poly xq = poly_powmod_x(p, f, p); // x^p mod f
    if (xq.size() < 2) xq.resize(2, 0);
    xq[1] = (xq[1] + p - 1) % p; // x^p - x
    poly_trim(xq);
    Poly h = poly_gcd(f, xq, p); // product of distinct linear factors
    internal_check(h.size() >= 2, "no roots in ground field");
    std::vector<u64> out;
    split_roots(h, p, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Reduced row echelon form; returns rank. Deterministic.
inline int rref(Mat& rows, u64 p) {
    const std::size_t nrows = rows.size();
    if (nrows == 0) return 0;
    const std::size_t ncols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t piv = nrows;
        for (std::size_t i = rank; i < nrows; ++i)
            if (rows[i][col] != 0) { piv = i; break; }
        if (piv == nrows) continue;
        std::swap(rows[rank], rows[piv]);
        u64 inv = invmod(rows[rank][col], p);
        for (std::size_t j = col; j < ncols; ++j) rows[rank][j] = mulmod(rows[rank][j], inv, p);
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == rank || rows[i][col] == 0) continue;
            u64 f = rows[i][col];
            for (std::size_t j = col; j < ncols; ++j) {
                u64 sub = mulmod(f, rows[rank][j], p);
                rows[i][j] = (rows[i][j] + p - sub) % p;
            }
        }
        ++rank;
    }
    rows.resize(rank);
    return static_cast<int>(rank);
}

inline std::vector<std::size_t> pivot_columns(const Mat& rref_rows) {
    std::vector<std::size_t> piv;
    for (const auto& row : rref_rows) {
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0) ++c;
        piv.push_back(c);
    }
    return piv;
}

// Coordinates of v in the span of rref_rows; v must lie in the span.
inline Vec coords_in(const Mat& rref_rows, const std::vector<std::size_t>& pivots, Vec v, u64 p) {
    Vec coords(rref_rows.size(), 0);
    for (std::size_t i = 0; i < rref_rows.size(); ++i) {
        u64 c = v[pivots[i]];
        coords[i] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < v.size(); ++j) {
            u64 sub = mulmod(c, rref_rows[i][j], p);
            v[j] = (v[j] + p - sub) % p;
        }
    }
    for (u64 x : v) internal_check(x == 0, "vector escaped its invariant subspace");
    return coords;
}

// Null space basis of a square matrix, rows in RREF. Deterministic.
inline Mat kernel(Mat A, u64 p) {
    const std::size_t n = A.size();
    rref(A, p);
    auto pivots = pivot_columns(A);
    std::vector<char> is_pivot(n, 0);
    for (std::size_t c : pivots) is_pivot[c] = 1;
    Mat basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(n, 0);
        v[free_col] = 1;
        for (std::size_t i = 0; i < A.size(); ++i) {
            // pivot variable = -sum of free contributions
            u64 val = A[i][free_col];
            if (val) v[pivots[i]] = (p - val) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace fp

struct CharacterRecord {
    long long degree = 0;
    std::vector<CycValue> values;   // per class, identity class first
    int fs_indicator = 0;           // -1, 0, +1
    bool is_real = false;
    bool is_strongly_real = false;
    std::vector<int> kernel_classes;
    std::vector<u64> mod_p_values;  // eigen data the values lift from
};

struct SelfCheckReport {
    bool ok = true;
    std::vector<std::string> failures;
    void fail(const std::string& msg) {
        ok = false;
        failures.push_back(msg);
    }
};

struct CharacterTable {
    const FiniteGroup* group = nullptr;
    long long order = 0;
    long long exponent = 0;
    DixonPrime prime;
    ConjugacyData classes;
    std::vector<CharacterRecord> chars;

    int class_count() const { return classes.count(); }
};

namespace detail {

// Lexicographic comparison of the dense multiplicity vectors behind two
// sparse values.
inline int compare_cyc(const CycValue& a, const CycValue& b) {
    std::size_t i = 0, j = 0;
    while (i < a.terms.size() || j < b.terms.size()) {
        int ta = i < a.terms.size() ? a.terms[i].first : INT32_MAX;
        int tb = j < b.terms.size() ? b.terms[j].first : INT32_MAX;
        if (ta < tb) return 1;  // a has positive entry where b has zero
        if (tb < ta) return -1;
        if (a.terms[i].second != b.terms[j].second)
            return a.terms[i].second < b.terms[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    return 0;
}

inline bool record_less(const CharacterRecord& a, const CharacterRecord& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    for (std::size_t k = 0; k < a.values.size(); ++k) {
        int c = compare_cyc(a.values[k], b.values[k]);
        if (c != 0) return c < 0;
    }
    return false;
}

} // namespace detail

// Exact character table by simultaneous eigenspace splitting of the class
// matrices over F_p, degree recovery from the orthogonality relation, and
// cyclotomic lifting of the eigen data. Characters are ordered by degree,
// then lexicographically by value.
inline CharacterTable character_table(const FiniteGroup& G) {
    CharacterTable T;
    T.group = &G;
    T.order = G.order();
    T.exponent = G.exponent();
    T.classes = conjugacy_classes(G);
    T.prime = choose_dixon_prime(T.order, T.exponent);

    const int r = T.classes.count();
    const u64 p = static_cast<u64>(T.prime.p);
    const long long e = T.prime.e;

    // Powers of zeta.
    std::vector<u64> zpow(static_cast<std::size_t>(e));
    zpow[0] = 1;
    for (long long t = 1; t < e; ++t)
        zpow[static_cast<std::size_t>(t)] = mulmod(zpow[static_cast<std::size_t>(t - 1)],
                                                   static_cast<u64>(T.prime.zeta), p);

    // Split the column space into common eigenspaces, ascending class index.
    std::vector<fp::Mat> spaces;
    {
        fp::Mat full(static_cast<std::size_t>(r), fp::Vec(static_cast<std::size_t>(r), 0));
        for (int i = 0; i < r; ++i) full[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
        spaces.push_back(std::move(full));
    }
    auto all_split = [&] {
        for (const auto& S : spaces)
            if (S.size() > 1) return false;
        return true;
    };
    for (int j = 1; j < r && !all_split(); ++j) {
        auto Mj = class_matrix(G, T.classes, j);
        fp::Mat M(static_cast<std::size_t>(r), fp::Vec(static_cast<std::size_t>(r), 0));
        for (int i = 0; i < r; ++i)
            for (int k = 0; k < r; ++k)
                M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                    static_cast<u64>(Mj[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] %
                                     static_cast<long long>(p));
        std::vector<fp::Mat> next;
        for (auto& S : spaces) {
            const std::size_t d = S.size();
            if (d == 1) {
                next.push_back(std::move(S));
                continue;
            }
            auto pivots = fp::pivot_columns(S);
            // Restriction of M to the subspace in its basis coordinates.
            fp::Mat A(d, fp::Vec(d, 0));
            for (std::size_t t = 0; t < d; ++t) {
                fp::Vec img(static_cast<std::size_t>(r), 0);
                for (int i = 0; i < r; ++i) {
                    u64 acc = 0;
                    for (int k = 0; k < r; ++k)
                        acc = (acc + mulmod(M[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)],
                                            S[t][static_cast<std::size_t>(k)], p)) % p;
                    img[static_cast<std::size_t>(i)] = acc;
                }
                fp::Vec col = fp::coords_in(S, pivots, std::move(img), p);
                for (std::size_t s = 0; s < d; ++s) A[s][t] = col[s];
            }
            fp::Poly cp = fp::charpoly(A, p);
            std::vector<u64> roots = fp::distinct_roots(cp, p);
            if (roots.size() == 1) {
                next.push_back(std::move(S));
                continue;
            }
            std::size_t dims = 0;
            for (u64 lambda : roots) {
                fp::Mat shifted = A;
                for (std::size_t i = 0; i < d; ++i)
                    shifted[i][i] = (shifted[i][i] + p - lambda) % p;
                fp::Mat ker = fp::kernel(shifted, p);
                internal_check(!ker.empty(), "eigenvalue without eigenvector");
                fp::Mat sub;
                for (const auto& c : ker) {
                    fp::Vec v(static_cast<std::size_t>(r), 0);
                    for (std::size_t s = 0; s < d; ++s) {
                        if (c[s] == 0) continue;
                        for (int k = 0; k < r; ++k)
                            v[static_cast<std::size_t>(k)] =
                                (v[static_cast<std::size_t>(k)] +
                                 mulmod(c[s], S[s][static_cast<std::size_t>(k)], p)) % p;
                    }
                    sub.push_back(std::move(v));
                }
                fp::rref(sub, p);
                dims += sub.size();
                next.push_back(std::move(sub));
            }
            internal_check(dims == d, "eigenspace dimensions do not add up");
        }
        spaces = std::move(next);
    }
    internal_check(all_split(), "class matrices failed to separate all characters");
    internal_check(spaces.size() == static_cast<std::size_t>(r), "character count mismatch");

    long long root_bound = isqrt_floor(T.order);
    std::vector<u64> size_inv(static_cast<std::size_t>(r));
    for (int k = 0; k < r; ++k)
        size_inv[static_cast<std::size_t>(k)] =
            invmod(static_cast<u64>(T.classes.class_sizes[static_cast<std::size_t>(k)]) % p, p);

    for (auto& S : spaces) {
        fp::Vec w = S[0];
        internal_check(w[0] != 0, "central character vanishes at the identity");
        u64 w0inv = invmod(w[0], p);
        for (auto& x : w) x = mulmod(x, w0inv, p);

        // 1 = <chi, chi> recovers the degree.
        u64 s = 0;
        for (int k = 0; k < r; ++k) {
            u64 term = mulmod(w[static_cast<std::size_t>(k)],
                              w[static_cast<std::size_t>(T.classes.inv_class[static_cast<std::size_t>(k)])], p);
            s = (s + mulmod(term, size_inv[static_cast<std::size_t>(k)], p)) % p;
        }
        internal_check(s != 0, "degree recovery hit a zero norm");
        u64 d2 = mulmod(static_cast<u64>(T.order % static_cast<long long>(p)), invmod(s, p), p);
        u64 droot = sqrtmod(d2, p);
        u64 d = std::min(droot, p - droot);
        internal_check(d >= 1 && static_cast<long long>(d) <= root_bound,
                       "recovered degree out of range");
        internal_check(mulmod(d, d, p) == d2, "degree square mismatch");

        CharacterRecord rec;
        rec.degree = static_cast<long long>(d);
        internal_check(T.order % rec.degree == 0, "degree does not divide group order");
        rec.mod_p_values.resize(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k)
            rec.mod_p_values[static_cast<std::size_t>(k)] =
                mulmod(mulmod(d, w[static_cast<std::size_t>(k)], p), size_inv[static_cast<std::size_t>(k)], p);
        internal_check(rec.mod_p_values[0] == d, "identity value mismatch");

        // Lift each value: multiplicities of individual eigenvalues are
        // discrete Fourier sums over the cyclic group the element generates.
        rec.values.resize(static_cast<std::size_t>(r));
        for (int k = 0; k < r; ++k) {
            int rep = T.classes.class_reps[static_cast<std::size_t>(k)];
            long long o = G.element_order(rep);
            internal_check(e % o == 0, "element order does not divide exponent");
            long long step = e / o;
            u64 oinv = invmod(static_cast<u64>(o) % p, p);
            std::vector<int> pow_class(static_cast<std::size_t>(o));
            int x = 0;
            for (long long a = 0; a < o; ++a) {
                pow_class[static_cast<std::size_t>(a)] = T.classes.class_of[static_cast<std::size_t>(x)];
                x = G.mul(x, rep);
            }
            CycValue val;
            long long total = 0;
            for (long long u = 0; u < o; ++u) {
                u64 acc = 0;
                for (long long a = 0; a < o; ++a) {
                    long long expo = (u * a) % o * step % e;
                    u64 zc = expo == 0 ? 1 : zpow[static_cast<std::size_t>(e - expo)];
                    acc = (acc + mulmod(rec.mod_p_values[static_cast<std::size_t>(
                                            pow_class[static_cast<std::size_t>(a)])],
                                        zc, p)) % p;
                }
                u64 m = mulmod(acc, oinv, p);
                internal_check(m <= d, "lifted multiplicity exceeds degree");
                if (m != 0) {
                    val.terms.emplace_back(static_cast<int>(u * step), static_cast<long long>(m));
                    total += static_cast<long long>(m);
                }
            }
            internal_check(total == rec.degree, "multiplicities do not sum to the degree");
            // Round trip back to the eigen data.
            u64 back = 0;
            for (auto& [t, m] : val.terms)
                back = (back + mulmod(static_cast<u64>(m), zpow[static_cast<std::size_t>(t)], p)) % p;
            internal_check(back == rec.mod_p_values[static_cast<std::size_t>(k)],
                           "lifted value does not reduce back");
            rec.values[static_cast<std::size_t>(k)] = std::move(val);
        }
        T.chars.push_back(std::move(rec));
    }

    std::sort(T.chars.begin(), T.chars.end(), detail::record_less);

    // Indicators, realness, kernels.
    CycReducer red(e);
    for (auto& rec : T.chars) {
        bool real_conj = true;
        for (int k = 0; k < r; ++k)
            if (!(rec.values[static_cast<std::size_t>(k)].conjugate(e) ==
                  rec.values[static_cast<std::size_t>(k)])) {
                real_conj = false;
                break;
            }
        bool real_inv = true;
        for (int k = 0; k < r; ++k)
            if (!(rec.values[static_cast<std::size_t>(T.classes.inv_class[static_cast<std::size_t>(k)])] ==
                  rec.values[static_cast<std::size_t>(k)])) {
                real_inv = false;
                break;
            }
        internal_check(real_conj == real_inv, "realness criteria disagree");
        rec.is_real = real_conj;

        std::vector<long long> dense(static_cast<std::size_t>(e), 0);
        for (int k = 0; k < r; ++k)
            accumulate(dense, rec.values[static_cast<std::size_t>(T.classes.sq_class[static_cast<std::size_t>(k)])],
                       T.classes.class_sizes[static_cast<std::size_t>(k)], 1, e);
        auto nu = red.as_integer(dense);
        internal_check(nu.has_value(), "indicator sum is not rational");
        internal_check(*nu == 0 || *nu == T.order || *nu == -T.order,
                       "indicator sum is not -1, 0, or 1 times the order");
        rec.fs_indicator = *nu == 0 ? 0 : (*nu > 0 ? 1 : -1);
        internal_check((rec.fs_indicator != 0) == rec.is_real, "indicator contradicts realness");
        rec.is_strongly_real = rec.fs_indicator == 1;

        for (int k = 0; k < r; ++k) {
            const CycValue& v = rec.values[static_cast<std::size_t>(k)];
            if (v.terms.size() == 1 && v.terms[0].first == 0 && v.terms[0].second == rec.degree)
                rec.kernel_classes.push_back(k);
        }
        internal_check(!rec.kernel_classes.empty() && rec.kernel_classes[0] == 0,
                       "identity class missing from kernel");
    }

    internal_check(static_cast<int>(T.chars.size()) == r, "character count differs from class count");
    return T;
}

inline int frobenius_schur_indicator(const CharacterTable& T, int chi_index) {
    if (chi_index < 0 || chi_index >= static_cast<int>(T.chars.size()))
        throw input_error("character index out of range");
    return T.chars[static_cast<std::size_t>(chi_index)].fs_indicator;
}

// |G| * <chi_a, chi_b>, exact; not rational only for inconsistent data,
// reported as the sentinel INT64_MIN so the self check can flag it.
inline long long inner_product_times_order(const CharacterTable& T, const CharacterRecord& a,
                                           const CharacterRecord& b) {
    const long long e = T.exponent;
    std::vector<long long> dense(static_cast<std::size_t>(e), 0);
    const int r = T.class_count();
    for (int k = 0; k < r; ++k) {
        const CycValue& va = a.values[static_cast<std::size_t>(k)];
        const CycValue& vb = b.values[static_cast<std::size_t>(k)];
        long long w = T.classes.class_sizes[static_cast<std::size_t>(k)];
        for (auto& [t1, m1] : va.terms)
            for (auto& [t2, m2] : vb.terms) {
                long long idx = (t1 - t2 + e) % e;
                dense[static_cast<std::size_t>(idx)] += w * m1 * m2;
            }
    }
    CycReducer red(e);
    auto v = red.as_integer(dense);
    if (!v.has_value()) return INT64_MIN;
    return *v;
}

// Battery of exact consistency checks on a computed table.
inline SelfCheckReport table_self_check(const CharacterTable& T) {
    SelfCheckReport rep;
    const int r = T.class_count();

    long long sumsq = 0;
    for (auto& c : T.chars) sumsq += c.degree * c.degree;
    if (sumsq != T.order)
        rep.fail("degree squares sum to " + std::to_string(sumsq) + ", expected " +
                 std::to_string(T.order));

    for (auto& c : T.chars) {
        if (T.order % c.degree != 0)
            rep.fail("degree " + std::to_string(c.degree) + " does not divide the group order");
        const CycValue& v0 = c.values[0];
        if (!(v0.terms.size() == 1 && v0.terms[0].first == 0 && v0.terms[0].second == c.degree))
            rep.fail("identity value of a degree-" + std::to_string(c.degree) +
                     " character is not the degree");
    }

    // Column orthogonality for the identity column.
    {
        CycReducer red(T.exponent);
        for (int k = 1; k < r; ++k) {
            std::vector<long long> dense(static_cast<std::size_t>(T.exponent), 0);
            for (auto& c : T.chars) accumulate(dense, c.values[static_cast<std::size_t>(k)], c.degree, 1, T.exponent);
            auto v = red.as_integer(dense);
            if (!v.has_value() || *v != 0)
                rep.fail("identity column orthogonality fails at class " + std::to_string(k));
        }
    }

    for (std::size_t a = 0; a < T.chars.size(); ++a)
        for (std::size_t b = a; b < T.chars.size(); ++b) {
            long long ip = inner_product_times_order(T, T.chars[a], T.chars[b]);
            long long expect = a == b ? T.order : 0;
            if (ip != expect)
                rep.fail("row orthogonality fails for characters " + std::to_string(a) + "," +
                         std::to_string(b) + ": got " + std::to_string(ip) + " (times order)");
        }

    // Indicator mass equals the number of solutions of g^2 = 1.
    long long solutions = 0;
    for (int k = 0; k < r; ++k)
        if (T.classes.sq_class[static_cast<std::size_t>(k)] == 0)
            solutions += T.classes.class_sizes[static_cast<std::size_t>(k)];
    long long mass = 0;
    for (auto& c : T.chars) mass += static_cast<long long>(c.fs_indicator) * c.degree;
    if (mass != solutions)
        rep.fail("indicator mass " + std::to_string(mass) + " differs from involution count " +
                 std::to_string(solutions));

    // Lifted values reduce to the eigen data mod p.
    {
        const u64 p = static_cast<u64>(T.prime.p);
        std::vector<u64> zpow(static_cast<std::size_t>(T.exponent));
        zpow[0] = 1;
        for (long long t = 1; t < T.exponent; ++t)
            zpow[static_cast<std::size_t>(t)] =
                mulmod(zpow[static_cast<std::size_t>(t - 1)], static_cast<u64>(T.prime.zeta), p);
        for (std::size_t ci = 0; ci < T.chars.size(); ++ci) {
            const auto& c = T.chars[ci];
            for (int k = 0; k < r; ++k) {
                u64 back = 0;
                for (auto& [t, m] : c.values[static_cast<std::size_t>(k)].terms)
                    back = (back + mulmod(static_cast<u64>(m), zpow[static_cast<std::size_t>(t)], p)) % p;
                if (back != c.mod_p_values[static_cast<std::size_t>(k)])
                    rep.fail("character " + std::to_string(ci) + " does not reduce to its eigen data at class " +
                             std::to_string(k));
            }
        }
    }

    return rep;
}

} // namespace acdlab
