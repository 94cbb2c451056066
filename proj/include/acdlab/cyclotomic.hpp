#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acdlab/errors.hpp"
#include "acdlab/modp.hpp"

namespace acdlab {

// Character value at a class: the multiset of eigenvalues of a
// representing matrix, stored as sparse (exponent, multiplicity) pairs
// over the e-th roots of unity. Multiplicities are nonnegative and sum
// to the degree, which makes the representation canonical.
struct CycValue {
    std::vector<std::pair<int, long long>> terms; // sorted by exponent, multiplicity > 0

    long long total_multiplicity() const {
        long long s = 0;
        for (auto& [t, m] : terms) s += m;
        return s;
    }

    long long multiplicity_at(int t) const {
        for (auto& [u, m] : terms)
            if (u == t) return m;
        return 0;
    }

    // Complex conjugation maps exponent t to e - t.
    CycValue conjugate(long long e) const {
        CycValue c;
        c.terms = terms;
        for (auto& [t, m] : c.terms) t = static_cast<int>((e - t) % e);
        std::sort(c.terms.begin(), c.terms.end());
        return c;
    }

    bool operator==(const CycValue& o) const { return terms == o.terms; }
    bool operator<(const CycValue& o) const { return terms < o.terms; }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i) s += "+";
            s += std::to_string(terms[i].second);
            if (terms[i].first != 0) s += "*z^" + std::to_string(terms[i].first);
        }
        return s;
    }
};

// Cyclotomic polynomials by iterated exact division of x^e - 1.
inline std::vector<long long> cyclotomic_polynomial(long long e) {
    std::vector<std::vector<long long>> phi(static_cast<std::size_t>(e) + 1);
    for (long long d = 1; d <= e; ++d) {
        if (e % d != 0) continue;
        std::vector<long long> f(static_cast<std::size_t>(d) + 1, 0);
        f[0] = -1;
        f[static_cast<std::size_t>(d)] = 1; // x^d - 1
        for (long long dd = 1; dd < d; ++dd) {
            if (d % dd != 0) continue;
            const auto& g = phi[static_cast<std::size_t>(dd)];
            // f /= g, exact division of integer polynomials, g monic.
            std::vector<long long> q(f.size() - g.size() + 1, 0);
            std::vector<long long> r = f;
            for (std::size_t i = q.size(); i-- > 0;) {
                long long c = r[i + g.size() - 1];
                q[i] = c;
                if (c == 0) continue;
                for (std::size_t j = 0; j < g.size(); ++j) r[i + j] -= c * g[j];
            }
            for (long long c : r) internal_check(c == 0, "cyclotomic division not exact");
            f = std::move(q);
        }
        phi[static_cast<std::size_t>(d)] = std::move(f);
    }
    return phi[static_cast<std::size_t>(e)];
}

// Exact arithmetic in Z[zeta_e] via reduction mod the e-th cyclotomic
// polynomial. Dense coefficient vectors are indexed by exponent < e.
class CycReducer {
public:
    explicit CycReducer(long long e) : e_(e), phi_(cyclotomic_polynomial(e)) {}

    long long modulus_order() const { return e_; }
    std::size_t basis_degree() const { return phi_.size() - 1; }

    // Canonical coordinates in the power basis 1, z, ..., z^(phi(e)-1).
    std::vector<long long> reduce(const std::vector<long long>& dense) const {
        std::vector<__int128> buf(dense.begin(), dense.end());
        if (buf.size() < phi_.size()) buf.resize(phi_.size(), 0);
        const std::size_t dphi = phi_.size() - 1;
        for (std::size_t i = buf.size(); i-- > dphi;) {
            __int128 c = buf[i];
            if (c == 0) continue;
            buf[i] = 0;
            for (std::size_t j = 0; j < dphi; ++j) buf[i - dphi + j] -= c * phi_[j];
        }
        std::vector<long long> out(dphi);
        for (std::size_t j = 0; j < dphi; ++j) {
            __int128 v = buf[j];
            internal_check(v <= INT64_MAX && v >= INT64_MIN, "cyclotomic reduction overflow");
            out[j] = static_cast<long long>(v);
        }
        return out;
    }

    // The rational integer this value equals, if it is one.
    std::optional<long long> as_integer(const std::vector<long long>& dense) const {
        auto red = reduce(dense);
        for (std::size_t j = 1; j < red.size(); ++j)
            if (red[j] != 0) return std::nullopt;
        return red[0];
    }

private:
    long long e_;
    std::vector<long long> phi_;
};

// dense[t] += w * (multiplicities of v shifted by exponent scale).
inline void accumulate(std::vector<long long>& dense, const CycValue& v, long long w,
                       long long scale, long long e) {
    for (auto& [t, m] : v.terms) {
        long long idx = (static_cast<long long>(t) * scale) % e;
        dense[static_cast<std::size_t>(idx)] += w * m;
    }
}

} // namespace acdlab
