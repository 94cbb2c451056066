#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "acdlab/errors.hpp"
#include "acdlab/perm.hpp"

namespace acdlab {

struct GroupOptions {
    std::size_t size_cap = 20000;     // enumeration aborts beyond this many elements
    std::size_t mul_table_cap = 4096; // dense multiplication table only up to this order
};

// Finite permutation group, fully enumerated.
// Element 0 is the identity; the element list is the breadth-first closure
// of the generators (right multiplication, generators in given order), so
// ordering is deterministic for fixed input.
class FiniteGroup {
public:
    static FiniteGroup from_generators(std::vector<Permutation> gens, GroupOptions opt = {}) {
        if (gens.empty()) throw input_error("no generators given");
        std::size_t deg = gens[0].degree();
        for (const auto& g : gens) {
            if (g.degree() != deg) throw input_error("generators have mismatched degrees");
            if (!is_valid_permutation(g.images)) throw input_error("generator is not a bijection");
        }
        FiniteGroup G;
        G.opt_ = opt;
        G.degree_ = deg;
        G.elems_.push_back(Permutation::identity(deg));
        G.index_.emplace(G.elems_[0], 0);
        G.bfs_prev_.push_back(-1);
        G.bfs_gen_.push_back(-1);

        std::vector<int> gen_idx;
        std::vector<Permutation> distinct_gens;
        for (auto& g : gens) {
            if (g.is_identity()) continue;
            bool dup = false;
            for (auto& d : distinct_gens)
                if (d == g) { dup = true; break; }
            if (!dup) distinct_gens.push_back(g);
        }
        G.gen_perms_ = distinct_gens;
        G.gen_mul_.resize(distinct_gens.size());

        for (std::size_t at = 0; at < G.elems_.size(); ++at) {
            for (std::size_t gi = 0; gi < distinct_gens.size(); ++gi) {
                Permutation prod = G.elems_[at].then(distinct_gens[gi]);
                auto it = G.index_.find(prod);
                int pid;
                if (it == G.index_.end()) {
                    if (G.elems_.size() >= opt.size_cap)
                        throw size_limit_error("group enumeration exceeded cap of " +
                                               std::to_string(opt.size_cap) + " elements");
                    pid = static_cast<int>(G.elems_.size());
                    G.index_.emplace(prod, pid);
                    G.elems_.push_back(std::move(prod));
                    G.bfs_prev_.push_back(static_cast<int>(at));
                    G.bfs_gen_.push_back(static_cast<int>(gi));
                } else {
                    pid = it->second;
                }
                G.gen_mul_[gi].push_back(pid);
            }
        }
        for (const auto& g : distinct_gens) G.gens_.push_back(G.index_.at(g));
        if (G.gens_.empty()) G.gens_.push_back(0);
        G.finish();
        return G;
    }

    int order() const { return static_cast<int>(elems_.size()); }
    std::size_t degree() const { return degree_; }
    long long exponent() const { return exponent_; }
    const Permutation& element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& generator_indices() const { return gens_; }
    const std::vector<Permutation>& generator_perms() const { return gen_perms_; }
    bool has_mul_table() const { return !mul_table_.empty(); }

    int index_of(const Permutation& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }

    int mul(int i, int j) const {
        if (!mul_table_.empty())
            return mul_table_[static_cast<std::size_t>(i) * elems_.size() + static_cast<std::size_t>(j)];
        if (j == 0) return i;
        // Follow j's generator word so each step is a column lookup.
        int acc = i;
        thread_local std::vector<int> word;
        word.clear();
        for (int w = j; w != 0; w = bfs_prev_[static_cast<std::size_t>(w)])
            word.push_back(bfs_gen_[static_cast<std::size_t>(w)]);
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = gen_mul_[static_cast<std::size_t>(*it)][static_cast<std::size_t>(acc)];
        return acc;
    }

    int inv(int i) const { return inv_[static_cast<std::size_t>(i)]; }
    int element_order(int i) const { return elem_order_[static_cast<std::size_t>(i)]; }

    int power(int i, long long k) const {
        int o = element_order(i);
        k %= o;
        if (k < 0) k += o;
        int acc = 0;
        for (long long s = 0; s < k; ++s) acc = mul(acc, i);
        return acc;
    }

    // g^-1 * x * g
    int conj(int x, int g) const { return mul(mul(inv(g), x), g); }
    // x^-1 * y^-1 * x * y
    int commutator(int x, int y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

    bool is_abelian() const {
        for (int a : gens_)
            for (int b : gens_)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    const GroupOptions& options() const { return opt_; }

private:
    void finish() {
        const int n = order();
        if (static_cast<std::size_t>(n) <= opt_.mul_table_cap) {
            mul_table_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
            for (int i = 0; i < n; ++i) {
                mul_table_[static_cast<std::size_t>(i) * n + 0] = i;
                // Fill row i following each j's discovery word: j = prev * gen.
                for (int j = 1; j < n; ++j) {
                    int prev = bfs_prev_[static_cast<std::size_t>(j)];
                    int gi = bfs_gen_[static_cast<std::size_t>(j)];
                    int ip = mul_table_[static_cast<std::size_t>(i) * n + prev];
                    mul_table_[static_cast<std::size_t>(i) * n + j] =
                        gen_mul_[static_cast<std::size_t>(gi)][static_cast<std::size_t>(ip)];
                }
            }
        }
        inv_.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            int j = index_of(elems_[static_cast<std::size_t>(i)].inverse());
            internal_check(j >= 0, "inverse missing from closure");
            inv_[static_cast<std::size_t>(i)] = j;
        }
        elem_order_.assign(static_cast<std::size_t>(n), 1);
        exponent_ = 1;
        for (int i = 1; i < n; ++i) {
            int o = 1, x = i;
            while (x != 0) {
                x = mul(x, i);
                ++o;
            }
            elem_order_[static_cast<std::size_t>(i)] = o;
            exponent_ = std::lcm(exponent_, static_cast<long long>(o));
        }
        internal_check(n % exponent_ == 0, "exponent does not divide order");
    }

    GroupOptions opt_;
    std::size_t degree_ = 0;
    std::vector<Permutation> elems_;
    std::unordered_map<Permutation, int, PermHash> index_;
    std::vector<Permutation> gen_perms_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> gen_mul_; // per generator, right-multiplication column
    std::vector<int> bfs_prev_, bfs_gen_;
    std::vector<int> mul_table_;
    std::vector<int> inv_;
    std::vector<int> elem_order_;
    long long exponent_ = 1;
};

} // namespace acdlab
