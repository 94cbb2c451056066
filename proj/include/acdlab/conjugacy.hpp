#pragma once

#include <algorithm>
#include <vector>

#include "acdlab/group.hpp"

namespace acdlab {

// Conjugacy classes in a fixed deterministic order: the identity class first,
// then ascending (element order, class size, least member index).
struct ConjugacyData {
    std::vector<int> class_reps;              // least member index of each class
    std::vector<int> class_sizes;
    std::vector<int> class_of;                // element index -> class index
    std::vector<int> inv_class;               // class of inverses
    std::vector<int> sq_class;                // class of squares
    std::vector<long long> centralizer_orders;
    std::vector<std::vector<int>> members;    // sorted element indices per class

    int count() const { return static_cast<int>(class_reps.size()); }
};

inline ConjugacyData conjugacy_classes(const FiniteGroup& G) {
    const int n = G.order();
    std::vector<int> raw_class(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> raw_members;

    std::vector<int> stack;
    for (int e = 0; e < n; ++e) {
        if (raw_class[static_cast<std::size_t>(e)] >= 0) continue;
        int cid = static_cast<int>(raw_members.size());
        raw_members.emplace_back();
        raw_class[static_cast<std::size_t>(e)] = cid;
        raw_members[static_cast<std::size_t>(cid)].push_back(e);
        stack.assign(1, e);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int g : G.generator_indices()) {
                int y = G.conj(x, g);
                if (raw_class[static_cast<std::size_t>(y)] < 0) {
                    raw_class[static_cast<std::size_t>(y)] = cid;
                    raw_members[static_cast<std::size_t>(cid)].push_back(y);
                    stack.push_back(y);
                }
            }
        }
    }

    struct Key {
        int elem_order, size, least, raw;
    };
    std::vector<Key> keys;
    for (std::size_t c = 0; c < raw_members.size(); ++c) {
        auto& m = raw_members[c];
        std::sort(m.begin(), m.end());
        keys.push_back({G.element_order(m[0]), static_cast<int>(m.size()), m[0], static_cast<int>(c)});
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b) {
        if (a.elem_order != b.elem_order) return a.elem_order < b.elem_order;
        if (a.size != b.size) return a.size < b.size;
        return a.least < b.least;
    });

    ConjugacyData D;
    const int r = static_cast<int>(keys.size());
    D.class_of.assign(static_cast<std::size_t>(n), -1);
    for (int c = 0; c < r; ++c) {
        auto& m = raw_members[static_cast<std::size_t>(keys[static_cast<std::size_t>(c)].raw)];
        D.members.push_back(m);
        D.class_reps.push_back(m[0]);
        D.class_sizes.push_back(static_cast<int>(m.size()));
        D.centralizer_orders.push_back(static_cast<long long>(n) / static_cast<long long>(m.size()));
        internal_check(static_cast<long long>(n) % static_cast<long long>(m.size()) == 0,
                       "class size does not divide order");
        for (int x : m) D.class_of[static_cast<std::size_t>(x)] = c;
    }
    internal_check(D.class_reps[0] == 0, "identity class is not first");

    for (int c = 0; c < r; ++c) {
        D.inv_class.push_back(D.class_of[static_cast<std::size_t>(G.inv(D.class_reps[static_cast<std::size_t>(c)]))]);
        D.sq_class.push_back(D.class_of[static_cast<std::size_t>(
            G.mul(D.class_reps[static_cast<std::size_t>(c)], D.class_reps[static_cast<std::size_t>(c)]))]);
    }
    for (int c = 0; c < r; ++c) {
        internal_check(D.inv_class[static_cast<std::size_t>(D.inv_class[static_cast<std::size_t>(c)])] == c,
                       "class inversion is not an involution");
        internal_check(D.class_sizes[static_cast<std::size_t>(D.inv_class[static_cast<std::size_t>(c)])] ==
                           D.class_sizes[static_cast<std::size_t>(c)],
                       "inverse class has different size");
    }
    return D;
}

} // namespace acdlab
