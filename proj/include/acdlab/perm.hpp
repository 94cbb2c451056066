#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "acdlab/errors.hpp"

namespace acdlab {

using Point = std::uint16_t;

// Permutation of {0, ..., degree-1} stored as an image table.
// p.then(q) applies p first; groups here multiply left-to-right.
struct Permutation {
    std::vector<Point> images;

    Permutation() = default;
    explicit Permutation(std::vector<Point> img) : images(std::move(img)) {}

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.images.resize(degree);
        for (std::size_t i = 0; i < degree; ++i) p.images[i] = static_cast<Point>(i);
        return p;
    }

    std::size_t degree() const { return images.size(); }
    Point operator()(Point x) const { return images[x]; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images.size(); ++i)
            if (images[i] != i) return false;
        return true;
    }

    Permutation then(const Permutation& g) const {
        Permutation r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images[i] = g.images[images[i]];
        return r;
    }

    Permutation inverse() const {
        Permutation r;
        r.images.resize(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) r.images[images[i]] = static_cast<Point>(i);
        return r;
    }

    friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

inline bool is_valid_permutation(const std::vector<Point>& images) {
    std::vector<bool> seen(images.size(), false);
    for (Point v : images) {
        if (v >= images.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

// Validating constructor for externally supplied image tables.
inline Permutation make_permutation(std::vector<Point> images) {
    if (images.empty()) throw input_error("permutation of degree zero");
    if (!is_valid_permutation(images)) throw input_error("image list is not a bijection");
    return Permutation(std::move(images));
}

struct PermHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 0x9e3779b97f4a7c15ull;
        for (Point v : p.images) {
            h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

// "(0 1 2)(3 4)" with fixed points omitted; identity prints as "()".
inline std::string cycle_string(const Permutation& p) {
    std::ostringstream out;
    std::vector<bool> seen(p.degree(), false);
    bool any = false;
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.images[i] == i) continue;
        any = true;
        out << '(' << i;
        seen[i] = true;
        for (Point j = p.images[i]; j != i; j = p.images[j]) {
            seen[j] = true;
            out << ' ' << j;
        }
        out << ')';
    }
    if (!any) return "()";
    return out.str();
}

// Sorted cycle lengths >= 2, e.g. "2.2.3"; identity gives "1".
inline std::string cycle_type(const Permutation& p) {
    std::vector<int> lens;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.images[i] == i) continue;
        int len = 1;
        seen[i] = true;
        for (Point j = p.images[i]; j != i; j = p.images[j]) {
            seen[j] = true;
            ++len;
        }
        lens.push_back(len);
    }
    if (lens.empty()) return "1";
    std::sort(lens.begin(), lens.end());
    std::string s;
    for (std::size_t i = 0; i < lens.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(lens[i]);
    }
    return s;
}

// Parses cycle notation like "(0 1 2)(3 4)"; points are 0-based.
inline Permutation perm_from_cycles(std::size_t degree, const std::string& text) {
    Permutation p = Permutation::identity(degree);
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == ',')) ++i; };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw input_error("expected '(' in cycle notation");
        ++i;
        std::vector<Point> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j == i) throw input_error("expected point in cycle notation");
            unsigned long v = std::stoul(text.substr(i, j - i));
            if (v >= degree) throw input_error("cycle point out of range");
            cyc.push_back(static_cast<Point>(v));
            i = j;
            skip_ws();
        }
        if (i == text.size()) throw input_error("unterminated cycle");
        ++i;
        for (std::size_t k = 0; k < cyc.size(); ++k) {
            Point from = cyc[k];
            Point to = cyc[(k + 1) % cyc.size()];
            if (p.images[from] != from) throw input_error("point repeated across cycles");
            p.images[from] = to;
        }
        skip_ws();
    }
    if (!is_valid_permutation(p.images)) throw input_error("cycles do not form a permutation");
    return p;
}

} // namespace acdlab
