#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "acdlab/construct.hpp"
#include "acdlab/group.hpp"
#include "acdlab/modp.hpp"
#include "acdlab/subgroups.hpp"

namespace acdlab {

// ---------------------------------------------------------------------------
// Generator files.
//
//   # comment
//   degree 6
//   1 2 0 3 4 5
//   0 1 2 4 3 5
//
// One image row per generator; the canonical writer sorts rows and emits the
// identity row for a trivial group.
// ---------------------------------------------------------------------------

inline std::vector<Permutation> read_perm_stream(std::istream& in, const std::string& where) {
    std::vector<Permutation> gens;
    std::string line;
    int lineno = 0;
    long long degree = -1;
    auto fail = [&](const std::string& msg) {
        throw input_error(where + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t at = line.find_first_not_of(" \t\r");
        if (at == std::string::npos || line[at] == '#') continue;
        std::istringstream ls(line);
        if (degree < 0) {
            std::string kw;
            ls >> kw >> degree;
            if (kw != "degree" || ls.fail() || degree < 1 || degree > 65535)
                fail("expected 'degree <n>' with 1 <= n <= 65535");
            long long extra;
            if (ls >> extra) fail("trailing tokens after degree");
            continue;
        }
        std::vector<Point> images;
        long long v;
        while (ls >> v) {
            if (v < 0 || v >= degree) fail("image " + std::to_string(v) + " out of range");
            images.push_back(static_cast<Point>(v));
        }
        if (!ls.eof()) fail("malformed integer");
        if (static_cast<long long>(images.size()) != degree)
            fail("expected " + std::to_string(degree) + " images, got " +
                 std::to_string(images.size()));
        if (!is_valid_permutation(images)) fail("row is not a permutation");
        gens.push_back(Permutation{std::move(images)});
    }
    if (degree < 0) throw input_error(where + ": missing 'degree' line");
    if (gens.empty()) throw input_error(where + ": no generator rows");
    return gens;
}

inline std::vector<Permutation> read_perm_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open generator file: " + path);
    return read_perm_stream(in, path);
}

inline std::string perm_file_text(const std::vector<Permutation>& gens_in, std::size_t degree) {
    std::vector<Permutation> gens = gens_in;
    for (auto& g : gens)
        if (g.degree() != degree) throw input_error("generator degree mismatch in writer");
    if (gens.empty()) gens.push_back(Permutation::identity(degree));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::string out = "degree " + std::to_string(degree) + "\n";
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < degree; ++i) {
            if (i) out += ' ';
            out += std::to_string(g.images[i]);
        }
        out += '\n';
    }
    return out;
}

inline void write_perm_file(const std::string& path, const std::vector<Permutation>& gens,
                            std::size_t degree) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw io_error("cannot write generator file: " + path);
    out << perm_file_text(gens, degree);
    if (!out) throw io_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Families.
// ---------------------------------------------------------------------------

namespace families {

inline std::vector<Permutation> cyclic(long long n) {
    if (n < 1) throw input_error("cyclic: order must be at least 1");
    if (n > 65535) throw input_error("cyclic: order too large for a point set");
    std::vector<Point> img(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % n);
    return {Permutation{std::move(img)}};
}

inline std::vector<Permutation> elementary_abelian(long long p, long long k) {
    if (!is_prime(p)) throw input_error("elementary_abelian: p must be prime");
    if (k < 1 || p * k > 65535) throw input_error("elementary_abelian: bad rank");
    std::vector<Permutation> gens;
    std::size_t deg = static_cast<std::size_t>(p * k);
    for (long long b = 0; b < k; ++b) {
        std::vector<Point> img(deg);
        for (std::size_t i = 0; i < deg; ++i) img[i] = static_cast<Point>(i);
        for (long long i = 0; i < p; ++i)
            img[static_cast<std::size_t>(b * p + i)] = static_cast<Point>(b * p + (i + 1) % p);
        gens.push_back(Permutation{std::move(img)});
    }
    return gens;
}

inline std::vector<Permutation> dihedral(long long n) {
    if (n < 2 || n > 65535) throw input_error("dihedral: need 2 <= n <= 65535 (order 2n)");
    std::vector<Point> rot(static_cast<std::size_t>(n)), flip(static_cast<std::size_t>(n));
    for (long long i = 0; i < n; ++i) {
        rot[static_cast<std::size_t>(i)] = static_cast<Point>((i + 1) % n);
        flip[static_cast<std::size_t>(i)] = static_cast<Point>((n - i) % n);
    }
    return {Permutation{std::move(rot)}, Permutation{std::move(flip)}};
}

// Regular representation on pairs a^i b^j, i < 2n, j < 2; b^2 = a^n,
// b^-1 a b = a^-1.
inline std::vector<Permutation> dicyclic(long long n) {
    if (n < 1 || 4 * n > 65535) throw input_error("dicyclic: need 1 <= n, order 4n <= 65535");
    long long two_n = 2 * n;
    auto idx = [&](long long i, long long j) {
        return static_cast<std::size_t>(((i % two_n + two_n) % two_n) + two_n * j);
    };
    std::vector<Point> a(static_cast<std::size_t>(4 * n)), b(static_cast<std::size_t>(4 * n));
    for (long long i = 0; i < two_n; ++i) {
        a[idx(i, 0)] = static_cast<Point>(idx(i + 1, 0));
        a[idx(i, 1)] = static_cast<Point>(idx(i - 1, 1));
        b[idx(i, 0)] = static_cast<Point>(idx(i, 1));
        b[idx(i, 1)] = static_cast<Point>(idx(i + n, 0));
    }
    return {Permutation{std::move(a)}, Permutation{std::move(b)}};
}

inline std::vector<Permutation> symmetric(long long n) {
    if (n < 1) throw input_error("symmetric: n must be at least 1");
    if (n > 8) throw input_error("symmetric: n > 8 is rejected (order would exceed the cap)");
    std::size_t deg = static_cast<std::size_t>(n);
    if (n == 1) return {Permutation::identity(1)};
    std::vector<Point> swap01(deg), cycle(deg);
    for (std::size_t i = 0; i < deg; ++i) {
        swap01[i] = static_cast<Point>(i);
        cycle[i] = static_cast<Point>((i + 1) % deg);
    }
    swap01[0] = 1;
    swap01[1] = 0;
    if (n == 2) return {Permutation{std::move(swap01)}};
    return {Permutation{std::move(swap01)}, Permutation{std::move(cycle)}};
}

inline std::vector<Permutation> alternating(long long n) {
    if (n < 1) throw input_error("alternating: n must be at least 1");
    if (n > 8) throw input_error("alternating: n > 8 is rejected (order would exceed the cap)");
    std::size_t deg = static_cast<std::size_t>(n);
    if (n <= 2) return {Permutation::identity(deg)};
    std::vector<Point> three(deg);
    for (std::size_t i = 0; i < deg; ++i) three[i] = static_cast<Point>(i);
    three[0] = 1;
    three[1] = 2;
    three[2] = 0;
    if (n == 3) return {Permutation{std::move(three)}};
    std::vector<Point> big(deg);
    if (n % 2 == 1) {
        for (std::size_t i = 0; i < deg; ++i) big[i] = static_cast<Point>((i + 1) % deg);
    } else {
        // an (n-1)-cycle on 1..n-1 is even when n is even
        big[0] = 0;
        for (std::size_t i = 1; i < deg; ++i) big[i] = static_cast<Point>(i % (deg - 1) + 1);
    }
    return {Permutation{std::move(three)}, Permutation{std::move(big)}};
}

inline std::vector<Permutation> frobenius(long long p, long long k) {
    if (!is_prime(p)) throw input_error("frobenius: p must be prime");
    if (k < 1 || (p - 1) % k != 0)
        throw input_error("frobenius: k = " + std::to_string(k) + " does not divide p-1 = " +
                          std::to_string(p - 1));
    if (p > 65535) throw input_error("frobenius: p too large for a point set");
    // multiplier of exact order k in F_p^*
    u64 g = 2;
    auto factors = prime_factors(static_cast<u64>(p - 1));
    auto order_is = [&](u64 x, u64 m) {
        if (powmod(x, m, static_cast<u64>(p)) != 1) return false;
        for (u64 q : factors)
            if (m % q == 0 && powmod(x, m / q, static_cast<u64>(p)) == 1) return false;
        return true;
    };
    while (!order_is(g, static_cast<u64>(p - 1))) ++g;
    u64 m = powmod(g, static_cast<u64>((p - 1) / k), static_cast<u64>(p));
    std::vector<Point> shift(static_cast<std::size_t>(p)), mult(static_cast<std::size_t>(p));
    for (long long x = 0; x < p; ++x) {
        shift[static_cast<std::size_t>(x)] = static_cast<Point>((x + 1) % p);
        mult[static_cast<std::size_t>(x)] =
            static_cast<Point>(static_cast<long long>(m) * x % p);
    }
    if (k == 1) return {Permutation{std::move(shift)}};
    return {Permutation{std::move(shift)}, Permutation{std::move(mult)}};
}

// SL(2,5) on the 24 nonzero row vectors of F_5^2, generated by
// [[1,1],[0,1]] and [[0,1],[-1,0]].
inline std::vector<Permutation> sl25() {
    auto idx = [](long long x, long long y) { return static_cast<std::size_t>(5 * x + y - 1); };
    std::vector<Point> t(24), s(24);
    for (long long x = 0; x < 5; ++x)
        for (long long y = 0; y < 5; ++y) {
            if (x == 0 && y == 0) continue;
            t[idx(x, y)] = static_cast<Point>(idx(x, (x + y) % 5));
            s[idx(x, y)] = static_cast<Point>(idx((5 - y) % 5, x));
        }
    return {Permutation{std::move(t)}, Permutation{std::move(s)}};
}

} // namespace families

inline FiniteGroup extraspecial_2(long long n, long long sign, const GroupOptions& opt) {
    if (n < 1 || (sign != 1 && sign != -1))
        throw input_error("extraspecial: parameters are [n >= 1, sign = +-1]");
    auto make = [&](bool minus) {
        return FiniteGroup::from_generators(minus ? families::dicyclic(2) : families::dihedral(4),
                                            opt);
    };
    auto central_involution = [](const FiniteGroup& G) {
        Subgroup Z = center(G);
        for (int z : Z.members)
            if (G.element_order(z) == 2) return z;
        throw internal_error("extraspecial factor lost its central involution");
    };
    FiniteGroup acc = make(sign == -1);
    for (long long i = 1; i < n; ++i) {
        FiniteGroup d8 = make(false);
        acc = central_product(acc, d8, central_involution(acc), central_involution(d8), opt);
    }
    return acc;
}

inline FiniteGroup build_family(const std::string& family, const std::vector<long long>& params,
                                const GroupOptions& opt) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw input_error("family '" + family + "' takes " + std::to_string(k) +
                              " parameter(s), got " + std::to_string(params.size()));
    };
    if (family == "cyclic") {
        need(1);
        return FiniteGroup::from_generators(families::cyclic(params[0]), opt);
    }
    if (family == "elementary_abelian") {
        need(2);
        return FiniteGroup::from_generators(families::elementary_abelian(params[0], params[1]), opt);
    }
    if (family == "dihedral") {
        need(1);
        return FiniteGroup::from_generators(families::dihedral(params[0]), opt);
    }
    if (family == "dicyclic") {
        need(1);
        return FiniteGroup::from_generators(families::dicyclic(params[0]), opt);
    }
    if (family == "symmetric") {
        need(1);
        return FiniteGroup::from_generators(families::symmetric(params[0]), opt);
    }
    if (family == "alternating") {
        need(1);
        return FiniteGroup::from_generators(families::alternating(params[0]), opt);
    }
    if (family == "frobenius") {
        need(2);
        return FiniteGroup::from_generators(families::frobenius(params[0], params[1]), opt);
    }
    if (family == "extraspecial") {
        need(2);
        return extraspecial_2(params[0], params[1], opt);
    }
    if (family == "sl25") {
        need(0);
        return FiniteGroup::from_generators(families::sl25(), opt);
    }
    throw input_error("unknown family: " + family);
}

// ---------------------------------------------------------------------------
// Manifest.
// ---------------------------------------------------------------------------

struct GroupSpec {
    std::string name;
    // exactly one of: family, file, construct
    std::string family;
    std::vector<long long> params;
    std::string file;
    std::string construct; // "direct" | "semidirect" | "central"
    std::vector<GroupSpec> parts;
    std::vector<std::vector<std::vector<int>>> action; // semidirect: per P-gen, per N-gen, word
    long long amalgam_order = 2;
    long long expected_order = 0; // 0 = unchecked
};

struct CorpusManifest {
    long long version = 1;
    std::size_t cap = 20000;
    std::vector<GroupSpec> groups;
};

namespace detail {

inline GroupSpec parse_group_spec(const nlohmann::json& j, const std::string& where) {
    if (!j.is_object()) throw input_error(where + ": group entry must be an object");
    GroupSpec s;
    s.name = j.value("name", std::string{});
    int sources = 0;
    if (j.contains("family")) {
        ++sources;
        s.family = j.at("family").get<std::string>();
        if (j.contains("params"))
            for (const auto& p : j.at("params")) s.params.push_back(p.get<long long>());
    }
    if (j.contains("file")) {
        ++sources;
        s.file = j.at("file").get<std::string>();
    }
    if (j.contains("construct")) {
        ++sources;
        s.construct = j.at("construct").get<std::string>();
        if (s.construct != "direct" && s.construct != "semidirect" && s.construct != "central")
            throw input_error(where + ": unknown construct '" + s.construct + "'");
        if (!j.contains("parts") || !j.at("parts").is_array() || j.at("parts").size() != 2)
            throw input_error(where + ": construct needs exactly two parts");
        int pi = 0;
        for (const auto& part : j.at("parts"))
            s.parts.push_back(parse_group_spec(part, where + ".parts[" + std::to_string(pi++) + "]"));
        if (s.construct == "semidirect") {
            if (!j.contains("action"))
                throw input_error(where + ": semidirect construct needs an action");
            for (const auto& per_gen : j.at("action")) {
                std::vector<std::vector<int>> rows;
                for (const auto& word : per_gen) {
                    std::vector<int> w;
                    for (const auto& t : word) {
                        int v = t.get<int>();
                        if (v == 0) throw input_error(where + ": action words use signed 1-based indices");
                        w.push_back(v);
                    }
                    rows.push_back(std::move(w));
                }
                s.action.push_back(std::move(rows));
            }
        }
        if (j.contains("amalgam_order")) s.amalgam_order = j.at("amalgam_order").get<long long>();
    }
    if (sources != 1)
        throw input_error(where + ": entry needs exactly one of family/file/construct");
    if (j.contains("expected_order")) s.expected_order = j.at("expected_order").get<long long>();
    return s;
}

} // namespace detail

inline CorpusManifest parse_manifest(const nlohmann::json& j) {
    CorpusManifest m;
    if (!j.is_object()) throw input_error("manifest: top level must be an object");
    m.version = j.value("version", 1LL);
    if (m.version != 1) throw input_error("manifest: unsupported version");
    if (j.contains("cap")) m.cap = j.at("cap").get<std::size_t>();
    if (!j.contains("groups") || !j.at("groups").is_array())
        throw input_error("manifest: missing groups array");
    int i = 0;
    for (const auto& g : j.at("groups")) {
        GroupSpec s = detail::parse_group_spec(g, "groups[" + std::to_string(i) + "]");
        if (s.name.empty())
            throw input_error("groups[" + std::to_string(i) + "]: missing name");
        m.groups.push_back(std::move(s));
        ++i;
    }
    return m;
}

inline CorpusManifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open manifest: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("manifest " + path + ": " + e.what());
    }
    return parse_manifest(j);
}

inline FiniteGroup build_group(const GroupSpec& s, const GroupOptions& opt,
                               const std::string& data_dir) {
    auto built = [&]() -> FiniteGroup {
        if (!s.family.empty()) return build_family(s.family, s.params, opt);
        if (!s.file.empty()) {
            std::string path = s.file;
            if (!path.empty() && path.front() != '/' && !data_dir.empty())
                path = data_dir + "/" + path;
            return FiniteGroup::from_generators(read_perm_file(path), opt);
        }
        if (s.construct.empty()) throw input_error("group '" + s.name + "': no family, file or construct given");
        FiniteGroup A = build_group(s.parts[0], opt, data_dir);
        FiniteGroup B = build_group(s.parts[1], opt, data_dir);
        if (s.construct == "direct") return direct_product(A, B, opt);
        if (s.construct == "central") {
            auto pick_central = [&](const FiniteGroup& G) {
                Subgroup Z = center(G);
                for (int z : Z.members)
                    if (G.element_order(z) == s.amalgam_order) return z;
                throw input_error("group '" + s.name + "': no central element of order " +
                                  std::to_string(s.amalgam_order));
            };
            return central_product(A, B, pick_central(A), pick_central(B), opt);
        }
        // semidirect: action words name A's generators, signed 1-based
        if (s.action.size() != B.generator_indices().size())
            throw input_error("group '" + s.name + "': action must list one row per acting generator");
        std::vector<std::vector<int>> autos;
        auto agens = A.generator_indices();
        for (const auto& rows : s.action) {
            if (rows.size() != agens.size())
                throw input_error("group '" + s.name + "': action row must cover every generator");
            std::vector<int> images;
            for (const auto& word : rows) {
                int x = 0; // identity index
                for (int t : word) {
                    std::size_t gi = static_cast<std::size_t>(t > 0 ? t : -t) - 1;
                    if (gi >= agens.size())
                        throw input_error("group '" + s.name + "': action word index out of range");
                    int g = agens[gi];
                    x = A.mul(x, t > 0 ? g : A.inv(g));
                }
                images.push_back(x);
            }
            autos.push_back(automorphism_from_gen_images(A, images));
        }
        return semidirect_product(A, B, autos, opt);
    };
    return built();
}

struct CorpusEntry {
    std::string name;
    FiniteGroup group;
};

inline std::vector<CorpusEntry> load_corpus(const CorpusManifest& m, const std::string& data_dir) {
    GroupOptions opt;
    opt.size_cap = m.cap;
    std::vector<CorpusEntry> out;
    for (const auto& s : m.groups) {
        FiniteGroup G = build_group(s, opt, data_dir);
        if (s.expected_order != 0 && G.order() != s.expected_order)
            throw input_error("group '" + s.name + "': expected order " +
                              std::to_string(s.expected_order) + ", got " +
                              std::to_string(G.order()));
        out.push_back(CorpusEntry{s.name, std::move(G)});
    }
    return out;
}

} // namespace acdlab
