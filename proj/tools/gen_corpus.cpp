// Regenerates the bundled generator files: every group of order <= 16,
// one canonical .perm file each. Verifies orders and pairwise
// distinguishability (by cheap isomorphism invariants) before writing.

#include <iostream>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include <acdlab/acdlab.hpp>

using namespace acdlab;

namespace {

FiniteGroup cyc(long long n) { return FiniteGroup::from_generators(families::cyclic(n)); }
FiniteGroup ea(long long p, long long k) {
    return FiniteGroup::from_generators(families::elementary_abelian(p, k));
}
FiniteGroup dih(long long n) { return FiniteGroup::from_generators(families::dihedral(n)); }
FiniteGroup dic(long long n) { return FiniteGroup::from_generators(families::dicyclic(n)); }

FiniteGroup affine8(long long mult) {
    // x -> x+1 and x -> mult*x on Z/8
    std::vector<Point> shift(8), scale(8);
    for (long long x = 0; x < 8; ++x) {
        shift[static_cast<std::size_t>(x)] = static_cast<Point>((x + 1) % 8);
        scale[static_cast<std::size_t>(x)] = static_cast<Point>(mult * x % 8);
    }
    return FiniteGroup::from_generators({Permutation{shift}, Permutation{scale}});
}

FiniteGroup c4_semi_c4() {
    FiniteGroup n = cyc(4), p = cyc(4);
    int g = n.generator_indices()[0];
    auto inv_map = automorphism_from_gen_images(n, {n.inv(g)});
    return semidirect_product(n, p, {inv_map});
}

FiniteGroup ea4_semi_c4() {
    FiniteGroup n = ea(2, 2), p = cyc(4);
    auto gs = n.generator_indices();
    auto swap_map = automorphism_from_gen_images(n, {gs[1], gs[0]});
    return semidirect_product(n, p, {swap_map});
}

FiniteGroup pauli16() {
    FiniteGroup a = cyc(4), b = dih(4);
    auto central_of_order_2 = [](const FiniteGroup& G) {
        for (int z : center(G).members)
            if (G.element_order(z) == 2) return z;
        throw internal_error("no central involution");
    };
    return central_product(a, b, central_of_order_2(a), central_of_order_2(b));
}

// Cheap isomorphism invariants; enough to tell apart all groups of
// order <= 16.
using Fingerprint = std::tuple<long long, long long, bool, std::vector<int>, std::vector<long long>,
                               long long, long long, long long>;

Fingerprint fingerprint(const FiniteGroup& G) {
    std::vector<int> orders;
    for (int i = 0; i < G.order(); ++i) orders.push_back(G.element_order(i));
    std::sort(orders.begin(), orders.end());
    ConjugacyData cd = conjugacy_classes(G);
    std::vector<long long> sizes(cd.class_sizes.begin(), cd.class_sizes.end());
    std::sort(sizes.begin(), sizes.end());
    return {G.order(),
            G.exponent(),
            G.is_abelian(),
            std::move(orders),
            std::move(sizes),
            center(G).order(),
            derived_subgroup(G, whole_subgroup(G)).order(),
            squares_subgroup(G).order()};
}

} // namespace

int main(int argc, char** argv) {
    std::string out_dir = argc > 1 ? argv[1] : "data/corpus";
    if (out_dir == "-h" || out_dir == "--help") {
        std::cout << "usage: acdlab-gencorpus [out-dir]\n"
                     "writes generator files for the 42 groups of order <= 16 "
                     "(default out-dir: data/corpus)\n";
        return 0;
    }
    std::vector<std::pair<std::string, FiniteGroup>> groups;
    auto add = [&](const std::string& slug, FiniteGroup G, long long expect) {
        if (G.order() != expect) {
            std::cerr << slug << ": order " << G.order() << ", expected " << expect << "\n";
            return 1;
        }
        groups.emplace_back(slug, std::move(G));
        return 0;
    };

    int bad = 0;
    bad += add("c1", cyc(1), 1);
    bad += add("c2", cyc(2), 2);
    bad += add("c3", cyc(3), 3);
    bad += add("c4", cyc(4), 4);
    bad += add("v4", ea(2, 2), 4);
    bad += add("c5", cyc(5), 5);
    bad += add("c6", cyc(6), 6);
    bad += add("s3", FiniteGroup::from_generators(families::symmetric(3)), 6);
    bad += add("c7", cyc(7), 7);
    bad += add("c8", cyc(8), 8);
    bad += add("c4xc2", direct_product(cyc(4), cyc(2)), 8);
    bad += add("ea8", ea(2, 3), 8);
    bad += add("d8", dih(4), 8);
    bad += add("q8", dic(2), 8);
    bad += add("c9", cyc(9), 9);
    bad += add("ea9", ea(3, 2), 9);
    bad += add("c10", cyc(10), 10);
    bad += add("d10", dih(5), 10);
    bad += add("c11", cyc(11), 11);
    bad += add("c12", cyc(12), 12);
    bad += add("c6xc2", direct_product(cyc(6), cyc(2)), 12);
    bad += add("d12", dih(6), 12);
    bad += add("a4", FiniteGroup::from_generators(families::alternating(4)), 12);
    bad += add("dic3", dic(3), 12);
    bad += add("c13", cyc(13), 13);
    bad += add("c14", cyc(14), 14);
    bad += add("d14", dih(7), 14);
    bad += add("c15", cyc(15), 15);
    bad += add("c16", cyc(16), 16);
    bad += add("c8xc2", direct_product(cyc(8), cyc(2)), 16);
    bad += add("c4xc4", direct_product(cyc(4), cyc(4)), 16);
    bad += add("c4xc2xc2", direct_product(cyc(4), ea(2, 2)), 16);
    bad += add("ea16", ea(2, 4), 16);
    bad += add("d16", dih(8), 16);
    bad += add("sd16", affine8(3), 16);
    bad += add("m4_2", affine8(5), 16);
    bad += add("q16", dic(4), 16);
    bad += add("d8xc2", direct_product(dih(4), cyc(2)), 16);
    bad += add("q8xc2", direct_product(dic(2), cyc(2)), 16);
    bad += add("pauli16", pauli16(), 16);
    bad += add("c4sc4", c4_semi_c4(), 16);
    bad += add("ea4sc4", ea4_semi_c4(), 16);
    if (bad) return 1;

    if (groups.size() != 42) {
        std::cerr << "expected the 42 groups of order <= 16, have " << groups.size() << "\n";
        return 1;
    }

    std::map<Fingerprint, std::string> seen;
    for (const auto& [slug, G] : groups) {
        Fingerprint f = fingerprint(G);
        auto it = seen.find(f);
        if (it != seen.end()) {
            std::cerr << slug << " and " << it->second << " share an invariant fingerprint\n";
            return 1;
        }
        seen.emplace(std::move(f), slug);
    }

    try {
        for (const auto& [slug, G] : groups) {
            std::string path = out_dir + "/" + slug + ".perm";
            write_perm_file(path, G.generator_perms(), G.degree());
            std::cout << slug << ".perm: order " << G.order() << ", degree " << G.degree() << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    std::cout << groups.size() << " generator files written to " << out_dir << "\n";
    return 0;
}
