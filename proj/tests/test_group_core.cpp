#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>

#include <acdlab/acdlab.hpp>

#include "oracles.hpp"

using namespace acdlab;

namespace {

FiniteGroup make(const std::string& family, std::vector<long long> params,
                 GroupOptions opt = {}) {
    return build_family(family, params, opt);
}

std::multiset<long long> class_size_multiset(const FiniteGroup& G) {
    ConjugacyData cd = conjugacy_classes(G);
    return {cd.class_sizes.begin(), cd.class_sizes.end()};
}

} // namespace

TEST_CASE("permutation basics") {
    Permutation id = Permutation::identity(4);
    CHECK(id.is_identity());
    CHECK(cycle_string(id) == "()");

    Permutation a = perm_from_cycles(4, "(0 1 2)");
    Permutation b = perm_from_cycles(4, "(2 3)");
    CHECK(cycle_string(a) == "(0 1 2)");
    CHECK(a.then(a.inverse()).is_identity());
    CHECK(cycle_type(a) == "3");
    CHECK(cycle_type(id) == "1");
    CHECK(cycle_type(perm_from_cycles(4, "(0 1)(2 3)")) == "2.2");

    // apply-a-then-b convention
    Permutation ab = a.then(b);
    CHECK(ab.images[1] == 3); // 1 -> 2 under a, 2 -> 3 under b

    CHECK_THROWS_AS(make_permutation({0, 0, 1}), input_error);
    CHECK_THROWS_AS(perm_from_cycles(4, "(0 9)"), input_error);
    CHECK_THROWS_AS(perm_from_cycles(4, "(0 1"), input_error);
}

TEST_CASE("closure agrees with the naive set closure") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"dihedral", {6}}, {"dicyclic", {3}}, {"frobenius", {5, 4}},
             {"elementary_abelian", {3, 2}}, {"alternating", {5}}}) {
        FiniteGroup G = make(family, params);
        auto gens = G.generator_perms();
        auto naive = oracle::naive_closure(gens);
        REQUIRE(static_cast<long long>(naive.size()) == G.order());
        for (int i = 0; i < G.order(); ++i) CHECK(naive.count(G.element(i).images) == 1);
    }
}

TEST_CASE("multiplication matches raw permutation composition") {
    FiniteGroup G = make("symmetric", {4});
    for (int i = 0; i < G.order(); i += 3)
        for (int j = 0; j < G.order(); j += 5) {
            Permutation expect = G.element(i).then(G.element(j));
            CHECK(G.element(G.mul(i, j)) == expect);
        }
    for (int i = 0; i < G.order(); ++i) {
        CHECK(G.mul(i, G.inv(i)) == 0);
        CHECK(G.mul(G.inv(i), i) == 0);
    }
}

TEST_CASE("word-walk multiplication agrees with the table") {
    GroupOptions no_table;
    no_table.mul_table_cap = 1; // forces the word walk
    FiniteGroup A = make("symmetric", {4});
    FiniteGroup B = make("symmetric", {4}, no_table);
    REQUIRE(A.has_mul_table());
    REQUIRE(!B.has_mul_table());
    REQUIRE(A.order() == B.order());
    // element enumeration order is identical (same BFS), so indices align
    for (int i = 0; i < A.order(); ++i) REQUIRE(A.element(i) == B.element(i));
    for (int i = 0; i < A.order(); i += 2)
        for (int j = 0; j < A.order(); j += 7) CHECK(A.mul(i, j) == B.mul(i, j));
    for (int i = 0; i < A.order(); ++i) {
        CHECK(A.inv(i) == B.inv(i));
        CHECK(A.element_order(i) == B.element_order(i));
    }
}

TEST_CASE("element orders, exponent, powers") {
    FiniteGroup G = make("dicyclic", {2}); // Q8
    std::multiset<int> orders;
    for (int i = 0; i < G.order(); ++i) orders.insert(G.element_order(i));
    CHECK(orders == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4});
    CHECK(G.exponent() == 4);
    for (int i = 0; i < G.order(); ++i) {
        CHECK(G.power(i, G.element_order(i)) == 0);
        CHECK(G.power(i, -1) == G.inv(i));
    }
}

TEST_CASE("conjugacy classes against brute force") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"dicyclic", {3}}, {"frobenius", {7, 3}}}) {
        FiniteGroup G = make(family, params);
        ConjugacyData cd = conjugacy_classes(G);
        auto naive = oracle::naive_classes(oracle::naive_closure(G.generator_perms()));
        REQUIRE(static_cast<int>(naive.size()) == cd.count());
        std::multiset<std::size_t> naive_sizes, mine;
        for (auto& c : naive) naive_sizes.insert(c.size());
        for (long long s : cd.class_sizes) mine.insert(static_cast<std::size_t>(s));
        CHECK(naive_sizes == mine);
        // same partition, not merely same sizes
        for (const auto& c : naive) {
            std::set<int> ids;
            for (const auto& im : c) ids.insert(cd.class_of[static_cast<std::size_t>(
                G.index_of(Permutation{im}))]);
            CHECK(ids.size() == 1);
        }
    }
}

TEST_CASE("class data invariants") {
    FiniteGroup G = make("symmetric", {5});
    ConjugacyData cd = conjugacy_classes(G);
    CHECK(cd.count() == 7);
    CHECK(cd.class_of[0] == 0); // identity first
    for (int c = 0; c < cd.count(); ++c) {
        CHECK(G.order() % cd.class_sizes[static_cast<std::size_t>(c)] == 0);
        CHECK(cd.class_sizes[static_cast<std::size_t>(cd.inv_class[static_cast<std::size_t>(c)])] ==
              cd.class_sizes[static_cast<std::size_t>(c)]);
        CHECK(cd.inv_class[static_cast<std::size_t>(cd.inv_class[static_cast<std::size_t>(c)])] == c);
        CHECK(cd.centralizer_orders[static_cast<std::size_t>(c)] *
                  cd.class_sizes[static_cast<std::size_t>(c)] ==
              G.order());
    }
}

TEST_CASE("derived series against brute force") {
    FiniteGroup S4 = make("symmetric", {4});
    auto series = derived_series(S4);
    std::vector<long long> orders;
    for (const auto& H : series) orders.push_back(H.order());
    CHECK(orders == std::vector<long long>{24, 12, 4, 1});

    auto naive = oracle::naive_derived(oracle::naive_closure(S4.generator_perms()));
    CHECK(static_cast<long long>(naive.size()) == series[1].order());

    CHECK(is_solvable(S4));
    CHECK(!is_solvable(make("alternating", {5})));
}

TEST_CASE("subgroup machinery") {
    FiniteGroup S4 = make("symmetric", {4});
    Subgroup syl2 = sylow_subgroup(S4, 2);
    CHECK(syl2.order() == 8);
    CHECK(!is_normal(S4, syl2));
    Subgroup syl3 = sylow_subgroup(S4, 3);
    CHECK(syl3.order() == 3);

    Subgroup z = center(S4);
    CHECK(z.order() == 1);
    CHECK(center(make("dicyclic", {2})).order() == 2);

    auto mins = minimal_normal_subgroups(S4);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].order() == 4); // the Klein four-group

    Subgroup sq = squares_subgroup(S4);
    CHECK(sq.order() == 12); // squares generate A4

    FiniteGroup D8 = make("dihedral", {4});
    Subgroup phi = frattini_of_p_group(D8, whole_subgroup(D8), 2);
    CHECK(phi.order() == 2);
    CHECK_THROWS_AS(frattini_of_p_group(S4, whole_subgroup(S4), 2), input_error);
}

TEST_CASE("quotients and products") {
    FiniteGroup S4 = make("symmetric", {4});
    auto mins = minimal_normal_subgroups(S4);
    FiniteGroup Q = quotient_group(S4, mins[0]);
    CHECK(Q.order() == 6);
    CHECK(!Q.is_abelian()); // S4/V4 is the nonabelian group of order 6

    FiniteGroup D = direct_product(make("cyclic", {4}), make("cyclic", {2}));
    CHECK(D.order() == 8);
    CHECK(D.is_abelian());
    CHECK(D.exponent() == 4);

    // central product C4 o D8 has order 16
    FiniteGroup C4 = make("cyclic", {4});
    FiniteGroup D8 = make("dihedral", {4});
    int z4 = -1, z8 = -1;
    for (int i : center(C4).members)
        if (C4.element_order(i) == 2) z4 = i;
    for (int i : center(D8).members)
        if (D8.element_order(i) == 2) z8 = i;
    FiniteGroup CP = central_product(C4, D8, z4, z8);
    CHECK(CP.order() == 16);
    CHECK(center(CP).order() == 4);
}

TEST_CASE("semidirect products") {
    FiniteGroup C3 = make("cyclic", {3});
    FiniteGroup C2 = make("cyclic", {2});
    int g = C3.generator_indices()[0];
    auto invert = automorphism_from_gen_images(C3, {C3.inv(g)});
    FiniteGroup S3ish = semidirect_product(C3, C2, {invert});
    CHECK(S3ish.order() == 6);
    CHECK(!S3ish.is_abelian());

    // trivial action gives the direct product
    auto ident = automorphism_from_gen_images(C3, {g});
    FiniteGroup C6ish = semidirect_product(C3, C2, {ident});
    CHECK(C6ish.order() == 6);
    CHECK(C6ish.is_abelian());

    // an order-3 automorphism under an order-2 actor violates the relations
    FiniteGroup C7 = make("cyclic", {7});
    int h = C7.generator_indices()[0];
    auto doubling = automorphism_from_gen_images(C7, {C7.mul(h, h)}); // x -> 2x, order 3
    CHECK_THROWS_AS(semidirect_product(C7, C2, {doubling}), construction_error);

    // non-automorphism images are rejected
    CHECK_THROWS_AS(automorphism_from_gen_images(C7, {0}), input_error);
}

TEST_CASE("automorphism extension validates multiplicativity") {
    FiniteGroup V4 = make("elementary_abelian", {2, 2});
    auto gs = V4.generator_indices();
    auto swap_gens = automorphism_from_gen_images(V4, {gs[1], gs[0]});
    CHECK(swap_gens[gs[0]] == gs[1]);
    FiniteGroup G = semidirect_product(V4, make("cyclic", {4}), {swap_gens});
    CHECK(G.order() == 16);
}

TEST_CASE("size caps") {
    GroupOptions opt;
    opt.size_cap = 100;
    CHECK_THROWS_AS(make("symmetric", {5}, opt), size_limit_error);
}

TEST_CASE("family orders are as documented") {
    CHECK(make("cyclic", {12}).order() == 12);
    CHECK(make("elementary_abelian", {3, 3}).order() == 27);
    CHECK(make("dihedral", {9}).order() == 18);
    CHECK(make("dicyclic", {4}).order() == 16);
    CHECK(make("symmetric", {6}).order() == 720);
    CHECK(make("alternating", {6}).order() == 360);
    CHECK(make("frobenius", {13, 4}).order() == 52);
    CHECK(build_family("sl25", {}, GroupOptions{}).order() == 120);
    CHECK(extraspecial_2(2, 1, GroupOptions{}).order() == 32);
    CHECK(extraspecial_2(2, -1, GroupOptions{}).order() == 32);

    CHECK_THROWS_AS(make("symmetric", {9}), input_error);
    CHECK_THROWS_AS(make("frobenius", {5, 3}), input_error); // 3 does not divide 4
    CHECK_THROWS_AS(make("frobenius", {6, 2}), input_error); // 6 not prime
    CHECK_THROWS_AS(make("cyclic", {0}), input_error);
    CHECK_THROWS_AS(make("unknown_family", {}), input_error);
}

TEST_CASE("perm file round-trip preserves order, exponent, class sizes") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"dicyclic", {4}}, {"frobenius", {5, 4}},
             {"elementary_abelian", {2, 3}}, {"cyclic", {1}}}) {
        FiniteGroup G = build_family(family, params, GroupOptions{});
        std::string text = perm_file_text(G.generator_perms(), G.degree());
        std::istringstream in(text);
        FiniteGroup H = FiniteGroup::from_generators(read_perm_stream(in, "roundtrip"));
        CHECK(G.order() == H.order());
        CHECK(G.exponent() == H.exponent());
        CHECK(class_size_multiset(G) == class_size_multiset(H));
    }
}

TEST_CASE("perm file parse errors carry line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_perm_stream(in, "t");
    };
    CHECK_THROWS_WITH(parse("degree 3\n0 1\n"), Catch::Matchers::ContainsSubstring("t:2"));
    CHECK_THROWS_WITH(parse("degree 3\n0 1 1\n"), Catch::Matchers::ContainsSubstring("not a permutation"));
    CHECK_THROWS_WITH(parse("order 3\n"), Catch::Matchers::ContainsSubstring("t:1"));
    CHECK_THROWS_WITH(parse("degree 3\n0 1 5\n"), Catch::Matchers::ContainsSubstring("out of range"));
    CHECK_THROWS_AS(parse(""), input_error);
    CHECK_THROWS_AS(parse("degree 2\n# only comments\n"), input_error);
    // comments and blank lines are fine
    auto gens = parse("# a comment\n\ndegree 3\n# more\n1 2 0\n");
    CHECK(gens.size() == 1);
}

TEST_CASE("canonical writer sorts rows and emits identity for the trivial group") {
    Permutation a = perm_from_cycles(3, "(0 1)");
    Permutation b = perm_from_cycles(3, "(0 1 2)");
    CHECK(perm_file_text({b, a, b}, 3) == "degree 3\n1 0 2\n1 2 0\n");
    CHECK(perm_file_text({}, 2) == "degree 2\n0 1\n");
}
