#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include <acdlab/acdlab.hpp>

using namespace acdlab;

namespace {

FiniteGroup make(const std::string& family, std::vector<long long> params) {
    return build_family(family, params, GroupOptions{});
}

// The table keeps a pointer to its group, so the group must be named.
Fraction acd_of(const std::string& family, std::vector<long long> params, long long p,
                Variant v = Variant::All) {
    FiniteGroup G = make(family, std::move(params));
    return acd(character_table(G), p, v);
}

} // namespace

TEST_CASE("fractions") {
    CHECK(Fraction(4, 3).str() == "4/3");
    CHECK(Fraction(6, 4) == Fraction(3, 2));
    CHECK(Fraction(1, -2) == Fraction(-1, 2));
    CHECK(Fraction(2) == Fraction(2, 1));
    CHECK(Fraction(0, 5).str() == "0/1");
    CHECK(Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2));
    CHECK(Fraction(1, 2) - Fraction(1, 3) == Fraction(1, 6));
    CHECK(Fraction(2, 3) * Fraction(3, 4) == Fraction(1, 2));
    CHECK(Fraction(4, 3) < Fraction(3, 2));
    CHECK(Fraction(5, 2) > Fraction(7, 3));
    CHECK(Fraction(1, 2) <= Fraction(1, 2));
    CHECK_THROWS_AS(Fraction(1, 0), input_error);
}

TEST_CASE("degree average witnesses") {
    CHECK(acd_of("symmetric", {3}, 2) == Fraction(4, 3));
    CHECK(acd_of("symmetric", {3}, 2, Variant::Strong) == Fraction(4, 3));
    CHECK(acd_of("alternating", {5}, 2) == Fraction(5, 2));
    CHECK(acd_of("alternating", {5}, 3) == Fraction(7, 3));
    CHECK(acd_of("alternating", {5}, 5) == Fraction(3, 1));
    CHECK(acd_of("alternating", {4}, 3) == Fraction(3, 2));
    CHECK(acd_of("frobenius", {5, 4}, 2, Variant::Strong) == Fraction(2, 1));
    CHECK(acd_of("dihedral", {5}, 2, Variant::Strong) == Fraction(3, 2));
    // abelian groups average to 1 at every prime
    for (long long p : {2LL, 3LL, 7LL}) CHECK(acd_of("cyclic", {12}, p) == Fraction(1, 1));
}

TEST_CASE("variants on the quaternion group") {
    FiniteGroup G = make("dicyclic", {2});
    CharacterTable T = character_table(G);
    // the degree-2 character is real but not strongly real
    CHECK(acd(T, 2, Variant::All) == Fraction(6, 5));
    CHECK(acd(T, 2, Variant::Real) == Fraction(6, 5));
    CHECK(acd(T, 2, Variant::Strong) == Fraction(1, 1));
    CHECK(irr_subset(T, 2, Variant::All).size() == 5);
    CHECK(irr_subset(T, 2, Variant::Strong).size() == 4);
}

TEST_CASE("p-subset membership") {
    FiniteGroup G = make("symmetric", {4});
    CharacterTable T = character_table(G);
    // degrees 1,1,2,3,3: at p=2 the subset drops the two degree-3 characters
    auto idx2 = irr_subset(T, 2, Variant::All);
    REQUIRE(idx2.size() == 3);
    for (int i : idx2) {
        long long d = T.chars[static_cast<std::size_t>(i)].degree;
        CHECK((d == 1 || d % 2 == 0));
    }
    auto idx3 = irr_subset(T, 3, Variant::All);
    CHECK(idx3.size() == 4);
    CHECK_THROWS_AS(irr_subset(T, 4, Variant::All), input_error);
}

TEST_CASE("extraspecial averages decrease strictly") {
    std::vector<Fraction> expect{Fraction(6, 5), Fraction(20, 17), Fraction(72, 65)};
    Fraction prev(0);
    for (long long n = 1; n <= 3; ++n) {
        FiniteGroup G = extraspecial_2(n, 1, GroupOptions{});
        CHECK(G.order() == (1LL << (2 * n + 1)));
        Fraction a = acd(character_table(G), 2);
        CHECK(a == expect[static_cast<std::size_t>(n - 1)]);
        CHECK(a > Fraction(1, 1));
        if (n > 1) CHECK(a < prev);
        prev = a;
    }
    // both signs have the same degree sequence, so the same average
    FiniteGroup M = extraspecial_2(2, -1, GroupOptions{});
    CHECK(acd(character_table(M), 2) == Fraction(20, 17));
}

TEST_CASE("degree counts") {
    FiniteGroup G = make("symmetric", {4});
    CharacterTable T = character_table(G);
    CHECK(count_degree(T, 1) == 2);
    CHECK(count_degree(T, 2) == 1);
    CHECK(count_degree(T, 3) == 2);
    CHECK(count_degree(T, 7) == 0);
    CHECK(count_degree(T, 1, Variant::Strong) == 2);

    // characters of S4 not containing the Klein subgroup in the kernel
    auto mins = minimal_normal_subgroups(G);
    REQUIRE(mins.size() == 1);
    CHECK(count_degree_rel(T, 3, mins[0]) == 2);
    CHECK(count_degree_rel(T, 1, mins[0]) == 0);
    CHECK(count_degree_rel(T, 2, mins[0]) == 0);

    Subgroup nn = subgroup_generated(G, {G.generator_indices()[0]});
    CHECK_THROWS_AS(count_degree_rel(T, 1, nn), input_error);
}

TEST_CASE("invariant report fields") {
    FiniteGroup G = make("symmetric", {3});
    CharacterTable T = character_table(G);
    InvariantReport R = build_invariant_report(T, "S3");
    CHECK(R.name == "S3");
    CHECK(R.order == 6);
    CHECK(R.solvable);
    CHECK(!R.abelian);
    CHECK(R.derived_index == 2);
    CHECK(R.squares_index == 2);
    // primes: divisors 2, 3 plus default extra 5
    REQUIRE(R.primes.size() == 3);
    CHECK(R.primes[0].p == 2);
    CHECK(R.primes[0].acd_all == Fraction(4, 3));
    CHECK(!R.primes[0].has_normal_sylow);
    CHECK(R.primes[0].sylow_abelian);
    CHECK(R.primes[1].p == 3);
    CHECK(R.primes[1].acd_all == Fraction(1, 1));
    CHECK(R.primes[1].has_normal_sylow);
    CHECK(R.primes[2].p == 5);
    CHECK(R.primes[2].acd_all == Fraction(1, 1));
    // degree counts: two linear, one of degree 2
    REQUIRE(R.degrees.size() == 2);
    CHECK(R.degrees[0].k == 1);
    CHECK(R.degrees[0].n == 2);
    CHECK(R.degrees[0].n_plus == 2);
    CHECK(R.degrees[1].k == 2);
    CHECK(R.degrees[1].n == 1);

    InvariantReport R7 = build_invariant_report(T, "S3", {7});
    CHECK(R7.primes.size() == 3);
    CHECK(R7.primes.back().p == 7);
    CHECK(R7.primes.back().acd_all == Fraction(1, 1));
}

TEST_CASE("linear character counts match commutator indices") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"alternating", {4}}, {"dicyclic", {3}}, {"dihedral", {6}},
             {"frobenius", {5, 4}}, {"cyclic", {8}}, {"sl25", {}}}) {
        FiniteGroup G = build_family(family, params, GroupOptions{});
        CharacterTable T = character_table(G);
        InvariantReport R = build_invariant_report(T, family);
        CHECK(count_degree(T, 1, Variant::All) == R.derived_index);
        CHECK(count_degree(T, 1, Variant::Strong) == R.squares_index);
    }
}

TEST_CASE("average-one criterion") {
    // normal abelian Sylow everywhere: abelian groups
    FiniteGroup C12 = make("cyclic", {12});
    CharacterTable TC = character_table(C12);
    InvariantReport A = build_invariant_report(TC, "C12");
    CHECK(ito_michler_check(A));
    for (const auto& PI : A.primes)
        if (A.order % PI.p == 0) CHECK(PI.acd_all == Fraction(1, 1));

    // nonabelian: the prime 2 average exceeds 1 exactly when the Sylow
    // 2-subgroup fails to be normal abelian
    FiniteGroup S4 = make("symmetric", {4});
    CharacterTable TS = character_table(S4);
    InvariantReport S = build_invariant_report(TS, "S4");
    CHECK(ito_michler_check(S));

    // normal nonabelian Sylow 2 with every degree dividing its index:
    // average exceeds one yet all linear-or-even degrees stay small
    FiniteGroup Q8xC3 = direct_product(make("dicyclic", {2}), make("cyclic", {3}));
    CharacterTable TQ = character_table(Q8xC3);
    InvariantReport Q = build_invariant_report(TQ, "Q8xC3");
    CHECK(ito_michler_check(Q));
    REQUIRE(Q.primes[0].p == 2);
    CHECK(Q.primes[0].has_normal_sylow);
    CHECK(!Q.primes[0].sylow_abelian);
    CHECK(Q.primes[0].acd_all == Fraction(6, 5));

    // frobenius group of order 20: normal Sylow 5, nonnormal Sylow 2
    FiniteGroup F20 = make("frobenius", {5, 4});
    CharacterTable TF = character_table(F20);
    InvariantReport F = build_invariant_report(TF, "F20");
    CHECK(ito_michler_check(F));
    for (const auto& PI : F.primes) {
        if (PI.p == 2) CHECK(PI.acd_all > Fraction(1, 1));
        if (PI.p == 5) {
            CHECK(PI.has_normal_sylow);
            CHECK(PI.sylow_abelian);
            CHECK(PI.acd_all == Fraction(1, 1));
        }
    }
}

TEST_CASE("variant names") {
    CHECK(variant_from_name("all") == Variant::All);
    CHECK(variant_from_name("real") == Variant::Real);
    CHECK(variant_from_name("strong") == Variant::Strong);
    CHECK_THROWS_AS(variant_from_name("bogus"), input_error);
    CHECK(std::string(variant_name(Variant::Real)) == "real");
}

TEST_CASE("report serialization") {
    FiniteGroup G = make("symmetric", {3});
    CharacterTable T = character_table(G);
    nlohmann::json j = invariant_report_to_json(build_invariant_report(T, "S3"));
    CHECK(j["schema_version"] == 1);
    CHECK(j["name"] == "S3");
    CHECK(j["order"] == 6);
    CHECK(j["primes"].size() == 3);
    CHECK(j["primes"][0]["p"] == 2);
    CHECK(j["primes"][0]["acd"] == "4/3");
    CHECK(j["primes"][0]["acd_real"] == "4/3");
    CHECK(j["primes"][0]["acd_plus"] == "4/3");
    CHECK(j["primes"][0]["has_normal_sylow"] == false);
    CHECK(j["degrees"][0]["k"] == 1);
    CHECK(j["degrees"][0]["n"] == 2);
    CHECK(j["degrees"][0]["n_plus"] == 2);
}
