#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>

#include <acdlab/acdlab.hpp>

using namespace acdlab;

namespace {

FiniteGroup make(const std::string& family, std::vector<long long> params) {
    return build_family(family, params, GroupOptions{});
}

int find_trivial_char(const CharacterTable& T) {
    for (std::size_t i = 0; i < T.chars.size(); ++i) {
        const auto& c = T.chars[i];
        if (c.degree != 1) continue;
        bool all_one = true;
        for (const auto& v : c.values)
            if (!(v.terms.size() == 1 && v.terms[0].first == 0 && v.terms[0].second == 1))
                all_one = false;
        if (all_one) return static_cast<int>(i);
    }
    FAIL("no trivial character");
    return -1;
}

int conjugate_char_index(const CharacterTable& T, int i) {
    std::vector<CycValue> conj;
    for (const auto& v : T.chars[static_cast<std::size_t>(i)].values)
        conj.push_back(v.conjugate(T.exponent));
    for (std::size_t j = 0; j < T.chars.size(); ++j)
        if (T.chars[j].values == conj) return static_cast<int>(j);
    FAIL("conjugate character missing");
    return -1;
}

// Distinct proper nontrivial normal subgroups reachable from the standard
// constructions; enough variety for the decomposition sweeps.
std::vector<Subgroup> some_normal_subgroups(const FiniteGroup& G) {
    std::vector<Subgroup> out;
    auto push = [&](Subgroup N) {
        if (N.order() <= 1 || N.order() == G.order()) return;
        for (const auto& o : out)
            if (o.members == N.members) return;
        out.push_back(std::move(N));
    };
    push(derived_subgroup(G, whole_subgroup(G)));
    push(center(G));
    for (auto& N : minimal_normal_subgroups(G)) push(std::move(N));
    for (long long p : {2LL, 3LL, 5LL}) {
        if (G.order() % p != 0) continue;
        Subgroup P = sylow_subgroup(G, p);
        if (is_normal(G, P)) push(std::move(P));
    }
    return out;
}

FiniteGroup build_ea9_q8() {
    FiniteGroup EA9 = make("elementary_abelian", {3, 2});
    auto g = EA9.generator_indices();
    FiniteGroup Q8 = make("dicyclic", {2});
    auto A = automorphism_from_gen_images(EA9, {g[1], EA9.inv(g[0])});
    auto B = automorphism_from_gen_images(
        EA9, {EA9.mul(g[0], g[1]), EA9.mul(g[0], EA9.inv(g[1]))});
    return semidirect_product(EA9, Q8, {A, B});
}

} // namespace

TEST_CASE("subgroup tables") {
    FiniteGroup G = make("symmetric", {3});
    Subgroup A3 = derived_subgroup(G, whole_subgroup(G));
    REQUIRE(A3.order() == 3);
    SubgroupTable NT = make_subgroup_table(G, A3);
    CHECK(NT.group->order() == 3);
    CHECK(NT.table.class_count() == 3);
    for (int i = 0; i < NT.group->order(); ++i) {
        int pi = NT.to_parent[static_cast<std::size_t>(i)];
        CHECK(NT.from_parent[static_cast<std::size_t>(pi)] == i);
        CHECK(A3.contains(pi));
    }

    FiniteGroup H = make("symmetric", {3});
    Subgroup other = derived_subgroup(H, whole_subgroup(H));
    CHECK_THROWS_AS(make_subgroup_table(G, other), input_error);
}

TEST_CASE("orbits of the rotation subgroup characters") {
    FiniteGroup G = make("symmetric", {3});
    Subgroup A3 = derived_subgroup(G, whole_subgroup(G));
    SubgroupTable NT = make_subgroup_table(G, A3);
    InertiaData act = action_on_irr(G, NT, {}, "A3");
    REQUIRE(act.orbits.size() == 2);
    int triv = find_trivial_char(NT.table);
    CHECK(act.orbit_sizes[static_cast<std::size_t>(triv)] == 1);
    std::multiset<std::size_t> sizes;
    for (const auto& o : act.orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2});
    // d values: 1 for the fixed trivial character, 2 on the fused pair
    for (std::size_t i = 0; i < NT.table.chars.size(); ++i)
        CHECK(act.d_value[i] == (static_cast<int>(i) == triv ? 1 : 2));
}

TEST_CASE("orbits of the Klein subgroup characters") {
    FiniteGroup G = make("symmetric", {4});
    auto mins = minimal_normal_subgroups(G);
    REQUIRE(mins.size() == 1);
    SubgroupTable NT = make_subgroup_table(G, mins[0]);
    InertiaData act = action_on_irr(G, NT, {}, "V4");
    std::multiset<std::size_t> sizes;
    for (const auto& o : act.orbits) sizes.insert(o.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 3});
    long long index = G.order() / NT.group->order();
    for (std::size_t i = 0; i < NT.table.chars.size(); ++i) {
        CHECK(index % act.orbit_sizes[i] == 0);
        CHECK(act.inertia_index[i] == act.orbit_sizes[i]);
    }
}

TEST_CASE("action through a non-normal subgroup is rejected") {
    FiniteGroup G = make("symmetric", {3});
    // an order-2 subgroup is not normal; conjugation escapes it
    int t = -1;
    for (int i = 1; i < G.order(); ++i)
        if (G.element_order(i) == 2) { t = i; break; }
    Subgroup C2 = subgroup_generated(G, {t});
    SubgroupTable NT = make_subgroup_table(G, C2);
    CHECK_THROWS_AS(action_on_irr(G, NT, {}, "C2"), input_error);
}

TEST_CASE("restriction multiplicities in the order-6 group") {
    FiniteGroup G = make("symmetric", {3});
    CharacterTable TG = character_table(G);
    Subgroup A3 = derived_subgroup(G, whole_subgroup(G));
    SubgroupTable NT = make_subgroup_table(G, A3);

    int trivN = find_trivial_char(NT.table);
    int trivG = find_trivial_char(TG);
    int sign = -1, two = -1;
    for (std::size_t i = 0; i < TG.chars.size(); ++i) {
        if (TG.chars[i].degree == 2) two = static_cast<int>(i);
        else if (static_cast<int>(i) != trivG) sign = static_cast<int>(i);
    }
    REQUIRE(sign >= 0);
    REQUIRE(two >= 0);

    CHECK(restriction_multiplicity(TG, trivG, NT, trivN) == 1);
    CHECK(restriction_multiplicity(TG, sign, NT, trivN) == 1);
    for (int phi = 0; phi < 3; ++phi) {
        if (phi == trivN) continue;
        CHECK(restriction_multiplicity(TG, two, NT, phi) == 1);
        CHECK(restriction_multiplicity(TG, sign, NT, phi) == 0);
    }
    CHECK(restriction_multiplicity(TG, two, NT, trivN) == 0);

    CHECK_THROWS_AS(restriction_multiplicity(TG, 5, NT, 0), input_error);
    CHECK_THROWS_AS(restriction_multiplicity(TG, 0, NT, 9), input_error);
}

TEST_CASE("restrictions decompose along single orbits with equal weights") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"alternating", {4}}, {"dihedral", {6}}, {"dicyclic", {3}},
             {"frobenius", {5, 4}}, {"dicyclic", {2}}, {"sl25", {}}}) {
        FiniteGroup G = build_family(family, params, GroupOptions{});
        CharacterTable TG = character_table(G);
        for (const Subgroup& N : some_normal_subgroups(G)) {
            SubgroupTable NT = make_subgroup_table(G, N);
            InertiaData act = action_on_irr(G, NT, {}, family);
            for (std::size_t chi = 0; chi < TG.chars.size(); ++chi) {
                std::vector<long long> mult(NT.table.chars.size());
                long long degree_sum = 0;
                std::set<int> support_orbits;
                for (std::size_t phi = 0; phi < NT.table.chars.size(); ++phi) {
                    long long m = restriction_multiplicity(TG, static_cast<int>(chi), NT,
                                                           static_cast<int>(phi));
                    mult[phi] = m;
                    degree_sum += m * NT.table.chars[phi].degree;
                    if (m > 0) support_orbits.insert(act.orbit_of[phi]);
                }
                CHECK(degree_sum == TG.chars[chi].degree);
                REQUIRE(support_orbits.size() == 1);
                // equal multiplicity across the supporting orbit
                const auto& orb = act.orbits[static_cast<std::size_t>(*support_orbits.begin())];
                for (int phi : orb) CHECK(mult[static_cast<std::size_t>(phi)] == mult[static_cast<std::size_t>(orb[0])]);
            }
        }
    }
}

TEST_CASE("conjugation permutes the orbits") {
    FiniteGroup G = make("frobenius", {7, 3});
    auto mins = minimal_normal_subgroups(G);
    REQUIRE(mins.size() == 1);
    SubgroupTable NT = make_subgroup_table(G, mins[0]);
    InertiaData act = action_on_irr(G, NT, {}, "C7");
    std::set<std::vector<int>> orbit_set(act.orbits.begin(), act.orbits.end());
    for (const auto& orb : act.orbits) {
        std::vector<int> conj;
        for (int phi : orb) conj.push_back(conjugate_char_index(NT.table, phi));
        std::sort(conj.begin(), conj.end());
        CHECK(orbit_set.count(conj) == 1);
    }
}

TEST_CASE("orbits from generators equal orbits from all elements") {
    for (auto& [family, params] : std::vector<std::pair<std::string, std::vector<long long>>>{
             {"symmetric", {4}}, {"frobenius", {7, 3}}, {"dicyclic", {3}}}) {
        FiniteGroup G = build_family(family, params, GroupOptions{});
        for (const Subgroup& N : some_normal_subgroups(G)) {
            SubgroupTable NT = make_subgroup_table(G, N);
            InertiaData from_gens = action_on_irr(G, NT, {}, family);
            std::vector<int> everyone;
            for (int i = 1; i < G.order(); ++i) everyone.push_back(i);
            InertiaData from_all = action_on_irr(G, NT, everyone, family);
            CHECK(from_gens.orbits == from_all.orbits);
        }
    }
}

TEST_CASE("verdict names") {
    CHECK(std::string(verdict_name(Verdict::Pass)) == "pass");
    CHECK(std::string(verdict_name(Verdict::Fail)) == "fail");
    CHECK(std::string(verdict_name(Verdict::Vacuous)) == "vacuous");
    CHECK(std::string(verdict_name(Verdict::NotApplicable)) == "not-applicable");
    CHECK(std::string(verdict_name(Verdict::ConditionalSkipped)) == "conditional-skipped");
}

TEST_CASE("frattini bound check") {
    auto run = [](const FiniteGroup& G, const std::string& name) {
        return check_frattini_bound(G, name);
    };

    CheckReport r = run(make("symmetric", {3}), "S3");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.hypotheses_verified);
    CHECK(r.lhs == "2");
    CHECK(r.rhs == "2");

    r = run(make("frobenius", {5, 4}), "F20");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "4");
    CHECK(r.rhs == "2");

    r = run(make("dihedral", {5}), "D10");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "4");
    CHECK(r.rhs == "2");

    r = run(build_ea9_q8(), "EA9sQ8");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "8");
    CHECK(r.rhs == "4");

    // hypothesis failures surface as not-applicable, never as errors
    CHECK(run(make("cyclic", {1}), "C1").verdict == Verdict::NotApplicable);
    CHECK(run(make("cyclic", {6}), "C6").verdict == Verdict::NotApplicable);
    CHECK(run(make("dicyclic", {2}), "Q8").verdict == Verdict::NotApplicable);
    CHECK(run(make("alternating", {5}), "A5").verdict == Verdict::NotApplicable);
    CHECK(run(make("cyclic", {9}), "C9").verdict == Verdict::NotApplicable);
}

TEST_CASE("strongly real average bound check") {
    auto run = [](const FiniteGroup& G, const std::string& name) {
        return check_acd_plus_bound(G, character_table(G), name);
    };

    CheckReport r = run(make("symmetric", {3}), "S3");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "4/3"); // sharp
    CHECK(r.rhs == "4/3");

    r = run(make("frobenius", {5, 4}), "F20");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "2/1");

    r = run(make("dihedral", {5}), "D10");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.lhs == "3/2");

    // whole group odd: the Sylow 2-subgroup is trivial
    r = run(make("cyclic", {3}), "C3");
    CHECK(r.verdict == Verdict::NotApplicable);
    CHECK(r.detail == "Sylow 2-subgroup is trivial");

    CHECK(run(make("cyclic", {6}), "C6").verdict == Verdict::NotApplicable);
}

TEST_CASE("orbit parity check") {
    FiniteGroup S3 = make("symmetric", {3});
    CharacterTable TS3 = character_table(S3);
    Subgroup A3 = derived_subgroup(S3, whole_subgroup(S3));
    CheckReport r = check_orbit_parity(S3, TS3, A3, "S3");
    CHECK(r.verdict == Verdict::Vacuous);
    CHECK(r.detail.find("{2}") != std::string::npos);

    FiniteGroup F21 = make("frobenius", {7, 3});
    CharacterTable TF = character_table(F21);
    auto mins = minimal_normal_subgroups(F21);
    REQUIRE(mins.size() == 1);
    r = check_orbit_parity(F21, TF, mins[0], "F21");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.hypotheses_verified);
    CHECK(r.lhs == "1/1");
    CHECK(r.detail.find("{3,3}") != std::string::npos);

    // no complement: the order-2 subgroup of the cyclic group of order 4
    FiniteGroup C4 = make("cyclic", {4});
    CharacterTable TC4 = character_table(C4);
    Subgroup sq = squares_subgroup(C4);
    REQUIRE(sq.order() == 2);
    CHECK_THROWS_AS(check_orbit_parity(C4, TC4, sq, "C4"), precondition_error);

    // invariant character: a direct factor leaves every character fixed
    FiniteGroup C6 = make("cyclic", {6});
    CharacterTable TC6 = character_table(C6);
    Subgroup C2inC6 = sylow_subgroup(C6, 2);
    REQUIRE(C2inC6.order() == 2);
    CHECK_THROWS_AS(check_orbit_parity(C6, TC6, C2inC6, "C6"), precondition_error);

    // non-normal and nonabelian subgroups are precondition failures
    int t = -1;
    for (int i = 1; i < S3.order(); ++i)
        if (S3.element_order(i) == 2) { t = i; break; }
    CHECK_THROWS_AS(check_orbit_parity(S3, TS3, subgroup_generated(S3, {t}), "S3"),
                    precondition_error);
    FiniteGroup S4 = make("symmetric", {4});
    CharacterTable TS4 = character_table(S4);
    CHECK_THROWS_AS(check_orbit_parity(S4, TS4, derived_subgroup(S4, whole_subgroup(S4)), "S4"),
                    precondition_error);
    CHECK_THROWS_AS(check_orbit_parity(S3, TS3, trivial_subgroup(S3), "S3"), precondition_error);
}

TEST_CASE("odd index extension check") {
    FiniteGroup A4 = make("alternating", {4});
    CharacterTable TA4 = character_table(A4);
    auto mins = minimal_normal_subgroups(A4);
    REQUIRE(mins.size() == 1);
    CheckReport r = check_odd_index_real_extension(A4, TA4, mins[0], "A4");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.hypotheses_verified);

    FiniteGroup C9 = make("cyclic", {9});
    CharacterTable TC9 = character_table(C9);
    auto m9 = minimal_normal_subgroups(C9);
    REQUIRE(m9.size() == 1);
    REQUIRE(m9[0].order() == 3);
    r = check_odd_index_real_extension(C9, TC9, m9[0], "C9");
    CHECK(r.verdict == Verdict::Pass);

    // even index violates the hypothesis
    FiniteGroup S4 = make("symmetric", {4});
    CharacterTable TS4 = character_table(S4);
    CHECK_THROWS_AS(
        check_odd_index_real_extension(S4, TS4, derived_subgroup(S4, whole_subgroup(S4)), "S4"),
        precondition_error);
}

TEST_CASE("counting inequalities check") {
    // G = S5 acting on its simple minimal normal subgroup
    FiniteGroup S5 = make("symmetric", {5});
    CharacterTable TS5 = character_table(S5);
    auto mins = minimal_normal_subgroups(S5);
    REQUIRE(mins.size() == 1);
    REQUIRE(mins[0].order() == 60);

    CheckReport r = check_counting_inequalities(S5, TS5, mins[0], 4, true, true, "S5");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.hypotheses_verified);
    CHECK(r.lhs == "2");
    CHECK(r.rhs == "2");
    CHECK(r.detail.find("(i) n_1 = 2 <= 2 pass") != std::string::npos);
    CHECK(r.detail.find("(iii) 2*n_2 = 0 <=") != std::string::npos);
    CHECK(r.detail.find("(ii) n_1+ = 2 <= 2 pass") != std::string::npos);

    // without the extension assumption nothing is claimed
    r = check_counting_inequalities(S5, TS5, mins[0], 4, false, false, "S5");
    CHECK(r.verdict == Verdict::ConditionalSkipped);
    CHECK(!r.hypotheses_verified);

    // the whole group as its own minimal normal subgroup
    FiniteGroup A5 = make("alternating", {5});
    CharacterTable TA5 = character_table(A5);
    auto m5 = minimal_normal_subgroups(A5);
    REQUIRE(m5.size() == 1);
    REQUIRE(m5[0].order() == 60);
    r = check_counting_inequalities(A5, TA5, m5[0], 4, true, true, "A5");
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.detail.find("invariant case") != std::string::npos);

    // precondition failures: abelian, not minimal, missing degree
    FiniteGroup S4 = make("symmetric", {4});
    CharacterTable TS4 = character_table(S4);
    CHECK_THROWS_AS(
        check_counting_inequalities(S4, TS4, minimal_normal_subgroups(S4)[0], 1, true, true, "S4"),
        precondition_error);
    CHECK_THROWS_AS(check_counting_inequalities(S5, TS5, whole_subgroup(S5), 4, true, true, "S5"),
                    precondition_error);
    CHECK_THROWS_AS(check_counting_inequalities(S5, TS5, mins[0], 7, true, true, "S5"),
                    precondition_error);
}
