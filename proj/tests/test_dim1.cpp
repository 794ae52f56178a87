#include "doctest.h"
#include "support.hpp"
#include "weakunits/dim1.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/units.hpp"

using namespace wu_test;

namespace {

// Commutative monoid tables with a unit element e: e is the only unit.
std::vector<std::vector<int>> random_group_table(Gen& g, int& unit) {
    // Z/n with a relabelling
    int n = 2 + static_cast<int>(g.below(4));
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[g.below(i + 1)]);
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[perm[a]][perm[b]] = perm[(a + b) % n];
    unit = perm[0];
    return t;
}

}  // namespace

TEST_SUITE("dim1") {
    TEST_CASE("strict unit of M3") {
        auto m = make_m3();
        auto units = find_units_1(m);
        REQUIRE(units.size() == 1);
        CHECK(units[0].first == ObjId(0));
        CHECK(units[0].second == m.id1(ObjId(0)));
        auto u = construct_lr_1(m, units[0].first, units[0].second);
        for (std::uint32_t x = 0; x < 3; ++x) {
            CHECK(u.lambda[x] == m.id1(ObjId(x)));
            CHECK(u.rho[x] == m.id1(ObjId(x)));
        }
        Recorder rec(m);
        CHECK(verify_kelly_1(rec, u).holds());
        CHECK(verify_assoc_1(rec, u));
        CHECK(canonical_unit_iso_1(m, u, u) == m.id1(ObjId(0)));
    }

    TEST_CASE("Z2P-discrete has two units related by u") {
        auto m = make_builtin("z2p-discrete");
        auto I = object_named(m, "I");
        auto e = arrow_named(m, "e"), uu = arrow_named(m, "u");
        auto units = find_units_1(m);
        REQUIRE(units.size() == 2);
        std::vector<Unit1> built;
        for (auto [i, a] : units) {
            CHECK(i == I);
            auto u = construct_lr_1(m, i, a);
            // I f = f on hom(I,I), so lambda_I = rho_I = alpha
            CHECK(u.lambda[I.index()] == a);
            CHECK(u.rho[I.index()] == a);
            auto X = object_named(m, "X");
            CHECK(u.lambda[X.index()] == m.id1(X));
            Recorder rec(m);
            auto r = verify_kelly_1(rec, u);
            CHECK(r.holds());
            CHECK(verify_assoc_1(rec, u));
            built.push_back(u);
        }
        const Unit1& ue = built[0].alpha == e ? built[0] : built[1];
        const Unit1& uu1 = built[0].alpha == e ? built[1] : built[0];
        CHECK(canonical_unit_iso_1(m, ue, uu1) == uu);
        CHECK(canonical_unit_iso_1(m, uu1, ue) == uu);
        CHECK(canonical_unit_iso_1(m, ue, ue) == e);
    }

    TEST_CASE("a corrupted lambda breaks the Kelly axiom at a named pair") {
        auto m = make_builtin("z2p-discrete");
        auto units = find_units_1(m);
        auto u = construct_lr_1(m, units[0].first, units[0].second);
        auto I = object_named(m, "I");
        u.lambda[I.index()] = u.lambda[I.index()] == arrow_named(m, "e") ? arrow_named(m, "u") : arrow_named(m, "e");
        Recorder rec(m);
        auto r = verify_kelly_1(rec, u);
        CHECK_FALSE(r.kelly);
        CHECK_FALSE(r.holds());
        bool named = false;
        for (const auto& f : r.failures) named |= f == "Kelly axiom at (I,I)";
        CHECK(named);
    }

    TEST_CASE("non-cancellable idempotent has no constraints") {
        auto m = make_semigroup_model({{0, 0}, {0, 0}}, "null");
        CHECK(find_units_1(m).empty());
        CHECK_THROWS_AS(construct_lr_1(m, ObjId(0), m.id1(ObjId(0))), UniquenessError);
    }

    TEST_CASE("non-discrete models are rejected") {
        CHECK_THROWS_AS(find_units_1(make_zg()), CertificationError);
    }

    TEST_CASE("property: cyclic groups have one unit and satisfy every axiom") {
        Gen g(17);
        for (int trial = 0; trial < 40; ++trial) {
            int unit = 0;
            auto m = make_semigroup_model(random_group_table(g, unit), "cyclic");
            auto units = find_units_1(m);
            REQUIRE(units.size() == 1);
            CHECK(units[0].first == ObjId(static_cast<std::uint32_t>(unit)));
            auto u = construct_lr_1(m, units[0].first, units[0].second);
            Recorder rec(m);
            CHECK(verify_kelly_1(rec, u).holds());
            CHECK(verify_assoc_1(rec, u));
        }
    }

    TEST_CASE("two-dimensional synthesis degenerates to the 1-dimensional one") {
        for (std::string name : {"m3", "z2p-discrete"}) {
            auto m = make_builtin(name);
            for (const auto& uo : find_unit_objects(m)) {
                auto u1 = construct_lr_1(m, uo.unit, uo.alpha);
                for (std::uint64_t seed : {0u, 1u, 2u, 3u}) {
                    auto p = synth_constraints(m, uo, seed);
                    CHECK(p.lambda == u1.lambda);
                    CHECK(p.rho == u1.rho);
                }
            }
            CHECK(find_unit_objects(m).size() == find_units_1(m).size());
        }
    }
}
