#include <algorithm>
#include <map>

#include "doctest.h"
#include "support.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/units.hpp"

using namespace wu_test;

namespace {

std::vector<std::string> all_models() { return builtin_model_names(); }

// Brute-force hom functor check, independent of equivalence.cpp.
bool naive_hom_equivalence(const TwoCategoryModel& m, ObjId x, Side side, ObjId a, ObjId b) {
    auto tx = [&](OneCellId f) {
        auto ix = m.id1(x);
        return side == Side::Left ? m.tensor(ix, f) : m.tensor(f, ix);
    };
    auto tc = [&](TwoCellId c) {
        auto ix = m.id2(m.id1(x));
        return side == Side::Left ? m.tensor(ix, c) : m.tensor(c, ix);
    };
    auto xa = side == Side::Left ? m.tensor(x, a) : m.tensor(a, x);
    auto xb = side == Side::Left ? m.tensor(x, b) : m.tensor(b, x);
    auto hom = m.hom(a, b);
    for (auto f : hom)
        for (auto g : hom) {
            std::vector<TwoCellId> images;
            for (auto c : m.cells(f, g)) images.push_back(tc(c));
            std::sort(images.begin(), images.end());
            auto target = m.cells(tx(f), tx(g));
            auto sorted = std::vector<TwoCellId>(target.begin(), target.end());
            std::sort(sorted.begin(), sorted.end());
            if (images != sorted) return false;
        }
    for (auto h : m.hom(xa, xb)) {
        bool hit = false;
        for (auto f : hom)
            for (auto c : m.cells(h, tx(f)))
                if (m.invertible(c)) hit = true;
        if (!hit) return false;
    }
    return true;
}

bool naive_unit(const TwoCategoryModel& m, ObjId i) {
    auto n0 = m.object_count();
    for (std::uint32_t a = 0; a < n0; ++a)
        for (std::uint32_t b = 0; b < n0; ++b)
            for (Side s : {Side::Left, Side::Right})
                if (!naive_hom_equivalence(m, i, s, ObjId(a), ObjId(b))) return false;
    return true;
}

// Equi-arrows II -> I by brute force: some g with invertible cells 1 => fg, gf => 1.
std::size_t naive_unit_count(const TwoCategoryModel& m) {
    std::size_t n = 0;
    for (std::uint32_t i = 0; i < m.object_count(); ++i) {
        ObjId x(i);
        if (!naive_unit(m, x)) continue;
        for (auto f : m.hom(m.tensor(x, x), x)) {
            bool equi = false;
            for (auto g : m.hom(x, m.tensor(x, x))) {
                bool eta = false, eps = false;
                for (auto c : m.cells(m.id1(m.tensor(x, x)), m.comp1(f, g))) eta |= m.invertible(c);
                for (auto c : m.cells(m.comp1(g, f), m.id1(x))) eps |= m.invertible(c);
                equi |= eta && eps;
            }
            n += equi;
        }
    }
    return n;
}

// Short pentagon straight from the tables.
bool raw_short_pentagon(const TwoCategoryModel& m, const UnitObject& u, TwoCellId a) {
    auto i1 = m.id1(u.unit);
    auto ia = m.id2(i1);
    auto al = u.alpha;
    auto aI = m.tensor(al, i1);
    auto aII = m.tensor(m.tensor(al, i1), i1);
    auto lhs = m.vcomp(m.hcomp(m.tensor(ia, a), m.id2(aI)), m.hcomp(m.tensor(a, ia), m.id2(aI)));
    auto rhs = m.hcomp(m.id2(aII), a);
    return lhs.valid() && lhs == rhs;
}

}  // namespace

TEST_SUITE("units") {
    TEST_CASE("unit objects agree with a brute-force search") {
        std::map<std::string, std::size_t> counts;
        for (const auto& name : all_models()) {
            auto m = make_builtin(name);
            auto units = find_unit_objects(m);
            CHECK_MESSAGE(units.size() == naive_unit_count(m), name);
            counts[name] = units.size();
            for (const auto& u : units) {
                CHECK(m.tensor(u.unit, u.unit) == u.unit);
                CHECK(triangle_identities_hold(m, u.alpha_inverse));
            }
        }
        CHECK(counts["m3"] == 1);
        CHECK(counts["zg"] == 2);
    }

    TEST_CASE("the null semigroup has no unit") {
        auto m = make_semigroup_model({{0, 0}, {0, 0}}, "null");
        CHECK(find_unit_objects(m).empty());
        CHECK(naive_unit_count(m) == 0);
    }

    TEST_CASE("every constraint pack of every unit satisfies the pentagons") {
        for (const auto& name : all_models()) {
            auto m = make_builtin(name);
            for (const auto& u : find_unit_objects(m)) {
                auto e = enumerate_constraint_packs(m, u, 4096);
                REQUIRE_FALSE(e.truncated);
                REQUIRE_FALSE(e.packs.empty());
                for (const auto& p : e.packs) {
                    Recorder rec(m);
                    auto r = verify_theorem_A(rec, u, p);
                    CHECK_MESSAGE(r.definitions, name);
                    CHECK_MESSAGE(r.short_pentagon, name);
                    CHECK_MESSAGE(r.full_pentagon, name);
                    CHECK(rec.failures() == 0);
                    CHECK(raw_short_pentagon(m, u, p.A));
                }
            }
        }
    }

    TEST_CASE("ZG has sixteen packs per unit") {
        auto m = make_zg();
        for (const auto& u : find_unit_objects(m)) {
            auto e = enumerate_constraint_packs(m, u, 4096);
            CHECK(e.packs.size() == 16);
        }
    }

    TEST_CASE("the associator does not depend on the chosen constraints") {
        auto m = make_zg();
        for (const auto& u : find_unit_objects(m)) {
            auto all = enumerate_constraint_packs(m, u, 4096).packs;
            REQUIRE(all.size() >= 2);
            for (const auto& p : all) CHECK(p.A == all.front().A);
            for (std::uint64_t seed = 0; seed < 16; ++seed) CHECK(synth_constraints(m, u, seed).A == all.front().A);
        }
    }

    TEST_CASE("seeded synthesis lands in the enumerated set") {
        auto m = make_zg();
        for (const auto& u : find_unit_objects(m)) {
            auto all = enumerate_constraint_packs(m, u, 4096).packs;
            for (std::uint64_t seed = 0; seed < 12; ++seed) {
                auto p = synth_constraints(m, u, seed);
                bool found = std::any_of(all.begin(), all.end(), [&](const ConstraintPack& q) {
                    return q.L == p.L && q.R == p.R && q.lambda == p.lambda && q.rho == p.rho && q.A == p.A;
                });
                CHECK(found);
                CHECK(synth_constraints(m, u, seed).A == p.A);
            }
        }
    }

    TEST_CASE("a twisted associator breaks the pentagon") {
        auto m = make_zg();
        std::size_t broken = 0;
        for (const auto& u : find_unit_objects(m)) {
            auto p = synth_constraints(m, u, std::uint64_t{0});
            auto twin = parallel_twin(m, p.A);
            REQUIRE(twin.has_value());
            Recorder rec(m);
            bool holds = pentagon_holds(rec, u, *twin, "twisted ", false);
            if (!raw_short_pentagon(m, u, *twin)) CHECK_FALSE(holds);
            broken += !holds;
        }
        CHECK(broken > 0);
    }

    TEST_CASE("action pentagons hold on the builtin models") {
        for (const auto& name : all_models()) {
            auto m = make_builtin(name);
            for (const auto& u : find_unit_objects(m)) {
                Recorder rec(m);
                auto r = verify_actions(rec, u, synth_constraints(m, u, std::uint64_t{3}));
                CHECK_MESSAGE(r.left, name);
                CHECK_MESSAGE(r.right, name);
            }
        }
    }

    TEST_CASE("unit morphisms and their equivalence criteria agree") {
        for (const auto& name : all_models()) {
            auto m = make_builtin(name);
            auto units = find_unit_objects(m);
            for (const auto& s : units)
                for (const auto& t : units) {
                    auto sp = synth_constraints(m, s, std::uint64_t{0});
                    auto tp = synth_constraints(m, t, std::uint64_t{0});
                    auto morphs = enumerate_unit_morphisms(m, s, t);
                    CHECK_FALSE(morphs.empty());
                    for (const auto& f : morphs) {
                        CHECK(is_unit_morphism(m, s, t, f));
                        auto r = verify_unitmap_equivalences(m, sp, tp, f);
                        CHECK_MESSAGE(r.agree(), name);
                        CHECK(r.equi);
                        Recorder rec(m);
                        CHECK(semimonoid_map_holds(rec, f, sp.A, tp.A, ""));
                        CHECK(record_unitmap_cells(rec, sp, tp, f, unitmap_cells(m, sp, tp, f), ""));
                    }
                }
        }
    }

    TEST_CASE("units are unique up to unique isomorphism") {
        for (const auto& name : all_models()) {
            auto m = make_builtin(name);
            for (std::uint64_t seed : {0u, 1u, 2u, 7u, 11u, 19u, 23u, 42u}) {
                Recorder rec(m);
                auto r = verify_theorem_C(rec, seed);
                CHECK_MESSAGE(r.holds(), name << ": " << r.failure);
                CHECK(r.pairs == r.units * r.units);
            }
        }
    }

    TEST_CASE("composite unit is a unit") {
        auto m = make_zg();
        auto units = find_unit_objects(m);
        REQUIRE(units.size() == 2);
        auto sp = synth_constraints(m, units[0], std::uint64_t{0});
        auto tp = synth_constraints(m, units[1], std::uint64_t{0});
        auto c = compose_units(m, units[0], sp, units[1], tp);
        CHECK(make_unit_object(m, c.unit, c.alpha).has_value());
    }

    TEST_CASE("Kelly cells have the documented boundaries") {
        auto m = make_zg();
        for (const auto& u : find_unit_objects(m)) {
            auto p = synth_constraints(m, u, std::uint64_t{5});
            for (std::uint32_t x = 0; x < m.object_count(); ++x)
                for (std::uint32_t y = 0; y < m.object_count(); ++y) {
                    ObjId X(x), Y(y);
                    auto kl = kelly_lambda(m, p, X, Y);
                    CHECK(m.src(kl) == p.lambda[m.tensor(X, Y).index()]);
                    CHECK(m.dst(kl) == m.tensor(p.lambda[x], m.id1(Y)));
                    auto kr = kelly_rho(m, p, X, Y);
                    CHECK(m.src(kr) == m.tensor(m.id1(X), p.rho[y]));
                    CHECK(m.dst(kr) == p.rho[m.tensor(X, Y).index()]);
                }
        }
    }
}
