#include <set>

#include "doctest.h"
#include "support.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/io.hpp"
#include "weakunits/validate.hpp"

using namespace weakunits;
using namespace wu_test;

namespace {

// Brute-force check of every axiom, straight from the definitions, for tiny models.
bool naive_valid(const TwoCategoryModel& m) {
    const auto n0 = m.object_count(), n1 = m.one_cell_count(), n2 = m.two_cell_count();
    auto O = [](std::size_t i) { return ObjId(static_cast<std::uint32_t>(i)); };
    auto F = [](std::size_t i) { return OneCellId(static_cast<std::uint32_t>(i)); };
    auto C = [](std::size_t i) { return TwoCellId(static_cast<std::uint32_t>(i)); };
    auto vc = [&](TwoCellId a, TwoCellId b) { return m.dst(a) == m.src(b); };
    auto hc = [&](TwoCellId a, TwoCellId b) { return m.dst(m.src(a)) == m.src(m.src(b)); };
    auto cc = [&](OneCellId f, OneCellId g) { return m.dst(f) == m.src(g); };

    for (std::size_t x = 0; x < n0; ++x)
        if (m.src(m.id1(O(x))) != O(x) || m.dst(m.id1(O(x))) != O(x)) return false;
    for (std::size_t f = 0; f < n1; ++f) {
        if (m.comp1(m.id1(m.src(F(f))), F(f)) != F(f) || m.comp1(F(f), m.id1(m.dst(F(f)))) != F(f)) return false;
        for (std::size_t g = 0; g < n1; ++g) {
            if (cc(F(f), F(g))) {
                auto h = m.comp1(F(f), F(g));
                if (m.src(h) != m.src(F(f)) || m.dst(h) != m.dst(F(g))) return false;
                for (std::size_t k = 0; k < n1; ++k)
                    if (cc(F(g), F(k)) &&
                        m.comp1(h, F(k)) != m.comp1(F(f), m.comp1(F(g), F(k))))
                        return false;
            }
            auto t = m.tensor(F(f), F(g));
            if (m.src(t) != m.tensor(m.src(F(f)), m.src(F(g))) || m.dst(t) != m.tensor(m.dst(F(f)), m.dst(F(g))))
                return false;
            if (m.tensor(m.id2(F(f)), m.id2(F(g))) != m.id2(t)) return false;
            for (std::size_t k = 0; k < n1; ++k) {
                if (m.tensor(t, F(k)) != m.tensor(F(f), m.tensor(F(g), F(k)))) return false;
                for (std::size_t l = 0; l < n1; ++l)
                    if (cc(F(f), F(k)) && cc(F(g), F(l)) &&
                        m.tensor(m.comp1(F(f), F(k)), m.comp1(F(g), F(l))) !=
                            m.comp1(m.tensor(F(f), F(g)), m.tensor(F(k), F(l))))
                        return false;
            }
            if (cc(F(f), F(g)) && m.hcomp(m.id2(F(f)), m.id2(F(g))) != m.id2(m.comp1(F(f), F(g)))) return false;
        }
        if (m.src(m.id2(F(f))) != F(f) || m.dst(m.id2(F(f))) != F(f)) return false;
    }
    for (std::size_t x = 0; x < n0; ++x)
        for (std::size_t y = 0; y < n0; ++y) {
            if (m.tensor(m.id1(O(x)), m.id1(O(y))) != m.id1(m.tensor(O(x), O(y)))) return false;
            for (std::size_t z = 0; z < n0; ++z)
                if (m.tensor(m.tensor(O(x), O(y)), O(z)) != m.tensor(O(x), m.tensor(O(y), O(z)))) return false;
        }
    for (std::size_t a = 0; a < n2; ++a) {
        auto A = C(a);
        if (m.vcomp(m.id2(m.src(A)), A) != A || m.vcomp(A, m.id2(m.dst(A))) != A) return false;
        if (m.hcomp(m.id2(m.src(m.src(A))), A) != A || m.hcomp(A, m.id2(m.dst(m.src(A)))) != A) return false;
        for (std::size_t b = 0; b < n2; ++b) {
            auto B = C(b);
            auto t = m.tensor(A, B);
            if (m.src(t) != m.tensor(m.src(A), m.src(B)) || m.dst(t) != m.tensor(m.dst(A), m.dst(B))) return false;
            if (vc(A, B)) {
                auto v = m.vcomp(A, B);
                if (m.src(v) != m.src(A) || m.dst(v) != m.dst(B)) return false;
            }
            if (hc(A, B)) {
                auto h = m.hcomp(A, B);
                if (m.src(h) != m.comp1(m.src(A), m.src(B)) || m.dst(h) != m.comp1(m.dst(A), m.dst(B))) return false;
            }
            for (std::size_t c = 0; c < n2; ++c) {
                auto Cc = C(c);
                if (m.tensor(t, Cc) != m.tensor(A, m.tensor(B, Cc))) return false;
                if (vc(A, B) && vc(B, Cc) && m.vcomp(m.vcomp(A, B), Cc) != m.vcomp(A, m.vcomp(B, Cc))) return false;
                if (hc(A, B) && hc(B, Cc) && m.hcomp(m.hcomp(A, B), Cc) != m.hcomp(A, m.hcomp(B, Cc))) return false;
                for (std::size_t d = 0; d < n2; ++d) {
                    auto D = C(d);
                    if (vc(A, B) && vc(Cc, D) && hc(A, Cc)) {
                        if (m.hcomp(m.vcomp(A, B), m.vcomp(Cc, D)) != m.vcomp(m.hcomp(A, Cc), m.hcomp(B, D)))
                            return false;
                    }
                    if (vc(A, B) && vc(Cc, D) &&
                        m.tensor(m.vcomp(A, B), m.vcomp(Cc, D)) != m.vcomp(m.tensor(A, Cc), m.tensor(B, D)))
                        return false;
                    if (hc(A, B) && hc(Cc, D) &&
                        m.tensor(m.hcomp(A, B), m.hcomp(Cc, D)) != m.hcomp(m.tensor(A, Cc), m.tensor(B, D)))
                        return false;
                }
            }
        }
    }
    return true;
}

ModelTables with_vcomp(ModelTables t, TwoCellId a, TwoCellId b, TwoCellId v) {
    t.vcomp[a.index() * t.n2() + b.index()] = v;
    return t;
}
ModelTables with_hcomp(ModelTables t, TwoCellId a, TwoCellId b, TwoCellId v) {
    t.hcomp[a.index() * t.n2() + b.index()] = v;
    return t;
}
ModelTables with_tensor2(ModelTables t, TwoCellId a, TwoCellId b, TwoCellId v) {
    t.tensor2[a.index() * t.n2() + b.index()] = v;
    return t;
}

}  // namespace

TEST_SUITE("kernel") {
    TEST_CASE("generated models validate and agree with the brute-force oracle") {
        for (const auto& name : builtin_model_names()) {
            CAPTURE(name);
            auto m = make_builtin(name);
            auto r = validate_model(m);
            CHECK(r.valid());
            CHECK(naive_valid(m));
        }
        auto zgz = make_puff({"zgz", true, 2, true});
        CHECK(validate_model(zgz).valid());
        CHECK(naive_valid(zgz));
    }

    TEST_CASE("model sizes") {
        auto zg = make_zg();
        CHECK(zg.object_count() == 2);
        CHECK(zg.one_cell_count() == 3);
        CHECK(zg.two_cell_count() == 9);
        CHECK(make_z2p().two_cell_count() == 3);
        CHECK(make_chp().two_cell_count() == 5);
        CHECK(make_m3().object_count() == 3);
    }

    TEST_CASE("ZG tables follow label arithmetic") {
        auto m = make_zg();
        for (std::uint32_t i = 0; i + 1 < m.two_cell_count(); ++i)
            for (std::uint32_t j = 0; j + 1 < m.two_cell_count(); ++j) {
                TwoCellId a(i), b(j);
                auto x = decode_zg(m, a), y = decode_zg(m, b);
                auto h = decode_zg(m, m.hcomp(a, b));
                CHECK(h.from == (x.from ^ y.from));
                CHECK(h.to == (x.to ^ y.to));
                CHECK(h.label == (x.label + y.label) % 2);
                auto t = decode_zg(m, m.tensor(a, b));
                CHECK(t.label == (x.label + y.label) % 2);
                if (x.to == y.from) {
                    auto v = decode_zg(m, m.vcomp(a, b));
                    CHECK(v.from == x.from);
                    CHECK(v.to == y.to);
                    CHECK(v.label == (x.label + y.label) % 2);
                }
            }
        // every ZG 2-cell between endo-arrows of I is invertible; inverse negates the label
        for (std::uint32_t i = 0; i + 1 < m.two_cell_count(); ++i) {
            auto inv = m.inverse(TwoCellId(i));
            REQUIRE(inv);
            auto x = decode_zg(m, TwoCellId(i)), y = decode_zg(m, *inv);
            CHECK(y.from == x.to);
            CHECK(y.label == x.label);
        }
    }

    TEST_CASE("zero endo-arrow is not invertible up to 2-cells") {
        auto m = make_puff({"zgz", true, 2, true});
        auto z = arrow_named(m, "z");
        CHECK(m.comp1(z, arrow_named(m, "u")) == z);
        CHECK(m.invertible(m.id2(z)));
    }

    TEST_CASE("structural errors are reported separately") {
        auto t = make_zg().tables();
        t.vcomp[0] = TwoCellId{};
        t.hcomp[1] = TwoCellId(99);
        auto r = validate_tables(t);
        CHECK_FALSE(r.structurally_sound());
        CHECK(r.structural.size() == 2);
        for (const auto& f : r.families) CHECK(f.violations == 0);
        CHECK_THROWS_AS(TwoCategoryModel{t}, StructuralError);
        auto d = make_zg().tables();
        d.two_cells[1].dst = OneCellId(77);
        CHECK_FALSE(validate_tables(d).structurally_sound());
    }

    TEST_CASE("spurious entries for non-composable pairs are structural") {
        auto t = make_zg().tables();
        auto idxx = cell_named(make_zg(), "id_id_X");
        t.vcomp[idxx.index() * t.n2() + 0] = TwoCellId(0);
        CHECK_FALSE(validate_tables(t).structurally_sound());
    }

    TEST_CASE("injected faults are caught by their axiom family") {
        auto zg = make_zg();
        auto c = [&](const char* n) { return cell_named(zg, n); };
        auto run = [](const ModelTables& t) {
            auto r = validate_tables(t);
            REQUIRE(r.structurally_sound());
            return r;
        };

        SUBCASE("boundary") {
            auto t = zg.tables();
            auto e = arrow_named(zg, "e"), u = arrow_named(zg, "u");
            t.comp1[e.index() * t.n1() + u.index()] = e;
            t.comp1[u.index() * t.n1() + u.index()] = u;
            auto r = run(t);
            CHECK(r.violation_count("comp1-unit") > 0);
            auto t2 = zg.tables();
            t2.tensor1[u.index() * t2.n1() + u.index()] = arrow_named(zg, "id_X");
            CHECK(run(t2).violation_count("boundary") > 0);
        }
        SUBCASE("comp1") {
            auto zgz = make_puff({"zgz", true, 2, true});
            auto t = zgz.tables();
            auto u = arrow_named(zgz, "u"), z = arrow_named(zgz, "z");
            t.comp1[u.index() * t.n1() + z.index()] = u;
            CHECK(run(t).violation_count("comp1-associativity") > 0);
        }
        SUBCASE("hom-unit") {
            auto r = run(with_vcomp(zg.tables(), c("e=>e:0"), c("e=>u:1"), c("e=>u:0")));
            CHECK(r.violation_count("hom-unit") > 0);
        }
        SUBCASE("hom-associativity") {
            auto r = run(with_vcomp(zg.tables(), c("e=>u:1"), c("u=>e:1"), c("e=>e:1")));
            CHECK(r.violation_count("hom-associativity") > 0);
        }
        SUBCASE("hcomp-unit") {
            auto r = run(with_hcomp(zg.tables(), c("e=>e:0"), c("e=>u:1"), c("e=>u:0")));
            CHECK(r.violation_count("hcomp-unit") > 0);
        }
        SUBCASE("hcomp-associativity") {
            auto r = run(with_hcomp(zg.tables(), c("e=>u:1"), c("u=>e:1"), c("u=>u:1")));
            CHECK(r.violation_count("hcomp-associativity") > 0);
        }
        SUBCASE("interchange") {
            auto r = run(with_hcomp(zg.tables(), c("e=>u:1"), c("u=>e:1"), c("u=>u:1")));
            CHECK(r.violation_count("interchange") > 0);
        }
        SUBCASE("tensor-functoriality") {
            auto r = run(with_tensor2(zg.tables(), c("e=>u:1"), c("u=>e:0"), c("u=>u:0")));
            CHECK(r.violation_count("tensor-functoriality") > 0);
        }
        SUBCASE("tensor-associativity") {
            auto t = make_m3().tables();
            t.tensor_obj[1 * 3 + 1] = ObjId(0);
            CHECK(run(t).violation_count("tensor-associativity") > 0);
        }
    }

    TEST_CASE("property: single-entry corruptions of ZG are always detected") {
        auto zg = make_zg();
        Gen g(20261016);
        int trials = 0;
        for (int i = 0; i < 300; ++i) {
            auto t = zg.tables();
            const auto n2 = t.n2();
            auto a = TwoCellId(static_cast<std::uint32_t>(g.below(n2)));
            auto b = TwoCellId(static_cast<std::uint32_t>(g.below(n2)));
            auto which = g.below(3);
            auto& table = which == 0 ? t.vcomp : which == 1 ? t.hcomp : t.tensor2;
            auto& slot = table[a.index() * n2 + b.index()];
            if (!slot.valid()) continue;
            auto old = slot;
            slot = TwoCellId(static_cast<std::uint32_t>(g.below(n2)));
            if (slot == old) continue;
            ++trials;
            auto r = validate_tables(t);
            CHECK_FALSE(r.valid());
            CHECK(r.valid() == naive_valid(TwoCategoryModel(t)));
        }
        CHECK(trials > 100);
    }

    TEST_CASE("expression evaluation") {
        auto m = make_zg();
        Paster P(m);
        auto a = P.cell(cell_named(m, "e=>u:1")), b = P.cell(cell_named(m, "u=>u:1"));
        auto ex = P.v(a, b);
        CHECK(m.label(P.value(ex)) == "e=>u:0");
        CHECK(evaluate(m, ex) == P.value(ex));
        auto hx = P.h(a, P.id(arrow_named(m, "u")));
        CHECK(m.label(evaluate(m, hx)) == "u=>e:1");
        CHECK(m.label(evaluate(m, P.t(a, a))) == "e=>e:0");
        CHECK_THROWS_AS(P.v(b, a), BoundaryError);

        // unchecked trees report the offending node
        auto bad = make_hcomp(make_lit2(cell_named(m, "e=>u:1")), make_vcomp(make_lit2(b->lit), make_lit2(a->lit)));
        try {
            evaluate(m, bad);
            FAIL("expected a boundary error");
        } catch (const BoundaryError& e) {
            CHECK(e.path() == "root/h[1]");
        }
        auto mixed = make_hcomp(make_lit2(a->lit), make_lit2(cell_named(m, "id_id_X")));
        CHECK_THROWS_AS(evaluate(m, mixed), BoundaryError);
    }

    TEST_CASE("equations require parallel sides") {
        auto m = make_zg();
        Paster P(m);
        Equation ok{"ok", P.v(P.cell(cell_named(m, "e=>u:1")), P.cell(cell_named(m, "u=>e:1"))), P.id(arrow_named(m, "e"))};
        CHECK(check_equation(m, ok).holds);
        Equation bad{"bad", P.cell(cell_named(m, "e=>u:1")), P.id(arrow_named(m, "e"))};
        CHECK_THROWS_AS(check_equation(m, bad), BoundaryError);
    }

    TEST_CASE("JSON round trips") {
        for (const auto& name : builtin_model_names()) {
            auto m = make_builtin(name);
            auto j = tables_to_json(m.tables());
            auto back = model_from_json(json::parse(j.dump()));
            CHECK(model_hash(back.tables()) == model_hash(m.tables()));
            CHECK(tables_to_json(back.tables()) == j);
        }
        auto m = make_zg();
        Paster P(m);
        auto e = P.v(P.t(P.id(P.tensor(P.obj(ObjId(0)), P.arr(OneCellId(1)))), P.cell(TwoCellId(3))), P.cell(TwoCellId(2)));
        auto back = expr2_from_json(json::parse(expr_to_json(e).dump()));
        CHECK(expr_to_json(back) == expr_to_json(e));
        CHECK(evaluate(m, back) == P.value(e));
    }

    TEST_CASE("hash depends on tables only") {
        auto t = make_zg().tables();
        auto h = model_hash(t);
        t.name = "renamed";
        t.one_cell_names[1] = "v";
        CHECK(model_hash(t) == h);
        t.tensor2[0] = TwoCellId(1);
        CHECK(model_hash(t) != h);
        CHECK(model_hash(make_zg().tables()) != model_hash(make_chp().tables()));
    }

    TEST_CASE("malformed JSON is structural") {
        CHECK_THROWS_AS(model_from_json(json::parse(R"({"objects": 3})")), StructuralError);
        auto j = tables_to_json(make_m3().tables());
        j["comp1"].push_back({0, 0, 0});
        CHECK_THROWS_AS(model_from_json(j), StructuralError);
        auto k = tables_to_json(make_m3().tables());
        k["tensor_obj"][0][2] = 9;
        CHECK_THROWS_AS(model_from_json(k), StructuralError);
    }

    TEST_CASE("discrete reduct") {
        auto zg = make_zg();
        auto d = discrete_reduct(zg);
        CHECK(d.is_locally_discrete());
        CHECK(d.one_cell_count() == zg.one_cell_count());
        CHECK(validate_model(d).valid());
        CHECK(model_hash(discrete_reduct(make_z2p()).tables()) == model_hash(make_z2p().tables()));
    }

    TEST_CASE("semigroup tables") {
        auto t = parse_table("0,0;0,0");
        CHECK(t.size() == 2);
        auto m = make_semigroup_model({{0, 0}, {0, 0}}, "null");
        CHECK(validate_model(m).valid());
        CHECK_THROWS_AS(make_semigroup_model({{0, 1}, {1}}), StructuralError);
    }
}
