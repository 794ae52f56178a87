#include <array>

#include "doctest.h"
#include "support.hpp"
#include "weakunits/arrowcat.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/validate.hpp"

using namespace wu_test;

namespace {

std::shared_ptr<const TwoCategoryModel> shared(TwoCategoryModel m) {
    return std::make_shared<const TwoCategoryModel>(std::move(m));
}

// Counts squares and cylinders from raw quadruple loops.
std::pair<std::size_t, std::size_t> naive_counts(const TwoCategoryModel& m) {
    std::vector<std::array<std::uint32_t, 5>> sq;
    const auto n1 = m.one_cell_count(), n2 = m.two_cell_count();
    for (std::uint32_t x = 0; x < n1; ++x)
        for (std::uint32_t y = 0; y < n1; ++y)
            for (std::uint32_t f0 = 0; f0 < n1; ++f0)
                for (std::uint32_t f1 = 0; f1 < n1; ++f1) {
                    auto a = m.comp1(OneCellId(x), OneCellId(f1));
                    auto b = m.comp1(OneCellId(f0), OneCellId(y));
                    if (!a.valid() || !b.valid()) continue;
                    for (std::uint32_t F = 0; F < n2; ++F)
                        if (m.src(TwoCellId(F)) == a && m.dst(TwoCellId(F)) == b) sq.push_back({x, y, f0, f1, F});
                }
    std::size_t cyl = 0;
    for (const auto& s : sq)
        for (const auto& t : sq) {
            if (s[0] != t[0] || s[1] != t[1]) continue;
            for (std::uint32_t a = 0; a < n2; ++a)
                for (std::uint32_t b = 0; b < n2; ++b) {
                    TwoCellId m0(a), m1(b);
                    if (m.src(m0) != OneCellId(s[2]) || m.dst(m0) != OneCellId(t[2])) continue;
                    if (m.src(m1) != OneCellId(s[3]) || m.dst(m1) != OneCellId(t[3])) continue;
                    auto l = m.vcomp(TwoCellId(s[4]), m.hcomp(m0, m.id2(OneCellId(s[1]))));
                    auto r = m.vcomp(m.hcomp(m.id2(OneCellId(s[0])), m1), TwoCellId(t[4]));
                    cyl += l == r;
                }
        }
    return {sq.size(), cyl};
}

}  // namespace

TEST_SUITE("arrowcat") {
    TEST_CASE("arrow model of a discrete model is a copy of it") {
        // only identity 1-cells: one square per pair of equal identities
        auto am = build_arrow_model(shared(make_m3()));
        CHECK(am.model().object_count() == 3);
        CHECK(am.model().one_cell_count() == 3);
        CHECK(am.model().two_cell_count() == 3);
        CHECK(validate_model(am.model()).valid());
    }

    TEST_CASE("arrow model of ZG") {
        auto am = build_arrow_model(shared(make_zg()));
        CHECK(am.model().object_count() == am.base().one_cell_count());
        CHECK(am.model().one_cell_count() == 33);
        CHECK(am.model().two_cell_count() == 513);
        auto rep = validate_model(am.model());
        CHECK(rep.valid());
        for (std::uint32_t i = 0; i < am.model().one_cell_count(); ++i) {
            OneCellId f(i);
            CHECK(am.find(am.square(f)) == f);
        }
    }

    TEST_CASE("every builtin arrow model is valid and has the naive size") {
        for (const auto& name : builtin_model_names()) {
            auto am = build_arrow_model(shared(make_builtin(name)));
            CHECK_MESSAGE(validate_model(am.model()).valid(), name);
            auto [n1, n2] = naive_counts(am.base());
            CHECK_MESSAGE(am.model().one_cell_count() == n1, name);
            CHECK_MESSAGE(am.model().two_cell_count() == n2, name);
        }
    }

    TEST_CASE("budget is enforced") {
        CHECK_THROWS_AS(build_arrow_model(shared(make_zg()), 20), CertificationError);
    }

    TEST_CASE("unit morphisms lift and both routes agree") {
        for (const auto& name : builtin_model_names()) {
            auto base = shared(make_builtin(name));
            auto am = build_arrow_model(base);
            auto units = find_unit_objects(*base);
            for (const auto& s : units)
                for (const auto& t : units) {
                    auto sp = synth_constraints(*base, s, std::uint64_t{0});
                    auto tp = synth_constraints(*base, t, std::uint64_t{0});
                    for (const auto& f : enumerate_unit_morphisms(*base, s, t)) {
                        Recorder rec(*base);
                        Recorder arec(am.model(), nullptr, "arrow");
                        auto r = verify_theorem_B(am, s, sp, t, tp, f, rec, &arec);
                        CHECK_MESSAGE(r.direct, name << ": " << r.failure);
                        CHECK_MESSAGE(r.lifted_unit, name << ": " << r.failure);
                        CHECK_MESSAGE(r.projection, name << ": " << r.failure);
                        CHECK(r.routes_agree);
                    }
                }
        }
    }

    TEST_CASE("a wrong target associator is caught by both routes") {
        auto base = shared(make_zg());
        auto am = build_arrow_model(base);
        auto units = find_unit_objects(*base);
        auto sp = synth_constraints(*base, units[0], std::uint64_t{0});
        auto tp = synth_constraints(*base, units[0], std::uint64_t{0});
        auto twin = parallel_twin(*base, tp.A);
        REQUIRE(twin.has_value());
        tp.A = *twin;
        auto f = enumerate_unit_morphisms(*base, units[0], units[0]).front();
        Recorder rec(*base);
        auto r = verify_theorem_B(am, units[0], sp, units[0], tp, f, rec, nullptr);
        CHECK_FALSE(r.direct);
        CHECK_FALSE(r.projection);
        CHECK(r.routes_agree);
    }
}
