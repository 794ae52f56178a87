#include "doctest.h"
#include "support.hpp"
#include "weakunits/drivers.hpp"
#include "weakunits/generators.hpp"

using namespace wu_test;

namespace {

ModelPtr shared(const std::string& kind) { return std::make_shared<const TwoCategoryModel>(make_builtin(kind)); }

json through_text(const Certificate& c) { return json::parse(c.to_json().dump()); }

ModelPtr broken_zg() {
    auto zg = make_zg();
    auto t = zg.tables();
    t.vcomp[cell_named(zg, "e=>u:1").index() * t.n2() + cell_named(zg, "u=>e:1").index()] = cell_named(zg, "e=>e:1");
    return std::make_shared<const TwoCategoryModel>(t);
}

}  // namespace

TEST_SUITE("drivers") {
    TEST_CASE("every verification passes on the shipped models and rechecks") {
        for (const std::string k : {"m3", "z2p", "zg", "chp"})
            for (const std::string t : {"A", "B", "C", "E", "actions"}) {
                auto c = run_verify(shared(k), t, {});
                CHECK_MESSAGE(c.passed(), k << " " << t);
                CHECK(exit_code(c) == kExitPass);
                auto j = through_text(c);
                CHECK(j["result"] == "pass");
                CHECK(j["seed"] == 0);
                CHECK_FALSE(j["claim"]["statement"].get<std::string>().empty());
                auto r = recheck_certificate(j);
                CHECK_MESSAGE(r.ok, k << " " << t);
                CHECK(r.equations == j["checked_equations"].size());
            }
    }

    TEST_CASE("seeds are recorded") {
        DriverOptions o;
        o.seed = 17;
        auto j = through_text(run_synth(shared("zg"), o));
        CHECK(j["seed"] == 17);
    }

    TEST_CASE("an invalid model gives a named counterexample and exit 1") {
        auto c = run_verify_A(broken_zg(), {});
        CHECK(exit_code(c) == kExitMathFailure);
        auto j = through_text(c);
        REQUIRE_FALSE(j["counterexamples"].empty());
        CHECK(j["counterexamples"][0]["axiom"] == "hom-associativity");
        CHECK(recheck_certificate(j).ok);
    }

    TEST_CASE("validation certificates recheck their violation counts") {
        auto j = through_text(run_validate(broken_zg()->tables()));
        CHECK(j["result"] == "fail");
        CHECK(recheck_certificate(j).ok);
        j["summary"]["families"]["hom-associativity"]["violations"] = 0;
        CHECK_FALSE(recheck_certificate(j).ok);
    }

    TEST_CASE("tampered equations are caught on recheck") {
        auto j = through_text(run_verify_C(shared("zg"), {}));
        REQUIRE_FALSE(j["checked_equations"].empty());
        auto& e = j["checked_equations"][0];
        e["lhs_value"] = e["lhs_value"].get<std::uint32_t>() + 1;
        CHECK_FALSE(recheck_certificate(j).ok);
    }

    TEST_CASE("dimension 1 rejects a model with non-identity 2-cells") {
        auto c = run_verify_dim1(shared("zg"), {});
        CHECK(exit_code(c) == kExitMathFailure);
        CHECK(run_verify_dim1(shared("z2p-discrete"), {}).passed());
    }

    TEST_CASE("all choices enumerates every pack") {
        DriverOptions o;
        o.all_choices = true;
        auto c = run_synth(shared("zg"), o);
        CHECK(c.passed());
        for (const auto& u : c.summary()["units"]) CHECK(u["packs"] == 16);
        o.budget = 3;
        CHECK_FALSE(run_synth(shared("zg"), o).passed());
    }

    TEST_CASE("structural errors are thrown, not reported") {
        CHECK_THROWS_AS(run_verify(shared("m3"), "Z", {}), StructuralError);
        DriverOptions o;
        o.unit = 5;
        CHECK_THROWS_AS(run_synth(shared("m3"), o), StructuralError);
        auto t = make_m3().tables();
        t.vcomp.pop_back();
        CHECK_THROWS_AS(run_validate(t), StructuralError);
    }
}
