// weakunits: model generators, validation, synthesis and theorem certificates.
#include <cstdio>
#include <iostream>

#include "CLI11.hpp"
#include "weakunits/drivers.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/validate.hpp"

using namespace weakunits;

namespace {

struct Args {
    std::string kind, table, file, theorem, out;
    std::uint64_t seed = 0;
    std::size_t budget = 1u << 16;
    long unit = -1;
    bool all_choices = false, allow_invalid = false, recheck = false;
};

void emit(const json& j, const std::string& out) {
    if (out.empty() || out == "-")
        std::cout << j.dump(1) << "\n";
    else
        write_json_file(out, j);
}

ModelPtr load(const std::string& path) { return std::make_shared<const TwoCategoryModel>(model_from_json(read_json_file(path))); }

DriverOptions options(const Args& a) {
    DriverOptions o;
    o.seed = a.seed;
    o.all_choices = a.all_choices;
    o.budget = a.budget;
    o.allow_invalid = a.allow_invalid;
    if (a.unit >= 0) o.unit = static_cast<std::size_t>(a.unit);
    return o;
}

int finish(const Certificate& c, const std::string& out) {
    emit(c.to_json(), out);
    std::cerr << c.tag() << ": " << (c.passed() ? "pass" : "fail") << "\n";
    return exit_code(c);
}

int cmd_gen(const Args& a) {
    TwoCategoryModel m = a.kind == "monoid" ? make_semigroup_model(parse_table(a.table), "monoid") : make_builtin(a.kind);
    auto r = validate_model(m);
    if (!r.valid()) {
        std::cerr << "generated model '" << a.kind << "' fails validation\n";
        return kExitStructural;
    }
    emit(tables_to_json(m.tables()), a.out);
    return kExitPass;
}

int cmd_report(const Args& a) {
    auto cert = read_json_file(a.file);
    std::cout << cert.at("claim").at("tag").get<std::string>() << ": " << cert.at("result").get<std::string>()
              << " (" << cert.at("checked_equations").size() << " equations, seed " << cert.at("seed") << ")\n";
    std::cout << cert.at("summary").dump(1) << "\n";
    if (!a.recheck) return kExitPass;
    auto r = recheck_certificate(cert);
    for (const auto& m : r.mismatches) std::cout << "mismatch: " << m << "\n";
    std::cout << "recheck: " << r.equations << " equations, " << (r.ok ? "all reproduced" : "MISMATCH") << "\n";
    return r.ok ? kExitPass : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weak units in finite strict semi-monoidal 2-categories"};
    app.require_subcommand(1);
    Args a;

    auto* gen = app.add_subcommand("gen", "Write a generated model");
    gen->add_option("kind", a.kind, "m3, z2p, z2p-discrete, zg, chp or monoid")->required();
    gen->add_option("--table", a.table, "Monoid table: comma-separated entries, rows separated by ';'");
    gen->add_option("--out", a.out, "Output file (default stdout)");

    auto* val = app.add_subcommand("validate", "Check every axiom family");
    val->add_option("file", a.file)->required()->check(CLI::ExistingFile);
    val->add_option("--out", a.out);

    auto* fu = app.add_subcommand("find-units", "List unit objects");
    fu->add_option("file", a.file)->required()->check(CLI::ExistingFile);
    fu->add_option("--out", a.out);
    fu->add_flag("--allow-invalid", a.allow_invalid);

    auto* syn = app.add_subcommand("synth", "Synthesize constraint cells");
    syn->add_option("file", a.file)->required()->check(CLI::ExistingFile);
    syn->add_option("--unit", a.unit, "Index into the unit list");
    syn->add_option("--seed", a.seed);
    syn->add_flag("--all-choices", a.all_choices, "Every constraint pack");
    syn->add_option("--budget", a.budget);
    syn->add_option("--out", a.out);
    syn->add_flag("--allow-invalid", a.allow_invalid);

    auto* ver = app.add_subcommand("verify", "Verify a theorem and write its certificate");
    ver->add_option("theorem", a.theorem)->required()->check(CLI::IsMember({"A", "B", "C", "E", "dim1", "actions"}));
    ver->add_option("file", a.file)->required()->check(CLI::ExistingFile);
    ver->add_option("--seed", a.seed);
    ver->add_flag("--all-choices", a.all_choices);
    ver->add_option("--budget", a.budget);
    ver->add_option("--out", a.out);
    ver->add_flag("--allow-invalid", a.allow_invalid);

    auto* rep = app.add_subcommand("report", "Summarize a certificate");
    rep->add_option("certificate", a.file)->required()->check(CLI::ExistingFile);
    rep->add_flag("--recheck", a.recheck, "Re-evaluate every equation with the kernel");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitStructural;
    }

    try {
        if (*gen) return cmd_gen(a);
        if (*val) {
            auto t = tables_from_json(read_json_file(a.file));
            return finish(run_validate(t), a.out);
        }
        if (*fu) return finish(run_find_units(load(a.file), options(a)), a.out);
        if (*syn) return finish(run_synth(load(a.file), options(a)), a.out);
        if (*ver) return finish(run_verify(load(a.file), a.theorem, options(a)), a.out);
        if (*rep) return cmd_report(a);
    } catch (const StructuralError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        for (const auto& i : e.issues()) std::cerr << "  " << i << "\n";
        return kExitStructural;
    } catch (const json::exception& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const BoundaryError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitStructural;
    } catch (const std::exception& e) {
        std::cerr << "failure: " << e.what() << "\n";
        return kExitMathFailure;
    }
    return kExitStructural;
}
