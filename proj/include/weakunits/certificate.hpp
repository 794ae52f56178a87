#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "weakunits/expr.hpp"
#include "weakunits/io.hpp"

namespace weakunits {

inline constexpr int kCertificateSchema = 1;

struct CheckedEquation {
    std::string name, model;
    Equation eq;
    EquationResult result;
    bool expect = true;
};

// Equality of 1-cells, used where 2-cells are all identities.
struct CheckedEquation1 {
    std::string name, model;
    Expr1 lhs, rhs;
    OneCellId lhs_value, rhs_value;
    bool expect = true;
    bool holds() const { return lhs_value == rhs_value; }
};

class Certificate {
public:
    Certificate(std::string tag, std::string statement) : tag_(std::move(tag)), statement_(std::move(statement)) {}

    // A model is either embedded (derivation null) or rebuilt on recheck from
    // its derivation, e.g. {"construction": "arrow", "from": "base"}.
    void add_model(const std::string& label, std::shared_ptr<const TwoCategoryModel> m, json derivation = nullptr);
    bool has_model(const std::string& label) const { return models_.count(label) > 0; }
    const TwoCategoryModel& model(const std::string& label) const;

    bool record(const std::string& name, const std::string& model, const Equation& eq, bool expect = true);
    bool record(const std::string& name, const std::string& model, const Expr1& lhs, const Expr1& rhs,
                bool expect = true);
    void witness(const std::string& name, const std::string& model, json value);
    void counterexample(json c) { counterexamples_.push_back(std::move(c)); }

    json& summary() { return summary_; }
    void set_seed(std::uint64_t s) { seed_ = s; }
    // Overall verdict; defaults to "every equation matched its expectation and no counterexample".
    void set_verdict(bool pass) { verdict_ = pass; }
    bool passed() const;

    const std::vector<CheckedEquation>& equations() const { return equations_; }
    const std::vector<CheckedEquation1>& equations1() const { return equations1_; }
    const std::string& tag() const { return tag_; }

    json to_json() const;

private:
    struct ModelEntry {
        std::shared_ptr<const TwoCategoryModel> model;
        json derivation;
        std::string hash;
    };
    std::string tag_, statement_;
    std::uint64_t seed_ = 0;
    std::map<std::string, ModelEntry> models_;
    std::vector<std::string> model_order_;
    std::vector<CheckedEquation> equations_;
    std::vector<CheckedEquation1> equations1_;
    json witnesses_ = json::array();
    json counterexamples_ = json::array();
    json summary_ = json::object();
    std::optional<bool> verdict_;
};

// Binds a model to an optional certificate; every check is evaluated, and
// recorded when a certificate is attached.
class Recorder {
public:
    explicit Recorder(const TwoCategoryModel& m, Certificate* cert = nullptr, std::string label = "base")
        : p_(m), cert_(cert), label_(std::move(label)) {}

    const Paster& p() const { return p_; }
    const TwoCategoryModel& model() const { return p_.model(); }
    Certificate* certificate() const { return cert_; }
    const std::string& label() const { return label_; }

    bool check(const std::string& name, const Expr2& lhs, const Expr2& rhs, bool expect = true);
    bool check(const std::string& name, const Expr1& lhs, const Expr1& rhs, bool expect = true);
    void witness(const std::string& name, TwoCellId c) const;
    void witness(const std::string& name, OneCellId f) const;
    void witness(const std::string& name, ObjId x) const;

    std::size_t failures() const { return failures_; }
    const std::vector<std::string>& failed_names() const { return failed_; }

private:
    Paster p_;
    Certificate* cert_;
    std::string label_;
    std::size_t failures_ = 0;
    std::vector<std::string> failed_;
};

struct RecheckReport {
    bool ok = true;
    std::size_t equations = 0;
    std::vector<std::string> mismatches;
};

// Rebuilds the models (checking hashes) and re-evaluates every equation.
RecheckReport recheck_certificate(const json& cert);

}  // namespace weakunits
