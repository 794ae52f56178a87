#include "weakunits/certificate.hpp"

#include "weakunits/arrowcat.hpp"
#include "weakunits/validate.hpp"

namespace weakunits {

void Certificate::add_model(const std::string& label, std::shared_ptr<const TwoCategoryModel> m, json derivation) {
    if (!models_.count(label)) model_order_.push_back(label);
    auto hash = model_hash(m->tables());
    models_[label] = {std::move(m), std::move(derivation), std::move(hash)};
}

const TwoCategoryModel& Certificate::model(const std::string& label) const {
    auto it = models_.find(label);
    if (it == models_.end()) throw StructuralError("certificate has no model '" + label + "'");
    return *it->second.model;
}

bool Certificate::record(const std::string& name, const std::string& model_label, const Equation& eq, bool expect) {
    auto r = check_equation(model(model_label), eq);
    equations_.push_back({name, model_label, eq, r, expect});
    return r.holds;
}

bool Certificate::record(const std::string& name, const std::string& model_label, const Expr1& lhs, const Expr1& rhs,
                         bool expect) {
    const auto& m = model(model_label);
    CheckedEquation1 e{name, model_label, lhs, rhs, evaluate(m, lhs), evaluate(m, rhs), expect};
    equations1_.push_back(e);
    return e.holds();
}

void Certificate::witness(const std::string& name, const std::string& model_label, json value) {
    witnesses_.push_back({{"name", name}, {"model", model_label}, {"value", std::move(value)}});
}

bool Certificate::passed() const {
    if (verdict_) return *verdict_;
    if (!counterexamples_.empty()) return false;
    for (const auto& e : equations_)
        if (e.result.holds != e.expect) return false;
    for (const auto& e : equations1_)
        if (e.holds() != e.expect) return false;
    return true;
}

json Certificate::to_json() const {
    json j;
    j["schema_version"] = kCertificateSchema;
    j["claim"] = {{"tag", tag_}, {"statement", statement_}};
    j["seed"] = seed_;
    j["result"] = passed() ? "pass" : "fail";
    j["model_hash"] = model_order_.empty() ? std::string() : models_.at(model_order_.front()).hash;
    json ms = json::array();
    for (const auto& label : model_order_) {
        const auto& e = models_.at(label);
        json mj = {{"label", label}, {"hash", e.hash}};
        if (e.derivation.is_null())
            mj["embedded"] = tables_to_json(e.model->tables());
        else
            mj["derived"] = e.derivation;
        ms.push_back(mj);
    }
    j["models"] = ms;
    j["witnesses"] = witnesses_;
    json eqs = json::array();
    for (const auto& e : equations_) {
        eqs.push_back({{"name", e.name},
                       {"model", e.model},
                       {"lhs", expr_to_json(e.eq.lhs)},
                       {"rhs", expr_to_json(e.eq.rhs)},
                       {"lhs_value", e.result.lhs.value},
                       {"rhs_value", e.result.rhs.value},
                       {"result", e.result.holds},
                       {"expect", e.expect}});
    }
    for (const auto& e : equations1_) {
        eqs.push_back({{"name", e.name},
                       {"model", e.model},
                       {"dimension", 1},
                       {"lhs", expr_to_json(e.lhs)},
                       {"rhs", expr_to_json(e.rhs)},
                       {"lhs_value", e.lhs_value.value},
                       {"rhs_value", e.rhs_value.value},
                       {"result", e.holds()},
                       {"expect", e.expect}});
    }
    j["checked_equations"] = eqs;
    j["counterexamples"] = counterexamples_;
    j["summary"] = summary_;
    return j;
}

bool Recorder::check(const std::string& name, const Expr1& lhs, const Expr1& rhs, bool expect) {
    bool holds = cert_ ? cert_->record(name, label_, lhs, rhs, expect) : evaluate(model(), lhs) == evaluate(model(), rhs);
    if (holds != expect) {
        ++failures_;
        failed_.push_back(name);
    }
    return holds;
}

bool Recorder::check(const std::string& name, const Expr2& lhs, const Expr2& rhs, bool expect) {
    bool holds;
    Equation eq{name, lhs, rhs};
    if (cert_)
        holds = cert_->record(name, label_, eq, expect);
    else
        holds = check_equation(model(), eq).holds;
    if (holds != expect) {
        ++failures_;
        failed_.push_back(name);
    }
    return holds;
}

void Recorder::witness(const std::string& name, TwoCellId c) const {
    if (cert_) cert_->witness(name, label_, {{"2-cell", c.value}, {"label", model().label(c)}});
}
void Recorder::witness(const std::string& name, OneCellId f) const {
    if (cert_) cert_->witness(name, label_, {{"1-cell", f.value}, {"label", model().label(f)}});
}
void Recorder::witness(const std::string& name, ObjId x) const {
    if (cert_) cert_->witness(name, label_, {{"object", x.value}, {"label", model().label(x)}});
}

RecheckReport recheck_certificate(const json& cert) {
    RecheckReport r;
    auto miss = [&](std::string why) {
        r.ok = false;
        r.mismatches.push_back(std::move(why));
    };
    if (!cert.is_object() || cert.value("schema_version", 0) != kCertificateSchema)
        throw StructuralError("not a certificate of schema version " + std::to_string(kCertificateSchema));

    std::map<std::string, std::shared_ptr<const TwoCategoryModel>> models;
    for (const auto& mj : cert.at("models")) {
        const auto label = mj.at("label").get<std::string>();
        std::shared_ptr<const TwoCategoryModel> m;
        if (mj.contains("embedded")) {
            m = std::make_shared<const TwoCategoryModel>(model_from_json(mj.at("embedded")));
        } else {
            const auto& d = mj.at("derived");
            const auto from = d.at("from").get<std::string>();
            if (!models.count(from)) throw StructuralError("model '" + label + "' derives from unknown '" + from + "'");
            if (d.at("construction") != "arrow") throw StructuralError("unknown construction for '" + label + "'");
            m = build_arrow_model(models.at(from), d.value("budget", kDefaultArrowBudget)).shared_model();
        }
        if (model_hash(m->tables()) != mj.at("hash").get<std::string>()) miss("model '" + label + "': hash differs");
        models[label] = m;
    }

    for (const auto& e : cert.at("checked_equations")) {
        ++r.equations;
        const auto name = e.at("name").get<std::string>();
        const auto label = e.at("model").get<std::string>();
        if (!models.count(label)) {
            miss(name + ": unknown model '" + label + "'");
            continue;
        }
        try {
            if (e.value("dimension", 2) == 1) {
                const auto& m = *models.at(label);
                auto l = evaluate(m, expr1_from_json(e.at("lhs")));
                auto rr = evaluate(m, expr1_from_json(e.at("rhs")));
                if (l.value != e.at("lhs_value").get<std::uint32_t>() ||
                    rr.value != e.at("rhs_value").get<std::uint32_t>() || (l == rr) != e.at("result").get<bool>())
                    miss(name + ": re-evaluation differs");
                continue;
            }
            Equation eq{name, expr2_from_json(e.at("lhs")), expr2_from_json(e.at("rhs"))};
            auto res = check_equation(*models.at(label), eq);
            if (res.lhs.value != e.at("lhs_value").get<std::uint32_t>() ||
                res.rhs.value != e.at("rhs_value").get<std::uint32_t>() || res.holds != e.at("result").get<bool>())
                miss(name + ": re-evaluation differs");
        } catch (const BoundaryError& ex) {
            miss(name + ": " + ex.what());
        }
    }

    if (cert.at("claim").at("tag") == "validation" && models.count("base")) {
        auto rep = validate_model(*models.at("base"));
        const auto& fams = cert.at("summary").at("families");
        for (const auto& f : rep.families)
            if (fams.contains(f.family) && fams.at(f.family).at("violations").get<std::uint64_t>() != f.violations)
                miss("validation family " + f.family + ": violation count differs");
    }
    return r;
}

}  // namespace weakunits
