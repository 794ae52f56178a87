#include "weakunits/io.hpp"

#include <cstdio>
#include <fstream>

namespace weakunits {

namespace {

template <class IdT>
json triples(const std::vector<IdT>& data, std::size_t n) {
    json out = json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (data[i * n + j].valid()) out.push_back({i, j, data[i * n + j].value});
    return out;
}

template <class IdT>
std::vector<IdT> from_triples(const json& j, const char* key, std::size_t n) {
    std::vector<IdT> out(n * n);
    if (!j.contains(key)) throw StructuralError(std::string("missing table '") + key + "'");
    const auto& arr = j.at(key);
    if (!arr.is_array()) throw StructuralError(std::string("table '") + key + "' is not an array");
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
            !e[2].is_number_unsigned())
            throw StructuralError(std::string("table '") + key + "': entries must be [i, j, value]");
        auto a = e[0].get<std::size_t>(), b = e[1].get<std::size_t>();
        if (a >= n || b >= n)
            throw StructuralError(std::string("table '") + key + "': dangling argument in " + e.dump());
        auto& slot = out[a * n + b];
        if (slot.valid()) throw StructuralError(std::string("table '") + key + "': duplicate entry " + e.dump());
        slot = IdT(e[2].get<std::uint32_t>());
    }
    return out;
}

json canonical(const ModelTables& t) {
    json j;
    j["objects"] = t.objects;
    json c1 = json::array(), c2 = json::array();
    for (const auto& c : t.one_cells) c1.push_back({c.src.value, c.dst.value});
    for (const auto& c : t.two_cells) c2.push_back({c.src.value, c.dst.value});
    j["one_cells"] = c1;
    j["two_cells"] = c2;
    json i1 = json::array(), i2 = json::array();
    for (auto f : t.id1) i1.push_back(f.value);
    for (auto a : t.id2) i2.push_back(a.value);
    j["id1"] = i1;
    j["id2"] = i2;
    j["comp1"] = triples(t.comp1, t.n1());
    j["vcomp"] = triples(t.vcomp, t.n2());
    j["hcomp"] = triples(t.hcomp, t.n2());
    j["tensor_obj"] = triples(t.tensor_obj, t.objects);
    j["tensor1"] = triples(t.tensor1, t.n1());
    j["tensor2"] = triples(t.tensor2, t.n2());
    return j;
}

std::uint32_t get_id(const json& j, const char* what) {
    if (!j.is_number_unsigned()) throw StructuralError(std::string(what) + ": expected a non-negative integer id");
    return j.get<std::uint32_t>();
}

}  // namespace

json tables_to_json(const ModelTables& t) {
    json j;
    j["format"] = "weakunits-model";
    j["version"] = 1;
    j["name"] = t.name;
    json objs = json::array();
    for (std::size_t i = 0; i < t.objects; ++i)
        objs.push_back(i < t.object_names.size() ? t.object_names[i] : std::string());
    j["objects"] = objs;
    json c1 = json::array(), c2 = json::array();
    for (std::size_t i = 0; i < t.n1(); ++i) {
        json c = {{"src", t.one_cells[i].src.value}, {"dst", t.one_cells[i].dst.value}};
        if (i < t.one_cell_names.size() && !t.one_cell_names[i].empty()) c["name"] = t.one_cell_names[i];
        c1.push_back(c);
    }
    for (std::size_t i = 0; i < t.n2(); ++i) {
        json c = {{"src", t.two_cells[i].src.value}, {"dst", t.two_cells[i].dst.value}};
        if (i < t.two_cell_names.size() && !t.two_cell_names[i].empty()) c["name"] = t.two_cell_names[i];
        c2.push_back(c);
    }
    j["one_cells"] = c1;
    j["two_cells"] = c2;
    auto canon = canonical(t);
    for (const char* k : {"id1", "id2", "comp1", "vcomp", "hcomp", "tensor_obj", "tensor1", "tensor2"}) j[k] = canon[k];
    return j;
}

ModelTables tables_from_json(const json& j) {
    if (!j.is_object()) throw StructuralError("model document is not a JSON object");
    ModelTables t;
    t.name = j.value("name", std::string("model"));
    for (const char* k : {"objects", "one_cells", "two_cells", "id1", "id2"})
        if (!j.contains(k) || !j.at(k).is_array()) throw StructuralError(std::string("missing array '") + k + "'");
    for (const auto& o : j.at("objects")) t.object_names.push_back(o.is_string() ? o.get<std::string>() : "");
    t.objects = t.object_names.size();
    for (const auto& c : j.at("one_cells")) {
        if (!c.is_object() || !c.contains("src") || !c.contains("dst"))
            throw StructuralError("1-cell entries need src and dst");
        t.one_cells.push_back({ObjId(get_id(c.at("src"), "1-cell src")), ObjId(get_id(c.at("dst"), "1-cell dst"))});
        t.one_cell_names.push_back(c.value("name", std::string()));
    }
    for (const auto& c : j.at("two_cells")) {
        if (!c.is_object() || !c.contains("src") || !c.contains("dst"))
            throw StructuralError("2-cell entries need src and dst");
        t.two_cells.push_back(
            {OneCellId(get_id(c.at("src"), "2-cell src")), OneCellId(get_id(c.at("dst"), "2-cell dst"))});
        t.two_cell_names.push_back(c.value("name", std::string()));
    }
    for (const auto& v : j.at("id1")) t.id1.emplace_back(get_id(v, "id1"));
    for (const auto& v : j.at("id2")) t.id2.emplace_back(get_id(v, "id2"));
    t.comp1 = from_triples<OneCellId>(j, "comp1", t.n1());
    t.vcomp = from_triples<TwoCellId>(j, "vcomp", t.n2());
    t.hcomp = from_triples<TwoCellId>(j, "hcomp", t.n2());
    t.tensor_obj = from_triples<ObjId>(j, "tensor_obj", t.objects);
    t.tensor1 = from_triples<OneCellId>(j, "tensor1", t.n1());
    t.tensor2 = from_triples<TwoCellId>(j, "tensor2", t.n2());
    return t;
}

TwoCategoryModel model_from_json(const json& j) { return TwoCategoryModel(tables_from_json(j)); }

std::string model_hash(const ModelTables& t) {
    const std::string s = canonical(t).dump();
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json expr_to_json(const Expr1& e) {
    switch (e->kind) {
        case Expr1Node::Kind::Id: return {{"id1", e->obj.value}};
        case Expr1Node::Kind::Lit: return {{"lit1", e->lit.value}};
        case Expr1Node::Kind::Comp: return {{"c", {expr_to_json(e->a), expr_to_json(e->b)}}};
        case Expr1Node::Kind::Tensor: return {{"t", {expr_to_json(e->a), expr_to_json(e->b)}}};
    }
    return nullptr;
}

json expr_to_json(const Expr2& e) {
    switch (e->kind) {
        case Expr2Node::Kind::Id: return {{"id2", expr_to_json(e->id)}};
        case Expr2Node::Kind::Lit: return {{"lit2", e->lit.value}};
        case Expr2Node::Kind::VComp: return {{"v", {expr_to_json(e->a), expr_to_json(e->b)}}};
        case Expr2Node::Kind::HComp: return {{"h", {expr_to_json(e->a), expr_to_json(e->b)}}};
        case Expr2Node::Kind::Tensor: return {{"t", {expr_to_json(e->a), expr_to_json(e->b)}}};
    }
    return nullptr;
}

namespace {

const json& pair_arg(const json& j, const char* key, int i) {
    const auto& arr = j.at(key);
    if (!arr.is_array() || arr.size() != 2) throw StructuralError(std::string("expression '") + key + "' needs two arguments");
    return arr[i];
}

}  // namespace

Expr1 expr1_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw StructuralError("1-cell expression must be a one-key object");
    if (j.contains("id1")) return make_id1(ObjId(get_id(j["id1"], "id1")));
    if (j.contains("lit1")) return make_lit1(OneCellId(get_id(j["lit1"], "lit1")));
    if (j.contains("c")) return make_comp1(expr1_from_json(pair_arg(j, "c", 0)), expr1_from_json(pair_arg(j, "c", 1)));
    if (j.contains("t"))
        return make_tensor1(expr1_from_json(pair_arg(j, "t", 0)), expr1_from_json(pair_arg(j, "t", 1)));
    throw StructuralError("unknown 1-cell expression " + j.dump());
}

Expr2 expr2_from_json(const json& j) {
    if (!j.is_object() || j.size() != 1) throw StructuralError("2-cell expression must be a one-key object");
    if (j.contains("id2")) return make_id2(expr1_from_json(j["id2"]));
    if (j.contains("lit2")) return make_lit2(TwoCellId(get_id(j["lit2"], "lit2")));
    if (j.contains("v")) return make_vcomp(expr2_from_json(pair_arg(j, "v", 0)), expr2_from_json(pair_arg(j, "v", 1)));
    if (j.contains("h")) return make_hcomp(expr2_from_json(pair_arg(j, "h", 0)), expr2_from_json(pair_arg(j, "h", 1)));
    if (j.contains("t"))
        return make_tensor2(expr2_from_json(pair_arg(j, "t", 0)), expr2_from_json(pair_arg(j, "t", 1)));
    throw StructuralError("unknown 2-cell expression " + j.dump());
}

json read_json_file(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) throw StructuralError("cannot open " + p.string());
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw StructuralError("cannot parse " + p.string() + ": " + e.what());
    }
}

void write_json_file(const std::filesystem::path& p, const json& j) {
    std::ofstream out(p);
    if (!out) throw StructuralError("cannot write " + p.string());
    out << j.dump(1) << "\n";
}

}  // namespace weakunits
