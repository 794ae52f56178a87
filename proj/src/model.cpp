#include "weakunits/model.hpp"

#include <sstream>

namespace weakunits {

namespace {

template <class T>
std::string str(T v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

template <class IdT, class Pred>
void check_binary(std::vector<std::string>& out, const char* table, const std::vector<IdT>& data, std::size_t n,
                  std::size_t bound, Pred defined) {
    if (data.size() != n * n) {
        out.push_back(std::string(table) + ": expected " + std::to_string(n * n) + " entries, got " +
                      std::to_string(data.size()));
        return;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IdT v = data[i * n + j];
            bool def = defined(i, j);
            std::string where = std::string(table) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (def && !v.valid())
                out.push_back(where + ": missing entry");
            else if (!def && v.valid())
                out.push_back(where + ": entry for a non-composable pair");
            else if (v.valid() && v.index() >= bound)
                out.push_back(where + ": dangling id " + std::to_string(v.value));
        }
}

}  // namespace

std::vector<std::string> structural_issues(const ModelTables& t) {
    std::vector<std::string> out;
    const std::size_t n0 = t.objects, n1 = t.n1(), n2 = t.n2();
    bool cells_ok = true;
    for (std::size_t i = 0; i < n1; ++i) {
        const auto& c = t.one_cells[i];
        if (!c.src.valid() || !c.dst.valid() || c.src.index() >= n0 || c.dst.index() >= n0) {
            out.push_back("1-cell " + std::to_string(i) + ": dangling endpoint");
            cells_ok = false;
        }
    }
    for (std::size_t i = 0; i < n2; ++i) {
        const auto& c = t.two_cells[i];
        if (!c.src.valid() || !c.dst.valid() || c.src.index() >= n1 || c.dst.index() >= n1) {
            out.push_back("2-cell " + std::to_string(i) + ": dangling boundary");
            cells_ok = false;
            continue;
        }
        if (cells_ok && (t.one_cells[c.src.index()].src != t.one_cells[c.dst.index()].src ||
                         t.one_cells[c.src.index()].dst != t.one_cells[c.dst.index()].dst))
            out.push_back("2-cell " + std::to_string(i) + ": boundary 1-cells are not parallel");
    }
    if (!cells_ok) return out;

    if (t.id1.size() != n0) out.push_back("id1: expected one entry per object");
    else
        for (std::size_t i = 0; i < n0; ++i)
            if (!t.id1[i].valid() || t.id1[i].index() >= n1) out.push_back("id1(" + std::to_string(i) + "): dangling");
    if (t.id2.size() != n1) out.push_back("id2: expected one entry per 1-cell");
    else
        for (std::size_t i = 0; i < n1; ++i)
            if (!t.id2[i].valid() || t.id2[i].index() >= n2) out.push_back("id2(" + std::to_string(i) + "): dangling");

    auto src1 = [&](std::size_t f) { return t.one_cells[f].src; };
    auto dst1 = [&](std::size_t f) { return t.one_cells[f].dst; };
    auto src2 = [&](std::size_t a) { return t.two_cells[a].src; };
    auto dst2 = [&](std::size_t a) { return t.two_cells[a].dst; };

    check_binary(out, "comp1", t.comp1, n1, n1, [&](std::size_t f, std::size_t g) { return dst1(f) == src1(g); });
    check_binary(out, "vcomp", t.vcomp, n2, n2, [&](std::size_t a, std::size_t b) { return dst2(a) == src2(b); });
    check_binary(out, "hcomp", t.hcomp, n2, n2,
                 [&](std::size_t a, std::size_t b) { return dst1(src2(a).index()) == src1(src2(b).index()); });
    check_binary(out, "tensor_obj", t.tensor_obj, n0, n0, [](std::size_t, std::size_t) { return true; });
    check_binary(out, "tensor1", t.tensor1, n1, n1, [](std::size_t, std::size_t) { return true; });
    check_binary(out, "tensor2", t.tensor2, n2, n2, [](std::size_t, std::size_t) { return true; });
    return out;
}

TwoCategoryModel::TwoCategoryModel(ModelTables tables) : t_(std::move(tables)) {
    auto issues = structural_issues(t_);
    if (!issues.empty()) throw StructuralError("model '" + t_.name + "' is structurally malformed", issues);

    const std::size_t n0 = t_.objects, n1 = t_.n1(), n2 = t_.n2();
    homs_.assign(n0 * n0, {});
    for (std::size_t i = 0; i < n1; ++i) {
        OneCellId f(static_cast<std::uint32_t>(i));
        homs_[src(f).index() * n0 + dst(f).index()].push_back(f);
    }
    cells_.assign(n1 * n1, {});
    for (std::size_t i = 0; i < n2; ++i) {
        TwoCellId a(static_cast<std::uint32_t>(i));
        cells_[src(a).index() * n1 + dst(a).index()].push_back(a);
    }
    inverse_.assign(n2, TwoCellId{});
    for (std::size_t i = 0; i < n2; ++i) {
        TwoCellId a(static_cast<std::uint32_t>(i));
        for (TwoCellId b : cells(dst(a), src(a))) {
            if (vcomp(a, b) == id2(src(a)) && vcomp(b, a) == id2(dst(a))) {
                inverse_[i] = b;
                break;
            }
        }
    }
}

bool TwoCategoryModel::is_locally_discrete() const {
    for (std::size_t i = 0; i < two_cell_count(); ++i)
        if (!is_identity(TwoCellId(static_cast<std::uint32_t>(i)))) return false;
    return true;
}

std::string TwoCategoryModel::label(ObjId x) const {
    if (x.index() < t_.object_names.size() && !t_.object_names[x.index()].empty()) return t_.object_names[x.index()];
    return str(x);
}

std::string TwoCategoryModel::label(OneCellId f) const {
    if (f.index() < t_.one_cell_names.size() && !t_.one_cell_names[f.index()].empty())
        return t_.one_cell_names[f.index()];
    return str(f);
}

std::string TwoCategoryModel::label(TwoCellId a) const {
    if (a.index() < t_.two_cell_names.size() && !t_.two_cell_names[a.index()].empty())
        return t_.two_cell_names[a.index()];
    return str(a);
}

ObjId ModelBuilder::add_object(std::string name) {
    t_.object_names.push_back(std::move(name));
    t_.id1.emplace_back();
    return ObjId(static_cast<std::uint32_t>(t_.objects++));
}

OneCellId ModelBuilder::add_one_cell(ObjId src, ObjId dst, std::string name) {
    t_.one_cells.push_back({src, dst});
    t_.one_cell_names.push_back(std::move(name));
    t_.id2.emplace_back();
    return OneCellId(static_cast<std::uint32_t>(t_.one_cells.size() - 1));
}

TwoCellId ModelBuilder::add_two_cell(OneCellId src, OneCellId dst, std::string name) {
    t_.two_cells.push_back({src, dst});
    t_.two_cell_names.push_back(std::move(name));
    return TwoCellId(static_cast<std::uint32_t>(t_.two_cells.size() - 1));
}

void ModelBuilder::set_id1(ObjId x, OneCellId f) { t_.id1[x.index()] = f; }
void ModelBuilder::set_id2(OneCellId f, TwoCellId a) { t_.id2[f.index()] = a; }

void ModelBuilder::fill_comp1(const std::function<OneCellId(OneCellId, OneCellId)>& fn) {
    const auto n = t_.n1();
    t_.comp1.assign(n * n, OneCellId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (t_.one_cells[i].dst == t_.one_cells[j].src) t_.comp1[i * n + j] = fn(OneCellId(i), OneCellId(j));
}

void ModelBuilder::fill_vcomp(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn) {
    const auto n = t_.n2();
    t_.vcomp.assign(n * n, TwoCellId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j)
            if (t_.two_cells[i].dst == t_.two_cells[j].src) t_.vcomp[i * n + j] = fn(TwoCellId(i), TwoCellId(j));
}

void ModelBuilder::fill_hcomp(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn) {
    const auto n = t_.n2();
    t_.hcomp.assign(n * n, TwoCellId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) {
            auto f = t_.two_cells[i].src, g = t_.two_cells[j].src;
            if (t_.one_cells[f.index()].dst == t_.one_cells[g.index()].src)
                t_.hcomp[i * n + j] = fn(TwoCellId(i), TwoCellId(j));
        }
}

void ModelBuilder::fill_tensor_obj(const std::function<ObjId(ObjId, ObjId)>& fn) {
    const auto n = t_.objects;
    t_.tensor_obj.assign(n * n, ObjId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t_.tensor_obj[i * n + j] = fn(ObjId(i), ObjId(j));
}

void ModelBuilder::fill_tensor1(const std::function<OneCellId(OneCellId, OneCellId)>& fn) {
    const auto n = t_.n1();
    t_.tensor1.assign(n * n, OneCellId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t_.tensor1[i * n + j] = fn(OneCellId(i), OneCellId(j));
}

void ModelBuilder::fill_tensor2(const std::function<TwoCellId(TwoCellId, TwoCellId)>& fn) {
    const auto n = t_.n2();
    t_.tensor2.assign(n * n, TwoCellId{});
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = 0; j < n; ++j) t_.tensor2[i * n + j] = fn(TwoCellId(i), TwoCellId(j));
}

}  // namespace weakunits
