#include "weakunits/generators.hpp"

#include <sstream>

namespace weakunits {

TwoCategoryModel make_semigroup_model(const std::vector<std::vector<int>>& table, std::string name) {
    const auto n = table.size();
    for (const auto& row : table)
        if (row.size() != n) throw StructuralError("semigroup table is not square");
    for (const auto& row : table)
        for (int v : row)
            if (v < 0 || static_cast<std::size_t>(v) >= n) throw StructuralError("semigroup table entry out of range");

    ModelBuilder b(std::move(name));
    for (std::size_t i = 0; i < n; ++i) {
        auto x = b.add_object(std::to_string(i));
        auto f = b.add_one_cell(x, x, "id_" + std::to_string(i));
        b.set_id1(x, f);
        b.set_id2(f, b.add_two_cell(f, f, "id_id_" + std::to_string(i)));
    }
    auto mul = [&](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(table[i][j]); };
    b.fill_tensor_obj([&](ObjId x, ObjId y) { return ObjId(mul(x.index(), y.index())); });
    b.fill_comp1([](OneCellId f, OneCellId) { return f; });
    b.fill_tensor1([&](OneCellId f, OneCellId g) { return OneCellId(mul(f.index(), g.index())); });
    b.fill_vcomp([](TwoCellId a, TwoCellId) { return a; });
    b.fill_hcomp([](TwoCellId a, TwoCellId) { return a; });
    b.fill_tensor2([&](TwoCellId a, TwoCellId c) { return TwoCellId(mul(a.index(), c.index())); });
    return TwoCategoryModel(b.take());
}

TwoCategoryModel make_m3() { return make_semigroup_model({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}, "m3"); }

TwoCategoryModel make_puff(const PuffSpec& spec) {
    // Endo-arrows of I: 0 = e, 1 = u, 2 = z (optional).
    const int ends = spec.absorbing_zero ? 3 : 2;
    const int zero = spec.absorbing_zero ? 2 : -1;
    auto mul = [&](int a, int b) { return (a == zero || b == zero) ? zero : (a ^ b); };
    const char* names[] = {"e", "u", "z"};

    ModelBuilder b(spec.name);
    ObjId I = b.add_object("I"), X = b.add_object("X");
    std::vector<OneCellId> end;
    for (int i = 0; i < ends; ++i) end.push_back(b.add_one_cell(I, I, names[i]));
    OneCellId idX = b.add_one_cell(X, X, "id_X");
    b.set_id1(I, end[0]);
    b.set_id1(X, idX);

    // 2-cell decoding: (from, to, label) for group-part cells, else special.
    struct Cell { int from, to, label; };
    std::vector<Cell> info;
    std::vector<std::vector<std::vector<TwoCellId>>> by(2, std::vector<std::vector<TwoCellId>>(2));
    for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
            if (!spec.chaotic && a != c) continue;
            for (int k = 0; k < spec.labels; ++k) {
                std::string nm = std::string(names[a]) + "=>" + names[c];
                if (spec.labels > 1) nm += ":" + std::to_string(k);
                by[a][c].push_back(b.add_two_cell(end[a], end[c], nm));
                info.push_back({a, c, k});
            }
        }
    TwoCellId idz, idxx;
    if (spec.absorbing_zero) {
        idz = b.add_two_cell(end[2], end[2], "z=>z");
        info.push_back({zero, zero, 0});
    }
    idxx = b.add_two_cell(idX, idX, "id_id_X");
    info.push_back({-1, -1, 0});
    for (int a = 0; a < 2; ++a) b.set_id2(end[a], by[a][a][0]);
    if (spec.absorbing_zero) b.set_id2(end[2], idz);
    b.set_id2(idX, idxx);

    auto is_x = [&](TwoCellId a) { return info[a.index()].from < 0; };
    auto is_z = [&](TwoCellId a) { return info[a.index()].from == zero; };
    auto combine = [&](TwoCellId a, TwoCellId c, bool vertical) -> TwoCellId {
        const auto& p = info[a.index()];
        const auto& q = info[c.index()];
        if (vertical) return by[p.from][q.to][(p.label + q.label) % spec.labels];
        return by[mul(p.from, q.from)][mul(p.to, q.to)][(p.label + q.label) % spec.labels];
    };

    b.fill_tensor_obj([&](ObjId x, ObjId y) { return (x == I && y == I) ? I : X; });
    b.fill_comp1([&](OneCellId f, OneCellId g) {
        if (f == idX) return idX;
        return end[mul(static_cast<int>(f.index()), static_cast<int>(g.index()))];
    });
    b.fill_tensor1([&](OneCellId f, OneCellId g) {
        if (f == idX || g == idX) return idX;
        return end[mul(static_cast<int>(f.index()), static_cast<int>(g.index()))];
    });
    b.fill_vcomp([&](TwoCellId a, TwoCellId c) {
        if (is_x(a) || is_z(a)) return a;
        return combine(a, c, true);
    });
    auto horizontal = [&](TwoCellId a, TwoCellId c) {
        if (is_x(a) || is_x(c)) return idxx;
        if (is_z(a) || is_z(c)) return idz;
        return combine(a, c, false);
    };
    b.fill_hcomp(horizontal);
    b.fill_tensor2(horizontal);
    return TwoCategoryModel(b.take());
}

TwoCategoryModel make_z2p() { return make_puff({"z2p", false, 1, false}); }
TwoCategoryModel make_zg() { return make_puff({"zg", true, 2, false}); }
TwoCategoryModel make_chp() { return make_puff({"chp", true, 1, false}); }

TwoCategoryModel discrete_reduct(const TwoCategoryModel& m) {
    ModelBuilder b(m.name() + "-discrete");
    const auto& src = m.tables();
    for (std::size_t x = 0; x < m.object_count(); ++x)
        b.add_object(x < src.object_names.size() ? src.object_names[x] : std::string());
    for (std::size_t f = 0; f < m.one_cell_count(); ++f) {
        OneCellId id(static_cast<std::uint32_t>(f));
        b.add_one_cell(m.src(id), m.dst(id), f < src.one_cell_names.size() ? src.one_cell_names[f] : std::string());
    }
    for (std::size_t x = 0; x < m.object_count(); ++x)
        b.set_id1(ObjId(static_cast<std::uint32_t>(x)), m.id1(ObjId(static_cast<std::uint32_t>(x))));
    // 2-cell i is the identity on 1-cell i
    for (std::size_t f = 0; f < m.one_cell_count(); ++f) {
        OneCellId id(static_cast<std::uint32_t>(f));
        b.set_id2(id, b.add_two_cell(id, id, "id_" + m.label(id)));
    }
    auto as1 = [](TwoCellId a) { return OneCellId(a.value); };
    b.fill_tensor_obj([&](ObjId x, ObjId y) { return m.tensor(x, y); });
    b.fill_comp1([&](OneCellId f, OneCellId g) { return m.comp1(f, g); });
    b.fill_tensor1([&](OneCellId f, OneCellId g) { return m.tensor(f, g); });
    b.fill_vcomp([](TwoCellId a, TwoCellId) { return a; });
    b.fill_hcomp([&](TwoCellId a, TwoCellId c) { return TwoCellId(m.comp1(as1(a), as1(c)).value); });
    b.fill_tensor2([&](TwoCellId a, TwoCellId c) { return TwoCellId(m.tensor(as1(a), as1(c)).value); });
    return TwoCategoryModel(b.take());
}

std::vector<std::string> builtin_model_names() { return {"m3", "z2p", "z2p-discrete", "zg", "chp"}; }

TwoCategoryModel make_builtin(std::string_view kind) {
    if (kind == "m3") return make_m3();
    if (kind == "z2p") return make_z2p();
    if (kind == "z2p-discrete") return discrete_reduct(make_z2p());
    if (kind == "zg") return make_zg();
    if (kind == "chp") return make_chp();
    throw StructuralError("unknown model kind '" + std::string(kind) + "'");
}

std::vector<std::vector<int>> parse_table(std::string_view text) {
    std::vector<std::vector<int>> rows;
    std::stringstream all{std::string(text)};
    std::string row;
    while (std::getline(all, row, ';')) {
        std::vector<int> r;
        std::stringstream rs(row);
        std::string cell;
        while (std::getline(rs, cell, ',')) {
            try {
                r.push_back(std::stoi(cell));
            } catch (const std::exception&) {
                throw StructuralError("bad table entry '" + cell + "'");
            }
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

}  // namespace weakunits
