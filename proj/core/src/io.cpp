#include "kmu/io.hpp"

#include <fstream>

namespace kmu::io {

namespace {

const json& field(const json& j, const char* name) {
    auto it = j.find(name);
    if (it == j.end())
        throw InputError(std::string("missing field '") + name + "'");
    return *it;
}

std::vector<Polynomial> poly_list(const ContextPtr& ctx, const json& j,
                                  const char* what) {
    if (!j.is_array())
        throw InputError(std::string("'") + what + "' must be an array");
    std::vector<Polynomial> out;
    for (const auto& e : j) out.push_back(poly_from_json(ctx, e));
    return out;
}

template <std::size_t N>
std::array<Polynomial, N> poly_array(const ContextPtr& ctx, const json& j,
                                     const char* what) {
    auto list = poly_list(ctx, j, what);
    if (list.size() != N)
        throw InputError(std::string("'") + what + "' must have " +
                         std::to_string(N) + " entries");
    std::array<Polynomial, N> out = [&]<std::size_t... I>(std::index_sequence<I...>) {
        return std::array<Polynomial, N>{std::move(list[I])...};
    }(std::make_index_sequence<N>{});
    return out;
}

template <std::size_t N>
std::array<Polynomial, N> coeff_row(const ContextPtr& ctx, const json& coeffs,
                                    const std::string& key) {
    auto it = coeffs.find(key);
    if (it == coeffs.end()) {
        return [&]<std::size_t... I>(std::index_sequence<I...>) {
            return std::array<Polynomial, N>{((void)I, Polynomial::zero(ctx))...};
        }(std::make_index_sequence<N>{});
    }
    return poly_array<N>(ctx, *it, key.c_str());
}

}  // namespace

ContextPtr context_from_json(const json& j) {
    const json& vars = field(j, "vars");
    if (!vars.is_array() || vars.empty())
        throw InputError("'vars' must be a non-empty array of names");
    std::vector<std::string> names;
    for (const auto& v : vars) {
        if (!v.is_string()) throw InputError("'vars' entries must be strings");
        names.push_back(v.get<std::string>());
    }
    MonomialOrder order = MonomialOrder::Grevlex;
    if (j.contains("order")) order = order_from_name(j["order"].get<std::string>());
    return VarContext::make(std::move(names), order);
}

Polynomial poly_from_json(const ContextPtr& ctx, const json& j) {
    if (j.is_number_integer())
        return Polynomial::constant(ctx, Int(std::to_string(j.get<long long>())));
    if (!j.is_string())
        throw InputError("polynomial must be an expression string");
    return Polynomial::parse(ctx, j.get<std::string>());
}

PolyMatrix matrix_from_json(const ContextPtr& ctx, const json& j) {
    std::size_t rows = field(j, "rows").get<std::size_t>();
    std::size_t cols = field(j, "cols").get<std::size_t>();
    const json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != rows)
        throw InputError("'entries' must be an array of " + std::to_string(rows) +
                         " rows");
    std::vector<Polynomial> flat;
    for (const auto& row : entries) {
        if (!row.is_array() || row.size() != cols)
            throw InputError("each matrix row must have " + std::to_string(cols) +
                             " entries");
        for (const auto& e : row) flat.push_back(poly_from_json(ctx, e));
    }
    return PolyMatrix(ctx, rows, cols, std::move(flat));
}

SkewMatrix skew_from_json(const ContextPtr& ctx, const json& j) {
    if (j.contains("upper")) {
        std::size_t k = field(j, "size").get<std::size_t>();
        return SkewMatrix::from_upper_triangle(ctx, k,
                                               poly_list(ctx, j["upper"], "upper"));
    }
    return SkewMatrix(matrix_from_json(ctx, j));
}

Ideal ideal_from_json(const json& j) {
    ContextPtr ctx = context_from_json(j);
    return Ideal(ctx, poly_list(ctx, field(j, "gens"), "gens"));
}

UnprojectionInput unprojection_input_from_json(const json& j) {
    std::string kind = field(j, "kind").get<std::string>();
    ContextPtr ctx = context_from_json(j);
    if (kind == "ci") {
        return CiData(ctx, poly_list(ctx, field(j, "v"), "v"),
                      poly_list(ctx, field(j, "w"), "w"),
                      matrix_from_json(ctx, field(j, "Q")));
    }
    if (kind == "tom") {
        const json& coeffs = field(j, "coeffs");
        TomData d{ctx, poly_array<4>(ctx, field(j, "x"), "x"),
                  poly_array<4>(ctx, field(j, "z"), "z"),
                  {coeff_row<4>(ctx, coeffs, "a23"), coeff_row<4>(ctx, coeffs, "a24"),
                   coeff_row<4>(ctx, coeffs, "a25"), coeff_row<4>(ctx, coeffs, "a34"),
                   coeff_row<4>(ctx, coeffs, "a35"), coeff_row<4>(ctx, coeffs, "a45")}};
        return d;
    }
    if (kind == "jerry") {
        const json& coeffs = field(j, "coeffs");
        JerryData d{ctx, poly_array<3>(ctx, field(j, "x"), "x"),
                    poly_array<4>(ctx, field(j, "z"), "z"),
                    {coeff_row<4>(ctx, coeffs, "a1"), coeff_row<4>(ctx, coeffs, "a2"),
                     coeff_row<4>(ctx, coeffs, "a3")},
                    {coeff_row<4>(ctx, coeffs, "b1"), coeff_row<4>(ctx, coeffs, "b2"),
                     coeff_row<4>(ctx, coeffs, "b3")},
                    coeff_row<4>(ctx, coeffs, "c")};
        return d;
    }
    throw InputError("unknown kind '" + kind + "' (expected ci, tom or jerry)");
}

json matrix_to_json(const PolyMatrix& m) {
    json entries = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
        entries.push_back(std::move(row));
    }
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json ideal_to_json(const Ideal& ideal) {
    json gens = json::array();
    for (const auto& g : ideal.gens) gens.push_back(g.to_string());
    return json{{"vars", ideal.context->names()},
                {"order", order_name(ideal.context->order())},
                {"gens", std::move(gens)}};
}

json result_to_json(const UnprojectionResult& r, bool show_work) {
    const char* kind = r.kind == UnprojectionKind::Ci    ? "ci"
                       : r.kind == UnprojectionKind::Tom ? "tom"
                                                         : "jerry";
    json out{{"kind", kind},
             {"unproj_var", r.unproj_var},
             {"ideal", ideal_to_json(r.ideal)}};
    json g = json::array();
    for (const auto& gi : r.g) g.push_back(gi.to_string());
    out["g"] = std::move(g);
    if (show_work) {
        json work;
        if (r.q) work["Q"] = matrix_to_json(*r.q);
        if (!r.pfaffians.empty()) {
            json p = json::array();
            for (const auto& pi : r.pfaffians) p.push_back(pi.to_string());
            work["pfaffians"] = std::move(p);
        }
        if (!r.h.empty()) {
            json h = json::array();
            for (const auto& row : r.h) {
                json hr = json::array();
                for (const auto& e : row) hr.push_back(e.to_string());
                h.push_back(std::move(hr));
            }
            work["H"] = std::move(h);
        }
        auto list = [](const std::vector<Polynomial>& v) {
            json a = json::array();
            for (const auto& p : v) a.push_back(p.to_string());
            return a;
        };
        if (!r.k_polys.empty()) work["K"] = list(r.k_polys);
        if (!r.l_polys.empty()) work["L"] = list(r.l_polys);
        out["work"] = std::move(work);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open input file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("invalid JSON in '" + path + "': " + e.what());
    }
    return j;
}

}  // namespace kmu::io
