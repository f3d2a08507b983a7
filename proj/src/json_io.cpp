#include "frieze/json_io.hpp"

#include "frieze/scalar_text.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace frieze {

namespace {

std::string diagonal_key(const Diagonal& d) {
    return std::to_string(d.a()) + "," + std::to_string(d.b());
}

Diagonal diagonal_from_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw InputError("diagonal key must look like \"a,b\": " + key);
    try {
        int a = std::stoi(key.substr(0, comma));
        int b = std::stoi(key.substr(comma + 1));
        if (a >= b) throw InputError("diagonal key must have a < b: " + key);
        return Diagonal(a, b);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("malformed diagonal key: " + key);
    }
}

Diagonal diagonal_from_pair(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
        throw InputError("a diagonal must be a pair of vertex labels");
    return Diagonal(j[0].get<int>(), j[1].get<int>());
}

ScalarKind kind_from_json(const nlohmann::json& j) {
    const std::string mode = j.value("scalar_mode", "rational");
    if (mode == "rational") return ScalarKind::rational;
    if (mode == "symbolic") return ScalarKind::symbolic;
    throw InputError("scalar_mode must be \"rational\" or \"symbolic\"");
}

std::vector<std::string> variables_from_json(const nlohmann::json& j) {
    std::vector<std::string> vars;
    if (j.contains("variables"))
        for (const auto& v : j.at("variables")) vars.push_back(v.get<std::string>());
    return vars;
}

int polygon_size_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.at("n").is_number_integer())
        throw InputError("document needs an integer field \"n\"");
    int n = j.at("n").get<int>();
    if (n < 3) throw InputError("polygon needs at least 3 vertices");
    return n;
}

Scalar parse_value(const nlohmann::json& text, const std::vector<std::string>& universe) {
    if (!text.is_string()) throw InputError("scalar values must be strings");
    return parse_scalar(text.get<std::string>(), universe);
}

std::vector<std::string> collect_variables(const std::map<Diagonal, Scalar>& values) {
    std::set<std::string> vars;
    for (const auto& [d, v] : values) {
        auto vs = v.variables();
        vars.insert(vs.begin(), vs.end());
    }
    return {vars.begin(), vars.end()};
}

nlohmann::json dissection_to_json(const Dissection& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const Diagonal& g : d) out.push_back({g.a(), g.b()});
    return out;
}

} // namespace

PolygonSpec polygon_spec_from_json(const nlohmann::json& j) {
    PolygonSpec spec;
    spec.n = polygon_size_from_json(j);
    spec.kind = kind_from_json(j);
    spec.variables = variables_from_json(j);

    std::vector<Diagonal> gluing;
    for (const auto& pair : j.value("dissection", nlohmann::json::array()))
        gluing.push_back(diagonal_from_pair(pair));
    spec.gluing = Dissection(spec.n, std::move(gluing));

    if (!j.contains("pieces") || !j.at("pieces").is_array())
        throw InputError("polygon spec needs a \"pieces\" array");
    for (const auto& pj : j.at("pieces")) {
        Cell cell;
        for (const auto& v : pj.at("vertices")) cell.vertices.push_back(v.get<int>());

        std::map<Diagonal, Scalar> local_values;
        const auto& values = pj.at("values");
        const int m = cell.size();
        for (int i = 1; i <= m; ++i)
            for (int k = i + 1; k <= m; ++k) {
                Diagonal global(cell.vertices[static_cast<std::size_t>(i - 1)],
                                cell.vertices[static_cast<std::size_t>(k - 1)]);
                std::string key = diagonal_key(global);
                if (!values.contains(key))
                    throw InputError("piece is missing a value for diagonal " + global.str());
                local_values.emplace(Diagonal(i, k), parse_value(values.at(key), spec.variables));
            }

        std::vector<Diagonal> local_diss;
        for (const auto& pair : pj.value("dissection", nlohmann::json::array())) {
            Diagonal global = diagonal_from_pair(pair);
            auto pos_of = [&](int v) {
                auto it = std::find(cell.vertices.begin(), cell.vertices.end(), v);
                if (it == cell.vertices.end())
                    throw InputError("piece dissection vertex outside the piece");
                return static_cast<int>(it - cell.vertices.begin()) + 1;
            };
            local_diss.emplace_back(pos_of(global.a()), pos_of(global.b()));
        }
        spec.pieces.push_back({cell, WeakFrieze(Dissection(m, std::move(local_diss)),
                                                std::move(local_values))});
    }
    return spec;
}

nlohmann::json frieze_to_json(const WeakFrieze& f) {
    nlohmann::json j;
    j["kind"] = "frieze";
    j["n"] = f.size();
    j["scalar_mode"] = f.kind() == ScalarKind::rational ? "rational" : "symbolic";
    if (f.kind() == ScalarKind::symbolic) j["variables"] = collect_variables(f.values());
    j["dissection"] = dissection_to_json(f.dissection());
    nlohmann::json values;
    for (const auto& [d, v] : f.values()) values[diagonal_key(d)] = format_scalar(v);
    j["values"] = std::move(values);
    return j;
}

WeakFrieze frieze_from_json(const nlohmann::json& j) {
    const int n = polygon_size_from_json(j);
    ScalarKind kind = kind_from_json(j);
    std::vector<std::string> vars = variables_from_json(j);
    if (kind == ScalarKind::symbolic && vars.empty())
        throw InputError("symbolic frieze files need a \"variables\" list");
    if (kind == ScalarKind::rational) vars.clear();

    std::vector<Diagonal> diss;
    for (const auto& pair : j.value("dissection", nlohmann::json::array()))
        diss.push_back(diagonal_from_pair(pair));

    if (!j.contains("values") || !j.at("values").is_object())
        throw InputError("frieze files need a \"values\" object");
    std::map<Diagonal, Scalar> values;
    for (const auto& [key, text] : j.at("values").items())
        values.emplace(diagonal_from_key(key), parse_value(text, vars));
    return WeakFrieze(Dissection(n, std::move(diss)), std::move(values));
}

nlohmann::json matrix_to_json(const ScalarMatrix& m) {
    nlohmann::json j;
    j["kind"] = "matrix";
    j["n"] = m.size();
    j["scalar_mode"] = m.kind() == ScalarKind::rational ? "rational" : "symbolic";
    if (m.kind() == ScalarKind::symbolic) {
        std::set<std::string> vars;
        for (int i = 0; i < m.size(); ++i)
            for (int k = 0; k < m.size(); ++k) {
                auto vs = m.at(i, k).variables();
                vars.insert(vs.begin(), vs.end());
            }
        j["variables"] = std::vector<std::string>(vars.begin(), vars.end());
    }
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.size(); ++k) row.push_back(format_scalar(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

ScalarMatrix matrix_from_json(const nlohmann::json& j) {
    const int n = polygon_size_from_json(j);
    ScalarKind kind = kind_from_json(j);
    std::vector<std::string> vars = variables_from_json(j);
    if (kind == ScalarKind::rational) vars.clear();
    if (!j.contains("entries") || !j.at("entries").is_array() ||
        static_cast<int>(j.at("entries").size()) != n)
        throw InputError("matrix files need an n x n \"entries\" array");
    ScalarMatrix m(n, kind);
    for (int i = 0; i < n; ++i) {
        const auto& row = j.at("entries")[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("matrix row " + std::to_string(i + 1) + " has the wrong length");
        for (int k = 0; k < n; ++k)
            m.at(i, k) = parse_value(row[static_cast<std::size_t>(k)], vars);
    }
    return m;
}

nlohmann::json load_json(const std::string& path) {
    try {
        if (path == "-") return nlohmann::json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("invalid JSON in " + path + ": " + e.what());
    }
}

void save_json(const nlohmann::json& j, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace frieze
