#pragma once

/**
 * @file json_io.hpp
 * @brief JSON file formats shared by the CLI and the test fixtures.
 *
 * Three kinds of document, told apart by the optional "kind" field or by
 * their payload:
 *
 *   polygon: {"kind":"polygon","n":8,"scalar_mode":"rational",
 *             "variables":[],"dissection":[[1,4],[5,8]],
 *             "pieces":[{"vertices":[1,2,3,4],"dissection":[],
 *                        "values":{"1,2":"1", ...}}, ...]}
 *   frieze:  {"kind":"frieze","n":8,...,"dissection":[...],
 *             "values":{"a,b":"scalar", ... all n(n-1)/2 diagonals}}
 *   matrix:  {"kind":"matrix","n":4,...,"entries":[["0","1",...],...]}
 *
 * Scalars are embedded as strings in the scalar grammar; diagonal keys are
 * "a,b" with a < b in original polygon labels.
 */

#include "frieze/weak_frieze.hpp"
#include "frieze/frieze_matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace frieze {

struct InputError : Error {
    using Error::Error;
};

struct PolygonSpec {
    int n = 0;
    ScalarKind kind = ScalarKind::rational;
    std::vector<std::string> variables;
    Dissection gluing = Dissection::empty(3);
    std::vector<Piece> pieces;
};

PolygonSpec polygon_spec_from_json(const nlohmann::json& j);

nlohmann::json frieze_to_json(const WeakFrieze& f);
WeakFrieze frieze_from_json(const nlohmann::json& j);

nlohmann::json matrix_to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const nlohmann::json& j);

/// Reads a whole document from a file, or from stdin when path is "-".
nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

} // namespace frieze
