#include "qma/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qma/errors.hpp"
#include "qma/scalar_io.hpp"

namespace qma {

using nlohmann::json;

TensorOperator matrix_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("bad matrix JSON: ") + e.what());
    }
    if (!j.contains("dim") || !j.contains("sites") || !j.contains("entries"))
        throw FormatError("matrix JSON needs dim, sites and entries");
    int dim = j.at("dim").get<int>();
    int sites = j.at("sites").get<int>();
    if (dim < 2) throw FormatError("matrix dim must be at least 2");
    long size = tensor_size(dim, sites);
    const auto& rows = j.at("entries");
    if (!rows.is_array() || static_cast<long>(rows.size()) != size)
        throw FormatError("entries must hold N^p rows");
    TensorOperator op(dim, sites);
    for (long r = 0; r < size; ++r) {
        const auto& row = rows[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<long>(row.size()) != size)
            throw FormatError("entries row " + std::to_string(r) + " has the wrong length");
        for (long c = 0; c < size; ++c)
            op.at(r, c) = parse_scalar(row[static_cast<size_t>(c)].get<std::string>());
    }
    return op;
}

TensorOperator matrix_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return matrix_from_json(buf.str());
}

std::string matrix_to_json(const TensorOperator& op) {
    json rows = json::array();
    for (long r = 0; r < op.size(); ++r) {
        json row = json::array();
        for (long c = 0; c < op.size(); ++c) row.push_back(scalar_to_string(op.at(r, c)));
        rows.push_back(std::move(row));
    }
    json j{{"dim", op.dim()}, {"sites", op.sites()}, {"entries", std::move(rows)}};
    return j.dump(2);
}

}  // namespace qma
