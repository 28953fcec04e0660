#include "entrobound/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace entrobound {

namespace {

using nlohmann::json;

[[noreturn]] void malformed(const std::string& what) { throw MatrixParseError(what); }

}  // namespace

HermitianMatrix parse_matrix_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& err) {
        malformed(std::string("invalid JSON: ") + err.what());
    }
    if (!doc.is_object()) malformed("matrix document must be a JSON object");
    if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
        malformed("matrix document needs an integer \"dim\"");
    }
    const long long dim = doc["dim"].get<long long>();
    if (dim < 1 || dim > kMaxDim) malformed("\"dim\" out of range");
    if (!doc.contains("entries") || !doc["entries"].is_array()) {
        malformed("matrix document needs an \"entries\" array");
    }
    const json& rows = doc["entries"];
    if (rows.size() != static_cast<std::size_t>(dim)) malformed("\"entries\" must have dim rows");

    ComplexMatrix m(static_cast<int>(dim));
    for (int i = 0; i < dim; ++i) {
        const json& row = rows[static_cast<std::size_t>(i)];
        if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
            malformed("each row must have dim entries");
        }
        for (int j = 0; j < dim; ++j) {
            const json& cell = row[static_cast<std::size_t>(j)];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() ||
                !cell[1].is_number()) {
                malformed("each entry must be a [re, im] pair of numbers");
            }
            m(i, j) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return HermitianMatrix::from_entries(m);
}

HermitianMatrix load_matrix_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) malformed("cannot open matrix file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_matrix_json(buf.str());
}

std::string matrix_to_json(const HermitianMatrix& m) {
    json rows = json::array();
    for (int i = 0; i < m.dim(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.dim(); ++j) {
            const Complex z = m(i, j);
            row.push_back(json::array({z.real(), z.imag()}));
        }
        rows.push_back(std::move(row));
    }
    json doc{{"dim", m.dim()}, {"entries", std::move(rows)}};
    return doc.dump();
}

void save_matrix_json(const std::string& path, const HermitianMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) malformed("cannot open matrix file for writing: " + path);
    out << matrix_to_json(m) << '\n';
}

}  // namespace entrobound
