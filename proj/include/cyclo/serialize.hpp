#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "cyclo/error.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/poly.hpp"

// JSON mappings for the exact types. Big integers travel as decimal strings so
// no consumer ever rounds them through a double.

namespace cyclo {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& x) { return x.str(); }

inline BigInt big_from_json(const Json& j) {
    try {
        if (j.is_string()) return BigInt(j.get<std::string>());
        if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    } catch (const std::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad integer: ") + e.what());
    }
    throw Error(ErrorCode::ParseError, "expected an integer string, got " + j.dump());
}

inline void to_json(Json& j, const IntMatrix& m) {
    j = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(m(i, c).str());
        j.push_back(std::move(row));
    }
}

inline void from_json(const Json& j, IntMatrix& m) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "matrix must be an array of rows");
    IntMatrix out(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size())
            throw Error(ErrorCode::ParseError, "matrix rows must form a square");
        for (std::size_t c = 0; c < j.size(); ++c) out(i, c) = big_from_json(j[i][c]);
    }
    m = std::move(out);
}

inline void to_json(Json& j, const IntPoly& p) {
    j = Json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
}

inline void from_json(const Json& j, IntPoly& p) {
    if (!j.is_array()) throw Error(ErrorCode::ParseError, "polynomial must be a coefficient array");
    std::vector<BigInt> c;
    for (const auto& x : j) c.push_back(big_from_json(x));
    p = IntPoly(std::move(c));
}

inline void to_json(Json& j, const RealRoot& r) { j = Json{{"value", r.value}, {"multiplicity", r.multiplicity}}; }

inline void from_json(const Json& j, RealRoot& r) {
    r.value = j.at("value").get<double>();
    r.multiplicity = j.at("multiplicity").get<unsigned>();
}

}  // namespace cyclo
