#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/diffset.hpp"
#include "cyclo/field.hpp"
#include "cyclo/schur.hpp"
#include "cyclo/search.hpp"
#include "cyclo/serialize.hpp"
#include "cyclo/verify.hpp"

namespace cyclo {

inline constexpr const char* kToolVersion = "0.1.0";

// Report payloads to JSON. Objects use nlohmann's ordered std::map, so keys
// always come out sorted.

inline void to_json(Json& j, const DetectorVerdicts& v) {
    j = Json{{"lehmer", v.lehmer}, {"sumsq", v.sumsq}, {"gram", v.gram}, {"agree", v.agree()}};
    j["bruteforce"] = v.bruteforce ? Json(*v.bruteforce) : Json(nullptr);
}

inline void from_json(const Json& j, DetectorVerdicts& v) {
    v.lehmer = j.at("lehmer").get<bool>();
    v.sumsq = j.at("sumsq").get<bool>();
    v.gram = j.at("gram").get<bool>();
    if (j.at("bruteforce").is_null())
        v.bruteforce.reset();
    else
        v.bruteforce = j.at("bruteforce").get<bool>();
}

inline void to_json(Json& j, const DeterminantValues& d) {
    j = Json{{"predicted", d.predicted.str()}, {"computed", d.computed.str()}};
}

inline void from_json(const Json& j, DeterminantValues& d) {
    d.predicted = big_from_json(j.at("predicted"));
    d.computed = big_from_json(j.at("computed"));
}

inline void to_json(Json& j, const SpectralData& s) {
    j = Json{{"char_poly_m", s.char_m},  {"char_poly_s", s.char_s}, {"eigenvalues_m", s.roots_m},
             {"eigenvalues_s", s.roots_s}, {"tolerance", s.tolerance}, {"char_poly_m_text", s.char_m.to_string()},
             {"char_poly_s_text", s.char_s.to_string()}};
}

inline void from_json(const Json& j, SpectralData& s) {
    s.char_m = j.at("char_poly_m").get<IntPoly>();
    s.char_s = j.at("char_poly_s").get<IntPoly>();
    s.roots_m = j.at("eigenvalues_m").get<std::vector<RealRoot>>();
    s.roots_s = j.at("eigenvalues_s").get<std::vector<RealRoot>>();
    s.tolerance = j.at("tolerance").get<double>();
}

inline void to_json(Json& j, const SchoenbergData& s) {
    j = Json{{"q_minus_k", s.q_minus_k}, {"is_square", s.is_square}};
    j["odd_squares"] = s.odd_squares ? Json::array({s.odd_squares->first, s.odd_squares->second}) : Json(nullptr);
    j["geometric_exponent"] = s.geometric_exponent ? Json(*s.geometric_exponent) : Json(nullptr);
}

inline void from_json(const Json& j, SchoenbergData& s) {
    s.q_minus_k = j.at("q_minus_k").get<std::int64_t>();
    s.is_square = j.at("is_square").get<bool>();
    if (j.at("odd_squares").is_null())
        s.odd_squares.reset();
    else
        s.odd_squares = std::pair{j["odd_squares"][0].get<std::uint64_t>(), j["odd_squares"][1].get<std::uint64_t>()};
    if (j.at("geometric_exponent").is_null())
        s.geometric_exponent.reset();
    else
        s.geometric_exponent = j["geometric_exponent"].get<unsigned>();
}

namespace detail {

inline std::optional<std::int64_t> opt_int(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<std::int64_t>();
}

// Certificates nested in a report also appear in its flat certificate list;
// rebuild the nested copies from it.
inline VerifySuiteResult select_checks(const VerifySuiteResult& all, std::initializer_list<const char*> names) {
    VerifySuiteResult out;
    for (const auto& c : all.checks)
        for (const char* n : names)
            if (c.name == n) out.checks.push_back(c);
    return out;
}

}  // namespace detail

inline void to_json(Json& j, const DiffSetReport& r) {
    j = Json{{"q", r.q},
             {"ell", r.ell},
             {"k", r.k},
             {"qprime", r.qprime},
             {"verdicts", r.verdicts},
             {"is_diffset", r.is_diffset},
             {"detector_checks", r.detector_checks.checks},
             {"certificates", r.certificates.checks},
             {"pass", r.all_pass()}};
    j["lambda"] = r.lambda ? Json(*r.lambda) : Json(nullptr);
    if (r.determinants) j["determinants"] = Json{{"a", r.determinants->a}, {"b", r.determinants->b}};
    if (r.spectrum) j["spectrum"] = *r.spectrum;
    if (r.schoenberg) j["schoenberg"] = *r.schoenberg;
}

inline void from_json(const Json& j, DiffSetReport& r) {
    r = DiffSetReport{};
    r.q = j.at("q").get<std::int64_t>();
    r.ell = j.at("ell").get<std::int64_t>();
    r.k = j.at("k").get<std::int64_t>();
    r.qprime = j.at("qprime").get<std::int64_t>();
    r.lambda = detail::opt_int(j, "lambda");
    r.verdicts = j.at("verdicts").get<DetectorVerdicts>();
    r.is_diffset = j.at("is_diffset").get<bool>();
    r.detector_checks.checks = j.at("detector_checks").get<std::deque<Check>>();
    r.certificates.checks = j.at("certificates").get<std::deque<Check>>();
    if (j.contains("determinants")) {
        DeterminantCertificate d;
        d.a = j["determinants"].at("a").get<DeterminantValues>();
        d.b = j["determinants"].at("b").get<DeterminantValues>();
        d.checks = detail::select_checks(r.certificates, {"det_a", "det_b"});
        r.determinants = std::move(d);
    }
    if (j.contains("spectrum")) r.spectrum = j["spectrum"].get<SpectralData>();
    if (j.contains("schoenberg")) {
        SchoenbergData s = j["schoenberg"].get<SchoenbergData>();
        s.checks = detail::select_checks(r.certificates, {"square_excess", "geometric_lambda", "unit_lambda_ell"});
        r.schoenberg = std::move(s);
    }
}

inline void to_json(Json& j, const ModifiedDiffSetReport& r) {
    j = Json{{"q", r.q},
             {"ell", r.ell},
             {"k0", r.k0},
             {"verdicts", Json{{"bruteforce", r.bruteforce}, {"lehmer_modified", r.lehmer_modified}, {"agree", r.agree()}}},
             {"certificates", r.certificates.checks},
             {"pass", r.all_pass()}};
    j["lambda0"] = r.lambda0 ? Json(*r.lambda0) : Json(nullptr);
}

inline void from_json(const Json& j, ModifiedDiffSetReport& r) {
    r = ModifiedDiffSetReport{};
    r.q = j.at("q").get<std::int64_t>();
    r.ell = j.at("ell").get<std::int64_t>();
    r.k0 = j.at("k0").get<std::int64_t>();
    r.lambda0 = detail::opt_int(j, "lambda0");
    r.bruteforce = j.at("verdicts").at("bruteforce").get<bool>();
    r.lehmer_modified = j.at("verdicts").at("lehmer_modified").get<bool>();
    r.certificates.checks = j.at("certificates").get<std::deque<Check>>();
}

inline void to_json(Json& j, const SearchHit& h) {
    j = Json{{"p", h.p},
             {"n", h.n},
             {"generator", h.generator},
             {"q_is_prime", h.q_is_prime},
             {"k_is_square", h.k_is_square},
             {"report", h.report}};
}

inline void from_json(const Json& j, SearchHit& h) {
    h.p = j.at("p").get<std::uint64_t>();
    h.n = j.at("n").get<unsigned>();
    h.generator = j.at("generator").get<std::uint32_t>();
    h.q_is_prime = j.at("q_is_prime").get<bool>();
    h.k_is_square = j.at("k_is_square").get<bool>();
    h.report = j.at("report").get<DiffSetReport>();
}

inline void to_json(Json& j, const ColumnSurvey& s) {
    j = Json::object();
    Json cols = Json::array();
    for (const auto& e : s.columns) cols.push_back(Json{{"column", e.column}, {"permutation", e.permutation}});
    j["columns"] = std::move(cols);
    j["all_permutations"] = s.all_permutations();
}

inline void from_json(const Json& j, ColumnSurvey& s) {
    s.columns.clear();
    for (const auto& e : j.at("columns"))
        s.columns.push_back({e.at("column").get<std::int64_t>(), e.at("permutation").get<bool>()});
}

/// Field description for run metadata.
inline Json field_json(const Field& f) {
    return Json{{"p", f.characteristic()},
                {"n", f.degree()},
                {"q", f.order()},
                {"modulus", f.modulus()},
                {"generator", f.generator().index}};
}

enum class Format { Json, Csv, Pretty };

inline Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "pretty") return Format::Pretty;
    throw Error(ErrorCode::ParseError, "unknown format '" + s + "'");
}

/// One matrix as CSV: one line per row, comma-separated decimal integers.
inline std::string matrix_csv(const IntMatrix& m) {
    std::ostringstream os;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? "," : "") << m(i, j);
        os << "\r\n";
    }
    return os.str();
}

/// Several matrices as one long-format CSV table: matrix,i,j,value.
inline std::string matrices_csv(const std::vector<std::pair<std::string, IntMatrix>>& ms) {
    if (ms.size() == 1) return matrix_csv(ms.front().second);
    std::ostringstream os;
    os << "matrix,i,j,value\r\n";
    for (const auto& [name, m] : ms)
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (std::size_t j = 0; j < m.dim(); ++j) os << name << ',' << i << ',' << j << ',' << m(i, j) << "\r\n";
    return os.str();
}

/// Bracketed, right-aligned layout.
inline std::string matrix_pretty(const std::string& name, const IntMatrix& m) {
    std::size_t w = 1;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) w = std::max(w, m(i, j).str().size());
    std::ostringstream os;
    os << name << " =\n";
    for (std::size_t i = 0; i < m.dim(); ++i) {
        os << "[";
        for (std::size_t j = 0; j < m.dim(); ++j) {
            const std::string s = m(i, j).str();
            os << ' ' << std::string(w - s.size(), ' ') << s;
        }
        os << " ]\n";
    }
    return os.str();
}

inline std::string matrices_pretty(const std::vector<std::pair<std::string, IntMatrix>>& ms) {
    std::string out;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += "\n";
        out += matrix_pretty(ms[i].first, ms[i].second);
    }
    return out;
}

}  // namespace cyclo
