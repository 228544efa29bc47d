#pragma once

#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/serialize.hpp"

namespace cyclo {

/// One named identity check. A failing check carries the first counterexample
/// found, including exact residual matrices where the identity is matricial.
struct Check {
    std::string name;
    Json params = Json::object();
    bool pass = true;
    std::optional<Json> counterexample;

    friend bool operator==(const Check&, const Check&) = default;
};

/// Ordered ledger of checks. Deque storage keeps references returned by add()
/// valid while further checks are appended.
struct VerifySuiteResult {
    std::deque<Check> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    Check& add(std::string name, Json params = Json::object()) {
        checks.push_back(Check{std::move(name), std::move(params), true, std::nullopt});
        return checks.back();
    }

    void append(const VerifySuiteResult& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    friend bool operator==(const VerifySuiteResult&, const VerifySuiteResult&) = default;
};

/// Marks the check failed, keeping only the first counterexample.
inline void fail(Check& c, Json counterexample) {
    if (c.pass) c.counterexample = std::move(counterexample);
    c.pass = false;
}

/// Compares two matrices; on mismatch records both sides and their difference.
inline bool expect_equal(Check& c, const IntMatrix& lhs, const IntMatrix& rhs, Json where = Json::object()) {
    if (lhs == rhs) return true;
    where["lhs"] = lhs;
    where["rhs"] = rhs;
    if (lhs.dim() == rhs.dim()) where["residual"] = lhs - rhs;
    fail(c, std::move(where));
    return false;
}

inline bool expect_equal(Check& c, const BigInt& lhs, const BigInt& rhs, Json where = Json::object()) {
    if (lhs == rhs) return true;
    where["lhs"] = lhs.str();
    where["rhs"] = rhs.str();
    fail(c, std::move(where));
    return false;
}

inline void to_json(Json& j, const Check& c) {
    j = Json{{"check", c.name}, {"params", c.params}, {"pass", c.pass}};
    if (c.counterexample) j["counterexample"] = *c.counterexample;
}

inline void from_json(const Json& j, Check& c) {
    c.name = j.at("check").get<std::string>();
    c.params = j.value("params", Json::object());
    c.pass = j.at("pass").get<bool>();
    if (j.contains("counterexample"))
        c.counterexample = j.at("counterexample");
    else
        c.counterexample.reset();
}

inline void to_json(Json& j, const VerifySuiteResult& r) {
    j = Json{{"checks", r.checks}, {"pass", r.all_pass()}};
}

inline void from_json(const Json& j, VerifySuiteResult& r) { r.checks = j.at("checks").get<std::deque<Check>>(); }

}  // namespace cyclo
