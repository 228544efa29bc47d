#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/cyclotomy.hpp"
#include "cyclo/field.hpp"

namespace fixture {

struct Spec {
    std::uint64_t p;
    unsigned n;
    std::uint64_t ell;
    std::optional<std::uint32_t> generator = std::nullopt;

    std::uint64_t q() const {
        std::uint64_t q = 1;
        for (unsigned i = 0; i < n; ++i) q *= p;
        return q;
    }

    std::string name() const {
        return "q" + std::to_string(q()) + "_l" + std::to_string(ell);
    }
};

inline cyclo::Cyclotomy build(const Spec& s) {
    cyclo::FieldOptions fo;
    fo.generator = s.generator;
    auto f = std::make_shared<const cyclo::Field>(cyclo::Field::build(s.p, s.n, fo));
    return cyclo::Cyclotomy::build(f, s.ell);
}

inline cyclo::Cyclotomy build(std::uint64_t p, unsigned n, std::uint64_t ell,
                              std::optional<std::uint32_t> g = std::nullopt) {
    return build(Spec{p, n, ell, g});
}

/// Prime and prime-power fields up to 5000, both parities of k, l from 2 to 26.
inline const std::vector<Spec>& contexts() {
    static const std::vector<Spec> v = {
        {7, 1, 2},    {7, 1, 3},    {13, 1, 3},    {13, 1, 4},    {31, 1, 5},   {31, 1, 6},  {37, 1, 4, 2},
        {37, 1, 9},   {73, 1, 8, 5}, {101, 1, 4, 2}, {131, 1, 10, 2}, {197, 1, 4, 2}, {3, 2, 4},  {5, 2, 3},
        {3, 3, 2},    {3, 3, 26},   {7, 2, 6},     {3, 4, 5},     {11, 2, 8},   {5, 3, 4},   {13, 2, 6},
        {3, 5, 2},    {7, 3, 6},    {7, 3, 9},     {3, 6, 7},     {11, 3, 10},  {7, 4, 16},  {5, 5, 4},
        {4999, 1, 14}, {2003, 1, 22}, {1009, 1, 12},
    };
    return v;
}

}  // namespace fixture
