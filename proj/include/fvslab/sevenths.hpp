#pragma once

#include <compare>
#include <string>

namespace fvslab {

// Exact rational with fixed denominator 7.  Every error term in the bound
// arithmetic is a multiple of 1/7; floats would corrupt tightness checks.
struct Sevenths {
    int num = 0;  // value = num / 7

    constexpr Sevenths() = default;
    constexpr explicit Sevenths(int numerator) : num(numerator) {}

    friend constexpr Sevenths operator+(Sevenths a, Sevenths b) { return Sevenths(a.num + b.num); }
    friend constexpr Sevenths operator-(Sevenths a, Sevenths b) { return Sevenths(a.num - b.num); }
    friend constexpr auto operator<=>(Sevenths, Sevenths) = default;

    std::string str() const { return std::to_string(num) + "/7"; }
};

}  // namespace fvslab
