#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace rulehide {

/// Exact rational number over int64, always normalized (positive
/// denominator, gcd(|num|, den) = 1). Confidences, priorities and hiding
/// targets are compared with these so threshold ties never depend on
/// floating-point rounding.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {}
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses a non-negative decimal literal ("0.75", ".5", "1") into the
    /// exact fraction it denotes. Throws ParamError on malformed input or
    /// more than 18 fractional digits.
    static Rational from_decimal(std::string_view text);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_ == 0; }

    Rational operator+(const Rational& other) const;
    Rational operator-(const Rational& other) const;

    std::strong_ordering operator<=>(const Rational& other) const noexcept;
    bool operator==(const Rational& other) const noexcept {
        return num_ == other.num_ && den_ == other.den_;
    }

    /// "num/den", e.g. "3/4", "1/1".
    std::string to_fraction_string() const;

    /// Fixed-point decimal with `places` fractional digits, exact integer
    /// arithmetic, ties rounded away from zero. "0.083333" for 1/12 at 6.
    std::string to_decimal_string(int places) const;

    double to_double() const noexcept {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace rulehide
