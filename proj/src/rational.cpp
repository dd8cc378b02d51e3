#include "rulehide/rational.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>

#include "rulehide/errors.hpp"

namespace rulehide {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide value, const char* context) {
    if (value > Wide(INT64_MAX) || value < Wide(INT64_MIN)) {
        throw std::overflow_error(std::string("rational overflow in ") + context);
    }
    return static_cast<std::int64_t>(value);
}

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
    if (denominator == 0) {
        throw ContractViolation("rational with zero denominator");
    }
    Wide n = numerator;
    Wide d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num_ = narrow(n, "constructor");
    den_ = narrow(d, "constructor");
}

Rational Rational::from_decimal(std::string_view text) {
    if (text.empty()) {
        throw ParamError("empty decimal literal");
    }
    std::int64_t integral = 0;
    std::int64_t fraction = 0;
    std::int64_t scale = 1;
    bool seen_digit = false;
    bool seen_dot = false;
    for (char c : text) {
        if (c == '.') {
            if (seen_dot) {
                throw ParamError("malformed decimal literal '" + std::string(text) + "'");
            }
            seen_dot = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParamError("malformed decimal literal '" + std::string(text) + "'");
        }
        seen_digit = true;
        int digit = c - '0';
        if (!seen_dot) {
            if (integral > (INT64_MAX - digit) / 10) {
                throw ParamError("decimal literal out of range '" + std::string(text) + "'");
            }
            integral = integral * 10 + digit;
        } else {
            if (scale > INT64_MAX / 10) {
                throw ParamError("too many fractional digits in '" + std::string(text) + "'");
            }
            scale *= 10;
            fraction = fraction * 10 + digit;
        }
    }
    if (!seen_digit) {
        throw ParamError("malformed decimal literal '" + std::string(text) + "'");
    }
    Wide num = Wide(integral) * scale + fraction;
    return Rational(narrow(num, "decimal literal"), scale);
}

Rational Rational::operator+(const Rational& other) const {
    Wide n = Wide(num_) * other.den_ + Wide(other.num_) * den_;
    Wide d = Wide(den_) * other.den_;
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "addition"), narrow(d, "addition"));
}

Rational Rational::operator-(const Rational& other) const {
    Wide n = Wide(num_) * other.den_ - Wide(other.num_) * den_;
    Wide d = Wide(den_) * other.den_;
    Wide g = wide_gcd(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n, "subtraction"), narrow(d, "subtraction"));
}

std::strong_ordering Rational::operator<=>(const Rational& other) const noexcept {
    Wide lhs = Wide(num_) * other.den_;
    Wide rhs = Wide(other.num_) * den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_fraction_string() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_decimal_string(int places) const {
    Wide pow10 = 1;
    for (int i = 0; i < places; ++i) pow10 *= 10;
    Wide n = num_;
    bool negative = n < 0;
    if (negative) n = -n;
    Wide scaled = n * pow10;
    Wide q = scaled / den_;
    Wide r = scaled % den_;
    if (2 * r >= den_) ++q;  // ties away from zero
    Wide whole = q / pow10;
    Wide frac = q % pow10;
    std::string out = negative && q != 0 ? "-" : "";
    out += std::to_string(static_cast<long long>(whole));
    if (places > 0) {
        std::string digits = std::to_string(static_cast<long long>(frac));
        out += '.';
        out += std::string(static_cast<std::size_t>(places) - digits.size(), '0');
        out += digits;
    }
    return out;
}

}  // namespace rulehide
