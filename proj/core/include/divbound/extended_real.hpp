#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <string>
#include <string_view>

#include "divbound/errors.hpp"

namespace divbound {

/// A real number or +inf. NaN and -inf are not representable; constructing
/// from either throws DomainError.
///
/// Divergences, generator values and the bound function all live here. The
/// arithmetic is the usual extended-real one restricted to the operations we
/// need: finite + inf = inf, and multiplication by a nonnegative finite scale
/// where 0 * inf = 0 (measure-zero convention).
class ExtendedReal {
public:
    constexpr ExtendedReal() noexcept = default;
    // NOLINTNEXTLINE(google-explicit-constructor)
    ExtendedReal(double v) : value_(v) {
        if (std::isnan(v)) throw DomainError("ExtendedReal: NaN is not an extended real");
        if (v == -std::numeric_limits<double>::infinity())
            throw DomainError("ExtendedReal: -inf is not representable");
    }

    static ExtendedReal infinity() noexcept {
        ExtendedReal r;
        r.value_ = std::numeric_limits<double>::infinity();
        return r;
    }

    bool is_infinite() const noexcept { return std::isinf(value_); }
    bool is_finite() const noexcept { return !is_infinite(); }

    /// The finite value; throws DomainError on +inf.
    double finite() const {
        if (is_infinite()) throw DomainError("ExtendedReal: value is +inf");
        return value_;
    }

    /// Raw double, +inf encoded as IEEE infinity.
    constexpr double raw() const noexcept { return value_; }

    friend ExtendedReal operator+(ExtendedReal a, ExtendedReal b) noexcept {
        ExtendedReal r;
        r.value_ = a.value_ + b.value_;
        return r;
    }
    ExtendedReal& operator+=(ExtendedReal other) noexcept { return *this = *this + other; }

    /// scale * x for finite scale >= 0, with 0 * inf = 0.
    friend ExtendedReal scaled(double scale, ExtendedReal x) {
        if (!(scale >= 0.0) || std::isinf(scale))
            throw DomainError("ExtendedReal: scale must be finite and nonnegative");
        if (scale == 0.0) return ExtendedReal{0.0};
        ExtendedReal r;
        r.value_ = scale * x.value_;
        return r;
    }

    friend constexpr bool operator==(ExtendedReal a, ExtendedReal b) noexcept {
        return a.value_ == b.value_;
    }
    friend constexpr std::partial_ordering operator<=>(ExtendedReal a, ExtendedReal b) noexcept {
        return a.value_ <=> b.value_;
    }

private:
    double value_ = 0.0;
};

/// "inf" or the value printed with `significant_digits` significant digits.
std::string format_extended(ExtendedReal x, int significant_digits = 9);

/// Parses "inf" (case-insensitive, optional leading '+') or a finite decimal.
/// Rejects NaN, -inf and trailing garbage with ParseError.
ExtendedReal parse_extended(std::string_view text);

/// Parses a finite double; ParseError on anything else.
double parse_finite(std::string_view text);

}  // namespace divbound
