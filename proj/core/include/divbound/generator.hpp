#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "divbound/extended_real.hpp"

namespace divbound {

/// A convex function f on [0, inf) with f(1) = 0 that generates an
/// f-divergence. f is only ever called on (0, inf); the value at 0 is the
/// stored limit f(0+).
///
/// Optional metadata:
///  - separation coefficient a: g(x) = f(x) - a (x - 1) is nonnegative and
///    vanishes only at x = 1, which makes D_f(mu, nu) = 0 imply mu = nu;
///  - slope at infinity: lim f(x)/x as x -> inf, the value of the dual
///    generator at 0. When known, dual() uses it instead of sampling.
class Generator {
public:
    using Function = std::function<double(double)>;

    struct Metadata {
        ExtendedReal value_at_zero;
        std::optional<double> separation_coefficient;
        std::optional<ExtendedReal> slope_at_infinity;
    };

    /// Throws DomainError unless fn(1) == 0 exactly. The function must be
    /// finite on (0, inf).
    Generator(std::string name, Function fn, Metadata meta);

    const std::string& name() const noexcept { return name_; }
    ExtendedReal value_at_zero() const noexcept { return meta_.value_at_zero; }
    const std::optional<double>& separation_coefficient() const noexcept {
        return meta_.separation_coefficient;
    }
    const std::optional<ExtendedReal>& slope_at_infinity() const noexcept {
        return meta_.slope_at_infinity;
    }
    const Metadata& metadata() const noexcept { return meta_; }

    /// True for the five generators returned by builtin().
    bool is_builtin() const noexcept { return builtin_; }

    /// f(x) for x >= 0; f(0) is value_at_zero(). Throws DomainError for
    /// negative or NaN arguments.
    ExtendedReal operator()(double x) const;

private:
    friend Generator builtin(std::string_view name);

    std::string name_;
    Function fn_;
    Metadata meta_;
    bool builtin_ = false;
};

/// HE (sqrt(x) - 1)^2, TV |x - 1|, KL x log x, PE (x - 1)^2, and SH = dual(KL)
/// = -log x. Case-insensitive; throws UnknownGenerator otherwise.
Generator builtin(std::string_view name);

/// Canonical upper-case names of the builtins, in table order.
std::span<const std::string_view> builtin_names();

/// f*(x) = x f(1/x). D_{f*}(mu, nu) = D_f(nu, mu).
///
/// The value at zero is f's slope at infinity when that is known. Otherwise it
/// is estimated as x f(1/x) at x = 1e-12, and reported as +inf when that
/// exceeds 1e10; pass `value_at_zero` to override the estimate.
Generator dual(const Generator& f, std::optional<ExtendedReal> value_at_zero = std::nullopt);

/// Tolerances of the grid checks below.
inline constexpr double kGridTolerance = 1e-12;
inline constexpr double kSeparationExclusion = 1e-3;

/// g(x) = f(x) - a (x - 1) is >= -1e-12 on the grid and > 1e-12 at every grid
/// point with |x - 1| >= 1e-3. Throws DomainError unless the grid is nonempty
/// and contains 1.
bool check_separation(const Generator& f, double a, std::span<const double> grid);

/// f((x + y) / 2) <= (f(x) + f(y)) / 2 + 1e-12 for every pair of grid points.
bool check_midpoint_convexity(const Generator& f, std::span<const double> grid);

/// {lo, lo + step, ..., hi}, with `count` points.
std::vector<double> uniform_grid(double lo, double hi, std::size_t count);

}  // namespace divbound
