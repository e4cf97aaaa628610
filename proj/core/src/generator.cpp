#include "divbound/generator.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>

#include "divbound/errors.hpp"

namespace divbound {
namespace {

constexpr std::array<std::string_view, 5> kBuiltinNames = {"HE", "TV", "KL", "PE", "SH"};

constexpr double kDualSampleAt = 1e-12;
constexpr double kDualInfinityThreshold = 1e10;

std::string upper_case(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return out;
}

}  // namespace

Generator::Generator(std::string name, Function fn, Metadata meta)
    : name_(std::move(name)), fn_(std::move(fn)), meta_(meta) {
    if (!fn_) throw DomainError("generator '" + name_ + "' has no function");
    const double at_one = fn_(1.0);
    if (at_one != 0.0)
        throw DomainError("generator '" + name_ + "' does not vanish at 1 (f(1) = " +
                          std::to_string(at_one) + ")");
}

ExtendedReal Generator::operator()(double x) const {
    if (!(x >= 0.0)) throw DomainError("generator '" + name_ + "' evaluated at a negative argument");
    if (x == 0.0) return meta_.value_at_zero;
    if (std::isinf(x)) throw DomainError("generator '" + name_ + "' evaluated at +inf");
    return ExtendedReal{fn_(x)};
}

Generator builtin(std::string_view name) {
    const std::string key = upper_case(name);
    const ExtendedReal inf = ExtendedReal::infinity();
    auto make = [&](Generator::Function fn, Generator::Metadata meta) {
        Generator g(key, std::move(fn), meta);
        g.builtin_ = true;
        return g;
    };
    if (key == "HE") {
        return make([](double x) { const double r = std::sqrt(x) - 1.0; return r * r; },
                    {ExtendedReal{1.0}, 0.0, ExtendedReal{1.0}});
    }
    if (key == "TV") {
        // No separation coefficient is recorded for TV; see check_separation tests.
        return make([](double x) { return std::abs(x - 1.0); },
                    {ExtendedReal{1.0}, std::nullopt, ExtendedReal{1.0}});
    }
    if (key == "KL") {
        return make([](double x) { return x * std::log(x); }, {ExtendedReal{0.0}, 1.0, inf});
    }
    if (key == "PE") {
        return make([](double x) { const double r = x - 1.0; return r * r; },
                    {ExtendedReal{1.0}, 0.0, inf});
    }
    if (key == "SH") {
        // dual(KL) in closed form. The separation coefficient of a dual is the
        // negated coefficient of the original, so a = -1 here.
        return make([](double x) { return -std::log(x); }, {inf, -1.0, ExtendedReal{0.0}});
    }
    throw UnknownGenerator(std::string(name));
}

std::span<const std::string_view> builtin_names() { return kBuiltinNames; }

Generator dual(const Generator& f, std::optional<ExtendedReal> value_at_zero) {
    auto fn = [f](double x) {
        const ExtendedReal v = f(1.0 / x);
        return x * v.raw();
    };
    Generator::Metadata meta{};
    if (value_at_zero) {
        meta.value_at_zero = *value_at_zero;
    } else if (f.slope_at_infinity()) {
        meta.value_at_zero = *f.slope_at_infinity();
    } else {
        const double sample = fn(kDualSampleAt);
        meta.value_at_zero =
            sample > kDualInfinityThreshold ? ExtendedReal::infinity() : ExtendedReal{sample};
    }
    if (f.separation_coefficient()) meta.separation_coefficient = -*f.separation_coefficient();
    meta.slope_at_infinity = f.value_at_zero();
    return Generator("dual(" + f.name() + ")", std::move(fn), meta);
}

bool check_separation(const Generator& f, double a, std::span<const double> grid) {
    if (grid.empty()) throw DomainError("check_separation: empty grid");
    if (std::find(grid.begin(), grid.end(), 1.0) == grid.end())
        throw DomainError("check_separation: grid must contain 1");
    for (double x : grid) {
        const ExtendedReal fx = f(x);
        const double g = fx.raw() - a * (x - 1.0);
        if (g < -kGridTolerance) return false;
        if (std::abs(x - 1.0) >= kSeparationExclusion && !(g > kGridTolerance)) return false;
    }
    return true;
}

bool check_midpoint_convexity(const Generator& f, std::span<const double> grid) {
    std::vector<double> values;
    values.reserve(grid.size());
    for (double x : grid) values.push_back(f(x).raw());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = i + 1; j < grid.size(); ++j) {
            const double mid = f(0.5 * (grid[i] + grid[j])).raw();
            const double chord = 0.5 * (values[i] + values[j]);
            if (!(mid <= chord + kGridTolerance)) return false;
        }
    }
    return true;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t count) {
    if (count < 2) throw DomainError("uniform_grid needs at least two points");
    std::vector<double> g(count);
    const double span = hi - lo;
    for (std::size_t i = 0; i < count; ++i)
        g[i] = lo + span * static_cast<double>(i) / static_cast<double>(count - 1);
    g.back() = hi;
    return g;
}

}  // namespace divbound
