#include "divbound/bounds.hpp"

#include <algorithm>
#include <cmath>

#include "divbound/errors.hpp"

namespace divbound {
namespace {

// Roundoff allowance for divergence values handed to invert().
constexpr double kNonnegativityTolerance = 1e-12;

}  // namespace

ExtendedReal BoundFunction::operator()(double t) const {
    if (!(t >= 0.0 && t <= 1.0)) throw DomainError("phi: t must lie in [0, 1]");
    return f_(1.0 + t) + f_(1.0 - t);
}

ExtendedReal phi(const Generator& f, double t) { return BoundFunction(f)(t); }

ExtendedReal lower_bound(const Generator& f, double tv) {
    if (!(tv >= 0.0 && tv <= 2.0)) throw DomainError("lower_bound: tv must lie in [0, 2]");
    return phi(f, 0.5 * tv);
}

std::string_view to_string(CertificateMethod m) {
    switch (m) {
        case CertificateMethod::NumericInversion: return "numeric-inversion";
        case CertificateMethod::BretagnolleHuber: return "bretagnolle-huber";
        case CertificateMethod::HellingerClosedForm: return "hellinger-closed-form";
    }
    return "numeric-inversion";
}

CertificateMethod certificate_method_from_string(std::string_view s) {
    if (s == "numeric-inversion") return CertificateMethod::NumericInversion;
    if (s == "bretagnolle-huber") return CertificateMethod::BretagnolleHuber;
    if (s == "hellinger-closed-form") return CertificateMethod::HellingerClosedForm;
    throw ParseError("unknown certificate method '" + std::string(s) + "'");
}

TvCertificate invert(const Generator& f, ExtendedReal d) {
    if (d.raw() < -kNonnegativityTolerance)
        throw DomainError("invert: divergence must be nonnegative");
    const ExtendedReal level = d.raw() < 0.0 ? ExtendedReal{0.0} : d;

    TvCertificate cert{f.name(), level, 2.0, CertificateMethod::NumericInversion};

    if (!f.is_builtin() && !monotonicity(f, kMonotoneScreenPoints).nondecreasing)
        throw NonMonotoneGenerator(f.name());

    const BoundFunction bound(f);
    if (bound(1.0) <= level) return cert;
    // phi > 0 away from 0 whenever a separation coefficient exists.
    if (level.raw() == 0.0 && f.separation_coefficient()) {
        cert.tv_upper_bound = 0.0;
        return cert;
    }

    // Invariant: phi(lo) <= level < phi(hi). +inf compares above any level.
    double lo = 0.0;
    double hi = 1.0;
    const double width = 0.25 * kInversionTolerance;
    for (int i = 0; i < kInversionMaxIterations && hi - lo > width; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (bound(mid) <= level)
            lo = mid;
        else
            hi = mid;
    }
    cert.tv_upper_bound = std::min(2.0, 2.0 * hi);
    return cert;
}

BretagnolleHuber bretagnolle_huber(ExtendedReal sh) {
    if (sh.raw() < 0.0) throw DomainError("bretagnolle_huber: divergence must be nonnegative");
    if (sh.is_infinite()) return {2.0, 2.0};
    const double v = sh.raw();
    // -expm1(-v) = 1 - exp(-v) without cancellation near 0.
    const double tight = 2.0 * std::sqrt(-std::expm1(-v));
    const double loose = 2.0 * std::sqrt(v);
    return {std::min(tight, 2.0), std::min(loose, 2.0)};
}

double hellinger_bound(ExtendedReal he) {
    if (he.raw() < 0.0) throw DomainError("hellinger_bound: divergence must be nonnegative");
    if (!(he.raw() < 1.0)) return 2.0;
    const double r = 1.0 - std::sqrt(he.raw());
    return 2.0 - 2.0 * r * r;
}

Monotonicity monotonicity(const Generator& f, std::size_t grid_size) {
    if (grid_size < 2) throw DomainError("monotonicity: grid_size must be at least 2");
    const BoundFunction bound(f);
    Monotonicity m{true, true};
    ExtendedReal prev = bound(0.0);
    for (double t : uniform_grid(0.0, 1.0, grid_size)) {
        if (t == 0.0) continue;
        const ExtendedReal cur = bound(t);
        // inf - inf is treated as a flat step.
        const double step = (cur.is_infinite() && prev.is_infinite()) ? 0.0 : cur.raw() - prev.raw();
        if (step < -kGridTolerance) m.nondecreasing = false;
        if (!(step > 0.0)) m.strict = false;
        prev = cur;
    }
    if (!m.nondecreasing) m.strict = false;
    return m;
}

bool check_monotone(const Generator& f, std::size_t grid_size) {
    const Monotonicity m = monotonicity(f, grid_size);
    if (!m.nondecreasing) return false;
    return f.separation_coefficient() ? m.strict : true;
}

}  // namespace divbound
