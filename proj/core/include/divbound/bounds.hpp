#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "divbound/extended_real.hpp"
#include "divbound/generator.hpp"

namespace divbound {

/// Width, in TV units, to which invert() resolves the crossing.
inline constexpr double kInversionTolerance = 1e-10;
inline constexpr int kInversionMaxIterations = 200;
/// Grid used to screen custom generators before inverting.
inline constexpr std::size_t kMonotoneScreenPoints = 1001;

/// phi(t) = f(1 + t) + f(1 - t) on t in [0, 1], the lower envelope of D_f
/// as a function of TV / 2.
class BoundFunction {
public:
    explicit BoundFunction(Generator f) : f_(std::move(f)) {}

    const Generator& generator() const noexcept { return f_; }

    /// Throws DomainError outside [0, 1]. phi(1) uses f(0).
    ExtendedReal operator()(double t) const;

private:
    Generator f_;
};

ExtendedReal phi(const Generator& f, double t);

/// f(1 + tv/2) + f(1 - tv/2), which never exceeds D_f(mu, nu) for a pair at
/// total variation tv. DomainError outside [0, 2].
ExtendedReal lower_bound(const Generator& f, double tv);

enum class CertificateMethod { NumericInversion, BretagnolleHuber, HellingerClosedForm };

std::string_view to_string(CertificateMethod m);
/// ParseError on unknown names.
CertificateMethod certificate_method_from_string(std::string_view s);

struct TvCertificate {
    std::string divergence_name;
    ExtendedReal divergence_value;
    double tv_upper_bound = 2.0;
    CertificateMethod method = CertificateMethod::NumericInversion;

    friend bool operator==(const TvCertificate&, const TvCertificate&) = default;
};

/// Largest tv in [0, 2] with lower_bound(f, tv) <= d, by bisection on
/// t = tv / 2. The returned bound is the upper end of the final bracket, so
/// it is never below the true crossing and exceeds it by at most 1e-10.
///
/// Returns 2 when phi(1) <= d (in particular for d = +inf), and exactly 0
/// for d = 0 when f has a separation coefficient. Throws DomainError for
/// d < -1e-12, and NonMonotoneGenerator when a non-builtin generator fails
/// the monotonicity screen.
TvCertificate invert(const Generator& f, ExtendedReal d);

struct BretagnolleHuber {
    double tight = 0.0;  // 2 sqrt(1 - exp(-sh))
    double loose = 0.0;  // 2 sqrt(sh)
};

/// TV bounds from the SH divergence (= KL with swapped arguments), both
/// capped at 2. DomainError for negative input.
BretagnolleHuber bretagnolle_huber(ExtendedReal sh);

/// 2 - 2 (1 - sqrt(he))^2 for he < 1, else 2. Obtained from the Hellinger
/// lower bound by dropping the (sqrt(1 + TV/2) - 1)^2 term, so invert(HE, he)
/// is never looser. DomainError for negative input.
double hellinger_bound(ExtendedReal he);

struct Monotonicity {
    bool nondecreasing = false;  // every step >= -1e-12
    bool strict = false;         // every step > 0
};

/// phi on a uniform grid of grid_size points in [0, 1].
Monotonicity monotonicity(const Generator& f, std::size_t grid_size);

/// Nondecreasing on the grid; additionally strictly increasing when f has a
/// separation coefficient.
bool check_monotone(const Generator& f, std::size_t grid_size);

}  // namespace divbound
