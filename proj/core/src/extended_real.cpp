#include "divbound/extended_real.hpp"

#include <cctype>
#include <cerrno>
#include <cstdio>
#include <cstdlib>

namespace divbound {
namespace {

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

std::string format_extended(ExtendedReal x, int significant_digits) {
    if (x.is_infinite()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x.raw());
    return buf;
}

double parse_finite(std::string_view text) {
    const std::string s(trim(text));
    if (s.empty()) throw ParseError("expected a number, got an empty string");
    // strtod accepts "nan", "inf" and hex floats; only plain decimals are valid here.
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == '+' ||
              c == 'e' || c == 'E'))
            throw ParseError("'" + s + "' is not a finite decimal number");
    }
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
        throw ParseError("'" + s + "' is not a finite decimal number");
    return v;
}

ExtendedReal parse_extended(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (iequals(s, "inf") || iequals(s, "infinity")) return ExtendedReal::infinity();
    return ExtendedReal{parse_finite(s)};
}

}  // namespace divbound
