#include "divbound/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "divbound/errors.hpp"

namespace divbound::io {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string fmt(double x, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, x);
    return buf;
}

ordered_json number_or_inf(ExtendedReal x, int precision) {
    if (x.is_infinite()) return "inf";
    return round_significant(x.raw(), precision);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path.string() + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

SignedMeasure build(std::vector<Atom> atoms) {
    try {
        return SignedMeasure(std::move(atoms));
    } catch (const InvalidMeasure& e) {
        throw ParseError(e.what());
    }
}

ordered_json measure_json(const SignedMeasure& m, int precision) {
    ordered_json atoms = ordered_json::array();
    for (const Atom& a : m.atoms())
        atoms.push_back(ordered_json{{"id", a.id}, {"w", round_significant(a.weight, precision)}});
    return ordered_json{{"atoms", std::move(atoms)}};
}

}  // namespace

double round_significant(double x, int precision) {
    if (!std::isfinite(x)) return x;
    return std::strtod(fmt(x, precision).c_str(), nullptr);
}

SignedMeasure parse_measure_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed measure JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("atoms") || !doc["atoms"].is_array())
        throw ParseError("measure JSON must be an object with an \"atoms\" array");
    std::vector<Atom> atoms;
    for (const json& entry : doc["atoms"]) {
        if (!entry.is_object() || !entry.contains("id") || !entry.contains("w"))
            throw ParseError("each atom needs \"id\" and \"w\" fields");
        if (!entry["id"].is_string()) throw ParseError("atom id must be a string");
        const std::string id = entry["id"].get<std::string>();
        if (!entry["w"].is_number())
            throw ParseError("weight of atom '" + id + "' must be a finite number");
        const double w = entry["w"].get<double>();
        if (!std::isfinite(w)) throw ParseError("weight of atom '" + id + "' is not finite");
        atoms.push_back({id, w});
    }
    return build(std::move(atoms));
}

SignedMeasure parse_measure_csv(std::string_view text) {
    std::vector<Atom> atoms;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty()) continue;
        const std::size_t comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("line " + std::to_string(line_no) + ": expected two columns 'id,w'");
        const std::string_view id = trim(line.substr(0, comma));
        const std::string_view w = trim(line.substr(comma + 1));
        if (!header_seen) {
            if (id != "id" || w != "w")
                throw ParseError("CSV measure must start with the header 'id,w'");
            header_seen = true;
            continue;
        }
        if (id.empty()) throw ParseError("line " + std::to_string(line_no) + ": empty atom id");
        double weight = 0.0;
        try {
            weight = parse_finite(w);
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ", atom '" + std::string(id) +
                             "': " + e.what());
        }
        atoms.push_back({std::string(id), weight});
    }
    if (!header_seen) throw ParseError("CSV measure must start with the header 'id,w'");
    return build(std::move(atoms));
}

SignedMeasure read_signed_measure(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    std::string ext = path.extension().string();
    for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (ext == ".json") return parse_measure_json(text);
    if (ext == ".csv") return parse_measure_csv(text);
    const std::string_view body = trim(text);
    if (!body.empty() && body.front() == '{') return parse_measure_json(text);
    return parse_measure_csv(text);
}

ProbabilityMeasure read_probability_measure(const std::filesystem::path& path) {
    const SignedMeasure m = read_signed_measure(path);
    try {
        return ProbabilityMeasure(m.atoms());
    } catch (const InvalidMeasure& e) {
        throw ParseError("'" + path.string() + "': " + e.what());
    }
}

std::string measure_to_json(const SignedMeasure& m, int precision) {
    return measure_json(m, precision).dump();
}

std::string measure_to_csv(const SignedMeasure& m, int precision) {
    std::string out = "id,w\n";
    for (const Atom& a : m.atoms()) out += a.id + "," + fmt(a.weight, precision) + "\n";
    return out;
}

std::string certificate_to_json(const TvCertificate& c, int precision) {
    ordered_json j{{"divergence", c.divergence_name},
                   {"value", number_or_inf(c.divergence_value, precision)},
                   {"tv_upper_bound", round_significant(c.tv_upper_bound, precision)},
                   {"method", std::string(to_string(c.method))}};
    return j.dump();
}

TvCertificate certificate_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed certificate JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("certificate must be a JSON object");
    for (const char* key : {"divergence", "value", "tv_upper_bound", "method"})
        if (!j.contains(key)) throw ParseError(std::string("certificate is missing '") + key + "'");
    if (!j["divergence"].is_string() || !j["method"].is_string() ||
        !j["tv_upper_bound"].is_number())
        throw ParseError("certificate fields have the wrong types");
    TvCertificate c;
    c.divergence_name = j["divergence"].get<std::string>();
    const json& value = j["value"];
    if (value.is_string()) {
        c.divergence_value = parse_extended(value.get<std::string>());
    } else if (value.is_number()) {
        c.divergence_value = ExtendedReal{value.get<double>()};
    } else {
        throw ParseError("certificate value must be a number or \"inf\"");
    }
    c.tv_upper_bound = j["tv_upper_bound"].get<double>();
    if (!(c.tv_upper_bound >= 0.0 && c.tv_upper_bound <= 2.0))
        throw ParseError("certificate tv_upper_bound must lie in [0, 2]");
    c.method = certificate_method_from_string(j["method"].get<std::string>());
    return c;
}

std::string decomposition_to_json(const HahnDecomposition& d, int precision) {
    ordered_json j{{"positive_set", d.positive_set},
                   {"negative_set", d.negative_set},
                   {"upper", measure_json(d.upper, precision)},
                   {"lower", measure_json(d.lower, precision)},
                   {"upper_total", round_significant(d.upper.total_mass(), precision)},
                   {"lower_total", round_significant(d.lower.total_mass(), precision)}};
    return j.dump();
}

std::string report_to_json(const VerificationReport& r, int precision) {
    ordered_json j{{"generator", r.generator_name},
                   {"trials", r.trials},
                   {"max_violation", round_significant(r.max_violation, precision)},
                   {"passed", r.passed()},
                   {"seed", r.seed},
                   {"worst_pair",
                    ordered_json{{"mu", measure_json(r.worst_pair.mu.as_signed(), precision)},
                                 {"nu", measure_json(r.worst_pair.nu.as_signed(), precision)}}}};
    return j.dump();
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRecord>& records, int precision) {
    out << "p,q,tv,divergence,lower_bound,slack\n";
    for (const ScanRecord& r : records) {
        out << fmt(r.p, precision) << ',' << fmt(r.q, precision) << ',' << fmt(r.tv, precision)
            << ',' << format_extended(r.divergence, precision) << ','
            << format_extended(r.lower_bound, precision) << ','
            << format_extended(r.slack, precision) << '\n';
    }
}

}  // namespace divbound::io
