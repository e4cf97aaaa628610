#include "cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "divbound/divbound.hpp"

namespace divbound::cli {
namespace {

constexpr int kDefaultPrecision = 9;

// Raised for argument problems found after CLI11 has accepted the command line.
class UsageError : public Error {
public:
    using Error::Error;
};

int resolve_precision(const CliConfig& cfg) {
    if (cfg.precision) return *cfg.precision;
    if (const char* env = std::getenv("DIVBOUND_PRECISION"); env && *env) {
        const std::string text(env);
        int value = 0;
        try {
            value = std::stoi(text);
        } catch (const std::exception&) {
            throw UsageError("DIVBOUND_PRECISION must be an integer in [1, 17], got '" + text + "'");
        }
        if (value < 1 || value > 17)
            throw UsageError("DIVBOUND_PRECISION must be an integer in [1, 17], got '" + text + "'");
        return value;
    }
    return kDefaultPrecision;
}

std::string num(double x, int precision) { return format_extended(ExtendedReal{x}, precision); }

void run_compute(const CliConfig& cfg, int precision, std::ostream& out) {
    const Generator f = builtin(cfg.generator);
    const ProbabilityMeasure mu = io::read_probability_measure(cfg.mu_path);
    const ProbabilityMeasure nu = io::read_probability_measure(cfg.nu_path);
    const DivergenceValue v = d_f(f, mu, nu);
    if (cfg.format.value_or(OutputFormat::Plain) == OutputFormat::Json) {
        nlohmann::ordered_json j{{"divergence", v.generator_name}};
        if (v.value.is_infinite())
            j["value"] = "inf";
        else
            j["value"] = io::round_significant(v.value.raw(), precision);
        out << j.dump() << '\n';
    } else {
        out << format_extended(v.value, precision) << '\n';
    }
}

void run_bound(const CliConfig& cfg, int precision, std::ostream& out) {
    const Generator f = builtin(cfg.generator);
    const double tv = parse_finite(cfg.tv);
    const ExtendedReal lb = lower_bound(f, tv);
    if (cfg.format.value_or(OutputFormat::Plain) == OutputFormat::Json) {
        nlohmann::ordered_json j{{"divergence", f.name()},
                                 {"tv", io::round_significant(tv, precision)}};
        if (lb.is_infinite())
            j["lower_bound"] = "inf";
        else
            j["lower_bound"] = io::round_significant(lb.raw(), precision);
        out << j.dump() << '\n';
    } else {
        out << format_extended(lb, precision) << '\n';
    }
}

void run_invert(const CliConfig& cfg, int precision, std::ostream& out) {
    const Generator f = builtin(cfg.generator);
    const ExtendedReal d = parse_extended(cfg.d);
    TvCertificate cert;
    switch (certificate_method_from_string(cfg.method)) {
        case CertificateMethod::NumericInversion:
            cert = invert(f, d);
            break;
        case CertificateMethod::BretagnolleHuber:
            if (f.name() != "SH")
                throw UsageError("--method bretagnolle-huber needs --gen sh");
            cert = {f.name(), d, bretagnolle_huber(d).tight, CertificateMethod::BretagnolleHuber};
            break;
        case CertificateMethod::HellingerClosedForm:
            if (f.name() != "HE")
                throw UsageError("--method hellinger-closed-form needs --gen he");
            cert = {f.name(), d, hellinger_bound(d), CertificateMethod::HellingerClosedForm};
            break;
    }
    out << io::certificate_to_json(cert, precision) << '\n';
}

void run_verify(const CliConfig& cfg, int precision, std::ostream& out) {
    const VerificationReport r =
        verify_bound(builtin(cfg.generator), cfg.trials, cfg.max_support, cfg.seed);
    out << io::report_to_json(r, precision) << '\n';
}

void run_scan(const CliConfig& cfg, int precision, std::ostream& out) {
    io::write_scan_csv(out, scan_binary(builtin(cfg.generator), cfg.resolution), precision);
}

void run_decompose(const CliConfig& cfg, int precision, std::ostream& out) {
    const SignedMeasure nu = io::read_signed_measure(cfg.nu_path);
    const HahnDecomposition d = hahn_jordan(nu);
    if (cfg.format.value_or(OutputFormat::Json) == OutputFormat::Plain) {
        auto join = [](const std::set<std::string>& s) {
            std::string r;
            for (const std::string& id : s) r += (r.empty() ? "" : " ") + id;
            return r;
        };
        out << "positive_set: " << join(d.positive_set) << '\n'
            << "negative_set: " << join(d.negative_set) << '\n'
            << "upper_total: " << num(d.upper.total_mass(), precision) << '\n'
            << "lower_total: " << num(d.lower.total_mass(), precision) << '\n'
            << "total_variation: " << num(total_variation_norm(nu), precision) << '\n';
    } else {
        out << io::decomposition_to_json(d, precision) << '\n';
    }
}

void add_generator(CLI::App* sub, CliConfig& cfg) {
    sub->add_option("--gen", cfg.generator, "Generator: he, tv, kl, pe or sh")->required();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliConfig cfg;
    CLI::App app{"Divergences between finite measures and certified total-variation bounds",
                 "divbound"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    const std::map<std::string, OutputFormat> formats{
        {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"plain", OutputFormat::Plain}};
    app.add_option("--format", cfg.format, "Output format: json, csv or plain")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--precision", cfg.precision,
                   "Significant digits in printed numbers (default 9, env DIVBOUND_PRECISION)")
        ->check(CLI::Range(1, 17));

    auto* compute = app.add_subcommand("compute", "Print D_f(mu, nu)");
    add_generator(compute, cfg);
    compute->add_option("--mu", cfg.mu_path, "Measure file for mu (JSON or CSV)")->required();
    compute->add_option("--nu", cfg.nu_path, "Measure file for nu (JSON or CSV)")->required();

    auto* bound = app.add_subcommand("bound", "Print the divergence lower bound at a given TV");
    add_generator(bound, cfg);
    bound->add_option("--tv", cfg.tv, "Total variation in [0, 2]")->required();

    auto* inv = app.add_subcommand("invert", "Certify an upper bound on TV from a divergence value");
    add_generator(inv, cfg);
    inv->add_option("--d", cfg.d, "Divergence value (number or inf)")->required();
    inv->add_option("--method", cfg.method,
                    "numeric-inversion (default), bretagnolle-huber (sh) or hellinger-closed-form (he)");

    auto* verify = app.add_subcommand("verify", "Check the lower bound on seeded random pairs");
    add_generator(verify, cfg);
    verify->add_option("--trials", cfg.trials, "Number of random pairs")->check(CLI::PositiveNumber);
    verify->add_option("--max-support", cfg.max_support, "Largest support size (>= 2)");
    verify->add_option("--seed", cfg.seed, "Seed of the counter stream");

    auto* scan = app.add_subcommand("scan", "Scan Bernoulli pairs on a grid, CSV output");
    add_generator(scan, cfg);
    scan->add_option("--resolution", cfg.resolution, "Grid points per axis (>= 2)");

    auto* decompose = app.add_subcommand("decompose", "Hahn-Jordan decomposition of a signed measure");
    decompose->add_option("--nu", cfg.nu_path, "Signed measure file (JSON or CSV)")->required();

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "divbound: " << e.what() << '\n';
        return kExitUsage;
    }

    const std::pair<CLI::App*, Subcommand> table[] = {
        {compute, Subcommand::Compute}, {bound, Subcommand::Bound},   {inv, Subcommand::Invert},
        {verify, Subcommand::Verify},   {scan, Subcommand::Scan},     {decompose, Subcommand::Decompose}};
    for (const auto& [sub, kind] : table)
        if (sub->parsed()) cfg.subcommand = kind;

    try {
        const int precision = resolve_precision(cfg);
        std::ostringstream buffer;  // nothing reaches `out` unless the command succeeds
        switch (cfg.subcommand) {
            case Subcommand::Compute: run_compute(cfg, precision, buffer); break;
            case Subcommand::Bound: run_bound(cfg, precision, buffer); break;
            case Subcommand::Invert: run_invert(cfg, precision, buffer); break;
            case Subcommand::Verify: run_verify(cfg, precision, buffer); break;
            case Subcommand::Scan: run_scan(cfg, precision, buffer); break;
            case Subcommand::Decompose: run_decompose(cfg, precision, buffer); break;
        }
        out << buffer.str();
        return kExitOk;
    } catch (const ParseError& e) {
        err << "divbound: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UnknownGenerator& e) {
        err << "divbound: " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "divbound: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        // DomainError, AbsoluteContinuityViolation, InvalidMeasure, NonMonotoneGenerator
        err << "divbound: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace divbound::cli
