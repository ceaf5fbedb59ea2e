// Command-line front end: runs the verification suites over parameter grids
// and writes machine-readable reports.
//
// Exit codes: 0 all asserted checks passed, 1 at least one asserted check
// failed, 2 usage/configuration/I-O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "wzsum/suite.hpp"

namespace {

using wzsum::RunConfig;
using wzsum::SuiteResult;

enum class Format { Json, Csv, Text };

struct OutputOptions {
    Format format = Format::Json;
    std::string path; // empty: stdout, or $WZSUM_OUTPUT_DIR/<command>.<ext>
};

void add_output_options(CLI::App* cmd, OutputOptions& out) {
    std::map<std::string, Format> formats{
        {"json", Format::Json}, {"csv", Format::Csv}, {"text", Format::Text}};
    cmd->add_option("--format", out.format, "Report format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
        ->default_str("json");
    cmd->add_option("--out", out.path,
                    "Output file (default: stdout, or $WZSUM_OUTPUT_DIR/<command>.<ext>)");
}

const char* extension(Format f) {
    switch (f) {
    case Format::Json: return "json";
    case Format::Csv: return "csv";
    case Format::Text: return "txt";
    }
    return "out";
}

std::string resolve_path(const OutputOptions& out, const std::string& command) {
    if (!out.path.empty())
        return out.path;
    if (const char* dir = std::getenv("WZSUM_OUTPUT_DIR"); dir != nullptr && *dir != '\0')
        return std::string(dir) + "/" + command + "." + extension(out.format);
    return {};
}

int emit(const SuiteResult& result, const OutputOptions& out, const std::string& command) {
    std::string rendered;
    switch (out.format) {
    case Format::Json: rendered = result.records.to_json(command); break;
    case Format::Csv: rendered = result.records.to_csv(); break;
    case Format::Text: rendered = result.records.to_text(command); break;
    }

    std::string path = resolve_path(out, command);
    if (path.empty()) {
        std::cout << rendered;
    } else {
        std::ofstream file(path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << path << "'\n";
            return 2;
        }
        file << rendered;
        if (!file.good()) {
            std::cerr << "error: failed writing '" << path << "'\n";
            return 2;
        }
        std::cerr << "report written to " << path << "\n";
    }
    return result.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of telescoping hypergeometric identities, their WZ-style "
                 "certificates, and binomial-sum supercongruences modulo prime powers"};
    app.require_subcommand(1);

    RunConfig config;
    OutputOptions out;

    // verify-identity
    auto* identity = app.add_subcommand(
        "verify-identity", "Check both sides of the telescoped identities over an (l, s, M) grid");
    identity->add_option("--theorem", config.theorem, "Restrict to theorem 1 or 2 (default: both)")
        ->check(CLI::Range(1, 2));
    identity->add_option("--lmax", config.lmax, "Largest l in the grid")->check(CLI::PositiveNumber);
    identity->add_option("--smax", config.smax, "Largest s in the grid")
        ->check(CLI::NonNegativeNumber);
    identity->add_option("--mextent", config.mextent, "M runs from s to s + mextent")
        ->check(CLI::NonNegativeNumber);
    identity->add_flag("--replay", config.replay, "Also replay the telescoping proof per point");
    identity->add_flag("--trace", config.trace, "Record per-term summands");
    add_output_options(identity, out);

    // verify-wz
    auto* wz = app.add_subcommand(
        "verify-wz", "Check the certificate recurrences pointwise, symbolically, and by ratios");
    std::string cert_name;
    wz->add_option("--certificate", cert_name, "Restrict to one certificate (default: both)")
        ->check(CLI::IsMember({"wz", "zeilberger"}));
    bool want_symbolic = false, want_grid = false, want_ratios = false, want_boundary = false;
    wz->add_flag("--symbolic", want_symbolic, "Run the symbolic ratio-identity check");
    wz->add_flag("--grid", want_grid, "Run the exhaustive pointwise grid check");
    wz->add_flag("--ratios", want_ratios, "Run ratio-consistency sampling");
    wz->add_flag("--boundary", want_boundary, "Check G(s,1) = 0 over the grid");
    wz->add_flag("--edge-k0", config.edge_k0,
                 "Also probe the recurrence at k = 0, outside the stated hypotheses "
                 "(reported, not asserted)");
    wz->add_flag("--describe", config.describe,
                 "Include the rendered certificate descriptions in the report");
    wz->add_option("--lmax", config.wz_lmax, "Largest l in the grid")->check(CLI::PositiveNumber);
    wz->add_option("--smax", config.wz_smax, "Largest s in the grid")
        ->check(CLI::NonNegativeNumber);
    wz->add_option("--nextent", config.wz_next, "n runs from s to s + nextent")
        ->check(CLI::NonNegativeNumber);
    wz->add_option("--samples", config.ratio_samples, "Admissible ratio samples per certificate")
        ->check(CLI::PositiveNumber);
    bool mutate_g = false;
    wz->add_flag("--mutate-g", mutate_g,
                 "Test hook: double G of the selected certificate; checks must fail")
        ->needs(wz->get_option("--certificate"));
    wz->add_option("--mutate", config.mutate, "Test hook: apply a canned mutation by name");
    add_output_options(wz, out);

    // verify-congruences
    auto* cong = app.add_subcommand(
        "verify-congruences", "Check the stated supercongruences over a prime/exponent grid");
    cong->add_option("--primes", config.primes, "Comma-separated odd primes")
        ->delimiter(',');
    cong->add_option("--rmax", config.rmax, "Check r = 1..rmax")->check(CLI::PositiveNumber);
    std::string family_name_arg, weight_name_arg, range_name_arg;
    cong->add_option("--family", family_name_arg, "Restrict to family B or C")
        ->check(CLI::IsMember({"B", "C"}, CLI::ignore_case));
    cong->add_option("--weight", weight_name_arg, "Restrict to one weight")
        ->check(CLI::IsMember({"linear", "cube", "guo-b", "guo-c"}));
    cong->add_option("--range", range_name_arg, "Restrict to half or full range")
        ->check(CLI::IsMember({"half", "full"}));
    cong->add_flag("--force-p3", config.force_p3,
                   "Also evaluate family-C linear/cube checks below p=5 (reported, not asserted)");
    cong->add_option("--max-terms", config.max_terms, "Skip specs with more summands than this")
        ->check(CLI::PositiveNumber);
    cong->add_option("--bridge-nmax", config.bridge_nmax, "Upper index for the bridge identity")
        ->check(CLI::NonNegativeNumber);
    cong->add_flag("--with-sums", config.with_sums, "Include exact sums in the records");
    add_output_options(cong, out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        SuiteResult result;
        std::string command;
        if (identity->parsed()) {
            command = "verify-identity";
            result = wzsum::run_identity_suite(config);
        } else if (wz->parsed()) {
            command = "verify-wz";
            if (!cert_name.empty())
                config.cert = (cert_name == "wz") ? wzsum::CertificateId::WzPair
                                                  : wzsum::CertificateId::ZeilbergerPair;
            if (want_symbolic || want_grid || want_ratios || want_boundary) {
                config.symbolic = want_symbolic;
                config.grid = want_grid;
                config.ratios = want_ratios;
                config.boundary = want_boundary;
            }
            if (mutate_g) {
                if (!config.mutate.empty())
                    throw wzsum::InvalidParameterError("--mutate-g conflicts with --mutate");
                config.mutate = (cert_name == "wz") ? "wz-G-doubled" : "zb-G-doubled";
                // A doubled G must be caught by the pointwise check.
                config.grid = true;
            }
            result = wzsum::run_wz_suite(config);
        } else {
            command = "verify-congruences";
            if (!family_name_arg.empty())
                config.family = (family_name_arg == "B" || family_name_arg == "b")
                    ? wzsum::SumFamily::B : wzsum::SumFamily::C;
            if (!weight_name_arg.empty()) {
                if (weight_name_arg == "linear") config.weight = wzsum::WeightKind::Linear;
                else if (weight_name_arg == "cube") config.weight = wzsum::WeightKind::Cube;
                else if (weight_name_arg == "guo-b") config.weight = wzsum::WeightKind::GuoB;
                else config.weight = wzsum::WeightKind::GuoC;
            }
            if (!range_name_arg.empty())
                config.range = (range_name_arg == "half") ? wzsum::SumRange::Half
                                                          : wzsum::SumRange::Full;
            result = wzsum::run_congruence_suite(config);
        }
        return emit(result, out, command);
    } catch (const wzsum::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
