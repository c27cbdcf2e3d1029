#include "qseries/cli.hpp"

#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qseries/b_sequence.hpp"
#include "qseries/catalog.hpp"
#include "qseries/eta.hpp"
#include "qseries/eta_parser.hpp"
#include "qseries/partitions.hpp"
#include "qseries/verify.hpp"

namespace qseries::cli {

namespace {

constexpr Exponent default_order = 200;
constexpr Exponent large_order = 2000;
constexpr std::int64_t oracle_budget = 60;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void guard_order(Exponent order, bool allow_large, const std::string& what)
{
    if (order > large_order && !allow_large) {
        throw UsageError(what + " " + std::to_string(order) + " exceeds " + std::to_string(large_order) +
                         "; pass --allow-large-order to proceed");
    }
}

std::string describe(const VerificationReport& r, bool with_timing)
{
    std::string line = r.name;
    if (!r.params.empty()) {
        line += "[";
        for (std::size_t i = 0; i < r.params.size(); ++i) {
            if (i > 0) line += ",";
            line += std::to_string(r.params[i]);
        }
        line += "]";
    }
    line += "\t" + to_string(r.status) + "\torder=" + std::to_string(r.order) +
            "\teffective_order=" + std::to_string(r.effective_order) +
            "\tchecked=" + std::to_string(r.checked_count);
    if (r.first_mismatch && r.congruence) {
        line += "\tfirst_mismatch=n=" + std::to_string(r.first_mismatch->exponent) + ":" +
                r.first_mismatch->lhs.get_str() + "=" + r.first_mismatch->rhs.get_str() + " (mod " +
                r.congruence->modulus.get_str() + ")";
    } else if (r.first_mismatch) {
        line += "\tfirst_mismatch=" + std::to_string(r.first_mismatch->exponent) + ":" +
                r.first_mismatch->lhs.get_str() + "!=" + r.first_mismatch->rhs.get_str();
    }
    if (!r.message.empty()) line += "\t" + r.message;
    if (with_timing) line += "\telapsed_ms=" + std::to_string(r.elapsed_ms);
    return line;
}

int exit_code_for(const std::vector<VerificationReport>& reports)
{
    const ReportSummary s = summarize(reports);
    if (s.mismatch > 0) return mismatch;
    if (s.error > 0) return usage_error;
    return success;
}

void write_report(const std::string& path, Exponent order, const std::vector<VerificationReport>& reports,
                  bool with_timing)
{
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open report file " + path);
    file << report_document(order, reports, with_timing).dump(2) << "\n";
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Truncated q-series engine and identity checker for t-core partition generating functions"};
    app.require_subcommand(1);
    app.fallthrough();
    bool allow_large = false;
    app.add_flag("--allow-large-order", allow_large, "Permit orders above 2000 and large oracle runs");

    std::string expr;
    Exponent order = default_order;
    std::optional<Exponent> from;
    std::optional<Exponent> to;
    bool dense = false;
    auto* series_cmd = app.add_subcommand("series", "Expand an eta quotient and print its coefficients");
    series_cmd->add_option("--expr", expr, "Eta quotient, e.g. \"f5^10/f1^2\"")->required();
    series_cmd->add_option("--order", order, "Precision (exclusive exponent bound)");
    series_cmd->add_option("--from", from, "Lowest exponent to print");
    series_cmd->add_option("--to", to, "Highest exponent to print");
    series_cmd->add_flag("--dense", dense, "Print zero coefficients too");

    std::int64_t t = 5;
    bool pairs = false;
    std::int64_t upto = 0;
    bool with_oracle = false;
    auto* count_cmd = app.add_subcommand("count", "Count t-cores (or pairs) from the generating function");
    count_cmd->add_option("--t", t, "Core parameter t")->required()->check(CLI::PositiveNumber);
    count_cmd->add_flag("--pairs", pairs, "Count t-core partition pairs");
    count_cmd->add_option("--upto", upto, "Largest n")->required()->check(CLI::NonNegativeNumber);
    count_cmd->add_flag("--oracle", with_oracle, "Cross-check against brute-force enumeration");

    std::string name;
    std::vector<std::int64_t> params;
    std::string report_path;
    bool timings = false;
    auto* verify_cmd = app.add_subcommand("verify", "Verify one catalog entry");
    verify_cmd->add_option("--name", name, "Catalog entry name")->required();
    verify_cmd->add_option("--param", params, "Family parameter (k or m)")->take_all();
    verify_cmd->add_option("--order", order, "Comparison order");
    verify_cmd->add_option("--report", report_path, "Write a JSON report here");
    verify_cmd->add_flag("--timings", timings, "Include elapsed times");

    unsigned jobs = 0;
    auto* all_cmd = app.add_subcommand("verify-all", "Verify every catalog entry over its default sweep");
    all_cmd->add_option("--order", order, "Comparison order");
    all_cmd->add_option("--report", report_path, "Write a JSON report here");
    all_cmd->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
    all_cmd->add_flag("--timings", timings, "Include elapsed times");

    std::int64_t step = 1;
    std::int64_t offset = 0;
    std::string modulus;
    auto* scan_cmd = app.add_subcommand("scan", "Scan a congruence along an arithmetic progression");
    scan_cmd->add_option("--expr", expr, "Eta quotient")->required();
    scan_cmd->add_option("--step", step, "Progression step M")->required()->check(CLI::PositiveNumber);
    scan_cmd->add_option("--offset", offset, "Progression offset A")->required()->check(CLI::NonNegativeNumber);
    scan_cmd->add_option("--mod", modulus, "Divisor D")->required();
    scan_cmd->add_option("--order", order, "Precision of the scanned series");

    std::int64_t b_upto = 0;
    bool closed_form = false;
    auto* bseq_cmd = app.add_subcommand("bseq", "Print B_0 .. B_K");
    bseq_cmd->add_option("--upto", b_upto, "Largest index K")->required()->check(CLI::NonNegativeNumber);
    bseq_cmd->add_flag("--check-closed-form", closed_form, "Check B_{4m+3} = (8^{4m+4}-1)/91");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        if (series_cmd->parsed()) {
            guard_order(order, allow_large, "order");
            EtaQuotient eq;
            try {
                eq = parse_eta_quotient(expr);
            } catch (const ParseError& e) {
                err << annotate_parse_error(expr, e);
                return usage_error;
            }
            const LaurentSeries s = expand(eq, order);
            const Exponent lo = from.value_or(s.valuation().value_or(0));
            const Exponent hi = std::min(to.value_or(s.prec() - 1), s.prec() - 1);
            for (Exponent e = lo; e <= hi; ++e) {
                const Integer c = s.coefficient(e);
                if (dense || sgn(c) != 0) out << e << "\t" << c << "\n";
            }
            return success;
        }

        if (count_cmd->parsed()) {
            guard_order(upto, allow_large, "upto");
            if (with_oracle && upto > oracle_budget && !allow_large) {
                throw UsageError("--oracle enumerates every partition; upto above " +
                                 std::to_string(oracle_budget) + " needs --allow-large-order");
            }
            const LaurentSeries s = core_series(t, pairs, upto + 1);
            std::vector<mpz_class> oracle;
            if (with_oracle) oracle = count_cores_upto(t, upto, pairs);
            bool agree = true;
            for (std::int64_t n = 0; n <= upto; ++n) {
                out << n << "\t" << s.coefficient(n);
                if (with_oracle) {
                    out << "\t" << oracle[static_cast<std::size_t>(n)];
                    if (oracle[static_cast<std::size_t>(n)] != s.coefficient(n)) {
                        agree = false;
                        out << "\tMISMATCH";
                    }
                }
                out << "\n";
            }
            if (with_oracle) out << "oracle: " << (agree ? "verified" : "mismatch") << "\n";
            return agree ? success : mismatch;
        }

        if (verify_cmd->parsed()) {
            guard_order(order, allow_large, "order");
            const Catalog catalog;
            if (!catalog.contains(name)) throw UsageError("unknown catalog entry '" + name + "'");
            const VerificationReport r = verify(catalog, name, params, order);
            out << describe(r, timings) << "\n";
            if (!report_path.empty()) write_report(report_path, order, {r}, timings);
            return exit_code_for({r});
        }

        if (all_cmd->parsed()) {
            guard_order(order, allow_large, "order");
            const Catalog catalog;
            const auto reports = verify_all(catalog, order, jobs);
            for (const auto& r : reports) out << describe(r, timings) << "\n";
            const ReportSummary s = summarize(reports);
            out << "summary\ttotal=" << s.total << "\tverified=" << s.verified << "\tmismatch=" << s.mismatch
                << "\terror=" << s.error << "\n";
            if (!report_path.empty()) write_report(report_path, order, reports, timings);
            return exit_code_for(reports);
        }

        if (scan_cmd->parsed()) {
            guard_order(order, allow_large, "order");
            Integer divisor;
            if (divisor.set_str(modulus, 10) != 0 || divisor < 1) {
                throw UsageError("--mod must be a positive integer, got '" + modulus + "'");
            }
            EtaQuotient eq;
            try {
                eq = parse_eta_quotient(expr);
            } catch (const ParseError& e) {
                err << annotate_parse_error(expr, e);
                return usage_error;
            }
            const VerificationReport r = scan_congruence(expand(eq, order), step, offset, divisor);
            out << describe(r, false) << "\n";
            return exit_code_for({r});
        }

        if (bseq_cmd->parsed()) {
            for (std::int64_t k = 0; k <= b_upto; ++k) out << k << "\t" << b_value(k) << "\n";
            if (!closed_form) return success;
            bool ok = true;
            std::int64_t checked = 0;
            for (std::int64_t m = 0; 4 * m + 3 <= b_upto; ++m, ++checked) {
                if (b_value(4 * m + 3) != b_closed_form_4m3(m)) {
                    ok = false;
                    out << "closed-form\tm=" << m << "\tmismatch\t" << b_value(4 * m + 3)
                        << "!=" << b_closed_form_4m3(m) << "\n";
                }
            }
            out << "closed-form\t" << (ok ? "verified" : "mismatch") << "\tchecked=" << checked << "\n";
            return ok ? success : mismatch;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    return usage_error;
}

} // namespace qseries::cli
