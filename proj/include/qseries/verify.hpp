#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "qseries/catalog.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

enum class Status { verified, mismatch, error };

std::string to_string(Status status);

/*
 * Outcome of one bounded-order check.
 *
 * For series and coefficient identities first_mismatch carries the lowest
 * differing exponent with both coefficients. For congruences it carries the
 * progression index n, the coefficient found there, and its residue modulo
 * the claimed divisor.
 */
struct VerificationReport {
    std::string name;
    std::vector<std::int64_t> params;
    Exponent order = 0;
    Exponent effective_order = 0;
    Status status = Status::error;
    std::optional<Mismatch> first_mismatch;
    std::int64_t checked_count = 0;
    std::optional<CongruenceSpec> congruence;
    std::int64_t elapsed_ms = 0;
    std::string message;

    bool verified() const { return status == Status::verified; }
};

/// Fault injection: adds `delta` to one coefficient of the right side before
/// comparing. For congruences `exponent` is the progression index n.
struct Perturbation {
    Exponent exponent;
    Integer delta;
};

VerificationReport verify(const Catalog& catalog, const std::string& name,
                          const std::vector<std::int64_t>& params, Exponent order,
                          const std::optional<Perturbation>& perturbation = std::nullopt);

/// Every catalog entry over its default parameter sweep, in catalog order.
/// `jobs` = 0 picks the hardware concurrency.
std::vector<VerificationReport> verify_all(const Catalog& catalog, Exponent order, unsigned jobs = 0);

/// Checks coefficient(series, step*n + offset) = 0 (mod divisor) for every
/// n >= 0 with step*n + offset < series.prec(). offset may exceed step.
VerificationReport scan_congruence(const LaurentSeries& series, std::int64_t step, std::int64_t offset,
                                   const Integer& divisor);

/// core_series(t, pairs) against brute-force core counts for 0 <= n <= n_max.
VerificationReport oracle_crosscheck(std::int64_t t, bool pairs, std::int64_t n_max);

struct ReportSummary {
    std::int64_t total = 0;
    std::int64_t verified = 0;
    std::int64_t mismatch = 0;
    std::int64_t error = 0;
};

ReportSummary summarize(const std::vector<VerificationReport>& reports);

nlohmann::json to_json(const VerificationReport& report, bool with_timing);

/// {"order": ..., "reports": [...], "summary": {...}}. Timings are left out
/// unless requested so that the document is reproducible byte for byte.
nlohmann::json report_document(Exponent order, const std::vector<VerificationReport>& reports,
                               bool with_timing);

} // namespace qseries
