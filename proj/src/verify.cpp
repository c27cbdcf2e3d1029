#include "qseries/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "qseries/eta.hpp"
#include "qseries/partitions.hpp"

namespace qseries {

std::string to_string(Status status)
{
    switch (status) {
    case Status::verified:
        return "verified";
    case Status::mismatch:
        return "mismatch";
    case Status::error:
        return "error";
    }
    return "error";
}

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t millis_since(Clock::time_point start)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

void record_comparison(VerificationReport& report, const LaurentSeries& lhs, const LaurentSeries& rhs)
{
    const EqualityOutcome outcome = compare(lhs, rhs);
    report.effective_order = outcome.order;
    report.checked_count = outcome.compared();
    report.first_mismatch = outcome.mismatch;
    report.status = outcome.equal() ? Status::verified : Status::mismatch;
}

LaurentSeries bump(const LaurentSeries& s, Exponent exponent, const Integer& delta)
{
    return add(s, monomial(exponent, delta, s.prec()));
}

} // namespace

VerificationReport scan_congruence(const LaurentSeries& series, std::int64_t step, std::int64_t offset,
                                   const Integer& divisor)
{
    if (step < 1) throw DomainError("congruence step must be >= 1");
    if (offset < 0) throw DomainError("congruence offset must be >= 0");
    if (divisor < 1) throw DomainError("congruence divisor must be >= 1");

    const auto start = Clock::now();
    VerificationReport report;
    report.name = "scan";
    report.params = {step, offset};
    report.order = series.prec();
    report.congruence = CongruenceSpec{step, offset, divisor};
    if (offset >= series.prec()) {
        report.status = Status::error;
        report.message = "vacuous comparison: no index " + std::to_string(step) + "n+" +
                         std::to_string(offset) + " lies below precision " + std::to_string(series.prec());
        report.elapsed_ms = millis_since(start);
        return report;
    }
    report.status = Status::verified;
    Integer residue;
    std::int64_t n = 0;
    for (; step * n + offset < series.prec(); ++n) {
        const Integer c = series.coefficient(step * n + offset);
        mpz_fdiv_r(residue.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        if (sgn(residue) != 0) {
            report.status = Status::mismatch;
            report.first_mismatch = Mismatch{n, c, residue};
            ++n;
            break;
        }
    }
    report.checked_count = n;
    report.effective_order = (series.prec() - 1 - offset) / step + 1;
    report.elapsed_ms = millis_since(start);
    return report;
}

VerificationReport verify(const Catalog& catalog, const std::string& name,
                          const std::vector<std::int64_t>& params, Exponent order,
                          const std::optional<Perturbation>& perturbation)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.name = name;
    report.params = params;
    report.order = order;
    try {
        BuiltIdentity built = catalog.build(name, params, order);
        if (built.kind == IdentityKind::congruence) {
            const CongruenceSpec& spec = built.congruence.value();
            LaurentSeries scanned = built.lhs;
            if (perturbation) {
                scanned = bump(scanned, spec.step * perturbation->exponent + spec.offset, perturbation->delta);
            }
            VerificationReport scan = scan_congruence(scanned, spec.step, spec.offset, spec.modulus);
            report.status = scan.status;
            report.first_mismatch = scan.first_mismatch;
            report.checked_count = scan.checked_count;
            report.message = scan.message;
            report.effective_order = scan.effective_order;
            report.congruence = spec;
        } else {
            LaurentSeries rhs = built.rhs;
            if (perturbation) rhs = bump(rhs, perturbation->exponent, perturbation->delta);
            record_comparison(report, built.lhs, rhs);
        }
    } catch (const std::exception& e) {
        report.status = Status::error;
        report.first_mismatch.reset();
        report.message = e.what();
    }
    report.elapsed_ms = millis_since(start);
    return report;
}

std::vector<VerificationReport> verify_all(const Catalog& catalog, Exponent order, unsigned jobs)
{
    struct Task {
        std::string name;
        std::vector<std::int64_t> params;
    };
    std::vector<Task> tasks;
    for (const auto& entry : catalog.entries()) {
        for (auto& params : catalog.default_params(entry.name)) tasks.push_back({entry.name, params});
    }

    std::vector<VerificationReport> reports(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            reports[i] = verify(catalog, tasks[i].name, tasks[i].params, order);
        }
    };

    if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    return reports;
}

VerificationReport oracle_crosscheck(std::int64_t t, bool pairs, std::int64_t n_max)
{
    const auto start = Clock::now();
    VerificationReport report;
    report.name = std::string("ORACLE-") + (pairs ? "PAIRS" : "CORES");
    report.params = {t, n_max};
    report.order = n_max + 1;
    try {
        const LaurentSeries series = core_series(t, pairs, n_max + 1);
        const std::vector<mpz_class> counts = count_cores_upto(t, n_max, pairs);
        std::vector<Integer> dense(counts.begin(), counts.end());
        record_comparison(report, series, LaurentSeries(0, std::move(dense), n_max + 1));
    } catch (const std::exception& e) {
        report.status = Status::error;
        report.message = e.what();
    }
    report.elapsed_ms = millis_since(start);
    return report;
}

ReportSummary summarize(const std::vector<VerificationReport>& reports)
{
    ReportSummary s;
    for (const auto& r : reports) {
        ++s.total;
        switch (r.status) {
        case Status::verified:
            ++s.verified;
            break;
        case Status::mismatch:
            ++s.mismatch;
            break;
        case Status::error:
            ++s.error;
            break;
        }
    }
    return s;
}

nlohmann::json to_json(const VerificationReport& report, bool with_timing)
{
    using nlohmann::json;
    json j;
    j["identity"] = {{"name", report.name}, {"params", report.params}};
    j["order"] = report.order;
    j["effective_order"] = report.effective_order;
    j["status"] = to_string(report.status);
    if (report.first_mismatch) {
        // Coefficients are arbitrary precision, so they travel as strings.
        j["first_mismatch"] = {{"exponent", report.first_mismatch->exponent},
                               {"lhs", report.first_mismatch->lhs.get_str()},
                               {"rhs", report.first_mismatch->rhs.get_str()}};
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["checked_count"] = report.checked_count;
    if (report.congruence) {
        // first_mismatch then reads (n, coefficient, residue).
        j["congruence"] = {{"step", report.congruence->step},
                           {"offset", report.congruence->offset},
                           {"modulus", report.congruence->modulus.get_str()}};
    }
    if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
    if (!report.message.empty()) j["message"] = report.message;
    return j;
}

nlohmann::json report_document(Exponent order, const std::vector<VerificationReport>& reports,
                               bool with_timing)
{
    nlohmann::json doc;
    doc["order"] = order;
    doc["reports"] = nlohmann::json::array();
    for (const auto& r : reports) doc["reports"].push_back(to_json(r, with_timing));
    const ReportSummary s = summarize(reports);
    doc["summary"] = {{"total", s.total}, {"verified", s.verified}, {"mismatch", s.mismatch}, {"error", s.error}};
    return doc;
}

} // namespace qseries
