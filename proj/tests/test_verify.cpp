#include "doctest.h"

#include "qseries/eta.hpp"
#include "qseries/verify.hpp"

using namespace qseries;

namespace {

// Shared across cases so the pair-core expansions are built once.
const Catalog& shared_catalog()
{
    static const Catalog catalog;
    return catalog;
}

std::vector<std::int64_t> first_params(const Catalog& catalog, const IdentityInfo& e)
{
    return catalog.default_params(e.name).front();
}

} // namespace

TEST_CASE("documented entries verify")
{
    const Catalog& catalog = shared_catalog();
    for (const char* name : {"EQ2.1", "LEM2.3", "PROP3.1"}) {
        const VerificationReport r = verify(catalog, name, {}, 80);
        CAPTURE(name);
        CHECK(r.status == Status::verified);
        CHECK(!r.first_mismatch);
        CHECK(r.effective_order == 80);
        CHECK(r.checked_count > 0);
    }
}

TEST_CASE("perturbed right side is caught at the perturbed exponent")
{
    const VerificationReport r = verify(shared_catalog(), "EQ2.1", {}, 80, Perturbation{5, 1});
    CHECK(r.status == Status::mismatch);
    REQUIRE(r.first_mismatch);
    CHECK(r.first_mismatch->exponent == 5);
    CHECK(r.first_mismatch->rhs == r.first_mismatch->lhs + 1);
}

TEST_CASE("every entry is sensitive to a single-coefficient fault")
{
    const Catalog& catalog = shared_catalog();
    const Exponent order = 40;
    for (const auto& e : catalog.entries()) {
        for (const auto& params : catalog.default_params(e.name)) {
            CAPTURE(e.name);
            CAPTURE(params.size() == 1 ? params[0] : -1);
            const VerificationReport clean = verify(catalog, e.name, params, order);
            REQUIRE(clean.status == Status::verified);

            std::vector<Exponent> spots;
            if (e.kind == IdentityKind::integer_identity) {
                spots = {0};
            } else if (e.kind == IdentityKind::congruence) {
                spots = {0, clean.effective_order / 2, clean.effective_order - 1};
            } else {
                const BuiltIdentity b = catalog.build(e.name, params, order);
                const Exponent low = std::min(b.lhs.ord(), b.rhs.ord());
                spots = {low, (low + order) / 2, order - 1};
            }
            for (Exponent at : spots) {
                for (long delta : {1L, -2L}) {
                    const VerificationReport r = verify(catalog, e.name, params, order, Perturbation{at, delta});
                    CHECK(r.status == Status::mismatch);
                    REQUIRE(r.first_mismatch);
                    CHECK(r.first_mismatch->exponent == at);
                }
            }
        }
    }
}

TEST_CASE("reports are deterministic")
{
    const Catalog& catalog = shared_catalog();
    for (const char* name : {"THM1.1", "EQ1.5", "EQ2.16"}) {
        const std::vector<std::int64_t> params = catalog.info(name).param ? std::vector<std::int64_t>{1}
                                                                          : std::vector<std::int64_t>{};
        const auto a = to_json(verify(catalog, name, params, 50), false).dump();
        const Catalog other;
        const auto b = to_json(verify(other, name, params, 50), false).dump();
        CHECK(a == b);
    }
}

TEST_CASE("verification is monotone in the order")
{
    const Catalog& catalog = shared_catalog();
    for (const auto& e : catalog.entries()) {
        const auto params = first_params(catalog, e);
        CAPTURE(e.name);
        REQUIRE(verify(catalog, e.name, params, 64).verified());
        for (Exponent p : {1, 2, 3, 7, 16, 33, 63}) {
            const VerificationReport r = verify(catalog, e.name, params, p);
            if (r.status == Status::error) {
                CHECK(r.message.find("vacuous") != std::string::npos);
                continue;
            }
            CHECK(r.status == Status::verified);
            CHECK(r.effective_order <= p);
        }
    }
}

TEST_CASE("order 0 yields vacuous-comparison errors rather than passes")
{
    const auto reports = verify_all(shared_catalog(), 0, 1);
    const ReportSummary s = summarize(reports);
    CHECK(s.error > 0);
    CHECK(s.mismatch == 0);
    for (const auto& r : reports) {
        CAPTURE(r.name);
        if (r.status == Status::verified) {
            // Only the Laurent entries still have exponents below q^0 to check.
            CHECK(r.checked_count > 0);
            const BuiltIdentity b = shared_catalog().build(r.name, r.params, 1);
            CHECK(std::min(b.lhs.ord(), b.rhs.ord()) < 0);
        } else {
            CHECK(r.status == Status::error);
            CHECK(r.message.find("vacuous") != std::string::npos);
            CHECK(r.checked_count == 0);
        }
    }
}

TEST_CASE("verify_all report invariants and ordering")
{
    const Catalog& catalog = shared_catalog();
    const auto serial = verify_all(catalog, 60, 1);
    const auto parallel = verify_all(catalog, 60, 3);
    CHECK(report_document(60, serial, false).dump() == report_document(60, parallel, false).dump());

    std::size_t i = 0;
    for (const auto& e : catalog.entries()) {
        for (const auto& params : catalog.default_params(e.name)) {
            REQUIRE(i < serial.size());
            CHECK(serial[i].name == e.name);
            CHECK(serial[i].params == params);
            ++i;
        }
    }
    CHECK(i == serial.size());
    for (const auto& r : serial) {
        CAPTURE(r.name);
        CHECK(r.status == Status::verified);
        CHECK((r.status == Status::mismatch) == r.first_mismatch.has_value());
        CHECK(r.effective_order <= r.order);
        CHECK(r.checked_count > 0);
        CHECK(r.elapsed_ms >= 0);
    }
}

TEST_CASE("unknown entries and bad parameters surface as errors")
{
    const VerificationReport r = verify(shared_catalog(), "EQ9.9", {}, 50);
    CHECK(r.status == Status::error);
    CHECK(r.message.find("EQ9.9") != std::string::npos);
    CHECK(verify(shared_catalog(), "THM1.1", {}, 50).status == Status::error);
}

TEST_CASE("congruence scans")
{
    const LaurentSeries p = invert(euler_f1(200));

    const VerificationReport ok = scan_congruence(p, 5, 4, 5);
    CHECK(ok.status == Status::verified);
    CHECK(ok.checked_count == 40);

    const VerificationReport bad = scan_congruence(p, 5, 0, 5);
    CHECK(bad.status == Status::mismatch);
    REQUIRE(bad.first_mismatch);
    // p(0) = 1 is already not divisible by 5.
    CHECK(bad.first_mismatch->exponent == 0);
    CHECK(bad.first_mismatch->lhs == 1);
    CHECK(bad.first_mismatch->rhs == 1);
    CHECK(bad.checked_count == 1);

    const VerificationReport from_one = scan_congruence(drop_below(p, 1), 5, 0, 5);
    REQUIRE(from_one.first_mismatch);
    CHECK(from_one.first_mismatch->exponent == 1);
    CHECK(from_one.first_mismatch->lhs == 7);

    const LaurentSeries a5 = core_series(5, true, 200);
    const VerificationReport c45 = scan_congruence(a5, 16, 22, 45);
    CHECK(c45.status == Status::verified);
    CHECK(c45.checked_count == 12);

    const VerificationReport vacuous = scan_congruence(euler_f1(10), 5, 12, 5);
    CHECK(vacuous.status == Status::error);
    CHECK(vacuous.checked_count == 0);
    CHECK(vacuous.message.find("vacuous") != std::string::npos);

    CHECK_THROWS_AS(scan_congruence(p, 0, 0, 5), DomainError);
    CHECK_THROWS_AS(scan_congruence(p, 5, 0, 0), DomainError);
}

TEST_CASE("oracle cross-checks")
{
    CHECK(oracle_crosscheck(5, false, 40).verified());
    CHECK(oracle_crosscheck(5, true, 40).verified());
    CHECK(oracle_crosscheck(3, false, 30).verified());
    CHECK(oracle_crosscheck(3, false, 30).checked_count == 31);
}

TEST_CASE("report serialization")
{
    const Catalog& catalog = shared_catalog();
    const VerificationReport good = verify(catalog, "EQ2.1", {}, 30);
    const VerificationReport bad = verify(catalog, "EQ2.1", {}, 30, Perturbation{3, 2});
    const VerificationReport cong = verify(catalog, "P-CONG-5", {}, 30, Perturbation{4, 1});

    const nlohmann::json j = to_json(bad, false);
    CHECK(j["identity"]["name"] == "EQ2.1");
    CHECK(j["order"] == 30);
    CHECK(j["effective_order"] == 30);
    CHECK(j["status"] == "mismatch");
    CHECK(j["first_mismatch"]["exponent"] == 3);
    CHECK(j["first_mismatch"]["lhs"].is_string());
    CHECK(!j.contains("elapsed_ms"));
    CHECK(to_json(bad, true).contains("elapsed_ms"));
    CHECK(to_json(good, false)["first_mismatch"].is_null());
    CHECK(to_json(cong, false)["congruence"]["modulus"] == "5");

    const nlohmann::json doc = report_document(30, {good, bad, cong}, false);
    CHECK(doc["order"] == 30);
    CHECK(doc["reports"].size() == 3);
    CHECK(doc["summary"]["total"] == 3);
    CHECK(doc["summary"]["verified"] == 1);
    CHECK(doc["summary"]["mismatch"] == 2);
    CHECK(doc["summary"]["error"] == 0);
}
