// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "qseries/b_sequence.hpp"
#include "qseries/catalog.hpp"
#include "qseries/eta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/verify.hpp"

using namespace qseries;

namespace {

constexpr double oracle_limit_s = 30.0;
constexpr double catalog_limit_s = 120.0;
constexpr Exponent catalog_order = 200;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures for one criterion; detail() lists the first few.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        ++total_;
        if (!ok) failures_.push_back(what);
    }
    bool ok() const { return failures_.empty(); }
    std::size_t total() const { return total_; }
    std::string detail() const
    {
        std::string s;
        for (std::size_t i = 0; i < failures_.size() && i < 5; ++i) s += (i ? "; " : "") + failures_[i];
        if (failures_.size() > 5) s += "; ...";
        return s;
    }

private:
    std::size_t total_ = 0;
    std::vector<std::string> failures_;
};

int failed = 0;

void report(int number, const std::string& title, const Check& c, const std::string& summary)
{
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  [" << number << "] " << title << ": " << summary;
    if (!c.ok()) {
        std::cout << " -- " << c.detail();
        ++failed;
    }
    std::cout << std::endl;
}

void criterion_oracle()
{
    Check c;
    const auto start = Clock::now();
    const auto cores = count_cores_upto(5, 40, false);
    const auto pairs = count_cores_upto(5, 40, true);
    const LaurentSeries a = expand(EtaQuotient(0, {{5, 5}, {1, -1}}), 41);
    const LaurentSeries b = expand(EtaQuotient(0, {{5, 10}, {1, -2}}), 41);
    for (std::int64_t n = 0; n <= 40; ++n) {
        const auto i = static_cast<std::size_t>(n);
        c.expect(a.coefficient(n) == cores[i], "a_5(" + std::to_string(n) + ")");
        c.expect(b.coefficient(n) == pairs[i], "A_5(" + std::to_string(n) + ")");
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < oracle_limit_s, "runtime " + std::to_string(elapsed) + " s");
    std::ostringstream s;
    s << "a_5 and A_5 match brute force for n <= 40 (" << c.total() - 1 << " values, " << elapsed
      << " s, limit " << oracle_limit_s << " s)";
    report(1, "oracle equivalence", c, s.str());
}

void criterion_catalog()
{
    Check c;
    const Catalog catalog;
    const auto start = Clock::now();
    const auto reports = verify_all(catalog, catalog_order);
    const double elapsed = seconds_since(start);

    std::set<std::string> covered;
    for (const auto& r : reports) {
        std::string id = r.name;
        if (!r.params.empty()) id += "[" + std::to_string(r.params[0]) + "]";
        covered.insert(id);
        c.expect(r.status == Status::verified, id + " " + to_string(r.status) + " " + r.message);
        c.expect(r.order == catalog_order, id + " order");
    }
    // Coverage the criterion names explicitly.
    std::vector<std::string> required{"EQ2.1",  "EQ2.2",   "EQ2.3",   "EQ2.4",    "EQ2.5",    "LEM2.3",
                                      "LEM2.4", "LEM2.5",  "EQ2.6",   "EQ2.9",    "LEM2.6",   "EQ2.13",
                                      "LEM2.7", "LEM2.8",  "EQ2.16",  "PROP3.1",  "PROP3.2",  "EQ3.5",
                                      "EQ1.1a", "EQ1.1b",  "P-CONG-5", "P-CONG-7", "P-CONG-11"};
    for (int k = 0; k <= 4; ++k) required.push_back("EQ1.2[" + std::to_string(k) + "]");
    for (int k = 1; k <= 8; ++k) required.push_back("THM1.1[" + std::to_string(k) + "]");
    for (int k = 1; k <= 8; ++k) required.push_back("THM1.2[" + std::to_string(k) + "]");
    for (int m = 0; m <= 1; ++m) required.push_back("EQ1.5[" + std::to_string(m) + "]");
    for (const auto& id : required) c.expect(covered.count(id) == 1, id + " not run");
    c.expect(elapsed < catalog_limit_s, "runtime " + std::to_string(elapsed) + " s");

    const ReportSummary s = summarize(reports);
    std::ostringstream out;
    out << s.verified << "/" << s.total << " verified at order " << catalog_order << " (" << elapsed
        << " s, limit " << catalog_limit_s << " s)";
    report(2, "catalog pass", c, out.str());
}

void criterion_b_sequence()
{
    Check c;
    c.expect(b_value(0) == 0, "B_0");
    c.expect(b_value(1) == 1, "B_1");
    c.expect(b_value(3) == 45, "B_3");
    c.expect(b_value(7) == 184365, "B_7");
    c.expect(b_value(11) == 755159085, "B_11");
    for (std::int64_t m = 0; m <= 8; ++m) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 8, static_cast<unsigned long>(4 * m + 4));
        c.expect((p - 1) % 91 == 0 && (p - 1) / 91 == b_value(4 * m + 3), "closed form m=" + std::to_string(m));
    }
    for (std::int64_t m = 0; m <= 6; ++m) {
        Integer p;
        mpz_ui_pow_ui(p.get_mpz_t(), 8, static_cast<unsigned long>(4 * m + 6));
        c.expect(b_value(4 * m + 7) + 64 * b_value(4 * m + 3) == 5 * (p - 1) / 7, "relation m=" + std::to_string(m));
    }
    report(3, "B-sequence", c, "stated values, closed form for m <= 8, relation for m <= 6");
}

void criterion_spot_checks()
{
    Check c;
    const LaurentSeries f = expand(EtaQuotient(0, {{1, 4}, {5, 4}}), 10);
    const LaurentSeries pairs = core_series(5, true, 20);
    c.expect(f.coefficient(1) == -4, "[q^1] f1^4 f5^4");
    c.expect(pairs.coefficient(0) == 1, "A_5(0)");
    c.expect(pairs.coefficient(2) == 5, "A_5(2)");
    c.expect(f.coefficient(1) + 9 * pairs.coefficient(0) == pairs.coefficient(2), "-4 + 9 A_5(0)");

    const Catalog catalog;
    const BuiltIdentity eq35 = catalog.build("EQ3.5", {}, 5);
    c.expect(eq35.rhs.coefficient(0) == 5, "[q^0] of the A_5(2n+2) right side");

    // A_5(10) from enumeration before trusting the series.
    const Integer brute = count_cores(5, 10, true);
    c.expect(brute == 156, "brute-force A_5(10)");
    c.expect(pairs.coefficient(10) == brute, "series A_5(10)");
    c.expect(pairs.coefficient(4) == 20 && pairs.coefficient(1) == 2, "A_5(4), A_5(1)");
    c.expect(pairs.coefficient(10) == 5 * pairs.coefficient(4) + 28 * pairs.coefficient(1), "5 A_5(4) + 28 A_5(1)");
    const BuiltIdentity thm = catalog.build("THM1.2", {2}, 1);
    c.expect(thm.lhs.coefficient(0) == 156 && thm.rhs.coefficient(0) == 156, "THM1.2 k=2 n=0 sides");
    report(4, "spot coefficients", c, "[q^0] = -4 + 9 = 5; A_5(10) = 5*20 + 28*2 = 156");
}

void criterion_congruence()
{
    Check c;
    const LaurentSeries pairs = core_series(5, true, catalog_order);
    const VerificationReport r = scan_congruence(pairs, 16, 22, 45);
    std::int64_t instances = 0;
    for (std::int64_t n = 0; 16 * n + 22 < catalog_order; ++n) ++instances;
    c.expect(r.status == Status::verified, "scan " + to_string(r.status));
    c.expect(r.checked_count == instances, "checked " + std::to_string(r.checked_count));
    c.expect(b_closed_form_4m3(0) == 45, "45 = (8^4-1)/91");
    std::ostringstream s;
    s << "A_5(16n+22) = 0 mod 45 for all " << r.checked_count << " n with 16n+22 < " << catalog_order;
    report(5, "congruence at desk scale", c, s.str());
}

LaurentSeries random_series(std::mt19937_64& rng, Exponent prec, bool unit)
{
    std::uniform_int_distribution<int> first(-3, 3);
    std::uniform_int_distribution<int> coeff(-40, 40);
    const Exponent lo = first(rng);
    std::vector<Integer> c(static_cast<std::size_t>(prec - lo));
    for (auto& x : c) x = coeff(rng);
    if (unit) c[0] = (rng() & 1) ? 1 : -1;
    return LaurentSeries(lo, std::move(c), prec);
}

void criterion_properties()
{
    Check c;
    std::mt19937_64 rng(20240601);
    auto same = [](const LaurentSeries& a, const LaurentSeries& b) { return compare(a, b).equal(); };

    for (int t = 0; t < 50; ++t) {
        const LaurentSeries a = random_series(rng, 24, false);
        const LaurentSeries b = random_series(rng, 19, false);
        const LaurentSeries d = random_series(rng, 27, false);
        c.expect(same(a + b, b + a) && same(a * b, b * a), "commutativity");
        c.expect(same((a + b) + d, a + (b + d)) && same((a * b) * d, a * (b * d)), "associativity");
        c.expect(same(a * (b + d), a * b + a * d), "distributivity");

        const LaurentSeries u = random_series(rng, 30, true);
        const LaurentSeries prod = u * invert(u);
        c.expect(same(prod, monomial(0, 1, prod.prec())), "invert round-trip");

        for (std::int64_t r = 1; r <= 5; ++r) {
            LaurentSeries sum(a.prec() + 1000);
            for (std::int64_t s = 0; s < r; ++s) sum = sum + shift(substitute_power(dissect(a, r, s), r), s);
            c.expect(same(sum, a), "dissection reconstruction r=" + std::to_string(r));
        }
    }

    // Precision soundness: a higher-precision rerun agrees wherever the lower one claims.
    for (Exponent p : {17, 40, 91}) {
        const LaurentSeries low = dissect(shift(core_series(5, true, p), -2), 2, 0);
        const LaurentSeries high = dissect(shift(core_series(5, true, p + 50), -2), 2, 0);
        c.expect(same(low, high), "precision soundness p=" + std::to_string(p));
    }

    // Fault injection over every entry and default parameter.
    const Catalog catalog;
    const Exponent order = 40;
    std::size_t faults = 0;
    for (const auto& e : catalog.entries()) {
        for (const auto& params : catalog.default_params(e.name)) {
            const VerificationReport clean = verify(catalog, e.name, params, order);
            c.expect(clean.verified(), e.name + " clean");
            std::vector<Exponent> spots;
            if (e.kind == IdentityKind::integer_identity) {
                spots = {0};
            } else if (e.kind == IdentityKind::congruence) {
                spots = {0, clean.effective_order - 1};
            } else {
                const BuiltIdentity b = catalog.build(e.name, params, order);
                spots = {std::min(b.lhs.ord(), b.rhs.ord()), order / 2, order - 1};
            }
            for (Exponent at : spots) {
                const VerificationReport r = verify(catalog, e.name, params, order, Perturbation{at, 1});
                ++faults;
                c.expect(r.status == Status::mismatch && r.first_mismatch && r.first_mismatch->exponent == at,
                         e.name + " fault at " + std::to_string(at));
            }
        }
    }
    std::ostringstream s;
    s << "ring laws, invert round-trip, dissection reconstruction, precision soundness; " << faults
      << " injected faults all detected";
    report(6, "property suites", c, s.str());
}

void guarded(const std::function<void()>& fn, int number)
{
    try {
        fn();
    } catch (const std::exception& e) {
        std::cout << "FAIL  [" << number << "] threw: " << e.what() << std::endl;
        ++failed;
    }
}

} // namespace

int main()
{
    guarded(criterion_oracle, 1);
    guarded(criterion_catalog, 2);
    guarded(criterion_b_sequence, 3);
    guarded(criterion_spot_checks, 4);
    guarded(criterion_congruence, 5);
    guarded(criterion_properties, 6);
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
    return failed == 0 ? 0 : 1;
}
