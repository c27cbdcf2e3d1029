#include "qseries/eta.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qseries {

EtaQuotient::EtaQuotient(std::int64_t q_power, const std::vector<EtaFactor>& factors)
    : q_power_(q_power)
{
    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& f : factors) {
        if (f.scale < 1) {
            throw DomainError("eta factor scale must be >= 1, got " + std::to_string(f.scale));
        }
        merged[f.scale] += f.exponent;
    }
    for (const auto& [m, e] : merged) {
        if (e != 0) factors_.push_back({m, e});
    }
}

EtaQuotient EtaQuotient::operator*(const EtaQuotient& other) const
{
    std::vector<EtaFactor> all = factors_;
    all.insert(all.end(), other.factors_.begin(), other.factors_.end());
    return EtaQuotient(q_power_ + other.q_power_, all);
}

EtaQuotient EtaQuotient::operator/(const EtaQuotient& other) const
{
    std::vector<EtaFactor> all = factors_;
    for (const auto& f : other.factors_) all.push_back({f.scale, -f.exponent});
    return EtaQuotient(q_power_ - other.q_power_, all);
}

std::string EtaQuotient::to_string() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "*";
        first = false;
    };
    if (q_power_ != 0) {
        sep();
        os << "q";
        if (q_power_ != 1) os << "^" << q_power_;
    }
    for (const auto& f : factors_) {
        sep();
        os << "f" << f.scale;
        if (f.exponent != 1) os << "^" << f.exponent;
    }
    if (first) os << "q^0";
    return os.str();
}

LaurentSeries euler_f1(Exponent prec)
{
    if (prec < 1) throw DomainError("euler_f1 needs prec >= 1");
    // sum_{k in Z} (-1)^k q^{k(3k-1)/2}, taking k and -k together.
    std::vector<Integer> c(static_cast<std::size_t>(prec));
    c[0] = 1;
    for (Exponent k = 1;; ++k) {
        const Exponent e1 = k * (3 * k - 1) / 2;
        const Exponent e2 = k * (3 * k + 1) / 2;
        if (e1 >= prec) break;
        const int sign = (k % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(e1)] = sign;
        if (e2 < prec) c[static_cast<std::size_t>(e2)] = sign;
    }
    return LaurentSeries(0, std::move(c), prec);
}

LaurentSeries euler_f(std::int64_t m, Exponent prec)
{
    if (m < 1) throw DomainError("f_m needs m >= 1");
    if (prec < 1) return LaurentSeries(prec);
    const Exponent base = (prec + m - 1) / m;
    return truncate(substitute_power(euler_f1(base), m), prec);
}

LaurentSeries expand(const EtaQuotient& eq, Exponent prec)
{
    // Every f_m has valuation 0 and leading coefficient 1, so the product
    // keeps precision `inner` exactly; the final shift restores `prec`.
    const Exponent inner = prec - eq.q_power();
    LaurentSeries acc = inner >= 1 ? monomial(0, 1, inner) : LaurentSeries(inner);
    if (inner >= 1) {
        for (const auto& f : eq.factors()) {
            if (f.exponent > 0) acc = mul(acc, pow(euler_f(f.scale, inner), f.exponent));
        }
        for (const auto& f : eq.factors()) {
            if (f.exponent >= 0) continue;
            const LaurentSeries fm = euler_f(f.scale, inner);
            for (std::int64_t i = 0; i < -f.exponent; ++i) acc = divide(acc, fm);
        }
    }
    return shift(acc, eq.q_power());
}

LaurentSeries k_series(Exponent prec)
{
    if (prec < 2) throw DomainError("k_series needs prec >= 2");
    const Exponent inner = prec - 1;
    LaurentSeries acc = monomial(0, 1, inner);
    for (Exponent j = 1; j < inner; ++j) {
        const Exponent r = j % 10;
        const bool numerator = r == 1 || r == 2 || r == 8 || r == 9;
        const bool denominator = r == 3 || r == 4 || r == 6 || r == 7;
        if (!numerator && !denominator) continue;
        const LaurentSeries binomial = LaurentSeries::from_terms({{0, 1}, {j, -1}}, inner);
        acc = numerator ? mul(acc, binomial) : divide(acc, binomial);
    }
    return shift(acc, 1);
}

EtaQuotient core_quotient(std::int64_t t, bool pairs)
{
    if (t < 1) throw DomainError("t-cores need t >= 1");
    const std::int64_t power = pairs ? 2 : 1;
    return EtaQuotient(0, {{t, power * t}, {1, -power}});
}

LaurentSeries core_series(std::int64_t t, bool pairs, Exponent prec)
{
    return expand(core_quotient(t, pairs), prec);
}

} // namespace qseries
