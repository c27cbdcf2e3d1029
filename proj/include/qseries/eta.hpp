#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qseries/laurent_series.hpp"

namespace qseries {

/// One factor f_m^e of an eta quotient, f_m = prod_{n>=1} (1 - q^{mn}).
struct EtaFactor {
    std::int64_t scale;
    std::int64_t exponent;

    bool operator==(const EtaFactor&) const = default;
};

/*
 * q^j * prod f_m^{e_m}. Construction merges repeated scales and drops zero
 * exponents, so factors() always has distinct scales in ascending order.
 */
class EtaQuotient {
public:
    EtaQuotient() = default;
    EtaQuotient(std::int64_t q_power, const std::vector<EtaFactor>& factors);

    std::int64_t q_power() const { return q_power_; }
    const std::vector<EtaFactor>& factors() const { return factors_; }

    EtaQuotient operator*(const EtaQuotient& other) const;
    EtaQuotient operator/(const EtaQuotient& other) const;

    bool operator==(const EtaQuotient&) const = default;

    /// Canonical text in the expression grammar, e.g. "q^-1*f1^4*f5^4".
    std::string to_string() const;

private:
    std::int64_t q_power_ = 0;
    std::vector<EtaFactor> factors_;
};

/// f_1 below q^prec via the pentagonal number theorem.
LaurentSeries euler_f1(Exponent prec);

/// f_m below q^prec.
LaurentSeries euler_f(std::int64_t m, Exponent prec);

/// Expands an eta quotient so that the result is known below q^prec.
LaurentSeries expand(const EtaQuotient& eq, Exponent prec);

/// Ramanujan's parameter k(q) = q + O(q^2), the degree-10 product.
LaurentSeries k_series(Exponent prec);

/// Generating function of t-cores (f_t^t / f_1) or of t-core pairs
/// (f_t^{2t} / f_1^2).
LaurentSeries core_series(std::int64_t t, bool pairs, Exponent prec);

/// Eta quotient behind core_series.
EtaQuotient core_quotient(std::int64_t t, bool pairs);

} // namespace qseries
