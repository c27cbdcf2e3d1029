#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "qseries/errors.hpp"

namespace qseries {

using Integer = mpz_class;
using Exponent = std::int64_t;

struct Term {
    Exponent exponent;
    Integer coefficient;

    bool operator==(const Term&) const = default;
};

/*
 * Truncated formal Laurent series in q with integer coefficients.
 *
 * A series knows its coefficients exactly for every exponent strictly below
 * prec(); nothing is known at or above it. Values are immutable once built.
 * Storage is a dense window [lo, lo + size) trimmed so that its first and
 * last entries are nonzero; terms() exposes only the nonzero ones.
 */
class LaurentSeries {
public:
    /// The zero series known below `prec`.
    explicit LaurentSeries(Exponent prec = 0) : prec_(prec) {}

    /// Dense constructor: coeffs[i] is the coefficient of q^(first + i).
    /// Entries at or above `prec` are discarded.
    LaurentSeries(Exponent first, std::vector<Integer> coeffs, Exponent prec);

    static LaurentSeries from_terms(const std::vector<Term>& terms, Exponent prec);

    Exponent prec() const { return prec_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Least exponent with a nonzero coefficient; empty for the zero series.
    std::optional<Exponent> valuation() const;

    /// Valuation, with the zero series mapped to 0 (the convention used by
    /// the multiplication precision rule).
    Exponent ord() const { return is_zero() ? 0 : lo_; }

    /// Exact coefficient of q^n. Throws InsufficientPrecision if n >= prec().
    Integer coefficient(Exponent n) const;

    /// Nonzero terms in ascending exponent order.
    std::vector<Term> terms() const;
    std::size_t term_count() const;

    /// Dense window accessors; coefficient at lo() + i is dense()[i].
    Exponent lo() const { return lo_; }
    const std::vector<Integer>& dense() const { return coeffs_; }

    bool operator==(const LaurentSeries&) const = default;

    std::string to_string() const;

private:
    void normalize();

    Exponent lo_ = 0;
    std::vector<Integer> coeffs_;
    Exponent prec_ = 0;
};

LaurentSeries monomial(Exponent exp, const Integer& coeff, Exponent prec);

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries negate(const LaurentSeries& a);
LaurentSeries scale(const LaurentSeries& a, const Integer& c);

/// Cauchy product. prec = min(a.prec + ord(b), b.prec + ord(a)).
LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse of q^v * u with u(0) = +-1. prec = a.prec - 2v.
LaurentSeries invert(const LaurentSeries& a);

/// a * invert(b) computed directly by back-substitution; same precision as
/// that product, and cost proportional to the number of nonzero terms of b.
LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries pow(const LaurentSeries& a, std::int64_t e);

/// Exact multiplication by q^j.
LaurentSeries shift(const LaurentSeries& a, Exponent j);

/// q -> q^m.
LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m);

/// sum_n c(r n + s) q^n.
LaurentSeries dissect(const LaurentSeries& a, std::int64_t r, std::int64_t s);

/// Lowers the precision bound to min(a.prec, prec).
LaurentSeries truncate(const LaurentSeries& a, Exponent prec);

/// Discards every term with exponent below `from`; precision is unchanged.
LaurentSeries drop_below(const LaurentSeries& a, Exponent from);

struct Mismatch {
    Exponent exponent;
    Integer lhs;
    Integer rhs;

    bool operator==(const Mismatch&) const = default;
};

struct EqualityOutcome {
    /// Exponents in [lowest, order) were compared.
    Exponent order;
    Exponent lowest;
    std::optional<Mismatch> mismatch;

    bool equal() const { return !mismatch.has_value(); }
    std::int64_t compared() const { return order - lowest; }
};

/// Compares every exponent below min(a.prec, b.prec); reports the lowest
/// differing exponent. Throws VacuousComparison if no exponent is comparable.
EqualityOutcome compare(const LaurentSeries& a, const LaurentSeries& b);

inline LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) { return add(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return sub(a, b); }
inline LaurentSeries operator-(const LaurentSeries& a) { return negate(a); }
inline LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) { return mul(a, b); }
inline LaurentSeries operator*(const Integer& c, const LaurentSeries& a) { return scale(a, c); }

} // namespace qseries
