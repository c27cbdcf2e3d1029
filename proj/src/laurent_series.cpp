#include "qseries/laurent_series.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <utility>

namespace qseries {

namespace {

Exponent floor_div(Exponent x, Exponent r)
{
    Exponent q = x / r;
    if ((x % r != 0) && ((x < 0) != (r < 0))) --q;
    return q;
}

Exponent ceil_div(Exponent x, Exponent r) { return -floor_div(-x, r); }

Exponent floor_mod(Exponent x, Exponent r) { return x - r * floor_div(x, r); }

// Positions and values of the nonzero entries of a dense window.
struct SparseView {
    std::vector<std::size_t> index;
    std::vector<const Integer*> value;
};

SparseView nonzeros(const std::vector<Integer>& c, std::size_t from = 0)
{
    SparseView v;
    for (std::size_t i = from; i < c.size(); ++i) {
        if (sgn(c[i]) != 0) {
            v.index.push_back(i);
            v.value.push_back(&c[i]);
        }
    }
    return v;
}

const Integer& zero_integer()
{
    static const Integer z(0);
    return z;
}

} // namespace

LaurentSeries::LaurentSeries(Exponent first, std::vector<Integer> coeffs, Exponent prec)
    : lo_(first), coeffs_(std::move(coeffs)), prec_(prec)
{
    normalize();
}

LaurentSeries LaurentSeries::from_terms(const std::vector<Term>& terms, Exponent prec)
{
    if (terms.empty()) return LaurentSeries(prec);
    Exponent lo = terms.front().exponent;
    Exponent hi = terms.front().exponent;
    for (const auto& t : terms) {
        if (t.exponent >= prec) {
            throw PrecisionViolation("term q^" + std::to_string(t.exponent) +
                                     " is not below precision " + std::to_string(prec));
        }
        lo = std::min(lo, t.exponent);
        hi = std::max(hi, t.exponent);
    }
    std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& t : terms) {
        auto& slot = dense[static_cast<std::size_t>(t.exponent - lo)];
        if (sgn(slot) != 0) throw DomainError("duplicate exponent " + std::to_string(t.exponent));
        slot = t.coefficient;
    }
    return LaurentSeries(lo, std::move(dense), prec);
}

void LaurentSeries::normalize()
{
    if (prec_ <= lo_) {
        coeffs_.clear();
    } else if (static_cast<Exponent>(coeffs_.size()) > prec_ - lo_) {
        coeffs_.resize(static_cast<std::size_t>(prec_ - lo_));
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && sgn(coeffs_[lead]) == 0) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        lo_ += static_cast<Exponent>(lead);
    }
    if (coeffs_.empty()) lo_ = 0;
}

std::optional<Exponent> LaurentSeries::valuation() const
{
    if (is_zero()) return std::nullopt;
    return lo_;
}

Integer LaurentSeries::coefficient(Exponent n) const
{
    if (n >= prec_) {
        throw InsufficientPrecision("coefficient of q^" + std::to_string(n) +
                                    " requested from a series known below q^" +
                                    std::to_string(prec_));
    }
    if (n < lo_ || n >= lo_ + static_cast<Exponent>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(n - lo_)];
}

std::vector<Term> LaurentSeries::terms() const
{
    std::vector<Term> out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (sgn(coeffs_[i]) != 0) out.push_back({lo_ + static_cast<Exponent>(i), coeffs_[i]});
    }
    return out;
}

std::size_t LaurentSeries::term_count() const
{
    return static_cast<std::size_t>(
        std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return sgn(c) != 0; }));
}

std::string LaurentSeries::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms()) {
        const bool negative = sgn(t.coefficient) < 0;
        Integer mag = abs(t.coefficient);
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (t.exponent == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << "*";
        os << "q";
        if (t.exponent != 1) os << "^" << t.exponent;
    }
    if (first) os << "0";
    os << " + O(q^" << prec_ << ")";
    return os.str();
}

LaurentSeries monomial(Exponent exp, const Integer& coeff, Exponent prec)
{
    if (exp >= prec) {
        throw PrecisionViolation("monomial q^" + std::to_string(exp) +
                                 " is not below precision " + std::to_string(prec));
    }
    if (sgn(coeff) == 0) return LaurentSeries(prec);
    return LaurentSeries(exp, {coeff}, prec);
}

namespace {

LaurentSeries combine(const LaurentSeries& a, const LaurentSeries& b, bool subtract)
{
    const Exponent prec = std::min(a.prec(), b.prec());
    if (a.is_zero() && b.is_zero()) return LaurentSeries(prec);
    Exponent lo = a.is_zero() ? b.lo() : b.is_zero() ? a.lo() : std::min(a.lo(), b.lo());
    Exponent hi = std::max(a.is_zero() ? lo : a.lo() + static_cast<Exponent>(a.dense().size()),
                           b.is_zero() ? lo : b.lo() + static_cast<Exponent>(b.dense().size()));
    hi = std::min(hi, prec);
    if (hi <= lo) return LaurentSeries(prec);
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo));
    for (std::size_t i = 0; i < a.dense().size(); ++i) {
        const Exponent e = a.lo() + static_cast<Exponent>(i);
        if (e >= hi) break;
        out[static_cast<std::size_t>(e - lo)] = a.dense()[i];
    }
    for (std::size_t i = 0; i < b.dense().size(); ++i) {
        const Exponent e = b.lo() + static_cast<Exponent>(i);
        if (e >= hi) break;
        auto& slot = out[static_cast<std::size_t>(e - lo)];
        if (subtract) {
            slot -= b.dense()[i];
        } else {
            slot += b.dense()[i];
        }
    }
    return LaurentSeries(lo, std::move(out), prec);
}

} // namespace

LaurentSeries add(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, false); }

LaurentSeries sub(const LaurentSeries& a, const LaurentSeries& b) { return combine(a, b, true); }

LaurentSeries negate(const LaurentSeries& a) { return scale(a, -1); }

LaurentSeries scale(const LaurentSeries& a, const Integer& c)
{
    std::vector<Integer> out(a.dense().size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.dense()[i] * c;
    return LaurentSeries(a.lo(), std::move(out), a.prec());
}

LaurentSeries mul(const LaurentSeries& a, const LaurentSeries& b)
{
    const Exponent prec = std::min(a.prec() + b.ord(), b.prec() + a.ord());
    if (a.is_zero() || b.is_zero()) return LaurentSeries(prec);
    const Exponent lo = a.lo() + b.lo();
    if (prec <= lo) return LaurentSeries(prec);
    const auto len = static_cast<std::size_t>(prec - lo);

    // Walk the nonzero entries of the sparser factor against the dense
    // window of the other; eta products are mostly sparse on one side.
    const auto nz_a = nonzeros(a.dense());
    const auto nz_b = nonzeros(b.dense());
    const bool a_sparse = nz_a.index.size() <= nz_b.index.size();
    const auto& sparse = a_sparse ? nz_a : nz_b;
    const auto& other = a_sparse ? b.dense() : a.dense();

    std::vector<Integer> out(std::min(len, a.dense().size() + b.dense().size() - 1));
    for (std::size_t t = 0; t < sparse.index.size(); ++t) {
        const std::size_t i = sparse.index[t];
        if (i >= out.size()) break;
        const mpz_srcptr x = sparse.value[t]->get_mpz_t();
        const std::size_t stop = std::min(other.size(), out.size() - i);
        for (std::size_t j = 0; j < stop; ++j) {
            if (sgn(other[j]) == 0) continue;
            mpz_addmul(out[i + j].get_mpz_t(), x, other[j].get_mpz_t());
        }
    }
    return LaurentSeries(lo, std::move(out), prec);
}

LaurentSeries divide(const LaurentSeries& a, const LaurentSeries& b)
{
    if (b.is_zero()) throw NotInvertible("cannot divide by the zero series");
    const Integer& lead = b.dense().front();
    if (lead != 1 && lead != -1) {
        throw NonUnit("leading coefficient " + lead.get_str() + " is not a unit");
    }
    const Exponent v = b.lo();
    const Exponent prec = std::min(a.prec() - v, b.prec() - 2 * v + a.ord());
    if (a.is_zero()) return LaurentSeries(prec);

    const Exponent lo = a.lo() - v;
    if (prec <= lo) return LaurentSeries(prec);
    const auto len = static_cast<std::size_t>(prec - lo);

    // u = b / q^v has u(0) = lead = +-1; solve u * c = a term by term.
    const auto nz_u = nonzeros(b.dense(), 1);
    const bool negative_lead = lead < 0;
    std::vector<Integer> c(len);
    for (std::size_t i = 0; i < len; ++i) {
        Integer acc = i < a.dense().size() ? a.dense()[i] : zero_integer();
        for (std::size_t t = 0; t < nz_u.index.size(); ++t) {
            const std::size_t k = nz_u.index[t];
            if (k > i) break;
            if (sgn(c[i - k]) == 0) continue;
            mpz_submul(acc.get_mpz_t(), nz_u.value[t]->get_mpz_t(), c[i - k].get_mpz_t());
        }
        if (negative_lead) mpz_neg(acc.get_mpz_t(), acc.get_mpz_t());
        c[i] = std::move(acc);
    }
    return LaurentSeries(lo, std::move(c), prec);
}

LaurentSeries invert(const LaurentSeries& a)
{
    if (a.is_zero()) throw NotInvertible("the zero series has no inverse");
    return divide(monomial(0, 1, a.prec() - a.lo()), a);
}

LaurentSeries pow(const LaurentSeries& a, std::int64_t e)
{
    if (e == 0) return LaurentSeries(0, {Integer(1)}, a.prec() - a.ord());
    if (e < 0 && a.is_zero()) throw NotInvertible("negative power of the zero series");

    const auto n = static_cast<std::uint64_t>(e < 0 ? -e : e);
    const std::size_t nnz = a.term_count();
    const std::size_t span = std::max<std::size_t>(1, a.dense().size());
    // Repeated multiplication (or division) by a sparse base is cheaper than
    // squaring, which densifies after the first step.
    const bool sequential = nnz * n <= span * static_cast<std::size_t>(std::bit_width(n));

    if (e < 0) {
        if (sequential) {
            LaurentSeries r = invert(a);
            for (std::uint64_t i = 1; i < n; ++i) r = divide(r, a);
            return r;
        }
        return pow(invert(a), static_cast<std::int64_t>(n));
    }
    if (sequential) {
        LaurentSeries r = a;
        for (std::uint64_t i = 1; i < n; ++i) r = mul(r, a);
        return r;
    }
    std::optional<LaurentSeries> result;
    LaurentSeries base = a;
    std::uint64_t k = n;
    while (true) {
        if (k & 1U) result = result ? mul(*result, base) : base;
        k >>= 1U;
        if (k == 0) break;
        base = mul(base, base);
    }
    return *result;
}

LaurentSeries shift(const LaurentSeries& a, Exponent j)
{
    if (a.is_zero()) return LaurentSeries(a.prec() + j);
    return LaurentSeries(a.lo() + j, a.dense(), a.prec() + j);
}

LaurentSeries substitute_power(const LaurentSeries& a, std::int64_t m)
{
    if (m <= 0) throw DomainError("substitute_power needs m >= 1, got " + std::to_string(m));
    if (a.is_zero()) return LaurentSeries(a.prec() * m);
    std::vector<Integer> out((a.dense().size() - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < a.dense().size(); ++i) {
        out[i * static_cast<std::size_t>(m)] = a.dense()[i];
    }
    return LaurentSeries(a.lo() * m, std::move(out), a.prec() * m);
}

LaurentSeries dissect(const LaurentSeries& a, std::int64_t r, std::int64_t s)
{
    if (r < 1) throw DomainError("dissect needs r >= 1, got " + std::to_string(r));
    if (s < 0 || s >= r) {
        throw DomainError("dissect residue " + std::to_string(s) + " outside [0, " +
                          std::to_string(r) + ")");
    }
    const Exponent prec = ceil_div(a.prec() - s, r);
    if (a.is_zero()) return LaurentSeries(prec);

    const Exponent end = a.lo() + static_cast<Exponent>(a.dense().size());
    Exponent e = a.lo() + floor_mod(s - a.lo(), r);
    if (e >= end) return LaurentSeries(prec);
    const Exponent first = floor_div(e - s, r);
    std::vector<Integer> out;
    out.reserve(static_cast<std::size_t>((end - e) / r + 1));
    for (; e < end; e += r) out.push_back(a.dense()[static_cast<std::size_t>(e - a.lo())]);
    return LaurentSeries(first, std::move(out), prec);
}

LaurentSeries truncate(const LaurentSeries& a, Exponent prec)
{
    if (prec >= a.prec()) return a;
    return LaurentSeries(a.lo(), a.dense(), prec);
}

LaurentSeries drop_below(const LaurentSeries& a, Exponent from)
{
    if (a.is_zero() || from <= a.lo()) return a;
    const Exponent end = a.lo() + static_cast<Exponent>(a.dense().size());
    if (from >= end) return LaurentSeries(a.prec());
    std::vector<Integer> out(a.dense().begin() + (from - a.lo()), a.dense().end());
    return LaurentSeries(from, std::move(out), a.prec());
}

EqualityOutcome compare(const LaurentSeries& a, const LaurentSeries& b)
{
    const Exponent order = std::min(a.prec(), b.prec());
    Exponent lowest = 0;
    if (!a.is_zero() && !b.is_zero()) {
        lowest = std::min(a.lo(), b.lo());
    } else if (!a.is_zero()) {
        lowest = a.lo();
    } else if (!b.is_zero()) {
        lowest = b.lo();
    }
    if (order <= lowest) {
        throw VacuousComparison("vacuous comparison: precision " + std::to_string(order) +
                                " does not exceed least exponent " + std::to_string(lowest));
    }

    auto at = [](const LaurentSeries& s, Exponent e) -> const Integer& {
        if (s.is_zero() || e < s.lo()) return zero_integer();
        const auto i = static_cast<std::size_t>(e - s.lo());
        return i < s.dense().size() ? s.dense()[i] : zero_integer();
    };
    for (Exponent e = lowest; e < order; ++e) {
        const Integer& x = at(a, e);
        const Integer& y = at(b, e);
        if (x != y) return {order, lowest, Mismatch{e, x, y}};
    }
    return {order, lowest, std::nullopt};
}

} // namespace qseries
