#include "qseries/b_sequence.hpp"

#include <string>

#include "qseries/errors.hpp"

namespace qseries {

namespace {

mpz_class power_of_eight(std::int64_t k)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 8, static_cast<unsigned long>(k));
    return r;
}

} // namespace

mpz_class exact_quotient(const mpz_class& num, const mpz_class& den)
{
    if (sgn(den) == 0 || !mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t())) {
        throw InternalConsistencyError(num.get_str() + " is not divisible by " + den.get_str());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

mpz_class eight_power_term(std::int64_t k)
{
    if (k < 0) throw DomainError("(8^k - 1)/7 needs k >= 0");
    return exact_quotient(power_of_eight(k) - 1, 7);
}

mpz_class BSequence::value(std::int64_t k)
{
    if (k < 0) throw DomainError("B_k is defined for k >= 0, got " + std::to_string(k));
    std::lock_guard lock(mutex_);
    while (static_cast<std::int64_t>(memo_.size()) <= k) {
        const auto n = static_cast<std::int64_t>(memo_.size());
        const mpz_class& b1 = memo_[memo_.size() - 1];
        const mpz_class& b2 = memo_[memo_.size() - 2];
        mpz_class next = -4 * b1 - 8 * b2 + eight_power_term(n);
        memo_.push_back(std::move(next));
    }
    return memo_[static_cast<std::size_t>(k)];
}

mpz_class b_value(std::int64_t k)
{
    static BSequence sequence;
    return sequence.value(k);
}

mpz_class b_closed_form_4m3(std::int64_t m)
{
    if (m < 0) throw DomainError("closed form needs m >= 0");
    return exact_quotient(power_of_eight(4 * m + 4) - 1, 91);
}

} // namespace qseries
