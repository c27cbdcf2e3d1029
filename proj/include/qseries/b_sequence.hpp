#pragma once

#include <cstdint>
#include <mutex>
#include <vector>

#include <gmpxx.h>

namespace qseries {

/// num / den, throwing InternalConsistencyError unless the division is exact.
mpz_class exact_quotient(const mpz_class& num, const mpz_class& den);

/// (8^k - 1) / 7.
mpz_class eight_power_term(std::int64_t k);

/*
 * B_0 = 0, B_1 = 1, B_k = -4 B_{k-1} - 8 B_{k-2} + (8^k - 1)/7.
 * Values are memoized; safe to query from several threads.
 */
class BSequence {
public:
    mpz_class value(std::int64_t k);

private:
    std::mutex mutex_;
    std::vector<mpz_class> memo_{0, 1};
};

/// B_k from a process-wide memo.
mpz_class b_value(std::int64_t k);

/// (8^{4m+4} - 1) / 91, which equals B_{4m+3}.
mpz_class b_closed_form_4m3(std::int64_t m);

} // namespace qseries
