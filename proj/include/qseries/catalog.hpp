#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qseries/eta.hpp"
#include "qseries/laurent_series.hpp"

namespace qseries {

class CatalogError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownIdentity : public CatalogError {
public:
    using CatalogError::CatalogError;
};

class InvalidParams : public CatalogError {
public:
    using CatalogError::CatalogError;
};

enum class IdentityKind { series_identity, coefficient_identity, congruence, integer_identity };

std::string to_string(IdentityKind kind);

/// coefficient(series, step * n + offset) == 0 (mod modulus) for n >= 0.
struct CongruenceSpec {
    std::int64_t step;
    std::int64_t offset;
    Integer modulus;
};

/*
 * Both sides of one catalog identity, ready for comparison. For congruences
 * `lhs` is the series being scanned and `rhs` is unused.
 */
struct BuiltIdentity {
    IdentityKind kind;
    LaurentSeries lhs;
    LaurentSeries rhs;
    std::optional<CongruenceSpec> congruence;
};

/// Integer parameter of a family (k or m) and its default sweep.
struct ParamSpec {
    std::string name;
    std::int64_t min;
    std::int64_t sweep_max;
};

struct IdentityInfo {
    std::string name;
    IdentityKind kind;
    std::string statement;
    std::optional<ParamSpec> param;
};

/*
 * Memo of expensive eta-quotient expansions (the core-partition generating
 * functions in particular), keyed by quotient. Requests below the cached
 * precision are served by truncation. Safe for concurrent callers.
 */
class SeriesCache {
public:
    LaurentSeries get(const EtaQuotient& eq, Exponent prec);

private:
    struct Slot {
        std::mutex mutex;
        std::optional<LaurentSeries> value;
    };
    std::mutex slots_mutex_;
    std::map<std::string, std::unique_ptr<Slot>> slots_;
};

/*
 * Every identity, recurrence and congruence under test, by stable name.
 *
 * `order` passed to build() is the q-adic order of the compared objects:
 * both sides of a series or coefficient identity are returned exactly below
 * q^order, and a congruence scan covers the progression indices
 * n = 0 .. order-1. Builders raise the precision of their inputs as far as
 * the precision rules require.
 */
class Catalog {
public:
    Catalog();
    explicit Catalog(std::shared_ptr<SeriesCache> cache);
    Catalog(const Catalog&) = delete;
    Catalog& operator=(const Catalog&) = delete;

    const std::vector<IdentityInfo>& entries() const { return entries_; }
    const IdentityInfo& info(const std::string& name) const;
    bool contains(const std::string& name) const;

    BuiltIdentity build(const std::string& name, const std::vector<std::int64_t>& params,
                        Exponent order) const;

    /// Parameter lists covered by verify-all for this entry.
    std::vector<std::vector<std::int64_t>> default_params(const std::string& name) const;

    SeriesCache& cache() const { return *cache_; }

private:
    using Builder = std::function<BuiltIdentity(const std::vector<std::int64_t>&, Exponent)>;

    void add(IdentityInfo info, Builder builder);
    void register_entries();

    std::shared_ptr<SeriesCache> cache_;
    std::vector<IdentityInfo> entries_;
    std::map<std::string, Builder> builders_;
};

/// sum_{n>=0} c(step * n + offset) q^n for any offset >= 0.
LaurentSeries progression(const LaurentSeries& a, std::int64_t step, std::int64_t offset);

/// Left side of the A_5(2^k n + 2^{k+1} - 2) family, obtained from the
/// pair-core series by k rounds of "divide by q^2, keep even exponents".
LaurentSeries a5_dissection_chain(const LaurentSeries& a5_pairs, std::int64_t k);

/// Right side of that family:
/// B_k f1^4 f5^4 / q - 8 B_{k-1} f2^4 f10^4 + (8^{k+1}-1)/7 f5^10/f1^2
/// - (8^{k+1}-8)/7 q^2 f10^10 / f2^2.
LaurentSeries a5_dissection_closed_form(std::int64_t k, Exponent prec);

} // namespace qseries
