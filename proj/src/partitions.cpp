#include "qseries/partitions.hpp"

#include <numeric>
#include <string>

#include "qseries/errors.hpp"

namespace qseries {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw DomainError("partition parts must be nonincreasing");
    }
}

std::int64_t Partition::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

Partition Partition::conjugate() const
{
    if (parts_.empty()) return {};
    std::vector<std::int64_t> conj(static_cast<std::size_t>(parts_.front()), 0);
    for (const auto part : parts_) {
        for (std::int64_t j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
    return Partition(std::move(conj));
}

PartitionEnumerator::PartitionEnumerator(std::int64_t n) : n_(n)
{
    if (n < 0) throw DomainError("cannot enumerate partitions of a negative integer");
}

std::optional<Partition> PartitionEnumerator::next()
{
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        if (n_ > 0) parts_.push_back(n_);
        done_ = n_ <= 1;
        return Partition(parts_);
    }
    // Strip trailing 1s, decrement the last part k > 1, then refill the
    // freed weight greedily with parts of size at most k - 1.
    std::int64_t freed = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++freed;
    }
    const std::int64_t k = parts_.back() - 1;
    parts_.back() = k;
    ++freed;
    while (freed > 0) {
        const std::int64_t p = std::min(k, freed);
        parts_.push_back(p);
        freed -= p;
    }
    done_ = parts_.front() == 1;
    return Partition(parts_);
}

std::vector<Partition> enumerate_partitions(std::int64_t n)
{
    std::vector<Partition> out;
    PartitionEnumerator e(n);
    for (const auto& p : e) out.push_back(p);
    return out;
}

std::vector<std::int64_t> hook_numbers(const Partition& p)
{
    const auto& rows = p.parts();
    const auto cols = p.conjugate().parts();
    std::vector<std::int64_t> hooks;
    hooks.reserve(static_cast<std::size_t>(p.weight()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::int64_t j = 0; j < rows[i]; ++j) {
            const auto arm = rows[i] - j - 1;
            const auto leg = cols[static_cast<std::size_t>(j)] - static_cast<std::int64_t>(i) - 1;
            hooks.push_back(arm + leg + 1);
        }
    }
    return hooks;
}

bool is_t_core(const Partition& p, std::int64_t t)
{
    if (t < 1) throw DomainError("t must be >= 1");
    for (const auto h : hook_numbers(p)) {
        if (h % t == 0) return false;
    }
    return true;
}

namespace {

mpz_class count_single(std::int64_t t, std::int64_t n)
{
    mpz_class count = 0;
    PartitionEnumerator e(n);
    for (const auto& p : e) {
        if (is_t_core(p, t)) ++count;
    }
    return count;
}

} // namespace

std::vector<mpz_class> count_cores_upto(std::int64_t t, std::int64_t n_max, bool pairs)
{
    if (t < 1) throw DomainError("t must be >= 1");
    std::vector<mpz_class> single;
    for (std::int64_t n = 0; n <= n_max; ++n) single.push_back(count_single(t, n));
    if (!pairs) return single;
    std::vector<mpz_class> out(single.size());
    for (std::size_t n = 0; n < single.size(); ++n) {
        for (std::size_t j = 0; j <= n; ++j) out[n] += single[j] * single[n - j];
    }
    return out;
}

mpz_class count_cores(std::int64_t t, std::int64_t n, bool pairs)
{
    if (n < 0) throw DomainError("n must be >= 0");
    if (!pairs) {
        if (t < 1) throw DomainError("t must be >= 1");
        return count_single(t, n);
    }
    return count_cores_upto(t, n, true).back();
}

} // namespace qseries
