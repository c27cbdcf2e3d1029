#pragma once

#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace qseries {

/// A nonincreasing sequence of positive parts.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless `parts` is nonincreasing and positive.
    explicit Partition(std::vector<std::int64_t> parts);

    const std::vector<std::int64_t>& parts() const { return parts_; }
    std::int64_t weight() const;
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<std::int64_t> parts_;
};

/*
 * Partitions of n in lexicographically decreasing order, from (n) down to
 * (1, ..., 1). n = 0 yields the empty partition once.
 */
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::int64_t n);

    /// Next partition, or nullopt once exhausted.
    std::optional<Partition> next();

    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        explicit iterator(PartitionEnumerator* owner) : owner_(owner) { ++*this; }

        reference operator*() const { return *current_; }
        pointer operator->() const { return &*current_; }
        iterator& operator++()
        {
            current_ = owner_->next();
            if (!current_) owner_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        bool operator==(const iterator& other) const { return owner_ == other.owner_; }

    private:
        PartitionEnumerator* owner_ = nullptr;
        std::optional<Partition> current_;
    };

    iterator begin() { return iterator(this); }
    iterator end() { return iterator(); }

private:
    std::int64_t n_;
    std::vector<std::int64_t> parts_;
    bool started_ = false;
    bool done_ = false;
};

std::vector<Partition> enumerate_partitions(std::int64_t n);

/// Hook length of every cell, row by row.
std::vector<std::int64_t> hook_numbers(const Partition& p);

bool is_t_core(const Partition& p, std::int64_t t);

/// a_t(n) when pairs is false, A_t(n) = sum_j a_t(j) a_t(n - j) otherwise.
mpz_class count_cores(std::int64_t t, std::int64_t n, bool pairs);

/// count_cores for every n in [0, n_max], sharing the enumeration work.
std::vector<mpz_class> count_cores_upto(std::int64_t t, std::int64_t n_max, bool pairs);

} // namespace qseries
