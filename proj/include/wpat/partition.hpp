#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wpat/numeric.hpp"

namespace wpat {

/// A partition: weakly decreasing sequence of positive integers.
/// Trailing zeros are accepted on construction and dropped, so (4,2) and
/// (4,2,0) denote the same object. The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int size() const;                       // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// 1-based part access; parts beyond the length read as 0.
    Int part(int i) const;

    auto operator<=>(const Partition&) const = default;

    /// Comma-separated parts; "-" for the empty partition.
    std::string str() const;

private:
    std::vector<Int> parts_;
};

/// True iff seq is weakly decreasing with all entries > 0, or empty.
bool is_partition(std::span<const Int> seq);

/// True iff no value occurs e or more times among the parts.
bool is_e_regular(const Partition& lam, Int e);

/// A composition: nonempty sequence of positive integers.
class Composition {
public:
    explicit Composition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    Int part(int i) const { return parts_.at(static_cast<size_t>(i - 1)); }

    auto operator<=>(const Composition&) const = default;
    std::string str() const;

private:
    std::vector<Int> parts_;
};

/// A weak composition: fixed-length sequence of nonnegative integers.
class WeakComposition {
public:
    WeakComposition() = default;
    explicit WeakComposition(std::vector<Int> parts);

    const std::vector<Int>& parts() const { return parts_; }
    Int size() const;
    int length() const { return static_cast<int>(parts_.size()); }
    Int part(int i) const { return parts_.at(static_cast<size_t>(i - 1)); }

    auto operator<=>(const WeakComposition&) const = default;
    std::string str() const;

private:
    std::vector<Int> parts_;
};

/// A tuple of partitions with a declared number of components.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components)
        : components_(std::move(components)) {}

    const std::vector<Partition>& components() const { return components_; }
    int length() const { return static_cast<int>(components_.size()); }
    const Partition& component(int i) const { return components_.at(static_cast<size_t>(i - 1)); }
    Int total_size() const;

    auto operator<=>(const MultiPartition&) const = default;
    std::string str() const;

private:
    std::vector<Partition> components_;
};

/// A(mu; w): the number of tuples (lambda^(1), ..., lambda^(l)) of partitions
/// with total size w and length(lambda^(i)) <= mu_i. Throws std::overflow_error
/// when the count does not fit in 64 bits.
std::uint64_t count_multipartitions(const Composition& mu, Int w);

/// Exhaustive, duplicate-free listing of the tuples counted by
/// count_multipartitions, ordered component-major with each slot running
/// through its candidate partitions in descending lexicographic order.
std::vector<MultiPartition> enumerate_multipartitions(const Composition& mu, Int w);

/// All partitions of n with at most max_len parts, in descending
/// lexicographic order of the part sequences.
std::vector<Partition> partitions_max_length(Int n, Int max_len);

/// All weak compositions of total into len parts, in ascending
/// lexicographic order.
std::vector<WeakComposition> weak_compositions(Int total, int len);

/// All compositions of r, in ascending lexicographic order of part sequences.
std::vector<Composition> compositions_of(Int r);

} // namespace wpat
