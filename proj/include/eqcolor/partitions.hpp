#ifndef EQCOLOR_PARTITIONS_HPP
#define EQCOLOR_PARTITIONS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace eqcolor {

using Int = std::int64_t;

constexpr Int ceil_div(Int num, Int den) { return num / den + (num % den != 0 ? 1 : 0); }
constexpr Int floor_div(Int num, Int den) { return num / den; }

/// A decomposition n = a*q + b*(q+1) into addends from {q, q+1}.
///
/// The pair (a, b) together with (n, q) identifies the partition: once q is
/// fixed, the number of addends a+b determines a and b.
struct QPartition {
    Int n = 0;
    Int q = 0;
    Int a = 0;
    Int b = 0;

    constexpr Int count() const { return a + b; }
    constexpr bool valid() const {
        return q >= 1 && n >= 1 && a >= 0 && b >= 0 && a + b >= 1 && a * q + b * (q + 1) == n;
    }
    friend constexpr bool operator==(const QPartition&, const QPartition&) = default;
};

struct CountRange {
    Int min = 0;
    Int max = 0;
    friend constexpr bool operator==(const CountRange&, const CountRange&) = default;
};

namespace detail {

inline void require_partition_domain(Int n, Int q) {
    if (n <= 0 || q <= 0 || q > n) {
        throw std::domain_error("q-partition requires 1 <= q <= n (got n=" + std::to_string(n) +
                                ", q=" + std::to_string(q) + ")");
    }
}

// Partition of n with exactly `count` addends; b is forced to n - count*q.
inline std::optional<QPartition> with_count(Int n, Int q, Int count) {
    const Int b = n - count * q;
    const Int a = count - b;
    QPartition p{n, q, a, b};
    if (!p.valid()) return std::nullopt;
    return p;
}

} // namespace detail

/// True iff n has a q-partition, i.e. n mod q <= floor(n/q).
inline bool q_partition_exists(Int n, Int q) {
    detail::require_partition_domain(n, q);
    return n % q <= n / q;
}

inline std::optional<QPartition> minimal_q_partition(Int n, Int q) {
    if (!q_partition_exists(n, q)) return std::nullopt;
    return detail::with_count(n, q, ceil_div(n, q + 1));
}

inline std::optional<QPartition> maximal_q_partition(Int n, Int q) {
    if (!q_partition_exists(n, q)) return std::nullopt;
    return detail::with_count(n, q, n / q);
}

/// Every q-partition of n, fewest addends first.
inline std::vector<QPartition> enumerate_q_partitions(Int n, Int q) {
    detail::require_partition_domain(n, q);
    std::vector<QPartition> out;
    // Larger b means fewer addends, so walk b downwards.
    for (Int b = n / (q + 1); b >= 0; --b) {
        const Int rest = n - b * (q + 1);
        if (rest % q == 0) out.push_back(QPartition{n, q, rest / q, b});
    }
    return out;
}

/// (ceil(n/(q+1)), floor(n/q)) when a q-partition exists. Every count in
/// between is realised by exactly one q-partition.
inline std::optional<CountRange> addend_count_bounds(Int n, Int q) {
    if (!q_partition_exists(n, q)) return std::nullopt;
    return CountRange{ceil_div(n, q + 1), n / q};
}

/// Rewrites a partition into one with exactly one more addend.
///
/// If b >= q, q copies of (q+1) become q+1 copies of q and the scale stays q.
/// Otherwise, if b == 0, a >= q-1 and q >= 2, the all-q partition is rewritten
/// as q addends of (q-1) plus (a-q+1) addends of q, at scale q-1.
/// Returns nullopt when neither rewrite applies.
inline std::optional<QPartition> split_step(const QPartition& p) {
    if (!p.valid()) throw std::domain_error("split_step: not a valid q-partition");
    if (p.b >= p.q) return QPartition{p.n, p.q, p.a + p.q + 1, p.b - p.q};
    if (p.b == 0 && p.q >= 2 && p.a >= p.q - 1) return QPartition{p.n, p.q - 1, p.q, p.a - p.q + 1};
    return std::nullopt;
}

} // namespace eqcolor

#endif
