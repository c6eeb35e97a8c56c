#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <qdivisor/series.hpp>

namespace qdivisor {

struct NotInP0 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NotInP1 : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// n1^f1 n2^f2 with two distinct parts. Canonical form keeps n1 < n2.
struct TwoPartPartition {
    int n1 = 0;
    int f1 = 0;
    int n2 = 0;
    int f2 = 0;

    long weight() const { return static_cast<long>(f1) * n1 + static_cast<long>(f2) * n2; }
    TwoPartPartition canonical() const;

    friend bool operator==(const TwoPartPartition &, const TwoPartPartition &) = default;
    friend auto operator<=>(const TwoPartPartition &, const TwoPartPartition &) = default;
};

// P0: 3 divides neither multiplicity and f1 == f2 (mod 3).
// P1: 3 divides neither multiplicity and f1 != f2 (mod 3).
enum class PartitionClass { P0, P1 };

std::optional<PartitionClass> classify(const TwoPartPartition &p);

std::vector<TwoPartPartition> enumerate_class(int n, PartitionClass cls);

// n1^f1 n2^f2 -> (n1 + n2)^f1 n2^(f2 - f1), labelled so that f2 > f1.
TwoPartPartition forward_map(const TwoPartPartition &p);

struct Exceptional {
    friend bool operator==(const Exceptional &, const Exceptional &) = default;
};

// n1^f1 n2^f2 -> (n1 - n2)^f1 n2^(f1 + f2), labelled so that n1 > n2.
// Exceptional when n1 = 2 n2 (the image would repeat a part).
std::variant<TwoPartPartition, Exceptional> inverse_map(const TwoPartPartition &p);

bool is_exceptional(const TwoPartPartition &p);

// Number of P0(n) partitions of the shape (2d)^f1 d^f2, by enumeration.
long exceptional_count(int n);

// P0(n) - P1(n) for n = 0..n_max (entry 0 is 0). Each n is enumerated
// independently; the parallel version spreads n across OpenMP threads.
std::vector<long> difference_table(int n_max);
std::vector<long> difference_table_serial(int n_max);

// sum_n (P0(n) - P1(n)) q^n
QSeries difference_series(int order);

// Parts listed largest first, e.g. "7^1 1^2".
std::string to_string(const TwoPartPartition &p);
// All parts spelled out largest first, e.g. "711"; parts must be < 10.
std::string compact_string(const TwoPartPartition &p);

} // namespace qdivisor
