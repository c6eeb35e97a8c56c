#include <qdivisor/partitions.hpp>

#include <algorithm>

namespace qdivisor {

namespace {

void require_valid(const TwoPartPartition &p)
{
    if (p.n1 < 1 || p.n2 < 1 || p.f1 < 1 || p.f2 < 1 || p.n1 == p.n2) {
        throw std::invalid_argument("not a partition into two distinct parts: " + to_string(p));
    }
}

long differences_at(int n)
{
    return static_cast<long>(enumerate_class(n, PartitionClass::P0).size())
           - static_cast<long>(enumerate_class(n, PartitionClass::P1).size());
}

} // namespace

TwoPartPartition TwoPartPartition::canonical() const
{
    if (n1 < n2) {
        return *this;
    }
    return {n2, f2, n1, f1};
}

std::optional<PartitionClass> classify(const TwoPartPartition &p)
{
    if (p.n1 < 1 || p.n2 < 1 || p.f1 < 1 || p.f2 < 1 || p.n1 == p.n2) {
        return std::nullopt;
    }
    if (p.f1 % 3 == 0 || p.f2 % 3 == 0) {
        return std::nullopt;
    }
    return p.f1 % 3 == p.f2 % 3 ? PartitionClass::P0 : PartitionClass::P1;
}

std::vector<TwoPartPartition> enumerate_class(int n, PartitionClass cls)
{
    if (n < 1) {
        throw std::invalid_argument("enumerate_class: n must be positive");
    }
    std::vector<TwoPartPartition> out;
    for (int n1 = 1; n1 < n; ++n1) {
        for (int f1 = 1; f1 * n1 < n; ++f1) {
            const int rest = n - f1 * n1;
            for (int n2 = n1 + 1; n2 <= rest; ++n2) {
                if (rest % n2 != 0) {
                    continue;
                }
                const TwoPartPartition p{n1, f1, n2, rest / n2};
                if (classify(p) == cls) {
                    out.push_back(p);
                }
            }
        }
    }
    return out;
}

TwoPartPartition forward_map(const TwoPartPartition &p)
{
    if (classify(p) != PartitionClass::P1) {
        throw NotInP1("forward_map: " + to_string(p) + " is not a P1 partition");
    }
    // Relabel so the second part carries the larger multiplicity.
    const TwoPartPartition q = p.f2 > p.f1 ? p : TwoPartPartition{p.n2, p.f2, p.n1, p.f1};
    return TwoPartPartition{q.n1 + q.n2, q.f1, q.n2, q.f2 - q.f1}.canonical();
}

std::variant<TwoPartPartition, Exceptional> inverse_map(const TwoPartPartition &p)
{
    if (classify(p) != PartitionClass::P0) {
        throw NotInP0("inverse_map: " + to_string(p) + " is not a P0 partition");
    }
    // Relabel so the first part is the larger one.
    const TwoPartPartition q = p.n1 > p.n2 ? p : TwoPartPartition{p.n2, p.f2, p.n1, p.f1};
    if (q.n1 == 2 * q.n2) {
        return Exceptional{};
    }
    return TwoPartPartition{q.n1 - q.n2, q.f1, q.n2, q.f1 + q.f2}.canonical();
}

bool is_exceptional(const TwoPartPartition &p)
{
    return classify(p) == PartitionClass::P0 && (p.n1 == 2 * p.n2 || p.n2 == 2 * p.n1);
}

long exceptional_count(int n)
{
    const auto p0 = enumerate_class(n, PartitionClass::P0);
    return std::count_if(p0.begin(), p0.end(), [](const TwoPartPartition &p) { return is_exceptional(p); });
}

std::vector<long> difference_table_serial(int n_max)
{
    std::vector<long> out(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
    for (int n = 1; n <= n_max; ++n) {
        out[n] = differences_at(n);
    }
    return out;
}

std::vector<long> difference_table(int n_max)
{
    std::vector<long> out(static_cast<std::size_t>(std::max(n_max, 0)) + 1);
#pragma omp parallel for schedule(dynamic, 4)
    for (int n = 1; n <= n_max; ++n) {
        out[n] = differences_at(n);
    }
    return out;
}

QSeries difference_series(int order)
{
    const auto table = difference_table(order);
    std::vector<Rational> c(table.size());
    for (std::size_t n = 0; n < table.size(); ++n) {
        c[n] = table[n];
    }
    return QSeries(std::move(c));
}

std::string to_string(const TwoPartPartition &p)
{
    const bool first_larger = p.n1 > p.n2;
    const int big = first_larger ? p.n1 : p.n2, big_f = first_larger ? p.f1 : p.f2;
    const int small = first_larger ? p.n2 : p.n1, small_f = first_larger ? p.f2 : p.f1;
    return std::to_string(big) + "^" + std::to_string(big_f) + " " + std::to_string(small) + "^"
           + std::to_string(small_f);
}

std::string compact_string(const TwoPartPartition &p)
{
    require_valid(p);
    if (p.n1 > 9 || p.n2 > 9) {
        throw std::invalid_argument("compact_string: parts must be single digits");
    }
    const TwoPartPartition c = p.canonical();
    return std::string(static_cast<std::size_t>(c.f2), static_cast<char>('0' + c.n2))
           + std::string(static_cast<std::size_t>(c.f1), static_cast<char>('0' + c.n1));
}

} // namespace qdivisor
