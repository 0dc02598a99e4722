#ifndef SYMSPEC_PARTITIONS_HPP
#define SYMSPEC_PARTITIONS_HPP

#include <string>
#include <vector>

namespace symspec {

/// A signature m = (m_1 >= ... >= m_r >= 0).
struct Partition {
    std::vector<int> parts;

    int rank() const { return static_cast<int>(parts.size()); }
    int weight() const;
    /// Number of strictly positive parts; m lies in the stratum I(k) with this k.
    int stratum() const;
    bool is_valid() const;

    /// "m1,m2,...,mr"
    std::string to_csv() const;

    bool operator==(const Partition&) const = default;
};

/// All partitions of weight n with at most r parts (padded with zeros to
/// length r), in lexicographically decreasing order.  Single consumer.
class PartitionsOfWeight {
public:
    PartitionsOfWeight(int r, int n);

    /// Advances; false once the stream is exhausted.  The first call yields
    /// (n, 0, ..., 0).
    bool next();
    const Partition& current() const { return current_; }

private:
    Partition current_;
    int weight_;
    bool started_ = false;
    bool done_ = false;
};

/// Concatenation of PartitionsOfWeight(r, n) for n = 0..max_weight.
class GradedPartitions {
public:
    GradedPartitions(int r, int max_weight);

    bool next();
    const Partition& current() const { return inner_.current(); }

private:
    int rank_;
    int max_weight_;
    int weight_ = 0;
    PartitionsOfWeight inner_;
};

std::vector<Partition> enumerate_by_weight(int r, int n);
std::vector<Partition> enumerate_graded(int r, int max_weight);

/// Calls f(parts) for every partition of weight n with at most r parts, in
/// the same order as PartitionsOfWeight.  `parts` is a reused buffer.
template <class F>
void for_each_partition_of_weight(int r, int n, F&& f)
{
    PartitionsOfWeight stream(r, n);
    while (stream.next())
        f(stream.current().parts);
}

}  // namespace symspec

#endif
