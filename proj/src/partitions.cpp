#include "symspec/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace symspec {

int Partition::weight() const
{
    return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::stratum() const
{
    return static_cast<int>(std::count_if(parts.begin(), parts.end(), [](int p) { return p > 0; }));
}

bool Partition::is_valid() const
{
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (parts[j] < 0)
            return false;
        if (j > 0 && parts[j] > parts[j - 1])
            return false;
    }
    return true;
}

std::string Partition::to_csv() const
{
    std::string out;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        if (j > 0)
            out += ',';
        out += std::to_string(parts[j]);
    }
    return out;
}

PartitionsOfWeight::PartitionsOfWeight(int r, int n) : weight_(n)
{
    if (r < 1)
        throw std::invalid_argument("partition length r must be at least 1");
    if (n < 0)
        throw std::invalid_argument("partition weight must be nonnegative");
    current_.parts.assign(static_cast<std::size_t>(r), 0);
}

bool PartitionsOfWeight::next()
{
    if (done_)
        return false;
    auto& p = current_.parts;
    const int r = static_cast<int>(p.size());
    if (!started_) {
        started_ = true;
        p[0] = weight_;
        return true;
    }
    // Rightmost position that can drop by one while the tail still fits
    // under the lowered cap; the tail is then filled greedily.
    int tail = 0;
    for (int i = r - 1; i >= 0; --i) {
        const int cap = p[i] - 1;
        const int remainder = tail + 1;
        if (cap >= 0 && static_cast<long>(cap) * (r - 1 - i) >= remainder && p[i] > 0) {
            p[i] = cap;
            int left = remainder;
            for (int j = i + 1; j < r; ++j) {
                p[j] = std::min(cap, left);
                left -= p[j];
            }
            return true;
        }
        tail += p[i];
    }
    done_ = true;
    return false;
}

GradedPartitions::GradedPartitions(int r, int max_weight)
    : rank_(r), max_weight_(max_weight), inner_(r, 0)
{
}

bool GradedPartitions::next()
{
    while (weight_ <= max_weight_) {
        if (inner_.next())
            return true;
        ++weight_;
        if (weight_ > max_weight_)
            break;
        inner_ = PartitionsOfWeight(rank_, weight_);
    }
    return false;
}

std::vector<Partition> enumerate_by_weight(int r, int n)
{
    std::vector<Partition> out;
    PartitionsOfWeight stream(r, n);
    while (stream.next())
        out.push_back(stream.current());
    return out;
}

std::vector<Partition> enumerate_graded(int r, int max_weight)
{
    std::vector<Partition> out;
    GradedPartitions stream(r, max_weight);
    while (stream.next())
        out.push_back(stream.current());
    return out;
}

}  // namespace symspec
