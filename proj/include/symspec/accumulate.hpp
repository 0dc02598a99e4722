#ifndef SYMSPEC_ACCUMULATE_HPP
#define SYMSPEC_ACCUMULATE_HPP

#include <cmath>

namespace symspec {

/// Neumaier (improved Kahan) summation.
class CompensatedSum {
public:
    void add(double x)
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }

    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace symspec

#endif
