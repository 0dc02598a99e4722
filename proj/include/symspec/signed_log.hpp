#ifndef SYMSPEC_SIGNED_LOG_HPP
#define SYMSPEC_SIGNED_LOG_HPP

#include <cmath>
#include <limits>
#include <stdexcept>

namespace symspec {

/// sign * exp(log_abs), with sign in {-1, 0, +1}.  Used for products of
/// Gamma values that overflow a double and change sign.
struct SignedLogValue {
    int sign = 1;
    double log_abs = 0.0;

    static SignedLogValue one() { return {1, 0.0}; }
    static SignedLogValue zero() { return {0, -std::numeric_limits<double>::infinity()}; }

    static SignedLogValue from_double(double x)
    {
        if (x == 0.0)
            return zero();
        return {x > 0 ? 1 : -1, std::log(std::fabs(x))};
    }

    bool is_zero() const { return sign == 0; }

    /// May overflow to +-inf or underflow to +-0; the sign survives either way.
    double to_double() const
    {
        if (sign == 0)
            return 0.0;
        return sign * std::exp(log_abs);
    }

    SignedLogValue pow(double p) const
    {
        if (sign == 0)
            return zero();
        if (sign < 0)
            throw std::domain_error("real power of a negative SignedLogValue");
        return {1, p * log_abs};
    }

    SignedLogValue abs() const { return sign == 0 ? zero() : SignedLogValue{1, log_abs}; }

    SignedLogValue& operator*=(const SignedLogValue& rhs)
    {
        if (sign == 0 || rhs.sign == 0)
            return *this = zero();
        sign *= rhs.sign;
        log_abs += rhs.log_abs;
        return *this;
    }

    SignedLogValue& operator/=(const SignedLogValue& rhs)
    {
        if (rhs.sign == 0)
            throw std::domain_error("division by an exact zero");
        if (sign == 0)
            return *this;
        sign *= rhs.sign;
        log_abs -= rhs.log_abs;
        return *this;
    }

    friend SignedLogValue operator*(SignedLogValue lhs, const SignedLogValue& rhs) { return lhs *= rhs; }
    friend SignedLogValue operator/(SignedLogValue lhs, const SignedLogValue& rhs) { return lhs /= rhs; }
};

}  // namespace symspec

#endif
