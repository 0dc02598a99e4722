#ifndef SYMSPEC_ERRORS_HPP
#define SYMSPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symspec {

/// Invalid Cartan label, size parameters or (a, b, r) triple.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A computation whose mathematical precondition does not hold
/// (trace of a non-trace-class operator, gamma <= -1, ...).
class NotApplicable : public std::domain_error {
public:
    NotApplicable(std::string reason, const std::string& what)
        : std::domain_error(what), reason_(std::move(reason))
    {
    }

    /// Machine-readable reason code, e.g. "not_trace_class".
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// A result that contradicts an identity the code relies on.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace symspec

#endif
