#ifndef SYMSPEC_CLI_HPP
#define SYMSPEC_CLI_HPP

#include "symspec/domain.hpp"
#include "symspec/rational.hpp"
#include "symspec/spectral.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace symspec::cli {

enum class OutputFormat { text, json, csv };

/// Either a Cartan type with its size flags or a raw (a, b, r) triple.
struct DomainSpec {
    std::optional<CartanType> type;
    std::optional<int> r, s, n;
    std::optional<int> a, b;

    bool empty() const { return !type && !r && !s && !n && !a && !b; }
};

struct Command {
    std::string subcommand;
    DomainSpec domain;
    std::optional<Rational> alpha, gamma, beta, p, t;
    OperatorKind kind = OperatorKind::bergman;
    std::string method = "series";
    int max_weight = 0;
    double tolerance = 1e-10;
    int nodes = 24;
    long long samples = 100000;
    std::uint64_t seed = 42;
    int threads = 0;  // 0: SYMSPEC_THREADS, then the OpenMP default
    OutputFormat format = OutputFormat::text;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Arguments after the program name.  Throws UsageError.
Command parse(const std::vector<std::string>& args);

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

/// 0 on success (a divergent verdict is a success), 2 when a mathematical
/// precondition fails, 1 on usage or internal errors.
Outcome execute(const Command& cmd);

/// parse + execute; help and usage errors included.
Outcome run(const std::vector<std::string>& args);

}  // namespace symspec::cli

#endif
