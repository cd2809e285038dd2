#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetaprime {

// Argument outside an operation's documented domain.
class domain_error : public std::invalid_argument {
public:
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

// Malformed textual input (decimal literals, prime lists).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A quantity fell below the resolvable threshold for the working precision.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A series or product would need more terms than the configured budget.
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Adaptive search exhausted its doubling cap without confirming a prime.
class escalation_error : public std::runtime_error {
public:
    escalation_error(const std::string& what, std::size_t index)
        : std::runtime_error(what), index_reached(index) {}
    std::size_t index_reached;
};

}  // namespace zetaprime
