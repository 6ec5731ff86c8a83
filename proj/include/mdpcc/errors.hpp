#pragma once

#include <stdexcept>
#include <string>

namespace mdpcc {

// Full rational row rank was required but the input does not have it.
// Distinct from a "false" verdict so callers can report it separately.
class RankDeficientError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A brute-force enumeration would exceed its configured cap.
class OracleTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Syntax error in a matrix file; line numbers are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error(message), line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

}  // namespace mdpcc
