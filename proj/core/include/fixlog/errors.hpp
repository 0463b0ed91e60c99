#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fixlog {

// Input text could not be parsed. Positions are 1-based.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string msg, int line, int column)
        : std::runtime_error(std::move(msg)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

// A configured enumeration or instantiation cap would be exceeded.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(std::string msg, std::uint64_t estimate, std::uint64_t cap)
        : std::runtime_error(std::move(msg)), estimate_(estimate), cap_(cap) {}

    std::uint64_t estimate() const { return estimate_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t estimate_;
    std::uint64_t cap_;
};

// An operation was called outside its stated precondition.
class precondition_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace fixlog
