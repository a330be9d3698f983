#pragma once

#include <stdexcept>
#include <string>

namespace jdc {

// Malformed input data: invariant violations, bad encodings, mixed orders.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested computation exceeds the configured degree bound.
struct capacity_error : std::runtime_error {
    explicit capacity_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Text input could not be parsed; offset is the byte position in the input.
struct parse_error : std::runtime_error {
    parse_error(const std::string& msg, std::size_t offset_, std::size_t line_, std::size_t column_)
        : std::runtime_error(msg + " at offset " + std::to_string(offset_) + " (line " + std::to_string(line_) +
                             ", column " + std::to_string(column_)),
          offset(offset_), line(line_), column(column_) {}

    std::size_t offset;
    std::size_t line;
    std::size_t column;
};

} // namespace jdc
