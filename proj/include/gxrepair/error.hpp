// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gxrepair {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
    [[nodiscard]] virtual const char* kind() const noexcept { return "error"; }
};

// Malformed graph input: duplicate node or edge, dangling endpoint.
class GraphError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "graph"; }
};

class ParseError : public Error {
  public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(message + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }
    [[nodiscard]] const char* kind() const noexcept override { return "parse"; }

  private:
    std::size_t line_;
    std::size_t column_;
};

// Symbol order that is cyclic or otherwise not a strict partial order.
class OrderError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "order"; }
};

// Weight aggregation exceeded the machine integer range.
class WeightOverflow : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "overflow"; }
};

// The configured search budget was exhausted before the search could finish.
class BudgetExceeded : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "budget_exceeded"; }
};

// File could not be read or written.
class IoError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "io"; }
};

// Well-formed JSON with the wrong shape (missing keys, wrong types).
class FormatError : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "format"; }
};

class MalformedRepair : public Error {
  public:
    using Error::Error;
    [[nodiscard]] const char* kind() const noexcept override { return "malformed_repair"; }
};

}  // namespace gxrepair
