#pragma once

#include <stdexcept>
#include <string>

namespace lalg {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChartMismatchError : Error {
  using Error::Error;
};

struct StructureError : Error {
  using Error::Error;
};

struct ParseError : Error {
  int line = 0;
  int col = 0;
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " at line " + std::to_string(line_) + ", column " +
              std::to_string(col_)),
        line(line_),
        col(col_) {}
  explicit ParseError(const std::string& msg) : Error(msg) {}
};

}  // namespace lalg
