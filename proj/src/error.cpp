#include "physarum/error.hpp"

namespace physarum {

namespace {

std::string parse_message(std::size_t line, std::size_t column,
                          const std::vector<std::string>& expected, const std::string& found) {
  std::string msg = std::to_string(line) + ":" + std::to_string(column) + ": expected ";
  if (expected.size() > 1) msg += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) msg += ", ";
    msg += expected[i];
  }
  return msg + ", found " + found;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
                       const std::string& found)
    : Error(parse_message(line, column, expected, found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

SceneError::SceneError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

}  // namespace physarum
