#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace physarum {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed term or formula text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// Invalid scene file; names the first offending line.
class SceneError : public Error {
 public:
  SceneError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class UnresolvedConstant : public Error {
 public:
  explicit UnresolvedConstant(const std::string& name)
      : Error("unresolved constant '" + name + "'"), name_(name) {}
  UnresolvedConstant(const std::string& name, const std::string& where)
      : Error(where + ": unresolved constant '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DiffusionConflict : public Error {
 public:
  using Error::Error;
};

/// Constant or diffusion unfolding exceeded its budget (unguarded recursion).
class DepthExceeded : public Error {
 public:
  using Error::Error;
};

class EmptyStream : public Error {
 public:
  EmptyStream() : Error("empty stream") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name) : Error("unbound variable '" + name + "'") {}
};

class PartialValuation : public Error {
 public:
  using Error::Error;
};

class KindMismatch : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class SortOutOfUniverse : public Error {
 public:
  using Error::Error;
};

}  // namespace physarum
