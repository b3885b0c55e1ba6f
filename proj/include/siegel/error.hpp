#ifndef SIEGEL_ERROR_HPP
#define SIEGEL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace siegel {

/// Malformed user input: bad numbers, wrong shapes, unknown names.
class input_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class dimension_error : public input_error {
 public:
  using input_error::input_error;
};

/// A document that failed to parse; carries a 1-based line/column.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : input_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const { return line_; }
  [[nodiscard]] std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input violating a named mathematical condition (Omega-Hermitian, family
/// parameter constraints, ...). `condition()` is a short stable label.
class validation_error : public input_error {
 public:
  validation_error(std::string condition, const std::string& detail)
      : input_error(condition + ": " + detail), condition_(std::move(condition)) {}

  [[nodiscard]] const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// Exact data that has no representation over Q(i) (e.g. irrational eigenvalues).
class not_representable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A broken internal invariant.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace siegel

#endif  // SIEGEL_ERROR_HPP
