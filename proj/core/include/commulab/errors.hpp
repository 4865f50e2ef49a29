#pragma once

#include <stdexcept>
#include <string>

namespace commulab {

/// A configured enumeration / pair-queue cap was hit. Callers convert this
/// into an explicit INCONCLUSIVE outcome, never into a wrong answer.
class budget_exceeded : public std::runtime_error {
 public:
  explicit budget_exceeded(const std::string& what)
      : std::runtime_error(what) {}
};

/// A pivot in the Jordan-fiber back-substitution vanished; carries the entry
/// whose defining equation could not be solved.
class pivot_failure : public std::runtime_error {
 public:
  pivot_failure(int row, int col, const std::string& what)
      : std::runtime_error(what), row_(row), col_(col) {}
  int row() const { return row_; }
  int col() const { return col_; }

 private:
  int row_, col_;
};

}  // namespace commulab
