#ifndef GRAPHINV_ERRORS_HPP
#define GRAPHINV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace graphinv {

// Raised when an enumeration exceeds its configured resource budget
// (clique count, candidate permutations, oracle input size).
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace graphinv

#endif
