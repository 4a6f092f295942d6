#ifndef PMDEPTH_ERROR_HPP
#define PMDEPTH_ERROR_HPP

#include <stdexcept>
#include <string>

namespace pmdepth {

/// Malformed textual input (bar notation, pair lists, JSON).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A value is outside the domain of an operation (odd ground set, arc not in
/// the diagram, size above a configured bound, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact integer arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A construction whose existence is guaranteed by a known theorem could not
/// be carried out. Never expected to fire.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pmdepth

#endif  // PMDEPTH_ERROR_HPP
