#ifndef HOPFACT_ERROR_HPP_
#define HOPFACT_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfact {

using Index = std::size_t;

enum class ErrorKind {
  not_associative,
  no_identity,
  entry_out_of_range,
  identity_axiom_fails,
  associativity_axiom_fails,
  size_overflow,
  not_prime,
  source_target_mismatch,
  not_a_congruence,
  parent_mismatch,
  carrier_too_large,
  search_budget_exceeded,
  size_too_large,
  unknown_theorem,
  syntax_error,
  unknown_monoid_reference,
  duplicate_name,
  invalid_argument,
};

// Broad grouping used for CLI exit codes.
enum class ErrorClass { input, budget };

inline constexpr ErrorClass error_class(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::size_overflow:
    case ErrorKind::carrier_too_large:
    case ErrorKind::search_budget_exceeded:
    case ErrorKind::size_too_large:
      return ErrorClass::budget;
    default:
      return ErrorClass::input;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string const& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Monoid table violates (s t) u = s (t u).
class NotAssociative : public Error {
 public:
  NotAssociative(Index s, Index t, Index u)
      : Error(ErrorKind::not_associative,
              "table is not associative at (" + std::to_string(s) + ", " +
                  std::to_string(t) + ", " + std::to_string(u) + ")"),
        s(s), t(t), u(u) {}
  Index s, t, u;
};

/// Act table violates a 1 = a.
class IdentityAxiomFails : public Error {
 public:
  explicit IdentityAxiomFails(Index a)
      : Error(ErrorKind::identity_axiom_fails,
              "identity does not act trivially on element " +
                  std::to_string(a)),
        a(a) {}
  Index a;
};

/// Act table violates a (s t) = (a s) t.
class AssociativityAxiomFails : public Error {
 public:
  AssociativityAxiomFails(Index a, Index s, Index t)
      : Error(ErrorKind::associativity_axiom_fails,
              "action is not compatible with the product at (a=" +
                  std::to_string(a) + ", s=" + std::to_string(s) +
                  ", t=" + std::to_string(t) + ")"),
        a(a), s(s), t(t) {}
  Index a, s, t;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string const& msg)
      : Error(ErrorKind::syntax_error, std::to_string(line) + ":" +
                                           std::to_string(column) + ": " +
                                           msg),
        line(line), column(column) {}
  std::size_t line, column;
};

}  // namespace hopfact

#endif  // HOPFACT_ERROR_HPP_
