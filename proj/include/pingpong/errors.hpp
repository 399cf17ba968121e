#ifndef PINGPONG_ERRORS_HPP_
#define PINGPONG_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace pingpong {

  // Malformed or out-of-contract input. Distinct from a verification verdict,
  // which is reported through Report and never thrown.
  class input_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Text that does not match the certificate grammar.
  class syntax_error : public input_error {
   public:
    syntax_error(std::size_t line, std::size_t column, const std::string& what)
        : input_error("line " + std::to_string(line) + ", column "
                      + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    std::size_t line() const noexcept {
      return line_;
    }
    std::size_t column() const noexcept {
      return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
  };

  // Grammatically valid text with an inconsistent meaning: unbound or
  // duplicated roles, unknown names, elements of the wrong domain.
  class semantic_error : public input_error {
   public:
    using input_error::input_error;
  };

}  // namespace pingpong

#endif  // PINGPONG_ERRORS_HPP_
