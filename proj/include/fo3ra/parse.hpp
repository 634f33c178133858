#ifndef FO3RA_PARSE_HPP
#define FO3RA_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "fo3ra/ast.hpp"

namespace fo3ra {

class SourceError : public std::runtime_error {
 public:
  SourceError(int line, int column, std::string message,
              std::vector<std::string> expected = {})
      : std::runtime_error(format(line, column, message, expected)),
        line(line),
        column(column),
        message(std::move(message)),
        expected(std::move(expected)) {}

  int line;
  int column;
  std::string message;
  std::vector<std::string> expected;

 private:
  static std::string format(int line, int column, const std::string& message,
                            const std::vector<std::string>& expected);
};

// In Hom mode quantifiers may omit `:sort` and bind at U; predicates are
// declared lazily at (U,U). `strict` additionally runs the closedness/typing
// check and throws TypeError on violations.
FoPtr parse_fo3(const std::string& text, Signature& sig, Mode mode, bool strict = false);

// Hom mode accepts bare `a`, `top`, `bot`, `id` and desugars to type (U,U).
RaPtr parse_ra(const std::string& text, Signature& sig, Mode mode, bool strict = false);

// Line-oriented: `sort <name>` and `pred <name> : <sort> -> <sort>`.
// `#` starts a comment in every file format.
Signature parse_signature(const std::string& text);

// One rule pattern per call site below; used by the rule-file loader. Atoms in
// patterns must be single uppercase letters (metavariables). In Het mode leaf
// sorts are sort variables drawn from {P,Q,R,S}.
RaPtr parse_ra_pattern(const std::string& text, Mode mode);

}  // namespace fo3ra

#endif
