#ifndef FO3RA_PRETTY_HPP
#define FO3RA_PRETTY_HPP

#include <string>

#include "fo3ra/ast.hpp"

namespace fo3ra {

// Minimal-parenthesis rendering; parse(pretty_print(x)) == x.
// Precedence for RA, tightest first: postfix ^, prefix ~, `;`, `+`, `&`, `|`.
// Leaves print bare (a, top, bot, id) when typed over the universal sort.
std::string pretty_print(const FoPtr& f);
std::string pretty_print(const RaPtr& e);

}  // namespace fo3ra

#endif
