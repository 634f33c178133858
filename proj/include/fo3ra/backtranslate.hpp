#ifndef FO3RA_BACKTRANSLATE_HPP
#define FO3RA_BACKTRANSLATE_HPP

#include <string>

#include "fo3ra/ast.hpp"

namespace fo3ra {

// The clause-by-clause image of the interpretation semantics; the result's
// free variables are within {a, b} and at most three names occur in total.
FoPtr ra_to_fo3(const RaPtr& e, const std::string& a, const std::string& b);

// forall x:d1(e). forall y:d2(e). ra_to_fo3(e, x, y) -- true in a model
// exactly when e denotes the full relation on its type.
FoPtr close(const RaPtr& e);

}  // namespace fo3ra

#endif
