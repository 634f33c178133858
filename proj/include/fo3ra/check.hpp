#ifndef FO3RA_CHECK_HPP
#define FO3RA_CHECK_HPP

#include <string>
#include <vector>

#include "fo3ra/ast.hpp"

namespace fo3ra {

struct Violation {
  int condition;        // 1..3 for the RA typing conditions, 0 for closedness
  std::string message;  // names the offending subterm
};

// Empty iff (1) every atom's declared type matches the signature, (2) union and
// intersection operands have equal types, (3) composition and dagger operands
// have d2(lhs) = d1(rhs). Never throws; constructors wishing to enforce typing
// call this and raise on a non-empty result.
std::vector<Violation> check_well_typed_ra(const RaPtr& e, const Signature& sig);

// Empty iff f is closed and every atom's argument sorts (taken from the binding
// quantifiers) match the predicate's declared type. Shadowing is allowed; the
// inner binding wins.
std::vector<Violation> check_closed_and_typed_fo3(const FoPtr& f, const Signature& sig);

// Throws TypeError listing the violations if any.
void require_well_typed(const RaPtr& e, const Signature& sig);
void require_closed_and_typed(const FoPtr& f, const Signature& sig);

}  // namespace fo3ra

#endif
