#include "fo3ra/backtranslate.hpp"

namespace fo3ra {

namespace {

std::string third_var(const std::string& a, const std::string& b) {
  for (const char* c : {"x", "y", "z"})
    if (a != c && b != c) return c;
  return "z0";  // unreachable for the standard pool
}

}  // namespace

FoPtr ra_to_fo3(const RaPtr& e, const std::string& a, const std::string& b) {
  if (a == b) throw TypeError("ra_to_fo3 requires distinct variables");
  switch (e->kind) {
    case RaKind::Atom:
      return fo_atom(e->name, a, b);
    case RaKind::Top:
      return fo_truth();
    case RaKind::Bot:
      return fo_falsehood();
    case RaKind::Id:
      return fo_equals(a, b);
    case RaKind::Union:
      return fo_or(ra_to_fo3(e->lhs, a, b), ra_to_fo3(e->rhs, a, b));
    case RaKind::Inter:
      return fo_and(ra_to_fo3(e->lhs, a, b), ra_to_fo3(e->rhs, a, b));
    case RaKind::Compose: {
      std::string c = third_var(a, b);
      return fo_exists(c, type_of(e->lhs).second,
                       fo_and(ra_to_fo3(e->lhs, a, c), ra_to_fo3(e->rhs, c, b)));
    }
    case RaKind::Dagger: {
      std::string c = third_var(a, b);
      return fo_forall(c, type_of(e->lhs).second,
                       fo_or(ra_to_fo3(e->lhs, a, c), ra_to_fo3(e->rhs, c, b)));
    }
    case RaKind::Complement:
      return fo_not(ra_to_fo3(e->lhs, a, b));
    case RaKind::Converse:
      return ra_to_fo3(e->lhs, b, a);
  }
  throw TypeError("unreachable expression kind");
}

FoPtr close(const RaPtr& e) {
  auto [d1, d2] = type_of(e);
  return fo_forall("x", d1, fo_forall("y", d2, ra_to_fo3(e, "x", "y")));
}

}  // namespace fo3ra
