#include "fo3ra/pretty.hpp"

namespace fo3ra {

namespace {

// FO3 levels: 0 formula (quantifiers), 1 `|`, 2 `&`, 3 `~`, 4 atoms.
void print_fo(const FoPtr& f, int ctx, std::string& out) {
  auto paren = [&](int level, auto&& body) {
    bool need = level < ctx;
    if (need) out += "(";
    body();
    if (need) out += ")";
  };
  switch (f->kind) {
    case FoKind::Atom:
      out += f->pred + "(" + f->v1 + "," + f->v2 + ")";
      break;
    case FoKind::Equals:
      out += f->v1 + " = " + f->v2;
      break;
    case FoKind::Truth:
      out += "true";
      break;
    case FoKind::Falsehood:
      out += "false";
      break;
    case FoKind::Or:
      paren(1, [&] {
        print_fo(f->lhs, 1, out);
        out += " | ";
        print_fo(f->rhs, 2, out);
      });
      break;
    case FoKind::And:
      paren(2, [&] {
        print_fo(f->lhs, 2, out);
        out += " & ";
        print_fo(f->rhs, 3, out);
      });
      break;
    case FoKind::Not:
      paren(3, [&] {
        out += "~";
        print_fo(f->lhs, 3, out);
      });
      break;
    case FoKind::Exists:
    case FoKind::Forall:
      paren(0, [&] {
        out += f->kind == FoKind::Exists ? "exists " : "forall ";
        out += f->var;
        if (f->sort != kUniverse) out += ":" + f->sort;
        out += ". ";
        print_fo(f->lhs, 0, out);
      });
      break;
  }
}

// RA levels: 1 `|`, 2 `&`, 3 `+`, 4 `;`, 5 `~`, 6 `^`, 7 primary.
void print_ra(const RaPtr& e, int ctx, std::string& out) {
  auto paren = [&](int level, auto&& body) {
    bool need = level < ctx;
    if (need) out += "(";
    body();
    if (need) out += ")";
  };
  auto leaf = [&](const std::string& base) {
    out += base;
    if (e->t1 == kUniverse && e->t2 == kUniverse) return;
    if (e->kind == RaKind::Id && e->t1 == e->t2)
      out += "[" + e->t1 + "]";
    else
      out += "[" + e->t1 + "," + e->t2 + "]";
  };
  auto binary = [&](int level, const char* op) {
    paren(level, [&] {
      print_ra(e->lhs, level, out);
      out += op;
      print_ra(e->rhs, level + 1, out);
    });
  };
  switch (e->kind) {
    case RaKind::Atom:
      leaf(e->name);
      break;
    case RaKind::Top:
      leaf("top");
      break;
    case RaKind::Bot:
      leaf("bot");
      break;
    case RaKind::Id:
      leaf("id");
      break;
    case RaKind::Union:
      binary(1, " | ");
      break;
    case RaKind::Inter:
      binary(2, " & ");
      break;
    case RaKind::Dagger:
      binary(3, " + ");
      break;
    case RaKind::Compose:
      binary(4, " ; ");
      break;
    case RaKind::Complement:
      paren(5, [&] {
        out += "~";
        print_ra(e->lhs, 5, out);
      });
      break;
    case RaKind::Converse:
      paren(6, [&] {
        print_ra(e->lhs, 6, out);
        out += "^";
      });
      break;
  }
}

}  // namespace

std::string pretty_print(const FoPtr& f) {
  std::string out;
  print_fo(f, 0, out);
  return out;
}

std::string pretty_print(const RaPtr& e) {
  std::string out;
  print_ra(e, 1, out);
  return out;
}

}  // namespace fo3ra
