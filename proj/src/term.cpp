#include "soqe/term.hpp"

#include <algorithm>
#include <sstream>

#include "soqe/errors.hpp"

namespace soqe {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat r;
  if (r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  r.canonicalize();
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

const char* sort_name(Sort s) { return s == Sort::Num ? "num" : "p"; }

struct Term::Node {
  Kind kind;
  Sort sort;
  std::string name;        // Var / Const / App
  Rat value;               // Numeral
  std::vector<Term> args;  // App
};

Term Term::var(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Var;
  n->sort = sort;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::constant(std::string name, Sort sort) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Const;
  n->sort = sort;
  n->name = std::move(name);
  return Term(std::move(n));
}

Term Term::numeral(Rat value) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Numeral;
  n->sort = Sort::Num;
  n->value = std::move(value);
  return Term(std::move(n));
}

Term Term::app(std::string fn, std::vector<Term> args, Sort result) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::App;
  n->sort = result;
  n->name = std::move(fn);
  n->args = std::move(args);
  return Term(std::move(n));
}

Term::Kind Term::kind() const { return node_->kind; }
Sort Term::sort() const { return node_->sort; }
const std::string& Term::name() const { return node_->name; }
const Rat& Term::value() const { return node_->value; }

const std::vector<Term>& Term::args() const {
  static const std::vector<Term> none;
  return node_->kind == Kind::App ? node_->args : none;
}

bool Term::is_ground() const {
  switch (kind()) {
    case Kind::Var:
      return false;
    case Kind::Const:
    case Kind::Numeral:
      return true;
    case Kind::App:
      return std::all_of(args().begin(), args().end(),
                         [](const Term& t) { return t.is_ground(); });
  }
  return true;
}

bool Term::contains_var(const std::string& name) const {
  if (is_var()) return this->name() == name;
  for (const Term& a : args())
    if (a.contains_var(name)) return true;
  return false;
}

void Term::collect_vars(std::map<std::string, Sort>& out) const {
  if (is_var()) {
    out.emplace(name(), sort());
    return;
  }
  for (const Term& a : args()) a.collect_vars(out);
}

void Term::collect_consts(std::map<std::string, Sort>& out) const {
  if (is_const()) {
    out.emplace(name(), sort());
    return;
  }
  for (const Term& a : args()) a.collect_consts(out);
}

void Term::collect_fn_terms(const std::set<std::string>& fns,
                            std::vector<Term>& out) const {
  if (is_app()) {
    if (fns.count(name())) out.push_back(*this);
    for (const Term& a : args()) a.collect_fn_terms(fns, out);
  }
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  if (kind() != other.kind() || sort() != other.sort()) return false;
  switch (kind()) {
    case Kind::Var:
    case Kind::Const:
      return name() == other.name();
    case Kind::Numeral:
      return value() == other.value();
    case Kind::App:
      return name() == other.name() && args() == other.args();
  }
  return false;
}

bool Term::operator<(const Term& other) const {
  if (node_ == other.node_) return false;
  if (kind() != other.kind()) return kind() < other.kind();
  if (sort() != other.sort()) return sort() < other.sort();
  switch (kind()) {
    case Kind::Var:
    case Kind::Const:
      return name() < other.name();
    case Kind::Numeral:
      return value() < other.value();
    case Kind::App:
      if (name() != other.name()) return name() < other.name();
      return args() < other.args();
  }
  return false;
}

std::string Term::str() const {
  switch (kind()) {
    case Kind::Var:
    case Kind::Const:
      return name();
    case Kind::Numeral: {
      Rat v = value();
      if (v < 0) return "-_" + rat_str(-v);
      return "_" + rat_str(v);
    }
    case Kind::App: {
      const std::string& f = name();
      // Infix for arithmetic.
      if ((f == "+" || f == "-" || f == "*") && args().size() == 2)
        return args()[0].str() + " " + f + " " + args()[1].str();
      if (f == "-" && args().size() == 1) return "-" + args()[0].str();
      std::ostringstream os;
      os << f << "(";
      for (size_t i = 0; i < args().size(); ++i) {
        if (i) os << ", ";
        os << args()[i].str();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

bool Atom::operator<(const Atom& other) const {
  if (pred != other.pred) return pred < other.pred;
  return args < other.args;
}

std::string Atom::str() const {
  if (is_eq()) return args[0].str() + " = " + args[1].str();
  if (is_num_rel()) return args[0].str() + " " + pred + " " + args[1].str();
  std::ostringstream os;
  os << pred;
  if (!args.empty()) {
    os << "(";
    for (size_t i = 0; i < args.size(); ++i) {
      if (i) os << ", ";
      os << args[i].str();
    }
    os << ")";
  }
  return os.str();
}

Atom make_eq(Term lhs, Term rhs) {
  if (lhs.sort() != rhs.sort())
    throw InputError("equality between different sorts: " + lhs.str() + " = " +
                     rhs.str());
  return Atom{"=", {std::move(lhs), std::move(rhs)}};
}

static void require_num(const Term& t) {
  if (t.sort() != Sort::Num)
    throw InputError("numeric comparison over non-num term: " + t.str());
}

Atom make_le(Term lhs, Term rhs) {
  require_num(lhs);
  require_num(rhs);
  return Atom{"<=", {std::move(lhs), std::move(rhs)}};
}

Atom make_lt(Term lhs, Term rhs) {
  require_num(lhs);
  require_num(rhs);
  return Atom{"<", {std::move(lhs), std::move(rhs)}};
}

Atom make_pred(std::string name, std::vector<Term> args) {
  return Atom{std::move(name), std::move(args)};
}

bool Literal::operator<(const Literal& other) const {
  if (atom != other.atom) return atom < other.atom;
  return positive < other.positive;
}

std::string Literal::str() const {
  if (positive) return atom.str();
  return "NOT(" + atom.str() + ")";
}

bool Clause::ground() const {
  for (const Literal& l : lits)
    for (const Term& t : l.atom.args)
      if (!t.is_ground()) return false;
  return true;
}

std::map<std::string, Sort> Clause::vars() const {
  std::map<std::string, Sort> out;
  for (const Literal& l : lits)
    for (const Term& t : l.atom.args) t.collect_vars(out);
  return out;
}

std::string Clause::str() const {
  if (lits.empty()) return "FALSE";
  std::ostringstream os;
  for (size_t i = 0; i < lits.size(); ++i) {
    if (i) os << ", ";
    os << lits[i].str();
  }
  return os.str();
}

}  // namespace soqe
