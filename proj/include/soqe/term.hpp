#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "soqe/rat.hpp"

namespace soqe {

// The two sorts of the artifact: `num` (interpreted as the rationals) and
// `p` (uninterpreted points / graph vertices).
enum class Sort : std::uint8_t { Num, Point };

inline bool is_interpreted(Sort s) { return s == Sort::Num; }
const char* sort_name(Sort s);

// Immutable first-order terms with structural equality. Value handles over
// shared nodes; cheap to copy.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Const, Numeral, App };

  Term() = default;

  static Term var(std::string name, Sort sort);
  static Term constant(std::string name, Sort sort);
  static Term numeral(Rat value);
  static Term app(std::string fn, std::vector<Term> args, Sort result);

  Kind kind() const;
  Sort sort() const;
  bool valid() const { return node_ != nullptr; }

  // Var / Const / App symbol name.
  const std::string& name() const;
  // Numeral value.
  const Rat& value() const;
  // App arguments (empty for other kinds).
  const std::vector<Term>& args() const;

  bool is_var() const { return kind() == Kind::Var; }
  bool is_const() const { return kind() == Kind::Const; }
  bool is_numeral() const { return kind() == Kind::Numeral; }
  bool is_app() const { return kind() == Kind::App; }
  bool is_ground() const;

  bool contains_var(const std::string& name) const;
  void collect_vars(std::map<std::string, Sort>& out) const;
  void collect_consts(std::map<std::string, Sort>& out) const;
  // All subterms rooted at a function symbol in `fns`, in printing order.
  void collect_fn_terms(const std::set<std::string>& fns,
                        std::vector<Term>& out) const;

  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }
  // Deterministic structural order (used for canonical set ordering only).
  bool operator<(const Term& other) const;

  std::string str() const;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Atoms: a predicate applied to terms. Builtins are "=" (at either sort) and
// the numeric comparisons "<=" and "<". Input ">="/">" are normalized away
// by swapping sides; disequality is a negative "=" literal.
struct Atom {
  std::string pred;
  std::vector<Term> args;

  bool is_eq() const { return pred == "="; }
  bool is_num_rel() const { return pred == "<=" || pred == "<"; }
  bool is_builtin() const { return is_eq() || is_num_rel(); }

  bool operator==(const Atom& other) const {
    return pred == other.pred && args == other.args;
  }
  bool operator!=(const Atom& other) const { return !(*this == other); }
  bool operator<(const Atom& other) const;

  std::string str() const;
};

Atom make_eq(Term lhs, Term rhs);
Atom make_le(Term lhs, Term rhs);
Atom make_lt(Term lhs, Term rhs);
Atom make_pred(std::string name, std::vector<Term> args);

struct Literal {
  bool positive = true;
  Atom atom;

  Literal negated() const { return Literal{!positive, atom}; }

  bool operator==(const Literal& other) const {
    return positive == other.positive && atom == other.atom;
  }
  bool operator!=(const Literal& other) const { return !(*this == other); }
  bool operator<(const Literal& other) const;

  std::string str() const;
};

inline Literal pos(Atom a) { return Literal{true, std::move(a)}; }
inline Literal neg(Atom a) { return Literal{false, std::move(a)}; }

// A clause is a finite multiset of literals, implicitly universally closed
// over its variables.
struct Clause {
  std::vector<Literal> lits;

  bool ground() const;
  std::map<std::string, Sort> vars() const;

  bool operator==(const Clause& other) const { return lits == other.lits; }
  bool operator<(const Clause& other) const { return lits < other.lits; }

  std::string str() const;
};

}  // namespace soqe
