#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "soqe/subst.hpp"
#include "soqe/term.hpp"

namespace soqe {

// Quantifier-free boolean combination over literals. Used for constraints of
// constrained P-clauses and for the quantifier-elimination pipeline.
class Formula {
 public:
  enum class Kind { True, False, Lit, And, Or, Not };

  Formula() : kind_(Kind::True) {}

  static Formula t() { return Formula(Kind::True); }
  static Formula f() { return Formula(Kind::False); }
  static Formula lit(Literal l);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula neg(Formula f);

  // Conjunction of literals; the common case for constraints.
  static Formula cube(const std::vector<Literal>& lits);
  // CNF clause set -> formula.
  static Formula from_clauses(const std::vector<Clause>& cs);

  Kind kind() const { return kind_; }
  const Literal& literal() const { return *lit_; }
  const std::vector<Formula>& parts() const { return parts_; }
  const Formula& inner() const { return parts_[0]; }

  bool is_true() const { return kind_ == Kind::True; }
  bool is_false() const { return kind_ == Kind::False; }

  Formula nnf() const;               // negations pushed to literals
  Formula substituted(const Subst& s) const;
  void collect_vars(std::map<std::string, Sort>& out) const;
  void collect_consts(std::map<std::string, Sort>& out) const;
  void collect_atoms(std::vector<Atom>& out) const;

  std::string str() const;

 private:
  explicit Formula(Kind k) : kind_(k) {}
  Kind kind_;
  std::shared_ptr<const Literal> lit_;
  std::vector<Formula> parts_;
};

}  // namespace soqe
