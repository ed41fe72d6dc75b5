#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "soqe/term.hpp"

namespace soqe {

enum class Cmp { Greater, Less, Equal, Incomparable };

// Total precedence on function and predicate symbols. Eliminable predicates
// are strictly maximal regardless of any user-supplied order; numerals
// (domain elements) are handled structurally and are minimal.
class Precedence {
 public:
  enum class Klass : int {
    Constant = 1,
    BaseFunc = 2,
    ExtFunc = 3,
    Pred = 4,
  };

  Precedence() = default;

  void set_eliminable(std::set<std::string> preds) {
    eliminable_ = std::move(preds);
  }
  void set_class(const std::string& sym, Klass k) { klass_[sym] = k; }
  // "sym1>sym2>..." from the CLI; listed symbols outrank unlisted ones of
  // the same eliminability band.
  void set_explicit_order(const std::vector<std::string>& descending);

  bool is_eliminable(const std::string& sym) const {
    return eliminable_.count(sym) != 0;
  }
  Cmp cmp_symbols(const std::string& f, const std::string& g) const;

 private:
  std::set<std::string> eliminable_;
  std::map<std::string, Klass> klass_;
  std::map<std::string, int> explicit_;
};

// Lexicographic path ordering. Total on ground terms; any non-numeral
// ground term is greater than any numeral; non-ground comparisons that the
// LPO rules cannot decide come back Incomparable (treated by saturation as
// "possibly maximal").
Cmp lpo_compare(const Term& t1, const Term& t2, const Precedence& prec);

// Literal comparison: a literal containing an eliminable predicate is
// greater than any literal containing none (the calculus requires P-atoms on
// top); otherwise atoms are compared as terms with the predicate as head,
// negative literals winning ties on equal atoms.
Cmp compare_literals(const Literal& l1, const Literal& l2,
                     const Precedence& prec);

// Positions of the maximal literals of a clause: l is maximal iff no other
// literal is Greater; strictly maximal iff additionally no other literal
// compares Equal.
std::vector<size_t> maximal_literals(const std::vector<Literal>& lits,
                                     const Precedence& prec);
bool maximal_at(const std::vector<Literal>& lits, size_t i,
                const Precedence& prec);
bool strictly_maximal_at(const std::vector<Literal>& lits, size_t i,
                         const Precedence& prec);

}  // namespace soqe
