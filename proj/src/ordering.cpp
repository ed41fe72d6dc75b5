#include "soqe/ordering.hpp"

#include <algorithm>

namespace soqe {

void Precedence::set_explicit_order(
    const std::vector<std::string>& descending) {
  explicit_.clear();
  int rank = static_cast<int>(descending.size());
  for (const std::string& s : descending) explicit_[s] = rank--;
}

Cmp Precedence::cmp_symbols(const std::string& f,
                            const std::string& g) const {
  if (f == g) return Cmp::Equal;
  auto key = [this](const std::string& s) {
    int elim = eliminable_.count(s) ? 1 : 0;
    auto eit = explicit_.find(s);
    int exp = eit == explicit_.end() ? 0 : eit->second;
    auto kit = klass_.find(s);
    int kl = kit == klass_.end() ? static_cast<int>(Klass::Constant)
                                 : static_cast<int>(kit->second);
    return std::tuple<int, int, int, const std::string&>(elim, exp, kl, s);
  };
  return key(f) < key(g) ? Cmp::Less : Cmp::Greater;
}

namespace {

// Full LPO "definitely greater" with conservative treatment of variables.
bool lpo_gt(const Term& s, const Term& t, const Precedence& prec) {
  if (s == t) return false;
  if (t.is_numeral())
    return s.is_numeral() ? s.value() > t.value()
                          : !s.is_var();  // any non-numeral, non-var term wins
  if (s.is_numeral() || s.is_var()) return false;
  if (t.is_var()) return s.contains_var(t.name());

  // Both are constants or applications.
  for (const Term& a : s.args())
    if (a == t || lpo_gt(a, t, prec)) return true;

  Cmp head = prec.cmp_symbols(s.name(), t.name());
  if (head == Cmp::Greater) {
    for (const Term& b : t.args())
      if (!lpo_gt(s, b, prec)) return false;
    return true;
  }
  if (head == Cmp::Equal && s.args().size() == t.args().size()) {
    // Lexicographic on arguments, with the usual majorization side check.
    size_t i = 0;
    while (i < s.args().size() && s.args()[i] == t.args()[i]) ++i;
    if (i == s.args().size()) return false;
    if (!lpo_gt(s.args()[i], t.args()[i], prec)) return false;
    for (size_t j = i + 1; j < t.args().size(); ++j)
      if (!lpo_gt(s, t.args()[j], prec)) return false;
    return true;
  }
  return false;
}

Term atom_term(const Atom& a) {
  if (a.args.empty()) return Term::constant(a.pred, Sort::Point);
  return Term::app(a.pred, a.args, Sort::Point);
}

bool has_eliminable(const Literal& l, const Precedence& prec) {
  return prec.is_eliminable(l.atom.pred);
}

}  // namespace

Cmp lpo_compare(const Term& t1, const Term& t2, const Precedence& prec) {
  if (t1 == t2) return Cmp::Equal;
  if (lpo_gt(t1, t2, prec)) return Cmp::Greater;
  if (lpo_gt(t2, t1, prec)) return Cmp::Less;
  return Cmp::Incomparable;
}

Cmp compare_literals(const Literal& l1, const Literal& l2,
                     const Precedence& prec) {
  bool e1 = has_eliminable(l1, prec), e2 = has_eliminable(l2, prec);
  if (e1 != e2) return e1 ? Cmp::Greater : Cmp::Less;
  Cmp atoms = lpo_compare(atom_term(l1.atom), atom_term(l2.atom), prec);
  if (atoms != Cmp::Equal) return atoms;
  if (l1.positive == l2.positive) return Cmp::Equal;
  return l1.positive ? Cmp::Less : Cmp::Greater;
}

bool maximal_at(const std::vector<Literal>& lits, size_t i,
                const Precedence& prec) {
  for (size_t j = 0; j < lits.size(); ++j) {
    if (j == i) continue;
    if (compare_literals(lits[j], lits[i], prec) == Cmp::Greater) return false;
  }
  return true;
}

bool strictly_maximal_at(const std::vector<Literal>& lits, size_t i,
                         const Precedence& prec) {
  if (!maximal_at(lits, i, prec)) return false;
  for (size_t j = 0; j < lits.size(); ++j) {
    if (j == i) continue;
    if (compare_literals(lits[j], lits[i], prec) == Cmp::Equal) return false;
  }
  return true;
}

std::vector<size_t> maximal_literals(const std::vector<Literal>& lits,
                                     const Precedence& prec) {
  std::vector<size_t> out;
  for (size_t i = 0; i < lits.size(); ++i)
    if (maximal_at(lits, i, prec)) out.push_back(i);
  return out;
}

}  // namespace soqe
