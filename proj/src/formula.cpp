#include "soqe/formula.hpp"

#include <sstream>

namespace soqe {

Formula Formula::lit(Literal l) {
  Formula f(Kind::Lit);
  f.lit_ = std::make_shared<Literal>(std::move(l));
  return f;
}

Formula Formula::conj(std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (Formula& f : fs) {
    if (f.is_true()) continue;
    if (f.is_false()) return Formula::f();
    if (f.kind() == Kind::And)
      flat.insert(flat.end(), f.parts_.begin(), f.parts_.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.empty()) return Formula::t();
  if (flat.size() == 1) return flat[0];
  Formula f(Kind::And);
  f.parts_ = std::move(flat);
  return f;
}

Formula Formula::disj(std::vector<Formula> fs) {
  std::vector<Formula> flat;
  for (Formula& f : fs) {
    if (f.is_false()) continue;
    if (f.is_true()) return Formula::t();
    if (f.kind() == Kind::Or)
      flat.insert(flat.end(), f.parts_.begin(), f.parts_.end());
    else
      flat.push_back(std::move(f));
  }
  if (flat.empty()) return Formula::f();
  if (flat.size() == 1) return flat[0];
  Formula f(Kind::Or);
  f.parts_ = std::move(flat);
  return f;
}

Formula Formula::neg(Formula f) {
  switch (f.kind()) {
    case Kind::True:
      return Formula::f();
    case Kind::False:
      return Formula::t();
    case Kind::Lit:
      return Formula::lit(f.literal().negated());
    case Kind::Not:
      return f.parts_[0];
    default: {
      Formula out(Kind::Not);
      out.parts_.push_back(std::move(f));
      return out;
    }
  }
}

Formula Formula::cube(const std::vector<Literal>& lits) {
  std::vector<Formula> fs;
  fs.reserve(lits.size());
  for (const Literal& l : lits) fs.push_back(Formula::lit(l));
  return conj(std::move(fs));
}

Formula Formula::from_clauses(const std::vector<Clause>& cs) {
  std::vector<Formula> conjs;
  for (const Clause& c : cs) {
    std::vector<Formula> lits;
    for (const Literal& l : c.lits) lits.push_back(Formula::lit(l));
    conjs.push_back(disj(std::move(lits)));
  }
  return conj(std::move(conjs));
}

Formula Formula::nnf() const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
    case Kind::Lit:
      return *this;
    case Kind::And: {
      std::vector<Formula> ps;
      for (const Formula& p : parts_) ps.push_back(p.nnf());
      return conj(std::move(ps));
    }
    case Kind::Or: {
      std::vector<Formula> ps;
      for (const Formula& p : parts_) ps.push_back(p.nnf());
      return disj(std::move(ps));
    }
    case Kind::Not: {
      const Formula& g = parts_[0];
      switch (g.kind_) {
        case Kind::True:
          return Formula::f();
        case Kind::False:
          return Formula::t();
        case Kind::Lit:
          return Formula::lit(g.literal().negated());
        case Kind::Not:
          return g.parts_[0].nnf();
        case Kind::And: {
          std::vector<Formula> ps;
          for (const Formula& p : g.parts_) ps.push_back(neg(p).nnf());
          return disj(std::move(ps));
        }
        case Kind::Or: {
          std::vector<Formula> ps;
          for (const Formula& p : g.parts_) ps.push_back(neg(p).nnf());
          return conj(std::move(ps));
        }
      }
    }
  }
  return *this;
}

Formula Formula::substituted(const Subst& s) const {
  switch (kind_) {
    case Kind::True:
    case Kind::False:
      return *this;
    case Kind::Lit:
      return Formula::lit(s(literal()));
    case Kind::And:
    case Kind::Or:
    case Kind::Not: {
      std::vector<Formula> ps;
      for (const Formula& p : parts_) ps.push_back(p.substituted(s));
      if (kind_ == Kind::And) return conj(std::move(ps));
      if (kind_ == Kind::Or) return disj(std::move(ps));
      return neg(std::move(ps[0]));
    }
  }
  return *this;
}

void Formula::collect_vars(std::map<std::string, Sort>& out) const {
  if (kind_ == Kind::Lit) {
    for (const Term& t : literal().atom.args) t.collect_vars(out);
    return;
  }
  for (const Formula& p : parts_) p.collect_vars(out);
}

void Formula::collect_consts(std::map<std::string, Sort>& out) const {
  if (kind_ == Kind::Lit) {
    for (const Term& t : literal().atom.args) t.collect_consts(out);
    return;
  }
  for (const Formula& p : parts_) p.collect_consts(out);
}

void Formula::collect_atoms(std::vector<Atom>& out) const {
  if (kind_ == Kind::Lit) {
    out.push_back(literal().atom);
    return;
  }
  for (const Formula& p : parts_) p.collect_atoms(out);
}

std::string Formula::str() const {
  switch (kind_) {
    case Kind::True:
      return "TRUE";
    case Kind::False:
      return "FALSE";
    case Kind::Lit:
      return literal().str();
    case Kind::Not:
      return "NOT(" + parts_[0].str() + ")";
    case Kind::And:
    case Kind::Or: {
      std::ostringstream os;
      os << (kind_ == Kind::And ? "AND(" : "OR(");
      for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ", ";
        os << parts_[i].str();
      }
      os << ")";
      return os.str();
    }
  }
  return "?";
}

}  // namespace soqe
