#include "soqe/subst.hpp"

#include <algorithm>
#include <sstream>

namespace soqe {

namespace {

Term apply_map(const std::map<std::string, Term>& m, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = m.find(t.name());
      return it == m.end() ? t : it->second;
    }
    case Term::Kind::Const:
    case Term::Kind::Numeral:
      return t;
    case Term::Kind::App: {
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(apply_map(m, a));
      return Term::app(t.name(), std::move(args), t.sort());
    }
  }
  return t;
}

}  // namespace

std::optional<Subst> Subst::make(std::map<std::string, Term> bindings) {
  // Drop identity bindings, then resolve chains to a fixpoint. A cyclic map
  // never reaches one; bail out after |bindings| rounds.
  for (auto it = bindings.begin(); it != bindings.end();) {
    if (it->second.is_var() && it->second.name() == it->first)
      it = bindings.erase(it);
    else
      ++it;
  }
  const size_t rounds = bindings.size() + 1;
  for (size_t i = 0; i < rounds; ++i) {
    bool changed = false;
    for (auto& [v, t] : bindings) {
      Term nt = apply_map(bindings, t);
      if (!(nt == t)) {
        t = nt;
        changed = true;
      }
    }
    if (!changed) {
      Subst s;
      s.map_ = std::move(bindings);
      return s;
    }
  }
  return std::nullopt;
}

std::optional<Term> Subst::lookup(const std::string& var) const {
  auto it = map_.find(var);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Term Subst::operator()(const Term& t) const { return apply_map(map_, t); }

Atom Subst::operator()(const Atom& a) const {
  Atom out{a.pred, {}};
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back((*this)(t));
  return out;
}

Literal Subst::operator()(const Literal& l) const {
  return Literal{l.positive, (*this)(l.atom)};
}

Clause Subst::operator()(const Clause& c) const {
  Clause out;
  out.lits.reserve(c.lits.size());
  for (const Literal& l : c.lits) out.lits.push_back((*this)(l));
  return out;
}

std::string Subst::str() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [v, t] : map_) {
    if (!first) os << ", ";
    first = false;
    os << v << " -> " << t.str();
  }
  os << "}";
  return os.str();
}

namespace {

bool unify_rec(const Term& s, const Term& t,
               std::map<std::string, Term>& out) {
  Term a = apply_map(out, s);
  Term b = apply_map(out, t);
  if (a == b) return true;
  if (a.sort() != b.sort()) return false;
  if (a.is_var()) {
    if (b.contains_var(a.name())) return false;  // occurs check
    // Substitute into existing bindings to keep the map triangular.
    std::map<std::string, Term> single{{a.name(), b}};
    for (auto& [v, bt] : out) bt = apply_map(single, bt);
    out.emplace(a.name(), b);
    return true;
  }
  if (b.is_var()) return unify_rec(b, a, out);
  if (a.kind() != b.kind()) return false;
  if (a.is_const() || a.is_numeral()) return false;  // distinct, clash
  if (a.name() != b.name() || a.args().size() != b.args().size()) return false;
  for (size_t i = 0; i < a.args().size(); ++i)
    if (!unify_rec(a.args()[i], b.args()[i], out)) return false;
  return true;
}

}  // namespace

std::optional<Subst> mgu_terms(const Term& t1, const Term& t2) {
  std::map<std::string, Term> m;
  if (!unify_rec(t1, t2, m)) return std::nullopt;
  return Subst::make(std::move(m));
}

std::optional<Subst> mgu(const Atom& a1, const Atom& a2) {
  if (a1.pred != a2.pred || a1.args.size() != a2.args.size())
    return std::nullopt;
  std::map<std::string, Term> m;
  for (size_t i = 0; i < a1.args.size(); ++i)
    if (!unify_rec(a1.args[i], a2.args[i], m)) return std::nullopt;
  return Subst::make(std::move(m));
}

namespace {

bool match_rec(const Term& pattern, const Term& target,
               std::map<std::string, Term>& out) {
  if (pattern.is_var()) {
    if (pattern.sort() != target.sort()) return false;
    auto it = out.find(pattern.name());
    if (it != out.end()) return it->second == target;
    out.emplace(pattern.name(), target);
    return true;
  }
  if (pattern.kind() != target.kind()) return false;
  switch (pattern.kind()) {
    case Term::Kind::Const:
      return pattern.name() == target.name() &&
             pattern.sort() == target.sort();
    case Term::Kind::Numeral:
      return pattern.value() == target.value();
    case Term::Kind::App: {
      if (pattern.name() != target.name() ||
          pattern.args().size() != target.args().size())
        return false;
      for (size_t i = 0; i < pattern.args().size(); ++i)
        if (!match_rec(pattern.args()[i], target.args()[i], out)) return false;
      return true;
    }
    default:
      return false;
  }
}

}  // namespace

std::optional<Subst> match_term(const Term& pattern, const Term& target) {
  std::map<std::string, Term> m;
  if (!match_rec(pattern, target, m)) return std::nullopt;
  return Subst::make(std::move(m));
}

std::pair<Clause, Clause> rename_apart(const Clause& c1, const Clause& c2) {
  auto v1 = c1.vars();
  auto v2 = c2.vars();
  std::map<std::string, Term> renaming;
  for (const auto& [name, sort] : v2) {
    if (!v1.count(name)) continue;
    // Deterministic fresh name: smallest suffix avoiding both clauses.
    for (int k = 1;; ++k) {
      std::string cand = name + "#" + std::to_string(k);
      if (!v1.count(cand) && !v2.count(cand)) {
        renaming.emplace(name, Term::var(cand, sort));
        break;
      }
    }
  }
  if (renaming.empty()) return {c1, c2};
  Subst s = *Subst::make(std::move(renaming));
  return {c1, s(c2)};
}

FlatLinear is_flat_linear(const Clause& c, const std::set<std::string>& ext) {
  FlatLinear r;
  const bool ground = c.ground();
  std::vector<Term> ext_terms;
  for (const Literal& l : c.lits)
    for (const Term& t : l.atom.args) t.collect_fn_terms(ext, ext_terms);

  for (const Term& t : ext_terms) {
    std::set<std::string> seen;
    for (const Term& a : t.args()) {
      if (ground ? !a.is_const() && !a.is_numeral() : !a.is_var())
        r.flat = false;
      if (a.is_var() && !seen.insert(a.name()).second)
        r.linear = false;  // repeated variable inside one extension term
    }
  }
  // Shared variable across two distinct extension terms.
  for (size_t i = 0; i < ext_terms.size() && r.linear; ++i)
    for (size_t j = i + 1; j < ext_terms.size() && r.linear; ++j) {
      if (ext_terms[i] == ext_terms[j]) continue;
      std::map<std::string, Sort> vi, vj;
      ext_terms[i].collect_vars(vi);
      ext_terms[j].collect_vars(vj);
      for (const auto& [n, s] : vi)
        if (vj.count(n)) r.linear = false;
    }
  return r;
}

}  // namespace soqe
