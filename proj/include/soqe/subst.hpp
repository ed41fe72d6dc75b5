#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "soqe/term.hpp"

namespace soqe {

// Sort-preserving finite map variable -> term. Normalized on construction:
// applying twice equals applying once.
class Subst {
 public:
  Subst() = default;

  // Normalizes the binding map by resolving chains (x -> y, y -> c becomes
  // x -> c, y -> c). Returns nullopt on a cyclic map.
  static std::optional<Subst> make(std::map<std::string, Term> bindings);

  bool empty() const { return map_.empty(); }
  const std::map<std::string, Term>& bindings() const { return map_; }
  std::optional<Term> lookup(const std::string& var) const;

  Term operator()(const Term& t) const;
  Atom operator()(const Atom& a) const;
  Literal operator()(const Literal& l) const;
  Clause operator()(const Clause& c) const;

  std::string str() const;

 private:
  std::map<std::string, Term> map_;
};

// Most general unifier of two atoms (syntactic, with occurs check).
// Absence of a unifier is a value, not an error.
std::optional<Subst> mgu(const Atom& a1, const Atom& a2);
std::optional<Subst> mgu_terms(const Term& t1, const Term& t2);

// One-sided matching: find sigma with sigma(pattern) == target.
std::optional<Subst> match_term(const Term& pattern, const Term& target);

// Returns variants of c1, c2 with disjoint variable sets. c1 is returned
// unchanged; colliding variables of c2 get deterministic fresh names.
std::pair<Clause, Clause> rename_apart(const Clause& c1, const Clause& c2);

// Flatness / linearity of an extension clause w.r.t. extension symbols
// (Definition: flat iff every argument of an extension function is a
// variable, in the non-ground case, or a constant in the ground case;
// linear iff no variable is shared between two distinct extension terms and
// no extension term repeats a variable).
struct FlatLinear {
  bool flat = true;
  bool linear = true;
};
FlatLinear is_flat_linear(const Clause& c, const std::set<std::string>& ext);

}  // namespace soqe
