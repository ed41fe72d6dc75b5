#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "soqe/formula.hpp"
#include "soqe/rat.hpp"
#include "soqe/term.hpp"

namespace soqe {

enum class Rel { Le, Lt, Eq, Ne };

// A linear constraint  sum coef[s]*s  REL  cst  over exact rationals.
// Symbols are names of numeric constants/variables; non-arithmetic ground
// subterms are treated as opaque symbols keyed by their printed form.
struct LinAtom {
  std::map<std::string, Rat> coef;
  Rat cst = 0;
  Rel rel = Rel::Le;

  bool closed() const { return coef.empty(); }
  bool closed_value() const;  // evaluates 0 REL cst
  bool mentions(const std::string& sym) const { return coef.count(sym) != 0; }
  LinAtom negated() const;
  // Scale to coprime integer coefficients (sign preserved for Le/Lt).
  LinAtom normalized() const;
  Rat eval_lhs(const std::map<std::string, Rat>& model) const;
  bool eval(const std::map<std::string, Rat>& model) const;

  bool operator==(const LinAtom& other) const {
    return rel == other.rel && cst == other.cst && coef == other.coef;
  }
  bool operator<(const LinAtom& other) const;
  std::string str() const;
};

// Literal <-> LinAtom bridge. Returns nullopt for non-numeric literals.
// Polarity is folded into the relation.
std::optional<LinAtom> lin_of_literal(const Literal& l);
// Rebuilds a literal (lhs - rhs REL _0 shape) with symbols replaced by the
// terms of `names` when present.
Literal literal_of_lin(const LinAtom& a,
                       const std::map<std::string, Term>& names = {});

// Classification of ground-ish literals for the solvers.
enum class LitClass { Num, PointEq, Bool };
LitClass classify_literal(const Literal& l);

// One refutation branch: the nonnegative combination of input atoms (with
// any-sign multipliers allowed on equalities) that derives a closed false
// atom, plus the disequality splits taken on the way.
struct LraBranchTrace {
  std::vector<std::pair<size_t, bool>> splits;  // (input index, less-side?)
  std::map<size_t, Rat> combo;                  // input index -> multiplier
  LinAtom contradiction;
};

struct LraResult {
  bool sat = false;
  std::map<std::string, Rat> model;           // witness when sat
  std::vector<LraBranchTrace> refutation;     // all branches when unsat
};

// Conjunction satisfiability over the rationals by Fourier-Motzkin, with
// equality pivoting and recursive disequality splitting.
LraResult lra_sat(const std::vector<LinAtom>& atoms);

struct QeLimits {
  size_t max_dnf = 10000;
};

// DNF of a formula as cubes of literals. Throws ResourceError past the cap.
std::vector<std::vector<Literal>> to_dnf(const Formula& f,
                                         const QeLimits& limits = {});

// Quantifier elimination of a numeric symbol: the result is equivalent to
// (exists sym. f) over the rationals and does not mention sym. Disequalities
// on sym are split before Fourier-Motzkin.
Formula qe(const std::string& sym, const Formula& f,
           const QeLimits& limits = {});

// Cardinality assumption for the point sort.
struct PointCard {
  std::optional<unsigned> at_least;  // nullopt = infinite
};

// Quantifier elimination of a point-sort symbol occurring only in
// (dis)equalities (and as an argument of free predicate atoms, which are
// rejected: those must have been purified or expanded first).
Formula qe_point(const std::string& sym, const Formula& f,
                 const PointCard& card = {}, const QeLimits& limits = {});

// Existential elimination of a ground free-predicate atom (Shannon-style,
// per DNF cube).
Formula qe_bool(const Atom& atom, const Formula& f,
                const QeLimits& limits = {});

// Constant folding, duplicate-literal removal inside cubes, subsumed-cube
// removal. No semantic minimization.
Formula simplify_dnf(const Formula& f, const QeLimits& limits = {});

}  // namespace soqe
