#include "soqe/linarith.hpp"

#include <algorithm>
#include <sstream>

#include "soqe/errors.hpp"

namespace soqe {

bool LinAtom::closed_value() const {
  switch (rel) {
    case Rel::Le:
      return 0 <= cst;
    case Rel::Lt:
      return 0 < cst;
    case Rel::Eq:
      return 0 == cst;
    case Rel::Ne:
      return 0 != cst;
  }
  return false;
}

LinAtom LinAtom::negated() const {
  // not(sum <= c)  ->  sum > c  ->  -sum < -c
  LinAtom out;
  switch (rel) {
    case Rel::Le:
      out.rel = Rel::Lt;
      break;
    case Rel::Lt:
      out.rel = Rel::Le;
      break;
    case Rel::Eq:
      out = *this;
      out.rel = Rel::Ne;
      return out;
    case Rel::Ne:
      out = *this;
      out.rel = Rel::Eq;
      return out;
  }
  for (const auto& [s, c] : coef) out.coef[s] = -c;
  out.cst = -cst;
  return out;
}

LinAtom LinAtom::normalized() const {
  LinAtom out = *this;
  for (auto it = out.coef.begin(); it != out.coef.end();)
    it = it->second == 0 ? out.coef.erase(it) : std::next(it);
  if (out.coef.empty()) return out;
  // lcm of denominators, gcd of numerators.
  mpz_class den = 1, num = 0;
  auto fold = [&](const Rat& r) {
    mpz_class d = r.get_den();
    den = den / gcd(den, d) * d;
    num = gcd(num, mpz_class(abs(r.get_num())));
  };
  for (const auto& [s, c] : out.coef) fold(c);
  if (out.cst != 0) fold(out.cst);
  Rat scale(den, num == 0 ? 1 : num);
  scale.canonicalize();
  if (scale != 1) {
    for (auto& [s, c] : out.coef) c *= scale;
    out.cst *= scale;
  }
  if (out.rel == Rel::Eq || out.rel == Rel::Ne) {
    // canonical sign: first coefficient positive
    if (out.coef.begin()->second < 0) {
      for (auto& [s, c] : out.coef) c = -c;
      out.cst = -out.cst;
    }
  }
  return out;
}

Rat LinAtom::eval_lhs(const std::map<std::string, Rat>& model) const {
  Rat v = 0;
  for (const auto& [s, c] : coef) {
    auto it = model.find(s);
    if (it != model.end()) v += c * it->second;
  }
  return v;
}

bool LinAtom::eval(const std::map<std::string, Rat>& model) const {
  Rat v = eval_lhs(model);
  switch (rel) {
    case Rel::Le:
      return v <= cst;
    case Rel::Lt:
      return v < cst;
    case Rel::Eq:
      return v == cst;
    case Rel::Ne:
      return v != cst;
  }
  return false;
}

bool LinAtom::operator<(const LinAtom& other) const {
  if (rel != other.rel) return rel < other.rel;
  if (cst != other.cst) return cst < other.cst;
  return coef < other.coef;
}

std::string LinAtom::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : coef) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << rat_str(c) << "*";
    os << s;
  }
  if (first) os << "0";
  switch (rel) {
    case Rel::Le:
      os << " <= ";
      break;
    case Rel::Lt:
      os << " < ";
      break;
    case Rel::Eq:
      os << " = ";
      break;
    case Rel::Ne:
      os << " != ";
      break;
  }
  os << rat_str(cst);
  return os.str();
}

namespace {

// Linear view of a numeric term: coefficients over opaque symbols plus a
// constant. Throws InputError on genuinely nonlinear terms.
struct LinView {
  std::map<std::string, Rat> coef;
  Rat cst = 0;
};

void lin_add(LinView& acc, const LinView& other, const Rat& scale) {
  for (const auto& [s, c] : other.coef) {
    Rat& slot = acc.coef[s];
    slot += c * scale;
    if (slot == 0) acc.coef.erase(s);
  }
  acc.cst += other.cst * scale;
}

LinView linearize(const Term& t) {
  LinView v;
  switch (t.kind()) {
    case Term::Kind::Numeral:
      v.cst = t.value();
      return v;
    case Term::Kind::Var:
    case Term::Kind::Const:
      v.coef[t.name()] = 1;
      return v;
    case Term::Kind::App: {
      const std::string& f = t.name();
      if (f == "+" && t.args().size() == 2) {
        v = linearize(t.args()[0]);
        lin_add(v, linearize(t.args()[1]), 1);
        return v;
      }
      if (f == "-" && t.args().size() == 2) {
        v = linearize(t.args()[0]);
        lin_add(v, linearize(t.args()[1]), -1);
        return v;
      }
      if (f == "-" && t.args().size() == 1) {
        lin_add(v, linearize(t.args()[0]), -1);
        return v;
      }
      if (f == "*" && t.args().size() == 2) {
        LinView a = linearize(t.args()[0]);
        LinView b = linearize(t.args()[1]);
        if (a.coef.empty()) {
          lin_add(v, b, a.cst);
          return v;
        }
        if (b.coef.empty()) {
          lin_add(v, a, b.cst);
          return v;
        }
        throw InputError("nonlinear term: " + t.str());
      }
      // Uninterpreted application: opaque symbol.
      v.coef[t.str()] = 1;
      return v;
    }
  }
  return v;
}

}  // namespace

std::optional<LinAtom> lin_of_literal(const Literal& l) {
  const Atom& a = l.atom;
  bool numeric = a.is_num_rel() ||
                 (a.is_eq() && a.args[0].sort() == Sort::Num);
  if (!numeric) return std::nullopt;
  LinView lhs = linearize(a.args[0]);
  lin_add(lhs, linearize(a.args[1]), -1);
  LinAtom out;
  out.coef = std::move(lhs.coef);
  out.cst = -lhs.cst;
  if (a.pred == "<=")
    out.rel = Rel::Le;
  else if (a.pred == "<")
    out.rel = Rel::Lt;
  else
    out.rel = Rel::Eq;
  if (!l.positive) out = out.negated();
  return out.normalized();
}

Literal literal_of_lin(const LinAtom& a0,
                       const std::map<std::string, Term>& names) {
  LinAtom a = a0.normalized();
  // Prefer a positive leading side: if every coefficient is negative, flip.
  bool all_neg = !a.coef.empty();
  for (const auto& [s, c] : a.coef)
    if (c > 0) all_neg = false;
  bool flipped = false;
  if (all_neg && (a.rel == Rel::Le || a.rel == Rel::Lt)) {
    for (auto& [s, c] : a.coef) c = -c;
    a.cst = -a.cst;
    flipped = true;  // le becomes >=, lt becomes >
  }

  auto sym_term = [&](const std::string& s) {
    auto it = names.find(s);
    if (it != names.end()) return it->second;
    return Term::constant(s, Sort::Num);
  };
  auto scaled = [&](const std::string& s, const Rat& mag) {
    Term t = sym_term(s);
    if (mag == 1) return t;
    return Term::app("*", {Term::numeral(mag), t}, Sort::Num);
  };

  std::vector<std::pair<std::string, Rat>> positives, negatives;
  for (const auto& [s, c] : a.coef)
    (c > 0 ? positives : negatives).push_back({s, abs(c)});
  auto by_name = [&](const auto& x, const auto& y) {
    return sym_term(x.first).str() < sym_term(y.first).str();
  };
  std::sort(positives.begin(), positives.end(), by_name);
  std::sort(negatives.begin(), negatives.end(), by_name);

  Term lhs;
  for (const auto& [s, m] : positives) {
    Term t = scaled(s, m);
    lhs = lhs.valid() ? Term::app("+", {lhs, t}, Sort::Num) : t;
  }
  if (!lhs.valid()) lhs = Term::numeral(0);
  for (const auto& [s, m] : negatives)
    lhs = Term::app("-", {lhs, scaled(s, m)}, Sort::Num);
  if (a.cst != 0) {
    // move the constant to the left: sum - cst REL 0
    if (a.cst > 0)
      lhs = Term::app("-", {lhs, Term::numeral(a.cst)}, Sort::Num);
    else
      lhs = Term::app("+", {lhs, Term::numeral(-a.cst)}, Sort::Num);
  }
  Term rhs = Term::numeral(0);

  switch (a.rel) {
    case Rel::Le:
      return flipped ? neg(make_lt(lhs, rhs)) : pos(make_le(lhs, rhs));
    case Rel::Lt:
      return flipped ? neg(make_le(lhs, rhs)) : pos(make_lt(lhs, rhs));
    case Rel::Eq:
      return pos(make_eq(lhs, rhs));
    case Rel::Ne:
      return neg(make_eq(lhs, rhs));
  }
  return pos(make_eq(lhs, rhs));
}

LitClass classify_literal(const Literal& l) {
  const Atom& a = l.atom;
  if (a.is_num_rel()) return LitClass::Num;
  if (a.is_eq())
    return a.args[0].sort() == Sort::Num ? LitClass::Num : LitClass::PointEq;
  return LitClass::Bool;
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

struct Row {
  LinAtom atom;
  std::map<size_t, Rat> combo;  // provenance over input indices
};

Row combine(const Row& a, const Rat& ca, const Row& b, const Rat& cb) {
  Row out;
  for (const auto& [s, c] : a.atom.coef) out.atom.coef[s] = c * ca;
  for (const auto& [s, c] : b.atom.coef) out.atom.coef[s] += c * cb;
  for (auto it = out.atom.coef.begin(); it != out.atom.coef.end();)
    it = it->second == 0 ? out.atom.coef.erase(it) : std::next(it);
  out.atom.cst = a.atom.cst * ca + b.atom.cst * cb;
  if (a.atom.rel == Rel::Ne || b.atom.rel == Rel::Ne)
    out.atom.rel = Rel::Ne;
  else if (a.atom.rel == Rel::Eq && b.atom.rel == Rel::Eq)
    out.atom.rel = Rel::Eq;
  else
    out.atom.rel = (a.atom.rel == Rel::Lt || b.atom.rel == Rel::Lt) ? Rel::Lt
                                                                    : Rel::Le;
  for (const auto& [i, c] : a.combo) out.combo[i] += c * ca;
  for (const auto& [i, c] : b.combo) out.combo[i] += c * cb;
  return out;
}

// Records one eliminated symbol for witness back-substitution.
struct Stage {
  std::string sym;
  std::optional<Row> eq_pivot;  // equality used to define sym
  std::vector<Row> lowers, uppers;  // otherwise: bounds mentioning sym
};

bool solve(std::vector<Row> rows, std::vector<std::pair<size_t, bool>> splits,
           LraResult& result) {
  // Split the first disequality, if any.
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].atom.rel != Rel::Ne) continue;
    if (rows[i].atom.closed()) {
      if (rows[i].atom.cst != 0) {
        rows.erase(rows.begin() + i);
        return solve(std::move(rows), std::move(splits), result);
      }
      // 0 != 0: report as 0 < 0 with this row's provenance doubled on the
      // Eq-combination convention (the row itself witnesses falsity).
      LraBranchTrace tr;
      tr.splits = splits;
      tr.combo = rows[i].combo;
      tr.contradiction = rows[i].atom;
      result.refutation.push_back(std::move(tr));
      return false;
    }
    // Disequalities are always untouched input rows here (splitting happens
    // before any combination), so the provenance index is exact. The trace
    // combo refers to the chosen branch's strict atom.
    size_t input_idx = rows[i].combo.begin()->first;
    Row less = rows[i], greater = rows[i];
    less.atom.rel = Rel::Lt;
    greater.atom.rel = Rel::Lt;
    for (auto& [s, c] : greater.atom.coef) c = -c;
    greater.atom.cst = -greater.atom.cst;

    std::vector<Row> left = rows;
    left[i] = less;
    auto s1 = splits;
    s1.push_back({input_idx, true});
    if (solve(std::move(left), std::move(s1), result)) return true;
    rows[i] = greater;
    splits.push_back({input_idx, false});
    return solve(std::move(rows), std::move(splits), result);
  }

  // Gather the symbols.
  std::vector<std::string> syms;
  {
    std::map<std::string, int> seen;
    for (const Row& r : rows)
      for (const auto& [s, c] : r.atom.coef) seen[s] = 1;
    for (const auto& [s, one] : seen) syms.push_back(s);
  }

  std::vector<Stage> stages;
  for (const std::string& sym : syms) {
    Stage st;
    st.sym = sym;
    std::vector<Row> rest;
    std::optional<Row> pivot;
    for (Row& r : rows) {
      if (!r.atom.mentions(sym)) {
        rest.push_back(std::move(r));
        continue;
      }
      if (r.atom.rel == Rel::Eq) {
        if (!pivot)
          pivot = std::move(r);
        else
          st.lowers.push_back(std::move(r));  // parked; substituted below
        continue;
      }
      const Rat c = r.atom.coef.at(sym);
      (c > 0 ? st.uppers : st.lowers).push_back(std::move(r));
    }
    if (pivot) {
      // sym = (cst - rest)/c; substitute into every other row.
      st.eq_pivot = pivot;
      const Rat pc = pivot->atom.coef.at(sym);
      for (Row& r : st.lowers) rest.push_back(std::move(r));
      for (Row& r : st.uppers) rest.push_back(std::move(r));
      st.lowers.clear();
      st.uppers.clear();
      for (Row& r : rest) {
        auto it = r.atom.coef.find(sym);
        if (it == r.atom.coef.end()) continue;
        Rat lambda = -it->second / pc;
        r = combine(r, 1, *pivot, lambda);
      }
      rows = std::move(rest);
      stages.push_back(std::move(st));
      continue;
    }
    // Fourier-Motzkin combinations of lower and upper bounds.
    for (const Row& lo : st.lowers)
      for (const Row& up : st.uppers) {
        const Rat cl = lo.atom.coef.at(sym);   // < 0
        const Rat cu = up.atom.coef.at(sym);   // > 0
        Row sum = combine(lo, 1 / -cl, up, 1 / cu);
        sum.atom.coef.erase(sym);
        rest.push_back(std::move(sum));
      }
    rows = std::move(rest);
    stages.push_back(std::move(st));
  }

  // Closed rows remain; find a false one or build the witness.
  for (const Row& r : rows) {
    if (!r.atom.closed_value()) {
      LraBranchTrace tr;
      tr.splits = splits;
      tr.combo = r.combo;
      tr.contradiction = r.atom;
      result.refutation.push_back(std::move(tr));
      return false;
    }
  }

  // Back-substitute in reverse elimination order.
  std::map<std::string, Rat>& model = result.model;
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    if (it->eq_pivot) {
      const LinAtom& a = it->eq_pivot->atom;
      const Rat c = a.coef.at(it->sym);
      Rat rest = 0;
      for (const auto& [s, k] : a.coef)
        if (s != it->sym) rest += k * model[s];
      model[it->sym] = (a.cst - rest) / c;
      continue;
    }
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const Row& r : it->lowers) {
      const Rat c = r.atom.coef.at(it->sym);  // c < 0: bound sym >= ...
      Rat rest = 0;
      for (const auto& [s, k] : r.atom.coef)
        if (s != it->sym) rest += k * model[s];
      Rat bound = (r.atom.cst - rest) / c;  // dividing by negative flips
      bool strict = r.atom.rel == Rel::Lt;
      if (!lo || bound > *lo || (bound == *lo && strict)) {
        lo = bound;
        lo_strict = strict;
      }
    }
    for (const Row& r : it->uppers) {
      const Rat c = r.atom.coef.at(it->sym);  // c > 0: bound sym <= ...
      Rat rest = 0;
      for (const auto& [s, k] : r.atom.coef)
        if (s != it->sym) rest += k * model[s];
      Rat bound = (r.atom.cst - rest) / c;
      bool strict = r.atom.rel == Rel::Lt;
      if (!hi || bound < *hi || (bound == *hi && strict)) {
        hi = bound;
        hi_strict = strict;
      }
    }
    Rat value = 0;
    if (lo && hi)
      value = (*lo + *hi) / 2;
    else if (lo)
      value = *lo + (lo_strict ? 1 : 0);
    else if (hi)
      value = *hi - (hi_strict ? 1 : 0);
    if (lo && hi && *lo == *hi) value = *lo;
    model[it->sym] = value;
  }
  result.sat = true;
  return true;
}

}  // namespace

LraResult lra_sat(const std::vector<LinAtom>& atoms) {
  LraResult result;
  std::vector<Row> rows;
  rows.reserve(atoms.size());
  for (size_t i = 0; i < atoms.size(); ++i) {
    Row r;
    r.atom = atoms[i];
    r.combo[i] = 1;
    rows.push_back(std::move(r));
  }
  result.sat = solve(std::move(rows), {}, result);
  if (result.sat) {
    result.refutation.clear();
    // Symbols never touched by back-substitution default to 0.
    for (const LinAtom& a : atoms)
      for (const auto& [s, c] : a.coef) result.model.emplace(s, 0);
  } else {
    result.model.clear();
  }
  return result;
}

// ---------------------------------------------------------------------------
// DNF and quantifier elimination

std::vector<std::vector<Literal>> to_dnf(const Formula& f0,
                                         const QeLimits& limits) {
  Formula f = f0.nnf();
  std::vector<std::vector<Literal>> cubes;
  switch (f.kind()) {
    case Formula::Kind::True:
      cubes.push_back({});
      return cubes;
    case Formula::Kind::False:
      return cubes;
    case Formula::Kind::Lit:
      cubes.push_back({f.literal()});
      return cubes;
    case Formula::Kind::Or: {
      for (const Formula& p : f.parts()) {
        auto sub = to_dnf(p, limits);
        cubes.insert(cubes.end(), sub.begin(), sub.end());
        if (cubes.size() > limits.max_dnf)
          throw ResourceError("DNF size exceeds --max-dnf");
      }
      return cubes;
    }
    case Formula::Kind::And: {
      cubes.push_back({});
      for (const Formula& p : f.parts()) {
        auto sub = to_dnf(p, limits);
        std::vector<std::vector<Literal>> next;
        for (const auto& c : cubes)
          for (const auto& s : sub) {
            next.push_back(c);
            next.back().insert(next.back().end(), s.begin(), s.end());
            if (next.size() > limits.max_dnf)
              throw ResourceError("DNF size exceeds --max-dnf");
          }
        cubes = std::move(next);
      }
      return cubes;
    }
    case Formula::Kind::Not:
      break;  // nnf leaves Not only above non-literals; unreachable
  }
  throw Error("internal: NNF left a Not node");
}

namespace {

// Cube-level cleanup: drop duplicates and true literals, detect
// contradictory pairs and closed-false numeric atoms. Returns false if the
// cube is unsatisfiable on syntactic grounds.
bool clean_cube(std::vector<Literal>& cube) {
  std::vector<Literal> out;
  for (const Literal& l : cube) {
    if (classify_literal(l) == LitClass::Num) {
      LinAtom a = *lin_of_literal(l);
      if (a.closed()) {
        if (!a.closed_value()) return false;
        continue;
      }
      Literal norm = literal_of_lin(a);
      if (std::find(out.begin(), out.end(), norm) == out.end())
        out.push_back(norm);
      continue;
    }
    if (l.atom.is_eq() && l.atom.args[0] == l.atom.args[1]) {
      if (!l.positive) return false;  // t != t
      continue;                       // t = t
    }
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  for (const Literal& l : out) {
    Literal opp = l.negated();
    if (std::find(out.begin(), out.end(), opp) != out.end()) return false;
  }
  cube = std::move(out);
  return true;
}

Formula from_cubes(std::vector<std::vector<Literal>> cubes) {
  // Subsumed-cube removal: a cube with a subset of another's literals is
  // weaker, so the superset cube is redundant.
  std::vector<std::vector<Literal>> kept;
  for (auto& c : cubes) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  std::sort(cubes.begin(), cubes.end());
  cubes.erase(std::unique(cubes.begin(), cubes.end()), cubes.end());
  auto subset = [](const std::vector<Literal>& a,
                   const std::vector<Literal>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  for (size_t i = 0; i < cubes.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < cubes.size() && !redundant; ++j)
      if (i != j && subset(cubes[j], cubes[i]) &&
          !(cubes[i] == cubes[j] && j > i))
        redundant = true;
    if (!redundant) kept.push_back(cubes[i]);
  }
  std::vector<Formula> parts;
  for (const auto& c : kept) parts.push_back(Formula::cube(c));
  return Formula::disj(std::move(parts));
}

bool mentions_name(const Term& t, const std::string& sym) {
  std::map<std::string, Sort> names;
  t.collect_consts(names);
  t.collect_vars(names);
  return names.count(sym) != 0;
}

// True iff sym appears somewhere below a non-arithmetic function symbol.
bool sym_below_fn(const Term& t, const std::string& sym, bool below) {
  if (t.is_numeral()) return false;
  if (t.is_var() || t.is_const()) return below && t.name() == sym;
  bool arith = t.name() == "+" || t.name() == "-" || t.name() == "*";
  for (const Term& a : t.args())
    if (sym_below_fn(a, sym, below || !arith)) return true;
  return false;
}

// qe preconditions: sym may occur only linearly inside numeric atoms.
void reject_stray_num(const std::string& sym,
                      const std::vector<Literal>& cube) {
  for (const Literal& l : cube) {
    for (const Term& t : l.atom.args)
      if (sym_below_fn(t, sym, false))
        throw InputError("symbol " + sym +
                         " occurs below a function symbol: " + l.str());
    if (classify_literal(l) != LitClass::Num) {
      for (const Term& t : l.atom.args)
        if (mentions_name(t, sym))
          throw InputError("numeric symbol " + sym +
                           " occurs in a non-numeric atom: " + l.str());
    }
  }
}

}  // namespace

Formula qe(const std::string& sym, const Formula& f, const QeLimits& limits) {
  auto cubes = to_dnf(f, limits);
  std::vector<std::vector<Literal>> out_cubes;
  for (auto& cube : cubes) {
    if (!clean_cube(cube)) continue;
    reject_stray_num(sym, cube);

    // Work queue of cubes: disequality splitting may fork.
    std::vector<std::vector<Literal>> work{cube};
    while (!work.empty()) {
      std::vector<Literal> cur = std::move(work.back());
      work.pop_back();

      std::vector<LinAtom> nums;
      std::vector<Literal> rest;
      for (const Literal& l : cur) {
        if (classify_literal(l) == LitClass::Num) {
          LinAtom a = *lin_of_literal(l);
          if (a.mentions(sym)) {
            nums.push_back(std::move(a));
            continue;
          }
        }
        rest.push_back(l);
      }
      // Split disequalities on sym first.
      auto ne = std::find_if(nums.begin(), nums.end(), [](const LinAtom& a) {
        return a.rel == Rel::Ne;
      });
      if (ne != nums.end()) {
        LinAtom lt = *ne, gt = *ne;
        lt.rel = Rel::Lt;
        for (auto& [s, c] : gt.coef) c = -c;
        gt.cst = -gt.cst;
        gt.rel = Rel::Lt;
        for (const LinAtom& branch : {lt, gt}) {
          std::vector<Literal> forked = rest;
          for (const LinAtom& a : nums)
            if (&a != &*ne) forked.push_back(literal_of_lin(a));
          forked.push_back(literal_of_lin(branch));
          work.push_back(std::move(forked));
          if (work.size() + out_cubes.size() > limits.max_dnf)
            throw ResourceError("DNF size exceeds --max-dnf");
        }
        continue;
      }
      // Equality pivot if available.
      auto eq = std::find_if(nums.begin(), nums.end(), [](const LinAtom& a) {
        return a.rel == Rel::Eq;
      });
      std::vector<Literal> done = std::move(rest);
      if (eq != nums.end()) {
        const Rat pc = eq->coef.at(sym);
        for (const LinAtom& a : nums) {
          if (&a == &*eq) continue;
          LinAtom r = a;
          auto it = r.coef.find(sym);
          Rat lambda = -it->second / pc;
          for (const auto& [s, c] : eq->coef) {
            Rat& slot = r.coef[s];
            slot += c * lambda;
            if (slot == 0) r.coef.erase(s);
          }
          r.cst += eq->cst * lambda;
          if (r.closed()) {
            if (!r.closed_value()) {
              done.clear();
              done.push_back(pos(make_lt(Term::numeral(0), Term::numeral(0))));
              break;
            }
            continue;
          }
          done.push_back(literal_of_lin(r));
        }
      } else {
        std::vector<LinAtom> lowers, uppers;
        for (LinAtom& a : nums)
          (a.coef.at(sym) > 0 ? uppers : lowers).push_back(std::move(a));
        for (const LinAtom& lo : lowers)
          for (const LinAtom& up : uppers) {
            const Rat cl = lo.coef.at(sym);
            const Rat cu = up.coef.at(sym);
            LinAtom sum;
            sum.rel =
                (lo.rel == Rel::Lt || up.rel == Rel::Lt) ? Rel::Lt : Rel::Le;
            sum.coef = lo.coef;
            for (auto& [s, c] : sum.coef) c /= -cl;
            sum.cst = lo.cst / -cl;
            for (const auto& [s, c] : up.coef) {
              Rat& slot = sum.coef[s];
              slot += c / cu;
              if (slot == 0) sum.coef.erase(s);
            }
            sum.cst += up.cst / cu;
            sum.coef.erase(sym);
            if (sum.closed()) {
              if (!sum.closed_value()) {
                done.clear();
                done.push_back(
                    pos(make_lt(Term::numeral(0), Term::numeral(0))));
                break;
              }
              continue;
            }
            done.push_back(literal_of_lin(sum));
          }
      }
      if (clean_cube(done)) out_cubes.push_back(std::move(done));
      if (out_cubes.size() > limits.max_dnf)
        throw ResourceError("DNF size exceeds --max-dnf");
    }
  }
  return from_cubes(std::move(out_cubes));
}

namespace {

bool term_is_sym(const Term& t, const std::string& sym) {
  return (t.is_const() || t.is_var()) && t.name() == sym;
}

}  // namespace

Formula qe_point(const std::string& sym, const Formula& f,
                 const PointCard& card, const QeLimits& limits) {
  auto cubes = to_dnf(f, limits);
  std::vector<Formula> out;
  for (auto& cube : cubes) {
    if (!clean_cube(cube)) continue;
    // sym must occur only in point (dis)equalities.
    for (const Literal& l : cube) {
      for (const Term& t : l.atom.args)
        if (sym_below_fn(t, sym, false))
          throw InputError("point symbol " + sym +
                           " occurs below a function symbol (purify "
                           "first): " +
                           l.str());
      if (classify_literal(l) == LitClass::PointEq) continue;
      for (const Term& t : l.atom.args)
        if (mentions_name(t, sym))
          throw InputError("point symbol " + sym +
                           " occurs in a non-equality atom: " + l.str());
    }
    // Substitution via an equality, if one mentions sym.
    bool substituted = false;
    for (const Literal& l : cube) {
      if (classify_literal(l) != LitClass::PointEq || !l.positive) continue;
      const Term& a = l.atom.args[0];
      const Term& b = l.atom.args[1];
      Term other;
      if (term_is_sym(a, sym) && !term_is_sym(b, sym))
        other = b;
      else if (term_is_sym(b, sym) && !term_is_sym(a, sym))
        other = a;
      else
        continue;
      std::vector<Literal> next;
      for (const Literal& m : cube) {
        if (&m == &l) continue;
        Atom at = m.atom;
        for (Term& arg : at.args)
          if (term_is_sym(arg, sym)) arg = other;
        next.push_back(Literal{m.positive, at});
      }
      out.push_back(qe_point(sym, Formula::cube(next), card, limits));
      substituted = true;
      break;
    }
    if (substituted) continue;

    // Only disequalities on sym remain; collect the terms sym must avoid.
    std::vector<Literal> rest;
    std::vector<Term> avoid;
    for (const Literal& l : cube) {
      if (classify_literal(l) == LitClass::PointEq && !l.positive) {
        const Term& a = l.atom.args[0];
        const Term& b = l.atom.args[1];
        if (term_is_sym(a, sym) && term_is_sym(b, sym)) continue;  // cleaned
        if (term_is_sym(a, sym)) {
          avoid.push_back(b);
          continue;
        }
        if (term_is_sym(b, sym)) {
          avoid.push_back(a);
          continue;
        }
      }
      rest.push_back(l);
    }
    if (!card.at_least) {
      // Infinite domain: a fresh value always exists.
      out.push_back(Formula::cube(rest));
      continue;
    }
    const unsigned k = *card.at_least;
    std::vector<Formula> parts{Formula::cube(rest)};
    if (avoid.size() >= k) {
      // exists x distinct from all of avoid  iff  the avoided terms take at
      // most k-1 distinct values: every k-subset contains an equal pair.
      std::vector<size_t> idx(avoid.size());
      for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::vector<size_t> sel;
      std::vector<Formula> conj;
      // enumerate k-subsets
      std::function<void(size_t)> rec = [&](size_t start) {
        if (sel.size() == k) {
          std::vector<Formula> eqs;
          for (size_t i = 0; i < sel.size(); ++i)
            for (size_t j = i + 1; j < sel.size(); ++j)
              eqs.push_back(Formula::lit(
                  pos(make_eq(avoid[sel[i]], avoid[sel[j]]))));
          conj.push_back(Formula::disj(std::move(eqs)));
          return;
        }
        for (size_t i = start; i < avoid.size(); ++i) {
          sel.push_back(i);
          rec(i + 1);
          sel.pop_back();
        }
      };
      rec(0);
      parts.push_back(Formula::conj(std::move(conj)));
    }
    out.push_back(Formula::conj(std::move(parts)));
  }
  return Formula::disj(std::move(out));
}

Formula qe_bool(const Atom& atom, const Formula& f, const QeLimits& limits) {
  auto cubes = to_dnf(f, limits);
  std::vector<std::vector<Literal>> out;
  for (auto& cube : cubes) {
    if (!clean_cube(cube)) continue;  // drops contradictory cubes
    std::vector<Literal> next;
    for (const Literal& l : cube)
      if (l.atom != atom) next.push_back(l);
    out.push_back(std::move(next));
  }
  return from_cubes(std::move(out));
}

Formula simplify_dnf(const Formula& f, const QeLimits& limits) {
  auto cubes = to_dnf(f, limits);
  std::vector<std::vector<Literal>> out;
  for (auto& cube : cubes)
    if (clean_cube(cube)) out.push_back(std::move(cube));
  return from_cubes(std::move(out));
}

}  // namespace soqe
