#include "focal/k1.hpp"

#include <set>
#include <stdexcept>

namespace focal::k1 {

Formula negate(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: return Formula::neg_atom(f.name());
    case K::NegAtom: return Formula::atom(f.name());
    case K::TopPos: return Formula::bot_neg();
    case K::BotPos: return Formula::top_neg();
    case K::TopNeg: return Formula::bot_pos();
    case K::BotNeg: return Formula::top_pos();
    case K::AndPos: return Formula::or_neg(negate(f.left()), negate(f.right()));
    case K::OrPos: return Formula::and_neg(negate(f.left()), negate(f.right()));
    case K::AndNeg: return Formula::or_pos(negate(f.left()), negate(f.right()));
    case K::OrNeg: return Formula::and_pos(negate(f.left()), negate(f.right()));
  }
  throw std::logic_error("bad formula kind");
}

namespace {

using Delta = TypingDecomposition<Signature>;
using Entry = std::pair<Pattern, Delta>;

// Decomposition of an arbitrary formula: the full relation, of which the
// molecule-level relation is the restriction to positive formulae.
std::vector<Entry> decompose_formula(const Formula& f) {
  using K = Formula::Kind;
  if (!f.positive())
    return {{Pattern::neg(), Delta::neg_leaf(negate(f))}};

  switch (f.kind()) {
    case K::Atom:
      return {{Pattern::pos(), Delta::pos_leaf(f.name())}};
    case K::TopPos:
      return {{Pattern::true_(), Delta::unit()}};
    case K::BotPos:
      return {};
    case K::AndPos: {
      std::vector<Entry> out;
      for (const auto& [p1, d1] : decompose_formula(f.left()))
        for (const auto& [p2, d2] : decompose_formula(f.right()))
          out.emplace_back(Pattern::pair(p1, p2), Delta::pair(d1, d2));
      return out;
    }
    case K::OrPos: {
      std::vector<Entry> out;
      for (const auto& [p, d] : decompose_formula(f.left()))
        out.emplace_back(Pattern::inj(1, p), d);
      for (const auto& [p, d] : decompose_formula(f.right()))
        out.emplace_back(Pattern::inj(2, p), d);
      return out;
    }
    default:
      return {};
  }
}

}  // namespace

DecompList<Signature> Signature::decompositions(const Molecule& m) const {
  if (!m.positive())
    throw std::invalid_argument("molecule must be a positive formula");
  return decompose_formula(m);
}

DecStructure Signature::pattern_structure(const Pattern& p) const {
  using K = Pattern::Kind;
  switch (p.kind()) {
    case K::Pos: return DecStructure::pos_leaf(UnitPayload{});
    case K::Neg: return DecStructure::neg_leaf(UnitPayload{});
    case K::True: return DecStructure::unit();
    case K::Pair:
      return DecStructure::pair(pattern_structure(p.first()),
                                pattern_structure(p.second()));
    case K::Inj: return pattern_structure(p.first());
  }
  throw std::logic_error("bad pattern kind");
}

namespace {

void collect_subformulae(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::AndPos: case K::OrPos: case K::AndNeg: case K::OrNeg:
      collect_subformulae(f.left(), out);
      collect_subformulae(f.right(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Formula> molecule_closure(const std::vector<Formula>& roots) {
  std::set<Formula> subs;
  for (const Formula& f : roots) collect_subformulae(f, subs);

  std::set<Formula> molecules;
  for (const Formula& f : subs)
    molecules.insert(f.positive() ? f : negate(f));
  return {molecules.begin(), molecules.end()};
}

}  // namespace focal::k1
