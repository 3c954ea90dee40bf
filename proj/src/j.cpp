#include "focal/j.hpp"

#include <stdexcept>

namespace focal::j {

bool is_atom(const Positioned& p) {
  using K = Formula::Kind;
  if (p.side == Side::Right) return p.formula.kind() == K::PosLit;
  return p.formula.kind() == K::NegLit || p.formula.kind() == K::BotNeg;
}

bool is_molecule(const Positioned& p) {
  return (p.side == Side::Right) == p.formula.positive();
}

namespace {

using Delta = TypingDecomposition<Signature>;
using Entry = std::pair<Pattern, Delta>;

std::vector<Entry> decompose(const Positioned& pf);

std::vector<Entry> decompose_right(const Formula& f) {
  using K = Formula::Kind;
  if (!f.positive())
    return {{Pattern::neg_r(), Delta::neg_leaf(left(f))}};
  switch (f.kind()) {
    case K::PosLit:
      return {{Pattern::pos_r(), Delta::pos_leaf(right(f))}};
    case K::TopPos:
      return {{Pattern::true_r(), Delta::unit()}};
    case K::BotPos:
      return {};
    case K::AndPos: {
      std::vector<Entry> out;
      for (const auto& [p1, d1] : decompose(right(f.left())))
        for (const auto& [p2, d2] : decompose(right(f.right())))
          out.emplace_back(Pattern::pair(p1, p2), Delta::pair(d1, d2));
      return out;
    }
    case K::Or: {
      std::vector<Entry> out;
      for (const auto& [p, d] : decompose(right(f.left())))
        out.emplace_back(Pattern::inj(1, p), d);
      for (const auto& [p, d] : decompose(right(f.right())))
        out.emplace_back(Pattern::inj(2, p), d);
      return out;
    }
    default:
      return {};
  }
}

std::vector<Entry> decompose_left(const Formula& f) {
  using K = Formula::Kind;
  if (f.positive())
    return {{Pattern::neg_l(), Delta::neg_leaf(right(f))}};
  switch (f.kind()) {
    case K::NegLit:
      return {{Pattern::pos_l(), Delta::pos_leaf(left(f))}};
    case K::BotNeg:
      return {{Pattern::true_l(), Delta::pos_leaf(absurd_atom())}};
    case K::TopNeg:
      return {};
    case K::AndNeg: {
      std::vector<Entry> out;
      for (const auto& [p, d] : decompose(left(f.left())))
        out.emplace_back(Pattern::proj(1, p), d);
      for (const auto& [p, d] : decompose(left(f.right())))
        out.emplace_back(Pattern::proj(2, p), d);
      return out;
    }
    case K::Imp: {
      std::vector<Entry> out;
      for (const auto& [p1, d1] : decompose(right(f.left())))
        for (const auto& [p2, d2] : decompose(left(f.right())))
          out.emplace_back(Pattern::cons(p1, p2), Delta::pair(d1, d2));
      return out;
    }
    case K::Not: {
      std::vector<Entry> out;
      for (const auto& [p, d] : decompose(right(f.operand())))
        out.emplace_back(Pattern::switch_(p),
                         Delta::pair(d, Delta::pos_leaf(absurd_atom())));
      return out;
    }
    default:
      return {};
  }
}

std::vector<Entry> decompose(const Positioned& pf) {
  return pf.side == Side::Right ? decompose_right(pf.formula)
                                : decompose_left(pf.formula);
}

}  // namespace

DecompList<Signature> Signature::decompositions(const Molecule& m) const {
  if (!is_molecule(m))
    throw std::invalid_argument("positioned formula is not a molecule");
  return decompose(m);
}

DecStructure Signature::pattern_structure(const Pattern& p) const {
  using K = Pattern::Kind;
  switch (p.kind()) {
    case K::PosR: case K::PosL: case K::TrueL:
      return DecStructure::pos_leaf(UnitPayload{});
    case K::NegR: case K::NegL:
      return DecStructure::neg_leaf(UnitPayload{});
    case K::TrueR:
      return DecStructure::unit();
    case K::Pair: case K::Cons:
      return DecStructure::pair(pattern_structure(p.first()),
                                pattern_structure(p.second()));
    case K::Inj: case K::Proj:
      return pattern_structure(p.first());
    case K::Switch:
      return DecStructure::pair(pattern_structure(p.first()),
                                DecStructure::pos_leaf(UnitPayload{}));
  }
  throw std::logic_error("bad pattern kind");
}

namespace {

void collect_subformulae(const Formula& f, std::set<Formula>& out) {
  if (!out.insert(f).second) return;
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::AndPos: case K::Or: case K::AndNeg: case K::Imp:
      collect_subformulae(f.left(), out);
      collect_subformulae(f.right(), out);
      break;
    case K::Not:
      collect_subformulae(f.operand(), out);
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<Positioned> molecule_closure(const std::vector<Formula>& roots) {
  std::set<Formula> subs;
  for (const Formula& f : roots) collect_subformulae(f, subs);
  std::set<Positioned> out;
  for (const Formula& f : subs) out.insert(position(f));
  return {out.begin(), out.end()};
}

}  // namespace focal::j
