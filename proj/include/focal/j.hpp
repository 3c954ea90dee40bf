#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "focal/kernel.hpp"

namespace focal::j {

// Intuitionistic formulae. Literal sets for the two polarities are disjoint;
// both are spelled with identifiers (negative ones are written ~id).
class Formula {
public:
  enum class Kind {
    PosLit,  // l          (positive)
    TopPos,  // true+
    BotPos,  // false+
    AndPos,  // A &+ B
    Or,      // A |+ B     (positive)
    NegLit,  // ~l         (negative)
    TopNeg,  // true-
    BotNeg,  // false-
    AndNeg,  // A &- B
    Imp,     // A => B
    Not,     // not A
  };

  static Formula pos_lit(std::string name) { return leaf(Kind::PosLit, std::move(name)); }
  static Formula neg_lit(std::string name) { return leaf(Kind::NegLit, std::move(name)); }
  static Formula top_pos() { return leaf(Kind::TopPos, {}); }
  static Formula bot_pos() { return leaf(Kind::BotPos, {}); }
  static Formula top_neg() { return leaf(Kind::TopNeg, {}); }
  static Formula bot_neg() { return leaf(Kind::BotNeg, {}); }
  static Formula and_pos(Formula a, Formula b) { return binary(Kind::AndPos, a, b); }
  static Formula or_(Formula a, Formula b) { return binary(Kind::Or, a, b); }
  static Formula and_neg(Formula a, Formula b) { return binary(Kind::AndNeg, a, b); }
  static Formula imp(Formula a, Formula b) { return binary(Kind::Imp, a, b); }
  static Formula not_(Formula a) {
    return Formula(std::make_shared<const Rep>(Rep{Kind::Not, {}, a.rep_, nullptr}));
  }

  Kind kind() const { return rep_->kind; }
  const std::string& name() const { return rep_->name; }
  Formula left() const { return Formula(rep_->left); }
  Formula right() const { return Formula(rep_->right); }
  Formula operand() const { return Formula(rep_->left); }  // Kind::Not

  bool positive() const {
    switch (kind()) {
      case Kind::PosLit: case Kind::TopPos: case Kind::BotPos:
      case Kind::AndPos: case Kind::Or:
        return true;
      default:
        return false;
    }
  }

  int size() const {
    switch (kind()) {
      case Kind::AndPos: case Kind::Or: case Kind::AndNeg: case Kind::Imp:
        return 1 + left().size() + right().size();
      case Kind::Not:
        return 1 + operand().size();
      default:
        return 1;
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
      case Kind::PosLit: case Kind::NegLit: return a.name() <=> b.name();
      case Kind::AndPos: case Kind::Or: case Kind::AndNeg: case Kind::Imp:
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
      case Kind::Not: return a.operand() <=> b.operand();
      default: return std::strong_ordering::equal;
    }
  }

private:
  struct Rep {
    Kind kind;
    std::string name;
    std::shared_ptr<const Rep> left, right;
  };
  static Formula leaf(Kind k, std::string name) {
    return Formula(std::make_shared<const Rep>(Rep{k, std::move(name), nullptr, nullptr}));
  }
  static Formula binary(Kind k, const Formula& a, const Formula& b) {
    return Formula(std::make_shared<const Rep>(Rep{k, {}, a.rep_, b.rep_}));
  }
  explicit Formula(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

enum class Side { Left, Right };

// A formula together with the sequent side it lives on. Atoms are
// (l+, Right), (l-, Left) and (false-, Left); molecules are (P, Right) and
// (N, Left). The two sorts overlap on (l-, Left) and (false-, Left).
struct Positioned {
  Formula formula;
  Side side;

  friend bool operator==(const Positioned& a, const Positioned& b) {
    return a.side == b.side && a.formula == b.formula;
  }
  friend std::strong_ordering operator<=>(const Positioned& a, const Positioned& b) {
    if (auto c = a.side <=> b.side; c != 0) return c;
    return a.formula <=> b.formula;
  }
};

inline Positioned right(Formula f) { return {std::move(f), Side::Right}; }
inline Positioned left(Formula f) { return {std::move(f), Side::Left}; }

// Positions a formula on its natural side: positives right, negatives left.
inline Positioned position(Formula f) {
  Side s = f.positive() ? Side::Right : Side::Left;
  return {std::move(f), s};
}

bool is_atom(const Positioned& p);
bool is_molecule(const Positioned& p);

inline Positioned absurd_atom() { return left(Formula::bot_neg()); }

// Patterns carry their side. Right-side forms mirror the classical ones;
// left-side forms add cons (implication), projections and switch (negation).
class Pattern {
public:
  enum class Kind {
    PosR, NegR, TrueR, Pair, Inj,
    PosL, NegL, TrueL, Cons, Proj, Switch,
  };

  static Pattern pos_r() { return Pattern(Kind::PosR, 0, nullptr, nullptr); }
  static Pattern neg_r() { return Pattern(Kind::NegR, 0, nullptr, nullptr); }
  static Pattern true_r() { return Pattern(Kind::TrueR, 0, nullptr, nullptr); }
  static Pattern pair(const Pattern& a, const Pattern& b) {
    return Pattern(Kind::Pair, 0, a.rep_, b.rep_);
  }
  static Pattern inj(int i, const Pattern& p) { return Pattern(Kind::Inj, i, p.rep_, nullptr); }
  static Pattern pos_l() { return Pattern(Kind::PosL, 0, nullptr, nullptr); }
  static Pattern neg_l() { return Pattern(Kind::NegL, 0, nullptr, nullptr); }
  static Pattern true_l() { return Pattern(Kind::TrueL, 0, nullptr, nullptr); }
  static Pattern cons(const Pattern& a, const Pattern& b) {
    return Pattern(Kind::Cons, 0, a.rep_, b.rep_);
  }
  static Pattern proj(int i, const Pattern& p) { return Pattern(Kind::Proj, i, p.rep_, nullptr); }
  static Pattern switch_(const Pattern& p) { return Pattern(Kind::Switch, 0, p.rep_, nullptr); }

  Kind kind() const { return rep_->kind; }
  int index() const { return rep_->index; }  // Inj / Proj: 1 or 2
  Pattern first() const { return Pattern(rep_->first); }
  Pattern second() const { return Pattern(rep_->second); }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
      case Kind::Pair: case Kind::Cons:
        if (auto c = a.first() <=> b.first(); c != 0) return c;
        return a.second() <=> b.second();
      case Kind::Inj: case Kind::Proj:
        if (auto c = a.index() <=> b.index(); c != 0) return c;
        return a.first() <=> b.first();
      case Kind::Switch:
        return a.first() <=> b.first();
      default:
        return std::strong_ordering::equal;
    }
  }

private:
  struct Rep {
    Kind kind;
    int index;
    std::shared_ptr<const Rep> first, second;
  };
  Pattern(Kind k, int index, std::shared_ptr<const Rep> a, std::shared_ptr<const Rep> b)
      : rep_(std::make_shared<const Rep>(Rep{k, index, std::move(a), std::move(b)})) {}
  explicit Pattern(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// Positive labels: stable store level, the right-slot atom, or the reserved
// absurdity label (always resolvable, yields (false-, Left)).
struct PosLabel {
  enum class Kind { Stable, RightSlot, Absurd };
  Kind kind = Kind::Stable;
  int level = 0;

  static PosLabel stable(int level) { return {Kind::Stable, level}; }
  static PosLabel right_slot() { return {Kind::RightSlot, 0}; }
  static PosLabel absurd() { return {Kind::Absurd, 0}; }

  friend bool operator==(PosLabel, PosLabel) = default;
  friend auto operator<=>(PosLabel, PosLabel) = default;
};

struct NegLabel {
  enum class Kind { Stable, RightSlot };
  Kind kind = Kind::Stable;
  int level = 0;

  static NegLabel stable(int level) { return {Kind::Stable, level}; }
  static NegLabel right_slot() { return {Kind::RightSlot, 0}; }

  friend bool operator==(NegLabel, NegLabel) = default;
  friend auto operator<=>(NegLabel, NegLabel) = default;
};

constexpr bool stable_label(PosLabel x) { return x.kind == PosLabel::Kind::Stable; }
constexpr bool stable_label(NegLabel x) { return x.kind == NegLabel::Kind::Stable; }

// The two-sided typing context. Stable stores only grow; material headed
// for the right-hand side of the sequent lives in a single overwriting
// slot. Writing either slot kind erases the other, which keeps the
// right-hand side a singleton (or empty).
class Context {
public:
  std::optional<Positioned> lookup_pos(PosLabel x) const {
    switch (x.kind) {
      case PosLabel::Kind::Stable:
        if (x.level < 0 || x.level >= static_cast<int>(pos_stable_.size())) return {};
        return pos_stable_[static_cast<std::size_t>(x.level)];
      case PosLabel::Kind::RightSlot:
        return right_atom_;
      case PosLabel::Kind::Absurd:
        return absurd_atom();
    }
    return {};
  }
  std::optional<Positioned> lookup_neg(NegLabel x) const {
    switch (x.kind) {
      case NegLabel::Kind::Stable:
        if (x.level < 0 || x.level >= static_cast<int>(neg_stable_.size())) return {};
        return neg_stable_[static_cast<std::size_t>(x.level)];
      case NegLabel::Kind::RightSlot:
        return right_mol_;
    }
    return {};
  }

  Context extend(const Decomposition<Positioned, Positioned>& d) const {
    Context out = *this;
    d.for_each_leaf(
        [&](const Positioned& a) {
          if (a.side == Side::Right) {
            out.pos_stable_.push_back(a);
          } else {
            out.right_atom_ = a;
            out.right_mol_.reset();
          }
        },
        [&](const Positioned& m) {
          if (m.side == Side::Left) {
            out.neg_stable_.push_back(m);
          } else {
            out.right_mol_ = m;
            out.right_atom_.reset();
          }
        });
    return out;
  }

  std::vector<PosLabel> pos_domain() const {
    std::vector<PosLabel> out;
    for (int i = 0; i < static_cast<int>(pos_stable_.size()); ++i)
      out.push_back(PosLabel::stable(i));
    if (right_atom_) out.push_back(PosLabel::right_slot());
    out.push_back(PosLabel::absurd());
    return out;
  }
  std::vector<NegLabel> neg_domain() const {
    std::vector<NegLabel> out;
    for (int i = 0; i < static_cast<int>(neg_stable_.size()); ++i)
      out.push_back(NegLabel::stable(i));
    if (right_mol_) out.push_back(NegLabel::right_slot());
    return out;
  }

  std::set<Positioned> acc_pos() const {
    std::set<Positioned> out(pos_stable_.begin(), pos_stable_.end());
    if (right_atom_) out.insert(*right_atom_);
    out.insert(absurd_atom());
    return out;
  }
  std::set<Positioned> acc_neg() const {
    std::set<Positioned> out(neg_stable_.begin(), neg_stable_.end());
    if (right_mol_) out.insert(*right_mol_);
    return out;
  }

  const std::vector<Positioned>& pos_stable() const { return pos_stable_; }
  const std::vector<Positioned>& neg_stable() const { return neg_stable_; }
  const std::optional<Positioned>& right_atom() const { return right_atom_; }
  const std::optional<Positioned>& right_mol() const { return right_mol_; }

  friend bool operator==(const Context&, const Context&) = default;

private:
  std::vector<Positioned> pos_stable_;
  std::vector<Positioned> neg_stable_;
  std::optional<Positioned> right_atom_;  // (v, Left)
  std::optional<Positioned> right_mol_;   // (P, Right)
};

class Signature {
public:
  using Atom = Positioned;
  using Molecule = Positioned;
  using Pattern = j::Pattern;
  using PosLabel = j::PosLabel;
  using NegLabel = j::NegLabel;
  using Context = j::Context;

  DecompList<Signature> decompositions(const Molecule& m) const;
  DecStructure pattern_structure(const Pattern& p) const;

  std::optional<Atom> lookup_pos(const Context& ctx, PosLabel x) const {
    return ctx.lookup_pos(x);
  }
  std::optional<Molecule> lookup_neg(const Context& ctx, NegLabel x) const {
    return ctx.lookup_neg(x);
  }
  Context extend(const Context& ctx, const TypingDecomposition<Signature>& d) const {
    return ctx.extend(d);
  }
  // The framework's literal emptiness is unreachable here: the absurdity
  // atom is always referable. "Empty" means empty stores and empty slot.
  Context empty_context() const { return Context{}; }
  std::vector<PosLabel> pos_domain(const Context& ctx) const {
    return ctx.pos_domain();
  }
  std::vector<NegLabel> neg_domain(const Context& ctx) const {
    return ctx.neg_domain();
  }

  // Store layout for machine environments, mirroring the typing context.
  LabelAddress pos_label_address(PosLabel x) const {
    switch (x.kind) {
      case PosLabel::Kind::Stable: return {StorePlace::Stable, x.level};
      case PosLabel::Kind::RightSlot: return {StorePlace::Slot, 0};
      case PosLabel::Kind::Absurd: return {StorePlace::Reserved, 0};
    }
    return {StorePlace::Stable, 0};
  }
  LabelAddress neg_label_address(NegLabel x) const {
    if (x.kind == NegLabel::Kind::RightSlot) return {StorePlace::Slot, 0};
    return {StorePlace::Stable, x.level};
  }
  bool atom_to_slot(const Atom& a) const { return a.side == Side::Left; }
  bool molecule_to_slot(const Molecule& m) const { return m.side == Side::Right; }
};

inline const Signature& signature() {
  static const Signature sig;
  return sig;
}

// Positioned molecule closure of a set of root formulae: every subformula,
// placed on its natural side.
std::vector<Positioned> molecule_closure(const std::vector<Formula>& roots);

}  // namespace focal::j
