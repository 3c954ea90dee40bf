#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "focal/context.hpp"
#include "focal/kernel.hpp"

namespace focal::k1 {

// Polarised classical formulae, one-sided. Molecules are the positive
// formulae; atoms of the instance are plain atom names.
class Formula {
public:
  enum class Kind {
    Atom,     // a          (positive)
    NegAtom,  // ~a         (negative)
    TopPos,   // true+
    BotPos,   // false+
    TopNeg,   // true-
    BotNeg,   // false-
    AndPos,   // A &+ B
    OrPos,    // A |+ B
    AndNeg,   // A &- B
    OrNeg,    // A |- B
  };

  static Formula atom(std::string name) { return leaf(Kind::Atom, std::move(name)); }
  static Formula neg_atom(std::string name) { return leaf(Kind::NegAtom, std::move(name)); }
  static Formula top_pos() { return leaf(Kind::TopPos, {}); }
  static Formula bot_pos() { return leaf(Kind::BotPos, {}); }
  static Formula top_neg() { return leaf(Kind::TopNeg, {}); }
  static Formula bot_neg() { return leaf(Kind::BotNeg, {}); }
  static Formula and_pos(Formula a, Formula b) { return binary(Kind::AndPos, a, b); }
  static Formula or_pos(Formula a, Formula b) { return binary(Kind::OrPos, a, b); }
  static Formula and_neg(Formula a, Formula b) { return binary(Kind::AndNeg, a, b); }
  static Formula or_neg(Formula a, Formula b) { return binary(Kind::OrNeg, a, b); }

  Kind kind() const { return rep_->kind; }
  const std::string& name() const { return rep_->name; }
  Formula left() const { return Formula(rep_->left); }
  Formula right() const { return Formula(rep_->right); }

  bool positive() const {
    switch (kind()) {
      case Kind::Atom: case Kind::TopPos: case Kind::BotPos:
      case Kind::AndPos: case Kind::OrPos:
        return true;
      default:
        return false;
    }
  }

  // Connective count; atoms and units count one. Stable under negation.
  int size() const {
    switch (kind()) {
      case Kind::AndPos: case Kind::OrPos: case Kind::AndNeg: case Kind::OrNeg:
        return 1 + left().size() + right().size();
      default:
        return 1;
    }
  }

  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Atom: case Kind::NegAtom: return a.name() == b.name();
      case Kind::AndPos: case Kind::OrPos: case Kind::AndNeg: case Kind::OrNeg:
        return a.left() == b.left() && a.right() == b.right();
      default: return true;
    }
  }
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
      case Kind::Atom: case Kind::NegAtom: return a.name() <=> b.name();
      case Kind::AndPos: case Kind::OrPos: case Kind::AndNeg: case Kind::OrNeg:
        if (auto c = a.left() <=> b.left(); c != 0) return c;
        return a.right() <=> b.right();
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

// De Morgan negation: an involution that flips polarity.
Formula negate(const Formula& f);

// Patterns: pos | neg | unit | (p1, p2) | inl p / inr p.
class Pattern {
public:
  enum class Kind { Pos, Neg, True, Pair, Inj };

  static Pattern pos() { return Pattern(Kind::Pos, 0, nullptr, nullptr); }
  static Pattern neg() { return Pattern(Kind::Neg, 0, nullptr, nullptr); }
  static Pattern true_() { return Pattern(Kind::True, 0, nullptr, nullptr); }
  static Pattern pair(const Pattern& a, const Pattern& b) {
    return Pattern(Kind::Pair, 0, a.rep_, b.rep_);
  }
  static Pattern inj(int index, const Pattern& p) {
    return Pattern(Kind::Inj, index, p.rep_, nullptr);
  }

  Kind kind() const { return rep_->kind; }
  int inj_index() const { return rep_->index; }  // 1 or 2
  Pattern first() const { return Pattern(rep_->first); }
  Pattern second() const { return Pattern(rep_->second); }

  friend bool operator==(const Pattern& a, const Pattern& b) {
    return (a <=> b) == 0;
  }
  friend std::strong_ordering operator<=>(const Pattern& a, const Pattern& b) {
    if (a.rep_ == b.rep_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    switch (a.kind()) {
      case Kind::Pair:
        if (auto c = a.first() <=> b.first(); c != 0) return c;
        return a.second() <=> b.second();
      case Kind::Inj:
        if (auto c = a.inj_index() <=> b.inj_index(); c != 0) return c;
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
  Pattern(Kind k, int index, std::shared_ptr<const Rep> a,
          std::shared_ptr<const Rep> b)
      : rep_(std::make_shared<const Rep>(Rep{k, index, std::move(a), std::move(b)})) {}
  explicit Pattern(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

// The instance signature for the classical one-sided system. Atoms are atom
// names; molecules are positive formulae; contexts are parametric.
class Signature {
public:
  using Atom = std::string;
  using Molecule = Formula;
  using Pattern = k1::Pattern;
  using PosLabel = focal::PosLabel;
  using NegLabel = focal::NegLabel;
  using Context = ParametricContext<Atom, Molecule>;

  // Enumerates the decomposition relation at M (M must be positive):
  //   a        ~> pos  : a
  //   true+    ~> unit : ()
  //   false+   ~> (nothing)
  //   A &+ B   ~> (p1, p2) : (D1, D2)    componentwise
  //   A |+ B   ~> inl/inr p : D          from either component
  // with negative subformulae decomposing as  neg : *~N.
  // Enumeration order is fixed: left before right, inl before inr.
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
  Context empty_context() const { return Context{}; }
  std::vector<PosLabel> pos_domain(const Context& ctx) const {
    return ctx.pos_domain();
  }
  std::vector<NegLabel> neg_domain(const Context& ctx) const {
    return ctx.neg_domain();
  }

  // Store layout for machine environments: everything is append-only.
  LabelAddress pos_label_address(PosLabel x) const {
    return {StorePlace::Stable, x.level};
  }
  LabelAddress neg_label_address(NegLabel x) const {
    return {StorePlace::Stable, x.level};
  }
  bool atom_to_slot(const Atom&) const { return false; }
  bool molecule_to_slot(const Molecule&) const { return false; }
};

inline const Signature& signature() {
  static const Signature sig;
  return sig;
}

// All molecules mentioned by a set of formulae: positive subformulae plus
// negations of negative subformulae. Used for well-foundedness checks and
// as the default cut-candidate universe.
std::vector<Formula> molecule_closure(const std::vector<Formula>& roots);

}  // namespace focal::k1
