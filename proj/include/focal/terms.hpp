#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>

namespace focal {

// Proof-terms over an instance signature Sig, which supplies the pattern,
// label and molecule types. Three mutually defined sorts:
//
//   positive    t+ ::= p . d
//   dec term    d  ::= x+ | { p => c ; ... } | () | (d1, d2)
//   command     c  ::= < x- | t+ > | < f : M | t+ >
//
// Cut commands carry their cut molecule M explicitly; checking stays
// syntax-directed without inference. All values are immutable and share
// structure on copy.

template <typename Sig> class PositiveTerm;
template <typename Sig> class DecTerm;
template <typename Sig> class Command;

// Branch maps are keyed by the instance's canonical pattern order, so
// domain comparisons are sorted-sequence comparisons.
template <typename Sig>
using BranchMap = std::map<typename Sig::Pattern, Command<Sig>>;

template <typename Sig>
class PositiveTerm {
public:
  PositiveTerm(typename Sig::Pattern pattern, DecTerm<Sig> body);

  const typename Sig::Pattern& pattern() const { return rep_->pattern; }
  const DecTerm<Sig>& body() const { return rep_->body; }

  friend bool operator==(const PositiveTerm& a, const PositiveTerm& b) {
    return a.rep_ == b.rep_ ||
           (a.pattern() == b.pattern() && a.body() == b.body());
  }

private:
  struct Rep;
  std::shared_ptr<const Rep> rep_;
};

template <typename Sig>
class DecTerm {
public:
  enum class Kind { Label, Branches, Unit, Pair };

  static DecTerm label(typename Sig::PosLabel x) {
    DecTerm d;
    d.rep_ = std::make_shared<const Rep>(
        Rep{Kind::Label, std::move(x), {}, nullptr, nullptr});
    return d;
  }
  static DecTerm branches(BranchMap<Sig> f) {
    DecTerm d;
    d.rep_ = std::make_shared<const Rep>(
        Rep{Kind::Branches, {}, std::move(f), nullptr, nullptr});
    return d;
  }
  static DecTerm unit() {
    DecTerm d;
    d.rep_ = std::make_shared<const Rep>(Rep{Kind::Unit, {}, {}, nullptr, nullptr});
    return d;
  }
  static DecTerm pair(DecTerm first, DecTerm second) {
    DecTerm d;
    d.rep_ = std::make_shared<const Rep>(
        Rep{Kind::Pair, {}, {}, first.rep_, second.rep_});
    return d;
  }

  Kind kind() const { return rep_->kind; }
  const typename Sig::PosLabel& pos_label() const { return rep_->label; }
  const BranchMap<Sig>& branch_map() const { return rep_->branches; }
  DecTerm first() const { return DecTerm(rep_->first); }
  DecTerm second() const { return DecTerm(rep_->second); }

  friend bool operator==(const DecTerm& a, const DecTerm& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.kind() != b.kind()) return false;
    switch (a.kind()) {
      case Kind::Label: return a.pos_label() == b.pos_label();
      case Kind::Branches: return a.branch_map() == b.branch_map();
      case Kind::Unit: return true;
      case Kind::Pair:
        return a.first() == b.first() && a.second() == b.second();
    }
    return false;
  }

private:
  struct Rep {
    Kind kind;
    typename Sig::PosLabel label;  // Kind::Label
    BranchMap<Sig> branches;       // Kind::Branches
    std::shared_ptr<const Rep> first, second;  // Kind::Pair
  };

  DecTerm() = default;
  explicit DecTerm(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

  std::shared_ptr<const Rep> rep_;
};

template <typename Sig>
class Command {
public:
  enum class Kind { Select, Cut };

  static Command select(typename Sig::NegLabel x, PositiveTerm<Sig> t) {
    Command c;
    c.rep_ = std::make_shared<const Rep>(Kind::Select, std::move(x),
                                         BranchMap<Sig>{}, std::nullopt,
                                         std::move(t));
    return c;
  }
  static Command cut(BranchMap<Sig> f, typename Sig::Molecule m,
                     PositiveTerm<Sig> t) {
    Command c;
    c.rep_ = std::make_shared<const Rep>(Kind::Cut, typename Sig::NegLabel{},
                                         std::move(f), std::move(m),
                                         std::move(t));
    return c;
  }

  Kind kind() const { return rep_->kind; }
  const typename Sig::NegLabel& neg_label() const { return rep_->label; }
  const BranchMap<Sig>& branch_map() const { return rep_->branches; }
  const typename Sig::Molecule& cut_molecule() const { return *rep_->molecule; }
  const PositiveTerm<Sig>& positive() const { return *rep_->positive; }

  friend bool operator==(const Command& a, const Command& b) {
    if (a.rep_ == b.rep_) return true;
    if (a.kind() != b.kind()) return false;
    if (a.kind() == Kind::Select)
      return a.neg_label() == b.neg_label() && a.positive() == b.positive();
    return a.branch_map() == b.branch_map() &&
           a.cut_molecule() == b.cut_molecule() && a.positive() == b.positive();
  }

private:
  struct Rep {
    Kind kind;
    typename Sig::NegLabel label;                    // Kind::Select
    BranchMap<Sig> branches;                         // Kind::Cut
    std::optional<typename Sig::Molecule> molecule;  // Kind::Cut
    std::optional<PositiveTerm<Sig>> positive;

    Rep(Kind k, typename Sig::NegLabel x, BranchMap<Sig> f,
        std::optional<typename Sig::Molecule> m, PositiveTerm<Sig> t)
        : kind(k), label(std::move(x)), branches(std::move(f)),
          molecule(std::move(m)), positive(std::move(t)) {}
  };

  Command() = default;

  std::shared_ptr<const Rep> rep_;
};

template <typename Sig>
struct PositiveTerm<Sig>::Rep {
  typename Sig::Pattern pattern;
  DecTerm<Sig> body;
};

template <typename Sig>
PositiveTerm<Sig>::PositiveTerm(typename Sig::Pattern pattern, DecTerm<Sig> body)
    : rep_(std::make_shared<const Rep>(Rep{std::move(pattern), std::move(body)})) {}

}  // namespace focal
