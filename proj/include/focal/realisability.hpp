#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "focal/context.hpp"
#include "focal/j.hpp"
#include "focal/k1.hpp"
#include "focal/kernel.hpp"

namespace focal {

// The one-point carrier used by the boolean models.
struct UnitTok {
  friend constexpr bool operator==(UnitTok, UnitTok) { return true; }
  friend constexpr auto operator<=>(UnitTok, UnitTok) {
    return std::strong_ordering::equal;
  }
};

template <typename Alg>
using SemDec = Decomposition<typename Alg::Prim, typename Alg::Neg>;

class InterpError : public std::runtime_error {
public:
  enum class Kind { UnboundLabel, Uninterpretable, NonTerminating };
  InterpError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

// A denotation: a positive element, a semantic decomposition, or a
// command pair (which may or may not be orthogonal).
template <typename Alg>
using Denotation =
    std::variant<typename Alg::Pos, SemDec<Alg>,
                 std::pair<typename Alg::Neg, typename Alg::Pos>>;

// Interpretation of terms and types in one realisability algebra. Type
// interpretations recurse along the decomposition order and are memoised
// per molecule; a cycle in that order is reported as non-termination.
//
// The algebra must provide: carrier enumerations prims/positives/negatives,
// the orthogonality test, pat_interp / fun_interp / atom_interp, and a
// semantic context algebra over the instance's label types.
template <typename Alg, Instance Sig>
class Interpreter {
public:
  using Prim = typename Alg::Prim;
  using Pos = typename Alg::Pos;
  using Neg = typename Alg::Neg;
  using SemContext = typename Alg::SemContext;
  using SDec = SemDec<Alg>;
  using Molecule = typename Sig::Molecule;

  Interpreter(const Alg& alg, const Sig& sig) : alg_(alg), sig_(sig) {}

  const Alg& algebra() const { return alg_; }
  const Sig& instance() const { return sig_; }

  // --- types --------------------------------------------------------------

  const std::vector<Pos>& pos_molecule(const Molecule& m) {
    auto it = pos_memo_.find(m);
    if (it != pos_memo_.end()) return it->second;
    if (!in_progress_.insert(m).second)
      throw InterpError(InterpError::Kind::NonTerminating,
                        "cycle in the decomposition order");
    std::vector<Pos> out;
    for (const auto& [p, delta] : sig_.decompositions(m)) {
      for (const SDec& sd : decomposition(delta)) {
        auto v = alg_.pat_interp(p, sd);
        if (!v)
          throw InterpError(InterpError::Kind::Uninterpretable,
                            "pattern interpretation undefined");
        push_unique(out, *v);
      }
    }
    in_progress_.erase(m);
    return pos_memo_.emplace(m, std::move(out)).first->second;
  }

  std::vector<Neg> neg_molecule(const Molecule& m) {
    const std::vector<Pos>& pos = pos_molecule(m);
    std::vector<Neg> out;
    for (const Neg& n : alg_.negatives()) {
      bool all = true;
      for (const Pos& p : pos)
        if (!alg_.orthogonal(n, p)) { all = false; break; }
      if (all) out.push_back(n);
    }
    return out;
  }

  std::vector<SDec> decomposition(const TypingDecomposition<Sig>& delta) {
    using TKind = typename TypingDecomposition<Sig>::Kind;
    switch (delta.kind()) {
      case TKind::Unit:
        return {SDec::unit()};
      case TKind::PosLeaf: {
        std::vector<SDec> out;
        for (const Prim& s : alg_.atom_interp(delta.atom()))
          out.push_back(SDec::pos_leaf(s));
        return out;
      }
      case TKind::NegLeaf: {
        std::vector<SDec> out;
        for (const Neg& n : neg_molecule(delta.molecule()))
          out.push_back(SDec::neg_leaf(n));
        return out;
      }
      case TKind::Pair: {
        std::vector<SDec> left = decomposition(delta.left());
        std::vector<SDec> right = decomposition(delta.right());
        std::vector<SDec> out;
        for (const SDec& l : left)
          for (const SDec& r : right) out.push_back(SDec::pair(l, r));
        return out;
      }
    }
    return {};
  }

  // --- terms --------------------------------------------------------------

  Pos positive(const SemContext& rho, const PositiveTerm<Sig>& t) {
    SDec d = dec_term(rho, t.body());
    auto v = alg_.pat_interp(t.pattern(), d);
    if (!v)
      throw InterpError(InterpError::Kind::Uninterpretable,
                        "pattern interpretation undefined");
    return *v;
  }

  SDec dec_term(const SemContext& rho, const DecTerm<Sig>& d) {
    using DKind = typename DecTerm<Sig>::Kind;
    switch (d.kind()) {
      case DKind::Unit:
        return SDec::unit();
      case DKind::Pair:
        return SDec::pair(dec_term(rho, d.first()), dec_term(rho, d.second()));
      case DKind::Label: {
        auto v = alg_.sem_lookup_pos(rho, d.pos_label());
        if (!v)
          throw InterpError(InterpError::Kind::UnboundLabel,
                            "positive label unbound in semantic context");
        return SDec::pos_leaf(*v);
      }
      case DKind::Branches: {
        auto v = alg_.fun_interp(d.branch_map(), rho);
        if (!v)
          throw InterpError(InterpError::Kind::Uninterpretable,
                            "branch function has no denotation");
        return SDec::neg_leaf(*v);
      }
    }
    throw InterpError(InterpError::Kind::Uninterpretable, "unreachable");
  }

  std::pair<Neg, Pos> command(const SemContext& rho, const Command<Sig>& c) {
    using CKind = typename Command<Sig>::Kind;
    if (c.kind() == CKind::Select) {
      auto n = alg_.sem_lookup_neg(rho, c.neg_label());
      if (!n)
        throw InterpError(InterpError::Kind::UnboundLabel,
                          "negative label unbound in semantic context");
      return {*n, positive(rho, c.positive())};
    }
    auto n = alg_.fun_interp(c.branch_map(), rho);
    if (!n)
      throw InterpError(InterpError::Kind::Uninterpretable,
                        "branch function has no denotation");
    return {*n, positive(rho, c.positive())};
  }

  Denotation<Alg> term(const SemContext& rho, const Judgment<Sig>& j) {
    switch (j.kind()) {
      case Judgment<Sig>::Kind::Positive:
        return positive(rho, j.positive_term());
      case Judgment<Sig>::Kind::Dec:
        return dec_term(rho, j.dec_term());
      case Judgment<Sig>::Kind::Command:
        return command(rho, j.command_term());
    }
    throw InterpError(InterpError::Kind::Uninterpretable, "unreachable");
  }

  // --- contexts -----------------------------------------------------------

  // rho inhabits the interpretation of gamma when every binding of gamma is
  // covered by rho with a value in the corresponding interpretation, and
  // rho has no stable positive binding outside gamma. Extra negative or
  // slot bindings of rho are permitted.
  bool member(const typename Sig::Context& gamma, const SemContext& rho) {
    for (const auto& x : sig_.pos_domain(gamma)) {
      auto atom = sig_.lookup_pos(gamma, x);
      auto val = alg_.sem_lookup_pos(rho, x);
      if (!atom || !val) return false;
      if (!contains(alg_.atom_interp(*atom), *val)) return false;
    }
    for (const auto& x : alg_.pos_domain(rho)) {
      if (!stable_label(x)) continue;
      if (!sig_.lookup_pos(gamma, x)) return false;
    }
    for (const auto& x : sig_.neg_domain(gamma)) {
      auto mol = sig_.lookup_neg(gamma, x);
      auto val = alg_.sem_lookup_neg(rho, x);
      if (!mol || !val) return false;
      if (!contains(neg_molecule(*mol), *val)) return false;
    }
    return true;
  }

  std::vector<SemContext> members(const typename Sig::Context& gamma) {
    std::vector<SemContext> out;
    for (const SemContext& rho : alg_.member_candidates(sig_, gamma))
      if (member(gamma, rho)) out.push_back(rho);
    return out;
  }

  // --- adequacy -----------------------------------------------------------

  // The conclusion of adequacy for one checked judgment and one member rho:
  // positives land in the positive interpretation of the goal, dec terms in
  // the interpretation of their decomposition, commands in orthogonality.
  bool check_adequacy(const Judgment<Sig>& j, const SemContext& rho) {
    switch (j.kind()) {
      case Judgment<Sig>::Kind::Positive:
        return contains(pos_molecule(j.goal()), positive(rho, j.positive_term()));
      case Judgment<Sig>::Kind::Dec: {
        SDec d = dec_term(rho, j.dec_term());
        return contains(decomposition(j.delta()), d);
      }
      case Judgment<Sig>::Kind::Command: {
        auto [n, p] = command(rho, j.command_term());
        return alg_.orthogonal(n, p);
      }
    }
    return false;
  }

  // Semantic provability in a boolean algebra: the positive interpretation
  // is inhabited. Dual route to the recursive boolean evaluator.
  bool sem_provable(const Molecule& m) {
    if (!alg_.boolean())
      throw std::invalid_argument("sem_provable requires an empty orthogonality");
    return !pos_molecule(m).empty();
  }

private:
  template <typename T>
  static bool contains(const std::vector<T>& xs, const T& x) {
    return std::find(xs.begin(), xs.end(), x) != xs.end();
  }
  template <typename T>
  static void push_unique(std::vector<T>& xs, const T& x) {
    if (!contains(xs, x)) xs.push_back(x);
  }

  const Alg& alg_;
  const Sig& sig_;
  std::map<Molecule, std::vector<Pos>> pos_memo_;
  std::set<Molecule> in_progress_;
};

// --- shipped algebras -----------------------------------------------------

// The boolean model for instances with parametric contexts: all carriers
// are the one-point set and orthogonality is empty. The orth-full variant
// keeps the same carriers with the full relation; it is not boolean but
// satisfies stability outright and gives the command conclusion of adequacy
// something to say.
template <Instance Sig>
class TrivialAlgebra {
public:
  using Prim = UnitTok;
  using Pos = UnitTok;
  using Neg = UnitTok;
  using SemContext = ParametricContext<UnitTok, UnitTok>;

  explicit TrivialAlgebra(bool orth_full = false) : orth_full_(orth_full) {}

  bool boolean() const { return !orth_full_; }
  bool orthogonal(Neg, Pos) const { return orth_full_; }

  std::vector<Prim> prims() const { return {UnitTok{}}; }
  std::vector<Pos> positives() const { return {UnitTok{}}; }
  std::vector<Neg> negatives() const { return {UnitTok{}}; }

  std::optional<Pos> pat_interp(const typename Sig::Pattern&,
                                const SemDec<TrivialAlgebra>&) const {
    return UnitTok{};
  }
  std::optional<Neg> fun_interp(const BranchMap<Sig>&, const SemContext&) const {
    return UnitTok{};
  }
  std::vector<Prim> atom_interp(const typename Sig::Atom&) const {
    return {UnitTok{}};
  }

  SemContext empty_sem_context() const { return {}; }
  SemContext sem_extend(const SemContext& rho, const SemDec<TrivialAlgebra>& d) const {
    return rho.extend(d);
  }
  std::optional<Prim> sem_lookup_pos(const SemContext& rho, PosLabel x) const {
    return rho.lookup_pos(x);
  }
  std::optional<Neg> sem_lookup_neg(const SemContext& rho, NegLabel x) const {
    return rho.lookup_neg(x);
  }
  std::vector<PosLabel> pos_domain(const SemContext& rho) const {
    return rho.pos_domain();
  }
  std::vector<NegLabel> neg_domain(const SemContext& rho) const {
    return rho.neg_domain();
  }

  // All semantic contexts shaped like gamma: with one-point carriers there
  // is exactly one.
  std::vector<SemContext> member_candidates(const Sig& sig,
                                            const typename Sig::Context& gamma) const {
    std::vector<UnitTok> pos(sig.pos_domain(gamma).size());
    std::vector<UnitTok> neg(sig.neg_domain(gamma).size());
    return {SemContext(std::move(pos), std::move(neg))};
  }

private:
  bool orth_full_;
};

inline const TrivialAlgebra<k1::Signature>& k1_trivial_model() {
  static const TrivialAlgebra<k1::Signature> alg(false);
  return alg;
}
inline const TrivialAlgebra<k1::Signature>& k1_orth_full_model() {
  static const TrivialAlgebra<k1::Signature> alg(true);
  return alg;
}

// A boolean model for the two-sided instance. Label denotations are side
// tokens, fixed by the atom interpretation, so the semantic context can
// mirror the stable stores and the right slot of the typing context. The
// overwriting discipline is approximated on the semantic side: negative
// bindings are recorded both at the next stable level and in the slot,
// which keeps every typing binding covered under parallel extension.
class JBooleanAlgebra {
public:
  enum class Tok { Right, Left };

  using Prim = Tok;
  using Pos = UnitTok;
  using Neg = Tok;

  struct SemContext {
    std::vector<Tok> pos_stable;
    std::optional<Tok> pos_slot;
    std::vector<Tok> neg_stable;
    std::optional<Tok> neg_slot;

    friend bool operator==(const SemContext&, const SemContext&) = default;
  };

  bool boolean() const { return true; }
  bool orthogonal(Neg, Pos) const { return false; }

  std::vector<Prim> prims() const { return {Tok::Right, Tok::Left}; }
  std::vector<Pos> positives() const { return {UnitTok{}}; }
  std::vector<Neg> negatives() const { return {Tok::Right, Tok::Left}; }

  std::optional<Pos> pat_interp(const j::Pattern&,
                                const SemDec<JBooleanAlgebra>&) const {
    return UnitTok{};
  }
  std::optional<Neg> fun_interp(const BranchMap<j::Signature>&,
                                const SemContext&) const {
    return Tok::Left;
  }
  std::vector<Prim> atom_interp(const j::Positioned& a) const {
    return {a.side == j::Side::Right ? Tok::Right : Tok::Left};
  }

  SemContext empty_sem_context() const { return {}; }

  SemContext sem_extend(const SemContext& rho,
                        const SemDec<JBooleanAlgebra>& d) const {
    SemContext out = rho;
    d.for_each_leaf(
        [&](const Prim& s) {
          if (s == Tok::Right) out.pos_stable.push_back(s);
          else out.pos_slot = s;
        },
        [&](const Neg& n) {
          out.neg_stable.push_back(n);
          out.neg_slot = n;
        });
    return out;
  }

  std::optional<Prim> sem_lookup_pos(const SemContext& rho, j::PosLabel x) const {
    switch (x.kind) {
      case j::PosLabel::Kind::Stable:
        if (x.level < 0 || x.level >= static_cast<int>(rho.pos_stable.size()))
          return {};
        return rho.pos_stable[static_cast<std::size_t>(x.level)];
      case j::PosLabel::Kind::RightSlot:
        return rho.pos_slot;
      case j::PosLabel::Kind::Absurd:
        return Tok::Left;
    }
    return {};
  }
  std::optional<Neg> sem_lookup_neg(const SemContext& rho, j::NegLabel x) const {
    switch (x.kind) {
      case j::NegLabel::Kind::Stable:
        if (x.level < 0 || x.level >= static_cast<int>(rho.neg_stable.size()))
          return {};
        return rho.neg_stable[static_cast<std::size_t>(x.level)];
      case j::NegLabel::Kind::RightSlot:
        return rho.neg_slot;
    }
    return {};
  }

  std::vector<j::PosLabel> pos_domain(const SemContext& rho) const {
    std::vector<j::PosLabel> out;
    for (int i = 0; i < static_cast<int>(rho.pos_stable.size()); ++i)
      out.push_back(j::PosLabel::stable(i));
    if (rho.pos_slot) out.push_back(j::PosLabel::right_slot());
    out.push_back(j::PosLabel::absurd());
    return out;
  }
  std::vector<j::NegLabel> neg_domain(const SemContext& rho) const {
    std::vector<j::NegLabel> out;
    for (int i = 0; i < static_cast<int>(rho.neg_stable.size()); ++i)
      out.push_back(j::NegLabel::stable(i));
    if (rho.neg_slot) out.push_back(j::NegLabel::right_slot());
    return out;
  }

  std::vector<SemContext> member_candidates(const j::Signature&,
                                            const j::Context& gamma) const {
    std::vector<SemContext> out{SemContext{}};
    auto expand = [&](auto write) {
      std::vector<SemContext> next;
      for (const SemContext& rho : out)
        for (Tok t : {Tok::Right, Tok::Left}) {
          SemContext r = rho;
          write(r, t);
          next.push_back(r);
        }
      out = std::move(next);
    };
    for (std::size_t i = 0; i < gamma.pos_stable().size(); ++i)
      expand([](SemContext& r, Tok t) { r.pos_stable.push_back(t); });
    if (gamma.right_atom())
      expand([](SemContext& r, Tok t) { r.pos_slot = t; });
    for (std::size_t i = 0; i < gamma.neg_stable().size(); ++i)
      expand([](SemContext& r, Tok t) { r.neg_stable.push_back(t); });
    if (gamma.right_mol())
      expand([](SemContext& r, Tok t) { r.neg_slot = t; });
    return out;
  }
};

inline const JBooleanAlgebra& j_positional_model() {
  static const JBooleanAlgebra alg;
  return alg;
}

// --- hypothesis sampling ----------------------------------------------------

// Property evidence for the two Adequacy Lemma hypotheses. The samplers are
// caller-supplied; the harness evaluates the implications and reports any
// counterexample.
template <typename Alg, typename Sig>
struct CorrelationSample {
  typename Sig::Context gamma;
  typename Alg::SemContext rho;
  TypingDecomposition<Sig> delta;
  SemDec<Alg> sdec;
};

template <typename Alg, typename Sig>
struct StabilitySample {
  BranchMap<Sig> branches;
  typename Sig::Pattern pattern;
  TypingDecomposition<Sig> delta;
  SemDec<Alg> sdec;
  typename Alg::SemContext rho;
};

struct HypothesesReport {
  int correlation_checked = 0;
  int correlation_vacuous = 0;
  int correlation_failures = 0;
  int stability_checked = 0;
  int stability_vacuous = 0;
  int stability_skipped = 0;
  int stability_failures = 0;
  bool ok() const { return correlation_failures == 0 && stability_failures == 0; }
};

template <typename T>
bool contains_dec(const std::vector<T>& xs, const T& x) {
  return std::find(xs.begin(), xs.end(), x) != xs.end();
}

template <typename Alg, Instance Sig>
HypothesesReport check_hypotheses_sampled(
    Interpreter<Alg, Sig>& interp,
    const std::function<CorrelationSample<Alg, Sig>()>& correlation,
    const std::function<StabilitySample<Alg, Sig>()>& stability, int samples) {
  const Alg& alg = interp.algebra();
  const Sig& sig = interp.instance();
  HypothesesReport report;

  for (int i = 0; i < samples; ++i) {
    CorrelationSample<Alg, Sig> s = correlation();
    bool member = interp.member(s.gamma, s.rho);
    bool in_delta = contains_dec(interp.decomposition(s.delta), s.sdec);
    if (!member || !in_delta) {
      ++report.correlation_vacuous;
      continue;
    }
    ++report.correlation_checked;
    if (!interp.member(sig.extend(s.gamma, s.delta),
                       alg.sem_extend(s.rho, s.sdec)))
      ++report.correlation_failures;
  }

  for (int i = 0; i < samples; ++i) {
    StabilitySample<Alg, Sig> s = stability();
    bool in_delta = contains_dec(interp.decomposition(s.delta), s.sdec);
    auto branch = s.branches.find(s.pattern);
    if (!in_delta || branch == s.branches.end()) {
      ++report.stability_vacuous;
      continue;
    }
    bool premise;
    try {
      auto pair = interp.command(alg.sem_extend(s.rho, s.sdec), branch->second);
      premise = alg.orthogonal(pair.first, pair.second);
    } catch (const InterpError&) {
      ++report.stability_skipped;  // sample not evaluable under rho
      continue;
    }
    if (!premise) {
      ++report.stability_vacuous;
      continue;
    }
    ++report.stability_checked;
    auto fn = alg.fun_interp(s.branches, s.rho);
    auto pn = alg.pat_interp(s.pattern, s.sdec);
    if (!fn || !pn || !alg.orthogonal(*fn, *pn)) ++report.stability_failures;
  }
  return report;
}

}  // namespace focal
