#pragma once

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "focal/context.hpp"
#include "focal/decomposition.hpp"
#include "focal/terms.hpp"

namespace focal {

template <typename Sig>
using TypingDecomposition =
    Decomposition<typename Sig::Atom, typename Sig::Molecule>;

template <typename Sig>
using DecompList =
    std::vector<std::pair<typename Sig::Pattern, TypingDecomposition<Sig>>>;

// An instance signature bundles the parameters of the focussed system:
// atom/molecule carriers, the pattern algebra with its structure map, the
// decomposition relation (as an enumerator), and a context algebra.
template <typename S>
concept Instance = requires(const S& sig, const typename S::Molecule& m,
                            const typename S::Pattern& p,
                            const typename S::Context& ctx,
                            const typename S::PosLabel& xp,
                            const typename S::NegLabel& xn,
                            const TypingDecomposition<S>& delta) {
  { sig.decompositions(m) } -> std::convertible_to<DecompList<S>>;
  { sig.pattern_structure(p) } -> std::convertible_to<DecStructure>;
  { sig.lookup_pos(ctx, xp) }
      -> std::convertible_to<std::optional<typename S::Atom>>;
  { sig.lookup_neg(ctx, xn) }
      -> std::convertible_to<std::optional<typename S::Molecule>>;
  { sig.extend(ctx, delta) } -> std::convertible_to<typename S::Context>;
  { sig.empty_context() } -> std::convertible_to<typename S::Context>;
  { sig.pos_domain(ctx) }
      -> std::convertible_to<std::vector<typename S::PosLabel>>;
  { sig.neg_domain(ctx) }
      -> std::convertible_to<std::vector<typename S::NegLabel>>;
};

enum class CheckErrorKind {
  UnboundLabel,
  InitMismatch,
  ShapeMismatch,
  AsyncDomainMismatch,
  NoSuchDecomposition,
};

inline const char* to_string(CheckErrorKind k) {
  switch (k) {
    case CheckErrorKind::UnboundLabel: return "UnboundLabel";
    case CheckErrorKind::InitMismatch: return "InitMismatch";
    case CheckErrorKind::ShapeMismatch: return "ShapeMismatch";
    case CheckErrorKind::AsyncDomainMismatch: return "AsyncDomainMismatch";
    case CheckErrorKind::NoSuchDecomposition: return "NoSuchDecomposition";
  }
  return "?";
}

// Path into the term: child indices from the root. For a positive term the
// body is child 0; for a pair, components are 0 and 1; for a branch map,
// branches are numbered in key order; for select the positive is child 0;
// for cut the branch side is child 0 and the positive child 1.
struct CheckError {
  CheckErrorKind kind;
  std::vector<int> path;
  std::string detail;
};

class CheckResult {
public:
  static CheckResult accepted(std::vector<std::string> trace) {
    CheckResult r;
    r.ok_ = true;
    r.trace_ = std::move(trace);
    return r;
  }
  static CheckResult rejected(CheckError e) {
    CheckResult r;
    r.ok_ = false;
    r.error_ = std::move(e);
    return r;
  }
  static CheckResult rejected(CheckErrorKind kind, std::string detail) {
    return rejected(CheckError{kind, {}, std::move(detail)});
  }

  bool ok() const { return ok_; }
  const std::vector<std::string>& trace() const { return trace_; }
  const CheckError& error() const { return error_; }

  CheckResult with_path_prefix(int child) && {
    if (!ok_) error_.path.insert(error_.path.begin(), child);
    return std::move(*this);
  }

private:
  bool ok_ = false;
  std::vector<std::string> trace_;
  CheckError error_ = {CheckErrorKind::ShapeMismatch, {}, {}};
};

inline std::string format_path(const std::vector<int>& path) {
  if (path.empty()) return "root";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(path[i]);
  }
  return out;
}

namespace detail {

inline void append_trace(std::vector<std::string>& into,
                         const std::vector<std::string>& from) {
  into.insert(into.end(), from.begin(), from.end());
}

}  // namespace detail

template <Instance Sig>
CheckResult check_pos(const Sig& sig, const typename Sig::Context& ctx,
                      const PositiveTerm<Sig>& t,
                      const typename Sig::Molecule& goal);

template <Instance Sig>
CheckResult check_dec(const Sig& sig, const typename Sig::Context& ctx,
                      const DecTerm<Sig>& d,
                      const TypingDecomposition<Sig>& delta);

template <Instance Sig>
CheckResult check_cmd(const Sig& sig, const typename Sig::Context& ctx,
                      const Command<Sig>& c);

template <Instance Sig>
CheckResult check_async(const Sig& sig, const typename Sig::Context& ctx,
                        const BranchMap<Sig>& f,
                        const typename Sig::Molecule& m);

// Rule sync: t = p.d proves M iff some decomposition of M along p is
// inhabited by d. All candidates with the matching pattern are tried, in
// enumeration order, so relational instances stay supported.
template <Instance Sig>
CheckResult check_pos(const Sig& sig, const typename Sig::Context& ctx,
                      const PositiveTerm<Sig>& t,
                      const typename Sig::Molecule& goal) {
  const DecompList<Sig> decs = sig.decompositions(goal);
  bool pattern_seen = false;
  std::optional<CheckResult> last_failure;
  for (const auto& [p, delta] : decs) {
    if (!(p == t.pattern())) continue;
    pattern_seen = true;
    CheckResult sub = check_dec(sig, ctx, t.body(), delta);
    if (sub.ok()) {
      std::vector<std::string> trace{"sync"};
      detail::append_trace(trace, sub.trace());
      return CheckResult::accepted(std::move(trace));
    }
    last_failure = std::move(sub).with_path_prefix(0);
  }
  if (!pattern_seen)
    return CheckResult::rejected(CheckErrorKind::NoSuchDecomposition,
                                 "pattern decomposes nothing in the goal");
  return std::move(*last_failure);
}

template <Instance Sig>
CheckResult check_dec(const Sig& sig, const typename Sig::Context& ctx,
                      const DecTerm<Sig>& d,
                      const TypingDecomposition<Sig>& delta) {
  using DKind = typename DecTerm<Sig>::Kind;
  using TKind = typename TypingDecomposition<Sig>::Kind;

  switch (d.kind()) {
    case DKind::Unit:
      if (delta.kind() != TKind::Unit)
        return CheckResult::rejected(CheckErrorKind::ShapeMismatch,
                                     "unit term against non-unit decomposition");
      return CheckResult::accepted({"unit"});

    case DKind::Pair: {
      if (delta.kind() != TKind::Pair)
        return CheckResult::rejected(CheckErrorKind::ShapeMismatch,
                                     "pair term against non-pair decomposition");
      CheckResult l = check_dec(sig, ctx, d.first(), delta.left());
      if (!l.ok()) return std::move(l).with_path_prefix(0);
      CheckResult r = check_dec(sig, ctx, d.second(), delta.right());
      if (!r.ok()) return std::move(r).with_path_prefix(1);
      std::vector<std::string> trace{"pair"};
      detail::append_trace(trace, l.trace());
      detail::append_trace(trace, r.trace());
      return CheckResult::accepted(std::move(trace));
    }

    case DKind::Label: {
      if (delta.kind() != TKind::PosLeaf)
        return CheckResult::rejected(CheckErrorKind::ShapeMismatch,
                                     "label against non-atom decomposition");
      std::optional<typename Sig::Atom> bound =
          sig.lookup_pos(ctx, d.pos_label());
      if (!bound)
        return CheckResult::rejected(CheckErrorKind::UnboundLabel,
                                     "positive label not bound in context");
      if (!(*bound == delta.atom()))
        return CheckResult::rejected(CheckErrorKind::InitMismatch,
                                     "label bound to a different atom");
      return CheckResult::accepted({"init"});
    }

    case DKind::Branches: {
      if (delta.kind() != TKind::NegLeaf)
        return CheckResult::rejected(CheckErrorKind::ShapeMismatch,
                                     "branches against non-molecule leaf");
      return check_async(sig, ctx, d.branch_map(), delta.molecule());
    }
  }
  return CheckResult::rejected(CheckErrorKind::ShapeMismatch, "unreachable");
}

// Rule async: the branch domain must be exactly the patterns that decompose
// M, and every branch command must check in the extended context.
template <Instance Sig>
CheckResult check_async(const Sig& sig, const typename Sig::Context& ctx,
                        const BranchMap<Sig>& f,
                        const typename Sig::Molecule& m) {
  const DecompList<Sig> decs = sig.decompositions(m);

  std::set<typename Sig::Pattern> required;
  for (const auto& [p, delta] : decs) required.insert(p);
  std::set<typename Sig::Pattern> given;
  for (const auto& [p, c] : f) given.insert(p);
  if (required != given) {
    std::string detail = given.size() > required.size()
                             ? "branch map has extra patterns"
                             : "branch map is missing patterns";
    return CheckResult::rejected(CheckErrorKind::AsyncDomainMismatch, detail);
  }

  std::vector<std::string> trace{"async"};
  for (const auto& [p, delta] : decs) {
    const Command<Sig>& body = f.at(p);
    CheckResult sub = check_cmd(sig, sig.extend(ctx, delta), body);
    if (!sub.ok()) {
      int index = static_cast<int>(std::distance(f.begin(), f.find(p)));
      return std::move(sub).with_path_prefix(index);
    }
    detail::append_trace(trace, sub.trace());
  }
  return CheckResult::accepted(std::move(trace));
}

template <Instance Sig>
CheckResult check_cmd(const Sig& sig, const typename Sig::Context& ctx,
                      const Command<Sig>& c) {
  using CKind = typename Command<Sig>::Kind;
  if (c.kind() == CKind::Select) {
    std::optional<typename Sig::Molecule> m = sig.lookup_neg(ctx, c.neg_label());
    if (!m)
      return CheckResult::rejected(CheckErrorKind::UnboundLabel,
                                   "negative label not bound in context");
    CheckResult sub = check_pos(sig, ctx, c.positive(), *m);
    if (!sub.ok()) return std::move(sub).with_path_prefix(0);
    std::vector<std::string> trace{"select"};
    detail::append_trace(trace, sub.trace());
    return CheckResult::accepted(std::move(trace));
  }

  // cut: refute the annotated molecule and prove it.
  CheckResult refute = check_async(sig, ctx, c.branch_map(), c.cut_molecule());
  if (!refute.ok()) return std::move(refute).with_path_prefix(0);
  CheckResult prove = check_pos(sig, ctx, c.positive(), c.cut_molecule());
  if (!prove.ok()) return std::move(prove).with_path_prefix(1);
  std::vector<std::string> trace{"cut"};
  detail::append_trace(trace, refute.trace());
  detail::append_trace(trace, prove.trace());
  return CheckResult::accepted(std::move(trace));
}

// --- Judgments ------------------------------------------------------------

// One of the three sequent kinds, packaged with its context and term.
template <typename Sig>
class Judgment {
public:
  enum class Kind { Positive, Dec, Command };

  static Judgment positive(typename Sig::Context ctx, PositiveTerm<Sig> t,
                           typename Sig::Molecule goal) {
    Judgment j;
    j.kind_ = Kind::Positive;
    j.ctx_ = std::move(ctx);
    j.pos_ = std::move(t);
    j.goal_ = std::move(goal);
    return j;
  }
  static Judgment dec(typename Sig::Context ctx, DecTerm<Sig> d,
                      TypingDecomposition<Sig> delta) {
    Judgment j;
    j.kind_ = Kind::Dec;
    j.ctx_ = std::move(ctx);
    j.dec_ = std::move(d);
    j.delta_ = std::move(delta);
    return j;
  }
  static Judgment command(typename Sig::Context ctx, Command<Sig> c) {
    Judgment j;
    j.kind_ = Kind::Command;
    j.ctx_ = std::move(ctx);
    j.cmd_ = std::move(c);
    return j;
  }

  Kind kind() const { return kind_; }
  const typename Sig::Context& context() const { return ctx_; }
  const PositiveTerm<Sig>& positive_term() const { return *pos_; }
  const typename Sig::Molecule& goal() const { return *goal_; }
  const DecTerm<Sig>& dec_term() const { return *dec_; }
  const TypingDecomposition<Sig>& delta() const { return *delta_; }
  const Command<Sig>& command_term() const { return *cmd_; }

private:
  Judgment() = default;
  Kind kind_ = Kind::Command;
  typename Sig::Context ctx_;
  std::optional<PositiveTerm<Sig>> pos_;
  std::optional<typename Sig::Molecule> goal_;
  std::optional<DecTerm<Sig>> dec_;
  std::optional<TypingDecomposition<Sig>> delta_;
  std::optional<Command<Sig>> cmd_;
};

template <Instance Sig>
CheckResult check(const Sig& sig, const Judgment<Sig>& j) {
  switch (j.kind()) {
    case Judgment<Sig>::Kind::Positive:
      return check_pos(sig, j.context(), j.positive_term(), j.goal());
    case Judgment<Sig>::Kind::Dec:
      return check_dec(sig, j.context(), j.dec_term(), j.delta());
    case Judgment<Sig>::Kind::Command:
      return check_cmd(sig, j.context(), j.command_term());
  }
  return CheckResult::rejected(CheckErrorKind::ShapeMismatch, "unreachable");
}

// --- Well-foundedness ---------------------------------------------------

// M' precedes M when *M' appears as a leaf of some decomposition of M. The
// interpretations of types recurse along this order, so it must be acyclic.
template <typename Sig>
struct WellFoundedReport {
  enum class Status { Ok, UniverseNotClosed, CycleFound };
  Status status = Status::Ok;
  // (M', M) with M' preceding M, for every edge over the universe.
  std::vector<std::pair<typename Sig::Molecule, typename Sig::Molecule>> edges;
  std::vector<typename Sig::Molecule> cycle;  // witness when CycleFound
  std::optional<typename Sig::Molecule> missing;  // when UniverseNotClosed
  bool ok() const { return status == Status::Ok; }
};

template <Instance Sig>
WellFoundedReport<Sig> check_well_founded(
    const Sig& sig, const std::vector<typename Sig::Molecule>& universe) {
  using M = typename Sig::Molecule;
  WellFoundedReport<Sig> report;

  std::set<M> in_universe(universe.begin(), universe.end());
  std::map<M, std::vector<M>> preds;  // M -> list of M' with M' before M
  for (const M& m : universe) {
    for (const auto& [p, delta] : sig.decompositions(m)) {
      for (const M& leaf : delta.molecule_leaves()) {
        if (!in_universe.count(leaf)) {
          report.status = WellFoundedReport<Sig>::Status::UniverseNotClosed;
          report.missing = leaf;
          return report;
        }
        report.edges.emplace_back(leaf, m);
        preds[m].push_back(leaf);
      }
    }
  }

  // Depth-first search for a cycle in the precedence graph.
  std::map<M, int> state;  // 0 unseen, 1 on stack, 2 done
  std::vector<M> stack;
  auto dfs = [&](auto&& self, const M& m) -> bool {
    state[m] = 1;
    stack.push_back(m);
    for (const M& before : preds[m]) {
      auto it = state.find(before);
      int s = it == state.end() ? 0 : it->second;
      if (s == 1) {
        auto start = std::find(stack.begin(), stack.end(), before);
        report.cycle.assign(start, stack.end());
        return false;
      }
      if (s == 0 && !self(self, before)) return false;
    }
    stack.pop_back();
    state[m] = 2;
    return true;
  };
  for (const M& m : universe) {
    if (state[m] == 0 && !dfs(dfs, m)) {
      report.status = WellFoundedReport<Sig>::Status::CycleFound;
      return report;
    }
  }
  return report;
}

}  // namespace focal
