#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "focal/kernel.hpp"

namespace focal {

// Bounds for exhaustive proof search. Depth counts phase alternations:
// entering a synchronous proof or an asynchronous case split costs one;
// the structural rules inside a phase are free.
struct SearchBudget {
  int depth = 4;
  std::optional<int> branch_cap;  // max branches per async node

  static SearchBudget at_depth(int d) { return SearchBudget{d, {}}; }
};

// Exhaustive search over one instance, deterministic: decompositions in
// enumeration order, labels in ascending order, select before cut, cut
// candidates in the order given. Every returned term is re-checked against
// the kernel before being handed out.
template <Instance Sig>
class Searcher {
public:
  Searcher(const Sig& sig, std::vector<typename Sig::Molecule> cut_candidates)
      : sig_(sig), cuts_(std::move(cut_candidates)) {}

  std::optional<PositiveTerm<Sig>> positive(const typename Sig::Context& ctx,
                                            const typename Sig::Molecule& goal,
                                            SearchBudget budget) const {
    for (int d = 1; d <= budget.depth; ++d)
      if (auto t = pos_at(ctx, goal, d, budget)) {
        assert_checks(check_pos(sig_, ctx, *t, goal));
        return t;
      }
    return {};
  }

  std::optional<DecTerm<Sig>> dec(const typename Sig::Context& ctx,
                                  const TypingDecomposition<Sig>& delta,
                                  SearchBudget budget) const {
    for (int d = 0; d <= budget.depth; ++d)
      if (auto t = dec_at(ctx, delta, d, budget)) {
        assert_checks(check_dec(sig_, ctx, *t, delta));
        return t;
      }
    return {};
  }

  std::optional<Command<Sig>> command(const typename Sig::Context& ctx,
                                      SearchBudget budget) const {
    for (int d = 1; d <= budget.depth; ++d)
      if (auto c = cmd_at(ctx, d, budget)) {
        assert_checks(check_cmd(sig_, ctx, *c));
        return c;
      }
    return {};
  }

private:
  static void assert_checks(const CheckResult& r) {
    if (!r.ok())
      throw std::logic_error("search produced a term the kernel rejects");
  }

  std::optional<PositiveTerm<Sig>> pos_at(const typename Sig::Context& ctx,
                                          const typename Sig::Molecule& goal,
                                          int depth, SearchBudget budget) const {
    if (depth < 1) return {};
    for (const auto& [p, delta] : sig_.decompositions(goal))
      if (auto d = dec_at(ctx, delta, depth - 1, budget))
        return PositiveTerm<Sig>(p, *d);
    return {};
  }

  std::optional<DecTerm<Sig>> dec_at(const typename Sig::Context& ctx,
                                     const TypingDecomposition<Sig>& delta,
                                     int depth, SearchBudget budget) const {
    using TKind = typename TypingDecomposition<Sig>::Kind;
    switch (delta.kind()) {
      case TKind::Unit:
        return DecTerm<Sig>::unit();
      case TKind::Pair: {
        // Components are independent: first solutions compose.
        auto d1 = dec_at(ctx, delta.left(), depth, budget);
        if (!d1) return {};
        auto d2 = dec_at(ctx, delta.right(), depth, budget);
        if (!d2) return {};
        return DecTerm<Sig>::pair(*d1, *d2);
      }
      case TKind::PosLeaf: {
        for (const auto& x : sig_.pos_domain(ctx)) {
          auto bound = sig_.lookup_pos(ctx, x);
          if (bound && *bound == delta.atom()) return DecTerm<Sig>::label(x);
        }
        return {};
      }
      case TKind::NegLeaf: {
        if (depth < 1) return {};
        auto f = branches_at(ctx, delta.molecule(), depth - 1, budget);
        if (!f) return {};
        return DecTerm<Sig>::branches(std::move(*f));
      }
    }
    return {};
  }

  // One command per decomposition of m, each found independently.
  std::optional<BranchMap<Sig>> branches_at(const typename Sig::Context& ctx,
                                            const typename Sig::Molecule& m,
                                            int depth, SearchBudget budget) const {
    auto decs = sig_.decompositions(m);
    if (budget.branch_cap && static_cast<int>(decs.size()) > *budget.branch_cap)
      return {};
    BranchMap<Sig> f;
    for (const auto& [p, delta] : decs) {
      if (f.count(p)) continue;
      auto c = cmd_at(sig_.extend(ctx, delta), depth, budget);
      if (!c) return {};
      f.emplace(p, std::move(*c));
    }
    return f;
  }

  std::optional<Command<Sig>> cmd_at(const typename Sig::Context& ctx, int depth,
                                     SearchBudget budget) const {
    if (depth < 1) return {};
    for (const auto& x : sig_.neg_domain(ctx)) {
      auto m = sig_.lookup_neg(ctx, x);
      if (!m) continue;
      if (auto t = pos_at(ctx, *m, depth, budget))
        return Command<Sig>::select(x, *t);
    }
    for (const auto& m : cuts_) {
      auto f = branches_at(ctx, m, depth - 1, budget);
      if (!f) continue;
      if (auto t = pos_at(ctx, m, depth, budget))
        return Command<Sig>::cut(std::move(*f), m, *t);
    }
    return {};
  }

  const Sig& sig_;
  std::vector<typename Sig::Molecule> cuts_;
};

// Searches for a closed command from the given start context, with cut
// molecules drawn from the universe. Finding one would contradict the
// boolean-model consistency argument, so a hit is an implementation bug.
template <Instance Sig>
struct SweepReport {
  bool found = false;
  std::optional<Command<Sig>> counterexample;
  int depth = 0;
  std::size_t candidates = 0;
};

template <Instance Sig>
SweepReport<Sig> consistency_sweep(const Sig& sig,
                                   const std::vector<typename Sig::Molecule>& universe,
                                   int depth,
                                   const typename Sig::Context& start) {
  Searcher<Sig> searcher(sig, universe);
  SweepReport<Sig> report;
  report.depth = depth;
  report.candidates = universe.size();
  if (auto c = searcher.command(start, SearchBudget::at_depth(depth))) {
    report.found = true;
    report.counterexample = std::move(c);
  }
  return report;
}

template <Instance Sig>
SweepReport<Sig> consistency_sweep(const Sig& sig,
                                   const std::vector<typename Sig::Molecule>& universe,
                                   int depth) {
  return consistency_sweep(sig, universe, depth, sig.empty_context());
}

}  // namespace focal
