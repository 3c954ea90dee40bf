#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "focal/kernel.hpp"

namespace focal {

// Head-reduction machine for commands. Environments bind positive labels to
// opaque tokens and negative labels to refutation values: either a closure
// (a branch map with its captured environment) or an opaque constant
// standing for the surrounding context. Reaching an opaque constant is
// normal termination; everything else abnormal is reported as Stuck.

struct Token {
  int id = 0;
  friend bool operator==(Token, Token) = default;
};

template <Instance Sig> struct MachineEnv;

template <Instance Sig>
struct NegVal {
  // Opaque when env is null; otherwise a closure over branches.
  BranchMap<Sig> branches;
  std::shared_ptr<const MachineEnv<Sig>> env;
  std::string name;  // opaque constants only

  static NegVal opaque(std::string name) { return {{}, nullptr, std::move(name)}; }
  static NegVal closure(BranchMap<Sig> f, MachineEnv<Sig> captured) {
    return {std::move(f),
            std::make_shared<const MachineEnv<Sig>>(std::move(captured)),
            {}};
  }
  bool is_opaque() const { return env == nullptr; }

  // Closures compare by captured-environment identity.
  friend bool operator==(const NegVal& a, const NegVal& b) {
    return a.env == b.env && a.name == b.name && a.branches == b.branches;
  }
};

// A negative binding remembers the molecule it refutes; later selections
// look the decomposition up by pattern against it.
template <Instance Sig>
struct NegEntry {
  NegVal<Sig> value;
  typename Sig::Molecule type;
};

template <Instance Sig>
using MachineValue = Decomposition<Token, NegVal<Sig>>;

template <Instance Sig>
struct MachineEnv {
  std::vector<Token> pos_stable;
  std::vector<NegEntry<Sig>> neg_stable;
  std::optional<Token> slot_atom;
  std::optional<NegEntry<Sig>> slot_mol;
  std::optional<Token> absurd;
};

template <Instance Sig>
struct Config {
  MachineEnv<Sig> env;
  Command<Sig> command;
};

enum class StuckReason {
  UnboundLabel,
  MissingBranch,
  ShapeMismatch,
  NoSuchDecomposition,
};

inline const char* to_string(StuckReason r) {
  switch (r) {
    case StuckReason::UnboundLabel: return "UnboundLabel";
    case StuckReason::MissingBranch: return "MissingBranch";
    case StuckReason::ShapeMismatch: return "ShapeMismatch";
    case StuckReason::NoSuchDecomposition: return "NoSuchDecomposition";
  }
  return "?";
}

// An environment of opaque bindings shaped after a typing context: fresh
// tokens for the positive entries, opaque constants tagged with the stored
// molecule for the negative ones.
template <Instance Sig>
MachineEnv<Sig> opaque_env(const Sig& sig, const typename Sig::Context& ctx) {
  MachineEnv<Sig> env;
  int fresh = 0;
  for (const auto& x : sig.pos_domain(ctx)) {
    LabelAddress addr = sig.pos_label_address(x);
    switch (addr.place) {
      case StorePlace::Stable: env.pos_stable.push_back(Token{fresh++}); break;
      case StorePlace::Slot: env.slot_atom = Token{fresh++}; break;
      case StorePlace::Reserved: env.absurd = Token{fresh++}; break;
    }
  }
  int k = 0;
  for (const auto& x : sig.neg_domain(ctx)) {
    auto m = sig.lookup_neg(ctx, x);
    if (!m) continue;
    NegEntry<Sig> entry{NegVal<Sig>::opaque("k" + std::to_string(k++)), *m};
    LabelAddress addr = sig.neg_label_address(x);
    if (addr.place == StorePlace::Slot) env.slot_mol = std::move(entry);
    else env.neg_stable.push_back(std::move(entry));
  }
  return env;
}

template <Instance Sig>
std::variant<MachineValue<Sig>, StuckReason> eval_dec(const Sig& sig,
                                                      const MachineEnv<Sig>& env,
                                                      const DecTerm<Sig>& d) {
  using V = MachineValue<Sig>;
  using DKind = typename DecTerm<Sig>::Kind;
  switch (d.kind()) {
    case DKind::Unit:
      return V::unit();
    case DKind::Pair: {
      auto l = eval_dec(sig, env, d.first());
      if (auto* r = std::get_if<StuckReason>(&l)) return *r;
      auto r = eval_dec(sig, env, d.second());
      if (auto* e = std::get_if<StuckReason>(&r)) return *e;
      return V::pair(std::get<V>(l), std::get<V>(r));
    }
    case DKind::Branches:
      return V::neg_leaf(NegVal<Sig>::closure(d.branch_map(), env));
    case DKind::Label: {
      LabelAddress addr = sig.pos_label_address(d.pos_label());
      switch (addr.place) {
        case StorePlace::Stable:
          if (addr.level < 0 ||
              addr.level >= static_cast<int>(env.pos_stable.size()))
            return StuckReason::UnboundLabel;
          return V::pos_leaf(env.pos_stable[static_cast<std::size_t>(addr.level)]);
        case StorePlace::Slot:
          if (!env.slot_atom) return StuckReason::UnboundLabel;
          return V::pos_leaf(*env.slot_atom);
        case StorePlace::Reserved:
          if (!env.absurd) return StuckReason::UnboundLabel;
          return V::pos_leaf(*env.absurd);
      }
      return StuckReason::UnboundLabel;
    }
  }
  return StuckReason::ShapeMismatch;
}

// Extends an environment by an evaluated decomposition, walking the typing
// decomposition in parallel: the typing side decides where each leaf goes
// and tags negative bindings with their molecule.
template <Instance Sig>
std::optional<StuckReason> env_extend(const Sig& sig, MachineEnv<Sig>& env,
                                      const TypingDecomposition<Sig>& delta,
                                      const MachineValue<Sig>& value) {
  using TKind = typename TypingDecomposition<Sig>::Kind;
  using VKind = typename MachineValue<Sig>::Kind;
  switch (delta.kind()) {
    case TKind::Unit:
      if (value.kind() != VKind::Unit) return StuckReason::ShapeMismatch;
      return {};
    case TKind::Pair: {
      if (value.kind() != VKind::Pair) return StuckReason::ShapeMismatch;
      if (auto e = env_extend(sig, env, delta.left(), value.left())) return e;
      return env_extend(sig, env, delta.right(), value.right());
    }
    case TKind::PosLeaf: {
      if (value.kind() != VKind::PosLeaf) return StuckReason::ShapeMismatch;
      if (sig.atom_to_slot(delta.atom())) {
        env.slot_atom = value.atom();
        env.slot_mol.reset();
      } else {
        env.pos_stable.push_back(value.atom());
      }
      return {};
    }
    case TKind::NegLeaf: {
      if (value.kind() != VKind::NegLeaf) return StuckReason::ShapeMismatch;
      NegEntry<Sig> entry{value.molecule(), delta.molecule()};
      if (sig.molecule_to_slot(delta.molecule())) {
        env.slot_mol = std::move(entry);
        env.slot_atom.reset();
      } else {
        env.neg_stable.push_back(std::move(entry));
      }
      return {};
    }
  }
  return StuckReason::ShapeMismatch;
}

template <Instance Sig>
struct StepResult {
  enum class Kind { Next, Halt, Stuck };
  Kind kind;
  std::optional<Config<Sig>> next;   // Kind::Next
  std::string opaque_name;           // Kind::Halt
  std::optional<StuckReason> error;  // Kind::Stuck

  static StepResult make_next(Config<Sig> cfg) {
    return {Kind::Next, std::move(cfg), {}, {}};
  }
  static StepResult make_halt(std::string name) {
    return {Kind::Halt, {}, std::move(name), {}};
  }
  static StepResult make_stuck(StuckReason r) { return {Kind::Stuck, {}, {}, r}; }
};

namespace detail {

// Shared tail of both command forms:  < f : M | p.d >  fires the branch for
// p in the environment extended by the evaluation of d along M's
// decomposition at p.
template <Instance Sig>
StepResult<Sig> fire(const Sig& sig, const MachineEnv<Sig>& eval_env,
                     const MachineEnv<Sig>& base_env, const BranchMap<Sig>& f,
                     const typename Sig::Molecule& m,
                     const PositiveTerm<Sig>& t) {
  std::optional<TypingDecomposition<Sig>> delta;
  for (const auto& [p, d] : sig.decompositions(m))
    if (p == t.pattern()) { delta = d; break; }
  if (!delta) return StepResult<Sig>::make_stuck(StuckReason::NoSuchDecomposition);

  auto branch = f.find(t.pattern());
  if (branch == f.end())
    return StepResult<Sig>::make_stuck(StuckReason::MissingBranch);

  auto value = eval_dec(sig, eval_env, t.body());
  if (auto* e = std::get_if<StuckReason>(&value))
    return StepResult<Sig>::make_stuck(*e);

  MachineEnv<Sig> next = base_env;
  if (auto e = env_extend(sig, next, *delta, std::get<MachineValue<Sig>>(value)))
    return StepResult<Sig>::make_stuck(*e);
  return StepResult<Sig>::make_next(Config<Sig>{std::move(next), branch->second});
}

}  // namespace detail

template <Instance Sig>
StepResult<Sig> step(const Sig& sig, const Config<Sig>& cfg) {
  const Command<Sig>& c = cfg.command;
  if (c.kind() == Command<Sig>::Kind::Cut)
    return detail::fire(sig, cfg.env, cfg.env, c.branch_map(), c.cut_molecule(),
                        c.positive());

  // select: resolve the negative label to a closure or an opaque constant.
  LabelAddress addr = sig.neg_label_address(c.neg_label());
  const NegEntry<Sig>* entry = nullptr;
  if (addr.place == StorePlace::Slot) {
    if (cfg.env.slot_mol) entry = &*cfg.env.slot_mol;
  } else if (addr.level >= 0 &&
             addr.level < static_cast<int>(cfg.env.neg_stable.size())) {
    entry = &cfg.env.neg_stable[static_cast<std::size_t>(addr.level)];
  }
  if (!entry) return StepResult<Sig>::make_stuck(StuckReason::UnboundLabel);
  if (entry->value.is_opaque())
    return StepResult<Sig>::make_halt(entry->value.name);
  return detail::fire(sig, cfg.env, *entry->value.env, entry->value.branches,
                      entry->type, c.positive());
}

enum class RunStatus { Halted, StuckAt, OutOfFuel };

struct RunResult {
  RunStatus status = RunStatus::OutOfFuel;
  int steps = 0;
  std::vector<std::string> trace;  // one line per visited configuration
  std::string opaque_name;         // Halted
  std::optional<StuckReason> error;  // StuckAt
};

template <Instance Sig>
std::string trace_line(int n, const Config<Sig>& cfg) {
  const char* head =
      cfg.command.kind() == Command<Sig>::Kind::Select ? "select" : "cut";
  char rs = '-';
  if (cfg.env.slot_atom) rs = 'a';
  if (cfg.env.slot_mol) rs = 'm';
  return "step " + std::to_string(n) + ": " + head + " | env sizes (" +
         std::to_string(cfg.env.pos_stable.size()) + "," +
         std::to_string(cfg.env.neg_stable.size()) + "," + rs + ")";
}

template <Instance Sig>
RunResult run(const Sig& sig, Config<Sig> cfg, int fuel) {
  RunResult result;
  for (int i = 0; i < fuel; ++i) {
    result.trace.push_back(trace_line(i, cfg));
    StepResult<Sig> r = step(sig, cfg);
    result.steps = i + 1;
    switch (r.kind) {
      case StepResult<Sig>::Kind::Next:
        cfg = std::move(*r.next);
        break;
      case StepResult<Sig>::Kind::Halt:
        result.status = RunStatus::Halted;
        result.opaque_name = r.opaque_name;
        return result;
      case StepResult<Sig>::Kind::Stuck:
        result.status = RunStatus::StuckAt;
        result.error = r.error;
        return result;
    }
  }
  result.status = RunStatus::OutOfFuel;
  result.steps = fuel;
  return result;
}

}  // namespace focal
