#pragma once

#include <compare>
#include <optional>
#include <set>
#include <vector>

#include "focal/decomposition.hpp"

namespace focal {

// Labels are De Bruijn levels: position of the binding occurrence counted
// from the bottom of the store. Extension only appends, so a label never
// shifts once introduced.
struct PosLabel {
  int level = 0;
  friend bool operator==(PosLabel, PosLabel) = default;
  friend auto operator<=>(PosLabel, PosLabel) = default;
};

struct NegLabel {
  int level = 0;
  friend bool operator==(NegLabel, NegLabel) = default;
  friend auto operator<=>(NegLabel, NegLabel) = default;
};

// Whether a label denotes an append-only store slot (as opposed to an
// overwriting or reserved one). Instances with richer label sets overload.
constexpr bool stable_label(PosLabel) { return true; }
constexpr bool stable_label(NegLabel) { return true; }

// Where a label points inside a context-shaped store: an append-only store
// level, the overwriting right slot, or a reserved constant.
enum class StorePlace { Stable, Slot, Reserved };

struct LabelAddress {
  StorePlace place = StorePlace::Stable;
  int level = 0;
};

// A context over (A, B): two append-only stores with level lookup.
// Extension is defined parametrically in the payload types, so the same
// algebra serves typing contexts, semantic contexts and machine
// environments. Values are immutable; extension returns a new context.
template <typename A, typename B>
class ParametricContext {
public:
  ParametricContext() = default;
  ParametricContext(std::vector<A> pos, std::vector<B> neg)
      : pos_(std::move(pos)), neg_(std::move(neg)) {}

  std::optional<A> lookup_pos(PosLabel x) const {
    if (x.level < 0 || x.level >= static_cast<int>(pos_.size())) return {};
    return pos_[static_cast<std::size_t>(x.level)];
  }
  std::optional<B> lookup_neg(NegLabel x) const {
    if (x.level < 0 || x.level >= static_cast<int>(neg_.size())) return {};
    return neg_[static_cast<std::size_t>(x.level)];
  }

  // Appends the leaves of d in left-to-right order: atoms to the positive
  // store, refuted molecules to the negative store.
  ParametricContext extend(const Decomposition<A, B>& d) const {
    ParametricContext out = *this;
    d.for_each_leaf([&](const A& a) { out.pos_.push_back(a); },
                    [&](const B& b) { out.neg_.push_back(b); });
    return out;
  }

  std::vector<PosLabel> pos_domain() const {
    std::vector<PosLabel> out;
    for (int i = 0; i < static_cast<int>(pos_.size()); ++i)
      out.push_back(PosLabel{i});
    return out;
  }
  std::vector<NegLabel> neg_domain() const {
    std::vector<NegLabel> out;
    for (int i = 0; i < static_cast<int>(neg_.size()); ++i)
      out.push_back(NegLabel{i});
    return out;
  }

  // Referable atoms/molecules: the image of lookup over its domain.
  std::set<A> acc_pos() const { return {pos_.begin(), pos_.end()}; }
  std::set<B> acc_neg() const { return {neg_.begin(), neg_.end()}; }

  const std::vector<A>& pos_store() const { return pos_; }
  const std::vector<B>& neg_store() const { return neg_; }

  friend bool operator==(const ParametricContext&,
                         const ParametricContext&) = default;

private:
  std::vector<A> pos_;
  std::vector<B> neg_;
};

}  // namespace focal
