#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <vector>

namespace focal {

// Payload for decomposition structures: a leaf with no information.
struct UnitPayload {
  friend constexpr bool operator==(UnitPayload, UnitPayload) { return true; }
  friend constexpr auto operator<=>(UnitPayload, UnitPayload) {
    return std::strong_ordering::equal;
  }
};

// A decomposition over payload types A (atom leaves) and B (refuted-molecule
// leaves): the free algebra  D ::= a | *b | () | (D1, D2).
// Immutable; copies share structure.
template <typename A, typename B>
class Decomposition {
public:
  enum class Kind { PosLeaf, NegLeaf, Unit, Pair };

  static Decomposition pos_leaf(A a) {
    return Decomposition(std::make_shared<const Node>(Node{
        Kind::PosLeaf, std::move(a), std::nullopt, nullptr, nullptr}));
  }
  static Decomposition neg_leaf(B b) {
    return Decomposition(std::make_shared<const Node>(Node{
        Kind::NegLeaf, std::nullopt, std::move(b), nullptr, nullptr}));
  }
  static Decomposition unit() {
    return Decomposition(std::make_shared<const Node>(Node{
        Kind::Unit, std::nullopt, std::nullopt, nullptr, nullptr}));
  }
  static Decomposition pair(Decomposition left, Decomposition right) {
    return Decomposition(std::make_shared<const Node>(Node{
        Kind::Pair, std::nullopt, std::nullopt, left.node_, right.node_}));
  }

  Kind kind() const { return node_->kind; }
  const A& atom() const { return *node_->atom; }
  const B& molecule() const { return *node_->molecule; }
  Decomposition left() const { return Decomposition(node_->left); }
  Decomposition right() const { return Decomposition(node_->right); }

  // Leaves in left-to-right order. PosLeaf yields an A, NegLeaf a B.
  template <typename FA, typename FB>
  void for_each_leaf(FA&& on_atom, FB&& on_molecule) const {
    switch (kind()) {
      case Kind::PosLeaf: on_atom(atom()); break;
      case Kind::NegLeaf: on_molecule(molecule()); break;
      case Kind::Unit: break;
      case Kind::Pair:
        left().for_each_leaf(on_atom, on_molecule);
        right().for_each_leaf(on_atom, on_molecule);
        break;
    }
  }

  std::vector<A> atom_leaves() const {
    std::vector<A> out;
    for_each_leaf([&](const A& a) { out.push_back(a); }, [](const B&) {});
    return out;
  }
  std::vector<B> molecule_leaves() const {
    std::vector<B> out;
    for_each_leaf([](const A&) {}, [&](const B& b) { out.push_back(b); });
    return out;
  }

  friend bool operator==(const Decomposition& x, const Decomposition& y) {
    if (x.node_ == y.node_) return true;
    if (x.kind() != y.kind()) return false;
    switch (x.kind()) {
      case Kind::PosLeaf: return x.atom() == y.atom();
      case Kind::NegLeaf: return x.molecule() == y.molecule();
      case Kind::Unit: return true;
      case Kind::Pair: return x.left() == y.left() && x.right() == y.right();
    }
    return false;
  }

  friend std::strong_ordering operator<=>(const Decomposition& x,
                                          const Decomposition& y) {
    if (x.node_ == y.node_) return std::strong_ordering::equal;
    if (auto c = x.kind() <=> y.kind(); c != 0) return c;
    switch (x.kind()) {
      case Kind::PosLeaf: return x.atom() <=> y.atom();
      case Kind::NegLeaf: return x.molecule() <=> y.molecule();
      case Kind::Unit: return std::strong_ordering::equal;
      case Kind::Pair:
        if (auto c = x.left() <=> y.left(); c != 0) return c;
        return x.right() <=> y.right();
    }
    return std::strong_ordering::equal;
  }

private:
  struct Node {
    Kind kind;
    std::optional<A> atom;      // Kind::PosLeaf
    std::optional<B> molecule;  // Kind::NegLeaf
    std::shared_ptr<const Node> left, right;  // Kind::Pair
  };

  explicit Decomposition(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// The shape of a decomposition with all leaf payloads erased.
using DecStructure = Decomposition<UnitPayload, UnitPayload>;

template <typename A, typename B>
DecStructure structure(const Decomposition<A, B>& d) {
  using D = Decomposition<A, B>;
  switch (d.kind()) {
    case D::Kind::PosLeaf: return DecStructure::pos_leaf(UnitPayload{});
    case D::Kind::NegLeaf: return DecStructure::neg_leaf(UnitPayload{});
    case D::Kind::Unit: return DecStructure::unit();
    case D::Kind::Pair:
      return DecStructure::pair(structure(d.left()), structure(d.right()));
  }
  return DecStructure::unit();
}

}  // namespace focal
