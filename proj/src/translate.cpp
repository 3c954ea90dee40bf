#include "focal/translate.hpp"

#include <set>
#include <vector>

namespace focal::translate {

namespace {

// First-occurrence order with duplicates dropped.
template <typename T>
std::vector<T> dedup(const std::vector<T>& xs) {
  std::vector<T> out;
  std::set<T> seen;
  for (const T& x : xs)
    if (seen.insert(x).second) out.push_back(x);
  return out;
}

std::string k1_sequent(const syntax::Document<k1::Signature>& doc) {
  using Goal = syntax::Goal<k1::Signature>;
  using DKind = DecTerm<k1::Signature>::Kind;
  using TKind = TypingDecomposition<k1::Signature>::Kind;

  std::vector<std::string> items;
  for (const auto& a : dedup(doc.context.pos_store())) items.push_back("~" + a);
  for (const auto& m : dedup(doc.context.neg_store()))
    items.push_back(syntax::print(m));

  std::string focus;
  switch (doc.goal.kind) {
    case Goal::Kind::Command:
      break;
    case Goal::Kind::Positive:
      focus = "[" + syntax::print(*doc.goal.molecule) + "]";
      break;
    case Goal::Kind::Dec: {
      if (!doc.goal.dec_term)
        throw TranslateError("dec goal with a hole has no sequent image");
      const auto& d = *doc.goal.dec_term;
      const auto& delta = *doc.goal.delta;
      if (d.kind() == DKind::Label && delta.kind() == TKind::PosLeaf) {
        focus = "[" + delta.atom() + "]";
      } else if (d.kind() == DKind::Branches && delta.kind() == TKind::NegLeaf) {
        focus = "[~" + syntax::print(delta.molecule()) + "]";
      } else {
        throw TranslateError("this dec judgment has no sequent image");
      }
      break;
    }
  }

  std::string out = "|-";
  for (std::size_t i = 0; i < items.size(); ++i)
    out += (i ? ", " : " ") + items[i];
  if (!focus.empty()) out += " " + focus;
  return out;
}

std::string j_sequent(const syntax::Document<j::Signature>& doc) {
  using Goal = syntax::Goal<j::Signature>;
  using DKind = DecTerm<j::Signature>::Kind;
  using TKind = TypingDecomposition<j::Signature>::Kind;
  using j::Side;

  std::vector<std::string> lhs;
  for (const auto& a : dedup(doc.context.pos_stable()))
    lhs.push_back(a.formula.name());
  for (const auto& m : dedup(doc.context.neg_stable()))
    lhs.push_back(syntax::print(m.formula));

  // The right-hand side: the slot content. The reserved absurdity atom is
  // not part of it.
  std::string rhs;
  if (doc.context.right_atom() &&
      doc.context.right_atom()->formula.kind() == j::Formula::Kind::NegLit)
    rhs = syntax::print(doc.context.right_atom()->formula);
  else if (doc.context.right_mol())
    rhs = syntax::print(doc.context.right_mol()->formula);

  std::string left_focus, right_focus;
  switch (doc.goal.kind) {
    case Goal::Kind::Command:
      break;
    case Goal::Kind::Positive: {
      const j::Positioned& m = *doc.goal.molecule;
      if (m.side == Side::Left)
        left_focus = syntax::print(m.formula);
      else
        right_focus = syntax::print(m.formula);
      break;
    }
    case Goal::Kind::Dec: {
      if (!doc.goal.dec_term)
        throw TranslateError("dec goal with a hole has no sequent image");
      const auto& d = *doc.goal.dec_term;
      const auto& delta = *doc.goal.delta;
      if (d.kind() == DKind::Label && delta.kind() == TKind::PosLeaf) {
        const j::Positioned& a = delta.atom();
        if (a.side == Side::Left) {
          left_focus = a.formula.kind() == j::Formula::Kind::BotNeg
                           ? "false-"
                           : syntax::print(a.formula);
        } else {
          right_focus = syntax::print(a.formula);
        }
      } else if (d.kind() == DKind::Branches && delta.kind() == TKind::NegLeaf) {
        // Refuting a left molecule proves it on the right, and vice versa.
        const j::Positioned& m = delta.molecule();
        if (m.side == Side::Right)
          left_focus = syntax::print(m.formula);
        else
          right_focus = syntax::print(m.formula);
      } else {
        throw TranslateError("this dec judgment has no sequent image");
      }
      break;
    }
  }

  std::string left;
  for (std::size_t i = 0; i < lhs.size(); ++i) left += (i ? ", " : "") + lhs[i];
  if (!left_focus.empty())
    left += (left.empty() ? "[" : " [") + left_focus + "]";

  std::string right = right_focus.empty() ? rhs : "[" + right_focus + "]";

  std::string out = left.empty() ? "|-" : left + " |-";
  if (!right.empty()) out += " " + right;
  return out;
}

}  // namespace

std::string sequent(const syntax::SourceJudgment& sj) {
  if (sj.logic == syntax::Logic::K1) return k1_sequent(sj.as_k1());
  return j_sequent(sj.as_j());
}

}  // namespace focal::translate
