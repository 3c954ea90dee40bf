#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "focal/j.hpp"
#include "focal/k1.hpp"
#include "focal/kernel.hpp"

namespace focal::syntax {

enum class Logic { K1, J };

class ParseError : public std::runtime_error {
public:
  ParseError(int line, int column, const std::string& message)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + message),
        line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

// A goal as written in a source file. The term may be a hole `?`, which the
// checker refuses but the prover fills in.
template <typename Sig>
struct Goal {
  using Kind = typename Judgment<Sig>::Kind;

  Kind kind = Kind::Command;
  std::optional<PositiveTerm<Sig>> pos_term;
  std::optional<typename Sig::Molecule> molecule;   // Kind::Positive
  std::optional<DecTerm<Sig>> dec_term;
  std::optional<TypingDecomposition<Sig>> delta;    // Kind::Dec
  std::optional<Command<Sig>> command;

  bool has_term() const {
    switch (kind) {
      case Kind::Positive: return pos_term.has_value();
      case Kind::Dec: return dec_term.has_value();
      case Kind::Command: return command.has_value();
    }
    return false;
  }

  // Requires a term; throws std::invalid_argument on a hole.
  Judgment<Sig> judgment(const typename Sig::Context& ctx) const {
    if (!has_term()) throw std::invalid_argument("goal has a hole");
    switch (kind) {
      case Kind::Positive:
        return Judgment<Sig>::positive(ctx, *pos_term, *molecule);
      case Kind::Dec:
        return Judgment<Sig>::dec(ctx, *dec_term, *delta);
      case Kind::Command:
        return Judgment<Sig>::command(ctx, *command);
    }
    throw std::invalid_argument("bad goal kind");
  }
};

template <typename Sig>
struct Document {
  typename Sig::Context context;
  Goal<Sig> goal;
};

struct SourceJudgment {
  Logic logic = Logic::K1;
  std::variant<Document<k1::Signature>, Document<j::Signature>> doc;

  const Document<k1::Signature>& as_k1() const {
    return std::get<Document<k1::Signature>>(doc);
  }
  const Document<j::Signature>& as_j() const {
    return std::get<Document<j::Signature>>(doc);
  }
};

SourceJudgment parse_judgment(const std::string& text);
std::string print_judgment(const SourceJudgment& sj);

k1::Formula parse_k1_formula(const std::string& text);
j::Formula parse_j_formula(const std::string& text);

std::string print(const k1::Formula& f);
std::string print(const j::Formula& f);
std::string print(const k1::Pattern& p);
std::string print(const j::Pattern& p);

std::string print(const PositiveTerm<k1::Signature>& t);
std::string print(const PositiveTerm<j::Signature>& t);
std::string print(const DecTerm<k1::Signature>& d);
std::string print(const DecTerm<j::Signature>& d);
std::string print(const Command<k1::Signature>& c);
std::string print(const Command<j::Signature>& c);

std::string print(const TypingDecomposition<k1::Signature>& d);
std::string print(const TypingDecomposition<j::Signature>& d);

}  // namespace focal::syntax
