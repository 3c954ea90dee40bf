#pragma once

#include <stdexcept>
#include <string>

#include "focal/syntax.hpp"

namespace focal::translate {

class TranslateError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Renders the judgment as a sequent of the corresponding focussed calculus:
// one-sided with a focus bracket for the classical instance, two-sided for
// the intuitionistic one. Only the judgment shapes with a sequent image are
// accepted: commands, positive goals, and dec goals that are either a label
// against an atom leaf or branches against a molecule leaf.
std::string sequent(const syntax::SourceJudgment& sj);

}  // namespace focal::translate
