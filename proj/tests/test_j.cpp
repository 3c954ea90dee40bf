#include <random>

#include "doctest.h"
#include "focal/j.hpp"

using namespace focal;
using namespace focal::j;
using Delta = TypingDecomposition<j::Signature>;

namespace {

Formula random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 10 : 5);
  std::uniform_int_distribution<int> name(0, 2);
  auto lit = [&] { return std::string(1, static_cast<char>('p' + name(rng))); };
  switch (pick(rng)) {
    case 0: return Formula::pos_lit(lit());
    case 1: return Formula::neg_lit(lit());
    case 2: return Formula::top_pos();
    case 3: return Formula::bot_pos();
    case 4: return Formula::top_neg();
    case 5: return Formula::bot_neg();
    case 6: return Formula::and_pos(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 7: return Formula::or_(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 8: return Formula::and_neg(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 9: return Formula::imp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return Formula::not_(random_formula(rng, depth - 1));
  }
}

Delta random_delta(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 4 : 3);
  std::uniform_int_distribution<int> name(0, 2);
  auto lit = [&] { return std::string(1, static_cast<char>('p' + name(rng))); };
  switch (pick(rng)) {
    case 0: return Delta::pos_leaf(right(Formula::pos_lit(lit())));
    case 1: {
      std::uniform_int_distribution<int> which(0, 1);
      return Delta::pos_leaf(
          which(rng) ? left(Formula::neg_lit(lit())) : absurd_atom());
    }
    case 2: {
      Formula f = random_formula(rng, 1);
      return Delta::neg_leaf(position(f));
    }
    case 3: return Delta::unit();
    default: return Delta::pair(random_delta(rng, depth - 1), random_delta(rng, depth - 1));
  }
}

Context random_context(std::mt19937& rng, int extensions) {
  Context ctx;
  for (int i = 0; i < extensions; ++i) ctx = ctx.extend(random_delta(rng, 2));
  return ctx;
}

}  // namespace

TEST_CASE("atom and molecule classification") {
  CHECK(is_atom(right(Formula::pos_lit("p"))));
  CHECK(is_atom(left(Formula::neg_lit("p"))));
  CHECK(is_atom(absurd_atom()));
  CHECK(!is_atom(left(Formula::pos_lit("p"))));
  CHECK(!is_atom(right(Formula::bot_neg())));

  CHECK(is_molecule(right(Formula::top_pos())));
  CHECK(is_molecule(left(Formula::neg_lit("p"))));
  CHECK(is_molecule(absurd_atom()));
  CHECK(!is_molecule(left(Formula::pos_lit("p"))));
  CHECK(!is_molecule(right(Formula::imp(Formula::pos_lit("p"), Formula::pos_lit("p")))));
}

TEST_CASE("decompositions of units and literals") {
  const auto& sig = j::signature();

  auto top = sig.decompositions(right(Formula::top_pos()));
  REQUIRE(top.size() == 1);
  CHECK(top[0].first == Pattern::true_r());
  CHECK(top[0].second == Delta::unit());

  auto bot = sig.decompositions(absurd_atom());
  REQUIRE(bot.size() == 1);
  CHECK(bot[0].first == Pattern::true_l());
  CHECK(bot[0].second == Delta::pos_leaf(absurd_atom()));

  CHECK(sig.decompositions(right(Formula::bot_pos())).empty());
  CHECK(sig.decompositions(left(Formula::top_neg())).empty());
}

TEST_CASE("identity implication decomposes through cons") {
  const auto& sig = j::signature();
  Formula l = Formula::pos_lit("l");
  auto decs = sig.decompositions(left(Formula::imp(l, l)));
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].first == Pattern::cons(Pattern::pos_r(), Pattern::neg_l()));
  CHECK(decs[0].second ==
        Delta::pair(Delta::pos_leaf(right(l)), Delta::neg_leaf(right(l))));
}

TEST_CASE("negation decomposes through switch") {
  const auto& sig = j::signature();
  auto decs = sig.decompositions(left(Formula::not_(Formula::top_pos())));
  REQUIRE(decs.size() == 1);
  CHECK(decs[0].first == Pattern::switch_(Pattern::true_r()));
  CHECK(decs[0].second ==
        Delta::pair(Delta::unit(), Delta::pos_leaf(absurd_atom())));
}

TEST_CASE("negative conjunction decomposes through projections") {
  const auto& sig = j::signature();
  Formula n = Formula::and_neg(Formula::neg_lit("a"), Formula::neg_lit("b"));
  auto decs = sig.decompositions(left(n));
  REQUIRE(decs.size() == 2);
  CHECK(decs[0].first == Pattern::proj(1, Pattern::pos_l()));
  CHECK(decs[0].second == Delta::pos_leaf(left(Formula::neg_lit("a"))));
  CHECK(decs[1].first == Pattern::proj(2, Pattern::pos_l()));
}

TEST_CASE("non-molecules are rejected") {
  CHECK_THROWS_AS(
      (void)j::signature().decompositions(left(Formula::pos_lit("p"))),
      std::invalid_argument);
}

TEST_CASE("pattern structures") {
  const auto& sig = j::signature();
  CHECK(sig.pattern_structure(Pattern::neg_r()) == DecStructure::neg_leaf({}));
  CHECK(sig.pattern_structure(Pattern::switch_(Pattern::true_r())) ==
        DecStructure::pair(DecStructure::unit(), DecStructure::pos_leaf({})));
  CHECK(sig.pattern_structure(Pattern::true_l()) == DecStructure::pos_leaf({}));
  CHECK(sig.pattern_structure(Pattern::cons(Pattern::pos_r(), Pattern::neg_l())) ==
        DecStructure::pair(DecStructure::pos_leaf({}), DecStructure::neg_leaf({})));
}

TEST_CASE("the absurdity label always resolves") {
  Context empty;
  CHECK(empty.lookup_pos(j::PosLabel::absurd()) == absurd_atom());
  CHECK(!empty.lookup_pos(j::PosLabel::right_slot()).has_value());
  CHECK(!empty.lookup_neg(j::NegLabel::right_slot()).has_value());
  auto acc = empty.acc_pos();
  CHECK(acc.count(absurd_atom()) == 1);
}

TEST_CASE("extension routes by side") {
  Context ctx;
  Formula l = Formula::pos_lit("l");
  Formula n = Formula::neg_lit("m");

  Context out = ctx.extend(
      Delta::pair(Delta::pos_leaf(right(l)), Delta::neg_leaf(left(Formula::not_(l)))));
  CHECK(out.pos_stable() == std::vector<Positioned>{right(l)});
  CHECK(out.neg_stable() == std::vector<Positioned>{left(Formula::not_(l))});
  CHECK(!out.right_atom().has_value());
  CHECK(!out.right_mol().has_value());

  // A right-slot molecule followed by a left atom overwrites the slot.
  Context slotted = out.extend(Delta::neg_leaf(right(l)));
  CHECK(slotted.right_mol() == right(l));
  Context overwritten = slotted.extend(Delta::pos_leaf(left(n)));
  CHECK(overwritten.right_atom() == left(n));
  CHECK(!overwritten.right_mol().has_value());
  CHECK(overwritten.pos_stable() == out.pos_stable());
  CHECK(overwritten.neg_stable() == out.neg_stable());

  CHECK(ctx.extend(Delta::unit()) == ctx);
}

TEST_CASE("acc equations for the two-sided extension") {
  std::mt19937 rng(5);
  for (int i = 0; i < 300; ++i) {
    Context ctx = random_context(rng, 3);

    // Stable right atom.
    Positioned a = right(Formula::pos_lit("q"));
    auto acc = ctx.extend(Delta::pos_leaf(a));
    auto want = ctx.acc_pos();
    want.insert(a);
    CHECK(acc.acc_pos() == want);
    CHECK(acc.acc_neg() == ctx.acc_neg());

    // Stable left molecule.
    Positioned m = left(Formula::neg_lit("q"));
    auto accm = ctx.extend(Delta::neg_leaf(m));
    auto wantm = ctx.acc_neg();
    wantm.insert(m);
    CHECK(accm.acc_neg() == wantm);
    CHECK(accm.acc_pos() == ctx.acc_pos());

    // Left atom overwrites the right-hand side entirely.
    Positioned v = left(Formula::neg_lit("v"));
    auto slot = ctx.extend(Delta::pos_leaf(v));
    std::set<Positioned> keep;
    for (const Positioned& x : slot.acc_pos())
      if (x.side == Side::Right || x == v || x == absurd_atom()) keep.insert(x);
    CHECK(slot.acc_pos() == keep);
    CHECK(slot.right_atom() == v);
    CHECK(!slot.right_mol().has_value());

    // Right molecule likewise.
    Positioned pm = right(Formula::pos_lit("w"));
    auto slotm = ctx.extend(Delta::neg_leaf(pm));
    CHECK(slotm.right_mol() == pm);
    CHECK(!slotm.right_atom().has_value());
    for (const Positioned& x : slotm.acc_neg())
      CHECK((x.side == Side::Left || x == pm));

    // Unit and pair rows.
    CHECK(ctx.extend(Delta::unit()) == ctx);
    Delta d1 = random_delta(rng, 2);
    Delta d2 = random_delta(rng, 2);
    CHECK(ctx.extend(Delta::pair(d1, d2)) == ctx.extend(d1).extend(d2));
  }
}

TEST_CASE("right-hand side stays a singleton or empty") {
  std::mt19937 rng(9);
  for (int i = 0; i < 300; ++i) {
    Context ctx = random_context(rng, 5);
    int right_entries = 0;
    for (const Positioned& x : ctx.acc_pos())
      if (x.side == Side::Left && !(x == absurd_atom())) ++right_entries;
    for (const Positioned& x : ctx.acc_neg())
      if (x.side == Side::Right) ++right_entries;
    CHECK(right_entries <= 1);
  }
}

TEST_CASE("stable labels never shift across extensions") {
  std::mt19937 rng(15);
  Context ctx;
  std::vector<Positioned> seen;
  for (int i = 0; i < 40; ++i) {
    ctx = ctx.extend(random_delta(rng, 2));
    for (int k = 0; k < static_cast<int>(seen.size()); ++k)
      CHECK(ctx.lookup_pos(j::PosLabel::stable(k)) == seen[k]);
    seen = ctx.pos_stable();
  }
}

TEST_CASE("well-foundedness over positioned closures") {
  std::mt19937 rng(23);
  const auto& sig = j::signature();
  for (int i = 0; i < 50; ++i) {
    std::vector<Formula> roots = {random_formula(rng, 3), random_formula(rng, 2)};
    auto universe = j::molecule_closure(roots);
    auto r = check_well_founded(sig, universe);
    REQUIRE(r.ok());
    for (const auto& [before, after] : r.edges)
      CHECK(before.formula.size() < after.formula.size());
  }
}

TEST_CASE("pattern functionality: one delta per pattern and molecule") {
  std::mt19937 rng(31);
  const auto& sig = j::signature();
  for (int i = 0; i < 300; ++i) {
    Positioned m = position(random_formula(rng, 3));
    auto decs = sig.decompositions(m);
    for (std::size_t x = 0; x < decs.size(); ++x)
      for (std::size_t y = x + 1; y < decs.size(); ++y)
        CHECK(!(decs[x].first == decs[y].first));
  }
}

TEST_CASE("structure coherence on random positioned molecules") {
  std::mt19937 rng(29);
  const auto& sig = j::signature();
  for (int i = 0; i < 300; ++i) {
    Positioned m = position(random_formula(rng, 3));
    for (const auto& [p, delta] : sig.decompositions(m))
      CHECK(structure(delta) == sig.pattern_structure(p));
  }
}
