#include <gtest/gtest.h>

#include <random>

#include "hardy/gallery.hpp"

using namespace hardy::gallery;

namespace {

const Window kBi{-6, 6};

FormalVector basis(long j, int k) { return {{{j, k}, GaussRational{1}}}; }

ShiftSymbol random_analytic(std::mt19937_64& rng, Window w) {
  std::map<long, Term> table;
  std::uniform_int_distribution<int> off(-1, 1), pow(0, 2), wt(0, 4);
  const GaussRational weights[] = {1, -1, {0, 1}, {0, -1}, {Rational(1, 2)}};
  for (long n = w.lo - 40; n <= w.hi + 40; ++n) table[n] = Term{n + off(rng), pow(rng), weights[wt(rng)], false};
  return {Domain::bilateral, w, [table](long n) {
            const auto it = table.find(n);
            return it == table.end() ? std::optional<Term>(Term{n, 0, 1, false}) : std::optional<Term>(it->second);
          }};
}

}  // namespace

TEST(GaussRational, ExactArithmetic) {
  const GaussRational a{Rational(1, 2), Rational(1, 3)};
  EXPECT_EQ(a * a.conj(), GaussRational(Rational(13, 36)));
  EXPECT_EQ(a.norm2(), Rational(13, 36));
  EXPECT_EQ((a - a).str(), "0");
  EXPECT_EQ(a.str(), "1/2+1/3i");
}

TEST(Gallery, AdjointOfDeltaMatchesDisplayedRule) {
  const auto table = adjoint(delta_example(kBi)).table();
  for (const auto& [n, t] : table) {
    ASSERT_TRUE(t.has_value());
    EXPECT_EQ(t->target, n - 1);
    EXPECT_EQ(t->power, n >= 1 ? -1 : 0);
    EXPECT_EQ(t->weight, GaussRational(1));
  }
  EXPECT_TRUE(table.at(-6)->escaped);
  EXPECT_FALSE(table.at(-5)->escaped);
}

TEST(Gallery, DeltaIsInnerAndComposesToIdentity) {
  const ShiftSymbol d = delta_example(kBi);
  EXPECT_TRUE(same_on_interior(compose(adjoint(d), d), identity_symbol(Domain::bilateral, kBi)));
  for (const auto& [n, t] : compose(adjoint(d), d).table()) {
    if (t->escaped) continue;
    EXPECT_EQ(t->target, n);
    EXPECT_EQ(t->power, 0);
  }
}

TEST(Gallery, AdjointDeltaTimesThetaTable) {
  const auto table = compose(adjoint(delta_example(kBi)), theta_example(kBi)).table();
  for (const auto& [n, t] : table) {
    if (t->escaped) continue;
    EXPECT_EQ(t->target, -n);
    EXPECT_EQ(t->power, n < 1 ? 1 : (n == 1 ? 2 : 0)) << n;
  }
}

TEST(Gallery, AnalyticAndInnerVerdicts) {
  const ShiftSymbol d = delta_example(kBi), th = theta_example(kBi);
  EXPECT_TRUE(is_analytic(d).analytic);
  EXPECT_TRUE(is_two_sided_inner_symbolic(d));
  EXPECT_TRUE(is_analytic(th).analytic);
  EXPECT_TRUE(is_two_sided_inner_symbolic(th));

  const AnalyticReport r = is_analytic(compose(th, adjoint(d)));
  EXPECT_FALSE(r.analytic);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(*r.witness, 3);
  EXPECT_EQ(r.witness_term->target, -1);
  EXPECT_EQ(r.witness_term->power, -1);

  const ShiftSymbol id = identity_symbol(Domain::unilateral, {0, 6});
  EXPECT_TRUE(is_analytic(id).analytic);
  EXPECT_TRUE(is_two_sided_inner_symbolic(id));
  EXPECT_FALSE(is_two_sided_inner_symbolic(shift_symbol({0, 6})));
}

TEST(Gallery, DivisorVerdicts) {
  for (long W : {8L, 12L}) {
    const Window w{-W, W};
    EXPECT_TRUE(left_divides(delta_example(w), theta_example(w)));
    EXPECT_FALSE(right_divides(delta_example(w), theta_example(w)));
  }
  for (long W : {8L, 12L}) {
    const Window w{0, W};
    const ShiftSymbol s = shift_symbol(w), id = identity_symbol(Domain::unilateral, w);
    EXPECT_TRUE(right_divides(s, id));
    EXPECT_FALSE(left_divides(s, id));
    EXPECT_TRUE(left_divides(s, s));
    EXPECT_TRUE(right_divides(s, s));
  }
}

TEST(Gallery, ToeplitzBracket) {
  const Window w{0, 10};
  EXPECT_EQ(toeplitz_bracket(backward_shift_symbol(w), basis(0, 1)), GaussRational(-1));
  EXPECT_EQ(toeplitz_bracket(shift_symbol(w), basis(0, 0)), GaussRational(1));
  FormalVector f{{{2, 1}, GaussRational{Rational(1, 2), 3}}, {{4, 0}, GaussRational{-2}}};
  EXPECT_EQ(toeplitz_bracket(identity_symbol(Domain::unilateral, w), f), GaussRational(0));
}

TEST(Gallery, BracketMatchesNormDifference) {
  // <(T*T - T T*) f, f> = |T f|^2 - |T* f|^2
  const Window w{0, 10};
  const ShiftSymbol phi = compose(backward_shift_symbol(w), shift_symbol(w, 1));
  const FormalVector f{{{0, 1}, GaussRational{1, 1}}, {{3, 0}, GaussRational{Rational(2, 3)}}};
  const FormalVector tf = toeplitz_apply(phi, f), tsf = toeplitz_apply(adjoint(phi), f);
  EXPECT_EQ(toeplitz_bracket(phi, f), inner_product(tf, tf) - inner_product(tsf, tsf));
}

TEST(Gallery, Quasinormal) {
  const Window w{0, 8};
  for (int n : {0, 1, 2}) {
    const QuasinormalReport r = quasinormal_check(shift_symbol(w, n));
    EXPECT_TRUE(r.isometric);
    EXPECT_TRUE(r.non_normal);
    EXPECT_EQ(r.normality_witness, 0);
  }
  const QuasinormalReport id = quasinormal_check(identity_symbol(Domain::unilateral, w));
  EXPECT_TRUE(id.isometric);
  EXPECT_FALSE(id.non_normal);
  const QuasinormalReport back = quasinormal_check(backward_shift_symbol(w));
  EXPECT_FALSE(back.isometric);
  EXPECT_EQ(back.isometry_witness->first, 0);
}

TEST(Gallery, ShiftVersusCoordinate) {
  for (long W : {12L, 16L}) {
    const CoprimePair p = shift_vs_coordinate_coprime(W);
    EXPECT_TRUE(p.right);
    EXPECT_FALSE(p.left);
    EXPECT_EQ(p.left_witnesses, std::vector<long>{0});
  }
  const Window w{0, 12};
  const CoprimePair id = coprime_at_origin(identity_symbol(Domain::unilateral, w), coordinate_symbol(w));
  EXPECT_TRUE(id.right);
  EXPECT_TRUE(id.left);
  const CoprimePair zz = coprime_at_origin(coordinate_symbol(w), coordinate_symbol(w));
  EXPECT_FALSE(zz.right);
  EXPECT_FALSE(zz.left);
}

TEST(GalleryProperty, AdjointIsAnInvolution) {
  for (const ShiftSymbol& s : {delta_example(kBi), theta_example(kBi)})
    EXPECT_TRUE(same_on_interior(adjoint(adjoint(s)), s));
  EXPECT_TRUE(same_on_interior(adjoint(adjoint(shift_symbol({0, 8}))), shift_symbol({0, 8})));
}

TEST(GalleryProperty, CompositionIsAssociative) {
  std::mt19937_64 rng(81);
  const ShiftSymbol a = random_analytic(rng, kBi), b = random_analytic(rng, kBi), c = random_analytic(rng, kBi);
  EXPECT_TRUE(same_on_interior(compose(compose(a, b), c), compose(a, compose(b, c))));
}

TEST(GalleryProperty, InnerSymbolsLeftDivideTheirProducts) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 10; ++trial) {
    const ShiftSymbol b = random_analytic(rng, kBi);
    for (const ShiftSymbol& a : {delta_example(kBi), theta_example(kBi)}) {
      ASSERT_TRUE(is_two_sided_inner_symbolic(a));
      EXPECT_TRUE(left_divides(a, compose(a, b)));
    }
  }
}

TEST(GalleryProperty, VerdictsStableUnderWindowGrowth) {
  for (long W : {6L, 8L, 10L}) {
    const Window w{-W, W}, v{-W - 4, W + 4};
    EXPECT_EQ(left_divides(delta_example(w), theta_example(w)), left_divides(delta_example(v), theta_example(v)));
    EXPECT_EQ(right_divides(delta_example(w), theta_example(w)), right_divides(delta_example(v), theta_example(v)));
    EXPECT_EQ(is_analytic(compose(theta_example(w), adjoint(delta_example(w)))).witness,
              is_analytic(compose(theta_example(v), adjoint(delta_example(v)))).witness);
  }
}
