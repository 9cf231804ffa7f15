#include "rlcode/errors.hpp"
#include "rlcode/ideals.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace rlcode {
namespace {

using testing::subset_of;

std::vector<std::string> listing(const ResiduatedLattice& l, const std::vector<IdealSet>& ideals) {
  std::vector<std::string> out;
  for (const auto& i : ideals) out.push_back(format_subset(l.names(), i.members()));
  return out;
}

TEST(IsIdeal, Order4Examples) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  const auto& l = w.lattice();
  EXPECT_TRUE(is_ideal(l, subset_of(l, {"0", "a"})));
  EXPECT_TRUE(is_ideal(l, subset_of(l, {"0", "b"})));
  EXPECT_TRUE(is_ideal(l, subset_of(l, {"0"})));
  EXPECT_FALSE(is_ideal(l, subset_of(l, {"0", "a", "b"})));
  EXPECT_FALSE(is_ideal(l, subset_of(l, {"a"})));
}

TEST(IsIdeal, BottomAloneIsAnIdealEverywhere) {
  for (const auto& f : testing::all_fixtures())
    EXPECT_TRUE(is_ideal(f.lattice, Subset::singleton(f.lattice.size(), f.lattice.bottom()))) << f.name;
}

TEST(IsIdeal, EmptySetIsRejected) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  EXPECT_THROW(is_ideal(w.lattice(), Subset(4)), PreconditionError);
  EXPECT_THROW(ideal_closure(w.lattice(), Subset(4)), PreconditionError);
}

TEST(IdealClosure, Order4Examples) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  const auto& l = w.lattice();
  EXPECT_EQ(ideal_closure(l, subset_of(l, {"b"})).members(), subset_of(l, {"0", "b"}));
  EXPECT_EQ(ideal_closure(l, subset_of(l, {"0"})).members(), subset_of(l, {"0"}));
  EXPECT_TRUE(ideal_closure(l, subset_of(l, {"a", "b"})).members().is_full());
}

TEST(IdealClosure, ExtensiveIdempotentAndCharacterizesIdeals) {
  for (const auto& f : testing::all_fixtures()) {
    SCOPED_TRACE(f.name);
    const auto& l = f.lattice;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l.size()); ++mask) {
      const Subset s = Subset::from_mask(l.size(), mask);
      const auto c = ideal_closure(l, s);
      ASSERT_TRUE(s.is_subset_of(c.members()));
      ASSERT_EQ(ideal_closure(l, c.members()), c);
      ASSERT_EQ(is_ideal(l, s), c.members() == s);
    }
  }
}

TEST(IdealClosure, Monotone) {
  testing::Rng rng(11);
  for (const auto& f : testing::all_fixtures()) {
    const auto& l = f.lattice;
    for (int i = 0; i < 300; ++i) {
      const auto a = Subset::from_mask(l.size(), rng() | 1U);
      const auto b = a | Subset::from_mask(l.size(), rng());
      EXPECT_TRUE(ideal_closure(l, a).members().is_subset_of(ideal_closure(l, b).members())) << f.name;
    }
  }
}

TEST(IdealSetType, FromRejectsNonIdeals) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  const auto& l = w.lattice();
  EXPECT_NO_THROW(IdealSet::from(l, subset_of(l, {"0", "a"})));
  EXPECT_THROW(IdealSet::from(l, subset_of(l, {"0", "a", "b"})), PreconditionError);
  EXPECT_EQ(IdealSet::from(l, subset_of(l, {"0", "a"})).algebra(), l.id());
}

TEST(EnumerateIdeals, Order4Proper) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  EXPECT_EQ(listing(w.lattice(), enumerate_ideals(w.lattice(), IdealScope::proper)),
            (std::vector<std::string>{"{0, a}", "{0, b}"}));
  EXPECT_EQ(enumerate_ideals(w.lattice()).size(), 4U);
}

TEST(EnumerateIdeals, Order8ProperInCanonicalNumbering) {
  const auto w = WajsbergAlgebra::make(testing::order8_table());
  EXPECT_EQ(listing(w.lattice(), enumerate_ideals(w.lattice(), IdealScope::proper)),
            (std::vector<std::string>{"{0, a}", "{0, b}", "{0, d}", "{0, a, b, c}", "{0, a, d, e}",
                                      "{0, b, d, f}"}));
}

TEST(EnumerateIdeals, Order9Proper) {
  const auto w = WajsbergAlgebra::make(testing::order9_repaired());
  EXPECT_EQ(listing(w.lattice(), enumerate_ideals(w.lattice(), IdealScope::proper)),
            (std::vector<std::string>{"{0, a, b}", "{0, c, f}"}));
}

TEST(EnumerateIdeals, GodelChainHasOnlyTrivialIdeals) {
  const auto l = ResiduatedLattice::make(testing::godel3());
  EXPECT_EQ(listing(l, enumerate_ideals(l)), (std::vector<std::string>{"{0}", "{0, h, 1}"}));
  EXPECT_TRUE(enumerate_ideals(l, IdealScope::proper).empty());
}

TEST(EnumerateIdeals, ProductAlgebrasHaveNIdealsOfHalfSize) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto w = product_wajsberg(n);
    std::size_t half = 0;
    for (const auto& i : enumerate_ideals(w.lattice()))
      if (i.size() == (std::size_t{1} << (n - 1))) ++half;
    EXPECT_EQ(half, n);
    EXPECT_EQ(enumerate_ideals(w.lattice()).size(), std::size_t{1} << n);
  }
}

TEST(EnumerateIdeals, AgreesWithSubsetScan) {
  std::vector<ResiduatedLattice> algebras;
  for (auto& f : testing::all_fixtures()) algebras.push_back(f.lattice);
  for (std::size_t n = 1; n <= 4; ++n) algebras.push_back(product_wajsberg(n).lattice());
  for (const auto& l : algebras) {
    std::vector<Subset> got;
    for (const auto& i : enumerate_ideals(l)) got.push_back(i.members());
    EXPECT_EQ(got, testing::oracle_ideals(l)) << l.size();
  }
}

TEST(EnumerateIdeals, OutputIsCanonicallySorted) {
  const auto w = product_wajsberg(4);
  const auto ideals = enumerate_ideals(w.lattice());
  for (std::size_t i = 1; i < ideals.size(); ++i)
    EXPECT_TRUE(canonical_less(ideals[i - 1].members(), ideals[i].members()));
}

TEST(PrimeIdeals, FixtureIdealsArePrimeAsWritten) {
  for (const auto& f : testing::wajsberg_fixtures())
    for (const auto& p : enumerate_ideals(f.lattice))
      EXPECT_TRUE(is_prime_ideal(*f.wajsberg, p)) << f.name << " " << format_subset(f.lattice.names(), p.members());
}

TEST(PrimeIdeals, ConventionalReadingOnOrder8) {
  const auto w = WajsbergAlgebra::make(testing::order8_table());
  const auto proper = enumerate_ideals(w.lattice(), IdealScope::proper);
  ASSERT_EQ(proper.size(), 6U);
  std::vector<bool> verdicts;
  for (const auto& p : proper) verdicts.push_back(is_prime_ideal(w, p, PrimeReading::conventional));
  EXPECT_EQ(verdicts, (std::vector<bool>{false, false, false, true, true, true}));
}

TEST(PrimeIdeals, ConventionalReadingOnOrder9) {
  const auto w = WajsbergAlgebra::make(testing::order9_repaired());
  for (const auto& p : enumerate_ideals(w.lattice(), IdealScope::proper))
    EXPECT_TRUE(is_prime_ideal(w, p, PrimeReading::conventional));
  // {0} is not prime: a and c are incomparable atoms of L3 x L3.
  EXPECT_FALSE(is_prime_ideal(w, enumerate_ideals(w.lattice()).front(), PrimeReading::conventional));
}

TEST(PrimeIdeals, WholeAlgebraIsPrime) {
  const auto w = product_wajsberg(2);
  const auto whole = enumerate_ideals(w.lattice()).back();
  ASSERT_TRUE(whole.members().is_full());
  EXPECT_TRUE(is_prime_ideal(w, whole));
  EXPECT_TRUE(is_prime_ideal(w, whole, PrimeReading::conventional));
}

TEST(PrimeIdeals, MvFormAgrees) {
  for (const auto& f : testing::wajsberg_fixtures()) {
    const auto m = wajsberg_to_mv(*f.wajsberg);
    for (const auto& p : enumerate_ideals(f.lattice))
      for (auto reading : {PrimeReading::as_written, PrimeReading::conventional})
        EXPECT_EQ(is_prime_ideal(*f.wajsberg, p, reading), is_prime_ideal_mv(m, p.members(), reading)) << f.name;
  }
}

TEST(PrimeIdeals, RejectsIdealOfAnotherAlgebra) {
  const auto w4 = WajsbergAlgebra::make(testing::order4_table());
  const auto w8 = WajsbergAlgebra::make(testing::order8_table());
  EXPECT_THROW(is_prime_ideal(w4, enumerate_ideals(w8.lattice()).front()), PreconditionError);
}

TEST(IdealForms, WajsbergAndMvReadingsAgree) {
  for (const auto& f : testing::wajsberg_fixtures()) {
    const auto& l = f.lattice;
    const auto m = wajsberg_to_mv(*f.wajsberg);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << l.size()); ++mask) {
      const auto s = Subset::from_mask(l.size(), mask);
      const bool ideal = is_ideal(l, s);
      ASSERT_EQ(is_wajsberg_ideal(*f.wajsberg, s), ideal) << f.name << " " << subset_bits(s);
      ASSERT_EQ(is_mv_ideal(m, s), ideal) << f.name << " " << subset_bits(s);
    }
  }
}

TEST(IdealForms, BooleanRingIdealsCoincide) {
  std::vector<WajsbergAlgebra> algebras{WajsbergAlgebra::make(testing::order4_table()),
                                        WajsbergAlgebra::make(testing::order8_table()), product_wajsberg(4)};
  for (const auto& w : algebras) {
    const auto r = boolean_ring_view(boolean_algebra_of(wajsberg_to_mv(w)));
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << w.size()); ++mask) {
      const auto s = Subset::from_mask(w.size(), mask);
      ASSERT_EQ(is_ring_ideal(r, s), is_ideal(w.lattice(), s)) << subset_bits(s);
    }
  }
}

TEST(IdealFormatting, BracesAndBits) {
  const auto w = WajsbergAlgebra::make(testing::order4_table());
  const auto& l = w.lattice();
  const auto s = subset_of(l, {"0", "a"});
  EXPECT_EQ(format_subset(l.names(), s), "{0, a}");
  EXPECT_EQ(subset_bits(s), "1100");
  EXPECT_EQ(format_subset(l.names(), Subset(4)), "{}");
}

}  // namespace
}  // namespace rlcode
