#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "craiglat/craig.hpp"
#include "oracles.hpp"

using namespace craiglat;

namespace {

std::vector<BigInt> poly(std::initializer_list<long> c, std::size_t len) {
  std::vector<BigInt> v(len);
  std::size_t i = 0;
  for (long x : c) v[i++] = x;
  return v;
}

// Independent membership test: f(1) = 0 and sum_j C(j, i) f_j = 0 mod l for
// i = 1..m-1 (Taylor coefficients at 1, equivalent to the derivative test when l > m).
bool taylor_member(const CraigParams& p, const std::vector<BigInt>& f) {
  BigInt s = 0;
  for (const auto& a : f) s += a;
  if (s != 0) return false;
  for (std::uint64_t i = 1; i < p.m; ++i) {
    BigInt t = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      mpz_class c;
      mpz_bin_uiui(c.get_mpz_t(), j, i);
      t += c * f[j];
    }
    if (t % static_cast<long>(p.l) != 0) return false;
  }
  return true;
}

}  // namespace

TEST(CraigBasis, RootLatticeA2) {
  const IntegerLattice a = craig_basis({2, 1, 3});
  EXPECT_EQ(a.rank(), 2U);
  EXPECT_EQ(a.ambient_dim(), 3U);
  EXPECT_EQ(gram_det(a.basis()), 3);
  // Same lattice as the root basis [-1,1,0],[0,-1,1].
  const IntMatrix root{{-1, 1, 0}, {0, -1, 1}};
  EXPECT_EQ(hnf(a.basis()).h, hnf(root).h);
}

TEST(CraigBasis, GramDeterminantExamples) {
  EXPECT_EQ(oracle::gram_det(craig_basis({4, 2, 5}).basis()), 125);
  EXPECT_EQ(oracle::gram_det(craig_basis({6, 3, 7}).basis()), 16807);
  EXPECT_EQ(craig_basis({6, 3, 7}).vol_sq(), 16807);
}

TEST(CraigBasis, VolumeFormulaAgainstRationalOracle) {
  for (std::uint64_t n = 3; n <= 12; ++n)
    for (std::uint64_t m = 1; 2 * m < n; ++m) {
      const CraigParams p{n, m, next_prime(n + 1)};
      const BigInt expected = oracle::gram_det(craig_basis(p).basis());
      EXPECT_EQ(craig_vol_sq(p), expected) << to_string(p);
      EXPECT_EQ(craig_basis(p).vol_sq(), expected) << to_string(p);
    }
}

TEST(CraigBasis, ParameterValidation) {
  EXPECT_THROW(craig_basis({4, 2, 4}), Error);   // l < n+1
  EXPECT_THROW(craig_basis({4, 3, 5}), Error);   // m > (n+1)/2
  EXPECT_THROW(craig_basis({0, 1, 2}), Error);
  EXPECT_EQ(validate({10, 3, 11}), Regime::strict);
  EXPECT_EQ(validate({10, 5, 11}), Regime::extended);
  EXPECT_THROW(validate_prime({10, 3, 12}), Error);
  try {
    craig_basis({600, 2, 601});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(Membership, Examples) {
  const CraigParams p{6, 3, 7};
  EXPECT_TRUE(membership(p, poly({-1, 3, -3, 1}, 7)));
  EXPECT_FALSE(membership(p, poly({-1, 1}, 7)));
  EXPECT_TRUE(membership(p, poly({-7, 7}, 7)));
  EXPECT_THROW(membership(p, poly({1}, 6)), Error);
}

TEST(Membership, BasisRowsAreMembers) {
  for (std::uint64_t n = 4; n <= 14; ++n)
    for (std::uint64_t m = 1; 2 * m < n; ++m) {
      const CraigParams p{n, m, next_prime(n + 1)};
      const IntegerLattice a = craig_basis(p);
      for (std::size_t i = 0; i < a.rank(); ++i) ASSERT_TRUE(membership(p, a.basis().row_vector(i))) << to_string(p);
    }
}

TEST(Membership, AgreesWithHnfSolveAndTaylorOracle) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> e(-6, 6);
  for (const CraigParams p : {CraigParams{6, 2, 7}, CraigParams{8, 3, 11}, CraigParams{10, 4, 11}, CraigParams{12, 3, 17}}) {
    const IntegerLattice a = craig_basis(p);
    const HnfResult form = row_hnf(a.basis(), false);
    int members = 0;
    for (int t = 0; t < 400; ++t) {
      std::vector<BigInt> v(p.n + 1);
      if (t % 2 == 0) {
        // Random lattice vector.
        for (std::size_t i = 0; i < a.rank(); ++i) {
          const int c = e(rng);
          for (std::size_t j = 0; j <= p.n; ++j) v[j] += c * a.basis()(i, j);
        }
      } else {
        // Random sum-zero vector, mostly not in the lattice.
        BigInt s = 0;
        for (std::size_t j = 0; j < p.n; ++j) {
          v[j] = e(rng);
          s += v[j];
        }
        v[p.n] = -s;
      }
      const bool by_hnf = hnf_solve(form, v).has_value();
      ASSERT_EQ(membership(p, v), by_hnf) << to_string(p);
      ASSERT_EQ(taylor_member(p, v), by_hnf) << to_string(p);
      members += by_hnf ? 1 : 0;
    }
    EXPECT_GE(members, 200);
  }
}

TEST(Membership, CyclicShiftInvarianceWhenLIsNPlusOne) {
  for (std::uint64_t l : {5, 7, 11, 13}) {
    const std::uint64_t n = l - 1;
    for (std::uint64_t m = 1; 2 * m < n; ++m) {
      const CraigParams p{n, m, l};
      const IntegerLattice a = craig_basis(p);
      for (std::size_t i = 0; i < a.rank(); ++i) {
        std::vector<BigInt> shifted(n + 1);
        for (std::size_t j = 0; j <= n; ++j) shifted[(j + 1) % (n + 1)] = a.basis()(i, j);
        EXPECT_TRUE(membership(p, shifted)) << to_string(p) << " row " << i;
      }
    }
  }
}

TEST(CenterDensity, Examples) {
  EXPECT_EQ(center_density_lb({2, 1, 3}, 0).rendered, "-1.7925");
  EXPECT_EQ(center_density_lb({2, 1, 3}, 0).delta_sq, RationalSqrt(BigInt(1), BigInt(12)));
  EXPECT_EQ(center_density_lb({52, 6, 53}, 1, 3).rendered, "10.705");
  EXPECT_NEAR(std::stod(center_density_lb({360, 19, 367}, 16).rendered), 443.0, 0.05);
  EXPECT_THROW(center_density_lb({10, 2, 11}, 11), Error);
}

TEST(CenterDensity, MatchesLongDoubleFormula) {
  for (const auto& [p, k] : std::vector<std::pair<CraigParams, std::uint64_t>>{
           {{52, 6, 53}, 1}, {{96, 4, 97}, 23}, {{160, 16, 163}, 1}, {{288, 17, 293}, 9}}) {
    const long double n = p.n, m = p.m, l = p.l;
    const long double ref = (2.0L * k - n) / 2.0L + n / 2.0L * std::log2(m) - (m - 1) * std::log2(l) -
                            0.5L * std::log2(n + 1);
    EXPECT_NEAR(std::stod(center_density_lb(p, k, 6).rendered), static_cast<double>(ref), 1e-6);
  }
}

TEST(CenterDensity, OneMoreCodeDimensionAddsOneBit) {
  const CraigParams p{96, 4, 97};
  for (std::uint64_t k = 0; k < 30; ++k) {
    const RationalSqrt ratio = center_density_lb(p, k + 1).delta_sq / center_density_lb(p, k).delta_sq;
    EXPECT_EQ(ratio, RationalSqrt(BigInt(4), BigInt(1)));
  }
}

TEST(ChooseParams, Examples) {
  EXPECT_EQ(choose_params(2).m, 1U);
  EXPECT_EQ(choose_params(1222), (CraigParams{1222, 86, 1223}));
  EXPECT_EQ(choose_params(4098).l, 4099U);
  EXPECT_THROW(choose_params(1), Error);
}

TEST(ChooseParams, FormulaAndBertrand) {
  for (std::uint64_t n = 3; n < 3000; n += 37) {
    const CraigParams p = choose_params(n);
    EXPECT_NO_THROW(validate_prime(p));
    EXPECT_LE(p.l, 2 * (n + 1));
    const double ideal = static_cast<double>(n) / (2.0 * std::log(static_cast<double>(n)));
    if (p.m > 1 && 2 * (p.m + 1) <= n) {
      EXPECT_LE(std::fabs(static_cast<double>(p.m) - ideal), 0.5 + 1e-9) << n;
    }
  }
}

TEST(DensityFloor, SmallCases) {
  EXPECT_EQ(density_floor(2).delta_sq, RationalSqrt(BigInt(1), BigInt(12)));
  for (std::uint64_t n : {100U, 1222U}) {
    const CraigParams p = choose_params(n);
    const long double nn = n, m = p.m;
    const long double ref = nn / 2 * std::log2(m) - (m - 1 + nn / 2) - (m - 1) * std::log2(nn) - 0.5L * std::log2(nn + 1);
    EXPECT_NEAR(std::stod(density_floor(n, 6).rendered), static_cast<double>(ref), 1e-5) << n;
    // The floor never exceeds the actual bound, since l <= 2n.
    EXPECT_LE(density_floor(n).delta_sq, center_density_lb(p, 0).delta_sq);
  }
}

TEST(Section, Examples) {
  EXPECT_TRUE(verify_section({4, 2, 7}));
  EXPECT_TRUE(verify_section({6, 2, 7}));
  EXPECT_TRUE(verify_section({4, 2, 11}));
  EXPECT_TRUE(verify_section({9, 3, 13}));
  try {
    verify_section({10, 2, 101});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(BasisFile, RoundTrip) {
  const IntegerLattice a = craig_basis({6, 3, 7});
  std::stringstream s;
  write_basis(s, a.basis());
  EXPECT_EQ(read_basis(s), a.basis());
  std::stringstream bad("3 2\n1 2 3\n4 x 6\n");
  EXPECT_THROW(read_basis(bad), Error);
  std::stringstream short_file("3 2\n1 2 3\n");
  EXPECT_THROW(read_basis(short_file), Error);
}
