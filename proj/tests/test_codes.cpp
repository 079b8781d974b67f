#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "craiglat/codes.hpp"
#include "oracles.hpp"

using namespace craiglat;

namespace {

unsigned modulus_for(unsigned q) { return q == 2 ? 0b11U : (q == 4 ? 0b111U : 0b1011U); }
unsigned bits_for(unsigned q) { return q == 2 ? 1U : (q == 4 ? 2U : 3U); }

// Every codeword by recursion over messages, with shift-and-add products.
std::vector<Word> all_codewords(unsigned q, const std::vector<Word>& gen) {
  std::vector<Word> words{Word(gen.front().size(), 0)};
  for (const auto& row : gen) {
    std::vector<Word> next;
    for (const auto& w : words)
      for (unsigned a = 0; a < q; ++a) {
        Word v = w;
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] ^= static_cast<std::uint8_t>(oracle::gf_mul(a, row[j], bits_for(q), modulus_for(q)));
        next.push_back(std::move(v));
      }
    words = std::move(next);
  }
  return words;
}

std::size_t brute_min_distance(unsigned q, const std::vector<Word>& gen) {
  std::size_t best = gen.front().size() + 1;
  for (const auto& w : all_codewords(q, gen)) {
    std::size_t wt = 0;
    for (auto v : w) wt += v != 0 ? 1 : 0;
    if (wt != 0) best = std::min(best, wt);
  }
  return best;
}

std::vector<Word> random_generator(unsigned q, std::size_t k, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<unsigned> e(0, q - 1);
  const GaloisField f(q);
  while (true) {
    std::vector<Word> g(k, Word(n));
    for (auto& r : g)
      for (auto& v : r) v = static_cast<std::uint8_t>(e(rng));
    if (rank_over(f, g) == k) return g;
  }
}

// Independent binomial prefix sum.
mpz_class volume(unsigned long n, unsigned long r) {
  mpz_class s = 0, t;
  for (unsigned long i = 0; i <= r; ++i) {
    mpz_bin_uiui(t.get_mpz_t(), n, i);
    s += t;
  }
  return s;
}

bool gv_oracle(unsigned long n, unsigned long k, unsigned long d) {
  mpz_class bound = 1;
  bound <<= (n - k + 1);
  return volume(n, d - 1) < bound;
}

}  // namespace

TEST(Field, AxiomsExhaustive) {
  for (unsigned q : {2U, 4U, 8U}) {
    const GaloisField f(q);
    for (unsigned a = 0; a < q; ++a) {
      EXPECT_EQ(f.mul(static_cast<std::uint8_t>(a), 1), a);
      EXPECT_EQ(f.mul(static_cast<std::uint8_t>(a), 0), 0);
      if (a != 0) {
        EXPECT_EQ(f.mul(static_cast<std::uint8_t>(a), f.inv(static_cast<std::uint8_t>(a))), 1);
      }
      for (unsigned b = 0; b < q; ++b) {
        const auto ua = static_cast<std::uint8_t>(a), ub = static_cast<std::uint8_t>(b);
        EXPECT_EQ(f.mul(ua, ub), f.mul(ub, ua));
        EXPECT_EQ(f.mul(ua, ub), oracle::gf_mul(a, b, bits_for(q), modulus_for(q)));
        if (a != 0 && b != 0) {
          EXPECT_NE(f.mul(ua, ub), 0);
        }
        for (unsigned c = 0; c < q; ++c) {
          const auto uc = static_cast<std::uint8_t>(c);
          EXPECT_EQ(f.mul(f.mul(ua, ub), uc), f.mul(ua, f.mul(ub, uc)));
          EXPECT_EQ(f.mul(ua, f.add(ub, uc)), f.add(f.mul(ua, ub), f.mul(ua, uc)));
        }
      }
    }
  }
  EXPECT_THROW(GaloisField(3), Error);
  EXPECT_THROW(GaloisField(4).inv(0), Error);
}

TEST(LinearCodes, CannedDistances) {
  EXPECT_EQ(min_distance(simplex_7_3_4()), 4U);
  EXPECT_EQ(min_distance(repetition(5)), 5U);
  EXPECT_EQ(min_distance(extended_hamming_8_4_4()), 4U);
  EXPECT_EQ(min_distance(parity_3_2_2()), 2U);
  EXPECT_EQ(brute_min_distance(2, simplex_7_3_4().generator()), 4U);
  EXPECT_EQ(brute_min_distance(2, extended_hamming_8_4_4().generator()), 4U);
}

TEST(LinearCodes, RepetitionSpecs) {
  EXPECT_EQ(repetition(52).spec(), (CodeSpec{2, 52, 1, 52, CodeStatus::constructed}));
  EXPECT_EQ(repetition(1).spec(), (CodeSpec{2, 1, 1, 1, CodeStatus::constructed}));
  EXPECT_EQ(repetition(4, 8).spec(), (CodeSpec{8, 4, 1, 4, CodeStatus::constructed}));
  EXPECT_EQ(to_string(repetition(4, 8).spec()), "[4,1,4]_8");
}

TEST(LinearCodes, EnumeratedDistanceMatchesBruteForce) {
  std::mt19937_64 rng(41);
  for (unsigned q : {2U, 4U, 8U})
    for (int t = 0; t < 25; ++t) {
      const std::size_t k = 1 + rng() % (q == 2 ? 8 : (q == 4 ? 4 : 3));
      const std::size_t n = k + rng() % 8;
      const auto g = random_generator(q, k, n, rng);
      const LinearCode c(q, g);
      EXPECT_EQ(c.spec().d, brute_min_distance(q, g)) << q << " " << n << " " << k;
      EXPECT_EQ(c.codewords().size(), all_codewords(q, g).size());
    }
}

TEST(LinearCodes, LargerBinaryCodeUsesPackedEnumeration) {
  std::mt19937_64 rng(43);
  const auto g = random_generator(2, 16, 70, rng);
  const LinearCode c(2, g);
  EXPECT_EQ(c.spec().d, brute_min_distance(2, g));
}

TEST(LinearCodes, Errors) {
  EXPECT_THROW(LinearCode(2, {parse_word("110"), parse_word("110")}), Error);
  EXPECT_THROW(LinearCode(2, {parse_word("120")}), Error);
  EXPECT_THROW(LinearCode(2, {parse_word("11"), parse_word("101")}), Error);
  try {
    LinearCode(2, {parse_word("1111")}, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::distance);
  }
  std::mt19937_64 rng(47);
  const auto big = random_generator(2, 30, 40, rng);
  try {
    LinearCode c(2, big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
  const LinearCode claimed(2, big, 3);
  EXPECT_EQ(claimed.spec().status, CodeStatus::derived);
  EXPECT_THROW(min_distance(claimed), Error);
}

TEST(ParityExtension, Examples) {
  EXPECT_EQ(extend_parity(simplex_7_3_4()).spec(), (CodeSpec{2, 8, 3, 4, CodeStatus::constructed}));
  EXPECT_EQ(extend_parity(repetition(52)).spec(), (CodeSpec{2, 53, 1, 52, CodeStatus::constructed}));
  EXPECT_EQ(extend_parity(repetition(1)).spec(), (CodeSpec{2, 2, 1, 2, CodeStatus::constructed}));
  EXPECT_THROW(extend_parity(repetition(3, 4)), Error);
}

TEST(ParityExtension, AllCodewordsEvenExhaustive) {
  std::mt19937_64 rng(53);
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + rng() % 10;
    const std::size_t n = k + rng() % 10;
    const LinearCode ext = extend_parity(LinearCode(2, random_generator(2, k, n, rng)));
    for (const auto& w : all_codewords(2, ext.generator())) {
      std::size_t wt = 0;
      for (auto v : w) wt += v;
      ASSERT_EQ(wt % 2, 0U);
    }
    EXPECT_EQ(ext.spec().d % 2, 0U);
  }
}

TEST(Concatenation, ParameterArithmetic) {
  const CodeSpec outer{4, 169, 24, 96, CodeStatus::table_known};
  const CodeSpec inner{2, 3, 2, 2, CodeStatus::constructed};
  const CodeSpec c = concatenate(outer, inner);
  EXPECT_EQ(to_string(c), "[507,48,192]");
  EXPECT_EQ(to_string(concatenate(CodeSpec{8, 4, 1, 4, CodeStatus::constructed}, CodeSpec{2, 7, 3, 4, CodeStatus::constructed})),
            "[28,3,16]");
  const CodeSpec id = concatenate(CodeSpec{2, 20, 5, 8, CodeStatus::table_known}, CodeSpec{2, 1, 1, 1, CodeStatus::constructed});
  EXPECT_EQ(id.n, 20U);
  EXPECT_EQ(id.k, 5U);
  EXPECT_EQ(id.d, 8U);
  try {
    concatenate(CodeSpec{8, 4, 1, 4}, inner);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::composition);
  }
  EXPECT_EQ(concatenate(CodeSpec{4, 10, 3, 5, CodeStatus::hypothetical}, inner).status, CodeStatus::hypothetical);
}

TEST(Concatenation, ConstructedDistanceAtLeastProduct) {
  const LinearCode inner8 = simplex_7_3_4();
  const LinearCode inner4 = parity_3_2_2();
  for (std::size_t len = 1; len <= 6; ++len) {
    const LinearCode c = concatenate(repetition(len, 8), inner8);
    EXPECT_EQ(c.length(), 7 * len);
    EXPECT_GE(brute_min_distance(2, c.generator()), 4 * len);
    const LinearCode c4 = concatenate(repetition(len, 4), inner4);
    EXPECT_GE(brute_min_distance(2, c4.generator()), 2 * len);
  }
  std::mt19937_64 rng(59);
  for (int t = 0; t < 20; ++t) {
    const LinearCode outer(4, random_generator(4, 1 + rng() % 3, 5, rng));
    const LinearCode c = concatenate(outer, inner4);
    EXPECT_GE(brute_min_distance(2, c.generator()), outer.spec().d * 2);
    const LinearCode outer8(8, random_generator(8, 1 + rng() % 2, 4, rng));
    const LinearCode c8 = concatenate(outer8, inner8);
    EXPECT_GE(brute_min_distance(2, c8.generator()), outer8.spec().d * 4);
  }
}

TEST(Gv, Examples) {
  EXPECT_EQ(binom_sum(24, 5), 55455);
  EXPECT_TRUE(gv_exists(4096, 772, 1024));
  EXPECT_FALSE(gv_exists(8, 7, 2));
  for (std::size_t n = 1; n <= 64; ++n) EXPECT_TRUE(gv_exists(n, n, 1));
  EXPECT_EQ(gv_max_k(24, 6), 9U);
  EXPECT_EQ(gv_max_k(8, 2), 5U);
  EXPECT_GE(gv_max_k(4096, 1024), 772U);
  const BigInt v = binom_sum(4096, 1023);
  EXPECT_EQ(v, volume(4096, 1023));
  EXPECT_EQ(bit_length(v) - 1, 3315U);
  EXPECT_LT(bit_length(v), 3324U + 1);
}

TEST(Gv, AgreesWithOracleAndMonotone) {
  for (std::size_t n = 1; n <= 60; n += 3)
    for (std::size_t d = 1; d <= n; ++d) {
      const std::size_t k = gv_max_k(n, d);
      if (k > 0) {
        EXPECT_TRUE(gv_oracle(n, k, d));
      }
      if (k < n) {
        EXPECT_FALSE(gv_oracle(n, k + 1, d));
      }
      for (std::size_t j = 1; j <= n; ++j) ASSERT_EQ(gv_exists(n, j, d), gv_oracle(n, j, d));
      if (k > 1) {
        EXPECT_TRUE(gv_exists(n, k - 1, d));
      }
    }
}

TEST(Gv, ManyMatchesSingle) {
  const std::vector<std::size_t> ds{8, 16, 24, 200, 64};
  const auto many = gv_max_k_many(600, ds);
  for (auto d : ds) EXPECT_EQ(many.at(d), gv_max_k(600, d));
}

TEST(Lemma62, Examples) {
  EXPECT_EQ(to_string(lemma62_params(1)), "[8,1,2]");
  EXPECT_EQ(to_string(lemma62_params(513)), "[4104,774,1026]");
  const CodeSpec c = lemma62_params(512);
  EXPECT_EQ(to_string(c), "[4096,773,1024]");
  EXPECT_TRUE(gv_exists(c.n, c.k, c.d));
  EXPECT_EQ(c.status, CodeStatus::gv_exists);
}

TEST(CodeTables, Parsing) {
  std::stringstream s("q,n,k,d,status\n2,68,8,32,table\n2,140,69,32,hypothetical\n2,128,59,33,upper-bound\n");
  const CodeTable t = parse_code_table(s);
  ASSERT_EQ(t.entries().size(), 3U);
  EXPECT_EQ(t.entries()[0], (CodeSpec{2, 68, 8, 32, CodeStatus::table_known}));
  EXPECT_EQ(t.entries()[1].status, CodeStatus::hypothetical);
  EXPECT_EQ(t.best_known_d(2, 68, 8), 32U);
  EXPECT_FALSE(t.best_known_d(2, 140, 69).has_value());
  EXPECT_EQ(t.upper_bound_d(2, 128, 59), 33U);
  EXPECT_EQ(t.existing(68, 32).size(), 1U);

  std::stringstream empty;
  EXPECT_TRUE(parse_code_table(empty).empty());

  std::stringstream bad("q,n,k,d,status\n2,10,3,4,table\n2,10,x,4,table\n");
  try {
    parse_code_table(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(CodeTables, ShippedFileLoads) {
  const CodeTable t = load_code_table(std::string(CRAIGLAT_DATA_DIR) + "/codes.csv");
  EXPECT_FALSE(t.empty());
  EXPECT_EQ(t.best_known_d(2, 68, 8), 32U);
}

TEST(CodeSpecs, Parsing) {
  EXPECT_EQ(parse_code_spec("52,1,52"), (CodeSpec{2, 52, 1, 52, CodeStatus::hypothetical}));
  EXPECT_EQ(parse_code_spec("169,24,96,4").q, 4U);
  EXPECT_THROW(parse_code_spec("10,3"), Error);
  EXPECT_THROW(parse_code_spec("10,11,2"), Error);
  EXPECT_THROW(parse_code_spec("10,3,4,5"), Error);
}

TEST(GeneratorFiles, RoundTrip) {
  const LinearCode c = concatenate(repetition(3, 8), simplex_7_3_4());
  std::stringstream s;
  write_generator(s, c);
  const LinearCode back = read_generator(s);
  EXPECT_EQ(back.generator(), c.generator());
  EXPECT_EQ(back.spec().d, c.spec().d);
  std::stringstream bad("2 3 1\n1 2 1\n");
  EXPECT_THROW(read_generator(bad), Error);
}
