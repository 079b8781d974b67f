#pragma once

// Linear codes over GF(2), GF(4) and GF(8): canned generators, parity
// extension, concatenation, exact minimum distance by enumeration, and
// Gilbert-Varshamov existence arithmetic with exact binomial sums.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "craiglat/exactnum.hpp"

namespace craiglat {

/// Enumeration cap for exact minimum distance: at most 2^26 codewords.
inline constexpr std::uint64_t kCodewordCap = std::uint64_t{1} << 26U;

enum class CodeStatus {
  constructed,  ///< explicit generator, distance verified by enumeration
  derived,      ///< explicit generator, distance bounded by a composition argument only
  table_known,  ///< cited best-known code
  gv_exists,    ///< existence from the Gilbert-Varshamov bound
  hypothetical, ///< not known to exist
  upper_bound,  ///< d is an upper bound for [n, k] codes
};

inline const char* to_string(CodeStatus s) {
  switch (s) {
    case CodeStatus::constructed: return "constructed";
    case CodeStatus::derived: return "derived";
    case CodeStatus::table_known: return "table";
    case CodeStatus::gv_exists: return "gv";
    case CodeStatus::hypothetical: return "hypothetical";
    case CodeStatus::upper_bound: return "upper-bound";
  }
  return "?";
}

inline CodeStatus parse_code_status(const std::string& s) {
  if (s == "constructed") return CodeStatus::constructed;
  if (s == "derived") return CodeStatus::derived;
  if (s == "table" || s == "table-known") return CodeStatus::table_known;
  if (s == "gv" || s == "gv-exists") return CodeStatus::gv_exists;
  if (s == "hypothetical") return CodeStatus::hypothetical;
  if (s == "upper-bound") return CodeStatus::upper_bound;
  throw Error(ErrorKind::parse, "unknown code status '" + s + "'");
}

struct CodeSpec {
  unsigned q = 2;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t d = 0;
  CodeStatus status = CodeStatus::hypothetical;

  friend bool operator==(const CodeSpec&, const CodeSpec&) = default;
};

inline std::string to_string(const CodeSpec& c) {
  std::string s = "[" + std::to_string(c.n) + "," + std::to_string(c.k) + "," + std::to_string(c.d) + "]";
  if (c.q != 2) s += "_" + std::to_string(c.q);
  return s;
}

inline void check_spec(const CodeSpec& c) {
  if (c.q != 2 && c.q != 4 && c.q != 8) throw Error(ErrorKind::field, "field size must be 2, 4 or 8");
  if (c.k < 1 || c.k > c.n) throw Error(ErrorKind::argument, "code needs 1 <= k <= n: " + to_string(c));
  if (c.d < 1 || c.d > c.n) throw Error(ErrorKind::argument, "code needs 1 <= d <= n: " + to_string(c));
}

/// Parses "n,k,d" (binary) or "n,k,d,q".
inline CodeSpec parse_code_spec(const std::string& text, CodeStatus status = CodeStatus::hypothetical) {
  std::vector<std::size_t> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "bad code parameter '" + item + "'");
    }
  }
  if (v.size() != 3 && v.size() != 4) throw Error(ErrorKind::parse, "code spec must be n,k,d or n,k,d,q");
  CodeSpec c{v.size() == 4 ? static_cast<unsigned>(v[3]) : 2U, v[0], v[1], v[2], status};
  check_spec(c);
  return c;
}

// ---------------------------------------------------------------------------

/// GF(2^b) for b in {1, 2, 3}: GF(2), GF(2)[x]/(x^2+x+1), GF(2)[x]/(x^3+x+1).
/// Elements are bit-polynomials 0..q-1; addition is XOR.
class GaloisField {
 public:
  explicit GaloisField(unsigned q) : q_(q) {
    unsigned modulus = 0;
    switch (q) {
      case 2: modulus = 0b11; bits_ = 1; break;
      case 4: modulus = 0b111; bits_ = 2; break;
      case 8: modulus = 0b1011; bits_ = 3; break;
      default: throw Error(ErrorKind::field, "unsupported field size " + std::to_string(q));
    }
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        unsigned prod = 0;
        for (unsigned i = 0; i < bits_; ++i)
          if ((b >> i) & 1U) prod ^= a << i;
        for (unsigned i = 2 * bits_; i-- > bits_;)
          if ((prod >> i) & 1U) prod ^= modulus << (i - bits_);
        mul_[a][b] = static_cast<std::uint8_t>(prod);
      }
    for (unsigned a = 1; a < q; ++a)
      for (unsigned b = 1; b < q; ++b)
        if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
  }

  unsigned size() const noexcept { return q_; }
  unsigned bits() const noexcept { return bits_; }
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const noexcept { return a ^ b; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const noexcept { return mul_[a][b]; }
  std::uint8_t inv(std::uint8_t a) const {
    if (a == 0) throw Error(ErrorKind::field, "zero has no inverse");
    return inv_[a];
  }

 private:
  unsigned q_;
  unsigned bits_ = 0;
  std::array<std::array<std::uint8_t, 8>, 8> mul_{};
  std::array<std::uint8_t, 8> inv_{};
};

using Word = std::vector<std::uint8_t>;

/// Rank of a k x n matrix over GF(q) by Gaussian elimination.
inline std::size_t rank_over(const GaloisField& f, std::vector<Word> rows) {
  std::size_t rank = 0;
  const std::size_t n = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    const std::uint8_t inv = f.inv(rows[rank][col]);
    for (auto& v : rows[rank]) v = f.mul(v, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const std::uint8_t c = rows[i][col];
      for (std::size_t j = 0; j < n; ++j) rows[i][j] ^= f.mul(c, rows[rank][j]);
    }
    ++rank;
  }
  return rank;
}

namespace detail {

inline std::size_t binary_min_weight(const std::vector<Word>& gen, std::size_t n) {
  const std::size_t k = gen.size();
  const std::size_t words = (n + 63) / 64;
  std::vector<std::vector<std::uint64_t>> packed(k, std::vector<std::uint64_t>(words));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (gen[i][j] != 0) packed[i][j / 64] |= std::uint64_t{1} << (j % 64);

  // Message space split on the top `split` bits; each worker walks a Gray
  // code over the remaining bits starting from its fixed prefix.
  const unsigned hw = std::max(1U, std::thread::hardware_concurrency());
  std::size_t split = 0;
  while ((std::size_t{1} << (split + 1)) <= hw && split + 1 < k && k - split > 12) ++split;
  const std::size_t low = k - split;
  const std::size_t parts = std::size_t{1} << split;
  std::vector<std::size_t> best(parts, std::numeric_limits<std::size_t>::max());

  auto worker = [&](std::size_t part) {
    std::vector<std::uint64_t> cw(words, 0);
    for (std::size_t b = 0; b < split; ++b)
      if ((part >> b) & 1U)
        for (std::size_t w = 0; w < words; ++w) cw[w] ^= packed[low + b][w];
    auto weight = [&] {
      std::size_t s = 0;
      for (auto v : cw) s += static_cast<std::size_t>(std::popcount(v));
      return s;
    };
    std::size_t local = std::numeric_limits<std::size_t>::max();
    if (part != 0) local = weight();
    const std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t g = 1; g < steps; ++g) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(g));
      for (std::size_t w = 0; w < words; ++w) cw[w] ^= packed[bit][w];
      local = std::min(local, weight());
    }
    best[part] = local;
  };

  if (parts == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t p = 0; p < parts; ++p) pool.emplace_back(worker, p);
    for (auto& t : pool) t.join();
  }
  return *std::min_element(best.begin(), best.end());
}

inline std::size_t qary_min_weight(const GaloisField& f, const std::vector<Word>& gen, std::size_t n) {
  const std::size_t k = gen.size();
  const unsigned q = f.size();
  std::vector<std::uint8_t> msg(k, 0);
  Word cw(n, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    // Odometer increment; changing digit a -> b adds (a xor b) * row in characteristic 2.
    std::size_t i = 0;
    while (i < k && msg[i] == q - 1) {
      const std::uint8_t delta = msg[i];
      for (std::size_t j = 0; j < n; ++j) cw[j] ^= f.mul(delta, gen[i][j]);
      msg[i] = 0;
      ++i;
    }
    if (i == k) break;
    const std::uint8_t delta = static_cast<std::uint8_t>(msg[i] ^ (msg[i] + 1));
    for (std::size_t j = 0; j < n; ++j) cw[j] ^= f.mul(delta, gen[i][j]);
    ++msg[i];
    const auto w = static_cast<std::size_t>(std::count_if(cw.begin(), cw.end(), [](std::uint8_t v) { return v != 0; }));
    best = std::min(best, w);
  }
  return best;
}

}  // namespace detail

/// Linear code with an explicit k x n generator over GF(q).
class LinearCode {
 public:
  /// Builds from generator rows; the rank must equal the row count. The
  /// distance is enumerated exactly when q^k fits the cap; otherwise
  /// `claimed_d` is required and the status becomes `derived`.
  LinearCode(unsigned q, std::vector<Word> generator, std::optional<std::size_t> claimed_d = std::nullopt)
      : field_(q), generator_(std::move(generator)) {
    if (generator_.empty()) throw Error(ErrorKind::argument, "generator needs at least one row");
    const std::size_t n = generator_.front().size();
    for (const auto& r : generator_) {
      if (r.size() != n) throw Error(ErrorKind::argument, "ragged generator matrix");
      for (auto v : r)
        if (v >= q) throw Error(ErrorKind::field, "generator entry outside GF(" + std::to_string(q) + ")");
    }
    const std::size_t k = generator_.size();
    if (rank_over(field_, generator_) != k) throw Error(ErrorKind::rank, "generator rows are dependent");
    spec_ = CodeSpec{q, n, k, 0, CodeStatus::constructed};
    if (enumerable()) {
      spec_.d = q == 2 ? detail::binary_min_weight(generator_, n) : detail::qary_min_weight(field_, generator_, n);
      if (claimed_d && spec_.d < *claimed_d)
        throw Error(ErrorKind::distance, "enumerated distance " + std::to_string(spec_.d) + " below claimed " + std::to_string(*claimed_d));
    } else {
      if (!claimed_d) throw Error(ErrorKind::capacity, "q^k exceeds the enumeration cap and no distance bound was given");
      spec_.d = *claimed_d;
      spec_.status = CodeStatus::derived;
    }
  }

  const CodeSpec& spec() const noexcept { return spec_; }
  const std::vector<Word>& generator() const noexcept { return generator_; }
  const GaloisField& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return spec_.n; }
  std::size_t dimension() const noexcept { return spec_.k; }

  bool enumerable() const {
    const double bits = static_cast<double>(generator_.size()) * static_cast<double>(field_.bits());
    return bits <= 26.0;
  }

  /// All codewords (small codes only).
  std::vector<Word> codewords() const {
    if (!enumerable()) throw Error(ErrorKind::capacity, "codeword list exceeds enumeration cap");
    const std::size_t k = generator_.size();
    const unsigned q = field_.size();
    std::vector<Word> out;
    std::vector<std::uint8_t> msg(k, 0);
    while (true) {
      Word cw(spec_.n, 0);
      for (std::size_t i = 0; i < k; ++i)
        if (msg[i] != 0)
          for (std::size_t j = 0; j < spec_.n; ++j) cw[j] ^= field_.mul(msg[i], generator_[i][j]);
      out.push_back(std::move(cw));
      std::size_t i = 0;
      while (i < k && ++msg[i] == q) msg[i++] = 0;
      if (i == k) break;
    }
    return out;
  }

 private:
  GaloisField field_;
  std::vector<Word> generator_;
  CodeSpec spec_;
};

/// Exact minimum nonzero weight; capacity error beyond 2^26 codewords.
inline std::size_t min_distance(const LinearCode& c) {
  if (!c.enumerable()) throw Error(ErrorKind::capacity, "q^k exceeds 2^26 codewords");
  return c.spec().d;
}

// ---------------------------------------------------------------------------
// Canned generators

inline Word parse_word(const std::string& bits) {
  Word w;
  for (char c : bits) w.push_back(static_cast<std::uint8_t>(c - '0'));
  return w;
}

/// [7,3,4] simplex code (dual of the Hamming [7,4,3] code).
inline LinearCode simplex_7_3_4() {
  return LinearCode(2, {parse_word("0001111"), parse_word("0110011"), parse_word("1010101")});
}

/// [8,4,4] extended Hamming code (first-order Reed-Muller RM(1,3)).
inline LinearCode extended_hamming_8_4_4() {
  return LinearCode(2, {parse_word("11111111"), parse_word("00001111"), parse_word("00110011"), parse_word("01010101")});
}

/// [3,2,2] single parity-check code.
inline LinearCode parity_3_2_2() { return LinearCode(2, {parse_word("101"), parse_word("011")}); }

inline LinearCode repetition(std::size_t n, unsigned q = 2) {
  if (n < 1) throw Error(ErrorKind::argument, "repetition length must be positive");
  return LinearCode(q, {Word(n, 1)});
}

/// Appends an overall parity column to a binary code.
inline LinearCode extend_parity(const LinearCode& c) {
  if (c.spec().q != 2) throw Error(ErrorKind::field, "parity extension needs a binary code");
  std::vector<Word> rows = c.generator();
  for (auto& r : rows) {
    std::uint8_t p = 0;
    for (auto v : r) p ^= v;
    r.push_back(p);
  }
  const std::size_t d = c.spec().d;
  return LinearCode(2, std::move(rows), d + (d % 2));
}

/// Appends `extra` all-zero coordinates.
inline LinearCode pad_zeros(const LinearCode& c, std::size_t extra) {
  std::vector<Word> rows = c.generator();
  for (auto& r : rows) r.resize(r.size() + extra, 0);
  return LinearCode(c.spec().q, std::move(rows), c.spec().d);
}

/// Parameters of the concatenation of an outer [N,K,D] code over GF(2^b)
/// with an inner binary [n_i, b, d_i] code: [N n_i, K b, >= D d_i].
inline CodeSpec concatenate(const CodeSpec& outer, const CodeSpec& inner) {
  if (inner.q != 2) throw Error(ErrorKind::composition, "inner code must be binary");
  if ((1U << inner.k) != outer.q)
    throw Error(ErrorKind::composition, "inner dimension " + std::to_string(inner.k) + " does not match outer field size " + std::to_string(outer.q));
  CodeSpec out{2, outer.n * inner.n, outer.k * inner.k, outer.d * inner.d, CodeStatus::derived};
  const bool both_real = outer.status == CodeStatus::constructed || outer.status == CodeStatus::table_known;
  if (outer.status == CodeStatus::hypothetical) out.status = CodeStatus::hypothetical;
  else if (!both_real) out.status = outer.status;
  return out;
}

/// Explicit concatenated generator: each outer symbol s = sum_j s_j x^j maps
/// to sum_j s_j * inner_row_j, and the rows x^j * outer_row span the code.
inline LinearCode concatenate(const LinearCode& outer, const LinearCode& inner) {
  const CodeSpec params = concatenate(outer.spec(), inner.spec());
  const GaloisField& f = outer.field();
  const std::size_t ni = inner.length();
  std::vector<Word> rows;
  for (const auto& orow : outer.generator())
    for (unsigned j = 0; j < f.bits(); ++j) {
      Word out(outer.length() * ni, 0);
      const auto alpha = static_cast<std::uint8_t>(1U << j);
      for (std::size_t pos = 0; pos < outer.length(); ++pos) {
        const std::uint8_t s = f.mul(alpha, orow[pos]);
        for (unsigned bit = 0; bit < f.bits(); ++bit)
          if ((s >> bit) & 1U)
            for (std::size_t t = 0; t < ni; ++t) out[pos * ni + t] ^= inner.generator()[bit][t];
      }
      rows.push_back(std::move(out));
    }
  return LinearCode(2, std::move(rows), params.d);
}

// ---------------------------------------------------------------------------
// Gilbert-Varshamov arithmetic (exact integers throughout)

/// V(n, d-1) < 2^(n-k+1).
inline bool gv_exists(std::size_t n, std::size_t k, std::size_t d) {
  if (d < 1 || d > n || k > n) throw Error(ErrorKind::argument, "gv_exists needs 1 <= d <= n and k <= n");
  const BigInt v = binom_sum(n, d - 1);
  return bit_length(v) <= n - k + 1;
}

/// Largest k with gv_exists(n, k, d); 0 when there is none.
inline std::size_t gv_max_k(std::size_t n, std::size_t d) {
  if (d < 1 || d > n) throw Error(ErrorKind::argument, "gv_max_k needs 1 <= d <= n");
  const std::size_t bits = bit_length(binom_sum(n, d - 1));
  if (bits > n + 1) return 0;
  return std::min(n, n + 1 - bits);
}

/// gv_max_k(n, d) for every d in `distances` (sorted or not) in one pass over
/// the binomial prefix sums.
inline std::map<std::size_t, std::size_t> gv_max_k_many(std::size_t n, std::vector<std::size_t> distances) {
  std::sort(distances.begin(), distances.end());
  std::map<std::size_t, std::size_t> out;
  BigInt sum = 0;
  BigInt term = 1;
  std::size_t i = 0;  // next index to add
  for (std::size_t d : distances) {
    if (d < 1 || d > n) throw Error(ErrorKind::argument, "gv_max_k needs 1 <= d <= n");
    while (i <= d - 1) {
      sum += term;
      term *= static_cast<unsigned long>(n - i);
      mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i + 1));
      ++i;
    }
    const std::size_t bits = bit_length(sum);
    out[d] = bits > n + 1 ? 0 : std::min(n, n + 1 - bits);
  }
  return out;
}

/// [8t, floor((6 log2 3 - 8) t), 2t], with the floor taken exactly as
/// floor(log2(3^(6t))) - 8t.
inline CodeSpec lemma62_params(std::size_t t) {
  if (t < 1) throw Error(ErrorKind::argument, "t must be positive");
  const BigInt power = pow_ui(BigInt(3), static_cast<unsigned long>(6 * t));
  const std::size_t k = bit_length(power) - 1 - 8 * t;
  CodeSpec c{2, 8 * t, k, 2 * t, CodeStatus::gv_exists};
  if (!gv_exists(c.n, c.k, c.d)) throw Error(ErrorKind::domain, "GV oracle rejects " + to_string(c));
  return c;
}

// ---------------------------------------------------------------------------
// Code tables (CSV "q,n,k,d,status") and generator files ("q n k" + k rows)

class CodeTable {
 public:
  void add(const CodeSpec& c) {
    if (c.q != 2 && c.q != 4 && c.q != 8) throw Error(ErrorKind::field, "field size must be 2, 4 or 8");
    entries_.push_back(c);
  }

  const std::vector<CodeSpec>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Largest d among existing (constructed / table / GV) [n, k]_q codes.
  std::optional<std::size_t> best_known_d(unsigned q, std::size_t n, std::size_t k) const {
    std::optional<std::size_t> best;
    for (const auto& e : entries_)
      if (e.q == q && e.n == n && e.k == k && exists(e.status)) best = std::max(best.value_or(0), e.d);
    return best;
  }

  std::optional<std::size_t> upper_bound_d(unsigned q, std::size_t n, std::size_t k) const {
    std::optional<std::size_t> bound;
    for (const auto& e : entries_)
      if (e.q == q && e.n == n && e.k == k && e.status == CodeStatus::upper_bound)
        bound = std::min(bound.value_or(std::numeric_limits<std::size_t>::max()), e.d);
    return bound;
  }

  /// Existing binary codes of length n with distance >= d.
  std::vector<CodeSpec> existing(std::size_t n, std::size_t min_d) const {
    std::vector<CodeSpec> out;
    for (const auto& e : entries_)
      if (e.q == 2 && e.n == n && e.d >= min_d && exists(e.status)) out.push_back(e);
    return out;
  }

  static bool exists(CodeStatus s) {
    return s == CodeStatus::constructed || s == CodeStatus::derived || s == CodeStatus::table_known ||
           s == CodeStatus::gv_exists;
  }

 private:
  std::vector<CodeSpec> entries_;
};

inline CodeTable parse_code_table(std::istream& in) {
  CodeTable table;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[0] == '#') continue;
    if (!header_seen && line.rfind("q,", 0) == 0) {
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string item;
    while (std::getline(ss, item, ',')) f.push_back(item);
    if (f.size() != 5) throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": expected 5 fields");
    try {
      CodeSpec c{static_cast<unsigned>(std::stoul(f[0])), std::stoull(f[1]), std::stoull(f[2]), std::stoull(f[3]),
                 parse_code_status(f[4])};
      check_spec(c);
      table.add(c);
    } catch (const Error& e) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + e.what());
    } catch (const std::exception&) {
      throw Error(ErrorKind::parse, "line " + std::to_string(line_no) + ": malformed numeric field");
    }
  }
  return table;
}

inline CodeTable load_code_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open code table '" + path + "'");
  return parse_code_table(in);
}

inline LinearCode read_generator(std::istream& in) {
  unsigned q = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  if (!(in >> q >> n >> k)) throw Error(ErrorKind::parse, "generator header must be 'q n k'");
  std::vector<Word> rows(k, Word(n));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      unsigned v = 0;
      if (!(in >> v)) throw Error(ErrorKind::parse, "generator truncated at row " + std::to_string(i + 1));
      if (v >= q) throw Error(ErrorKind::parse, "generator entry out of range at row " + std::to_string(i + 1));
      rows[i][j] = static_cast<std::uint8_t>(v);
    }
  return LinearCode(q, std::move(rows));
}

inline void write_generator(std::ostream& out, const LinearCode& c) {
  out << c.spec().q << ' ' << c.length() << ' ' << c.dimension() << '\n';
  for (const auto& r : c.generator()) {
    for (std::size_t j = 0; j < r.size(); ++j) out << (j ? " " : "") << static_cast<unsigned>(r[j]);
    out << '\n';
  }
}

}  // namespace craiglat
