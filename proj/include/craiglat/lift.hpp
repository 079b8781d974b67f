#pragma once

// Lifting binary codes into analogous Craig lattices, and the density
// pipelines built on top of that: the factor-8 concatenated-code lift,
// conditional evaluation against hypothetical codes, GV-driven constructions
// in dimensions 2p-2 and 24t, and per-dimension parameter sweeps.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "craiglat/codes.hpp"
#include "craiglat/craig.hpp"
#include "craiglat/exactnum.hpp"

namespace craiglat {

struct LiftResult {
  std::optional<IntegerLattice> lattice;  ///< absent above the basis cap
  CraigParams params;
  CodeSpec code;  ///< the length-(n+1) even-weight code actually lifted (k = 0: none)
  LogDensity density;
  BigInt min_norm_guarantee;           ///< 8m for lifts, 2m for the bare lattice
  std::uint64_t k = 0;
  std::optional<std::uint64_t> reference_k;  ///< dimension quoted alongside (e.g. a rounded constant)
  std::optional<LogDensity> baseline;        ///< density the construction is measured against
};

// ---------------------------------------------------------------------------

/// Coordinatewise reduction of a lattice vector; requires membership.
inline Word reduce_mod2(const CraigParams& p, std::span<const BigInt> v) {
  if (p.l % 2 == 0) throw Error(ErrorKind::parameter, "reduction mod 2 needs l odd");
  if (!membership(p, v)) throw Error(ErrorKind::membership, "vector is not in " + to_string(p));
  Word w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = mpz_odd_p(v[i].get_mpz_t()) != 0 ? 1 : 0;
  return w;
}

namespace detail {

/// Coefficients x in GF(2)^n with x * (basis mod 2) = word. Basis row r is
/// (x-1)^(n-r) up to an odd factor, so its mod-2 image has leading bit n-r.
inline Word solve_mod2(const CraigParams& p, const IntMatrix& basis, Word word) {
  Word x(p.n, 0);
  for (std::size_t pos = p.n; pos >= 1; --pos) {
    if (word[pos] == 0) continue;
    const std::size_t r = p.n - pos;
    x[r] = 1;
    for (std::size_t j = 0; j <= pos; ++j)
      if (mpz_odd_p(basis(r, j).get_mpz_t()) != 0) word[j] ^= 1U;
  }
  if (word[0] != 0) throw Error(ErrorKind::subcode, "word has odd weight");
  return x;
}

inline void check_code_for_lift(const CraigParams& p, const LinearCode& v) {
  if (v.spec().q != 2) throw Error(ErrorKind::field, "lifted code must be binary");
  if (v.length() != p.n + 1)
    throw Error(ErrorKind::argument, "code length " + std::to_string(v.length()) + " != n+1 = " + std::to_string(p.n + 1));
  for (const auto& row : v.generator()) {
    const auto weight = std::count(row.begin(), row.end(), std::uint8_t{1});
    if (weight % 2 != 0) throw Error(ErrorKind::subcode, "generator row of odd weight: code is not in the even-weight code");
  }
  if (v.spec().d < 8 * p.m)
    throw Error(ErrorKind::distance, "code distance " + std::to_string(v.spec().d) + " < 8m = " + std::to_string(8 * p.m));
}

}  // namespace detail

/// Preimage of coefficient vectors X (rows) mod 2: rows of X together with
/// 2 * identity, in Hermite form (n x n, upper triangular).
inline IntMatrix preimage_coefficients(std::size_t n, const std::vector<Word>& x_rows) {
  IntMatrix stacked(x_rows.size() + n, n);
  for (std::size_t i = 0; i < x_rows.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) stacked(i, j) = x_rows[i][j];
  for (std::size_t j = 0; j < n; ++j) stacked(x_rows.size() + j, j) = 2;
  HnfResult form = row_hnf(stacked, false);
  if (form.rank != n) throw Error(ErrorKind::rank, "preimage lattice is not full rank");
  return form.h;
}

/// { v in A_n^(m,l) : v mod 2 in V } for a binary even-weight code V of
/// length n+1 with d(V) >= 8m.
inline LiftResult lift_sublattice(const CraigParams& p, const LinearCode& v, std::size_t max_ambient = kDefaultMaxAmbient) {
  validate_prime(p);
  if (p.l == 2) throw Error(ErrorKind::parameter, "lifting needs l odd");
  detail::check_code_for_lift(p, v);

  LiftResult out;
  out.params = p;
  out.code = v.spec();
  out.k = v.dimension();
  out.min_norm_guarantee = 8 * p.m;
  out.density = center_density_lb(p, out.k);

  if (p.n + 1 <= max_ambient) {
    const IntegerLattice craig = craig_basis(p, max_ambient);
    std::vector<Word> x_rows;
    for (const auto& row : v.generator()) x_rows.push_back(detail::solve_mod2(p, craig.basis(), row));
    const IntMatrix h = preimage_coefficients(p.n, x_rows);
    BigInt index = 1;
    for (std::size_t i = 0; i < p.n; ++i) index *= h(i, i);
    out.lattice.emplace(h * craig.basis(), BigInt(index * index * craig.vol_sq()));
  }
  return out;
}

/// Parity-extends a binary [n, k, >= 8m] code and lifts it.
inline LiftResult lift_with_length_n_code(const CraigParams& p, const LinearCode& c,
                                          std::size_t max_ambient = kDefaultMaxAmbient) {
  if (c.spec().q != 2) throw Error(ErrorKind::field, "code must be binary");
  if (c.length() != p.n) throw Error(ErrorKind::argument, "code length " + std::to_string(c.length()) + " != n = " + std::to_string(p.n));
  if (c.spec().d < 8 * p.m)
    throw Error(ErrorKind::distance, "code distance " + std::to_string(c.spec().d) + " < 8m = " + std::to_string(8 * p.m));
  return lift_sublattice(p, extend_parity(c), max_ambient);
}

/// Formula-only variant for codes known by parameters alone.
inline LiftResult lift_with_length_n_code(const CraigParams& p, const CodeSpec& c) {
  validate_prime(p);
  if (c.q != 2) throw Error(ErrorKind::field, "code must be binary");
  if (c.n != p.n) throw Error(ErrorKind::argument, "code length " + std::to_string(c.n) + " != n = " + std::to_string(p.n));
  if (c.status == CodeStatus::upper_bound || c.status == CodeStatus::hypothetical)
    throw Error(ErrorKind::inapplicable, "code " + to_string(c) + " is not known to exist");
  if (c.d < 8 * p.m) throw Error(ErrorKind::distance, "code distance " + std::to_string(c.d) + " < 8m = " + std::to_string(8 * p.m));
  LiftResult out;
  out.params = p;
  out.code = CodeSpec{2, c.n + 1, c.k, c.d + (c.d % 2), c.status};
  out.k = c.k;
  out.min_norm_guarantee = 8 * p.m;
  out.density = center_density_lb(p, c.k);
  out.density.provenance = Provenance::formula_only;
  return out;
}

/// The bare lattice viewed as a (trivial) result, guarantee 2m.
inline LiftResult bare_result(const CraigParams& p, std::size_t max_ambient = kDefaultMaxAmbient) {
  validate_prime(p);
  LiftResult out;
  out.params = p;
  out.code = CodeSpec{2, p.n + 1, p.n, 2, CodeStatus::constructed};
  out.k = 0;
  out.min_norm_guarantee = 2 * p.m;
  out.density = center_density_lb(p, 0);
  if (p.n + 1 <= max_ambient) out.lattice.emplace(craig_basis(p, max_ambient));
  else out.density.provenance = Provenance::formula_only;
  return out;
}

// ---------------------------------------------------------------------------
// Reference densities

/// ((p+1)/12)^(p-1) / p^((p-5)/6) in dimension 2p-2, for primes p = 5 mod 6.
inline LogDensity mordell_weil_density(std::uint64_t p, int digits = 4) {
  if (!is_prime(p) || p % 6 != 5) throw Error(ErrorKind::domain, "need a prime p = 5 mod 6, got " + std::to_string(p));
  BigRational base(BigInt(static_cast<unsigned long>(p + 1)), BigInt(12));
  base.canonicalize();
  const auto e = static_cast<unsigned long>(2 * (p - 1));
  BigInt num = pow_ui(base.get_num(), e);
  BigInt den = pow_ui(base.get_den(), e) * pow_ui(BigInt(static_cast<unsigned long>(p)), static_cast<unsigned long>((p - 5) / 3));
  return make_density(RationalSqrt(num, den), Provenance::formula_only, digits);
}

/// min(sqrt d, 2)^n / 2^(2n-k) for a binary [n, k, d] code.
inline LogDensity construction_a_density(const CodeSpec& c, int digits = 4) {
  if (c.q != 2) throw Error(ErrorKind::field, "Construction A needs a binary code");
  if (c.n < 1 || c.k > c.n || c.d < 1) throw Error(ErrorKind::argument, "invalid code parameters " + to_string(c));
  BigInt num = pow_ui(BigInt(static_cast<unsigned long>(std::min<std::size_t>(c.d, 4))), static_cast<unsigned long>(c.n));
  BigInt den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * (2 * c.n - c.k)));
  return make_density(RationalSqrt(num, den), Provenance::formula_only, digits);
}

// ---------------------------------------------------------------------------
// Pipelines

inline constexpr std::uint64_t kImproveMinPrime = 1223;

/// m = nearest(n / (2 ln(n+1))) for n = p-1.
inline std::uint64_t improve_m(std::uint64_t n) {
  return round_half_up(static_cast<long double>(n) / (2.0L * std::log(static_cast<long double>(n + 1))));
}

/// The [n, 3, 4 floor(n/7)] code: repetition over GF(8) concatenated with
/// [7,3,4], padded with zero coordinates to length n.
inline LinearCode concatenated_7_3_4(std::size_t n) {
  if (n < 7) throw Error(ErrorKind::argument, "length must be at least 7");
  const LinearCode inner = simplex_7_3_4();
  const LinearCode outer = repetition(n / 7, 8);
  const LinearCode cat = concatenate(outer, inner);
  return cat.length() == n ? cat : pad_zeros(cat, n - cat.length());
}

/// A_{p-1}^(m,p) lifted by the parity-extended concatenated [p-1, 3] code:
/// exactly 8 times the bare density.
inline LiftResult improve_craig_8x(std::uint64_t p, std::size_t max_ambient = kDefaultMaxAmbient) {
  if (!is_prime(p)) throw Error(ErrorKind::domain, std::to_string(p) + " is not prime");
  if (p < kImproveMinPrime) throw Error(ErrorKind::regime, "p must be at least 1223 for the concatenated code to reach 8m");
  const std::uint64_t n = p - 1;
  const CraigParams params{n, improve_m(n), p};
  const LinearCode code = concatenated_7_3_4(n);
  LiftResult out = lift_with_length_n_code(params, code, max_ambient);
  out.baseline = center_density_lb(params, 0);
  if (!out.lattice) out.density.provenance = Provenance::formula_only;
  return out;
}

/// Verdict for a construction that needs a code not known to exist.
enum class CodeAvailability { realized, open, refuted_by_table };

inline const char* to_string(CodeAvailability a) {
  switch (a) {
    case CodeAvailability::realized: return "realized";
    case CodeAvailability::open: return "open";
    case CodeAvailability::refuted_by_table: return "refuted-by-table";
  }
  return "?";
}

struct ConditionalVerdict {
  CodeSpec required;
  LogDensity achieved_density;
  std::optional<std::string> target_name;
  std::optional<BigRational> target_log2;  ///< record to beat, exact decimal
  std::optional<Log2Difference> margin;
  CodeAvailability status = CodeAvailability::open;
};

/// Density A_n^(m,l) would reach with the required [n or n+1, k, d] code, and
/// whether the code table / GV oracle settle its existence.
inline ConditionalVerdict conditional_eval(const CraigParams& p, const CodeSpec& required, const CodeTable& table,
                                           std::optional<std::string> target_name = std::nullopt,
                                           std::optional<BigRational> target_log2 = std::nullopt, int digits = 4) {
  validate_prime(p);
  if (required.q != 2) throw Error(ErrorKind::field, "required code must be binary");
  if (required.n != p.n && required.n != p.n + 1)
    throw Error(ErrorKind::argument, "required code length must be n or n+1");
  if (required.d < 8 * p.m)
    throw Error(ErrorKind::inapplicable, "required distance " + std::to_string(required.d) + " < 8m = " + std::to_string(8 * p.m));
  ConditionalVerdict v;
  v.required = required;
  v.achieved_density = center_density_lb(p, required.k, digits);
  v.achieved_density.provenance = Provenance::formula_only;
  v.target_name = std::move(target_name);
  v.target_log2 = std::move(target_log2);
  if (v.target_log2) v.margin = log2_difference(v.achieved_density.delta_sq, *v.target_log2, digits);

  const auto known = table.best_known_d(2, required.n, required.k);
  const auto bound = table.upper_bound_d(2, required.n, required.k);
  if ((known && *known >= required.d) || gv_exists(required.n, required.k, required.d))
    v.status = CodeAvailability::realized;
  else if (bound && *bound < required.d)
    v.status = CodeAvailability::refuted_by_table;
  else
    v.status = CodeAvailability::open;
  return v;
}

/// Dimension 2p-2, m = floor((p-1)/16), l = next_prime(2p), and the largest
/// GV dimension for a [2p-2, k, (p-1)/2] code.
inline LiftResult mw_beater_search(std::uint64_t p) {
  if (!is_prime(p) || p % 6 != 5) throw Error(ErrorKind::regime, "need a prime p = 5 mod 6, got " + std::to_string(p));
  if (p < 1667 || p > 2039) throw Error(ErrorKind::regime, "p outside [1667, 2039]: no improvement guarantee");
  const std::uint64_t n = 2 * p - 2;
  const CraigParams params{n, (p - 1) / 16, next_prime(2 * p)};
  const std::size_t d = (p - 1) / 2;
  const std::size_t k = gv_max_k(n, d);
  LiftResult out = lift_with_length_n_code(params, CodeSpec{2, n, k, d, CodeStatus::gv_exists});
  out.reference_k = 3776 * (p - 1) / 10000;
  out.baseline = mordell_weil_density(p);
  if (out.density.delta_sq <= out.baseline->delta_sq)
    throw Error(ErrorKind::domain, "construction does not beat the Mordell-Weil density at p = " + std::to_string(p));
  return out;
}

/// next_prime(2p) < 2^1.001 p, decided exactly: next_prime(2p)^1000 < 2^1001 p^1000.
inline bool mw_prime_bound_holds(std::uint64_t p) {
  const BigInt l(static_cast<unsigned long>(next_prime(2 * p)));
  const BigInt lhs = pow_ui(l, 1000);
  BigInt rhs = pow_ui(BigInt(static_cast<unsigned long>(p)), 1000);
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), 1001);
  return lhs < rhs;
}

/// N = 24t: m = floor(3t/4), l = next_prime(N+1), code [N, k, 6t] with the
/// exact GV dimension; the quoted floor(4.5312 t) is kept as reference_k.
inline LiftResult pipeline_24n(std::uint64_t dim) {
  if (dim % 24 != 0) throw Error(ErrorKind::argument, "dimension must be a multiple of 24");
  if (dim < 4104 || dim > 8640) throw Error(ErrorKind::regime, "dimension outside [4104, 8640]");
  const std::uint64_t t = dim / 24;
  const CraigParams params{dim, 3 * t / 4, next_prime(dim + 1)};
  const std::size_t d = 6 * t;
  if (8 * params.m > d) throw Error(ErrorKind::distance, "8m exceeds the code distance 6t");
  const std::size_t k = gv_max_k(dim, d);
  const std::uint64_t quoted = 45312 * t / 10000;
  if (!gv_exists(dim, quoted, d)) throw Error(ErrorKind::domain, "GV oracle rejects the quoted dimension");
  LiftResult out = lift_with_length_n_code(params, CodeSpec{2, dim, k, d, CodeStatus::gv_exists});
  out.reference_k = quoted;
  return out;
}

/// Best density over m in [1, max(2 * choose_params(n).m, 8)], l =
/// next_prime(n+1), comparing the bare lattice (k = 0, guarantee 2m) with
/// lifts by the repetition code, GV codes and table codes of length n with
/// d >= 8m. Ties go to the smaller m.
inline LiftResult sweep_dimension(std::uint64_t n, const CodeTable* table = nullptr) {
  if (n < 8) throw Error(ErrorKind::argument, "sweep needs n >= 8");
  const CraigParams base = choose_params(n);
  const std::uint64_t l = base.l;
  const std::uint64_t m_hi = std::max<std::uint64_t>(2 * base.m, 8);

  std::vector<std::size_t> distances;
  for (std::uint64_t m = 1; m <= m_hi && 8 * m <= n; ++m) distances.push_back(8 * m);
  const auto gv = gv_max_k_many(n, distances);

  std::optional<LiftResult> best;
  auto consider = [&](LiftResult r) {
    if (!best || r.density.delta_sq > best->density.delta_sq) best = std::move(r);
  };
  for (std::uint64_t m = 1; m <= m_hi; ++m) {
    const CraigParams p{n, m, l};
    try {
      validate_prime(p);
    } catch (const Error&) {
      break;
    }
    LiftResult bare;
    bare.params = p;
    bare.code = CodeSpec{2, n + 1, n, 2, CodeStatus::constructed};
    bare.min_norm_guarantee = 2 * m;
    bare.density = center_density_lb(p, 0);
    bare.density.provenance = Provenance::formula_only;
    consider(std::move(bare));
    if (8 * m > n) continue;

    CodeSpec pick{2, n, 1, n, CodeStatus::constructed};
    const std::size_t k_gv = gv.at(8 * m);
    if (k_gv > pick.k) pick = CodeSpec{2, n, k_gv, 8 * m, CodeStatus::gv_exists};
    if (table != nullptr)
      for (const auto& c : table->existing(n, 8 * m))
        if (c.k > pick.k) pick = c;
    consider(lift_with_length_n_code(p, pick));
  }
  return std::move(*best);
}

}  // namespace craiglat
