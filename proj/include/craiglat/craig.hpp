#pragma once

// Analogous Craig lattices A_n^(m,l): the Z-span of
//   (x-1)^n, ..., (x-1)^m, l(x-1)^(m-1), ..., l(x-1)
// inside Z<1, x, ..., x^n> = Z^(n+1), with their volumes, membership tests and
// center-density lower bounds.

#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "craiglat/exactnum.hpp"

namespace craiglat {

/// Default ceiling on the ambient dimension of explicitly built bases.
inline constexpr std::size_t kDefaultMaxAmbient = 512;

/// m < n/2 is the strict regime; n/2 <= m <= (n+1)/2 is only admissible for
/// constructions that start from a length-n code (parity-extension route).
enum class Regime { strict, extended };

struct CraigParams {
  std::uint64_t n = 0;
  std::uint64_t m = 1;
  std::uint64_t l = 0;

  friend bool operator==(const CraigParams&, const CraigParams&) = default;
};

inline std::string to_string(const CraigParams& p) {
  return "A_" + std::to_string(p.n) + "^(" + std::to_string(p.m) + "," + std::to_string(p.l) + ")";
}

/// Validates the triple and reports its regime. m = 1 is always admitted.
inline Regime validate(const CraigParams& p) {
  if (p.n < 1) throw Error(ErrorKind::parameter, "n must be positive");
  if (p.m < 1) throw Error(ErrorKind::parameter, "m must be positive");
  if (p.l < p.n + 1) throw Error(ErrorKind::parameter, "l must be at least n+1 (" + to_string(p) + ")");
  if (2 * p.m < p.n) return Regime::strict;
  if (p.m == 1 || 2 * p.m <= p.n + 1) return Regime::extended;
  throw Error(ErrorKind::parameter, "m must satisfy m <= (n+1)/2 (" + to_string(p) + ")");
}

/// Same as validate, and additionally requires l prime (needed for mu >= 2m).
inline Regime validate_prime(const CraigParams& p) {
  const Regime r = validate(p);
  if (!is_prime(p.l)) throw Error(ErrorKind::parameter, "l must be prime for the norm bound (" + to_string(p) + ")");
  return r;
}

/// A full-rank integer lattice given by an r x N basis with its squared
/// covolume computed once at construction.
class IntegerLattice {
 public:
  explicit IntegerLattice(IntMatrix basis) : basis_(std::move(basis)) {
    if (basis_.empty()) throw Error(ErrorKind::rank, "empty basis");
    if (basis_.rows() > basis_.cols()) throw Error(ErrorKind::rank, "rank exceeds ambient dimension");
    vol_sq_ = lattice_volume_squared(basis_);
    if (sgn(vol_sq_) == 0) throw Error(ErrorKind::rank, "basis rows are linearly dependent");
  }

  IntegerLattice(IntMatrix basis, BigInt vol_sq) : basis_(std::move(basis)), vol_sq_(std::move(vol_sq)) {}

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t rank() const noexcept { return basis_.rows(); }
  const IntMatrix& basis() const noexcept { return basis_; }
  const BigInt& vol_sq() const noexcept { return vol_sq_; }

 private:
  IntMatrix basis_;
  BigInt vol_sq_;
};

enum class Provenance { plain, lifted, formula_only };

inline const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::plain: return "plain";
    case Provenance::lifted: return "lifted";
    case Provenance::formula_only: return "formula-only";
  }
  return "?";
}

/// Exact center density (through its square) with a rendered log2 value.
struct LogDensity {
  RationalSqrt delta_sq;
  std::string rendered;
  Provenance provenance = Provenance::plain;

  std::string render(int digits) const { return log2_of(delta_sq, digits); }
};

inline LogDensity make_density(RationalSqrt delta_sq, Provenance provenance, int digits = 4) {
  LogDensity d{std::move(delta_sq), {}, provenance};
  d.rendered = log2_of(d.delta_sq, digits);
  return d;
}

// ---------------------------------------------------------------------------

/// Coefficients of (x-1)^j in the monomial basis 1, x, ..., x^n.
inline std::vector<BigInt> shifted_power(std::uint64_t j, std::uint64_t n) {
  std::vector<BigInt> c(n + 1);
  for (std::uint64_t i = 0; i <= j; ++i) {
    c[i] = binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(i));
    if (((j - i) & 1U) != 0) c[i] = -c[i];
  }
  return c;
}

/// Basis rows (x-1)^n, ..., (x-1)^m, l(x-1)^(m-1), ..., l(x-1).
inline IntegerLattice craig_basis(const CraigParams& p, std::size_t max_ambient = kDefaultMaxAmbient) {
  validate(p);
  if (p.n + 1 > max_ambient)
    throw Error(ErrorKind::capacity, "ambient dimension " + std::to_string(p.n + 1) + " exceeds basis cap " +
                                         std::to_string(max_ambient));
  IntMatrix b(p.n, p.n + 1);
  std::size_t row = 0;
  for (std::uint64_t j = p.n; j >= 1; --j, ++row) {
    auto c = shifted_power(j, p.n);
    const bool scaled = j < p.m;
    for (std::uint64_t i = 0; i <= p.n; ++i) b(row, i) = scaled ? BigInt(c[i] * static_cast<unsigned long>(p.l)) : c[i];
  }
  return IntegerLattice(std::move(b));
}

/// l^(2(m-1)) * (n+1), the squared volume asserted for A_n^(m,l).
inline BigInt craig_vol_sq(const CraigParams& p) {
  return BigInt(pow_ui(BigInt(static_cast<unsigned long>(p.l)), static_cast<unsigned long>(2 * (p.m - 1))) *
                static_cast<unsigned long>(p.n + 1));
}

/// f(1) = 0 and f^(i)(1) = 0 mod l for i = 1..m-1. Requires l prime.
inline bool membership(const CraigParams& p, std::span<const BigInt> f) {
  validate_prime(p);
  if (f.size() != p.n + 1)
    throw Error(ErrorKind::argument, "vector length " + std::to_string(f.size()) + " != n+1 = " + std::to_string(p.n + 1));
  BigInt value = 0;
  for (const auto& a : f) value += a;
  if (sgn(value) != 0) return false;
  const BigInt modulus(static_cast<unsigned long>(p.l));
  // Falling factorials j(j-1)...(j-i+1) reduced mod l, updated per order i.
  std::vector<BigInt> falling(f.size(), BigInt(1));
  for (std::uint64_t i = 1; i < p.m; ++i) {
    BigInt deriv = 0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      BigInt factor = static_cast<long>(j) - static_cast<long>(i) + 1;
      falling[j] = falling[j] * factor;
      mpz_mod(falling[j].get_mpz_t(), falling[j].get_mpz_t(), modulus.get_mpz_t());
      if (sgn(falling[j]) != 0) mpz_addmul(deriv.get_mpz_t(), f[j].get_mpz_t(), falling[j].get_mpz_t());
    }
    if (mpz_divisible_p(deriv.get_mpz_t(), modulus.get_mpz_t()) == 0) return false;
  }
  return true;
}

/// delta^2 = 2^(2k-n) m^n / (l^(2(m-1)) (n+1)).
///
/// k = 0 is the bare lattice (minimum norm 2m); k > 0 assumes a supporting
/// binary [n+1, k, >= 8m] code, which the caller is responsible for.
inline LogDensity center_density_lb(const CraigParams& p, std::uint64_t k, int digits = 4) {
  validate_prime(p);
  if (k > p.n) throw Error(ErrorKind::parameter, "code dimension k exceeds n");
  BigInt num = pow_ui(BigInt(static_cast<unsigned long>(p.m)), static_cast<unsigned long>(p.n));
  BigInt den = craig_vol_sq(p);
  if (2 * k >= p.n)
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * k - p.n));
  else
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(p.n - 2 * k));
  return make_density(RationalSqrt(num, den), k == 0 ? Provenance::plain : Provenance::lifted, digits);
}

/// Nearest integer to x, halves rounded up.
inline std::uint64_t round_half_up(long double x) {
  return static_cast<std::uint64_t>(std::floor(x + 0.5L));
}

/// m = nearest(n / (2 ln n)) clamped to [1, ceil(n/2) - 1]; l = next_prime(n+1).
inline CraigParams choose_params(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::argument, "choose_params requires n >= 2");
  const long double ratio = static_cast<long double>(n) / (2.0L * std::log(static_cast<long double>(n)));
  std::uint64_t m = round_half_up(ratio);
  const std::uint64_t upper = (n + 1) / 2 - 1;
  m = std::min(m, upper);
  m = std::max<std::uint64_t>(m, 1);
  return CraigParams{n, m, next_prime(n + 1)};
}

/// The closed-form all-dimension bound m^(n/2) / (2^(m-1+n/2) n^(m-1) (n+1)^(1/2))
/// evaluated at choose_params(n).
inline LogDensity density_floor(std::uint64_t n, int digits = 4) {
  const CraigParams p = choose_params(n);
  const BigInt num = pow_ui(BigInt(static_cast<unsigned long>(p.m)), static_cast<unsigned long>(n));
  BigInt den = pow_ui(BigInt(static_cast<unsigned long>(n)), static_cast<unsigned long>(2 * (p.m - 1))) *
               static_cast<unsigned long>(n + 1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(2 * (p.m - 1) + n));
  return make_density(RationalSqrt(num, den), Provenance::formula_only, digits);
}

/// Checks that A_n^(m,l) is the section of A_{l-1}^(m,l) by the subspace
/// x_{n+1} = ... = x_{l-1} = 0: padded generators are members, and the
/// computed section lattice has the same squared volume.
inline bool verify_section(const CraigParams& p, std::size_t max_big_rank = 64) {
  validate_prime(p);
  if (p.l - 1 < p.n) throw Error(ErrorKind::parameter, "section requires l-1 >= n");
  if (p.l - 1 > max_big_rank)
    throw Error(ErrorKind::capacity, "section check limited to l-1 <= " + std::to_string(max_big_rank));
  const CraigParams big{p.l - 1, p.m, p.l};
  const IntegerLattice small_lattice = craig_basis(p);
  const IntegerLattice big_lattice = craig_basis(big, p.l);

  for (std::size_t i = 0; i < small_lattice.rank(); ++i) {
    std::vector<BigInt> padded(p.l);
    for (std::size_t j = 0; j <= p.n; ++j) padded[j] = small_lattice.basis()(i, j);
    if (!membership(big, padded)) return false;
  }

  // Section basis: HNF with the dropped coordinates ordered first; echelon
  // rows whose pivot lies among the kept coordinates span the section.
  const std::size_t dropped = p.l - 1 - p.n;
  const IntMatrix& b = big_lattice.basis();
  IntMatrix permuted(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      const std::size_t target = j > p.n ? j - (p.n + 1) : j + dropped;
      permuted(i, target) = b(i, j);
    }
  const HnfResult form = row_hnf(permuted, false);
  std::vector<std::vector<BigInt>> section_rows;
  for (std::size_t i = 0; i < form.rank; ++i) {
    if (form.pivot_cols[i] < dropped) continue;
    std::vector<BigInt> r(p.n + 1);
    for (std::size_t j = 0; j <= p.n; ++j) r[j] = form.h(i, j + dropped);
    section_rows.push_back(std::move(r));
  }
  if (section_rows.size() != p.n) return false;
  return gram_det(IntMatrix::from_rows(section_rows)) == small_lattice.vol_sq();
}

// ---------------------------------------------------------------------------
// Basis text format: "N r" then r lines of N integers.

inline void write_basis(std::ostream& out, const IntMatrix& basis) {
  out << basis.cols() << ' ' << basis.rows() << '\n';
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (j != 0) out << ' ';
      out << basis(i, j).get_str();
    }
    out << '\n';
  }
}

inline IntMatrix read_basis(std::istream& in) {
  std::size_t n = 0;
  std::size_t r = 0;
  if (!(in >> n >> r) || n == 0 || r == 0) throw Error(ErrorKind::parse, "basis header must be 'N r' with N, r >= 1");
  IntMatrix b(r, n);
  std::string tok;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(in >> tok)) throw Error(ErrorKind::parse, "basis file truncated at row " + std::to_string(i + 1));
      if (b(i, j).set_str(tok, 10) != 0) throw Error(ErrorKind::parse, "bad integer '" + tok + "' in basis row " + std::to_string(i + 1));
    }
  if (in >> tok) throw Error(ErrorKind::parse, "trailing data after basis rows");
  return b;
}

}  // namespace craiglat
