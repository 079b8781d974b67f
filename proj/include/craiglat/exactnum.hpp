#pragma once

// Exact arithmetic kernel: big integers and rationals (GMP), binomial sums,
// deterministic primality, integer determinants, Hermite normal form and
// correctly rounded base-2 logarithms (MPFR).

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "craiglat/error.hpp"

namespace craiglat {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// A positive real stored through its square, num/den in lowest terms.
/// Every center density handled here is the square root of a rational.
class RationalSqrt {
 public:
  RationalSqrt() : square_(1) {}

  explicit RationalSqrt(BigRational square) : square_(std::move(square)) {
    square_.canonicalize();
    if (square_ <= 0) throw Error(ErrorKind::argument, "squared value must be positive");
  }

  RationalSqrt(const BigInt& numerator, const BigInt& denominator) {
    if (numerator <= 0 || denominator <= 0)
      throw Error(ErrorKind::argument, "numerator and denominator must be positive");
    square_ = BigRational(numerator, denominator);
    square_.canonicalize();
  }

  const BigRational& square() const { return square_; }
  BigInt numerator() const { return square_.get_num(); }
  BigInt denominator() const { return square_.get_den(); }

  RationalSqrt operator*(const RationalSqrt& other) const {
    return RationalSqrt(BigRational(square_ * other.square_));
  }
  RationalSqrt operator/(const RationalSqrt& other) const {
    return RationalSqrt(BigRational(square_ / other.square_));
  }

  friend bool operator==(const RationalSqrt& a, const RationalSqrt& b) {
    return a.square_ == b.square_;
  }
  friend std::strong_ordering operator<=>(const RationalSqrt& a, const RationalSqrt& b) {
    const int c = cmp(a.square_, b.square_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  BigRational square_;
};

/// Dense row-major matrix of big integers.
class IntMatrix {
 public:
  IntMatrix() = default;

  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorKind::argument, "ragged matrix literal");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows) {
    if (rows.empty()) return {};
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw Error(ErrorKind::argument, "ragged row list");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<BigInt> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const BigInt> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<BigInt> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [first, first + count).
  IntMatrix row_block(std::size_t first, std::size_t count) const {
    IntMatrix out(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(first + i, j);
    return out;
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::argument, "matrix shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    BigInt t;
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const BigInt& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (sgn(b(k, j)) == 0) continue;
          mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), b(k, j).get_mpz_t());
        }
      }
    return c;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

inline BigInt pow_ui(const BigInt& base, unsigned long exp) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// Number of bits of |x|; 0 for x = 0.
inline std::size_t bit_length(const BigInt& x) {
  return sgn(x) == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

// ---------------------------------------------------------------------------
// Binomial sums

/// V(n, r) = sum_{i=0}^{r} C(n, i).
inline BigInt binom_sum(std::uint64_t n, std::uint64_t r) {
  if (r > n) throw Error(ErrorKind::argument, "binom_sum requires r <= n");
  BigInt sum = 0;
  BigInt term = 1;
  for (std::uint64_t i = 0; i <= r; ++i) {
    sum += term;
    term *= static_cast<unsigned long>(n - i);
    mpz_divexact_ui(term.get_mpz_t(), term.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Primality

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are a proven
/// witness set for every 64-bit input.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::uint64_t small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : small) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : small) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Above 2^64 falls back to trial division (exact, slow).
inline bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) != 0 && sizeof(unsigned long) == 8)
    return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  if (mpz_even_p(n.get_mpz_t()) != 0) return false;
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
  for (BigInt d = 3; d <= root; d += 2)
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0) return false;
  return true;
}

/// Smallest prime p >= x.
inline std::uint64_t next_prime(std::uint64_t x) {
  if (x <= 2) return 2;
  std::uint64_t c = x | 1U;
  while (!is_prime(c)) c += 2;
  return c;
}

// ---------------------------------------------------------------------------
// Determinants

/// Fraction-free (Bareiss) determinant of a square matrix.
inline BigInt determinant(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::argument, "determinant of non-square matrix");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
      if (swap_with == n) return 0;
      a.swap_rows(k, swap_with);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt& aij = a(i, j);
        aij *= a(k, k);
        mpz_submul(aij.get_mpz_t(), a(i, k).get_mpz_t(), a(k, j).get_mpz_t());
        mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  BigInt d = a(n - 1, n - 1);
  return sign < 0 ? BigInt(-d) : d;
}

namespace detail {

// row_a <- s*row_a + t*row_b ; row_b <- u*row_a + v*row_b over columns [from, cols).
inline void combine_rows(IntMatrix& m, std::size_t a, std::size_t b, const BigInt& s, const BigInt& t,
                         const BigInt& u, const BigInt& v, std::size_t from = 0) {
  BigInt x;
  BigInt y;
  for (std::size_t j = from; j < m.cols(); ++j) {
    const BigInt& ea = m(a, j);
    const BigInt& eb = m(b, j);
    if (sgn(ea) == 0 && sgn(eb) == 0) continue;
    x = s * ea + t * eb;
    y = u * ea + v * eb;
    m(a, j) = x;
    m(b, j) = y;
  }
}

inline void sub_multiple(IntMatrix& m, std::size_t target, std::size_t source, const BigInt& q,
                         std::size_t from = 0) {
  if (sgn(q) == 0) return;
  for (std::size_t j = from; j < m.cols(); ++j)
    if (sgn(m(source, j)) != 0) mpz_submul(m(target, j).get_mpz_t(), q.get_mpz_t(), m(source, j).get_mpz_t());
}

}  // namespace detail

/// Determinant by unimodular (extended-gcd) row elimination, processing
/// columns from last to first. Rows that are already zero in the pivot
/// column cost nothing, so triangular-up-to-permutation inputs with huge
/// entries are cheap.
inline BigInt integer_det(IntMatrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw Error(ErrorKind::argument, "determinant of non-square matrix");
  int sign = 1;
  BigInt g;
  BigInt s;
  BigInt t;
  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t col = n - 1 - step;
    std::size_t piv = step;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != step) {
      a.swap_rows(piv, step);
      sign = -sign;
    }
    for (std::size_t i = step + 1; i < n; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const BigInt pa = a(step, col);
      const BigInt pb = a(i, col);
      if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t()) != 0) {
        detail::sub_multiple(a, i, step, BigInt(pb / pa));
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
      detail::combine_rows(a, step, i, s, t, BigInt(-pb / g), BigInt(pa / g));
    }
  }
  BigInt d = 1;
  for (std::size_t i = 0; i < n; ++i) d *= a(i, n - 1 - i);
  // Anti-diagonal product to determinant: reversing n columns has sign (-1)^(n(n-1)/2).
  if (((n * (n - 1) / 2) & 1U) != 0) sign = -sign;
  return sign < 0 ? BigInt(-d) : d;
}

/// det(B * B^T). Zero means the rows are dependent (degenerate input).
inline BigInt gram_det(const IntMatrix& basis) {
  const std::size_t r = basis.rows();
  IntMatrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      gram(i, j) = dot(basis.row(i), basis.row(j));
      gram(j, i) = gram(i, j);
    }
  return determinant(std::move(gram));
}

/// Squared covolume of the lattice spanned by the rows of `basis`.
///
/// When the basis has rank N-1 inside the hyperplane {x : sum x = 0} of Z^N,
/// deleting the first coordinate gives an injective projection B -> B' and
/// det(B B^T) = N * det(B')^2; otherwise falls back to gram_det.
inline BigInt lattice_volume_squared(const IntMatrix& basis) {
  const std::size_t r = basis.rows();
  const std::size_t n = basis.cols();
  bool in_hyperplane = r + 1 == n && r > 0;
  for (std::size_t i = 0; in_hyperplane && i < r; ++i) {
    BigInt s = 0;
    for (const auto& v : basis.row(i)) s += v;
    in_hyperplane = sgn(s) == 0;
  }
  if (!in_hyperplane) return gram_det(basis);
  IntMatrix projected(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) projected(i, j) = basis(i, j + 1);
  const BigInt d = integer_det(std::move(projected));
  return BigInt(d * d * static_cast<unsigned long>(n));
}

// ---------------------------------------------------------------------------
// Hermite normal form

struct HnfResult {
  IntMatrix h;  ///< rank x cols, row echelon, positive pivots, entries above a pivot in [0, pivot)
  IntMatrix u;  ///< rows x rows unimodular with u * M = [h; 0] (empty when not tracked)
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
};

/// Row-style HNF of an arbitrary generating set (zero or dependent rows allowed).
inline HnfResult row_hnf(const IntMatrix& m, bool track_transform = true) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  IntMatrix u = track_transform ? IntMatrix::identity(rows) : IntMatrix();
  HnfResult out;
  BigInt g;
  BigInt s;
  BigInt t;
  std::size_t pr = 0;
  for (std::size_t col = 0; col < cols && pr < rows; ++col) {
    std::size_t piv = pr;
    while (piv < rows && sgn(a(piv, col)) == 0) ++piv;
    if (piv == rows) continue;
    a.swap_rows(pr, piv);
    if (track_transform) u.swap_rows(pr, piv);
    for (std::size_t i = pr + 1; i < rows; ++i) {
      if (sgn(a(i, col)) == 0) continue;
      const BigInt pa = a(pr, col);
      const BigInt pb = a(i, col);
      if (mpz_divisible_p(pb.get_mpz_t(), pa.get_mpz_t()) != 0) {
        const BigInt q = pb / pa;
        detail::sub_multiple(a, i, pr, q, col);
        if (track_transform) detail::sub_multiple(u, i, pr, q);
        continue;
      }
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pa.get_mpz_t(), pb.get_mpz_t());
      const BigInt c = -pb / g;
      const BigInt d = pa / g;
      detail::combine_rows(a, pr, i, s, t, c, d, col);
      if (track_transform) detail::combine_rows(u, pr, i, s, t, c, d);
    }
    if (sgn(a(pr, col)) < 0) {
      for (std::size_t j = col; j < cols; ++j) a(pr, j) = -a(pr, j);
      if (track_transform)
        for (std::size_t j = 0; j < rows; ++j) u(pr, j) = -u(pr, j);
    }
    const BigInt& pivot = a(pr, col);
    for (std::size_t i = 0; i < pr; ++i) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), pivot.get_mpz_t());
      detail::sub_multiple(a, i, pr, q, col);
      if (track_transform) detail::sub_multiple(u, i, pr, q);
    }
    out.pivot_cols.push_back(col);
    ++pr;
  }
  out.rank = pr;
  out.h = a.row_block(0, pr);
  out.u = std::move(u);
  return out;
}

/// HNF of a full-row-rank matrix; H = U * M with U unimodular.
inline HnfResult hnf(const IntMatrix& m) {
  HnfResult r = row_hnf(m, true);
  if (r.rank != m.rows()) throw Error(ErrorKind::rank, "hnf requires full row rank input");
  return r;
}

/// Solves x * H = v over the integers for an echelon basis H produced by
/// row_hnf. Returns nullopt when v is not in the row lattice.
inline std::optional<std::vector<BigInt>> hnf_solve(const HnfResult& hnf_form, std::span<const BigInt> v) {
  const IntMatrix& h = hnf_form.h;
  if (v.size() != h.cols()) throw Error(ErrorKind::argument, "vector length does not match lattice");
  std::vector<BigInt> rest(v.begin(), v.end());
  std::vector<BigInt> x(hnf_form.rank);
  for (std::size_t i = 0; i < hnf_form.rank; ++i) {
    const std::size_t col = hnf_form.pivot_cols[i];
    for (std::size_t j = (i == 0 ? 0 : hnf_form.pivot_cols[i - 1] + 1); j < col; ++j)
      if (sgn(rest[j]) != 0) return std::nullopt;
    if (mpz_divisible_p(rest[col].get_mpz_t(), h(i, col).get_mpz_t()) == 0) return std::nullopt;
    x[i] = rest[col] / h(i, col);
    if (sgn(x[i]) != 0)
      for (std::size_t j = col; j < h.cols(); ++j) mpz_submul(rest[j].get_mpz_t(), x[i].get_mpz_t(), h(i, j).get_mpz_t());
  }
  for (const auto& r : rest)
    if (sgn(r) != 0) return std::nullopt;
  return x;
}

// ---------------------------------------------------------------------------
// High-precision logarithms

namespace detail {

/// Minimal RAII handle over an mpfr_t.
class Real {
 public:
  explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

/// Working precision: 64 decimal digits of fraction plus headroom for the
/// integer part of values up to ~2^64.
inline mpfr_prec_t working_precision(int digits) {
  return static_cast<mpfr_prec_t>(320 + 4 * std::max(digits, 0));
}

inline Real log2_of_integer(const BigInt& x, mpfr_prec_t prec) {
  Real r(prec + 32);
  mpfr_set_z(r.get(), x.get_mpz_t(), MPFR_RNDN);
  mpfr_log2(r.get(), r.get(), MPFR_RNDN);
  return r;
}

/// (1/2) log2(num/den).
inline Real half_log2(const RationalSqrt& v, mpfr_prec_t prec) {
  Real a = log2_of_integer(v.numerator(), prec);
  Real b = log2_of_integer(v.denominator(), prec);
  Real r(prec);
  mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
  mpfr_div_2ui(r.get(), r.get(), 1, MPFR_RNDN);
  return r;
}

/// Fixed-point rendering with `digits` decimals, round half to even.
inline std::string render_fixed(const Real& x, int digits) {
  const mpfr_prec_t prec = mpfr_get_prec(x.get()) + 16;
  Real scaled(prec);
  BigInt ten_pow = pow_ui(10, static_cast<unsigned long>(digits));
  mpfr_mul_z(scaled.get(), x.get(), ten_pow.get_mpz_t(), MPFR_RNDN);
  mpfr_rint(scaled.get(), scaled.get(), MPFR_RNDN);
  BigInt q;
  mpfr_get_z(q.get_mpz_t(), scaled.get(), MPFR_RNDN);
  const bool negative = sgn(q) < 0;
  std::string mag = BigInt(abs(q)).get_str();
  if (digits > 0) {
    if (mag.size() <= static_cast<std::size_t>(digits))
      mag.insert(0, static_cast<std::size_t>(digits) + 1 - mag.size(), '0');
    mag.insert(mag.size() - static_cast<std::size_t>(digits), 1, '.');
  }
  return negative ? "-" + mag : mag;
}

}  // namespace detail

/// (1/2) log2(num/den) rendered with `digits` decimals (round half to even).
inline std::string log2_of(const RationalSqrt& v, int digits = 4) {
  if (digits < 1) throw Error(ErrorKind::argument, "digits must be at least 1");
  return detail::render_fixed(detail::half_log2(v, detail::working_precision(digits)), digits);
}

/// log2(sqrt(v)) - reference, rendered with `digits` decimals, and its sign.
struct Log2Difference {
  int sign = 0;
  std::string rendered;
  detail::Real value{64};

  /// |difference| < tolerance, decided at working precision.
  bool within(const BigRational& tolerance) const {
    detail::Real t(mpfr_get_prec(value.get()));
    mpfr_set_q(t.get(), tolerance.get_mpq_t(), MPFR_RNDN);
    return mpfr_cmpabs(value.get(), t.get()) < 0;
  }
};

inline Log2Difference log2_difference(const RationalSqrt& v, const BigRational& reference, int digits = 4) {
  if (digits < 1) throw Error(ErrorKind::argument, "digits must be at least 1");
  const mpfr_prec_t prec = detail::working_precision(digits);
  detail::Real x = detail::half_log2(v, prec);
  detail::Real r(prec);
  mpfr_set_q(r.get(), reference.get_mpq_t(), MPFR_RNDN);
  mpfr_sub(x.get(), x.get(), r.get(), MPFR_RNDN);
  Log2Difference out;
  out.sign = mpfr_sgn(x.get());
  out.rendered = detail::render_fixed(x, digits);
  out.value = x;
  return out;
}

/// Exact value of a decimal literal such as "-12.0640" or "443".
inline BigRational parse_decimal(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& x) {
    const auto b = x.find_first_not_of(" \t\r\n");
    const auto e = x.find_last_not_of(" \t\r\n");
    x = b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  trim(s);
  bool negative = false;
  std::size_t pos = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string digits;
  std::size_t frac = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac;
    } else {
      throw Error(ErrorKind::parse, "not a decimal number: '" + s + "'");
    }
  }
  if (digits.empty()) throw Error(ErrorKind::parse, "not a decimal number: '" + s + "'");
  BigRational q(BigInt(digits), pow_ui(10, static_cast<unsigned long>(frac)));
  q.canonicalize();
  return negative ? BigRational(-q) : q;
}

}  // namespace craiglat
