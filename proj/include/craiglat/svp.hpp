#pragma once

// Certification of minimum norms: integral LLL reduction (all Gram-Schmidt
// data kept as exact integers d_i, lambda_ij) and exhaustive enumeration of
// short vectors with exact rational pruning. No floating point is involved.

#include <cstddef>
#include <optional>
#include <vector>

#include "craiglat/craig.hpp"
#include "craiglat/exactnum.hpp"

namespace craiglat {

inline constexpr std::size_t kDefaultEnumerationRank = 40;

struct ReducedBasis {
  IntMatrix basis;
  std::vector<BigRational> gso_norms;  ///< |b*_i|^2 = d_i / d_{i-1}
  BigRational quality;
  std::vector<std::vector<BigRational>> mu;  ///< mu[i][j] for j < i
};

namespace detail {

// Cohen, A Course in Computational Algebraic Number Theory, Alg. 2.6.7,
// with 0-based indices; d[i+1] holds d_i and d[0] = 1.
class IntegralLll {
 public:
  IntegralLll(IntMatrix basis, const BigRational& quality)
      : b_(std::move(basis)), n_(b_.rows()), d_(n_ + 1), lambda_(n_, std::vector<BigInt>(n_)) {
    quality_num_ = quality.get_num();
    quality_den_ = quality.get_den();
  }

  void run() {
    if (n_ == 0) return;
    d_[0] = 1;
    d_[1] = dot(b_.row(0), b_.row(0));
    if (sgn(d_[1]) == 0) throw Error(ErrorKind::rank, "zero basis vector");
    std::size_t k = 1;
    std::size_t kmax = 0;
    while (k < n_) {
      if (k > kmax) {
        kmax = k;
        incorporate(k);
      }
      reduce(k, k - 1);
      if (lovasz_fails(k)) {
        swap(k, kmax);
        if (k > 1) --k;
      } else {
        for (std::size_t l = k - 1; l-- > 0;) reduce(k, l);
        ++k;
      }
    }
  }

  ReducedBasis result(const BigRational& quality) const {
    ReducedBasis r;
    r.basis = b_;
    r.quality = quality;
    r.gso_norms.resize(n_);
    r.mu.assign(n_, std::vector<BigRational>(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      r.gso_norms[i] = BigRational(d_[i + 1], d_[i]);
      r.gso_norms[i].canonicalize();
      for (std::size_t j = 0; j < i; ++j) {
        r.mu[i][j] = BigRational(lambda_[i][j], d_[j + 1]);
        r.mu[i][j].canonicalize();
      }
    }
    return r;
  }

 private:
  void incorporate(std::size_t k) {
    for (std::size_t j = 0; j <= k; ++j) {
      BigInt u = dot(b_.row(k), b_.row(j));
      for (std::size_t i = 0; i < j; ++i) {
        u = d_[i + 1] * u - lambda_[k][i] * lambda_[j][i];
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), d_[i].get_mpz_t());
      }
      if (j < k) {
        lambda_[k][j] = u;
      } else {
        if (sgn(u) == 0) throw Error(ErrorKind::rank, "basis rows are linearly dependent");
        d_[k + 1] = u;
      }
    }
  }

  void reduce(std::size_t k, std::size_t l) {
    const BigInt& dl = d_[l + 1];
    BigInt twice = 2 * abs(lambda_[k][l]);
    if (twice <= dl) return;
    // q = round(lambda / d_l)
    BigInt q;
    BigInt num = 2 * lambda_[k][l] + dl;
    BigInt den = 2 * dl;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    detail::sub_multiple(b_, k, l, q);
    lambda_[k][l] -= q * dl;
    for (std::size_t i = 0; i < l; ++i) lambda_[k][i] -= q * lambda_[l][i];
  }

  // Lovasz condition in integral form: den*(d_k d_{k-2} + lambda^2) >= num*d_{k-1}^2.
  bool lovasz_fails(std::size_t k) const {
    const BigInt& lam = lambda_[k][k - 1];
    BigInt lhs = (d_[k + 1] * d_[k - 1] + lam * lam) * quality_den_;
    BigInt rhs = d_[k] * d_[k] * quality_num_;
    return lhs < rhs;
  }

  void swap(std::size_t k, std::size_t kmax) {
    b_.swap_rows(k, k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) std::swap(lambda_[k][j], lambda_[k - 1][j]);
    const BigInt lam = lambda_[k][k - 1];
    BigInt bnew = d_[k + 1] * d_[k - 1] + lam * lam;
    mpz_divexact(bnew.get_mpz_t(), bnew.get_mpz_t(), d_[k].get_mpz_t());
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const BigInt t = lambda_[i][k];
      BigInt a = d_[k + 1] * lambda_[i][k - 1] - lam * t;
      mpz_divexact(a.get_mpz_t(), a.get_mpz_t(), d_[k].get_mpz_t());
      lambda_[i][k] = a;
      BigInt c = bnew * t + lam * lambda_[i][k];
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d_[k + 1].get_mpz_t());
      lambda_[i][k - 1] = c;
    }
    d_[k] = bnew;
  }

  IntMatrix b_;
  std::size_t n_;
  std::vector<BigInt> d_;
  std::vector<std::vector<BigInt>> lambda_;
  BigInt quality_num_;
  BigInt quality_den_;
};

}  // namespace detail

/// LLL reduction with exact integral Gram-Schmidt data; quality in (1/4, 1).
inline ReducedBasis lll_reduce(const IntMatrix& basis, const BigRational& quality = BigRational(99, 100)) {
  if (quality <= BigRational(1, 4) || quality >= 1) throw Error(ErrorKind::argument, "LLL quality must lie in (1/4, 1)");
  detail::IntegralLll lll(basis, quality);
  lll.run();
  return lll.result(quality);
}

inline ReducedBasis lll_reduce(const IntegerLattice& lattice, const BigRational& quality = BigRational(99, 100)) {
  return lll_reduce(lattice.basis(), quality);
}

struct ShortestVector {
  BigInt norm;                  ///< squared Euclidean length
  std::vector<BigInt> witness;  ///< ambient coordinates
};

namespace detail {

class Enumerator {
 public:
  explicit Enumerator(const ReducedBasis& rb) : rb_(rb), r_(rb.basis.rows()), x_(r_), partial_(r_ + 1) {}

  ShortestVector run() {
    std::size_t best_row = 0;
    best_ = dot(rb_.basis.row(0), rb_.basis.row(0));
    for (std::size_t i = 1; i < r_; ++i) {
      BigInt nrm = dot(rb_.basis.row(i), rb_.basis.row(i));
      if (nrm < best_) {
        best_ = nrm;
        best_row = i;
      }
    }
    best_coeffs_.assign(r_, BigInt(0));
    best_coeffs_[best_row] = 1;
    partial_[r_] = 0;
    descend(r_ - 1, true);

    ShortestVector out;
    out.norm = best_;
    out.witness.assign(rb_.basis.cols(), BigInt(0));
    for (std::size_t i = 0; i < r_; ++i)
      if (sgn(best_coeffs_[i]) != 0)
        for (std::size_t j = 0; j < rb_.basis.cols(); ++j)
          mpz_addmul(out.witness[j].get_mpz_t(), best_coeffs_[i].get_mpz_t(), rb_.basis(i, j).get_mpz_t());
    if (dot(out.witness, out.witness) != out.norm) throw Error(ErrorKind::domain, "enumeration witness norm mismatch");
    return out;
  }

 private:
  // Vectors with norm <= best_ - 1 are sought: norms of integer vectors are integers.
  bool within(const BigRational& value) const { return value <= BigRational(best_ - 1); }

  void descend(std::size_t k, bool top_zero) {
    BigRational center = 0;
    for (std::size_t j = k + 1; j < r_; ++j)
      if (sgn(x_[j]) != 0) center -= rb_.mu[j][k] * BigRational(x_[j]);
    BigInt start;
    mpz_fdiv_q(start.get_mpz_t(), BigRational(center + BigRational(1, 2)).get_num_mpz_t(),
               BigRational(center + BigRational(1, 2)).get_den_mpz_t());

    // Upward from round(center), then downward. The partial norm is convex in x_k.
    for (int direction : {1, -1}) {
      BigInt x = direction == 1 ? start : BigInt(start - 1);
      while (true) {
        if (top_zero && sgn(x) < 0) break;  // last nonzero coefficient kept positive
        BigRational y = BigRational(x) - center;
        BigRational value = partial_[k + 1] + y * y * rb_.gso_norms[k];
        if (!within(value)) {
          // Moving further from the center only grows the term.
          const bool beyond = direction == 1 ? BigRational(x) >= center : BigRational(x) <= center;
          if (beyond) break;
          x += direction;
          continue;
        }
        x_[k] = x;
        partial_[k] = value;
        const bool still_zero = top_zero && sgn(x) == 0;
        if (k == 0) {
          if (!still_zero) accept(value);
        } else {
          descend(k - 1, still_zero);
        }
        x += direction;
      }
    }
    x_[k] = 0;
  }

  void accept(const BigRational& value) {
    const BigInt norm = value.get_num();  // integral by construction
    if (value.get_den() != 1) throw Error(ErrorKind::domain, "non-integral norm in integral lattice");
    if (norm < best_) {
      best_ = norm;
      best_coeffs_ = x_;
    }
  }

  const ReducedBasis& rb_;
  std::size_t r_;
  std::vector<BigInt> x_;
  std::vector<BigRational> partial_;
  BigInt best_;
  std::vector<BigInt> best_coeffs_;
};

}  // namespace detail

/// Exact minimum squared norm over nonzero vectors, with a witness.
inline ShortestVector shortest_vector(const IntMatrix& basis, std::size_t max_rank = kDefaultEnumerationRank) {
  if (basis.rows() > max_rank)
    throw Error(ErrorKind::capacity, "rank " + std::to_string(basis.rows()) + " exceeds enumeration cap " + std::to_string(max_rank));
  const ReducedBasis rb = lll_reduce(basis);
  return detail::Enumerator(rb).run();
}

inline ShortestVector shortest_vector(const IntegerLattice& lattice, std::size_t max_rank = kDefaultEnumerationRank) {
  return shortest_vector(lattice.basis(), max_rank);
}

struct NormCertificate {
  bool holds = false;
  BigInt bound;
  BigInt minimum;                               ///< exact minimum norm found
  std::optional<std::vector<BigInt>> witness;  ///< present when violated
};

inline NormCertificate verify_min_norm(const IntegerLattice& lattice, const BigInt& bound,
                                       std::size_t max_rank = kDefaultEnumerationRank) {
  ShortestVector sv = shortest_vector(lattice, max_rank);
  NormCertificate c;
  c.bound = bound;
  c.minimum = sv.norm;
  c.holds = sv.norm >= bound;
  if (!c.holds) c.witness = std::move(sv.witness);
  return c;
}

}  // namespace craiglat
