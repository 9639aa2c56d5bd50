#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "askzeta/rational.hpp"

namespace askzeta {

/// The chain ring Z/p^n. Level n = 0 is the zero ring.
///
/// Residues are canonical representatives in [0, p^n). The modulus is kept
/// below 2^31 so that products of two residues fit in 64 bits.
class TruncatedRing {
 public:
  TruncatedRing(std::int64_t p, int n);

  std::int64_t prime() const { return p_; }
  int level() const { return n_; }
  std::int64_t modulus() const { return modulus_; }
  /// Residue field size.
  std::int64_t q() const { return p_; }
  /// p^k for 0 <= k <= level().
  std::int64_t prime_power(int k) const { return powers_[static_cast<std::size_t>(k)]; }

  std::int64_t reduce(std::int64_t x) const {
    std::int64_t r = x % modulus_;
    return r < 0 ? r + modulus_ : r;
  }
  std::int64_t reduce(const BigInt& x) const;

  std::int64_t add(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  std::int64_t sub(std::int64_t a, std::int64_t b) const {
    std::int64_t s = a - b;
    return s < 0 ? s + modulus_ : s;
  }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % modulus_; }
  std::int64_t neg(std::int64_t a) const { return a == 0 ? 0 : modulus_ - a; }

  /// p-adic valuation of a residue; the zero residue has valuation n.
  int valuation(std::int64_t x) const;
  /// Inverse of a unit residue. Throws std::domain_error for non-units.
  std::int64_t inverse(std::int64_t unit) const;
  bool is_unit(std::int64_t x) const { return n_ == 0 || x % p_ != 0; }

  bool operator==(const TruncatedRing& other) const {
    return p_ == other.p_ && n_ == other.n_;
  }

 private:
  std::int64_t p_;
  int n_;
  std::int64_t modulus_;
  std::vector<std::int64_t> powers_;
};

bool is_prime(std::int64_t p);

/// Dense integer matrix with arbitrary signs, used for homotopy maps and
/// as the input of reduce_mod.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}
  IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> entries);

  static IntMatrix identity(std::size_t n);

  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

/// A d x e matrix over Z/p^n, acting on row vectors of length d.
struct RingMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::int64_t> data;  // row-major canonical residues

  RingMatrix() = default;
  RingMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0) {}

  std::int64_t& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  std::int64_t at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  RingMatrix transposed() const;
  bool operator==(const RingMatrix&) const = default;
};

RingMatrix reduce_mod(const IntMatrix& a, const TruncatedRing& ring);

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b, const TruncatedRing& ring);

/// Exponents a_1 <= ... <= a_min(d,e) of the Smith form diag(p^{a_1}, ...);
/// an exponent equal to n stands for a zero diagonal entry.
std::vector<int> smith_exponents(const RingMatrix& a, const TruncatedRing& ring);

/// log_p |{x : xA = 0}|.
int kernel_exponent(const RingMatrix& a, const TruncatedRing& ring);
BigInt kernel_size(const RingMatrix& a, const TruncatedRing& ring);
BigInt image_size(const RingMatrix& a, const TruncatedRing& ring);

/// Rank over the residue field (number of unit elementary divisors).
int unit_rank(const RingMatrix& a, const TruncatedRing& ring);

/// In-place Smith reduction of a row-major rows x cols scratch buffer.
/// Returns log_p of the kernel size of the original matrix. The buffer is
/// clobbered. This is the hot path of every enumeration.
int kernel_exponent_inplace(std::span<std::int64_t> data, std::size_t rows, std::size_t cols,
                            const TruncatedRing& ring);

}  // namespace askzeta
