#include "askzeta/ring.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace askzeta {

namespace {

constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

std::int64_t inverse_by_euclid(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw std::domain_error("element is not a unit");
  }
  old_s %= m;
  return old_s < 0 ? old_s + m : old_s;
}

}  // namespace

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t f = 2; f * f <= p; ++f) {
    if (p % f == 0) return false;
  }
  return true;
}

TruncatedRing::TruncatedRing(std::int64_t p, int n) : p_(p), n_(n), modulus_(1) {
  if (!is_prime(p)) {
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  }
  if (n < 0) {
    throw std::invalid_argument("level n must be nonnegative");
  }
  powers_.push_back(1);
  for (int k = 0; k < n; ++k) {
    if (modulus_ > kMaxModulus / p) {
      throw std::invalid_argument("p^n exceeds the supported modulus 2^31");
    }
    modulus_ *= p;
    powers_.push_back(modulus_);
  }
}

std::int64_t TruncatedRing::reduce(const BigInt& x) const {
  BigInt r = x % modulus_;
  if (r < 0) r += modulus_;
  return r.convert_to<std::int64_t>();
}

int TruncatedRing::valuation(std::int64_t x) const {
  if (x == 0) return n_;
  int v = 0;
  while (x % p_ == 0) {
    x /= p_;
    ++v;
  }
  return std::min(v, n_);
}

std::int64_t TruncatedRing::inverse(std::int64_t unit) const {
  if (n_ == 0) return 0;
  return inverse_by_euclid(reduce(unit), modulus_);
}

IntMatrix::IntMatrix(std::size_t r, std::size_t c, std::vector<std::int64_t> entries)
    : rows(r), cols(c), data(std::move(entries)) {
  if (data.size() != r * c) {
    throw std::invalid_argument("IntMatrix: entry count does not match shape");
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RingMatrix RingMatrix::transposed() const {
  RingMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

RingMatrix reduce_mod(const IntMatrix& a, const TruncatedRing& ring) {
  RingMatrix out(a.rows, a.cols);
  for (std::size_t k = 0; k < a.data.size(); ++k) out.data[k] = ring.reduce(a.data[k]);
  return out;
}

RingMatrix multiply(const RingMatrix& a, const RingMatrix& b, const TruncatedRing& ring) {
  if (a.cols != b.rows) {
    throw std::invalid_argument("multiply: inner dimensions differ");
  }
  RingMatrix c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j)
        c.at(i, j) = ring.add(c.at(i, j), ring.mul(aik, b.at(k, j)));
    }
  return c;
}

namespace {

class SmithReducer {
 public:
  explicit SmithReducer(const TruncatedRing& ring) : ring_(ring) {}

  int valuation(std::int64_t x) const { return ring_.valuation(x); }

  // Writes the nondecreasing exponents into exps (size >= min(rows, cols)).
  void run(std::span<std::int64_t> a, std::size_t rows, std::size_t cols, int* exps) const {
    const int n = ring_.level();
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
      int best = n;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < rows && best > 0; ++i) {
        for (std::size_t j = k; j < cols; ++j) {
          std::int64_t x = a[i * cols + j];
          if (x == 0) continue;
          int v = valuation(x);
          if (v < best) {
            best = v;
            bi = i;
            bj = j;
            if (v == 0) break;
          }
        }
      }
      if (best == n) {
        for (std::size_t t = k; t < steps; ++t) exps[t] = n;
        return;
      }
      if (bi != k)
        for (std::size_t j = k; j < cols; ++j) std::swap(a[bi * cols + j], a[k * cols + j]);
      if (bj != k)
        for (std::size_t i = k; i < rows; ++i) std::swap(a[i * cols + bj], a[i * cols + k]);

      const std::int64_t pv = ring_.prime_power(best);
      const std::int64_t unit_inv = ring_.inverse(a[k * cols + k] / pv);
      for (std::size_t i = k + 1; i < rows; ++i) {
        std::int64_t x = a[i * cols + k];
        if (x == 0) continue;
        std::int64_t m = ring_.mul(x / pv, unit_inv);
        for (std::size_t j = k + 1; j < cols; ++j) {
          a[i * cols + j] = ring_.sub(a[i * cols + j], ring_.mul(m, a[k * cols + j]));
        }
        a[i * cols + k] = 0;
      }
      exps[k] = best;
    }
  }

 private:
  const TruncatedRing& ring_;
};

}  // namespace

std::vector<int> smith_exponents(const RingMatrix& a, const TruncatedRing& ring) {
  std::vector<std::int64_t> scratch = a.data;
  std::vector<int> exps(std::min(a.rows, a.cols));
  SmithReducer(ring).run(scratch, a.rows, a.cols, exps.data());
  std::sort(exps.begin(), exps.end());
  return exps;
}

int kernel_exponent_inplace(std::span<std::int64_t> data, std::size_t rows, std::size_t cols,
                            const TruncatedRing& ring) {
  int exps[64];
  std::vector<int> heap;
  int* out = exps;
  const std::size_t steps = std::min(rows, cols);
  if (steps > 64) {
    heap.resize(steps);
    out = heap.data();
  }
  SmithReducer(ring).run(data, rows, cols, out);
  int total = ring.level() * static_cast<int>(rows - steps);
  for (std::size_t k = 0; k < steps; ++k) total += out[k];
  return total;
}

int kernel_exponent(const RingMatrix& a, const TruncatedRing& ring) {
  std::vector<std::int64_t> scratch = a.data;
  return kernel_exponent_inplace(scratch, a.rows, a.cols, ring);
}

BigInt kernel_size(const RingMatrix& a, const TruncatedRing& ring) {
  return big_pow(BigInt(ring.prime()), static_cast<unsigned>(kernel_exponent(a, ring)));
}

BigInt image_size(const RingMatrix& a, const TruncatedRing& ring) {
  const int total = ring.level() * static_cast<int>(a.rows);
  return big_pow(BigInt(ring.prime()), static_cast<unsigned>(total - kernel_exponent(a, ring)));
}

int unit_rank(const RingMatrix& a, const TruncatedRing& ring) {
  if (ring.level() == 0) return 0;
  auto exps = smith_exponents(a, ring);
  return static_cast<int>(std::count(exps.begin(), exps.end(), 0));
}

}  // namespace askzeta
