#include "askzeta/ask.hpp"

#include <algorithm>
#include <thread>

#include "askzeta/detail/odometer.hpp"

namespace askzeta {

Strategy parse_strategy(const std::string& name) {
  if (name == "auto") return Strategy::automatic;
  if (name == "direct") return Strategy::direct;
  if (name == "circ") return Strategy::circ;
  if (name == "bullet") return Strategy::bullet;
  throw std::invalid_argument("unknown strategy '" + name +
                              "' (expected auto, direct, circ or bullet)");
}

std::string to_string(Strategy strategy) {
  switch (strategy) {
    case Strategy::automatic:
      return "auto";
    case Strategy::direct:
      return "direct";
    case Strategy::circ:
      return "circ";
    case Strategy::bullet:
      return "bullet";
  }
  return "?";
}

Rational KernelCensus::moment(unsigned m) const {
  const BigInt p(prime);
  BigInt total = 0;
  for (const auto& [k, count] : histogram) {
    total += BigInt(count) * big_pow(p, static_cast<unsigned>(k) * m);
  }
  return Rational(total, big_pow(p, static_cast<unsigned>(level) * module_rank));
}

namespace {

// Enumerates a over the index range [begin, end) in row-major order, updating
// A(a) incrementally: each digit step of +1 adds that slice of the tensor.
void census_range(const std::vector<std::int64_t>& tensor, const Shape& shape,
                  const TruncatedRing& ring, std::uint64_t begin, std::uint64_t end,
                  std::vector<std::uint64_t>& hist) {
  const std::size_t slice = shape.d * shape.e;
  const std::int64_t base = ring.modulus();

  std::vector<std::int64_t> digits(shape.l, 0);
  std::uint64_t rest = begin;
  for (std::size_t k = shape.l; k-- > 0;) {
    digits[k] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(base));
    rest /= static_cast<std::uint64_t>(base);
  }
  std::vector<std::int64_t> current(slice, 0);
  for (std::size_t h = 0; h < shape.l; ++h) {
    if (digits[h] == 0) continue;
    for (std::size_t t = 0; t < slice; ++t)
      current[t] = ring.add(current[t], ring.mul(digits[h], tensor[h * slice + t]));
  }

  std::vector<std::int64_t> scratch(slice);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    std::copy(current.begin(), current.end(), scratch.begin());
    ++hist[static_cast<std::size_t>(kernel_exponent_inplace(scratch, shape.d, shape.e, ring))];
    // advance the odometer and the matrix together
    for (std::size_t k = shape.l; k-- > 0;) {
      const std::int64_t* c = &tensor[k * slice];
      for (std::size_t t = 0; t < slice; ++t) current[t] = ring.add(current[t], c[t]);
      if (++digits[k] < base) break;
      digits[k] = 0;
    }
  }
}

KernelCensus direct_census(const MRep& rep, const TruncatedRing& ring,
                           const EnumerationOptions& options) {
  const std::int64_t limit =
      static_cast<std::int64_t>(std::min<std::uint64_t>(options.budget, INT64_MAX));
  const std::int64_t total = detail::checked_power(ring.modulus(), rep.l(), limit);
  if (total < 0) {
    throw BudgetExceeded("enumeration of " + std::to_string(ring.modulus()) + "^" +
                         std::to_string(rep.l()) + " parameters exceeds the budget of " +
                         std::to_string(options.budget));
  }
  const auto tensor = rep.reduced(ring);
  const std::size_t bins = static_cast<std::size_t>(ring.level()) * rep.d() + 1;

  unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, workers);
  if (total < 4096) workers = 1;
  const auto count = static_cast<std::uint64_t>(total);

  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(bins, 0));
  if (workers == 1) {
    census_range(tensor, rep.shape(), ring, 0, count, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t begin = count * w / workers, end = count * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] {
        census_range(tensor, rep.shape(), ring, begin, end, partial[w]);
      });
    }
    for (auto& t : pool) t.join();
  }

  KernelCensus census;
  census.module_rank = rep.l();
  census.prime = ring.prime();
  census.level = ring.level();
  for (std::size_t k = 0; k < bins; ++k) {
    std::uint64_t c = 0;
    for (const auto& part : partial) c += part[k];
    if (c != 0) census.histogram[static_cast<int>(k)] = c;
  }
  return census;
}

}  // namespace

KernelCensus kernel_census(const MRep& rep, const TruncatedRing& ring,
                           const EnumerationOptions& options) {
  return direct_census(rep, ring, options);
}

AskResult ask_m(const MRep& rep, const TruncatedRing& ring, unsigned m, Strategy strategy,
                const EnumerationOptions& options) {
  if (m == 0) {
    throw std::invalid_argument("ask_m: moment must be at least 1");
  }
  if (m > 1 && (strategy == Strategy::circ || strategy == Strategy::bullet)) {
    throw std::invalid_argument("ask_m: the " + to_string(strategy) +
                                " strategy only rescales the first moment");
  }
  if (strategy == Strategy::automatic) {
    strategy = Strategy::direct;
    if (m == 1) {
      const std::size_t smallest = std::min({rep.l(), rep.d(), rep.e()});
      if (smallest < rep.l()) strategy = rep.d() == smallest ? Strategy::circ : Strategy::bullet;
    }
  }

  AskResult result;
  result.level = ring.level();
  result.moment = m;
  result.strategy = strategy;
  switch (strategy) {
    case Strategy::direct:
      result.value = direct_census(rep, ring, options).moment(m);
      break;
    case Strategy::circ: {
      // ask(theta) = p^{n(d - l)} ask(theta^circ)
      const Rational dual_ask = direct_census(dual(rep, DualKind::circ), ring, options).moment(1);
      const long long shift =
          static_cast<long long>(ring.level()) * (static_cast<long long>(rep.d()) -
                                                  static_cast<long long>(rep.l()));
      result.value = dual_ask * rational_pow(Rational(ring.prime()), shift);
      break;
    }
    case Strategy::bullet:
      result.value = direct_census(dual(rep, DualKind::bullet), ring, options).moment(1);
      break;
    case Strategy::automatic:
      break;
  }
  return result;
}

ZetaCoefficients zeta_coeffs(const MRep& rep, std::int64_t p, unsigned m, int max_level,
                             Strategy strategy, const EnumerationOptions& options) {
  ZetaCoefficients out;
  for (int n = 0; n <= max_level; ++n) {
    try {
      out.coeffs.push_back(ask_m(rep, TruncatedRing(p, n), m, strategy, options).value);
    } catch (const BudgetExceeded&) {
      out.failed_level = n;
      break;
    }
  }
  return out;
}

}  // namespace askzeta
