#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "askzeta/mrep.hpp"
#include "askzeta/rational.hpp"
#include "askzeta/ring.hpp"

namespace askzeta {

/// Which side of the representation is enumerated.
///
/// direct enumerates M. circ enumerates V and rescales by p^{n(d-l)};
/// bullet enumerates the dual of W with no rescaling. Both dual routes are
/// valid for the first moment only. automatic picks the smallest side for
/// m = 1 and direct otherwise.
enum class Strategy { automatic, direct, circ, bullet };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy strategy);

struct EnumerationOptions {
  /// Maximal number of kernel evaluations per call.
  std::uint64_t budget = 10'000'000;
  /// Worker threads; 0 means std::thread::hardware_concurrency().
  unsigned workers = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AskResult {
  Rational value;
  int level = 0;
  unsigned moment = 1;
  Strategy strategy = Strategy::direct;
};

/// histogram[k] = #{a in (Z/p^n)^l : |Ker A(a)| = p^k}.
struct KernelCensus {
  std::map<int, std::uint64_t> histogram;
  std::size_t module_rank = 0;
  std::int64_t prime = 2;
  int level = 0;

  /// (1/p^{nl}) sum_k histogram[k] p^{km}.
  Rational moment(unsigned m) const;
};

KernelCensus kernel_census(const MRep& rep, const TruncatedRing& ring,
                           const EnumerationOptions& options = {});

/// Average of |Ker A(a)|^m over all a in (Z/p^n)^l, exactly.
/// Throws BudgetExceeded, or std::invalid_argument for a dual strategy with m > 1.
AskResult ask_m(const MRep& rep, const TruncatedRing& ring, unsigned m = 1,
                Strategy strategy = Strategy::automatic, const EnumerationOptions& options = {});

struct ZetaCoefficients {
  std::vector<Rational> coeffs;  // coeffs[n] = ask^m over Z/p^n
  /// First level whose enumeration exceeded the budget; coeffs stops before it.
  std::optional<int> failed_level;

  bool complete() const { return !failed_level; }
};

ZetaCoefficients zeta_coeffs(const MRep& rep, std::int64_t p, unsigned m, int max_level,
                             Strategy strategy = Strategy::automatic,
                             const EnumerationOptions& options = {});

}  // namespace askzeta
