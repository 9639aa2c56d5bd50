#pragma once

#include <optional>
#include <string>
#include <vector>

#include "askzeta/mrep.hpp"
#include "askzeta/zeta_forms.hpp"

namespace askzeta {

/// Integer parameters for the catalog constructors; each example uses a subset.
struct CatalogParams {
  std::optional<long long> l{};
  std::optional<long long> d{};
  std::optional<long long> e{};
  std::optional<long long> r{};
};

/// Builds a named example:
///   matdxe(d,e), so(d), sym(d), band(r), hankel(r), westwick_H(r),
///   westwick_a(r), gamma(d), type_F(d), type_G(d), lie_heisenberg,
///   lie_abelian(d), zero(l,d,e).
/// Throws std::invalid_argument for unknown names or missing/invalid params.
MRep make_example(const std::string& name, const CatalogParams& params);

/// Which sequence of numbers a closed form generates.
enum class Statistic {
  ask,         // c_n = ask^m over Z/p^n
  ask_hull,    // c_n = ask(hull(theta)) over Z/p^n
  cc_g_alpha,  // c_n = k(G_alpha(Z/p^n)) = p^{ne} ask(2 alpha)
  cc_h_theta,  // c_n = k(H_theta(Z/p^n)) = p^{ne} ask(hull(theta))
};

std::string to_string(Statistic statistic);
Statistic parse_statistic(const std::string& name);

struct Expectation {
  Statistic statistic = Statistic::ask;
  unsigned moment = 1;     // used by Statistic::ask
  std::string form;        // closed_form name
  std::string condition;   // when the closed form is known to apply
};

struct ExampleDescriptor {
  std::string name;
  std::vector<std::string> params;
  std::string summary;
  /// Expected closed forms; the FormParams are filled from the example's
  /// parameters by expected_forms().
  std::vector<Expectation> expectations;
};

const std::vector<ExampleDescriptor>& catalog_list();
const ExampleDescriptor& catalog_entry(const std::string& name);

/// Expectations of an example with their closed-form parameters.
std::vector<std::pair<Expectation, FormParams>> expected_forms(const std::string& name,
                                                               const CatalogParams& params);

}  // namespace askzeta
