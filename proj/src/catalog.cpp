#include "askzeta/catalog.hpp"

#include <stdexcept>

namespace askzeta {

namespace {

long long need(const std::optional<long long>& v, const char* what, const std::string& name,
               long long min_value = 1) {
  if (!v) throw std::invalid_argument(name + ": missing parameter " + what);
  if (*v < min_value) {
    throw std::invalid_argument(name + ": parameter " + std::string(what) + " must be >= " +
                                std::to_string(min_value));
  }
  if (*v > 64) throw std::invalid_argument(name + ": parameter " + std::string(what) + " too large");
  return *v;
}

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

// Index of the pair (i, j), i < j, in lexicographic order among pairs of {0..d-1}.
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d) {
  return i * d - i * (i + 1) / 2 + (j - i - 1);
}

// Index of (i, j), i <= j, lexicographically among such pairs.
std::size_t sym_index(std::size_t i, std::size_t j, std::size_t d) {
  return i * d - i * (i - 1) / 2 + (j - i);
}

MRep matdxe(std::size_t d, std::size_t e) {
  MRep rep(Shape{d * e, d, e});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < e; ++j) rep.at(i * e + j, i, j) = 1;
  return rep;
}

MRep so(std::size_t d) {
  MRep rep(Shape{binom2(d), d, d});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      rep.at(pair_index(i, j, d), i, j) = 1;
      rep.at(pair_index(i, j, d), j, i) = -1;
    }
  return rep;
}

MRep sym(std::size_t d) {
  MRep rep(Shape{binom2(d + 1), d, d});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      rep.at(sym_index(i, j, d), i, j) = 1;
      rep.at(sym_index(i, j, d), j, i) = 1;
    }
  return rep;
}

// (2r-1) x r band matrix: entry (i, j) is x_{i-j} when 0 <= i - j < r.
MRep band(std::size_t r) {
  MRep rep(Shape{r, 2 * r - 1, r});
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t h = 0; h < r; ++h) rep.at(h, j + h, j) = 1;
  return rep;
}

// r x r Hankel matrix: entry (a, b) is z_{a+b}.
MRep hankel(std::size_t r) {
  MRep rep(Shape{2 * r - 1, r, r});
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) rep.at(a + b, a, b) = 1;
  return rep;
}

// Tridiagonal (2r+1) x (2r+1) matrix in X, Y, Z: row k has X below the
// diagonal, alpha_k Y on it and beta_k Z above it (1-based k), with
// alpha_{r+1} = 0, beta_r = -1 and all other alpha, beta equal to 1.
MRep westwick_h(std::size_t r) {
  const std::size_t n = 2 * r + 1;
  MRep rep(Shape{3, n, n});
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = i + 1;
    if (i >= 1) rep.at(0, i, i - 1) = 1;
    if (k != r + 1) rep.at(1, i, i) = 1;
    if (i + 1 < n) rep.at(2, i, i + 1) = k == r ? -1 : 1;
  }
  return rep;
}

// (2r+1) x 3 matrix whose row i is (X_{i-1}, X_i, X_{i+1}) with X_{-1} =
// X_{2r+1} = 0, except that entry (r-1, 2) is -X_r and entry (r, 1) is 0.
MRep westwick_a(std::size_t r) {
  const std::size_t n = 2 * r + 1;
  MRep rep(Shape{n, n, 3});
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= 1) rep.at(i - 1, i, 0) = 1;
    if (i != r) rep.at(i, i, 1) = 1;
    if (i + 1 < n) rep.at(i + 1, i, 2) = i + 1 == r ? -1 : 1;
  }
  return rep;
}

// c_d(X_1..X_d) = [X_1 1_d ; 0 | c_{d-1}(X_2..X_d)], C(d+1,2) x d.
void fill_gamma(MRep& rep, std::size_t size, std::size_t row, std::size_t col, std::size_t var) {
  if (size == 0) return;
  for (std::size_t k = 0; k < size; ++k) rep.at(var, row + k, col + k) = 1;
  fill_gamma(rep, size - 1, row + size, col + 1, var + 1);
}

MRep gamma(std::size_t d) {
  MRep rep(Shape{d, binom2(d + 1), d});
  fill_gamma(rep, d, 0, 0, 0);
  return rep;
}

// V x V -> V wedge V, x o a = x wedge a, basis e_i wedge e_j (i < j) in lex order.
MRep type_f(std::size_t d) {
  MRep rep(Shape{d, d, binom2(d)});
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t i = 0; i < d; ++i) {
      if (i < h) rep.at(h, i, pair_index(i, h, d)) = 1;
      if (i > h) rep.at(h, i, pair_index(h, i, d)) = -1;
    }
  return rep;
}

// V x V* -> End(V), x o a = E_{x a}, matrix units E_{ij} row-major.
MRep type_g(std::size_t d) {
  MRep rep(Shape{d, d, d * d});
  for (std::size_t h = 0; h < d; ++h)
    for (std::size_t i = 0; i < d; ++i) rep.at(h, i, i * d + h) = 1;
  return rep;
}

MRep heisenberg() {
  MRep lie(Shape{3, 3, 3});
  lie.at(1, 0, 2) = 1;  // [e_0, e_1] = e_2
  lie.at(0, 1, 2) = -1;
  return lie;
}

}  // namespace

MRep make_example(const std::string& name, const CatalogParams& p) {
  auto z = [](long long v) { return static_cast<std::size_t>(v); };
  if (name == "matdxe") return matdxe(z(need(p.d, "d", name)), z(need(p.e, "e", name)));
  if (name == "so") return so(z(need(p.d, "d", name)));
  if (name == "sym") return sym(z(need(p.d, "d", name)));
  if (name == "band") return band(z(need(p.r, "r", name)));
  if (name == "hankel") return hankel(z(need(p.r, "r", name)));
  if (name == "westwick_H") return westwick_h(z(need(p.r, "r", name)));
  if (name == "westwick_a") return westwick_a(z(need(p.r, "r", name)));
  if (name == "gamma") return gamma(z(need(p.d, "d", name)));
  if (name == "type_F") return type_f(z(need(p.d, "d", name)));
  if (name == "type_G") return type_g(z(need(p.d, "d", name)));
  if (name == "lie_heisenberg") return heisenberg();
  if (name == "lie_abelian") {
    const std::size_t d = z(need(p.d, "d", name));
    return MRep(Shape{d, d, d});
  }
  if (name == "zero") {
    return MRep(Shape{z(need(p.l, "l", name, 0)), z(need(p.d, "d", name, 0)),
                      z(need(p.e, "e", name, 0))});
  }
  throw std::invalid_argument("unknown catalog example '" + name + "'");
}

std::string to_string(Statistic statistic) {
  switch (statistic) {
    case Statistic::ask:
      return "ask";
    case Statistic::ask_hull:
      return "ask_hull";
    case Statistic::cc_g_alpha:
      return "cc_galpha";
    case Statistic::cc_h_theta:
      return "cc_htheta";
  }
  return "?";
}

Statistic parse_statistic(const std::string& name) {
  if (name == "ask") return Statistic::ask;
  if (name == "ask_hull") return Statistic::ask_hull;
  if (name == "cc_galpha") return Statistic::cc_g_alpha;
  if (name == "cc_htheta") return Statistic::cc_h_theta;
  throw std::invalid_argument("unknown statistic '" + name +
                              "' (expected ask, ask_hull, cc_galpha or cc_htheta)");
}

const std::vector<ExampleDescriptor>& catalog_list() {
  static const std::vector<ExampleDescriptor> entries = {
      {"matdxe", {"d", "e"}, "inclusion of all d x e matrices",
       {{Statistic::ask, 1, "matdxe", "all p"},
        {Statistic::ask, 2, "ask2_matd", "all p; requires d = e"}}},
      {"so", {"d"}, "inclusion of antisymmetric d x d matrices", {}},
      {"sym", {"d"}, "inclusion of symmetric d x d matrices", {}},
      {"band", {"r"}, "(2r-1) x r band matrix in r variables",
       {{Statistic::ask, 1, "band", "all p"}}},
      {"hankel", {"r"}, "r x r Hankel matrix in 2r-1 variables; circ dual of band(r)",
       {{Statistic::ask, 1, "hankel", "all p"}}},
      {"westwick_H", {"r"}, "tridiagonal (2r+1) x (2r+1) constant-rank space in 3 variables",
       {{Statistic::ask, 1, "westwick",
         "p large enough; certified when constant_rank_check gives rank 2r at p"}}},
      {"westwick_a", {"r"}, "(2r+1) x 3 matrix in 2r+1 variables whose bullet dual has constant rank",
       {{Statistic::ask, 1, "westwick",
         "certified when the bullet dual has constant rank 2r at p"}}},
      {"gamma", {"d"}, "C(d+1,2) x d staircase matrix in d variables",
       {{Statistic::ask, 1, "gamma_m", "all p"},
        {Statistic::ask, 2, "gamma_m", "all p"},
        {Statistic::cc_h_theta, 1, "cc_H_gamma", "all p"}}},
      {"type_F", {"d"}, "alternating map V x V -> V wedge V",
       {{Statistic::cc_g_alpha, 1, "type_F_cc", "p odd"}}},
      {"type_G", {"d"}, "V x V* -> End(V); its bullet dual is the d x d matrix inclusion",
       {{Statistic::ask_hull, 1, "ask2_matd", "all p"}}},
      {"lie_heisenberg", {}, "Heisenberg Lie ring [e0, e1] = e2", {}},
      {"lie_abelian", {"d"}, "abelian Lie ring of rank d", {}},
      {"zero", {"l", "d", "e"}, "zero representation",
       {{Statistic::ask, 1, "zero", "all p"}}},
  };
  return entries;
}

const ExampleDescriptor& catalog_entry(const std::string& name) {
  for (const auto& entry : catalog_list())
    if (entry.name == name) return entry;
  throw std::invalid_argument("unknown catalog example '" + name + "'");
}

std::vector<std::pair<Expectation, FormParams>> expected_forms(const std::string& name,
                                                               const CatalogParams& params) {
  const auto& entry = catalog_entry(name);
  const MRep rep = make_example(name, params);  // validates the parameters
  std::vector<std::pair<Expectation, FormParams>> out;
  for (const auto& ex : entry.expectations) {
    FormParams fp;
    fp.l = static_cast<long long>(rep.l());
    fp.d = params.d.value_or(static_cast<long long>(rep.d()));
    fp.e = params.e.value_or(static_cast<long long>(rep.e()));
    fp.r = params.r.value_or(1);
    fp.m = ex.moment;
    if (name == "matdxe" && ex.form == "ask2_matd" && fp.d != fp.e) continue;
    if (name == "zero") fp.d = static_cast<long long>(rep.d());
    out.emplace_back(ex, fp);
  }
  return out;
}

}  // namespace askzeta
