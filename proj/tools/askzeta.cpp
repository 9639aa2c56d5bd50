// askzeta command-line tool.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 enumeration budget exhausted.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "askzeta/ask.hpp"
#include "askzeta/catalog.hpp"
#include "askzeta/groups.hpp"
#include "askzeta/json_io.hpp"
#include "askzeta/polynom.hpp"
#include "askzeta/verify.hpp"
#include "askzeta/zeta_forms.hpp"

using namespace askzeta;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct JobConfig {
  std::string input;
  std::string catalog;
  CatalogParams params;
  std::int64_t p = 2;
  int n = 1;
  unsigned m = 1;
  int levels = 2;
  std::string strategy = "auto";
  std::uint64_t budget = 10'000'000;
  unsigned workers = 0;
  std::string format = "table";
  std::uint64_t seed = VerifyOptions{}.seed;

  // subcommand specific
  std::string statistic = "ask";
  bool compare = false;
  std::string form;
  std::string op;
  std::string check_kind;
  std::string target;
  std::string triple;
  std::optional<int> rank;
  std::string group_kind;
  std::uint64_t max_order = GroupBudget{}.max_order;
  std::string catalog_action;
  std::string catalog_name;
  std::vector<int> only;
  std::size_t corpus = VerifyOptions{}.corpus_size;
  std::string preset;
};

EnumerationOptions enumeration(const JobConfig& cfg) { return {cfg.budget, cfg.workers}; }
GroupBudget group_budget(const JobConfig& cfg) {
  return {cfg.max_order, GroupBudget{}.max_class_scan, cfg.workers};
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

MRep load_rep(const JobConfig& cfg) {
  if (cfg.input.empty() == cfg.catalog.empty()) {
    throw UsageError("give exactly one of --input FILE or --catalog NAME");
  }
  if (!cfg.input.empty()) return parse_rep(read_text(cfg.input));
  return make_example(cfg.catalog, cfg.params);
}

std::string source_name(const JobConfig& cfg) {
  if (!cfg.input.empty()) return cfg.input;
  std::string s = cfg.catalog;
  std::vector<std::string> parts;
  auto add = [&](const char* k, const std::optional<long long>& v) {
    if (v) parts.push_back(std::string(k) + "=" + std::to_string(*v));
  };
  add("l", cfg.params.l);
  add("d", cfg.params.d);
  add("e", cfg.params.e);
  add("r", cfg.params.r);
  if (!parts.empty()) {
    s += "(";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + parts[k];
    s += ")";
  }
  return s;
}

Json shape_json(const Shape& s) { return Json{{"l", s.l}, {"d", s.d}, {"e", s.e}}; }

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_null()) return "-";
  return v.dump();
}

bool is_scalar(const Json& v) { return !v.is_object() && !v.is_array(); }

// Human-readable rendering of a report: scalars as "key: value", arrays of
// objects as aligned tables.
void print_table(const Json& report, std::ostream& os, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : report.items()) {
    if (is_scalar(value)) {
      os << pad << key << ": " << scalar_text(value) << '\n';
    } else if (value.is_object()) {
      os << pad << key << ":\n";
      print_table(value, os, indent + 2);
    } else if (std::all_of(value.begin(), value.end(), is_scalar)) {
      os << pad << key << ": ";
      for (std::size_t k = 0; k < value.size(); ++k) os << (k ? ", " : "") << scalar_text(value[k]);
      os << '\n';
    } else {
      os << pad << key << ":\n";
      std::vector<std::string> cols;
      for (const auto& row : value)
        if (row.is_object())
          for (const auto& [c, _] : row.items())
            if (std::find(cols.begin(), cols.end(), c) == cols.end()) cols.push_back(c);
      std::vector<std::vector<std::string>> cells;
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : value) {
        std::vector<std::string> line;
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::string t = row.contains(cols[k])
                              ? (is_scalar(row[cols[k]]) ? scalar_text(row[cols[k]])
                                                         : row[cols[k]].dump())
                              : "";
          width[k] = std::max(width[k], t.size());
          line.push_back(std::move(t));
        }
        cells.push_back(std::move(line));
      }
      auto emit = [&](const std::vector<std::string>& line) {
        os << pad << "  ";
        for (std::size_t k = 0; k < line.size(); ++k)
          os << std::left << std::setw(static_cast<int>(width[k]) + 2) << line[k];
        os << '\n';
      };
      emit(cols);
      for (const auto& line : cells) emit(line);
    }
  }
}

void print_tensor_table(const MRep& rep, std::ostream& os) {
  os << "shape: (l, d, e) = (" << rep.l() << ", " << rep.d() << ", " << rep.e() << ")\n";
  for (std::size_t h = 0; h < rep.l(); ++h) {
    os << "A_" << h + 1 << ":\n";
    for (std::size_t i = 0; i < rep.d(); ++i) {
      os << "  [";
      for (std::size_t j = 0; j < rep.e(); ++j) os << (j ? " " : "") << std::setw(3) << rep.at(h, i, j);
      os << " ]\n";
    }
  }
}

void emit(const JobConfig& cfg, const Json& report) {
  if (cfg.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    print_table(report, std::cout);
  }
}

void emit_tensor(const JobConfig& cfg, const MRep& rep) {
  if (cfg.format == "json") {
    std::cout << rep_to_json(rep).dump(2) << '\n';
  } else {
    print_tensor_table(rep, std::cout);
  }
}

// ---------------------------------------------------------------- commands

int cmd_ask(const JobConfig& cfg) {
  const MRep rep = load_rep(cfg);
  const TruncatedRing ring(cfg.p, cfg.n);
  const auto res = ask_m(rep, ring, cfg.m, parse_strategy(cfg.strategy), enumeration(cfg));
  emit(cfg, Json{{"tensor", source_name(cfg)},
                 {"shape", shape_json(rep.shape())},
                 {"p", cfg.p},
                 {"n", cfg.n},
                 {"m", cfg.m},
                 {"strategy", to_string(res.strategy)},
                 {"ask", rational_to_json(res.value)}});
  return kOk;
}

// c_n for n = 0..levels of the requested statistic.
std::vector<Rational> statistic_coeffs(const MRep& rep, Statistic stat, const JobConfig& cfg) {
  const auto opts = enumeration(cfg);
  auto complete = [](const ZetaCoefficients& z) {
    if (!z.complete())
      throw BudgetExceeded("enumeration budget exhausted at level " +
                           std::to_string(*z.failed_level));
    return z.coeffs;
  };
  switch (stat) {
    case Statistic::ask:
      return complete(zeta_coeffs(rep, cfg.p, cfg.m, cfg.levels, parse_strategy(cfg.strategy), opts));
    case Statistic::ask_hull:
      return complete(zeta_coeffs(alternating_hull(rep), cfg.p, 1, cfg.levels,
                                  parse_strategy(cfg.strategy), opts));
    case Statistic::cc_g_alpha:
    case Statistic::cc_h_theta: {
      const GroupKind kind = stat == Statistic::cc_g_alpha ? GroupKind::g_alpha : GroupKind::h_theta;
      std::vector<Rational> out;
      for (int n = 0; n <= cfg.levels; ++n) {
        FiniteGroup g(kind, rep, TruncatedRing(cfg.p, n), group_budget(cfg));
        out.emplace_back(class_number(g, group_budget(cfg)));
      }
      return out;
    }
  }
  return {};
}

std::optional<std::pair<std::string, FormParams>> comparison_form(const JobConfig& cfg,
                                                                  Statistic stat, const MRep& rep) {
  if (!cfg.form.empty()) {
    FormParams fp;
    fp.l = cfg.params.l.value_or(static_cast<long long>(rep.l()));
    fp.d = cfg.params.d.value_or(static_cast<long long>(rep.d()));
    fp.e = cfg.params.e.value_or(static_cast<long long>(rep.e()));
    fp.r = cfg.params.r.value_or(1);
    fp.m = cfg.m;
    if (cfg.form == "determinantal") {
      const auto h = count_hypersurface_points(det_linear_matrix(rep), TruncatedRing(cfg.p, 1));
      fp.h_count = h.points;
    }
    return std::pair{cfg.form, fp};
  }
  if (cfg.catalog.empty()) return std::nullopt;
  for (const auto& [ex, fp] : expected_forms(cfg.catalog, cfg.params)) {
    if (ex.statistic != stat) continue;
    if (stat == Statistic::ask && ex.moment != cfg.m) continue;
    if (ex.condition.find("p odd") != std::string::npos && cfg.p == 2) continue;
    return std::pair{ex.form, fp};
  }
  return std::nullopt;
}

int cmd_zeta(const JobConfig& cfg) {
  const MRep rep = load_rep(cfg);
  const Statistic stat = parse_statistic(cfg.statistic);
  if (stat != Statistic::ask && cfg.m != 1) throw UsageError("--m applies to the ask statistic only");
  const auto coeffs = statistic_coeffs(rep, stat, cfg);

  Json report{{"tensor", source_name(cfg)},
              {"shape", shape_json(rep.shape())},
              {"statistic", to_string(stat)},
              {"p", cfg.p},
              {"m", cfg.m},
              {"levels", cfg.levels}};
  bool all = true;
  Json rows = Json::array();
  std::optional<RationalFunction> form;
  if (cfg.compare) {
    const auto chosen = comparison_form(cfg, stat, rep);
    if (!chosen) {
      throw UsageError("no closed form registered for this example and statistic; pass --form");
    }
    form = closed_form(chosen->first, chosen->second, cfg.p);
    report["form"] = chosen->first;
    report["closed_form"] = form->to_string();
  }
  const auto series = form ? form->expand(static_cast<std::size_t>(cfg.levels)) : std::vector<Rational>{};
  for (int k = 0; k <= cfg.levels; ++k) {
    Json row{{"level", k}, {"computed", rational_to_json(coeffs[k])}};
    if (form) {
      const bool match = series[k] == coeffs[k];
      all = all && match;
      row["expected"] = rational_to_json(series[k]);
      row["match"] = match ? "match" : "MISMATCH";
    }
    rows.push_back(std::move(row));
  }
  report["coefficients"] = std::move(rows);
  if (form) report["verdict"] = all ? "match" : "mismatch";
  emit(cfg, report);
  return all ? kOk : kVerificationFailed;
}

int cmd_dual(const JobConfig& cfg) {
  emit_tensor(cfg, dual(load_rep(cfg), parse_dual_kind(cfg.op)));
  return kOk;
}

int cmd_hull(const JobConfig& cfg) {
  emit_tensor(cfg, alternating_hull(load_rep(cfg)));
  return kOk;
}

IntMatrix matrix_from_json(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array()) {
    throw SchemaError(field + ": expected an array of rows");
  }
  const auto& rows = j[field];
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  std::vector<std::int64_t> entries;
  for (std::size_t i = 0; i < r; ++i) {
    if (!rows[i].is_array() || rows[i].size() != c) {
      throw SchemaError(field + "[" + std::to_string(i) + "]: expected " + std::to_string(c) +
                        " entries");
    }
    for (std::size_t k = 0; k < c; ++k) {
      if (!rows[i][k].is_number_integer()) {
        throw SchemaError(field + "[" + std::to_string(i) + "][" + std::to_string(k) +
                          "]: expected an integer");
      }
      entries.push_back(rows[i][k].get<std::int64_t>());
    }
  }
  return IntMatrix(r, c, std::move(entries));
}

int cmd_check(const JobConfig& cfg) {
  MRep rep = load_rep(cfg);
  if (!cfg.op.empty()) rep = dual(rep, parse_dual_kind(cfg.op));
  const TruncatedRing ring(cfg.p, cfg.n);
  Json report{{"tensor", source_name(cfg)}, {"shape", shape_json(rep.shape())}, {"check", cfg.check_kind}};
  bool ok = true;

  if (cfg.check_kind == "duality") {
    const auto opts = enumeration(cfg);
    const Rational a = ask_m(rep, ring, 1, Strategy::direct, opts).value;
    const long long l = rep.l(), d = rep.d(), e = rep.e();
    const Rational p(cfg.p);
    struct Row {
      DualKind kind;
      long long exponent;
    };
    Json rows = Json::array();
    for (const Row& row : {Row{DualKind::circ, cfg.n * (l - d)}, Row{DualKind::vee, cfg.n * (e - d)},
                           Row{DualKind::bullet, 0}}) {
      const Rational expected = rational_pow(p, row.exponent) * a;
      const Rational computed = ask_m(dual(rep, row.kind), ring, 1, Strategy::direct, opts).value;
      ok = ok && expected == computed;
      rows.push_back(report_entry_to_json(
          {"ask(" + to_string(row.kind) + ") = p^" + std::to_string(row.exponent) + " ask",
           "ask-duality-" + to_string(row.kind), to_fraction_string(expected),
           to_fraction_string(computed), expected == computed}));
    }
    report["p"] = cfg.p;
    report["n"] = cfg.n;
    report["ask"] = rational_to_json(a);
    report["checks"] = std::move(rows);
  } else if (cfg.check_kind == "constant-rank") {
    const auto res = constant_rank_check(rep, TruncatedRing(cfg.p, 1));
    report["p"] = cfg.p;
    report["constant"] = res.constant;
    report["rank"] = res.rank;
    if (cfg.rank) {
      ok = res.constant && res.rank == *cfg.rank;
      report["expected_rank"] = *cfg.rank;
    }
  } else if (cfg.check_kind == "kminimal") {
    if (!cfg.rank) throw UsageError("check kminimal needs --rank R");
    const auto res = kminimality_check(rep, cfg.p, cfg.levels, *cfg.rank);
    Json levels = Json::array();
    for (std::size_t k = 0; k < res.level_ok.size(); ++k)
      levels.push_back(Json{{"level", k + 1}, {"kernel_sizes_minimal", static_cast<bool>(res.level_ok[k])}});
    ok = res.all_levels_ok();
    report["p"] = cfg.p;
    report["rank"] = *cfg.rank;
    report["levels"] = std::move(levels);
    report["certified_by_constant_rank"] = res.certified;
  } else if (cfg.check_kind == "homotopy") {
    if (cfg.target.empty()) throw UsageError("check homotopy needs --target FILE");
    const MRep target = parse_rep(read_text(cfg.target));
    HomotopyTriple triple = HomotopyTriple::identity(rep.shape());
    if (!cfg.triple.empty()) {
      const Json j = Json::parse(read_text(cfg.triple));
      triple = {matrix_from_json(j, "module_map"), matrix_from_json(j, "domain_map"),
                matrix_from_json(j, "codomain_map")};
    }
    ok = verify_homotopy(triple, rep, target, ring);
    report["p"] = cfg.p;
    report["n"] = cfg.n;
    report["triple"] = cfg.triple.empty() ? "identity" : cfg.triple;
    report["homotopy"] = ok;
  } else {
    throw UsageError("unknown check '" + cfg.check_kind +
                     "' (expected duality, kminimal, constant-rank or homotopy)");
  }
  report["verdict"] = ok ? "OK" : "FAILED";
  emit(cfg, report);
  return ok ? kOk : kVerificationFailed;
}

Json identity_check_json(const IdentityCheck& c) {
  Json j{{"claim", c.claim},
         {"paper_ref", c.law},
         {"expected", c.expected ? rational_to_json(*c.expected) : Json()},
         {"computed", c.computed ? rational_to_json(*c.computed) : Json()},
         {"match", c.match}};
  if (c.skipped) j["skipped"] = true;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

int cmd_group(const JobConfig& cfg) {
  const MRep rep = load_rep(cfg);
  const TruncatedRing ring(cfg.p, cfg.n);
  const GroupKind kind = parse_group_kind(cfg.group_kind);
  const GroupBudget budget = group_budget(cfg);
  FiniteGroup group(kind, rep, ring, budget);
  const auto k = class_number(group, budget);

  Json report{{"tensor", source_name(cfg)},
              {"kind", to_string(kind)},
              {"p", cfg.p},
              {"n", cfg.n},
              {"order", group.order()},
              {"k", k}};
  Json checks = Json::array();
  bool ok = true;
  if (kind == GroupKind::lazard) {
    const auto c = verify_lie_identity(rep, ring, budget);
    ok = c.match;
    checks.push_back(identity_check_json(c));
  } else {
    const auto r = verify_class_identities(rep, ring, budget);
    // Report the identity that matches the requested group construction.
    const std::string law = kind == GroupKind::g_alpha ? "class-number-g-alpha" : "class-number-h-theta";
    for (const auto& c : r.checks) {
      if (c.law != law) continue;
      ok = ok && (c.match || c.skipped);
      checks.push_back(identity_check_json(c));
    }
  }
  report["identities"] = std::move(checks);
  report["verdict"] = ok ? "OK" : "FAILED";
  emit(cfg, report);
  return ok ? kOk : kVerificationFailed;
}

int cmd_catalog(const JobConfig& cfg) {
  if (cfg.catalog_action == "list") {
    Json rows = Json::array();
    for (const auto& entry : catalog_list()) {
      std::string params, forms;
      for (const auto& p : entry.params) params += (params.empty() ? "" : ",") + p;
      for (const auto& ex : entry.expectations) {
        forms += (forms.empty() ? "" : "; ") + ex.form + " [" + to_string(ex.statistic) +
                 (ex.statistic == Statistic::ask ? ", m=" + std::to_string(ex.moment) : "") + "]";
      }
      rows.push_back(Json{{"name", entry.name}, {"params", params}, {"summary", entry.summary}, {"closed_forms", forms}});
    }
    emit(cfg, Json{{"examples", std::move(rows)}});
    return kOk;
  }
  if (cfg.catalog_action == "emit") {
    const std::string name = !cfg.catalog_name.empty() ? cfg.catalog_name : cfg.catalog;
    if (name.empty()) throw UsageError("catalog emit needs an example name");
    emit_tensor(cfg, make_example(name, cfg.params));
    return kOk;
  }
  throw UsageError("unknown catalog action '" + cfg.catalog_action + "' (expected list or emit)");
}

int cmd_verify(const JobConfig& cfg) {
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.budget = cfg.budget;
  opts.workers = cfg.workers;
  opts.corpus_size = cfg.corpus;
  opts.only.insert(cfg.only.begin(), cfg.only.end());
  const auto results = run_acceptance(opts);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (cfg.format == "json") {
    std::cout << acceptance_to_json(results, opts).dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << std::setw(2) << r.id << ": "
                << r.title << " (" << r.comparisons << " comparisons)\n";
      if (!r.pass)
        for (const auto& e : r.entries)
          if (!e.match)
            std::cout << "    " << e.claim << ": expected " << e.expected << ", computed "
                      << e.computed << '\n';
    }
    std::cout << (all ? "ALL PASS" : "FAILURES") << '\n';
  }
  return all ? kOk : kVerificationFailed;
}

int cmd_det_example(const JobConfig& cfg) {
  const MRep rep = load_rep(cfg);
  if (rep.d() != rep.e()) throw UsageError("det-example needs a square tensor (d = e)");
  const MultiPoly f = det_linear_matrix(rep);
  if (f.is_zero()) throw UsageError("the determinant vanishes identically");
  const auto h = count_hypersurface_points(f, TruncatedRing(cfg.p, 1));
  Json report{{"tensor", source_name(cfg)},
              {"shape", shape_json(rep.shape())},
              {"determinant", f.to_string()},
              {"p", cfg.p},
              {"smooth", h.smooth},
              {"H_points", big_to_json(h.points)},
              {"m", cfg.m}};
  if (!h.smooth) {
    report["note"] = "F is singular over F_p; the determinantal formula does not apply";
    emit(cfg, report);
    return kVerificationFailed;
  }
  FormParams fp;
  fp.l = static_cast<long long>(rep.l());
  fp.d = static_cast<long long>(rep.d());
  fp.m = cfg.m;
  fp.h_count = h.points;
  const auto form = closed_form("determinantal", fp, cfg.p);
  const auto series = form.expand(static_cast<std::size_t>(cfg.levels));
  report["closed_form"] = form.to_string();
  bool all = true;
  Json rows = Json::array();
  std::vector<Rational> brute;
  if (cfg.compare) {
    auto z = zeta_coeffs(rep, cfg.p, cfg.m, cfg.levels, Strategy::direct, enumeration(cfg));
    if (!z.complete())
      throw BudgetExceeded("enumeration budget exhausted at level " + std::to_string(*z.failed_level));
    brute = z.coeffs;
  }
  for (int k = 0; k <= cfg.levels; ++k) {
    Json row{{"level", k}, {"expected", rational_to_json(series[k])}};
    if (cfg.compare) {
      row["computed"] = rational_to_json(brute[k]);
      row["match"] = brute[k] == series[k] ? "match" : "MISMATCH";
      all = all && brute[k] == series[k];
    }
    rows.push_back(std::move(row));
  }
  report["coefficients"] = std::move(rows);
  emit(cfg, report);
  return all ? kOk : kVerificationFailed;
}

// Open-ended exploration: ask^m of Mat_{d x e} for m >= 2, where no closed
// form is known outside d = e, m = 2.
int cmd_experiment(const JobConfig& cfg) {
  if (cfg.preset != "matdxe-moments") {
    throw UsageError("unknown experiment '" + cfg.preset + "' (available: matdxe-moments)");
  }
  const long long d = cfg.params.d.value_or(2), e = cfg.params.e.value_or(2);
  const MRep rep = make_example("matdxe", {.d = d, .e = e});
  auto z = zeta_coeffs(rep, cfg.p, cfg.m, cfg.levels, Strategy::direct, enumeration(cfg));
  Json report{{"tensor", "matdxe(d=" + std::to_string(d) + ",e=" + std::to_string(e) + ")"},
              {"p", cfg.p},
              {"m", cfg.m}};
  std::optional<std::vector<Rational>> known;
  if (cfg.m == 1) known = closed_form("matdxe", FormParams{.d = d, .e = e}, cfg.p).expand(cfg.levels);
  if (cfg.m == 2 && d == e) known = closed_form("ask2_matd", FormParams{.d = d}, cfg.p).expand(cfg.levels);
  report["closed_form_known"] = known.has_value();
  Json rows = Json::array();
  for (std::size_t k = 0; k < z.coeffs.size(); ++k) {
    Json row{{"level", k}, {"ask_m", rational_to_json(z.coeffs[k])}};
    if (known) row["closed_form"] = rational_to_json((*known)[k]);
    rows.push_back(std::move(row));
  }
  report["coefficients"] = std::move(rows);
  if (!z.complete()) report["stopped_at_level"] = *z.failed_level;
  emit(cfg, report);
  return z.complete() ? kOk : kBudget;
}

// ---------------------------------------------------------------- parsing

void ring_options(CLI::App* sub, JobConfig& cfg, bool level = true) {
  sub->add_option("--p", cfg.p, "prime p")->check(CLI::PositiveNumber);
  if (level) sub->add_option("--n", cfg.n, "ring level n (Z/p^n)")->check(CLI::NonNegativeNumber);
}

void tensor_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--input", cfg.input, "tensor JSON file ('-' for stdin)");
  sub->add_option("--catalog", cfg.catalog, "named example instead of --input");
  sub->add_option("--l", cfg.params.l, "example parameter l");
  sub->add_option("--d", cfg.params.d, "example parameter d");
  sub->add_option("--e", cfg.params.e, "example parameter e");
  sub->add_option("--r", cfg.params.r, "example parameter r");
}

void run_options(CLI::App* sub, JobConfig& cfg) {
  sub->add_option("--budget", cfg.budget, "maximal kernel evaluations per ask computation")
      ->check(CLI::PositiveNumber);
  sub->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  JobConfig cfg;
  CLI::App app{"askzeta: exact average kernel sizes, ask zeta coefficients, duals and class numbers"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.fallthrough();

  auto* ask = app.add_subcommand("ask", "ask^m over Z/p^n");
  tensor_options(ask, cfg);
  ring_options(ask, cfg);
  ask->add_option("--m", cfg.m, "moment m")->check(CLI::PositiveNumber);
  ask->add_option("--strategy", cfg.strategy, "auto, direct, circ or bullet");
  run_options(ask, cfg);

  auto* zeta = app.add_subcommand("zeta", "zeta coefficients c_0..c_N, optionally compared with a closed form");
  tensor_options(zeta, cfg);
  ring_options(zeta, cfg, false);
  zeta->add_option("--m", cfg.m, "moment m")->check(CLI::PositiveNumber);
  zeta->add_option("--levels", cfg.levels, "highest level N")->check(CLI::NonNegativeNumber);
  zeta->add_option("--strategy", cfg.strategy, "auto, direct, circ or bullet");
  zeta->add_option("--statistic", cfg.statistic, "ask, ask_hull, cc_galpha or cc_htheta");
  zeta->add_flag("--compare", cfg.compare, "compare with the registered (or --form) closed form");
  zeta->add_option("--form", cfg.form, "closed form name for --compare");
  run_options(zeta, cfg);

  auto* dual_cmd = app.add_subcommand("dual", "emit a dual tensor");
  tensor_options(dual_cmd, cfg);
  dual_cmd->add_option("--op", cfg.op, "circ, bullet or vee")->required();

  auto* hull = app.add_subcommand("hull", "emit the alternating hull");
  tensor_options(hull, cfg);

  auto* check = app.add_subcommand("check", "duality, kminimal, constant-rank or homotopy predicates");
  check->add_option("kind", cfg.check_kind, "duality | kminimal | constant-rank | homotopy")->required();
  tensor_options(check, cfg);
  ring_options(check, cfg);
  check->add_option("--levels", cfg.levels, "highest level for kminimal")->check(CLI::PositiveNumber);
  check->add_option("--op", cfg.op, "dualize the input first (circ, bullet or vee)");
  check->add_option("--rank", cfg.rank, "expected rank r");
  check->add_option("--target", cfg.target, "target tensor JSON for homotopy");
  check->add_option("--triple", cfg.triple, "homotopy triple JSON {module_map, domain_map, codomain_map}");
  run_options(check, cfg);

  auto* group = app.add_subcommand("group", "class number of G_alpha, H_theta or exp(L) and its identity");
  tensor_options(group, cfg);
  ring_options(group, cfg);
  group->add_option("--kind", cfg.group_kind, "galpha, htheta or lazard")->required();
  group->add_option("--max-order", cfg.max_order, "largest group order to enumerate");
  group->add_option("--workers", cfg.workers, "worker threads (0 = all cores)");

  auto* catalog = app.add_subcommand("catalog", "list or emit named examples");
  catalog->add_option("action", cfg.catalog_action, "list | emit")->required();
  catalog->add_option("name", cfg.catalog_name, "example to emit");
  tensor_options(catalog, cfg);

  auto* verify = app.add_subcommand("verify", "run the full acceptance suite");
  verify->add_option("--seed", cfg.seed, "seed of the random corpus");
  verify->add_option("--corpus", cfg.corpus, "number of random tensors");
  verify->add_option("--only", cfg.only, "criteria to run")->check(CLI::Range(1, 14));
  run_options(verify, cfg);

  auto* det = app.add_subcommand("det-example", "determinant, smoothness, #H and the determinantal closed form");
  tensor_options(det, cfg);
  ring_options(det, cfg, false);
  det->add_option("--m", cfg.m, "moment m")->check(CLI::PositiveNumber);
  det->add_option("--levels", cfg.levels, "highest level N")->check(CLI::NonNegativeNumber);
  det->add_flag("--compare", cfg.compare, "also enumerate the coefficients");
  run_options(det, cfg);

  auto* experiment = app.add_subcommand("experiment", "exploratory presets without a known answer");
  experiment->add_option("preset", cfg.preset, "matdxe-moments")->required();
  experiment->add_option("--d", cfg.params.d, "rows d");
  experiment->add_option("--e", cfg.params.e, "columns e");
  ring_options(experiment, cfg, false);
  experiment->add_option("--m", cfg.m, "moment m")->check(CLI::PositiveNumber);
  experiment->add_option("--levels", cfg.levels, "highest level N")->check(CLI::NonNegativeNumber);
  run_options(experiment, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ask) return cmd_ask(cfg);
    if (*zeta) return cmd_zeta(cfg);
    if (*dual_cmd) return cmd_dual(cfg);
    if (*hull) return cmd_hull(cfg);
    if (*check) return cmd_check(cfg);
    if (*group) return cmd_group(cfg);
    if (*catalog) return cmd_catalog(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*det) return cmd_det_example(cfg);
    if (*experiment) return cmd_experiment(cfg);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
