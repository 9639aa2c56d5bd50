#include "askzeta/json_io.hpp"

#include <cctype>

namespace askzeta {

namespace {
const BigInt kExactJsonLimit = BigInt(1) << 53;
}  // namespace

Json big_to_json(const BigInt& value) {
  if (abs(value) <= kExactJsonLimit) return Json(static_cast<long long>(value));
  return Json(value.str());
}

BigInt big_from_json(const Json& value, const std::string& path) {
  if (value.is_number_integer()) {
    return value.is_number_unsigned() ? BigInt(value.get<unsigned long long>())
                                      : BigInt(value.get<long long>());
  }
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    std::size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) throw SchemaError(path + ": empty integer string");
    for (std::size_t t = k; t < s.size(); ++t)
      if (!std::isdigit(static_cast<unsigned char>(s[t])))
        throw SchemaError(path + ": '" + s + "' is not a decimal integer");
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  }
  throw SchemaError(path + ": expected an integer, got " + std::string(value.type_name()));
}

Json rational_to_json(const Rational& value) { return Json(to_fraction_string(value)); }

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

Json rep_to_json(const MRep& rep) {
  Json coeffs = Json::array();
  for (std::size_t h = 0; h < rep.l(); ++h) {
    Json mat = Json::array();
    for (std::size_t i = 0; i < rep.d(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < rep.e(); ++j) row.push_back(big_to_json(rep.at(h, i, j)));
      mat.push_back(std::move(row));
    }
    coeffs.push_back(std::move(mat));
  }
  Json doc;
  doc["shape"] = {{"l", rep.l()}, {"d", rep.d()}, {"e", rep.e()}};
  doc["coeffs"] = std::move(coeffs);
  return doc;
}

namespace {

std::size_t dimension(const Json& shape, const char* key) {
  if (!shape.contains(key)) throw SchemaError(std::string("shape.") + key + ": missing");
  const Json& v = shape.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError(std::string("shape.") + key + ": expected a non-negative integer");
  }
  return v.get<std::size_t>();
}

void expect_array(const Json& v, std::size_t size, const std::string& path, const char* what) {
  if (!v.is_array()) throw SchemaError(path + ": expected an array of " + what);
  if (v.size() != size) {
    throw SchemaError(path + ": expected " + std::to_string(size) + " " + what + ", got " +
                      std::to_string(v.size()));
  }
}

}  // namespace

MRep rep_from_json(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("document: expected an object");
  if (!doc.contains("shape") || !doc.at("shape").is_object()) {
    throw SchemaError("shape: missing or not an object");
  }
  const Json& shape = doc.at("shape");
  const Shape s{dimension(shape, "l"), dimension(shape, "d"), dimension(shape, "e")};
  if (!doc.contains("coeffs")) throw SchemaError("coeffs: missing");
  const Json& c = doc.at("coeffs");
  expect_array(c, s.l, "coeffs", "matrices");
  MRep rep(s);
  for (std::size_t h = 0; h < s.l; ++h) {
    const std::string ph = "coeffs[" + std::to_string(h) + "]";
    expect_array(c[h], s.d, ph, "rows");
    for (std::size_t i = 0; i < s.d; ++i) {
      const std::string pi = ph + "[" + std::to_string(i) + "]";
      expect_array(c[h][i], s.e, pi, "entries");
      for (std::size_t j = 0; j < s.e; ++j)
        rep.at(h, i, j) = big_from_json(c[h][i][j], pi + "[" + std::to_string(j) + "]");
    }
  }
  return rep;
}

MRep parse_rep(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& err) {
    throw SchemaError(std::string("invalid JSON: ") + err.what());
  }
  return rep_from_json(doc);
}

Json rational_function_to_json(const RationalFunction& f) {
  return Json{{"q", rational_to_json(f.q)},
              {"num", rationals_to_json(f.num.coeffs())},
              {"den", rationals_to_json(f.den.coeffs())}};
}

Json report_entry_to_json(const ReportEntry& entry) {
  return Json{{"claim", entry.claim},
              {"paper_ref", entry.ref},
              {"expected", entry.expected},
              {"computed", entry.computed},
              {"match", entry.match}};
}

}  // namespace askzeta
