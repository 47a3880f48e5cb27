#include "twoadic/gram_file.hpp"

#include <algorithm>

#include <json.hpp>

namespace twoadic {

GramMatrix read_gram_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed gram file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("entries"))
    throw std::invalid_argument("gram file needs fields dim and entries");
  const int dim = doc.at("dim").get<int>();
  if (dim < 1) throw std::invalid_argument("dim must be positive");
  int denom_exp = 0;
  if (doc.contains("denom_exp")) denom_exp = doc.at("denom_exp").get<int>();
  if (denom_exp < 0) throw std::invalid_argument("denom_exp must be >= 0");

  const auto& rows = doc.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != dim)
    throw std::invalid_argument("entries must be a dim x dim array");
  std::vector<Rational> entries;
  const Rational unit = pow2(-denom_exp);
  for (const auto& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("entries must be a dim x dim array");
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw std::invalid_argument("entries must be integers");
      entries.push_back(Rational(static_cast<long>(v.get<long long>())) * unit);
    }
  }
  return GramMatrix::from_entries(dim, entries);  // checks symmetry
}

std::string write_gram_json(const GramMatrix& g) {
  // smallest denom_exp that clears every denominator
  int denom_exp = 0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i; j < g.dim(); ++j) {
      const Rational& v = g.at(i, j);
      if (v == 0) continue;
      const mpz_class den = v.get_den();
      if (mpz_popcount(den.get_mpz_t()) != 1)
        throw std::invalid_argument("entries must be dyadic rationals");
      denom_exp = std::max(denom_exp, static_cast<int>(mpz_scan1(den.get_mpz_t(), 0)));
    }

  const Rational scale = pow2(denom_exp);
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.dim(); ++j) {
      const Rational v = g.at(i, j) * scale;
      const mpz_class z = v.get_num();
      if (!z.fits_slong_p()) throw std::invalid_argument("entry too large for gram file");
      row.push_back(static_cast<long long>(z.get_si()));
    }
    rows.push_back(std::move(row));
  }
  nlohmann::json doc;
  doc["dim"] = g.dim();
  doc["denom_exp"] = denom_exp;
  doc["entries"] = rows;
  return doc.dump();
}

}  // namespace twoadic
