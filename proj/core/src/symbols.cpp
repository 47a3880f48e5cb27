#include "twoadic/symbols.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace twoadic {

bool is_legal_term(const JordanConstituent& c) {
  if (c.dim < 0) return false;
  if (c.type == Type::II) {
    if (c.dim == 0) return c.sign == Sign::plus;
    return c.dim % 2 == 0;
  }
  const int t = mod8(c.oddity);
  switch (c.dim) {
    case 0:
      return false;
    case 1:
      if (c.sign == Sign::plus) return t == 1 || t == 7;
      return t == 3 || t == 5;
    case 2:
      if (c.sign == Sign::plus) return t == 0 || t == 2 || t == 6;
      return t == 4 || t == 2 || t == 6;
    default:
      return t % 2 == c.dim % 2;
  }
}

namespace {

// legal subscripts for a type I constituent of the given dimension and sign
std::vector<int> legal_oddities(int dim, Sign sign) {
  std::vector<int> out;
  for (int t = 0; t < 8; ++t)
    if (is_legal_term({0, dim, Type::I, sign, t})) out.push_back(t);
  return out;
}

std::string describe_term(const TwoAdicTerm& t) {
  return "scale 2^" + std::to_string(t.scale_exp) + " dim " + std::to_string(t.dim);
}

// maximal runs of type I terms at consecutive scales, as exponent intervals;
// terms must be sorted by scale
std::vector<std::pair<int, int>> compartment_runs(std::span<const TwoAdicTerm> terms) {
  std::vector<std::pair<int, int>> runs;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].type != Type::I) continue;
    if (!runs.empty() && i > 0 && terms[i - 1].type == Type::I &&
        runs.back().second == terms[i - 1].scale_exp &&
        terms[i].scale_exp == terms[i - 1].scale_exp + 1)
      runs.back().second = terms[i].scale_exp;
    else
      runs.emplace_back(terms[i].scale_exp, terms[i].scale_exp);
  }
  return runs;
}

}  // namespace

TwoAdicSymbol::TwoAdicSymbol(std::vector<TwoAdicTerm> terms,
                             std::vector<int> compartment_oddities) {
  std::sort(terms.begin(), terms.end(),
            [](const TwoAdicTerm& a, const TwoAdicTerm& b) { return a.scale_exp < b.scale_exp; });
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    if (i > 0 && terms[i - 1].scale_exp == t.scale_exp)
      throw std::domain_error("duplicate scale 2^" + std::to_string(t.scale_exp));
    if (t.dim < 1) throw std::domain_error("trivial term in symbol: " + describe_term(t));
    if (t.type == Type::II && t.dim % 2 != 0)
      throw std::domain_error("illegal type II term: " + describe_term(t));
  }
  terms_ = std::move(terms);

  // compartments are forced by the (scale, type) profile
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].type != Type::I) continue;
    if (!comps_.empty() && comps_.back().last == i - 1 &&
        terms_[i - 1].type == Type::I &&
        terms_[i - 1].scale_exp == terms_[i].scale_exp - 1) {
      comps_.back().last = i;
    } else {
      comps_.push_back({i, i, 0});
    }
  }
  if (comps_.size() != compartment_oddities.size())
    throw std::domain_error("expected " + std::to_string(comps_.size()) +
                            " compartment oddities, got " +
                            std::to_string(compartment_oddities.size()));
  for (std::size_t c = 0; c < comps_.size(); ++c) {
    comps_[c].oddity = mod8(compartment_oddities[c]);
    std::vector<std::pair<int, Sign>> members;
    for (std::size_t i = comps_[c].first; i <= comps_[c].last; ++i)
      members.emplace_back(terms_[i].dim, terms_[i].sign);
    if (!compartment_assignment_exists(members, comps_[c].oddity))
      throw std::domain_error("no subscript assignment for compartment at scale 2^" +
                              std::to_string(terms_[comps_[c].first].scale_exp) +
                              " with oddity " + std::to_string(comps_[c].oddity));
  }
}

const TwoAdicTerm* TwoAdicSymbol::term_at(int scale_exp) const {
  for (const auto& t : terms_)
    if (t.scale_exp == scale_exp) return &t;
  return nullptr;
}

const Compartment* TwoAdicSymbol::compartment_at(int scale_exp) const {
  for (const auto& c : comps_)
    if (terms_[c.first].scale_exp <= scale_exp && scale_exp <= terms_[c.last].scale_exp)
      return &c;
  return nullptr;
}

int TwoAdicSymbol::compartment_dim(const Compartment& c) const {
  int n = 0;
  for (std::size_t i = c.first; i <= c.last; ++i) n += terms_[i].dim;
  return n;
}

JordanSymbol fine_to_jordan(const FineSymbol& f) {
  f.validate();
  std::map<int, JordanConstituent> by_scale;
  for (const auto& t : f.terms) {
    auto& c = by_scale.try_emplace(t.scale_exp,
                                   JordanConstituent{t.scale_exp, 0, Type::II, Sign::plus, 0})
                  .first->second;
    c.dim += t.dim();
    c.sign = c.sign * t.sign();
    if (t.kind == FineTerm::Kind::odd1) {
      c.type = Type::I;
      c.oddity = mod8(c.oddity + t.oddity);
    }
  }
  JordanSymbol j;
  for (auto& [e, c] : by_scale) j.push_back(c);
  return j;
}

TwoAdicSymbol jordan_to_2adic(const JordanSymbol& j) {
  std::vector<TwoAdicTerm> terms;
  std::vector<int> oddities;
  JordanSymbol sorted = j;
  std::sort(sorted.begin(), sorted.end(),
            [](const JordanConstituent& a, const JordanConstituent& b) {
              return a.scale_exp < b.scale_exp;
            });
  int prev_type_one_scale = 0;
  bool in_compartment = false;
  for (const auto& c : sorted) {
    if (!is_legal_term(c))
      throw std::domain_error("illegal constituent at scale 2^" + std::to_string(c.scale_exp));
    if (c.dim == 0) continue;
    terms.push_back({c.scale_exp, c.dim, c.type, c.sign});
    if (c.type == Type::I) {
      if (in_compartment && c.scale_exp == prev_type_one_scale + 1)
        oddities.back() = mod8(oddities.back() + c.oddity);
      else
        oddities.push_back(mod8(c.oddity));
      in_compartment = true;
      prev_type_one_scale = c.scale_exp;
    } else {
      in_compartment = false;
    }
  }
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

std::optional<std::vector<int>> compartment_assignment(
    std::span<const std::pair<int, Sign>> dims_and_signs, int oddity) {
  for (const auto& [n, s] : dims_and_signs)
    if (n < 1) throw std::invalid_argument("compartment member of dimension < 1");
  const int target = mod8(oddity);

  // subset-sum over mod 8, witness recovered by backtracking
  const std::size_t k = dims_and_signs.size();
  std::vector<std::vector<int>> sets(k);
  for (std::size_t i = 0; i < k; ++i)
    sets[i] = legal_oddities(dims_and_signs[i].first, dims_and_signs[i].second);

  std::vector<std::array<bool, 8>> reachable(k + 1, std::array<bool, 8>{});
  reachable[0][0] = true;
  for (std::size_t i = 0; i < k; ++i)
    for (int r = 0; r < 8; ++r)
      if (reachable[i][r])
        for (int t : sets[i]) reachable[i + 1][mod8(r + t)] = true;
  if (!reachable[k][target]) return std::nullopt;

  std::vector<int> witness(k);
  int need = target;
  for (std::size_t i = k; i-- > 0;) {
    for (int t : sets[i]) {
      if (reachable[i][mod8(need - t)]) {
        witness[i] = t;
        need = mod8(need - t);
        break;
      }
    }
  }
  return witness;
}

bool compartment_assignment_exists(std::span<const std::pair<int, Sign>> dims_and_signs,
                                   int oddity) {
  return compartment_assignment(dims_and_signs, oddity).has_value();
}

TwoAdicSymbol direct_sum(const TwoAdicSymbol& a, const TwoAdicSymbol& b) {
  // merge per scale: dims add, signs multiply, II + II = II and II + t = t
  std::map<int, TwoAdicTerm> merged;
  for (const auto* s : {&a, &b})
    for (const auto& t : s->terms()) {
      auto& m = merged.try_emplace(t.scale_exp, TwoAdicTerm{t.scale_exp, 0, Type::II, Sign::plus})
                    .first->second;
      m.dim += t.dim;
      m.sign = m.sign * t.sign;
      if (t.type == Type::I) m.type = Type::I;
    }
  std::vector<TwoAdicTerm> terms;
  for (auto& [e, t] : merged) terms.push_back(t);

  // type I scales of each summand stay type I in the sum, so every
  // compartment of a summand lands inside exactly one compartment of the
  // sum and the fused oddities just add up
  const auto runs = compartment_runs(terms);
  std::vector<int> oddities(runs.size(), 0);
  for (const auto* s : {&a, &b})
    for (const auto& c : s->compartments()) {
      const int lo = s->terms()[c.first].scale_exp;
      for (std::size_t r = 0; r < runs.size(); ++r)
        if (runs[r].first <= lo && lo <= runs[r].second) {
          oddities[r] = mod8(oddities[r] + c.oddity);
          break;
        }
    }
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

TwoAdicSymbol dual(const TwoAdicSymbol& s) {
  std::vector<TwoAdicTerm> terms(s.terms().begin(), s.terms().end());
  for (auto& t : terms) t.scale_exp = -t.scale_exp;
  std::vector<int> oddities(s.compartments().size());
  for (std::size_t c = 0; c < oddities.size(); ++c)
    oddities[c] = s.compartments()[s.compartments().size() - 1 - c].oddity;
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

TwoAdicSymbol scale_by_two(const TwoAdicSymbol& s, int k) {
  std::vector<TwoAdicTerm> terms(s.terms().begin(), s.terms().end());
  for (auto& t : terms) t.scale_exp += k;
  std::vector<int> oddities;
  for (const auto& c : s.compartments()) oddities.push_back(c.oddity);
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

FineSymbol rescale_by_unit(const FineSymbol& f, Unit8 u) {
  FineSymbol out = f;
  for (auto& t : out.terms)
    if (t.kind == FineTerm::Kind::odd1)
      t.oddity = (Unit8(t.oddity) * u).value();
  return out;
}

TotalInvariants total_invariants(const FineSymbol& f) {
  f.validate();
  TotalInvariants inv;
  Unit8 det_unit(1);
  for (const auto& t : f.terms) {
    inv.total_dim += t.dim();
    inv.det_val += t.scale_exp * t.dim();
    const bool odd_scale = ((t.scale_exp % 2) + 2) % 2 == 1;
    if (t.kind == FineTerm::Kind::odd1) {
      det_unit = det_unit * Unit8(t.oddity);
      int o = t.oddity;
      // 2^e * t is an antisquare iff e is odd and legendre(t) = -
      if (odd_scale && legendre2(Unit8(t.oddity)) == Sign::minus) o += 4;
      inv.total_oddity = mod8(inv.total_oddity + o);
    } else {
      det_unit = det_unit * Unit8(t.even_sign == Sign::plus ? 7 : 3);
      // rationalized even block contributes oddity 0, except 2^odd scaled
      // minus blocks where one diagonal entry becomes an antisquare
      if (odd_scale && t.even_sign == Sign::minus)
        inv.total_oddity = mod8(inv.total_oddity + 4);
    }
  }
  inv.det_unit = det_unit;
  return inv;
}

}  // namespace twoadic
