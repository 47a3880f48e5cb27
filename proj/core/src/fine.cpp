#include "twoadic/fine.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace twoadic {

int FineSymbol::total_dim() const {
  int n = 0;
  for (const auto& t : terms) n += t.dim();
  return n;
}

void FineSymbol::validate() const {
  std::map<int, FineTerm::Kind> kind_at;
  for (const auto& t : terms) {
    if (t.kind == FineTerm::Kind::odd1 && t.oddity % 2 == 0)
      throw std::domain_error("odd1 term with even subscript");
    auto [it, inserted] = kind_at.emplace(t.scale_exp, t.kind);
    if (!inserted && it->second != t.kind)
      throw std::domain_error("scale mixes odd1 and even2 terms");
  }
}

FineSymbol FineSymbol::normalized() const {
  FineSymbol f = *this;
  std::sort(f.terms.begin(), f.terms.end(), [](const FineTerm& a, const FineTerm& b) {
    if (a.scale_exp != b.scale_exp) return a.scale_exp < b.scale_exp;
    if (a.kind != b.kind) return a.kind < b.kind;
    if (a.kind == FineTerm::Kind::odd1) return a.oddity < b.oddity;
    return a.even_sign == Sign::plus && b.even_sign == Sign::minus;
  });
  return f;
}

std::vector<std::vector<std::size_t>> fine_compartments(const FineSymbol& f) {
  f.validate();
  std::set<int> odd_scales;
  for (const auto& t : f.terms)
    if (t.kind == FineTerm::Kind::odd1) odd_scales.insert(t.scale_exp);

  // runs of consecutive occupied odd scales
  std::vector<std::pair<int, int>> runs;
  for (int e : odd_scales) {
    if (!runs.empty() && runs.back().second == e - 1)
      runs.back().second = e;
    else
      runs.emplace_back(e, e);
  }

  std::vector<std::vector<std::size_t>> groups(runs.size());
  for (std::size_t i = 0; i < f.terms.size(); ++i) {
    const auto& t = f.terms[i];
    if (t.kind != FineTerm::Kind::odd1) continue;
    for (std::size_t g = 0; g < runs.size(); ++g)
      if (runs[g].first <= t.scale_exp && t.scale_exp <= runs[g].second) {
        groups[g].push_back(i);
        break;
      }
  }
  return groups;
}

}  // namespace twoadic
