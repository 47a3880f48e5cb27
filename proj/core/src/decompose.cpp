#include "twoadic/decompose.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace twoadic {

namespace {

struct Pivot {
  bool diagonal = false;
  int i = 0, j = 0;
};

// entry of minimal valuation; diagonal preferred, then lowest row, lowest column
Pivot find_pivot(const std::vector<std::vector<Rational>>& m) {
  const int n = static_cast<int>(m.size());
  std::optional<int> min_val;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (m[i][j] != 0) {
        const int v = val2(m[i][j]);
        if (!min_val || v < *min_val) min_val = v;
      }
  if (!min_val) throw DegenerateFormError();
  for (int i = 0; i < n; ++i)
    if (m[i][i] != 0 && val2(m[i][i]) == *min_val) return {true, i, i};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != 0 && val2(m[i][j]) == *min_val) return {false, i, j};
  throw DegenerateFormError();  // unreachable for nonzero matrices
}

std::vector<std::vector<Rational>> drop_rows(const std::vector<std::vector<Rational>>& m,
                                             int i, int j) {
  const int n = static_cast<int>(m.size());
  std::vector<int> keep;
  for (int r = 0; r < n; ++r)
    if (r != i && r != j) keep.push_back(r);
  std::vector<std::vector<Rational>> out(keep.size(), std::vector<Rational>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b) out[a][b] = m[keep[a]][keep[b]];
  return out;
}

}  // namespace

std::vector<ScaledBlock> jordan_split(const GramMatrix& g) {
  if (g.is_degenerate()) throw DegenerateFormError();

  std::vector<std::vector<Rational>> m(g.dim(), std::vector<Rational>(g.dim()));
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) m[i][j] = g.at(i, j);

  std::vector<ScaledBlock> blocks;
  while (!m.empty()) {
    const int n = static_cast<int>(m.size());
    const Pivot p = find_pivot(m);
    if (p.diagonal) {
      const Rational d = m[p.i][p.i];
      const int e = val2(d);
      GramMatrix block(1);
      block.set(0, 0, d / pow2(e));
      blocks.push_back({e, block});
      // project the other basis vectors off the pivot's span
      auto next = drop_rows(m, p.i, p.i);
      std::vector<Rational> coeff;
      for (int w = 0; w < n; ++w)
        if (w != p.i) coeff.push_back(m[w][p.i] / d);
      std::size_t a = 0;
      for (int w = 0; w < n; ++w) {
        if (w == p.i) continue;
        std::size_t b = 0;
        for (int x = 0; x < n; ++x) {
          if (x == p.i) continue;
          next[a][b] -= coeff[a] * m[p.i][x];
          ++b;
        }
        ++a;
      }
      m = std::move(next);
    } else {
      const int i = p.i, j = p.j;
      const int e = val2(m[i][j]);
      const Rational det = m[i][i] * m[j][j] - m[i][j] * m[i][j];
      GramMatrix block(2);
      block.set(0, 0, m[i][i] / pow2(e));
      block.set(0, 1, m[i][j] / pow2(e));
      block.set(1, 1, m[j][j] / pow2(e));
      blocks.push_back({e, block});
      // solve [g_ii g_ij; g_ij g_jj] (alpha, beta)^T = (g_iw, g_jw)^T per vector
      auto next = drop_rows(m, i, j);
      std::vector<Rational> alpha, beta;
      for (int w = 0; w < n; ++w) {
        if (w == i || w == j) continue;
        alpha.push_back((m[i][w] * m[j][j] - m[j][w] * m[i][j]) / det);
        beta.push_back((m[i][i] * m[j][w] - m[i][j] * m[i][w]) / det);
      }
      std::size_t a = 0;
      for (int w = 0; w < n; ++w) {
        if (w == i || w == j) continue;
        std::size_t b = 0;
        for (int x = 0; x < n; ++x) {
          if (x == i || x == j) continue;
          next[a][b] -= alpha[a] * m[i][x] + beta[a] * m[j][x];
          ++b;
        }
        ++a;
      }
      m = std::move(next);
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const ScaledBlock& a, const ScaledBlock& b) {
                     return a.scale_exp < b.scale_exp;
                   });
  return blocks;
}

JordanConstituent classify_unimodular_block(const GramMatrix& block) {
  if (block.dim() == 1) {
    const Rational& u = block.at(0, 0);
    if (u == 0 || val2(u) != 0)
      throw std::domain_error("block is not unimodular");
    const Unit8 t = unit_part_mod8(u);
    return {0, 1, Type::I, legendre2(t), t.value()};
  }
  if (block.dim() == 2) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j)
        if (block.at(i, j) != 0 && val2(block.at(i, j)) < 0)
          throw std::domain_error("block is not unimodular");
      if (block.at(i, i) != 0 && val2(block.at(i, i)) < 1)
        throw std::domain_error("block is not even");
    }
    const Rational det = block.determinant();
    if (det == 0 || val2(det) != 0)
      throw std::domain_error("block is not unimodular");
    return {0, 2, Type::II, legendre2(unit_part_mod8(det)), 0};
  }
  throw std::domain_error("block size must be 1 or 2");
}

std::vector<Unit8> choose_fine_units(int n, Sign sign, int oddity) {
  if (n < 1) throw std::domain_error("illegal symbol");
  const int target = mod8(oddity);
  // lexicographically smallest multiset in the order 1 < 7 < 3 < 5
  for (int c1 = n; c1 >= 0; --c1)
    for (int c7 = n - c1; c7 >= 0; --c7)
      for (int c3 = n - c1 - c7; c3 >= 0; --c3) {
        const int c5 = n - c1 - c7 - c3;
        if (mod8(c1 + 7LL * c7 + 3LL * c3 + 5LL * c5) != target) continue;
        const Sign s = (c3 + c5) % 2 == 0 ? Sign::plus : Sign::minus;
        if (s != sign) continue;
        std::vector<Unit8> units;
        units.insert(units.end(), c1, Unit8(1));
        units.insert(units.end(), c7, Unit8(7));
        units.insert(units.end(), c3, Unit8(3));
        units.insert(units.end(), c5, Unit8(5));
        return units;
      }
  throw std::domain_error("illegal symbol");
}

FineSymbol fine_symbol_of(const GramMatrix& g) {
  struct ScaleData {
    std::vector<int> odd_subscripts;
    std::vector<Sign> even_signs;
  };
  std::map<int, ScaleData> scales;
  for (const auto& b : jordan_split(g)) {
    const JordanConstituent c = classify_unimodular_block(b.block);
    if (c.type == Type::I)
      scales[b.scale_exp].odd_subscripts.push_back(c.oddity);
    else
      scales[b.scale_exp].even_signs.push_back(c.sign);
  }

  FineSymbol f;
  for (const auto& [e, data] : scales) {
    if (!data.odd_subscripts.empty() && !data.even_signs.empty()) {
      // mixed scale: odd unimodular after rescaling, so rewrite the whole
      // scale as odd1 terms with the same dimension, sign and oddity
      int dim = static_cast<int>(data.odd_subscripts.size()) +
                2 * static_cast<int>(data.even_signs.size());
      Sign sign = Sign::plus;
      int oddity = 0;
      for (int t : data.odd_subscripts) {
        sign = sign * legendre2(Unit8(t));
        oddity = mod8(oddity + t);
      }
      for (Sign s : data.even_signs) sign = sign * s;
      for (Unit8 t : choose_fine_units(dim, sign, oddity))
        f.terms.push_back(FineTerm::odd(e, t));
    } else {
      for (int t : data.odd_subscripts) f.terms.push_back(FineTerm::odd(e, Unit8(t)));
      for (Sign s : data.even_signs) f.terms.push_back(FineTerm::even(e, s));
    }
  }
  return f.normalized();
}

GramMatrix gram_of(const FineSymbol& f) {
  if (f.empty()) throw std::invalid_argument("empty fine symbol has no Gram matrix");
  f.validate();
  const FineSymbol norm = f.normalized();
  std::optional<GramMatrix> g;
  for (const auto& t : norm.terms) {
    GramMatrix block(t.dim());
    const Rational q = pow2(t.scale_exp);
    if (t.kind == FineTerm::Kind::odd1) {
      block.set(0, 0, q * t.oddity);
    } else if (t.even_sign == Sign::plus) {
      block.set(0, 1, q);
    } else {
      block.set(0, 0, q * 2);
      block.set(0, 1, q);
      block.set(1, 1, q * 2);
    }
    g = g ? g->direct_sum(block) : block;
  }
  return *g;
}

FineSymbol fine_refinement(const TwoAdicSymbol& s) {
  FineSymbol f;
  for (const auto& t : s.terms()) {
    if (t.type != Type::II) continue;
    for (int i = 0; i < t.dim / 2 - 1; ++i)
      f.terms.push_back(FineTerm::even(t.scale_exp, Sign::plus));
    f.terms.push_back(FineTerm::even(t.scale_exp, t.sign));
  }
  for (const auto& c : s.compartments()) {
    std::vector<std::pair<int, Sign>> members;
    for (std::size_t i = c.first; i <= c.last; ++i)
      members.emplace_back(s.terms()[i].dim, s.terms()[i].sign);
    const auto witness = compartment_assignment(members, c.oddity);
    if (!witness) throw std::domain_error("compartment admits no subscript assignment");
    for (std::size_t i = c.first; i <= c.last; ++i) {
      const auto& term = s.terms()[i];
      for (Unit8 t : choose_fine_units(term.dim, term.sign, (*witness)[i - c.first]))
        f.terms.push_back(FineTerm::odd(term.scale_exp, t));
    }
  }
  return f.normalized();
}

TwoAdicSymbol symbol_of(const GramMatrix& g) {
  return jordan_to_2adic(fine_to_jordan(fine_symbol_of(g)));
}

}  // namespace twoadic
