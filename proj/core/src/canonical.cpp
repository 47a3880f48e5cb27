#include "twoadic/canonical.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "twoadic/decompose.hpp"

namespace twoadic {

namespace {

// interaction edges between occupied scales: adjacent or jumping a trivial scale
std::vector<std::pair<int, int>> interaction_edges(const TwoAdicSymbol& s) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& t : s.terms())
    for (int j : {t.scale_exp + 1, t.scale_exp + 2})
      if (can_walk_2adic(s, t.scale_exp, j)) edges.emplace_back(t.scale_exp, j);
  return edges;
}

std::vector<int> path_between(const std::vector<std::pair<int, int>>& edges, int from, int to) {
  std::map<int, std::vector<int>> adj;
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<int, int> parent;
  parent[from] = from;
  std::deque<int> queue{from};
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (v == to) break;
    for (int w : adj[v])
      if (!parent.count(w)) {
        parent[w] = v;
        queue.push_back(w);
      }
  }
  std::vector<int> path{to};
  while (path.back() != from) path.push_back(parent.at(path.back()));
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

SignwayPartition signways(const TwoAdicSymbol& s) {
  std::map<int, int> root;  // union-find over occupied scales
  for (const auto& t : s.terms()) root[t.scale_exp] = t.scale_exp;
  auto find = [&](int v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (auto [a, b] : interaction_edges(s)) root[find(a)] = find(b);

  std::map<int, std::vector<int>> classes;
  for (const auto& t : s.terms()) classes[find(t.scale_exp)].push_back(t.scale_exp);
  SignwayPartition out;
  for (auto& [r, scales] : classes) {
    std::sort(scales.begin(), scales.end());
    out.push_back(std::move(scales));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

TwoAdicSymbol canonical_form(const TwoAdicSymbol& s) {
  const auto edges = interaction_edges(s);
  TwoAdicSymbol cur = s;
  for (const auto& way : signways(s)) {
    // target: all + except the head, which carries the signway's sign product
    Sign product = Sign::plus;
    for (int e : way) product = product * s.term_at(e)->sign;
    std::vector<int> flips;
    for (int e : way) {
      const Sign target = (e == way.front()) ? product : Sign::plus;
      if (cur.term_at(e)->sign != target) flips.push_back(e);
    }
    // signs move in pairs; realize each pair as deltas along a path
    for (std::size_t p = 0; p + 1 < flips.size(); p += 2) {
      const auto path = path_between(edges, flips[p], flips[p + 1]);
      for (std::size_t v = 0; v + 1 < path.size(); ++v)
        cur = delta(cur, {std::min(path[v], path[v + 1]), std::max(path[v], path[v + 1])});
    }
    for (int e : way) {
      const Sign target = (e == way.front()) ? product : Sign::plus;
      if (cur.term_at(e)->sign != target)
        throw std::logic_error("canonicalization failed to reach the target signs");
    }
  }
  return cur;
}

bool isometric_symbols(const TwoAdicSymbol& a, const TwoAdicSymbol& b) {
  return canonical_form(a) == canonical_form(b);
}

InvariantVector invariant_vector(const TwoAdicSymbol& s) {
  InvariantVector iv;
  for (const auto& t : s.terms()) iv.scales.push_back({t.scale_exp, t.dim, t.type});

  for (const auto& c : s.compartments()) {
    InvariantVector::CompartmentEntry entry;
    int bump = 0;
    for (std::size_t i = c.first; i <= c.last; ++i) {
      entry.scale_exps.push_back(s.terms()[i].scale_exp);
      const std::size_t position = i - c.first + 1;  // 1-based, in scale order
      if (position % 2 == 1 && s.terms()[i].sign == Sign::minus) ++bump;
    }
    // every later minus sign counts once, in the virtual (k+1)st position
    const std::size_t k = c.last - c.first + 1;
    if ((k + 1) % 2 == 1)
      for (std::size_t i = c.last + 1; i < s.terms().size(); ++i)
        if (s.terms()[i].sign == Sign::minus) ++bump;
    entry.adjusted_oddity = mod8(c.oddity + 4 * bump);
    iv.compartments.push_back(std::move(entry));
  }

  for (const auto& way : signways(s)) {
    Sign product = Sign::plus;
    for (int e : way) product = product * s.term_at(e)->sign;
    iv.signway_signs.push_back({way, product});
  }
  return iv;
}

bool isometric_grams(const GramMatrix& a, const GramMatrix& b) {
  return isometric_symbols(symbol_of(a), symbol_of(b));
}

}  // namespace twoadic
