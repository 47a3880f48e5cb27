#include "twoadic/moves.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <string>

namespace twoadic {

namespace {

[[noreturn]] void illegal_walk() { throw std::domain_error("illegal sign walk"); }

// shift an odd1 subscript, keeping it in {1,3,5,7}
void shift_subscript(FineTerm& t, int delta) { t.oddity = mod8(t.oddity + delta); }

void negate(FineTerm& t) {
  if (t.kind == FineTerm::Kind::even2)
    t.even_sign = -t.even_sign;
  else
    shift_subscript(t, 4);  // t + 4 negates the sign, keeps giver/receiver status
}

std::size_t group_of(const std::vector<std::vector<std::size_t>>& groups, std::size_t idx) {
  for (std::size_t g = 0; g < groups.size(); ++g)
    if (std::find(groups[g].begin(), groups[g].end(), idx) != groups[g].end()) return g;
  throw std::domain_error("term is not part of any compartment");
}

}  // namespace

FineSymbol fine_sign_walk(const FineSymbol& f, std::size_t a, std::size_t b, WalkCase c) {
  f.validate();
  if (a >= f.terms.size() || b >= f.terms.size() || a == b) illegal_walk();
  FineSymbol out = f;
  FineTerm& ta = out.terms[a];
  FineTerm& tb = out.terms[b];
  const int gap = std::abs(ta.scale_exp - tb.scale_exp);

  switch (c) {
    case WalkCase::same_scale:
      if (gap != 0) illegal_walk();
      negate(ta);
      negate(tb);
      break;
    case WalkCase::adjacent_mixed:
      if (gap != 1 || ta.kind == tb.kind) illegal_walk();
      negate(ta);
      negate(tb);
      break;
    case WalkCase::adjacent_odd: {
      if (gap != 1 || ta.kind != FineTerm::Kind::odd1 || tb.kind != FineTerm::Kind::odd1)
        illegal_walk();
      if (ta.giver() != tb.giver()) illegal_walk();
      // negate signs and trade giver/receiver status in one step
      const int d = ta.giver() ? 2 : -2;
      shift_subscript(ta, d);
      shift_subscript(tb, d);
      break;
    }
    case WalkCase::jump:
      if (gap != 2 || ta.kind != FineTerm::Kind::odd1 || tb.kind != FineTerm::Kind::odd1)
        illegal_walk();
      shift_subscript(ta, 4);
      shift_subscript(tb, 4);
      break;
  }
  return out;
}

FineSymbol giver_permute(const FineSymbol& f, std::size_t a, std::size_t b) {
  if (a >= f.terms.size() || b >= f.terms.size())
    throw std::domain_error("term index out of range");
  if (f.terms[a].kind != FineTerm::Kind::odd1 || f.terms[b].kind != FineTerm::Kind::odd1)
    throw std::domain_error("giver permutation needs one-dimensional terms");
  const auto groups = fine_compartments(f);
  if (group_of(groups, a) != group_of(groups, b))
    throw std::domain_error("terms are not in the same compartment");
  FineSymbol out = f;
  if (out.terms[a].giver() != out.terms[b].giver()) {
    // t -> -t keeps the sign and flips giver/receiver
    out.terms[a].oddity = mod8(-out.terms[a].oddity);
    out.terms[b].oddity = mod8(-out.terms[b].oddity);
  }
  return out;
}

FineSymbol giver_convert(const FineSymbol& f, const std::array<std::size_t, 4>& indices) {
  std::set<std::size_t> distinct(indices.begin(), indices.end());
  if (distinct.size() != 4) throw std::domain_error("need four distinct terms");
  const auto groups = fine_compartments(f);
  const std::size_t g0 = group_of(groups, indices[0]);
  for (std::size_t idx : indices) {
    if (idx >= f.terms.size() || f.terms[idx].kind != FineTerm::Kind::odd1)
      throw std::domain_error("giver conversion needs one-dimensional terms");
    if (group_of(groups, idx) != g0)
      throw std::domain_error("terms are not in the same compartment");
    if (f.terms[idx].giver() != f.terms[indices[0]].giver())
      throw std::domain_error("terms must be all givers or all receivers");
  }
  FineSymbol out = f;
  const int d = f.terms[indices[0]].giver() ? -2 : 2;  // keeps the sign
  for (std::size_t idx : indices) shift_subscript(out.terms[idx], d);
  return out;
}

JordanSymbol oddity_fuse(const JordanSymbol& j,
                         std::span<const std::pair<int, int>> new_oddities) {
  std::map<int, int> reassign;
  for (const auto& [e, t] : new_oddities)
    if (!reassign.emplace(e, mod8(t)).second)
      throw std::domain_error("duplicate scale in reassignment");

  JordanSymbol sorted = j;
  std::sort(sorted.begin(), sorted.end(),
            [](const JordanConstituent& a, const JordanConstituent& b) {
              return a.scale_exp < b.scale_exp;
            });

  // the reassigned scales must be exactly one maximal type I run
  std::set<int> member_scales;
  for (const auto& c : sorted)
    if (c.type == Type::I && c.dim > 0 && reassign.count(c.scale_exp))
      member_scales.insert(c.scale_exp);
  if (member_scales.size() != reassign.size())
    throw std::domain_error("reassigned scale is not a type I constituent");
  const int lo = *member_scales.begin();
  const int hi = *member_scales.rbegin();
  if (static_cast<int>(member_scales.size()) != hi - lo + 1)
    throw std::domain_error("reassigned scales do not form a compartment");
  for (const auto& c : sorted) {
    if (c.type != Type::I || c.dim == 0) continue;
    const bool inside = lo <= c.scale_exp && c.scale_exp <= hi;
    const bool touches = c.scale_exp == lo - 1 || c.scale_exp == hi + 1;
    if (inside && !reassign.count(c.scale_exp))
      throw std::domain_error("reassignment must cover the whole compartment");
    if (touches)
      throw std::domain_error("reassigned scales do not form a maximal compartment");
  }

  int old_sum = 0, new_sum = 0;
  JordanSymbol out = sorted;
  for (auto& c : out) {
    auto it = reassign.find(c.scale_exp);
    if (it == reassign.end() || c.type != Type::I) continue;
    old_sum = mod8(old_sum + c.oddity);
    new_sum = mod8(new_sum + it->second);
    c.oddity = it->second;
    if (!is_legal_term(c))
      throw std::domain_error("illegal term at scale 2^" + std::to_string(c.scale_exp));
  }
  if (old_sum != new_sum)
    throw std::domain_error("oddity fusion must preserve the compartment oddity");
  return out;
}

bool can_walk_2adic(const TwoAdicSymbol& s, int i, int j) {
  if (i > j) std::swap(i, j);
  const TwoAdicTerm* a = s.term_at(i);
  const TwoAdicTerm* b = s.term_at(j);
  if (!a || !b || i == j) return false;
  if (j - i == 1) {
    if (a->type != b->type) return true;
    if (a->type == Type::II) return false;
    // adjacent type I scales always share a compartment
    const Compartment* c = s.compartment_at(i);
    return s.compartment_dim(*c) > 2 || c->oddity == 2 || c->oddity == 6;
  }
  if (j - i == 2)
    return a->type == Type::I && b->type == Type::I && s.term_at(i + 1) == nullptr;
  return false;
}

TwoAdicSymbol delta(const TwoAdicSymbol& s, DeltaMove m) {
  if (m.i > m.j) std::swap(m.i, m.j);
  if (!can_walk_2adic(s, m.i, m.j))
    throw std::domain_error("no sign walk is possible between the terms of scales " +
                            scale_string(m.i) + " and " + scale_string(m.j));

  std::vector<TwoAdicTerm> terms(s.terms().begin(), s.terms().end());
  for (auto& t : terms)
    if (t.scale_exp == m.i || t.scale_exp == m.j) t.sign = -t.sign;

  // +4 once per compartment touching an affected type I term; when both
  // terms share a compartment the oddity still moves by 4, not 8
  std::vector<int> oddities;
  for (const auto& c : s.compartments()) oddities.push_back(c.oddity);
  std::set<std::size_t> involved;
  for (int e : {m.i, m.j}) {
    const TwoAdicTerm* t = s.term_at(e);
    if (t->type != Type::I) continue;
    const Compartment* c = s.compartment_at(e);
    involved.insert(static_cast<std::size_t>(c - s.compartments().data()));
  }
  for (std::size_t idx : involved) oddities[idx] = mod8(oddities[idx] + 4);
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

}  // namespace twoadic
