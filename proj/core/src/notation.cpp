#include "twoadic/notation.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <json.hpp>

namespace twoadic {

namespace {

int signed_oddity(int v) { return v <= 4 ? v : v - 8; }

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }
  char take() { return text[pos++]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw ParseError(at, msg);
  }
};

bool digit(char c) { return c >= '0' && c <= '9'; }

mpz_class read_digits(Cursor& cur) {
  if (!digit(cur.peek())) cur.fail("expected a number");
  std::string s;
  while (digit(cur.peek())) s.push_back(cur.take());
  return mpz_class(s, 10);  // base fixed: "010" must not read as octal
}

long read_int(Cursor& cur) {
  bool neg = false;
  if (cur.peek() == '-') {
    neg = true;
    cur.take();
  } else if (cur.peek() == '+') {
    cur.take();
  }
  const mpz_class v = read_digits(cur);
  if (!v.fits_slong_p()) cur.fail("number out of range");
  return neg ? -v.get_si() : v.get_si();
}

// "8" or "1/8"; must be a power of two
int read_scale(Cursor& cur) {
  const std::size_t at = cur.pos;
  const mpz_class first = read_digits(cur);
  mpz_class value = first;
  bool reciprocal = false;
  if (cur.peek() == '/') {
    cur.take();
    if (first != 1) cur.fail_at(at, "reciprocal scale must be written 1/q");
    value = read_digits(cur);
    reciprocal = true;
  }
  if (value == 0 || mpz_popcount(value.get_mpz_t()) != 1)
    cur.fail_at(at, "scale is not a power of two");
  const int e = static_cast<int>(mpz_scan1(value.get_mpz_t(), 0));
  return reciprocal ? -e : e;
}

struct RawTerm {
  std::size_t pos = 0;
  int scale_exp = 0;
  Sign sign = Sign::plus;
  int dim = 1;
};

std::string spell_term(const RawTerm& t, const std::string& sub) {
  std::string s = scale_string(t.scale_exp) + "^";
  if (t.sign == Sign::minus) s += '-';
  s += std::to_string(t.dim);
  if (!sub.empty()) s += "_" + sub;
  return s;
}

// scale '^' [sign] [dim] -- the part shared by bare and bracketed terms
RawTerm read_term_core(Cursor& cur) {
  RawTerm t;
  t.pos = cur.pos;
  t.scale_exp = read_scale(cur);
  if (cur.peek() != '^') cur.fail("expected '^'");
  cur.take();
  bool have_any = false;
  if (cur.peek() == '+' || cur.peek() == '-') {
    t.sign = cur.take() == '-' ? Sign::minus : Sign::plus;
    have_any = true;
  }
  if (digit(cur.peek())) {
    const std::size_t before = cur.pos;
    const mpz_class d = read_digits(cur);
    if (cur.peek() == '^' || cur.peek() == '/') {
      // the digits start the next term's scale, as in "[1^+2^-]_0";
      // this term's dimension is the omitted 1
      cur.pos = before;
    } else {
      if (!d.fits_sint_p()) cur.fail("dimension out of range");
      t.dim = static_cast<int>(d.get_si());
      have_any = true;
    }
  }
  if (!have_any) cur.fail("expected a sign or dimension after '^'");
  return t;
}

struct BareTerm {
  RawTerm core;
  bool type_two = false;
  int oddity = 0;
};

struct BracketGroup {
  std::size_t pos = 0;
  std::vector<RawTerm> members;
  int oddity = 0;
};

}  // namespace

TwoAdicSymbol parse_symbol(std::string_view text) {
  Cursor cur{text};
  std::vector<BareTerm> bare;
  std::vector<BracketGroup> groups;

  cur.skip_ws();
  while (!cur.done()) {
    if (cur.peek() == '[') {
      BracketGroup g;
      g.pos = cur.pos;
      cur.take();
      cur.skip_ws();
      while (cur.peek() != ']') {
        if (cur.done()) cur.fail("unterminated compartment");
        RawTerm t = read_term_core(cur);
        if (cur.peek() == '_')
          cur.fail("bracketed terms carry no individual subscript");
        if (t.dim < 1) cur.fail_at(t.pos, "trivial term in compartment");
        g.members.push_back(t);
        cur.skip_ws();
      }
      cur.take();
      if (cur.peek() != '_') cur.fail("expected '_' with the compartment oddity");
      cur.take();
      g.oddity = mod8(read_int(cur));
      groups.push_back(std::move(g));
    } else {
      BareTerm t;
      t.core = read_term_core(cur);
      if (cur.peek() != '_') cur.fail("missing subscript");
      cur.take();
      if (cur.peek() == 'I') {
        if (cur.take() != 'I' || cur.take() != 'I') cur.fail("expected 'II'");
        t.type_two = true;
      } else {
        t.oddity = mod8(read_int(cur));
      }
      const JordanConstituent check{t.core.scale_exp, t.core.dim,
                                    t.type_two ? Type::II : Type::I, t.core.sign,
                                    t.oddity};
      if (!is_legal_term(check))
        cur.fail_at(t.core.pos,
                    "illegal term " + spell_term(t.core, t.type_two
                                                             ? "II"
                                                             : std::to_string(signed_oddity(t.oddity))));
      bare.push_back(t);
    }
    cur.skip_ws();
  }

  // bracketed scales must be consecutive powers of two
  for (auto& g : groups) {
    std::sort(g.members.begin(), g.members.end(),
              [](const RawTerm& a, const RawTerm& b) { return a.scale_exp < b.scale_exp; });
    for (std::size_t i = 1; i < g.members.size(); ++i)
      if (g.members[i].scale_exp != g.members[i - 1].scale_exp + 1)
        cur.fail_at(g.pos, "compartment scales are not consecutive");
  }

  // assemble terms, tracking the oddity contribution of each type I scale
  struct Entry {
    TwoAdicTerm term;
    std::size_t pos;
    int oddity = 0;  // bare type I or a group's fused value (on its lowest scale)
  };
  std::vector<Entry> entries;
  for (const auto& t : bare) {
    if (t.core.dim == 0) continue;  // trivial terms never reach the symbol
    entries.push_back({{t.core.scale_exp, t.core.dim, t.type_two ? Type::II : Type::I,
                        t.core.sign},
                       t.core.pos,
                       t.type_two ? 0 : t.oddity});
  }
  for (const auto& g : groups)
    for (std::size_t i = 0; i < g.members.size(); ++i)
      entries.push_back({{g.members[i].scale_exp, g.members[i].dim, Type::I,
                          g.members[i].sign},
                         i == 0 ? g.pos : g.members[i].pos,
                         i == 0 ? g.oddity : 0});

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.term.scale_exp < b.term.scale_exp; });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].term.scale_exp == entries[i - 1].term.scale_exp)
      cur.fail_at(entries[i].pos,
                  "duplicate scale " + scale_string(entries[i].term.scale_exp));

  // fuse whatever ends up in one maximal type I run
  std::vector<TwoAdicTerm> terms;
  std::vector<int> oddities;
  std::vector<std::size_t> comp_pos;
  bool in_run = false;
  for (const auto& e : entries) {
    terms.push_back(e.term);
    if (e.term.type != Type::I) {
      in_run = false;
      continue;
    }
    const bool extends = in_run && terms.size() >= 2 &&
                         terms[terms.size() - 2].type == Type::I &&
                         terms[terms.size() - 2].scale_exp == e.term.scale_exp - 1;
    if (extends) {
      oddities.back() = mod8(oddities.back() + e.oddity);
    } else {
      oddities.push_back(mod8(e.oddity));
      comp_pos.push_back(e.pos);
    }
    in_run = true;
  }

  try {
    return TwoAdicSymbol(std::move(terms), std::move(oddities));
  } catch (const std::domain_error& err) {
    cur.fail_at(comp_pos.empty() ? 0 : comp_pos.front(), err.what());
  }
}

std::string print_symbol(const TwoAdicSymbol& s) {
  std::string out;
  auto emit = [&](const std::string& piece) {
    if (!out.empty()) out += ' ';
    out += piece;
  };
  auto term_text = [&](const TwoAdicTerm& t) {
    std::string piece = scale_string(t.scale_exp) + "^";
    if (t.sign == Sign::minus) piece += '-';
    piece += std::to_string(t.dim);
    return piece;
  };

  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    const auto& t = s.terms()[i];
    if (t.type == Type::II) {
      emit(term_text(t) + "_II");
      continue;
    }
    const Compartment* c = s.compartment_at(t.scale_exp);
    if (i != c->first) continue;  // whole compartment printed at its head
    if (c->first == c->last) {
      emit(term_text(t) + "_" + std::to_string(signed_oddity(c->oddity)));
    } else {
      std::string piece = "[";
      for (std::size_t m = c->first; m <= c->last; ++m) {
        if (m != c->first) piece += ' ';
        piece += term_text(s.terms()[m]);
      }
      piece += "]_" + std::to_string(signed_oddity(c->oddity));
      emit(piece);
    }
  }
  return out;
}

std::string to_records(const TwoAdicSymbol& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < s.terms().size(); ++i) {
    const auto& t = s.terms()[i];
    nlohmann::json rec;
    rec["scale_exp"] = t.scale_exp;
    rec["dim"] = t.dim;
    rec["type"] = t.type == Type::I ? "I" : "II";
    rec["sign"] = std::string(1, to_char(t.sign));
    if (t.type == Type::I) {
      const Compartment* c = s.compartment_at(t.scale_exp);
      rec["compartment_id"] = static_cast<int>(c - s.compartments().data());
      rec["compartment_oddity"] = c->oddity;
    } else {
      rec["compartment_id"] = nullptr;
      rec["compartment_oddity"] = nullptr;
    }
    arr.push_back(std::move(rec));
  }
  return arr.dump();
}

TwoAdicSymbol from_records(std::string_view json) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed records: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("records must be an array");
  std::vector<TwoAdicTerm> terms;
  std::map<int, int> oddity_by_compartment;
  for (const auto& rec : arr) {
    TwoAdicTerm t;
    t.scale_exp = rec.at("scale_exp").get<int>();
    t.dim = rec.at("dim").get<int>();
    const std::string type = rec.at("type").get<std::string>();
    if (type != "I" && type != "II") throw std::invalid_argument("type must be I or II");
    t.type = type == "I" ? Type::I : Type::II;
    const std::string sign = rec.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw std::invalid_argument("sign must be + or -");
    t.sign = sign == "+" ? Sign::plus : Sign::minus;
    if (t.type == Type::I)
      oddity_by_compartment[rec.at("compartment_id").get<int>()] =
          mod8(rec.at("compartment_oddity").get<int>());
    terms.push_back(t);
  }
  std::vector<int> oddities;
  for (const auto& [id, o] : oddity_by_compartment) oddities.push_back(o);
  return TwoAdicSymbol(std::move(terms), std::move(oddities));
}

}  // namespace twoadic
