#include "twoadic/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "twoadic/decompose.hpp"

namespace twoadic {

namespace {

struct SplitMix {
  std::uint64_t state;
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

std::uint64_t reduce_mod(const mpz_class& z, int k) {
  return mpz_fdiv_ui(z.get_mpz_t(), 1ULL << k);
}

std::vector<std::uint64_t> reduce_matrix(const GramMatrix& g, int k) {
  std::vector<std::uint64_t> out;
  out.reserve(static_cast<std::size_t>(g.dim()) * g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) {
      const Rational& v = g.at(i, j);
      if (v.get_den() != 1)
        throw std::invalid_argument("oracle requires integer entries");
      out.push_back(reduce_mod(v.get_num(), k));
    }
  return out;
}

// all arithmetic runs in uint64; wraparound is harmless because only
// residues mod 2^k <= 2^64 are ever read off
struct Search {
  int n, k;
  std::vector<std::uint64_t> g, target;  // row-major mod 2^k
  std::vector<std::uint64_t> x;          // x[c * n + r]: column c being built
  std::vector<std::uint64_t> gx;         // gx[i * n + q] = (x_i^T g)_q, completed columns
  std::vector<std::vector<int>> order;   // branch order per bit level
  std::uint64_t nodes = 0, budget = 0;
  bool out_of_budget = false;
  int shard_index = 0, shard_count = 1;

  std::uint64_t mask(int bits) const { return bits >= 64 ? ~0ULL : (1ULL << bits) - 1; }

  bool congruent(std::uint64_t u, std::uint64_t v, int bits) const {
    return ((u - v) & mask(bits)) == 0;
  }

  std::uint64_t norm(int c) const {
    std::uint64_t s = 0;
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) s += x[c * n + p] * g[p * n + q] * x[c * n + q];
    return s;
  }

  std::uint64_t inner(int i, int c) const {
    std::uint64_t s = 0;
    for (int q = 0; q < n; ++q) s += gx[i * n + q] * x[c * n + q];
    return s;
  }

  // columns 0..c mod 2 must stay linearly independent (det will be odd)
  bool independent_mod2(int c) const {
    std::vector<std::uint64_t> rows;
    for (int i = 0; i <= c; ++i) {
      std::uint64_t bits = 0;
      for (int r = 0; r < n; ++r) bits |= (x[i * n + r] & 1) << r;
      for (std::uint64_t row : rows)
        if (std::uint64_t low = row & -row; bits & low) bits ^= row;
      if (bits == 0) return false;
      rows.push_back(bits);
    }
    return true;
  }

  bool extend_column(int c, int level) {
    if (level == k) {
      for (int q = 0; q < n; ++q) {
        std::uint64_t s = 0;
        for (int p = 0; p < n; ++p) s += x[c * n + p] * g[p * n + q];
        gx[c * n + q] = s;
      }
      if (c + 1 == n) return true;
      return extend_column(c + 1, 0);
    }
    for (int b : order[level]) {
      if (c == 0 && level == 0 && b % shard_count != shard_index) continue;
      if (++nodes > budget) {
        out_of_budget = true;
        return false;
      }
      for (int r = 0; r < n; ++r)
        x[c * n + r] |= static_cast<std::uint64_t>((b >> r) & 1) << level;

      // cross terms enter the norm one bit higher, so it prunes harder
      bool ok = congruent(norm(c), target[c * n + c], std::min(level + 2, k));
      for (int i = 0; ok && i < c; ++i)
        ok = congruent(inner(i, c), target[i * n + c], level + 1);
      if (ok && level == 0) ok = independent_mod2(c);

      if (ok && extend_column(c, level + 1)) return true;
      if (out_of_budget) return false;
      for (int r = 0; r < n; ++r)
        x[c * n + r] &= ~(static_cast<std::uint64_t>((b >> r) & 1) << level);
    }
    return false;
  }
};

// exact recheck of a found witness
bool verify_witness(const GramMatrix& a, const GramMatrix& b, int k,
                    const std::vector<std::uint64_t>& x, int n) {
  std::vector<mpz_class> xm(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    xm[i] = mpz_class(static_cast<unsigned long>(x[i]));
  const mpz_class modulus = mpz_class(1) << k;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      mpz_class s = 0;
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          s += xm[i * n + p] * a.at(p, q).get_num() * xm[j * n + q];
      if (((s - b.at(i, j).get_num()) % modulus) != 0) return false;
    }
  // det X odd, i.e. X invertible mod 2
  std::vector<std::uint64_t> rows;
  for (int c = 0; c < n; ++c) {
    std::uint64_t bits = 0;
    for (int r = 0; r < n; ++r) bits |= (x[c * n + r] & 1) << r;
    for (std::uint64_t row : rows)
      if (std::uint64_t low = row & -row; bits & low) bits ^= row;
    if (bits == 0) return false;
    rows.push_back(bits);
  }
  return true;
}

// congruent matrices have congruent determinants, so det b must equal
// u^2 det a mod 2^k for an odd u; squares of units are 1 mod 8
bool determinants_compatible(const GramMatrix& a, const GramMatrix& b, int k) {
  const Rational da = a.determinant(), db = b.determinant();
  const int va = da == 0 ? k : val2(da);
  const int vb = db == 0 ? k : val2(db);
  if (va >= k && vb >= k) return true;
  if (va != vb) return false;
  const int m = std::min(3, k - va);
  const mpz_class ua = mpz_class(da.get_num() >> va);
  const mpz_class ub = mpz_class(db.get_num() >> vb);
  return mpz_fdiv_ui(ua.get_mpz_t(), 1u << m) == mpz_fdiv_ui(ub.get_mpz_t(), 1u << m);
}

long det_long(const std::vector<long>& m, int n) {
  if (n == 1) return m[0];
  long det = 0;
  for (int c = 0; c < n; ++c) {
    std::vector<long> minor;
    for (int i = 1; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (j != c) minor.push_back(m[i * n + j]);
    const long cofactor = det_long(minor, n - 1);
    det += (c % 2 == 0 ? 1 : -1) * m[c] * cofactor;
  }
  return det;
}

}  // namespace

Verdict isometric_mod(const GramMatrix& a, const GramMatrix& b, int precision,
                      const OracleOptions& opts) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  if (precision < 1 || precision > 48) throw std::invalid_argument("precision out of range");
  if (opts.shard_count < 1 || opts.shard_index < 0 || opts.shard_index >= opts.shard_count)
    throw std::invalid_argument("bad shard");

  Search s;
  s.n = a.dim();
  s.k = precision;
  s.g = reduce_matrix(a, precision);
  s.target = reduce_matrix(b, precision);
  if (!determinants_compatible(a, b, precision)) return Verdict::distinct;
  s.x.assign(static_cast<std::size_t>(s.n) * s.n, 0);
  s.gx.assign(static_cast<std::size_t>(s.n) * s.n, 0);
  s.budget = opts.node_budget;
  s.shard_index = opts.shard_index;
  s.shard_count = opts.shard_count;

  const int branches = 1 << s.n;
  s.order.assign(precision, {});
  SplitMix rng{opts.seed * 0x9e3779b97f4a7c15ULL + 0x1234567};
  for (auto& level : s.order) {
    level.resize(branches);
    std::iota(level.begin(), level.end(), 0);
    if (opts.seed != 0)
      for (int i = branches - 1; i > 0; --i)
        std::swap(level[i], level[rng.below(i + 1)]);
  }

  if (s.extend_column(0, 0)) {
    if (!verify_witness(a, b, precision, s.x, s.n))
      throw std::logic_error("oracle produced a bad witness");
    return Verdict::isometric;
  }
  return s.out_of_budget ? Verdict::unknown : Verdict::distinct;
}

int default_precision(const GramMatrix& a, const GramMatrix& b) {
  const Rational da = a.determinant(), db = b.determinant();
  if (da == 0 || db == 0) throw DegenerateFormError();
  return std::max(val2(da), val2(db)) + 3;
}

GramMatrix random_lattice(int dim, int min_scale_exp, int max_scale_exp,
                          std::uint64_t seed) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  if (min_scale_exp > max_scale_exp) throw std::invalid_argument("empty scale range");
  SplitMix rng{seed ^ 0xd1b54a32d192ed03ULL};

  FineSymbol f;
  std::map<int, bool> committed_even;  // a scale never mixes odd and even terms
  const int total_scales = max_scale_exp - min_scale_exp + 1;
  int remaining = dim;
  // scales still able to take odd terms; must stay positive while any
  // dimension remains, or the generator could paint itself into a corner
  const auto odd_capable = [&] {
    int capable = total_scales - static_cast<int>(committed_even.size());
    for (const auto& [e, even] : committed_even) capable += even ? 0 : 1;
    return capable;
  };
  while (remaining > 0) {
    const int e = min_scale_exp + static_cast<int>(rng.below(total_scales));
    const auto it = committed_even.find(e);
    const bool fresh = it == committed_even.end();
    bool even = remaining >= 2 && rng.below(3) == 0;
    if (!fresh) even = it->second;
    if (even && remaining < 2) continue;
    // an odd remainder will need an odd-capable scale eventually
    if (even && remaining % 2 == 1 && odd_capable() - (fresh ? 1 : 0) == 0) {
      if (!fresh) continue;
      even = false;
    }
    committed_even[e] = even;
    if (even) {
      f.terms.push_back(FineTerm::even(e, rng.below(2) == 0 ? Sign::plus : Sign::minus));
      remaining -= 2;
    } else {
      static constexpr int units[4] = {1, 3, 5, 7};
      f.terms.push_back(FineTerm::odd(e, Unit8(units[rng.below(4)])));
      remaining -= 1;
    }
  }
  const GramMatrix g = gram_of(f);

  // random unimodular conjugator with small entries
  std::vector<long> u(static_cast<std::size_t>(dim) * dim);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    for (auto& v : u) v = static_cast<long>(rng.below(5)) - 2;
    const long det = det_long(u, dim);
    if (det == 1 || det == -1) return g.transformed_by(u);
  }
  return g;  // statistically unreachable
}

}  // namespace twoadic
