#include "twoadic/gram.hpp"

namespace twoadic {

GramMatrix::GramMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be positive");
  a_.assign(static_cast<std::size_t>(dim) * dim, Rational(0));
}

int GramMatrix::index(int i, int j) const {
  if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
    throw std::out_of_range("matrix index");
  return i * dim_ + j;
}

void GramMatrix::set(int i, int j, const Rational& v) {
  a_[index(i, j)] = v;
  a_[index(j, i)] = v;
}

GramMatrix GramMatrix::diagonal(const std::vector<Rational>& entries) {
  GramMatrix g(static_cast<int>(entries.size()));
  for (int i = 0; i < g.dim_; ++i) g.set(i, i, entries[i]);
  return g;
}

GramMatrix GramMatrix::from_entries(int dim, const std::vector<Rational>& entries) {
  if (entries.size() != static_cast<std::size_t>(dim) * dim)
    throw std::invalid_argument("entry count does not match dimension");
  GramMatrix g(dim);
  g.a_ = entries;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      if (g.at(i, j) != g.at(j, i))
        throw std::invalid_argument("matrix is not symmetric");
  return g;
}

Rational GramMatrix::determinant() const {
  // plain Gaussian elimination; everything stays exact
  std::vector<Rational> m = a_;
  auto at = [&](int i, int j) -> Rational& { return m[i * dim_ + j]; };
  Rational det(1);
  for (int col = 0; col < dim_; ++col) {
    int pivot = -1;
    for (int row = col; row < dim_; ++row)
      if (at(row, col) != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = 0; j < dim_; ++j) std::swap(at(pivot, j), at(col, j));
      det = -det;
    }
    det *= at(col, col);
    for (int row = col + 1; row < dim_; ++row) {
      if (at(row, col) == 0) continue;
      const Rational f = at(row, col) / at(col, col);
      for (int j = col; j < dim_; ++j) at(row, j) -= f * at(col, j);
    }
  }
  return det;
}

GramMatrix GramMatrix::direct_sum(const GramMatrix& other) const {
  GramMatrix g(dim_ + other.dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) g.set(i, j, at(i, j));
  for (int i = 0; i < other.dim_; ++i)
    for (int j = 0; j < other.dim_; ++j)
      g.set(dim_ + i, dim_ + j, other.at(i, j));
  return g;
}

GramMatrix GramMatrix::scaled_by(const Rational& c) const {
  GramMatrix g(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) g.set(i, j, at(i, j) * c);
  return g;
}

GramMatrix GramMatrix::transformed_by(const std::vector<long>& u) const {
  if (u.size() != static_cast<std::size_t>(dim_) * dim_)
    throw std::invalid_argument("transform size does not match dimension");
  GramMatrix g(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = i; j < dim_; ++j) {
      Rational s(0);
      for (int p = 0; p < dim_; ++p) {
        if (u[p * dim_ + i] == 0) continue;
        for (int q = 0; q < dim_; ++q)
          s += Rational(u[p * dim_ + i]) * at(p, q) * Rational(u[q * dim_ + j]);
      }
      g.set(i, j, s);
    }
  return g;
}

}  // namespace twoadic
