#pragma once

#include <vector>

#include "twoadic/padic.hpp"

namespace twoadic {

/// Raised by operations that require a nondegenerate form.
struct DegenerateFormError : std::domain_error {
  DegenerateFormError() : std::domain_error("degenerate form") {}
};

/// Symmetric matrix of exact rationals: the inner product matrix of a
/// lattice with respect to some basis.
class GramMatrix {
 public:
  explicit GramMatrix(int dim);

  static GramMatrix diagonal(const std::vector<Rational>& entries);
  /// Row-major entries; throws if not symmetric.
  static GramMatrix from_entries(int dim, const std::vector<Rational>& entries);

  int dim() const { return dim_; }
  const Rational& at(int i, int j) const { return a_[index(i, j)]; }
  /// Sets (i, j) and (j, i).
  void set(int i, int j, const Rational& v);

  Rational determinant() const;
  bool is_degenerate() const { return determinant() == 0; }

  GramMatrix direct_sum(const GramMatrix& other) const;
  GramMatrix scaled_by(const Rational& c) const;
  /// u^T G u for an integer matrix u given row-major.
  GramMatrix transformed_by(const std::vector<long>& u) const;

  friend bool operator==(const GramMatrix&, const GramMatrix&) = default;

 private:
  int index(int i, int j) const;

  int dim_;
  std::vector<Rational> a_;
};

}  // namespace twoadic
