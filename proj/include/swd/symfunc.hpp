#pragma once

#include <map>
#include <optional>

#include <gmpxx.h>

#include "swd/partition.hpp"

namespace swd {

/// A finitely supported integer combination of Schur functions, truncated at
/// total degree max_degree and at max_length variables (nullopt: unbounded).
///
/// Terms outside the truncation window are dropped on insertion; zero
/// coefficients are never stored. Two vectors compare equal only if their
/// windows agree as well as their terms.
class SchurVector {
public:
  using Terms = std::map<Partition, mpz_class>;

  explicit SchurVector(int max_degree, std::optional<int> max_length = std::nullopt);

  /// The single term s_lambda (or zero, if lambda lies outside the window).
  static SchurVector basis(const Partition& lambda, int max_degree,
                           std::optional<int> max_length = std::nullopt);

  int max_degree() const { return max_degree_; }
  std::optional<int> max_length() const { return max_length_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  bool admits(const Partition& lambda) const;
  mpz_class coeff(const Partition& lambda) const;
  void add(const Partition& lambda, const mpz_class& c);

  /// Same terms restricted to a (not larger) window.
  SchurVector truncated(int max_degree, std::optional<int> max_length) const;

  SchurVector& operator+=(const SchurVector& other);
  SchurVector& operator-=(const SchurVector& other);
  SchurVector& operator*=(const mpz_class& scalar);

  friend bool operator==(const SchurVector&, const SchurVector&) = default;

private:
  int max_degree_;
  std::optional<int> max_length_;
  Terms terms_;
};

SchurVector operator+(SchurVector a, const SchurVector& b);
SchurVector operator-(SchurVector a, const SchurVector& b);

/// h_m * v, expanded by the Pieri rule.
SchurVector pieri(int m, const SchurVector& v);

/// Littlewood-Richardson coefficients c^nu_{lambda,mu} for all nu, computed by
/// enumerating LR tableaux of content mu on the skew shapes nu/lambda. Shapes
/// longer than max_length are pruned.
std::map<Partition, mpz_class> lr_expand(const Partition& lambda, const Partition& mu,
                                         std::optional<int> max_length = std::nullopt);

/// a * b in the Schur basis; the result window is the intersection of both.
SchurVector lr_multiply(const SchurVector& a, const SchurVector& b);

/// Restriction from m to m - 1 variables: s_lambda -> sum over horizontal
/// strips removed from lambda. The length bound drops by one.
SchurVector branch_remove_variable(const SchurVector& v);

/// sum_lambda coeff(lambda) * s_lambda(1^N).
mpz_class principal_specialize(const SchurVector& v, int N);

} // namespace swd
