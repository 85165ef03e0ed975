#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace swd {

/// A Young diagram stored as its weakly decreasing positive row lengths.
///
/// Zero parts are stripped at construction, so two partitions are equal iff
/// their stored parts are equal. The ordering is graded reverse-lexicographic:
/// smaller size first, and within one size (3) < (2,1) < (1,1,1). Every sorted
/// container of partitions in the library therefore iterates degree by degree
/// in the same order as enumerate_partitions.
class Partition {
public:
  Partition() = default;

  /// Throws ConstraintViolation on negative or increasing parts.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  /// Row i (0-based); zero past the last row.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// "3,1,1"; the empty diagram prints as "".
  std::string to_string() const;
  /// Inverse of to_string. Whitespace around parts is tolerated.
  static Partition parse(std::string_view text);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// mu is contained in lambda, row by row.
bool contains(const Partition& mu, const Partition& lambda);

/// (n - |lambda|, lambda_1, lambda_2, ...). Requires lambda_1 + |lambda| <= n.
Partition tilde(const Partition& lambda, int n);

/// All mu with lambda_{i+1} <= mu_i <= lambda_i (lambda itself included),
/// largest first.
std::vector<Partition> remove_horizontal_strips(const Partition& lambda);

/// All lambda' containing lambda with lambda'/lambda a horizontal strip of m
/// boxes, in reverse-lexicographic order.
std::vector<Partition> add_horizontal_strip(const Partition& lambda, int m);

/// Number of standard Young tableaux of shape lambda (hook length formula).
mpz_class dim_symmetric_group_irrep(const Partition& lambda);

/// s_lambda(1^N): dimension of the gl_N Schur module. Zero when length > N.
mpz_class dim_schur_gl(const Partition& lambda, int N);

/// Partitions of d, optionally with at most max_length rows, reverse-lex.
std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length = std::nullopt);

/// All partitions of size 0..max_size in graded order.
std::vector<Partition> partitions_up_to(int max_size, std::optional<int> max_length = std::nullopt);

/// The transposed diagram.
Partition conjugate(const Partition& lambda);

mpz_class factorial(int n);
mpz_class binomial(long n, long k);

} // namespace swd
