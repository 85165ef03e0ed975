#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "swd/blocks.hpp"
#include "swd/partition.hpp"
#include "swd/symfunc.hpp"

namespace swd {

/// Rank n of gl_n, or infinity (gl_infinity, where no label vanishes).
class Rank {
public:
  static Rank finite(int n);
  static Rank infinite() { return Rank{}; }
  /// A positive integer or "inf".
  static Rank parse(std::string_view text);

  bool is_infinite() const { return !n_.has_value(); }
  int value() const;
  std::string to_string() const;

  /// Labels lambda with length <= n - 1 are the nonzero ones.
  bool admits(const Partition& lambda) const { return !n_ || lambda.length() <= *n_ - 1; }
  /// Number of variables of gl(U_n), i.e. n - 1; unbounded at infinity.
  std::optional<int> character_length() const;

  friend bool operator==(const Rank&, const Rank&) = default;

private:
  Rank() = default;
  explicit Rank(int n) : n_(n) {}
  std::optional<int> n_;
};

enum class LabelKind { Verma, Simple };

std::string to_string(LabelKind kind);

/// M(nu - |lambda|, lambda) or L(nu - |lambda|, lambda) over gl_rank.
struct OLabel {
  LabelKind kind = LabelKind::Simple;
  Nu nu = Nu::generic();
  Rank rank = Rank::infinite();
  Partition partition;

  friend bool operator==(const OLabel&, const OLabel&) = default;
};

/// A class in the Grothendieck group, in the Verma or the simple basis.
class KVector {
public:
  using Terms = std::map<Partition, mpz_class>;

  KVector(LabelKind basis, Nu nu, Rank rank) : basis_(basis), nu_(nu), rank_(rank) {}

  LabelKind basis() const { return basis_; }
  const Nu& nu() const { return nu_; }
  const Rank& rank() const { return rank_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Throws ConstraintViolation if lambda vanishes at this rank.
  void add(const Partition& lambda, const mpz_class& c);
  mpz_class coeff(const Partition& lambda) const;
  /// Sum of absolute coefficients; the length of an effective class.
  mpz_class mass() const;

  friend bool operator==(const KVector&, const KVector&) = default;

private:
  LabelKind basis_;
  Nu nu_;
  Rank rank_;
  Terms terms_;
};

bool is_nonzero(const OLabel& label);

/// [M(lambda)] = [L(lambda)] + [L(successor)] when the successor survives at
/// this rank, otherwise [L(lambda)].
KVector verma_to_simple(const Nu& nu, const Rank& rank, const Partition& lambda);

/// [L(lambda^(i))] = sum_{j >= i} (-1)^{j-i} [M(lambda^(j))] over members that
/// survive at this rank. Needs a finite rank when the class is a chain.
KVector simple_in_verma_basis(const Nu& nu, const Rank& rank, const Partition& lambda);

/// Character of M(lambda) as a gl(U_n)-module: Sym(U_n) (x) S^lambda U_n,
/// truncated at degree max_degree and n - 1 variables.
SchurVector verma_character(const Nu& nu, const Rank& rank, const Partition& lambda,
                            int max_degree);

/// Character of L(lambda): the alternating sum of Verma characters along the
/// chain. Chain members above max_degree contribute nothing and are skipped.
SchurVector simple_character(const Nu& nu, const Rank& rank, const Partition& lambda,
                             int max_degree);

/// Character of the finite-dimensional simple L(lambda^(0)) = S^{tilde(lambda, nu)} C^n
/// via gl_n -> gl_{n-1} branching. lambda must be the minimal member of a chain.
SchurVector polynomial_simple_character(const Nu& nu, const Rank& rank, const Partition& lambda,
                                        int max_degree);

/// Duality on K(O) in the simple basis (the identity on composition factors).
KVector dual_k(const KVector& v);

/// Square integer matrix between the two bases on an ordered label list.
struct TransitionMatrix {
  std::vector<Partition> labels;
  std::vector<std::vector<mpz_class>> entries; // entries[row][col]: coefficient of labels[row] in image of labels[col]
};

/// Column j is verma_to_simple(labels[j]) (direction Verma -> simple) or
/// simple_in_verma_basis(labels[j]) (simple -> Verma).
TransitionMatrix transition_matrix(const Nu& nu, const Rank& rank,
                                   const std::vector<Partition>& labels, LabelKind from);

} // namespace swd
