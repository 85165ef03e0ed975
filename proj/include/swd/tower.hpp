#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "swd/blocks.hpp"
#include "swd/category_o.hpp"
#include "swd/partition.hpp"
#include "swd/report.hpp"

namespace swd {

// Restriction Res_{n-1,n}, specialization Gamma_n and the Schur-Weyl functor,
// all evaluated on Grothendieck-group classes.

/// Res_{n-1,n} on a label: the same label at rank n - 1, or nullopt (zero).
std::optional<OLabel> res_label(const OLabel& label);

/// One summand M_{p_{n-1}}(., lambda') (x) t^k of the restricted Verma module
/// together with the scalar by which Id_{C^{n-1}} acts on it.
struct ResSummand {
  Partition partition;
  int t_power = 0;
  long degree = 0;

  friend bool operator==(const ResSummand&, const ResSummand&) = default;
};

/// Replays the degree-nu filter on Res of a Verma module: branches S^lambda
/// over gl(U_{n-1}), tensors with C[t] up to t^max_t_power, and keeps the
/// summands on which the identity acts by nu.
std::vector<ResSummand> res_verma_oracle(const Nu& nu, const Rank& rank, const Partition& lambda,
                                         int max_t_power);

/// Res_{n-1,n} applied to every term. Rank must be finite and at least 2.
KVector res_k(const KVector& v);

/// Gamma_n: a class at infinite rank projected to rank n.
KVector gamma_k(const KVector& v, const Rank& n);

/// Image of the Deligne simple L(lambda) under SW_{nu, C^n}, or nullopt.
std::optional<OLabel> sw_simple(const Nu& nu, const Rank& rank, const Partition& lambda);

/// Checks Res(SW_n(L)) == SW_{n-1}(L) for all |lambda| <= size_bound.
CheckReport verify_sw_res_compat(const Nu& nu, int n, int size_bound);

/// SW_n restricted to Fil_k labels of size <= size_bound: is it injective,
/// nowhere zero, and onto the non-polynomial simples of length <= k and size
/// <= size_bound? pass == bijective.
CheckReport verify_stabilization(const Nu& nu, int k, int n, int size_bound);

/// Images of one Deligne simple along a contiguous range of ranks.
struct TowerVector {
  Nu nu = Nu::generic();
  std::map<int, KVector> levels;

  /// levels[n-1] == res_k(levels[n]) for consecutive ranks.
  bool compatible() const;
  /// Total masses are non-decreasing in n.
  bool monotone() const;
  /// First rank from which the mass stays constant up to the top of the range.
  int stabilization_onset() const;
};

TowerVector tower_of_simple(const Nu& nu, const Partition& lambda, int n_min, int n_max);

struct ClassicalSwTerm {
  Partition partition;
  mpz_class symmetric_dim; // f^lambda
  mpz_class schur_dim;     // dim S^lambda C^N
};

/// V^{(x)d} = sum_{lambda |- d} lambda (x) S^lambda V for dim V = N.
std::vector<ClassicalSwTerm> classical_sw_decompose(int d, int N);

/// A polynomial in nu with rational coefficients, lowest degree first.
struct RationalPolynomial {
  std::vector<mpq_class> coefficients;

  mpq_class evaluate(const mpq_class& x) const;
  std::string to_string() const;
};

/// (N-1)^k * nu(nu-1)...(nu-k+1) / k!, the interpolated dimension of the
/// k-th graded piece of the complex tensor power of C^N.
RationalPolynomial complex_power_gr_dimension(int N, int k);

/// At nu = n the graded dimensions sum to N^n, and so does the Schur-refined
/// count sum_k sum_{mu |- k} f^mu C(n,k) dim S^mu C^{N-1}.
CheckReport verify_tensor_power_specialization(int N, int n);

using LabelInvolution = std::function<Partition(const Partition&)>;

/// Compares SW(dual(L(lambda))) with dual_k(SW(L(lambda))) for |lambda| <= size_bound,
/// with the Deligne-side duality acting on labels by `involution`.
CheckReport sw_duality_check(const Nu& nu, const Rank& rank, int size_bound,
                             const LabelInvolution& involution = {});

} // namespace swd
