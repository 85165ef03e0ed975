#include "swd/tower.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "swd/errors.hpp"
#include "swd/symfunc.hpp"

namespace swd {

namespace {

std::string label_text(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

std::string label_text(const std::optional<OLabel>& label) {
  if (!label)
    return "0";
  return (label->kind == LabelKind::Verma ? "M" : "L") + label_text(label->partition) + "@" +
         label->rank.to_string();
}

Rank lowered(const Rank& rank) {
  if (rank.is_infinite())
    throw ConstraintViolation("Res_{n-1,n} needs a finite rank");
  if (rank.value() < 2)
    throw ConstraintViolation("Res_{n-1,n} needs rank >= 2, got " + rank.to_string());
  return Rank::finite(rank.value() - 1);
}

} // namespace

std::optional<OLabel> res_label(const OLabel& label) {
  if (!is_nonzero(label))
    throw ConstraintViolation("res_label: input " + label_text(label) + " is zero");
  OLabel out = label;
  out.rank = lowered(label.rank);
  if (!is_nonzero(out))
    return std::nullopt;
  return out;
}

std::vector<ResSummand> res_verma_oracle(const Nu& nu, const Rank& rank, const Partition& lambda,
                                         int max_t_power) {
  if (nu.is_generic())
    throw ConstraintViolation("res_verma_oracle needs an integer nu");
  if (!rank.admits(lambda))
    throw ConstraintViolation("res_verma_oracle: Verma label " + label_text(lambda) +
                              " is zero at rank " + rank.to_string());
  const long nu_value = *nu.value();
  // S^lambda U_n restricted to gl(U_{n-1}); every lambda' is kept, even those
  // whose Verma module vanishes at rank n - 1.
  const auto branched = branch_remove_variable(SchurVector::basis(lambda, lambda.size()));
  std::vector<ResSummand> survivors;
  for (const auto& [sub, mult] : branched.terms())
    for (int k = 0; k <= max_t_power; ++k) {
      const long degree = nu_value - lambda.size() + sub.size() - k;
      if (degree == nu_value)
        survivors.push_back({sub, k, degree});
    }
  return survivors;
}

KVector res_k(const KVector& v) {
  KVector out(v.basis(), v.nu(), lowered(v.rank()));
  for (const auto& [lambda, c] : v.terms())
    if (out.rank().admits(lambda))
      out.add(lambda, c);
  return out;
}

KVector gamma_k(const KVector& v, const Rank& n) {
  if (!v.rank().is_infinite())
    throw ConstraintViolation("gamma_k expects a class at infinite rank");
  KVector out(v.basis(), v.nu(), n);
  for (const auto& [lambda, c] : v.terms())
    if (n.admits(lambda))
      out.add(lambda, c);
  return out;
}

std::optional<OLabel> sw_simple(const Nu& nu, const Rank& rank, const Partition& lambda) {
  OLabel out{LabelKind::Simple, nu, rank, lambda};
  if (auto next = successor(nu, lambda))
    out.partition = *next;
  if (!is_nonzero(out))
    return std::nullopt;
  return out;
}

CheckReport verify_sw_res_compat(const Nu& nu, int n, int size_bound) {
  CheckReport report;
  report.check_name = "sw_res_compat";
  report.parameters = {{"nu", nu.to_string()}, {"n", n}, {"size_bound", size_bound}};
  if (n < 2)
    throw ConstraintViolation("verify_sw_res_compat needs n >= 2");
  const Rank upper = Rank::finite(n);
  const Rank lower = Rank::finite(n - 1);
  for (const auto& lambda : partitions_up_to(size_bound)) {
    ++report.checked;
    const auto top = sw_simple(nu, upper, lambda);
    const auto restricted = top ? res_label(*top) : std::nullopt;
    const auto direct = sw_simple(nu, lower, lambda);
    if (restricted != direct)
      report.fail("L" + label_text(lambda) + ": Res(SW_" + std::to_string(n) + ") = " +
                  label_text(restricted) + " but SW_" + std::to_string(n - 1) + " = " +
                  label_text(direct));
  }
  return report;
}

CheckReport verify_stabilization(const Nu& nu, int k, int n, int size_bound) {
  CheckReport report;
  report.check_name = "stabilization";
  report.parameters = {{"nu", nu.to_string()}, {"k", k}, {"n", n}, {"size_bound", size_bound}};
  const Rank rank = Rank::finite(n);
  std::map<Partition, Partition> preimage;
  for (const auto& lambda : partitions_up_to(size_bound)) {
    if (fil_level_deligne(nu, lambda) > k)
      continue;
    ++report.checked;
    const auto image = sw_simple(nu, rank, lambda);
    if (!image) {
      report.fail("L" + label_text(lambda) + " in Fil_" + std::to_string(k) + " is sent to 0 at n=" +
                  std::to_string(n));
      continue;
    }
    auto [it, inserted] = preimage.emplace(image->partition, lambda);
    if (!inserted)
      report.fail("L" + label_text(lambda) + " and L" + label_text(it->second) +
                  " share the image " + label_text(image));
  }
  // Targets: simples of length <= k that are not polynomial (the polynomial
  // ones are the minimal chain members and die in the Serre quotient).
  for (const auto& mu : partitions_up_to(size_bound, k)) {
    if (!rank.admits(mu))
      continue;
    if (!is_trivial_class(nu, mu) && minimal_member(nu, mu) == mu)
      continue;
    if (!preimage.contains(mu))
      report.fail("L" + label_text(mu) + "@" + std::to_string(n) + " has no preimage in Fil_" +
                  std::to_string(k));
  }
  return report;
}

bool TowerVector::compatible() const {
  for (auto it = levels.begin(); it != levels.end(); ++it) {
    auto next = std::next(it);
    if (next == levels.end())
      break;
    if (!(res_k(next->second) == it->second))
      return false;
  }
  return true;
}

bool TowerVector::monotone() const {
  std::optional<mpz_class> previous;
  for (const auto& [n, v] : levels) {
    const auto mass = v.mass();
    if (previous && mass < *previous)
      return false;
    previous = mass;
  }
  return true;
}

int TowerVector::stabilization_onset() const {
  if (levels.empty())
    return 0;
  const auto final_mass = levels.rbegin()->second.mass();
  int onset = levels.rbegin()->first;
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    if (it->second.mass() != final_mass)
      break;
    onset = it->first;
  }
  return onset;
}

TowerVector tower_of_simple(const Nu& nu, const Partition& lambda, int n_min, int n_max) {
  TowerVector tower;
  tower.nu = nu;
  for (int n = std::max(1, n_min); n <= n_max; ++n) {
    const Rank rank = Rank::finite(n);
    KVector level(LabelKind::Simple, nu, rank);
    if (auto image = sw_simple(nu, rank, lambda))
      level.add(image->partition, 1);
    tower.levels.emplace(n, std::move(level));
  }
  return tower;
}

std::vector<ClassicalSwTerm> classical_sw_decompose(int d, int N) {
  std::vector<ClassicalSwTerm> out;
  for (const auto& lambda : enumerate_partitions(d))
    out.push_back({lambda, dim_symmetric_group_irrep(lambda), dim_schur_gl(lambda, N)});
  return out;
}

mpq_class RationalPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

std::string RationalPolynomial::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    const mpq_class& c = coefficients[i];
    if (c == 0)
      continue;
    if (!first)
      out << (c > 0 ? " + " : " - ");
    else if (c < 0)
      out << "-";
    const mpq_class mag = abs(c);
    if (i == 0 || mag != 1)
      out << mag.get_str() << (i > 0 ? "*" : "");
    if (i > 0)
      out << "nu" << (i > 1 ? "^" + std::to_string(i) : "");
    first = false;
  }
  return first ? "0" : out.str();
}

RationalPolynomial complex_power_gr_dimension(int N, int k) {
  if (N < 1)
    throw ConstraintViolation("complex_power_gr_dimension needs N >= 1");
  // Falling factorial nu(nu-1)...(nu-k+1), built one linear factor at a time.
  std::vector<mpq_class> coeffs{1};
  for (int j = 0; j < k; ++j) {
    std::vector<mpq_class> next(coeffs.size() + 1, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= coeffs[i] * j;
    }
    coeffs = std::move(next);
  }
  mpz_class scale;
  mpz_pow_ui(scale.get_mpz_t(), mpz_class(N - 1).get_mpz_t(), static_cast<unsigned long>(k));
  const mpq_class factor = mpq_class(scale, factorial(k));
  for (auto& c : coeffs) {
    c *= factor;
    c.canonicalize();
  }
  while (coeffs.size() > 1 && coeffs.back() == 0)
    coeffs.pop_back();
  return {coeffs};
}

CheckReport verify_tensor_power_specialization(int N, int n) {
  CheckReport report;
  report.check_name = "tensor_power_specialization";
  report.parameters = {{"N", N}, {"n", n}};
  mpz_class expected;
  mpz_pow_ui(expected.get_mpz_t(), mpz_class(N).get_mpz_t(), static_cast<unsigned long>(n));

  mpq_class graded_total = 0;
  for (int k = 0; k <= n; ++k)
    graded_total += complex_power_gr_dimension(N, k).evaluate(n);
  ++report.checked;
  if (graded_total != expected)
    report.fail("sum of graded dimensions at nu=" + std::to_string(n) + " is " +
                graded_total.get_str() + ", expected " + expected.get_str());

  mpz_class refined_total = 0;
  for (int k = 0; k <= n; ++k)
    for (const auto& mu : enumerate_partitions(k, N - 1))
      refined_total += dim_symmetric_group_irrep(mu) * binomial(n, k) * dim_schur_gl(mu, N - 1);
  ++report.checked;
  if (refined_total != expected)
    report.fail("Schur-refined count is " + refined_total.get_str() + ", expected " +
                expected.get_str());
  return report;
}

CheckReport sw_duality_check(const Nu& nu, const Rank& rank, int size_bound,
                             const LabelInvolution& involution) {
  CheckReport report;
  report.check_name = "sw_duality";
  report.parameters = {{"nu", nu.to_string()},
                       {"rank", rank.to_string()},
                       {"size_bound", size_bound},
                       {"involution", involution ? "custom" : "identity"}};
  const auto dual = [&](const Partition& lambda) { return involution ? involution(lambda) : lambda; };
  const auto as_class = [&](const std::optional<OLabel>& label) {
    KVector v(LabelKind::Simple, nu, rank);
    if (label)
      v.add(label->partition, 1);
    return v;
  };
  for (const auto& lambda : partitions_up_to(size_bound)) {
    ++report.checked;
    const KVector left = as_class(sw_simple(nu, rank, dual(lambda)));
    const KVector right = dual_k(as_class(sw_simple(nu, rank, lambda)));
    if (!(left == right))
      report.fail("L" + label_text(lambda) + ": SW(dual) and dual(SW) disagree");
  }
  return report;
}

} // namespace swd
