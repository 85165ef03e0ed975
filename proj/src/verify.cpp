#include "swd/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <set>

#include "swd/blocks.hpp"
#include "swd/category_o.hpp"
#include "swd/partition.hpp"
#include "swd/symfunc.hpp"
#include "swd/tower.hpp"

namespace swd {

namespace {

std::vector<Nu> nu_range(int nu_max) {
  std::vector<Nu> out{Nu::generic()};
  for (int v = 0; v <= nu_max; ++v)
    out.push_back(Nu::integer(v));
  return out;
}

// Minimal members of all chains at integer nu, one per partition of nu.
std::vector<Partition> chain_minima(int nu) {
  std::vector<Partition> out;
  for (const auto& core : enumerate_partitions(nu))
    out.push_back(class_from_core(nu, core, 1).members.front());
  return out;
}

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string at(const Nu& nu, int n) { return " [nu=" + nu.to_string() + ", n=" + std::to_string(n) + "]"; }

CheckReport make_report(std::string name, nlohmann::json parameters) {
  CheckReport r;
  r.check_name = std::move(name);
  r.parameters = std::move(parameters);
  return r;
}

void absorb(CheckReport& into, const CheckReport& part) {
  into.checked += part.checked;
  for (const auto& w : part.witnesses)
    into.fail(w);
  if (!part.pass && part.witnesses.empty())
    into.fail(part.check_name + " failed");
}

bool strictly_increasing_chain(const std::vector<Partition>& members) {
  for (std::size_t i = 1; i < members.size(); ++i)
    if (!(members[i - 1].size() < members[i].size() && contains(members[i - 1], members[i])))
      return false;
  return true;
}

} // namespace

CheckReport check_block_classes(int nu_max, int size_max) {
  auto report = make_report("block_classes", {{"nu_max", nu_max}, {"size_max", size_max}});
  const auto box = partitions_up_to(size_max);
  for (const auto& nu : nu_range(nu_max)) {
    std::set<Partition> minima;
    for (const auto& lambda : box) {
      ++report.checked;
      const auto members = class_members_up_to_size(nu, lambda, size_max);
      const bool trivial = is_trivial_class(nu, lambda);
      if (nu.is_generic() && !trivial)
        report.fail(paren(lambda) + " has a non-trivial class at generic nu");
      if (std::find(members.begin(), members.end(), lambda) == members.end())
        report.fail(paren(lambda) + " missing from its own class" + at(nu, 0));
      if (!strictly_increasing_chain(members))
        report.fail("class of " + paren(lambda) + " is not a strictly increasing chain");
      // Completeness within the box, against the multiset criterion.
      std::vector<Partition> by_multiset;
      for (const auto& mu : box)
        if (equivalent(nu, lambda, mu))
          by_multiset.push_back(mu);
      auto reconstructed = members;
      std::sort(reconstructed.begin(), reconstructed.end());
      if (reconstructed != by_multiset)
        report.fail("class of " + paren(lambda) + " at nu=" + nu.to_string() +
                    " disagrees with the multiset criterion");
      if (!trivial)
        minima.insert(members.front());
    }
    if (nu.is_generic())
      continue;
    const int n = static_cast<int>(*nu.value());
    // Non-trivial classes <-> partitions of nu.
    std::set<Partition> cores;
    for (const auto& m : minima)
      cores.insert(tilde(m, n));
    const auto expected = enumerate_partitions(n);
    if (cores != std::set<Partition>(expected.begin(), expected.end()))
      report.fail("non-trivial classes at nu=" + std::to_string(n) +
                  " are not in bijection with partitions of nu");
    for (const auto& core : expected) {
      const auto chain = class_from_core(n, core, 4).members;
      const auto direct = block_class(nu, chain.front(), 4).members;
      if (chain != direct || minimal_member(nu, chain.back()) != chain.front())
        report.fail("class_from_core(" + std::to_string(n) + ", " + paren(core) +
                    ") disagrees with block_class");
    }
  }
  return report;
}

CheckReport check_equivalence_relation(int nu_max, int size_max) {
  auto report = make_report("equivalence_relation", {{"nu_max", nu_max}, {"size_max", size_max}});
  const auto box = partitions_up_to(size_max);
  for (const auto& nu : nu_range(nu_max)) {
    const auto count = box.size();
    std::vector<std::vector<bool>> rel(count, std::vector<bool>(count));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j)
        rel[i][j] = equivalent(nu, box[i], box[j]);
    for (std::size_t i = 0; i < count; ++i) {
      ++report.checked;
      if (!rel[i][i])
        report.fail("not reflexive at " + paren(box[i]));
      for (std::size_t j = 0; j < count; ++j) {
        if (rel[i][j] != rel[j][i])
          report.fail("not symmetric at " + paren(box[i]) + ", " + paren(box[j]));
        if (!rel[i][j])
          continue;
        for (std::size_t k = 0; k < count; ++k)
          if (rel[j][k] && !rel[i][k])
            report.fail("not transitive at " + paren(box[i]) + ", " + paren(box[j]) + ", " +
                        paren(box[k]));
      }
    }
  }
  return report;
}

CheckReport check_transition_inverse(int nu_max, int n_max) {
  auto report = make_report("transition_inverse", {{"nu_max", nu_max}, {"n_max", n_max}});
  for (int v = 0; v <= nu_max; ++v) {
    const Nu nu = Nu::integer(v);
    for (const auto& minimal : chain_minima(v))
      for (int n = 1; n <= n_max; ++n) {
        const Rank rank = Rank::finite(n);
        const auto labels = class_members_up_to_length(nu, minimal, n - 1);
        if (labels.empty())
          continue;
        ++report.checked;
        const auto a = transition_matrix(nu, rank, labels, LabelKind::Verma).entries;
        const auto b = transition_matrix(nu, rank, labels, LabelKind::Simple).entries;
        const auto size = labels.size();
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) {
            mpz_class ab = 0, ba = 0;
            for (std::size_t l = 0; l < size; ++l) {
              ab += a[i][l] * b[l][j];
              ba += b[i][l] * a[l][j];
            }
            const mpz_class id = i == j ? 1 : 0;
            if (ab != id || ba != id)
              report.fail("block " + paren(minimal) + at(nu, n) + ": products are not the identity");
            const bool upper = i < j;
            if ((i == j && (a[i][j] != 1 || b[i][j] != 1)) || (upper && (a[i][j] != 0 || b[i][j] != 0)))
              report.fail("block " + paren(minimal) + at(nu, n) + ": not unitriangular");
          }
      }
  }
  return report;
}

CheckReport check_character_ses(int nu_max, int n_max, int degree_max) {
  auto report = make_report("character_ses",
                            {{"nu_max", nu_max}, {"n_max", n_max}, {"degree_max", degree_max}});
  for (int v = 0; v <= nu_max; ++v) {
    const Nu nu = Nu::integer(v);
    for (const auto& minimal : chain_minima(v))
      for (int n = 1; n <= n_max; ++n) {
        const Rank rank = Rank::finite(n);
        for (const auto& member : class_members_up_to_length(nu, minimal, n - 1)) {
          if (member.size() > degree_max)
            break;
          ++report.checked;
          const auto verma = verma_character(nu, rank, member, degree_max);
          auto sum = simple_character(nu, rank, member, degree_max);
          const auto next = successor(nu, member);
          if (next && rank.admits(*next))
            sum += simple_character(nu, rank, *next, degree_max);
          if (!(verma == sum))
            report.fail("ch M" + paren(member) + " != ch L + ch L(next)" + at(nu, n));
        }
      }
  }
  return report;
}

CheckReport check_minimal_simple_character(int nu_max, int n_max, int degree_max) {
  auto report = make_report("minimal_simple_character",
                            {{"nu_max", nu_max}, {"n_max", n_max}, {"degree_max", degree_max}});
  for (int v = 0; v <= nu_max; ++v) {
    const Nu nu = Nu::integer(v);
    for (const auto& minimal : chain_minima(v))
      for (int n = 1; n <= n_max; ++n) {
        const Rank rank = Rank::finite(n);
        if (!rank.admits(minimal))
          continue;
        ++report.checked;
        if (!(simple_character(nu, rank, minimal, degree_max) ==
              polynomial_simple_character(nu, rank, minimal, degree_max)))
          report.fail("alternating Verma sum != branched character for " + paren(minimal) +
                      at(nu, n));
      }
  }
  return report;
}

CheckReport check_character_positivity(int nu_max, int n_max, int degree_max) {
  auto report = make_report("character_positivity",
                            {{"nu_max", nu_max}, {"n_max", n_max}, {"degree_max", degree_max}});
  for (const auto& nu : nu_range(nu_max))
    for (int n = 1; n <= n_max; ++n) {
      const Rank rank = Rank::finite(n);
      for (const auto& lambda : partitions_up_to(degree_max, n - 1)) {
        ++report.checked;
        const auto ch = simple_character(nu, rank, lambda, degree_max);
        for (const auto& [mu, c] : ch.terms()) {
          if (c < 0)
            report.fail("negative coefficient of s" + paren(mu) + " in ch L" + paren(lambda) +
                        at(nu, n));
          if (mu.size() > degree_max || mu.length() > n - 1)
            report.fail("key s" + paren(mu) + " outside the truncation window");
        }
        // The top of the simple module sits in degree |lambda| with multiplicity one.
        if (ch.coeff(lambda) != 1)
          report.fail("ch L" + paren(lambda) + " lacks its highest weight" + at(nu, n));
      }
    }
  return report;
}

CheckReport check_res_verma_oracle(int nu_max, int n_max, int size_max, int degree_max) {
  auto report = make_report("res_verma_oracle", {{"nu_max", nu_max},
                                                 {"n_max", n_max},
                                                 {"size_max", size_max},
                                                 {"degree_max", degree_max}});
  for (int v = 0; v <= nu_max; ++v) {
    const Nu nu = Nu::integer(v);
    for (int n = 1; n <= n_max; ++n)
      for (const auto& lambda : partitions_up_to(size_max, n - 1)) {
        ++report.checked;
        const auto survivors = res_verma_oracle(nu, Rank::finite(n), lambda, degree_max);
        const std::vector<ResSummand> expected{{lambda, 0, v}};
        if (survivors != expected)
          report.fail("Res M" + paren(lambda) + at(nu, n) + " keeps " +
                      std::to_string(survivors.size()) + " summands of degree nu");
      }
  }
  return report;
}

CheckReport check_k_commuting_square(int nu_max, int n_max) {
  auto report = make_report("k_commuting_square", {{"nu_max", nu_max}, {"n_max", n_max}});
  for (const auto& nu : nu_range(nu_max))
    for (int n = 2; n <= n_max; ++n) {
      const Rank upper = Rank::finite(n);
      for (const auto& lambda : partitions_up_to(2 * n_max, n - 1)) {
        ++report.checked;
        // Res applied to the Verma / simple label itself.
        const auto res_of_label = [&](LabelKind kind) {
          KVector v(kind, nu, upper);
          v.add(lambda, 1);
          return res_k(v);
        };
        const auto transition = [&](const KVector& v, LabelKind from) {
          KVector out(from == LabelKind::Verma ? LabelKind::Simple : LabelKind::Verma, nu, v.rank());
          for (const auto& [mu, c] : v.terms()) {
            const auto image = from == LabelKind::Verma ? verma_to_simple(nu, v.rank(), mu)
                                                        : simple_in_verma_basis(nu, v.rank(), mu);
            for (const auto& [m, d] : image.terms())
              out.add(m, c * d);
          }
          return out;
        };
        for (auto from : {LabelKind::Verma, LabelKind::Simple}) {
          KVector single(from, nu, upper);
          single.add(lambda, 1);
          const auto route_a = transition(res_of_label(from), from);
          const auto route_b = res_k(transition(single, from));
          if (!(route_a == route_b))
            report.fail(to_string(from) + " " + paren(lambda) + at(nu, n) +
                        ": transition and Res do not commute");
        }
      }
    }
  return report;
}

CheckReport check_classical_sw(int d_max, int N_max) {
  auto report = make_report("classical_sw", {{"d_max", d_max}, {"N_max", N_max}});
  for (int d = 0; d <= d_max; ++d)
    for (int N = 1; N <= N_max; ++N) {
      ++report.checked;
      mpz_class total = 0;
      for (const auto& term : classical_sw_decompose(d, N)) {
        total += term.symmetric_dim * term.schur_dim;
        const bool killed = term.schur_dim == 0;
        if (killed != (term.partition.length() > N))
          report.fail("kernel mismatch at " + paren(term.partition) + ", N=" + std::to_string(N));
      }
      mpz_class expected;
      mpz_pow_ui(expected.get_mpz_t(), mpz_class(N).get_mpz_t(), static_cast<unsigned long>(d));
      if (total != expected)
        report.fail("sum f*dim = " + total.get_str() + " != " + expected.get_str() + " at d=" +
                    std::to_string(d) + ", N=" + std::to_string(N));
    }
  return report;
}

CheckReport check_stabilization(int nu_max, int k_max, int size_max) {
  auto report = make_report("stabilization", {{"nu_max", nu_max}, {"k_max", k_max}, {"size_max", size_max}});
  for (const auto& nu : nu_range(nu_max))
    for (int k = 0; k <= k_max; ++k) {
      for (int n = k + 1; n <= k + 3; ++n) {
        auto part = verify_stabilization(nu, k, n, size_max);
        absorb(report, part);
      }
      // At n = k the rank bound bites: something in Fil_k must die.
      if (k >= 1) {
        ++report.checked;
        if (verify_stabilization(nu, k, k, size_max).pass)
          report.fail("no failure witness at n=k=" + std::to_string(k) + ", nu=" + nu.to_string());
      }
    }
  return report;
}

CheckReport check_sw_res_compat(int nu_max, int n_max, int size_max) {
  auto report = make_report("sw_res_compat", {{"nu_max", nu_max}, {"n_max", n_max}, {"size_max", size_max}});
  for (const auto& nu : nu_range(nu_max))
    for (int n = 2; n <= n_max; ++n)
      absorb(report, verify_sw_res_compat(nu, n, size_max));
  return report;
}

namespace {

std::vector<KVector> sample_infinite_rank_vectors(const Nu& nu, int size_max) {
  std::vector<KVector> out;
  KVector mixed(LabelKind::Simple, nu, Rank::infinite());
  int i = 0;
  for (const auto& lambda : partitions_up_to(size_max)) {
    KVector single(LabelKind::Simple, nu, Rank::infinite());
    single.add(lambda, 1);
    out.push_back(std::move(single));
    mixed.add(lambda, (i++ % 5) - 2);
  }
  out.push_back(std::move(mixed));
  return out;
}

} // namespace

CheckReport check_gamma_compat(int nu_max, int n_max, int size_max) {
  auto report = make_report("gamma_res_compat", {{"nu_max", nu_max}, {"n_max", n_max}, {"size_max", size_max}});
  for (const auto& nu : nu_range(nu_max)) {
    const auto samples = sample_infinite_rank_vectors(nu, size_max);
    for (int n = 2; n <= n_max; ++n)
      for (const auto& v : samples) {
        ++report.checked;
        if (!(gamma_k(v, Rank::finite(n - 1)) == res_k(gamma_k(v, Rank::finite(n)))))
          report.fail("Gamma_{n-1} != Res o Gamma_n" + at(nu, n));
      }
  }
  return report;
}

CheckReport check_limit_diagram(int nu_max, int n_max, int size_max) {
  auto report = make_report("limit_diagram", {{"nu_max", nu_max}, {"n_max", n_max}, {"size_max", size_max}});
  for (const auto& nu : nu_range(nu_max))
    for (const auto& lambda : partitions_up_to(size_max)) {
      KVector top(LabelKind::Simple, nu, Rank::infinite());
      if (auto image = sw_simple(nu, Rank::infinite(), lambda))
        top.add(image->partition, 1);
      for (int n = 1; n <= n_max; ++n) {
        ++report.checked;
        const Rank rank = Rank::finite(n);
        KVector direct(LabelKind::Simple, nu, rank);
        if (auto image = sw_simple(nu, rank, lambda))
          direct.add(image->partition, 1);
        if (!(gamma_k(top, rank) == direct))
          report.fail("Gamma_n o SW_inf != SW_n on L" + paren(lambda) + at(nu, n));
      }
    }
  return report;
}

CheckReport check_towers(int nu_max, int n_max, int size_max) {
  auto report = make_report("towers", {{"nu_max", nu_max}, {"n_max", n_max}, {"size_max", size_max}});
  const int n_min = 2;
  for (const auto& nu : nu_range(nu_max))
    for (const auto& lambda : partitions_up_to(size_max)) {
      ++report.checked;
      const auto tower = tower_of_simple(nu, lambda, n_min, n_max);
      const Partition image = successor(nu, lambda).value_or(lambda);
      if (!tower.compatible())
        report.fail("tower of L" + paren(lambda) + " is not Res-compatible, nu=" + nu.to_string());
      if (!tower.monotone())
        report.fail("tower of L" + paren(lambda) + " loses mass, nu=" + nu.to_string());
      if (tower.stabilization_onset() > std::max(n_min, image.length() + 1))
        report.fail("tower of L" + paren(lambda) + " stabilizes late, nu=" + nu.to_string());
    }
  return report;
}

CheckReport check_tensor_power(int N_max, int n_max) {
  auto report = make_report("tensor_power", {{"N_max", N_max}, {"n_max", n_max}});
  for (int N = 1; N <= N_max; ++N)
    for (int n = 0; n <= n_max; ++n)
      absorb(report, verify_tensor_power_specialization(N, n));
  return report;
}

CheckReport check_duality(int nu_max, int n_max, int size_max) {
  auto report = make_report("sw_duality", {{"nu_max", nu_max}, {"n_max", n_max}, {"size_max", size_max}});
  for (const auto& nu : nu_range(nu_max))
    for (int n = 1; n <= n_max; ++n)
      absorb(report, sw_duality_check(nu, Rank::finite(n), size_max));
  return report;
}

CheckReport check_pieri_against_lr(int degree_max) {
  auto report = make_report("pieri_vs_lr", {{"degree_max", degree_max}});
  for (int m = 0; m <= 5; ++m)
    for (const auto& lambda : partitions_up_to(std::max(0, degree_max - m))) {
      ++report.checked;
      const auto v = SchurVector::basis(lambda, degree_max);
      if (!(pieri(m, v) == lr_multiply(SchurVector::basis(Partition{m}, degree_max), v)))
        report.fail("h_" + std::to_string(m) + " * s" + paren(lambda) + ": Pieri != LR");
    }
  return report;
}

CheckReport check_specialization_homomorphism(int degree_max, int N_max) {
  auto report = make_report("specialization_homomorphism", {{"degree_max", degree_max}, {"N_max", N_max}});
  const auto box = partitions_up_to(degree_max / 2);
  for (const auto& a : box)
    for (const auto& b : box) {
      const auto product =
          lr_multiply(SchurVector::basis(a, degree_max), SchurVector::basis(b, degree_max));
      for (int N = 1; N <= N_max; ++N) {
        ++report.checked;
        if (principal_specialize(product, N) != dim_schur_gl(a, N) * dim_schur_gl(b, N))
          report.fail("s" + paren(a) + " * s" + paren(b) + " at N=" + std::to_string(N));
      }
    }
  return report;
}

CheckReport check_branching_dimensions(int degree_max, int N_max) {
  auto report = make_report("branching_dimensions", {{"degree_max", degree_max}, {"N_max", N_max}});
  for (int N = 1; N <= N_max; ++N)
    for (const auto& lambda : partitions_up_to(degree_max, N)) {
      ++report.checked;
      const auto branched = branch_remove_variable(SchurVector::basis(lambda, degree_max, N));
      // Restricting to gl_{N-1} x gl_1 and forgetting gl_1 preserves dimension.
      if (principal_specialize(branched, N - 1) != dim_schur_gl(lambda, N))
        report.fail("sum over strips of dim S^mu C^" + std::to_string(N - 1) + " != dim S" +
                    paren(lambda) + " C^" + std::to_string(N));
    }
  return report;
}

std::vector<CheckReport> verify_all(const VerifyBounds& b) {
  std::vector<std::function<CheckReport()>> jobs{
      [&] { return check_block_classes(b.nu_max, b.size_max); },
      [&] { return check_equivalence_relation(b.nu_max, b.size_max); },
      [&] { return check_transition_inverse(b.nu_max, b.n_max); },
      [&] { return check_character_ses(b.nu_max, b.n_max, b.degree_max); },
      [&] { return check_minimal_simple_character(b.nu_max, b.n_max, b.degree_max); },
      [&] { return check_character_positivity(b.nu_max, b.n_max, b.degree_max); },
      [&] { return check_res_verma_oracle(b.nu_max, b.n_max, b.size_max, b.degree_max); },
      [&] { return check_k_commuting_square(b.nu_max, b.n_max); },
      [&] { return check_classical_sw(b.size_max, b.n_max); },
      [&] { return check_stabilization(b.nu_max, b.n_max - 1, b.size_max); },
      [&] { return check_sw_res_compat(b.nu_max, b.n_max, b.size_max); },
      [&] { return check_gamma_compat(b.nu_max, b.n_max, b.size_max); },
      [&] { return check_limit_diagram(b.nu_max, b.n_max, b.size_max); },
      [&] { return check_towers(b.nu_max, b.n_max, b.size_max); },
      [&] { return check_tensor_power(b.n_max, b.size_max); },
      [&] { return check_duality(b.nu_max, b.n_max, b.size_max); },
      [&] { return check_pieri_against_lr(b.degree_max); },
      [&] { return check_specialization_homomorphism(b.degree_max, b.n_max); },
      [&] { return check_branching_dimensions(b.degree_max, b.n_max); },
  };
  std::vector<std::future<CheckReport>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs)
    pending.push_back(std::async(std::launch::async, job));
  std::vector<CheckReport> out;
  out.reserve(jobs.size());
  for (auto& f : pending)
    out.push_back(f.get());
  return out;
}

} // namespace swd
