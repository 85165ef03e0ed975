// One line per acceptance criterion; exit status is nonzero if any fails.

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "swd/verify.hpp"

using namespace swd;

namespace {

struct Criterion {
  std::string name;
  std::function<std::vector<CheckReport>()> run;
};

} // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 block chains (nu<=6, |lambda|<=10)", [] { return std::vector{check_block_classes(6, 10)}; }},
      {"2 transition matrices inverse unitriangular (nu<=4, n<=6)",
       [] { return std::vector{check_transition_inverse(4, 6)}; }},
      {"3 character short exact sequence (nu<=4, n<=5, D<=10)",
       [] { return std::vector{check_character_ses(4, 5, 10)}; }},
      {"4 minimal simple character identity (nu<=5, n<=5, D<=8)",
       [] { return std::vector{check_minimal_simple_character(5, 5, 8)}; }},
      // Lengths up to 8 need n up to 9.
      {"5 restricted Verma degree filter (nu<=6, |lambda|<=8, l<=n-1)",
       [] { return std::vector{check_res_verma_oracle(6, 9, 8, 10)}; }},
      {"6 classical Schur-Weyl (d<=8, N<=6)", [] { return std::vector{check_classical_sw(8, 6)}; }},
      {"7 stabilization on Fil_k (nu<=4, k<=5, |lambda|<=10)",
       [] { return std::vector{check_stabilization(4, 5, 10)}; }},
      {"8 Res/SW/Gamma coherence (nu<=4, n<=7, |lambda|<=8)",
       [] {
         return std::vector{check_sw_res_compat(4, 7, 8), check_gamma_compat(4, 7, 8),
                            check_limit_diagram(4, 7, 8)};
       }},
      {"9 complex tensor power interpolation (N<=6, n<=8)",
       [] { return std::vector{check_tensor_power(6, 8)}; }},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<CheckReport> reports;
    try {
      reports = c.run();
    } catch (const std::exception& e) {
      CheckReport crashed;
      crashed.check_name = "exception";
      crashed.fail(e.what());
      reports.push_back(crashed);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = true;
    std::size_t checked = 0;
    for (const auto& r : reports) {
      pass = pass && r.pass;
      checked += r.checked;
    }
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.name << "  checked=" << checked << "  "
              << secs << "s\n";
    if (!pass) {
      ++failures;
      for (const auto& r : reports)
        for (const auto& w : r.witnesses)
          std::cout << "    " << r.check_name << ": " << w << "\n";
    }
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
