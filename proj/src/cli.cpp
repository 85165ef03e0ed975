#include "swd/cli.hpp"

#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "swd/blocks.hpp"
#include "swd/category_o.hpp"
#include "swd/errors.hpp"
#include "swd/json_io.hpp"
#include "swd/tower.hpp"
#include "swd/verify.hpp"

namespace swd {

namespace {

using nlohmann::json;

struct Options {
  std::string nu = "generic";
  std::string rank = "3";
  std::string lambda;
  int count = 4;
  int degree_max = 10;
  int size_max = 8;
  int n_max = 6;
  int nu_max = 4;
  int d = 3;
  int N = 2;
  int k = -1;
  int n_int = -1;
  std::string format = "json";
};

std::string paren(const Partition& p) { return "(" + p.to_string() + ")"; }

std::string schur_text(const SchurVector& v) {
  if (v.empty())
    return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : v.terms()) {
    if (!first)
      out << (c > 0 ? " + " : " - ");
    else if (c < 0)
      out << "-";
    if (abs(c) != 1)
      out << mpz_class(abs(c)).get_str() << "*";
    out << "s" << paren(lambda);
    first = false;
  }
  return out.str();
}

std::string k_text(const KVector& v) {
  if (v.empty())
    return "0";
  const char* sym = v.basis() == LabelKind::Verma ? "[M" : "[L";
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, c] : v.terms()) {
    if (!first)
      out << (c > 0 ? " + " : " - ");
    else if (c < 0)
      out << "-";
    if (abs(c) != 1)
      out << mpz_class(abs(c)).get_str() << "*";
    out << sym << paren(lambda) << "]";
    first = false;
  }
  return out.str();
}

std::string label_text(const std::optional<OLabel>& label) {
  if (!label)
    return "0";
  return std::string(label->kind == LabelKind::Verma ? "M" : "L") + paren(label->partition) +
         " at rank " + label->rank.to_string();
}

// Each handler writes its result and returns the exit code.
using Handler = std::function<int(std::ostream&)>;

int emit(std::ostream& out, const Options& o, const json& payload, const std::string& text) {
  if (o.format == "text")
    out << text << "\n";
  else
    out << payload.dump(2) << "\n";
  return 0;
}

int cmd_block(const Options& o, std::ostream& out) {
  const Nu nu = Nu::parse(o.nu);
  const auto cls = block_class(nu, Partition::parse(o.lambda), o.count);
  std::string text = cls.kind == BlockClass::Kind::Trivial ? "trivial:" : "chain:";
  for (const auto& m : cls.members)
    text += " " + paren(m);
  return emit(out, o, to_json(cls), text);
}

int cmd_character(const Options& o, std::ostream& out, bool simple) {
  const Nu nu = Nu::parse(o.nu);
  const Rank rank = Rank::parse(o.rank);
  const Partition lambda = Partition::parse(o.lambda);
  const auto ch = simple ? simple_character(nu, rank, lambda, o.degree_max)
                         : verma_character(nu, rank, lambda, o.degree_max);
  json payload = to_json(ch);
  payload["nu"] = nu.to_string();
  payload["rank"] = rank.to_string();
  payload["basis"] = "schur";
  payload["module"] = simple ? "simple" : "verma";
  payload["partition"] = to_json(lambda);
  return emit(out, o, payload, std::string(simple ? "ch L" : "ch M") + paren(lambda) + " = " + schur_text(ch));
}

int cmd_k_transition(const Options& o, std::ostream& out) {
  const Nu nu = Nu::parse(o.nu);
  const Rank rank = Rank::parse(o.rank);
  const Partition lambda = Partition::parse(o.lambda);
  const auto verma = verma_to_simple(nu, rank, lambda);
  const auto simple = simple_in_verma_basis(nu, rank, lambda);
  json payload{{"nu", nu.to_string()},
               {"rank", rank.to_string()},
               {"partition", to_json(lambda)},
               {"verma_in_simple_basis", to_json(verma)},
               {"simple_in_verma_basis", to_json(simple)}};
  return emit(out, o, payload,
              "[M" + paren(lambda) + "] = " + k_text(verma) + "\n[L" + paren(lambda) + "] = " + k_text(simple));
}

int cmd_res(const Options& o, std::ostream& out) {
  const Nu nu = Nu::parse(o.nu);
  const Rank rank = Rank::parse(o.rank);
  const Partition lambda = Partition::parse(o.lambda);
  const auto verma = res_label({LabelKind::Verma, nu, rank, lambda});
  const auto simple = res_label({LabelKind::Simple, nu, rank, lambda});
  json payload{{"nu", nu.to_string()},
               {"rank", rank.to_string()},
               {"partition", to_json(lambda)},
               {"verma", to_json(verma)},
               {"simple", to_json(simple)}};
  return emit(out, o, payload,
              "Res M" + paren(lambda) + " = " + label_text(verma) + "\nRes L" + paren(lambda) + " = " +
                  label_text(simple));
}

int cmd_sw(const Options& o, std::ostream& out) {
  const Nu nu = Nu::parse(o.nu);
  const Rank rank = Rank::parse(o.rank);
  const Partition lambda = Partition::parse(o.lambda);
  const auto image = sw_simple(nu, rank, lambda);
  return emit(out, o, to_json(image), "SW L" + paren(lambda) + " = " + label_text(image));
}

int cmd_tower(const Options& o, std::ostream& out) {
  const Nu nu = Nu::parse(o.nu);
  const Partition lambda = Partition::parse(o.lambda);
  const int n_max = o.n_int > 0 ? o.n_int : 8;
  const auto tower = tower_of_simple(nu, lambda, 2, n_max);
  json payload = to_json(tower);
  payload["partition"] = to_json(lambda);
  std::string text;
  for (const auto& [n, v] : tower.levels)
    text += "n=" + std::to_string(n) + ": " + k_text(v) + "\n";
  text += "stabilizes from n=" + std::to_string(tower.stabilization_onset());
  return emit(out, o, payload, text);
}

int cmd_classical_sw(const Options& o, std::ostream& out) {
  const auto terms = classical_sw_decompose(o.d, o.N);
  json rows = json::array();
  mpz_class total = 0;
  std::string text = "lambda\tf\tdim\n";
  for (const auto& t : terms) {
    total += t.symmetric_dim * t.schur_dim;
    rows.push_back({{"partition", to_json(t.partition)},
                    {"f", to_json(t.symmetric_dim)},
                    {"dim", to_json(t.schur_dim)}});
    text += paren(t.partition) + "\t" + t.symmetric_dim.get_str() + "\t" + t.schur_dim.get_str() + "\n";
  }
  text += "total\t" + total.get_str();
  json payload{{"d", o.d}, {"N", o.N}, {"rows", rows}, {"total", to_json(total)}};
  return emit(out, o, payload, text);
}

int cmd_tensor_power(const Options& o, std::ostream& out) {
  if (o.k >= 0 && o.n_int < 0) {
    const auto poly = complex_power_gr_dimension(o.N, o.k);
    json coeffs = json::array();
    for (const auto& c : poly.coefficients)
      coeffs.push_back(c.get_str());
    json payload{{"N", o.N}, {"k", o.k}, {"polynomial", poly.to_string()}, {"coefficients", coeffs}};
    return emit(out, o, payload, "dim gr_" + std::to_string(o.k) + " = " + poly.to_string());
  }
  const int n = o.n_int < 0 ? 3 : o.n_int;
  const auto report = verify_tensor_power_specialization(o.N, n);
  json graded = json::array();
  std::string text;
  for (int k = 0; k <= n; ++k) {
    const auto poly = complex_power_gr_dimension(o.N, k);
    graded.push_back({{"k", k}, {"polynomial", poly.to_string()}, {"value", poly.evaluate(n).get_str()}});
    text += "gr_" + std::to_string(k) + ": " + poly.to_string() + " = " + poly.evaluate(n).get_str() + "\n";
  }
  json payload = to_json(report);
  payload["graded"] = graded;
  text += report.pass ? "sum matches N^n" : "MISMATCH";
  emit(out, o, payload, text);
  return report.pass ? 0 : 1;
}

int cmd_verify_all(const Options& o, std::ostream& out) {
  const auto reports = verify_all({o.nu_max, o.n_max, o.size_max, o.degree_max});
  json payload = json::array();
  std::string text;
  bool all = true;
  for (const auto& r : reports) {
    payload.push_back(to_json(r));
    all = all && r.pass;
    text += std::string(r.pass ? "PASS " : "FAIL ") + r.check_name + " (" + std::to_string(r.checked) + " checked)\n";
    for (const auto& w : r.witnesses)
      text += "  " + w + "\n";
  }
  text += all ? "all checks passed" : "some checks FAILED";
  emit(out, o, payload, text);
  return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Schur-Weyl duality for Deligne categories: exact label and character computations"};
  app.require_subcommand(1);
  Options o;
  Handler handler;

  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };
  const auto add_nu = [&](CLI::App* sub) {
    sub->add_option("--nu", o.nu, "Integer nu >= 0 or 'generic'")->required();
  };
  const auto add_lambda = [&](CLI::App* sub) {
    sub->add_option("--lambda", o.lambda, "Partition as comma-separated parts; empty for the empty diagram");
  };
  const auto add_rank = [&](CLI::App* sub) {
    sub->add_option("--n", o.rank, "Rank n of gl_n (positive integer or 'inf')")->required();
  };

  auto* block = app.add_subcommand("block", "nu-equivalence class of a diagram");
  add_nu(block);
  add_lambda(block);
  block->add_option("--count", o.count, "Number of chain members")->check(CLI::PositiveNumber);
  add_format(block);
  block->callback([&] { handler = [&](std::ostream& os) { return cmd_block(o, os); }; });

  auto* verma = app.add_subcommand("verma-char", "Truncated gl(U_n)-character of a parabolic Verma module");
  auto* simple = app.add_subcommand("simple-char", "Truncated gl(U_n)-character of a simple module");
  for (auto* sub : {verma, simple}) {
    add_nu(sub);
    add_rank(sub);
    add_lambda(sub);
    sub->add_option("--degree-max", o.degree_max, "Degree truncation")->check(CLI::NonNegativeNumber);
    add_format(sub);
  }
  verma->callback([&] { handler = [&](std::ostream& os) { return cmd_character(o, os, false); }; });
  simple->callback([&] { handler = [&](std::ostream& os) { return cmd_character(o, os, true); }; });

  auto* transition = app.add_subcommand("k-transition", "Verma <-> simple transition in the Grothendieck group");
  auto* res = app.add_subcommand("res", "Res_{n-1,n} on Verma and simple labels");
  auto* sw = app.add_subcommand("sw", "Schur-Weyl image of a Deligne simple");
  for (auto* sub : {transition, res, sw}) {
    add_nu(sub);
    add_rank(sub);
    add_lambda(sub);
    add_format(sub);
  }
  transition->callback([&] { handler = [&](std::ostream& os) { return cmd_k_transition(o, os); }; });
  res->callback([&] { handler = [&](std::ostream& os) { return cmd_res(o, os); }; });
  sw->callback([&] { handler = [&](std::ostream& os) { return cmd_sw(o, os); }; });

  auto* tower = app.add_subcommand("tower", "Images of a Deligne simple along ranks 2..n");
  add_nu(tower);
  add_lambda(tower);
  tower->add_option("--n", o.n_int, "Largest rank (default 8)")->check(CLI::Range(2, 1000));
  add_format(tower);
  tower->callback([&] { handler = [&](std::ostream& os) { return cmd_tower(o, os); }; });

  auto* classical = app.add_subcommand("classical-sw", "Decomposition of V^{(x)d} for dim V = N");
  classical->add_option("--d", o.d, "Tensor degree")->required()->check(CLI::NonNegativeNumber);
  classical->add_option("--N", o.N, "dim V")->required()->check(CLI::PositiveNumber);
  add_format(classical);
  classical->callback([&] { handler = [&](std::ostream& os) { return cmd_classical_sw(o, os); }; });

  auto* tensor = app.add_subcommand("tensor-power", "Graded dimensions of the complex tensor power of C^N");
  tensor->add_option("--N", o.N, "N")->required()->check(CLI::PositiveNumber);
  tensor->add_option("--n", o.n_int, "Specialize at nu = n and check the sum against N^n")
      ->check(CLI::NonNegativeNumber);
  tensor->add_option("--k", o.k, "Print the k-th graded dimension polynomial only")
      ->check(CLI::NonNegativeNumber);
  add_format(tensor);
  tensor->callback([&] { handler = [&](std::ostream& os) { return cmd_tensor_power(o, os); }; });

  auto* verify = app.add_subcommand("verify-all", "Run every exhaustive verification sweep");
  verify->add_option("--nu-max", o.nu_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", o.n_max)->check(CLI::Range(2, 64));
  verify->add_option("--size-max", o.size_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--degree-max", o.degree_max)->check(CLI::NonNegativeNumber);
  add_format(verify);
  verify->callback([&] { handler = [&](std::ostream& os) { return cmd_verify_all(o, os); }; });

  std::vector<const char*> argv{"swd"};
  for (const auto& a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    return handler(out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConstraintViolation& e) {
    if (o.format == "text")
      err << "constraint violation: " << e.what() << "\n";
    else
      out << json{{"error", "ConstraintViolation"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  }
}

} // namespace swd
