#include "swd/category_o.hpp"

#include <algorithm>
#include <charconv>

#include "swd/errors.hpp"

namespace swd {

Rank Rank::finite(int n) {
  if (n < 1)
    throw ConstraintViolation("rank must be positive, got " + std::to_string(n));
  return Rank{n};
}

Rank Rank::parse(std::string_view text) {
  if (text == "inf" || text == "infinity")
    return infinite();
  int n = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), n);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || n < 1)
    throw ParseError("rank must be a positive integer or 'inf', got '" + std::string(text) + "'");
  return Rank{n};
}

int Rank::value() const {
  if (!n_)
    throw ConstraintViolation("infinite rank has no integer value");
  return *n_;
}

std::string Rank::to_string() const { return n_ ? std::to_string(*n_) : "inf"; }

std::optional<int> Rank::character_length() const {
  if (!n_)
    return std::nullopt;
  return *n_ - 1;
}

std::string to_string(LabelKind kind) { return kind == LabelKind::Verma ? "verma" : "simple"; }

void KVector::add(const Partition& lambda, const mpz_class& c) {
  if (!rank_.admits(lambda))
    throw ConstraintViolation("label (" + lambda.to_string() + ") vanishes at rank " +
                              rank_.to_string());
  if (c == 0)
    return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

mpz_class KVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class KVector::mass() const {
  mpz_class total = 0;
  for (const auto& [lambda, c] : terms_)
    total += abs(c);
  return total;
}

bool is_nonzero(const OLabel& label) { return label.rank.admits(label.partition); }

namespace {

void require_nonzero(LabelKind kind, const Rank& rank, const Partition& lambda) {
  if (!rank.admits(lambda))
    throw ConstraintViolation(to_string(kind) + " label (" + lambda.to_string() +
                              ") is zero at rank " + rank.to_string() + ": length " +
                              std::to_string(lambda.length()) + " > n - 1");
}

} // namespace

KVector verma_to_simple(const Nu& nu, const Rank& rank, const Partition& lambda) {
  require_nonzero(LabelKind::Verma, rank, lambda);
  KVector out(LabelKind::Simple, nu, rank);
  out.add(lambda, 1);
  if (auto next = successor(nu, lambda); next && rank.admits(*next))
    out.add(*next, 1);
  return out;
}

KVector simple_in_verma_basis(const Nu& nu, const Rank& rank, const Partition& lambda) {
  require_nonzero(LabelKind::Simple, rank, lambda);
  KVector out(LabelKind::Verma, nu, rank);
  if (is_trivial_class(nu, lambda)) {
    out.add(lambda, 1);
    return out;
  }
  if (rank.is_infinite())
    throw ConstraintViolation("simple_in_verma_basis: the Verma expansion of a chain member is "
                              "infinite at rank inf");
  bool started = false;
  int sign = 1;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (!started && !(mu == lambda))
      return true;
    started = true;
    if (!rank.admits(mu))
      return false;
    out.add(mu, sign);
    sign = -sign;
    return true;
  });
  return out;
}

SchurVector verma_character(const Nu&, const Rank& rank, const Partition& lambda,
                            int max_degree) {
  require_nonzero(LabelKind::Verma, rank, lambda);
  const auto seed = SchurVector::basis(lambda, max_degree, rank.character_length());
  SchurVector out(max_degree, rank.character_length());
  for (int m = 0; m + lambda.size() <= max_degree; ++m)
    out += pieri(m, seed);
  return out;
}

SchurVector simple_character(const Nu& nu, const Rank& rank, const Partition& lambda,
                             int max_degree) {
  require_nonzero(LabelKind::Simple, rank, lambda);
  SchurVector out(max_degree, rank.character_length());
  if (is_trivial_class(nu, lambda))
    return verma_character(nu, rank, lambda, max_degree);
  bool started = false;
  int sign = 1;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (!started && !(mu == lambda))
      return true;
    started = true;
    if (!rank.admits(mu) || mu.size() > max_degree)
      return false;
    auto ch = verma_character(nu, rank, mu, max_degree);
    if (sign > 0)
      out += ch;
    else
      out -= ch;
    sign = -sign;
    return true;
  });
  return out;
}

SchurVector polynomial_simple_character(const Nu& nu, const Rank& rank, const Partition& lambda,
                                        int max_degree) {
  require_nonzero(LabelKind::Simple, rank, lambda);
  if (nu.is_generic() || is_trivial_class(nu, lambda) || !(minimal_member(nu, lambda) == lambda))
    throw ConstraintViolation("(" + lambda.to_string() + ") is not the minimal member of a chain at nu=" +
                              nu.to_string());
  const Partition top = tilde(lambda, static_cast<int>(*nu.value()));
  SchurVector out(max_degree, rank.character_length());
  for (const auto& mu : remove_horizontal_strips(top))
    out.add(mu, 1);
  return out;
}

KVector dual_k(const KVector& v) {
  if (v.basis() != LabelKind::Simple)
    throw ConstraintViolation("dual_k is defined on the simple basis only");
  return v;
}

TransitionMatrix transition_matrix(const Nu& nu, const Rank& rank,
                                   const std::vector<Partition>& labels, LabelKind from) {
  TransitionMatrix out;
  out.labels = labels;
  const auto size = labels.size();
  out.entries.assign(size, std::vector<mpz_class>(size, 0));
  for (std::size_t col = 0; col < size; ++col) {
    const KVector image = from == LabelKind::Verma ? verma_to_simple(nu, rank, labels[col])
                                                   : simple_in_verma_basis(nu, rank, labels[col]);
    for (const auto& [mu, c] : image.terms()) {
      auto it = std::find(labels.begin(), labels.end(), mu);
      if (it == labels.end())
        throw ConstraintViolation("transition_matrix: label set is not closed under the map");
      out.entries[static_cast<std::size_t>(it - labels.begin())][col] = c;
    }
  }
  return out;
}

} // namespace swd
