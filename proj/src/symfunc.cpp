#include "swd/symfunc.hpp"

#include <algorithm>
#include <functional>

namespace swd {

SchurVector::SchurVector(int max_degree, std::optional<int> max_length)
    : max_degree_(max_degree), max_length_(max_length) {}

SchurVector SchurVector::basis(const Partition& lambda, int max_degree,
                               std::optional<int> max_length) {
  SchurVector v(max_degree, max_length);
  v.add(lambda, 1);
  return v;
}

bool SchurVector::admits(const Partition& lambda) const {
  return lambda.size() <= max_degree_ && (!max_length_ || lambda.length() <= *max_length_);
}

mpz_class SchurVector::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void SchurVector::add(const Partition& lambda, const mpz_class& c) {
  if (c == 0 || !admits(lambda))
    return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

SchurVector SchurVector::truncated(int max_degree, std::optional<int> max_length) const {
  SchurVector out(std::min(max_degree, max_degree_),
                  !max_length   ? max_length_
                  : !max_length_ ? max_length
                                 : std::optional<int>(std::min(*max_length, *max_length_)));
  for (const auto& [lambda, c] : terms_)
    out.add(lambda, c);
  return out;
}

SchurVector& SchurVector::operator+=(const SchurVector& other) {
  for (const auto& [lambda, c] : other.terms_)
    add(lambda, c);
  return *this;
}

SchurVector& SchurVector::operator-=(const SchurVector& other) {
  for (const auto& [lambda, c] : other.terms_)
    add(lambda, -c);
  return *this;
}

SchurVector& SchurVector::operator*=(const mpz_class& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [lambda, c] : terms_)
    c *= scalar;
  return *this;
}

SchurVector operator+(SchurVector a, const SchurVector& b) { return a += b; }
SchurVector operator-(SchurVector a, const SchurVector& b) { return a -= b; }

SchurVector pieri(int m, const SchurVector& v) {
  SchurVector out(v.max_degree(), v.max_length());
  for (const auto& [lambda, c] : v.terms()) {
    if (lambda.size() + m > v.max_degree())
      continue;
    for (const auto& grown : add_horizontal_strip(lambda, m))
      out.add(grown, c);
  }
  return out;
}

namespace {

// Builds LR tableaux of shape nu/lambda and content mu one label at a time.
// Label k (0-based) occupies a horizontal strip of mu[k] boxes; the reverse
// reading word stays a lattice word iff, for every row r, the number of
// k-labels in rows 0..r does not exceed the number of (k-1)-labels in rows
// 0..r-1.
class LrEnumerator {
public:
  LrEnumerator(const Partition& lambda, const Partition& mu, std::optional<int> max_length)
      : mu_(mu), max_rows_(max_length.value_or(lambda.length() + mu.length())),
        shape_(lambda.parts()) {
    shape_.resize(static_cast<std::size_t>(lambda.length() + mu.length()), 0);
    counts_.assign(shape_.size(), std::vector<int>(static_cast<std::size_t>(mu.length()), 0));
  }

  std::map<Partition, mpz_class> run() {
    if (static_cast<int>(std::count_if(shape_.begin(), shape_.end(), [](int p) { return p > 0; })) >
        max_rows_)
      return {};
    place_label(0);
    return std::move(result_);
  }

private:
  void place_label(int k) {
    if (k == mu_.length()) {
      result_[Partition(shape_)] += 1;
      return;
    }
    old_shape_.push_back(shape_);
    place_row(k, 0, mu_[static_cast<std::size_t>(k)], 0, 0);
    old_shape_.pop_back();
  }

  // running_k: k-labels placed in rows < row; running_prev: (k-1)-labels in rows < row.
  void place_row(int k, int row, int left, int running_k, int running_prev) {
    if (left == 0) {
      place_label(k + 1);
      return;
    }
    if (row >= static_cast<int>(shape_.size()) || row >= max_rows_)
      return;
    const auto& old = old_shape_.back();
    const auto r = static_cast<std::size_t>(row);
    int cap = row == 0 ? left : std::min(left, old[r - 1] - old[r]);
    if (k > 0)
      cap = std::min(cap, running_prev - running_k);
    for (int add = cap; add >= 0; --add) {
      shape_[r] += add;
      counts_[r][static_cast<std::size_t>(k)] = add;
      const int prev_here = k > 0 ? counts_[r][static_cast<std::size_t>(k - 1)] : 0;
      place_row(k, row + 1, left - add, running_k + add, running_prev + prev_here);
      shape_[r] -= add;
      counts_[r][static_cast<std::size_t>(k)] = 0;
    }
  }

  const Partition& mu_;
  int max_rows_;
  std::vector<int> shape_;
  std::vector<std::vector<int>> old_shape_;
  std::vector<std::vector<int>> counts_;
  std::map<Partition, mpz_class> result_;
};

} // namespace

std::map<Partition, mpz_class> lr_expand(const Partition& lambda, const Partition& mu,
                                         std::optional<int> max_length) {
  return LrEnumerator(lambda, mu, max_length).run();
}

SchurVector lr_multiply(const SchurVector& a, const SchurVector& b) {
  const int degree = std::min(a.max_degree(), b.max_degree());
  std::optional<int> length = a.max_length();
  if (b.max_length())
    length = length ? std::min(*length, *b.max_length()) : b.max_length();
  SchurVector out(degree, length);
  for (const auto& [lambda, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      if (lambda.size() + mu.size() > degree)
        continue;
      for (const auto& [nu, c] : lr_expand(lambda, mu, length))
        out.add(nu, ca * cb * c);
    }
  return out;
}

SchurVector branch_remove_variable(const SchurVector& v) {
  std::optional<int> length = v.max_length();
  if (length)
    length = std::max(0, *length - 1);
  SchurVector out(v.max_degree(), length);
  for (const auto& [lambda, c] : v.terms())
    for (const auto& mu : remove_horizontal_strips(lambda))
      out.add(mu, c);
  return out;
}

mpz_class principal_specialize(const SchurVector& v, int N) {
  mpz_class total = 0;
  for (const auto& [lambda, c] : v.terms())
    total += c * dim_schur_gl(lambda, N);
  return total;
}

} // namespace swd
