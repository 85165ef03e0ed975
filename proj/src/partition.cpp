#include "swd/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>

#include "swd/errors.hpp"

namespace swd {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0)
    parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ConstraintViolation("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ConstraintViolation("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.size_ <=> b.size_; c != 0)
    return c;
  // Reverse lexicographic within a degree.
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(),
                                                a.parts_.end());
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  std::vector<int> parts;
  if (text.empty())
    return Partition{};
  while (true) {
    auto comma = text.find(',');
    auto token = trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw ParseError("malformed partition '" + std::string(text) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  try {
    return Partition(std::move(parts));
  } catch (const ConstraintViolation& e) {
    throw ParseError(e.what());
  }
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length())
    return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu[i] > lambda[i])
      return false;
  return true;
}

Partition tilde(const Partition& lambda, int n) {
  if (lambda[0] + lambda.size() > n)
    throw ConstraintViolation("tilde(" + lambda.to_string() + ", " + std::to_string(n) +
                              "): first row " + std::to_string(n - lambda.size()) +
                              " would be shorter than the second");
  std::vector<int> parts{n - lambda.size()};
  parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
  return Partition(std::move(parts));
}

namespace {

bool larger_first(const Partition& a, const Partition& b) {
  if (a.size() != b.size())
    return a.size() > b.size();
  return a.parts() > b.parts();
}

} // namespace

std::vector<Partition> remove_horizontal_strips(const Partition& lambda) {
  std::vector<Partition> out;
  std::vector<int> mu(lambda.length());
  std::function<void(int)> rec = [&](int row) {
    if (row == lambda.length()) {
      out.emplace_back(mu);
      return;
    }
    for (int v = lambda[row]; v >= lambda[row + 1]; --v) {
      mu[row] = v;
      rec(row + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), larger_first);
  return out;
}

std::vector<Partition> add_horizontal_strip(const Partition& lambda, int m) {
  std::vector<Partition> out;
  if (m < 0)
    return out;
  const int rows = lambda.length() + 1;
  std::vector<int> grown(rows);
  std::function<void(int, int)> rec = [&](int row, int left) {
    if (row == rows) {
      if (left == 0)
        out.emplace_back(grown);
      return;
    }
    const int cap = row == 0 ? left : std::min(left, lambda[row - 1] - lambda[row]);
    for (int add = cap; add >= 0; --add) {
      grown[row] = lambda[row] + add;
      rec(row + 1, left - add);
    }
  };
  rec(0, m);
  std::sort(out.begin(), out.end(), larger_first);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> cols(lambda[0], 0);
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      ++cols[c];
  return Partition(std::move(cols));
}

mpz_class factorial(int n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

mpz_class hook_product(const Partition& lambda) {
  const Partition cols = conjugate(lambda);
  mpz_class prod = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      prod *= (lambda[r] - c - 1) + (cols[c] - r - 1) + 1;
  return prod;
}

} // namespace

mpz_class dim_symmetric_group_irrep(const Partition& lambda) {
  mpz_class out = factorial(lambda.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), hook_product(lambda).get_mpz_t());
  return out;
}

mpz_class dim_schur_gl(const Partition& lambda, int N) {
  if (lambda.length() > N)
    return 0;
  mpz_class num = 1;
  for (int r = 0; r < lambda.length(); ++r)
    for (int c = 0; c < lambda[r]; ++c)
      num *= N + c - r;
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), hook_product(lambda).get_mpz_t());
  return num;
}

std::vector<Partition> enumerate_partitions(int d, std::optional<int> max_length) {
  std::vector<Partition> out;
  if (d < 0)
    return out;
  std::vector<int> parts;
  const int len_cap = max_length.value_or(d);
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.emplace_back(parts);
      return;
    }
    if (static_cast<int>(parts.size()) == len_cap)
      return;
    for (int p = std::min(left, max_part); p >= 1; --p) {
      parts.push_back(p);
      rec(left - p, p);
      parts.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, std::optional<int> max_length) {
  std::vector<Partition> out;
  for (int d = 0; d <= max_size; ++d) {
    auto layer = enumerate_partitions(d, max_length);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

} // namespace swd
