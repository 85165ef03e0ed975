#include "swd/blocks.hpp"

#include <algorithm>
#include <charconv>

#include "swd/errors.hpp"

namespace swd {

Nu Nu::parse(std::string_view text) {
  if (text == "generic")
    return generic();
  long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw ParseError("nu must be 'generic' or an integer, got '" + std::string(text) + "'");
  return integer(value);
}

std::string Nu::to_string() const { return value_ ? std::to_string(*value_) : "generic"; }

CSequence c_sequence(const Nu& nu, const Partition& lambda, int depth) {
  if (depth < lambda.length() + 1)
    throw ConstraintViolation("c_sequence depth " + std::to_string(depth) +
                              " is below length + 1 for (" + lambda.to_string() + ")");
  CSequence seq;
  seq.nu = nu;
  seq.depth = depth;
  for (int i = 1; i < depth; ++i)
    seq.integer_entries.push_back(lambda[static_cast<std::size_t>(i - 1)] - i);
  if (nu.is_generic())
    seq.formal_shift = -static_cast<long>(lambda.size());
  else
    seq.integer_entries.push_back(*nu.value() - lambda.size());
  std::sort(seq.integer_entries.begin(), seq.integer_entries.end(), std::greater<>());
  return seq;
}

bool equivalent(const Nu& nu, const Partition& lambda, const Partition& mu) {
  const int depth = std::max(lambda.length(), mu.length()) + 2;
  auto a = c_sequence(nu, lambda, depth);
  auto b = c_sequence(nu, mu, depth);
  return a.formal_shift == b.formal_shift && a.integer_entries == b.integer_entries;
}

bool is_trivial_class(const Nu& nu, const Partition& lambda) {
  if (nu.is_generic())
    return true;
  const long head = *nu.value() - lambda.size();
  if (head <= -(lambda.length() + 1))
    return true; // collides with the tail entry -i at i = -head
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda[static_cast<std::size_t>(i - 1)] - i == head)
      return true;
  return false;
}

namespace {

// Takes `distinguished` out of the (conceptually infinite) sequence of lambda
// and reads the rest back as a diagram. The depth is large enough that both
// the distinguished entry and the nu entry sit inside the explicit prefix.
std::optional<Partition> reconstruct(long nu_value, const Partition& lambda, long distinguished) {
  const long head = nu_value - lambda.size();
  const long depth =
      std::max<long>({lambda.length() + 1, -distinguished + 1, head < 0 ? -head + 1 : 0});
  std::vector<long> entries{head};
  for (long i = 1; i <= depth; ++i)
    entries.push_back(lambda[static_cast<std::size_t>(i - 1)] - i);
  auto it = std::find(entries.begin(), entries.end(), distinguished);
  if (it == entries.end())
    return std::nullopt;
  entries.erase(it);
  std::sort(entries.begin(), entries.end(), std::greater<>());
  std::vector<int> parts;
  for (long i = 1; i <= depth; ++i) {
    const long e = entries[static_cast<std::size_t>(i - 1)];
    if (i < depth && e <= entries[static_cast<std::size_t>(i)])
      return std::nullopt; // repeated entry
    if (e + i < 0)
      return std::nullopt;
    parts.push_back(static_cast<int>(e + i));
  }
  Partition mu(std::move(parts));
  if (nu_value - mu.size() != distinguished)
    return std::nullopt;
  return mu;
}

} // namespace

void walk_class(const Nu& nu, const Partition& lambda,
                const std::function<bool(const Partition&)>& visit) {
  if (is_trivial_class(nu, lambda)) {
    visit(lambda);
    return;
  }
  const long nu_value = *nu.value();
  // The sequence's entries, in decreasing order, are the candidates for the
  // distinguished nu - |mu| slot; decreasing values mean increasing |mu|.
  long top = nu_value - lambda.size();
  if (lambda.length() > 0)
    top = std::max<long>(top, lambda[0] - 1);
  for (long value = top;; --value) {
    if (auto mu = reconstruct(nu_value, lambda, value))
      if (!visit(*mu))
        return;
  }
}

BlockClass block_class(const Nu& nu, const Partition& lambda, int count) {
  BlockClass out;
  out.kind = is_trivial_class(nu, lambda) ? BlockClass::Kind::Trivial : BlockClass::Kind::Chain;
  walk_class(nu, lambda, [&](const Partition& mu) {
    out.members.push_back(mu);
    return static_cast<int>(out.members.size()) < count;
  });
  return out;
}

std::vector<Partition> class_members_up_to_size(const Nu& nu, const Partition& lambda,
                                                int max_size) {
  std::vector<Partition> out;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (mu.size() > max_size)
      return false;
    out.push_back(mu);
    return true;
  });
  return out;
}

std::vector<Partition> class_members_up_to_length(const Nu& nu, const Partition& lambda,
                                                  int max_length) {
  std::vector<Partition> out;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (mu.length() > max_length)
      return false;
    out.push_back(mu);
    return true;
  });
  return out;
}

BlockClass class_from_core(int n, const Partition& mu, int count) {
  if (mu.size() != n)
    throw ConstraintViolation("class_from_core: |" + mu.to_string() + "| != " + std::to_string(n));
  std::vector<int> rest;
  if (mu.length() > 1)
    rest.assign(mu.parts().begin() + 1, mu.parts().end());
  return block_class(Nu::integer(n), Partition(std::move(rest)), count);
}

Partition minimal_member(const Nu& nu, const Partition& lambda) {
  Partition out;
  walk_class(nu, lambda, [&](const Partition& mu) {
    out = mu;
    return false;
  });
  return out;
}

std::optional<Partition> successor(const Nu& nu, const Partition& lambda) {
  if (is_trivial_class(nu, lambda))
    return std::nullopt;
  std::optional<Partition> out;
  bool seen = false;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (seen) {
      out = mu;
      return false;
    }
    seen = mu == lambda;
    return true;
  });
  return out;
}

std::optional<Partition> predecessor(const Nu& nu, const Partition& lambda) {
  if (is_trivial_class(nu, lambda))
    return std::nullopt;
  std::optional<Partition> previous;
  std::optional<Partition> out;
  walk_class(nu, lambda, [&](const Partition& mu) {
    if (mu == lambda) {
      out = previous;
      return false;
    }
    previous = mu;
    return true;
  });
  return out;
}

int fil_level_deligne(const Nu& nu, const Partition& lambda) {
  if (auto next = successor(nu, lambda))
    return next->length();
  return lambda.length();
}

} // namespace swd
