#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "swd/partition.hpp"

namespace swd {

/// The interpolation parameter: a non-negative integer, or a symbol standing
/// for every value outside Z_+ (negative integers included), all of which give
/// identical label combinatorics.
class Nu {
public:
  static Nu generic() { return Nu{}; }
  /// Negative values collapse to generic.
  static Nu integer(long value) { return value < 0 ? Nu{} : Nu{value}; }
  /// "generic" or a decimal integer.
  static Nu parse(std::string_view text);

  bool is_generic() const { return !value_.has_value(); }
  const std::optional<long>& value() const { return value_; }
  std::string to_string() const;

  friend bool operator==(const Nu&, const Nu&) = default;

private:
  Nu() = default;
  explicit Nu(long v) : value_(v) {}
  std::optional<long> value_;
};

/// The multiset {nu - |lambda|} u {lambda_i - i : 1 <= i < depth}, depth entries in all.
///
/// For generic nu the first entry is kept symbolically as nu + formal_shift;
/// integer_entries then holds only the lambda_i - i. Entries are sorted in
/// decreasing order.
struct CSequence {
  Nu nu = Nu::generic();
  std::optional<long> formal_shift;
  std::vector<long> integer_entries;
  int depth = 0;

  friend bool operator==(const CSequence&, const CSequence&) = default;
};

/// A nu-equivalence class. Trivial classes hold their single member; chains
/// hold a finite prefix of the infinite increasing sequence of members.
struct BlockClass {
  enum class Kind { Trivial, Chain };
  Kind kind = Kind::Trivial;
  std::vector<Partition> members;

  friend bool operator==(const BlockClass&, const BlockClass&) = default;
};

CSequence c_sequence(const Nu& nu, const Partition& lambda, int depth);

bool equivalent(const Nu& nu, const Partition& lambda, const Partition& mu);

/// True when lambda is alone in its class: always for generic nu, and for
/// integer nu exactly when nu - |lambda| repeats one of the lambda_i - i.
bool is_trivial_class(const Nu& nu, const Partition& lambda);

/// Walks the class of lambda in increasing size, calling visit on each member
/// until it returns false. For a trivial class visit sees lambda once.
void walk_class(const Nu& nu, const Partition& lambda,
                const std::function<bool(const Partition&)>& visit);

/// The first `count` members of lambda's class.
BlockClass block_class(const Nu& nu, const Partition& lambda, int count);

/// Members of lambda's class with |member| <= max_size.
std::vector<Partition> class_members_up_to_size(const Nu& nu, const Partition& lambda,
                                                int max_size);

/// Members of lambda's class with length <= max_length (a finite prefix).
std::vector<Partition> class_members_up_to_length(const Nu& nu, const Partition& lambda,
                                                  int max_length);

/// The chain whose minimal member lambda0 satisfies tilde(lambda0, n) == mu.
BlockClass class_from_core(int n, const Partition& mu, int count);

Partition minimal_member(const Nu& nu, const Partition& lambda);
std::optional<Partition> successor(const Nu& nu, const Partition& lambda);
std::optional<Partition> predecessor(const Nu& nu, const Partition& lambda);

/// Least k with L(lambda) in Fil_k of the Deligne category.
int fil_level_deligne(const Nu& nu, const Partition& lambda);

} // namespace swd
