#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schurlab {

/// Dense element index. Index 0 is always the identity.
using Elem = std::uint32_t;

inline constexpr std::uint32_t kDefaultOrderCap = 2187;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GroupKind { metacyclic, cyclic, table };

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/**
 * A finite group on the carrier 0..order-1.
 *
 * Metacyclic groups M_{p^n} = <a, b | a^{p^{n-1}} = b^p = e, b^-1 a b = a^t>,
 * t = p^{n-2} + 1, store a^i b^j at index j * p^{n-1} + i, so elements are
 * ordered by (j, i). Cyclic groups store x^k at index k. Table groups keep
 * the caller's indexing.
 *
 * Instances are immutable and shared through GroupPtr.
 */
class FiniteGroup {
 public:
  static GroupPtr metacyclic(std::uint32_t p, std::uint32_t n,
                             std::uint32_t order_cap = kDefaultOrderCap);
  static GroupPtr cyclic(std::uint32_t m,
                         std::uint32_t order_cap = kDefaultOrderCap);
  /// Validates identity, inverses and associativity. Optional names are
  /// used as element tokens; otherwise elements print as e, g1, g2, ...
  static GroupPtr from_table(const std::vector<std::vector<Elem>> &table,
                             std::vector<std::string> names = {},
                             std::uint32_t order_cap = kDefaultOrderCap);

  std::uint32_t order() const { return order_; }
  GroupKind kind() const { return kind_; }
  Elem identity() const { return 0; }

  Elem mul(Elem x, Elem y) const;
  Elem inv(Elem x) const { return inv_[x]; }
  Elem pow(Elem x, long long k) const;
  std::uint32_t element_order(Elem x) const;
  /// Conjugate g^-1 x g.
  Elem conj(Elem x, Elem g) const { return mul(mul(inv(g), x), g); }

  /// Small generating set: {a, b}, {x}, or a greedy set for tables.
  const std::vector<Elem> &generators() const { return generators_; }

  // Metacyclic accessors; throw GroupError for other kinds.
  std::uint32_t prime() const;
  std::uint32_t exponent() const;
  /// Order of a, p^{n-1}.
  std::uint32_t a_order() const;
  Elem element(long long i, long long j) const;
  std::pair<std::uint32_t, std::uint32_t> exponents(Elem x) const;

  std::string format(Elem x) const;
  Elem parse(std::string_view token) const;
  std::vector<Elem> parse_list(std::string_view tokens) const;

  /// Specifier text, e.g. "metacyclic:p=3,n=4".
  std::string spec() const;
  /// Short display name, e.g. "M_81" or "C_5".
  std::string name() const;

 private:
  FiniteGroup() = default;

  void build_inverses();
  void materialize_table();
  void choose_generators();
  void check_light_associativity() const;

  GroupKind kind_ = GroupKind::table;
  std::uint32_t order_ = 1;

  // metacyclic parameters
  std::uint32_t p_ = 0;
  std::uint32_t n_ = 0;
  std::uint32_t m_ = 1;              // p^{n-1}
  std::uint32_t twist_ = 1;          // t = p^{n-2} + 1
  std::vector<std::uint32_t> spow_;  // s^j mod m, s = t^{-1}

  std::vector<Elem> table_;
  std::vector<Elem> inv_;
  std::vector<Elem> generators_;
  std::vector<std::string> names_;
};

/// Parses `metacyclic:p=<int>,n=<int>`, `cyclic:m=<int>` or `table:<path>`.
GroupPtr parse_group_spec(std::string_view spec,
                          std::uint32_t order_cap = kDefaultOrderCap);

/// Reads a whitespace-separated integer multiplication table.
std::vector<std::vector<Elem>> read_table_file(const std::string &path);

class Subgroup {
 public:
  Subgroup(GroupPtr parent, std::vector<Elem> members);

  const GroupPtr &parent() const { return parent_; }
  const std::vector<Elem> &members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const;
  bool is_subset_of(const Subgroup &other) const;

  bool operator==(const Subgroup &other) const {
    return members_ == other.members_;
  }

 private:
  GroupPtr parent_;
  std::vector<Elem> members_;
  std::vector<bool> mask_;
};

Subgroup subgroup_generated(const GroupPtr &g, const std::vector<Elem> &gens);
Subgroup whole_group(const GroupPtr &g);
Subgroup trivial_subgroup(const GroupPtr &g);

/// Left cosets xH, each sorted, ordered by smallest member.
std::vector<std::vector<Elem>> left_cosets(const GroupPtr &g, const Subgroup &h);
/// Right cosets Hx, same ordering.
std::vector<std::vector<Elem>> right_cosets(const GroupPtr &g, const Subgroup &h);
bool is_normal(const GroupPtr &g, const Subgroup &h);
/// True iff L is a normal subgroup of U.
bool is_normal_in(const Subgroup &upper, const Subgroup &lower);

/// Canonical homomorphism U -> U/L. Coset 0 is L itself; the remaining
/// cosets are ordered by smallest member and printed as "[rep]".
class QuotientMap {
 public:
  QuotientMap(GroupPtr source, Subgroup upper, Subgroup lower);

  const GroupPtr &source() const { return source_; }
  const GroupPtr &target() const { return target_; }
  const Subgroup &upper() const { return upper_; }
  const Subgroup &lower() const { return lower_; }

  /// Coset index of x; throws GroupError if x is outside U.
  Elem project(Elem x) const;
  const std::vector<Elem> &representatives() const { return reps_; }

 private:
  GroupPtr source_;
  Subgroup upper_;
  Subgroup lower_;
  GroupPtr target_;
  std::vector<std::int64_t> projection_;
  std::vector<Elem> reps_;
};

QuotientMap quotient(const GroupPtr &g, const Subgroup &upper, const Subgroup &lower);

}  // namespace schurlab
