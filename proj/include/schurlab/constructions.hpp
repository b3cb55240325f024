#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "schurlab/groups.hpp"
#include "schurlab/srings.hpp"

namespace schurlab {

/// The two partition families over M_{3^n}: the n = 3 one built from the
/// subgroup <a^3 b>, and the n >= 4 one built from the cosets of H = <c> x <b>.
struct PaperFamily {
  enum class Name { m27, m3n };
  Name name;
  std::uint32_t n;

  std::size_t expected_class_count() const;
  /// Largest X_k / Y_k index, (3^{n-3} - 1) / 2.
  std::uint32_t max_k() const;
  /// Admissible T_j indices: 2 <= j <= (3^{n-2} - 1) / 2, j not divisible by 3.
  std::vector<std::uint32_t> t_indices() const;
};

/// Z_0 = {e}, Z_1 = U \ {e} with U = <a^3 b>, Z_2 as listed below, Z_3 the rest.
Partition m27_partition(std::uint32_t order_cap = kDefaultOrderCap);
/// U = <a^3 b> in M_27.
Subgroup m27_subgroup_u(const GroupPtr &g);

/// Classes Z_0..Z_5, then X_1, Y_1, X_2, Y_2, ..., then T_j ascending.
Partition m3n_partition(std::uint32_t n, std::uint32_t order_cap = kDefaultOrderCap);

struct M3nSubgroups {
  Subgroup a;  // <a>
  Subgroup b;  // <b>
  Subgroup c;  // <c>, c = a^{3^{n-2}}
  Subgroup h;  // C x B
};
M3nSubgroups m3n_subgroups(const GroupPtr &g);

}  // namespace schurlab
