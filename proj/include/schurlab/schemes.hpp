#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/groups.hpp"
#include "schurlab/srings.hpp"

namespace schurlab {

using Color = std::uint32_t;

class SchemeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when two pairs of the same color have different intersection counts.
class NotCoherentError : public std::runtime_error {
 public:
  NotCoherentError(Elem f1, Elem g1, Elem f2, Elem g2, Color i, Color j,
                   const std::string &what)
      : std::runtime_error(what), f1(f1), g1(g1), f2(f2), g2(g2), i(i), j(j)
  {
  }
  Elem f1, g1, f2, g2;
  Color i, j;
};

/**
 * Edge-colored complete digraph on the elements of a group.
 *
 * Convention: color(u, v) = c means v * u^-1 lies in basic set c, i.e. the
 * pair (u, x u) belongs to the basic relation R(X). The color matrix is
 * stored densely.
 */
class CayleyScheme {
 public:
  /// Validates the diagonal, surjectivity and transpose-closure invariants.
  CayleyScheme(GroupPtr group, std::vector<Color> colors);

  const GroupPtr &group() const { return group_; }
  std::uint32_t size() const { return n_; }
  std::size_t num_colors() const { return num_colors_; }
  Color color(Elem u, Elem v) const { return colors_[static_cast<std::size_t>(u) * n_ + v]; }
  /// Color i* of the reversed pairs.
  Color transpose_color(Color i) const { return transpose_.at(i); }
  const std::vector<Color> &colors() const { return colors_; }

  /// {w : color(v, w) = i}, sorted.
  std::vector<Elem> neighborhood(Elem v, Color i) const;

  /// One line per vertex with the space-separated colors of its row.
  std::string dump() const;

 private:
  GroupPtr group_;
  std::uint32_t n_;
  std::size_t num_colors_ = 0;
  std::vector<Color> colors_;
  std::vector<Color> transpose_;
};

CayleyScheme to_scheme(const SRing &s);

/// Intersection numbers q(i, j, k) = |{h : color(f, h) = i, color(h, g) = j}|
/// for color(f, g) = k. Throws NotCoherentError if they depend on (f, g).
///
/// With the color convention above, q(i, j, k) = p(j, i, k) for the S-ring
/// the scheme came from; both agree for commutative S-rings.
StructureTensor verify_scheme(const CayleyScheme &c);

}  // namespace schurlab
