#pragma once

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "schurlab/groups.hpp"
#include "schurlab/schemes.hpp"

namespace schurlab {

using BigInt = boost::multiprecision::cpp_int;

/// Permutation of 0..n-1 stored as an image array; p[x] is the image of x.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::uint32_t degree);  // identity
  explicit Permutation(std::vector<Elem> images);

  std::uint32_t degree() const { return static_cast<std::uint32_t>(images_.size()); }
  Elem operator[](Elem x) const { return images_[x]; }
  const std::vector<Elem> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Apply *this first, then other: (p * q)[x] = q[p[x]].
  Permutation operator*(const Permutation &other) const;
  bool operator==(const Permutation &other) const = default;
  auto operator<=>(const Permutation &other) const = default;

  /// Space-separated images.
  std::string to_string() const;

 private:
  std::vector<Elem> images_;
};

/**
 * Permutation group given by generators, with a stabilizer chain built by
 * the deterministic Schreier-Sims algorithm. The base starts with the given
 * prefix (default {0}); further base points are the first points moved by
 * sifted residues.
 */
class PermGroup {
 public:
  explicit PermGroup(std::uint32_t degree, std::vector<Permutation> generators = {},
                     std::vector<Elem> base_prefix = {0});

  std::uint32_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  std::vector<Elem> base() const;
  std::vector<std::size_t> transversal_sizes() const;
  BigInt order() const;
  bool contains(const Permutation &g) const;
  /// Generators of the subgroup fixing the first `depth` base points.
  std::vector<Permutation> strong_generators(std::size_t depth) const;

 private:
  struct Level {
    Elem base_point;
    std::vector<Permutation> gens;
    std::vector<Elem> orbit;
    std::vector<std::int32_t> orbit_index;  // per point, -1 if not in orbit
    std::vector<Permutation> reps;          // reps[t] maps base_point to orbit[t]
    std::vector<Permutation> reps_inv;
    std::vector<std::size_t> applied;       // gens already applied per orbit point
  };

  Level make_level(Elem base_point) const;
  void add_generator(std::size_t level, const Permutation &g);
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

  std::uint32_t degree_;
  std::vector<Permutation> generators_;
  std::deque<Level> levels_;
};

/// Partition of the point set into equal-size cells.
class BlockSystem {
 public:
  BlockSystem(std::uint32_t degree, std::vector<std::vector<Elem>> blocks);
  const std::vector<std::vector<Elem>> &blocks() const { return blocks_; }
  std::size_t block_of(Elem x) const { return block_of_[x]; }

 private:
  std::vector<std::vector<Elem>> blocks_;
  std::vector<std::size_t> block_of_;
};

PermGroup right_translations(const FiniteGroup &g);

struct SearchOptions {
  /// Explore sibling branches of each search level concurrently. Results are
  /// merged in sequential order, so the output matches the sequential run.
  bool parallel = false;
};

/// Color-preserving automorphisms fixing the identity, i.e. Aut(C)_e.
PermGroup identity_stabilizer_automorphisms(const CayleyScheme &c, SearchOptions opts = {});

/// Full automorphism group of the scheme: right translations plus Aut(C)_e.
PermGroup scheme_automorphisms(const CayleyScheme &c, SearchOptions opts = {});

/// True iff p preserves every color.
bool is_scheme_automorphism(const CayleyScheme &c, const Permutation &p);

PermGroup stabilizer(const PermGroup &g, Elem x);
std::vector<Elem> orbit(const PermGroup &g, Elem x);
/// Orbits ordered by smallest point, each sorted.
std::vector<std::vector<Elem>> orbits(const PermGroup &g);
bool is_block_system(const PermGroup &g, const BlockSystem &blocks);
/// Validates the partition first; throws std::invalid_argument if malformed.
bool is_block_system(const PermGroup &g, const std::vector<std::vector<Elem>> &blocks);

}  // namespace schurlab
