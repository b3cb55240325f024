#pragma once

// Small groups, brute-force oracles and random permutation groups shared by
// the unit tests and the acceptance suite.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "schurlab/autgrp.hpp"
#include "schurlab/groups.hpp"
#include "schurlab/schemes.hpp"
#include "schurlab/srings.hpp"

namespace fixtures {

using schurlab::Elem;
using schurlab::FiniteGroup;
using schurlab::GroupPtr;
using Table = std::vector<std::vector<Elem>>;

inline Table cyclic_table(std::uint32_t m)
{
  Table t(m, std::vector<Elem>(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      t[i][j] = (i + j) % m;
  return t;
}

/// (x1, y1)(x2, y2) = (x1 x2, y1 y2), element index x * |B| + y.
inline Table direct_product(const Table &a, const Table &b)
{
  const std::size_t na = a.size(), nb = b.size();
  Table t(na * nb, std::vector<Elem>(na * nb));
  for (std::size_t x1 = 0; x1 < na; ++x1)
    for (std::size_t y1 = 0; y1 < nb; ++y1)
      for (std::size_t x2 = 0; x2 < na; ++x2)
        for (std::size_t y2 = 0; y2 < nb; ++y2)
          t[x1 * nb + y1][x2 * nb + y2] = static_cast<Elem>(a[x1][x2] * nb + b[y1][y2]);
  return t;
}

/// Cayley table of the permutation group generated by `gens` (composition
/// left to right). Identity gets index 0, the rest follow in sorted order.
inline Table table_from_permutations(const std::vector<std::vector<Elem>> &gens)
{
  using Perm = std::vector<Elem>;
  const std::size_t deg = gens.front().size();
  Perm id(deg);
  std::iota(id.begin(), id.end(), 0);
  auto compose = [](const Perm &p, const Perm &q) {
    Perm r(p.size());
    for (std::size_t x = 0; x < p.size(); ++x)
      r[x] = q[p[x]];
    return r;
  };
  std::vector<Perm> elems{id};
  for (std::size_t done = 0; done < elems.size(); ++done)
    for (const auto &g : gens) {
      Perm next = compose(elems[done], g);
      if (std::find(elems.begin(), elems.end(), next) == elems.end())
        elems.push_back(next);
    }
  std::sort(elems.begin() + 1, elems.end());
  std::map<Perm, Elem> index;
  for (Elem i = 0; i < elems.size(); ++i)
    index[elems[i]] = i;
  Table t(elems.size(), std::vector<Elem>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < elems.size(); ++j)
      t[i][j] = index.at(compose(elems[i], elems[j]));
  return t;
}

inline Table klein_table() { return direct_product(cyclic_table(2), cyclic_table(2)); }
inline Table c2xc4_table() { return direct_product(cyclic_table(2), cyclic_table(4)); }
inline Table c2cubed_table() { return direct_product(klein_table(), cyclic_table(2)); }
inline Table s3_table() { return table_from_permutations({{1, 0, 2}, {1, 2, 0}}); }
inline Table d4_table() { return table_from_permutations({{1, 2, 3, 0}, {3, 2, 1, 0}}); }
inline Table s4_table() { return table_from_permutations({{1, 0, 2, 3}, {1, 2, 3, 0}}); }

/// Q8 = {+-1, +-i, +-j, +-k}, element 2u + s for unit u in {1, i, j, k}, sign s.
inline Table q8_table()
{
  // unit product u*v = sign * unit
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int neg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  Table t(8, std::vector<Elem>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int u = x / 2, v = y / 2;
      const int s = (x % 2) ^ (y % 2) ^ neg[u][v];
      t[x][y] = static_cast<Elem>(2 * unit[u][v] + s);
    }
  return t;
}

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

/// Every group of order <= 8 up to isomorphism.
inline std::vector<NamedGroup> small_groups()
{
  std::vector<NamedGroup> out;
  out.push_back({"C1", FiniteGroup::cyclic(1)});
  for (std::uint32_t m = 2; m <= 8; ++m)
    out.push_back({"C" + std::to_string(m), FiniteGroup::cyclic(m)});
  out.push_back({"C2xC2", FiniteGroup::from_table(klein_table())});
  out.push_back({"S3", FiniteGroup::from_table(s3_table())});
  out.push_back({"C2xC4", FiniteGroup::from_table(c2xc4_table())});
  out.push_back({"C2^3", FiniteGroup::from_table(c2cubed_table())});
  out.push_back({"D4", FiniteGroup::from_table(d4_table())});
  out.push_back({"Q8", FiniteGroup::from_table(q8_table())});
  return out;
}

/// Groups of order <= 24 used by the randomized Schur round trip.
inline std::vector<NamedGroup> medium_groups()
{
  auto out = small_groups();
  for (std::uint32_t m : {9u, 12u, 16u, 24u})
    out.push_back({"C" + std::to_string(m), FiniteGroup::cyclic(m)});
  out.push_back({"C3xC3", FiniteGroup::from_table(direct_product(cyclic_table(3), cyclic_table(3)))});
  out.push_back({"S3xC2", FiniteGroup::from_table(direct_product(s3_table(), cyclic_table(2)))});
  out.push_back({"S3xC3", FiniteGroup::from_table(direct_product(s3_table(), cyclic_table(3)))});
  out.push_back({"D4xC2", FiniteGroup::from_table(direct_product(d4_table(), cyclic_table(2)))});
  out.push_back({"Q8xC3", FiniteGroup::from_table(direct_product(q8_table(), cyclic_table(3)))});
  out.push_back({"S4", FiniteGroup::from_table(s4_table())});
  return out;
}

/// Full associativity check over all triples.
inline bool associative(const FiniteGroup &g)
{
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      for (Elem z = 0; z < g.order(); ++z)
        if (g.mul(g.mul(x, y), z) != g.mul(x, g.mul(y, z)))
          return false;
  return true;
}

/// Counts color-preserving permutations by enumerating all |G|! of them.
inline std::uint64_t brute_force_aut_count(const schurlab::CayleyScheme &c)
{
  const std::uint32_t n = c.size();
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (Elem u = 0; u < n && ok; ++u)
      for (Elem v = 0; v < n && ok; ++v)
        ok = c.color(p[u], p[v]) == c.color(u, v);
    count += ok;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

/// Partition of a group into singletons (the full group ring).
inline schurlab::Partition singleton_partition(const GroupPtr &g)
{
  std::vector<std::vector<Elem>> cells;
  for (Elem x = 0; x < g->order(); ++x)
    cells.push_back({x});
  return schurlab::verify_partition(g, cells);
}

/// {e}, G \ {e}.
inline schurlab::Partition trivial_partition(const GroupPtr &g)
{
  std::vector<Elem> rest;
  for (Elem x = 1; x < g->order(); ++x)
    rest.push_back(x);
  if (rest.empty())
    return schurlab::verify_partition(g, {{0}});
  return schurlab::verify_partition(g, {{0}, rest});
}

/// Permutation of G induced by a map on elements.
template <class F>
schurlab::Permutation element_map(const FiniteGroup &g, F f)
{
  std::vector<Elem> img(g.order());
  for (Elem x = 0; x < g.order(); ++x)
    img[x] = f(x);
  return schurlab::Permutation(std::move(img));
}

inline bool is_bijective(const schurlab::Permutation &p)
{
  std::vector<bool> seen(p.degree(), false);
  for (Elem x = 0; x < p.degree(); ++x) {
    if (seen[p[x]])
      return false;
    seen[p[x]] = true;
  }
  return true;
}

inline bool is_group_automorphism(const FiniteGroup &g, const schurlab::Permutation &p)
{
  if (!is_bijective(p))
    return false;
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y)
      if (p[g.mul(x, y)] != g.mul(p[x], p[y]))
        return false;
  return true;
}

/**
 * Random Gamma >= G_right: right translations plus a few random maps drawn
 * from power maps x -> x^k (kept when they are automorphisms), inner
 * automorphisms, and rarely an arbitrary permutation fixing e.
 */
inline schurlab::PermGroup random_gamma(const GroupPtr &g, std::mt19937 &rng)
{
  const FiniteGroup &grp = *g;
  std::vector<schurlab::Permutation> gens = schurlab::right_translations(grp).generators();
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> extra_count(0, 2);
  std::uniform_int_distribution<Elem> pick(0, grp.order() - 1);
  const int extras = extra_count(rng);
  for (int t = 0; t < extras; ++t) {
    const int which = kind(rng);
    if (which < 5) {
      const long long k = 1 + static_cast<long long>(pick(rng)) % std::max<Elem>(grp.order(), 1);
      std::vector<Elem> img(grp.order());
      for (Elem x = 0; x < grp.order(); ++x)
        img[x] = grp.pow(x, k);
      // x -> x^k is a bijection only when k is prime to the exponent
      std::vector<Elem> sorted = img;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        continue;
      schurlab::Permutation p(std::move(img));
      if (is_group_automorphism(grp, p))
        gens.push_back(p);
    } else if (which < 9) {
      const Elem s = pick(rng);
      gens.push_back(element_map(grp, [&](Elem x) { return grp.conj(x, s); }));
    } else if (grp.order() > 2) {
      std::vector<Elem> img(grp.order());
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin() + 1, img.end(), rng);
      gens.emplace_back(std::move(img));
    }
  }
  return schurlab::PermGroup(grp.order(), std::move(gens));
}

}  // namespace fixtures
