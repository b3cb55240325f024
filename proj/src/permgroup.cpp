#include <algorithm>
#include <numeric>
#include <sstream>

#include "schurlab/autgrp.hpp"

namespace schurlab {

Permutation::Permutation(std::uint32_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Elem{0});
}

Permutation::Permutation(std::vector<Elem> images) : images_(std::move(images))
{
  std::vector<bool> hit(images_.size(), false);
  for (Elem x : images_) {
    if (x >= images_.size() || hit[x])
      throw std::invalid_argument("image array is not a permutation");
    hit[x] = true;
  }
}

bool Permutation::is_identity() const
{
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[images_[x]] = static_cast<Elem>(x);
  return out;
}

Permutation Permutation::operator*(const Permutation &other) const
{
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t x = 0; x < images_.size(); ++x)
    out.images_[x] = other.images_[images_[x]];
  return out;
}

std::string Permutation::to_string() const
{
  std::ostringstream out;
  for (std::size_t x = 0; x < images_.size(); ++x)
    out << (x ? " " : "") << images_[x];
  return out.str();
}

PermGroup::PermGroup(std::uint32_t degree, std::vector<Permutation> generators,
                     std::vector<Elem> base_prefix)
    : degree_(degree), generators_(std::move(generators))
{
  for (const auto &g : generators_)
    if (g.degree() != degree_)
      throw std::invalid_argument("generator degree does not match group degree");
  for (Elem b : base_prefix) {
    if (b >= degree_)
      throw std::invalid_argument("base point out of range");
    bool dup = std::any_of(levels_.begin(), levels_.end(),
                           [&](const Level &l) { return l.base_point == b; });
    if (!dup)
      levels_.push_back(make_level(b));
  }
  for (const auto &g : generators_) {
    if (g.is_identity())
      continue;
    auto [h, depth] = sift(g, 0);
    (void)depth;
    if (!h.is_identity())
      add_generator(0, h);
  }
}

PermGroup::Level PermGroup::make_level(Elem base_point) const
{
  Level l;
  l.base_point = base_point;
  l.orbit = {base_point};
  l.orbit_index.assign(degree_, -1);
  l.orbit_index[base_point] = 0;
  l.reps = {Permutation(degree_)};
  l.reps_inv = {Permutation(degree_)};
  l.applied = {0};
  return l;
}

std::pair<Permutation, std::size_t> PermGroup::sift(Permutation g, std::size_t from) const
{
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level &level = levels_[l];
    const std::int32_t t = level.orbit_index[g[level.base_point]];
    if (t < 0)
      return {std::move(g), l};
    g = g * level.reps_inv[static_cast<std::size_t>(t)];
  }
  return {std::move(g), levels_.size()};
}

// Knuth's incremental Schreier-Sims: every pair (orbit point, generator) of
// a level yields one Schreier generator, sifted into the next level.
void PermGroup::add_generator(std::size_t i, const Permutation &g)
{
  if (i == levels_.size()) {
    Elem moved = 0;
    while (g[moved] == moved)
      ++moved;
    levels_.push_back(make_level(moved));
  }
  Level &level = levels_[i];  // deque references survive push_back
  level.gens.push_back(g);

  for (std::size_t t = 0; t < level.orbit.size(); ++t) {
    while (level.applied[t] < level.gens.size()) {
      const Permutation s = level.gens[level.applied[t]++];
      const Elem beta = level.orbit[t];
      const Elem gamma = s[beta];
      if (level.orbit_index[gamma] < 0) {
        level.orbit_index[gamma] = static_cast<std::int32_t>(level.orbit.size());
        level.orbit.push_back(gamma);
        Permutation rep = level.reps[t] * s;
        level.reps_inv.push_back(rep.inverse());
        level.reps.push_back(std::move(rep));
        level.applied.push_back(0);
        continue;
      }
      const auto u = static_cast<std::size_t>(level.orbit_index[gamma]);
      Permutation schreier = level.reps[t] * s * level.reps_inv[u];
      if (schreier.is_identity())
        continue;
      auto [h, depth] = sift(std::move(schreier), i + 1);
      (void)depth;
      if (!h.is_identity())
        add_generator(i + 1, h);
    }
  }
}

std::vector<Elem> PermGroup::base() const
{
  std::vector<Elem> out;
  for (const auto &l : levels_)
    out.push_back(l.base_point);
  return out;
}

std::vector<std::size_t> PermGroup::transversal_sizes() const
{
  std::vector<std::size_t> out;
  for (const auto &l : levels_)
    out.push_back(l.orbit.size());
  return out;
}

BigInt PermGroup::order() const
{
  BigInt result = 1;
  for (const auto &l : levels_)
    result *= l.orbit.size();
  return result;
}

bool PermGroup::contains(const Permutation &g) const
{
  if (g.degree() != degree_)
    return false;
  return sift(g, 0).first.is_identity();
}

std::vector<Permutation> PermGroup::strong_generators(std::size_t depth) const
{
  if (depth >= levels_.size())
    return {};
  return levels_[depth].gens;
}

BlockSystem::BlockSystem(std::uint32_t degree, std::vector<std::vector<Elem>> blocks)
    : blocks_(std::move(blocks)), block_of_(degree, 0)
{
  std::vector<bool> seen(degree, false);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty() || blocks_[b].size() != blocks_.front().size())
      throw std::invalid_argument("blocks must be nonempty and of equal size");
    for (Elem x : blocks_[b]) {
      if (x >= degree || seen[x])
        throw std::invalid_argument("blocks do not partition the point set");
      seen[x] = true;
      block_of_[x] = b;
      ++covered;
    }
  }
  if (covered != degree)
    throw std::invalid_argument("blocks do not cover the point set");
}

PermGroup right_translations(const FiniteGroup &g)
{
  std::vector<Permutation> gens;
  for (Elem s : g.generators()) {
    std::vector<Elem> images(g.order());
    for (Elem x = 0; x < g.order(); ++x)
      images[x] = g.mul(x, s);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(g.order(), std::move(gens));
}

PermGroup stabilizer(const PermGroup &g, Elem x)
{
  PermGroup rebased(g.degree(), g.generators(), {x});
  return PermGroup(g.degree(), rebased.strong_generators(1));
}

std::vector<Elem> orbit(const PermGroup &g, Elem x)
{
  std::vector<bool> seen(g.degree(), false);
  std::vector<Elem> out{x};
  seen[x] = true;
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto &s : g.generators()) {
      Elem y = s[out[head]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Elem>> orbits(const PermGroup &g)
{
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < g.degree(); ++x) {
    if (seen[x])
      continue;
    auto o = orbit(g, x);
    for (Elem y : o)
      seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

bool is_block_system(const PermGroup &g, const BlockSystem &blocks)
{
  for (const auto &s : g.generators()) {
    for (const auto &block : blocks.blocks()) {
      const std::size_t target = blocks.block_of(s[block.front()]);
      for (Elem x : block)
        if (blocks.block_of(s[x]) != target)
          return false;
    }
  }
  return true;
}

bool is_block_system(const PermGroup &g, const std::vector<std::vector<Elem>> &blocks)
{
  return is_block_system(g, BlockSystem(g.degree(), blocks));
}

}  // namespace schurlab
