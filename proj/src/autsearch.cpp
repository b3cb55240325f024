// Automorphism search for Cayley schemes by individualization and refinement.

#include <algorithm>
#include <deque>
#include <future>
#include <numeric>
#include <optional>
#include <thread>

#include "schurlab/autgrp.hpp"

namespace schurlab {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v)
{
  // splitmix64 finalizer over the running hash
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

/// Ordered partition of the vertex set. Cells are identified by their start
/// position in `order`, which makes every structural decision independent of
/// vertex labels.
struct OrderedPartition {
  std::vector<Elem> order;
  std::vector<std::uint32_t> cell_of;   // vertex -> cell start
  std::vector<std::uint32_t> cell_end;  // cell start -> one past its end
  std::uint32_t num_cells = 0;
  std::uint64_t trace = 0;

  bool discrete() const { return num_cells == order.size(); }
};

class Refiner {
 public:
  explicit Refiner(const CayleyScheme &c)
      : c_(c), n_(c.size()), r_(c.num_colors()), keys_(static_cast<std::size_t>(n_) * r_)
  {
  }

  OrderedPartition unit() const
  {
    OrderedPartition p;
    p.order.resize(n_);
    std::iota(p.order.begin(), p.order.end(), Elem{0});
    p.cell_of.assign(n_, 0);
    p.cell_end.assign(n_, 0);
    if (n_ > 0) {
      p.cell_end[0] = n_;
      p.num_cells = 1;
    }
    return p;
  }

  OrderedPartition individualize(const OrderedPartition &parent, Elem v)
  {
    OrderedPartition p = parent;
    const std::uint32_t start = p.cell_of[v];
    const std::uint32_t end = p.cell_end[start];
    p.trace = mix(p.trace, 0x1000000ULL + start);
    if (end - start > 1) {
      auto it = std::find(p.order.begin() + start, p.order.begin() + end, v);
      std::iter_swap(p.order.begin() + start, it);
      p.cell_end[start] = start + 1;
      p.cell_end[start + 1] = end;
      for (std::uint32_t q = start + 1; q < end; ++q)
        p.cell_of[p.order[q]] = start + 1;
      ++p.num_cells;
    }
    refine(p, start);
    return p;
  }

 private:
  // Splits cells by per-color counts into each splitter cell until stable.
  void refine(OrderedPartition &p, std::uint32_t first_splitter)
  {
    std::deque<std::uint32_t> queue{first_splitter};
    std::vector<bool> queued(n_, false);
    queued[first_splitter] = true;
    std::vector<Elem> splitter;

    while (!queue.empty() && !p.discrete()) {
      const std::uint32_t s = queue.front();
      queue.pop_front();
      queued[s] = false;
      splitter.assign(p.order.begin() + s, p.order.begin() + p.cell_end[s]);
      p.trace = mix(p.trace, 0x2000000ULL + s);

      for (std::uint32_t start = 0; start < n_;) {
        const std::uint32_t end = p.cell_end[start];
        if (end - start > 1)
          split_cell(p, start, end, splitter, queue, queued);
        start = end;
      }
    }
  }

  void split_cell(OrderedPartition &p, std::uint32_t start, std::uint32_t end,
                  const std::vector<Elem> &splitter, std::deque<std::uint32_t> &queue,
                  std::vector<bool> &queued)
  {
    for (std::uint32_t q = start; q < end; ++q) {
      const Elem v = p.order[q];
      std::uint32_t *key = &keys_[static_cast<std::size_t>(v) * r_];
      std::fill(key, key + r_, 0);
      for (Elem w : splitter)
        ++key[c_.color(v, w)];
    }
    auto key_of = [&](Elem v) { return &keys_[static_cast<std::size_t>(v) * r_]; };
    auto less = [&](Elem a, Elem b) {
      const std::uint32_t *ka = key_of(a);
      const std::uint32_t *kb = key_of(b);
      for (std::size_t t = 0; t < r_; ++t)
        if (ka[t] != kb[t])
          return ka[t] < kb[t];
      return a < b;
    };
    auto same = [&](Elem a, Elem b) { return std::equal(key_of(a), key_of(a) + r_, key_of(b)); };

    std::sort(p.order.begin() + start, p.order.begin() + end, less);

    std::vector<std::uint32_t> bounds{start};
    for (std::uint32_t q = start + 1; q < end; ++q)
      if (!same(p.order[q - 1], p.order[q]))
        bounds.push_back(q);
    bounds.push_back(end);

    p.trace = mix(p.trace, (static_cast<std::uint64_t>(start) << 32) | (bounds.size() - 1));
    for (std::size_t f = 0; f + 1 < bounds.size(); ++f) {
      const std::uint32_t *key = key_of(p.order[bounds[f]]);
      std::uint64_t h = bounds[f + 1] - bounds[f];
      for (std::size_t t = 0; t < r_; ++t)
        h = mix(h, key[t]);
      p.trace = mix(p.trace, h);
    }
    if (bounds.size() == 2)
      return;

    for (std::size_t f = 0; f + 1 < bounds.size(); ++f) {
      const std::uint32_t fs = bounds[f], fe = bounds[f + 1];
      p.cell_end[fs] = fe;
      for (std::uint32_t q = fs; q < fe; ++q)
        p.cell_of[p.order[q]] = fs;
      if (!queued[fs]) {
        queued[fs] = true;
        queue.push_back(fs);
      }
    }
    p.num_cells += static_cast<std::uint32_t>(bounds.size() - 2);
  }

  const CayleyScheme &c_;
  std::uint32_t n_;
  std::size_t r_;
  std::vector<std::uint32_t> keys_;
};

// Smallest non-singleton cell, lowest start on ties.
std::uint32_t target_cell(const OrderedPartition &p)
{
  std::uint32_t best = 0, best_size = 0;
  for (std::uint32_t start = 0; start < p.order.size();) {
    const std::uint32_t end = p.cell_end[start];
    const std::uint32_t size = end - start;
    if (size > 1 && (best_size == 0 || size < best_size)) {
      best = start;
      best_size = size;
    }
    start = end;
  }
  return best;
}

std::vector<Elem> cell_members(const OrderedPartition &p, std::uint32_t start)
{
  std::vector<Elem> out(p.order.begin() + start, p.order.begin() + p.cell_end[start]);
  std::sort(out.begin(), out.end());
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x)
  {
    while (parent_[x] != x)
      x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

class AutomorphismSearch {
 public:
  AutomorphismSearch(const CayleyScheme &c, SearchOptions opts) : c_(c), opts_(opts) {}

  PermGroup run()
  {
    const std::uint32_t n = c_.size();
    Refiner refiner(c_);
    first_path_.push_back(refiner.individualize(refiner.unit(), 0));
    std::vector<Elem> base{0};
    while (!first_path_.back().discrete()) {
      const auto &node = first_path_.back();
      auto cell = cell_members(node, target_cell(node));
      targets_.push_back(cell);
      base.push_back(cell.front());
      first_path_.push_back(refiner.individualize(node, cell.front()));
    }
    first_leaf_ = first_path_.back().order;

    std::vector<Permutation> gens;
    BigInt expected_order = 1;
    for (std::size_t level = targets_.size(); level-- > 0;) {
      const Elem v = base[level + 1];
      UnionFind uf(n);
      for (const auto &g : gens)
        for (Elem x = 0; x < n; ++x)
          uf.unite(x, g[x]);
      std::vector<Elem> failed;
      auto pruned = [&](Elem w) {
        if (uf.find(w) == uf.find(v))
          return true;
        return std::any_of(failed.begin(), failed.end(),
                           [&](Elem f) { return uf.find(f) == uf.find(w); });
      };
      auto accept = [&](Elem w, std::optional<Permutation> found) {
        if (!found) {
          failed.push_back(w);
          return;
        }
        for (Elem x = 0; x < n; ++x)
          uf.unite(x, (*found)[x]);
        gens.push_back(std::move(*found));
      };

      std::vector<Elem> candidates;
      for (Elem w : targets_[level])
        if (w != v)
          candidates.push_back(w);

      if (!opts_.parallel) {
        for (Elem w : candidates)
          if (!pruned(w))
            accept(w, try_branch(level, w));
      } else {
        const std::size_t batch = std::max(2u, std::thread::hardware_concurrency());
        for (std::size_t at = 0; at < candidates.size(); at += batch) {
          std::vector<std::pair<Elem, std::future<std::optional<Permutation>>>> jobs;
          for (std::size_t t = at; t < std::min(at + batch, candidates.size()); ++t) {
            Elem w = candidates[t];
            if (pruned(w))
              continue;
            jobs.emplace_back(w, std::async(std::launch::async,
                                            [this, level, w] { return try_branch(level, w); }));
          }
          // Merge in candidate order with the same pruning as the sequential run.
          for (auto &[w, job] : jobs) {
            auto found = job.get();
            if (!pruned(w))
              accept(w, std::move(found));
          }
        }
      }

      std::size_t orbit_size = 0;
      for (Elem x = 0; x < n; ++x)
        if (uf.find(x) == uf.find(v))
          ++orbit_size;
      expected_order *= orbit_size;
    }

    PermGroup k(n, std::move(gens), base);
    if (k.order() != expected_order)
      throw std::logic_error("automorphism search: stabilizer chain order disagrees with search");
    return k;
  }

 private:
  // Looks for an automorphism mapping the first path's vertex at `level` to w.
  std::optional<Permutation> try_branch(std::size_t level, Elem w) const
  {
    Refiner refiner(c_);
    auto child = refiner.individualize(first_path_[level], w);
    if (!matches(child, level + 1))
      return std::nullopt;
    return descend(refiner, child, level + 1);
  }

  bool matches(const OrderedPartition &node, std::size_t level) const
  {
    if (level >= first_path_.size())
      return false;
    const auto &ref = first_path_[level];
    return node.num_cells == ref.num_cells && node.trace == ref.trace;
  }

  std::optional<Permutation> descend(Refiner &refiner, const OrderedPartition &node,
                                     std::size_t level) const
  {
    if (node.discrete()) {
      std::vector<Elem> images(node.order.size());
      for (std::size_t q = 0; q < node.order.size(); ++q)
        images[first_leaf_[q]] = node.order[q];
      Permutation candidate(std::move(images));
      if (is_scheme_automorphism(c_, candidate))
        return candidate;
      return std::nullopt;
    }
    for (Elem w : cell_members(node, target_cell(node))) {
      auto child = refiner.individualize(node, w);
      if (!matches(child, level + 1))
        continue;
      if (auto found = descend(refiner, child, level + 1))
        return found;
    }
    return std::nullopt;
  }

  const CayleyScheme &c_;
  SearchOptions opts_;
  std::vector<OrderedPartition> first_path_;
  std::vector<std::vector<Elem>> targets_;
  std::vector<Elem> first_leaf_;
};

}  // namespace

bool is_scheme_automorphism(const CayleyScheme &c, const Permutation &p)
{
  const std::uint32_t n = c.size();
  if (p.degree() != n)
    return false;
  for (Elem u = 0; u < n; ++u) {
    const Elem pu = p[u];
    for (Elem v = 0; v < n; ++v)
      if (c.color(pu, p[v]) != c.color(u, v))
        return false;
  }
  return true;
}

PermGroup identity_stabilizer_automorphisms(const CayleyScheme &c, SearchOptions opts)
{
  return AutomorphismSearch(c, opts).run();
}

PermGroup scheme_automorphisms(const CayleyScheme &c, SearchOptions opts)
{
  const PermGroup translations = right_translations(*c.group());
  const PermGroup k = identity_stabilizer_automorphisms(c, opts);

  std::vector<Permutation> gens = translations.generators();
  gens.insert(gens.end(), k.generators().begin(), k.generators().end());
  for (const auto &g : gens)
    if (!is_scheme_automorphism(c, g))
      throw std::logic_error("automorphism search produced a non-automorphism");

  PermGroup aut(c.size(), std::move(gens), k.base());
  for (const auto &t : translations.generators())
    if (!aut.contains(t))
      throw std::logic_error("automorphism group misses a right translation");
  if (aut.order() != k.order() * c.size())
    throw std::logic_error("automorphism group order is not |G| * |Aut_e|");
  return aut;
}

}  // namespace schurlab
