#include "schurlab/srings.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace schurlab {

std::string Partition::label(std::size_t i) const
{
  if (i < labels_.size() && !labels_[i].empty())
    return labels_[i];
  return "#" + std::to_string(i);
}

std::optional<std::size_t> Partition::find_label(const std::string &label) const
{
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label)
      return i;
  return std::nullopt;
}

std::vector<Elem> Partition::union_of(const std::vector<std::size_t> &indices) const
{
  std::vector<Elem> out;
  for (std::size_t i : indices)
    out.insert(out.end(), classes_.at(i).begin(), classes_.at(i).end());
  std::sort(out.begin(), out.end());
  return out;
}

Partition verify_partition(const GroupPtr &g, std::vector<std::vector<Elem>> raw,
                           std::vector<std::string> labels)
{
  if (!labels.empty() && labels.size() != raw.size())
    throw PartitionError("label count does not match class count");

  const std::uint32_t n = g->order();
  std::vector<std::int64_t> owner(n, -1);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    auto &cls = raw[c];
    if (cls.empty())
      throw PartitionError("class " + std::to_string(c) + " is empty", c);
    std::sort(cls.begin(), cls.end());
    for (std::size_t t = 0; t < cls.size(); ++t) {
      Elem x = cls[t];
      if (x >= n)
        throw PartitionError("class " + std::to_string(c) + " has an element outside the group",
                             c);
      if (owner[x] >= 0)
        throw PartitionError("element " + g->format(x) + " occurs in classes " +
                                 std::to_string(owner[x]) + " and " + std::to_string(c),
                             c);
      owner[x] = static_cast<std::int64_t>(c);
    }
  }
  for (Elem x = 0; x < n; ++x)
    if (owner[x] < 0)
      throw PartitionError("element " + g->format(x) + " is not covered by any class");

  const auto id_class = static_cast<std::size_t>(owner[0]);
  if (raw[id_class].size() != 1)
    throw PartitionError("the identity class is not the singleton {e}", id_class);
  if (id_class != 0) {
    std::rotate(raw.begin(), raw.begin() + static_cast<std::ptrdiff_t>(id_class),
                raw.begin() + static_cast<std::ptrdiff_t>(id_class) + 1);
    if (!labels.empty())
      std::rotate(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(id_class),
                  labels.begin() + static_cast<std::ptrdiff_t>(id_class) + 1);
  }

  Partition p;
  p.group_ = g;
  p.class_of_.assign(n, 0);
  for (std::size_t c = 0; c < raw.size(); ++c)
    for (Elem x : raw[c])
      p.class_of_[x] = c;

  p.inverse_.assign(raw.size(), 0);
  for (std::size_t c = 0; c < raw.size(); ++c) {
    const std::size_t target = p.class_of_[g->inv(raw[c].front())];
    if (raw[target].size() != raw[c].size())
      throw PartitionError("the inverse of class " + std::to_string(c) + " is not a class", c);
    for (Elem x : raw[c])
      if (p.class_of_[g->inv(x)] != target)
        throw PartitionError("the inverse of class " + std::to_string(c) + " is not a class",
                             c);
    p.inverse_[c] = target;
  }

  p.classes_ = std::move(raw);
  p.labels_ = std::move(labels);
  return p;
}

GroupRingVector GroupRingVector::delta(std::size_t order, Elem x)
{
  GroupRingVector v(order);
  v[x] = 1;
  return v;
}

GroupRingVector GroupRingVector::indicator(std::size_t order, const std::vector<Elem> &set)
{
  GroupRingVector v(order);
  for (Elem x : set)
    v[x] = 1;
  return v;
}

GroupRingVector &GroupRingVector::operator+=(const GroupRingVector &other)
{
  if (other.order() != order())
    throw std::invalid_argument("group ring vectors of different length");
  for (std::size_t x = 0; x < coeffs_.size(); ++x)
    if (__builtin_add_overflow(coeffs_[x], other.coeffs_[x], &coeffs_[x]))
      throw std::overflow_error("group ring addition overflow");
  return *this;
}

GroupRingVector GroupRingVector::scaled(std::int64_t factor) const
{
  GroupRingVector out(order());
  for (std::size_t x = 0; x < coeffs_.size(); ++x)
    if (__builtin_mul_overflow(coeffs_[x], factor, &out.coeffs_[x]))
      throw std::overflow_error("group ring scaling overflow");
  return out;
}

GroupRingVector class_sum(const Partition &p, std::size_t i)
{
  if (i >= p.size())
    throw std::out_of_range("class index " + std::to_string(i) + " out of range");
  return GroupRingVector::indicator(p.group()->order(), p.cell(i));
}

GroupRingVector ring_mul(const FiniteGroup &g, const GroupRingVector &u,
                         const GroupRingVector &v)
{
  if (u.order() != g.order() || v.order() != g.order())
    throw std::invalid_argument("group ring vector length does not match group order");
  GroupRingVector w(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    if (u[x] == 0)
      continue;
    for (Elem y = 0; y < g.order(); ++y) {
      if (v[y] == 0)
        continue;
      std::int64_t term;
      Elem xy = g.mul(x, y);
      if (__builtin_mul_overflow(u[x], v[y], &term) ||
          __builtin_add_overflow(w[xy], term, &w[xy]))
        throw std::overflow_error("group ring multiplication overflow");
    }
  }
  return w;
}

StructureTensor StructureTensor::transposed() const
{
  StructureTensor t(rank_);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        t(j, i, k) = (*this)(i, j, k);
  return t;
}

std::vector<std::pair<std::size_t, std::int64_t>> SRing::product(std::size_t i,
                                                                 std::size_t j) const
{
  std::vector<std::pair<std::size_t, std::int64_t>> out;
  for (std::size_t k = 0; k < rank(); ++k)
    if (auto c = constants_(i, j, k); c != 0)
      out.emplace_back(k, c);
  return out;
}

SRing structure_constants(const Partition &p)
{
  const auto &g = *p.group();
  const std::size_t r = p.size();
  SRing ring(p);
  ring.constants_ = StructureTensor(r);

  // Counts fit easily: each coefficient is at most |Z_i| <= |G|.
  std::vector<std::int64_t> w(g.order(), 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::fill(w.begin(), w.end(), 0);
      for (Elem x : p.cell(i))
        for (Elem y : p.cell(j))
          ++w[g.mul(x, y)];
      for (std::size_t k = 0; k < r; ++k) {
        const auto &cls = p.cell(k);
        const std::int64_t c = w[cls.front()];
        for (Elem z : cls) {
          if (w[z] != c)
            throw NotClosedError(
                i, j, k, cls.front(), z, c, w[z],
                "partition is not an S-ring: in " + p.label(i) + "*" + p.label(j) +
                    " the elements " + g.format(cls.front()) + " and " + g.format(z) +
                    " of class " + p.label(k) + " have coefficients " + std::to_string(c) +
                    " and " + std::to_string(w[z]));
        }
        ring.constants_(i, j, k) = c;
      }
    }
  }
  return ring;
}

bool is_commutative(const SRing &s)
{
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      for (std::size_t k = 0; k < r; ++k)
        if (s.constant(i, j, k) != s.constant(j, i, k))
          return false;
  return true;
}

bool is_a_subgroup(const SRing &s, const Subgroup &h)
{
  const auto &p = s.partition();
  for (std::size_t c = 0; c < p.size(); ++c) {
    const auto &cls = p.cell(c);
    bool first = h.contains(cls.front());
    for (Elem x : cls)
      if (h.contains(x) != first)
        return false;
  }
  return true;
}

namespace {

// Smallest set of classes containing `seed` and closed under products.
std::vector<bool> close_classes(const SRing &s, std::vector<bool> in)
{
  const std::size_t r = s.rank();
  in[0] = true;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (!in[i])
        continue;
      for (std::size_t j = 0; j < r; ++j) {
        if (!in[j])
          continue;
        for (std::size_t k = 0; k < r; ++k) {
          if (!in[k] && s.constant(i, j, k) != 0) {
            in[k] = true;
            changed = true;
          }
        }
      }
    }
  }
  return in;
}

}  // namespace

std::vector<Subgroup> a_subgroups(const SRing &s)
{
  const std::size_t r = s.rank();
  std::set<std::vector<bool>> seen;
  std::vector<std::vector<bool>> found;
  std::vector<bool> start(r, false);
  start = close_classes(s, start);
  seen.insert(start);
  found.push_back(start);
  for (std::size_t head = 0; head < found.size(); ++head) {
    for (std::size_t c = 0; c < r; ++c) {
      if (found[head][c])
        continue;
      auto grown = found[head];
      grown[c] = true;
      grown = close_classes(s, std::move(grown));
      if (seen.insert(grown).second)
        found.push_back(grown);
    }
  }

  std::vector<Subgroup> out;
  for (const auto &mask : found) {
    std::vector<std::size_t> idx;
    for (std::size_t c = 0; c < r; ++c)
      if (mask[c])
        idx.push_back(c);
    out.emplace_back(s.group(), s.partition().union_of(idx));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup &a, const Subgroup &b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return a.members() < b.members();
  });
  return out;
}

SRing quotient_sring(const SRing &s, const Subgroup &upper, const Subgroup &lower)
{
  if (!is_a_subgroup(s, upper))
    throw PartitionError("U is not an A-subgroup");
  if (!is_a_subgroup(s, lower))
    throw PartitionError("L is not an A-subgroup");
  QuotientMap pi(s.group(), upper, lower);

  const auto &p = s.partition();
  std::vector<std::vector<Elem>> images;
  std::vector<std::string> labels;
  std::map<std::vector<Elem>, std::size_t> index;
  for (std::size_t c = 0; c < p.size(); ++c) {
    if (!upper.contains(p.cell(c).front()))
      continue;
    std::vector<Elem> image;
    for (Elem x : p.cell(c))
      image.push_back(pi.project(x));
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    if (index.emplace(image, images.size()).second) {
      images.push_back(std::move(image));
      labels.push_back(p.has_labels() ? "pi(" + p.label(c) + ")" : std::string{});
    }
  }
  if (!p.has_labels())
    labels.clear();
  return structure_constants(verify_partition(pi.target(), std::move(images),
                                              std::move(labels)));
}

std::optional<std::string> check_tensor_identities(const SRing &s)
{
  const auto &p = s.partition();
  const std::size_t r = s.rank();
  for (std::size_t i = 0; i < r; ++i) {
    const auto zi = static_cast<std::int64_t>(p.cell(i).size());
    for (std::size_t j = 0; j < r; ++j) {
      const auto zj = static_cast<std::int64_t>(p.cell(j).size());
      const std::int64_t expect0 = j == p.inverse_class(i) ? zi : 0;
      if (s.constant(i, j, 0) != expect0)
        return "identity coefficient of " + p.label(i) + "*" + p.label(j) + " is " +
               std::to_string(s.constant(i, j, 0)) + ", expected " + std::to_string(expect0);
      std::int64_t total = 0;
      for (std::size_t k = 0; k < r; ++k) {
        if (s.constant(i, j, k) < 0)
          return "negative constant in " + p.label(i) + "*" + p.label(j);
        total += s.constant(i, j, k) * static_cast<std::int64_t>(p.cell(k).size());
      }
      if (total != zi * zj)
        return "size rule fails for " + p.label(i) + "*" + p.label(j);
      // (xi_i xi_j)^-1 = xi_j* xi_i*
      for (std::size_t k = 0; k < r; ++k)
        if (s.constant(i, j, k) !=
            s.constant(p.inverse_class(j), p.inverse_class(i), p.inverse_class(k)))
          return "inverse symmetry fails for " + p.label(i) + "*" + p.label(j);
    }
  }
  return std::nullopt;
}

}  // namespace schurlab
