#include "schurlab/constructions.hpp"

#include <algorithm>
#include <stdexcept>

namespace schurlab {

namespace {

std::uint32_t pow3(std::uint32_t k)
{
  std::uint32_t r = 1;
  while (k--)
    r *= 3;
  return r;
}

using ElemSet = std::vector<Elem>;

ElemSet translate(const FiniteGroup &g, Elem left, const ElemSet &set)
{
  ElemSet out;
  for (Elem x : set)
    out.push_back(g.mul(left, x));
  return out;
}

ElemSet unite(ElemSet a, const ElemSet &b)
{
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

ElemSet minus(const ElemSet &a, const ElemSet &b)
{
  ElemSet sa = a, sb = b, out;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::uint32_t PaperFamily::max_k() const
{
  if (name != Name::m3n)
    return 0;
  return (pow3(n - 3) - 1) / 2;
}

std::vector<std::uint32_t> PaperFamily::t_indices() const
{
  std::vector<std::uint32_t> out;
  if (name != Name::m3n)
    return out;
  for (std::uint32_t j = 2; j <= (pow3(n - 2) - 1) / 2; ++j)
    if (j % 3 != 0)
      out.push_back(j);
  return out;
}

std::size_t PaperFamily::expected_class_count() const
{
  if (name == Name::m27)
    return 4;
  return 6 + 2 * static_cast<std::size_t>(max_k()) + t_indices().size();
}

Partition m27_partition(std::uint32_t order_cap)
{
  auto g = FiniteGroup::metacyclic(3, 3, order_cap);
  const Subgroup u = m27_subgroup_u(g);

  ElemSet z1;
  for (Elem x : u.members())
    if (x != 0)
      z1.push_back(x);
  ElemSet z2 = g->parse_list("a1 a3 a6 a8 a4b2 a7b1 a8b1 a8b2");
  ElemSet z3;
  for (Elem x = 0; x < g->order(); ++x)
    if (x != 0 && !u.contains(x) && std::find(z2.begin(), z2.end(), x) == z2.end())
      z3.push_back(x);

  return verify_partition(g, {{0}, z1, z2, z3}, {"Z_0", "Z_1", "Z_2", "Z_3"});
}

Subgroup m27_subgroup_u(const GroupPtr &g)
{
  return subgroup_generated(g, {g->element(3, 1)});
}

M3nSubgroups m3n_subgroups(const GroupPtr &g)
{
  const std::uint32_t n = g->exponent();
  const Elem a = g->element(1, 0);
  const Elem b = g->element(0, 1);
  const Elem c = g->element(pow3(n - 2), 0);
  return M3nSubgroups{subgroup_generated(g, {a}), subgroup_generated(g, {b}),
                      subgroup_generated(g, {c}), subgroup_generated(g, {c, b})};
}

Partition m3n_partition(std::uint32_t n, std::uint32_t order_cap)
{
  if (n < 4)
    throw std::invalid_argument("the m3n family needs n >= 4; use m27 for n = 3");
  auto g = FiniteGroup::metacyclic(3, n, order_cap);
  const PaperFamily family{PaperFamily::Name::m3n, n};
  const auto subs = m3n_subgroups(g);
  const ElemSet &cset = subs.c.members();
  const ElemSet &hset = subs.h.members();

  const Elem b = g->element(0, 1);
  const Elem b2 = g->element(0, 2);
  const Elem c = g->element(pow3(n - 2), 0);
  const Elem c2 = g->mul(c, c);
  auto a_pow = [&](long long i) { return g->element(i, 0); };
  // a^i X u a^-i X
  auto pair_union = [&](long long i, const ElemSet &x) {
    return unite(translate(*g, a_pow(i), x), translate(*g, a_pow(-i), x));
  };

  std::vector<ElemSet> classes;
  std::vector<std::string> labels;
  auto add = [&](std::string label, ElemSet set) {
    labels.push_back(std::move(label));
    classes.push_back(std::move(set));
  };

  add("Z_0", {0});
  add("Z_1", {b, b2});
  add("Z_2", {c, c2});
  add("Z_3", minus(hset, {0, b, b2, c, c2}));
  const ElemSet z4 = unite(translate(*g, a_pow(1), {0, g->mul(c, b), g->mul(c2, b2)}),
                           translate(*g, a_pow(-1), {0, g->mul(c2, b), g->mul(c, b2)}));
  add("Z_4", z4);
  add("Z_5", minus(pair_union(1, hset), z4));
  for (std::uint32_t k = 1; k <= family.max_k(); ++k) {
    const ElemSet xk = pair_union(3LL * k, cset);
    add("X_" + std::to_string(k), xk);
    add("Y_" + std::to_string(k), minus(pair_union(3LL * k, hset), xk));
  }
  for (std::uint32_t j : family.t_indices())
    add("T_" + std::to_string(j), pair_union(j, hset));

  if (classes.size() != family.expected_class_count())
    throw std::logic_error("m3n: unexpected class count");
  return verify_partition(g, std::move(classes), std::move(labels));
}

}  // namespace schurlab
