// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fixtures.hpp"
#include "m3n_table.hpp"
#include "schurlab/autgrp.hpp"
#include "schurlab/constructions.hpp"
#include "schurlab/schemes.hpp"
#include "schurlab/schurity.hpp"
#include "schurlab/srings.hpp"

using namespace schurlab;

namespace {

struct Failure {
  std::string what;
};

void require(bool ok, const std::string &what)
{
  if (!ok)
    throw Failure{what};
}

// Every S-ring built during the run, for the tensor-invariant criterion.
std::vector<SRing> &corpus()
{
  static std::vector<SRing> rings;
  return rings;
}

const SRing &keep(SRing s)
{
  corpus().push_back(std::move(s));
  return corpus().back();
}

std::string run_cli(const std::vector<std::string> &args, int expected_code)
{
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::ostringstream ctx;
  for (const auto &a : args)
    ctx << a << ' ';
  require(code == expected_code,
          "`" + ctx.str() + "` exited " + std::to_string(code) + ": " + err.str());
  return out.str();
}

bool has_line(const std::string &text, const std::string &line)
{
  std::istringstream in(text);
  std::string cur;
  while (std::getline(in, cur)) {
    const auto first = cur.find_first_not_of(' ');
    if (first != std::string::npos && cur.substr(first) == line)
      return true;
  }
  return false;
}

std::string m27_table()
{
  const std::string out = run_cli({"paper", "m27"}, 0);
  // products as printed by the tool: k ascending, unit coefficients omitted
  const std::vector<std::string> lines{
      "ξ_0ξ_0 = ξ_0",
      "ξ_0ξ_1 = ξ_1",
      "ξ_0ξ_2 = ξ_2",
      "ξ_0ξ_3 = ξ_3",
      "ξ_1ξ_1 = 2ξ_0 + ξ_1",
      "ξ_1ξ_2 = ξ_3",
      "ξ_1ξ_3 = 2ξ_2 + ξ_3",
      "ξ_2ξ_2 = 8ξ_0 + ξ_2 + 3ξ_3",
      "ξ_2ξ_3 = 8ξ_1 + 6ξ_2 + 4ξ_3",
      "ξ_3ξ_3 = 16ξ_0 + 8ξ_1 + 8ξ_2 + 10ξ_3",
  };
  for (const auto &l : lines)
    require(has_line(out, l), "missing product line: " + l);
  const SRing &s = keep(structure_constants(m27_partition()));
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j)
      for (std::size_t k = 0; k < s.rank(); ++k)
        require(s.constant(i, j, k) == s.constant(j, i, k), "not commutative");
  return "10 products, commutative";
}

std::string m243_table()
{
  const Partition p = m3n_partition(5);
  const SRing &s = keep(structure_constants(p));
  const m3n_table::Table table(5);
  auto computed = [&](std::size_t i, std::size_t j) {
    m3n_table::Expansion got;
    for (auto [k, c] : s.product(i, j))
      got[p.label(k)] += c;
    return got;
  };
  std::size_t checked = 0, skipped = 0;
  for (std::size_t i = 0; i < s.rank(); ++i)
    for (std::size_t j = 0; j < s.rank(); ++j) {
      const auto expected = table.product(p.label(i), p.label(j));
      if (!expected) {
        ++skipped;
        continue;
      }
      require(computed(i, j) == *expected, p.label(i) + " * " + p.label(j) + " differs");
      ++checked;
    }

  // named products
  auto idx = [&](const std::string &l) { return *p.find_label(l); };
  using E = m3n_table::Expansion;
  require(computed(idx("Z_4"), idx("Z_4")) == E{{"T_2", 1}, {"Z_0", 6}, {"Z_3", 3}}, "xi_4 xi_4");
  require(computed(idx("X_1"), idx("X_1")) == E{{"X_2", 3}, {"Z_0", 6}, {"Z_2", 6}}, "theta_1 theta_1");
  require(computed(idx("Y_1"), idx("Y_1")) ==
              E{{"Y_2", 3}, {"X_2", 6}, {"Z_1", 6}, {"Z_2", 12}, {"Z_3", 6}, {"Z_0", 12}},
          "psi_1 psi_1");
  std::size_t phi = 0;
  for (std::uint32_t j : PaperFamily{PaperFamily::Name::m3n, 5}.t_indices()) {
    if (!table.valid_j(2 * j))
      continue;
    const std::string t = "T_" + std::to_string(j);
    require(computed(idx(t), idx(t)) == E{{"T_" + std::to_string(2 * j), 9},
                                          {"Z_0", 18}, {"Z_1", 18}, {"Z_2", 18}, {"Z_3", 18}},
            "phi_j phi_j for j = " + std::to_string(j));
    ++phi;
  }
  require(phi == 3, "expected phi_j^2 checks for j = 2, 4, 5");
  require(!check_tensor_identities(s), "tensor identities");
  return std::to_string(checked) + " products matched, " + std::to_string(skipped) +
         " out-of-range products covered by the tensor identities; theta/psi mixed products "
         "use the size-consistent coefficient 3 (see README)";
}

std::string m27_non_schurian()
{
  const std::string file = "acceptance_m27.txt";
  run_cli({"export", "m27", "-o", file}, 0);
  const std::string out =
      run_cli({"schurity", "--group", "metacyclic:p=3,n=3", "--partition", file}, 0);
  std::remove(file.c_str());
  require(out.rfind("schurian=false", 0) == 0, "verdict is not schurian=false");
  require(out.find("mismatch: basic set Z_2") != std::string::npos, "no mismatch witness");
  const SchurityVerdict v = is_schurian(structure_constants(m27_partition()));
  require(!v.schurian && v.mismatch_witness.has_value(), "library verdict");
  const auto &w = *v.mismatch_witness;
  require(w.orbit.size() == 6, "witness orbit size");
  return "schurian=false, aut_order=" + v.aut_order.str() + ", Z_2 splits (orbit of size " +
         std::to_string(w.orbit.size()) + ")";
}

std::string m81_non_schurian()
{
  const SRing &s = keep(structure_constants(m3n_partition(4)));
  const SchurityVerdict v = is_schurian(s);
  require(!v.schurian, "M_81 ring reported schurian");
  require(v.mismatch_witness.has_value(), "no mismatch witness");
  return "schurian=false, aut_order=" + v.aut_order.str() + ", " +
         std::to_string(v.aut_e_orbits.size()) + " orbits vs " + std::to_string(s.rank()) +
         " basic sets";
}

std::string quotient_order()
{
  std::string detail;
  for (std::uint32_t n : {4u, 5u}) {
    const SRing s = structure_constants(m3n_partition(n));
    const auto g = s.group();
    const Subgroup h = m3n_subgroups(g).h;
    keep(quotient_sring(s, whole_group(g), h));
    const BigInt order = quotient_aut_order(s, whole_group(g), h);
    require(order == 2, "n = " + std::to_string(n) + ": order " + order.str());
    detail += (detail.empty() ? "" : ", ") + std::string("n=") + std::to_string(n) + ": 2";
  }
  return detail;
}

std::string block_systems()
{
  {
    const SRing s = structure_constants(m27_partition());
    const auto g = s.group();
    const PermGroup k = identity_stabilizer_automorphisms(to_scheme(s));
    require(is_block_system(k, left_cosets(g, m27_subgroup_u(g))), "U");
  }
  const SRing s = structure_constants(m3n_partition(4));
  const auto g = s.group();
  const PermGroup k = identity_stabilizer_automorphisms(to_scheme(s));
  const auto subs = m3n_subgroups(g);
  require(is_block_system(k, left_cosets(g, subs.b)), "B");
  require(is_block_system(k, left_cosets(g, subs.c)), "C");
  require(is_block_system(k, left_cosets(g, subs.h)), "H");
  return "left cosets of U (M_27) and B, C, H (M_81) are blocks of Aut(C)_e";
}

std::string adjacency()
{
  const SRing s27 = structure_constants(m27_partition());
  const CayleyScheme c27 = to_scheme(s27);
  const auto &g = *s27.group();
  auto sorted = [](std::vector<Elem> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  require(c27.neighborhood(g.parse("b1"), 1) == sorted(g.parse_list("a3b2 a6")), "b in R(Z_1)");
  require(c27.neighborhood(g.parse("a2"), 1) == sorted(g.parse_list("a8b1 a5b2")), "a^2 in R(Z_1)");

  const SRing s81 = structure_constants(m3n_partition(4));
  const CayleyScheme c81 = to_scheme(s81);
  const auto &h = *s81.group();
  const Elem a = h.parse("a1"), ai = h.inv(a), b = h.parse("b1"), b2 = h.mul(b, b);
  const Elem c = h.parse("a9"), c2 = h.mul(c, c);
  // e: a, cab, c^2ab^2, a^-1, ca^-1b^2, c^2a^-1b
  const std::vector<Elem> expected = sorted({a, h.mul(h.mul(c, a), b), h.mul(h.mul(c2, a), b2), ai,
                                             h.mul(h.mul(c, ai), b2), h.mul(h.mul(c2, ai), b)});
  const Color z4 = static_cast<Color>(*s81.partition().find_label("Z_4"));
  require(c81.neighborhood(0, z4) == expected, "e in R(Z_4)");
  return "3 neighborhoods match";
}

std::string schur_round_trip()
{
  std::mt19937 rng(97531);
  std::vector<fixtures::NamedGroup> groups;
  for (const auto &ng : fixtures::medium_groups())
    if (ng.group->order() >= 2 && ng.group->order() <= 24)
      groups.push_back(ng);
  const std::size_t trials = 30;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto &ng = groups[t % groups.size()];
    const PermGroup gamma = fixtures::random_gamma(ng.group, rng);
    const SRing &s = keep(orbit_sring(ng.group, gamma));
    const SchurityVerdict v = is_schurian(s);
    require(v.schurian, ng.name + ": orbit S-ring reported non-schurian");
  }
  return std::to_string(trials) + " random Γ over " + std::to_string(groups.size()) +
         " groups";
}

std::string brute_force_oracle()
{
  std::size_t schemes = 0;
  for (const auto &ng : fixtures::small_groups()) {
    const auto &g = *ng.group;
    std::vector<std::vector<Elem>> conj;
    std::vector<bool> used(g.order(), false);
    for (Elem x = 0; x < g.order(); ++x) {
      if (used[x])
        continue;
      conj.emplace_back();
      for (Elem y = 0; y < g.order(); ++y)
        if (!used[g.conj(x, y)]) {
          used[g.conj(x, y)] = true;
          conj.back().push_back(g.conj(x, y));
        }
    }
    for (const Partition &p : {fixtures::singleton_partition(ng.group),
                               fixtures::trivial_partition(ng.group),
                               verify_partition(ng.group, conj)}) {
      const SRing &s = keep(structure_constants(p));
      const CayleyScheme c = to_scheme(s);
      const BigInt fast = scheme_automorphisms(c).order();
      const std::uint64_t slow = fixtures::brute_force_aut_count(c);
      require(fast == slow, ng.name + ": " + fast.str() + " vs brute force " + std::to_string(slow));
      ++schemes;
    }
  }
  return std::to_string(schemes) + " schemes over " + std::to_string(fixtures::small_groups().size()) +
         " groups of order <= 8";
}

std::string tensor_invariants()
{
  for (const auto &s : corpus()) {
    const auto &p = s.partition();
    const std::string name = s.group()->name();
    for (std::size_t i = 0; i < s.rank(); ++i)
      for (std::size_t j = 0; j < s.rank(); ++j) {
        const std::int64_t zi = p.cell(i).size(), zj = p.cell(j).size();
        require(s.constant(i, j, 0) == (j == p.inverse_class(i) ? zi : 0), name + ": identity column");
        std::int64_t total = 0;
        for (std::size_t k = 0; k < s.rank(); ++k)
          total += s.constant(i, j, k) * static_cast<std::int64_t>(p.cell(k).size());
        require(total == zi * zj, name + ": size rule");
      }
    const StructureTensor q = verify_scheme(to_scheme(s));
    // color(u, v) encodes v u^-1, so q is p with the first two indices swapped
    require(q == s.constants().transposed(), name + ": scheme tensor");
    if (is_commutative(s))
      require(q == s.constants(), name + ": q != p");
  }
  return std::to_string(corpus().size()) + " S-rings";
}

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: no limit
  std::function<std::string()> body;
};

}  // namespace

int main()
{
  const std::vector<Criterion> criteria{
      {1, "M_27 multiplication table", 1.0, m27_table},
      {2, "M_243 multiplication table", 30.0, m243_table},
      {3, "M_27 S-ring is not schurian", 5.0, m27_non_schurian},
      {4, "M_81 S-ring is not schurian", 60.0, m81_non_schurian},
      {5, "quotient G/H has automorphism group of order 2", 0, quotient_order},
      {6, "coset block systems", 0, block_systems},
      {7, "adjacency lists", 0, adjacency},
      {8, "Schur round trip on random groups", 0, schur_round_trip},
      {9, "automorphism orders match brute force", 0, brute_force_oracle},
      {10, "tensor invariants", 0, tensor_invariants},
  };

  int failures = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure &f) {
      ok = false;
      detail = f.what;
    } catch (const std::exception &e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && secs >= c.limit_seconds) {
      ok = false;
      detail += "; too slow";
    }
    failures += !ok;
    std::ostringstream time;
    time.precision(3);
    time << std::fixed << secs << "s";
    if (c.limit_seconds > 0)
      time << " (limit " << c.limit_seconds << "s)";
    std::cout << (ok ? "PASS" : "FAIL") << "  [" << c.id << "] " << c.name << "  " << time.str()
              << "  " << detail << std::endl;
  }
  std::cout << (failures ? "FAILED " : "all ") << criteria.size() - failures << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failures ? 1 : 0;
}
