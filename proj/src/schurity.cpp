#include "schurlab/schurity.hpp"

#include <algorithm>
#include <sstream>

#include "schurlab/schemes.hpp"

namespace schurlab {

SRing orbit_sring(const GroupPtr &g, const PermGroup &gamma)
{
  if (gamma.degree() != g->order())
    throw SchurityError("permutation group degree does not match the group order");
  const PermGroup translations = right_translations(*g);
  for (const auto &t : translations.generators())
    if (!gamma.contains(t))
      throw SchurityError("permutation group does not contain the right translations");

  auto classes = orbits(stabilizer(gamma, 0));
  return structure_constants(verify_partition(g, std::move(classes)));
}

SchurityVerdict is_schurian(const SRing &s, SearchOptions opts)
{
  const CayleyScheme scheme = to_scheme(s);
  const PermGroup aut = scheme_automorphisms(scheme, opts);
  const PermGroup aut_e = stabilizer(aut, 0);

  SchurityVerdict v;
  v.aut_order = aut.order();
  v.aut_e_order = aut_e.order();
  v.aut_e_orbits = orbits(aut_e);

  const auto &p = s.partition();
  for (const auto &o : v.aut_e_orbits) {
    const std::size_t cls = p.class_of(o.front());
    if (!std::all_of(o.begin(), o.end(), [&](Elem x) { return p.class_of(x) == cls; }))
      throw std::logic_error("an orbit of Aut(A) meets two basic sets");
  }
  // Every orbit lies inside a basic set, so equal counts mean equal partitions.
  v.schurian = v.aut_e_orbits.size() == p.size();
  if (!v.schurian) {
    // Lowest-index basic set that splits, with its first orbit.
    for (std::size_t cls = 0; cls < p.size() && !v.mismatch_witness; ++cls) {
      for (const auto &o : v.aut_e_orbits) {
        if (p.class_of(o.front()) == cls && o.size() != p.cell(cls).size()) {
          v.mismatch_witness = SchurityVerdict::Mismatch{cls, o};
          break;
        }
      }
    }
  }
  return v;
}

BigInt quotient_aut_order(const SRing &s, const Subgroup &upper, const Subgroup &lower,
                          SearchOptions opts)
{
  const SRing q = quotient_sring(s, upper, lower);
  return identity_stabilizer_automorphisms(to_scheme(q), opts).order();
}

std::string format_verdict(const SchurityVerdict &v, const FiniteGroup &g)
{
  std::ostringstream out;
  out << "schurian=" << (v.schurian ? "true" : "false") << " aut_order=" << v.aut_order << '\n';
  for (const auto &o : v.aut_e_orbits) {
    out << "orbit:";
    for (Elem x : o)
      out << ' ' << g.format(x);
    out << '\n';
  }
  return out.str();
}

}  // namespace schurlab
