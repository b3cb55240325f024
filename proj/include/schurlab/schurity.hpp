#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "schurlab/autgrp.hpp"
#include "schurlab/srings.hpp"

namespace schurlab {

class SchurityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SchurityVerdict {
  bool schurian = false;
  /// Order of Aut(C(A)); Aut(A) has order aut_order / |G|.
  BigInt aut_order;
  BigInt aut_e_order;
  /// Orbits of Aut(A) = Aut(C(A))_e, ordered by smallest element.
  std::vector<std::vector<Elem>> aut_e_orbits;

  struct Mismatch {
    std::size_t basic_set;
    std::vector<Elem> orbit;  // a proper subset of the basic set
  };
  std::optional<Mismatch> mismatch_witness;  // lowest-index basic set that splits
};

/// A(Gamma, G): the S-ring of orbits of the identity stabilizer of gamma.
/// Throws SchurityError unless gamma contains the right translations of g.
SRing orbit_sring(const GroupPtr &g, const PermGroup &gamma);

SchurityVerdict is_schurian(const SRing &s, SearchOptions opts = {});

/// |Aut(A_{U/L})|, recomputed on the quotient scheme.
BigInt quotient_aut_order(const SRing &s, const Subgroup &upper, const Subgroup &lower,
                          SearchOptions opts = {});

/// `schurian=<bool> aut_order=<N>` followed by one `orbit: <tokens>` line per orbit.
std::string format_verdict(const SchurityVerdict &v, const FiniteGroup &g);

}  // namespace schurlab
