#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "schurlab/srings.hpp"

namespace schurlab {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw classes read from a partition file, before axiom checks.
struct PartitionText {
  std::vector<std::vector<Elem>> classes;
  std::vector<std::string> labels;  // empty if no line carried a label
};

/// Partition file: `#` comment lines; every other nonblank line is one basic
/// set, `[<label>:] <token> <token> ...`. Token errors raise GroupError.
PartitionText parse_partition_text(const FiniteGroup &g, std::istream &in);
PartitionText read_partition_file(const FiniteGroup &g, const std::string &path);

/// Inverse of parse_partition_text; starts with a `# <group spec>` comment.
std::string format_partition(const Partition &p);

/// One line per (i, j): `i j : k1:c1 k2:c2 ...`, nonzero entries, k ascending.
std::string format_constants_machine(const SRing &s);

/// Display symbol of class i: family labels Z_i, X_k, Y_k, T_j become
/// xi, theta, psi, phi (Greek when `greek`), other labels print verbatim and
/// unlabeled classes print as xi_i.
std::string class_symbol(const Partition &p, std::size_t i, bool greek = true);

/// `xi_2xi_2 = 8xi_0 + xi_2 + 3xi_3` style line.
std::string format_product(const SRing &s, std::size_t i, std::size_t j, bool greek = true);

}  // namespace schurlab
