#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "schurlab/groups.hpp"

namespace schurlab {

class PartitionError : public std::runtime_error {
 public:
  explicit PartitionError(const std::string &what, std::optional<std::size_t> cls = {})
      : std::runtime_error(what), offending_class(cls)
  {
  }
  std::optional<std::size_t> offending_class;
};

/// Thrown when a product of two class sums is not a combination of class sums.
/// Elements x and y lie in the same class k but occur in xi_i * xi_j with
/// different coefficients.
class NotClosedError : public std::runtime_error {
 public:
  NotClosedError(std::size_t i, std::size_t j, std::size_t k, Elem x, Elem y,
                 std::int64_t coeff_x, std::int64_t coeff_y, const std::string &what)
      : std::runtime_error(what), i(i), j(j), k(k), x(x), y(y), coeff_x(coeff_x),
        coeff_y(coeff_y)
  {
  }
  std::size_t i, j, k;
  Elem x, y;
  std::int64_t coeff_x, coeff_y;
};

/// Ordered partition of a group into basic sets, identity class first.
class Partition {
 public:
  const GroupPtr &group() const { return group_; }
  std::size_t size() const { return classes_.size(); }
  const std::vector<Elem> &cell(std::size_t i) const { return classes_.at(i); }
  const std::vector<std::vector<Elem>> &cells() const { return classes_; }
  std::size_t class_of(Elem x) const { return class_of_.at(x); }
  /// Index i* with inv(class i) = class i*.
  std::size_t inverse_class(std::size_t i) const { return inverse_.at(i); }
  bool has_labels() const { return !labels_.empty(); }
  /// Label of class i, or "#i" when unlabeled.
  std::string label(std::size_t i) const;
  const std::vector<std::string> &labels() const { return labels_; }
  std::optional<std::size_t> find_label(const std::string &label) const;

  /// Union of the given classes, sorted.
  std::vector<Elem> union_of(const std::vector<std::size_t> &indices) const;

 private:
  friend Partition verify_partition(const GroupPtr &, std::vector<std::vector<Elem>>,
                                    std::vector<std::string>);
  GroupPtr group_;
  std::vector<std::vector<Elem>> classes_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_;
};

/// Checks the partition axioms: disjoint cover, {e} a class, inverse-closed.
/// Moves the identity class to the front and sorts each class; class order is
/// otherwise kept. Labels, when given, follow their classes.
Partition verify_partition(const GroupPtr &g, std::vector<std::vector<Elem>> raw,
                           std::vector<std::string> labels = {});

/// Element of the integer group ring, one coefficient per element index.
class GroupRingVector {
 public:
  GroupRingVector() = default;
  explicit GroupRingVector(std::size_t order) : coeffs_(order, 0) {}
  explicit GroupRingVector(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {}

  static GroupRingVector delta(std::size_t order, Elem x);
  static GroupRingVector indicator(std::size_t order, const std::vector<Elem> &set);

  std::size_t order() const { return coeffs_.size(); }
  std::int64_t operator[](Elem x) const { return coeffs_[x]; }
  std::int64_t &operator[](Elem x) { return coeffs_[x]; }
  const std::vector<std::int64_t> &coefficients() const { return coeffs_; }

  GroupRingVector &operator+=(const GroupRingVector &other);
  GroupRingVector scaled(std::int64_t factor) const;
  bool operator==(const GroupRingVector &other) const = default;

 private:
  std::vector<std::int64_t> coeffs_;
};

GroupRingVector class_sum(const Partition &p, std::size_t i);

/// Convolution w[g] = sum over xy = g of u[x] v[y]; throws std::overflow_error.
GroupRingVector ring_mul(const FiniteGroup &g, const GroupRingVector &u,
                         const GroupRingVector &v);

/// Dense r x r x r tensor of nonnegative integers.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(std::size_t rank) : rank_(rank), data_(rank * rank * rank, 0) {}

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j, std::size_t k) const
  {
    return data_[(i * rank_ + j) * rank_ + k];
  }
  std::int64_t &operator()(std::size_t i, std::size_t j, std::size_t k)
  {
    return data_[(i * rank_ + j) * rank_ + k];
  }
  bool operator==(const StructureTensor &other) const = default;

  /// Tensor with the first two indices swapped.
  StructureTensor transposed() const;

 private:
  std::size_t rank_ = 0;
  std::vector<std::int64_t> data_;
};

/// An S-ring: a verified partition with its structure constants
/// xi_i xi_j = sum_k p(i, j, k) xi_k.
class SRing {
 public:
  const Partition &partition() const { return partition_; }
  const GroupPtr &group() const { return partition_.group(); }
  std::size_t rank() const { return partition_.size(); }
  const StructureTensor &constants() const { return constants_; }
  std::int64_t constant(std::size_t i, std::size_t j, std::size_t k) const
  {
    return constants_(i, j, k);
  }
  /// Nonzero (k, p(i, j, k)) pairs, k ascending.
  std::vector<std::pair<std::size_t, std::int64_t>> product(std::size_t i, std::size_t j) const;

 private:
  friend SRing structure_constants(const Partition &);
  explicit SRing(Partition p) : partition_(std::move(p)) {}
  Partition partition_;
  StructureTensor constants_;
};

/// Throws NotClosedError with a witness if the partition is not an S-ring.
SRing structure_constants(const Partition &p);

bool is_commutative(const SRing &s);

/// True iff h is a union of basic sets of s.
bool is_a_subgroup(const SRing &s, const Subgroup &h);
/// All A-subgroups, ordered by size and then by members.
std::vector<Subgroup> a_subgroups(const SRing &s);

/// S-ring over U/L whose basic sets are the images of basic sets inside U.
/// The returned ring's group is QuotientMap(U, L).target().
SRing quotient_sring(const SRing &s, const Subgroup &upper, const Subgroup &lower);

/// Checks the S-ring tensor identities; returns a description of the first
/// failure, or nothing when all hold.
std::optional<std::string> check_tensor_identities(const SRing &s);

}  // namespace schurlab
