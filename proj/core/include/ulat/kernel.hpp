#pragma once

// Kernel N(u) of a generated uniformity on a finite carrier, the Hausdorff
// quotient, sublattices, and the Hausdorff criterion for u_{J(S)}.

#include "ulat/finite_lattice.hpp"
#include "ulat/semimetric.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ulat {

using FiniteElement = FiniteLattice::Element;
using FiniteFamily = SemimetricFamily<FiniteElement>;

/// Zero-distance classes of a family that are not closed under meet/join.
class CongruenceError : public std::runtime_error {
 public:
  CongruenceError(const std::string& what, std::string first, std::string second)
      : std::runtime_error(what), first_(std::move(first)), second_(std::move(second)) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

struct KernelRelation {
  /// Class id per element index; ids follow the first element of each class.
  std::vector<std::size_t> class_of;
  std::vector<std::vector<FiniteElement>> classes;

  bool discrete() const { return classes.size() == class_of.size(); }
  bool same_class(FiniteElement x, FiniteElement y) const { return class_of.at(x.index) == class_of.at(y.index); }
};

/// Classes of "every member vanishes", without the congruence check. Throws
/// std::invalid_argument if zero distance is not transitive.
KernelRelation zero_distance_classes(const FiniteLattice& L, const FiniteFamily& D);

/// zero_distance_classes plus the check that classes are congruences for
/// meet and join; throws CongruenceError otherwise.
KernelRelation kernel_partition(const FiniteLattice& L, const FiniteFamily& D);

struct QuotientLattice {
  FiniteLattice carrier;
  FiniteFamily family;
  KernelRelation kernel;

  FiniteElement project(FiniteElement x) const {
    return carrier.element(kernel.class_of.at(x.index));
  }
};

/// Class-wise lattice and induced semimetrics. Throws std::invalid_argument
/// if an induced distance depends on the chosen representatives.
QuotientLattice quotient(const FiniteLattice& L, const KernelRelation& kernel, const FiniteFamily& D);

bool is_sublattice(const FiniteLattice& L, const std::vector<FiniteElement>& S);

/// Every nonempty sublattice, in order of increasing bitmask. Limited to
/// carriers of at most 16 elements.
std::vector<std::vector<FiniteElement>> enumerate_sublattices(const FiniteLattice& L);

struct PhResult {
  /// D is Hausdorff and x = sup_S (s ^ x) = inf_S (s v x) for every x.
  bool criterion = false;
  /// The zero set of ustar_family(D, J(S)) is the diagonal.
  bool kernel_hausdorff = false;
  bool agree() const { return criterion == kernel_hausdorff; }
  /// First x violating the sup/inf condition, if any.
  std::optional<FiniteElement> failing_element;
};

PhResult ph_criterion(const FiniteLattice& L, const std::vector<FiniteElement>& S, const FiniteFamily& D);

/// {x : x ~ s for some s in S} under the zero set of D.
std::vector<FiniteElement> kernel_closure(const FiniteLattice& L, const FiniteFamily& D,
                                          const std::vector<FiniteElement>& S);

/// Elements c != bottom with exactly one lower cover.
std::vector<FiniteElement> join_irreducibles(const FiniteLattice& L);

/// d(x, y) = |[c <= x] - [c <= y]|
LatticeSemimetric<FiniteElement> indicator_semimetric(const FiniteLattice& L, FiniteElement c);

/// Sum of the indicator semimetrics over all join-irreducibles.
LatticeSemimetric<FiniteElement> valuation_semimetric(const FiniteLattice& L);

/// {"carrier": name, "distances": [[i, j, "p/q" | "inf"], ...]}. Every
/// off-diagonal pair must be given in at least one orientation.
LatticeSemimetric<FiniteElement> load_semimetric_table(const FiniteLattice& L, std::string_view json,
                                                       std::string name = "table");
std::string semimetric_table_to_json(const FiniteLattice& L, const LatticeSemimetric<FiniteElement>& d);

}  // namespace ulat
