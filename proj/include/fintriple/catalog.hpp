#ifndef FINTRIPLE_CATALOG_HPP
#define FINTRIPLE_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "fintriple/hopf.hpp"

namespace fintriple {

/// A shipped worked example.  Triples carry their algebra and Krajewski
/// data; group-algebra material carries representations and the Wedderburn
/// isomorphism instead.
struct Fixture {
  std::string name;
  std::string description;

  // Triple data (absent for pure representation fixtures).
  std::optional<AlgebraSpec> algebra;
  std::optional<IMatrix> q;
  std::vector<CMatrix> dirac_params;  // default parameters, may be empty

  // Group binding: points of a commutative triple in declaration order, or
  // the group whose representations are shipped.
  std::optional<FiniteGroup> group;
  std::vector<GroupRep> reps;
  std::vector<AlgebraElement> iso;  // group element -> algebra element

  // Expected values re-derived by the live modules in tests.
  int expected_dim = 0;
  std::optional<IMatrix> expected_intersection_form;
  std::vector<double> expected_haar_weights;

  bool has_triple() const { return algebra.has_value() && q.has_value(); }
  TripleSpace build_space() const;
};

std::vector<std::string> catalog_names();
Fixture fixture(const std::string& name);

}  // namespace fintriple

#endif
