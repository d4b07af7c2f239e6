#pragma once

// Exact rational polyhedral cones and fans.

#include "coxpres/exact.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace coxpres {

enum class Membership { closed, relative_interior };

/// Cone generated by primitive integer vectors. Generators are kept sorted
/// and deduplicated; in dimension <= 3 redundant generators are dropped, so
/// a pointed cone stores exactly its extremal rays.
class RationalCone {
public:
  explicit RationalCone(std::size_t dim) : dim_(dim) {}
  RationalCone(std::size_t dim, std::vector<IntVector> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

  bool contains(const IntVector& v, Membership mode = Membership::closed) const;

  friend bool operator==(const RationalCone&, const RationalCone&) = default;

private:
  std::size_t dim_ = 0;
  std::vector<IntVector> generators_;
};

/// {x : equations * x == 0, inequalities * x >= 0}; the inequalities are the
/// facet normals.
struct HalfspaceDescription {
  std::vector<IntVector> equations;
  std::vector<IntVector> inequalities;
};

HalfspaceDescription halfspaces(const RationalCone& cone);

bool cone_membership(const RationalCone& cone, const IntVector& v,
                     Membership mode);

class UnsupportedDimension : public std::invalid_argument {
public:
  UnsupportedDimension()
      : std::invalid_argument("cone intersection supports ambient dimension <= 3") {}
};

RationalCone cone_intersect(const RationalCone& a, const RationalCone& b);

/// Rays plus maximal cones given as sorted ray-index sets.
struct Fan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> cones;
  bool simplicial = false;

  RationalCone cone(std::size_t i) const;

  friend bool operator==(const Fan&, const Fan&) = default;
};

struct GitFan {
  Fan fan;
  std::vector<RationalCone> chambers;  // maximal chambers, clockwise
  bool degenerate = false;             // rank(Q) == 1
};

/// GIT fan of a rank-2 torus acting linearly with weights the columns of Q,
/// obtained by angular sorting of the primitive column classes.
GitFan git_fan(const IntMatrix& q);

class GalePairError : public std::invalid_argument {
public:
  GalePairError() : std::invalid_argument("not a Gale pair: P * Q^T != 0") {}
};

/// Whether the columns of P outside `removed` span a cone of the quotient
/// fan for the chamber of w: w must lie in relint cone(Q_i : i in removed).
bool gale_cone_test(const IntMatrix& p, const IntMatrix& q, const IntVector& w,
                    const std::vector<std::size_t>& removed);

/// Quotient fan on the columns of P whose maximal cones are the complements
/// of the rank(Q)-element index sets accepted by gale_cone_test.
Fan quotient_fan(const IntMatrix& p, const IntMatrix& q, const IntVector& w);

class SubdivisionError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Stellar subdivision of a simplicial fan at the cone on `target`, inserting
/// new_ray (which must lie in that cone's relative interior).
Fan stellar_subdivide(const Fan& fan, const std::vector<std::size_t>& target,
                      const IntVector& new_ray);

/// Primitive vector on the ray through the sum of the selected columns.
IntVector barycenter_direction(const IntMatrix& p,
                               const std::vector<std::size_t>& cols);

struct MoriCones {
  RationalCone effective;
  RationalCone movable;
};

/// Eff = cone of all degrees; Mov = intersection over generators i of the
/// cone on the degrees of all other generators.
MoriCones mori_cones(const std::vector<IntVector>& degrees);

/// Coordinates of v in terms of linearly independent generators, if v lies
/// in their span.
bool simplicial_coordinates(const std::vector<IntVector>& gens,
                            const IntVector& v, std::vector<Rational>& coords);

}  // namespace coxpres
