#pragma once

// Constructions for the Cox ring of the space X(2,c,d) of complete rank-2
// collineations: Pluecker data, weight matrices, the Gale matrix, the
// pullback along the blow-up, the Segre-type map and its auxiliary ideals.

#include "coxpres/exact.hpp"
#include "coxpres/geometry.hpp"
#include "coxpres/groebner.hpp"
#include "coxpres/polyring.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coxpres {

class UnsupportedParams : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Dimensions c = dim V, d = dim W; the rank u = 2 is fixed.
struct Params {
  int c = 0;
  int d = 0;

  /// Throws UnsupportedParams unless c, d >= 2.
  static Params make(int c, int d);

  int m() const { return c + d; }
  std::size_t n() const;  // binomial(c+d, 2)
  std::size_t a_plus() const;
  std::size_t a_zero() const;
  std::size_t a_minus() const;
  bool general() const { return c > 2 && d > 2; }
};

enum class Regime { general, c2, d2, p3 };
std::string to_string(Regime r);

enum class Block { plus, zero, minus };

using IndexPair = std::pair<int, int>;
using Quadruple = std::array<int, 4>;

Block block_of(const Params& p, int i, int j);

/// Pluecker index pairs in block order (a+, a0, a-), lexicographic inside
/// each block.
std::vector<IndexPair> plucker_pairs(const Params& p);

std::string plucker_name(int i, int j);
inline constexpr const char* kTinf = "Tinf";

/// All i<j<k<l <= m in lexicographic order.
std::vector<Quadruple> quadruples(int m);

/// True for i<j<=c<k<l, the relations that carry T_inf.
bool carries_tinf(const Params& p, const Quadruple& q);

/// Ring of T_i_j, 1 <= i < j <= m, lexicographic pair order, grevlex.
RingPtr grassmann_ring(int m);

/// T_ij T_kl - T_ik T_jl + T_il T_jk in any ring containing those names.
Polynomial plucker_relation(const RingPtr& ring, const Quadruple& q);

/// One relation per quadruple of {1..m}, in grassmann_ring(m); empty for
/// m < 4.
std::vector<Polynomial> plucker_relations(int m);

/// Renames variables by name; every source name must exist in the target.
RingMap map_by_name(const RingPtr& source, const RingPtr& target);

struct CoxPresentation {
  Params params;
  Regime regime = Regime::general;
  RingPtr ring;
  std::vector<Polynomial> relations;
  Grading grading;
  std::size_t class_group_rank = 0;
};

CoxPresentation cox_presentation(const Params& p);

struct WeightMatrices {
  IntMatrix q;      // 2 x n
  IntMatrix q_inf;  // 3 x (n+1), last column for T_inf
};

WeightMatrices weight_matrices(const Params& p);

/// Block matrix of difference matrices D(a+), D(a0), D(a-) over the row
/// (A+, A0, A-); (n-2) x n.
IntMatrix gale_matrix_P(const Params& p);

/// Ring of the n Pluecker variables in block order (no T_inf).
RingPtr plucker_space_ring(const Params& p);
/// plucker_space_ring plus T_inf as the last variable.
RingPtr presentation_ring(const Params& p);

/// Comorphism of the lifted blow-up: T_ij -> T_inf T_ij for i,j <= c.
RingMap blowup_comorphism(const Params& p);

struct PullbackResult {
  Polynomial pulled;     // image of P_ijkl
  unsigned epsilon = 0;  // power of T_inf common to all terms
  Polynomial reduced;    // pulled / T_inf^epsilon
};

PullbackResult pullback_and_cancel(const Params& p, const Quadruple& q);

/// Ring B: S_a_b (a<b<=c), S_k (1<=k<=c+d), S_g_h (c<g<h).
RingPtr segre_target_ring(const Params& p);

/// T_ij -> S_ij on pure blocks, S_i S_j on the mixed block.
RingMap segre_map(const Params& p);

/// Column j is the exponent vector of the image of Pluecker variable j.
IntMatrix segre_exponent_matrix(const Params& p);

struct ProofIdeals {
  RingPtr a_ring;   // Pluecker variables
  RingPtr b_ring;   // segre_target_ring
  RingPtr b1_ring;  // S_a_b, S_k for k <= c
  RingPtr b2_ring;  // S_g_h, S_k for k > c
  std::vector<Quadruple> g_quadruples;
  std::vector<Quadruple> h_quadruples;
  std::vector<Polynomial> g;            // binomials, in a_ring
  std::vector<Polynomial> h;            // Pluecker relations, in a_ring
  std::vector<Polynomial> sigma_h;      // images computed through segre_map
  std::vector<Polynomial> sigma_h_table;  // the four-case closed form
  std::vector<Polynomial> b;            // stripped generators, in b_ring
  std::vector<Polynomial> b1;           // families living in b1_ring
  std::vector<Polynomial> b2;           // families living in b2_ring
};

/// Requires c, d > 2.
ProofIdeals proof_ideals(const Params& p);

/// S_m -> T_{m,c+1} on b1_ring, landing in grassmann_ring(c+1).
RingMap rename_b1(const Params& p, const ProofIdeals& ideals);
/// S_m -> T_{1,m-c+1}, S_gh -> T_{g-c+1,h-c+1} on b2_ring, landing in
/// grassmann_ring(d+1).
RingMap rename_b2(const Params& p, const ProofIdeals& ideals);

struct WitnessPoint {
  std::map<IndexPair, Rational> coords;  // unlisted coordinates are zero
};

struct Witnesses {
  WitnessPoint x1;
  WitnessPoint x2;
  RationalCone omega1{2};
  RationalCone omega2{2};
  std::vector<Rational> residuals1;  // Pluecker relations at x1
  std::vector<Rational> residuals2;
};

std::vector<Rational> evaluate_relations(const Params& p, const WitnessPoint& x);

/// Orbit cone: cone over the Q-degrees of the nonvanishing coordinates.
RationalCone orbit_cone(const Params& p, const WitnessPoint& x);

Witnesses witness_points(const Params& p);

/// Q_inf-degree of the Laurent monomial
/// T_inf T_12 T_{c,c+1}^{middle_exponent} T_{c+d-1,c+d}.
IntVector local_equation_degree(const Params& p, long middle_exponent = -2);

/// True iff the local equation's Q_inf-degree vanishes (torus invariance).
bool local_equation_invariance(const Params& p, long middle_exponent = -2);

/// The generator degrees of the Cox ring (columns of its grading).
std::vector<IntVector> generator_degrees(const CoxPresentation& pres);

/// Multiset equality of two polynomial lists in the same ring.
bool same_polynomial_set(std::vector<Polynomial> a, std::vector<Polynomial> b);

}  // namespace coxpres
