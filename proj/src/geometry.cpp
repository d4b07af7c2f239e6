#include "coxpres/geometry.hpp"

#include <algorithm>
#include <set>

namespace coxpres {

namespace {

using RatMatrix = std::vector<std::vector<Rational>>;

std::vector<Rational> to_rational(const IntVector& v) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::vector<IntVector> integer_nullspace(const RatMatrix& rows, std::size_t dim) {
  std::vector<IntVector> out;
  for (const auto& v : rational_nullspace(rows, dim))
    out.push_back(primitive(std::span<const Rational>(v)));
  return out;
}

// Subsets of {0..n-1} of size k, in lexicographic order.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

HalfspaceDescription halfspaces_of(std::size_t dim, const std::vector<IntVector>& gens) {
  HalfspaceDescription h;
  RatMatrix rows;
  for (const auto& g : gens) rows.push_back(to_rational(g));
  h.equations = integer_nullspace(rows, dim);
  const std::size_t r = dim - h.equations.size();
  if (r == 0) return h;
  RatMatrix eq_rows;
  for (const auto& e : h.equations) eq_rows.push_back(to_rational(e));
  std::set<IntVector> found;
  for_each_subset(gens.size(), r - 1, [&](const std::vector<std::size_t>& subset) {
    RatMatrix m = eq_rows;
    for (auto i : subset) m.push_back(rows[i]);
    auto ns = integer_nullspace(m, dim);
    if (ns.size() != 1) return;
    IntVector a = ns.front();
    bool pos = false, neg = false;
    for (const auto& g : gens) {
      int s = sgn(dot(a, g));
      pos |= s > 0;
      neg |= s < 0;
    }
    if (pos && neg) return;
    if (!pos && !neg) return;
    if (neg)
      for (auto& x : a) x = -x;
    found.insert(std::move(a));
  });
  h.inequalities.assign(found.begin(), found.end());
  return h;
}

bool satisfies(const HalfspaceDescription& h, const IntVector& v, Membership mode) {
  for (const auto& e : h.equations)
    if (sgn(dot(e, v)) != 0) return false;
  for (const auto& a : h.inequalities) {
    int s = sgn(dot(a, v));
    if (s < 0 || (s == 0 && mode == Membership::relative_interior)) return false;
  }
  return true;
}

bool independent(const std::vector<IntVector>& gens, std::size_t dim) {
  if (gens.empty()) return true;
  IntMatrix m = IntMatrix::from_rows(gens, dim);
  return rank(m) == gens.size();
}

bool in_cone(std::size_t dim, const std::vector<IntVector>& gens, const IntVector& v,
             Membership mode) {
  if (v.size() != dim) throw std::invalid_argument("cone membership: dimension mismatch");
  if (gens.empty()) return is_zero_vector(v);
  if (independent(gens, dim)) {
    std::vector<Rational> coords;
    if (!simplicial_coordinates(gens, v, coords)) return false;
    for (const auto& c : coords) {
      int s = sgn(c);
      if (s < 0 || (s == 0 && mode == Membership::relative_interior)) return false;
    }
    return true;
  }
  return satisfies(halfspaces_of(dim, gens), v, mode);
}

std::vector<IntVector> canonical_generators(std::size_t dim, std::vector<IntVector> gens) {
  std::vector<IntVector> prim;
  for (auto& g : gens) {
    if (g.size() != dim) throw std::invalid_argument("cone generator has wrong dimension");
    if (is_zero_vector(g)) continue;
    prim.push_back(primitive(std::span<const BigInt>(g)));
  }
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  if (dim > 3) return prim;
  for (std::size_t i = prim.size(); i-- > 0;) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < prim.size(); ++j)
      if (j != i) others.push_back(prim[j]);
    if (!others.empty() && in_cone(dim, others, prim[i], Membership::closed))
      prim.erase(prim.begin() + static_cast<long>(i));
  }
  return prim;
}

}  // namespace

bool simplicial_coordinates(const std::vector<IntVector>& gens, const IntVector& v,
                            std::vector<Rational>& coords) {
  const std::size_t dim = v.size();
  RatMatrix a(dim, std::vector<Rational>(gens.size()));
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) a[i][j] = gens[j][i];
  return solve_unique(a, to_rational(v), coords);
}

RationalCone::RationalCone(std::size_t dim, std::vector<IntVector> generators)
    : dim_(dim), generators_(canonical_generators(dim, std::move(generators))) {}

bool RationalCone::contains(const IntVector& v, Membership mode) const {
  return in_cone(dim_, generators_, v, mode);
}

HalfspaceDescription halfspaces(const RationalCone& cone) {
  return halfspaces_of(cone.dim(), cone.generators());
}

bool cone_membership(const RationalCone& cone, const IntVector& v, Membership mode) {
  return cone.contains(v, mode);
}

RationalCone cone_intersect(const RationalCone& a, const RationalCone& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("cone_intersect: dimension mismatch");
  const std::size_t dim = a.dim();
  if (dim > 3) throw UnsupportedDimension();
  HalfspaceDescription ha = halfspaces(a), hb = halfspaces(b);
  RatMatrix eq, ineq;
  for (const auto* h : {&ha, &hb}) {
    for (const auto& e : h->equations) eq.push_back(to_rational(e));
    for (const auto& i : h->inequalities) ineq.push_back(to_rational(i));
  }
  RatMatrix all = eq;
  all.insert(all.end(), ineq.begin(), ineq.end());
  auto lineality = integer_nullspace(all, dim);
  RatMatrix lin_rows;
  for (const auto& l : lineality) lin_rows.push_back(to_rational(l));

  auto feasible = [&](const IntVector& v) {
    for (const auto& row : ineq) {
      Rational s = 0;
      for (std::size_t i = 0; i < dim; ++i) s += row[i] * v[i];
      if (sgn(s) < 0) return false;
    }
    return true;
  };

  std::vector<IntVector> gens;
  for (const auto& l : lineality) {
    gens.push_back(l);
    IntVector neg = l;
    for (auto& x : neg) x = -x;
    gens.push_back(std::move(neg));
  }
  for (std::size_t k = 0; k <= std::min(ineq.size(), dim); ++k) {
    for_each_subset(ineq.size(), k, [&](const std::vector<std::size_t>& subset) {
      RatMatrix m = eq;
      for (auto i : subset) m.push_back(ineq[i]);
      if (rational_nullspace(m, dim).size() != lineality.size() + 1) return;
      m.insert(m.end(), lin_rows.begin(), lin_rows.end());
      auto ns = integer_nullspace(m, dim);
      if (ns.size() != 1) return;
      IntVector v = ns.front();
      if (feasible(v)) gens.push_back(v);
      for (auto& x : v) x = -x;
      if (feasible(v)) gens.push_back(v);
    });
  }
  return RationalCone(dim, std::move(gens));
}

RationalCone Fan::cone(std::size_t i) const {
  std::vector<IntVector> gens;
  for (auto r : cones.at(i)) gens.push_back(rays.at(r));
  return RationalCone(dim, std::move(gens));
}

// ----------------------------------------------------------------- GIT fan

namespace {

int cross_sign(const IntVector& a, const IntVector& b) {
  return sgn(BigInt(a[0] * b[1] - a[1] * b[0]));
}

}  // namespace

GitFan git_fan(const IntMatrix& q) {
  if (q.rows() != 2) throw std::invalid_argument("git_fan expects a 2-row weight matrix");
  std::vector<IntVector> classes;
  for (std::size_t j = 0; j < q.cols(); ++j) {
    IntVector col = q.column(j);
    if (is_zero_vector(col)) continue;
    classes.push_back(primitive(std::span<const BigInt>(col)));
  }
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  if (classes.empty()) throw std::invalid_argument("git_fan: weight matrix has rank 0");

  // Pointedness: no two classes opposite, and all within an open half-plane.
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      if (cross_sign(classes[i], classes[j]) == 0)
        throw std::invalid_argument("git_fan: weights not in a common half-plane");
  // Clockwise order: a precedes b when b is clockwise of a.
  auto clockwise = [](const IntVector& a, const IntVector& b) {
    return cross_sign(a, b) < 0;
  };
  // Start from the class with no other class counterclockwise of it.
  std::vector<IntVector> ordered;
  std::vector<IntVector> pool = classes;
  while (!pool.empty()) {
    auto it = std::find_if(pool.begin(), pool.end(), [&](const IntVector& a) {
      return std::none_of(pool.begin(), pool.end(),
                          [&](const IntVector& b) { return clockwise(b, a); });
    });
    if (it == pool.end())
      throw std::invalid_argument("git_fan: weights not in a common half-plane");
    ordered.push_back(*it);
    pool.erase(it);
  }
  for (std::size_t i = 0; i + 1 < ordered.size(); ++i)
    for (std::size_t j = i + 1; j < ordered.size(); ++j)
      if (!clockwise(ordered[i], ordered[j]))
        throw std::invalid_argument("git_fan: weights not in a common half-plane");

  GitFan out;
  out.fan.dim = 2;
  out.fan.rays = ordered;
  out.fan.simplicial = true;
  if (ordered.size() == 1) {
    out.degenerate = true;
    out.fan.cones.push_back({0});
    out.chambers.emplace_back(2, std::vector<IntVector>{ordered[0]});
    return out;
  }
  for (std::size_t i = 0; i + 1 < ordered.size(); ++i) {
    out.fan.cones.push_back({i, i + 1});
    out.chambers.emplace_back(2, std::vector<IntVector>{ordered[i], ordered[i + 1]});
  }
  return out;
}

// ----------------------------------------------------------- Gale duality

namespace {

void require_gale_pair(const IntMatrix& p, const IntMatrix& q) {
  if (p.cols() != q.cols() || !(p * q.transpose()).is_zero()) throw GalePairError();
}

}  // namespace

bool gale_cone_test(const IntMatrix& p, const IntMatrix& q, const IntVector& w,
                    const std::vector<std::size_t>& removed) {
  require_gale_pair(p, q);
  std::vector<IntVector> gens;
  for (auto i : removed) {
    if (i >= q.cols()) throw std::out_of_range("gale_cone_test: column index");
    gens.push_back(q.column(i));
  }
  std::vector<IntVector> prim;
  for (auto& g : gens)
    if (!is_zero_vector(g)) prim.push_back(primitive(std::span<const BigInt>(g)));
  std::sort(prim.begin(), prim.end());
  prim.erase(std::unique(prim.begin(), prim.end()), prim.end());
  return in_cone(q.rows(), prim, w, Membership::relative_interior);
}

Fan quotient_fan(const IntMatrix& p, const IntMatrix& q, const IntVector& w) {
  require_gale_pair(p, q);
  const std::size_t n = p.cols();
  const std::size_t k = rank(q);
  Fan fan;
  fan.dim = p.rows();
  for (std::size_t j = 0; j < n; ++j) fan.rays.push_back(p.column(j));
  fan.simplicial = true;
  for_each_subset(n, k, [&](const std::vector<std::size_t>& removed) {
    if (!gale_cone_test(p, q, w, removed)) return;
    std::vector<std::size_t> kept;
    for (std::size_t j = 0, r = 0; j < n; ++j) {
      if (r < removed.size() && removed[r] == j) {
        ++r;
        continue;
      }
      kept.push_back(j);
    }
    std::vector<IntVector> gens;
    for (auto j : kept) gens.push_back(fan.rays[j]);
    if (!independent(gens, fan.dim)) fan.simplicial = false;
    fan.cones.push_back(std::move(kept));
  });
  return fan;
}

// ------------------------------------------------------ stellar subdivision

Fan stellar_subdivide(const Fan& fan, const std::vector<std::size_t>& target,
                      const IntVector& new_ray) {
  if (!fan.simplicial) throw SubdivisionError("stellar_subdivide requires a simplicial fan");
  if (target.empty()) throw SubdivisionError("empty target cone");
  if (new_ray.size() != fan.dim) throw SubdivisionError("new ray has wrong dimension");
  IntVector ray = primitive(std::span<const BigInt>(new_ray));
  if (std::find(fan.rays.begin(), fan.rays.end(), ray) != fan.rays.end())
    throw SubdivisionError("new ray coincides with an existing ray");
  std::vector<std::size_t> tgt = target;
  std::sort(tgt.begin(), tgt.end());
  std::vector<IntVector> tgt_rays;
  for (auto i : tgt) tgt_rays.push_back(fan.rays.at(i));
  std::vector<Rational> coords;
  if (!simplicial_coordinates(tgt_rays, ray, coords) ||
      std::any_of(coords.begin(), coords.end(), [](const Rational& c) { return sgn(c) <= 0; }))
    throw SubdivisionError("new ray is not in the relative interior of the target cone");

  auto contains_target = [&](const std::vector<std::size_t>& c) {
    return std::includes(c.begin(), c.end(), tgt.begin(), tgt.end());
  };
  if (std::none_of(fan.cones.begin(), fan.cones.end(), contains_target))
    throw SubdivisionError("target is not a face of any maximal cone");

  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(ray);
  out.simplicial = true;
  const std::size_t fresh = fan.rays.size();
  for (const auto& c : fan.cones) {
    if (!contains_target(c)) {
      out.cones.push_back(c);
      continue;
    }
    for (auto t : tgt) {
      std::vector<std::size_t> nc;
      for (auto r : c)
        if (r != t) nc.push_back(r);
      nc.push_back(fresh);
      out.cones.push_back(std::move(nc));
    }
  }
  return out;
}

IntVector barycenter_direction(const IntMatrix& p, const std::vector<std::size_t>& cols) {
  IntVector sum(p.rows(), BigInt(0));
  for (auto c : cols)
    for (std::size_t r = 0; r < p.rows(); ++r) sum[r] += p(r, c);
  if (is_zero_vector(sum)) throw std::invalid_argument("barycenter_direction: zero sum");
  return primitive(std::span<const BigInt>(sum));
}

MoriCones mori_cones(const std::vector<IntVector>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("mori_cones: no degrees");
  const std::size_t dim = degrees.front().size();
  RationalCone eff(dim, degrees);
  RationalCone mov = eff;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    std::vector<IntVector> others;
    for (std::size_t j = 0; j < degrees.size(); ++j)
      if (j != i) others.push_back(degrees[j]);
    RationalCone without(dim, std::move(others));
    if (without == eff) continue;
    mov = cone_intersect(mov, without);
  }
  return {std::move(eff), std::move(mov)};
}

}  // namespace coxpres
