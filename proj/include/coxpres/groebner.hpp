#pragma once

// Buchberger-based ideal arithmetic over Q.

#include "coxpres/exact.hpp"
#include "coxpres/polyring.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace coxpres {

inline constexpr std::size_t kDefaultPairBudget = 200000;

struct GroebnerOptions {
  std::size_t pair_budget = kDefaultPairBudget;
};

struct GroebnerStats {
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t pairs_skipped = 0;  // by product/chain criteria
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(std::size_t budget)
      : std::runtime_error("Groebner pair budget of " + std::to_string(budget) +
                           " exceeded"),
        budget_(budget) {}
  std::size_t budget() const { return budget_; }

private:
  std::size_t budget_;
};

class EmptyVariety : public std::domain_error {
public:
  EmptyVariety() : std::domain_error("empty variety: ideal is the whole ring") {}
};

/// Division remainder of f by `divisors` in f's ring order: no term of the
/// result is divisible by a leading term of any divisor.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

/// Reduced Groebner basis (monic, tail-reduced, sorted by descending leading
/// term) for the order of the generators' ring. Uses the normal selection
/// strategy with the Gebauer-Moeller criteria.
std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const RingPtr& ring,
                                   const GroebnerOptions& options = {},
                                   GroebnerStats* stats = nullptr);

class IdealPresentation {
public:
  IdealPresentation(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  /// Computed on first use and cached; copies share the cache.
  const std::vector<Polynomial>& groebner_basis(
      const GroebnerOptions& options = {}) const;
  bool has_cached_basis() const;

  bool contains(const Polynomial& f, const GroebnerOptions& options = {}) const;
  bool is_whole_ring(const GroebnerOptions& options = {}) const;

private:
  struct Cache;

  RingPtr ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// True iff both ideals have the same reduced Groebner basis. Ambient rings
/// (variables and order) must agree.
bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const GroebnerOptions& options = {});

/// Intersection with the subring on all but the first k variables, returned
/// in that subring under grevlex.
IdealPresentation eliminate(const IdealPresentation& ideal, std::size_t k,
                            const GroebnerOptions& options = {});

/// ideal : f^infinity, via an auxiliary variable w, 1 - w*f and elimination.
IdealPresentation saturate(const IdealPresentation& ideal, const Polynomial& f,
                           const GroebnerOptions& options = {});

/// Successive saturation by each listed variable.
IdealPresentation saturate_by_variables(const IdealPresentation& ideal,
                                        std::span<const std::size_t> vars,
                                        const GroebnerOptions& options = {});

/// Dimension of the affine zero set: the largest set of variables containing
/// no leading-term support. Throws EmptyVariety for the unit ideal.
std::size_t krull_dimension(const IdealPresentation& ideal,
                            const GroebnerOptions& options = {});

/// Kernel of the monomial map whose exponent vectors are the columns of
/// `exponents`: lattice binomials from the integer kernel, saturated by the
/// source variables. Builds variables x1..xn when `ring` is null.
IdealPresentation toric_kernel(const IntMatrix& exponents,
                               RingPtr ring = nullptr,
                               const GroebnerOptions& options = {});

}  // namespace coxpres
