#include "coxpres/groebner.hpp"

#include <algorithm>
#include <cstdint>
#include <mutex>

namespace coxpres {

namespace {

const Polynomial* find_reducer(const Monomial& m,
                               std::span<const Polynomial> divisors) {
  for (const auto& g : divisors)
    if (g.leading().mono.divides(m)) return &g;
  return nullptr;
}

const Polynomial* find_reducer(const Monomial& m,
                               const std::vector<const Polynomial*>& divisors) {
  for (const auto* g : divisors)
    if (g->leading().mono.divides(m)) return g;
  return nullptr;
}

template <class Divisors>
Polynomial reduce_fully(Polynomial p, const Divisors& divisors) {
  std::vector<Term> rest;
  while (!p.is_zero()) {
    const Term& lt = p.leading();
    if (const Polynomial* g = find_reducer(lt.mono, divisors)) {
      Rational c = lt.coef / g->leading().coef;
      Monomial shift = lt.mono / g->leading().mono;
      p.sub_mul(c, shift, *g);
    } else {
      rest.push_back(p.pop_leading());
    }
  }
  return Polynomial::from_sorted_terms(p.ring(), std::move(rest));
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
public:
  Buchberger(RingPtr ring, const GroebnerOptions& options, GroebnerStats* stats)
      : ring_(std::move(ring)), options_(options), stats_(stats) {}

  std::vector<Polynomial> run(std::span<const Polynomial> gens) {
    std::vector<Polynomial> input;
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      input.push_back(g.in_ring(ring_).monic());
    }
    // Feed lower-degree generators first.
    std::stable_sort(input.begin(), input.end(),
                     [&](const Polynomial& a, const Polynomial& b) {
                       return ring_->order.compare(a.leading().mono,
                                                   b.leading().mono) < 0;
                     });
    for (auto& f : input) {
      Polynomial r = reduce_fully(std::move(f), active_list());
      if (r.is_zero()) continue;
      if (r.is_constant()) return {Polynomial::constant(ring_, Rational(1))};
      add(r.monic());
    }
    while (!pairs_.empty()) {
      Pair p = select();
      if (++reduced_ > options_.pair_budget)
        throw BudgetExceeded(options_.pair_budget);
      if (stats_) ++stats_->pairs_reduced;
      Polynomial s = spoly(p);
      Polynomial r = reduce_fully(std::move(s), active_list());
      if (r.is_zero()) {
        if (stats_) ++stats_->zero_reductions;
        continue;
      }
      if (r.is_constant()) return {Polynomial::constant(ring_, Rational(1))};
      add(r.monic());
    }
    return finalize();
  }

private:
  std::vector<const Polynomial*> active_list() const {
    std::vector<const Polynomial*> out;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) out.push_back(&basis_[i]);
    return out;
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Polynomial s = f.mul_term(Rational(1), p.lcm / f.leading().mono);
    s.sub_mul(Rational(1), p.lcm / g.leading().mono, g);
    return s;
  }

  Pair select() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k].lcm;
      const auto& b = pairs_[best].lcm;
      if (a.degree() < b.degree() ||
          (a.degree() == b.degree() && ring_->order.compare(a, b) < 0))
        best = k;
    }
    Pair p = std::move(pairs_[best]);
    pairs_[best] = std::move(pairs_.back());
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Moeller update for a new basis element.
  void add(Polynomial h) {
    const std::size_t t = basis_.size();
    const Monomial lt = h.leading().mono;
    basis_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> candidates;
    for (std::size_t i = 0; i < t; ++i)
      if (active_[i]) candidates.push_back({i, t, lcm(basis_[i].leading().mono, lt)});

    // Chain criterion among the new pairs.
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const Pair& p = candidates[a];
      bool coprime = basis_[p.i].leading().mono.coprime(lt);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t b = a + 1; b < candidates.size() && !dominated; ++b)
          dominated = candidates[b].lcm.divides(p.lcm);
        for (std::size_t b = 0; b < kept.size() && !dominated; ++b)
          dominated = kept[b].lcm.divides(p.lcm);
      }
      if (dominated) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      kept.push_back(p);
    }
    // Product criterion.
    std::vector<Pair> fresh;
    for (auto& p : kept) {
      if (basis_[p.i].leading().mono.coprime(lt)) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      fresh.push_back(std::move(p));
    }
    // Old pairs made redundant by the new leading term.
    std::vector<Pair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      if (lt.divides(p.lcm) &&
          !(lcm(basis_[p.i].leading().mono, lt) == p.lcm) &&
          !(lcm(basis_[p.j].leading().mono, lt) == p.lcm)) {
        if (stats_) ++stats_->pairs_skipped;
        continue;
      }
      old.push_back(std::move(p));
    }
    pairs_ = std::move(old);
    for (auto& p : fresh) pairs_.push_back(std::move(p));

    for (std::size_t i = 0; i < t; ++i)
      if (active_[i] && lt.divides(basis_[i].leading().mono)) active_[i] = false;
  }

  std::vector<Polynomial> finalize() const {
    std::vector<Polynomial> minimal;
    for (std::size_t i = 0; i < basis_.size(); ++i)
      if (active_[i]) minimal.push_back(basis_[i]);
    // Drop any element whose leading term another element divides.
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < minimal.size() && !redundant; ++j) {
        if (i == j) continue;
        const auto& a = minimal[j].leading().mono;
        const auto& b = minimal[i].leading().mono;
        redundant = a.divides(b) && (!(a == b) || j < i);
      }
      if (!redundant) reduced.push_back(minimal[i]);
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      std::vector<const Polynomial*> others;
      for (std::size_t j = 0; j < reduced.size(); ++j)
        if (j != i) others.push_back(&reduced[j]);
      Polynomial g = reduced[i];
      Term lead = g.pop_leading();
      Polynomial tail = reduce_fully(std::move(g), others);
      std::vector<Term> terms;
      terms.push_back(std::move(lead));
      for (const auto& t : tail.terms()) terms.push_back(t);
      out.push_back(Polynomial::from_sorted_terms(ring_, std::move(terms)).monic());
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order.compare(a.leading().mono, b.leading().mono) > 0;
    });
    return out;
  }

  RingPtr ring_;
  GroebnerOptions options_;
  GroebnerStats* stats_;
  std::vector<Polynomial> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::size_t reduced_ = 0;
};

void check_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a != b && !(*a == *b)) throw RingMismatch();
}

// Moves polynomials from `from` into `to`, mapping variable i of `from` to
// variable map[i] of `to`; map[i] < 0 means the variable must not occur.
Polynomial transfer(const Polynomial& f, const RingPtr& to,
                    const std::vector<long>& map) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    std::vector<Exponent> e(to->vars.size(), 0);
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (!t.mono[i]) continue;
      if (map[i] < 0) throw std::logic_error("transfer: eliminated variable occurs");
      e[static_cast<std::size_t>(map[i])] = t.mono[i];
    }
    terms.push_back({t.coef, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(to, std::move(terms));
}

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  for (const auto& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("normal_form: zero divisor");
    if (f.ring() && !(*g.ring() == *f.ring())) throw RingMismatch();
  }
  return reduce_fully(f, divisors);
}

std::vector<Polynomial> buchberger(std::span<const Polynomial> gens,
                                   const RingPtr& ring,
                                   const GroebnerOptions& options,
                                   GroebnerStats* stats) {
  return Buchberger(ring, options, stats).run(gens);
}

// ------------------------------------------------------- IdealPresentation

struct IdealPresentation::Cache {
  std::mutex mutex;
  std::optional<std::vector<Polynomial>> basis;
};

IdealPresentation::IdealPresentation(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    if (g.is_zero()) continue;
    check_same_ring(g.ring(), ring_);
    generators_.push_back(std::move(g));
  }
}

const std::vector<Polynomial>& IdealPresentation::groebner_basis(
    const GroebnerOptions& options) const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = buchberger(generators_, ring_, options);
  return *cache_->basis;
}

bool IdealPresentation::has_cached_basis() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->basis.has_value();
}

bool IdealPresentation::contains(const Polynomial& f,
                                 const GroebnerOptions& options) const {
  const auto& gb = groebner_basis(options);
  return normal_form(f, gb).is_zero();
}

bool IdealPresentation::is_whole_ring(const GroebnerOptions& options) const {
  const auto& gb = groebner_basis(options);
  return gb.size() == 1 && gb.front().is_constant();
}

bool ideal_equal(const IdealPresentation& a, const IdealPresentation& b,
                 const GroebnerOptions& options) {
  check_same_ring(a.ring(), b.ring());
  return a.groebner_basis(options) == b.groebner_basis(options);
}

IdealPresentation eliminate(const IdealPresentation& ideal, std::size_t k,
                            const GroebnerOptions& options) {
  const auto& names = ideal.ring()->vars.names();
  if (k > names.size()) throw std::invalid_argument("eliminate: k exceeds variable count");
  RingPtr elim = make_ring(names, MonomialOrder::elimination(k));
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.in_ring(elim));
  auto gb = buchberger(gens, elim, options);

  RingPtr sub = make_ring(std::vector<std::string>(names.begin() + static_cast<long>(k),
                                                   names.end()));
  std::vector<long> map(names.size());
  for (std::size_t i = 0; i < names.size(); ++i)
    map[i] = i < k ? -1 : static_cast<long>(i - k);
  std::vector<Polynomial> kept;
  for (const auto& g : gb) {
    auto s = g.support();
    if (std::any_of(s.begin(), s.begin() + static_cast<long>(k), [](bool b) { return b; }))
      continue;
    kept.push_back(transfer(g, sub, map));
  }
  return IdealPresentation(sub, std::move(kept));
}

IdealPresentation saturate(const IdealPresentation& ideal, const Polynomial& f,
                           const GroebnerOptions& options) {
  if (f.is_zero()) throw std::invalid_argument("saturate: f must be nonzero");
  check_same_ring(f.ring(), ideal.ring());
  const RingPtr& ring = ideal.ring();
  std::vector<std::string> names{"_sat_w"};
  for (const auto& n : ring->vars.names()) names.push_back(n);
  RingPtr ext = make_ring(names, MonomialOrder::elimination(1));
  std::vector<long> up(ring->vars.size());
  for (std::size_t i = 0; i < up.size(); ++i) up[i] = static_cast<long>(i + 1);

  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(transfer(g, ext, up));
  Polynomial w = Polynomial::variable(ext, 0);
  gens.push_back(Polynomial::constant(ext, Rational(1)) - w * transfer(f, ext, up));
  auto gb = buchberger(gens, ext, options);

  std::vector<long> down(names.size());
  down[0] = -1;
  for (std::size_t i = 1; i < names.size(); ++i) down[i] = static_cast<long>(i - 1);
  std::vector<Polynomial> kept;
  for (const auto& g : gb)
    if (!g.support()[0]) kept.push_back(transfer(g, ring, down));
  IdealPresentation out(ring, std::move(kept));
  out.groebner_basis(options);
  return out;
}

IdealPresentation saturate_by_variables(const IdealPresentation& ideal,
                                        std::span<const std::size_t> vars,
                                        const GroebnerOptions& options) {
  IdealPresentation cur = ideal;
  for (std::size_t v : vars)
    cur = saturate(cur, Polynomial::variable(ideal.ring(), v), options);
  return cur;
}

namespace {

using Mask = std::uint64_t;

void min_hitting_set(const std::vector<Mask>& sets, Mask chosen, std::size_t count,
                     std::size_t& best) {
  if (count >= best) return;
  const Mask* open = nullptr;
  for (const auto& s : sets)
    if (!(s & chosen)) {
      open = &s;
      break;
    }
  if (!open) {
    best = count;
    return;
  }
  if (count + 1 >= best) return;
  for (Mask bits = *open; bits; bits &= bits - 1) {
    Mask v = bits & (~bits + 1);
    min_hitting_set(sets, chosen | v, count + 1, best);
  }
}

}  // namespace

std::size_t krull_dimension(const IdealPresentation& ideal,
                            const GroebnerOptions& options) {
  const std::size_t n = ideal.ring()->vars.size();
  if (n > 64) throw std::invalid_argument("krull_dimension supports at most 64 variables");
  const auto& gb = ideal.groebner_basis(options);
  if (gb.size() == 1 && gb.front().is_constant()) throw EmptyVariety();
  std::vector<Mask> supports;
  for (const auto& g : gb) {
    Mask m = 0;
    const auto& lt = g.leading().mono;
    for (std::size_t i = 0; i < n; ++i)
      if (lt[i]) m |= Mask{1} << i;
    supports.push_back(m);
  }
  // Keep inclusion-minimal supports, smallest first.
  std::sort(supports.begin(), supports.end(), [](Mask a, Mask b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Mask> minimal;
  for (Mask s : supports) {
    bool covered = std::any_of(minimal.begin(), minimal.end(),
                               [s](Mask m) { return (m & s) == m; });
    if (!covered) minimal.push_back(s);
  }
  std::size_t best = n + 1;
  min_hitting_set(minimal, 0, 0, best);
  return n - best;
}

IdealPresentation toric_kernel(const IntMatrix& exponents, RingPtr ring,
                               const GroebnerOptions& options) {
  const std::size_t n = exponents.cols();
  if (!ring) {
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    ring = make_ring(std::move(names));
  }
  if (ring->vars.size() != n)
    throw std::invalid_argument("toric_kernel: ring size differs from column count");
  IntMatrix basis = kernel_basis(exponents);
  std::vector<Polynomial> gens;
  std::vector<bool> used(n, false);
  for (std::size_t r = 0; r < basis.rows(); ++r) {
    std::vector<Exponent> pos(n, 0), neg(n, 0);
    for (std::size_t c = 0; c < n; ++c) {
      const BigInt& v = basis(r, c);
      if (sgn(v) == 0) continue;
      used[c] = true;
      if (sgn(v) > 0) pos[c] = static_cast<Exponent>(v.get_ui());
      else neg[c] = static_cast<Exponent>(BigInt(-v).get_ui());
    }
    gens.push_back(Polynomial::monomial(ring, Rational(1), Monomial(std::move(pos))) -
                   Polynomial::monomial(ring, Rational(1), Monomial(std::move(neg))));
  }
  IdealPresentation lattice(ring, std::move(gens));
  std::vector<std::size_t> vars;
  for (std::size_t c = 0; c < n; ++c)
    if (used[c]) vars.push_back(c);
  IdealPresentation out = saturate_by_variables(lattice, vars, options);
  out.groebner_basis(options);
  return out;
}

}  // namespace coxpres
