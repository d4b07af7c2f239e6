#include "coxpres/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

namespace coxpres {

VariableTable::VariableTable(std::vector<std::string> names)
    : names_(std::move(names)) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second)
      throw std::invalid_argument("duplicate variable name: " + n);
}

std::optional<std::size_t> VariableTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index,
                            Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) out.exps_[i] += b.exps_[i];
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) {
    if (b.exps_[i] > out.exps_[i])
      throw std::invalid_argument("monomial division is not exact");
    out.exps_[i] -= b.exps_[i];
  }
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  out.degree_ = 0;
  for (std::size_t i = 0; i < out.exps_.size(); ++i) {
    out.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    out.degree_ += out.exps_[i];
  }
  return out;
}

// ----------------------------------------------------------- MonomialOrder

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                  std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // Smallest-ranked variable is index lo; a smaller exponent there wins.
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind) {
    case OrderKind::grevlex: {
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::lex:
      for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case OrderKind::elimination: {
      const std::size_t k = std::min(block, a.size());
      if (int c = grevlex_range(a, b, 0, k)) return c;
      return grevlex_range(a, b, k, a.size());
    }
  }
  return 0;
}

std::string to_string(const MonomialOrder& order) {
  switch (order.kind) {
    case OrderKind::grevlex: return "grevlex";
    case OrderKind::lex: return "lex";
    case OrderKind::elimination:
      return "elimination(" + std::to_string(order.block) + ")";
  }
  return "?";
}

RingPtr make_ring(std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const Ring>(
      Ring{VariableTable(std::move(names)), order});
}

RingPtr with_order(const RingPtr& ring, MonomialOrder order) {
  return std::make_shared<const Ring>(Ring{ring->vars, order});
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const auto& order = ring->order;
  const std::size_t n = ring->vars.size();
  for (const auto& t : terms)
    if (t.mono.size() != n)
      throw std::invalid_argument("monomial length does not match ring");
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  Polynomial p(std::move(ring));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coef += t.coef;
      if (sgn(p.terms_.back().coef) == 0) p.terms_.pop_back();
    } else if (sgn(t.coef) != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (sgn(c) != 0) p.terms_.push_back({c, Monomial(ring->vars.size())});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  const std::size_t n = ring->vars.size();
  if (index >= n) throw std::out_of_range("variable index out of range");
  Polynomial p(std::move(ring));
  p.terms_.push_back({Rational(1), Monomial::variable(n, index)});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::string_view name) {
  auto idx = ring->vars.index_of(name);
  if (!idx) throw std::invalid_argument("unknown variable: " + std::string(name));
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::monomial(RingPtr ring, const Rational& c, Monomial m) {
  if (m.size() != ring->vars.size())
    throw std::invalid_argument("monomial length does not match ring");
  Polynomial p(std::move(ring));
  if (sgn(c) != 0) p.terms_.push_back({c, std::move(m)});
  return p;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

Term Polynomial::pop_leading() {
  Term t = std::move(terms_.front());
  terms_.erase(terms_.begin());
  return t;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

void Polynomial::check_ring(const Polynomial& other) const {
  if (ring_ == other.ring_) return;
  if (!ring_ || !other.ring_ || !(*ring_ == *other.ring_)) throw RingMismatch();
}

void Polynomial::add_scaled(const Rational& c, const Monomial& m,
                            const Polynomial& g) {
  if (sgn(c) == 0 || g.terms_.empty()) return;
  const auto& order = ring_->order;
  std::vector<Term> out;
  out.reserve(terms_.size() + g.terms_.size());
  auto it = terms_.begin();
  auto jt = g.terms_.begin();
  Monomial shifted;
  bool have = false;
  while (it != terms_.end() || jt != g.terms_.end()) {
    if (jt != g.terms_.end() && !have) {
      shifted = jt->mono * m;
      have = true;
    }
    int cmp;
    if (it == terms_.end()) cmp = -1;
    else if (jt == g.terms_.end()) cmp = 1;
    else cmp = order.compare(it->mono, shifted);
    if (cmp > 0) {
      out.push_back(std::move(*it));
      ++it;
    } else if (cmp < 0) {
      out.push_back({c * jt->coef, std::move(shifted)});
      have = false;
      ++jt;
    } else {
      Rational sum = it->coef + c * jt->coef;
      if (sgn(sum) != 0) out.push_back({std::move(sum), std::move(it->mono)});
      ++it;
      ++jt;
      have = false;
    }
  }
  terms_ = std::move(out);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  check_ring(other);
  if (other.terms_.empty()) return *this;
  add_scaled(Rational(1), Monomial(ring_->vars.size()), other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!ring_) ring_ = other.ring_;
  check_ring(other);
  if (other.terms_.empty()) return *this;
  add_scaled(Rational(-1), Monomial(ring_->vars.size()), other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_ring(b);
  Polynomial out(a.ring_);
  // Accumulate the shorter factor's terms against the longer.
  const Polynomial& big = a.size() >= b.size() ? a : b;
  const Polynomial& small = a.size() >= b.size() ? b : a;
  for (const auto& t : small.terms_) out.add_scaled(t.coef, t.mono, big);
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.empty() && b.terms_.empty()) return true;
  a.check_ring(b);
  return a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, Rational(1));
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  Polynomial out(ring_);
  if (sgn(c) == 0) return out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.push_back({t.coef * c, t.mono * m});
  return out;
}

void Polynomial::sub_mul(const Rational& c, const Monomial& m,
                         const Polynomial& g) {
  check_ring(g);
  add_scaled(-c, m, g);
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  Polynomial out = *this;
  Rational inv = 1 / terms_.front().coef;
  out *= inv;
  return out;
}

Polynomial Polynomial::in_ring(RingPtr ring) const {
  if (ring->vars != ring_->vars)
    throw std::invalid_argument("in_ring: variable tables differ");
  return from_terms(std::move(ring), terms_);
}

std::vector<bool> Polynomial::support() const {
  std::vector<bool> s(ring_ ? ring_->vars.size() : 0, false);
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < s.size(); ++i)
      if (t.mono[i]) s[i] = true;
  return s;
}

bool Polynomial::is_binomial_pm1() const {
  if (terms_.size() != 2) return false;
  return (terms_[0].coef == 1 && terms_[1].coef == -1) ||
         (terms_[0].coef == -1 && terms_[1].coef == 1);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  if (point.size() != ring_->vars.size())
    throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size() && sgn(v) != 0; ++i)
      for (Exponent e = 0; e < t.mono[i]; ++e) v *= point[i];
    sum += v;
  }
  return sum;
}

// ---------------------------------------------------------------- printing

std::string to_string(const Monomial& m, const VariableTable& vars) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!out.empty()) out += '*';
    out += vars.name(i);
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : f.terms()) {
    Rational c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += c.get_str();
    } else {
      if (c != 1) out += c.get_str() + '*';
      out += to_string(t.mono, f.ring()->vars);
    }
  }
  return out;
}

// ----------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    Polynomial t = term();
    acc = neg ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  unsigned exponent() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected exponent");
    return static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
  }

  Polynomial factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char ch = s_[pos_];
    Polynomial base(ring_);
    if (ch == '(') {
      ++pos_;
      base = expr();
      if (!accept(')')) fail("expected ')'");
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/'))
        ++pos_;
      Rational c(std::string(s_.substr(start, pos_ - start)));
      c.canonicalize();
      base = Polynomial::constant(ring_, c);
    } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto idx = ring_->vars.index_of(name);
      if (!idx) fail("unknown variable '" + std::string(name) + "'");
      base = Polynomial::variable(ring_, *idx);
    } else {
      fail(std::string("unexpected '") + ch + "'");
    }
    if (accept('^')) base = base.pow(exponent());
    return base;
  }

  std::string_view s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return Parser(text, ring).parse();
}

// ----------------------------------------------------------------- grading

IntVector Grading::degree_of(const Monomial& m) const {
  if (m.size() != degrees.cols())
    throw std::invalid_argument("grading has wrong number of columns");
  IntVector deg(degrees.rows(), BigInt(0));
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (!m[j]) continue;
    for (std::size_t r = 0; r < degrees.rows(); ++r)
      deg[r] += degrees(r, j) * static_cast<unsigned long>(m[j]);
  }
  return deg;
}

MultiDegree multidegree(const Polynomial& f, const Grading& grading) {
  if (f.is_zero()) return {MultiDegree::Kind::zero, {}};
  IntVector deg = grading.degree_of(f.leading().mono);
  for (std::size_t i = 1; i < f.size(); ++i)
    if (grading.degree_of(f.terms()[i].mono) != deg)
      return {MultiDegree::Kind::inhomogeneous, {}};
  return {MultiDegree::Kind::homogeneous, std::move(deg)};
}

// ----------------------------------------------------------------- RingMap

RingMap::RingMap(RingPtr source, RingPtr target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_->vars.size())
    throw std::invalid_argument("ring map needs one image per source variable");
  for (auto& img : images_) {
    if (!img.ring()) img = Polynomial(target_);
    else if (!(*img.ring() == *target_))
      throw std::invalid_argument("ring map image outside the target ring");
  }
}

RingMap RingMap::identity(const RingPtr& ring) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < ring->vars.size(); ++i)
    images.push_back(Polynomial::variable(ring, i));
  return RingMap(ring, ring, std::move(images));
}

Polynomial RingMap::operator()(const Polynomial& f) const {
  if (f.ring() && !(*f.ring() == *source_))
    throw std::invalid_argument("polynomial is not in the map's source ring");
  std::vector<std::vector<Polynomial>> powers(images_.size());
  auto power = [&](std::size_t var, Exponent e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(Polynomial::constant(target_, Rational(1)));
    while (cache.size() <= e) cache.push_back(cache.back() * images_[var]);
    return cache[e];
  };
  Polynomial out(target_);
  for (const auto& t : f.terms()) {
    Polynomial prod = Polynomial::constant(target_, t.coef);
    for (std::size_t i = 0; i < t.mono.size(); ++i)
      if (t.mono[i]) prod = prod * power(i, t.mono[i]);
    out += prod;
  }
  return out;
}

}  // namespace coxpres
