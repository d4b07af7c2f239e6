#include "coxpres/exact.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace coxpres {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix rows");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows,
                               std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw std::invalid_argument("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   entries_.begin() +
                       static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k)
      out(r, k) = (*this)(r, cols[k]);
  return out;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const BigInt& v) { return sgn(v) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ' ';
      os << m(r, c);
    }
    os << "]\n";
  }
  return os;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t k = 0; k < cols; ++k) swap(a(p, k), a(r, k));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        BigInt v = a(r, c) * a(i, k) - a(i, c) * a(r, k);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, k) = v;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

namespace {

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src,
              const BigInt& factor) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(dst, k) -= factor * m(src, k);
}

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t k = 0; k < m.cols(); ++k) swap(m(a, k), m(b, k));
}

void row_negate(IntMatrix& m, std::size_t r) {
  for (std::size_t k = 0; k < m.cols(); ++k) m(r, k) = -m(r, k);
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& m) {
  HermiteResult res{m, IntMatrix::identity(m.rows())};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  const std::size_t rows = h.rows(), cols = h.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        if (best == rows || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == rows) break;
      if (best != r) {
        row_swap(h, best, r);
        row_swap(u, best, r);
      }
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(h(i, c)) == 0) continue;
        BigInt q = floor_div(h(i, c), h(r, c));
        row_axpy(h, i, r, q);
        row_axpy(u, i, r, q);
        if (sgn(h(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(h(r, c)) == 0) continue;
    if (sgn(h(r, c)) < 0) {
      row_negate(h, r);
      row_negate(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      BigInt q = floor_div(h(i, c), h(r, c));
      if (sgn(q) == 0) continue;
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    ++r;
  }
  return res;
}

IntMatrix row_lattice_basis(const IntMatrix& m) {
  IntMatrix h = hermite_normal_form(m).h;
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    IntVector row = h.row(r);
    if (std::any_of(row.begin(), row.end(),
                    [](const BigInt& v) { return sgn(v) != 0; }))
      rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, m.cols());
}

IntMatrix kernel_basis(const IntMatrix& m) {
  // U * m^T = H; rows of U facing zero rows of H span the left kernel of m^T.
  HermiteResult hr = hermite_normal_form(m.transpose());
  std::vector<IntVector> rows;
  for (std::size_t r = 0; r < hr.h.rows(); ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < hr.h.cols() && zero; ++c)
      zero = sgn(hr.h(r, c)) == 0;
    if (zero) rows.push_back(hr.u.row(r));
  }
  IntMatrix basis = IntMatrix::from_rows(rows, m.cols());
  return hermite_normal_form(basis).h;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& a,
                              std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && sgn(a[p][c]) == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Rational inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c];
      for (std::size_t k = c; k < a[i].size(); ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

bool solve_unique(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b, std::vector<Rational>& x) {
  if (a.size() != b.size()) throw std::invalid_argument("system shape mismatch");
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  std::vector<std::vector<Rational>> aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return false;
  if (pivots.size() != cols) return false;
  x.assign(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return true;
}

std::vector<std::vector<Rational>> rational_nullspace(
    const std::vector<std::vector<Rational>>& a, std::size_t cols) {
  std::vector<std::vector<Rational>> m = a;
  auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntVector primitive(std::span<const Rational> v) {
  BigInt lcm_den = 1;
  for (const auto& q : v) lcm_den = lcm(lcm_den, q.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.push_back(q.get_num() * (lcm_den / q.get_den()));
  return primitive(std::span<const BigInt>(out));
}

IntVector primitive(std::span<const BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  IntVector out(v.begin(), v.end());
  if (sgn(g) == 0 || g == 1) return out;
  for (auto& x : out) x /= g;
  return out;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector to_int_vector(std::initializer_list<long> v) {
  IntVector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

std::string to_string(std::span<const BigInt> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

}  // namespace coxpres
