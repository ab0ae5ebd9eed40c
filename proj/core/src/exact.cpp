#include "rooftop/exact.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace rooftop {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void require_same_size(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size())
    throw DimensionError("vector sizes differ: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

}  // namespace

LatticeVector make_vector(std::initializer_list<long> coords) {
  LatticeVector v;
  v.reserve(coords.size());
  for (long c : coords) v.emplace_back(c);
  return v;
}

LatticeVector zero_vector(std::size_t n) { return LatticeVector(n, Integer(0)); }

LatticeVector unit_vector(std::size_t n, std::size_t i) {
  LatticeVector v = zero_vector(n);
  v.at(i) = 1;
  return v;
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
  require_same_size(a, b);
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticeVector operator-(const LatticeVector& a) {
  LatticeVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

LatticeVector scaled(const LatticeVector& v, const Integer& s) {
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] * s;
  return r;
}

bool is_zero(const LatticeVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const LatticeVector& v) {
  Integer g = 0;
  for (const Integer& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

bool is_primitive(const LatticeVector& v) { return content(v) == 1; }

LatticeVector primitive(const LatticeVector& v) {
  Integer g = content(v);
  if (g == 0) throw InputError("zero vector has no primitive representative");
  if (g == 1) return v;
  LatticeVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

LatticeVector primitive_normalized(const LatticeVector& v) {
  LatticeVector r = primitive(v);
  auto first = std::find_if(r.begin(), r.end(), [](const Integer& x) { return x != 0; });
  if (*first < 0) r = -r;
  return r;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long x : r) entries_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  return LatticeVector(entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       entries_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

LatticeVector IntMatrix::column(std::size_t j) const {
  LatticeVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<LatticeVector> IntMatrix::row_vectors() const {
  std::vector<LatticeVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

void IntMatrix::set_row(std::size_t i, const LatticeVector& v) {
  if (v.size() != cols_) throw DimensionError("row length mismatch");
  std::copy(v.begin(), v.end(), entries_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_col(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionError("matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " * " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.size()) throw DimensionError("matrix-vector product size mismatch");
  LatticeVector r(a.rows(), Integer(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r[i] += a(i, j) * v[j];
  return r;
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? "," : "") << to_string(m.row(i));
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free elimination

namespace {

// Bareiss elimination in place; returns the rank and the sign of the row
// permutation applied.
std::pair<std::size_t, int> bareiss(IntMatrix& a) {
  std::size_t r = 0;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      a.swap_rows(piv, r);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return {r, sign};
}

}  // namespace

Integer determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  IntMatrix a = m;
  auto [r, sign] = bareiss(a);
  if (r < a.rows()) return 0;
  Integer d = a(a.rows() - 1, a.cols() - 1);
  return sign > 0 ? d : Integer(-d);
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = m;
  return bareiss(a).first;
}

std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim) {
  return rank(IntMatrix::from_rows(vectors, dim));
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// Normal forms

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t p = 0;
  for (std::size_t col = 0; col < h.cols() && p < h.rows(); ++col) {
    bool has_pivot = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = p; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best == h.rows() || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == h.rows()) break;
      has_pivot = true;
      h.swap_rows(p, best);
      u.swap_rows(p, best);
      bool cleared = true;
      for (std::size_t i = p + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = -floor_div(h(i, col), h(p, col));
        h.add_row_multiple(i, p, q);
        u.add_row_multiple(i, p, q);
        if (h(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (!has_pivot) continue;
    if (h(p, col) < 0) {
      h.negate_row(p);
      u.negate_row(p);
    }
    for (std::size_t i = 0; i < p; ++i) {
      Integer q = -floor_div(h(i, col), h(p, col));
      h.add_row_multiple(i, p, q);
      u.add_row_multiple(i, p, q);
    }
    ++p;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    while (true) {
      std::size_t bi = d.rows(), bj = d.cols();
      for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j)
          if (d(i, j) != 0 && (bi == d.rows() || abs(d(i, j)) < abs(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == d.rows()) return {std::move(d), std::move(u), std::move(v)};
      d.swap_rows(t, bi);
      u.swap_rows(t, bi);
      d.swap_cols(t, bj);
      v.swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        if (d(i, t) == 0) continue;
        Integer q = -floor_div(d(i, t), d(t, t));
        d.add_row_multiple(i, t, q);
        u.add_row_multiple(i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        if (d(t, j) == 0) continue;
        Integer q = -floor_div(d(t, j), d(t, t));
        d.add_col_multiple(j, t, q);
        v.add_col_multiple(j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      bool divisible = true;
      for (std::size_t i = t + 1; i < d.rows() && divisible; ++i)
        for (std::size_t j = t + 1; j < d.cols(); ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

std::vector<Integer> invariant_factors(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  std::vector<Integer> out;
  for (std::size_t i = 0; i < std::min(s.d.rows(), s.d.cols()); ++i)
    if (s.d(i, i) != 0) out.push_back(s.d(i, i));
  return out;
}

std::vector<LatticeVector> integer_kernel(const IntMatrix& m) {
  // U * m^T = H; rows of U against zero rows of H span the kernel, and U being
  // unimodular makes that basis saturated.
  HermiteForm hf = hermite_normal_form(m.transpose());
  std::vector<LatticeVector> basis;
  for (std::size_t i = 0; i < hf.h.rows(); ++i) {
    bool zero = true;
    for (std::size_t j = 0; j < hf.h.cols() && zero; ++j) zero = hf.h(i, j) == 0;
    if (zero) basis.push_back(hf.u.row(i));
  }
  if (basis.empty()) return basis;
  HermiteForm canon = hermite_normal_form(IntMatrix::from_rows(basis, m.cols()));
  std::vector<LatticeVector> out;
  for (std::size_t i = 0; i < canon.h.rows(); ++i) {
    LatticeVector r = canon.h.row(i);
    if (!rooftop::is_zero(r)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<LatticeVector> saturated_span(std::span<const LatticeVector> vectors, std::size_t dim) {
  std::vector<LatticeVector> nonzero;
  for (const auto& v : vectors)
    if (!rooftop::is_zero(v)) nonzero.push_back(v);
  if (nonzero.empty()) return {};
  std::vector<LatticeVector> orth = integer_kernel(IntMatrix::from_rows(nonzero, dim));
  return integer_kernel(IntMatrix::from_rows(orth, dim));
}

IntMatrix right_inverse(const IntMatrix& m) {
  SmithForm s = smith_normal_form(m);
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (i >= m.cols() || s.d(i, i) != 1) throw InputError("matrix is not surjective onto Z^" + std::to_string(m.rows()));
  IntMatrix embed(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) embed(i, i) = 1;
  return s.v * embed * s.u;
}

RationalVector to_rational(const LatticeVector& v) {
  RationalVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i];
  return r;
}

LatticeVector primitive_multiple(const RationalVector& v) {
  Integer l = 1;
  for (const Rational& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  LatticeVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * l;
    out[i] = s.get_num();
  }
  return primitive(out);
}

std::optional<RationalVector> solve(const IntMatrix& a, const RationalVector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side size mismatch");
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
    m[i][cols] = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j <= cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt;
  RationalVector x(cols, Rational(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m[i][cols];
  return x;
}

std::optional<RationalVector> solve(const IntMatrix& a, const LatticeVector& b) {
  return solve(a, to_rational(b));
}

}  // namespace rooftop
