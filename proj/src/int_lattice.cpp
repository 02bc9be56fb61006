#include "eqk/int_lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "eqk/errors.hpp"

namespace eqk {

namespace {

void require_same_rank(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw InputError("lattice rank mismatch");
}

Coord abs_coord(Coord x) { return x < 0 ? -x : x; }

}  // namespace

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](Coord c) { return c == 0; });
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  require_same_rank(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

std::string LatticeVector::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) os << ',';
    os << coords_[i];
  }
  os << ')';
  return os.str();
}

Coord dot(const LatticeVector& a, const LatticeVector& b) {
  require_same_rank(a, b);
  Coord s = 0;
  for (std::size_t i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Coord gcd_of(const LatticeVector& v) {
  Coord g = 0;
  for (Coord c : v) g = std::gcd(g, abs_coord(c));
  return g;
}

LatticeVector concat(const LatticeVector& a, const LatticeVector& b) {
  std::vector<Coord> c(a.begin(), a.end());
  c.insert(c.end(), b.begin(), b.end());
  return LatticeVector(std::move(c));
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<LatticeVector>& cols, std::size_t rank) {
  IntMatrix m(rank, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].rank() != rank) throw InputError("lattice rank mismatch");
    for (std::size_t i = 0; i < rank; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  LatticeVector r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

LatticeVector IntMatrix::column(std::size_t j) const {
  LatticeVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Coord x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

LatticeVector operator*(const IntMatrix& a, const LatticeVector& v) {
  if (a.cols() != v.rank()) throw InputError("lattice rank mismatch");
  LatticeVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Coord s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

BigInt determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < 2 * n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = a[i][n + j];
      if (!is_integral(x)) return std::nullopt;
      inv(i, j) = x.get_num().get_si();
    }
  return inv;
}

std::vector<Coord> elementary_divisors(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<Coord> divisors;
  for (std::size_t t = 0; t < std::min(r, c); ++t) {
    for (;;) {
      std::size_t pi = r, pj = c;
      Coord best = 0;
      for (std::size_t i = t; i < r; ++i)
        for (std::size_t j = t; j < c; ++j)
          if (a(i, j) != 0 && (best == 0 || abs_coord(a(i, j)) < best)) {
            best = abs_coord(a(i, j));
            pi = i;
            pj = j;
          }
      if (best == 0) return divisors;
      for (std::size_t j = 0; j < c; ++j) std::swap(a(pi, j), a(t, j));
      for (std::size_t i = 0; i < r; ++i) std::swap(a(i, pj), a(i, t));

      bool clean = true;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Coord q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < c; ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < c; ++j) {
        const Coord q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < r; ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // The pivot must divide the remaining block; otherwise fold a row in.
      bool divides = true;
      for (std::size_t i = t + 1; i < r && divides; ++i)
        for (std::size_t j = t + 1; j < c; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = t; k < c; ++k) a(t, k) += a(i, k);
            divides = false;
            break;
          }
      if (divides) break;
    }
    divisors.push_back(abs_coord(a(t, t)));
  }
  return divisors;
}

PrimitiveSplit primitive_split(const LatticeVector& chi) {
  const std::size_t n = chi.rank();
  if (n == 0 || chi.is_zero()) throw InputError("primitive_split: zero vector");
  PrimitiveSplit out;
  out.transform = IntMatrix::identity(n);
  out.inverse = IntMatrix::identity(n);
  LatticeVector x = chi;

  auto row_sub = [&](std::size_t j, std::size_t p, Coord q) {
    // x_j -= q x_p; transform row j -= q row p; inverse column p += q column j
    x[j] -= q * x[p];
    for (std::size_t k = 0; k < n; ++k) out.transform(j, k) -= q * out.transform(p, k);
    for (std::size_t k = 0; k < n; ++k) out.inverse(k, p) += q * out.inverse(k, j);
  };

  for (;;) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] != 0 && (p == n || abs_coord(x[i]) < abs_coord(x[p]))) p = i;
    bool single = true;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == p || x[j] == 0) continue;
      row_sub(j, p, x[j] / x[p]);
      if (x[j] != 0) single = false;
    }
    if (!single) continue;
    if (p != 0) {
      std::swap(x[0], x[p]);
      for (std::size_t k = 0; k < n; ++k) std::swap(out.transform(0, k), out.transform(p, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(out.inverse(k, 0), out.inverse(k, p));
    }
    if (x[0] < 0) {
      x[0] = -x[0];
      for (std::size_t k = 0; k < n; ++k) out.transform(0, k) = -out.transform(0, k);
      for (std::size_t k = 0; k < n; ++k) out.inverse(k, 0) = -out.inverse(k, 0);
    }
    out.multiplicity = x[0];
    return out;
  }
}

LatticeVector primitive_normal(const std::vector<LatticeVector>& vectors, std::size_t rank) {
  if (vectors.size() + 1 != rank) throw InputError("primitive_normal: need rank-1 vectors");
  LatticeVector normal(rank);
  for (std::size_t k = 0; k < rank; ++k) {
    IntMatrix minor(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (vectors[i].rank() != rank) throw InputError("lattice rank mismatch");
      std::size_t jj = 0;
      for (std::size_t j = 0; j < rank; ++j) {
        if (j == k) continue;
        minor(i, jj++) = vectors[i][j];
      }
    }
    const BigInt d = determinant(minor);
    normal[k] = ((k % 2) ? -1 : 1) * d.get_si();
  }
  const Coord g = gcd_of(normal);
  if (g == 0) throw InputError("primitive_normal: vectors are linearly dependent");
  for (std::size_t k = 0; k < rank; ++k) normal[k] /= g;
  return normal;
}

}  // namespace eqk
