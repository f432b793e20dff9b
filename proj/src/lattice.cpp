#include "nashtoric/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace nashtoric {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::malformed_input: return "E_MALFORMED_INPUT";
    case ErrorCode::dimension_mismatch: return "E_DIMENSION_MISMATCH";
    case ErrorCode::invalid_characteristic: return "E_INVALID_CHARACTERISTIC";
    case ErrorCode::not_pointed: return "E_NOT_POINTED";
    case ErrorCode::not_full_group: return "E_NOT_FULL_GROUP";
    case ErrorCode::not_full_dimensional: return "E_NOT_FULL_DIMENSIONAL";
    case ErrorCode::linearly_dependent: return "E_LINEARLY_DEPENDENT";
    case ErrorCode::not_saturated: return "E_NOT_SATURATED";
    case ErrorCode::internal_invariant: return "E_INTERNAL_INVARIANT";
  }
  return "E_UNKNOWN";
}

bool LatticeVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& c) { return c == 0; });
}

Integer LatticeVector::content() const {
  Integer g = 0;
  for (const auto& c : coords_) {
    if (c != 0) g = boost::multiprecision::gcd(g, c);
    if (g == 1) break;
  }
  return boost::multiprecision::abs(g);
}

LatticeVector LatticeVector::primitive() const {
  Integer g = content();
  if (g <= 1) return *this;
  LatticeVector out = *this;
  for (auto& c : out.coords_) c /= g;
  return out;
}

LatticeVector& LatticeVector::operator+=(const LatticeVector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& other) {
  if (other.dim() != dim()) throw Error(ErrorCode::dimension_mismatch, "vector dimensions differ");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& scalar) {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

bool operator<(const LatticeVector& a, const LatticeVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(),
                                      b.coords_.end());
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.dim() != b.dim()) throw Error(ErrorCode::dimension_mismatch, "dot: dimensions differ");
  Integer s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const LatticeVector& a, std::span<const Rational> x) {
  if (a.dim() != x.size()) throw Error(ErrorCode::dimension_mismatch, "dot: dimensions differ");
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != 0) s += Rational(a[i]) * x[i];
  }
  return s;
}

std::string to_string(const LatticeVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os << ')';
}

void canonicalize(std::vector<LatticeVector>& points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

std::vector<LatticeVector> canonicalized(std::vector<LatticeVector> points) {
  canonicalize(points);
  return points;
}

void require_dimension(std::span<const LatticeVector> vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.dim() != dim) {
      throw Error(ErrorCode::dimension_mismatch, "vector " + to_string(v) + " does not have dimension " +
                                                     std::to_string(dim));
    }
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::span<const LatticeVector> columns, std::size_t dim) {
  require_dimension(columns, dim);
  IntMatrix m(dim, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = columns[j][i];
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const LatticeVector> rows, std::size_t dim) {
  require_dimension(rows, dim);
  IntMatrix m(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = rows[i][j];
  return m;
}

LatticeVector IntMatrix::row(std::size_t i) const {
  LatticeVector v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
  return v;
}

LatticeVector IntMatrix::column(std::size_t j) const {
  LatticeVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<LatticeVector> IntMatrix::columns() const {
  std::vector<LatticeVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> indices) const {
  IntMatrix m(indices.size(), cols_);
  for (std::size_t k = 0; k < indices.size(); ++k)
    for (std::size_t j = 0; j < cols_; ++j) m(k, j) = (*this)(indices[k], j);
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> indices) const {
  IntMatrix m(rows_, indices.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < indices.size(); ++k) m(i, k) = (*this)(i, indices[k]);
  return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << m(i, j);
    }
  }
  return os << ']';
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f <= n / f; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

Characteristic::Characteristic(std::uint64_t p) : p_(p) {
  if (p != 0 && !is_prime(p)) {
    throw Error(ErrorCode::invalid_characteristic, "characteristic must be 0 or prime (got " +
                                                       std::to_string(p) + ")");
  }
}

}  // namespace nashtoric
