#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nashtoric/errors.hpp"

namespace nashtoric {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A point of Z^d with arbitrary-precision coordinates.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t dim) : coords_(dim) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<Integer> coords) : coords_(coords) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  Integer& operator[](std::size_t i) { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;
  /// gcd of the absolute values of the coordinates; 0 for the zero vector.
  Integer content() const;
  /// This vector divided by its content (the zero vector is returned as is).
  LatticeVector primitive() const;
  bool is_primitive() const { return content() == 1; }

  LatticeVector& operator+=(const LatticeVector& other);
  LatticeVector& operator-=(const LatticeVector& other);
  LatticeVector& operator*=(const Integer& scalar);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) {
    for (auto& c : a.coords_) c = -c;
    return a;
  }

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic order.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);
  friend bool operator>(const LatticeVector& a, const LatticeVector& b) { return b < a; }
  friend bool operator<=(const LatticeVector& a, const LatticeVector& b) { return !(b < a); }
  friend bool operator>=(const LatticeVector& a, const LatticeVector& b) { return !(a < b); }

 private:
  std::vector<Integer> coords_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);
Rational dot(const LatticeVector& a, std::span<const Rational> x);

/// "(1,0,-2)"
std::string to_string(const LatticeVector& v);
std::ostream& operator<<(std::ostream& os, const LatticeVector& v);

/// Sorts lexicographically and removes duplicates.
void canonicalize(std::vector<LatticeVector>& points);
std::vector<LatticeVector> canonicalized(std::vector<LatticeVector> points);

/// Throws dimension_mismatch unless every vector has dimension `dim`.
void require_dimension(std::span<const LatticeVector> vectors, std::size_t dim);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose j-th column is columns[j]; all columns must have dimension `dim`.
  static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t dim);
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t dim);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> columns() const;

  IntMatrix transpose() const;
  IntMatrix select_rows(std::span<const std::size_t> indices) const;
  IntMatrix select_columns(std::span<const std::size_t> indices) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Characteristic of the base field: 0 or a prime.
class Characteristic {
 public:
  /// Throws invalid_characteristic unless p is 0 or prime.
  explicit Characteristic(std::uint64_t p);

  static Characteristic zero() { return Characteristic(0); }

  std::uint64_t value() const noexcept { return p_; }
  bool is_zero() const noexcept { return p_ == 0; }

  friend bool operator==(Characteristic a, Characteristic b) { return a.p_ == b.p_; }
  friend bool operator<(Characteristic a, Characteristic b) { return a.p_ < b.p_; }

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace nashtoric
