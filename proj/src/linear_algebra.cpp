#include "nashtoric/linear_algebra.hpp"

#include <algorithm>
#include <optional>

namespace nashtoric {

namespace {

using boost::multiprecision::abs;

void require_square(const IntMatrix& m, const char* what) {
  if (!m.is_square() || m.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch, std::string(what) + ": matrix must be square and nonempty");
  }
}

// row_a -= q * row_b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
  }
}

// col_a -= q * col_b
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Integer& q) {
  if (q == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, b) != 0) m(i, a) -= q * m(i, b);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer det_mod(const IntMatrix& m, Characteristic ch) {
  Integer d = det(m);
  if (ch.is_zero()) return d;
  Integer p = ch.value();
  Integer r = d % p;
  if (r < 0) r += p;
  return r;
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

IntMatrix adjugate(const IntMatrix& m) {
  require_square(m, "adjugate");
  const std::size_t n = m.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  std::vector<std::size_t> rows, cols;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows.clear();
      cols.clear();
      for (std::size_t k = 0; k < n; ++k) {
        if (k != i) rows.push_back(k);
        if (k != j) cols.push_back(k);
      }
      Integer minor = det(m.select_rows(rows).select_columns(cols));
      // adj(j, i) is the (i, j) cofactor
      adj(j, i) = ((i + j) % 2 == 0) ? minor : Integer(-minor);
    }
  }
  return adj;
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(diagonal(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm s{IntMatrix::identity(rows), m, IntMatrix::identity(cols), 0};
  IntMatrix& d = s.diagonal;
  IntMatrix& u = s.left;
  IntMatrix& v = s.right;

  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    // Smallest nonzero entry of the trailing block becomes the pivot.
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d(i, j) != 0 && (!best || abs(d(i, j)) < abs(d(best->first, best->second)))) best = {{i, j}};
    if (!best) break;

    auto bring_to_pivot = [&](std::size_t i, std::size_t j) {
      d.swap_rows(t, i);
      u.swap_rows(t, i);
      d.swap_columns(t, j);
      v.swap_columns(t, j);
    };
    bring_to_pivot(best->first, best->second);

    while (true) {
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        row_axpy(d, i, t, q);
        row_axpy(u, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived; promote it.
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < rows; ++i)
          if (d(i, t) != 0 && abs(d(i, t)) < abs(d(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(t, j) != 0 && abs(d(t, j)) < abs(d(bi, bj))) bi = t, bj = j;
        bring_to_pivot(bi, bj);
        continue;
      }
      // Divisibility: fold an offending row into the pivot row and repeat.
      std::optional<std::size_t> offending;
      for (std::size_t i = t + 1; i < rows && !offending; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            offending = i;
            break;
          }
      if (!offending) break;
      row_axpy(d, t, *offending, Integer(-1));
      row_axpy(u, t, *offending, Integer(-1));
    }
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(u, t);
    }
    s.rank = t + 1;
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  const std::size_t rows = h.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < rows; ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows; ++i)
        if (h(i, c) != 0 && (!best || abs(h(i, c)) < abs(h(*best, c)))) best = i;
      if (!best) break;
      h.swap_rows(r, *best);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (h(i, c) == 0) continue;
        row_axpy(h, i, r, h(i, c) / h(r, c));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) row_axpy(h, i, r, floor_div(h(i, c), h(r, c)));
    ++r;
  }
  return h;
}

bool group_is_full_lattice(std::span<const LatticeVector> generators, std::size_t dim) {
  require_dimension(generators, dim);
  if (generators.size() < dim) return false;
  IntMatrix h = hermite_normal_form(IntMatrix::from_rows(generators, dim));
  // Full rank with unit pivots means the lattice index is 1.
  for (std::size_t i = 0; i < dim; ++i) {
    if (h(i, i) != 1) return false;
  }
  return true;
}

IntMatrix kernel_basis(const IntMatrix& a) {
  const std::size_t n = a.cols();
  SmithForm s = smith_normal_form(a);
  const std::size_t c = n - s.rank;
  if (c == 0) return IntMatrix(n, 0);

  // A V = U^{-1} D, so the trailing columns of V span ker A and are saturated.
  IntMatrix rows_basis(c, n);
  for (std::size_t k = 0; k < c; ++k)
    for (std::size_t i = 0; i < n; ++i) rows_basis(k, i) = s.right(i, s.rank + k);
  IntMatrix h = hermite_normal_form(rows_basis);

  std::vector<LatticeVector> basis;
  for (std::size_t k = 0; k < c; ++k) basis.push_back(h.row(k));
  std::sort(basis.begin(), basis.end());
  return IntMatrix::from_columns(basis, n);
}

}  // namespace nashtoric
