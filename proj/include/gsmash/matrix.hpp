#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gsmash/field.hpp"

namespace gsmash {

template <typename T>
concept RingElement = requires(const T& a, const T& b) {
  { a + b } -> std::convertible_to<T>;
  { a - b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
};

// Dense row-major matrix over an exact ring. Carries a zero exemplar so that
// dimensions like 0xN stay constructible without a separate field handle.
template <RingElement T>
class Mat {
public:
  Mat() : rows_(0), cols_(0), zero_(T()) {}
  Mat(std::size_t r, std::size_t c, const T& zero)
      : rows_(r), cols_(c), a_(r * c, zero), zero_(zero) {}

  static Mat identity(std::size_t n, const T& zero, const T& one) {
    Mat m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }

  bool is_zero() const {
    for (const T& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  Mat operator-(const Mat& o) const {
    check_same_shape(o);
    Mat r = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& x = (*this)(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const T& y = o(k, j);
          if (y.is_zero()) continue;
          r(i, j) = r(i, j) + x * y;
        }
      }
    return r;
  }

  Mat scaled(const T& c) const {
    Mat r = *this;
    for (T& x : r.a_) x = x * c;
    return r;
  }

  Mat transpose() const {
    Mat r(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> r(rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] = r[i] + (*this)(i, j) * v[j];
    return r;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> r;
    r.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r.push_back((*this)(i, j));
    return r;
  }

  void set_col(std::size_t j, const std::vector<T>& v) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  Mat submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Mat r(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void paste(std::size_t r0, std::size_t c0, const Mat& block) {
    for (std::size_t i = 0; i < block.rows_; ++i)
      for (std::size_t j = 0; j < block.cols_; ++j) (*this)(r0 + i, c0 + j) = block(i, j);
  }

private:
  void check_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_, cols_;
  std::vector<T> a_;
  T zero_;
};

template <typename T>
concept DivisionRingElement = RingElement<T> && requires(const T& a) {
  { a.inverse() } -> std::convertible_to<T>;
};

// Row reduction to RREF with leftmost-nonzero pivoting. Returns pivot columns.
template <DivisionRingElement T>
std::vector<std::size_t> rref_in_place(Mat<T>& m) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(lead, j));
    T inv = m(lead, col).inverse();
    for (std::size_t j = col; j < m.cols(); ++j) m(lead, j) = m(lead, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == lead || m(i, col).is_zero()) continue;
      T f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(lead, j);
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

template <DivisionRingElement T>
std::size_t rank(Mat<T> m) {
  return rref_in_place(m).size();
}

// Basis of the right null space, canonical form: for each free column f the
// vector has 1 at f, the negated RREF coefficients at pivot coordinates, and
// 0 elsewhere; ordered by f ascending.
template <DivisionRingElement T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m, const T& one) {
  std::vector<std::size_t> pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(m.cols(), m.zero());
    v[f] = one;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of Mx = b with free coordinates zero, or nullopt if inconsistent.
template <DivisionRingElement T>
std::optional<std::vector<T>> solve_linear(const Mat<T>& m, const std::vector<T>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_linear shape mismatch");
  Mat<T> aug(m.rows(), m.cols() + 1, m.zero());
  aug.paste(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  std::vector<T> x(m.cols(), m.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, m.cols());
  return x;
}

// Columnwise solve of A X = B; nullopt if any column is inconsistent.
template <DivisionRingElement T>
std::optional<Mat<T>> solve_matrix(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_matrix shape mismatch");
  Mat<T> aug(a.rows(), a.cols() + b.cols(), a.zero());
  aug.paste(0, 0, a);
  aug.paste(0, a.cols(), b);
  std::vector<std::size_t> pivots = rref_in_place(aug);
  for (std::size_t c : pivots)
    if (c >= a.cols()) return std::nullopt;
  Mat<T> x(a.cols(), b.cols(), a.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[r], j) = aug(r, a.cols() + j);
  return x;
}

template <DivisionRingElement T>
std::optional<Mat<T>> inverse(const Mat<T>& m, const T& one) {
  if (m.rows() != m.cols()) return std::nullopt;
  Mat<T> aug(m.rows(), 2 * m.cols(), m.zero());
  aug.paste(0, 0, m);
  aug.paste(0, m.cols(), Mat<T>::identity(m.rows(), m.zero(), one));
  std::vector<std::size_t> pivots = rref_in_place(aug);
  if (pivots.size() != m.rows()) return std::nullopt;
  return aug.submatrix(0, m.cols(), m.rows(), m.cols());
}

// Canonical basis of the column space: RREF rows of the transpose, transposed
// back to columns. Deterministic, not a subset of the original columns.
template <DivisionRingElement T>
Mat<T> column_space_basis(const Mat<T>& m) {
  Mat<T> t = m.transpose();
  std::vector<std::size_t> pivots = rref_in_place(t);
  Mat<T> basis(m.rows(), pivots.size(), m.zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    for (std::size_t i = 0; i < m.rows(); ++i) basis(i, r) = t(r, i);
  return basis;
}

template <RingElement T>
Mat<T> hstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack shape mismatch");
  Mat<T> r(a.rows(), a.cols() + b.cols(), a.zero());
  r.paste(0, 0, a);
  r.paste(0, a.cols(), b);
  return r;
}

template <RingElement T>
Mat<T> vstack(const Mat<T>& a, const Mat<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack shape mismatch");
  Mat<T> r(a.rows() + b.rows(), a.cols(), a.zero());
  r.paste(0, 0, a);
  r.paste(a.rows(), 0, b);
  return r;
}

using ExactMatrix = Mat<Scalar>;

inline ExactMatrix zero_matrix(std::size_t r, std::size_t c, const FieldSpec& f) {
  return ExactMatrix(r, c, Scalar::zero(f));
}

inline ExactMatrix identity_matrix(std::size_t n, const FieldSpec& f) {
  return ExactMatrix::identity(n, Scalar::zero(f), Scalar::one(f));
}

inline std::vector<Scalar> zero_vector(std::size_t n, const FieldSpec& f) {
  return std::vector<Scalar>(n, Scalar::zero(f));
}

inline std::vector<Scalar> unit_vector(std::size_t n, std::size_t i, const FieldSpec& f) {
  std::vector<Scalar> v(n, Scalar::zero(f));
  v[i] = Scalar::one(f);
  return v;
}

inline bool vector_is_zero(const std::vector<Scalar>& v) {
  for (const Scalar& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline std::vector<Scalar> vector_add(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b[i];
  return r;
}

inline std::vector<Scalar> vector_sub(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector length mismatch");
  std::vector<Scalar> r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b[i];
  return r;
}

inline std::vector<Scalar> vector_scale(const Scalar& c, const std::vector<Scalar>& a) {
  std::vector<Scalar> r = a;
  for (Scalar& x : r) x = c * x;
  return r;
}

}  // namespace gsmash
