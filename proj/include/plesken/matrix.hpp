#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "plesken/ffield.hpp"
#include "plesken/poly.hpp"

namespace plesken {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field. Vectors are rows; a matrix
/// acts on them from the right (v -> v * M).
class Mat {
 public:
  explicit Mat(Field f) : field_(std::move(f)) {}
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Mat identity(const Field& f, std::size_t n);
  static Mat from_rows(const Field& f, const std::vector<Vec>& rows, std::size_t cols);
  static Mat from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Elem* row(std::size_t i) { return a_.data() + i * cols_; }
  const Elem* row(std::size_t i) const { return a_.data() + i * cols_; }
  std::span<const Elem> row_span(std::size_t i) const { return {row(i), cols_}; }
  Vec row_vec(std::size_t i) const { return Vec(row(i), row(i) + cols_); }

  void append_row(std::span<const Elem> v);
  Mat transpose() const;
  Mat select_rows(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> a_;
};

Mat operator*(const Mat& a, const Mat& b);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator*(Elem c, const Mat& a);
/// v * M
Vec vec_mul(const Vec& v, const Mat& m);
/// Rows of `a` followed by rows of `b`.
Mat vstack(const Mat& a, const Mat& b);
bool is_zero_vec(std::span<const Elem> v);

/// Reduced row echelon form with zero rows dropped.
struct Echelon {
  Mat rows;
  std::vector<std::size_t> pivots;
};
Echelon rref(const Mat& m);
std::size_t rank(const Mat& m);
/// Basis (as rows) of {x : M x^T = 0}.
Mat kernel(const Mat& m);
/// Basis (as rows) of {v : v M = 0}.
Mat left_kernel(const Mat& m);
/// Some x with A x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> inverse(const Mat& m);

Poly charpoly(const Mat& m);
Poly minpoly(const Mat& m);
Mat eval_poly(const Poly& f, const Mat& m);

/// Incrementally built semi-echelon basis of a subspace of k^n. Remembers how
/// each echelon row was formed from the accepted input vectors, so that
/// coordinates with respect to the accepted vectors are available.
class EchelonBasis {
 public:
  EchelonBasis(Field f, std::size_t n) : field_(std::move(f)), n_(n) {}

  const Field& field() const { return field_; }
  std::size_t ambient() const { return n_; }
  std::size_t size() const { return pivots_.size(); }
  /// Accepted input vectors, in order of acceptance.
  const std::vector<Vec>& vectors() const { return input_; }
  Mat basis() const { return Mat::from_rows(field_, input_, n_); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Adds v if it is independent of the current span; returns whether it was.
  bool add(const Vec& v);
  /// Reduces v modulo the span in place; the result is zero iff v is in it.
  void reduce(Vec& v) const;
  bool contains(const Vec& v) const;
  /// Coordinates of v with respect to vectors(), or nullopt if v is outside.
  std::optional<Vec> coords(const Vec& v) const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Vec> ech_;
  std::vector<Vec> combo_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> input_;
};

/// Matrix of v -> v M restricted to the invariant subspace spanned by the
/// (independent) rows of `basis`, in those coordinates.
Mat restrict_action(const Mat& m, const Mat& basis);

/// Splits the M-invariant subspace spanned by the rows of `subspace` into the
/// generalized eigenspaces ker f_i(M)^{e_i} for the coprime prime-power factors
/// of the characteristic polynomial of M on it. Each piece is a basis (rows)
/// in ambient coordinates. Throws ValidationError if not invariant.
std::vector<Mat> generalized_eigensplit(const Mat& m, const Mat& subspace, Rng& rng);

}  // namespace plesken
