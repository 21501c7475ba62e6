#include "lieaid/linalg.hpp"

#include <algorithm>

namespace lieaid {

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i) {
  Vector v = zero_vector(f, n);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw MismatchError("vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw MismatchError("vector length mismatch");
  Vector out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, std::span<const Scalar> v) {
  Vector out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(c * x);
  return out;
}

void axpy(std::span<Scalar> a, const Scalar& c, std::span<const Scalar> b) {
  if (a.size() != b.size()) throw MismatchError("vector length mismatch");
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!b[i].is_zero()) a[i] += c * b[i];
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, 0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return Vector(r.begin(), r.end());
}

Vector Matrix::column(std::size_t j) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
  return v;
}

void Matrix::append_row(std::span<const Scalar> r) {
  if (r.size() != cols_) throw MismatchError("row length mismatch");
  for (const auto& x : r)
    if (!(x.field() == field_)) throw MismatchError("row entry from a different field");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

Matrix Matrix::augment(const Matrix& extra) const {
  if (extra.rows_ != rows_) throw MismatchError("augment: row count mismatch");
  Matrix out(field_, rows_, cols_ + extra.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < extra.cols_; ++j) out(i, cols_ + j) = extra(i, j);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw MismatchError("matrix product dimension mismatch");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      axpy(out.row(i), a, o.row(k));
    }
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MismatchError("matrix difference dimension mismatch");
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= o.data_[i];
  return out;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw MismatchError("matrix-vector dimension mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!v[j].is_zero() && !(*this)(i, j).is_zero()) out[i] += (*this)(i, j) * v[j];
  return out;
}

Vector Matrix::apply_left(std::span<const Scalar> v) const {
  if (v.size() != rows_) throw MismatchError("vector-matrix dimension mismatch");
  Vector out = zero_vector(field_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) axpy(out, v[i], row(i));
  return out;
}

bool Matrix::is_zero() const { return lieaid::is_zero(data_); }

bool Matrix::operator==(const Matrix& o) const {
  return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

// ---------------------------------------------------------------- elimination

RowEchelon rref(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t sel = r;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != r) std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
    Scalar inv = m(r, c).inv();
    auto prow = m.row(r);
    for (std::size_t j = c; j < cols; ++j)
      if (!prow[j].is_zero()) prow[j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar factor = -m(i, c);
      auto target = m.row(i);
      for (std::size_t j = c; j < cols; ++j)
        if (!prow[j].is_zero()) target[j] += factor * prow[j];
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel(const Matrix& m) {
  const Field f = m.field();
  auto [red, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, m.cols());
    v[free] = Scalar(f, 1);
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = -red(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, m.cols(), basis);
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.rows()) throw MismatchError("solve: right-hand side length mismatch");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  auto [red, rk, pivots] = rref(std::move(aug));
  if (rk > 0 && pivots[rk - 1] == m.cols()) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (std::size_t i = 0; i < rk; ++i) x[pivots[i]] = red(i, m.cols());
  return x;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::zero(Field f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient), {}); }

Subspace Subspace::full(Field f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(Field f, std::size_t ambient, const std::vector<Vector>& vectors) {
  return row_space(Matrix::from_rows(f, ambient, vectors));
}

Subspace Subspace::row_space(const Matrix& m) {
  auto [red, rk, pivots] = rref(m);
  Matrix basis(m.field(), 0, m.cols());
  for (std::size_t i = 0; i < rk; ++i) basis.append_row(red.row(i));
  return Subspace(std::move(basis), std::move(pivots));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_dim()) throw MismatchError("subspace ambient dimension mismatch");
  Vector residual(v.begin(), v.end());
  Vector coords;
  coords.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    Scalar c = v[pivots_[i]];
    axpy(residual, -c, basis_.row(i));
    coords.push_back(std::move(c));
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Scalar> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw MismatchError("subspace ambient dimension mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Vector Subspace::combine(std::span<const Scalar> coords) const {
  if (coords.size() != dim()) throw MismatchError("coordinate count mismatch");
  return basis_.apply_left(coords);
}

namespace {
void check_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw MismatchError("subspace ambient dimension mismatch");
  if (!(a.field() == b.field())) throw MismatchError("subspaces over different fields");
}
}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  auto rows = a.basis_vectors();
  auto more = b.basis_vectors();
  rows.insert(rows.end(), more.begin(), more.end());
  return Subspace::span(a.field(), a.ambient_dim(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_compatible(a, b);
  const Field f = a.field();
  const std::size_t n = a.ambient_dim();
  if (a.dim() == 0 || b.dim() == 0) return Subspace::zero(f, n);
  // Columns are a's basis and -b's basis; a kernel vector (alpha, beta)
  // gives the common vector sum alpha_i a_i.
  Matrix system(f, n, a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t r = 0; r < n; ++r) system(r, i) = a.basis()(i, r);
  for (std::size_t j = 0; j < b.dim(); ++j)
    for (std::size_t r = 0; r < n; ++r) system(r, a.dim() + j) = -b.basis()(j, r);
  Subspace ker = kernel(system);
  std::vector<Vector> common;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    auto coeffs = ker.basis().row(k).subspan(0, a.dim());
    common.push_back(a.combine(coeffs));
  }
  return Subspace::span(f, n, common);
}

std::vector<Vector> quotient_basis(const Subspace& big, const Subspace& small) {
  check_compatible(big, small);
  if (!big.contains(small)) throw MismatchError("quotient: subspace is not contained in the ambient subspace");
  std::vector<Vector> reps;
  Subspace current = small;
  for (std::size_t i = 0; i < big.dim() && current.dim() < big.dim(); ++i) {
    Vector candidate = big.basis_vector(i);
    if (current.contains(candidate)) continue;
    current = subspace_sum(current, Subspace::span(big.field(), big.ambient_dim(), {candidate}));
    reps.push_back(std::move(candidate));
  }
  return reps;
}

Subspace subspace_complement(const Subspace& small, const Subspace& big) {
  return Subspace::span(big.field(), big.ambient_dim(), quotient_basis(big, small));
}

// ---------------------------------------------------------------- QuotientMap

QuotientMap::QuotientMap(const Subspace& big, const Subspace& small)
    : reps_(quotient_basis(big, small)), small_dim_(small.dim()), combined_(big), to_reps_(big.field(), 0, 0) {
  init(small);
}

QuotientMap::QuotientMap(const Subspace& small, std::vector<Vector> reps)
    : reps_(std::move(reps)), small_dim_(small.dim()), combined_(small), to_reps_(small.field(), 0, 0) {
  auto gens = small.basis_vectors();
  gens.insert(gens.end(), reps_.begin(), reps_.end());
  combined_ = Subspace::span(small.field(), small.ambient_dim(), gens);
  if (combined_.dim() != gens.size()) throw MismatchError("representatives are dependent modulo the subspace");
  init(small);
}

void QuotientMap::init(const Subspace& small) {
  const Field f = combined_.field();
  const std::size_t n = combined_.ambient_dim();
  const std::size_t d = combined_.dim();
  // rref([G | I]) = [C | T] with T G = C, where G stacks small's basis and
  // the representatives and C is big's canonical basis.
  Matrix g(f, d, n + d);
  auto gens = small.basis_vectors();
  gens.insert(gens.end(), reps_.begin(), reps_.end());
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = gens[i][j];
    g(i, n + i) = Scalar(f, 1);
  }
  auto red = rref(std::move(g)).reduced;
  to_reps_ = Matrix(f, d, reps_.size());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < reps_.size(); ++j) to_reps_(i, j) = red(i, n + small_dim_ + j);
}

std::optional<Vector> QuotientMap::coordinates(std::span<const Scalar> v) const {
  auto c = combined_.coordinates(v);
  if (!c) return std::nullopt;
  return to_reps_.apply_left(*c);
}

}  // namespace lieaid
