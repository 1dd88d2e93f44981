#include "fmop/gf.hpp"

#include <algorithm>
#include <numeric>

namespace fmop {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

FieldConfig::FieldConfig(int prime) : p(prime) {
  if (prime < 2 || prime > 251 || !is_prime(prime))
    throw std::invalid_argument("FieldConfig: p must be a prime in [2, 251]");
}

int FieldConfig::inv(int a) const {
  if (a % p == 0) throw std::invalid_argument("inv(0)");
  // extended Euclid
  int t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    int q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return ((t % p) + p) % p;
}

Mat::Mat(int rows, int cols, FieldConfig field)
    : rows_(rows), cols_(cols), field_(field),
      e_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("Mat: negative shape");
}

Mat Mat::identity(int n, FieldConfig field) {
  Mat m(n, n, field);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::from_rows(const std::vector<std::vector<int>>& rows, FieldConfig field) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Mat m(r, c, field);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Mat::from_rows: ragged rows");
    for (int j = 0; j < c; ++j)
      m.at(i, j) = ((rows[i][j] % field.p) + field.p) % field.p;
  }
  return m;
}

std::vector<int> Mat::row(int r) const {
  return {e_.begin() + static_cast<size_t>(r) * cols_,
          e_.begin() + static_cast<size_t>(r + 1) * cols_};
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& rhs) const {
  if (cols_ != rhs.rows_ || !(field_ == rhs.field_))
    throw std::invalid_argument("Mat::operator*: shape or field mismatch");
  Mat out(rows_, rhs.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      int a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        out.at(i, j) = (out.at(i, j) + a * rhs.at(k, j)) % field_.p;
    }
  return out;
}

std::vector<int> Mat::apply(const std::vector<int>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("Mat::apply: length mismatch");
  std::vector<int> y(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    long long acc = 0;
    for (int j = 0; j < cols_; ++j) acc += static_cast<long long>(at(i, j)) * x[j];
    y[i] = static_cast<int>(acc % field_.p);
  }
  return y;
}

Mat Mat::stacked(const Mat& below) const {
  if (cols_ != below.cols_ || !(field_ == below.field_))
    throw std::invalid_argument("Mat::stacked: shape or field mismatch");
  Mat out(rows_ + below.rows_, cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
  for (int i = 0; i < below.rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(rows_ + i, j) = below.at(i, j);
  return out;
}

Mat rref(const Mat& m) {
  Mat a = m;
  const int p = a.field().p;
  int pivot_row = 0;
  for (int col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    int sel = -1;
    for (int r = pivot_row; r < a.rows(); ++r)
      if (a.at(r, col) != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < a.cols(); ++j)
        std::swap(a.at(sel, j), a.at(pivot_row, j));
    int scale = a.field().inv(a.at(pivot_row, col));
    for (int j = 0; j < a.cols(); ++j)
      a.at(pivot_row, j) = (a.at(pivot_row, j) * scale) % p;
    for (int r = 0; r < a.rows(); ++r) {
      if (r == pivot_row) continue;
      int f = a.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < a.cols(); ++j)
        a.at(r, j) = ((a.at(r, j) - f * a.at(pivot_row, j)) % p + p) % p;
    }
    ++pivot_row;
  }
  return a;
}

int rank(const Mat& m) {
  Mat r = rref(m);
  int rk = 0;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) { ++rk; break; }
  return rk;
}

std::optional<std::vector<int>> solve(const Mat& a, const std::vector<int>& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: length mismatch");
  Mat aug(a.rows(), a.cols() + 1, a.field());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  Mat r = rref(aug);
  std::vector<int> x(a.cols(), 0);
  for (int i = 0; i < r.rows(); ++i) {
    int lead = -1;
    for (int j = 0; j < r.cols(); ++j)
      if (r.at(i, j) != 0) { lead = j; break; }
    if (lead < 0) continue;
    if (lead == a.cols()) return std::nullopt;  // 0 = 1 row
    x[lead] = r.at(i, a.cols());
  }
  return x;
}

namespace {

// Drop zero rows of an RREF matrix.
Mat strip_zero_rows(const Mat& r) {
  std::vector<std::vector<int>> keep;
  for (int i = 0; i < r.rows(); ++i) {
    auto row = r.row(i);
    if (std::any_of(row.begin(), row.end(), [](int v) { return v != 0; }))
      keep.push_back(std::move(row));
  }
  Mat out(static_cast<int>(keep.size()), r.cols(), r.field());
  for (int i = 0; i < out.rows(); ++i)
    for (int j = 0; j < out.cols(); ++j) out.at(i, j) = keep[i][j];
  return out;
}

std::vector<int> pivot_columns(const Mat& rref_basis) {
  std::vector<int> piv;
  for (int i = 0; i < rref_basis.rows(); ++i)
    for (int j = 0; j < rref_basis.cols(); ++j)
      if (rref_basis.at(i, j) != 0) { piv.push_back(j); break; }
  return piv;
}

}  // namespace

Subspace Subspace::zero(int ambient, FieldConfig field) {
  return Subspace(ambient, Mat(0, ambient, field));
}

Subspace Subspace::full(int ambient, FieldConfig field) {
  return Subspace(ambient, Mat::identity(ambient, field));
}

Subspace Subspace::from_span(const Mat& rows) {
  return Subspace(rows.cols(), strip_zero_rows(rref(rows)));
}

Subspace Subspace::from_rref(int ambient, const Mat& rows) {
  if (rows.cols() != ambient)
    throw std::invalid_argument("Subspace: basis width != ambient");
  Mat canon = strip_zero_rows(rref(rows));
  if (!(canon == rows))
    throw std::invalid_argument("Subspace: basis not in reduced row echelon form");
  return Subspace(ambient, rows);
}

Subspace kernel(const Mat& m) {
  Mat r = strip_zero_rows(rref(m));
  auto piv = pivot_columns(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  const int p = m.field().p;
  std::vector<std::vector<int>> basis;
  for (int free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<int> v(m.cols(), 0);
    v[free_col] = 1;
    for (int i = 0; i < r.rows(); ++i)
      v[piv[i]] = (p - r.at(i, free_col)) % p;
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return Subspace::zero(m.cols(), m.field());
  return Subspace::from_span(Mat::from_rows(basis, m.field()));
}

Subspace image(const Mat& m) {
  Mat t = m.transpose();
  Subspace s = Subspace::from_span(t);
  return s;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("sum: ambient or field mismatch");
  return Subspace::from_span(a.basis().stacked(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("intersect: ambient or field mismatch");
  // Zassenhaus: row reduce [A|A; B|0]; rows with zero left block carry the
  // intersection in the right block.
  const int n = a.ambient();
  Mat block(a.dim() + b.dim(), 2 * n, a.field());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < n; ++j) {
      block.at(i, j) = a.basis().at(i, j);
      block.at(i, n + j) = a.basis().at(i, j);
    }
  for (int i = 0; i < b.dim(); ++i)
    for (int j = 0; j < n; ++j) block.at(a.dim() + i, j) = b.basis().at(i, j);
  Mat r = rref(block);
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < r.rows(); ++i) {
    bool left_zero = true;
    for (int j = 0; j < n && left_zero; ++j)
      if (r.at(i, j) != 0) left_zero = false;
    if (!left_zero) continue;
    auto full = r.row(i);
    rows.emplace_back(full.begin() + n, full.end());
  }
  if (rows.empty()) return Subspace::zero(n, a.field());
  return Subspace::from_span(Mat::from_rows(rows, a.field()));
}

Subspace preimage(const Mat& m, const Subspace& s) {
  if (s.ambient() != m.rows() || !(s.field() == m.field()))
    throw std::invalid_argument("preimage: ambient or field mismatch");
  // x in preimage iff (ann(s)·m)·x = 0.
  return kernel(annihilator(s) * m);
}

bool contains(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient() || !(a.field() == b.field()))
    throw std::invalid_argument("contains: ambient or field mismatch");
  return sum(a, b) == a;
}

Subspace apply(const Mat& m, const Subspace& s) {
  if (s.ambient() != m.cols() || !(s.field() == m.field()))
    throw std::invalid_argument("apply: ambient or field mismatch");
  return Subspace::from_span(s.basis() * m.transpose());
}

Mat annihilator(const Subspace& s) {
  // Over a finite field the standard pairing is nondegenerate, so the row
  // space of B equals the annihilator of ker(B); dually ker of the matrix
  // below is exactly s.
  return kernel(s.basis()).basis();
}

std::optional<std::vector<int>> coordinates_in(const Mat& basis_rows,
                                               const std::vector<int>& v) {
  return solve(basis_rows.transpose(), v);
}

namespace {

// Enumerate every RREF matrix of rank k inside GF(p)^m, in pivot-set
// lexicographic order with an odometer over the free entries.
bool enumerate_rref(int m, int k, FieldConfig field,
                    const std::function<bool(const Mat&)>& visit) {
  if (k < 0 || k > m) return true;
  if (k == 0) return visit(Mat(0, m, field));
  std::vector<int> piv(k);
  std::iota(piv.begin(), piv.end(), 0);
  while (true) {
    // free positions: (row i, col j) with j > piv[i], j not a pivot
    std::vector<bool> is_pivot(m, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_pos;
    for (int i = 0; i < k; ++i)
      for (int j = piv[i] + 1; j < m; ++j)
        if (!is_pivot[j]) free_pos.emplace_back(i, j);
    std::vector<int> vals(free_pos.size(), 0);
    while (true) {
      Mat b(k, m, field);
      for (int i = 0; i < k; ++i) b.at(i, piv[i]) = 1;
      for (size_t t = 0; t < free_pos.size(); ++t)
        b.at(free_pos[t].first, free_pos[t].second) = vals[t];
      if (!visit(b)) return false;
      size_t t = 0;
      for (; t < vals.size(); ++t) {
        if (++vals[t] < field.p) break;
        vals[t] = 0;
      }
      if (t == vals.size()) break;
    }
    // next pivot combination (lex)
    int i = k - 1;
    while (i >= 0 && piv[i] == m - k + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  return true;
}

}  // namespace

bool enumerate_subspaces(int ambient, FieldConfig field,
                         std::optional<int> dim,
                         const std::optional<Subspace>& floor,
                         const std::function<bool(const Subspace&)>& visit) {
  if (floor && (floor->ambient() != ambient || !(floor->field() == field)))
    throw std::invalid_argument("enumerate_subspaces: floor mismatch");
  if (dim && (*dim < 0 || *dim > ambient))
    throw std::invalid_argument("enumerate_subspaces: dim out of range");

  const int f = floor ? floor->dim() : 0;
  // Enumerate in the quotient GF(p)^ambient / floor, then lift. Quotient
  // coordinates are the non-pivot columns of the floor basis.
  std::vector<int> qcols;
  if (floor) {
    std::vector<bool> is_pivot(ambient, false);
    for (int c : pivot_columns(floor->basis())) is_pivot[c] = true;
    for (int j = 0; j < ambient; ++j)
      if (!is_pivot[j]) qcols.push_back(j);
  } else {
    qcols.resize(ambient);
    std::iota(qcols.begin(), qcols.end(), 0);
  }
  const int m = static_cast<int>(qcols.size());

  auto lift_and_visit = [&](const Mat& qbasis) {
    Mat lifted(qbasis.rows(), ambient, field);
    for (int i = 0; i < qbasis.rows(); ++i)
      for (int j = 0; j < m; ++j) lifted.at(i, qcols[j]) = qbasis.at(i, j);
    Mat span = floor ? floor->basis().stacked(lifted) : lifted;
    return visit(Subspace::from_span(span));
  };

  if (dim) {
    if (*dim < f) return true;  // nothing contains floor at that dimension
    return enumerate_rref(m, *dim - f, field, lift_and_visit);
  }
  for (int k = 0; k <= m; ++k)
    if (!enumerate_rref(m, k, field, lift_and_visit)) return false;
  return true;
}

std::vector<Subspace> all_subspaces(int ambient, FieldConfig field,
                                    std::optional<int> dim,
                                    const std::optional<Subspace>& floor) {
  std::vector<Subspace> out;
  enumerate_subspaces(ambient, field, dim, floor, [&](const Subspace& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

BigInt gaussian_binomial(int n, int k, int q) {
  if (n < 0 || k < 0) throw std::invalid_argument("gaussian_binomial: negative");
  if (q < 2) throw std::invalid_argument("gaussian_binomial: q < 2");
  if (k > n) return 0;
  BigInt result = 1;
  BigInt qb = q;
  for (int i = 0; i < k; ++i) {
    result *= boost::multiprecision::pow(qb, n - i) - 1;
    result /= boost::multiprecision::pow(qb, i + 1) - 1;  // exact at each step
  }
  return result;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
  size_t h = std::hash<int>{}(s.ambient()) * 31 + s.field().p;
  for (int i = 0; i < s.basis().rows(); ++i)
    for (int j = 0; j < s.basis().cols(); ++j)
      h = h * 1000003 + static_cast<size_t>(s.basis().at(i, j));
  return h;
}

}  // namespace fmop
