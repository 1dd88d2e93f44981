#pragma once

// Exact linear algebra over prime fields GF(p), with canonical (RREF)
// subspace representatives and subspace enumeration.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fmop {

using BigInt = boost::multiprecision::cpp_int;

struct FieldConfig {
  int p;

  explicit FieldConfig(int prime);

  bool operator==(const FieldConfig&) const = default;

  int add(int a, int b) const { return (a + b) % p; }
  int sub(int a, int b) const { return (a - b + p) % p; }
  int mul(int a, int b) const { return (a * b) % p; }
  int neg(int a) const { return (p - a) % p; }
  int inv(int a) const;
};

class Mat {
 public:
  Mat(int rows, int cols, FieldConfig field);

  static Mat identity(int n, FieldConfig field);
  static Mat from_rows(const std::vector<std::vector<int>>& rows,
                       FieldConfig field);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const FieldConfig& field() const { return field_; }

  int at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  int& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<int> row(int r) const;
  Mat transpose() const;
  Mat operator*(const Mat& rhs) const;
  std::vector<int> apply(const std::vector<int>& x) const;  // m·x, column vector
  Mat stacked(const Mat& below) const;

  bool operator==(const Mat&) const = default;

 private:
  int rows_;
  int cols_;
  FieldConfig field_;
  std::vector<int> e_;
};

Mat rref(const Mat& m);
int rank(const Mat& m);

// Solve A·x = b; nullopt when inconsistent.
std::optional<std::vector<int>> solve(const Mat& a, const std::vector<int>& b);

class Subspace {
 public:
  static Subspace zero(int ambient, FieldConfig field);
  static Subspace full(int ambient, FieldConfig field);
  // Canonicalize the row span of `rows` (rows live in GF(p)^cols).
  static Subspace from_span(const Mat& rows);
  // Validating constructor for deserialized data: `rows` must already be in
  // RREF with no zero rows.
  static Subspace from_rref(int ambient, const Mat& rows);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const FieldConfig& field() const { return basis_.field(); }
  const Mat& basis() const { return basis_; }

  bool operator==(const Subspace&) const = default;

 private:
  Subspace(int ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}

  int ambient_;
  Mat basis_;  // RREF, zero rows dropped
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);  // column space, inside GF(p)^rows
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace preimage(const Mat& m, const Subspace& s);  // {x : m·x in s}
bool contains(const Subspace& a, const Subspace& b);  // b subseteq a
Subspace apply(const Mat& m, const Subspace& s);  // m(s), inside GF(p)^rows

// Matrix whose kernel is exactly s (rows span the annihilator of s under the
// standard pairing).
Mat annihilator(const Subspace& s);

// Coordinates of v in the row basis `basisRows`; nullopt when v is outside
// the span.
std::optional<std::vector<int>> coordinates_in(const Mat& basis_rows,
                                               const std::vector<int>& v);

// Yields each subspace of GF(p)^ambient exactly once in a fixed deterministic
// order, filtered by dimension and containment floor when given. The visitor
// returns false to stop early. Returns false iff stopped early.
bool enumerate_subspaces(int ambient, FieldConfig field,
                         std::optional<int> dim,
                         const std::optional<Subspace>& floor,
                         const std::function<bool(const Subspace&)>& visit);

std::vector<Subspace> all_subspaces(int ambient, FieldConfig field,
                                    std::optional<int> dim = std::nullopt,
                                    const std::optional<Subspace>& floor =
                                        std::nullopt);

BigInt gaussian_binomial(int n, int k, int q);

struct SubspaceHash {
  size_t operator()(const Subspace& s) const;
};

}  // namespace fmop
