#pragma once

// Exact linear algebra over GF(2) and GF(3): vectors, projective points,
// ranks, quadratic and bilinear forms.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gqveld {

inline void require_supported_characteristic(int p) {
  if (p != 2 && p != 3) {
    throw std::invalid_argument("unsupported field characteristic " + std::to_string(p) +
                                " (only 2 and 3)");
  }
}

/// A vector over GF(p), p in {2, 3}, with every coordinate reduced mod p.
class FieldVector {
 public:
  FieldVector(int p, std::vector<int> coords) : p_(p) {
    require_supported_characteristic(p);
    coords_.reserve(coords.size());
    for (int c : coords) coords_.push_back(static_cast<std::uint8_t>(((c % p) + p) % p));
  }

  static FieldVector zero(int n, int p) { return FieldVector(p, std::vector<int>(static_cast<std::size_t>(n), 0)); }

  /// GF(2) vector whose first coordinate is the most significant of n bits,
  /// so that numeric order of masks is lexicographic order of coordinates.
  static FieldVector from_bits(int n, std::uint64_t bits) {
    std::vector<int> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = static_cast<int>((bits >> (n - 1 - i)) & 1U);
    return FieldVector(2, std::move(c));
  }

  std::uint64_t to_bits() const {
    if (p_ != 2) throw std::logic_error("to_bits requires a GF(2) vector");
    std::uint64_t bits = 0;
    for (std::uint8_t c : coords_) bits = (bits << 1) | c;
    return bits;
  }

  int characteristic() const { return p_; }
  int dimension() const { return static_cast<int>(coords_.size()); }
  int operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }
  bool is_zero() const {
    for (auto c : coords_) if (c != 0) return false;
    return true;
  }

  FieldVector operator+(const FieldVector& o) const {
    check_compatible(o);
    FieldVector r = *this;
    for (std::size_t i = 0; i < coords_.size(); ++i) r.coords_[i] = static_cast<std::uint8_t>((coords_[i] + o.coords_[i]) % p_);
    return r;
  }

  FieldVector scaled(int lambda) const {
    FieldVector r = *this;
    int l = ((lambda % p_) + p_) % p_;
    for (auto& c : r.coords_) c = static_cast<std::uint8_t>((c * l) % p_);
    return r;
  }

  // Projective representative: first nonzero coordinate equal to 1.
  FieldVector normalized() const {
    for (auto c : coords_) {
      if (c != 0) return scaled(c == 1 ? 1 : 2);  // 2 is its own inverse mod 3
    }
    return *this;
  }

  void check_compatible(const FieldVector& o) const {
    if (p_ != o.p_ || coords_.size() != o.coords_.size()) {
      throw std::invalid_argument("field vectors of different dimension or characteristic");
    }
  }

  friend bool operator==(const FieldVector&, const FieldVector&) = default;
  friend auto operator<=>(const FieldVector& a, const FieldVector& b) { return a.coords_ <=> b.coords_; }

 private:
  int p_;
  std::vector<std::uint8_t> coords_;
};

/// Canonical representatives of the projective points of GF(p)^n, ordered
/// lexicographically with first nonzero coordinate 1.
inline std::vector<FieldVector> enumerate_projective_points(int n, int p) {
  require_supported_characteristic(p);
  if (n < 1) throw std::invalid_argument("projective point enumeration needs n >= 1");
  std::vector<FieldVector> out;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  // Odometer over all p^n vectors in lexicographic order.
  while (true) {
    int lead = 0;
    for (int v : c) {
      if (v != 0) { lead = v; break; }
    }
    if (lead == 1) out.emplace_back(p, c);
    int i = n - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == p - 1) c[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
  }
  return out;
}

/// Rank of the span of `vectors`, by Gaussian elimination over GF(p).
inline int gf_rank(std::span<const FieldVector> vectors) {
  if (vectors.empty()) return 0;
  const int p = vectors.front().characteristic();
  const int n = vectors.front().dimension();
  std::vector<std::vector<int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    vectors.front().check_compatible(v);
    std::vector<int> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = v[i];
    rows.push_back(std::move(r));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = static_cast<std::size_t>(rank);
    while (pivot < rows.size() && rows[pivot][static_cast<std::size_t>(col)] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[static_cast<std::size_t>(rank)]);
    auto& pr = rows[static_cast<std::size_t>(rank)];
    const int inv = pr[static_cast<std::size_t>(col)];  // 1 and 2 are self-inverse mod 2 and 3
    for (auto& x : pr) x = (x * inv) % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank)) continue;
      const int f = rows[r][static_cast<std::size_t>(col)];
      if (f == 0) continue;
      for (int j = 0; j < n; ++j) {
        auto& x = rows[r][static_cast<std::size_t>(j)];
        x = ((x - f * pr[static_cast<std::size_t>(j)]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

inline int gf_rank(const std::vector<FieldVector>& vectors) { return gf_rank(std::span<const FieldVector>(vectors)); }

/// Bilinear form given by its Gram matrix. The flags are computed, never
/// supplied by the caller.
class BilinearForm {
 public:
  BilinearForm(int p, std::vector<std::vector<int>> gram) : p_(p), gram_(std::move(gram)) {
    require_supported_characteristic(p);
    const auto n = gram_.size();
    for (auto& row : gram_) {
      if (row.size() != n) throw std::invalid_argument("Gram matrix must be square");
      for (auto& x : row) x = ((x % p) + p) % p;
    }
    symmetric_ = true;
    alternating_ = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (gram_[i][i] != 0) alternating_ = false;
      for (std::size_t j = 0; j < n; ++j) {
        if (gram_[i][j] != gram_[j][i]) symmetric_ = false;
        if ((gram_[i][j] + gram_[j][i]) % p != 0) alternating_ = false;
      }
    }
    std::vector<FieldVector> rows;
    for (const auto& row : gram_) rows.emplace_back(p, row);
    nondegenerate_ = gf_rank(rows) == static_cast<int>(n);
  }

  int characteristic() const { return p_; }
  int dimension() const { return static_cast<int>(gram_.size()); }
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  bool symmetric() const { return symmetric_; }
  bool alternating() const { return alternating_; }
  bool nondegenerate() const { return nondegenerate_; }

  int operator()(const FieldVector& x, const FieldVector& y) const {
    x.check_compatible(y);
    int s = 0;
    for (int i = 0; i < dimension(); ++i) {
      if (x[i] == 0) continue;
      for (int j = 0; j < dimension(); ++j) s += x[i] * gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * y[j];
    }
    return s % p_;
  }

  // GF(2) fast path on bit-packed vectors (see FieldVector::from_bits).
  int on_bits(std::uint64_t x, std::uint64_t y) const {
    const int n = dimension();
    int s = 0;
    for (int i = 0; i < n; ++i) {
      if (((x >> (n - 1 - i)) & 1U) == 0) continue;
      for (int j = 0; j < n; ++j) s ^= gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] & static_cast<int>((y >> (n - 1 - j)) & 1U);
    }
    return s;
  }

 private:
  int p_;
  std::vector<std::vector<int>> gram_;
  bool symmetric_ = false;
  bool alternating_ = false;
  bool nondegenerate_ = false;
};

enum class QuadricKind { elliptic, hyperbolic, parabolic, unspecified };

/// Quadratic form sum_{i<=j} c_ij x_i x_j over GF(p).
class QuadraticForm {
 public:
  // `upper[i][j]` is read only for i <= j.
  QuadraticForm(int p, std::vector<std::vector<int>> upper, QuadricKind kind = QuadricKind::unspecified)
      : p_(p), coeff_(std::move(upper)), kind_(kind) {
    require_supported_characteristic(p);
    const auto n = coeff_.size();
    for (std::size_t i = 0; i < n; ++i) {
      if (coeff_[i].size() != n) throw std::invalid_argument("coefficient matrix must be square");
      for (std::size_t j = 0; j < n; ++j) coeff_[i][j] = j < i ? 0 : ((coeff_[i][j] % p) + p) % p;
    }
  }

  int characteristic() const { return p_; }
  int dimension() const { return static_cast<int>(coeff_.size()); }
  QuadricKind kind() const { return kind_; }
  const std::vector<std::vector<int>>& coefficients() const { return coeff_; }

  int operator()(const FieldVector& x) const {
    if (x.dimension() != dimension() || x.characteristic() != p_) {
      throw std::invalid_argument("vector does not match quadratic form");
    }
    int s = 0;
    for (int i = 0; i < dimension(); ++i) {
      for (int j = i; j < dimension(); ++j) s += coeff_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[i] * x[j];
    }
    return s % p_;
  }

  int on_bits(std::uint64_t x) const { return (*this)(FieldVector::from_bits(dimension(), x)); }

 private:
  int p_;
  std::vector<std::vector<int>> coeff_;
  QuadricKind kind_;
};

namespace detail {
inline std::vector<std::vector<int>> square(int n) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
}
}  // namespace detail

/// Q(x) = x1x2 + x3x4 + x5^2 + x5x6 + x6^2 on GF(2)^6.
inline QuadraticForm standard_elliptic_form() {
  auto c = detail::square(6);
  c[0][1] = c[2][3] = 1;
  c[4][4] = c[4][5] = c[5][5] = 1;
  return QuadraticForm(2, std::move(c), QuadricKind::elliptic);
}

/// Q(x) = x1x2 + x3x4 + x5x6 on GF(2)^6.
inline QuadraticForm standard_hyperbolic_form() {
  auto c = detail::square(6);
  c[0][1] = c[2][3] = c[4][5] = 1;
  return QuadraticForm(2, std::move(c), QuadricKind::hyperbolic);
}

/// Q(x) = x1x2 + x3x4 + x5^2 on GF(2)^5.
inline QuadraticForm standard_parabolic_form() {
  auto c = detail::square(5);
  c[0][1] = c[2][3] = c[4][4] = 1;
  return QuadraticForm(2, std::move(c), QuadricKind::parabolic);
}

/// x1y2 - x2y1 + x3y4 - x4y3 + ... on GF(p)^n, n even.
inline BilinearForm standard_symplectic_form(int n, int p) {
  if (n % 2 != 0) throw std::invalid_argument("symplectic form needs even dimension");
  auto g = detail::square(n);
  for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(n); i += 2) {
    g[i][i + 1] = 1;
    g[i + 1][i] = p - 1;
  }
  return BilinearForm(p, std::move(g));
}

/// b(x, y) = Q(x + y) + Q(x) + Q(y); characteristic 2 only.
inline BilinearForm polarize(const QuadraticForm& q) {
  if (q.characteristic() != 2) throw std::invalid_argument("polarize requires a characteristic-2 form");
  const int n = q.dimension();
  auto g = detail::square(n);
  const auto& c = q.coefficients();
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = i + 1; j < static_cast<std::size_t>(n); ++j) g[i][j] = g[j][i] = c[i][j];
  }
  return BilinearForm(2, std::move(g));
}

inline std::vector<FieldVector> quadric_points(const QuadraticForm& q) {
  std::vector<FieldVector> out;
  for (auto& x : enumerate_projective_points(q.dimension(), q.characteristic())) {
    if (q(x) == 0) out.push_back(std::move(x));
  }
  return out;
}

inline int quadric_point_count(const QuadraticForm& q) { return static_cast<int>(quadric_points(q).size()); }

}  // namespace gqveld
