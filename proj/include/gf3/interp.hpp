#pragma once

// Evaluation-interpolation machinery for short polynomial products over any
// of the fields in this library: Vandermonde matrices, their inverses (dense
// Gauss-Jordan or the root-of-unity shortcut), short-product schemes with
// the leading- and constant-coefficient shortcuts, and the root/point
// searches for F_{p^2}.
//
// Field access goes through an "ops" object (QuadFieldOps, Gf3mFieldOps,
// SmallExtOps below). ops.mul charges the counter in its own units; for
// QuadFieldOps that is three base multiplications per call.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gf3/errors.hpp"
#include "gf3/quadext.hpp"
#include "gf3/small_field.hpp"

namespace gf3 {

// --- field adapters ------------------------------------------------------------

template <class F>
concept FieldOps = requires(const F& f, const typename F::value_type& a, OpCounter& c, long n) {
  { f.zero() } -> std::same_as<typename F::value_type>;
  { f.one() } -> std::same_as<typename F::value_type>;
  { f.from_int(n) } -> std::same_as<typename F::value_type>;
  { f.add(a, a) } -> std::same_as<typename F::value_type>;
  { f.sub(a, a) } -> std::same_as<typename F::value_type>;
  { f.neg(a) } -> std::same_as<typename F::value_type>;
  { f.mul(a, a, c) } -> std::same_as<typename F::value_type>;
  { f.inv(a) } -> std::same_as<typename F::value_type>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.belongs(a) } -> std::convertible_to<bool>;
  { f.to_string(a) } -> std::convertible_to<std::string>;
};

/// F_{3^{2m}} for a given base context.
class QuadFieldOps {
 public:
  using value_type = QuadElem;
  explicit QuadFieldOps(const FieldContext& ctx) : ctx_(&ctx) {}

  QuadElem zero() const { return quad_zero(*ctx_); }
  QuadElem one() const { return quad_one(*ctx_); }
  QuadElem s() const { return quad_s(*ctx_); }
  QuadElem from_int(long n) const { return quad_from_base(ctx_->constant(static_cast<std::uint8_t>(((n % 3) + 3) % 3))); }
  QuadElem add(const QuadElem& a, const QuadElem& b) const { return qadd(a, b); }
  QuadElem sub(const QuadElem& a, const QuadElem& b) const { return qsub(a, b); }
  QuadElem neg(const QuadElem& a) const { return qneg(a); }
  QuadElem mul(const QuadElem& a, const QuadElem& b, OpCounter& c) const { return qmul(a, b, c); }
  QuadElem inv(const QuadElem& a) const { return qinv(a); }
  std::uint64_t characteristic() const { return 3; }
  bool belongs(const QuadElem& a) const { return a.v.context() == ctx_ && a.u.context() == ctx_; }
  /// 0, 1, -1, s, -s, 1+s, ... when the components are constants; the raw
  /// "v|u" serialization otherwise.
  std::string to_string(const QuadElem& a) const;
  const FieldContext& context() const { return *ctx_; }

 private:
  const FieldContext* ctx_;
};

/// F_{3^m} itself.
class Gf3mFieldOps {
 public:
  using value_type = Gf3mElem;
  explicit Gf3mFieldOps(const FieldContext& ctx) : ctx_(&ctx) {}

  Gf3mElem zero() const { return ctx_->zero(); }
  Gf3mElem one() const { return ctx_->one(); }
  Gf3mElem from_int(long n) const { return ctx_->constant(static_cast<std::uint8_t>(((n % 3) + 3) % 3)); }
  Gf3mElem add(const Gf3mElem& a, const Gf3mElem& b) const { return gf3::add(a, b); }
  Gf3mElem sub(const Gf3mElem& a, const Gf3mElem& b) const { return gf3::sub(a, b); }
  Gf3mElem neg(const Gf3mElem& a) const { return gf3::neg(a); }
  Gf3mElem mul(const Gf3mElem& a, const Gf3mElem& b, OpCounter& c) const { return gf3::mul(a, b, c); }
  Gf3mElem inv(const Gf3mElem& a) const { return gf3::inv(a); }
  std::uint64_t characteristic() const { return 3; }
  bool belongs(const Gf3mElem& a) const { return a.context() == ctx_; }
  std::string to_string(const Gf3mElem& a) const { return a.to_string(); }

 private:
  const FieldContext* ctx_;
};

/// F_{p^2} for small p; one counter tick per multiplication.
class SmallExtOps {
 public:
  using value_type = SmallExtElem;
  explicit SmallExtOps(SmallExtField field) : f_(field) {}

  SmallExtElem zero() const { return f_.zero(); }
  SmallExtElem one() const { return f_.one(); }
  SmallExtElem from_int(long n) const { return f_.from_int(n); }
  SmallExtElem add(const SmallExtElem& a, const SmallExtElem& b) const { return f_.add(a, b); }
  SmallExtElem sub(const SmallExtElem& a, const SmallExtElem& b) const { return f_.sub(a, b); }
  SmallExtElem neg(const SmallExtElem& a) const { return f_.neg(a); }
  SmallExtElem mul(const SmallExtElem& a, const SmallExtElem& b, OpCounter& c) const {
    ++c.base_muls;
    return f_.mul(a, b);
  }
  SmallExtElem inv(const SmallExtElem& a) const { return f_.inv(a); }
  std::uint64_t characteristic() const { return f_.characteristic(); }
  bool belongs(const SmallExtElem& a) const { return a.v < f_.characteristic() && a.u < f_.characteristic(); }
  std::string to_string(const SmallExtElem& a) const { return f_.to_string(a); }
  const SmallExtField& field() const { return f_; }

 private:
  SmallExtField f_;
};

// --- matrices ------------------------------------------------------------------

/// Dense row-major matrix.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const T& fill) : rows(r), cols(c), data(r * c, fill) {}

  T& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const T& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

template <FieldOps F>
typename F::value_type field_pow(const F& ops, typename F::value_type a, std::uint64_t e) {
  OpCounter scratch;
  auto r = ops.one();
  while (e != 0) {
    if (e & 1) r = ops.mul(r, a, scratch);
    a = ops.mul(a, a, scratch);
    e >>= 1;
  }
  return r;
}

template <FieldOps F>
Matrix<typename F::value_type> matmul(const F& ops, const Matrix<typename F::value_type>& a,
                                      const Matrix<typename F::value_type>& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matmul: shape mismatch");
  OpCounter scratch;
  Matrix<typename F::value_type> c(a.rows, b.cols, ops.zero());
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < b.cols; ++j) {
      auto acc = ops.zero();
      for (std::size_t k = 0; k < a.cols; ++k) acc = ops.add(acc, ops.mul(a.at(i, k), b.at(k, j), scratch));
      c.at(i, j) = acc;
    }
  }
  return c;
}

/// y = M x. Multiplications by matrix entries other than 0 and 1 are
/// constant multiplications and are charged to counter.scalar_ops.
template <FieldOps F>
std::vector<typename F::value_type> matvec(const F& ops, const Matrix<typename F::value_type>& m,
                                           const std::vector<typename F::value_type>& x, OpCounter& counter) {
  if (m.cols != x.size()) throw std::invalid_argument("matvec: shape mismatch");
  const auto zero = ops.zero();
  const auto one = ops.one();
  OpCounter scratch;
  std::vector<typename F::value_type> y(m.rows, zero);
  for (std::size_t i = 0; i < m.rows; ++i) {
    auto acc = zero;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const auto& e = m.at(i, j);
      if (e == zero) continue;
      if (e == one) {
        acc = ops.add(acc, x[j]);
      } else {
        ++counter.scalar_ops;
        acc = ops.add(acc, ops.mul(e, x[j], scratch));
      }
    }
    y[i] = acc;
  }
  return y;
}

template <FieldOps F>
Matrix<typename F::value_type> identity_matrix(const F& ops, std::size_t n) {
  Matrix<typename F::value_type> id(n, n, ops.zero());
  for (std::size_t i = 0; i < n; ++i) id.at(i, i) = ops.one();
  return id;
}

template <FieldOps F>
bool is_identity(const F& ops, const Matrix<typename F::value_type>& m) {
  return m.rows == m.cols && m == identity_matrix(ops, m.rows);
}

/// Gauss-Jordan inverse; throws std::invalid_argument for singular input.
template <FieldOps F>
Matrix<typename F::value_type> invert_matrix(const F& ops, Matrix<typename F::value_type> m) {
  if (m.rows != m.cols) throw std::invalid_argument("invert_matrix: not square");
  const std::size_t n = m.rows;
  const auto zero = ops.zero();
  OpCounter scratch;
  auto inv = identity_matrix(ops, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m.at(pivot, col) == zero) ++pivot;
    if (pivot == n) throw std::invalid_argument("invert_matrix: singular");
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const auto scale = ops.inv(m.at(col, col));
    for (std::size_t j = 0; j < n; ++j) {
      m.at(col, j) = ops.mul(m.at(col, j), scale, scratch);
      inv.at(col, j) = ops.mul(inv.at(col, j), scale, scratch);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m.at(r, col) == zero) continue;
      const auto f = m.at(r, col);
      for (std::size_t j = 0; j < n; ++j) {
        m.at(r, j) = ops.sub(m.at(r, j), ops.mul(f, m.at(col, j), scratch));
        inv.at(r, j) = ops.sub(inv.at(r, j), ops.mul(f, inv.at(col, j), scratch));
      }
    }
  }
  return inv;
}

// --- point sets and Vandermonde matrices ------------------------------------------

/// Ordered, pairwise-distinct evaluation points.
template <class T>
class PointSet {
 public:
  /// Throws kDuplicatePoints.
  explicit PointSet(std::vector<T> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      for (std::size_t j = i + 1; j < points_.size(); ++j) {
        if (points_[i] == points_[j]) {
          throw Error(ErrorCode::kDuplicatePoints,
                      "points " + std::to_string(i) + " and " + std::to_string(j) + " coincide");
        }
      }
    }
  }

  const std::vector<T>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const T& operator[](std::size_t i) const { return points_[i]; }

 private:
  std::vector<T> points_;
};

/// Rows are the geometric progressions pts[i]^j, j = first_power .. first_power + cols - 1.
template <FieldOps F>
Matrix<typename F::value_type> power_matrix(const F& ops, const std::vector<typename F::value_type>& pts,
                                            std::size_t cols, std::size_t first_power = 0) {
  OpCounter scratch;
  Matrix<typename F::value_type> v(pts.size(), cols, ops.zero());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    auto p = field_pow(ops, pts[i], first_power);
    for (std::size_t j = 0; j < cols; ++j) {
      v.at(i, j) = p;
      p = ops.mul(p, pts[i], scratch);
    }
  }
  return v;
}

/// Square Vandermonde matrix, entry (i, j) = pts[i]^j.
template <FieldOps F>
Matrix<typename F::value_type> build_vandermonde(const F& ops, const PointSet<typename F::value_type>& pts) {
  return power_matrix(ops, pts.points(), pts.size());
}

/// Smallest d >= 1 with a^d = 1, searching up to limit; 0 if none.
template <FieldOps F>
std::uint64_t order_up_to(const F& ops, const typename F::value_type& a, std::uint64_t limit) {
  OpCounter scratch;
  auto x = a;
  const auto one = ops.one();
  for (std::uint64_t d = 1; d <= limit; ++d) {
    if (x == one) return d;
    x = ops.mul(x, a, scratch);
  }
  return 0;
}

/// Inverse of the Vandermonde matrix on 1, omega, ..., omega^{k-1}, computed
/// as k^{-1} times the Vandermonde matrix on the powers of omega^{-1}.
/// Throws kNonInvertibleSize when the characteristic divides k, kWrongOrder
/// unless omega has multiplicative order exactly k.
template <FieldOps F>
Matrix<typename F::value_type> invert_root_vandermonde(const F& ops, const typename F::value_type& omega,
                                                       std::size_t k) {
  if (k == 0 || k % ops.characteristic() == 0) {
    throw Error(ErrorCode::kNonInvertibleSize, "size " + std::to_string(k) + " is not invertible in the field");
  }
  if (order_up_to(ops, omega, k) != k) {
    throw Error(ErrorCode::kWrongOrder, "root does not have multiplicative order " + std::to_string(k));
  }
  OpCounter scratch;
  const auto omega_inv = field_pow(ops, omega, k - 1);
  const auto k_inv = ops.inv(ops.from_int(static_cast<long>(k % ops.characteristic())));
  std::vector<typename F::value_type> pts;
  auto p = ops.one();
  for (std::size_t i = 0; i < k; ++i) {
    pts.push_back(p);
    p = ops.mul(p, omega_inv, scratch);
  }
  auto w = power_matrix(ops, pts, k);
  for (auto& e : w.data) e = ops.mul(e, k_inv, scratch);
  return w;
}

// --- short-product schemes ------------------------------------------------------

/// Computes the 2n + 1 coefficients of a product of two degree-<= n
/// polynomials from k pointwise products plus optional endpoint products:
/// the leading coefficient a_n b_n (infinity_trick) and the constant term
/// a_0 b_0 (zero_trick). k = 2n + 1 - infinity_trick - zero_trick.
template <class T>
struct ShortProductScheme {
  std::vector<T> points;
  std::size_t degree_bound = 0;
  bool infinity_trick = false;
  bool zero_trick = false;
  /// k x (n + 1): evaluates a factor at every point.
  Matrix<T> evaluation;
  /// k x k: maps the unknown coefficients to the corrected point values.
  Matrix<T> system;
  /// system^{-1}.
  Matrix<T> interpolation;

  std::size_t unknown_offset() const { return zero_trick ? 1 : 0; }
  std::size_t product_count() const { return points.size() + (infinity_trick ? 1 : 0) + (zero_trick ? 1 : 0); }
};

namespace detail {

template <FieldOps F>
ShortProductScheme<typename F::value_type> scheme_skeleton(const F& ops, const std::vector<typename F::value_type>& pts,
                                                           std::size_t n, bool infinity, bool zero) {
  const std::size_t expected = 2 * n + 1 - (infinity ? 1 : 0) - (zero ? 1 : 0);
  if (pts.size() != expected) {
    throw std::invalid_argument("scheme needs " + std::to_string(expected) + " points, got " +
                                std::to_string(pts.size()));
  }
  if (zero) {
    for (const auto& p : pts) {
      if (p == ops.zero()) throw std::invalid_argument("zero trick needs nonzero points");
    }
  }
  ShortProductScheme<typename F::value_type> s;
  s.points = pts;
  s.degree_bound = n;
  s.infinity_trick = infinity;
  s.zero_trick = zero;
  s.evaluation = power_matrix(ops, pts, n + 1);
  s.system = power_matrix(ops, pts, pts.size(), zero ? 1 : 0);
  return s;
}

}  // namespace detail

/// Scheme on arbitrary distinct points; the interpolation matrix comes from
/// Gauss-Jordan elimination.
template <FieldOps F>
ShortProductScheme<typename F::value_type> make_short_product_scheme(const F& ops,
                                                                     const PointSet<typename F::value_type>& pts,
                                                                     std::size_t n, bool infinity_trick,
                                                                     bool zero_trick = false) {
  auto s = detail::scheme_skeleton(ops, pts.points(), n, infinity_trick, zero_trick);
  s.interpolation = invert_matrix(ops, s.system);
  return s;
}

/// Scheme on 1, omega, ..., omega^{k-1}; the interpolation matrix comes from
/// invert_root_vandermonde.
template <FieldOps F>
ShortProductScheme<typename F::value_type> make_root_of_unity_scheme(const F& ops, const typename F::value_type& omega,
                                                                     std::size_t k, std::size_t n,
                                                                     bool infinity_trick) {
  OpCounter scratch;
  std::vector<typename F::value_type> pts;
  auto p = ops.one();
  for (std::size_t i = 0; i < k; ++i) {
    pts.push_back(p);
    p = ops.mul(p, omega, scratch);
  }
  const PointSet<typename F::value_type> checked(pts);
  auto s = detail::scheme_skeleton(ops, checked.points(), n, infinity_trick, false);
  s.interpolation = invert_root_vandermonde(ops, omega, k);
  return s;
}

/// The four-point scheme on (1, s, -1, -s) with the leading-coefficient
/// shortcut, for products of degree-2 polynomials over F_{3^{2m}}.
inline ShortProductScheme<QuadElem> make_s_scheme(const QuadFieldOps& ops) {
  return make_root_of_unity_scheme(ops, ops.s(), 4, 2, true);
}

/// Full product of a and b (coefficient lists, lowest first) through the
/// scheme. Field multiplications charged to counter: one per point plus one
/// per endpoint shortcut.
template <FieldOps F>
std::vector<typename F::value_type> generic_short_product(const F& ops, const std::vector<typename F::value_type>& a,
                                                          const std::vector<typename F::value_type>& b,
                                                          const ShortProductScheme<typename F::value_type>& scheme,
                                                          OpCounter& counter) {
  using T = typename F::value_type;
  const std::size_t n = scheme.degree_bound;
  if (a.size() > n + 1 || b.size() > n + 1) {
    throw Error(ErrorCode::kDegreeTooHigh, "factor degree exceeds scheme bound " + std::to_string(n));
  }
  for (const auto* v : {&a, &b}) {
    for (const auto& x : *v) {
      if (!ops.belongs(x)) throw Error(ErrorCode::kSchemeFieldMismatch, "coefficient outside the scheme's field");
    }
  }
  for (const auto& p : scheme.points) {
    if (!ops.belongs(p)) throw Error(ErrorCode::kSchemeFieldMismatch, "scheme built over a different field");
  }
  std::vector<T> pa(a), pb(b);
  pa.resize(n + 1, ops.zero());
  pb.resize(n + 1, ops.zero());

  const auto ea = matvec(ops, scheme.evaluation, pa, counter);
  const auto eb = matvec(ops, scheme.evaluation, pb, counter);
  const std::size_t k = scheme.points.size();

  std::vector<T> rhs(k, ops.zero());
  for (std::size_t i = 0; i < k; ++i) rhs[i] = ops.mul(ea[i], eb[i], counter);

  std::vector<T> result(2 * n + 1, ops.zero());
  OpCounter scratch;
  if (scheme.infinity_trick) {
    const T top = ops.mul(pa[n], pb[n], counter);
    result[2 * n] = top;
    for (std::size_t i = 0; i < k; ++i) {
      const T e = field_pow(ops, scheme.points[i], 2 * n);
      if (!(e == ops.one())) ++counter.scalar_ops;
      rhs[i] = ops.sub(rhs[i], ops.mul(top, e, scratch));
    }
  }
  if (scheme.zero_trick) {
    const T low = ops.mul(pa[0], pb[0], counter);
    result[0] = low;
    for (auto& r : rhs) r = ops.sub(r, low);
  }
  const auto mid = matvec(ops, scheme.interpolation, rhs, counter);
  for (std::size_t j = 0; j < k; ++j) result[j + scheme.unknown_offset()] = mid[j];
  return result;
}

/// Schoolbook convolution, the reference for generic_short_product.
template <FieldOps F>
std::vector<typename F::value_type> schoolbook_product(const F& ops, const std::vector<typename F::value_type>& a,
                                                       const std::vector<typename F::value_type>& b,
                                                       OpCounter& counter) {
  if (a.empty() || b.empty()) return {};
  std::vector<typename F::value_type> c(a.size() + b.size() - 1, ops.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = ops.add(c[i + j], ops.mul(a[i], b[j], counter));
  }
  return c;
}

/// Linear forms expressing each output coefficient c_0 .. c_{2n} in terms of
/// the products. Product order: the k point products P_0 .. P_{k-1}, then the
/// leading product (if any), then the constant product (if any).
template <FieldOps F>
Matrix<typename F::value_type> scheme_linear_forms(const F& ops,
                                                   const ShortProductScheme<typename F::value_type>& scheme) {
  const std::size_t n = scheme.degree_bound;
  const std::size_t k = scheme.points.size();
  const std::size_t top_col = k;
  const std::size_t low_col = k + (scheme.infinity_trick ? 1 : 0);
  OpCounter scratch;
  Matrix<typename F::value_type> forms(2 * n + 1, scheme.product_count(), ops.zero());
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t row = j + scheme.unknown_offset();
    auto top = ops.zero();
    auto low = ops.zero();
    for (std::size_t i = 0; i < k; ++i) {
      const auto& w = scheme.interpolation.at(j, i);
      forms.at(row, i) = w;
      top = ops.sub(top, ops.mul(w, field_pow(ops, scheme.points[i], 2 * n), scratch));
      low = ops.sub(low, w);
    }
    if (scheme.infinity_trick) forms.at(row, top_col) = top;
    if (scheme.zero_trick) forms.at(row, low_col) = low;
  }
  if (scheme.infinity_trick) forms.at(2 * n, top_col) = ops.one();
  if (scheme.zero_trick) forms.at(0, low_col) = ops.one();
  return forms;
}

/// Renders one row of scheme_linear_forms, e.g. "c_2 = P_0 - P_1 + P_2 - P_3".
template <FieldOps F>
std::string format_linear_form(const F& ops, const Matrix<typename F::value_type>& forms, std::size_t row) {
  std::string out = "c_" + std::to_string(row) + " =";
  bool first = true;
  const auto one = ops.one();
  const auto minus_one = ops.neg(one);
  for (std::size_t j = 0; j < forms.cols; ++j) {
    const auto& w = forms.at(row, j);
    if (w == ops.zero()) continue;
    const std::string name = "P_" + std::to_string(j);
    std::string term;
    bool negative = false;
    if (w == one) {
      term = name;
    } else if (w == minus_one) {
      term = name;
      negative = true;
    } else {
      std::string coeff = ops.to_string(w);
      if (!coeff.empty() && coeff[0] == '-' && coeff.find_first_of("+-", 1) == std::string::npos) {
        negative = true;
        coeff = coeff.substr(1);
      }
      if (coeff.find_first_of("+-|", 1) != std::string::npos) coeff = "(" + coeff + ")";
      term = coeff + name;
    }
    if (first) {
      out += negative ? " -" : " ";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term;
    first = false;
  }
  if (first) out += " 0";
  return out;
}

/// Points, matrices and linear forms of a scheme as JSON.
template <FieldOps F>
nlohmann::json export_scheme_json(const F& ops, const ShortProductScheme<typename F::value_type>& scheme) {
  auto mat = [&](const Matrix<typename F::value_type>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t j = 0; j < m.cols; ++j) row.push_back(ops.to_string(m.at(i, j)));
      rows.push_back(row);
    }
    return rows;
  };
  nlohmann::json j;
  j["degree_bound"] = scheme.degree_bound;
  j["infinity_trick"] = scheme.infinity_trick;
  j["zero_trick"] = scheme.zero_trick;
  j["points"] = nlohmann::json::array();
  for (const auto& p : scheme.points) j["points"].push_back(ops.to_string(p));
  j["evaluation"] = mat(scheme.evaluation);
  j["system"] = mat(scheme.system);
  j["interpolation"] = mat(scheme.interpolation);

  nlohmann::json products = nlohmann::json::array();
  for (std::size_t i = 0; i < scheme.points.size(); ++i) {
    std::string factor;
    for (std::size_t c = 0; c < scheme.evaluation.cols; ++c) {
      const auto& e = scheme.evaluation.at(i, c);
      if (e == ops.zero()) continue;
      if (!factor.empty()) factor += " + ";
      factor += (e == ops.one() ? "" : "(" + ops.to_string(e) + ")") + "x_" + std::to_string(c);
    }
    products.push_back("P_" + std::to_string(i) + " = A(" + ops.to_string(scheme.points[i]) + ") B(" +
                       ops.to_string(scheme.points[i]) + ") = (" + factor + ")[a] * (" + factor + ")[b]");
  }
  const std::size_t n = scheme.degree_bound;
  if (scheme.infinity_trick) {
    products.push_back("P_" + std::to_string(scheme.points.size()) + " = a_" + std::to_string(n) + " b_" +
                       std::to_string(n));
  }
  if (scheme.zero_trick) {
    products.push_back("P_" + std::to_string(scheme.points.size() + (scheme.infinity_trick ? 1 : 0)) +
                       " = a_0 b_0");
  }
  j["products"] = products;

  const auto forms = scheme_linear_forms(ops, scheme);
  j["coefficients"] = nlohmann::json::array();
  for (std::size_t r = 0; r < forms.rows; ++r) j["coefficients"].push_back(format_linear_form(ops, forms, r));
  return j;
}

// --- F_{p^2} searches --------------------------------------------------------------

struct RootOfUnity {
  SmallExtField field;
  SmallExtElem primitive;  // generator of F_{p^2}^*
  SmallExtElem omega;      // primitive^((p + 1) / 2)
  std::uint64_t order;     // 2 (p - 1)
};

/// Primitive 2(p-1)-st root of unity in F_{p^2} = F_p[y]/(y^2 + 1), taken as
/// a^((p+1)/2) for the first primitive element a in index order. The order
/// is verified with the prime factors of 2(p-1). Throws kBadPrime.
RootOfUnity find_root_2p_minus_2(std::uint32_t p);

/// The 2p - 3 points 1, ..., p - 1, +-s, ..., +-((p-3)/2) s, ((p-1)/2) s,
/// for products of degree-(p-1) polynomials with both endpoint shortcuts.
/// Throws kBadPrime (also for p > 31).
PointSet<SmallExtElem> suggest_points_for_general_case(std::uint32_t p);

}  // namespace gf3
