#pragma once

// Multivectors in the exterior algebra of a Lie algebra (degrees 0..4),
// with the wedge product, contraction of bivectors with covectors, and the
// Schouten-Nijenhuis bracket.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "liebialg/lie_algebra.hpp"

namespace liebialg {

inline constexpr std::size_t kMaxDegree = 4;

/// Strictly increasing tuple of basis indices.
class WedgeKey {
 public:
  WedgeKey() = default;

  [[nodiscard]] std::size_t size() const { return len_; }
  [[nodiscard]] std::size_t operator[](std::size_t k) const { return idx_[k]; }
  [[nodiscard]] std::vector<std::size_t> indices() const {
    return std::vector<std::size_t>(idx_.begin(), idx_.begin() + len_);
  }

  /// Sorts `indices` into a key, returning the sign of the sorting
  /// permutation, or nothing if an index repeats.
  static std::optional<std::pair<WedgeKey, int>> sorted(std::span<const std::size_t> indices) {
    if (indices.size() > kMaxDegree) throw InputError("multivector degree exceeds 4");
    WedgeKey k;
    k.len_ = static_cast<std::uint8_t>(indices.size());
    for (std::size_t i = 0; i < indices.size(); ++i) k.idx_[i] = static_cast<std::uint16_t>(indices[i]);
    int sign = 1;
    for (std::size_t i = 1; i < k.len_; ++i)
      for (std::size_t j = i; j > 0 && k.idx_[j - 1] >= k.idx_[j]; --j) {
        if (k.idx_[j - 1] == k.idx_[j]) return std::nullopt;
        std::swap(k.idx_[j - 1], k.idx_[j]);
        sign = -sign;
      }
    for (std::size_t i = 1; i < k.len_; ++i)
      if (k.idx_[i - 1] == k.idx_[i]) return std::nullopt;
    return std::pair{k, sign};
  }

  friend bool operator==(const WedgeKey&, const WedgeKey&) = default;
  friend auto operator<=>(const WedgeKey&, const WedgeKey&) = default;

 private:
  std::array<std::uint16_t, kMaxDegree> idx_{};
  std::uint8_t len_ = 0;
};

template <Field F>
class Multivector {
 public:
  Multivector() = default;
  Multivector(std::size_t ambient_dim, std::size_t degree) : n_(ambient_dim), degree_(degree) {
    if (degree > kMaxDegree) throw InputError("multivector degree " + std::to_string(degree) + " exceeds 4");
  }

  static Multivector scalar(std::size_t n, const F& c) {
    Multivector m(n, 0);
    m.add_term({}, c);
    return m;
  }

  static Multivector from_vector(const Vector<F>& v) {
    Multivector m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      std::array<std::size_t, 1> idx{i};
      m.add_term(idx, v[i]);
    }
    return m;
  }

  /// c * e_{i1} ^ ... ^ e_{ik}, indices in any order.
  static Multivector monomial(std::size_t n, std::initializer_list<std::size_t> indices, const F& c = F::one()) {
    Multivector m(n, indices.size());
    m.add_term(std::span<const std::size_t>(indices.begin(), indices.size()), c);
    return m;
  }

  [[nodiscard]] std::size_t ambient_dim() const { return n_; }
  [[nodiscard]] std::size_t degree() const { return degree_; }
  [[nodiscard]] const std::map<WedgeKey, F>& terms() const { return terms_; }
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }

  /// Adds c * e_{indices...}; unsorted indices are sorted with sign.
  void add_term(std::span<const std::size_t> indices, const F& c) {
    if (c.is_zero()) return;
    if (indices.size() != degree_) throw InputError("term degree does not match multivector degree");
    for (auto i : indices)
      if (i >= n_) throw InputError("multivector index " + std::to_string(i) + " out of range");
    auto key = WedgeKey::sorted(indices);
    if (!key) return;
    accumulate(key->first, key->second > 0 ? c : -c);
  }

  void add_term(std::initializer_list<std::size_t> indices, const F& c) {
    add_term(std::span<const std::size_t>(indices.begin(), indices.size()), c);
  }

  [[nodiscard]] F coefficient(std::span<const std::size_t> indices) const {
    auto key = WedgeKey::sorted(indices);
    if (!key) return F::zero();
    auto it = terms_.find(key->first);
    if (it == terms_.end()) return F::zero();
    return key->second > 0 ? it->second : -it->second;
  }

  [[nodiscard]] F coefficient(std::initializer_list<std::size_t> indices) const {
    return coefficient(std::span<const std::size_t>(indices.begin(), indices.size()));
  }

  /// Degree-1 multivector as a coordinate vector.
  [[nodiscard]] Vector<F> to_vector() const {
    if (degree_ != 1) throw InputError("only degree-1 multivectors convert to vectors");
    Vector<F> v(n_, F::zero());
    for (const auto& [k, c] : terms_) v[k[0]] = c;
    return v;
  }

  /// The antisymmetric matrix b^{ij} of a bivector.
  [[nodiscard]] Matrix<F> bivector_matrix() const {
    if (degree_ != 2) throw InputError("bivector_matrix needs a degree-2 multivector");
    Matrix<F> m(n_, n_);
    for (const auto& [k, c] : terms_) {
      m(k[0], k[1]) = c;
      m(k[1], k[0]) = -c;
    }
    return m;
  }

  Multivector& operator+=(const Multivector& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) accumulate(k, c);
    return *this;
  }
  Multivector& operator-=(const Multivector& o) {
    check_compatible(o);
    for (const auto& [k, c] : o.terms_) accumulate(k, -c);
    return *this;
  }
  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) {
    for (auto& [k, c] : a.terms_) c = -c;
    return a;
  }
  friend Multivector operator*(const F& s, Multivector a) {
    if (s.is_zero()) return Multivector(a.n_, a.degree_);
    for (auto& [k, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const Multivector& a, const Multivector& b) {
    return a.n_ == b.n_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

  void accumulate(const WedgeKey& k, const F& c) {
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_compatible(const Multivector& o) const {
    if (o.n_ != n_ || o.degree_ != degree_)
      throw InputError("multivector sum needs equal dimension and degree");
  }

  std::size_t n_ = 0;
  std::size_t degree_ = 0;
  std::map<WedgeKey, F> terms_;
};

template <Field F>
Multivector<F> wedge(const Multivector<F>& p, const Multivector<F>& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InputError("wedge of multivectors over different spaces");
  const std::size_t deg = p.degree() + q.degree();
  if (deg > kMaxDegree)
    throw InputError("wedge degree " + std::to_string(deg) + " exceeds 4");
  Multivector<F> out(p.ambient_dim(), deg);
  std::vector<std::size_t> idx;
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      idx = kp.indices();
      for (std::size_t t = 0; t < kq.size(); ++t) idx.push_back(kq[t]);
      out.add_term(idx, cp * cq);
    }
  return out;
}

/// Schouten-Nijenhuis bracket. On decomposable elements
///   [x_1^...^x_p, y_1^...^y_q]
///     = sum_{a,b} (-1)^{a+b} [x_a, y_b] ^ x_1^..x̂_a..^x_p ^ y_1^..ŷ_b..^y_q,
/// so that [x, y_1^...^y_q] = sum_b y_1^...^[x,y_b]^...^y_q and
/// [P,Q] = -(-1)^{(p-1)(q-1)} [Q,P].
template <Field F>
Multivector<F> schouten(const LieAlgebra<F>& a, const Multivector<F>& p, const Multivector<F>& q) {
  const std::size_t n = a.dim();
  if (p.ambient_dim() != n || q.ambient_dim() != n)
    throw InputError("schouten bracket operands do not match the algebra dimension");
  if (p.degree() + q.degree() == 0) throw InputError("schouten bracket of two scalars is undefined");
  const std::size_t deg = p.degree() + q.degree() - 1;
  if (deg > kMaxDegree) throw InputError("schouten bracket degree " + std::to_string(deg) + " exceeds 4");
  Multivector<F> out(n, deg);
  std::vector<std::size_t> idx;
  idx.reserve(deg);
  for (const auto& [kp, cp] : p.terms())
    for (const auto& [kq, cq] : q.terms()) {
      F base = cp * cq;
      for (std::size_t ia = 0; ia < kp.size(); ++ia)
        for (std::size_t ib = 0; ib < kq.size(); ++ib) {
          const auto& br = a.basis_bracket(kp[ia], kq[ib]);
          if (br.empty()) continue;
          F signed_base = (ia + ib) % 2 == 0 ? base : -base;
          for (const auto& t : br) {
            idx.clear();
            idx.push_back(t.index);
            for (std::size_t s = 0; s < kp.size(); ++s)
              if (s != ia) idx.push_back(kp[s]);
            for (std::size_t s = 0; s < kq.size(); ++s)
              if (s != ib) idx.push_back(kq[s]);
            out.add_term(idx, signed_base * t.coeff);
          }
        }
    }
  return out;
}

/// The sharp map: (b^# xi)^i = sum_j b^{ji} xi_j, so that
/// zeta(b^# xi) = b(xi, zeta).
template <Field F>
Vector<F> contract(const Multivector<F>& b, const Vector<F>& xi) {
  if (b.degree() != 2) throw InputError("contraction needs a bivector");
  if (xi.size() != b.ambient_dim())
    throw InputError("covector length " + std::to_string(xi.size()) + " does not match dimension " +
                     std::to_string(b.ambient_dim()));
  Vector<F> out(b.ambient_dim(), F::zero());
  for (const auto& [k, c] : b.terms()) {
    // b^{k0 k1} = c, b^{k1 k0} = -c
    if (!xi[k[0]].is_zero()) out[k[1]] += c * xi[k[0]];
    if (!xi[k[1]].is_zero()) out[k[0]] -= c * xi[k[1]];
  }
  return out;
}

/// b(xi, zeta) = sum_{i,j} b^{ij} xi_i zeta_j, the pairing of xi ^ zeta with b.
template <Field F>
F evaluate(const Multivector<F>& b, const Vector<F>& xi, const Vector<F>& zeta) {
  if (b.degree() != 2) throw InputError("evaluation needs a bivector");
  F s = F::zero();
  for (const auto& [k, c] : b.terms()) s += c * (xi[k[0]] * zeta[k[1]] - xi[k[1]] * zeta[k[0]]);
  return s;
}

/// Image of the sharp map, as a list of spanning vectors (one per dual basis
/// element).
template <Field F>
std::vector<Vector<F>> sharp_image_spanning(const Multivector<F>& b) {
  std::vector<Vector<F>> cols;
  for (std::size_t j = 0; j < b.ambient_dim(); ++j) {
    auto v = contract(b, unit_vector<F>(b.ambient_dim(), j));
    if (!is_zero(v)) cols.push_back(std::move(v));
  }
  return cols;
}

struct InvarianceResult {
  bool ok = true;
  std::optional<std::size_t> witness;  // first basis index with [e_i, t] != 0
};

template <Field F>
InvarianceResult ad_invariant(const LieAlgebra<F>& a, const Multivector<F>& t) {
  for (std::size_t i = 0; i < a.dim(); ++i) {
    auto e = Multivector<F>::from_vector(unit_vector<F>(a.dim(), i));
    if (!schouten(a, e, t).is_zero()) return {false, i};
  }
  return {};
}

/// Coefficient vectors of two multivectors over the union of their keys.
template <Field F>
std::pair<Vector<F>, Vector<F>> aligned_coefficients(const Multivector<F>& p, const Multivector<F>& q) {
  std::map<WedgeKey, std::pair<F, F>> merged;
  for (const auto& [k, c] : p.terms()) merged[k].first = c;
  for (const auto& [k, c] : q.terms()) merged[k].second = c;
  Vector<F> a, b;
  for (const auto& [k, pr] : merged) {
    a.push_back(pr.first);
    b.push_back(pr.second);
  }
  return {a, b};
}

/// Pushes a multivector forward along a linear map given as a matrix whose
/// column i is the image of e_i.
template <Field F>
Multivector<F> push_forward(const Matrix<F>& map, const Multivector<F>& t) {
  const std::size_t n = t.ambient_dim();
  if (map.rows() != n || map.cols() != n) throw InputError("push_forward needs a square map of the ambient dimension");
  Multivector<F> out(n, t.degree());
  for (const auto& [k, c] : t.terms()) {
    Multivector<F> prod = Multivector<F>::scalar(n, c);
    for (std::size_t s = 0; s < k.size(); ++s) prod = wedge(prod, Multivector<F>::from_vector(map.column(k[s])));
    out += prod;
  }
  return out;
}

}  // namespace liebialg
