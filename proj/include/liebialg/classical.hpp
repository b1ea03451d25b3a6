#pragma once

// Classical simple Lie algebras A_n, B_n, C_n, D_n in their split real forms
// sl(n+1), so(n+1,n), sp(2n), so(n,n), realized by matrices with the
// diagonal Cartan subalgebra. Roots are integer vectors in the L_i
// coordinates; each root space is spanned by one basis element.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "liebialg/construction.hpp"

namespace liebialg {

enum class Series { A, B, C, D };

inline std::string to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::B: return "B";
    case Series::C: return "C";
    case Series::D: return "D";
  }
  return "?";
}

inline Series parse_series(std::string_view s) {
  if (s == "A" || s == "a") return Series::A;
  if (s == "B" || s == "b") return Series::B;
  if (s == "C" || s == "c") return Series::C;
  if (s == "D" || s == "d") return Series::D;
  throw InputError("unknown series '" + std::string(s) + "' (expected A, B, C or D)");
}

inline std::size_t min_rank(Series s) { return s == Series::A ? 1 : 2; }

using Root = std::vector<int>;

inline bool is_positive(const Root& r) {
  for (int c : r)
    if (c != 0) return c > 0;
  return false;
}

inline Root negate(Root r) {
  for (auto& c : r) c = -c;
  return r;
}

/// Deterministic root order: by the vector of absolute coordinates
/// (descending), a positive root directly before its negative.
inline bool root_order(const Root& a, const Root& b) {
  Root aa = a;
  Root bb = b;
  for (auto& c : aa) c = std::abs(c);
  for (auto& c : bb) c = std::abs(c);
  if (aa != bb) return aa > bb;
  return a > b;
}

/// Text form used on the command line: "L1-L3", "2L1", "-L1-L2".
inline std::string format_root(const Root& r) {
  std::string out;
  for (std::size_t i = 0; i < r.size(); ++i) {
    int c = r[i];
    if (c == 0) continue;
    if (c < 0)
      out += "-";
    else if (!out.empty())
      out += "+";
    if (std::abs(c) != 1) out += std::to_string(std::abs(c));
    out += "L" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

/// Parses a root written as a signed sum of terms "cLk"; `coords` is the
/// number of L coordinates.
inline Root parse_root(std::string_view text, std::size_t coords) {
  auto bad = [&](const std::string& why) {
    return InputError("malformed root '" + std::string(text) + "': " + why);
  };
  Root r(coords, 0);
  std::size_t p = 0;
  bool any = false;
  auto skip_blank = [&] {
    while (p < text.size() && text[p] == ' ') ++p;
  };
  skip_blank();
  while (p < text.size()) {
    int sign = 1;
    if (text[p] == '+' || text[p] == '-') {
      sign = text[p] == '-' ? -1 : 1;
      ++p;
      skip_blank();
    } else if (any) {
      throw bad("expected '+' or '-'");
    }
    int coeff = 0;
    bool has_coeff = false;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      coeff = coeff * 10 + (text[p] - '0');
      has_coeff = true;
      ++p;
    }
    if (!has_coeff) coeff = 1;
    if (p < text.size() && text[p] == '*') ++p;
    if (p >= text.size() || (text[p] != 'L' && text[p] != 'l')) throw bad("expected 'L'");
    ++p;
    std::size_t idx = 0;
    bool has_idx = false;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
      idx = idx * 10 + static_cast<std::size_t>(text[p] - '0');
      has_idx = true;
      ++p;
    }
    if (!has_idx) throw bad("missing index after 'L'");
    if (idx == 0 || idx > coords) throw bad("index L" + std::to_string(idx) + " out of range");
    r[idx - 1] += sign * coeff;
    any = true;
    skip_blank();
  }
  if (!any) throw bad("empty");
  return r;
}

struct RootDatum {
  Series series = Series::A;
  std::size_t rank = 0;
  std::vector<Root> roots;       // in root_order
  std::vector<Root> positives;   // in root_order
  std::map<Root, std::size_t> generator;  // basis index spanning each root space
  std::vector<std::size_t> cartan;        // basis indices of the Cartan subalgebra
  std::vector<std::vector<int>> cartan_diagonals;  // diagonal of each Cartan basis matrix

  [[nodiscard]] std::size_t coords() const { return series == Series::A ? rank + 1 : rank; }
  [[nodiscard]] bool is_root(const Root& r) const { return generator.contains(r); }

  [[nodiscard]] std::size_t index_of(const Root& r) const {
    auto it = generator.find(r);
    if (it == generator.end()) throw InputError("'" + format_root(r) + "' is not a root of " + name());
    return it->second;
  }

  /// Value of the root on the diagonal matrix with the given diagonal.
  [[nodiscard]] int evaluate(const Root& r, const std::vector<int>& diag) const {
    int s = 0;
    for (std::size_t i = 0; i < r.size(); ++i) s += r[i] * diag[i];
    return s;
  }

  [[nodiscard]] std::string name() const { return to_string(series) + std::to_string(rank); }
};

namespace detail {

inline std::string pair_label(std::size_t i, std::size_t j) {
  if (i < 10 && j < 10) return std::to_string(i) + std::to_string(j);
  return std::to_string(i) + "_" + std::to_string(j);
}

/// Root-space generators in the defining representation (1-based indices):
///   E_ij; X_ij = E_ij - E_{n+j,n+i};
///   B, D: Y_ij = E_{i,n+j} - E_{j,n+i}, Z_ij = E_{n+i,j} - E_{n+j,i};
///   C:    Y_ij = E_{i,n+j} + E_{j,n+i}, Z_ij = E_{n+i,j} + E_{n+j,i};
///   B:    U_i = E_{i,2n+1} - E_{2n+1,n+i}, V_i = E_{n+i,2n+1} - E_{2n+1,i};
///   C:    U_i = E_{i,n+i}, V_i = E_{n+i,i};
///   H_i = E_ii (A) or E_ii - E_{n+i,n+i} (B, C, D).
template <Field F>
class ClassicalMatrices {
 public:
  ClassicalMatrices(Series s, std::size_t n) : series_(s), n_(n) {
    switch (s) {
      case Series::A: side_ = n + 1; break;
      case Series::B: side_ = 2 * n + 1; break;
      case Series::C:
      case Series::D: side_ = 2 * n; break;
    }
  }

  [[nodiscard]] std::size_t side() const { return side_; }

  [[nodiscard]] Matrix<F> E(std::size_t i, std::size_t j) const {
    Matrix<F> m(side_, side_);
    m(i - 1, j - 1) = F::one();
    return m;
  }
  [[nodiscard]] Matrix<F> H(std::size_t i) const {
    if (series_ == Series::A) return E(i, i);
    return E(i, i) - E(n_ + i, n_ + i);
  }
  [[nodiscard]] Matrix<F> X(std::size_t i, std::size_t j) const {
    if (series_ == Series::A) return E(i, j);
    return E(i, j) - E(n_ + j, n_ + i);
  }
  [[nodiscard]] Matrix<F> Y(std::size_t i, std::size_t j) const {
    if (series_ == Series::C) return E(i, n_ + j) + E(j, n_ + i);
    return E(i, n_ + j) - E(j, n_ + i);
  }
  [[nodiscard]] Matrix<F> Z(std::size_t i, std::size_t j) const {
    if (series_ == Series::C) return E(n_ + i, j) + E(n_ + j, i);
    return E(n_ + i, j) - E(n_ + j, i);
  }
  [[nodiscard]] Matrix<F> U(std::size_t i) const {
    if (series_ == Series::C) return E(i, n_ + i);
    return E(i, 2 * n_ + 1) - E(2 * n_ + 1, n_ + i);
  }
  [[nodiscard]] Matrix<F> V(std::size_t i) const {
    if (series_ == Series::C) return E(n_ + i, i);
    return E(n_ + i, 2 * n_ + 1) - E(2 * n_ + 1, i);
  }

  /// Generator of a root space together with its label.
  [[nodiscard]] std::pair<Matrix<F>, std::string> generator(const Root& r) const {
    std::vector<std::size_t> plus, minus;
    std::vector<int> mags;
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] > 0) plus.push_back(k + 1);
      if (r[k] < 0) minus.push_back(k + 1);
      if (r[k] != 0) mags.push_back(std::abs(r[k]));
    }
    if (series_ == Series::A) return {E(plus.at(0), minus.at(0)), "E" + pair_label(plus[0], minus[0])};
    if (plus.size() == 1 && minus.size() == 1)
      return {X(plus[0], minus[0]), "X" + pair_label(plus[0], minus[0])};
    if (plus.size() == 2) return {Y(plus[0], plus[1]), "Y" + pair_label(plus[0], plus[1])};
    if (minus.size() == 2) return {Z(minus[0], minus[1]), "Z" + pair_label(minus[0], minus[1])};
    if (plus.size() == 1) return {U(plus[0]), "U" + std::to_string(plus[0])};
    return {V(minus.at(0)), "V" + std::to_string(minus[0])};
  }

 private:
  Series series_;
  std::size_t n_;
  std::size_t side_ = 0;
};

inline std::vector<Root> series_roots(Series s, std::size_t n) {
  std::vector<Root> roots;
  const std::size_t coords = s == Series::A ? n + 1 : n;
  auto unit = [&](std::size_t i, int c) {
    Root r(coords, 0);
    r[i] = c;
    return r;
  };
  if (s == Series::A) {
    for (std::size_t i = 0; i < coords; ++i)
      for (std::size_t j = 0; j < coords; ++j)
        if (i != j) {
          Root r(coords, 0);
          r[i] = 1;
          r[j] = -1;
          roots.push_back(r);
        }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (int a : {1, -1})
          for (int b : {1, -1}) {
            Root r(coords, 0);
            r[i] = a;
            r[j] = b;
            roots.push_back(r);
          }
    if (s == Series::B)
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(unit(i, 1));
        roots.push_back(unit(i, -1));
      }
    if (s == Series::C)
      for (std::size_t i = 0; i < n; ++i) {
        roots.push_back(unit(i, 2));
        roots.push_back(unit(i, -2));
      }
  }
  std::sort(roots.begin(), roots.end(), root_order);
  return roots;
}

}  // namespace detail

/// The split real form of the series at the given rank, with its root datum.
/// Basis: Cartan elements first (H1-H2, ..., H1-H(n+1) for A; H1..Hn
/// otherwise), then one generator per root in root order.
template <Field F>
std::pair<LieAlgebra<F>, RootDatum> build_series(Series s, std::size_t n) {
  if (n < min_rank(s))
    throw InputError("rank " + std::to_string(n) + " is out of range for series " + to_string(s) +
                     " (minimum " + std::to_string(min_rank(s)) + ")");
  detail::ClassicalMatrices<F> mats(s, n);
  RootDatum rd;
  rd.series = s;
  rd.rank = n;
  rd.roots = detail::series_roots(s, n);
  for (const auto& r : rd.roots)
    if (is_positive(r)) rd.positives.push_back(r);

  std::vector<std::string> names;
  std::vector<Matrix<F>> basis;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<int> diag(rd.coords(), 0);
    if (s == Series::A) {
      names.push_back("H1-H" + std::to_string(i + 1));
      basis.push_back(mats.H(1) - mats.H(i + 1));
      diag[0] = 1;
      diag[i] = -1;
    } else {
      names.push_back("H" + std::to_string(i));
      basis.push_back(mats.H(i));
      diag[i - 1] = 1;
    }
    rd.cartan.push_back(names.size() - 1);
    rd.cartan_diagonals.push_back(diag);
  }
  for (const auto& r : rd.roots) {
    auto [m, label] = mats.generator(r);
    rd.generator[r] = basis.size();
    names.push_back(label);
    basis.push_back(std::move(m));
  }
  return {LieAlgebra<F>::from_matrices(std::move(names), std::move(basis)), std::move(rd)};
}

template <Field F>
Vector<F> root_vector(const LieAlgebra<F>& a, const RootDatum& rd, const Root& r) {
  return unit_vector<F>(a.dim(), rd.index_of(r));
}

/// pi = sum over positive roots of e_a ^ f_a / B(e_a, f_a).
template <Field F>
Multivector<F> standard_r_matrix(const LieAlgebra<F>& a, const RootDatum& rd) {
  Multivector<F> pi(a.dim(), 2);
  for (const auto& r : rd.positives) {
    auto e = root_vector(a, rd, r);
    auto f = root_vector(a, rd, negate(r));
    F b = a.killing_form(e, f);
    if (b.is_zero()) throw CheckFailure("B(e,f) vanishes for root " + format_root(r));
    pi.add_term({rd.index_of(r), rd.index_of(negate(r))}, F::one() / b);
  }
  return pi;
}

/// For every root a, {k : a + k beta is a root} contains no three
/// consecutive integers.
inline bool line_condition(const RootDatum& rd, const Root& beta) {
  if (!rd.is_root(beta)) throw InputError("'" + format_root(beta) + "' is not a root of " + rd.name());
  constexpr int kReach = 4;
  for (const auto& alpha : rd.roots) {
    std::vector<bool> in(2 * kReach + 1, false);
    for (int k = -kReach; k <= kReach; ++k) {
      Root r = alpha;
      for (std::size_t i = 0; i < r.size(); ++i) r[i] += k * beta[i];
      in[static_cast<std::size_t>(k + kReach)] = rd.is_root(r);
    }
    for (std::size_t k = 0; k + 2 < in.size(); ++k)
      if (in[k] && in[k + 1] && in[k + 2]) return false;
  }
  return true;
}

inline std::vector<Root> line_condition_roots(const RootDatum& rd) {
  std::vector<Root> out;
  for (const auto& r : rd.roots)
    if (line_condition(rd, r)) out.push_back(r);
  return out;
}

struct VanishResult {
  bool ok = true;
  std::optional<std::pair<Root, int>> witness;  // positive root and failing condition (1, 2 or 3)
};

/// For every positive root a with generators e, f:
///   1) [X,[X,e]] ^ f = 0   2) [X,[X,f]] ^ e = 0   3) [X,e] ^ [X,f] = 0.
/// When all hold, [X,[X,pi]] = 0 for the standard pi; that implication is
/// checked and a violation throws.
template <Field F>
VanishResult vanish_conditions(const LieAlgebra<F>& a, const RootDatum& rd, const Multivector<F>& pi,
                               const Vector<F>& x) {
  a.check_dim(x, "x");
  using MV = Multivector<F>;
  VanishResult res;
  for (const auto& r : rd.positives) {
    auto e = root_vector(a, rd, r);
    auto f = root_vector(a, rd, negate(r));
    auto xe = a.bracket(x, e);
    auto xf = a.bracket(x, f);
    if (!wedge(MV::from_vector(a.bracket(x, xe)), MV::from_vector(f)).is_zero()) res = {false, std::pair{r, 1}};
    else if (!wedge(MV::from_vector(a.bracket(x, xf)), MV::from_vector(e)).is_zero()) res = {false, std::pair{r, 2}};
    else if (!wedge(MV::from_vector(xe), MV::from_vector(xf)).is_zero()) res = {false, std::pair{r, 3}};
    if (!res.ok) return res;
  }
  auto xm = MV::from_vector(x);
  if (!schouten(a, xm, schouten(a, xm, pi)).is_zero())
    throw CheckFailure("vanishing conditions hold but [X,[X,pi]] is nonzero");
  return res;
}

template <Field F>
VanishResult vanish_conditions(const LieAlgebra<F>& a, const RootDatum& rd, const Vector<F>& x) {
  return vanish_conditions(a, rd, standard_r_matrix(a, rd), x);
}

/// The subalgebra listed for a root satisfying the line condition, spanned
/// by explicitly named generators:
///   A,  L_i-L_j (i<j): E_ij, H_i-H_j, E_kj, E_ik (i<k<j)
///   A, -(L_i-L_j):     E_ji, H_i-H_j, E_ki, E_jk (i<k<j)
///   B/D,  L_i-L_j:     X_ik, X_kj (i<k<j), X_ij, H_i-H_j
///   B/D, -(L_i-L_j):   X_ki, X_jk (i<k<j), X_ji, H_i-H_j
///   B/D,  L_i+L_j:     X_ik, Y_kj (i<k, k!=j), X_jk, Y_ki (j<k), Y_ij,
///                      H_i+H_j, and U_i, U_j for B
///   B/D, -(L_i+L_j):   X_ki, Z_kj (i<k, k!=j), X_kj, Z_ki (j<k), Z_ij,
///                      H_i+H_j, and V_i, V_j for B
///   C,  2L_i:          Y_ik, X_ik (i<k), U_i, H_i
///   C, -2L_i:          Z_ik, X_ki (i<k), V_i, H_i
/// For the roots L_i+L_j the Cartan element is the coroot H_i+H_j.
template <Field F>
Subspace<F> boxed_family(const LieAlgebra<F>& a, const RootDatum& rd, const Root& beta) {
  if (!line_condition(rd, beta))
    throw InputError("root " + format_root(beta) + " does not satisfy the line condition");
  detail::ClassicalMatrices<F> m(rd.series, rd.rank);
  const std::size_t n = rd.rank;
  std::vector<Matrix<F>> gens;

  std::vector<std::size_t> plus, minus;
  for (std::size_t k = 0; k < beta.size(); ++k) {
    if (beta[k] > 0) plus.push_back(k + 1);
    if (beta[k] < 0) minus.push_back(k + 1);
  }

  if (rd.series == Series::A) {
    const std::size_t p = plus.at(0), q = minus.at(0);
    const std::size_t i = std::min(p, q), j = std::max(p, q);
    gens.push_back(m.E(p, q));
    gens.push_back(m.H(i) - m.H(j));
    for (std::size_t k = i + 1; k < j; ++k) {
      if (p < q) {
        gens.push_back(m.E(k, j));
        gens.push_back(m.E(i, k));
      } else {
        gens.push_back(m.E(k, i));
        gens.push_back(m.E(j, k));
      }
    }
  } else if (rd.series == Series::C) {
    const bool up = !plus.empty();
    const std::size_t i = up ? plus[0] : minus.at(0);
    gens.push_back(up ? m.U(i) : m.V(i));
    gens.push_back(m.H(i));
    for (std::size_t k = i + 1; k <= n; ++k) {
      gens.push_back(up ? m.Y(i, k) : m.Z(i, k));
      gens.push_back(up ? m.X(i, k) : m.X(k, i));
    }
  } else if (plus.size() == 1 && minus.size() == 1) {
    const std::size_t p = plus[0], q = minus[0];
    const std::size_t i = std::min(p, q), j = std::max(p, q);
    gens.push_back(m.X(p, q));
    gens.push_back(m.H(i) - m.H(j));
    for (std::size_t k = i + 1; k < j; ++k) {
      if (p < q) {
        gens.push_back(m.X(i, k));
        gens.push_back(m.X(k, j));
      } else {
        gens.push_back(m.X(k, i));
        gens.push_back(m.X(j, k));
      }
    }
  } else {
    const bool up = plus.size() == 2;
    const std::size_t i = up ? plus[0] : minus.at(0);
    const std::size_t j = up ? plus[1] : minus.at(1);
    gens.push_back(up ? m.Y(i, j) : m.Z(i, j));
    gens.push_back(m.H(i) + m.H(j));
    for (std::size_t k = i + 1; k <= n; ++k) {
      if (k == j) continue;
      gens.push_back(up ? m.X(i, k) : m.X(k, i));
      gens.push_back(up ? m.Y(k, j) : m.Z(k, j));
    }
    for (std::size_t k = j + 1; k <= n; ++k) {
      gens.push_back(up ? m.X(j, k) : m.X(k, j));
      gens.push_back(up ? m.Y(k, i) : m.Z(k, i));
    }
    if (rd.series == Series::B) {
      gens.push_back(up ? m.U(i) : m.V(i));
      gens.push_back(up ? m.U(j) : m.V(j));
    }
  }

  std::vector<Vector<F>> span;
  for (const auto& g : gens) span.push_back(a.coordinates(g));
  return Subspace<F>(a.dim(), span);
}

template <Field F>
struct ReproductionRow {
  Root root;
  Subspace<F> constructed;
  Subspace<F> boxed;
  bool condi_holds = false;
  bool match = false;
  bool is_coisotropic = false;
};

/// Runs the construction at the generator of every root that satisfies the
/// line condition and compares with boxed_family.
template <Field F>
std::vector<ReproductionRow<F>> reproduce_families(const LieAlgebra<F>& a, const RootDatum& rd,
                                                   const Multivector<F>& pi) {
  std::vector<ReproductionRow<F>> rows;
  for (const auto& r : line_condition_roots(rd)) {
    ReproductionRow<F> row;
    row.root = r;
    auto rep = construct(a, pi, root_vector(a, rd, r));
    row.constructed = rep.h;
    row.condi_holds = rep.condi.holds;
    row.is_coisotropic = rep.is_coisotropic;
    row.boxed = boxed_family(a, rd, r);
    row.match = row.constructed == row.boxed;
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field F>
std::vector<ReproductionRow<F>> reproduce_families(Series s, std::size_t n) {
  auto [a, rd] = build_series<F>(s, n);
  return reproduce_families(a, rd, standard_r_matrix(a, rd));
}

}  // namespace liebialg
