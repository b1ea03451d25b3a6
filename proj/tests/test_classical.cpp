#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing_support;

namespace {

using MV = Multivector<Q>;
using Mats = liebialg::detail::ClassicalMatrices<Q>;

struct Case {
  Series s;
  std::size_t n;
};

const std::vector<Case> kAllUpTo4 = {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4},
                                     {Series::B, 2}, {Series::B, 3}, {Series::B, 4}, {Series::C, 2},
                                     {Series::C, 3}, {Series::C, 4}, {Series::D, 3}, {Series::D, 4}};

std::string label(const Case& c) { return to_string(c.s) + std::to_string(c.n); }

MV mv(const LieAlgebra<Q>& a, const Matrix<Q>& m) { return MV::from_vector(a.coordinates(m)); }

std::optional<Q> factor(const MV& p, const MV& q) {
  auto [x, y] = aligned_coefficients(p, q);
  auto r = solve_proportionality(x, y);
  if (!r || !std::holds_alternative<Q>(*r) || std::get<Q>(*r).is_zero()) return std::nullopt;
  return std::get<Q>(*r);
}

Subspace<Q> span_of(const LieAlgebra<Q>& a, const std::vector<Matrix<Q>>& ms) {
  std::vector<Vector<Q>> v;
  for (const auto& m : ms) v.push_back(a.coordinates(m));
  return Subspace<Q>(a.dim(), v);
}

/// 1/2 (sum X_ij ^ X_ji + sign * sum Y_ij ^ Z_ij' + u * sum U_i ^ V_i) with
/// Z_ij' = Z_ij or Z_ji.
MV display(const LieAlgebra<Q>& a, const Mats& m, std::size_t n, int sign, bool swap_z, const Q& u) {
  MV out(a.dim(), 2);
  const Q half = q(1, 2);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      out += half * wedge(mv(a, m.X(i, j)), mv(a, m.X(j, i)));
      out += Q(sign) * half * wedge(mv(a, m.Y(i, j)), mv(a, swap_z ? m.Z(j, i) : m.Z(i, j)));
    }
  if (!u.is_zero())
    for (std::size_t i = 1; i <= n; ++i) out += u * wedge(mv(a, m.U(i)), mv(a, m.V(i)));
  return out;
}

}  // namespace

TEST_CASE("series parsing", "[classical]") {
  CHECK(parse_series("A") == Series::A);
  CHECK(parse_series("d") == Series::D);
  CHECK_THROWS_AS(parse_series("E"), InputError);
  CHECK_THROWS_AS(parse_series(""), InputError);
  CHECK_THROWS_AS(build_series<Q>(Series::B, 1), InputError);
  CHECK_THROWS_AS(build_series<Q>(Series::A, 0), InputError);
}

TEST_CASE("root text form", "[classical]") {
  CHECK(parse_root("L1-L3", 3) == Root{1, 0, -1});
  CHECK(parse_root("L1+L2", 2) == Root{1, 1});
  CHECK(parse_root("2L1", 2) == Root{2, 0});
  CHECK(parse_root("-2L1", 2) == Root{-2, 0});
  CHECK(parse_root("L1", 2) == Root{1, 0});
  CHECK(parse_root("-L1-L2", 2) == Root{-1, -1});
  CHECK(parse_root("-L1+L3", 3) == Root{-1, 0, 1});
  for (const char* bad : {"", "L", "L0", "L4", "L1L2", "1", "L1+", "x"}) CHECK_THROWS_AS(parse_root(bad, 3), InputError);
  for (const char* text : {"L1-L3", "L1+L2", "2L1", "-2L1", "L1", "-L1-L2", "-L1+L3"})
    CHECK(format_root(parse_root(text, 3)) == text);
}

TEST_CASE("root systems and dimensions", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    const std::size_t n = c.n;
    std::size_t roots = 0, dim = 0;
    switch (c.s) {
      case Series::A: roots = n * (n + 1), dim = n * n + 2 * n; break;
      case Series::B:
      case Series::C: roots = 2 * n * n, dim = n * (2 * n + 1); break;
      case Series::D: roots = 2 * n * (n - 1), dim = n * (2 * n - 1); break;
    }
    CHECK(rd.roots.size() == roots);
    CHECK(a.dim() == dim);
    CHECK(rd.positives.size() * 2 == roots);
    for (const auto& r : rd.roots) CHECK(rd.is_root(negate(r)));
    for (const auto& r : rd.positives) CHECK(is_positive(r));
    CHECK(std::is_sorted(rd.roots.begin(), rd.roots.end(), root_order));
  }
  auto [b2, rd_b2] = build_series<Q>(Series::B, 2);
  CHECK(rd_b2.roots.size() == 8);
  CHECK(b2.dim() == 10);
  auto [a1, rd_a1] = build_series<Q>(Series::A, 1);
  CHECK(rd_a1.roots == std::vector<Root>{{1, -1}, {-1, 1}});
}

TEST_CASE("classical algebras are Lie algebras", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    CHECK(jacobi_check(a).ok);
    CHECK(realization_matches(a));
  }
}

TEST_CASE("root vectors are eigenvectors of the Cartan subalgebra", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    for (std::size_t k = 0; k < rd.cartan.size(); ++k) {
      auto h = unit_vector<Q>(a.dim(), rd.cartan[k]);
      for (const auto& r : rd.roots) {
        auto e = root_vector(a, rd, r);
        CHECK(a.bracket(h, e) == Q(rd.evaluate(r, rd.cartan_diagonals[k])) * e);
      }
    }
  }
}

TEST_CASE("standard r-matrices", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    if (c.n > 3) continue;
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    CHECK(is_r_matrix(a, standard_r_matrix(a, rd)).ok);
  }
}

TEST_CASE("A1 r-matrix matches 2 e2 ^ e3 on sl2", "[classical]") {
  auto [a, rd] = build_series<Q>(Series::A, 1);
  auto pi = standard_r_matrix(a, rd);
  CHECK(pi.coefficient({rd.index_of({1, -1}), rd.index_of({-1, 1})}) == q(1, 4));
  // H1-H2 = 2 e1, E12 = e2 + e3, E21 = e3 - e2.
  auto map = Matrix<Q>::from_rows({vec<Q>({2, 0, 0}), vec<Q>({0, 1, -1}), vec<Q>({0, 1, 1})}, 3);
  auto pushed = push_forward(map, pi);
  auto c = factor(pushed, algebras::two_e2_e3<Q>());
  REQUIRE(c);
  CHECK(*c == q(1, 4));
}

TEST_CASE("A2 r-matrix is proportional to the sum of E_ij ^ E_ji", "[classical]") {
  auto [a, rd] = build_series<Q>(Series::A, 2);
  Mats m(Series::A, 2);
  MV expected(a.dim(), 2);
  for (std::size_t i = 1; i <= 3; ++i)
    for (std::size_t j = i + 1; j <= 3; ++j) expected += wedge(mv(a, m.E(i, j)), mv(a, m.E(j, i)));
  auto c = factor(standard_r_matrix(a, rd), expected);
  REQUIRE(c);
  CHECK(*c == q(1, 6));
}

TEST_CASE("[E_ij, pi] expansion in type A", "[classical]") {
  auto [a, rd] = build_series<Q>(Series::A, 3);
  Mats m(Series::A, 3);
  auto pi = standard_r_matrix(a, rd);
  for (std::size_t i = 1; i <= 4; ++i)
    for (std::size_t j = i + 1; j <= 4; ++j) {
      MV expected = Q(-1) * wedge(mv(a, m.E(i, j)), mv(a, m.H(i) - m.H(j)));
      for (std::size_t k = i + 1; k < j; ++k) expected += Q(2) * wedge(mv(a, m.E(i, k)), mv(a, m.E(k, j)));
      CHECK(factor(schouten(a, mv(a, m.E(i, j)), pi), expected));
    }
}

TEST_CASE("B and D r-matrices against the sums of X, Y^Z and U^V terms", "[classical]") {
  // In both series the sign in front of the Y ^ Z sum is -1, and the index
  // order that matches is Z_ij, equivalently -Z_ji with a + sign.
  for (const auto& c : std::vector<Case>{{Series::B, 2}, {Series::B, 3}, {Series::D, 3}, {Series::D, 4}}) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    Mats m(c.s, c.n);
    auto pi = standard_r_matrix(a, rd);
    const Q u = c.s == Series::B ? q(-1, 2) : Q(0);
    CHECK(factor(pi, display(a, m, c.n, -1, false, u)));
    CHECK_FALSE(factor(pi, display(a, m, c.n, -1, true, u)));
  }
}

TEST_CASE("C r-matrix against the sum of X, Y^Z and U^V terms", "[classical]") {
  for (std::size_t n : {2, 3}) {
    auto [a, rd] = build_series<Q>(Series::C, n);
    Mats m(Series::C, n);
    auto pi = standard_r_matrix(a, rd);
    CHECK(factor(pi, display(a, m, n, 1, false, Q(1))));
    // Z is symmetric in type C, so the index order does not matter.
    CHECK(factor(pi, display(a, m, n, 1, true, Q(1))));
  }
}

TEST_CASE("[U_i, pi] expansion in type C", "[classical]") {
  auto [a, rd] = build_series<Q>(Series::C, 3);
  Mats m(Series::C, 3);
  auto pi = standard_r_matrix(a, rd);
  for (std::size_t i = 1; i <= 3; ++i) {
    MV expected = wedge(mv(a, m.U(i)), mv(a, m.H(i)));
    for (std::size_t k = i + 1; k <= 3; ++k) expected += wedge(mv(a, m.Y(i, k)), mv(a, m.X(i, k)));
    CHECK(factor(schouten(a, mv(a, m.U(i)), pi), expected));
  }
}

TEST_CASE("line condition census", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    for (const auto& r : rd.roots) {
      int nonzero = 0, max_abs = 0;
      for (int x : r) {
        nonzero += x != 0;
        max_abs = std::max(max_abs, std::abs(x));
      }
      bool expected = true;
      if (c.s == Series::B) expected = nonzero == 2;
      if (c.s == Series::C) expected = max_abs == 2;
      CHECK(line_condition(rd, r) == expected);
    }
  }
  auto [c2, rd] = build_series<Q>(Series::C, 2);
  std::vector<std::string> listed;
  for (const auto& r : line_condition_roots(rd)) listed.push_back(format_root(r));
  CHECK(listed == std::vector<std::string>{"2L1", "-2L1", "2L2", "-2L2"});
  CHECK_THROWS_AS(line_condition(rd, Root{1, 0}), InputError);
}

TEST_CASE("vanishing conditions", "[classical]") {
  auto [a2, rd_a2] = build_series<Q>(Series::A, 2);
  CHECK(vanish_conditions(a2, rd_a2, zero_vector<Q>(a2.dim())).ok);
  CHECK(vanish_conditions(a2, rd_a2, root_vector(a2, rd_a2, {1, 0, -1})).ok);

  auto [b2, rd_b2] = build_series<Q>(Series::B, 2);
  auto res = vanish_conditions(b2, rd_b2, root_vector(b2, rd_b2, {1, 0}));
  CHECK_FALSE(res.ok);
  REQUIRE(res.witness);
  CHECK(rd_b2.is_root(res.witness->first));
  CHECK(res.witness->second >= 1);
  CHECK(res.witness->second <= 3);
  CHECK_THROWS_AS(vanish_conditions(b2, rd_b2, vec<Q>({1})), InputError);
}

TEST_CASE("line condition implies the vanishing conditions", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    auto pi = standard_r_matrix(a, rd);
    for (const auto& r : line_condition_roots(rd)) {
      INFO(format_root(r));
      CHECK(vanish_conditions(a, rd, pi, root_vector(a, rd, r)).ok);
      CHECK(check_condi(a, pi, root_vector(a, rd, r)).holds);
    }
  }
}

TEST_CASE("boxed families", "[classical]") {
  {
    auto [a, rd] = build_series<Q>(Series::A, 2);
    Mats m(Series::A, 2);
    // [[a, b, c], [0, 0, d], [0, 0, -a]]
    auto expected = span_of(a, {m.E(1, 1) - m.E(3, 3), m.E(1, 2), m.E(1, 3), m.E(2, 3)});
    CHECK(boxed_family(a, rd, {1, 0, -1}) == expected);
  }
  {
    auto [a, rd] = build_series<Q>(Series::C, 2);
    Mats m(Series::C, 2);
    // U2 = E24: [[0,0,0,0],[0,a,0,b],[0,0,0,0],[0,0,0,-a]]
    CHECK(boxed_family(a, rd, {0, 2}) == span_of(a, {m.E(2, 2) - m.E(4, 4), m.E(2, 4)}));
    // U1 = E13: [[a,c,b,d],[0,0,d,0],[0,0,-a,0],[0,0,-c,0]]
    auto u1 = span_of(a, {m.E(1, 1) - m.E(3, 3), m.E(1, 2) - m.E(4, 3), m.E(1, 3), m.E(1, 4) + m.E(2, 3)});
    CHECK(boxed_family(a, rd, {2, 0}) == u1);
    CHECK_THROWS_AS(boxed_family(a, rd, {1, -1}), InputError);
  }
  {
    auto [a, rd] = build_series<Q>(Series::B, 2);
    Mats m(Series::B, 2);
    auto expected = span_of(a, {m.Y(1, 2), m.H(1) + m.H(2), m.U(1), m.U(2)});
    CHECK(boxed_family(a, rd, {1, 1}) == expected);
    CHECK_THROWS_AS(boxed_family(a, rd, {1, 0}), InputError);
  }
}

TEST_CASE("constructed subalgebras match the boxed families", "[classical]") {
  auto a2 = reproduce_families<Q>(Series::A, 2);
  CHECK(a2.size() == 6);
  auto c3 = reproduce_families<Q>(Series::C, 3);
  std::vector<std::string> c3_roots;
  for (const auto& row : c3) c3_roots.push_back(format_root(row.root));
  CHECK(c3_roots == std::vector<std::string>{"2L1", "-2L1", "2L2", "-2L2", "2L3", "-2L3"});
  auto d3 = reproduce_families<Q>(Series::D, 3);
  CHECK(d3.size() == 12);
  for (const auto* rows : {&a2, &c3, &d3})
    for (const auto& row : *rows) {
      INFO(format_root(row.root));
      CHECK(row.condi_holds);
      CHECK(row.match);
      CHECK(row.is_coisotropic);
      CHECK(row.constructed.dim() % 2 == 0);
    }
}

TEST_CASE("transposition exchanges the families of e_beta and f_beta", "[classical]") {
  for (const auto& c : kAllUpTo4) {
    if (c.n > 3) continue;
    INFO(label(c));
    auto [a, rd] = build_series<Q>(c.s, c.n);
    auto pi = standard_r_matrix(a, rd);
    for (const auto& r : line_condition_roots(rd)) {
      if (!is_positive(r)) continue;
      auto h_e = build_h(a, pi, root_vector(a, rd, r));
      auto h_f = build_h(a, pi, root_vector(a, rd, negate(r)));
      std::vector<Vector<Q>> transposed;
      for (const auto& v : h_e.basis()) transposed.push_back(a.coordinates(a.to_matrix(v).transpose()));
      CHECK(Subspace<Q>(a.dim(), transposed) == h_f);
    }
  }
}

TEST_CASE("the A2 family over Q(i)", "[classical]") {
  auto [a, rd] = build_series<Qi>(Series::A, 2);
  auto pi = standard_r_matrix(a, rd);
  CHECK(is_r_matrix(a, pi).ok);
  auto x = root_vector(a, rd, {1, 0, -1});
  auto rep = construct(a, pi, Qi::i() * x);
  CHECK(rep.condi.holds);
  CHECK(rep.is_coisotropic);
  CHECK(rep.h == boxed_family(a, rd, {1, 0, -1}));
  for (const auto& row : reproduce_families<Qi>(Series::A, 2)) CHECK(row.match);
  // The same span as over Q.
  auto [aq, rdq] = build_series<Q>(Series::A, 2);
  auto hq = build_h(aq, standard_r_matrix(aq, rdq), root_vector(aq, rdq, {1, 0, -1}));
  REQUIRE(hq.dim() == rep.h.dim());
  for (std::size_t r = 0; r < hq.dim(); ++r)
    for (std::size_t k = 0; k < a.dim(); ++k) CHECK(rep.h.basis()[r][k] == Qi(hq.basis()[r][k]));
}
