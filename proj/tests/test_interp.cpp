#include <gtest/gtest.h>

#include <random>

#include "gf3/dft4.hpp"
#include "gf3/interp.hpp"
#include "gf3/sextic.hpp"

using namespace gf3;

namespace {

Matrix<QuadElem> quad_matrix(const QuadFieldOps& ops, const std::vector<std::vector<int>>& re,
                             const std::vector<std::vector<int>>& im) {
  Matrix<QuadElem> out(re.size(), re[0].size(), ops.zero());
  OpCounter scratch;
  for (std::size_t i = 0; i < out.rows; ++i) {
    for (std::size_t j = 0; j < out.cols; ++j) {
      out.at(i, j) = ops.add(ops.from_int(re[i][j]), ops.mul(ops.from_int(im[i][j]), ops.s(), scratch));
    }
  }
  return out;
}

// V_s: rows are 1, s, -1, -s raised to 0..3.
Matrix<QuadElem> v_s_fixture(const QuadFieldOps& ops) {
  return quad_matrix(ops, {{1, 1, 1, 1}, {1, 0, -1, 0}, {1, -1, 1, -1}, {1, 0, -1, 0}},
                     {{0, 0, 0, 0}, {0, 1, 0, -1}, {0, 0, 0, 0}, {0, -1, 0, 1}});
}

Matrix<QuadElem> w_s_fixture(const QuadFieldOps& ops) {
  return quad_matrix(ops, {{1, 1, 1, 1}, {1, 0, -1, 0}, {1, -1, 1, -1}, {1, 0, -1, 0}},
                     {{0, 0, 0, 0}, {0, -1, 0, 1}, {0, 0, 0, 0}, {0, 1, 0, -1}});
}

PointSet<QuadElem> s_points(const QuadFieldOps& ops) {
  const auto s = ops.s();
  return PointSet<QuadElem>({ops.one(), s, ops.neg(ops.one()), ops.neg(s)});
}

template <class F>
std::vector<typename F::value_type> random_poly(const F& ops, std::size_t len, std::mt19937_64& rng,
                                                typename F::value_type (*draw)(const F&, std::mt19937_64&)) {
  std::vector<typename F::value_type> out;
  for (std::size_t i = 0; i < len; ++i) out.push_back(draw(ops, rng));
  return out;
}

QuadElem draw_quad(const QuadFieldOps& ops, std::mt19937_64& rng) { return quad_random(ops.context(), rng); }

SmallExtElem draw_small(const SmallExtOps& ops, std::mt19937_64& rng) {
  const auto p = ops.field().characteristic();
  return ops.field().make(static_cast<std::int64_t>(rng() % p), static_cast<std::int64_t>(rng() % p));
}

ErrorCode error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidConfig;
}

}  // namespace

TEST(Vandermonde, PowersOfSMatchFixtures) {
  for (int m : {1, 5, 97}) {
    const auto ctx = default_context(m);
    const QuadFieldOps ops(*ctx);
    const auto v = build_vandermonde(ops, s_points(ops));
    const auto w = invert_root_vandermonde(ops, ops.s(), 4);
    EXPECT_EQ(v, v_s_fixture(ops)) << "m=" << m;
    EXPECT_EQ(w, w_s_fixture(ops)) << "m=" << m;
    EXPECT_TRUE(is_identity(ops, matmul(ops, w, v)));
    EXPECT_TRUE(is_identity(ops, matmul(ops, v, w)));
    EXPECT_EQ(invert_matrix(ops, v), w);
  }
}

TEST(Vandermonde, SmallCases) {
  const auto f3 = default_context(1);
  const Gf3mFieldOps ops(*f3);
  const auto one = build_vandermonde(ops, PointSet<Gf3mElem>({ops.one()}));
  EXPECT_TRUE(is_identity(ops, one));

  const auto v = build_vandermonde(ops, PointSet<Gf3mElem>({ops.from_int(0), ops.from_int(1), ops.from_int(2)}));
  const std::vector<std::vector<int>> want = {{1, 0, 0}, {1, 1, 1}, {1, 2, 1}};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(v.at(i, j), ops.from_int(want[i][j])) << i << "," << j;
  }

  // omega = -1, k = 2: 2^{-1} [[1, 1], [1, -1]] = [[2, 2], [2, 1]] over F_3.
  const auto w = invert_root_vandermonde(ops, ops.from_int(2), 2);
  EXPECT_EQ(w.at(0, 0), ops.from_int(2));
  EXPECT_EQ(w.at(0, 1), ops.from_int(2));
  EXPECT_EQ(w.at(1, 0), ops.from_int(2));
  EXPECT_EQ(w.at(1, 1), ops.from_int(1));
}

TEST(Vandermonde, Errors) {
  const auto ctx = default_context(5);
  const QuadFieldOps ops(*ctx);
  EXPECT_EQ(error_of([&] { PointSet<QuadElem>({ops.one(), ops.s(), ops.one()}); }), ErrorCode::kDuplicatePoints);
  EXPECT_EQ(error_of([&] { invert_root_vandermonde(ops, ops.s(), 3); }), ErrorCode::kNonInvertibleSize);
  EXPECT_EQ(error_of([&] { invert_root_vandermonde(ops, ops.s(), 2); }), ErrorCode::kWrongOrder);
  EXPECT_EQ(error_of([&] { invert_root_vandermonde(ops, ops.neg(ops.one()), 4); }), ErrorCode::kWrongOrder);
}

TEST(Dft4, FactoredTransformsEqualDenseProducts) {
  const auto ctx = default_context(97);
  const QuadFieldOps ops(*ctx);
  const auto v = v_s_fixture(ops);
  const auto w = w_s_fixture(ops);
  OpCounter counter;
  const QuadArith ar{&counter};
  std::mt19937_64 rng(10);
  for (int i = 0; i < 1000; ++i) {
    std::array<QuadElem, 4> x;
    for (auto& e : x) e = quad_random(*ctx, rng);
    const std::vector<QuadElem> xv(x.begin(), x.end());
    const auto fwd = dft4_forward(ar, x);
    const auto inv = dft4_inverse(ar, x);
    ASSERT_EQ(std::vector<QuadElem>(fwd.begin(), fwd.end()), matvec(ops, v, xv, counter));
    ASSERT_EQ(std::vector<QuadElem>(inv.begin(), inv.end()), matvec(ops, w, xv, counter));
    const auto deg2 = dft4_forward_deg2(ar, x[0], x[1], x[2]);
    ASSERT_EQ(deg2, dft4_forward(ar, {x[0], x[1], x[2], ops.zero()}));
  }
  OpCounter fresh;
  const QuadArith counted{&fresh};
  dft4_forward(counted, std::array<QuadElem, 4>{ops.one(), ops.one(), ops.one(), ops.one()});
  EXPECT_EQ(fresh.base_muls, 0u);
}

TEST(ShortProduct, SSchemeMatchesSchoolbookAndCounts) {
  const auto ctx = default_context(97);
  const QuadFieldOps ops(*ctx);
  const auto scheme = make_s_scheme(ops);
  EXPECT_EQ(scheme.product_count(), 5u);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(ops, 3, rng, draw_quad);
    const auto b = random_poly(ops, 3, rng, draw_quad);
    OpCounter c;
    const auto got = generic_short_product(ops, a, b, scheme, c);
    ASSERT_EQ(c.base_muls, 15u);
    OpCounter scratch;
    ASSERT_EQ(got, schoolbook_product(ops, a, b, scratch));
    const auto u = unreduced_schoolbook({a[0], a[1], a[2]}, {b[0], b[1], b[2]}, scratch);
    ASSERT_EQ(got, std::vector<QuadElem>(u.c.begin(), u.c.end()));
  }
  OpCounter c;
  EXPECT_EQ(generic_short_product(ops, {ops.one()}, {ops.one()}, scheme, c),
            schoolbook_product(ops, {ops.one(), ops.zero(), ops.zero()}, {ops.one(), ops.zero(), ops.zero()}, c));
}

TEST(ShortProduct, LinearFormsOfSScheme) {
  const auto ctx = default_context(5);
  const QuadFieldOps ops(*ctx);
  const auto forms = scheme_linear_forms(ops, make_s_scheme(ops));
  EXPECT_EQ(format_linear_form(ops, forms, 0), "c_0 = P_0 + P_1 + P_2 + P_3 - P_4");
  EXPECT_EQ(format_linear_form(ops, forms, 1), "c_1 = P_0 - sP_1 - P_2 + sP_3");
  EXPECT_EQ(format_linear_form(ops, forms, 2), "c_2 = P_0 - P_1 + P_2 - P_3");
  EXPECT_EQ(format_linear_form(ops, forms, 3), "c_3 = P_0 + sP_1 - P_2 - sP_3");
  EXPECT_EQ(format_linear_form(ops, forms, 4), "c_4 = P_4");
  for (std::size_t row = 1; row <= 3; ++row) EXPECT_EQ(forms.at(row, 4), ops.zero());
}

TEST(ShortProduct, AlternativeUnstructuredMatrix) {
  // Points 0, 1, -1, s with the leading-coefficient shortcut; fixed inverse
  // [[1,0,0,0],[s,1-s,-1-s,s],[-1,-1,-1,0],[-s,1+s,-1+s,-s]].
  const auto ctx = default_context(7);
  const QuadFieldOps ops(*ctx);
  const PointSet<QuadElem> pts({ops.zero(), ops.one(), ops.neg(ops.one()), ops.s()});
  const auto scheme = make_short_product_scheme(ops, pts, 2, true);
  EXPECT_EQ(scheme.system, quad_matrix(ops, {{1, 0, 0, 0}, {1, 1, 1, 1}, {1, -1, 1, -1}, {1, 0, -1, 0}},
                                       {{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 1, 0, -1}}));
  EXPECT_EQ(scheme.interpolation,
            quad_matrix(ops, {{1, 0, 0, 0}, {0, 1, -1, 0}, {-1, -1, -1, 0}, {0, 1, -1, 0}},
                        {{0, 0, 0, 0}, {1, -1, -1, 1}, {0, 0, 0, 0}, {-1, 1, 1, -1}}));
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_poly(ops, 3, rng, draw_quad);
    const auto b = random_poly(ops, 3, rng, draw_quad);
    OpCounter c;
    ASSERT_EQ(generic_short_product(ops, a, b, scheme, c), schoolbook_product(ops, a, b, c));
  }
}

TEST(ShortProduct, Errors) {
  const auto f5 = default_context(5);
  const auto f7 = default_context(7);
  const QuadFieldOps ops5(*f5);
  const QuadFieldOps ops7(*f7);
  const auto scheme = make_s_scheme(ops5);
  OpCounter c;
  const std::vector<QuadElem> four(4, ops5.one());
  const std::vector<QuadElem> three(3, ops5.one());
  const std::vector<QuadElem> foreign(3, ops7.one());
  EXPECT_EQ(error_of([&] { generic_short_product(ops5, four, three, scheme, c); }), ErrorCode::kDegreeTooHigh);
  EXPECT_EQ(error_of([&] { generic_short_product(ops7, foreign, foreign, scheme, c); }),
            ErrorCode::kSchemeFieldMismatch);
}

TEST(ShortProduct, EvaluationHomomorphism) {
  for (int m : {1, 5, 97}) {
    const auto ctx = default_context(m);
    const QuadFieldOps ops(*ctx);
    const auto pts = s_points(ops);
    const auto eval3 = power_matrix(ops, pts.points(), 3);
    const auto eval5 = power_matrix(ops, pts.points(), 5);
    std::mt19937_64 rng(15 + m);
    for (int i = 0; i < 200; ++i) {
      const auto a = random_poly(ops, 3, rng, draw_quad);
      const auto b = random_poly(ops, 3, rng, draw_quad);
      OpCounter c;
      const auto prod = schoolbook_product(ops, a, b, c);
      const auto ea = matvec(ops, eval3, a, c);
      const auto eb = matvec(ops, eval3, b, c);
      const auto ec = matvec(ops, eval5, prod, c);
      for (std::size_t k = 0; k < 4; ++k) ASSERT_EQ(ec[k], ops.mul(ea[k], eb[k], c));
    }
  }
}

TEST(ShortProduct, ExportIsComplete) {
  const auto ctx = default_context(1);
  const QuadFieldOps ops(*ctx);
  const auto j = export_scheme_json(ops, make_s_scheme(ops));
  EXPECT_EQ(j["points"], nlohmann::json::array({"1", "s", "-1", "-s"}));
  EXPECT_EQ(j["coefficients"][2], "c_2 = P_0 - P_1 + P_2 - P_3");
  EXPECT_EQ(j["products"].size(), 5u);
  EXPECT_EQ(j["products"][4], "P_4 = a_2 b_2");
  EXPECT_EQ(j["interpolation"][1], nlohmann::json::array({"1", "-s", "-1", "s"}));
}

TEST(RootOfUnity, OrderIsTwicePMinusOne) {
  for (std::uint32_t p : {3u, 7u, 11u, 19u}) {
    const auto root = find_root_2p_minus_2(p);
    const auto& f = root.field;
    EXPECT_EQ(root.order, 2u * (p - 1));
    // Exhaustive order of every nonzero element.
    bool omega_seen = false;
    std::uint64_t with_order = 0;
    for (std::uint64_t i = 1; i < f.order(); ++i) {
      const auto x = f.from_index(i);
      std::uint64_t d = 1;
      for (auto y = x; !(y == f.one()); y = f.mul(y, x)) ++d;
      if (d == 2u * (p - 1)) {
        ++with_order;
        omega_seen = omega_seen || x == root.omega;
      }
      if (x == root.primitive) {
        EXPECT_EQ(d, f.order() - 1);
      }
    }
    EXPECT_TRUE(omega_seen) << "p=" << p;
    EXPECT_GT(with_order, 0u);
    EXPECT_EQ(root.omega, f.pow(root.primitive, (p + 1) / 2));
  }
  const auto f9 = find_root_2p_minus_2(3);
  EXPECT_EQ(f9.field.mul(f9.omega, f9.omega), f9.field.from_int(-1));
  EXPECT_EQ(error_of([] { find_root_2p_minus_2(5); }), ErrorCode::kBadPrime);
  EXPECT_EQ(error_of([] { find_root_2p_minus_2(9); }), ErrorCode::kBadPrime);
}

TEST(GeneralPoints, SizesAndMembership) {
  const auto p3 = suggest_points_for_general_case(3);
  EXPECT_EQ(p3.size(), 3u);
  const auto p7 = suggest_points_for_general_case(7);
  ASSERT_EQ(p7.size(), 11u);
  const SmallExtField f(7);
  std::vector<SmallExtElem> allowed;
  for (int i = 1; i <= 6; ++i) allowed.push_back(f.from_int(i));
  for (int k : {1, -1, 2, -2, 3}) allowed.push_back(f.make(0, k));
  for (const auto& pt : p7.points()) EXPECT_NE(std::find(allowed.begin(), allowed.end(), pt), allowed.end());
}

TEST(GeneralPoints, BothShortcutsGiveFullProduct) {
  for (std::uint32_t p : {3u, 7u, 11u}) {
    const SmallExtOps ops{SmallExtField(p)};
    const auto scheme = make_short_product_scheme(ops, suggest_points_for_general_case(p), p - 1, true, true);
    EXPECT_EQ(scheme.product_count(), 2 * p - 1);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 300; ++i) {
      const auto a = random_poly(ops, p, rng, draw_small);
      const auto b = random_poly(ops, p, rng, draw_small);
      OpCounter c;
      const auto got = generic_short_product(ops, a, b, scheme, c);
      ASSERT_EQ(c.base_muls, 2u * p - 1);
      OpCounter scratch;
      ASSERT_EQ(got, schoolbook_product(ops, a, b, scratch));
    }
  }
}

TEST(GeneralPoints, RootOfUnitySchemeOverSmallField) {
  const auto root = find_root_2p_minus_2(7);
  const SmallExtOps ops{root.field};
  const auto scheme = make_root_of_unity_scheme(ops, root.omega, 12, 6, true);
  EXPECT_TRUE(is_identity(ops, matmul(ops, scheme.interpolation, scheme.system)));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto a = random_poly(ops, 7, rng, draw_small);
    const auto b = random_poly(ops, 7, rng, draw_small);
    OpCounter c;
    ASSERT_EQ(generic_short_product(ops, a, b, scheme, c), schoolbook_product(ops, a, b, c));
  }
}
