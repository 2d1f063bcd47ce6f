#include "gf3/formulas.hpp"

#include <optional>

#include "gf3/dft4.hpp"

namespace gf3 {

namespace {

// F_3-linear form over N variables, coefficients stored as 0, 1, 2.
template <std::size_t N>
struct LinForm {
  std::array<std::uint8_t, N> c{};

  static LinForm var(std::size_t i) {
    LinForm f;
    f.c[i] = 1;
    return f;
  }
  friend LinForm operator+(const LinForm& x, const LinForm& y) {
    LinForm r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = static_cast<std::uint8_t>((x.c[i] + y.c[i]) % 3);
    return r;
  }
  friend LinForm operator-(const LinForm& x) {
    LinForm r;
    for (std::size_t i = 0; i < N; ++i) r.c[i] = static_cast<std::uint8_t>((3 - x.c[i]) % 3);
    return r;
  }
  friend LinForm operator-(const LinForm& x, const LinForm& y) { return x + (-y); }

  std::array<std::int8_t, N> balanced() const {
    std::array<std::int8_t, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = c[i] == 2 ? -1 : static_cast<std::int8_t>(c[i]);
    return out;
  }
};

template <std::size_t N>
struct SymQuad {
  LinForm<N> v;
  LinForm<N> u;
};

// Same policy shape as QuadArith, over symbolic values.
template <std::size_t N>
struct SymArith {
  using value_type = SymQuad<N>;
  SymQuad<N> add(const SymQuad<N>& x, const SymQuad<N>& y) const { return {x.v + y.v, x.u + y.u}; }
  SymQuad<N> sub(const SymQuad<N>& x, const SymQuad<N>& y) const { return {x.v - y.v, x.u - y.u}; }
  SymQuad<N> mul_s(const SymQuad<N>& x) const { return {-x.u, x.v}; }
};

std::string render_factor(const InputForm& form, char letter) {
  std::string body;
  int terms = 0;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (form[i] == 0) continue;
    const std::string var = std::string(1, letter) + "_" + std::to_string(i);
    if (terms == 0) {
      body += form[i] < 0 ? "-" + var : var;
    } else {
      body += (form[i] < 0 ? " - " : " + ") + var;
    }
    ++terms;
  }
  if (terms == 0) return "0";
  if (terms == 1 && form[0 + 0] >= 0 && body[0] != '-') return body;
  return "(" + body + ")";
}

}  // namespace

FlatFormulaSet derive_flat_formulas() {
  FlatFormulaSet out{};

  // Input side: A_j = a_{2j} + a_{2j+1} s as forms over a_0..a_5.
  const SymArith<kFlatInputs> in;
  using In = SymQuad<kFlatInputs>;
  const In a0{LinForm<kFlatInputs>::var(0), LinForm<kFlatInputs>::var(1)};
  const In a1{LinForm<kFlatInputs>::var(2), LinForm<kFlatInputs>::var(3)};
  const In a2{LinForm<kFlatInputs>::var(4), LinForm<kFlatInputs>::var(5)};
  const auto evals = dft4_forward_deg2(in, a0, a1, a2);
  const std::array<In, 5> points = {evals[0], evals[1], evals[2], evals[3], a2};

  // Each F_{3^{2m}} product uses vv, (v + u)(v + u), uu in that order.
  for (std::size_t j = 0; j < 5; ++j) {
    const auto& e = points[j];
    const std::array<LinForm<kFlatInputs>, 3> factors = {e.v, e.v + e.u, e.u};
    for (std::size_t t = 0; t < 3; ++t) {
      const auto f = factors[t].balanced();
      out.products[3 * j + t] = {f, f};
    }
  }

  // Output side: forms over P_0..P_14.
  const SymArith<kFlatProducts> ar;
  using Out = SymQuad<kFlatProducts>;
  using PForm = LinForm<kFlatProducts>;
  auto sub = [](const PForm& x, const PForm& y) { return x - y; };
  std::array<Out, 5> q;
  for (std::size_t j = 0; j < 5; ++j) {
    const auto [v, u] = karatsuba_quad_combine(PForm::var(3 * j), PForm::var(3 * j + 2), PForm::var(3 * j + 1), sub);
    q[j] = {v, u};
  }
  std::array<Out, 4> shifted;
  for (std::size_t j = 0; j < 4; ++j) shifted[j] = ar.sub(q[j], q[4]);
  const auto c = dft4_inverse(ar, shifted);
  const auto reduced = reduce_artin_schreier(ar, std::array<Out, 5>{c[0], c[1], c[2], c[3], q[4]});
  for (std::size_t i = 0; i < 3; ++i) {
    out.outputs[2 * i] = reduced[i].v.balanced();
    out.outputs[2 * i + 1] = reduced[i].u.balanced();
  }
  return out;
}

FlatFormulaSet reference_flat_formulas() {
  FlatFormulaSet f{};
  auto same = [](InputForm x) { return FlatProduct{x, x}; };
  f.products = {
      same({1, 0, 1, 0, 1, 0}),
      same({1, 1, 1, 1, 1, 1}),
      same({0, 1, 0, 1, 0, 1}),
      same({1, 0, 0, -1, -1, 0}),
      same({1, 1, 1, -1, -1, -1}),
      same({0, 1, 1, 0, 0, -1}),
      same({1, 0, -1, 0, 1, 0}),
      same({1, 1, -1, -1, 1, 1}),
      same({0, 1, 0, -1, 0, 1}),
      FlatProduct{{1, 0, 0, -1, -1, 0}, {1, 0, 0, 1, -1, 0}},
      same({1, 1, -1, 1, -1, -1}),
      same({0, 1, -1, 0, 0, -1}),
      same({0, 0, 0, 0, 1, 0}),
      same({0, 0, 0, 0, 1, 1}),
      same({0, 0, 0, 0, 0, 1}),
  };
  f.outputs = {{
      {-1, 0, 1, -1, -1, 0, 0, 0, 0, 0, 1, 1, -1, 0, 1},
      {1, -1, 1, 0, 1, 1, 0, 0, 0, 1, 1, 0, 1, -1, 1},
      {-1, 0, 1, 0, 0, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1},
      {1, -1, 1, 0, 0, 0, -1, 1, -1, 0, 0, 0, -1, 1, -1},
      {1, 0, -1, -1, 0, 1, 1, 0, -1, -1, 0, 1, 1, 0, -1},
      {-1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1, 1, -1},
  }};
  return f;
}

SexticElem mul_flat_table(const FlatFormulaSet& formulas, const SexticElem& a, const SexticElem& b,
                          OpCounter& counter) {
  if (a.context() != b.context() || a.context() == nullptr) {
    throw Error(ErrorCode::kContextMismatch, "operands belong to different fields");
  }
  const FieldContext& ctx = *a.context();
  auto combine = [&](const auto& coeffs, const auto& values) {
    std::optional<Gf3mElem> acc;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (coeffs[i] == 0) continue;
      if (!acc) {
        acc = coeffs[i] > 0 ? values[i] : neg(values[i]);
      } else {
        acc = coeffs[i] > 0 ? add(*acc, values[i], counter) : sub(*acc, values[i], counter);
      }
    }
    return acc ? *acc : ctx.zero();
  };
  const auto x = a.coords();
  const auto y = b.coords();
  std::array<Gf3mElem, kFlatProducts> p;
  for (std::size_t i = 0; i < kFlatProducts; ++i) {
    p[i] = mul(combine(formulas.products[i].a, x), combine(formulas.products[i].b, y), counter);
  }
  std::array<Gf3mElem, kFlatOutputs> c;
  for (std::size_t i = 0; i < kFlatOutputs; ++i) c[i] = combine(formulas.outputs[i], p);
  return SexticElem::from_coords(c);
}

std::string format_product(std::size_t index, const FlatProduct& product) {
  return "P_" + std::to_string(index) + " = " + render_factor(product.a, 'a') + render_factor(product.b, 'b');
}

std::string format_output(std::size_t index, const OutputForm& form) {
  std::string out = "c_" + std::to_string(index) + " =";
  bool first = true;
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (form[i] == 0) continue;
    const std::string term = "P_" + std::to_string(i);
    if (first) {
      out += form[i] < 0 ? " -" + term : " " + term;
    } else {
      out += (form[i] < 0 ? " - " : " + ") + term;
    }
    first = false;
  }
  if (first) out += " 0";
  return out;
}

std::vector<FormulaDifference> compare_formulas(const FlatFormulaSet& derived, const FlatFormulaSet& reference) {
  std::vector<FormulaDifference> diffs;
  for (std::size_t i = 0; i < kFlatProducts; ++i) {
    const auto& d = derived.products[i];
    const auto& p = reference.products[i];
    if (d.a != p.a) {
      diffs.push_back({"P_" + std::to_string(i) + " a-factor", render_factor(d.a, 'a'), render_factor(p.a, 'a')});
    }
    if (d.b != p.b) {
      diffs.push_back({"P_" + std::to_string(i) + " b-factor", render_factor(d.b, 'b'), render_factor(p.b, 'b')});
    }
  }
  for (std::size_t i = 0; i < kFlatOutputs; ++i) {
    if (derived.outputs[i] != reference.outputs[i]) {
      diffs.push_back({"c_" + std::to_string(i), format_output(i, derived.outputs[i]),
                       format_output(i, reference.outputs[i])});
    }
  }
  return diffs;
}

}  // namespace gf3
