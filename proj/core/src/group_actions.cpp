#include "ktorbit/group_actions.hpp"

#include <algorithm>
#include <sstream>

namespace ktorbit {

namespace {

const GeneratorFn& default_fn() {
  static const GeneratorFn fn = [](GeneratorId id, const KTParams& k) { return generator_vector(id, k); };
  return fn;
}

const GeneratorFn& or_default(const GeneratorFn& fn) { return fn ? fn : default_fn(); }

Mat2 diagonal(const Rational& a, const Rational& d) { return Mat2{{{a, Rational(0)}, {Rational(0), d}}}; }

Mat2 rotation_or_boost(Signature sig, const Rational& t) {
  const Rational t2 = t * t;
  if (sig == Signature::Euclidean) {
    const Rational den = Rational(1) + t2;
    const Rational c = (Rational(1) - t2) / den;
    const Rational s = Rational(2) * t / den;
    return Mat2{{{c, -s}, {s, c}}};
  }
  if (t2 >= Rational(1)) throw InvalidParameterError("boost parameter must satisfy |t| < 1, got " + t.to_string());
  const Rational den = Rational(1) - t2;
  const Rational ch = (Rational(1) + t2) / den;
  const Rational sh = Rational(2) * t / den;
  return Mat2{{{ch, sh}, {sh, ch}}};
}

}  // namespace

std::string_view to_string(GeneratorId id) {
  static constexpr std::array<std::string_view, 6> names{"V1", "V2", "V3", "V4", "V5", "V6"};
  return names[static_cast<std::size_t>(id)];
}

std::optional<GeneratorId> parse_generator(std::string_view text) {
  if (text.size() != 2 || (text[0] != 'V' && text[0] != 'v')) return std::nullopt;
  for (GeneratorId id : kAllGenerators) {
    if (to_string(id)[1] == text[1]) return id;
  }
  return std::nullopt;
}

ParamVector generator_vector(GeneratorId id, const KTParams& k) {
  const Rational zero;
  const Rational two(2);
  const bool euc = k.signature == Signature::Euclidean;
  switch (id) {
    case GeneratorId::V1:
      return {zero, -two * k.beta, euc ? k.alpha : -k.alpha, zero, -k.gamma, zero};
    case GeneratorId::V2:
      return {-two * k.alpha, zero, euc ? k.beta : -k.beta, -k.gamma, zero, zero};
    case GeneratorId::V3:
      if (euc) return {-two * k.C, two * k.C, k.A - k.B, k.beta, -k.alpha, zero};
      return {two * k.C, two * k.C, k.A + k.B, k.beta, k.alpha, zero};
    case GeneratorId::V4:
      return {two * k.A, two * k.B, two * k.C, k.alpha, k.beta, zero};
    case GeneratorId::V5:
      return {Rational(1), euc ? Rational(1) : Rational(-1), zero, zero, zero, zero};
    case GeneratorId::V6:
      return k.to_vector();
  }
  return {};
}

RatMatrix generator_matrix(const KTParams& k, const GeneratorFn& fn) {
  const GeneratorFn& gen = or_default(fn);
  RatMatrix m(6, 6);
  for (std::size_t r = 0; r < 6; ++r) {
    const ParamVector row = gen(kAllGenerators[r], k);
    for (std::size_t c = 0; c < 6; ++c) m(r, c) = row[c];
  }
  return m;
}

std::size_t generator_rank(const KTParams& k) { return rat_rank(generator_matrix(k)); }

KTParams pushforward_affine(const KTParams& k, const Mat2& L, const Point2<Rational>& b) {
  const Rational det = L[0][0] * L[1][1] - L[0][1] * L[1][0];
  if (det.is_zero()) throw InvalidParameterError("pushforward by a singular linear map");
  const Mat2 inv{{{L[1][1] / det, -L[0][1] / det}, {-L[1][0] / det, L[0][0] / det}}};

  // p = L^-1 (q - b) as polynomials in q = (u, v).
  const BivariatePoly qu = BivariatePoly::variable(0) - BivariatePoly(b.u);
  const BivariatePoly qv = BivariatePoly::variable(1) - BivariatePoly(b.v);
  const std::array<BivariatePoly, 2> p{BivariatePoly(inv[0][0]) * qu + BivariatePoly(inv[0][1]) * qv,
                                       BivariatePoly(inv[1][0]) * qu + BivariatePoly(inv[1][1]) * qv};

  const TensorField f = component_field(k);
  const BivariatePoly k11 = f.k11.substitute<2>(p);
  const BivariatePoly k12 = f.k12.substitute<2>(p);
  const BivariatePoly k22 = f.k22.substitute<2>(p);

  auto entry = [&](std::size_t i, std::size_t j) {
    return BivariatePoly(L[i][0] * L[j][0]) * k11 + BivariatePoly(L[i][0] * L[j][1] + L[i][1] * L[j][0]) * k12 +
           BivariatePoly(L[i][1] * L[j][1]) * k22;
  };
  const TensorField image{entry(0, 0), entry(0, 1), entry(1, 1)};
  auto result = params_from_field(image, k.signature);
  if (!result) throw InvalidParameterError("affine map does not preserve the Killing family");
  return *result;
}

KTParams apply_finite(const KTParams& k, GeneratorId id, const Rational& t) {
  switch (id) {
    case GeneratorId::V1:
      return pushforward_affine(k, diagonal(1, 1), {t, Rational(0)});
    case GeneratorId::V2:
      return pushforward_affine(k, diagonal(1, 1), {Rational(0), t});
    case GeneratorId::V3:
      return pushforward_affine(k, rotation_or_boost(k.signature, t), {});
    case GeneratorId::V4:
      if (t.sign() <= 0) throw InvalidParameterError("dilatation factor must be positive, got " + t.to_string());
      return pushforward_affine(k, diagonal(t, t), {});
    case GeneratorId::V5: {
      KTParams out = k;
      out.A += t * metric_diagonal(k.signature, 0);
      out.B += t * metric_diagonal(k.signature, 1);
      return out;
    }
    case GeneratorId::V6: {
      if (t.is_zero()) throw InvalidParameterError("scalar multiple must be nonzero");
      ParamVector v = k.to_vector();
      for (Rational& x : v) x *= t;
      return KTParams::from_vector(k.signature, v);
    }
  }
  return k;
}

KTParams apply_half_turn(const KTParams& k) { return pushforward_affine(k, diagonal(-1, -1), {}); }

std::optional<Rational> compose_parameters(Signature sig, GeneratorId id, const Rational& t1, const Rational& t2) {
  switch (id) {
    case GeneratorId::V1:
    case GeneratorId::V2:
    case GeneratorId::V5:
      return t1 + t2;
    case GeneratorId::V4:
    case GeneratorId::V6:
      return t1 * t2;
    case GeneratorId::V3: {
      // tan and tanh addition formulas for the half-angle parameters.
      const Rational den = sig == Signature::Euclidean ? Rational(1) - t1 * t2 : Rational(1) + t1 * t2;
      if (den.is_zero()) return std::nullopt;
      return (t1 + t2) / den;
    }
  }
  return std::nullopt;
}

std::string_view to_string(DiscreteId id) {
  switch (id) {
    case DiscreteId::R0:
      return "R0";
    case DiscreteId::R1:
      return "R1";
    case DiscreteId::R2:
      return "R2";
    case DiscreteId::RSwap:
      return "RSwap";
  }
  return "?";
}

KTParams apply_discrete(const KTParams& k, DiscreteId id) {
  KTParams out = k;
  switch (id) {
    case DiscreteId::R0:
      return apply_finite(k, GeneratorId::V6, Rational(-1));
    case DiscreteId::R1:
      out.C = -k.C;
      out.alpha = -k.alpha;
      break;
    case DiscreteId::R2:
      out.C = -k.C;
      out.beta = -k.beta;
      break;
    case DiscreteId::RSwap:
      std::swap(out.A, out.B);
      std::swap(out.alpha, out.beta);
      break;
  }
  return out;
}

std::string to_string(const GroupStep& step) {
  struct Visitor {
    std::string operator()(const FlowStep& s) const {
      return std::string(to_string(s.id)) + "(" + s.parameter.to_string() + ")";
    }
    std::string operator()(DiscreteId id) const { return std::string(to_string(id)); }
    std::string operator()(const HalfTurn&) const { return "HalfTurn"; }
  };
  return std::visit(Visitor{}, step);
}

std::string to_string(const GroupWord& word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i == 0 ? "" : ", ") << to_string(word[i]);
  os << ']';
  return os.str();
}

KTParams apply_word(const KTParams& k, const GroupWord& word) {
  struct Visitor {
    const KTParams& in;
    KTParams operator()(const FlowStep& s) const { return apply_finite(in, s.id, s.parameter); }
    KTParams operator()(DiscreteId id) const { return apply_discrete(in, id); }
    KTParams operator()(const HalfTurn&) const { return apply_half_turn(in); }
  };
  KTParams current = k;
  for (const GroupStep& step : word) current = std::visit(Visitor{current}, step);
  return current;
}

VectorField6 generator_field(GeneratorId id, Signature sig, const GeneratorFn& fn) {
  const GeneratorFn& gen = or_default(fn);
  KTParams origin;
  origin.signature = sig;
  const ParamVector base = gen(id, origin);
  VectorField6 field;
  for (std::size_t c = 0; c < 6; ++c) field[c] = ParamPoly(base[c]);
  for (std::size_t i = 0; i < 6; ++i) {
    ParamVector unit{};
    unit[i] = 1;
    const ParamVector value = gen(id, KTParams::from_vector(sig, unit));
    const ParamPoly xi = ParamPoly::variable(i);
    for (std::size_t c = 0; c < 6; ++c) field[c] += ParamPoly(value[c] - base[c]) * xi;
  }
  return field;
}

VectorField6 lie_bracket(const VectorField6& x, const VectorField6& y) {
  VectorField6 out;
  for (std::size_t k = 0; k < 6; ++k) {
    for (std::size_t m = 0; m < 6; ++m) {
      out[k] += x[m] * y[k].derivative(m);
      out[k] -= y[m] * x[k].derivative(m);
    }
  }
  return out;
}

std::optional<std::array<Rational, 6>> lie_bracket_decompose(GeneratorId i, GeneratorId j, Signature sig,
                                                             const GeneratorFn& fn) {
  std::array<VectorField6, 6> basis;
  for (std::size_t l = 0; l < 6; ++l) basis[l] = generator_field(kAllGenerators[l], sig, fn);
  const VectorField6 bracket =
      lie_bracket(basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);

  // Every monomial that occurs in the bracket or the basis yields one
  // equation per component.
  std::vector<ParamPoly::Exponents> monomials;
  auto collect = [&](const ParamPoly& p) {
    for (const auto& [e, c] : p.terms()) {
      if (std::find(monomials.begin(), monomials.end(), e) == monomials.end()) monomials.push_back(e);
    }
  };
  for (const ParamPoly& p : bracket) collect(p);
  for (const VectorField6& v : basis) {
    for (const ParamPoly& p : v) collect(p);
  }

  RatMatrix system(monomials.size() * 6, 6);
  std::vector<Rational> rhs(monomials.size() * 6);
  for (std::size_t m = 0; m < monomials.size(); ++m) {
    for (std::size_t comp = 0; comp < 6; ++comp) {
      const std::size_t row = m * 6 + comp;
      for (std::size_t l = 0; l < 6; ++l) system(row, l) = basis[l][comp].coefficient(monomials[m]);
      rhs[row] = bracket[comp].coefficient(monomials[m]);
    }
  }
  const auto solution = solve_exact(system, rhs);
  if (!solution) return std::nullopt;
  std::array<Rational, 6> out;
  std::copy(solution->begin(), solution->end(), out.begin());
  return out;
}

}  // namespace ktorbit
