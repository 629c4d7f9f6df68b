// Python surface over the exact core: coefficient tables, moments, inner
// products, transform evaluation, and the verification suites. Exact rationals
// cross the boundary as fractions.Fraction (or "p/q" strings / ints inbound).

#include "sbt/combinatorics.hpp"
#include "sbt/operator.hpp"
#include "sbt/orthogonal.hpp"
#include "sbt/transform.hpp"
#include "sbt/verify.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;
using namespace sbt;

namespace {

Rational to_rational(py::handle obj) {
  if (py::isinstance<py::str>(obj)) return parse_rational(obj.cast<std::string>());
  // ints and fractions.Fraction both expose numerator/denominator
  if (py::hasattr(obj, "numerator") && py::hasattr(obj, "denominator")) {
    BigInt num(py::str(obj.attr("numerator")).cast<std::string>());
    BigInt den(py::str(obj.attr("denominator")).cast<std::string>());
    return Rational(num, den);
  }
  throw py::type_error(
      "expected an exact rational: int, fractions.Fraction, or a string like '3/4' or '0.25'");
}

py::object to_fraction(const Rational& r) {
  static py::object ctor = py::module_::import("fractions").attr("Fraction");
  return ctor(to_fraction_string(r));
}

py::object big_to_int(const BigInt& v) {
  static py::object ctor = py::module_::import("builtins").attr("int");
  return ctor(v.str());
}

py::list poly_to_list(const Poly& p, int pad_to = -1) {
  py::list out;
  int top = std::max(p.degree(), pad_to);
  for (int k = 0; k <= top; ++k) out.append(to_fraction(p.coeff(k)));
  return out;
}

Poly list_to_poly(const py::sequence& coeffs) {
  std::vector<Rational> c;
  c.reserve(py::len(coeffs));
  for (py::handle item : coeffs) c.push_back(to_rational(item));
  return Poly::from_coeffs(std::move(c));
}

ModelParams make_params(py::handle alpha, py::handle sigma) {
  return ModelParams(to_rational(alpha), to_rational(sigma));
}

Poly family_poly(const std::string& family, const ModelParams& params, int n) {
  if (family == "charlier") return charlier_explicit(params, n);
  if (family == "hermite") return OrthogonalBasis::hermite(params.sigma, n).poly(n);
  if (family == "touchard") return touchard(n);
  if (family == "factorial") return generalized_factorial(n, params.alpha);
  if (family == "touchard-scaled") return touchard_scaled(n, params.alpha);
  if (family == "hermite-tilde") return hermite_tilde(params.sigma, n);
  throw std::invalid_argument("unknown family '" + family + "'");
}

py::dict result_to_dict(const CheckResult& r) {
  py::dict d;
  d["suite"] = r.suite;
  d["id"] = r.id;
  d["pass"] = r.pass;
  d["mode"] = r.exact ? "exact" : "numeric";
  d["seconds"] = r.seconds;
  d["detail"] = r.detail;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact umbral/operator calculus for the lattice Segal-Bargmann transform: "
      "orthogonal polynomial families, Stirling/moment oracles, operator identities, "
      "and the summation-formula transform with certified tails.";
  m.attr("__version__") = "0.1.0";

  // ----- coefficient tables ------------------------------------------------
  m.def(
      "coeffs",
      [](const std::string& family, int n, py::object alpha, py::object sigma) {
        if (n < 0 || n > 64) throw std::invalid_argument("degree must lie in 0..64");
        return poly_to_list(family_poly(family, make_params(alpha, sigma), n));
      },
      py::arg("family"), py::arg("n"), py::arg("alpha") = py::str("1"),
      py::arg("sigma") = py::str("1"),
      "Coefficients (constant term first) of the degree-n member of a family: "
      "charlier | hermite | touchard | factorial | touchard-scaled | hermite-tilde.");

  m.def(
      "coeff_table",
      [](const std::string& family, int degree, py::object alpha, py::object sigma) {
        if (degree < 0 || degree > 64) throw std::invalid_argument("degree must lie in 0..64");
        ModelParams params = make_params(alpha, sigma);
        py::list rows;
        for (int n = 0; n <= degree; ++n)
          rows.append(poly_to_list(family_poly(family, params, n), degree));
        return rows;
      },
      py::arg("family"), py::arg("degree"), py::arg("alpha") = py::str("1"),
      py::arg("sigma") = py::str("1"),
      "Rectangular table of rows 0..degree, each padded to degree+1 coefficients.");

  m.def(
      "eval_poly",
      [](const py::sequence& coeffs, py::object x) {
        return to_fraction(list_to_poly(coeffs).eval(to_rational(x)));
      },
      py::arg("coeffs"), py::arg("x"), "Exact evaluation of a rational-coefficient polynomial.");

  // ----- combinatorial oracles ---------------------------------------------
  m.def(
      "stirling_first", [](int n, int k) { return big_to_int(stirling_first(n, k)); },
      py::arg("n"), py::arg("k"), "Signed Stirling number of the first kind s(n, k).");
  m.def(
      "stirling_second", [](int n, int k) { return big_to_int(stirling_second(n, k)); },
      py::arg("n"), py::arg("k"), "Stirling number of the second kind S(n, k).");
  m.def(
      "poisson_moment",
      [](int order, py::object alpha, py::object sigma) {
        return to_fraction(poisson_type_moment(order, make_params(alpha, sigma)));
      },
      py::arg("order"), py::arg("alpha"), py::arg("sigma"),
      "Raw moment of the lattice measure, exact.");
  m.def(
      "gaussian_moment",
      [](int order, py::object sigma) {
        return to_fraction(gaussian_moment(order, to_rational(sigma)));
      },
      py::arg("order"), py::arg("sigma"), "Centered Gaussian moment, exact.");
  m.def(
      "measure_weight",
      [](int n, py::object alpha, py::object sigma) {
        return measure_weight(make_params(alpha, sigma), n);
      },
      py::arg("n"), py::arg("alpha"), py::arg("sigma"),
      "Numeric weight of the atom at alpha*n.");

  // ----- inner products -----------------------------------------------------
  m.def(
      "inner_product",
      [](const py::sequence& p, const py::sequence& q, py::object alpha, py::object sigma) {
        return to_fraction(
            inner_product_L2pi(list_to_poly(p), list_to_poly(q), make_params(alpha, sigma)));
      },
      py::arg("p"), py::arg("q"), py::arg("alpha"), py::arg("sigma"),
      "Exact inner product of two polynomials against the lattice measure.");
  m.def(
      "gaussian_inner_product",
      [](const py::sequence& p, const py::sequence& q, py::object sigma) {
        return to_fraction(
            inner_product_gaussian(list_to_poly(p), list_to_poly(q), to_rational(sigma)));
      },
      py::arg("p"), py::arg("q"), py::arg("sigma"),
      "Exact inner product of two polynomials against the centered Gaussian.");
  m.def(
      "bargmann_inner",
      [](const std::vector<Complex>& f, const std::vector<Complex>& g, py::object sigma) {
        Rational s = to_rational(sigma);
        return bargmann_inner(BargmannElement{f, s}, BargmannElement{g, s});
      },
      py::arg("f"), py::arg("g"), py::arg("sigma"),
      "Weighted coefficient pairing sum(f_n * conj(g_n) * n! * sigma^n).");
  m.def(
      "nu_sigma_inner",
      [](int m, int n, py::object sigma, int nodes) {
        return nu_sigma_monomial_inner(m, n, to_rational(sigma), nodes);
      },
      py::arg("m"), py::arg("n"), py::arg("sigma"), py::arg("nodes") = 32,
      "Monomial inner product under the rotation-invariant plane measure, by "
      "polar quadrature.");

  // ----- the transform ------------------------------------------------------
  m.def(
      "transform_poly",
      [](const py::sequence& p, py::object alpha, py::object sigma) {
        return poly_to_list(transform_poly(list_to_poly(p), make_params(alpha, sigma)));
      },
      py::arg("p"), py::arg("alpha"), py::arg("sigma"),
      "Exact polynomial image under the transform (orthogonal family -> monomials).");
  m.def(
      "transform_poly_inverse",
      [](const py::sequence& p, py::object alpha, py::object sigma) {
        return poly_to_list(transform_poly_inverse(list_to_poly(p), make_params(alpha, sigma)));
      },
      py::arg("p"), py::arg("alpha"), py::arg("sigma"),
      "Exact preimage under the transform (monomials -> orthogonal family).");
  m.def(
      "gaussian_transform_poly",
      [](const py::sequence& p, py::object sigma) {
        return poly_to_list(gaussian_transform_poly(list_to_poly(p), to_rational(sigma)));
      },
      py::arg("p"), py::arg("sigma"),
      "Gaussian shift-average of a polynomial (continuum analogue), exact.");
  m.def(
      "transform_apply",
      [](const std::vector<Complex>& values, py::object alpha, py::object sigma, Complex z) {
        GridFunction f{values};
        TransformValue v = transform_apply(f, make_params(alpha, sigma), z);
        py::dict out;
        out["value"] = v.value;
        out["tail_bound"] = v.tail_bound;
        out["terms"] = v.terms;
        return out;
      },
      py::arg("values"), py::arg("alpha"), py::arg("sigma"), py::arg("z"),
      "Summation-formula transform of a finite grid function; entry n holds f(alpha*n).");
  m.def(
      "coherent_charlier",
      [](py::object alpha, py::object sigma, int n, Complex z) {
        return coherent_state_charlier(make_params(alpha, sigma), n, z);
      },
      py::arg("alpha"), py::arg("sigma"), py::arg("n"), py::arg("z"),
      "Closed-form coherent state evaluated at the lattice atom alpha*n.");
  m.def(
      "coherent_hermite",
      [](py::object sigma, Complex x, Complex z) {
        return coherent_state_hermite(to_rational(sigma), x, z);
      },
      py::arg("sigma"), py::arg("x"), py::arg("z"),
      "Closed-form Gaussian coherent state exp(-(z^2 - 2xz)/(2 sigma)).");
  m.def(
      "char_function",
      [](py::object alpha, py::object sigma, double y) {
        CharFnValue v = centered_char_function(make_params(alpha, sigma), y);
        return py::make_tuple(v.value, v.gaussian);
      },
      py::arg("alpha"), py::arg("sigma"), py::arg("y"),
      "(centered characteristic function at y, Gaussian comparison value).");

  // ----- verification -------------------------------------------------------
  m.def("verify_suites", [] { return verify_suites(); },
        "Names of the verification suites.");
  m.def(
      "verify",
      [](const std::string& suite, py::object alpha, py::object sigma, unsigned seed, int cap,
         const std::map<std::string, double>& tolerances) {
        VerifyConfig config = VerifyConfig::standard();
        if (!alpha.is_none() || !sigma.is_none()) {
          Rational a = alpha.is_none() ? Rational(1) : to_rational(alpha);
          Rational s = sigma.is_none() ? Rational(1) : to_rational(sigma);
          config.param_sets = {ModelParams(a, s)};
        }
        config.seed = seed;
        if (cap < 0 || cap > 64) throw std::invalid_argument("cap must lie in 0..64");
        config.katriel_cap = cap;
        for (const auto& [name, value] : tolerances) config.tolerances[name] = value;
        py::list out;
        for (const CheckResult& r : run_suite(suite, config)) out.append(result_to_dict(r));
        return out;
      },
      py::arg("suite") = "all", py::arg("alpha") = py::none(), py::arg("sigma") = py::none(),
      py::arg("seed") = 12345U, py::arg("cap") = 24,
      py::arg("tolerances") = std::map<std::string, double>{},
      "Run a verification suite; returns one dict per check.");
  m.def(
      "katriel_ok",
      [](py::object alpha, py::object sigma, int n, int cap) {
        OpCheckReport r = katriel_check(make_params(alpha, sigma), n, cap);
        return py::make_tuple(r.pass, r.detail);
      },
      py::arg("alpha"), py::arg("sigma"), py::arg("n"), py::arg("cap") = 24,
      "Normal-ordering identity for (UV)^n at the given operator cap.");
}
