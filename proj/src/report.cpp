// Copyright 2026 The sepbasis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sepbasis/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <utility>

#include "sepbasis/covariant.hpp"
#include "sepbasis/diff_form.hpp"
#include "sepbasis/error.hpp"
#include "sepbasis/families.hpp"
#include "sepbasis/parse.hpp"

namespace sepbasis {
namespace {

using nlohmann::ordered_json;

constexpr int kMinDim = 2;
constexpr int kMaxDim = 33;
constexpr int kGenCount = 12;  // P_0 .. P_11 in cross-method checks

void require_dim(int dim, int max_dim = kMaxDim) {
  if (dim < kMinDim || dim > max_dim) {
    fail(ErrorKind::Domain, "dimension must be between " + std::to_string(kMinDim) + " and " +
                                std::to_string(max_dim) + ", got " + std::to_string(dim));
  }
}

ordered_json poly_json(const Polynomial& p) {
  ordered_json o;
  o["str"] = p.str();
  ordered_json coeffs = ordered_json::array();
  for (int k = 0; k <= std::max(p.degree(), 0); ++k) coeffs.push_back(p.coeff(k).str());
  o["coeffs"] = coeffs;
  return o;
}

ordered_json matrix_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

ordered_json rationals_json(const std::vector<Rational>& v) {
  ordered_json a = ordered_json::array();
  for (const auto& r : v) a.push_back(r.str());
  return a;
}

EigenSpec family_eigs(const FamilySpec& f, int count) {
  EigenSpec e;
  for (int n = 0; n < count; ++n) e.values.push_back(f.eigenvalue(n));
  return e;
}

EigenSpec pearson_eigs(const PearsonPair& pair, int count) {
  EigenSpec e;
  for (int n = 0; n < count; ++n) e.values.push_back(pearson_eigenvalue(pair, n));
  return e;
}

// Derivation of the classical family's operator: run at the requested
// dimension and at an internal dimension M >= 4 large enough to pin the
// unique order-2 form (a 2x2 matrix alone cannot separate x*D^2 from
// lower-order terms, but the restriction check ties the small matrix to
// the form extracted at M).
struct Derivation {
  LinearMap derived_big;
  LinearMap derived;
  DiffForm form;
};

Derivation derive_classical(const FamilySpec& f, int dim) {
  const int big = std::max(dim, 4);
  LinearMap derived_big = derive_operator(f.transform(big), family_eigs(f, big));
  LinearMap derived = derive_operator(f.transform(dim), family_eigs(f, dim));
  DiffForm form = DiffForm::from_map(derived_big, 2);
  return {std::move(derived_big), std::move(derived), std::move(form)};
}

std::vector<Polynomial> rodrigues_images(const PearsonPair& pair, int count) {
  std::vector<Polynomial> h;
  h.reserve(count);
  for (int n = 0; n < count; ++n) {
    h.push_back(rodrigues_general(pair, n));
    if (h.back().degree() != n) {
      fail(ErrorKind::Domain,
           "degenerate pair: the Rodrigues polynomial at index " + std::to_string(n) +
               " has degree " + std::to_string(h.back().degree()) + ", expected " +
               std::to_string(n) + "; the pair does not generate a graded family");
    }
  }
  return h;
}

Derivation derive_custom(const PearsonPair& pair, int dim, std::vector<Polynomial>* images_out) {
  const int big = std::max(dim, 4);
  std::vector<Polynomial> h = rodrigues_images(pair, big);
  auto t_big = SeparatedTransform::from_images(monomial_frame(big), monomial_frame(big), h);
  LinearMap derived_big = derive_operator(t_big, pearson_eigs(pair, big));
  std::vector<Polynomial> h_dim(h.begin(), h.begin() + dim);
  auto t_dim = SeparatedTransform::from_images(monomial_frame(dim), monomial_frame(dim), h_dim);
  LinearMap derived = derive_operator(t_dim, pearson_eigs(pair, dim));
  if (images_out) *images_out = std::move(h);
  DiffForm form = DiffForm::from_map(derived_big, 2);
  return {std::move(derived_big), std::move(derived), std::move(form)};
}

DiffForm expected_form(const FamilySpec& f) {
  DiffForm p = pearson_operator(f.pearson());
  return f.pearson_sign() < 0 ? p.negated() : p;
}

// --- deterministic small-integer sampling -------------------------------

// Raw modulo on mt19937_64 keeps the stream identical across standard
// library implementations (uniform_int_distribution is not portable).
long draw(std::mt19937_64& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

long draw_nonzero(std::mt19937_64& rng, long lo, long hi) {
  for (;;) {
    long v = draw(rng, lo, hi);
    if (v != 0) return v;
  }
}

Polynomial random_combo(std::mt19937_64& rng, const BasisFamily& frame, int members,
                        std::vector<Rational>* coords_out) {
  std::vector<Rational> coords(frame.dim(), Rational(0));
  for (int i = 0; i < members; ++i) coords[i] = Rational(draw(rng, -4, 4));
  if (coords_out) *coords_out = coords;
  return frame.combine(coords);
}

// --- text rendering ------------------------------------------------------

bool is_primitive(const ordered_json& v) {
  return v.is_string() || v.is_number() || v.is_boolean() || v.is_null();
}

std::string primitive_str(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_primitive(const ordered_json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const ordered_json& e) { return is_primitive(e); });
}

std::string inline_array(const ordered_json& arr) {
  std::string s = "[";
  bool first = true;
  for (const auto& e : arr) {
    if (!first) s += ", ";
    s += primitive_str(e);
    first = false;
  }
  return s + "]";
}

void render_text(std::ostream& os, const ordered_json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    for (const auto& [key, val] : v.items()) {
      if (is_primitive(val)) {
        os << pad << key << ": " << primitive_str(val) << "\n";
      } else if (val.is_array() && all_primitive(val)) {
        os << pad << key << ": " << inline_array(val) << "\n";
      } else {
        os << pad << key << ":\n";
        render_text(os, val, indent + 2);
      }
    }
  } else if (v.is_array()) {
    for (const auto& el : v) {
      if (is_primitive(el)) {
        os << pad << primitive_str(el) << "\n";
      } else if (el.is_array() && all_primitive(el)) {
        os << pad << inline_array(el) << "\n";
      } else {
        os << pad << "-\n";
        render_text(os, el, indent + 2);
      }
    }
  }
}

}  // namespace

RunReport::RunReport(std::string command)
    : command_(std::move(command)),
      inputs_(ordered_json::object()),
      results_(ordered_json::object()) {}

void RunReport::set_input(const std::string& key, const ordered_json& value) {
  inputs_[key] = value;
}

void RunReport::set_result(const std::string& key, const ordered_json& value) {
  results_[key] = value;
}

void RunReport::add_check(const std::string& name, bool pass, const std::string& detail) {
  checks_.push_back({name, pass, detail});
}

bool RunReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const CheckResult& c) { return c.pass; });
}

std::string RunReport::text() const {
  std::ostringstream os;
  os << "command: " << command_ << "\n";
  if (!inputs_.empty()) {
    os << "inputs:\n";
    render_text(os, inputs_, 2);
  }
  if (!results_.empty()) {
    os << "results:\n";
    render_text(os, results_, 2);
  }
  int passed = 0;
  if (!checks_.empty()) {
    os << "checks:\n";
    for (const auto& c : checks_) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name << ": " << c.detail << "\n";
      if (c.pass) ++passed;
    }
  }
  os << checks_.size() << " checks, " << passed << " passed, " << (checks_.size() - passed)
     << " failed\n";
  return os.str();
}

std::string RunReport::json_str() const {
  ordered_json j;
  j["command"] = command_;
  j["inputs"] = inputs_;
  j["results"] = results_;
  ordered_json checks = ordered_json::array();
  for (const auto& c : checks_) {
    ordered_json o;
    o["name"] = c.name;
    o["status"] = c.pass ? "pass" : "fail";
    o["detail"] = c.detail;
    checks.push_back(o);
  }
  j["checks"] = checks;
  j["exit_code"] = exit_code();
  return j.dump(2);
}

// --- derive ---------------------------------------------------------------

RunReport run_derive(const std::string& family, int dim) {
  require_dim(dim);
  const FamilySpec& f = FamilySpec::get(family);
  RunReport r("derive");
  r.set_input("family", f.name());
  r.set_input("dim", dim);

  Derivation d = derive_classical(f, dim);
  const DiffForm expected = expected_form(f);
  const std::vector<Polynomial> polys = gen_family(f, dim, GenMethod::Rodrigues);

  ordered_json coeffs = ordered_json::array();
  for (int k = 0; k <= d.form.order(); ++k) coeffs.push_back(d.form.coeff(k).str());
  std::vector<Rational> eigs;
  for (int n = 0; n < dim; ++n) eigs.push_back(f.eigenvalue(n));

  r.set_result("form", d.form.str_expanded());
  r.set_result("form_grouped", d.form.str_grouped());
  r.set_result("order", d.form.order());
  r.set_result("coefficients", coeffs);
  r.set_result("pearson_form", pearson_operator(f.pearson()).str_grouped());
  r.set_result("pearson_sign", f.pearson_sign());
  r.set_result("eigenvalues", rationals_json(eigs));
  r.set_result("matrix", matrix_json(d.derived.matrix()));

  r.add_check("derived_form_matches_pearson", d.form == expected,
              "the extracted form equals " + std::string(f.pearson_sign() < 0 ? "-(B*D^2 + A*D)" : "B*D^2 + A*D") +
                  " for A = " + f.pearson().A.str() + ", B = " + f.pearson().B.str());
  r.add_check("subspace_restriction",
              d.derived.matrix() == d.derived_big.matrix().leading_block(dim),
              "the dim-" + std::to_string(dim) + " derivation is the leading block of the dim-" +
                  std::to_string(std::max(dim, 4)) + " derivation");
  r.add_check("form_compiles_to_matrix", d.form.compile(monomial_frame(dim)) == d.derived,
              "compiling the extracted form reproduces the derived matrix");
  bool eigen_ok = true;
  for (int n = 0; n < dim; ++n) {
    if (d.form.apply(polys[n]) != polys[n].scaled(f.eigenvalue(n))) eigen_ok = false;
  }
  r.add_check("eigen_relation", eigen_ok,
              "the form sends P_n to lambda'_n P_n for every n < " + std::to_string(dim));

  if (f.name() == "hermite") {
    OperatorExpr xD = OperatorExpr::X() * OperatorExpr::D();
    LinearMap xDm = xD.compile(monomial_frame(dim), 0);
    LinearMap O = f.op(0, dim - 1).compile(monomial_frame(dim), 0);
    r.add_check("exponential_conjugation", similarity_conjugate(O, xDm) == d.derived,
                "conjugating x*D by the compiled exponential transform reproduces the derived "
                "matrix at dim " + std::to_string(dim));
  }
  if (f.name() == "legendre") {
    SeparatedTransform t2 = f.transform(2);
    Polynomial back = t2.combined_inverse().apply(Polynomial::x());
    r.add_check("source_frame_identity", back == f.pearson().B,
                "the inverse transform at dim 2 sends x to " + back.str());
  }
  return r;
}

// --- derive-custom ----------------------------------------------------------

RunReport run_derive_custom(const std::string& a_text, const std::string& b_text, int dim) {
  Polynomial A = parse_poly(a_text);
  Polynomial B = parse_poly(b_text);
  PearsonPair pair = make_pearson(A, B);
  require_dim(dim);

  RunReport r("derive-custom");
  r.set_input("A", pair.A.str());
  r.set_input("B", pair.B.str());
  r.set_input("dim", dim);

  std::vector<Polynomial> h;
  Derivation d = derive_custom(pair, dim, &h);
  const DiffForm expected = pearson_operator(pair);

  std::vector<Rational> eigs;
  for (int n = 0; n < dim; ++n) eigs.push_back(pearson_eigenvalue(pair, n));
  ordered_json polys = ordered_json::array();
  for (int n = 0; n < dim; ++n) {
    ordered_json o;
    o["n"] = n;
    ordered_json pj = poly_json(h[n]);
    o["str"] = pj["str"];
    o["coeffs"] = pj["coeffs"];
    polys.push_back(o);
  }

  r.set_result("form", d.form.str_expanded());
  r.set_result("form_grouped", d.form.str_grouped());
  r.set_result("order", d.form.order());
  r.set_result("eigenvalues", rationals_json(eigs));
  r.set_result("polynomials", polys);
  r.set_result("matrix", matrix_json(d.derived.matrix()));

  r.add_check("derived_form_matches_pearson", d.form == expected,
              "two polynomials suffice: the derived form equals B*D^2 + A*D exactly");
  bool eigen_ok = true;
  for (int n = 0; n < dim; ++n) {
    if (d.form.apply(h[n]) != h[n].scaled(pearson_eigenvalue(pair, n))) eigen_ok = false;
  }
  r.add_check("eigen_relation", eigen_ok,
              "the form sends h_n to (n*a1 + n(n-1)*b2) h_n for every n < " + std::to_string(dim));
  r.add_check("subspace_restriction",
              d.derived.matrix() == d.derived_big.matrix().leading_block(dim),
              "the dim-" + std::to_string(dim) + " derivation is the leading block of the dim-" +
                  std::to_string(std::max(dim, 4)) + " derivation");
  return r;
}

// --- gen ---------------------------------------------------------------------

RunReport run_gen(const std::string& family, int n, const std::string& method) {
  if (n < 0 || n > kMaxDim - 1) {
    fail(ErrorKind::Domain,
         "index must be between 0 and " + std::to_string(kMaxDim - 1) + ", got " + std::to_string(n));
  }
  GenMethod m = parse_method(method);
  const FamilySpec& f = FamilySpec::get(family);
  RunReport r("gen");
  r.set_input("family", f.name());
  r.set_input("n", n);
  r.set_input("method", method_name(m));

  std::vector<Polynomial> polys;
  for (int i = 0; i <= n; ++i) polys.push_back(gen_classical(f, i, m));

  ordered_json arr = ordered_json::array();
  bool degree_ok = true;
  for (int i = 0; i <= n; ++i) {
    ordered_json o;
    o["n"] = i;
    ordered_json pj = poly_json(polys[i]);
    o["str"] = pj["str"];
    o["coeffs"] = pj["coeffs"];
    arr.push_back(o);
    if (polys[i].degree() != i) degree_ok = false;
  }
  r.set_result("polynomials", arr);

  r.add_check("three_method_agreement", true,
              "operator, rodrigues, and raising agree on P_0..P_" + std::to_string(n));
  r.add_check("degree_exactness", degree_ok, "P_n has degree exactly n for every n <= " +
                                                 std::to_string(n));
  return r;
}

// --- umbral -------------------------------------------------------------------

RunReport run_umbral(const std::string& family, const std::string& poly_text, int dim) {
  Polynomial p = parse_poly(poly_text);
  require_dim(dim);
  const FamilySpec& f = FamilySpec::get(family);
  if (p.degree() >= dim) {
    fail(ErrorKind::Domain, "degree overflow: the input has degree " +
                                std::to_string(p.degree()) + "; choose --dim at least " +
                                std::to_string(p.degree() + 1));
  }

  RunReport r("umbral");
  r.set_input("family", f.name());
  r.set_input("poly", p.str());
  r.set_input("dim", dim);

  SeparatedTransform t = f.transform(dim);
  std::vector<Rational> coords;
  try {
    coords = t.source()->coordinates(p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotInSpan) {
      fail(ErrorKind::NotInSpan, "the input is outside the " + f.name() +
                                     " source span (members are powers of " +
                                     f.source_step().str() +
                                     "); it cannot be expanded member by member");
    }
    throw;
  }
  Polynomial image = t.umbral_apply(p);

  r.set_result("input", poly_json(p));
  r.set_result("source_coordinates", rationals_json(coords));
  r.set_result("image", poly_json(image));

  auto family_frame =
      make_family(BasisFamily::custom(f.name(), gen_family(f, dim, GenMethod::Rodrigues)));
  bool preserved = family_frame->coordinates(image) == coords;
  r.add_check("coefficient_preservation", preserved,
              "the image has the same coordinates over P_0..P_" + std::to_string(dim - 1) +
                  " as the input has over the source members");
  return r;
}

// --- verify --------------------------------------------------------------------

namespace {

// Wraps one verification; exceptions become failed checks so a verify run
// always yields a full report.
template <typename Body>
void guarded(RunReport& r, const std::string& name, const std::string& detail, Body&& body) {
  try {
    bool ok = body();
    r.add_check(name, ok, ok ? detail : "violated: " + detail);
  } catch (const Error& e) {
    r.add_check(name, false, std::string("error: ") + e.what());
  }
}

void verify_family(RunReport& r, const FamilySpec& f, int dim) {
  const std::string pre = f.name() + ".";
  const PearsonPair& pair = f.pearson();

  // Generated lists shared across checks; failures inside generation are
  // caught per-check below by regenerating lazily.
  std::vector<Polynomial> by_op, by_rod, by_raise;
  guarded(r, pre + "three_method_agreement",
          "operator, rodrigues, and raising produce identical P_0..P_" +
              std::to_string(kGenCount - 1),
          [&] {
            by_op = gen_family(f, kGenCount, GenMethod::Operator);
            by_rod = gen_family(f, kGenCount, GenMethod::Rodrigues);
            by_raise = gen_family(f, kGenCount, GenMethod::Raising);
            return by_op == by_rod && by_rod == by_raise;
          });
  if (by_rod.empty()) return;  // generation failed; nothing downstream is meaningful
  const std::vector<Polynomial>& P = by_rod;

  guarded(r, pre + "degree_exactness", "P_n has degree exactly n for n < " +
                                           std::to_string(kGenCount),
          [&] {
            for (int n = 0; n < kGenCount; ++n)
              if (P[n].degree() != n) return false;
            return true;
          });

  guarded(r, pre + "scale_law",
          "the unnormalized Rodrigues output h_n equals scale(n) * P_n for n < " +
              std::to_string(kGenCount),
          [&] {
            for (int n = 0; n < kGenCount; ++n)
              if (rodrigues_general(pair, n) != P[n].scaled(f.rodrigues_scale(n))) return false;
            return true;
          });

  {
    Polynomial spot, expect;
    std::string label;
    if (f.name() == "laguerre") {
      spot = P[2];
      expect = parse_poly("1/2*x^2 - 2*x + 1");
      label = "L_2 = (x^2 - 4x + 2)/2";
    } else if (f.name() == "hermite") {
      spot = P[3];
      expect = parse_poly("x^3 - 3*x");
      label = "He_3 = x^3 - 3x";
    } else {
      spot = P[2];
      expect = parse_poly("3/2*x^2 - 1/2");
      label = "P_2 = (3x^2 - 1)/2";
    }
    guarded(r, pre + "spot_value", label, [&] { return spot == expect; });
  }

  guarded(r, pre + "eigen_relation",
          "(B*D^2 + A*D) P_n = (n*a1 + n(n-1)*b2) P_n for n < " + std::to_string(kGenCount),
          [&] {
            DiffForm form = pearson_operator(pair);
            for (int n = 0; n < kGenCount; ++n)
              if (form.apply(P[n]) != P[n].scaled(pearson_eigenvalue(pair, n))) return false;
            return true;
          });

  // Derivation-side checks at the requested dimension.
  SeparatedTransform t = f.transform(dim);
  std::vector<LinearMap> projectors;
  LinearMap derived = LinearMap::identity(monomial_frame(dim));  // placeholder, replaced below
  bool have_derived = false;

  guarded(r, pre + "derived_form_matches_pearson",
          "deriving at dim " + std::to_string(dim) + " recovers the Pearson form exactly",
          [&] {
            Derivation d = derive_classical(f, dim);
            derived = d.derived;
            have_derived = true;
            return d.form == expected_form(f) &&
                   d.derived.matrix() == d.derived_big.matrix().leading_block(dim);
          });

  guarded(r, pre + "projector_completeness",
          "sum of the transformed projectors is the identity at dim " + std::to_string(dim),
          [&] {
            RatMatrix sum = RatMatrix(dim, dim);
            for (int i = 0; i < dim; ++i) {
              projectors.push_back(t.transform_projector(i));
              sum = sum + projectors.back().matrix();
            }
            return sum == RatMatrix::identity(dim);
          });
  if (projectors.size() != static_cast<size_t>(dim)) return;

  guarded(r, pre + "projector_idempotency", "P'_i P'_i = P'_i for every i", [&] {
    for (int i = 0; i < dim; ++i)
      if (projectors[i].matrix() * projectors[i].matrix() != projectors[i].matrix()) return false;
    return true;
  });

  guarded(r, pre + "projector_orthogonality", "P'_i P'_j = 0 for i != j", [&] {
    RatMatrix zero(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        if (projectors[i].matrix() * projectors[j].matrix() != zero) return false;
      }
    return true;
  });

  guarded(r, pre + "projector_eigen_action", "P'_i P_j = delta_ij P_j on the realized images",
          [&] {
            for (int i = 0; i < dim; ++i)
              for (int j = 0; j < dim; ++j) {
                Polynomial expect = (i == j) ? P[j] : Polynomial();
                if (projectors[i].apply(P[j]) != expect) return false;
              }
            return true;
          });

  guarded(r, pre + "projector_form_equivalence",
          "rank-one and similarity constructions of P'_i agree", [&] {
            for (int i = 0; i < dim; ++i) {
              LinearMap sim = compose(
                  t.combined(),
                  compose(LinearMap::coordinate_projector(t.source(), i), t.combined_inverse()));
              if (sim != projectors[i]) return false;
            }
            return true;
          });

  if (have_derived) {
    guarded(r, pre + "covariant_projector_agreement",
            "the product-form spectral projectors of the derived operator equal the transformed "
            "projectors",
            [&] {
              EigenSpec eigs = family_eigs(f, dim);
              for (int l = 0; l < dim; ++l)
                if (frobenius_covariant(derived, eigs, l) != projectors[l]) return false;
              return true;
            });

    guarded(r, pre + "spectral_reconstruction",
            "sum_n lambda'_n P'_n rebuilds the derived operator", [&] {
              return spectral_expand(family_eigs(f, dim), projectors) == derived;
            });
  }

  guarded(r, pre + "moment_vs_coordinate_projector",
          "the moment-functional projector agrees with the transformed coordinate projector for "
          "every index and every probe",
          [&] {
            MomentFunctional mf(f.moments(2 * dim - 1));
            auto fam = make_family(BasisFamily::custom(
                f.name(), std::vector<Polynomial>(P.begin(), P.begin() + dim)));
            std::vector<Polynomial> probes(P.begin(), P.begin() + dim);
            Polynomial combo;
            for (int j = 0; j < dim; ++j) combo = combo + P[j].scaled(Rational(j + 1));
            probes.push_back(combo);
            for (int i = 0; i < dim; ++i)
              for (const auto& F : probes)
                if (moment_projector(mf, fam, i, F) != projectors[i].apply(F)) return false;
            return true;
          });

  guarded(r, pre + "orthogonality_norms",
          "<P_i, P_j> vanishes for i != j and <P_n, P_n> matches the closed-form norm for n < " +
              std::to_string(dim),
          [&] {
            MomentFunctional mf(f.moments(2 * dim - 1));
            for (int i = 0; i < dim; ++i)
              for (int j = 0; j < dim; ++j) {
                Rational expect = (i == j) ? f.norm(i) : Rational(0);
                if (mf.pairing(P[i], P[j]) != expect) return false;
              }
            return true;
          });

  guarded(r, pre + "raising_chain",
          "iterating the conjugated raising step from P_0 = 1 rebuilds P_1..P_" +
              std::to_string(dim - 1),
          [&] {
            const Polynomial step = f.source_step();
            const int s = step.degree();
            Polynomial p = Polynomial::constant(Rational(1));
            for (int n = 1; n < dim; ++n) {
              LinearMap raise = derive_raising(f.transform(n + 1 + s), step);
              p = raise.apply(p);
              if (p != P[n]) return false;
            }
            return true;
          });

  if (f.raising_closed_form()) {
    guarded(r, pre + "raising_closed_form",
            "the derived raising map equals the compiled closed form", [&] {
              LinearMap derived_raise = derive_raising(f.transform(dim), f.source_step());
              LinearMap compiled =
                  f.raising_closed_form()->compile(monomial_frame(dim - 1), 1);
              return derived_raise == compiled;
            });
  }

  guarded(r, pre + "umbral_coefficient_preservation",
          "50 random source combinations of degree <= 7 keep their coordinates under the "
          "transform",
          [&] {
            SeparatedTransform t8 = f.transform(8);
            const BasisFamily& src = *t8.source();
            auto fam = make_family(
                BasisFamily::custom(f.name(), gen_family(f, 8, GenMethod::Rodrigues)));
            // Degree cap 7: all eight members for monomial sources, the
            // first four for the legendre B-power source.
            const int members = (f.source_step().degree() > 1) ? 4 : 8;
            std::mt19937_64 rng(0x5eb0a515u + static_cast<unsigned>(f.name().size()));
            for (int trial = 0; trial < 50; ++trial) {
              std::vector<Rational> coords;
              Polynomial p = random_combo(rng, src, members, &coords);
              if (fam->coordinates(t8.umbral_apply(p)) != coords) return false;
            }
            return true;
          });

  guarded(r, pre + "umbral_linearity",
          "the coefficient transplant is linear: image(a*p + b*q) = a*image(p) + b*image(q)",
          [&] {
            SeparatedTransform t8 = f.transform(8);
            const BasisFamily& src = *t8.source();
            const int members = (f.source_step().degree() > 1) ? 4 : 8;
            std::mt19937_64 rng(0x11bea125u);
            for (int trial = 0; trial < 10; ++trial) {
              Polynomial p = random_combo(rng, src, members, nullptr);
              Polynomial q = random_combo(rng, src, members, nullptr);
              Rational a(draw(rng, -3, 3)), b(draw(rng, -3, 3));
              Polynomial lhs = t8.umbral_apply(p.scaled(a) + q.scaled(b));
              Polynomial rhs = t8.umbral_apply(p).scaled(a) + t8.umbral_apply(q).scaled(b);
              if (lhs != rhs) return false;
            }
            return true;
          });

  if (f.name() == "laguerre") {
    guarded(r, pre + "dim2_involution",
            "the dim-2 combined map is [[1,1],[0,-1]] and squares to the identity", [&] {
              SeparatedTransform t2 = f.transform(2);
              RatMatrix expect(2, 2);
              expect.at(0, 0) = Rational(1);
              expect.at(0, 1) = Rational(1);
              expect.at(1, 1) = Rational(-1);
              return t2.combined().matrix() == expect &&
                     t2.combined().matrix() * t2.combined().matrix() == RatMatrix::identity(2);
            });
    guarded(r, pre + "swapped_projector_form_rejected",
            "the wrong-order composition sends L_1 = 1 - x to -x instead of fixing it, while the "
            "transformed projector fixes it",
            [&] {
              SeparatedTransform t2 = f.transform(2);
              LinearMap wrong = t2.rejected_projector_form(1);
              LinearMap right = t2.transform_projector(1);
              Polynomial L1 = parse_poly("1 - x");
              return wrong.apply(L1) == parse_poly("-x") && wrong.apply(L1) != L1 &&
                     right.apply(L1) == L1;
            });
  }
  if (f.name() == "hermite") {
    guarded(r, pre + "exponential_conjugation",
            "conjugating x*D by the compiled exponential reproduces the derived matrix at every "
            "dim from 2 to 8",
            [&] {
              for (int d2 = 2; d2 <= 8; ++d2) {
                OperatorExpr xD = OperatorExpr::X() * OperatorExpr::D();
                LinearMap xDm = xD.compile(monomial_frame(d2), 0);
                LinearMap O = f.op(0, d2 - 1).compile(monomial_frame(d2), 0);
                LinearMap der = derive_operator(f.transform(d2), family_eigs(f, d2));
                if (similarity_conjugate(O, xDm) != der) return false;
              }
              return true;
            });
  }
  if (f.name() == "legendre") {
    guarded(r, pre + "source_frame_identity",
            "the inverse transform at dim 2 sends x back to x^2 - 1", [&] {
              return f.transform(2).combined_inverse().apply(Polynomial::x()) == pair.B;
            });
  }
}

void verify_shared(RunReport& r, int dim) {
  guarded(r, "shared.stacked_transform_associativity",
          "20 random stacked transforms at dims 2..6: building the second stage on top of the "
          "first equals building it directly, projector by projector",
          [&] {
            std::mt19937_64 rng(0x57ac4a55u);
            for (int trial = 0; trial < 20; ++trial) {
              const int d = static_cast<int>(draw(rng, 2, 6));
              auto mono = monomial_frame(d);
              auto triangular_images = [&](const BasisFamily& base) {
                std::vector<Polynomial> images;
                for (int j = 0; j < d; ++j) {
                  std::vector<Rational> coords(d, Rational(0));
                  for (int i = 0; i < j; ++i) coords[i] = Rational(draw(rng, -3, 3));
                  coords[j] = Rational(draw_nonzero(rng, -3, 3));
                  images.push_back(base.combine(coords));
                }
                return images;
              };
              std::vector<Polynomial> e1 = triangular_images(*mono);
              auto stage1 = SeparatedTransform::from_images(mono, mono, e1);
              auto mid = make_family(BasisFamily::custom("stage1 images", e1));
              std::vector<Polynomial> e2 = triangular_images(*mid);
              auto stage2 = SeparatedTransform::from_images(mid, mono, e2);
              auto direct = SeparatedTransform::from_images(mono, mono, e2);
              LinearMap U = stage2.ambient_map();
              LinearMap Uinv = U.inverse();
              for (int i = 0; i < d; ++i) {
                LinearMap two_step = compose(U, compose(stage1.transform_projector(i), Uinv));
                if (two_step != direct.transform_projector(i)) return false;
              }
            }
            return true;
          });

  guarded(r, "shared.compose_associativity",
          "map composition is associative on 10 random triples", [&] {
            std::mt19937_64 rng(0xa550c147u);
            for (int trial = 0; trial < 10; ++trial) {
              const int d = static_cast<int>(draw(rng, 3, 5));
              auto mono = monomial_frame(d);
              auto rand_map = [&] {
                RatMatrix m(d, d);
                for (int i = 0; i < d; ++i)
                  for (int j = 0; j < d; ++j) m.at(i, j) = Rational(draw(rng, -3, 3));
                return LinearMap(mono, mono, m);
              };
              LinearMap a = rand_map(), b = rand_map(), c = rand_map();
              if (compose(compose(a, b), c) != compose(a, compose(b, c))) return false;
            }
            return true;
          });

  guarded(r, "shared.random_pair_sufficiency",
          "10 random Pearson pairs with degree(A) = 1: the dim-2 and dim-" + std::to_string(dim) +
              " derivations agree and recover B*D^2 + A*D with eigenvalues n*a1 + n(n-1)*b2",
          [&] {
            std::mt19937_64 rng(0x9ea25042u);
            for (int trial = 0; trial < 10; ++trial) {
              PearsonPair pair;
              for (;;) {
                long a1 = draw_nonzero(rng, -3, 3);
                long a0 = draw(rng, -3, 3);
                long b2 = draw(rng, -2, 2);
                long b1 = draw(rng, -2, 2);
                long b0 = draw(rng, -2, 2);
                if (b2 == 0 && b1 == 0 && b0 == 0) continue;
                // Nondegeneracy: a1 + k*b2 must stay nonzero through every
                // index the dim-8 derivation touches.
                bool ok = true;
                for (int k = 1; k <= 2 * dim - 2; ++k)
                  if (a1 + static_cast<long>(k) * b2 == 0) ok = false;
                if (!ok) continue;
                pair = make_pearson(
                    Polynomial::monomial(1, Rational(a1)) + Polynomial::constant(Rational(a0)),
                    Polynomial::monomial(2, Rational(b2)) +
                        Polynomial::monomial(1, Rational(b1)) +
                        Polynomial::constant(Rational(b0)));
                break;
              }
              Derivation d2 = derive_custom(pair, 2, nullptr);
              std::vector<Polynomial> h;
              Derivation d8 = derive_custom(pair, dim, &h);
              if (d2.form != d8.form || d8.form != pearson_operator(pair)) return false;
              for (int n = 0; n < dim; ++n)
                if (d8.form.apply(h[n]) != h[n].scaled(pearson_eigenvalue(pair, n))) return false;
            }
            return true;
          });
}

}  // namespace

RunReport run_verify(const std::string& family_or_all, int dim) {
  // Restriction checks derive two dimensions up, so verify stops at 31.
  require_dim(dim, kMaxDim - 2);
  std::vector<std::string> fams;
  if (family_or_all.empty() || family_or_all == "all") {
    fams = FamilySpec::names();
  } else {
    fams.push_back(FamilySpec::get(family_or_all).name());
  }

  RunReport r("verify");
  r.set_input("family", family_or_all.empty() ? "all" : family_or_all);
  r.set_input("dim", dim);

  ordered_json forms = ordered_json::object();
  for (const auto& name : fams) {
    const FamilySpec& f = FamilySpec::get(name);
    try {
      forms[name] = derive_classical(f, dim).form.str_expanded();
    } catch (const Error& e) {
      forms[name] = std::string("error: ") + e.what();
    }
    verify_family(r, f, dim);
  }
  verify_shared(r, dim);
  r.set_result("forms", forms);

  int passed = 0;
  for (const auto& c : r.checks())
    if (c.pass) ++passed;
  r.set_result("checks_passed", passed);
  r.set_result("checks_total", static_cast<int>(r.checks().size()));
  return r;
}

}  // namespace sepbasis
