#pragma once

#include <map>
#include <optional>

#include "liegc/certificate.hpp"
#include "liegc/leftinv.hpp"
#include "liegc/real_form.hpp"

namespace liegc {

struct ParamConstraintViolated : std::runtime_error {
  explicit ParamConstraintViolated(const std::string& eq)
      : std::runtime_error("parameter constraint violated: " + eq), equation(eq) {}
  std::string equation;
};
struct PreconditionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotInner : std::runtime_error {
  NotInner() : std::runtime_error("real form is not of inner type") {}
};
struct NotPositiveSystem : std::runtime_error {
  NotPositiveSystem() : std::runtime_error("R0 is not a positive root system") {}
};
struct CartanSumDeficient : std::runtime_error {
  CartanSumDeficient() : std::runtime_error("h_k + conj(h_k) is a proper subspace of h") {}
};
struct DegenerateRestriction : std::runtime_error {
  DegenerateRestriction() : std::runtime_error("Im(epsilon) degenerate on the Cartan part") {}
};

/// Parameters of the structured form
///   eps = eps0 + sum mu_a (a ⊗ w_{sa} + a_a w_a ⊗ sa)
///       - sum a_a mu_{a+b} N_{sa,sb} w_a ⊗ w_{sb}
///       + sum nu_g w_g ⊗ w_{-sg}.
struct EpsilonParams {
  SMatrix epsilon0;            // over the h_k basis and its conjugates
  std::map<int, Scalar> mu;    // root index in R0 -> real constant
  std::map<int, Scalar> nu;    // root index in R0^sym -> real constant
};

struct AdmissibleTriple {
  const RealForm* form = nullptr;
  Subalgebra k;
  WeylConnection D;
  SMatrix epsilon;  // epsilon(b_p, sigma(b_q)) over the k basis
  Kind kind = Kind::symmetric;
};

/// Validates the parameter constraints (reality, ad-nu, the three-term sum
/// rule, skew-Hermitian eps0, e3) and assembles the epsilon matrix.  With
/// bypass_validation the matrix is built from raw parameters so checkers
/// can re-derive the violations as clause failures.
SMatrix build_epsilon(const RealForm& f, const Subalgebra& k, const EpsilonParams& p,
                      bool bypass_validation = false);

/// nu_a = a_a * height(a) over the deterministic simple system of R0^sym.
std::map<int, Scalar> nu_from_heights(const RealForm& f, const std::vector<int>& r0sym);

Certificate check_admissible(const AdmissibleTriple& t);

/// Hypothesis (a+b)|_{h_k} != 0, conditions i)-iii), then the whole-triple
/// check; the certificate records the equivalence between the two routes.
Certificate check_mainapplic(const RealForm& f, const Subalgebra& k, const EpsilonParams& p);

/// The real points of k ∩ conj(k), as sigma-fixed Weyl-coordinate columns.
SMatrix triple_delta(const RealForm& f, const Subalgebra& k);
/// Im(epsilon) on a given sigma-fixed basis of Delta.
SMatrix g_delta_direct(const Subalgebra& k, const SMatrix& epsilon, const SMatrix& delta);

struct GDeltaBasis {
  SMatrix c;                    // basis of Ann(R0 ∩ sR0) inside h_k ∩ h_g
  SMatrix f_plus, f_minus;      // maximal independent F^± families
  std::vector<int> f_plus_roots, f_minus_roots;
  std::vector<int> ab_roots;    // orbit representatives carrying A_a, B_a
  SMatrix full;                 // [c | F+ | F- | A.. | B..] columns
  int p = 0, q = 0, s = 0;
};

struct GDeltaResult {
  GDeltaBasis basis;
  SMatrix formula;   // entries from the structured formulas
  SMatrix direct;    // Im(epsilon|Delta) on the same basis
  bool matches = false;
  bool nondegenerate = false;
  bool span_eq = false;  // p == q
};

GDeltaResult gdelta_lemma(const RealForm& f, const Subalgebra& k, const SMatrix& epsilon,
                          const EpsilonParams& p);

struct OuterEpsilon0 {
  bool ok = false;
  std::string failure;  // "not transverse" etc. when !ok
  SMatrix epsilon0;
  std::optional<GDeltaResult> certificate;
};

/// For sigma-positive R0: tests transversality of S = <H_a : a in R0^sym>
/// to its conjugate and, when transverse, produces eps0 with eps0(S,.) =
/// eps0(.,conj S) = 0 and Im(eps0) positive on the real Cartan part.
OuterEpsilon0 outer_epsilon0(const RealForm& f, const Subalgebra& k);

/// Inner-type recipe: k = h_k + g(R+), D0, eps = eps0 + mu-terms.  The
/// returned triple has been re-verified by check_admissible.
AdmissibleTriple inner_admissible(const RealForm& f, const SMatrix& h_k, std::vector<int> rplus,
                                  const SMatrix& eps0, const std::map<int, Scalar>& mu);

/// The left-invariant holomorphic data of a triple, in real-basis
/// coordinates, suitable for mainthm_check / involutivity_oracle.
HoloData holo_from_triple(const RealForm& f, const Subalgebra& k, const SMatrix& epsilon,
                          Kind kind, bool validate = true);

}  // namespace liegc
