#pragma once

#include <optional>

#include "liegc/matrix.hpp"

namespace liegc {

struct GCSError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NotComplexStructure : GCSError {
  NotComplexStructure() : GCSError("endomorphism does not square to -Id") {}
};
struct Degenerate : GCSError {
  Degenerate() : GCSError("bilinear form is degenerate") {}
};
struct NotSkew : GCSError {
  NotSkew() : GCSError("2-form is not skew-symmetric") {}
};
struct NotEigenSplit : GCSError {
  NotEigenSplit() : GCSError("J^2 != -Id, no eigenspace splitting") {}
};
struct AlphaIllDefined : GCSError {
  AlphaIllDefined() : GCSError("structure is neither symmetric nor skew; alpha ill-defined") {}
};
struct SumDeficient : GCSError {
  SumDeficient() : GCSError("E + conj(E) is a proper subspace") {}
};
struct DegenerateImAlpha : GCSError {
  explicit DegenerateImAlpha(SMatrix witness_section)
      : GCSError("Im(alpha|Delta) is degenerate"), witness(std::move(witness_section)) {}
  SMatrix witness;  // section in L ∩ conj(L)
};
struct TauSymmetryViolated : GCSError {
  TauSymmetryViolated() : GCSError("alpha violates the tau-skew condition") {}
};
struct WrongKind : GCSError {
  WrongKind() : GCSError("operation requires the other kind of structure") {}
};

enum class Kind { symmetric, skew };

/// V ⊕ V* with the canonical neutral pairing
/// g_can(X+xi, Y+eta) = (xi(Y) + eta(X)) / 2.
struct DoubleSpace {
  std::size_t n = 0;
  explicit DoubleSpace(std::size_t dim_v) : n(dim_v) {}
  std::size_t dim() const { return 2 * n; }
  SMatrix gcan() const;
};

/// Endomorphism J of V ⊕ V* with J^2 = -Id, symmetric or skew with respect
/// to g_can.  Entries are real scalars.
struct GCStructure {
  DoubleSpace space{0};
  SMatrix J;  // 2n x 2n
  Kind kind = Kind::symmetric;

  static GCStructure make(DoubleSpace v, SMatrix j, Kind kind);  // validates
  static GCStructure make_unchecked(DoubleSpace v, SMatrix j, Kind kind);
};

/// Holomorphic data (E, alpha): E ⊆ V^C with E + conj(E) = V^C and a form
/// alpha on E ⊗ tau(E), tau = conjugation (symmetric) or identity (skew).
/// alpha is stored against the basis of E and the tau-image of that basis:
/// alpha_{pq} = alpha(e_p, tau(e_q)).
struct HoloData {
  DoubleSpace space{0};
  Kind kind = Kind::symmetric;
  SMatrix E;      // n x k columns
  SMatrix alpha;  // k x k
  SMatrix Delta;  // real basis of the real points of E ∩ conj(E)

  // checks E + conj(E) = V^C, the tau-skew condition and Im(alpha|Delta)
  // non-degenerate; fills Delta.  SumDeficient / TauSymmetryViolated /
  // DegenerateImAlpha on failure.
  static HoloData make(DoubleSpace v, Kind kind, SMatrix E, SMatrix alpha);
  static HoloData make_unchecked(DoubleSpace v, Kind kind, SMatrix E, SMatrix alpha);

  SMatrix tau_E() const { return kind == Kind::symmetric ? E.conjugate() : E; }
  // Im(alpha) restricted to Delta, as a matrix over the Delta basis
  SMatrix g_delta() const;
  SMatrix re_alpha_delta() const;
};

struct BFieldNormalForm {
  SMatrix B;        // real 2-form on V (n x n skew)
  SMatrix Delta;    // basis of Delta
  SMatrix g_delta;  // Im(alpha) on the Delta basis
  SMatrix N;        // complement basis
  SMatrix JN;       // complex structure on N (matrix over the N basis)
  GCStructure normal_form;  // the direct sum structure on V ⊕ V*
};

GCStructure from_complex_structure(const SMatrix& J_V);
GCStructure from_metric(const SMatrix& g);
GCStructure bfield_act(const SMatrix& B, const GCStructure& j);
SMatrix bfield_shear(const SMatrix& B);  // exp(B) on V ⊕ V*, X+xi -> X + i_X B + xi

HoloData holo_space_of(const GCStructure& j);
GCStructure reconstruct_gcs(const HoloData& h);
BFieldNormalForm bfield_decompose(const GCStructure& j);

/// +i eigenspace of J^C as a column basis (used by tests as an oracle).
SMatrix plus_i_eigenspace(const SMatrix& J);
/// Real endomorphism with prescribed +i eigenspace L (L ∩ conj(L) = 0).
SMatrix endo_from_eigenspace(const SMatrix& L);

/// Column basis of L^tau(E, alpha) built from canonical and pure sections.
SMatrix holo_space_basis(const HoloData& h);
/// Membership of X + xi in the fiber of L^tau(E, alpha).
bool in_L_fiber(const HoloData& h, const SMatrix& X, const SMatrix& xi);

}  // namespace liegc
