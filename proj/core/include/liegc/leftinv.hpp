#pragma once

#include <functional>
#include <string>
#include <vector>

#include "liegc/certificate.hpp"
#include "liegc/gcs.hpp"
#include "liegc/real_form.hpp"

namespace liegc {

struct RealityViolated : std::runtime_error {
  RealityViolated() : std::runtime_error("connection does not preserve the real form") {}
};
struct NotAlmostComplex : std::runtime_error {
  NotAlmostComplex() : std::runtime_error("endomorphism does not square to -Id") {}
};

/// Real Lie algebra presented by a bracket table over a fixed basis.
/// Coordinates may be complex scalars; the table itself is real, and
/// brackets extend complex-bilinearly.
struct RealLieAlgebra {
  std::size_t n = 0;
  std::vector<std::vector<SMatrix>> table;  // table[i][j] = [e_i, e_j]
  std::vector<std::string> labels;

  static RealLieAlgebra abelian(std::size_t n);
  static RealLieAlgebra from_table(std::size_t n, std::vector<std::vector<SMatrix>> t);
  static RealLieAlgebra from_real_form(const RealForm& f);

  SMatrix bracket(const SMatrix& x, const SMatrix& y) const;
  void verify() const;  // antisymmetry, Jacobi, reality — throws on failure
};

/// Left-invariant connection: the bilinear map (X,Y) -> D_X Y on the
/// algebra, tabulated over the basis.  Complex-bilinear extension is
/// implicit in apply().
struct Connection {
  std::vector<std::vector<SMatrix>> D;  // D[i][j] = D_{e_i} e_j

  static Connection zero(std::size_t n);
  SMatrix apply(const SMatrix& x, const SMatrix& y) const;
  bool is_real() const;
};

SMatrix curvature(const RealLieAlgebra& L, const Connection& D, const SMatrix& x,
                  const SMatrix& y, const SMatrix& z);
SMatrix torsion(const RealLieAlgebra& L, const Connection& D, const SMatrix& x, const SMatrix& y);

/// Connection tabulated over the Weyl basis of the complexification.
struct WeylConnection {
  std::vector<std::vector<SMatrix>> D;
  SMatrix apply(const WeylAlgebra& w, const SMatrix& x, const SMatrix& y) const;
};

SMatrix weyl_curvature(const WeylAlgebra& w, const WeylConnection& D, const SMatrix& x,
                       const SMatrix& y, const SMatrix& z);

/// The preferred flat connection D0 of the real form, in Weyl coordinates:
///   D_{E_a}(E_b) = -a_a [E_{sa}, E_b],  D_H(E_b) = (sb)(H) E_b,
///   D_{E_b}(H) = (sb)(H) a_b E_{sb},    D_H(H') = 0.
WeylConnection d0_weyl(const RealForm& f);
WeylConnection dc_weyl(const RealForm& f);  // D_X Y = [X, Y]
Connection d0_connection(const RealForm& f);  // D0 on the real basis; RealityViolated
Connection dc_connection(const RealLieAlgebra& L);
Connection to_real_connection(const RealForm& f, const WeylConnection& D);
WeylConnection to_weyl_connection(const RealForm& f, const Connection& D);

struct LiftedStructure {
  GCStructure J_double;  // endomorphism of g ⊕ g*
};

LiftedStructure lift_structure(const HoloData& h, const Connection& D);

/// Integrability of the lifted almost complex structure, checked through
/// the three conditions on (E, alpha, D): involutivity of E, invariance
/// D_E tau(E) ⊆ tau(E) with flat restricted curvature, and the alpha
/// equation.  One clause per condition, witnesses on failure.
Certificate mainthm_check(const RealLieAlgebra& L, const HoloData& h, const Connection& D);

/// Independent brute-force oracle: enumerates basic and pure sections of
/// the holomorphic bundle, computes their brackets through the horizontal /
/// vertical calculus (with the curvature term evaluated on every dual
/// basis covector) and tests fiber membership of every result.
Certificate involutivity_oracle(const RealLieAlgebra& L, const HoloData& h, const Connection& D);

/// Courant integrability of a left-invariant skew structure:
/// involutivity of E and d_E alpha = 0.
Certificate courant_check(const RealLieAlgebra& L, const HoloData& h);

struct NonIntegrabilityWitness {
  SMatrix u, v;     // sections of L with g_can(u,v) != 0
  Scalar pairing;
  std::string reason;
};

/// A symmetric structure is never Courant integrable; this returns the
/// isotropy violation witnessing it.
NonIntegrabilityWitness non_integrability_witness(const RealLieAlgebra& L, const HoloData& h);

/// Conditions for J^{±} built from an almost complex structure J and D:
/// (a) J integrable (Nijenhuis), (b) D_X(J) = ±J D_{JX}(J),
/// (c) the curvature combination (R_{X,Y} - R_{JX,JY})Z ± (R_{JX,Y} + R_{X,JY})JZ = 0.
Certificate special_pm_check(const RealLieAlgebra& L, const SMatrix& Jv, const Connection& D,
                             int sign);

/// Flatness of D plus the identity
/// d w(X,Y,Z) - (D_Z w)(X,Y) - w(T_Z X, Y) - w(X, T_Z Y) = 0,
/// with the general two-sided identity re-checked on the same data.
Certificate omega_check(const RealLieAlgebra& L, const SMatrix& omega, const Connection& D);

/// Both sides of the general 2-form identity, for self-tests.
std::pair<Scalar, Scalar> simple_ec_sides(const RealLieAlgebra& L, const SMatrix& beta,
                                          const Connection& D, const SMatrix& x, const SMatrix& y,
                                          const SMatrix& z);

}  // namespace liegc
