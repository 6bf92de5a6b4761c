#pragma once

#include <string>
#include <vector>

#include "liegc/weyl.hpp"

namespace liegc {

struct VoganError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistentExtension : VoganError {
  InconsistentExtension() : VoganError("sign extension inconsistent across decompositions") {}
};
struct NotClosed : std::runtime_error {
  NotClosed() : std::runtime_error("root subset is not closed") {}
};
struct CartanPartTooSmall : std::runtime_error {
  CartanPartTooSmall() : std::runtime_error("H_a outside the Cartan part for a symmetric root") {}
};

struct VoganDiagram {
  CartanType type;
  std::vector<int> theta;    // involution of simple nodes
  std::vector<int> painted;  // theta-fixed nodes carrying a = -1

  static VoganDiagram plain(const CartanType& t);  // theta = id, nothing painted
};

/// Label of a real-basis vector, for certificates and printing.
struct BasisLabel {
  enum Kind { H, A, B } kind;
  int index;  // root index for A/B, ordinal for H
  std::string str() const;
};

/// Real form of a Weyl algebra determined by a Vogan diagram: the constants
/// a_alpha, the antilinear involution sigma, and the real basis
/// {h_g} ∪ {A_a = E_a - a_a E_{sa}} ∪ {B_a = i(E_a + a_a E_{sa})}.
class RealForm {
public:
  static RealForm build(const WeylAlgebra& w, const VoganDiagram& v);

  const WeylAlgebra& algebra() const { return *w_; }
  const RootSystem& roots() const { return w_->roots(); }
  const SigmaAction& sigma() const { return sigma_; }
  int a(int root_idx) const { return a_[root_idx]; }
  bool inner() const { return inner_; }
  const VoganDiagram& vogan() const { return vogan_; }

  // sigma as an antilinear map on the full algebra
  SMatrix apply_sigma(const SMatrix& v) const;
  bool is_real_vector(const SMatrix& v) const;

  std::size_t dim() const { return w_->dim(); }
  const SMatrix& real_basis() const { return real_basis_; }        // dim x dim
  const SMatrix& real_basis_inv() const { return real_basis_inv_; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  const SMatrix& h_plus() const { return h_plus_; }    // rank x p basis
  const SMatrix& h_minus() const { return h_minus_; }  // rank x q basis
  SMatrix h_g_basis() const;                           // rank x rank real Cartan basis

  SMatrix to_real_coords(const SMatrix& weyl_vec) const;    // dim-vector change of basis
  SMatrix to_weyl_coords(const SMatrix& real_vec) const;
  SMatrix A_vec(int root_idx) const;
  SMatrix B_vec(int root_idx) const;

private:
  std::shared_ptr<const WeylAlgebra> w_;
  VoganDiagram vogan_;
  SigmaAction sigma_;
  std::vector<int> a_;
  bool inner_ = false;
  SMatrix sigma_h_;  // rank x rank, real: sigma(h) = sigma_h * conj(h)
  SMatrix h_plus_, h_minus_;
  SMatrix real_basis_, real_basis_inv_;
  std::vector<BasisLabel> labels_;
};

/// Regular subalgebra k = h_k + sum_{a in R0} g_a of the complexification.
struct Subalgebra {
  SMatrix h_k;              // rank x k columns over the coroot coordinates
  std::vector<int> R0;      // sorted root indices
  SMatrix basis;            // dim x (k + |R0|) columns in Weyl coordinates
  SMatrix conj_basis;       // sigma(basis)
  SMatrix intersect;        // basis of k ∩ conj(k)
  bool spans_with_conj = false;  // k + conj(k) = g^C
  std::vector<int> symmetric_part;  // R0 ∩ (-R0)
};

Subalgebra regular_subalgebra(const RealForm& f, const SMatrix& h_k, std::vector<int> R0);

}  // namespace liegc
