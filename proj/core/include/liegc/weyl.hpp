#pragma once

#include <map>
#include <memory>
#include <vector>

#include "liegc/chevalley.hpp"
#include "liegc/matrix.hpp"
#include "liegc/root_system.hpp"
#include "liegc/scalar.hpp"

namespace liegc {

struct TowerTooSmall : std::runtime_error {
  explicit TowerTooSmall(std::uint64_t r)
      : std::runtime_error("field tower lacks sqrt(" + std::to_string(r) + ")"), radicand(r) {}
  std::uint64_t radicand;
};

/// Complex semisimple Lie algebra in a Weyl basis:
///   [E_a, E_{-a}] = H_a,  B(E_a, E_{-a}) = 1,  N(-a,-b) = -N(a,b),  N real,
/// where H_a is the Killing dual of the root a.  Vectors live in coordinates
/// over the basis {h_1..h_rank} ∪ {E_a : a in root order}; the h_i are the
/// simple coroots of the underlying Chevalley basis (not rescaled).
class WeylAlgebra {
public:
  static WeylAlgebra build(const RootSystem& rs);
  // Build over a caller-supplied tower; throws TowerTooSmall if a needed
  // radicand is missing (the exception names it, so callers can retry).
  static WeylAlgebra build(const RootSystem& rs, FieldSpecPtr field);

  const RootSystem& roots() const { return *rs_; }
  FieldSpecPtr field() const { return field_; }
  std::size_t rank() const { return rs_->rank(); }
  std::size_t dim() const { return rs_->rank() + rs_->num_roots(); }

  // structure data
  const Scalar& N(int a, int b) const;          // zero scalar if a+b not a root
  const SMatrix& H_dual(int a) const { return h_dual_[a]; }  // rank x 1, rational
  const SMatrix& killing_h() const { return killing_h_; }    // rank x rank
  Rational kappa_e(int a) const { return kappa_e_[a]; }      // trace form kappa(e_a, e_{-a})
  const ChevalleyData& chevalley() const { return chev_; }

  // a(H) for H in h given by coroot coordinates (complex-linear)
  Scalar eval_root(int root_idx, const SMatrix& h_coords) const;
  Rational eval_root_on_coroot(int root_idx, int i) const;

  // full-space helpers; vectors are dim() x 1 Scalar columns
  SMatrix unit_E(int root_idx) const;
  SMatrix embed_h(const SMatrix& h_coords) const;
  SMatrix h_part(const SMatrix& v) const;
  Scalar e_coord(const SMatrix& v, int root_idx) const;
  SMatrix H_dual_full(int root_idx) const;

  SMatrix bracket(const SMatrix& x, const SMatrix& y) const;
  SMatrix killing_full() const;  // dim x dim exact Gram matrix
  // Trace form of ad computed directly from the bracket table (test oracle).
  SMatrix killing_by_trace() const;

private:
  std::shared_ptr<const RootSystem> rs_;
  FieldSpecPtr field_;
  ChevalleyData chev_;
  std::map<std::pair<int, int>, Scalar> n_;  // Weyl-normalized constants
  std::vector<SMatrix> h_dual_;              // Killing duals of all roots
  SMatrix killing_h_;
  std::vector<Rational> kappa_e_;
  Scalar zero_;
};

/// sqrt of a positive rational inside the given tower.
Scalar sqrt_of_rational(const Rational& q, const FieldSpecPtr& spec);

}  // namespace liegc
