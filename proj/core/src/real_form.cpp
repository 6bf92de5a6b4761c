#include "liegc/real_form.hpp"

#include <algorithm>
#include <numeric>

namespace liegc {

VoganDiagram VoganDiagram::plain(const CartanType& t) {
  VoganDiagram v;
  v.type = t;
  v.theta.resize(t.rank());
  std::iota(v.theta.begin(), v.theta.end(), 0);
  return v;
}

std::string BasisLabel::str() const {
  switch (kind) {
    case H: return "h" + std::to_string(index);
    case A: return "A[" + std::to_string(index) + "]";
    case B: return "B[" + std::to_string(index) + "]";
  }
  return "?";
}

RealForm RealForm::build(const WeylAlgebra& w, const VoganDiagram& v) {
  const RootSystem& rs = w.roots();
  if (!(v.type == rs.type())) throw VoganError("Vogan diagram type does not match the algebra");
  RealForm f;
  f.w_ = std::make_shared<const WeylAlgebra>(w);
  f.vogan_ = v;
  f.sigma_ = SigmaAction::from_theta(rs, v.theta);
  f.inner_ = f.sigma_.is_inner(rs);

  for (int node : v.painted) {
    if (node < 0 || node >= rs.rank()) throw VoganError("painted node out of range");
    if (v.theta[node] != node) throw VoganError("painted node not fixed by theta");
  }

  const int nr = static_cast<int>(rs.num_roots());
  const int rank = rs.rank();
  const int npos = static_cast<int>(rs.num_positive());

  // a on simple roots: -1 on painted nodes, +1 otherwise; then extend over
  // positive roots by increasing height via a_{d+s} = -a_d a_s N(sd,ss)/N(d,s)
  f.a_.assign(nr, 0);
  for (int i = 0; i < rank; ++i) {
    RootVec unit(rank, 0);
    unit[i] = 1;
    int idx = rs.index_of(unit);
    bool painted = std::find(v.painted.begin(), v.painted.end(), i) != v.painted.end();
    f.a_[idx] = painted ? -1 : 1;
    f.a_[rs.negative_of(idx)] = f.a_[idx];
  }
  auto sign_ratio = [&](int d, int s) {
    Scalar ratio = w.N(f.sigma_(d), f.sigma_(s)) / w.N(d, s);
    if (!ratio.is_rational()) throw InconsistentExtension();
    Rational r = ratio.rational_value();
    if (r != 1 && r != -1) throw InconsistentExtension();
    return r == 1 ? 1 : -1;
  };
  for (int g = 0; g < npos; ++g) {
    if (rs.height(g) < 2) continue;
    int found = 0;
    for (int d = 0; d < g && !found; ++d) {
      if (f.a_[d] == 0) continue;
      auto rest = rs.sum_index(g, rs.negative_of(d));
      if (!rest || !rs.is_positive(*rest) || f.a_[*rest] == 0) continue;
      found = -f.a_[d] * f.a_[*rest] * sign_ratio(d, *rest);
    }
    if (!found) throw VoganError("internal: no decomposition available for sign extension");
    f.a_[g] = found;
    f.a_[rs.negative_of(g)] = found;
  }
  // consistency of every decomposition (sim-1 and sim-2 over all pairs)
  for (int a = 0; a < nr; ++a) {
    if (f.a_[a] != f.a_[rs.negative_of(a)] || f.a_[a] != f.a_[f.sigma_(a)])
      throw InconsistentExtension();
    for (int b = 0; b < nr; ++b) {
      auto s = rs.sum_index(a, b);
      if (!s) continue;
      if (f.a_[*s] != -f.a_[a] * f.a_[b] * sign_ratio(a, b)) throw InconsistentExtension();
    }
  }

  // sigma on h: h_i -> -h_{theta(i)}, antilinear
  f.sigma_h_ = SMatrix(rank, rank);
  for (int i = 0; i < rank; ++i) f.sigma_h_.at(f.sigma_.theta[i], i) = Scalar(-1);

  // Cartan real form from the spanning families
  //   h+ = < i(H_a - H_{sa}) >,  h- = < H_a + H_{sa} >
  auto greedy_h_basis = [&](const std::vector<SMatrix>& cand) {
    SMatrix acc(rank, 0);
    for (const SMatrix& c : cand) {
      if (c.is_zero()) continue;
      SMatrix trial = acc.hcat(c);
      if (rank_of(trial) > acc.cols()) acc = trial;
    }
    return acc;
  };
  std::vector<SMatrix> plus_cand, minus_cand;
  for (int a = 0; a < nr; ++a) {
    SMatrix diff = (w.H_dual(a) - w.H_dual(f.sigma_(a))) * Scalar::i();
    SMatrix sum = w.H_dual(a) + w.H_dual(f.sigma_(a));
    plus_cand.push_back(diff);
    minus_cand.push_back(sum);
  }
  f.h_plus_ = greedy_h_basis(plus_cand);
  f.h_minus_ = greedy_h_basis(minus_cand);
  SMatrix hg = f.h_plus_.hcat(f.h_minus_);
  if (rank_of(hg) != static_cast<std::size_t>(rank))
    throw VoganError("internal: h+ + h- does not span the Cartan subalgebra");

  // real basis: Cartan part, then A_a, B_a for one representative per
  // sigma-orbit {a, sigma(a)}
  f.real_basis_ = SMatrix(w.dim(), 0);
  for (std::size_t c = 0; c < hg.cols(); ++c) {
    f.real_basis_ = f.real_basis_.hcat(w.embed_h(hg.col(c)));
    f.labels_.push_back({BasisLabel::H, static_cast<int>(c)});
  }
  for (int a = 0; a < nr; ++a) {
    int sa = f.sigma_(a);
    if (sa == a) throw VoganError("internal: sigma fixes a root");
    if (sa < a) continue;
    SMatrix A = w.unit_E(a) - w.unit_E(sa) * Scalar(f.a_[a]);
    SMatrix B = (w.unit_E(a) + w.unit_E(sa) * Scalar(f.a_[a])) * Scalar::i();
    f.real_basis_ = f.real_basis_.hcat(A);
    f.labels_.push_back({BasisLabel::A, a});
    f.real_basis_ = f.real_basis_.hcat(B);
    f.labels_.push_back({BasisLabel::B, a});
  }
  auto inv = inverse(f.real_basis_);
  if (!inv) throw VoganError("internal: real basis is singular");
  f.real_basis_inv_ = *inv;

  // every basis vector must be sigma-fixed
  for (std::size_t c = 0; c < f.real_basis_.cols(); ++c)
    if (!f.is_real_vector(f.real_basis_.col(c)))
      throw VoganError("internal: real basis vector not sigma-fixed");
  return f;
}

SMatrix RealForm::apply_sigma(const SMatrix& v) const {
  const RootSystem& rs = w_->roots();
  const int rank = rs.rank();
  const int nr = static_cast<int>(rs.num_roots());
  SMatrix out(w_->dim(), 1);
  SMatrix h = sigma_h_ * w_->h_part(v).conjugate();
  out.set_block(0, 0, h);
  for (int a = 0; a < nr; ++a) {
    Scalar c = v.at(rank + a, 0);
    if (c.is_zero()) continue;
    // sigma(E_a) = -a_a E_{sigma(a)}
    out.at(rank + sigma_(a), 0) += c.conjugate() * Scalar(-a_[a]);
  }
  return out;
}

bool RealForm::is_real_vector(const SMatrix& v) const { return apply_sigma(v) == v; }

SMatrix RealForm::h_g_basis() const { return h_plus_.hcat(h_minus_); }

SMatrix RealForm::to_real_coords(const SMatrix& weyl_vec) const {
  return real_basis_inv_ * weyl_vec;
}

SMatrix RealForm::to_weyl_coords(const SMatrix& real_vec) const { return real_basis_ * real_vec; }

SMatrix RealForm::A_vec(int a) const {
  return w_->unit_E(a) - w_->unit_E(sigma_(a)) * Scalar(a_[a]);
}

SMatrix RealForm::B_vec(int a) const {
  return (w_->unit_E(a) + w_->unit_E(sigma_(a)) * Scalar(a_[a])) * Scalar::i();
}

Subalgebra regular_subalgebra(const RealForm& f, const SMatrix& h_k, std::vector<int> R0) {
  const WeylAlgebra& w = f.algebra();
  const RootSystem& rs = w.roots();
  std::sort(R0.begin(), R0.end());
  RootSubset sub{&rs, R0};
  for (int a : R0)
    for (int b : R0) {
      auto s = rs.sum_index(a, b);
      if (s && !sub.contains(*s)) throw NotClosed();
    }
  Subalgebra k;
  k.h_k = h_k;
  k.R0 = R0;
  for (int a : R0)
    if (sub.contains(rs.negative_of(a))) {
      k.symmetric_part.push_back(a);
      // [g_a, g_{-a}] = C H_a must land in h_k
      if (!in_column_space(h_k, w.H_dual(a))) throw CartanPartTooSmall();
    }
  k.basis = SMatrix(w.dim(), 0);
  for (std::size_t c = 0; c < h_k.cols(); ++c) k.basis = k.basis.hcat(w.embed_h(h_k.col(c)));
  for (int a : R0) k.basis = k.basis.hcat(w.unit_E(a));
  k.conj_basis = SMatrix(w.dim(), 0);
  for (std::size_t c = 0; c < k.basis.cols(); ++c)
    k.conj_basis = k.conj_basis.hcat(f.apply_sigma(k.basis.col(c)));
  k.intersect = intersect_columns(k.basis, k.conj_basis);
  k.spans_with_conj = rank_of(k.basis.hcat(k.conj_basis)) == w.dim();
  return k;
}

}  // namespace liegc
