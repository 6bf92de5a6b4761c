#include "liegc/weyl.hpp"

#include <set>

namespace liegc {

Scalar sqrt_of_rational(const Rational& q, const FieldSpecPtr& spec) {
  if (q <= 0) throw ScalarError("sqrt of non-positive rational");
  Rational c = q;
  c.canonicalize();
  if (!c.get_num().fits_ulong_p() || !c.get_den().fits_ulong_p())
    throw ScalarError("radicand too large");
  std::uint64_t num = c.get_num().get_ui(), den = c.get_den().get_ui();
  std::uint64_t f = 0;
  std::uint64_t s = squarefree_part(num * den, &f);
  // sqrt(num/den) = f * sqrt(s) / den
  Rational coef(static_cast<unsigned long>(f), static_cast<unsigned long>(den));
  coef.canonicalize();
  Scalar coeff(coef);
  if (s == 1) return coeff;
  return coeff * Scalar::sqrt(s, spec);
}

namespace {

std::uint64_t radicand_of(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c <= 0) throw ScalarError("expected positive rational");
  if (!c.get_num().fits_ulong_p() || !c.get_den().fits_ulong_p())
    throw ScalarError("radicand too large");
  return squarefree_part(c.get_num().get_ui() * c.get_den().get_ui());
}

}  // namespace

WeylAlgebra WeylAlgebra::build(const RootSystem& rs) {
  // collect the radicands the rescaling needs, then close under products
  ChevalleyData chev = ChevalleyData::build(rs);
  const int nr = static_cast<int>(rs.num_roots());
  const int rank = rs.rank();

  std::vector<std::vector<Rational>> kap(rank, std::vector<Rational>(rank, Rational(0)));
  for (int g = 0; g < nr; ++g)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        kap[i][j] += Rational(rs.cartan_pairing(g, i)) * rs.cartan_pairing(g, j);
  auto kappa_h = [&](const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s(0);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) s += u[i] * kap[i][j] * v[j];
    return s;
  };
  std::vector<Rational> kappa_e(nr);
  for (int a = 0; a < nr; ++a)
    kappa_e[a] = kappa_h(chev.coroot_coords[a], chev.coroot_coords[a]) / 2;

  std::set<std::uint64_t> seeds;
  for (const auto& [key, val] : chev.table) {
    auto [a, b] = key;
    auto s = rs.sum_index(a, b);
    if (!s) continue;
    Rational q = kappa_e[*s] / (kappa_e[a] * kappa_e[b]);
    std::uint64_t r = radicand_of(q);
    if (r > 1) seeds.insert(r);
  }
  FieldSpec spec = FieldSpec::product_closure(std::vector<std::uint64_t>(seeds.begin(), seeds.end()));
  return build(rs, std::make_shared<const FieldSpec>(spec));
}

WeylAlgebra WeylAlgebra::build(const RootSystem& rs, FieldSpecPtr field) {
  WeylAlgebra w;
  w.rs_ = std::make_shared<const RootSystem>(rs);
  w.field_ = std::move(field);
  w.chev_ = ChevalleyData::build(rs);
  const int nr = static_cast<int>(rs.num_roots());
  const int rank = rs.rank();

  w.killing_h_ = SMatrix(rank, rank);
  {
    std::vector<std::vector<Rational>> kap(rank, std::vector<Rational>(rank, Rational(0)));
    for (int g = 0; g < nr; ++g)
      for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
          kap[i][j] += Rational(rs.cartan_pairing(g, i)) * rs.cartan_pairing(g, j);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) w.killing_h_.at(i, j) = Scalar(kap[i][j]);
  }

  // kappa(e_a, e_{-a}) = kappa(h_a, h_a)/2, exact
  w.kappa_e_.resize(nr);
  for (int a = 0; a < nr; ++a) {
    SMatrix h(rank, 1);
    for (int i = 0; i < rank; ++i) h.at(i, 0) = Scalar(w.chev_.coroot_coords[a][i]);
    Scalar v = (h.transpose() * w.killing_h_ * h).at(0, 0);
    w.kappa_e_[a] = v.rational_value() / 2;
    if (w.kappa_e_[a] <= 0) throw ScalarError("internal: kappa(e_a,e_-a) not positive");
  }

  // Weyl constants N(a,b) = N_chev(a,b) * sqrt(kappa_{a+b} / (kappa_a kappa_b))
  for (const auto& [key, val] : w.chev_.table) {
    auto [a, b] = key;
    auto s = rs.sum_index(a, b);
    if (!s) continue;
    Rational q = w.kappa_e_[*s] / (w.kappa_e_[a] * w.kappa_e_[b]);
    std::uint64_t r = radicand_of(q);
    if (!w.field_ || !w.field_->allows(r)) throw TowerTooSmall(r);
    w.n_[key] = Scalar(val) * sqrt_of_rational(q, w.field_);
  }

  // Killing duals of the roots: solve killing_h * v = [a(h_j)]_j
  w.h_dual_.resize(nr);
  auto kh_inv = inverse(w.killing_h_);
  if (!kh_inv) throw ScalarError("internal: Killing form on h degenerate");
  for (int a = 0; a < nr; ++a) {
    SMatrix rhs(rank, 1);
    for (int j = 0; j < rank; ++j) rhs.at(j, 0) = Scalar(Rational(rs.cartan_pairing(a, j)));
    w.h_dual_[a] = *kh_inv * rhs;
  }
  return w;
}

const Scalar& WeylAlgebra::N(int a, int b) const {
  auto it = n_.find({a, b});
  return it == n_.end() ? zero_ : it->second;
}

Scalar WeylAlgebra::eval_root(int root_idx, const SMatrix& h_coords) const {
  Scalar s;
  for (int j = 0; j < static_cast<int>(rank()); ++j) {
    const Scalar& c = h_coords.at(j, 0);
    if (c.is_zero()) continue;
    s += c * Scalar(Rational(rs_->cartan_pairing(root_idx, j)));
  }
  return s;
}

Rational WeylAlgebra::eval_root_on_coroot(int root_idx, int i) const {
  return Rational(rs_->cartan_pairing(root_idx, i));
}

SMatrix WeylAlgebra::unit_E(int root_idx) const {
  SMatrix v(dim(), 1);
  v.at(rank() + root_idx, 0) = Scalar(1);
  return v;
}

SMatrix WeylAlgebra::embed_h(const SMatrix& h_coords) const {
  SMatrix v(dim(), 1);
  v.set_block(0, 0, h_coords);
  return v;
}

SMatrix WeylAlgebra::h_part(const SMatrix& v) const { return v.block(0, 0, rank(), 1); }

Scalar WeylAlgebra::e_coord(const SMatrix& v, int root_idx) const {
  return v.at(rank() + root_idx, 0);
}

SMatrix WeylAlgebra::H_dual_full(int root_idx) const { return embed_h(h_dual_[root_idx]); }

SMatrix WeylAlgebra::bracket(const SMatrix& x, const SMatrix& y) const {
  const int nr = static_cast<int>(rs_->num_roots());
  const int rk = static_cast<int>(rank());
  SMatrix out(dim(), 1);
  // [h, h'] = 0; [h, E_b] = b(h) E_b; [E_a, E_b] = N E or H_a
  for (int b = 0; b < nr; ++b) {
    const Scalar& yb = y.at(rk + b, 0);
    if (!yb.is_zero()) {
      Scalar c = eval_root(b, h_part(x)) * yb;
      if (!c.is_zero()) out.at(rk + b, 0) += c;
    }
    const Scalar& xb = x.at(rk + b, 0);
    if (!xb.is_zero()) {
      Scalar c = eval_root(b, h_part(y)) * xb;
      if (!c.is_zero()) out.at(rk + b, 0) -= c;
    }
  }
  for (int a = 0; a < nr; ++a) {
    const Scalar& xa = x.at(rk + a, 0);
    if (xa.is_zero()) continue;
    for (int b = 0; b < nr; ++b) {
      const Scalar& yb = y.at(rk + b, 0);
      if (yb.is_zero()) continue;
      if (b == rs_->negative_of(a)) {
        Scalar c = xa * yb;
        for (int i = 0; i < rk; ++i) out.at(i, 0) += c * h_dual_[a].at(i, 0);
      } else if (auto s = rs_->sum_index(a, b)) {
        out.at(rk + *s, 0) += xa * yb * N(a, b);
      }
    }
  }
  return out;
}

SMatrix WeylAlgebra::killing_full() const {
  const int nr = static_cast<int>(rs_->num_roots());
  const int rk = static_cast<int>(rank());
  SMatrix k(dim(), dim());
  k.set_block(0, 0, killing_h_);
  for (int a = 0; a < nr; ++a) k.at(rk + a, rk + rs_->negative_of(a)) = Scalar(1);
  return k;
}

SMatrix WeylAlgebra::killing_by_trace() const {
  const std::size_t d = dim();
  // ad matrices of the basis vectors
  std::vector<SMatrix> ad(d);
  for (std::size_t k = 0; k < d; ++k) {
    SMatrix ek(d, 1);
    ek.at(k, 0) = Scalar(1);
    SMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
      SMatrix ej(d, 1);
      ej.at(j, 0) = Scalar(1);
      m.set_block(0, j, bracket(ek, ej));
    }
    ad[k] = m;
  }
  SMatrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a; b < d; ++b) {
      Scalar tr;
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) tr += ad[a].at(i, j) * ad[b].at(j, i);
      out.at(a, b) = tr;
      out.at(b, a) = tr;
    }
  return out;
}

}  // namespace liegc
