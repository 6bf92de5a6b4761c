#include "liegc/gcs.hpp"

#include <cassert>

namespace liegc {

SMatrix DoubleSpace::gcan() const {
  SMatrix g(2 * n, 2 * n);
  Scalar half(1, 2);
  for (std::size_t k = 0; k < n; ++k) {
    g.at(k, n + k) = half;
    g.at(n + k, k) = half;
  }
  return g;
}

namespace {

bool squares_to_minus_id(const SMatrix& j) {
  return (j * j + SMatrix::identity(j.rows())).is_zero();
}

// g(Jx,y) = s * g(x,Jy) with s = +1 (symmetric) or -1 (skew)
bool has_symmetry(const DoubleSpace& v, const SMatrix& j, int s) {
  SMatrix g = v.gcan();
  SMatrix lhs = j.transpose() * g;
  SMatrix rhs = g * j;
  return s > 0 ? lhs == rhs : lhs == -rhs;
}

// complete the given columns to a basis of the ambient space using
// standard basis vectors, in index order
SMatrix greedy_complement(const SMatrix& part) {
  std::size_t n = part.rows();
  SMatrix acc = part;
  SMatrix comp(n, 0);
  for (std::size_t k = 0; k < n && acc.cols() < n; ++k) {
    SMatrix e(n, 1);
    e.at(k, 0) = Scalar(1);
    SMatrix trial = acc.hcat(e);
    if (rank_of(trial) > acc.cols()) {
      acc = trial;
      comp = comp.hcat(e);
    }
  }
  return comp;
}

}  // namespace

GCStructure GCStructure::make(DoubleSpace v, SMatrix j, Kind kind) {
  if (j.rows() != v.dim() || j.cols() != v.dim()) throw GCSError("J has wrong shape");
  if (!j.is_real()) throw GCSError("J must be a real endomorphism");
  if (!squares_to_minus_id(j)) throw NotEigenSplit();
  if (!has_symmetry(v, j, kind == Kind::symmetric ? 1 : -1)) throw AlphaIllDefined();
  return {v, std::move(j), kind};
}

GCStructure GCStructure::make_unchecked(DoubleSpace v, SMatrix j, Kind kind) {
  return {v, std::move(j), kind};
}

GCStructure from_complex_structure(const SMatrix& J_V) {
  if (J_V.rows() != J_V.cols()) throw NotComplexStructure();
  if (!squares_to_minus_id(J_V)) throw NotComplexStructure();
  DoubleSpace v(J_V.rows());
  SMatrix j(v.dim(), v.dim());
  j.set_block(0, 0, J_V);
  j.set_block(v.n, v.n, J_V.transpose());
  return GCStructure::make(v, j, Kind::symmetric);
}

GCStructure from_metric(const SMatrix& g) {
  if (g.rows() != g.cols() || g != g.transpose()) throw Degenerate();
  auto ginv = inverse(g);
  if (!ginv) throw Degenerate();
  DoubleSpace v(g.rows());
  SMatrix j(v.dim(), v.dim());
  j.set_block(0, v.n, *ginv);
  j.set_block(v.n, 0, -g);
  return GCStructure::make(v, j, Kind::symmetric);
}

SMatrix bfield_shear(const SMatrix& B) {
  if (B.rows() != B.cols() || B != -B.transpose()) throw NotSkew();
  std::size_t n = B.rows();
  SMatrix p = SMatrix::identity(2 * n);
  p.set_block(n, 0, B.transpose());  // (i_X B)_j = B(X, e_j)
  return p;
}

GCStructure bfield_act(const SMatrix& B, const GCStructure& j) {
  SMatrix p = bfield_shear(B);
  SMatrix pinv = bfield_shear(-B);
  return GCStructure::make(j.space, p * j.J * pinv, j.kind);
}

SMatrix plus_i_eigenspace(const SMatrix& J) {
  SMatrix m = J;
  Scalar i = Scalar::i();
  for (std::size_t k = 0; k < m.rows(); ++k) m.at(k, k) -= i;
  return kernel(m);
}

SMatrix endo_from_eigenspace(const SMatrix& L) {
  std::size_t n2 = L.rows();
  SMatrix p = L.hcat(L.conjugate());
  if (p.cols() != n2 || rank_of(p) != n2) throw GCSError("eigenspace does not split the space");
  SMatrix d(n2, n2);
  Scalar i = Scalar::i();
  for (std::size_t k = 0; k < L.cols(); ++k) d.at(k, k) = i;
  for (std::size_t k = L.cols(); k < n2; ++k) d.at(k, k) = -i;
  auto pinv = inverse(p);
  SMatrix j = p * d * *pinv;
  if (!j.is_real()) throw GCSError("internal: reconstructed endomorphism not real");
  return j;
}

// ---------------------------------------------------------------------------
// HoloData

namespace {

// columns spanning L^tau(E, alpha): canonical sections e_p + xi_p (xi zero
// on a fixed standard complement of tau(E)) together with the pure
// covectors annihilating tau(E)
SMatrix holo_basis(const DoubleSpace& v, Kind kind, const SMatrix& E, const SMatrix& alpha) {
  std::size_t n = v.n;
  SMatrix tauE = kind == Kind::symmetric ? E.conjugate() : E;
  SMatrix comp = greedy_complement(tauE);
  SMatrix w = tauE.hcat(comp);  // basis of V^C adapted to tau(E)
  auto winv = inverse(w);
  if (!winv) throw GCSError("internal: tau(E) completion failed");
  std::size_t k = E.cols(), m = tauE.cols();
  SMatrix L(2 * n, k + comp.cols());
  for (std::size_t p = 0; p < k; ++p) {
    // xi with xi(tauE_q) = alpha_{pq}, xi(comp) = 0:  xi^T = vals * w^{-1}
    SMatrix vals(1, n);
    for (std::size_t q = 0; q < m; ++q) vals.at(0, q) = alpha.at(p, q);
    SMatrix xi = (vals * *winv).transpose();
    L.set_block(0, p, E.col(p));
    L.set_block(n, p, xi);
  }
  for (std::size_t c = 0; c < comp.cols(); ++c) {
    SMatrix vals(1, n);
    vals.at(0, m + c) = Scalar(1);
    SMatrix eta = (vals * *winv).transpose();
    L.set_block(n, k + c, eta);
  }
  return L;
}

}  // namespace

HoloData HoloData::make_unchecked(DoubleSpace v, Kind kind, SMatrix E, SMatrix alpha) {
  HoloData h;
  h.space = v;
  h.kind = kind;
  h.E = std::move(E);
  h.alpha = std::move(alpha);
  return h;
}

HoloData HoloData::make(DoubleSpace v, Kind kind, SMatrix E, SMatrix alpha) {
  if (E.rows() != v.n) throw GCSError("E has wrong ambient dimension");
  if (alpha.rows() != E.cols() || alpha.cols() != E.cols())
    throw GCSError("alpha has wrong shape");
  if (rank_of(E) != E.cols()) throw GCSError("E basis is dependent");
  HoloData h = make_unchecked(v, kind, std::move(E), std::move(alpha));

  if (rank_of(h.E.hcat(h.E.conjugate())) != v.n) throw SumDeficient();

  // tau-skew: alpha(X, tauY) + tau(alpha(Y, tauX)) = 0
  for (std::size_t p = 0; p < h.alpha.rows(); ++p)
    for (std::size_t q = 0; q < h.alpha.cols(); ++q) {
      Scalar lhs = h.alpha.at(p, q);
      Scalar other = h.alpha.at(q, p);
      if (kind == Kind::symmetric) lhs += other.conjugate();
      else lhs += other;
      if (!lhs.is_zero()) throw TauSymmetryViolated();
    }

  // Delta: real points of E ∩ conj(E)
  SMatrix inter = intersect_columns(h.E, h.E.conjugate());
  SMatrix delta(v.n, 0);
  Scalar i = Scalar::i();
  for (std::size_t c = 0; c < inter.cols() && delta.cols() < inter.cols(); ++c) {
    SMatrix s = inter.col(c);
    for (SMatrix cand : {s + s.conjugate(), (s - s.conjugate()) * i}) {
      if (cand.is_zero()) continue;
      if (delta.cols() == inter.cols()) break;
      SMatrix trial = delta.hcat(cand);
      if (rank_of(trial) > delta.cols()) delta = trial;
    }
  }
  if (delta.cols() != inter.cols()) throw GCSError("internal: real points of Delta not found");
  h.Delta = delta;

  // Im(alpha|Delta) non-degenerate, or produce a witness in L ∩ conj(L)
  SMatrix gd = h.g_delta();
  bool nondeg = h.Delta.cols() == 0 || rank_of(gd) == gd.rows();
  SMatrix L = holo_basis(h.space, h.kind, h.E, h.alpha);
  SMatrix bad = intersect_columns(L, L.conjugate());
  if (!nondeg || bad.cols() != 0) {
    if (bad.cols() == 0) throw GCSError("internal: degenerate g_Delta but L ∩ conj(L) = 0");
    throw DegenerateImAlpha(bad.col(0));
  }
  return h;
}

SMatrix HoloData::g_delta() const {
  // coordinates of the Delta basis over E
  auto c = solve(E, Delta);
  if (!c) throw GCSError("internal: Delta not inside E");
  SMatrix gd(Delta.cols(), Delta.cols());
  for (std::size_t a = 0; a < Delta.cols(); ++a)
    for (std::size_t b = 0; b < Delta.cols(); ++b) {
      Scalar v;
      for (std::size_t p = 0; p < E.cols(); ++p)
        for (std::size_t q = 0; q < E.cols(); ++q) {
          Scalar cq = kind == Kind::symmetric ? c->at(q, b).conjugate() : c->at(q, b);
          v += c->at(p, a) * alpha.at(p, q) * cq;
        }
      gd.at(a, b) = v.imag_part();
    }
  return gd;
}

SMatrix HoloData::re_alpha_delta() const {
  auto c = solve(E, Delta);
  if (!c) throw GCSError("internal: Delta not inside E");
  SMatrix rd(Delta.cols(), Delta.cols());
  for (std::size_t a = 0; a < Delta.cols(); ++a)
    for (std::size_t b = 0; b < Delta.cols(); ++b) {
      Scalar v;
      for (std::size_t p = 0; p < E.cols(); ++p)
        for (std::size_t q = 0; q < E.cols(); ++q) {
          Scalar cq = kind == Kind::symmetric ? c->at(q, b).conjugate() : c->at(q, b);
          v += c->at(p, a) * alpha.at(p, q) * cq;
        }
      rd.at(a, b) = v.real_part();
    }
  return rd;
}

HoloData holo_space_of(const GCStructure& j) {
  const DoubleSpace& v = j.space;
  if (!squares_to_minus_id(j.J)) throw NotEigenSplit();
  if (!has_symmetry(v, j.J, j.kind == Kind::symmetric ? 1 : -1)) throw AlphaIllDefined();
  SMatrix L = plus_i_eigenspace(j.J);
  SMatrix top = L.block(0, 0, v.n, L.cols());
  SMatrix bot = L.block(v.n, 0, v.n, L.cols());
  SMatrix E = column_space_basis(top);
  SMatrix tauE = j.kind == Kind::symmetric ? E.conjugate() : E;

  // alpha well-defined: covectors over ker(pi_1|_L) must kill tau(E)
  SMatrix k0 = kernel(top);
  for (std::size_t c = 0; c < k0.cols(); ++c) {
    SMatrix xi = bot * k0.col(c);
    if (!(xi.transpose() * tauE).is_zero()) throw AlphaIllDefined();
  }
  SMatrix alpha(E.cols(), E.cols());
  for (std::size_t p = 0; p < E.cols(); ++p) {
    auto c = solve(top, E.col(p));
    if (!c) throw GCSError("internal: E column without preimage");
    SMatrix xi = bot * *c;
    for (std::size_t q = 0; q < E.cols(); ++q)
      alpha.at(p, q) = (xi.transpose() * tauE.col(q)).at(0, 0);
  }
  return HoloData::make(v, j.kind, E, alpha);
}

GCStructure reconstruct_gcs(const HoloData& h) {
  SMatrix L = holo_basis(h.space, h.kind, h.E, h.alpha);
  if (L.cols() != h.space.n) throw GCSError("internal: holomorphic space has wrong dimension");
  if (rank_of(L.hcat(L.conjugate())) != h.space.dim()) {
    SMatrix bad = intersect_columns(L, L.conjugate());
    if (bad.cols() > 0) throw DegenerateImAlpha(bad.col(0));
    throw SumDeficient();
  }
  return GCStructure::make(h.space, endo_from_eigenspace(L), h.kind);
}

bool in_L_fiber(const HoloData& h, const SMatrix& X, const SMatrix& xi) {
  auto c = solve(h.E, X);
  if (!c) return false;
  SMatrix tauE = h.tau_E();
  for (std::size_t q = 0; q < tauE.cols(); ++q) {
    Scalar want;
    for (std::size_t p = 0; p < h.E.cols(); ++p) want += c->at(p, 0) * h.alpha.at(p, q);
    Scalar have = (xi.transpose() * tauE.col(q)).at(0, 0);
    if (want != have) return false;
  }
  return true;
}

SMatrix holo_space_basis(const HoloData& h) {
  return holo_basis(h.space, h.kind, h.E, h.alpha);
}

// ---------------------------------------------------------------------------
// B-field normal form

BFieldNormalForm bfield_decompose(const GCStructure& j) {
  if (j.kind != Kind::symmetric) throw WrongKind();
  const DoubleSpace& v = j.space;
  HoloData h = holo_space_of(j);
  SMatrix delta = h.Delta;
  SMatrix nbas = greedy_complement(delta);
  SMatrix en = intersect_columns(h.E, nbas);  // E ∩ N^C

  // E-coordinates of E∩N^C and of Delta
  auto q_en = solve(h.E, en);
  auto c_delta = solve(h.E, delta);
  if (!q_en || !c_delta) throw GCSError("internal: subspace coordinates failed");

  // z-part of a real vector Z in N: solve [EN | conj(EN)] c = Z
  SMatrix zsplit = en.hcat(en.conjugate());
  auto alpha_eval = [&](const SMatrix& e_coords, const SMatrix& tau_coords) {
    Scalar s;
    for (std::size_t p = 0; p < h.E.cols(); ++p) {
      if (e_coords.at(p, 0).is_zero()) continue;
      for (std::size_t q = 0; q < h.E.cols(); ++q)
        s += e_coords.at(p, 0) * h.alpha.at(p, q) * tau_coords.at(q, 0);
    }
    return s;
  };
  // tau-coordinates (over conj(E)) of conj(E)*u  are conj(u); of a real
  // vector with E-coordinates c they are conj(c).
  auto z_of = [&](const SMatrix& Z) {
    if (en.cols() == 0) return SMatrix(h.E.cols(), 1);
    auto c = solve(zsplit, Z);
    if (!c) throw GCSError("internal: N vector not split by E∩N^C");
    SMatrix ctop = c->block(0, 0, en.cols(), 1);
    return *q_en * ctop;  // E-coordinates of z
  };

  // B on the adapted basis [delta | nbas], then transported to std coords
  std::size_t d = delta.cols(), m = nbas.cols();
  SMatrix b_ad(d + m, d + m);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      // B(X,Y) = -Re(alpha)(X,Y) on Delta
      Scalar val = alpha_eval(c_delta->col(a), c_delta->col(b).conjugate());
      b_ad.at(a, b) = -val.real_part();
    }
  std::vector<SMatrix> zs;
  for (std::size_t zi = 0; zi < m; ++zi) zs.push_back(z_of(nbas.col(zi)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // B(Z,W) = -2 Re(alpha)(z, conj(w))
      Scalar val = alpha_eval(zs[a], zs[b].conjugate());
      b_ad.at(d + a, d + b) = Scalar(-2) * val.real_part();
    }
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t z = 0; z < m; ++z) {
      // B(X,Z) = 2 Re(alpha)(z, X)
      Scalar val = alpha_eval(zs[z], c_delta->col(x).conjugate());
      b_ad.at(x, d + z) = Scalar(2) * val.real_part();
      b_ad.at(d + z, x) = Scalar(-2) * val.real_part();
    }
  // transport: B_std(u,v) = B_ad(P^{-1}u, P^{-1}v)
  SMatrix p = delta.hcat(nbas);
  auto pinv = inverse(p);
  if (!pinv) throw GCSError("internal: adapted basis singular");
  SMatrix B = pinv->transpose() * b_ad * *pinv;
  if (B != -B.transpose()) throw GCSError("internal: computed B not skew");
  if (!B.is_real()) throw GCSError("internal: computed B not real");

  // the direct-sum structure in adapted coordinates
  SMatrix gd = h.g_delta();
  SMatrix jn(m, m);
  if (m > 0) {
    auto en_in_n = solve(nbas, en);
    if (!en_in_n) throw GCSError("internal: E∩N^C not inside N");
    jn = endo_from_eigenspace(*en_in_n);
  }
  std::size_t n = v.n;
  SMatrix jds(2 * n, 2 * n);
  if (d > 0) {
    auto gdinv = inverse(gd);
    if (!gdinv) throw GCSError("internal: g_Delta degenerate in normal form");
    jds.set_block(0, n, *gdinv);         // Delta rows, Delta* cols
    jds.set_block(n, 0, -gd);
  }
  if (m > 0) {
    jds.set_block(d, d, jn);
    jds.set_block(n + d, n + d, jn.transpose());
  }
  // change of basis diag(P, P^{-T}) back to standard coordinates
  SMatrix t(2 * n, 2 * n), tinv(2 * n, 2 * n);
  t.set_block(0, 0, p);
  t.set_block(n, n, pinv->transpose());
  tinv.set_block(0, 0, *pinv);
  tinv.set_block(n, n, p.transpose());
  GCStructure normal = GCStructure::make(v, t * jds * tinv, Kind::symmetric);

  // exp(B) . J must equal the direct sum exactly
  GCStructure moved = bfield_act(B, j);
  if (!(moved.J == normal.J)) throw GCSError("internal: exp(B).J differs from the normal form");

  BFieldNormalForm out;
  out.B = B;
  out.Delta = delta;
  out.g_delta = gd;
  out.N = nbas;
  out.JN = jn;
  out.normal_form = normal;
  return out;
}

}  // namespace liegc
