#include "liegc/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace liegc {

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(const std::string& text) {
  CartanType t;
  std::size_t p = 0;
  while (p < text.size()) {
    char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(text[p])));
    ++p;
    std::size_t start = p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (start == p) throw UnknownType(text);
    int n = std::stoi(text.substr(start, p - start));
    bool ok = (fam == 'A' && n >= 1) || (fam == 'B' && n >= 2) || (fam == 'C' && n >= 3) ||
              (fam == 'D' && n >= 4) || (fam == 'E' && n >= 6 && n <= 8) || (fam == 'F' && n == 4) ||
              (fam == 'G' && n == 2);
    if (!ok) throw UnknownType(text);
    t.factors.push_back({fam, n});
    if (p < text.size()) {
      if (text[p] != '+' && text[p] != 'x') throw UnknownType(text);
      ++p;
    }
  }
  if (t.factors.empty()) throw UnknownType(text);
  return t;
}

std::string CartanType::str() const {
  std::string s;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) s += "+";
    s += factors[k].first;
    s += std::to_string(factors[k].second);
  }
  return s;
}

int CartanType::rank() const {
  int r = 0;
  for (auto& [f, n] : factors) r += n;
  return r;
}

// ---------------------------------------------------------------------------
// simple-root geometry per family: norms (a_i,a_i) and products (a_i,a_j)

namespace {

struct SimpleGeometry {
  std::vector<Rational> norm;                 // (a_i, a_i)
  std::vector<std::vector<Rational>> prod;    // (a_i, a_j)
};

SimpleGeometry simple_geometry(char fam, int n) {
  SimpleGeometry g;
  g.norm.assign(n, Rational(2));
  g.prod.assign(n, std::vector<Rational>(n, Rational(0)));
  auto edge = [&](int i, int j, const Rational& v) {
    g.prod[i][j] = v;
    g.prod[j][i] = v;
  };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    case 'B':  // last node short
      g.norm[n - 1] = 1;
      for (int i = 0; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    case 'C':  // last node long
      for (int i = 0; i + 1 < n; ++i) g.norm[i] = 1;
      g.norm[n - 1] = 2;
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Rational(-1, 2));
      edge(n - 2, n - 1, Rational(-1));
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) edge(i, i + 1, Rational(-1));
      edge(n - 3, n - 1, Rational(-1));
      break;
    case 'E':
      // Bourbaki: node 2 hangs off node 4; chain 1-3-4-5-...-n
      edge(0, 2, Rational(-1));
      edge(1, 3, Rational(-1));
      for (int i = 2; i + 1 < n; ++i) edge(i, i + 1, Rational(-1));
      break;
    case 'F':
      g.norm = {Rational(2), Rational(2), Rational(1), Rational(1)};
      edge(0, 1, Rational(-1));
      edge(1, 2, Rational(-1));
      edge(2, 3, Rational(-1, 2));
      break;
    case 'G':
      g.norm = {Rational(2), Rational(6)};
      edge(0, 1, Rational(-3));
      break;
    default:
      throw UnknownType(std::string(1, fam));
  }
  for (int i = 0; i < n; ++i) g.prod[i][i] = g.norm[i];
  return g;
}

bool lex_less(const RootVec& a, const RootVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int vec_height(const RootVec& v) { return std::accumulate(v.begin(), v.end(), 0); }

}  // namespace

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(const CartanType& type) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = type.rank();
  const int rank = rs.rank_;

  // simple-root products over the whole direct sum
  std::vector<std::vector<Rational>> prod(rank, std::vector<Rational>(rank, Rational(0)));
  std::vector<int> comp_of_node(rank, 0);
  {
    int off = 0, comp = 0;
    for (auto& [fam, n] : type.factors) {
      SimpleGeometry g = simple_geometry(fam, n);
      for (int i = 0; i < n; ++i) {
        comp_of_node[off + i] = comp;
        for (int j = 0; j < n; ++j) prod[off + i][off + j] = g.prod[i][j];
      }
      off += n;
      ++comp;
    }
  }

  rs.cartan_.assign(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Rational c = 2 * prod[i][j] / prod[i][i];
      if (c.get_den() != 1) throw UnknownType("non-integral Cartan matrix");
      rs.cartan_[i][j] = static_cast<int>(c.get_num().get_si());
    }

  // enumerate positive roots by the string algorithm
  auto pairing_with_simple = [&](const RootVec& v, int i) {
    int s = 0;
    for (int j = 0; j < rank; ++j) s += v[j] * rs.cartan_[i][j];
    return s;
  };
  std::set<RootVec> pos;
  for (int i = 0; i < rank; ++i) {
    RootVec e(rank, 0);
    e[i] = 1;
    pos.insert(e);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<RootVec> cur(pos.begin(), pos.end());
    for (const RootVec& g : cur) {
      for (int i = 0; i < rank; ++i) {
        int p = 0;
        RootVec down = g;
        for (;;) {
          down[i] -= 1;
          if (down[i] < 0 || !pos.count(down)) break;
          ++p;
        }
        int q = p - pairing_with_simple(g, i);
        if (q > 0) {
          RootVec up = g;
          up[i] += 1;
          if (pos.insert(up).second) grew = true;
        }
      }
    }
  }

  std::vector<RootVec> positives(pos.begin(), pos.end());
  std::sort(positives.begin(), positives.end(), [](const RootVec& a, const RootVec& b) {
    int ha = vec_height(a), hb = vec_height(b);
    if (ha != hb) return ha < hb;
    return lex_less(a, b);
  });
  rs.roots_ = positives;
  for (const RootVec& v : positives) {
    RootVec n(v);
    for (int& x : n) x = -x;
    rs.roots_.push_back(n);
  }
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) rs.index_[rs.roots_[k]] = static_cast<int>(k);

  rs.component_.resize(rs.roots_.size());
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    int c = -1;
    for (int j = 0; j < rank; ++j)
      if (rs.roots_[k][j] != 0) c = comp_of_node[j];
    rs.component_[k] = c;
  }

  // combinatorial norms of the simples, then the Killing-normalized pairing:
  // kappa(h_i,h_j) = sum_g g(h_i) g(h_j), H_a = kappa^{-1} a, <a,b> = a(H_b).
  rs.simple_norm_.resize(rank);
  for (int i = 0; i < rank; ++i) rs.simple_norm_[i] = prod[i][i];

  const std::size_t nr = rs.roots_.size();
  std::vector<std::vector<Rational>> kappa(rank, std::vector<Rational>(rank, Rational(0)));
  for (std::size_t g = 0; g < nr; ++g)
    for (int i = 0; i < rank; ++i) {
      int gi = rs.cartan_pairing(static_cast<int>(g), i);
      if (gi == 0) continue;
      for (int j = 0; j < rank; ++j) kappa[i][j] += Rational(gi) * rs.cartan_pairing(static_cast<int>(g), j);
    }
  // invert kappa (rank x rank, exact)
  std::vector<std::vector<Rational>> inv(rank, std::vector<Rational>(rank, Rational(0)));
  {
    std::vector<std::vector<Rational>> m(kappa);
    for (int i = 0; i < rank; ++i) inv[i][i] = 1;
    for (int c = 0; c < rank; ++c) {
      int piv = c;
      while (piv < rank && m[piv][c] == 0) ++piv;
      if (piv == rank) throw UnknownType("degenerate Killing form on h");
      std::swap(m[piv], m[c]);
      std::swap(inv[piv], inv[c]);
      Rational d = m[c][c];
      for (int j = 0; j < rank; ++j) {
        m[c][j] /= d;
        inv[c][j] /= d;
      }
      for (int r = 0; r < rank; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational f = m[r][c];
        for (int j = 0; j < rank; ++j) {
          m[r][j] -= f * m[c][j];
          inv[r][j] -= f * inv[c][j];
        }
      }
    }
  }
  // H-coordinates of every root's Killing dual, then the pairing table
  std::vector<std::vector<Rational>> hdual(nr, std::vector<Rational>(rank, Rational(0)));
  for (std::size_t g = 0; g < nr; ++g)
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j)
        hdual[g][i] += inv[i][j] * rs.cartan_pairing(static_cast<int>(g), j);
  rs.pairing_.assign(nr, std::vector<Rational>(nr, Rational(0)));
  for (std::size_t a = 0; a < nr; ++a)
    for (std::size_t b = 0; b < nr; ++b) {
      Rational v(0);
      for (int j = 0; j < rank; ++j) v += Rational(rs.cartan_pairing(static_cast<int>(a), j)) * hdual[b][j];
      rs.pairing_[a][b] = v;
    }
  return rs;
}

int RootSystem::index_of(const RootVec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negative_of(int idx) const {
  std::size_t np = num_positive();
  return idx < static_cast<int>(np) ? idx + static_cast<int>(np) : idx - static_cast<int>(np);
}

std::optional<int> RootSystem::sum_index(int i, int j) const {
  RootVec s(roots_[i]);
  for (int k = 0; k < rank_; ++k) s[k] += roots_[j][k];
  int idx = index_of(s);
  if (idx < 0) return std::nullopt;
  return idx;
}

int RootSystem::height(int idx) const { return vec_height(roots_[idx]); }

int RootSystem::cartan_pairing(int root_idx, int simple) const {
  int s = 0;
  for (int j = 0; j < rank_; ++j) s += roots_[root_idx][j] * cartan_[simple][j];
  return s;
}

Rational RootSystem::pair(int a, int b) const { return pairing_[a][b]; }

Rational RootSystem::length_sq(int idx) const {
  Rational v(0);
  const RootVec& r = roots_[idx];
  for (int i = 0; i < rank_; ++i) {
    if (r[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) {
      if (r[j] == 0) continue;
      // (a_i, a_j) = cartan(i,j) * norm_i / 2
      v += Rational(r[i] * r[j]) * Rational(cartan_[i][j]) * simple_norm_[i] / 2;
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// SigmaAction

SigmaAction SigmaAction::from_theta(const RootSystem& rs, std::vector<int> theta) {
  const int rank = rs.rank();
  if (static_cast<int>(theta.size()) != rank) throw ThetaNotAutomorphism();
  for (int i = 0; i < rank; ++i) {
    if (theta[i] < 0 || theta[i] >= rank || theta[theta[i]] != i) throw ThetaNotAutomorphism();
  }
  const auto& c = rs.cartan_matrix();
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      if (c[theta[i]][theta[j]] != c[i][j]) throw ThetaNotAutomorphism();

  SigmaAction s;
  s.theta = std::move(theta);
  s.root_perm.resize(rs.num_roots());
  for (std::size_t k = 0; k < rs.num_roots(); ++k) {
    RootVec v(rs.rank(), 0);
    for (int i = 0; i < rank; ++i) v[s.theta[i]] -= rs.root(static_cast<int>(k))[i];
    int idx = rs.index_of(v);
    if (idx < 0) throw ThetaNotAutomorphism();
    s.root_perm[k] = idx;
  }
  return s;
}

SigmaAction SigmaAction::inner(const RootSystem& rs) {
  std::vector<int> id(rs.rank());
  std::iota(id.begin(), id.end(), 0);
  return from_theta(rs, id);
}

bool SigmaAction::is_inner(const RootSystem& rs) const {
  for (std::size_t k = 0; k < rs.num_roots(); ++k)
    if (root_perm[k] != rs.negative_of(static_cast<int>(k))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// subsets

bool RootSubset::contains(int idx) const {
  return std::binary_search(members.begin(), members.end(), idx);
}

SubsetClassification classify_subset(const RootSubset& r0, const SigmaAction& sigma) {
  const RootSystem& rs = *r0.parent;
  SubsetClassification c;
  c.closed = true;
  for (int a : r0.members)
    for (int b : r0.members) {
      auto s = rs.sum_index(a, b);
      if (s && !r0.contains(*s)) {
        c.closed = false;
        c.closure_violations.push_back({a, b, *s});
      }
    }
  std::vector<char> covered(rs.num_roots(), 0);
  for (int a : r0.members) {
    covered[a] = 1;
    covered[sigma(a)] = 1;
  }
  c.sigma_parabolic = std::all_of(covered.begin(), covered.end(), [](char x) { return x; });
  bool disjoint = true;
  for (int a : r0.members)
    if (r0.contains(sigma(a))) disjoint = false;
  c.sigma_positive = c.sigma_parabolic && disjoint;
  for (int a : r0.members)
    if (r0.contains(rs.negative_of(a))) c.symmetric_part.push_back(a);
  return c;
}

std::vector<RootSubset> enumerate_sigma_parabolic(const RootSystem& rs, const SigmaAction& sigma,
                                                  std::size_t max_results,
                                                  const EnumerateOptions& opts) {
  const std::size_t n = rs.num_roots();
  if (n > 62 || (std::uint64_t{1} << n) > opts.budget) throw SearchBudgetExceeded();

  // precompute sum table for the closure scan
  std::vector<std::vector<int>> sum(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto s = rs.sum_index(static_cast<int>(a), static_cast<int>(b));
      if (s) sum[a][b] = *s;
    }

  std::vector<RootSubset> out;
  const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    // sigma-parabolic: mask ∪ sigma(mask) covers everything
    std::uint64_t cover = mask;
    for (std::size_t a = 0; a < n; ++a)
      if (mask & (std::uint64_t{1} << a)) cover |= std::uint64_t{1} << sigma(static_cast<int>(a));
    if (cover != full) continue;
    if (opts.sigma_positive_only) {
      bool disjoint = true;
      for (std::size_t a = 0; a < n && disjoint; ++a)
        if ((mask & (std::uint64_t{1} << a)) && (mask & (std::uint64_t{1} << sigma(static_cast<int>(a)))))
          disjoint = false;
      if (!disjoint) continue;
    }
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask & (std::uint64_t{1} << a))) continue;
      for (std::size_t b = a; b < n && closed; ++b) {
        if (!(mask & (std::uint64_t{1} << b))) continue;
        int s = sum[a][b];
        if (s >= 0 && !(mask & (std::uint64_t{1} << s))) closed = false;
      }
    }
    if (!closed) continue;
    RootSubset r0;
    r0.parent = &rs;
    for (std::size_t a = 0; a < n; ++a)
      if (mask & (std::uint64_t{1} << a)) r0.members.push_back(static_cast<int>(a));
    out.push_back(std::move(r0));
    if (out.size() >= max_results) break;
  }
  return out;
}

EnumerateOutcome enumerate_sigma_parabolic_partial(const RootSystem& rs, const SigmaAction& sigma,
                                                   std::size_t max_results,
                                                   const EnumerateOptions& opts) {
  EnumerateOutcome out;
  const std::size_t n = rs.num_roots();
  if (n > 62) {
    out.complete = false;
    return out;
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  if (full + 1 <= opts.budget) {
    out.subsets = enumerate_sigma_parabolic(rs, sigma, max_results, opts);
    return out;
  }
  out.complete = false;
  // scan only the first `budget` masks
  std::vector<std::vector<int>> sum(n, std::vector<int>(n, -1));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto s = rs.sum_index(static_cast<int>(a), static_cast<int>(b));
      if (s) sum[a][b] = *s;
    }
  for (std::uint64_t mask = 1; mask <= full && mask <= opts.budget; ++mask) {
    std::uint64_t cover = mask;
    for (std::size_t a = 0; a < n; ++a)
      if (mask & (std::uint64_t{1} << a)) cover |= std::uint64_t{1} << sigma(static_cast<int>(a));
    if (cover != full) continue;
    if (opts.sigma_positive_only) {
      bool disjoint = true;
      for (std::size_t a = 0; a < n && disjoint; ++a)
        if ((mask & (std::uint64_t{1} << a)) && (mask & (std::uint64_t{1} << sigma(static_cast<int>(a)))))
          disjoint = false;
      if (!disjoint) continue;
    }
    bool closed = true;
    for (std::size_t a = 0; a < n && closed; ++a) {
      if (!(mask & (std::uint64_t{1} << a))) continue;
      for (std::size_t b = a; b < n && closed; ++b) {
        if (!(mask & (std::uint64_t{1} << b))) continue;
        int s = sum[a][b];
        if (s >= 0 && !(mask & (std::uint64_t{1} << s))) closed = false;
      }
    }
    if (!closed) continue;
    RootSubset r0;
    r0.parent = &rs;
    for (std::size_t a = 0; a < n; ++a)
      if (mask & (std::uint64_t{1} << a)) r0.members.push_back(static_cast<int>(a));
    out.subsets.push_back(std::move(r0));
    if (out.subsets.size() >= max_results) break;
  }
  return out;
}

std::vector<int> simple_system_of(const RootSystem& rs, const std::vector<int>& subset) {
  RootSubset r0{&rs, subset};
  std::sort(r0.members.begin(), r0.members.end());
  for (int a : r0.members)
    if (!r0.contains(rs.negative_of(a))) throw NotSymmetricClosed();
  for (int a : r0.members)
    for (int b : r0.members) {
      auto s = rs.sum_index(a, b);
      if (s && !r0.contains(*s)) throw NotSymmetricClosed();
    }
  std::vector<int> positive;
  for (int a : r0.members)
    if (rs.is_positive(a)) positive.push_back(a);
  std::vector<int> simples;
  for (int g : positive) {
    bool decomposable = false;
    for (int d : positive) {
      if (decomposable) break;
      for (int e : positive) {
        auto s = rs.sum_index(d, e);
        if (s && *s == g) {
          decomposable = true;
          break;
        }
      }
    }
    if (!decomposable) simples.push_back(g);
  }
  return simples;
}

int height_in(const RootSystem& rs, int root_idx, const std::vector<int>& simples) {
  // solve root = sum c_k * simple_k over Q, demand integral uniform-sign c
  const int rank = rs.rank();
  const int m = static_cast<int>(simples.size());
  std::vector<std::vector<Rational>> a(rank, std::vector<Rational>(m + 1, Rational(0)));
  for (int i = 0; i < rank; ++i) {
    for (int k = 0; k < m; ++k) a[i][k] = rs.root(simples[k])[i];
    a[i][m] = rs.root(root_idx)[i];
  }
  // gaussian elimination
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < m && row < rank; ++col) {
    int piv = row;
    while (piv < rank && a[piv][col] == 0) ++piv;
    if (piv == rank) continue;
    std::swap(a[piv], a[row]);
    Rational d = a[row][col];
    for (int j = 0; j <= m; ++j) a[row][j] /= d;
    for (int r = 0; r < rank; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j <= m; ++j) a[r][j] -= f * a[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (int r = row; r < rank; ++r)
    if (a[r][m] != 0) throw NotInSubsystem();
  std::vector<Rational> c(m, Rational(0));
  for (int p = 0; p < row; ++p) c[pivot_col[p]] = a[p][m];
  int h = 0, sign = 0;
  for (int k = 0; k < m; ++k) {
    if (c[k].get_den() != 1) throw NotInSubsystem();
    long v = c[k].get_num().get_si();
    if (v > 0) {
      if (sign < 0) throw NotInSubsystem();
      sign = 1;
    } else if (v < 0) {
      if (sign > 0) throw NotInSubsystem();
      sign = -1;
    }
    h += static_cast<int>(v);
  }
  return h;
}

}  // namespace liegc
