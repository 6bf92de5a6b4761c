#include "liegc/chevalley.hpp"

#include <cassert>
#include <stdexcept>

namespace liegc {

namespace {

struct Builder {
  const RootSystem& rs;
  std::map<std::pair<int, int>, Rational> pos;  // positive pairs (a<b by index), sum a root

  explicit Builder(const RootSystem& r) : rs(r) {}

  Rational lookup_pos(int a, int b) const {
    if (a > b) {
      auto it = pos.find({b, a});
      if (it == pos.end()) throw std::logic_error("chevalley: positive pair not ready");
      return -it->second;
    }
    auto it = pos.find({a, b});
    if (it == pos.end()) throw std::logic_error("chevalley: positive pair not ready");
    return it->second;
  }

  // N(a,b) for arbitrary signs, reduced to the positive table.
  Rational resolve(int a, int b) const {
    auto s = rs.sum_index(a, b);
    if (!s) return Rational(0);
    bool pa = rs.is_positive(a), pb = rs.is_positive(b);
    if (pa && pb) return lookup_pos(a, b);
    if (!pa && !pb) return -resolve(rs.negative_of(a), rs.negative_of(b));
    if (!pa) return -resolve(b, a);
    // a positive, b negative, a+b a root; rotate through a+b+c = 0
    int nb = rs.negative_of(b);
    if (rs.is_positive(*s)) {
      // N(a,b) = -N(-b, a+b) * (a+b,a+b)/(a,a)
      return -lookup_pos(nb, *s) * rs.length_sq(*s) / rs.length_sq(a);
    }
    // N(a,b) = N(c,a) * (c,c)/(b,b) with c = -(a+b) positive, c+a = -b
    int c = rs.negative_of(*s);
    return lookup_pos(c, a) * rs.length_sq(c) / rs.length_sq(b);
  }
};

}  // namespace

Rational ChevalleyData::N(int a, int b) const {
  auto it = table.find({a, b});
  return it == table.end() ? Rational(0) : it->second;
}

int ChevalleyData::string_p(int a, int b) const {
  int p = 0;
  int cur = b;
  for (;;) {
    auto down = rs->sum_index(cur, rs->negative_of(a));
    if (!down) break;
    cur = *down;
    ++p;
  }
  return p;
}

ChevalleyData ChevalleyData::build(const RootSystem& rs) {
  ChevalleyData cd;
  cd.rs = &rs;
  Builder bld(rs);

  const int npos = static_cast<int>(rs.num_positive());
  // positive roots are stored sorted by (height, lex); process sums in
  // that order so extraspecial pairs are fixed before they are needed
  for (int g = 0; g < npos; ++g) {
    if (rs.height(g) < 2) continue;
    // candidate pairs (a,b), a<b, a+b = g
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < npos; ++a) {
      auto diff = rs.sum_index(g, rs.negative_of(a));
      if (!diff || !rs.is_positive(*diff)) continue;
      int b = *diff;
      if (a < b) pairs.push_back({a, b});
    }
    // pairs come out sorted by a; the first is the extraspecial one
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      auto [a, b] = pairs[k];
      if (k == 0) {
        bld.pos[{a, b}] = Rational(cd.string_p(a, b) + 1);
        continue;
      }
      // Jacobi on (e_{-a1}, e_a, e_b) with (a1,b1) the extraspecial pair:
      // N(-a1,a)N(a-a1,b) + N(b,-a1)N(b-a1,a) + N(a,b)N(g,-a1) = 0
      int a1 = pairs[0].first;
      int na1 = rs.negative_of(a1);
      Rational t1(0), t2(0);
      auto d1 = rs.sum_index(a, na1);
      if (d1) t1 = bld.resolve(na1, a) * bld.resolve(*d1, b);
      auto d2 = rs.sum_index(b, na1);
      if (d2) t2 = bld.resolve(b, na1) * bld.resolve(*d2, a);
      Rational denom = bld.resolve(g, na1);
      if (denom == 0) throw std::logic_error("chevalley: vanishing pivot constant");
      bld.pos[{a, b}] = -(t1 + t2) / denom;
    }
  }

  // fill the complete ordered table
  const int nr = static_cast<int>(rs.num_roots());
  for (int a = 0; a < nr; ++a)
    for (int b = 0; b < nr; ++b) {
      if (b == rs.negative_of(a)) continue;
      if (!rs.sum_index(a, b)) continue;
      cd.table[{a, b}] = bld.resolve(a, b);
    }

  // coroot coordinates: g^vee = sum n_i (a_i,a_i)/(g,g) * a_i^vee
  cd.coroot_coords.assign(nr, std::vector<Rational>(rs.rank(), Rational(0)));
  for (int g = 0; g < nr; ++g) {
    Rational glen = rs.length_sq(g);
    for (int i = 0; i < rs.rank(); ++i) {
      if (rs.root(g)[i] == 0) continue;
      RootVec unit(rs.rank(), 0);
      unit[i] = 1;
      int si = rs.index_of(unit);
      cd.coroot_coords[g][i] = Rational(rs.root(g)[i]) * rs.length_sq(si) / glen;
    }
  }
  return cd;
}

}  // namespace liegc
