#include "liegc/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace liegc {

// ---------------------------------------------------------------------------
// integer helpers

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::uint64_t squarefree_part(std::uint64_t n, std::uint64_t* square_root_factor) {
  std::uint64_t sf = 1, sq = 1;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned k = 0; k < e / 2; ++k) sq *= p;
    if (e % 2) sf *= p;
  }
  sf *= n;  // leftover prime
  if (square_root_factor) *square_root_factor = sq;
  return sf;
}

bool is_squarefree(std::uint64_t n) { return squarefree_part(n) == n; }

// ---------------------------------------------------------------------------
// FieldSpec

FieldSpec::FieldSpec(std::vector<std::uint64_t> radicands) : radicands_(std::move(radicands)) {
  std::sort(radicands_.begin(), radicands_.end());
  for (std::size_t k = 0; k < radicands_.size(); ++k) {
    std::uint64_t r = radicands_[k];
    if (r < 2 || !is_squarefree(r)) throw InvalidRadicand(r);
    if (k > 0 && radicands_[k - 1] == r) throw InvalidRadicand(r);
  }
}

FieldSpec FieldSpec::product_closure(std::vector<std::uint64_t> seed) {
  std::set<std::uint64_t> s;
  for (std::uint64_t r : seed) {
    if (r < 2 || !is_squarefree(r)) throw InvalidRadicand(r);
    s.insert(r);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint64_t> cur(s.begin(), s.end());
    for (std::size_t a = 0; a < cur.size(); ++a)
      for (std::size_t b = a; b < cur.size(); ++b) {
        std::uint64_t g = std::gcd(cur[a], cur[b]);
        std::uint64_t prod = (cur[a] / g) * (cur[b] / g);
        if (prod >= 2 && s.insert(prod).second) grew = true;
      }
  }
  return FieldSpec(std::vector<std::uint64_t>(s.begin(), s.end()));
}

bool FieldSpec::allows(std::uint64_t radical) const {
  if (radical == 1) return true;
  return std::binary_search(radicands_.begin(), radicands_.end(), radical);
}

std::uint64_t FieldSpec::tower_degree() const {
  // 2^(1 + rank of the radicands' prime-exponent vectors over GF(2))
  std::vector<std::uint64_t> primes;
  for (std::uint64_t r : radicands_)
    for (std::uint64_t p : prime_factors(r))
      if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
  std::vector<std::uint64_t> rows;
  for (std::uint64_t r : radicands_) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < primes.size(); ++k)
      if (r % primes[k] == 0) v |= (std::uint64_t{1} << k);
    rows.push_back(v);
  }
  unsigned rank = 0;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    std::uint64_t bit = std::uint64_t{1} << k;
    auto it = std::find_if(rows.begin(), rows.end(), [&](std::uint64_t v) { return v & bit; });
    if (it == rows.end()) continue;
    std::uint64_t pivot = *it;
    rows.erase(it);
    for (auto& v : rows)
      if (v & bit) v ^= pivot;
    ++rank;
  }
  return std::uint64_t{1} << (rank + 1);
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(long n) {
  if (n != 0) terms_.push_back({Key{2}, Rational(n)});
}

Scalar::Scalar(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c != 0) terms_.push_back({Key{2}, c});
}

Scalar::Scalar(long num, long den) {
  if (den == 0) throw DivisionByZero();
  Rational q(num, den);
  q.canonicalize();
  if (q != 0) terms_.push_back({Key{2}, q});
}

Scalar Scalar::i() {
  Scalar s;
  s.terms_.push_back({Key{3}, Rational(1)});
  return s;
}

Scalar Scalar::sqrt(std::uint64_t r, FieldSpecPtr spec) {
  if (!spec || !spec->allows(r)) throw RadicandMissing(r);
  if (r < 2 || !is_squarefree(r)) throw InvalidRadicand(r);
  Scalar s;
  s.terms_.push_back({r << 1, Rational(1)});
  s.spec_ = std::move(spec);
  return s;
}

bool Scalar::is_one() const {
  return terms_.size() == 1 && terms_[0].first == Key{2} && terms_[0].second == 1;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Key{2});
}

bool Scalar::is_real() const {
  for (const auto& [k, q] : terms_)
    if (k & 1) return false;
  return true;
}

Rational Scalar::rational_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_rational()) throw ScalarError("scalar is not rational: " + str());
  return terms_[0].second;
}

void Scalar::insert_term(Key k, const Rational& q) {
  if (q == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                             [](const Term& t, Key key) { return t.first < key; });
  if (it != terms_.end() && it->first == k) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {k, q});
  }
}

FieldSpecPtr Scalar::merge_specs(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a == b || *a == *b) return a;
  throw TowerMismatch();
}

void Scalar::police(const FieldSpecPtr& spec) const {
  for (const auto& [k, q] : terms_) {
    std::uint64_t radical = k >> 1;
    if (radical == 1) continue;
    if (!spec || !spec->allows(radical)) throw RadicandMissing(radical);
  }
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  for (auto& [k, q] : r.terms_) q = -q;
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r;
  r.spec_ = merge_specs(spec_, o.spec_);
  r.terms_ = terms_;
  for (const auto& [k, q] : o.terms_) r.insert_term(k, q);
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::raw_mul(const Scalar& a, const Scalar& b) {
  Scalar r;
  for (const auto& [ka, qa] : a.terms_) {
    std::uint64_t sa = ka >> 1;
    bool ia = ka & 1;
    for (const auto& [kb, qb] : b.terms_) {
      std::uint64_t sb = kb >> 1;
      bool ib = kb & 1;
      Rational q = qa * qb;
      if (ia && ib) q = -q;  // i*i = -1
      std::uint64_t g = std::gcd(sa, sb);
      std::uint64_t s = (sa / g) * (sb / g);
      if (g != 1) q *= static_cast<unsigned long>(g);
      r.insert_term((s << 1) | (ia != ib ? 1 : 0), q);
    }
  }
  return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = raw_mul(*this, o);
  r.spec_ = merge_specs(spec_, o.spec_);
  r.police(r.spec_);
  return r;
}

Scalar Scalar::raw_inverse(const Scalar& a) {
  if (a.is_zero()) throw DivisionByZero();
  // Eliminate radicals one prime at a time: write d = x + sqrt(p)*y and
  // multiply numerator and denominator by x - sqrt(p)*y.  The new
  // denominator x^2 - p*y^2 no longer involves p.
  Scalar num(1), den(a);
  for (;;) {
    std::uint64_t p = 0;
    for (const auto& [k, q] : den.terms_) {
      std::uint64_t radical = k >> 1;
      if (radical > 1) {
        p = prime_factors(radical).front();
        break;
      }
    }
    if (p == 0) break;
    Scalar x, y;
    for (const auto& [k, q] : den.terms_) {
      std::uint64_t radical = k >> 1;
      bool ii = k & 1;
      if (radical % p == 0)
        y.insert_term(((radical / p) << 1) | (ii ? 1 : 0), q);
      else
        x.insert_term(k, q);
    }
    Scalar sqrt_p;
    sqrt_p.terms_.push_back({p << 1, Rational(1)});
    Scalar conj = x - raw_mul(sqrt_p, y);  // x - sqrt(p)*y
    num = raw_mul(num, conj);
    den = raw_mul(den, conj);
  }
  // den is now in Q(i); clear i by the complex conjugate.
  if (!den.is_real()) {
    Scalar c = den.conjugate();
    num = raw_mul(num, c);
    den = raw_mul(den, c);
  }
  if (!den.is_rational()) throw ScalarError("internal: norm descent failed");
  Rational d = den.rational_value();
  if (d == 0) throw DivisionByZero();
  Scalar r;
  for (const auto& [k, q] : num.terms_) r.insert_term(k, q / d);
  return r;
}

Scalar Scalar::operator/(const Scalar& o) const {
  if (o.is_zero()) throw DivisionByZero();
  Scalar r = raw_mul(*this, raw_inverse(o));
  r.spec_ = merge_specs(spec_, o.spec_);
  r.police(r.spec_);
  return r;
}

Scalar Scalar::conjugate() const {
  Scalar r(*this);
  for (auto& [k, q] : r.terms_)
    if (k & 1) q = -q;
  return r;
}

std::pair<Scalar, Scalar> Scalar::real_imag() const {
  Scalar re, im;
  re.spec_ = spec_;
  im.spec_ = spec_;
  for (const auto& [k, q] : terms_) {
    if (k & 1)
      im.insert_term(k & ~Key{1}, q);
    else
      re.insert_term(k, q);
  }
  return {re, im};
}

Scalar Scalar::with_field(FieldSpecPtr spec) const {
  police(spec);
  Scalar r(*this);
  r.spec_ = std::move(spec);
  return r;
}

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, q] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << q.get_str();
    if (k & 1) os << " * i^1";
    std::uint64_t radical = k >> 1;
    if (radical > 1) os << " * sqrt(" << radical << ")^1";
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

double Scalar::to_double() const {
  double v = 0;
  for (const auto& [k, q] : terms_) {
    if (k & 1) continue;  // drop imaginary part
    v += q.get_d() * std::sqrt(static_cast<double>(k >> 1));
  }
  return v;
}

namespace {

void skip_ws(const std::string& t, std::size_t& p) {
  while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
}

}  // namespace

Scalar Scalar::parse(const std::string& text, FieldSpecPtr spec) {
  Scalar result;
  std::size_t p = 0;
  skip_ws(text, p);
  if (p >= text.size()) throw ScalarParseError("empty input", p);
  bool expect_term = true;
  while (p < text.size()) {
    if (!expect_term) {
      if (text[p] != '+') throw ScalarParseError("expected '+'", p);
      ++p;
      skip_ws(text, p);
    }
    expect_term = false;
    // rational coefficient: [-]digits[/digits]
    std::size_t start = p;
    if (p < text.size() && (text[p] == '-' || text[p] == '+')) ++p;
    while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
    if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
      throw ScalarParseError("expected rational coefficient", start);
    if (p < text.size() && text[p] == '/') {
      ++p;
      std::size_t dstart = p;
      while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
      if (p == dstart) throw ScalarParseError("expected denominator", dstart);
    }
    Rational q;
    if (q.set_str(text.substr(start, p - start), 10) != 0)
      throw ScalarParseError("bad rational", start);
    q.canonicalize();
    bool has_i = false;
    std::uint64_t radical = 1;
    skip_ws(text, p);
    while (p < text.size() && text[p] == '*') {
      ++p;
      skip_ws(text, p);
      if (p < text.size() && text[p] == 'i') {
        ++p;
        if (p + 1 < text.size() && text[p] == '^' && text[p + 1] == '1') p += 2;
        if (has_i) throw ScalarParseError("repeated factor i", p);
        has_i = true;
      } else if (text.compare(p, 5, "sqrt(") == 0) {
        p += 5;
        std::size_t nstart = p;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) ++p;
        if (p == nstart || p >= text.size() || text[p] != ')')
          throw ScalarParseError("malformed sqrt factor", nstart);
        std::uint64_t r = std::stoull(text.substr(nstart, p - nstart));
        ++p;  // ')'
        if (p + 1 < text.size() && text[p] == '^' && text[p + 1] == '1') p += 2;
        if (r < 2 || !is_squarefree(r)) throw InvalidRadicand(r);
        std::uint64_t g = std::gcd(radical, r);
        Rational extra(static_cast<unsigned long>(g));
        q *= extra;
        radical = (radical / g) * (r / g);
      } else {
        throw ScalarParseError("expected factor i or sqrt(...)", p);
      }
      skip_ws(text, p);
    }
    result.insert_term((radical << 1) | (has_i ? 1 : 0), q);
    skip_ws(text, p);
  }
  result.spec_ = spec;
  result.police(spec);
  return result;
}

}  // namespace liegc
