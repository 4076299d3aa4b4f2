#include "noncomm/ffield.hpp"

#include <algorithm>
#include <limits>

namespace noncomm {
namespace {

using Poly = std::vector<std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo g over GF(p); g nonzero.
Poly poly_rem(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(factor, g[i], p)) % p;
    }
    trim(f);
  }
  return f;
}

// Quotient and remainder of f / g over GF(p).
std::pair<Poly, Poly> poly_divmod(Poly f, const Poly& g, std::uint64_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  if (f.size() < g.size()) return {Poly{}, f};
  Poly quot(f.size() - dg, 0);
  const std::uint64_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = mulmod(f.back(), lead_inv, p);
    const std::size_t shift = f.size() - 1 - dg;
    quot[shift] = factor;
    for (std::size_t i = 0; i <= dg; ++i) {
      f[shift + i] = (f[shift + i] + p - mulmod(factor, g[i], p)) % p;
    }
    trim(f);
  }
  trim(quot);
  return {quot, f};
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

bool has_root(std::span<const std::uint64_t> f, std::uint64_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (mulmod(acc, x, p) + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

const FieldSpec& same_field(const FieldElem& a, const FieldElem& b) {
  if (a.field_ptr() != b.field_ptr() && !(a.field() == b.field())) throw FieldError("field mismatch");
  return a.field();
}

FieldElem from_poly(const FieldPtr& field, Poly f) {
  f.resize(field->n, 0);
  return FieldElem(field, std::move(f));
}

}  // namespace

std::string FieldSpec::name() const { return "GF(" + std::to_string(p) + "^" + std::to_string(n) + ")"; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower prime_power_decompose(std::uint64_t q) {
  if (q < 2) return {};
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {q, 1};
  unsigned n = 0;
  while (q % p == 0) {
    q /= p;
    ++n;
  }
  if (q != 1) return {};
  return {p, n};
}

bool is_irreducible(std::span<const std::uint64_t> monic, std::uint64_t p) {
  if (monic.size() < 2 || monic.back() != 1) return false;
  const std::size_t deg = monic.size() - 1;
  if (deg == 1) return true;
  if (has_root(monic, p)) return false;
  if (deg <= 3) return true;
  const Poly f(monic.begin(), monic.end());
  // Every monic divisor candidate of degree 2..deg/2, enumerated by its
  // lower coefficients as base-p digits.
  for (std::size_t d = 2; d <= deg / 2; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    while (true) {
      if (poly_rem(f, g, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++g[i] == p) g[i++] = 0;
      if (i == d) break;
    }
  }
  return true;
}

FieldPtr make_field(std::uint64_t p, unsigned n) {
  if (!is_prime(p)) throw FieldError("not prime");
  if (n < 1 || n > 8) throw FieldError("degree unsupported");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) throw FieldError("degree unsupported");
    q *= p;
  }
  // Lexicographic order comparing c0 first: c0 is the most significant digit
  // of the enumeration counter.
  Poly f(n + 1, 0);
  f[n] = 1;
  while (true) {
    if (is_irreducible(f, p)) break;
    std::size_t i = n;
    while (i-- > 0) {
      if (++f[i] < p) break;
      f[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) throw FieldError("no irreducible polynomial found");
  }
  auto spec = std::make_shared<FieldSpec>();
  spec->p = p;
  spec->n = n;
  spec->modulus = std::move(f);
  spec->q = q;
  return spec;
}

FieldElem::FieldElem(FieldPtr field, std::vector<std::uint64_t> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw FieldError("null field");
  if (coeffs_.size() != field_->n) throw FieldError("coefficient count does not match degree");
  for (auto c : coeffs_)
    if (c >= field_->p) throw FieldError("coefficient out of range");
}

FieldElem FieldElem::zero(const FieldPtr& field) { return FieldElem(field, Poly(field->n, 0)); }

FieldElem FieldElem::one(const FieldPtr& field) {
  Poly c(field->n, 0);
  c[0] = 1;
  return FieldElem(field, std::move(c));
}

FieldElem FieldElem::from_code(const FieldPtr& field, std::uint64_t code) {
  if (code >= field->q) throw FieldError("element code out of range");
  Poly c(field->n, 0);
  for (unsigned i = 0; i < field->n; ++i) {
    c[i] = code % field->p;
    code /= field->p;
  }
  return FieldElem(field, std::move(c));
}

std::uint64_t FieldElem::code() const {
  std::uint64_t r = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * field_->p + coeffs_[i];
  return r;
}

bool FieldElem::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](auto c) { return c == 0; });
}

bool FieldElem::is_one() const {
  if (coeffs_[0] != 1) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](auto c) { return c == 0; });
}

std::string FieldElem::str() const {
  if (field_->n == 1) return std::to_string(coeffs_[0]);
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const auto c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || c != 1) out += std::to_string(c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_ && !(*a.field_ == *b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

FieldElem add(const FieldElem& a, const FieldElem& b) {
  const auto& f = same_field(a, b);
  Poly c(f.n);
  for (unsigned i = 0; i < f.n; ++i) c[i] = (a.coeffs()[i] + b.coeffs()[i]) % f.p;
  return FieldElem(a.field_ptr(), std::move(c));
}

FieldElem neg(const FieldElem& a) {
  const auto& f = a.field();
  Poly c(f.n);
  for (unsigned i = 0; i < f.n; ++i) c[i] = (f.p - a.coeffs()[i]) % f.p;
  return FieldElem(a.field_ptr(), std::move(c));
}

FieldElem sub(const FieldElem& a, const FieldElem& b) {
  same_field(a, b);
  return add(a, neg(b));
}

FieldElem mul(const FieldElem& a, const FieldElem& b) {
  const auto& f = same_field(a, b);
  Poly x(a.coeffs().begin(), a.coeffs().end());
  Poly y(b.coeffs().begin(), b.coeffs().end());
  trim(x);
  trim(y);
  return from_poly(a.field_ptr(), poly_rem(poly_mul(x, y, f.p), f.modulus, f.p));
}

FieldElem inv(const FieldElem& a) {
  if (a.is_zero()) throw FieldError("zero has no inverse");
  const auto& f = a.field();
  // Invariant: s * a == r (mod modulus).
  Poly r0 = f.modulus, r1(a.coeffs().begin(), a.coeffs().end());
  trim(r1);
  Poly s0{}, s1{1};
  while (!r1.empty()) {
    auto [quot, rem] = poly_divmod(r0, r1, f.p);
    Poly s2 = poly_sub(s0, poly_mul(quot, s1, f.p), f.p);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant since the modulus is irreducible.
  const std::uint64_t scale = inv_mod(r0[0], f.p);
  for (auto& c : s0) c = mulmod(c, scale, f.p);
  return from_poly(a.field_ptr(), poly_rem(s0, f.modulus, f.p));
}

FieldElem pow(const FieldElem& a, std::uint64_t k) {
  FieldElem result = FieldElem::one(a.field_ptr());
  FieldElem base = a;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

std::vector<FieldElem> all_elements(const FieldPtr& field) {
  std::vector<FieldElem> out;
  out.reserve(field->q);
  for (std::uint64_t c = 0; c < field->q; ++c) out.push_back(FieldElem::from_code(field, c));
  return out;
}

FieldTables FieldTables::build(const FieldPtr& field) {
  if (field->q > 1024) throw FieldError("field too large for lookup tables");
  FieldTables t;
  t.q = static_cast<std::uint32_t>(field->q);
  const auto elems = all_elements(field);
  t.add.resize(t.q * t.q);
  t.mul.resize(t.q * t.q);
  t.neg.resize(t.q);
  t.inv.assign(t.q, 0);
  for (std::uint32_t a = 0; a < t.q; ++a) {
    t.neg[a] = static_cast<std::uint32_t>(noncomm::neg(elems[a]).code());
    if (a) t.inv[a] = static_cast<std::uint32_t>(noncomm::inv(elems[a]).code());
    for (std::uint32_t b = 0; b < t.q; ++b) {
      t.add[a * t.q + b] = static_cast<std::uint32_t>(noncomm::add(elems[a], elems[b]).code());
      t.mul[a * t.q + b] = static_cast<std::uint32_t>(noncomm::mul(elems[a], elems[b]).code());
    }
  }
  return t;
}

}  // namespace noncomm
