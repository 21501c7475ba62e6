#include "lieaid/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

namespace lieaid {
namespace detail {

struct FieldData {
  FieldKind kind = FieldKind::rational;
  std::uint32_t p = 0;
  std::uint32_t k = 1;
  std::vector<std::uint32_t> modulus;
  std::uint64_t q = 0;
  // Dense operation tables, filled for small extension fields.
  std::vector<std::uint32_t> add_tab, mul_tab, inv_tab;

  std::vector<std::uint32_t> digits(std::uint32_t a) const {
    std::vector<std::uint32_t> d(k);
    for (std::uint32_t i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  std::uint32_t undigits(const std::vector<std::uint32_t>& d) const {
    std::uint64_t v = 0;
    for (std::uint32_t i = k; i-- > 0;) v = v * p + d[i];
    return static_cast<std::uint32_t>(v);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % p);
    if (!add_tab.empty()) return add_tab[a * q + b];
    return add_slow(a, b);
  }
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    for (std::uint32_t i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
    return undigits(da);
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (k == 1) return a == 0 ? 0 : p - a;
    auto da = digits(a);
    for (auto& x : da) x = x == 0 ? 0 : p - x;
    return undigits(da);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (k == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
    if (!mul_tab.empty()) return mul_tab[a * q + b];
    return mul_slow(a, b);
  }
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const {
    auto da = digits(a), db = digits(b);
    std::vector<std::uint64_t> prod(2 * k - 1, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{da[i]} * db[j]) % p;
    // Reduce with the monic modulus from the top degree down.
    for (std::size_t deg = prod.size(); deg-- > k;) {
      std::uint64_t c = prod[deg];
      if (c == 0) continue;
      prod[deg] = 0;
      for (std::uint32_t i = 0; i < k; ++i)
        prod[deg - k + i] = (prod[deg - k + i] + (p - c) * modulus[i]) % p;
    }
    std::vector<std::uint32_t> out(k);
    for (std::uint32_t i = 0; i < k; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return undigits(out);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, b = a;
    while (e) {
      if (e & 1) r = mul(r, b);
      b = mul(b, b);
      e >>= 1;
    }
    return r;
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw ArithmeticError("inverse of zero in " + std::string(k == 1 ? "GF(p)" : "GF(p^k)"));
    if (!inv_tab.empty()) return inv_tab[a];
    return pow(a, q - 2);
  }
};

}  // namespace detail

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Polynomials over GF(p) as coefficient vectors, low degree first.
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

PolyP poly_mod(PolyP a, const PolyP& m, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = [&] {
    std::uint64_t r = 1, b = m.back() % p, e = p - 2;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  }();
  while (a.size() >= m.size()) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

bool has_root(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return true;
  }
  return false;
}

bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::uint32_t k = static_cast<std::uint32_t>(f.size() - 1);
  if (k <= 3) return k == 1 || !has_root(f, p);
  PolyP fp(f.begin(), f.end());
  // Trial division by every monic polynomial of degree 1..k/2.
  for (std::uint32_t d = 1; d <= k / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PolyP g(d + 1);
      std::uint64_t c = code;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = c % p;
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(fp, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k) {
  if (p == 3 && k == 3) return {1, 2, 0, 1};
  if (p == 2 && k == 3) return {1, 1, 0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(k + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < k; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InputError("no irreducible polynomial found");
}

using FieldKey = std::tuple<int, std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>;

const detail::FieldData* intern(detail::FieldData data) {
  static std::mutex mu;
  static std::map<FieldKey, std::unique_ptr<detail::FieldData>> registry;
  std::lock_guard lock(mu);
  FieldKey key{static_cast<int>(data.kind), data.p, data.k, data.modulus};
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto owned = std::make_unique<detail::FieldData>(std::move(data));
  auto* raw = owned.get();
  registry.emplace(std::move(key), std::move(owned));
  return raw;
}

mpq_class parse_rational(std::string_view s) {
  if (s.empty()) throw InputError("empty rational literal");
  std::string text(s);
  if (text.front() == '+') text.erase(0, 1);
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (c == '-' && i == 0);
    if (!ok) throw InputError("malformed rational literal '" + std::string(s) + "'");
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw InputError("malformed rational literal '" + std::string(s) + "'");
  if (q.get_den() == 0) throw InputError("zero denominator in '" + std::string(s) + "'");
  q.canonicalize();
  return q;
}

std::string render_rational(const mpq_class& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- Field

Field Field::rational() {
  static const detail::FieldData* d = [] {
    detail::FieldData f;
    f.kind = FieldKind::rational;
    return intern(std::move(f));
  }();
  return Field(d);
}

Field Field::gaussian_rational() {
  static const detail::FieldData* d = [] {
    detail::FieldData f;
    f.kind = FieldKind::gaussian_rational;
    return intern(std::move(f));
  }();
  return Field(d);
}

Field Field::finite(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw InputError("GF(p) requires a prime p, got " + std::to_string(p));
  if (k == 0) throw InputError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q >= (std::uint64_t{1} << 31)) throw InputError("finite field too large");
  }
  if (k == 1) {
    modulus.clear();
  } else if (modulus.empty()) {
    modulus = default_modulus(p, k);
  } else {
    if (modulus.size() != k + 1) throw InputError("modulus must have k+1 coefficients");
    for (auto& c : modulus) c %= p;
    if (modulus.back() != 1) throw InputError("modulus must be monic");
    if (!is_irreducible(modulus, p)) throw InputError("modulus is not irreducible over GF(" + std::to_string(p) + ")");
  }
  detail::FieldData f;
  f.kind = FieldKind::finite;
  f.p = p;
  f.k = k;
  f.modulus = std::move(modulus);
  f.q = q;
  if (k > 1 && q <= 256) {
    f.add_tab.resize(q * q);
    f.mul_tab.resize(q * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        f.add_tab[a * q + b] = f.add_slow(a, b);
        f.mul_tab[a * q + b] = f.mul_slow(a, b);
      }
  }
  if (q <= 65536) {
    f.inv_tab.assign(q, 0);
    for (std::uint32_t a = 1; a < q; ++a) f.inv_tab[a] = f.pow(a, q - 2);
  }
  return Field(intern(std::move(f)));
}

Field Field::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "Q" || s == "QQ" || s == "rational") return rational();
  if (s == "Q(i)" || s == "QQ(i)" || s == "gaussian_rational") return gaussian_rational();
  if (s.size() > 4 && s.substr(0, 3) == "GF(" && s.back() == ')') {
    std::string inner = s.substr(3, s.size() - 4);
    auto to_u = [&](std::string_view v) {
      std::uint64_t out = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
      if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
        throw InputError("malformed field '" + std::string(text) + "'");
      return out;
    };
    auto caret = inner.find('^');
    if (caret != std::string::npos) {
      return finite(static_cast<std::uint32_t>(to_u(std::string_view(inner).substr(0, caret))),
                    static_cast<std::uint32_t>(to_u(std::string_view(inner).substr(caret + 1))));
    }
    std::uint64_t q = to_u(inner);
    for (std::uint64_t p = 2; p <= q; ++p) {
      if (q % p != 0) continue;
      std::uint32_t k = 0;
      std::uint64_t r = q;
      while (r % p == 0) {
        r /= p;
        ++k;
      }
      if (r != 1) break;
      return finite(static_cast<std::uint32_t>(p), k);
    }
    throw InputError("GF(q) requires a prime power, got " + inner);
  }
  throw InputError("unknown field '" + std::string(text) + "'");
}

FieldKind Field::kind() const { return d_->kind; }
std::uint32_t Field::characteristic() const { return d_->p; }
std::uint32_t Field::degree() const { return d_->k; }
const std::vector<std::uint32_t>& Field::modulus() const { return d_->modulus; }
std::uint64_t Field::order() const { return d_->q; }

std::string Field::name() const {
  switch (d_->kind) {
    case FieldKind::rational: return "Q";
    case FieldKind::gaussian_rational: return "Q(i)";
    case FieldKind::finite: return "GF(" + std::to_string(d_->q) + ")";
  }
  return "?";
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(Field f) : field_(f) {
  switch (f.kind()) {
    case FieldKind::finite: value_ = std::uint32_t{0}; break;
    case FieldKind::rational: value_ = mpq_class(0); break;
    case FieldKind::gaussian_rational: value_ = Gaussian{0, 0}; break;
  }
}

Scalar::Scalar(Field f, long value) : field_(f) {
  switch (f.kind()) {
    case FieldKind::finite: {
      long p = static_cast<long>(f.characteristic());
      long r = value % p;
      if (r < 0) r += p;
      value_ = static_cast<std::uint32_t>(r);
      break;
    }
    case FieldKind::rational: value_ = mpq_class(value); break;
    case FieldKind::gaussian_rational: value_ = Gaussian{mpq_class(value), 0}; break;
  }
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.kind() == FieldKind::finite) return reduce_rational(q, f);
  Scalar s(f);
  mpq_class c = q;
  c.canonicalize();
  if (f.kind() == FieldKind::rational)
    s.value_ = c;
  else
    s.value_ = Gaussian{c, 0};
  return s;
}

Scalar Scalar::from_gaussian(Field f, const mpq_class& re, const mpq_class& im) {
  if (f.kind() != FieldKind::gaussian_rational) throw MismatchError("from_gaussian needs Q(i)");
  Scalar s(f);
  s.value_ = Gaussian{re, im};
  return s;
}

Scalar Scalar::from_index(Field f, std::uint32_t index) {
  if (!f.is_finite()) throw MismatchError("from_index needs a finite field");
  if (index >= f.order()) throw InputError("field element index out of range");
  Scalar s(f);
  s.value_ = index;
  return s;
}

Scalar Scalar::from_coefficients(Field f, const std::vector<std::int64_t>& coeffs) {
  if (!f.is_finite()) throw MismatchError("coefficient lists need a finite field");
  if (coeffs.size() > f.degree()) throw InputError("too many coefficients for " + f.name());
  const auto* d = f.data();
  std::vector<std::uint32_t> digits(d->k, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::int64_t r = coeffs[i] % static_cast<std::int64_t>(d->p);
    if (r < 0) r += d->p;
    digits[i] = static_cast<std::uint32_t>(r);
  }
  return from_index(f, d->undigits(digits));
}

Scalar Scalar::unit_i(Field f) {
  if (f.kind() != FieldKind::gaussian_rational) throw MismatchError("i exists only in Q(i)");
  return from_gaussian(f, 0, 1);
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw MismatchError("arithmetic between " + field_.name() + " and " + o.field_.name());
}

bool Scalar::is_zero() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 0;
    case 1: return sgn(std::get<1>(value_)) == 0;
    default: {
      const auto& g = std::get<2>(value_);
      return sgn(g.re) == 0 && sgn(g.im) == 0;
    }
  }
}

bool Scalar::is_one() const {
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == 1;
    case 1: return std::get<1>(value_) == 1;
    default: {
      const auto& g = std::get<2>(value_);
      return g.re == 1 && sgn(g.im) == 0;
    }
  }
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}
Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}
Scalar Scalar::operator*(const Scalar& o) const {
  Scalar r = *this;
  r *= o;
  return r;
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  switch (value_.index()) {
    case 0: std::get<0>(value_) = field_.data()->add(std::get<0>(value_), std::get<0>(o.value_)); break;
    case 1: std::get<1>(value_) += std::get<1>(o.value_); break;
    default: {
      auto& g = std::get<2>(value_);
      const auto& h = std::get<2>(o.value_);
      g.re += h.re;
      g.im += h.im;
    }
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  switch (value_.index()) {
    case 0: {
      const auto* d = field_.data();
      std::get<0>(value_) = d->add(std::get<0>(value_), d->neg(std::get<0>(o.value_)));
      break;
    }
    case 1: std::get<1>(value_) -= std::get<1>(o.value_); break;
    default: {
      auto& g = std::get<2>(value_);
      const auto& h = std::get<2>(o.value_);
      g.re -= h.re;
      g.im -= h.im;
    }
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  switch (value_.index()) {
    case 0: std::get<0>(value_) = field_.data()->mul(std::get<0>(value_), std::get<0>(o.value_)); break;
    case 1: std::get<1>(value_) *= std::get<1>(o.value_); break;
    default: {
      auto& g = std::get<2>(value_);
      const auto& h = std::get<2>(o.value_);
      mpq_class re = g.re * h.re - g.im * h.im;
      mpq_class im = g.re * h.im + g.im * h.re;
      g.re = std::move(re);
      g.im = std::move(im);
    }
  }
  return *this;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  switch (r.value_.index()) {
    case 0: std::get<0>(r.value_) = field_.data()->neg(std::get<0>(r.value_)); break;
    case 1: std::get<1>(r.value_) = -std::get<1>(r.value_); break;
    default: {
      auto& g = std::get<2>(r.value_);
      g.re = -g.re;
      g.im = -g.im;
    }
  }
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw ArithmeticError("inverse of zero");
  Scalar r = *this;
  switch (r.value_.index()) {
    case 0: std::get<0>(r.value_) = field_.data()->inv(std::get<0>(r.value_)); break;
    case 1: std::get<1>(r.value_) = 1 / std::get<1>(r.value_); break;
    default: {
      auto& g = std::get<2>(r.value_);
      mpq_class norm = g.re * g.re + g.im * g.im;
      g.re = g.re / norm;
      g.im = -g.im / norm;
    }
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result(field_, 1), base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!(field_ == o.field_)) return false;
  switch (value_.index()) {
    case 0: return std::get<0>(value_) == std::get<0>(o.value_);
    case 1: return std::get<1>(value_) == std::get<1>(o.value_);
    default: {
      const auto& g = std::get<2>(value_);
      const auto& h = std::get<2>(o.value_);
      return g.re == h.re && g.im == h.im;
    }
  }
}

std::uint32_t Scalar::index() const {
  if (value_.index() != 0) throw MismatchError("index() requires a finite field element");
  return std::get<0>(value_);
}

std::vector<std::uint32_t> Scalar::coefficients() const { return field_.data()->digits(index()); }

mpq_class Scalar::rational() const {
  if (value_.index() == 1) return std::get<1>(value_);
  if (value_.index() == 2 && sgn(std::get<2>(value_).im) == 0) return std::get<2>(value_).re;
  throw MismatchError("element is not rational");
}

mpq_class Scalar::real_part() const {
  if (value_.index() == 2) return std::get<2>(value_).re;
  return rational();
}

mpq_class Scalar::imag_part() const {
  if (value_.index() == 2) return std::get<2>(value_).im;
  if (value_.index() == 1) return 0;
  throw MismatchError("imag_part of a finite field element");
}

std::string Scalar::to_string() const {
  switch (value_.index()) {
    case 0: {
      if (field_.degree() == 1) return std::to_string(std::get<0>(value_));
      auto c = coefficients();
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(c[i]);
      }
      return s + "]";
    }
    case 1: return render_rational(std::get<1>(value_));
    default: {
      const auto& g = std::get<2>(value_);
      if (sgn(g.im) == 0) return render_rational(g.re);
      std::string s;
      if (sgn(g.re) != 0) s = render_rational(g.re);
      mpq_class a = abs(g.im);
      if (sgn(g.im) < 0)
        s += "-";
      else if (!s.empty())
        s += "+";
      if (a != 1) s += render_rational(a) + "*";
      return s + "i";
    }
  }
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw InputError("empty scalar literal");
  switch (f.kind()) {
    case FieldKind::rational: return from_rational(f, parse_rational(s));
    case FieldKind::finite: {
      if (s.front() == '[') {
        if (s.back() != ']') throw InputError("unterminated coefficient list '" + s + "'");
        std::vector<std::int64_t> coeffs;
        std::string body = s.substr(1, s.size() - 2);
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ',')) {
          std::int64_t v = 0;
          auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
          if (ec != std::errc() || ptr != item.data() + item.size())
            throw InputError("malformed coefficient '" + item + "'");
          coeffs.push_back(v);
        }
        return from_coefficients(f, coeffs);
      }
      // Integers and fractions are mapped through Z -> GF(p).
      return reduce_rational(parse_rational(s), f);
    }
    case FieldKind::gaussian_rational: {
      if (s.back() != 'i') return from_rational(f, parse_rational(s));
      std::size_t split = std::string::npos;
      for (std::size_t i = s.size(); i-- > 1;)
        if (s[i] == '+' || s[i] == '-') {
          split = i;
          break;
        }
      std::string re_part = split == std::string::npos ? "" : s.substr(0, split);
      std::string im_part = split == std::string::npos ? s : s.substr(split);
      im_part.pop_back();  // the trailing 'i'
      if (!im_part.empty() && im_part.back() == '*') im_part.pop_back();
      mpq_class im;
      if (im_part.empty() || im_part == "+")
        im = 1;
      else if (im_part == "-")
        im = -1;
      else
        im = parse_rational(im_part);
      mpq_class re = re_part.empty() ? mpq_class(0) : parse_rational(re_part);
      return from_gaussian(f, re, im);
    }
  }
  throw InputError("unreachable");
}

std::vector<Scalar> field_enumerate(Field f) {
  if (!f.is_finite()) throw InputError(f.name() + " is not enumerable");
  std::vector<Scalar> out;
  out.reserve(f.order());
  for (std::uint64_t i = 0; i < f.order(); ++i) out.push_back(Scalar::from_index(f, static_cast<std::uint32_t>(i)));
  return out;
}

Scalar random_scalar(Field f, std::mt19937_64& rng, int height) {
  if (f.is_finite()) {
    std::uniform_int_distribution<std::uint64_t> dist(0, f.order() - 1);
    return Scalar::from_index(f, static_cast<std::uint32_t>(dist(rng)));
  }
  std::uniform_int_distribution<long> dist(-height, height);
  if (f.kind() == FieldKind::rational) return Scalar(f, dist(rng));
  long re = dist(rng);
  long im = dist(rng);
  return Scalar::from_gaussian(f, re, im);
}

bool embeds(Field from, Field to) {
  if (from == to) return true;
  if (from.kind() == FieldKind::rational && to.kind() == FieldKind::gaussian_rational) return true;
  if (from.is_finite() && to.is_finite())
    return from.characteristic() == to.characteristic() && from.degree() == 1;
  return false;
}

Scalar embed(const Scalar& x, Field to) {
  Field from = x.field();
  if (from == to) return x;
  if (!embeds(from, to)) throw MismatchError("no embedding of " + from.name() + " into " + to.name());
  if (to.kind() == FieldKind::gaussian_rational) return Scalar::from_gaussian(to, x.rational(), 0);
  // GF(p) -> GF(p^k): prime-field elements are the constants, index unchanged.
  return Scalar::from_index(to, x.index());
}

Scalar reduce_rational(const mpq_class& q, Field to) {
  if (!to.is_finite()) return Scalar::from_rational(to, q);
  const unsigned long p = to.characteristic();
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) throw ArithmeticError("denominator divisible by the characteristic");
  Scalar n(to, static_cast<long>(num.get_si()));
  Scalar d(to, static_cast<long>(den.get_si()));
  return n / d;
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << x.to_string(); }

}  // namespace lieaid
