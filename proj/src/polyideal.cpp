#include "lieaid/polyideal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace lieaid {

RingPtr make_ring(Field f, std::vector<std::string> vars) { return std::make_shared<const PolyRing>(f, std::move(vars)); }

RingPtr extend_ring(const RingPtr& r, std::string name) {
  auto vars = r->variables();
  vars.push_back(std::move(name));
  return make_ring(r->field(), std::move(vars));
}

int grevlex_compare(const Exponents& a, const Exponents& b) {
  unsigned da = 0, db = 0;
  for (auto e : a) da += e;
  for (auto e : b) db += e;
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  return 0;
}

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

namespace {

Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

Exponents quotient(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] - b[i]);
  return out;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i]) return false;
  return true;
}

unsigned degree(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

// Merge two descending term lists: a + c * b.
std::vector<Term> merge_axpy(std::span<const Term> a, const Scalar& c, std::span<const Term> b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int cmp = i == a.size() ? -1 : j == b.size() ? 1 : grevlex_compare(a[i].exps, b[j].exps);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({b[j].exps, c * b[j].coeff});
      ++j;
    } else {
      Scalar s = a[i].coeff + c * b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].exps, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

// a + c * x^shift * b, with the shift applied on the fly.
std::vector<Term> merge_axpy_shift(std::span<const Term> a, const Scalar& c, const Exponents& shift,
                                   std::span<const Term> b) {
  std::vector<Term> shifted;
  shifted.reserve(b.size());
  for (const auto& t : b) {
    Exponents e = t.exps;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + shift[k]);
    shifted.push_back({std::move(e), c * t.coeff});
  }
  return merge_axpy(a, Scalar(c.field(), 1), shifted);
}

}  // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(RingPtr ring) : ring_(std::move(ring)) {}

Poly Poly::constant(RingPtr ring, const Scalar& c) {
  if (c.is_zero()) return Poly(std::move(ring));
  Exponents e(ring->nvars(), 0);
  return Poly(ring, {{std::move(e), c}});
}

Poly Poly::variable(RingPtr ring, std::size_t index) {
  if (index >= ring->nvars()) throw MismatchError("variable index out of range");
  Exponents e(ring->nvars(), 0);
  e[index] = 1;
  Field f = ring->field();
  return Poly(ring, {{std::move(e), Scalar(f, 1)}});
}

Poly Poly::monomial(RingPtr ring, Exponents exps, const Scalar& c) {
  if (exps.size() != ring->nvars()) throw MismatchError("exponent vector length mismatch");
  if (c.is_zero()) return Poly(std::move(ring));
  return Poly(std::move(ring), {{std::move(exps), c}});
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && degree(terms_[0].exps) == 0); }

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, degree(t.exps));
  return d;
}

void Poly::check_ring(const Poly& o) const {
  if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw MismatchError("polynomials from different rings");
}

Poly Poly::operator+(const Poly& o) const {
  check_ring(o);
  return Poly(ring_, merge_axpy(terms_, Scalar(field(), 1), o.terms_));
}

Poly Poly::operator-(const Poly& o) const {
  check_ring(o);
  return Poly(ring_, merge_axpy(terms_, Scalar(field(), -1), o.terms_));
}

Poly Poly::operator-() const { return scaled(Scalar(field(), -1)); }

Poly Poly::scaled(const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.exps, c * t.coeff});
  return Poly(ring_, std::move(out));
}

Poly Poly::mul_term(const Exponents& exps, const Scalar& c) const {
  if (c.is_zero()) return Poly(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = static_cast<std::uint16_t>(e[k] + exps[k]);
    out.push_back({std::move(e), c * t.coeff});
  }
  return Poly(ring_, std::move(out));  // multiplication by a monomial preserves the order
}

Poly Poly::operator*(const Poly& o) const {
  check_ring(o);
  Poly acc(ring_);
  for (const auto& t : o.terms_) acc = acc + mul_term(t.exps, t.coeff);
  return acc;
}

Poly Poly::monic() const {
  if (is_zero() || leading().coeff.is_one()) return *this;
  return scaled(leading().coeff.inv());
}

Scalar Poly::eval(std::span<const Scalar> point) const {
  if (point.size() != ring_->nvars()) throw MismatchError("evaluation point has the wrong length");
  Scalar sum(field());
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t k = 0; k < t.exps.size(); ++k)
      if (t.exps[k]) v *= point[k].pow(t.exps[k]);
    sum += v;
  }
  return sum;
}

Poly Poly::embed(const RingPtr& bigger) const {
  const auto& small_vars = ring_->variables();
  const auto& big_vars = bigger->variables();
  if (!(bigger->field() == field()) || big_vars.size() < small_vars.size() ||
      !std::equal(small_vars.begin(), small_vars.end(), big_vars.begin()))
    throw MismatchError("embed: target ring does not extend the source ring");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Exponents e = t.exps;
    e.resize(big_vars.size(), 0);
    out.push_back({std::move(e), t.coeff});
  }
  // Appending trailing zero exponents keeps the grevlex order.
  return Poly(bigger, std::move(out));
}

bool Poly::operator==(const Poly& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].exps != o.terms_[i].exps || !(terms_[i].coeff == o.terms_[i].coeff)) return false;
  return true;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  const auto& vars = ring_->variables();
  std::string s;
  for (std::size_t idx = 0; idx < terms_.size(); ++idx) {
    const auto& t = terms_[idx];
    std::string coeff = t.coeff.to_string();
    bool negative = false;
    // Only a plain leading minus sign is pulled out; compound Gaussian
    // coefficients are parenthesised instead.
    bool compound = coeff.find_first_of("+-", 1) != std::string::npos;
    if (!compound && coeff.front() == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (compound) coeff = "(" + coeff + ")";
    if (idx == 0)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    std::string mono;
    for (std::size_t k = 0; k < t.exps.size(); ++k) {
      if (!t.exps[k]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[k];
      if (t.exps[k] > 1) mono += "^" + std::to_string(t.exps[k]);
    }
    if (mono.empty())
      s += coeff;
    else if (coeff == "1")
      s += mono;
    else
      s += coeff + "*" + mono;
  }
  return s;
}

// ---------------------------------------------------------------- parser

namespace {

class PolyParser {
 public:
  PolyParser(RingPtr ring, std::string_view text) : ring_(std::move(ring)), s_(text) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw InputError("polynomial parse error (" + what + ") at position " + std::to_string(pos_) + " in '" +
                     std::string(s_) + "'");
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        return acc;
    }
  }
  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (eat('*')) {
        acc = acc * unary();
      } else if (eat('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a non-constant");
        acc = acc.scaled(d.leading().coeff.inv());
      } else {
        return acc;
      }
    }
  }
  Poly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }
  Poly power() {
    Poly b = atom();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
      Poly r = Poly::constant(ring_, Scalar(ring_->field(), 1));
      for (unsigned k = 0; k < e; ++k) r = r * b;
      return r;
    }
    return b;
  }
  Poly atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (c == '[') {
      std::size_t end = s_.find(']', pos_);
      if (end == std::string_view::npos) fail("unterminated '['");
      Scalar v = Scalar::parse(ring_->field(), s_.substr(pos_, end - pos_ + 1));
      pos_ = end + 1;
      return Poly::constant(ring_, v);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Poly::constant(ring_, Scalar::parse(ring_->field(), s_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      const auto& vars = ring_->variables();
      auto it = std::find(vars.begin(), vars.end(), name);
      if (it != vars.end()) return Poly::variable(ring_, static_cast<std::size_t>(it - vars.begin()));
      if (name == "i" && ring_->field().kind() == FieldKind::gaussian_rational)
        return Poly::constant(ring_, Scalar::unit_i(ring_->field()));
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected character");
  }

  RingPtr ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly Poly::parse(RingPtr ring, std::string_view text) { return PolyParser(std::move(ring), text).parse(); }

// ---------------------------------------------------------------- reduction

Poly normal_form(const Poly& f, const std::vector<Poly>& g) {
  std::vector<Term> rest = f.terms();
  std::vector<Term> remainder;
  while (!rest.empty()) {
    const Term& lt = rest.front();
    const Poly* divisor = nullptr;
    for (const auto& cand : g)
      if (!cand.is_zero() && divides(cand.leading().exps, lt.exps)) {
        divisor = &cand;
        break;
      }
    if (!divisor) {
      remainder.push_back(lt);
      rest.erase(rest.begin());
      continue;
    }
    Scalar c = -(lt.coeff / divisor->leading().coeff);
    Exponents shift = quotient(lt.exps, divisor->leading().exps);
    rest = merge_axpy_shift(rest, c, shift, divisor->terms());
  }
  Poly out = Poly::constant(f.ring(), Scalar(f.field()));
  for (auto& t : remainder) out = out + Poly::monomial(f.ring(), t.exps, t.coeff);
  return out;
}

namespace {

Poly s_polynomial(const Poly& a, const Poly& b) {
  Exponents l = lcm(a.leading().exps, b.leading().exps);
  Poly pa = a.mul_term(quotient(l, a.leading().exps), a.leading().coeff.inv());
  Poly pb = b.mul_term(quotient(l, b.leading().exps), b.leading().coeff.inv());
  return pa - pb;
}

}  // namespace

std::vector<Poly> groebner_basis(const std::vector<Poly>& generators) {
  if (generators.empty()) return {};
  const RingPtr ring = generators.front().ring();
  const Field f = ring->field();
  std::vector<Poly> g;
  for (const auto& p : generators) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return {Poly::constant(ring, Scalar(f, 1))};
    Poly m = p.monic();
    if (std::find(g.begin(), g.end(), m) == g.end()) g.push_back(std::move(m));
  }
  if (g.empty()) return {};

  // Pending pairs keyed by (lcm degree, i, j) so the normal strategy picks
  // the smallest lcm first with ties broken lexicographically on indices.
  struct PairKey {
    unsigned deg;
    std::size_t i, j;
    bool operator<(const PairKey& o) const { return std::tie(deg, i, j) < std::tie(o.deg, o.i, o.j); }
  };
  std::set<PairKey> pending;
  std::set<std::pair<std::size_t, std::size_t>> open;
  auto add_pair = [&](std::size_t i, std::size_t j) {
    pending.insert({degree(lcm(g[i].leading().exps, g[j].leading().exps)), i, j});
    open.insert({i, j});
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) add_pair(i, j);

  auto is_open = [&](std::size_t a, std::size_t b) { return open.count({std::min(a, b), std::max(a, b)}) > 0; };

  while (!pending.empty()) {
    PairKey key = *pending.begin();
    pending.erase(pending.begin());
    open.erase({key.i, key.j});
    const Exponents& li = g[key.i].leading().exps;
    const Exponents& lj = g[key.j].leading().exps;
    if (coprime(li, lj)) continue;
    Exponents l = lcm(li, lj);
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == key.i || k == key.j) continue;
      if (divides(g[k].leading().exps, l) && !is_open(key.i, k) && !is_open(key.j, k)) chain = true;
    }
    if (chain) continue;
    Poly h = normal_form(s_polynomial(g[key.i], g[key.j]), g);
    if (h.is_zero()) continue;
    if (h.is_constant()) return {Poly::constant(ring, Scalar(f, 1))};
    g.push_back(h.monic());
    for (std::size_t i = 0; i + 1 < g.size(); ++i) add_pair(i, g.size() - 1);
  }

  // Minimalise, then inter-reduce.
  std::vector<Poly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& a = g[j].leading().exps;
      const auto& b = g[i].leading().exps;
      if (divides(a, b) && (a != b || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<Poly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    // Leading terms of `others` never divide minimal[i]'s leading term, so
    // the reduction keeps that term and only rewrites the tail.
    reduced.push_back(normal_form(minimal[i], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return grevlex_compare(a.leading().exps, b.leading().exps) < 0;
  });
  return reduced;
}

// ---------------------------------------------------------------- ideals

PolyIdeal::PolyIdeal(RingPtr ring, std::vector<Poly> generators) : ring_(std::move(ring)), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (!(*g.ring() == *ring_)) throw MismatchError("ideal generator from a different ring");
}

const std::vector<Poly>& PolyIdeal::groebner() const {
  if (!gb_) gb_ = groebner_basis(gens_);
  return *gb_;
}

bool PolyIdeal::is_unit() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb.front().is_constant();
}

bool ideal_member(const Poly& f, const PolyIdeal& ideal) {
  if (!(*f.ring() == *ideal.ring())) throw MismatchError("ideal_member: ring mismatch");
  if (f.is_zero()) return true;
  return normal_form(f, ideal.groebner()).is_zero();
}

bool radical_member(const Poly& f, const PolyIdeal& ideal) {
  if (!(*f.ring() == *ideal.ring())) throw MismatchError("radical_member: ring mismatch");
  if (f.is_zero()) return true;
  if (ideal_member(f, ideal)) return true;
  std::string yname = "y";
  const auto& vars = ideal.ring()->variables();
  while (std::find(vars.begin(), vars.end(), yname) != vars.end()) yname += "_";
  RingPtr big = extend_ring(ideal.ring(), yname);
  std::vector<Poly> gens;
  for (const auto& g : ideal.groebner()) gens.push_back(g.embed(big));
  Poly y = Poly::variable(big, big->nvars() - 1);
  gens.push_back(Poly::constant(big, Scalar(big->field(), 1)) - y * f.embed(big));
  auto gb = groebner_basis(gens);
  return gb.size() == 1 && gb.front().is_constant();
}

// ---------------------------------------------------------------- matrices

PolyMatrix::PolyMatrix(RingPtr ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), entries_(rows * cols, Poly(ring)) {}

PolyMatrix PolyMatrix::with_column(const std::vector<Poly>& column) const {
  if (column.size() != rows_) throw MismatchError("with_column: length mismatch");
  PolyMatrix out(ring_, rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    out(i, cols_) = column[i];
  }
  return out;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  for (;;) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

// Determinants of rows[0..r) against every r-subset of columns, by Laplace
// expansion along the last row built up from the (r-1)-row minors.
std::map<std::vector<std::size_t>, Poly> row_block_minors(const PolyMatrix& m, const std::vector<std::size_t>& rows) {
  std::map<std::vector<std::size_t>, Poly> prev;
  prev.emplace(std::vector<std::size_t>{}, Poly::constant(m.ring(), Scalar(m.ring()->field(), 1)));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    std::map<std::vector<std::size_t>, Poly> next;
    for (const auto& cols : combinations(m.cols(), t + 1)) {
      Poly det(m.ring());
      for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        const Poly& entry = m(rows[t], cols[pos]);
        if (entry.is_zero()) continue;
        std::vector<std::size_t> rest;
        for (std::size_t q = 0; q < cols.size(); ++q)
          if (q != pos) rest.push_back(cols[q]);
        const Poly& sub = prev.at(rest);
        if (sub.is_zero()) continue;
        Poly prod = entry * sub;
        det = ((t + pos) % 2 == 0) ? det + prod : det - prod;
      }
      next.emplace(cols, std::move(det));
    }
    prev = std::move(next);
  }
  return prev;
}

}  // namespace

std::vector<Poly> minors(const PolyMatrix& m, std::size_t r) {
  if (r < 1 || r > std::min(m.rows(), m.cols()))
    throw InputError("minor size " + std::to_string(r) + " out of range");
  std::vector<Poly> out;
  for (const auto& rows : combinations(m.rows(), r)) {
    auto block = row_block_minors(m, rows);
    for (auto& [cols, det] : block) out.push_back(std::move(det));  // std::map iterates in lex order
  }
  return out;
}

Poly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw MismatchError("determinant of a non-square matrix");
  if (m.rows() == 0) return Poly::constant(m.ring(), Scalar(m.ring()->field(), 1));
  return minors(m, m.rows()).front();
}

}  // namespace lieaid
