#include "lieaid/liealg.hpp"

#include <array>
#include <charconv>
#include <initializer_list>

namespace lieaid {

using nlohmann::json;

StructureTable::StructureTable(std::string name, Field f, std::size_t dim)
    : name_(std::move(name)), field_(f), dim_(dim), sigma_(dim * dim * dim, Scalar(f)) {}

void StructureTable::set_bracket(std::size_t i, std::size_t j, const Vector& value) {
  if (i < 1 || j > dim_ || i >= j) throw InputError("bracket indices must satisfy 1 <= i < j <= dim");
  if (value.size() != dim_) throw MismatchError("bracket value has the wrong length");
  for (std::size_t k = 1; k <= dim_; ++k) {
    sigma_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)] = value[k - 1];
    sigma_[((j - 1) * dim_ + (i - 1)) * dim_ + (k - 1)] = -value[k - 1];
  }
}

void StructureTable::add_term(std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
  if (i < 1 || j > dim_ || i >= j) throw InputError("bracket indices must satisfy 1 <= i < j <= dim");
  if (k < 1 || k > dim_) throw InputError("basis index k out of range");
  sigma_[((i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)] += c;
  sigma_[((j - 1) * dim_ + (i - 1)) * dim_ + (k - 1)] -= c;
}

Vector StructureTable::basis_bracket(std::size_t i, std::size_t j) const {
  Vector v;
  v.reserve(dim_);
  for (std::size_t k = 1; k <= dim_; ++k) v.push_back(sigma(i, j, k));
  return v;
}

bool StructureTable::operator==(const StructureTable& o) const {
  return field_ == o.field_ && dim_ == o.dim_ && sigma_ == o.sigma_;
}

Vector basis_vector(const StructureTable& t, std::size_t i) { return unit_vector(t.field(), t.dim(), i - 1); }

Vector bracket(const StructureTable& t, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t n = t.dim();
  if (x.size() != n || y.size() != n) throw MismatchError("bracket: dimension mismatch");
  Vector out = zero_vector(t.field(), n);
  for (std::size_t i = 1; i <= n; ++i) {
    if (x[i - 1].is_zero()) continue;
    for (std::size_t j = 1; j <= n; ++j) {
      if (i == j || y[j - 1].is_zero()) continue;
      Scalar c = x[i - 1] * y[j - 1];
      for (std::size_t k = 1; k <= n; ++k)
        if (!t.sigma(i, j, k).is_zero()) out[k - 1] += c * t.sigma(i, j, k);
    }
  }
  return out;
}

std::optional<JacobiViolation> validate(const StructureTable& t) {
  const std::size_t n = t.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      for (std::size_t k = j + 1; k <= n; ++k) {
        auto bi = basis_vector(t, i), bj = basis_vector(t, j), bk = basis_vector(t, k);
        Vector sum = bracket(t, bracket(t, bi, bj), bk);
        sum = add(sum, bracket(t, bracket(t, bj, bk), bi));
        sum = add(sum, bracket(t, bracket(t, bk, bi), bj));
        if (!is_zero(sum)) return JacobiViolation{i, j, k, sum};
      }
  return std::nullopt;
}

Matrix ad_matrix(const StructureTable& t, std::span<const Scalar> a) {
  const std::size_t n = t.dim();
  Matrix m(t.field(), n, n);
  for (std::size_t j = 1; j <= n; ++j) {
    auto row = bracket(t, a, basis_vector(t, j));
    for (std::size_t k = 0; k < n; ++k) m(j - 1, k) = row[k];
  }
  return m;
}

Subspace center(const StructureTable& t) {
  // z is central iff sum_i z_i sigma_{i,j}^k = 0 for all j, k.
  const std::size_t n = t.dim();
  Matrix system(t.field(), n * n, n);
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t i = 1; i <= n; ++i) system((j - 1) * n + (k - 1), i - 1) = t.sigma(i, j, k);
  return kernel(system);
}

StructureTable extend_scalars(const StructureTable& t, Field to) {
  if (!embeds(t.field(), to))
    throw MismatchError("no canonical embedding of " + t.field().name() + " into " + to.name());
  StructureTable out(t.name() + "@" + to.name(), to, t.dim());
  const std::size_t n = t.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      Vector v;
      for (std::size_t k = 1; k <= n; ++k) v.push_back(embed(t.sigma(i, j, k), to));
      out.set_bracket(i, j, v);
    }
  return out;
}

StructureTable quotient_by_ideal(const StructureTable& t, const Subspace& ideal, std::string name) {
  const std::size_t n = t.dim();
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t b = 0; b < ideal.dim(); ++b)
      if (!ideal.contains(bracket(t, basis_vector(t, j), ideal.basis_vector(b))))
        throw MismatchError("quotient_by_ideal: subspace is not an ideal");
  QuotientMap q(Subspace::full(t.field(), n), ideal);
  const auto& reps = q.representatives();
  StructureTable out(std::move(name), t.field(), reps.size());
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) out.set_bracket(a + 1, b + 1, *q.coordinates(bracket(t, reps[a], reps[b])));
  return out;
}

// ---------------------------------------------------------------- catalog

namespace {

struct Term {
  std::size_t k;
  long c;
};
struct BracketSpec {
  std::size_t i, j;
  std::vector<Term> terms;
};

StructureTable from_spec(std::string name, Field f, std::size_t dim, std::initializer_list<BracketSpec> spec) {
  StructureTable t(std::move(name), f, dim);
  for (const auto& b : spec)
    for (const auto& term : b.terms) t.add_term(b.i, b.j, term.k, Scalar(f, term.c));
  return t;
}

StructureTable make_abelian(std::size_t n, Field f) { return StructureTable("abelian(" + std::to_string(n) + ")", f, n); }

StructureTable make_heisenberg3(Field f) { return from_spec("heisenberg3", f, 3, {{1, 2, {{3, 1}}}}); }

StructureTable make_g6_23(Field f) {
  return from_spec("g6_23", f, 6,
                   {{1, 2, {{3, 1}}}, {1, 3, {{5, 1}}}, {1, 4, {{6, 1}}}, {2, 4, {{5, 1}}}});
}

StructureTable make_dim5_L8211(Field f) {
  return from_spec("dim5_L8211", f, 5,
                   {{1, 4, {{1, 1}}}, {1, 5, {{2, -1}}}, {2, 4, {{2, 1}}}, {2, 5, {{1, 1}}}, {4, 5, {{3, 1}}}});
}

// Multiplication table of the 15-dimensional algebra over GF(3) attached to
// Sah's group of order 3^15.
StructureTable make_g3_sah() {
  Field f = Field::finite(3);
  return from_spec("g3_sah", f, 15,
                   {
                       {1, 2, {{7, 2}}},
                       {1, 3, {{7, 1}, {8, 2}}},
                       {1, 4, {{10, 2}}},
                       {1, 5, {{11, 1}}},
                       {1, 6, {{12, 1}}},
                       {1, 10, {{13, 2}}},
                       {1, 11, {{14, 1}, {15, 1}}},
                       {1, 12, {{15, 2}}},
                       {2, 3, {{8, 2}, {9, 1}}},
                       {2, 4, {{12, 2}}},
                       {2, 5, {{10, 2}, {12, 1}}},
                       {2, 6, {{11, 1}}},
                       {2, 10, {{13, 1}, {15, 2}}},
                       {2, 11, {{13, 1}, {14, 2}, {15, 1}}},
                       {2, 12, {{14, 1}, {15, 2}}},
                       {3, 4, {{11, 2}}},
                       {3, 5, {{11, 1}, {12, 2}}},
                       {3, 6, {{10, 2}, {12, 1}}},
                       {3, 10, {{13, 2}, {14, 1}}},
                       {3, 11, {{13, 1}, {14, 2}, {15, 2}}},
                       {3, 12, {{13, 1}, {14, 1}, {15, 2}}},
                       {4, 7, {{13, 1}}},
                       {4, 8, {{15, 2}}},
                       {4, 9, {{14, 1}, {15, 1}}},
                       {5, 7, {{14, 1}, {15, 1}}},
                       {5, 8, {{13, 2}, {15, 1}}},
                       {5, 9, {{14, 2}, {15, 1}}},
                       {6, 7, {{15, 2}}},
                       {6, 8, {{14, 2}, {15, 2}}},
                       {6, 9, {{13, 2}, {15, 1}}},
                   });
}

// sl(3) over GF(3) in the basis E12, E13, E21, E23, E31, E32, H1, H2 with
// H1 = E11 - E22 and H2 = E22 - E33.
StructureTable make_sl3_f3() {
  Field f = Field::finite(3);
  using Mat3 = std::array<std::array<long, 3>, 3>;
  std::vector<Mat3> basis;
  const std::array<std::pair<int, int>, 6> offdiag{{{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  for (auto [r, c] : offdiag) {
    Mat3 m{};
    m[r][c] = 1;
    basis.push_back(m);
  }
  basis.push_back(Mat3{{{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}});
  basis.push_back(Mat3{{{0, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
  auto coords = [&](const Mat3& m) {
    Vector v;
    for (auto [r, c] : offdiag) v.emplace_back(f, m[r][c]);
    // diag(a, b, c) with a + b + c = 0 equals a*H1 - c*H2.
    v.emplace_back(f, m[0][0]);
    v.emplace_back(f, -m[2][2]);
    return v;
  };
  StructureTable t("sl3_f3", f, 8);
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = i + 1; j < 8; ++j) {
      Mat3 comm{};
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          for (int s = 0; s < 3; ++s) comm[r][c] += basis[i][r][s] * basis[j][s][c] - basis[j][r][s] * basis[i][s][c];
      t.set_bracket(i + 1, j + 1, coords(comm));
    }
  return t;
}

StructureTable make_psl3_f3() {
  StructureTable sl3 = make_sl3_f3();
  Field f = sl3.field();
  // The identity matrix is traceless in characteristic 3: I = H1 - H2.
  Vector identity = zero_vector(f, 8);
  identity[6] = Scalar(f, 1);
  identity[7] = Scalar(f, -1);
  return quotient_by_ideal(sl3, Subspace::span(f, 8, {identity}), "psl3_f3");
}

StructureTable over_field(StructureTable (*make)(Field), Field f) {
  if (f.is_finite() && f.degree() > 1) return extend_scalars(make(Field::finite(f.characteristic())), f);
  return make(f);
}

std::string suffix_name(const std::string& base, const std::vector<std::string>& args) {
  if (args.empty()) return base;
  std::string s = base + "(";
  for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
  return s + ")";
}

}  // namespace

StructureTable catalog(std::string_view raw) {
  std::string name;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) name += c;
  std::string base = name;
  std::vector<std::string> args;
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw InputError("malformed catalog name '" + name + "'");
    base = name.substr(0, open);
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    // Split on commas at parenthesis depth zero so "GF(3)" stays intact.
    int depth = 0;
    std::string cur;
    for (char c : inner) {
      if (c == '(') ++depth;
      if (c == ')') --depth;
      if (c == ',' && depth == 0) {
        args.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) args.push_back(cur);
  }
  auto field_arg = [&](std::size_t idx, Field fallback) {
    return idx < args.size() ? Field::parse(args[idx]) : fallback;
  };
  StructureTable t("", Field::rational(), 0);
  if (base == "abelian") {
    if (args.empty()) throw InputError("abelian needs a dimension, e.g. abelian(4)");
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(args[0].data(), args[0].data() + args[0].size(), n);
    if (ec != std::errc() || ptr != args[0].data() + args[0].size() || n == 0)
      throw InputError("bad abelian dimension '" + args[0] + "'");
    t = make_abelian(n, field_arg(1, Field::rational()));
  } else if (base == "heisenberg3") {
    t = over_field(make_heisenberg3, field_arg(0, Field::rational()));
  } else if (base == "g6_23") {
    t = over_field(make_g6_23, field_arg(0, Field::rational()));
  } else if (base == "dim5_L8211") {
    t = over_field(make_dim5_L8211, field_arg(0, Field::gaussian_rational()));
  } else if (base == "g3_sah") {
    Field f = field_arg(0, Field::finite(3));
    t = f == Field::finite(3) ? make_g3_sah() : extend_scalars(make_g3_sah(), f);
  } else if (base == "psl3_f3" && args.empty()) {
    t = make_psl3_f3();
  } else if (base == "sl3_f3" && args.empty()) {
    t = make_sl3_f3();
  } else {
    throw InputError("unknown catalog algebra '" + name + "'");
  }
  t.set_name(suffix_name(base, args));
  if (auto bad = validate(t))
    throw InputError("catalog algebra " + name + " fails Jacobi at (" + std::to_string(bad->i) + "," +
                     std::to_string(bad->j) + "," + std::to_string(bad->k) + ")");
  return t;
}

std::vector<std::string> catalog_names() {
  return {"abelian(n[,FIELD])", "heisenberg3[(FIELD)]", "g6_23[(FIELD)]", "dim5_L8211[(FIELD)]",
          "g3_sah[(FIELD)]",    "psl3_f3",              "sl3_f3"};
}

// ---------------------------------------------------------------- JSON

json field_to_json(Field f) {
  switch (f.kind()) {
    case FieldKind::rational: return {{"kind", "rational"}};
    case FieldKind::gaussian_rational: return {{"kind", "gaussian_rational"}};
    case FieldKind::finite: {
      json j{{"kind", "finite"}, {"p", f.characteristic()}, {"k", f.degree()}};
      if (f.degree() > 1) j["modulus"] = f.modulus();
      return j;
    }
  }
  return {};
}

Field field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw InputError("field must be an object with a \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return Field::rational();
  if (kind == "gaussian_rational") return Field::gaussian_rational();
  if (kind == "finite") {
    auto p = j.at("p").get<std::uint32_t>();
    auto k = j.value("k", std::uint32_t{1});
    std::vector<std::uint32_t> modulus;
    if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return Field::finite(p, k, modulus);
  }
  throw InputError("unknown field kind '" + kind + "'");
}

json to_json(const StructureTable& t) {
  json brackets = json::array();
  const std::size_t n = t.dim();
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      json terms = json::array();
      for (std::size_t k = 1; k <= n; ++k)
        if (!t.sigma(i, j, k).is_zero()) terms.push_back({{"k", k}, {"c", t.sigma(i, j, k).to_string()}});
      if (!terms.empty()) brackets.push_back({{"i", i}, {"j", j}, {"terms", terms}});
    }
  return {{"name", t.name()}, {"field", field_to_json(t.field())}, {"dim", n}, {"brackets", brackets}};
}

StructureTable table_from_json(const json& j, bool skip_validate) {
  try {
    Field f = field_from_json(j.at("field"));
    const auto n = j.at("dim").get<std::size_t>();
    if (n == 0) throw InputError("dim must be positive");
    StructureTable t(j.value("name", std::string("unnamed")), f, n);
    if (j.contains("brackets")) {
      for (const auto& b : j.at("brackets")) {
        const auto i = b.at("i").get<long>();
        const auto jj = b.at("j").get<long>();
        if (i < 1 || jj < 1 || static_cast<std::size_t>(i) > n || static_cast<std::size_t>(jj) > n)
          throw InputError("bracket index out of range: [" + std::to_string(i) + "," + std::to_string(jj) + "]");
        if (i >= jj) throw InputError("bracket entries need i < j, got [" + std::to_string(i) + "," + std::to_string(jj) + "]");
        for (const auto& term : b.at("terms")) {
          const auto k = term.at("k").get<long>();
          if (k < 1 || static_cast<std::size_t>(k) > n) throw InputError("term index k out of range: " + std::to_string(k));
          const auto& c = term.at("c");
          Scalar value = c.is_string() ? Scalar::parse(f, c.get<std::string>()) : Scalar(f, c.get<long>());
          t.add_term(static_cast<std::size_t>(i), static_cast<std::size_t>(jj), static_cast<std::size_t>(k), value);
        }
      }
    }
    if (!skip_validate)
      if (auto bad = validate(t))
        throw InputError("Jacobi identity fails at basis triple (" + std::to_string(bad->i) + "," + std::to_string(bad->j) +
                         "," + std::to_string(bad->k) + ")");
    return t;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed structure-constant JSON: ") + e.what());
  }
}

}  // namespace lieaid
