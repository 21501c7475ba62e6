#include "lieaid/aidcert.hpp"

#include <algorithm>
#include <chrono>

namespace lieaid {

namespace {

Poly linear_form(const RingPtr& ring, const Vector& coeffs) {
  Poly p(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Exponents e(ring->nvars(), 0);
    e[i] = 1;
    p = p + Poly::monomial(ring, std::move(e), coeffs[i]);
  }
  return p;
}

// Coefficients of z_1..z_n in a linear form.
Vector linear_coefficients(const Poly& p, std::size_t n) {
  Vector c = zero_vector(p.field(), n);
  for (const auto& term : p.terms()) {
    auto it = std::find(term.exps.begin(), term.exps.end(), 1);
    if (it == term.exps.end()) throw Error("symbolic entry is not a linear form");
    c[static_cast<std::size_t>(it - term.exps.begin())] = term.coeff;
  }
  return c;
}

std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> vars;
  for (std::size_t i = 1; i <= n; ++i) vars.push_back("z" + std::to_string(i));
  return vars;
}

bool row_is_zero(const PolyMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!m(r, c).is_zero()) return false;
  return true;
}

Matrix evaluate(const PolyMatrix& m, std::span<const Scalar> z) {
  Matrix out(m.ring()->field(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(z);
  return out;
}

std::vector<std::string> to_strings(const std::vector<Poly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

// Grid values in order of increasing height; heights[i] is the height of values[i].
void grid_values(Field f, int h, std::vector<Scalar>& values, std::vector<int>& heights) {
  values.clear();
  heights.clear();
  for (int level = 0; level <= h; ++level) {
    if (f.kind() == FieldKind::gaussian_rational) {
      for (int a = -level; a <= level; ++a)
        for (int b = -level; b <= level; ++b) {
          if (std::max(std::abs(a), std::abs(b)) != level) continue;
          values.push_back(Scalar::from_gaussian(f, a, b));
          heights.push_back(level);
        }
    } else if (level == 0) {
      values.push_back(Scalar(f));
      heights.push_back(0);
    } else {
      values.push_back(Scalar(f, level));
      values.push_back(Scalar(f, -level));
      heights.push_back(level);
      heights.push_back(level);
    }
  }
}

}  // namespace

SymbolicSystem build_symbolic(const StructureTable& t, const std::vector<Vector>& candidates) {
  const std::size_t n = t.dim();
  const Field f = t.field();
  SymbolicSystem sys{make_ring(f, var_names(n)), n, PolyMatrix(nullptr, 0, 0), {}, {}, {}, candidates};
  for (const auto& c : candidates)
    if (c.size() != n * n) throw MismatchError("candidate derivation has the wrong length");

  PolyMatrix full(sys.ring, n, n);
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t j = 1; j <= n; ++j) {
      Vector coeffs = zero_vector(f, n);
      for (std::size_t i = 1; i <= n; ++i) coeffs[i - 1] = t.sigma(i, j, k);
      full(k - 1, j - 1) = linear_form(sys.ring, coeffs);
    }
  std::vector<std::vector<Poly>> vfull;
  for (const auto& d : candidates) {
    std::vector<Poly> col;
    for (std::size_t k = 0; k < n; ++k) {
      Vector coeffs = zero_vector(f, n);
      for (std::size_t i = 0; i < n; ++i) coeffs[i] = d[i * n + k];
      col.push_back(linear_form(sys.ring, coeffs));
    }
    vfull.push_back(std::move(col));
  }

  for (std::size_t k = 0; k < n; ++k) {
    bool keep = !row_is_zero(full, k);
    for (const auto& col : vfull) keep = keep || !col[k].is_zero();
    if (keep) sys.kept_rows.push_back(k);
  }
  for (std::size_t j = 0; j < n; ++j) {
    bool keep = false;
    for (std::size_t k = 0; k < n; ++k) keep = keep || !full(k, j).is_zero();
    if (keep) sys.kept_cols.push_back(j);
  }
  sys.m = PolyMatrix(sys.ring, sys.kept_rows.size(), sys.kept_cols.size());
  for (std::size_t r = 0; r < sys.kept_rows.size(); ++r)
    for (std::size_t c = 0; c < sys.kept_cols.size(); ++c) sys.m(r, c) = full(sys.kept_rows[r], sys.kept_cols[c]);
  for (const auto& col : vfull) {
    std::vector<Poly> trimmed;
    for (auto k : sys.kept_rows) trimmed.push_back(col[k]);
    sys.vcols.push_back(std::move(trimmed));
  }
  return sys;
}

SymbolicSystem single_candidate(const SymbolicSystem& sys, std::size_t candidate) {
  if (candidate >= sys.vcols.size()) throw InputError("candidate index out of range");
  const auto& v = sys.vcols[candidate];
  SymbolicSystem out{sys.ring, sys.n, PolyMatrix(nullptr, 0, 0), {}, {}, sys.kept_cols, {sys.candidates[candidate]}};
  std::vector<std::size_t> local;
  for (std::size_t r = 0; r < sys.m.rows(); ++r)
    if (!row_is_zero(sys.m, r) || !v[r].is_zero()) {
      local.push_back(r);
      out.kept_rows.push_back(sys.kept_rows[r]);
    }
  out.m = PolyMatrix(sys.ring, local.size(), sys.m.cols());
  std::vector<Poly> col;
  for (std::size_t r = 0; r < local.size(); ++r) {
    for (std::size_t c = 0; c < sys.m.cols(); ++c) out.m(r, c) = sys.m(local[r], c);
    col.push_back(v[local[r]]);
  }
  out.vcols.push_back(std::move(col));
  return out;
}

bool rank_check_at(const SymbolicSystem& sys, std::size_t candidate, std::span<const Scalar> z) {
  if (candidate >= sys.vcols.size()) throw InputError("candidate index out of range");
  if (z.size() != sys.n) throw MismatchError("point has the wrong number of coordinates");
  Matrix m = evaluate(sys.m, z);
  Vector v;
  for (const auto& p : sys.vcols[candidate]) v.push_back(p.eval(z));
  if (m.rows() == 0) return true;
  return solve(m, v).has_value();
}

ScanBlocks scan_blocks(const SymbolicSystem& sys) {
  const Field f = sys.ring->field();
  ScanBlocks b{f, sys.n, sys.m.rows(), sys.m.cols(), sys.vcols.size(), {}};
  for (std::size_t i = 0; i < sys.n; ++i) b.blocks.emplace_back(f, b.rows, b.mcols + b.ncand);
  auto put = [&](const Poly& p, std::size_t r, std::size_t c) {
    Vector coeffs = linear_coefficients(p, sys.n);
    for (std::size_t i = 0; i < sys.n; ++i) b.blocks[i](r, c) = coeffs[i];
  };
  for (std::size_t r = 0; r < b.rows; ++r) {
    for (std::size_t c = 0; c < b.mcols; ++c) put(sys.m(r, c), r, c);
    for (std::size_t c = 0; c < b.ncand; ++c) put(sys.vcols[c][r], r, b.mcols + c);
  }
  return b;
}

std::vector<CandidateVerdict> exhaustive_verify(const SymbolicSystem& sys, const ScanOptions& options,
                                                ScanOutcome* stats) {
  ScanOutcome outcome = scan_projective(scan_blocks(sys), options);
  std::vector<CandidateVerdict> verdicts;
  for (std::size_t c = 0; c < sys.vcols.size(); ++c) {
    CandidateVerdict v;
    v.method = "exhaustive";
    v.points = outcome.points;
    if (outcome.first_failure[c]) {
      v.kind = VerdictKind::refuted;
      v.witness = outcome.first_failure[c];
    } else {
      v.kind = VerdictKind::certified;
    }
    verdicts.push_back(std::move(v));
  }
  if (stats) *stats = std::move(outcome);
  return verdicts;
}

WitnessSearch find_witness(const SymbolicSystem& sys, std::size_t candidate, std::size_t r, const Poly& w,
                           const WitnessOptions& options) {
  WitnessSearch out;
  const Field f = sys.ring->field();
  SymbolicSystem one = single_candidate(sys, candidate);

  if (f.is_finite()) {
    // Any point refuting the candidate will do; the scan is complete.
    ScanOptions so{options.threads, options.scan_budget, ScanKernel::automatic};
    auto outcome = scan_projective(scan_blocks(one), so);
    out.points_tried = outcome.points;
    out.point = outcome.first_failure[0];
    return out;
  }

  RingPtr big = extend_ring(sys.ring, "y");
  std::vector<Poly> gens;
  if (r <= std::min(one.m.rows(), one.m.cols()))
    for (const auto& k : minors(one.m, r))
      if (!k.is_zero()) gens.push_back(k.embed(big));
  gens.push_back(w.embed(big) * Poly::variable(big, sys.n) - Poly::constant(big, Scalar(f, 1)));
  auto basis = groebner_basis(gens);
  out.basis = to_strings(basis);
  if (basis.size() == 1 && basis.front().is_constant()) return out;

  std::vector<Scalar> values;
  std::vector<int> heights;
  Vector point(sys.n + 1, Scalar(f));
  for (int h = 1; h <= options.grid_height; ++h) {
    grid_values(f, h, values, heights);
    for (std::size_t lead = 0; lead < sys.n; ++lead) {
      const std::size_t tail = sys.n - lead - 1;
      std::vector<std::size_t> idx(tail, 0);
      for (;;) {
        bool fresh = h == 1;
        for (auto i : idx) fresh = fresh || heights[i] == h;
        if (fresh) {
          if (out.points_tried >= options.point_cap) {
            out.truncated = true;
            return out;
          }
          ++out.points_tried;
          std::fill(point.begin(), point.end(), Scalar(f));
          point[lead] = Scalar(f, 1);
          for (std::size_t d = 0; d < tail; ++d) point[lead + 1 + d] = values[idx[d]];
          std::span<const Scalar> z(point.data(), sys.n);
          Scalar wz = w.eval(z);
          if (!wz.is_zero()) {
            point[sys.n] = wz.inv();
            bool all_zero = true;
            for (const auto& g : basis)
              if (!g.eval(point).is_zero()) {
                all_zero = false;
                break;
              }
            if (all_zero && !rank_check_at(one, 0, z)) {
              out.point = Vector(z.begin(), z.end());
              return out;
            }
          }
        }
        std::size_t d = tail;
        while (d > 0 && ++idx[d - 1] == values.size()) idx[--d] = 0;
        if (d == 0) break;
      }
    }
  }
  return out;
}

CandidateVerdict certify_minors(const SymbolicSystem& sys, std::size_t candidate, std::size_t size_limit,
                                const WitnessOptions& options) {
  CandidateVerdict verdict;
  verdict.method = "minors";
  SymbolicSystem one = single_candidate(sys, candidate);
  const std::size_t rows = one.m.rows(), cols = one.m.cols();
  if (std::max(rows, cols + 1) > size_limit) {
    verdict.reason = "too large for minors method";
    return verdict;
  }
  const PolyMatrix aug = one.m.with_column(one.vcols[0]);
  std::vector<std::pair<std::size_t, Poly>> failures;
  for (std::size_t r = 1; r <= std::min(rows, cols + 1); ++r) {
    MinorsStep step;
    step.r = r;
    std::vector<Poly> k;
    if (r <= cols)
      for (auto& p : minors(one.m, r))
        if (!p.is_zero()) k.push_back(std::move(p));
    PolyIdeal ideal(one.ring, k);
    // Minors of M_delta avoiding the last column already lie in I_r.
    auto all = minors(aug, r);
    auto colsets = combinations(cols + 1, r);
    const std::size_t per_rows = colsets.size();
    for (std::size_t i = 0; i < all.size() && step.holds; ++i) {
      if (colsets[i % per_rows].back() != cols || all[i].is_zero()) continue;
      ++step.minors_tested;
      if (!radical_member(all[i], ideal)) {
        step.holds = false;
        step.failing_minor = all[i].to_string();
        failures.emplace_back(r, all[i]);
      }
    }
    verdict.steps.push_back(std::move(step));
  }
  if (failures.empty()) {
    verdict.kind = VerdictKind::certified;
    return verdict;
  }
  verdict.fails_at_r1 = failures.front().first == 1;
  for (const auto& [r, w] : failures) {
    WitnessSearch ws = find_witness(one, 0, r, w, options);
    if (verdict.obstruction.empty()) verdict.obstruction = ws.basis;
    verdict.points += ws.points_tried;
    if (ws.point) {
      verdict.kind = VerdictKind::refuted;
      verdict.witness = ws.point;
      verdict.obstruction = ws.basis;
      return verdict;
    }
    if (sys.ring->field().is_finite()) {
      // The scan covered every point, so no point refutes the candidate.
      verdict.kind = VerdictKind::certified;
      verdict.method = "exhaustive";
      verdict.reason = "minors containment fails but no point of the field refutes the candidate";
      return verdict;
    }
  }
  verdict.reason = "minors containment fails and no witness found on the search grid";
  return verdict;
}

Subspace refine_with_witness(const StructureTable& t, const Subspace& v, std::span<const Scalar> z) {
  Subspace next = inner_on_line(t, v, z);
  if (next.dim() >= v.dim()) throw Error("point is not a witness: V ∩ D_z is not smaller than V");
  return next;
}

AidResult compute_aid(const StructureTable& t, const AidConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const Field f = t.field();
  DerivationSpaces spaces = compute_spaces(t);
  CertificationReport report;
  report.algebra = t.name();
  report.field = f;
  report.config = config;
  report.der_dim = spaces.der.dim();
  report.inn_dim = spaces.inn.dim();
  report.complement_dim = spaces.complement_u.dim();

  ProbePlan plan;
  plan.seed = config.seed;
  plan.budget = config.probe_budget;
  plan.patience = config.patience;
  RefineResult refined = refine_candidates(spaces, t, plan);
  report.probes = refined.probes;
  report.refine_dims = refined.dims;
  report.refined_dim = refined.v.dim();

  WitnessOptions wopts;
  wopts.grid_height = config.grid_height;
  wopts.scan_budget = config.scan_budget;
  wopts.threads = config.threads;

  Subspace v = refined.v;
  std::vector<CandidateVerdict> verdicts;
  while (v.dim() > 0) {
    auto candidates = v.basis_vectors();
    SymbolicSystem sys = build_symbolic(t, candidates);
    const bool scan = config.method == CertMethod::exhaustive ||
                      (config.method == CertMethod::automatic && f.is_finite() &&
                       projective_point_count(f, t.dim()) <= config.scan_budget);
    std::optional<std::size_t> refuted;
    if (scan) {
      if (!f.is_finite()) throw InputError("exhaustive verification needs a finite field");
      ScanOutcome stats;
      verdicts = exhaustive_verify(sys, ScanOptions{config.threads, config.scan_budget, ScanKernel::automatic}, &stats);
      report.points_scanned += stats.points;
      report.scan_kernel = stats.kernel;
    } else {
      verdicts.clear();
      for (std::size_t c = 0; c < candidates.size(); ++c) {
        verdicts.push_back(certify_minors(sys, c, config.minors_limit, wopts));
        if (verdicts.back().kind == VerdictKind::refuted) break;
      }
    }
    for (std::size_t c = 0; c < verdicts.size(); ++c)
      if (verdicts[c].kind == VerdictKind::refuted) {
        refuted = c;
        break;
      }
    if (!refuted) break;

    v = refine_with_witness(t, v, *verdicts[*refuted].witness);
    Refutation rec{candidates[*refuted], *verdicts[*refuted].witness, verdicts[*refuted].method, v.dim()};
    // Other failing points from the same scan are witnesses too.
    for (std::size_t c = *refuted + 1; c < verdicts.size() && v.dim() > 0; ++c)
      if (verdicts[c].kind == VerdictKind::refuted) v = inner_on_line(t, v, *verdicts[c].witness);
    rec.v_dim_after = v.dim();
    report.refutations.push_back(std::move(rec));
    verdicts.clear();
  }

  std::vector<Vector> certified;
  report.candidates = v.basis_vectors();
  for (std::size_t c = 0; c < verdicts.size(); ++c)
    if (verdicts[c].kind == VerdictKind::certified) certified.push_back(report.candidates[c]);
  report.verdicts = std::move(verdicts);

  Subspace cert = Subspace::span(f, t.dim() * t.dim(), certified);
  Subspace lower = subspace_sum(spaces.inn, cert);
  Subspace upper = subspace_sum(spaces.inn, v);
  report.aid_lower = lower.dim();
  report.aid_upper = upper.dim();
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return AidResult{std::move(spaces), std::move(cert), std::move(v), std::move(lower), std::move(upper),
                   std::move(report)};
}

Subspace central_maps(const StructureTable& t) {
  const std::size_t n = t.dim();
  Subspace z = center(t);
  std::vector<Vector> maps;
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& c : z.basis_vectors()) {
      Vector flat = zero_vector(t.field(), n * n);
      std::copy(c.begin(), c.end(), flat.begin() + static_cast<std::ptrdiff_t>(j * n));
      maps.push_back(std::move(flat));
    }
  return Subspace::span(t.field(), n * n, maps);
}

Subspace compute_caid(const StructureTable& t, const Subspace& aid) {
  return subspace_intersect(aid, subspace_sum(compute_inn(t), central_maps(t)));
}

}  // namespace lieaid
