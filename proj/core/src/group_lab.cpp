#include "hypalg/group_lab.hpp"

#include <stdexcept>
#include <utility>

namespace hypalg {

std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::O: return "O";
    case Family::OTilde: return "O~";
    case Family::Sp: return "Sp";
  }
  return {};
}

std::string to_string(Carrier c) {
  switch (c) {
    case Carrier::Q: return "q";
    case Carrier::Qc: return "Qc";
    case Carrier::Qr: return "Qr";
  }
  return {};
}

std::string to_string(const GroupSpec& spec) {
  return to_string(spec.family) + "(" + std::to_string(spec.n) + "," + to_string(spec.carrier) +
         ")";
}

int params_per_entry(Carrier c) {
  switch (c) {
    case Carrier::Q: return 4;
    case Carrier::Qc: return 8;
    case Carrier::Qr: return 16;
  }
  return 0;
}

int param_dim(const GroupSpec& spec) { return spec.n * spec.n * params_per_entry(spec.carrier); }

namespace {

int slots_per_entry(Carrier c) { return params_per_entry(c) / 4; }

OperatorMatrix g_diag(int n) { return diag_operator(g_operator(), n); }

}  // namespace

OperatorMatrix op_from_params(Carrier carrier, int n, const std::vector<Scalar>& params) {
  const int slots = slots_per_entry(carrier);
  if (params.size() != static_cast<std::size_t>(n) * n * slots * 4) {
    throw std::invalid_argument("op_from_params: wrong parameter count");
  }
  OperatorMatrix m(n);
  std::size_t p = 0;
  for (auto& entry : m.e) {
    for (int slot = 0; slot < slots; ++slot) {
      for (int comp = 0; comp < 4; ++comp) entry.c[slot].comp(comp) = params[p++];
    }
  }
  return m;
}

std::vector<Scalar> params_from_op(Carrier carrier, const OperatorMatrix& m) {
  const int slots = slots_per_entry(carrier);
  std::vector<Scalar> out;
  out.reserve(m.e.size() * slots * 4);
  for (const auto& entry : m.e) {
    for (int slot = 0; slot < 4; ++slot) {
      if (slot < slots) {
        for (int comp = 0; comp < 4; ++comp) out.push_back(entry.c[slot].comp(comp));
      } else if (!entry.c[slot].is_zero()) {
        throw std::invalid_argument("params_from_op: operator leaves the carrier subspace");
      }
    }
  }
  return out;
}

OperatorMatrix Constraint::operator()(const OperatorMatrix& a) const {
  switch (spec.family) {
    case Family::U:
    case Family::SU:
      return a + dagger(a);
    case Family::O:
      return a + btranspose(a);
    case Family::OTilde: {
      const OperatorMatrix g = g_diag(spec.n);
      return compose(g, a) + compose(dagger(a), g);
    }
    case Family::Sp: {
      const OperatorMatrix j = symplectic_J(spec.n);
      return compose(j, a) + compose(btranspose(a), j);
    }
  }
  throw std::invalid_argument("constraint: bad family");
}

std::vector<Scalar> Constraint::extra_rows(const OperatorMatrix& a) const {
  if (spec.family != Family::SU || su_collapsed) return {};
  // SU(n, Q_c): complex trace zero (two real conditions in the ambient
  // space; the Re row is implied by antihermiticity on the U kernel).
  ComplexValue t;
  for (int r = 0; r < spec.n; ++r) t = t + detail::complex_trace_unchecked(a.at(r, r));
  return {t.re, t.im};
}

Constraint defining_constraint(const GroupSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("defining_constraint: n must be >= 1");
  if (spec.family == Family::OTilde && spec.carrier != Carrier::Qr) {
    throw std::domain_error("defining_constraint: O~ is defined over Q_r only");
  }
  Constraint c;
  c.spec = spec;
  // The real trace vanishes on the U kernel, so SU over q or Q_r is U.
  c.su_collapsed =
      spec.family == Family::SU && (spec.carrier == Carrier::Q || spec.carrier == Carrier::Qr);
  return c;
}

namespace {

/// Constraint matrix: one column per carrier parameter, rows are the
/// flattened constraint image plus any extra (trace) rows.
RealMatrix constraint_matrix(const Constraint& c) {
  const GroupSpec& spec = c.spec;
  const int columns = param_dim(spec);
  std::vector<std::vector<Scalar>> cols;
  cols.reserve(static_cast<std::size_t>(columns));
  std::vector<Scalar> params(static_cast<std::size_t>(columns), Scalar(0));
  for (int j = 0; j < columns; ++j) {
    params[static_cast<std::size_t>(j)] = 1;
    const OperatorMatrix unit_op = op_from_params(spec.carrier, spec.n, params);
    params[static_cast<std::size_t>(j)] = 0;
    std::vector<Scalar> col = flatten(c(unit_op));
    for (auto& extra : c.extra_rows(unit_op)) col.push_back(std::move(extra));
    cols.push_back(std::move(col));
  }
  RealMatrix m(cols.front().size(), static_cast<std::size_t>(columns));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < cols[j].size(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace

GeneratorBasis solve_generators(const GroupSpec& spec) {
  const Constraint c = defining_constraint(spec);
  const RealMatrix kernel = kernel_basis(constraint_matrix(c));
  GeneratorBasis basis;
  basis.spec = spec;
  basis.su_collapsed = c.su_collapsed;
  basis.dim = static_cast<int>(kernel.rows());
  basis.rows = kernel;
  basis.ops.reserve(kernel.rows());
  for (std::size_t r = 0; r < kernel.rows(); ++r) {
    std::vector<Scalar> params(kernel.cols());
    for (std::size_t j = 0; j < kernel.cols(); ++j) params[j] = kernel.at(r, j);
    basis.ops.push_back(op_from_params(spec.carrier, spec.n, params));
  }
  return basis;
}

bool span_equal(const std::vector<OperatorMatrix>& a, const std::vector<OperatorMatrix>& b) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  const std::size_t w = flatten(a.front()).size();
  auto rows_of = [w](const std::vector<OperatorMatrix>& ops) {
    RealMatrix rows(ops.size(), w);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      const std::vector<Scalar> f = flatten(ops[i]);
      if (f.size() != w) throw std::invalid_argument("span_equal: shape mismatch");
      for (std::size_t j = 0; j < w; ++j) rows.at(i, j) = f[j];
    }
    return rref(rows);
  };
  return rows_of(a) == rows_of(b);
}

ClosureResult verify_closure(const GeneratorBasis& basis) {
  ClosureResult result;
  if (basis.ops.empty()) return result;
  const Constraint c = defining_constraint(basis.spec);

  const std::size_t w = flatten(basis.ops.front()).size();
  RealMatrix rows(basis.ops.size(), w);
  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    const std::vector<Scalar> f = flatten(basis.ops[i]);
    for (std::size_t j = 0; j < w; ++j) rows.at(i, j) = f[j];
  }
  const RealMatrix span = rref(rows);

  for (std::size_t i = 0; i < basis.ops.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.ops.size(); ++j) {
      const OperatorMatrix comm =
          compose(basis.ops[i], basis.ops[j]) - compose(basis.ops[j], basis.ops[i]);
      bool ok = c(comm).is_zero() && in_row_span(span, flatten(comm));
      if (ok) {
        for (const auto& extra : c.extra_rows(comm)) {
          if (extra != 0) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) {
        result.closed = false;
        result.violating_pair = {static_cast<int>(i), static_cast<int>(j)};
        return result;
      }
    }
  }
  return result;
}

namespace {

std::vector<std::vector<Quaternion>> basis_states(int n) {
  std::vector<std::vector<Quaternion>> states;
  states.reserve(static_cast<std::size_t>(4) * n);
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k < 4; ++k) {
      std::vector<Quaternion> s(static_cast<std::size_t>(n));
      s[static_cast<std::size_t>(r)] = Quaternion::unit(k);
      states.push_back(std::move(s));
    }
  }
  return states;
}

Quaternion metric_value(const MetricSpec& metric, const std::vector<Quaternion>& psi,
                        const std::vector<Quaternion>& phi, const OperatorMatrix* j) {
  Quaternion acc;
  switch (metric.kind) {
    case MetricKind::Dagger:
      for (std::size_t r = 0; r < psi.size(); ++r) acc = acc + conjugate(psi[r]) * phi[r];
      return acc;
    case MetricKind::Transpose:
      for (std::size_t r = 0; r < psi.size(); ++r) acc = acc + transpose(psi[r]) * phi[r];
      return acc;
    case MetricKind::GTwisted: {
      const BarredQuaternion g = g_operator();
      for (std::size_t r = 0; r < psi.size(); ++r) {
        acc = acc + conjugate(psi[r]) * apply(g, phi[r]);
      }
      return acc;
    }
    case MetricKind::SymplecticJ: {
      const std::vector<Quaternion> jphi = apply(*j, phi);
      for (std::size_t r = 0; r < psi.size(); ++r) acc = acc + transpose(psi[r]) * jphi[r];
      return acc;
    }
  }
  throw std::invalid_argument("metric_value: bad kind");
}

bool projected_zero(const MetricSpec& metric, const Quaternion& v) {
  if (metric.projection == Projection::Real) return real_projection(v) == 0;
  return complex_projection(v).is_zero();
}

}  // namespace

Signature metric_signature(const MetricSpec& metric, Carrier carrier, int n) {
  if (metric.kind == MetricKind::SymplecticJ) {
    throw std::domain_error("metric_signature: antisymmetric metric has no signature");
  }
  if (metric.projection != Projection::Real) {
    throw std::domain_error("metric_signature: defined for real projection only");
  }
  if (metric.kind == MetricKind::GTwisted && carrier != Carrier::Qr) {
    throw std::domain_error("metric_signature: the g-twisted metric is a Q_r construction");
  }
  const auto states = basis_states(n);
  RealMatrix gram(states.size(), states.size());
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      gram.at(a, b) = real_projection(metric_value(metric, states[a], states[b], nullptr));
    }
  }
  return symmetric_signature(gram);
}

InvarianceResult invariance_check(const std::vector<OperatorMatrix>& basis,
                                  const MetricSpec& metric, int n) {
  InvarianceResult result;
  const auto states = basis_states(n);
  OperatorMatrix j;
  if (metric.kind == MetricKind::SymplecticJ) j = symplectic_J(n);
  for (std::size_t g = 0; g < basis.size(); ++g) {
    std::vector<std::vector<Quaternion>> mapped(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) mapped[s] = apply(basis[g], states[s]);
    for (std::size_t a = 0; a < states.size(); ++a) {
      for (std::size_t b = 0; b < states.size(); ++b) {
        const Quaternion variation = metric_value(metric, mapped[a], states[b], &j) +
                                     metric_value(metric, states[a], mapped[b], &j);
        if (!projected_zero(metric, variation)) {
          result.invariant = false;
          result.witness = {static_cast<int>(g), static_cast<int>(a), static_cast<int>(b)};
          return result;
        }
      }
    }
  }
  return result;
}

OperatorMatrix symplectic_J(int n) {
  if (n < 1) throw std::invalid_argument("symplectic_J: n must be >= 1");
  OperatorMatrix j(n);
  const int k = n / 2;
  if (n % 2 == 0) {
    for (int r = 0; r < k; ++r) {
      j.at(r, k + r) = BarredQuaternion::identity();
      j.at(k + r, r) = -BarredQuaternion::identity();
    }
  } else {
    for (int r = 0; r < k; ++r) {
      j.at(r, k + 1 + r) = BarredQuaternion::identity();
      j.at(k + 1 + r, r) = -BarredQuaternion::identity();
    }
    // The quaternionic feature: e2 is antisymmetric under the barred
    // transpose, so an odd-dimensional nonsingular J exists.
    j.at(k, k) = BarredQuaternion::from_left(Quaternion::unit(2));
  }
  return j;
}

long dimension_formula(const GroupSpec& spec) {
  const long n = spec.n;
  switch (spec.family) {
    case Family::U:
    case Family::SU:
      switch (spec.carrier) {
        case Carrier::Q: return n * (2 * n + 1);
        case Carrier::Qc: return spec.family == Family::SU ? 4 * n * n - 1 : 4 * n * n;
        case Carrier::Qr: return 2 * n * (4 * n - 1);
      }
      break;
    case Family::O:
      switch (spec.carrier) {
        case Carrier::Q: return n * (2 * n - 1);
        case Carrier::Qc: return 2 * n * (2 * n - 1);
        case Carrier::Qr: return 2 * n * (4 * n - 1);
      }
      break;
    case Family::OTilde:
      if (spec.carrier == Carrier::Qr) return 2 * n * (4 * n - 1);
      throw std::domain_error("dimension_formula: O~ is defined over Q_r only");
    case Family::Sp:
      switch (spec.carrier) {
        case Carrier::Q: return n * (2 * n + 1);
        case Carrier::Qc: return 2 * n * (2 * n + 1);
        case Carrier::Qr: return 2 * n * (4 * n + 1);
      }
      break;
  }
  throw std::invalid_argument("dimension_formula: bad spec");
}

std::vector<GroupSpec> table_families(int n) {
  return {
      {Family::U, Carrier::Q, n},   {Family::U, Carrier::Qc, n},  {Family::U, Carrier::Qr, n},
      {Family::SU, Carrier::Qc, n}, {Family::O, Carrier::Q, n},   {Family::O, Carrier::Qc, n},
      {Family::O, Carrier::Qr, n},  {Family::OTilde, Carrier::Qr, n},
      {Family::Sp, Carrier::Q, n},  {Family::Sp, Carrier::Qc, n}, {Family::Sp, Carrier::Qr, n},
  };
}

namespace {

OperatorMatrix op1(const BarredQuaternion& b) {
  OperatorMatrix m(1);
  m.at(0, 0) = b;
  return m;
}

BarredQuaternion lt(int m) { return BarredQuaternion::from_left(Quaternion::unit(m)); }
BarredQuaternion bt(int m, int n) { return BarredQuaternion::term(Quaternion::unit(m), n); }

}  // namespace

std::vector<OperatorMatrix> paper_basis_1d(const GroupSpec& spec) {
  if (spec.n != 1) return {};
  const Family f = spec.family;
  const Carrier c = spec.carrier;
  std::vector<BarredQuaternion> gens;
  if (f == Family::U && c == Carrier::Q) {
    gens = {lt(1), lt(2), lt(3)};
  } else if (f == Family::U && c == Carrier::Qc) {
    gens = {lt(1), lt(2), lt(3), bt(0, 1)};
  } else if (f == Family::U && c == Carrier::Qr) {
    gens = {lt(1), lt(2), lt(3), bt(0, 1), bt(0, 2), bt(0, 3)};
  } else if (f == Family::SU && c == Carrier::Qc) {
    gens = {lt(1), lt(2), lt(3)};
  } else if (f == Family::O && c == Carrier::Q) {
    gens = {lt(2)};
  } else if (f == Family::O && c == Carrier::Qc) {
    gens = {lt(2), bt(2, 1)};
  } else if (f == Family::O && c == Carrier::Qr) {
    gens = {lt(2), bt(1, 2), bt(3, 2), bt(0, 2), bt(2, 1), bt(2, 3)};
  } else if (f == Family::Sp && c == Carrier::Qc) {
    gens = {lt(1), lt(2), lt(3), bt(1, 1), bt(2, 1), bt(3, 1)};
  } else if (f == Family::Sp && c == Carrier::Qr) {
    gens = {lt(1), lt(2), lt(3), bt(0, 2), bt(1, 1), bt(2, 1),
            bt(3, 1), bt(1, 3), bt(2, 3), bt(3, 3)};
  } else if (f == Family::OTilde && c == Carrier::Qr) {
    gens = {lt(1) - bt(0, 1), lt(2) - bt(0, 2), lt(3) - bt(0, 3),
            bt(1, 2) - bt(2, 1), bt(1, 3) - bt(3, 1), bt(2, 3) - bt(3, 2)};
  } else {
    return {};
  }
  std::vector<OperatorMatrix> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(op1(g));
  return out;
}

MetricSpec family_metric(const GroupSpec& spec) {
  MetricSpec m;
  switch (spec.family) {
    case Family::U:
    case Family::SU: m.kind = MetricKind::Dagger; break;
    case Family::O: m.kind = MetricKind::Transpose; break;
    case Family::OTilde: m.kind = MetricKind::GTwisted; break;
    case Family::Sp: m.kind = MetricKind::SymplecticJ; break;
  }
  m.projection = spec.carrier == Carrier::Qc ? Projection::Complex : Projection::Real;
  return m;
}

SuTraceReport su_trace_report(int n) {
  SuTraceReport report;
  report.n = n;
  report.paper_count = dimension_formula({Family::SU, Carrier::Qc, n});

  const GroupSpec u_spec{Family::U, Carrier::Qc, n};
  Constraint u = defining_constraint(u_spec);
  const RealMatrix base = constraint_matrix(u);
  report.dim_u = static_cast<int>(kernel_basis(base).rows());

  // Trace functionals per parameter column.
  const int columns = param_dim(u_spec);
  std::vector<Scalar> re_row(static_cast<std::size_t>(columns));
  std::vector<Scalar> im_row(static_cast<std::size_t>(columns));
  std::vector<Scalar> params(static_cast<std::size_t>(columns), Scalar(0));
  for (int j = 0; j < columns; ++j) {
    params[static_cast<std::size_t>(j)] = 1;
    const OperatorMatrix e = op_from_params(Carrier::Qc, n, params);
    params[static_cast<std::size_t>(j)] = 0;
    ComplexValue t;
    for (int r = 0; r < n; ++r) t = t + detail::complex_trace_unchecked(e.at(r, r));
    re_row[static_cast<std::size_t>(j)] = t.re;
    im_row[static_cast<std::size_t>(j)] = t.im;
  }

  auto with_rows = [&](bool add_re, bool add_im) {
    const std::size_t extra = static_cast<std::size_t>(add_re) + static_cast<std::size_t>(add_im);
    RealMatrix m(base.rows() + extra, base.cols());
    for (std::size_t r = 0; r < base.rows(); ++r) {
      for (std::size_t c = 0; c < base.cols(); ++c) m.at(r, c) = base.at(r, c);
    }
    std::size_t r = base.rows();
    if (add_re) {
      for (std::size_t c = 0; c < base.cols(); ++c) m.at(r, c) = re_row[c];
      ++r;
    }
    if (add_im) {
      for (std::size_t c = 0; c < base.cols(); ++c) m.at(r, c) = im_row[c];
    }
    return static_cast<int>(kernel_basis(m).rows());
  };

  report.dim_full_trace = with_rows(true, true);
  report.dim_e1_component = with_rows(false, true);
  report.dim_re_component = with_rows(true, false);

  if (report.dim_full_trace == report.paper_count) {
    report.matching_condition =
        report.dim_e1_component == report.paper_count
            ? "full complex trace (the Re condition is implied by antihermiticity, so the e1 "
              "component alone gives the same kernel)"
            : "full complex trace";
  } else if (report.dim_e1_component == report.paper_count) {
    report.matching_condition = "e1 component only";
  } else if (report.dim_re_component == report.paper_count) {
    report.matching_condition = "Re component only";
  } else {
    report.matching_condition = "none";
  }
  return report;
}

}  // namespace hypalg
