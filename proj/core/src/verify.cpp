#include "hypalg/verify.hpp"

#include "hypalg/bridge.hpp"
#include "hypalg/group_lab.hpp"
#include "hypalg/lorentz.hpp"
#include "hypalg/rng.hpp"
#include "hypalg/text_io.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace hypalg {

namespace {

void check(std::vector<CheckResult>& out, const std::string& suite, const std::string& name,
           bool pass, const std::string& detail = {}) {
  out.push_back({suite, name, pass, detail});
}

// ---------------------------------------------------------------------------
// Printed appendix fixtures.

RealMatrix r4_from(const int (&rows)[4][4]) {
  RealMatrix m(4, 4);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

struct AppendixARow {
  const char* name;
  int slot;  // 0 for plain e_m, else the bar slot
  int unit;
  int rows[4][4];
};

// The six 4x4 translations printed for the quaternionic barred operators.
const AppendixARow kAppendixA[6] = {
    {"e1", 0, 1, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}},
    {"1|e1", 1, 0, {{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}}},
    {"e2", 0, 2, {{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}}},
    {"1|e2", 2, 0, {{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}}},
    {"e3", 0, 3, {{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}},
    {"1|e3", 3, 0, {{0, 0, 0, -1}, {0, 0, 1, 0}, {0, -1, 0, 0}, {1, 0, 0, 0}}},
};

BarredQuaternion appendix_a_operator(const AppendixARow& row) {
  if (row.slot == 0) return BarredQuaternion::from_left(Quaternion::unit(row.unit));
  return BarredQuaternion::bar_unit(row.slot);
}

// 2x2 real blocks of the octonionic appendix: identity, sigma1, sigma3 and
// i*sigma2 (as the real matrix [[0,1],[-1,0]]).
enum class Block2 { Id, S1, S3, IS2 };

RealMatrix block2(Block2 b, int sign) {
  RealMatrix m(2, 2);
  switch (b) {
    case Block2::Id:
      m.at(0, 0) = sign;
      m.at(1, 1) = sign;
      break;
    case Block2::S1:
      m.at(0, 1) = sign;
      m.at(1, 0) = sign;
      break;
    case Block2::S3:
      m.at(0, 0) = sign;
      m.at(1, 1) = -sign;
      break;
    case Block2::IS2:
      m.at(0, 1) = sign;
      m.at(1, 0) = -sign;
      break;
  }
  return m;
}

struct AppendixBRow {
  const char* name;
  bool barred;  // false: e_m, true: 1|e_m
  int unit;
  int pattern;  // (1)..(4)
  Block2 kind[4];
  int sign[4];
};

// The fourteen 8x8 block rows; everything else is composed, never typed.
const AppendixBRow kAppendixB[14] = {
    {"e1", false, 1, 1, {Block2::IS2, Block2::IS2, Block2::IS2, Block2::IS2}, {-1, -1, -1, 1}},
    {"1|e1", true, 1, 1, {Block2::IS2, Block2::IS2, Block2::IS2, Block2::IS2}, {-1, 1, 1, -1}},
    {"e2", false, 2, 2, {Block2::S3, Block2::S3, Block2::Id, Block2::Id}, {-1, 1, -1, 1}},
    {"1|e2", true, 2, 2, {Block2::Id, Block2::Id, Block2::Id, Block2::Id}, {-1, 1, 1, -1}},
    {"e3", false, 3, 2, {Block2::S1, Block2::S1, Block2::IS2, Block2::IS2}, {-1, 1, -1, -1}},
    {"1|e3", true, 3, 2, {Block2::IS2, Block2::IS2, Block2::IS2, Block2::IS2}, {-1, -1, 1, 1}},
    {"e4", false, 4, 3, {Block2::S3, Block2::Id, Block2::S3, Block2::Id}, {-1, 1, 1, -1}},
    {"1|e4", true, 4, 3, {Block2::Id, Block2::Id, Block2::Id, Block2::Id}, {-1, -1, 1, 1}},
    {"e5", false, 5, 3, {Block2::S1, Block2::IS2, Block2::S1, Block2::IS2}, {-1, 1, 1, 1}},
    {"1|e5", true, 5, 3, {Block2::IS2, Block2::IS2, Block2::IS2, Block2::IS2}, {-1, -1, -1, -1}},
    {"e6", false, 6, 4, {Block2::Id, Block2::S3, Block2::S3, Block2::Id}, {-1, -1, 1, 1}},
    {"1|e6", true, 6, 4, {Block2::S3, Block2::S3, Block2::S3, Block2::S3}, {-1, 1, -1, 1}},
    {"e7", false, 7, 4, {Block2::IS2, Block2::S1, Block2::S1, Block2::IS2}, {-1, -1, 1, -1}},
    {"1|e7", true, 7, 4, {Block2::S1, Block2::S1, Block2::S1, Block2::S1}, {-1, 1, -1, 1}},
};

RealMatrix expand_blocks(const AppendixBRow& row) {
  // Block slots of patterns (1)..(4): the block column holding a, b, c, d in
  // block rows 0..3.
  static const int pattern_col[5][4] = {
      {}, {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  RealMatrix m(8, 8);
  for (int br = 0; br < 4; ++br) {
    const int bc = pattern_col[row.pattern][br];
    const RealMatrix b = block2(row.kind[br], row.sign[br]);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        m.at(static_cast<std::size_t>(2 * br + i), static_cast<std::size_t>(2 * bc + j)) =
            b.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
    }
  }
  return m;
}

RealMatrix appendix_b_image(const AppendixBRow& row) {
  return row.barred ? oct_right_unit(row.unit) : oct_left_unit(row.unit);
}

// ---------------------------------------------------------------------------

Octonion random_quaternionic_octonion(Rng& rng) {
  Octonion o;
  for (int i = 0; i < 4; ++i) o.c[i] = rng.rational();
  return o;
}

std::string dim_name(const GroupSpec& spec) { return to_string(spec); }

}  // namespace

std::vector<CheckResult> verify_structure(std::uint64_t seed, int random_triples) {
  std::vector<CheckResult> out;
  const std::string suite = "structure";
  const auto& sc = structure_constants();

  // eps3 is totally antisymmetric with +1 exactly on the seven cycles.
  {
    std::array<std::array<std::array<std::int8_t, 8>, 8>, 8> expected{};
    for (const auto& cyc : kOctonionCycles) {
      const int perms[6][4] = {{cyc[0], cyc[1], cyc[2], 1}, {cyc[1], cyc[2], cyc[0], 1},
                               {cyc[2], cyc[0], cyc[1], 1}, {cyc[1], cyc[0], cyc[2], -1},
                               {cyc[0], cyc[2], cyc[1], -1}, {cyc[2], cyc[1], cyc[0], -1}};
      for (const auto& p : perms) expected[p[0]][p[1]][p[2]] = static_cast<std::int8_t>(p[3]);
    }
    bool ok = true;
    for (int m = 1; m < 8 && ok; ++m) {
      for (int n = 1; n < 8 && ok; ++n) {
        for (int p = 1; p < 8 && ok; ++p) ok = sc.eps3[m][n][p] == expected[m][n][p];
      }
    }
    check(out, suite, "eps3 equals the seven oriented cycles", ok);
  }

  // eps4 derived from associators equals the published quadruple list,
  // extended by total antisymmetry, for every index 4-tuple.
  {
    constexpr int quads[7][4] = {{1, 2, 4, 7}, {1, 2, 6, 5}, {2, 3, 4, 5}, {2, 3, 7, 6},
                                 {3, 1, 4, 6}, {3, 1, 5, 7}, {4, 5, 7, 6}};
    std::array<std::array<std::array<std::array<std::int8_t, 8>, 8>, 8>, 8> expected{};
    for (const auto& q : quads) {
      // All 24 permutations of each quadruple with the permutation sign.
      int perm[4] = {0, 1, 2, 3};
      do {
        int sign = 1;
        for (int i = 0; i < 4; ++i) {
          for (int j = i + 1; j < 4; ++j) {
            if (perm[i] > perm[j]) sign = -sign;
          }
        }
        int idx[4];
        for (int i = 0; i < 4; ++i) idx[i] = q[perm[i]];
        expected[idx[0]][idx[1]][idx[2]][idx[3]] = static_cast<std::int8_t>(sign);
      } while (std::next_permutation(perm, perm + 4));
    }
    bool ok = true;
    for (int m = 1; m < 8 && ok; ++m) {
      for (int n = 1; n < 8 && ok; ++n) {
        for (int p = 1; p < 8 && ok; ++p) {
          for (int s = 1; s < 8 && ok; ++s) ok = sc.eps4[m][n][p][s] == expected[m][n][p][s];
        }
      }
    }
    check(out, suite, "eps4 from basis associators equals the quadruple list", ok);
  }

  // {e_m, e_n, e_p} = 2 eps4 e_s exhaustively over all 343 triples.
  {
    bool ok = true;
    for (int m = 1; m < 8 && ok; ++m) {
      for (int n = 1; n < 8 && ok; ++n) {
        for (int p = 1; p < 8 && ok; ++p) {
          Octonion expected;
          for (int s = 1; s < 8; ++s) {
            if (sc.eps4[m][n][p][s] != 0) expected.c[s] = 2 * sc.eps4[m][n][p][s];
          }
          ok = associator(Octonion::unit(m), Octonion::unit(n), Octonion::unit(p)) == expected;
        }
      }
    }
    check(out, suite, "associator of basis units is 2 eps4 e_s (343 triples)", ok);
  }

  // Each cycle spans a closed associative subalgebra isomorphic to the
  // quaternions.
  {
    bool ok = true;
    for (const auto& cyc : kOctonionCycles) {
      const Octonion a = Octonion::unit(cyc[0]), b = Octonion::unit(cyc[1]),
                     c = Octonion::unit(cyc[2]);
      ok = ok && a * b == c && b * c == a && c * a == b;
      ok = ok && associator(a, b, c).is_zero();
    }
    check(out, suite, "the seven cycles are quaternionic subalgebras", ok);
  }

  // Split construction.
  {
    const Octonion e1 = Octonion::unit(1), e2 = Octonion::unit(2), e3 = Octonion::unit(3),
                   e4 = Octonion::unit(4);
    const bool ok = e1 * e4 == Octonion::unit(5) && e2 * e4 == Octonion::unit(6) &&
                    e3 * e4 == Octonion::unit(7);
    check(out, suite, "split construction e5=e1e4, e6=e2e4, e7=e3e4", ok);
  }

  // Alternativity and norm composition on random triples/pairs, exact.
  {
    Rng rng(seed);
    bool alt_ok = true;
    bool norm_ok = true;
    for (int i = 0; i < random_triples; ++i) {
      const Octonion x = rng.octonion(), y = rng.octonion(), z = rng.octonion();
      if (!(associator(x, y, z) + associator(z, y, x)).is_zero()) alt_ok = false;
      if (norm2(x * y) != norm2(x) * norm2(y)) norm_ok = false;
      if (!alt_ok && !norm_ok) break;
    }
    check(out, suite,
          "alternativity {x,y,z}+{z,y,x}=0 on " + std::to_string(random_triples) +
              " random triples (exact)",
          alt_ok);
    check(out, suite, "norm composition N(ab)^2 = N(a)^2 N(b)^2 (exact)", norm_ok);
  }

  return out;
}

std::vector<CheckResult> verify_appendix() {
  std::vector<CheckResult> out;
  const std::string suite = "appendix";
  for (const auto& row : kAppendixA) {
    const bool ok = qr_to_r4(appendix_a_operator(row)) == r4_from(row.rows);
    check(out, suite, std::string("A: 4x4 image of ") + row.name + " matches the printed matrix",
          ok);
  }
  for (const auto& row : kAppendixB) {
    const bool ok = appendix_b_image(row) == expand_blocks(row);
    check(out, suite, std::string("B: 8x8 image of ") + row.name + " matches the printed blocks",
          ok);
  }
  return out;
}

std::vector<CheckResult> verify_rank64() {
  std::vector<CheckResult> out;
  const std::string suite = "rank64";
  const std::size_t r = left_barred_rank();
  check(out, suite, "left-barred basis rank", r == 64,
        r == 64 ? "rank=64 OK" : "rank=" + std::to_string(r));

  bool ok = true;
  std::string witness;
  for (int m = 1; m < 8 && ok; ++m) {
    for (int n = 1; n < 8 && ok; ++n) {
      if (m == n) continue;
      const RightBarredTerm t{Octonion::unit(m), n};
      const LeftBarredOctonion reduced = reduce_right(t);
      for (int b = 0; b < 8 && ok; ++b) {
        const Octonion psi = Octonion::unit(b);
        if (!(apply_left(reduced, psi) == apply_right(t, psi))) {
          ok = false;
          witness = "e" + std::to_string(m) + "(e" + std::to_string(n) + " on e" +
                    std::to_string(b);
        }
      }
    }
  }
  check(out, suite, "all 42 right-barred terms reduce with zero residual on all basis states",
        ok, witness);
  return out;
}

std::vector<CheckResult> verify_counting() {
  std::vector<CheckResult> out;
  const std::string suite = "counting";
  const auto symbols = barred_family_symbols();

  int counts[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& s : symbols) counts[static_cast<int>(s.kind)]++;
  const bool counts_ok = symbols.size() == 106 && counts[0] == 1 && counts[1] == 7 &&
                         counts[2] == 7 && counts[3] == 7 && counts[4] == 42 && counts[5] == 42;
  check(out, suite, "operator family counts 1+7+7 | 7 | 42 | 42 = 106 symbols", counts_ok,
        "total=" + std::to_string(symbols.size()));

  std::vector<RealMatrix> images;
  images.reserve(symbols.size());
  for (const auto& s : symbols) images.push_back(symbol_to_r8(s));
  const std::size_t span = rank(stack_flattened(images));
  check(out, suite, "span of the 106 symbols has dimension 64", span == 64,
        "dim=" + std::to_string(span));
  return out;
}

std::vector<CheckResult> verify_antihermiticity(std::uint64_t seed, int random_quaternions) {
  std::vector<CheckResult> out;
  const std::string suite = "antihermiticity";

  auto report = [&](const std::string& name, const LeftBarredOctonion& op, bool expect_pass) {
    const AntihermiticityVerdict v = antihermiticity_test(op);
    std::string detail;
    if (v.witness) {
      detail = "witness psi=" + to_string(v.witness->psi) + ", phi=" + to_string(v.witness->phi) +
               ": P_c((A psi)† phi)=" + to_string(v.witness->lhs) +
               " vs -P_c(psi† (A phi))=" + to_string(v.witness->rhs);
    }
    check(out, suite, name + (expect_pass ? " is antihermitian" : " fails antihermiticity"),
          v.antihermitian == expect_pass, detail);
  };

  report("e1", LeftBarredOctonion::from_left(Octonion::unit(1)), true);
  report("1|e1", LeftBarredOctonion::bar_unit(1), true);
  for (int m = 2; m <= 7; ++m) {
    report("e" + std::to_string(m), LeftBarredOctonion::from_left(Octonion::unit(m)), false);
  }
  report("composite \"e2\"", composite_unit(2), true);
  report("composite \"e4\"", composite_unit(4), true);
  report("composite \"e6\"", composite_unit(6), true);

  // The correction term maps every quaternion to zero.
  Rng rng(seed);
  bool ok = true;
  for (int i = 0; i < random_quaternions && ok; ++i) {
    const Octonion q = random_quaternionic_octonion(rng);
    for (int k : {3, 5, 7}) {
      if (!apply_left(correction_term(k), q).is_zero()) {
        ok = false;
        break;
      }
    }
  }
  check(out, suite,
        "correction terms ((e_k)e1 - e_k(e1)/2 annihilate " +
            std::to_string(random_quaternions) + " random quaternions (exact)",
        ok);
  return out;
}

std::vector<CheckResult> verify_generator_tables() {
  std::vector<CheckResult> out;
  const std::string suite = "generators";
  for (const GroupSpec& spec : table_families(1)) {
    const std::vector<OperatorMatrix> listed = paper_basis_1d(spec);
    if (listed.empty()) continue;  // no printed set for this family
    const GeneratorBasis solved = solve_generators(spec);
    const bool dim_ok = solved.dim == static_cast<int>(listed.size());
    const bool span_ok = span_equal(solved.ops, listed);
    check(out, suite, dim_name(spec) + " solved basis spans the listed set", dim_ok && span_ok,
          "dim=" + std::to_string(solved.dim) + " listed=" + std::to_string(listed.size()));
  }
  {
    // SU(1,Qc) is listed too; make the notice path explicit for q and Qr.
    const GeneratorBasis su_q = solve_generators({Family::SU, Carrier::Q, 1});
    const GeneratorBasis u_q = solve_generators({Family::U, Carrier::Q, 1});
    check(out, suite, "SU(1,q) resolves to U(1,q)",
          su_q.su_collapsed && su_q.dim == u_q.dim && span_equal(su_q.ops, u_q.ops));
  }
  return out;
}

std::vector<CheckResult> verify_dimension_table(int n_max) {
  std::vector<CheckResult> out;
  const std::string suite = "dims";
  for (int n = 1; n <= n_max; ++n) {
    for (const GroupSpec& spec : table_families(n)) {
      const long expected = dimension_formula(spec);
      const GeneratorBasis basis = solve_generators(spec);
      check(out, suite, dim_name(spec) + " kernel dimension equals the closed form",
            basis.dim == expected,
            "solved=" + std::to_string(basis.dim) + " formula=" + std::to_string(expected));
    }
    const SuTraceReport report = su_trace_report(n);
    std::ostringstream detail;
    detail << "U=" << report.dim_u << ", full-trace=" << report.dim_full_trace
           << ", e1-only=" << report.dim_e1_component << ", Re-only=" << report.dim_re_component
           << "; 4n^2-1=" << report.paper_count << " matched by: " << report.matching_condition;
    check(out, suite, "SU(" + std::to_string(n) + ",Qc) trace-condition report",
          report.dim_full_trace == report.paper_count, detail.str());
  }
  return out;
}

std::vector<CheckResult> verify_closure(int n_max) {
  std::vector<CheckResult> out;
  const std::string suite = "closure";
  for (int n = 1; n <= n_max; ++n) {
    for (const GroupSpec& spec : table_families(n)) {
      const GeneratorBasis basis = solve_generators(spec);
      const ClosureResult closure = verify_closure(basis);
      std::string detail;
      if (!closure.closed && closure.violating_pair) {
        detail = "violating pair (" + std::to_string(closure.violating_pair->first) + "," +
                 std::to_string(closure.violating_pair->second) + ")";
      }
      check(out, suite, dim_name(spec) + " commutators stay in the algebra", closure.closed,
            detail);

      const MetricSpec metric = family_metric(spec);
      const InvarianceResult inv = invariance_check(basis.ops, metric, n);
      check(out, suite, dim_name(spec) + " generators leave the defining metric invariant",
            inv.invariant);
    }
  }
  // A generator outside a group must violate its metric: e1 vs the transpose
  // metric.
  {
    std::vector<OperatorMatrix> e1(1, OperatorMatrix(1));
    e1[0].at(0, 0) = BarredQuaternion::from_left(Quaternion::unit(1));
    const InvarianceResult inv =
        invariance_check(e1, MetricSpec{MetricKind::Transpose, Projection::Real}, 1);
    check(out, suite, "e1 violates the transpose metric (witness found)", !inv.invariant);
  }
  return out;
}

std::vector<CheckResult> verify_metric_signatures() {
  std::vector<CheckResult> out;
  const std::string suite = "metrics";
  auto sig_is = [](const Signature& s, int p, int m) {
    return s.positive == p && s.negative == m && s.radical == 0;
  };
  const Signature dag =
      metric_signature(MetricSpec{MetricKind::Dagger, Projection::Real}, Carrier::Qr, 1);
  check(out, suite, "(q†q)_r has signature (4,0)", sig_is(dag, 4, 0),
        std::to_string(dag.positive) + "," + std::to_string(dag.negative));
  const Signature tra =
      metric_signature(MetricSpec{MetricKind::Transpose, Projection::Real}, Carrier::Qr, 1);
  check(out, suite, "(q^t q)_r has signature (2,2)", sig_is(tra, 2, 2),
        std::to_string(tra.positive) + "," + std::to_string(tra.negative));
  const Signature gtw =
      metric_signature(MetricSpec{MetricKind::GTwisted, Projection::Real}, Carrier::Qr, 1);
  check(out, suite, "(q†gq)_r has signature (1,3)", sig_is(gtw, 1, 3),
        std::to_string(gtw.positive) + "," + std::to_string(gtw.negative));
  return out;
}

std::vector<CheckResult> verify_commutant() {
  std::vector<CheckResult> out;
  const std::string suite = "commutant";
  const auto& sub = complex_linear_subalgebra();
  check(out, suite, "commutant of 1|e1 has dimension 32", sub.size() == 32,
        "dim=" + std::to_string(sub.size()));

  const RealMatrix span = rref(stack_flattened(sub));
  bool closed = true;
  for (const auto& a : sub) {
    for (const auto& b : sub) {
      const RealMatrix p = a * b;
      if (!in_row_span(span, std::vector<Scalar>(p.data().begin(), p.data().end()))) {
        closed = false;
        break;
      }
    }
    if (!closed) break;
  }
  check(out, suite, "commutant is closed under matrix product (32x32 products)", closed);

  {
    const RealMatrix e1 = oct_left_unit(1);
    check(out, suite, "left multiplication by e1 lies in the commutant",
          in_row_span(span, std::vector<Scalar>(e1.data().begin(), e1.data().end())));
    const RealMatrix e2 = oct_left_unit(2);
    const RealMatrix& r1 = oct_right_unit(1);
    check(out, suite, "bare e2 does not commute with 1|e1",
          !(e2 * r1 - r1 * e2).is_zero());
  }

  // oc_to_c4 on the named operators.
  {
    ComplexMatrix i4(4, 4);
    for (int i = 0; i < 4; ++i) i4.at(i, i) = ComplexValue{0, 1};
    check(out, suite, "oc_to_c4(1|e1) = i times the identity",
          oc_to_c4(LeftBarredOctonion::bar_unit(1)) == i4);

    ComplexMatrix e22(4, 4);
    e22.at(0, 1) = ComplexValue{-1, 0};
    e22.at(1, 0) = ComplexValue{1, 0};
    check(out, suite, "oc_to_c4(composite \"e2\") is the corner [[0,-1],[1,0]] matrix",
          oc_to_c4(composite_unit(2)) == e22);

    ComplexMatrix h(4, 4);
    h.at(0, 1) = ComplexValue{1, 0};
    h.at(1, 0) = ComplexValue{1, 0};
    check(out, suite, "oc_to_c4(hermitian partner of e3) is the corner [[0,1],[1,0]] matrix",
          oc_to_c4(hermitian_partner(3)) == h);
  }
  return out;
}

std::vector<CheckResult> verify_transpose_laws(std::uint64_t seed, int samples) {
  std::vector<CheckResult> out;
  const std::string suite = "transpose";
  Rng rng(seed);
  bool law_ok = true;
  bool e2_form_ok = true;
  for (int i = 0; i < samples; ++i) {
    const int n = (i % 2 == 0) ? 2 : 3;
    const OperatorMatrix m = rng.quaternionic_matrix(n);
    const OperatorMatrix p = rng.quaternionic_matrix(n);
    if (!(btranspose(compose(m, p)) == compose(btranspose(p), btranspose(m)))) law_ok = false;
    // M^t = -e2 M† e2 with scalar e2 matrices.
    const OperatorMatrix e2 =
        diag_operator(BarredQuaternion::from_left(Quaternion::unit(2)), n);
    const OperatorMatrix rhs = Scalar(-1) * compose(e2, compose(dagger(m), e2));
    if (!(btranspose(m) == rhs)) e2_form_ok = false;
    if (!law_ok && !e2_form_ok) break;
  }
  check(out, suite,
        "(MN)^t = N^t M^t for " + std::to_string(samples) + " random 2x2/3x3 matrices (exact)",
        law_ok);
  check(out, suite, "M^t = -e2 M† e2 on the same samples (exact)", e2_form_ok);

  // Frozen counterexample for the naive component-only transpose.
  {
    OperatorMatrix m(2), n2(2);
    m.at(0, 0) = BarredQuaternion::from_left(Quaternion::unit(1));
    n2.at(0, 0) = BarredQuaternion::from_left(Quaternion::unit(2));
    const OperatorMatrix lhs = naive_transpose(compose(m, n2));
    const OperatorMatrix rhs = compose(naive_transpose(n2), naive_transpose(m));
    check(out, suite, "naive transpose counterexample: (MN)^t != N^t M^t for M=diag(e1,0), N=diag(e2,0)",
          !(lhs == rhs));
  }
  return out;
}

std::vector<CheckResult> verify_lorentz(std::uint64_t seed, int compositions,
                                        int rotation_cases) {
  std::vector<CheckResult> out;
  const std::string suite = "lorentz";
  const LorentzKind kinds[6] = {LorentzKind::BoostX, LorentzKind::BoostY, LorentzKind::BoostZ,
                                LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ};

  // Exact algebra before any exponentiation.
  {
    const BarredQuaternion g = g_operator();
    bool ok = true;
    for (LorentzKind k : kinds) {
      const BarredQuaternion a = lorentz_generator(k);
      if (!(compose(g, a) + compose(dagger(a), g)).is_zero()) ok = false;
    }
    check(out, suite, "every generator satisfies gA + A†g = 0 exactly", ok);
  }
  {
    // Rotation commutators close on rotations ([rot_x, rot_y] = -rot_z here),
    // boost commutators land in the rotation span.
    auto comm = [](LorentzKind a, LorentzKind b) {
      const BarredQuaternion x = lorentz_generator(a), y = lorentz_generator(b);
      return compose(x, y) - compose(y, x);
    };
    auto op1 = [](const BarredQuaternion& b) {
      OperatorMatrix m(1);
      m.at(0, 0) = b;
      return m;
    };
    std::vector<OperatorMatrix> rotations = {op1(lorentz_generator(LorentzKind::RotX)),
                                             op1(lorentz_generator(LorentzKind::RotY)),
                                             op1(lorentz_generator(LorentzKind::RotZ))};
    const RealMatrix rot_span = rref(
        [&] {
          RealMatrix rows(3, 16);
          for (int i = 0; i < 3; ++i) {
            const auto f = flatten(rotations[static_cast<std::size_t>(i)]);
            for (std::size_t j = 0; j < 16; ++j) rows.at(static_cast<std::size_t>(i), j) = f[j];
          }
          return rows;
        }());
    bool rot_ok = true;
    const LorentzKind rots[3] = {LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ};
    for (int i = 0; i < 3; ++i) {
      const BarredQuaternion c = comm(rots[i], rots[(i + 1) % 3]);
      if (!in_row_span(rot_span, flatten(op1(c))) || c.is_zero()) rot_ok = false;
    }
    check(out, suite, "so(3): rotation commutators stay in the rotation span (exact)", rot_ok);

    const LorentzKind boosts[3] = {LorentzKind::BoostX, LorentzKind::BoostY, LorentzKind::BoostZ};
    bool boost_ok = true;
    for (int i = 0; i < 3; ++i) {
      const BarredQuaternion c = comm(boosts[i], boosts[(i + 1) % 3]);
      if (!in_row_span(rot_span, flatten(op1(c))) || c.is_zero()) boost_ok = false;
    }
    check(out, suite, "boost-boost commutators land in the rotation span (exact)", boost_ok);
  }

  // Pinned single transforms.
  {
    const Event e1{{0.0, 1.0, 0.0, 0.0}};
    const Event r = transform(LorentzKind::RotZ, std::acos(-1.0) / 2.0, e1);
    const bool rot_ok = std::fabs(r.q[0]) < 1e-12 && std::fabs(r.q[1]) < 1e-12 &&
                        std::fabs(r.q[2] - 1.0) < 1e-12 && std::fabs(r.q[3]) < 1e-12;
    check(out, suite, "rot_z(pi/2) maps (0,1,0,0) to (0,0,1,0) within 1e-12", rot_ok);

    const double theta = 0.7;
    const Event b = transform(LorentzKind::BoostX, theta, Event{{1.0, 0.0, 0.0, 0.0}});
    const bool boost_ok = std::fabs(b.q[0] - std::cosh(theta)) < 1e-12 &&
                          std::fabs(b.q[1] + std::sinh(theta)) < 1e-12 &&
                          std::fabs(b.q[2]) < 1e-12 && std::fabs(b.q[3]) < 1e-12;
    check(out, suite, "boost_x(0.7) maps (1,0,0,0) to (cosh,-sinh,0,0) within 1e-12", boost_ok);

    const Event id = transform(LorentzKind::BoostY, 0.0, Event{{1.0, 2.0, 3.0, 4.0}});
    check(out, suite, "theta = 0 is the identity",
          id.q[0] == 1.0 && id.q[1] == 2.0 && id.q[2] == 3.0 && id.q[3] == 4.0);
  }

  // Interval drift over random compositions.
  {
    Rng rng(seed);
    double worst = 0.0;
    for (int c = 0; c < compositions; ++c) {
      Event ev{{rng.real(-2, 2), rng.real(-2, 2), rng.real(-2, 2), rng.real(-2, 2)}};
      const double before = interval(ev);
      for (int step = 0; step < 10; ++step) {
        const LorentzKind k = kinds[rng.integer(0, 5)];
        ev = transform(k, rng.real(-2, 2), ev);
      }
      const double drift = std::fabs(interval(ev) - before) / (1.0 + std::fabs(before));
      worst = std::max(worst, drift);
    }
    std::ostringstream detail;
    detail << "worst relative drift " << worst;
    check(out, suite,
          "interval invariant to 1e-9 over " + std::to_string(compositions) +
              " compositions of 10 transforms",
          worst <= 1e-9, detail.str());
  }

  // Rotation exponential equals the sandwich formula.
  {
    Rng rng(seed + 1);
    const LorentzKind rots[3] = {LorentzKind::RotX, LorentzKind::RotY, LorentzKind::RotZ};
    double worst = 0.0;
    for (int c = 0; c < rotation_cases; ++c) {
      const LorentzKind k = rots[rng.integer(0, 2)];
      const double alpha = rng.real(-2, 2);
      const Event ev{{0.0, rng.real(-2, 2), rng.real(-2, 2), rng.real(-2, 2)}};
      const Event a = transform(k, alpha, ev);
      const Event b = sandwich_rotate(k, alpha, ev);
      for (int i = 0; i < 4; ++i) worst = std::max(worst, std::fabs(a.q[i] - b.q[i]));
    }
    std::ostringstream detail;
    detail << "worst deviation " << worst;
    check(out, suite,
          "matrix exponential matches the rotation sandwich formula to 1e-12 on " +
              std::to_string(rotation_cases) + " cases",
          worst <= 1e-12, detail.str());
  }
  return out;
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names = {
      "structure", "appendix",  "rank64",  "counting", "antihermiticity", "generators",
      "dims",      "closure",   "metrics", "commutant", "transpose",       "lorentz"};
  return names;
}

std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "structure") return verify_structure(seed);
  if (name == "appendix") return verify_appendix();
  if (name == "rank64") return verify_rank64();
  if (name == "counting") return verify_counting();
  if (name == "antihermiticity") return verify_antihermiticity(seed);
  if (name == "generators") return verify_generator_tables();
  if (name == "dims") return verify_dimension_table();
  if (name == "closure") return verify_closure();
  if (name == "metrics") return verify_metric_signatures();
  if (name == "commutant") return verify_commutant();
  if (name == "transpose") return verify_transpose_laws(seed);
  if (name == "lorentz") return verify_lorentz(seed);
  throw std::invalid_argument("unknown verification suite '" + name + "'");
}

std::vector<CheckResult> run_all_suites(std::uint64_t seed) {
  const auto& names = verify_suite_names();
  std::vector<std::future<std::vector<CheckResult>>> futures;
  futures.reserve(names.size());
  for (const auto& name : names) {
    futures.push_back(
        std::async(std::launch::async, [name, seed] { return run_suite(name, seed); }));
  }
  std::vector<CheckResult> merged;
  for (auto& f : futures) {
    for (auto& r : f.get()) merged.push_back(std::move(r));
  }
  return merged;
}

}  // namespace hypalg
