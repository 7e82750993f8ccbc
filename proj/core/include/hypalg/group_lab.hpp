#pragma once

#include "hypalg/matrix.hpp"
#include "hypalg/operator_matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hypalg {

/// Scalar carrier of a matrix group: plain quaternions q (4 real parameters
/// per entry), complex linear operators Q_c = q0 + q1|e1 (8), or real linear
/// operators Q_r (16).
enum class Carrier { Q, Qc, Qr };

enum class Family { U, SU, O, OTilde, Sp };

struct GroupSpec {
  Family family = Family::U;
  Carrier carrier = Carrier::Q;
  int n = 1;
};

std::string to_string(Family f);
std::string to_string(Carrier c);
std::string to_string(const GroupSpec& spec);

int params_per_entry(Carrier c);           // 4 / 8 / 16
int param_dim(const GroupSpec& spec);      // n² * params_per_entry

/// Builds the operator matrix whose carrier parameters (fixed ordering:
/// entry, then slot, then quaternion component) are `params`.
OperatorMatrix op_from_params(Carrier carrier, int n, const std::vector<Scalar>& params);

/// Inverse of op_from_params; requires m to lie in the carrier subspace.
std::vector<Scalar> params_from_op(Carrier carrier, const OperatorMatrix& m);

/// Defining linear constraint of a group family:
///   U:  A + A† = 0          SU: U and Tr A = 0
///   O:  A + A^t = 0         Sp: JA + A^t J = 0
///   Õ:  gA + A† g = 0       (g entrywise on the diagonal)
/// SU over q or Q_r resolves to U (the real trace vanishes on the U kernel);
/// `su_collapsed` records the notice. Extra trace rows are appended for
/// SU(n, Q_c).
struct Constraint {
  GroupSpec spec;
  bool su_collapsed = false;
  /// C(A); zero exactly on the group's Lie algebra.
  OperatorMatrix operator()(const OperatorMatrix& a) const;
  /// Extra scalar conditions beyond the operator equation (trace rows).
  std::vector<Scalar> extra_rows(const OperatorMatrix& a) const;
};

Constraint defining_constraint(const GroupSpec& spec);

struct GeneratorBasis {
  GroupSpec spec;
  std::vector<OperatorMatrix> ops;
  int dim = 0;
  bool su_collapsed = false;
  /// Canonical parameter rows (RREF over the fixed parameter ordering).
  RealMatrix rows;
};

/// Exact kernel of the defining constraint over the carrier's real parameter
/// space, canonicalized so output is deterministic and diffable.
GeneratorBasis solve_generators(const GroupSpec& spec);

/// Span equality of two operator-matrix families (exact, via RREF of the
/// flattened coefficient rows).
bool span_equal(const std::vector<OperatorMatrix>& a, const std::vector<OperatorMatrix>& b);

struct ClosureResult {
  bool closed = true;
  std::optional<std::pair<int, int>> violating_pair;
};

/// Checks that every commutator [A_i, A_j] satisfies the defining constraint
/// and lies in the basis span. Exact membership tests.
ClosureResult verify_closure(const GeneratorBasis& basis);

enum class MetricKind { Dagger, Transpose, GTwisted, SymplecticJ };
enum class Projection { Real, Complex };

struct MetricSpec {
  MetricKind kind = MetricKind::Dagger;
  Projection projection = Projection::Real;
};

/// Exact signature of the induced real quadratic form on n-dimensional
/// states: (q†q)_r -> (4,0), (q^t q)_r -> (2,2), (q† g q)_r -> (1,3) for
/// n = 1. Combinations the source material does not define (complex
/// projection, symplectic kind) are refused with std::domain_error.
Signature metric_signature(const MetricSpec& metric, Carrier carrier, int n = 1);

struct InvarianceResult {
  bool invariant = true;
  /// (generator index, psi state index, phi state index) of a violation.
  std::optional<std::array<int, 3>> witness;
};

/// First-order invariance of the metric under every generator, exhaustively
/// over the 4n x 4n pairs of basis states: for dagger metrics
/// proj((A psi)† phi + psi† (A phi)) = 0, with the transpose / g-twisted /
/// symplectic variants for the other kinds.
InvarianceResult invariance_check(const std::vector<OperatorMatrix>& basis,
                                  const MetricSpec& metric, int n);

/// The nonsingular antisymmetric metric: standard block J for even n, and for
/// odd n the quaternionic form with e2 in the central diagonal slot
/// (J^t = -J under the barred transpose). n = 1 gives the 1x1 matrix (e2).
OperatorMatrix symplectic_J(int n);

/// Closed-form generator counts of the dimensionality table. Throws for
/// combinations the table does not define (Õ off Q_r).
long dimension_formula(const GroupSpec& spec);

/// The families of the dimensionality table, in its row order.
std::vector<GroupSpec> table_families(int n);

/// The listed one-dimensional generator sets (U/SU/O/Sp over Q_c, U/O/Õ/Sp
/// over Q_r, U/O over q). Empty when no set is listed for the spec.
std::vector<OperatorMatrix> paper_basis_1d(const GroupSpec& spec);

/// Metric preserved by each family (the one used for invariance batteries);
/// projection complex for Q_c, real otherwise.
MetricSpec family_metric(const GroupSpec& spec);

/// SU(n, Q_c) trace-condition report: kernel dimensions with the full complex
/// trace (two ambient real conditions), the e1 component only, and the real
/// component only, plus which of them matches 4n² - 1.
struct SuTraceReport {
  int n = 0;
  int dim_u = 0;
  int dim_full_trace = 0;
  int dim_e1_component = 0;
  int dim_re_component = 0;
  long paper_count = 0;
  std::string matching_condition;
};
SuTraceReport su_trace_report(int n);

}  // namespace hypalg
