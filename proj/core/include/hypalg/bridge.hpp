#pragma once

#include "hypalg/barred_octonion.hpp"
#include "hypalg/barred_quaternion.hpp"
#include "hypalg/matrix.hpp"
#include "hypalg/operator_matrix.hpp"

#include <vector>

namespace hypalg {

// Exact translations between barred operators and real/complex matrix
// algebras. Conventions, fixed project-wide:
//  * quaternions are columns (w, x, y, z), octonions columns (r0, ..., r7);
//  * e_m <-> L_m (left multiplication), 1|e_m <-> R_m (right multiplication),
//    e_m)e_n <-> R_n L_m, e_m(e_n <-> L_m R_n;
//  * the symplectic column of q = c1 + e2 c2 is (c1, c2), complex scalars act
//    from the left inside each slot.
// Only the unit rules L_m, R_m are primitive; every composite is computed,
// never typed.

/// 4x4 image of left (quaternionic) multiplication by e_m, m in 0..3.
const RealMatrix& quat_left_unit(int m);
/// 4x4 image of right multiplication by e_m.
const RealMatrix& quat_right_unit(int m);

/// 8x8 image of left (octonionic) multiplication by e_m, m in 0..7.
const RealMatrix& oct_left_unit(int m);
/// 8x8 image of right multiplication by e_m.
const RealMatrix& oct_right_unit(int m);

/// 2x2 complex symplectic image of a quaternion: e1 -> i sigma3,
/// e2 -> -i sigma2, e3 -> -i sigma1. An injective algebra homomorphism onto a
/// 4-real-dimensional subalgebra of the 2x2 complex matrices.
ComplexMatrix q_to_c2(const Quaternion& q);

/// 2x2 complex image of a complex linear operator q0 + q1|e1 (1|e1 -> i*id).
/// Throws std::domain_error off the Q_c subspace. Together with q_to_c2 this
/// covers all of the 2x2 complex matrices.
ComplexMatrix qc_to_c2(const BarredQuaternion& op);

/// 4x4 real image of a real linear quaternionic operator; a linear
/// isomorphism of 16-dimensional algebras mapping composition to matrix
/// product and apply() to matrix-times-column.
RealMatrix qr_to_r4(const BarredQuaternion& op);

/// 8x8 real image of a left barred octonionic operator.
RealMatrix or_to_r8(const LeftBarredOctonion& op);

/// 8x8 real image of a right barred term o ( e_m, i.e. L_o R_m.
RealMatrix right_term_to_r8(const RightBarredTerm& t);

/// 8x8 image of one family symbol (1, e_m, 1|e_m, e_m|e_m, e_m)e_n, e_m(e_n).
RealMatrix symbol_to_r8(const BarredSymbol& s);

/// The 64 canonical left-barred basis images: slot m major, unit u minor,
/// matrix R_m L_u (L_u for m = 0).
const std::vector<RealMatrix>& left_barred_basis_r8();

/// Exact rank of the 64 basis images viewed as vectors in 64-dimensional
/// space; equals 64 (the basis is complete).
std::size_t left_barred_rank();

/// Inverse translation: expands an arbitrary 8x8 real matrix over the
/// left-barred basis (exact solve; always succeeds since the basis is
/// complete).
LeftBarredOctonion r8_to_left_barred(const RealMatrix& m);

/// Basis (32 matrices) of the commutant of R_1 inside the 64-dimensional
/// operator algebra: the real form of the complex linear octonionic
/// operators. Closed under matrix product.
const std::vector<RealMatrix>& complex_linear_subalgebra();

/// Reads the 4x4 complex matrix of a complex linear operator off its action
/// on the basis states {1, e2, e4, e6}. Throws std::domain_error when the
/// operator does not commute with right multiplication by e1.
ComplexMatrix oc_to_c4(const LeftBarredOctonion& op);

/// Determinant through the real regular representation (the 4x4 / 4n x 4n
/// translation image). Multiplicative by construction; the translation is the
/// only determinant definition used in this library.
Scalar det(const BarredQuaternion& op);
Scalar det(const OperatorMatrix& m);

/// 4n x 4n real image of an n x n operator matrix (entrywise qr_to_r4
/// blocks).
RealMatrix op_matrix_to_real(const OperatorMatrix& m);

}  // namespace hypalg
