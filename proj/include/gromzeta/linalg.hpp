#pragma once

#include <vector>

#include "gromzeta/matrix.hpp"
#include "gromzeta/polynomial.hpp"

namespace gromzeta {

// Determinant via fraction-free Bareiss elimination on an integer working
// copy; rational input is cleared row by row and the result scaled back.
// det of the 0x0 matrix is 1.
Rat det_exact(const Matrix& m);

// Reversed characteristic polynomial det(I - t*M), computed with the
// Faddeev-LeVerrier trace recurrence. Constant term 1, degree <= dim.
Polynomial charpoly_rev(const Matrix& m);

// trace(M^n) for n >= 0 (n = 0 gives the dimension).
Rat power_trace(const Matrix& m, unsigned long n);

// Smith normal form of an integer matrix M: U * M * V = diag(D) with U, V
// unimodular and non-negative diagonal entries in a divisibility chain
// D[0] | D[1] | ... .
struct SmithDecomposition {
    std::vector<Int> diagonal;  // length min(rows, cols)
    Matrix u;                   // rows x rows
    Matrix v;                   // cols x cols
};
SmithDecomposition smith_normal_form(const Matrix& m);

// Z^rows / (column span of M) decomposed as Z^free_rank + sum Z/torsion[i],
// torsion entries > 1 in a divisibility chain.
struct CokernelDecomposition {
    long free_rank = 0;
    std::vector<Int> torsion;
};
CokernelDecomposition cokernel_decomposition(const Matrix& m);

enum class JConvention { Interleaved, Block };

// The reference symplectic form: Interleaved puts the (0,-1;1,0) blocks on
// the diagonal pairwise, Block is (0,-I;I,0).
Matrix symplectic_form(int dim, JConvention convention = JConvention::Interleaved);

// Whether A^T J A = J for the chosen convention. Requires square even
// dimension >= 2.
bool symplectic_check(const Matrix& m, JConvention convention = JConvention::Interleaved);

// I - v * v^T * J, a symplectic transvection for any integer vector v.
Matrix symplectic_transvection(const std::vector<Int>& v,
                               JConvention convention = JConvention::Interleaved);

}  // namespace gromzeta
