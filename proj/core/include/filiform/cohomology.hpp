#pragma once

#include "filiform/cochain.hpp"

#include <vector>

namespace filiform {

/// Degree-1 differential with adjoint coefficients:
///   dc(x,y)   = c([x,y]) - [x,c(y)] + [y,c(x)]           (even-even)
///   dc(x,v)   = c([x,v]) - [x,c(v)] + [v,c(x)]           (even-odd)
///   dc(v,w)   = c([v,w]) - [v,c(w)] - [w,c(v)]           (odd-odd)
Cochain2 differential1(const SuperAlgebra& a, const Cochain1& c);

/// Degree-2 differential with adjoint coefficients. An even 2-cochain is a
/// cocycle exactly when the result is zero.
Cochain3 differential2(const SuperAlgebra& a, const Cochain2& c);

/// The differential as a sparse matrix over the canonical coordinates:
/// rows are Cochain3 coordinates, columns Cochain2 coordinates. Row count
/// enumerates only canonical index patterns. Honors FILIFORM_LAB_THREADS.
RationalMatrix assemble_d2_matrix(const SuperAlgebra& a);

/// Degree-1 differential as a matrix: rows Cochain2, columns Cochain1
/// coordinates (even block i*(n+1)+target, then odd block).
RationalMatrix assemble_d1_matrix(const SuperAlgebra& a);

int cochain1_dim(const SuperAlgebra& a);

/// Coordinates of an even 1-cochain in the d1 column layout.
SparseVec encode_cochain1(const Cochain1& c, int n, int m);

/// Basis of a cocycle subspace. Vectors are the canonical free-variable
/// kernel basis of the differential matrix; `pivots` records each vector's
/// distinguished coordinate (its free column), ascending.
struct CocycleBasis {
    int ambient_dim = 0;
    std::vector<Cochain2> vectors;
    std::vector<int> pivots;
    int dim() const { return static_cast<int>(vectors.size()); }
};

/// Kernel of the full degree-2 differential over the canonical coordinates.
/// Every returned vector is re-verified against differential2.
CocycleBasis z02_basis(const SuperAlgebra& a);

enum class CochainPart { psi, rho, b };

/// Kernel of the differential restricted to one homogeneous block of the
/// Cochain2 coordinates (all output rows kept).
CocycleBasis z02_component(const SuperAlgebra& a, CochainPart part);

struct H02Dims {
    int z = 0;  // dim Z_0^2
    int b = 0;  // dim B_0^2
    int h = 0;  // dim H_0^2 = z - b
};

/// Computes dim Z, dim B (image of differential1), dim H. Checks B is
/// contained in Z (d of d vanishes on the matrix level) and throws
/// std::logic_error otherwise.
H02Dims h02_dims(const SuperAlgebra& a);

}  // namespace filiform
