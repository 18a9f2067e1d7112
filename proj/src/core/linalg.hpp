#pragma once

#include <vector>

#include "exterior.hpp"

namespace dk {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix zero_matrix(const Chart& chart, std::size_t rows, std::size_t cols);
PolyMatrix transpose(const PolyMatrix& m);
PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

/// Determinant of the submatrix on the given rows and columns (equal sizes).
Poly minor(const PolyMatrix& m, const IndexSet& rows, const IndexSet& cols);
Poly determinant(const PolyMatrix& m);
/// adj(m), so that m * adj(m) = det(m) * I.
PolyMatrix adjugate(const PolyMatrix& m);
/// Pfaffian of an antisymmetric matrix; zero for odd size.
Poly pfaffian(const PolyMatrix& antisymmetric);

}  // namespace dk
