#pragma once

#include <vector>

#include "exterior.hpp"

namespace dk {

/// Sum of components[i] * D_i.
Multivector vector_field(const Chart& chart, const std::vector<Poly>& components);
/// Component list of a degree-1 multivector.
std::vector<Poly> vector_components(const Multivector& v);
/// v(f) for a degree-1 multivector v.
Poly apply_vector(const Multivector& v, const Poly& f);
/// The degree-n form dx_1 ^ ... ^ dx_n.
DiffForm coordinate_volume(const Chart& chart);
DiffForm to_form(const CoframeForm& poly_form_in_coordinates);  // e_i read as dx_i

/// Schouten-Nijenhuis bracket; on vector fields it is the Lie bracket.
Multivector schouten_bracket(const Multivector& a, const Multivector& b);
/// Bracket of two vector fields, computed from the coordinate formula.
Multivector lie_bracket(const Multivector& x, const Multivector& y);

Multivector lie_derivative(const Multivector& v, const Multivector& t);
DiffForm lie_derivative(const Multivector& v, const DiffForm& w);

/// pi^k / k!, so partial_pfaffian(pi, 0) is the constant 1.
Multivector partial_pfaffian(const Multivector& pi, int k);

DiffForm exterior_derivative(const DiffForm& w);
DiffForm interior_product(const Multivector& v, const DiffForm& w);
/// Full contraction of a k-form with a k-vector. Throws DegreeMismatch.
Localized pairing(const DiffForm& w, const Multivector& m);

/// Antisymmetric coefficient matrix of a bivector: M[i][j] = pi^{ij}.
std::vector<std::vector<Poly>> bivector_matrix(const Multivector& pi);
Multivector bivector_from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& m);

int max_degree(const Multivector& m);

}  // namespace dk
