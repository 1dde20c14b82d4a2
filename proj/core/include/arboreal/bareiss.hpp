#pragma once

#include <vector>

#include "arboreal/exact_field.hpp"

namespace arboreal {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction-free elimination; every intermediate division is exact.
Int bareiss_det(Matrix<Int> m);

// Rows are scaled to integers, then Bareiss.
Rat determinant(const Matrix<Rat>& m);

// Gaussian elimination over Q(sqrt d).
QuadElem determinant(Matrix<QuadElem> m);

}  // namespace arboreal
