#pragma once

#include "jacobi/diagram.hpp"
#include "jacobi/rational.hpp"

#include <vector>

namespace oracle {

using Mat = std::vector<std::vector<jacobi::Rational>>;

/// A matrix Lie algebra given by a basis X_i of square matrices, with the
/// trace form b(x, y) = tr(xy) and its defining representation.
struct MatrixAlgebra {
    std::vector<Mat> basis;
};

MatrixAlgebra sl2_matrices();

/// Evaluates d by summing, for every edge, over the nonzero entries b^{ij}
/// of the inverse trace form, with f_{ijk} = tr([X_i, X_j] X_k) and the
/// circle read as tr(X_{i_1} ... X_{i_e}). Free loops contribute dim g each,
/// an empty circle contributes dim V.
jacobi::Rational naive_evaluate(const jacobi::Diagram& d, const MatrixAlgebra& g);

} // namespace oracle
