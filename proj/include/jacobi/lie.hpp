#pragma once

#include "jacobi/json_io.hpp"
#include "jacobi/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace jacobi {

using Matrix = std::vector<std::vector<Rational>>;

/// Lie algebra with an invariant symmetric bilinear form, in a basis e_i.
/// [e_i, e_j] = sum_k c[k][i][j] e_k and b(e_i, e_j) = metric[i][j].
struct MetricLieAlgebra {
    int dim = 0;
    std::vector<Matrix> c;
    Matrix metric;

    const Rational& bracket(int k, int i, int j) const { return c[k][i][j]; }
};

/// Action of each basis element on V; action[i] is dim_v x dim_v.
struct Representation {
    int dim_v = 0;
    std::vector<Matrix> action;
};

/// f[i][j][k] = b([e_i, e_j], e_k) and the inverse metric b^{ij}.
struct StructureTensors {
    int dim = 0;
    std::vector<Rational> f; ///< flattened, (i * dim + j) * dim + k
    Matrix c_up;

    const Rational& f_at(int i, int j, int k) const { return f[(i * dim + j) * dim + k]; }
};

struct LieCheck {
    bool ok = true;
    std::string identity;     ///< empty when ok
    std::vector<int> indices; ///< basis indices where it fails
    std::string message() const;
};

/// Checks antisymmetry, Jacobi, symmetry and nondegeneracy of the metric,
/// and invariance, in that order; reports the first failure.
LieCheck check_lie(const MetricLieAlgebra& g);

/// Shapes and the homomorphism property rho([e_i,e_j]) = [rho(e_i), rho(e_j)].
LieCheck check_representation(const MetricLieAlgebra& g, const Representation& v);

/// Throws Error(SingularMetric) when the metric has no inverse.
StructureTensors derive_tensors(const MetricLieAlgebra& g);

Matrix invert(const Matrix& m);

/// sl2 in the basis (h, e, f) with the trace form b(x, y) = tr(xy).
MetricLieAlgebra sl2();
Representation sl2_fundamental();

/// d-dimensional abelian algebra, identity metric.
MetricLieAlgebra abelian(int d);

Representation adjoint_representation(const MetricLieAlgebra& g);
/// Every basis element acts by zero on a 1-dimensional space.
Representation trivial_representation(const MetricLieAlgebra& g);

/// An algebra with its named representations. "adjoint" and "trivial" are
/// always available unless the source defines its own under those names.
struct LieData {
    std::string name;
    MetricLieAlgebra algebra;
    std::map<std::string, Representation> representations;

    /// Throws Error(InvalidArgument) listing the known names.
    const Representation& representation(const std::string& name) const;
};

/// Lie algebra file: {"dim", "structure_constants": c[k][i][j],
/// "metric", "representations": {name: {"dim", "action"}}}. Entries are
/// "p/q" strings or integers. Validates everything and throws
/// Error(LieValidation) on the first violated identity.
LieData lie_data_from_json(const Json& j, std::string name = "file");
Json to_json(const LieData& data);

/// "sl2", "abelian" (dimension 1) or "abelian:d".
LieData builtin_lie_data(const std::string& name);

} // namespace jacobi
