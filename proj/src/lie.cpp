#include "jacobi/lie.hpp"

#include "jacobi/error.hpp"

#include <sstream>

namespace jacobi {

namespace {

Matrix zeros(int rows, int cols)
{
    return Matrix(rows, std::vector<Rational>(cols));
}

Matrix multiply(const Matrix& a, const Matrix& b)
{
    const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size();
    Matrix out = zeros(static_cast<int>(n), static_cast<int>(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (a[i][k] == 0)
                continue;
            for (std::size_t j = 0; j < m; ++j)
                out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

LieCheck failure(std::string identity, std::vector<int> indices)
{
    LieCheck r;
    r.ok = false;
    r.identity = std::move(identity);
    r.indices = std::move(indices);
    return r;
}

bool square(const Matrix& m, int n)
{
    if (static_cast<int>(m.size()) != n)
        return false;
    for (const auto& row : m)
        if (static_cast<int>(row.size()) != n)
            return false;
    return true;
}

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedInput, what);
}

Matrix matrix_from_json(const Json& j, int rows, int cols, const std::string& what)
{
    if (!j.is_array() || static_cast<int>(j.size()) != rows)
        malformed(what + " must be an array of " + std::to_string(rows) + " rows");
    Matrix m;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            malformed(what + " rows must have " + std::to_string(cols) + " entries");
        std::vector<Rational> r;
        for (const auto& x : row)
            r.push_back(rational_from_json(x));
        m.push_back(std::move(r));
    }
    return m;
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& x : row)
            r.push_back(to_string(x));
        rows.push_back(std::move(r));
    }
    return rows;
}

int positive_dim(const Json& j, const std::string& what)
{
    if (!j.is_number_integer() || j.get<long long>() <= 0 || j.get<long long>() > 1000)
        malformed(what + " must be a positive integer");
    return j.get<int>();
}

void add_default_representations(LieData& data)
{
    data.representations.try_emplace("adjoint", adjoint_representation(data.algebra));
    data.representations.try_emplace("trivial", trivial_representation(data.algebra));
}

} // namespace

std::string LieCheck::message() const
{
    if (ok)
        return "ok";
    std::ostringstream out;
    out << identity << " fails at indices (";
    for (std::size_t i = 0; i < indices.size(); ++i)
        out << (i ? "," : "") << indices[i];
    out << ")";
    return out.str();
}

LieCheck check_lie(const MetricLieAlgebra& g)
{
    const int n = g.dim;
    if (n <= 0)
        return failure("positive dimension", {});
    if (static_cast<int>(g.c.size()) != n)
        return failure("structure constant shape", {});
    for (const auto& ck : g.c)
        if (!square(ck, n))
            return failure("structure constant shape", {});
    if (!square(g.metric, n))
        return failure("metric shape", {});

    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                if (g.c[k][i][j] != -g.c[k][j][i])
                    return failure("antisymmetry", {k, i, j});

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    Rational s;
                    for (int m = 0; m < n; ++m)
                        s += g.c[m][i][j] * g.c[l][m][k] + g.c[m][j][k] * g.c[l][m][i]
                             + g.c[m][k][i] * g.c[l][m][j];
                    if (s != 0)
                        return failure("jacobi identity", {i, j, k, l});
                }

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.metric[i][j] != g.metric[j][i])
                return failure("metric symmetry", {i, j});
    try {
        invert(g.metric);
    } catch (const Error&) {
        return failure("metric nondegeneracy", {});
    }

    // b([e_i, e_j], e_l) + b(e_j, [e_i, e_l]) = 0
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int l = 0; l < n; ++l) {
                Rational s;
                for (int k = 0; k < n; ++k)
                    s += g.c[k][i][j] * g.metric[k][l] + g.c[k][i][l] * g.metric[j][k];
                if (s != 0)
                    return failure("metric invariance", {i, j, l});
            }
    return {};
}

LieCheck check_representation(const MetricLieAlgebra& g, const Representation& v)
{
    const int n = g.dim;
    if (v.dim_v <= 0 || static_cast<int>(v.action.size()) != n)
        return failure("representation shape", {});
    for (const auto& m : v.action)
        if (!square(m, v.dim_v))
            return failure("representation shape", {});
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix lhs = zeros(v.dim_v, v.dim_v);
            for (int k = 0; k < n; ++k)
                if (g.c[k][i][j] != 0)
                    for (int r = 0; r < v.dim_v; ++r)
                        for (int s = 0; s < v.dim_v; ++s)
                            lhs[r][s] += g.c[k][i][j] * v.action[k][r][s];
            Matrix ab = multiply(v.action[i], v.action[j]);
            Matrix ba = multiply(v.action[j], v.action[i]);
            for (int r = 0; r < v.dim_v; ++r)
                for (int s = 0; s < v.dim_v; ++s)
                    if (lhs[r][s] != ab[r][s] - ba[r][s])
                        return failure("representation homomorphism", {i, j});
        }
    return {};
}

Matrix invert(const Matrix& m)
{
    const int n = static_cast<int>(m.size());
    Matrix a = m;
    Matrix inv = zeros(n, n);
    for (int i = 0; i < n; ++i)
        inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int p = col;
        while (p < n && a[p][col] == 0)
            ++p;
        if (p == n)
            throw Error(ErrorCode::SingularMetric, "metric is singular");
        std::swap(a[p], a[col]);
        std::swap(inv[p], inv[col]);
        const Rational pivot = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= pivot;
            inv[col][j] /= pivot;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            const Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

StructureTensors derive_tensors(const MetricLieAlgebra& g)
{
    StructureTensors t;
    const int n = g.dim;
    t.dim = n;
    t.c_up = invert(g.metric);
    t.f.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Rational s;
                for (int m = 0; m < n; ++m)
                    s += g.c[m][i][j] * g.metric[m][k];
                t.f[(i * n + j) * n + k] = s;
            }
    return t;
}

MetricLieAlgebra sl2()
{
    MetricLieAlgebra g;
    g.dim = 3;
    g.c.assign(3, zeros(3, 3));
    auto set = [&](int i, int j, int k, int value) {
        g.c[k][i][j] = value;
        g.c[k][j][i] = -value;
    };
    constexpr int h = 0, e = 1, f = 2;
    set(h, e, e, 2);
    set(h, f, f, -2);
    set(e, f, h, 1);
    g.metric = zeros(3, 3);
    g.metric[h][h] = 2;
    g.metric[e][f] = 1;
    g.metric[f][e] = 1;
    return g;
}

Representation sl2_fundamental()
{
    Representation v;
    v.dim_v = 2;
    v.action.assign(3, zeros(2, 2));
    v.action[0][0][0] = 1;
    v.action[0][1][1] = -1;
    v.action[1][0][1] = 1;
    v.action[2][1][0] = 1;
    return v;
}

MetricLieAlgebra abelian(int d)
{
    if (d <= 0)
        throw Error(ErrorCode::InvalidArgument, "abelian algebra needs a positive dimension");
    MetricLieAlgebra g;
    g.dim = d;
    g.c.assign(d, zeros(d, d));
    g.metric = zeros(d, d);
    for (int i = 0; i < d; ++i)
        g.metric[i][i] = 1;
    return g;
}

Representation adjoint_representation(const MetricLieAlgebra& g)
{
    Representation v;
    v.dim_v = g.dim;
    v.action.assign(g.dim, zeros(g.dim, g.dim));
    for (int i = 0; i < g.dim; ++i)
        for (int k = 0; k < g.dim; ++k)
            for (int j = 0; j < g.dim; ++j)
                v.action[i][k][j] = g.c[k][i][j];
    return v;
}

Representation trivial_representation(const MetricLieAlgebra& g)
{
    Representation v;
    v.dim_v = 1;
    v.action.assign(g.dim, zeros(1, 1));
    return v;
}

const Representation& LieData::representation(const std::string& rep) const
{
    auto it = representations.find(rep);
    if (it != representations.end())
        return it->second;
    std::string known;
    for (const auto& [key, value] : representations)
        known += (known.empty() ? "" : ", ") + key;
    throw Error(ErrorCode::InvalidArgument,
                "unknown representation \"" + rep + "\" for " + name + " (known: " + known + ")");
}

LieData lie_data_from_json(const Json& j, std::string name)
{
    if (!j.is_object())
        malformed("a Lie algebra file must be a JSON object");
    for (const char* key : {"dim", "structure_constants", "metric"})
        if (!j.contains(key))
            malformed(std::string("Lie algebra file is missing \"") + key + "\"");
    LieData data;
    data.name = std::move(name);
    MetricLieAlgebra& g = data.algebra;
    g.dim = positive_dim(j["dim"], "dim");
    const Json& c = j["structure_constants"];
    if (!c.is_array() || static_cast<int>(c.size()) != g.dim)
        malformed("structure_constants must be indexed c[k][i][j] with dim outer entries");
    for (const auto& ck : c)
        g.c.push_back(matrix_from_json(ck, g.dim, g.dim, "structure_constants[k]"));
    g.metric = matrix_from_json(j["metric"], g.dim, g.dim, "metric");
    if (auto check = check_lie(g); !check.ok)
        throw Error(ErrorCode::LieValidation, check.message());

    if (j.contains("representations")) {
        const Json& reps = j["representations"];
        if (!reps.is_object())
            malformed("representations must be an object keyed by name");
        for (const auto& [key, rep] : reps.items()) {
            if (!rep.is_object() || !rep.contains("dim") || !rep.contains("action"))
                malformed("representation \"" + key + "\" needs \"dim\" and \"action\"");
            Representation v;
            v.dim_v = positive_dim(rep["dim"], "representation dim");
            const Json& action = rep["action"];
            if (!action.is_array() || static_cast<int>(action.size()) != g.dim)
                malformed("representation \"" + key + "\" needs one matrix per basis element");
            for (const auto& m : action)
                v.action.push_back(matrix_from_json(m, v.dim_v, v.dim_v, "action matrix"));
            if (auto check = check_representation(g, v); !check.ok)
                throw Error(ErrorCode::LieValidation, "representation \"" + key + "\": " + check.message());
            data.representations.emplace(key, std::move(v));
        }
    }
    add_default_representations(data);
    return data;
}

Json to_json(const LieData& data)
{
    Json j;
    j["dim"] = data.algebra.dim;
    Json c = Json::array();
    for (const auto& ck : data.algebra.c)
        c.push_back(matrix_to_json(ck));
    j["structure_constants"] = c;
    j["metric"] = matrix_to_json(data.algebra.metric);
    Json reps = Json::object();
    for (const auto& [key, v] : data.representations) {
        Json action = Json::array();
        for (const auto& m : v.action)
            action.push_back(matrix_to_json(m));
        reps[key] = {{"dim", v.dim_v}, {"action", action}};
    }
    j["representations"] = reps;
    return j;
}

LieData builtin_lie_data(const std::string& name)
{
    LieData data;
    data.name = name;
    if (name == "sl2") {
        data.algebra = sl2();
        data.representations.emplace("fundamental", sl2_fundamental());
    } else if (name == "abelian") {
        data.algebra = abelian(1);
    } else if (name.rfind("abelian:", 0) == 0) {
        int d = 0;
        try {
            std::size_t used = 0;
            d = std::stoi(name.substr(8), &used);
            if (used != name.size() - 8)
                d = 0;
        } catch (const std::exception&) {
            d = 0;
        }
        if (d <= 0 || d > 64)
            throw Error(ErrorCode::InvalidArgument, "abelian:d needs 1 <= d <= 64, got \"" + name + "\"");
        data.algebra = abelian(d);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown built-in algebra \"" + name + "\" (sl2, abelian, abelian:d)");
    }
    add_default_representations(data);
    return data;
}

} // namespace jacobi
