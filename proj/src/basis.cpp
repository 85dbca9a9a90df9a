#include "jacobi/basis.hpp"

#include "jacobi/error.hpp"
#include "jacobi/json_io.hpp"
#include "jacobi/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unistd.h>

namespace jacobi {

int component_count(const Diagram& d)
{
    const int n = d.half_edge_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    auto join = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int h = 0; h < n; ++h)
        join(h, d.pairing[h]);
    for (const auto& t : d.internal) {
        join(t[0], t[1]);
        join(t[0], t[2]);
    }
    for (std::size_t i = 1; i < d.skeleton.size(); ++i)
        join(d.skeleton[0], d.skeleton[i]);
    int count = d.free_loops;
    for (int h = 0; h < n; ++h)
        count += find(h) == h;
    if (d.space == Space::A && d.skeleton.empty())
        ++count; // bare circle
    return count;
}

std::vector<Diagram> QuotientBasis::basis() const
{
    std::vector<Diagram> out;
    for (int c : basis_columns)
        out.push_back(columns[c]);
    return out;
}

void QuotientBasis::rebuild_index()
{
    index.clear();
    for (int i = 0; i < static_cast<int>(columns.size()); ++i)
        index.emplace(columns[i], i);
}

QuotientBasis compute_basis(const Piece& piece, const EnumerationLimits& limits)
{
    QuotientBasis b;
    b.piece = piece;
    b.columns = enumerate_piece(piece, limits);
    std::stable_sort(b.columns.begin(), b.columns.end(), [](const Diagram& x, const Diagram& y) {
        if (x.internal.size() != y.internal.size())
            return x.internal.size() > y.internal.size();
        int cx = component_count(x), cy = component_count(y);
        if (cx != cy)
            return cx < cy;
        return DiagramLess{}(x, y);
    });
    b.rebuild_index();

    EchelonForm form(static_cast<int>(b.columns.size()));
    for (const auto& r : generate_relations(piece, limits).generators) {
        SparseRow row;
        for (const auto& [d, c] : r) {
            auto it = b.index.find(d);
            if (it == b.index.end())
                throw Error(ErrorCode::GradingMismatch, "relation leaves its piece " + to_string(piece));
            row.emplace_back(it->second, c);
        }
        std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        form.insert(std::move(row));
    }
    form.back_substitute();
    b.basis_columns = form.free_columns();
    b.relations = std::move(form);
    return b;
}

std::vector<Rational> reduce(const DiagramVector& x, const QuotientBasis& basis)
{
    std::vector<Rational> dense(basis.columns.size());
    for (const auto& [d, c] : x) {
        if (d.piece() != basis.piece)
            throw Error(ErrorCode::GradingMismatch,
                        "cannot reduce a " + to_string(d.piece()) + " term in a " + to_string(basis.piece) + " basis");
        auto it = basis.index.find(d);
        if (it == basis.index.end())
            throw Error(ErrorCode::InvalidArgument,
                        d.free_loops ? "diagrams with free loops lie outside the enumerated spaces"
                                     : "diagram missing from enumeration");
        dense[it->second] += c;
    }
    basis.relations.reduce(dense);
    std::vector<Rational> coords;
    coords.reserve(basis.basis_columns.size());
    for (int c : basis.basis_columns)
        coords.push_back(dense[c]);
    return coords;
}

BasisStore::BasisStore(std::optional<std::filesystem::path> cache_dir, EnumerationLimits limits)
    : dir_(std::move(cache_dir)), limits_(limits)
{
}

std::filesystem::path BasisStore::default_cache_dir()
{
    if (const char* env = std::getenv("JACOBI_CACHE_DIR"); env && *env)
        return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "jacobi";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "jacobi";
    return std::filesystem::temp_directory_path() / "jacobi-cache";
}

std::filesystem::path BasisStore::file_for(const Piece& piece) const
{
    std::string name = piece.space == Space::A
        ? "A_t" + std::to_string(piece.total)
        : "B_v" + std::to_string(piece.internal()) + "_l" + std::to_string(piece.legs);
    return *dir_ / (name + ".basis");
}

const QuotientBasis& BasisStore::get(const Piece& piece)
{
    if (auto it = memo_.find(piece); it != memo_.end())
        return it->second;
    std::optional<QuotientBasis> b;
    if (dir_)
        b = load(piece);
    if (!b) {
        b = compute_basis(piece, limits_);
        if (dir_)
            save(*b);
    }
    return memo_.emplace(piece, std::move(*b)).first->second;
}

namespace {

std::string header_line()
{
    return "jacobi-basis-cache v1 conventions=" + std::to_string(kConventionsVersion);
}

std::string piece_line(const Piece& p)
{
    return "piece " + to_string(p.space) + " " + std::to_string(p.total) + " " + std::to_string(p.legs);
}

} // namespace

std::optional<QuotientBasis> BasisStore::load(const Piece& piece) const
{
    std::ifstream in(file_for(piece));
    if (!in)
        return std::nullopt;
    std::string header, piece_text;
    if (!std::getline(in, header) || header != header_line())
        return std::nullopt;
    if (!std::getline(in, piece_text) || piece_text != piece_line(piece))
        return std::nullopt;
    std::stringstream body;
    body << in.rdbuf();
    try {
        Json j = Json::parse(body.str());
        QuotientBasis b;
        b.piece = piece;
        for (const auto& d : j.at("columns"))
            b.columns.push_back(diagram_from_json(d));
        b.basis_columns = j.at("basis").get<std::vector<int>>();
        std::map<int, SparseRow> rows;
        for (const auto& r : j.at("rows")) {
            SparseRow row;
            for (const auto& entry : r)
                row.emplace_back(entry.at(0).get<int>(), parse_rational(entry.at(1).get<std::string>()));
            if (row.empty())
                return std::nullopt;
            int pivot = row.front().first;
            rows.emplace(pivot, std::move(row));
        }
        b.relations = EchelonForm::from_rows(static_cast<int>(b.columns.size()), std::move(rows));
        b.rebuild_index();
        return b;
    } catch (const std::exception&) {
        return std::nullopt; // unreadable cache entries are recomputed
    }
}

void BasisStore::save(const QuotientBasis& b) const
{
    static std::atomic<unsigned> counter{0};
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    Json j;
    Json columns = Json::array();
    for (const auto& d : b.columns)
        columns.push_back(to_json(d));
    j["columns"] = columns;
    j["basis"] = b.basis_columns;
    Json rows = Json::array();
    for (const auto& [pivot, row] : b.relations.rows()) {
        Json r = Json::array();
        for (const auto& [c, v] : row)
            r.push_back({c, to_string(v)});
        rows.push_back(r);
    }
    j["rows"] = rows;

    const auto target = file_for(b.piece);
    auto tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp);
        if (!out)
            return; // caching is best effort
        out << header_line() << '\n' << piece_line(b.piece) << '\n' << j.dump() << '\n';
        if (!out)
            return;
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec)
        std::filesystem::remove(tmp, ec);
}

bool equal_mod_relations(const DiagramVector& x, const DiagramVector& y, BasisStore& store)
{
    return is_zero_mod_relations(x - y, store);
}

bool is_zero_mod_relations(const DiagramVector& x, BasisStore& store)
{
    for (const auto& [piece, part] : x.by_piece())
        for (const auto& c : reduce(part, store.get(piece)))
            if (c != 0)
                return false;
    return true;
}

} // namespace jacobi
