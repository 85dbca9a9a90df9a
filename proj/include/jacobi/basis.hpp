#pragma once

#include "jacobi/diagram_vector.hpp"
#include "jacobi/elimination.hpp"
#include "jacobi/enumerate.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <vector>

namespace jacobi {

/// Bumped whenever a convention that changes cached bases changes
/// (canonical labeling, relation signs, column order).
inline constexpr int kConventionsVersion = 1;

/// A basis of one piece modulo IHX (and STU for A).
///
/// Coordinates are taken in the enumerated diagrams (`columns`); the
/// relation matrix is kept in reduced row echelon form, its pivot columns are
/// eliminated and the remaining columns form the basis. Columns are ordered
/// with more internal vertices and fewer components first so that, where a
/// choice exists, the basis prefers chord-like and disconnected diagrams.
struct QuotientBasis {
    Piece piece;
    std::vector<Diagram> columns;
    std::vector<int> basis_columns;
    EchelonForm relations{0};
    std::map<Diagram, int, DiagramLess> index;

    int dimension() const { return static_cast<int>(basis_columns.size()); }
    std::vector<Diagram> basis() const;
    void rebuild_index();
};

QuotientBasis compute_basis(const Piece& piece, const EnumerationLimits& limits = {});

/// Coordinates of x in the basis. Throws GradingMismatch if x has a term
/// outside the basis' piece.
std::vector<Rational> reduce(const DiagramVector& x, const QuotientBasis& basis);

/// Connected components, counting the circle with everything on it as one
/// and free loops each as one.
int component_count(const Diagram& d);

/// Bases computed on demand, memoized in memory and optionally on disk.
///
/// Each cache file holds a versioned header, the piece, the enumerated
/// columns, the basis columns and the reduced relation rows, with every
/// number an exact rational in text. Files are written to a temporary name
/// and renamed into place, so concurrent readers never see partial files.
class BasisStore {
public:
    explicit BasisStore(std::optional<std::filesystem::path> cache_dir = std::nullopt,
                        EnumerationLimits limits = {});

    const QuotientBasis& get(const Piece& piece);

    /// $JACOBI_CACHE_DIR, else $XDG_CACHE_HOME/jacobi, else ~/.cache/jacobi.
    static std::filesystem::path default_cache_dir();
    std::filesystem::path file_for(const Piece& piece) const;

private:
    std::optional<QuotientBasis> load(const Piece& piece) const;
    void save(const QuotientBasis& basis) const;

    std::optional<std::filesystem::path> dir_;
    EnumerationLimits limits_;
    std::map<Piece, QuotientBasis> memo_;
};

/// reduce(x - y) vanishes in every piece.
bool equal_mod_relations(const DiagramVector& x, const DiagramVector& y, BasisStore& store);

/// x is zero modulo relations.
bool is_zero_mod_relations(const DiagramVector& x, BasisStore& store);

} // namespace jacobi
