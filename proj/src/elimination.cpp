#include "jacobi/elimination.hpp"

namespace jacobi {

void axpy(SparseRow& row, const Rational& factor, const SparseRow& other)
{
    SparseRow out;
    out.reserve(row.size() + other.size());
    auto a = row.begin();
    auto b = other.begin();
    while (a != row.end() || b != other.end()) {
        if (b == other.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Rational v = a->second - factor * b->second;
            if (v != 0)
                out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    row = std::move(out);
}

bool EchelonForm::insert(SparseRow row)
{
    while (!row.empty()) {
        auto it = rows_.find(row.front().first);
        if (it == rows_.end())
            break;
        Rational f = row.front().second;
        axpy(row, f, it->second);
    }
    if (row.empty())
        return false;
    Rational lead = row.front().second;
    for (auto& [c, v] : row)
        v /= lead;
    int pivot = row.front().first;
    rows_.emplace(pivot, std::move(row));
    return true;
}

void EchelonForm::back_substitute()
{
    // Highest pivots first so that each row is already clean when it is used.
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
        const int pivot = it->first;
        const SparseRow& pivot_row = it->second;
        for (auto jt = rows_.begin(); jt->first < pivot; ++jt) {
            SparseRow& row = jt->second;
            for (const auto& [c, v] : row) {
                if (c == pivot) {
                    Rational f = v;
                    axpy(row, f, pivot_row);
                    break;
                }
                if (c > pivot)
                    break;
            }
        }
    }
}

void EchelonForm::reduce(std::vector<Rational>& dense) const
{
    for (const auto& [pivot, row] : rows_) {
        if (dense[pivot] == 0)
            continue;
        Rational f = dense[pivot];
        for (const auto& [c, v] : row)
            dense[c] -= f * v;
    }
}

std::vector<int> EchelonForm::free_columns() const
{
    std::vector<int> out;
    for (int c = 0; c < columns_; ++c)
        if (!rows_.count(c))
            out.push_back(c);
    return out;
}

EchelonForm EchelonForm::from_rows(int columns, std::map<int, SparseRow> rows)
{
    EchelonForm f(columns);
    f.rows_ = std::move(rows);
    return f;
}

int rank_of(std::vector<std::vector<Rational>> m)
{
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int p = rank;
        while (p < rows && m[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(m[p], m[rank]);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            Rational f = m[r][c] / m[rank][c];
            for (int k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

} // namespace jacobi
