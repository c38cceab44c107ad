#pragma once

#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/composition.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

/// Finitely supported matrix of naturals. The binary flag restricts entries
/// to {0,1}. Rows are stored canonically: no trailing zero rows, no trailing
/// zeros within a row.
class NatMatrix {
public:
    NatMatrix() = default;
    explicit NatMatrix(std::vector<std::vector<int>> rows, bool binary = false)
        : rows_(std::move(rows)), binary_(binary) {
        for (auto& row : rows_) {
            for (int entry : row) {
                if (entry < 0) throw domain_error("matrix entries must be nonnegative");
                if (binary_ && entry > 1) throw domain_error("binary matrix entry exceeds 1");
            }
            detail::strip_trailing_zeros(row);
        }
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
    }

    int at(std::size_t i, std::size_t j) const {
        if (i >= rows_.size() || j >= rows_[i].size()) return 0;
        return rows_[i][j];
    }

    std::size_t row_count() const { return rows_.size(); }
    std::size_t col_count() const {
        std::size_t cols = 0;
        for (const auto& row : rows_) cols = std::max(cols, row.size());
        return cols;
    }

    bool binary() const { return binary_; }
    bool is_zero() const { return rows_.empty(); }

    Composition row_sums() const {
        std::vector<int> sums;
        for (const auto& row : rows_)
            sums.push_back(std::accumulate(row.begin(), row.end(), 0));
        return Composition(std::move(sums));
    }

    Composition col_sums() const {
        std::vector<int> sums(col_count(), 0);
        for (const auto& row : rows_)
            for (std::size_t j = 0; j < row.size(); ++j) sums[j] += row[j];
        return Composition(std::move(sums));
    }

    NatMatrix transpose() const {
        std::vector<std::vector<int>> cols(col_count(), std::vector<int>(row_count(), 0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            for (std::size_t j = 0; j < rows_[i].size(); ++j) cols[j][i] = rows_[i][j];
        return NatMatrix(std::move(cols), binary_);
    }

    /// "1,0,1;0,2,0": semicolon-separated rows over the bounding box.
    std::string to_string() const {
        std::size_t cols = col_count();
        std::string out;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) out += ';';
            for (std::size_t j = 0; j < cols; ++j) {
                if (j) out += ',';
                out += std::to_string(at(i, j));
            }
        }
        return out;
    }

    static NatMatrix parse(const std::string& text, bool binary = false) {
        std::vector<std::vector<int>> rows;
        if (!text.empty()) {
            std::size_t pos = 0;
            while (true) {
                std::size_t semi = text.find(';', pos);
                std::string row = text.substr(pos, semi == std::string::npos ? semi : semi - pos);
                rows.push_back(parse_parts(row));
                if (semi == std::string::npos) break;
                pos = semi + 1;
            }
        }
        return NatMatrix(std::move(rows), binary);
    }

    /// Equality is on entries; the binary flag is a restriction, not a value.
    friend bool operator==(const NatMatrix& a, const NatMatrix& b) { return a.rows_ == b.rows_; }

private:
    std::vector<std::vector<int>> rows_;
    bool binary_ = false;
};

/// Visits every matrix with row sums alpha and column sums beta exactly once,
/// in ascending lexicographic order of the row-major entry list. Row-by-row
/// backtracking, bounded by the remaining column sums (and by 1 per cell in
/// the binary case).
inline void for_each_matrix(const Composition& alpha, const Composition& beta, bool binary,
                            const std::function<void(const NatMatrix&)>& visit) {
    if (alpha.weight() != beta.weight()) return;
    std::size_t nrows = alpha.length(), ncols = beta.length();
    std::vector<std::vector<int>> grid(nrows, std::vector<int>(ncols, 0));
    std::vector<int> col_rem(ncols);
    for (std::size_t j = 0; j < ncols; ++j) col_rem[j] = beta[j];

    auto fill_row = [&](auto&& self, std::size_t i) -> void {
        if (i == nrows) {
            visit(NatMatrix(grid, binary));
            return;
        }
        auto fill_cell = [&](auto&& cell, std::size_t j, int row_rem) -> void {
            if (j == ncols) {
                if (row_rem == 0) self(self, i + 1);
                return;
            }
            // capacity of the columns to the right of j
            long tail = 0;
            for (std::size_t t = j + 1; t < ncols; ++t)
                tail += binary ? (col_rem[t] > 0 ? 1 : 0) : col_rem[t];
            int cap = std::min(row_rem, binary ? std::min(col_rem[j], 1) : col_rem[j]);
            for (int v = std::max(0, row_rem - static_cast<int>(tail)); v <= cap; ++v) {
                grid[i][j] = v;
                col_rem[j] -= v;
                cell(cell, j + 1, row_rem - v);
                col_rem[j] += v;
                grid[i][j] = 0;
            }
        };
        fill_cell(fill_cell, 0, alpha[i]);
    };
    fill_row(fill_row, 0);
}

inline std::vector<NatMatrix> enumerate_matrices(const Composition& alpha,
                                                 const Composition& beta, bool binary) {
    std::vector<NatMatrix> out;
    for_each_matrix(alpha, beta, binary, [&](const NatMatrix& m) { out.push_back(m); });
    return out;
}

inline long count_matrices(const Composition& alpha, const Composition& beta, bool binary) {
    long count = 0;
    for_each_matrix(alpha, beta, binary, [&](const NatMatrix&) { ++count; });
    return count;
}

}  // namespace schurkit
