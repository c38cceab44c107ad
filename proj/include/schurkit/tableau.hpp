#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurkit/composition.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/natmatrix.hpp"

namespace schurkit {

enum class TableauMode { column_strict, row_strict };

/// Chain validation failure; index() names the first offending step.
class chain_error : public domain_error {
public:
    chain_error(const std::string& msg, std::size_t index)
        : domain_error(msg + " at step " + std::to_string(index)), index_(index) {}
    std::size_t index() const { return index_; }

private:
    std::size_t index_;
};

/// Semistandard tableau as a chain of partitions joined by horizontal strips
/// (column-strict mode) or vertical strips (row-strict mode). The stored
/// chain is trimmed so that its last two entries differ; a single-entry chain
/// is the empty-weight tableau of shape lambda/lambda.
class SemistandardTableau {
public:
    static SemistandardTableau from_chain(std::vector<Partition> chain, TableauMode mode) {
        if (chain.empty()) throw domain_error("tableau chain must be nonempty");
        StripKind kind =
            mode == TableauMode::column_strict ? StripKind::horizontal : StripKind::vertical;
        for (std::size_t i = 0; i + 1 < chain.size(); ++i)
            if (!strip_check(chain[i], chain[i + 1], kind))
                throw chain_error(mode == TableauMode::column_strict
                                      ? "chain step is not a horizontal strip"
                                      : "chain step is not a vertical strip",
                                  i);
        while (chain.size() >= 2 && chain[chain.size() - 1] == chain[chain.size() - 2])
            chain.pop_back();
        return SemistandardTableau(std::move(chain), mode);
    }

    const std::vector<Partition>& chain() const { return chain_; }
    TableauMode mode() const { return mode_; }
    const Partition& inner() const { return chain_.front(); }
    const Partition& outer() const { return chain_.back(); }
    SkewShape shape() const { return SkewShape(outer(), inner()); }

    Composition weight() const {
        std::vector<int> parts;
        for (std::size_t i = 0; i + 1 < chain_.size(); ++i)
            parts.push_back(static_cast<int>(chain_[i + 1].weight() - chain_[i].weight()));
        return Composition(std::move(parts));
    }

    /// Conjugates every partition in the chain: shape transposes, mode flips,
    /// weight is preserved.
    SemistandardTableau transpose() const {
        std::vector<Partition> flipped;
        flipped.reserve(chain_.size());
        for (const Partition& p : chain_) flipped.push_back(p.conjugate());
        return SemistandardTableau(std::move(flipped),
                                   mode_ == TableauMode::column_strict
                                       ? TableauMode::row_strict
                                       : TableauMode::column_strict);
    }

    friend bool operator==(const SemistandardTableau&, const SemistandardTableau&) = default;

private:
    SemistandardTableau(std::vector<Partition> chain, TableauMode mode)
        : chain_(std::move(chain)), mode_(mode) {}

    std::vector<Partition> chain_;
    TableauMode mode_;
};

namespace detail {

/// Visits every partition rho with nu <=h rho, rho inside outer and
/// |rho/nu| = add, choosing rows top-down in ascending order.
inline void for_each_horizontal_extension(const Partition& nu, const Partition& outer, int add,
                                          const std::function<void(const Partition&)>& visit) {
    std::size_t rows = outer.length();
    std::vector<int> current(rows, 0);
    auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
        if (i == rows) {
            if (remaining == 0) visit(Partition(std::vector<int>(current)));
            return;
        }
        int lo = nu[i];
        int hi = std::min(outer[i], i == 0 ? outer[0] : std::min(current[i - 1], nu[i - 1]));
        for (int v = lo; v <= hi && v - lo <= remaining; ++v) {
            current[i] = v;
            self(self, i + 1, remaining - (v - lo));
            current[i] = 0;
        }
    };
    if (static_cast<long>(add) >= 0) rec(rec, 0, add);
}

}  // namespace detail

/// Visits every column-strict tableau of the given shape and weight exactly
/// once, in ascending lexicographic order of the flattened chain.
inline void for_each_ssyt(const SkewShape& shape, const Composition& weight,
                          const std::function<void(const SemistandardTableau&)>& visit) {
    if (weight.weight() != shape.cell_count()) return;
    std::vector<Partition> chain = {shape.inner()};
    auto rec = [&](auto&& self, std::size_t step) -> void {
        if (step == weight.length()) {
            if (chain.back() == shape.outer())
                visit(SemistandardTableau::from_chain(chain, TableauMode::column_strict));
            return;
        }
        Partition current = chain.back();  // chain may reallocate below
        detail::for_each_horizontal_extension(
            current, shape.outer(), weight[step], [&](const Partition& next) {
                chain.push_back(next);
                self(self, step + 1);
                chain.pop_back();
            });
    };
    rec(rec, 0);
}

inline std::vector<SemistandardTableau> enumerate_ssyt(const SkewShape& shape,
                                                       const Composition& weight) {
    std::vector<SemistandardTableau> out;
    for_each_ssyt(shape, weight, [&](const SemistandardTableau& t) { out.push_back(t); });
    return out;
}

/// M_{i,j} = (lambda^(j+1) - lambda^(j))_i: column j records strip j by rows.
/// Defined for either mode; transposing the tableau swaps the two encodings.
inline NatMatrix integral_encoding(const SemistandardTableau& t) {
    const auto& chain = t.chain();
    std::size_t rows = t.outer().length(), steps = chain.size() - 1;
    std::vector<std::vector<int>> grid(rows, std::vector<int>(steps, 0));
    for (std::size_t j = 0; j < steps; ++j)
        for (std::size_t i = 0; i < rows; ++i) grid[i][j] = chain[j + 1][i] - chain[j][i];
    return NatMatrix(std::move(grid));
}

/// M'_{i,j} = ((lambda^(i+1))^t - (lambda^(i))^t)_j: row i records strip i by
/// columns; entries are 0/1 because horizontal strips meet each column once.
inline NatMatrix binary_encoding(const SemistandardTableau& t) {
    if (t.mode() != TableauMode::column_strict)
        throw domain_error("binary encoding requires a column-strict tableau");
    const auto& chain = t.chain();
    std::size_t steps = chain.size() - 1;
    std::vector<std::vector<int>> grid(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        Partition prev = chain[i].conjugate(), next = chain[i + 1].conjugate();
        grid[i].resize(next.length(), 0);
        for (std::size_t j = 0; j < next.length(); ++j) grid[i][j] = next[j] - prev[j];
    }
    return NatMatrix(std::move(grid), true);
}

/// Rebuilds the chain from column j partial sums: lambda^(j+1) = lambda^(j) + M^t_j.
inline SemistandardTableau decode_integral(const NatMatrix& m, const Partition& inner) {
    std::vector<Partition> chain = {inner};
    std::size_t steps = m.col_count();
    std::size_t rows = std::max(m.row_count(), inner.length());
    for (std::size_t j = 0; j < steps; ++j) {
        std::vector<int> parts(rows, 0);
        for (std::size_t i = 0; i < rows; ++i)
            parts[i] = chain.back()[i] + m.at(i, j);
        try {
            chain.push_back(Partition(std::move(parts)));
        } catch (const domain_error&) {
            throw chain_error("integral decode: partial sums are not a partition", j);
        }
        if (!strip_check(chain[chain.size() - 2], chain.back(), StripKind::horizontal))
            throw chain_error("integral decode: step is not a horizontal strip", j);
    }
    return SemistandardTableau::from_chain(std::move(chain), TableauMode::column_strict);
}

/// Rebuilds the chain from row i partial sums on the conjugate side.
inline SemistandardTableau decode_binary(const NatMatrix& m, const Partition& inner) {
    std::vector<Partition> chain = {inner};
    Partition conj = inner.conjugate();
    std::size_t steps = m.row_count();
    for (std::size_t i = 0; i < steps; ++i) {
        for (std::size_t j = 0; j < m.col_count(); ++j)
            if (m.at(i, j) > 1) throw chain_error("binary decode: entry exceeds 1", i);
        std::size_t cols = std::max(m.col_count(), conj.length());
        std::vector<int> parts(cols, 0);
        for (std::size_t j = 0; j < cols; ++j) parts[j] = conj[j] + m.at(i, j);
        try {
            conj = Partition(std::move(parts));
        } catch (const domain_error&) {
            throw chain_error("binary decode: partial sums are not a partition", i);
        }
        Partition next = conj.conjugate();
        if (!strip_check(chain.back(), next, StripKind::horizontal))
            throw chain_error("binary decode: step is not a horizontal strip", i);
        chain.push_back(std::move(next));
    }
    return SemistandardTableau::from_chain(std::move(chain), TableauMode::column_strict);
}

/// Grid display: entry i on the squares of lambda^(i+1)/lambda^(i), inner
/// squares blanked with a middle dot. Entries weakly increase along rows and
/// strictly increase down columns.
inline std::string render_tableau(const SemistandardTableau& t) {
    if (t.mode() != TableauMode::column_strict)
        throw domain_error("render requires a column-strict tableau");
    const auto& chain = t.chain();
    const Partition& outer = t.outer();
    const Partition& inner = t.inner();
    std::vector<std::vector<int>> entries(outer.length());
    for (std::size_t i = 0; i < outer.length(); ++i) entries[i].assign(outer[i], -1);
    int max_entry = 0;
    for (std::size_t step = 0; step + 1 < chain.size(); ++step)
        for (std::size_t i = 0; i < outer.length(); ++i)
            for (int j = chain[step][i]; j < chain[step + 1][i]; ++j) {
                entries[i][static_cast<std::size_t>(j)] = static_cast<int>(step);
                max_entry = std::max(max_entry, static_cast<int>(step));
            }
    std::size_t width = std::to_string(std::max(max_entry, 0)).size();
    std::string blank;
    for (std::size_t k = 0; k < width; ++k) blank += "·";
    std::string out;
    for (std::size_t i = 0; i < outer.length(); ++i) {
        if (i) out += '\n';
        for (int j = 0; j < outer[i]; ++j) {
            if (width > 1 && j) out += ' ';
            if (j < inner[i]) {
                out += blank;
            } else {
                std::string digits = std::to_string(entries[i][static_cast<std::size_t>(j)]);
                out += std::string(width - digits.size(), ' ') + digits;
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON form: {"chain": [[4,1],[5,2],...], "mode": "col"|"row"}

inline nlohmann::json to_json(const SemistandardTableau& t) {
    nlohmann::json chain = nlohmann::json::array();
    for (const Partition& p : t.chain()) chain.push_back(p.parts());
    return {{"chain", chain},
            {"mode", t.mode() == TableauMode::column_strict ? "col" : "row"}};
}

inline SemistandardTableau tableau_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("chain") || !j.contains("mode"))
        throw parse_error("tableau JSON needs \"chain\" and \"mode\"");
    std::string mode = j.at("mode").get<std::string>();
    if (mode != "col" && mode != "row") throw parse_error("tableau mode must be col or row");
    std::vector<Partition> chain;
    for (const auto& entry : j.at("chain")) {
        std::vector<int> parts;
        for (const auto& part : entry) {
            if (!part.is_number_integer()) throw parse_error("tableau chain parts must be integers");
            parts.push_back(part.get<int>());
        }
        if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
            throw parse_error("tableau chain entry is not a partition");
        chain.push_back(Partition(std::move(parts)));
    }
    return SemistandardTableau::from_chain(
        std::move(chain),
        mode == "col" ? TableauMode::column_strict : TableauMode::row_strict);
}

}  // namespace schurkit
