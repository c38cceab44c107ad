#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/errors.hpp"

namespace schurkit {

namespace detail {

inline void strip_trailing_zeros(std::vector<int>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

/// Sorts values weakly decreasing and reports the parity of the sorting
/// permutation: +1/-1 when all values are distinct, 0 when the parity is
/// ambiguous because of repeated values.
template <typename T>
std::pair<std::vector<T>, int> sort_descending_with_sign(std::vector<T> values) {
    long inversions = 0;
    bool repeated = false;
    for (std::size_t i = 0; i < values.size(); ++i) {
        for (std::size_t j = i + 1; j < values.size(); ++j) {
            if (values[i] < values[j]) ++inversions;
            if (values[i] == values[j]) repeated = true;
        }
    }
    std::sort(values.begin(), values.end(), std::greater<T>());
    int sign = repeated ? 0 : (inversions % 2 == 0 ? 1 : -1);
    return {std::move(values), sign};
}

}  // namespace detail

/// Finitely supported sequence of naturals, stored without trailing zeros
/// and conceptually extended by zeros.
class Composition {
public:
    Composition() = default;
    Composition(std::initializer_list<int> parts) : parts_(parts) { canonicalize(); }
    explicit Composition(std::vector<int> parts) : parts_(std::move(parts)) { canonicalize(); }

    /// Part at index i, zero beyond the stored prefix.
    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of stored (canonical) parts.
    std::size_t length() const { return parts_.size(); }

    /// |alpha|, the sum of all parts.
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

    bool empty() const { return parts_.empty(); }
    bool is_binary() const {
        return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p < 2; });
    }
    bool is_weakly_decreasing() const {
        return std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>());
    }

    const std::vector<int>& parts() const { return parts_; }

    /// 1^d: the binary composition with d leading ones.
    static Composition ones(int d) { return Composition(std::vector<int>(static_cast<std::size_t>(d), 1)); }

    friend bool operator==(const Composition&, const Composition&) = default;
    friend auto operator<=>(const Composition&, const Composition&) = default;

private:
    void canonicalize() {
        for (int p : parts_)
            if (p < 0) throw domain_error("composition parts must be nonnegative");
        detail::strip_trailing_zeros(parts_);
    }

    std::vector<int> parts_;
};

/// Weakly decreasing composition.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        detail::strip_trailing_zeros(parts_);
        validate();
    }
    explicit Partition(const Composition& alpha) : parts_(alpha.parts()) { validate(); }

    int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    std::size_t length() const { return parts_.size(); }
    long weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }
    bool empty() const { return parts_.empty(); }

    const std::vector<int>& parts() const { return parts_; }
    Composition as_composition() const { return Composition(parts_); }

    /// Transpose: part j of the result is the number of rows longer than j.
    Partition conjugate() const {
        std::vector<int> cols;
        if (!parts_.empty()) {
            cols.resize(static_cast<std::size_t>(parts_[0]));
            for (std::size_t j = 0; j < cols.size(); ++j) {
                int count = 0;
                for (int part : parts_)
                    if (part > static_cast<int>(j)) ++count;
                cols[j] = count;
            }
        }
        return Partition(std::move(cols));
    }

    /// The staircase delta_n = (n-1, n-2, ..., 1, 0).
    static Partition staircase(int n) {
        std::vector<int> parts;
        for (int i = 0; i < n; ++i) parts.push_back(n - 1 - i);
        return Partition(std::move(parts));
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    void validate() const {
        for (int p : parts_)
            if (p < 0) throw domain_error("partition parts must be nonnegative");
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<int>()))
            throw domain_error("partition parts must be weakly decreasing");
    }

    std::vector<int> parts_;
};

struct SortedPartition {
    Partition partition;
    int sign;  // parity of the sorting permutation; 0 when parts repeat
};

/// alpha^+ : the unique weakly decreasing rearrangement of alpha.
inline SortedPartition sort_to_partition(const Composition& alpha) {
    auto [sorted, sign] = detail::sort_descending_with_sign(alpha.parts());
    return {Partition(std::move(sorted)), sign};
}

/// mu is contained in lambda (diagram inclusion, componentwise parts).
inline bool contains(const Partition& mu, const Partition& lambda) {
    for (std::size_t i = 0; i < mu.length(); ++i)
        if (mu[i] > lambda[i]) return false;
    return true;
}

/// Interval mu <= lambda in the containment order; cells are [lambda] - [mu].
class SkewShape {
public:
    SkewShape(Partition outer, Partition inner)
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!contains(inner_, outer_))
            throw domain_error("skew shape requires inner contained in outer");
    }
    explicit SkewShape(Partition outer) : outer_(std::move(outer)) {}

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    long cell_count() const { return outer_.weight() - inner_.weight(); }

    /// Cells (row, col) of the skew diagram, row-major.
    std::vector<std::pair<int, int>> cells() const {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = 0; i < outer_.length(); ++i)
            for (int j = inner_[i]; j < outer_[i]; ++j)
                out.emplace_back(static_cast<int>(i), j);
        return out;
    }

    SkewShape transpose() const { return SkewShape(outer_.conjugate(), inner_.conjugate()); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

enum class StripKind { horizontal, vertical };

/// Strip relations mu <=h lambda / mu <=v lambda. Returns false whenever
/// lambda/mu is not a skew shape of the required kind.
inline bool strip_check(const Partition& mu, const Partition& lambda, StripKind kind) {
    std::size_t rows = std::max(mu.length(), lambda.length());
    if (kind == StripKind::vertical) {
        // lambda - mu must be a binary composition.
        for (std::size_t i = 0; i < rows; ++i) {
            int diff = lambda[i] - mu[i];
            if (diff < 0 || diff > 1) return false;
        }
        return true;
    }
    // horizontal: lambda_{i+1} <= mu_i <= lambda_i for all i.
    for (std::size_t i = 0; i < rows; ++i) {
        if (mu[i] > lambda[i]) return false;
        if (lambda[i + 1] > mu[i]) return false;
    }
    return true;
}

/// Dominance ordering on Part_d: every prefix sum of mu is <= that of lambda.
/// Defined only between partitions of equal weight.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.weight() != lambda.weight())
        throw domain_error("dominance order is defined on partitions of equal weight");
    long mu_sum = 0, lambda_sum = 0;
    std::size_t rows = std::max(mu.length(), lambda.length());
    for (std::size_t i = 0; i < rows; ++i) {
        mu_sum += mu[i];
        lambda_sum += lambda[i];
        if (mu_sum > lambda_sum) return false;
    }
    return true;
}

/// Finite-support permutation of N, given by its images on a prefix and
/// extended by the identity.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int img : images_) {
            if (img < 0 || img >= static_cast<int>(images_.size()) || seen[static_cast<std::size_t>(img)])
                throw domain_error("permutation images must be a bijection of the prefix");
            seen[static_cast<std::size_t>(img)] = true;
        }
    }

    static Permutation identity(std::size_t n) {
        std::vector<int> images(n);
        std::iota(images.begin(), images.end(), 0);
        return Permutation(std::move(images));
    }
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j) {
        Permutation sigma = identity(n);
        std::swap(sigma.images_[i], sigma.images_[j]);
        return sigma;
    }

    std::size_t degree() const { return images_.size(); }
    int operator()(int i) const {
        return i >= 0 && i < static_cast<int>(images_.size()) ? images_[static_cast<std::size_t>(i)] : i;
    }

    Permutation inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        return Permutation(std::move(inv));
    }

    /// Sign of the permutation by inversion counting.
    int sign() const {
        long inversions = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (images_[i] > images_[j]) ++inversions;
        return inversions % 2 == 0 ? 1 : -1;
    }

private:
    std::vector<int> images_;
};

/// sigma(alpha) = (alpha_{sigma^{-1}(i)})_i.
inline Composition apply_permutation(const Permutation& sigma, const Composition& alpha) {
    Permutation inv = sigma.inverse();
    std::size_t n = std::max(sigma.degree(), alpha.length());
    std::vector<int> parts(n);
    for (std::size_t i = 0; i < n; ++i)
        parts[i] = alpha[static_cast<std::size_t>(inv(static_cast<int>(i)))];
    return Composition(std::move(parts));
}

/// All partitions of d, emitted in descending lexicographic order.
inline std::vector<Partition> partitions_of(int d) {
    std::vector<Partition> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(current));
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            self(self, remaining - part, part);
            current.pop_back();
        }
    };
    if (d >= 0) rec(rec, d, d == 0 ? 1 : d);
    return out;
}

// ---------------------------------------------------------------------------
// Text encodings: comma-separated parts, "outer/inner" for skew shapes.

inline std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    if (text.empty()) return parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string field = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("invalid part '" + field + "' in '" + text + "'");
        if (field.size() > 6) throw parse_error("part out of range in '" + text + "'");
        parts.push_back(std::stoi(field));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

inline Composition parse_composition(const std::string& text) {
    return Composition(parse_parts(text));
}

inline Partition parse_partition(const std::string& text) {
    std::vector<int> parts = parse_parts(text);
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<int>()))
        throw parse_error("'" + text + "' is not weakly decreasing");
    return Partition(std::move(parts));
}

/// "9,8,5,5,3/4,1"; a missing "/inner" means the inner partition is empty.
inline SkewShape parse_skew_shape(const std::string& text) {
    std::size_t slash = text.find('/');
    if (slash == std::string::npos) return SkewShape(parse_partition(text));
    if (text.find('/', slash + 1) != std::string::npos)
        throw parse_error("skew shape has more than one '/': '" + text + "'");
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

inline std::string to_string(const Composition& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.length(); ++i) {
        if (i) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

inline std::string to_string(const Partition& lambda) { return to_string(lambda.as_composition()); }

inline std::string to_string(const SkewShape& shape) {
    std::string out = to_string(shape.outer());
    if (!shape.inner().empty()) out += "/" + to_string(shape.inner());
    return out;
}

}  // namespace schurkit
