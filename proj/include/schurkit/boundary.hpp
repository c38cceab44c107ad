#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/composition.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

/// Prefix window of the sequence [[alpha, i]] = alpha_i - 1 - i. Beyond the
/// stored window the value is -1 - i (the empty-row staircase).
struct BetaSequence {
    std::vector<long> window;

    long at(std::size_t i) const {
        return i < window.size() ? window[i] : -1 - static_cast<long>(i);
    }

    friend bool operator==(const BetaSequence&, const BetaSequence&) = default;
};

inline BetaSequence beta_window(const Composition& alpha, std::size_t length) {
    if (length < alpha.length())
        throw domain_error("beta window must cover all stored parts");
    BetaSequence beta;
    beta.window.reserve(length);
    for (std::size_t i = 0; i < length; ++i)
        beta.window.push_back(alpha[i] - 1 - static_cast<long>(i));
    return beta;
}

/// Doubly infinite boundary word of a partition: bit 1 at the diagonal
/// coordinate of every vertical boundary segment, 0 at every horizontal one.
/// Stored as a finite window; all 1 to its left, all 0 to its right.
struct EdgeSequence {
    long offset = 0;             // diagonal coordinate of bits.front()
    std::vector<bool> bits;      // read bottom-left to top-right

    int bit(long d) const {
        if (d < offset) return 1;
        if (d >= offset + static_cast<long>(bits.size())) return 0;
        return bits[static_cast<std::size_t>(d - offset)] ? 1 : 0;
    }

    /// "@-9:1111010110001001000"
    std::string to_string() const {
        std::string out = "@" + std::to_string(offset) + ":";
        for (bool b : bits) out += b ? '1' : '0';
        return out;
    }

    static EdgeSequence parse(const std::string& text) {
        if (text.empty() || text[0] != '@') throw parse_error("edge sequence must start with '@'");
        std::size_t colon = text.find(':');
        if (colon == std::string::npos) throw parse_error("edge sequence missing ':'");
        EdgeSequence edges;
        try {
            std::size_t used = 0;
            edges.offset = std::stol(text.substr(1, colon - 1), &used);
            if (used != colon - 1) throw parse_error("bad edge sequence offset");
        } catch (const std::logic_error&) {
            throw parse_error("bad edge sequence offset in '" + text + "'");
        }
        for (std::size_t i = colon + 1; i < text.size(); ++i) {
            if (text[i] != '0' && text[i] != '1') throw parse_error("edge sequence bits must be 0/1");
            edges.bits.push_back(text[i] == '1');
        }
        return edges;
    }

    friend bool operator==(const EdgeSequence&, const EdgeSequence&) = default;
};

/// Edge sequence of lambda over the window [lo, hi] (inclusive). The default
/// window [-(len+1), lambda_0 + 1] always covers the irregular region; a
/// caller-supplied window may widen it but not shrink it.
inline EdgeSequence edge_sequence(const Partition& lambda,
                                  std::optional<std::pair<long, long>> window = std::nullopt) {
    long lo = -(static_cast<long>(lambda.length()) + 1);
    long hi = lambda[0] + 1;
    if (window) {
        lo = std::min(lo, window->first);
        hi = std::max(hi, window->second);
    }
    // 1-bits sit exactly at the beta values lambda_i - 1 - i.
    std::vector<long> ones;
    for (std::size_t i = 0;; ++i) {
        long b = lambda[i] - 1 - static_cast<long>(i);
        if (b < lo) break;
        ones.push_back(b);
    }
    EdgeSequence edges;
    edges.offset = lo;
    edges.bits.assign(static_cast<std::size_t>(hi - lo + 1), false);
    for (long b : ones) edges.bits[static_cast<std::size_t>(b - lo)] = true;
    return edges;
}

/// Inverse of edge_sequence: reads the 1-bits top-right to bottom-left as the
/// beta values of successive rows. Rejects words whose implicit all-1 tail
/// does not continue the staircase of empty rows.
inline Partition partition_from_edges(const EdgeSequence& edges) {
    long lo = edges.offset;
    std::vector<int> parts;
    long row = 0;
    for (long d = lo + static_cast<long>(edges.bits.size()) - 1; d >= lo; --d) {
        if (!edges.bits[static_cast<std::size_t>(d - lo)]) continue;
        long part = d + 1 + row;
        if (part < 0)
            throw domain_error("edge sequence: 1-bit at coordinate " + std::to_string(d) +
                               " gives a negative part");
        parts.push_back(static_cast<int>(part));
        ++row;
    }
    // The first implicit 1 left of the window sits at lo - 1 and must belong
    // to row 'row', i.e. lo - 1 = -1 - row.
    if (lo - 1 != -1 - row)
        throw domain_error("edge sequence: all-1 tail does not continue the boundary");
    return Partition(std::move(parts));
}

/// Tests mu below lambda by a k-ribbon via the beta-set characterisation: the
/// two beta sets agree except for one value b in mu replaced by b + k in
/// lambda. Returns the ribbon height i0 - i1 (row span), or nothing.
inline std::optional<int> ribbon_check(const Partition& mu, const Partition& lambda, int k) {
    if (k <= 0) return std::nullopt;
    std::size_t len = std::max(mu.length(), lambda.length());
    BetaSequence beta_mu = beta_window(mu.as_composition(), len);
    BetaSequence beta_lambda = beta_window(lambda.as_composition(), len);
    // Both windows are strictly decreasing; scan for the unique mismatch.
    std::optional<std::size_t> i0, i1;
    std::size_t a = 0, b = 0;
    while (a < len && b < len) {
        long va = beta_mu.at(a);
        long vb = beta_lambda.at(b);
        if (va == vb) {
            ++a;
            ++b;
        } else if (va > vb) {
            if (i0) return std::nullopt;  // second value only in mu
            i0 = a++;
        } else {
            if (i1) return std::nullopt;  // second value only in lambda
            i1 = b++;
        }
    }
    while (a < len) {
        if (i0) return std::nullopt;
        i0 = a++;
    }
    while (b < len) {
        if (i1) return std::nullopt;
        i1 = b++;
    }
    if (!i0 || !i1) return std::nullopt;
    if (beta_mu.at(*i0) + k != beta_lambda.at(*i1)) return std::nullopt;
    return static_cast<int>(*i0) - static_cast<int>(*i1);
}

}  // namespace schurkit
