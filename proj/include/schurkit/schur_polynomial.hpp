#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "schurkit/composition.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/polynomial.hpp"

namespace schurkit {

namespace detail {

inline int parity_sign(const std::vector<int>& perm) {
    long inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

inline Int factorial(int n) {
    Int out = 1;
    for (int i = 2; i <= n; ++i) out *= i;
    return out;
}

/// Number of distinct rearrangements of the n values in `sorted`.
inline Int orbit_size(const std::vector<int>& sorted, int n) {
    Int size = factorial(n);
    int run = 1;
    for (std::size_t i = 1; i <= sorted.size(); ++i) {
        if (i < sorted.size() && sorted[i] == sorted[i - 1]) {
            ++run;
        } else {
            size /= factorial(run);
            run = 1;
        }
    }
    return size;
}

inline std::vector<int> padded_prefix(const Exponents& e, int n) {
    std::vector<int> v(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = e[i];
    return v;
}

}  // namespace detail

/// Invariance under all permutations of X_0..X_{n-1}: coefficients constant
/// on each orbit and every orbit member present.
inline bool is_symmetric(const MultiPoly& p, int n) {
    std::map<std::vector<int>, std::pair<Int, long>> orbits;  // rep -> (coeff, seen)
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(e.length()) > n) return false;
        std::vector<int> rep = detail::padded_prefix(e, n);
        std::sort(rep.begin(), rep.end(), std::greater<int>());
        auto [it, inserted] = orbits.try_emplace(std::move(rep), std::make_pair(c, 0L));
        if (!inserted && it->second.first != c) return false;
        ++it->second.second;
    }
    for (const auto& [rep, info] : orbits)
        if (detail::orbit_size(rep, n) != info.second) return false;
    return true;
}

/// Sign-equivariance: c_{sigma(alpha)} = sign(sigma) c_alpha; in particular
/// terms with a repeated exponent cannot appear.
inline bool is_alternating(const MultiPoly& p, int n) {
    std::map<std::vector<int>, long> orbit_count;
    for (const auto& [e, c] : p.terms()) {
        if (static_cast<int>(e.length()) > n) return false;
        std::vector<int> v = detail::padded_prefix(e, n);
        std::vector<int> rep = v;
        std::sort(rep.begin(), rep.end(), std::greater<int>());
        if (std::adjacent_find(rep.begin(), rep.end()) != rep.end()) return false;
        // parity of the rearrangement taking v to rep
        std::vector<int> order(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            order[i] = static_cast<int>(std::find(rep.begin(), rep.end(), v[i]) - rep.begin());
        int sign = detail::parity_sign(order);
        Int rep_coeff = p.coeff(Exponents(rep));
        if (c != sign * rep_coeff) return false;
        ++orbit_count[std::move(rep)];
    }
    Int full = detail::factorial(n);
    for (const auto& [rep, count] : orbit_count)
        if (full != count) return false;
    return true;
}

/// m_lambda[X_n]: the sum of the distinct monomials in the orbit of X^lambda;
/// zero when lambda has more than n nonzero parts.
inline MultiPoly monomial_symmetric(const Partition& lambda, int n) {
    MultiPoly out;
    out.with_vars(n);
    if (static_cast<int>(lambda.length()) > n) return out;
    std::vector<int> exps = detail::padded_prefix(Exponents(lambda.as_composition()), n);
    std::sort(exps.begin(), exps.end());
    do {
        out += MultiPoly::monomial(Exponents(exps), 1);
    } while (std::next_permutation(exps.begin(), exps.end()));
    return out;
}

enum class Generator { e, h, p };

/// e_d (squarefree monomials), h_d (all monomials of degree d) and p_d
/// (d-th powers) at n variables.
inline MultiPoly generator_poly(Generator kind, int d, int n) {
    if (d < 0) throw domain_error("generator degree must be nonnegative");
    MultiPoly out;
    out.with_vars(n);
    switch (kind) {
        case Generator::e: {
            if (d > n) return out;
            std::vector<int> exps(static_cast<std::size_t>(n), 0);
            std::fill(exps.end() - d, exps.end(), 1);
            do {
                out += MultiPoly::monomial(Exponents(exps), 1);
            } while (std::next_permutation(exps.begin(), exps.end()));
            return out;
        }
        case Generator::h: {
            if (d > 0 && n == 0) return out;
            std::vector<int> exps(static_cast<std::size_t>(std::max(n, 1)), 0);
            auto rec = [&](auto&& self, int i, int remaining) -> void {
                if (i == n - 1) {
                    exps[static_cast<std::size_t>(std::max(i, 0))] = remaining;
                    out += MultiPoly::monomial(Exponents(exps), 1);
                    return;
                }
                for (int v = 0; v <= remaining; ++v) {
                    exps[static_cast<std::size_t>(i)] = v;
                    self(self, i + 1, remaining - v);
                    exps[static_cast<std::size_t>(i)] = 0;
                }
            };
            if (n == 0) {
                out += MultiPoly(Int(1));
            } else {
                rec(rec, 0, d);
            }
            return out;
        }
        case Generator::p: {
            if (d == 0) throw domain_error("power sums require d > 0");
            for (int i = 0; i < n; ++i) out += MultiPoly::monomial(Exponents::variable(i, d), 1);
            return out;
        }
    }
    throw domain_error("unknown generator kind");
}

/// Alternant a_alpha[X_n] = sum over Sym_n of sign(sigma) X^{sigma(alpha)},
/// equal to det(X_i^{alpha_j}); zero when alpha has a repeated part. Rejects
/// alpha with a part at index >= n.
inline MultiPoly alternant(const Composition& alpha, int n) {
    if (static_cast<int>(alpha.length()) > n)
        throw domain_error("alternant index must fit in the variable count");
    MultiPoly out;
    out.with_vars(n);
    std::vector<int> values = detail::padded_prefix(Exponents(alpha), n);
    std::vector<int> sorted = values;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return out;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> exps(static_cast<std::size_t>(n));
    do {
        for (int i = 0; i < n; ++i)
            exps[static_cast<std::size_t>(i)] = values[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        out += MultiPoly::monomial(Exponents(exps), detail::parity_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// Delta_n = a_{delta_n}[X_n], evaluated as the product of the differences
/// X_i - X_j over i < j. The alternant form is checked against this in tests.
inline MultiPoly vandermonde(int n) {
    MultiPoly out{Int(1)};
    out.with_vars(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out *= MultiPoly::variable(i) - MultiPoly::variable(j);
    return out;
}

/// Quotient r with p = q * r when q divides p exactly over the integers, by
/// leading-term elimination in graded-lex order; nothing otherwise.
inline std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw domain_error("division by the zero polynomial");
    const Exponents lead_exp = q.terms().begin()->first;
    const Int lead_coeff = q.terms().begin()->second;
    MultiPoly remainder = p;
    MultiPoly quotient;
    quotient.with_vars(std::max(p.nvars(), q.nvars()));
    while (!remainder.is_zero()) {
        Exponents er = remainder.terms().begin()->first;
        Int cr = remainder.terms().begin()->second;
        if (!er.divisible_by(lead_exp)) return std::nullopt;
        if (!mpz_divisible_p(cr.get_mpz_t(), lead_coeff.get_mpz_t())) return std::nullopt;
        Int c;
        mpz_divexact(c.get_mpz_t(), cr.get_mpz_t(), lead_coeff.get_mpz_t());
        MultiPoly t = MultiPoly::monomial(er - lead_exp, std::move(c));
        quotient += t;
        remainder -= t * q;
    }
    return quotient;
}

/// s_alpha[X_n] = a_{delta_n + alpha} / a_{delta_n}; zero when alpha does not
/// fit in n variables. The quotient is taken one Vandermonde factor at a
/// time, which every alternating polynomial divides exactly.
inline MultiPoly schur_poly(const Composition& alpha, int n) {
    MultiPoly zero;
    zero.with_vars(n);
    if (static_cast<int>(alpha.length()) > n) return zero;
    std::vector<int> exps(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) exps[static_cast<std::size_t>(i)] = n - 1 - i + alpha[static_cast<std::size_t>(i)];
    MultiPoly quotient = alternant(Composition(exps), n);
    if (quotient.is_zero()) return zero;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            auto next = exact_divide(quotient, MultiPoly::variable(i) - MultiPoly::variable(j));
            if (!next)
                throw domain_error("alternant unexpectedly not divisible by a Vandermonde factor");
            quotient = std::move(*next);
        }
    }
    return quotient.with_vars(n);
}

/// Truncated generating series in T with polynomial coefficients, compared
/// coefficientwise against the direct generator definitions:
///   e: prod (1 + X_i T),  h: prod 1/(1 - X_i T),  p: sum X_i T/(1 - X_i T).
inline bool series_truncation_check(Generator kind, int n, int max_deg) {
    std::size_t slots = static_cast<std::size_t>(max_deg) + 1;
    std::vector<MultiPoly> series(slots);
    switch (kind) {
        case Generator::e:
            series[0] = MultiPoly(Int(1));
            for (int i = 0; i < n; ++i)
                for (int d = max_deg; d >= 1; --d)
                    series[static_cast<std::size_t>(d)] +=
                        series[static_cast<std::size_t>(d - 1)] * MultiPoly::variable(i);
            break;
        case Generator::h: {
            series[0] = MultiPoly(Int(1));
            for (int i = 0; i < n; ++i) {
                std::vector<MultiPoly> next(slots);
                for (int d = 0; d <= max_deg; ++d) {
                    MultiPoly power{Int(1)};
                    for (int k = 0; d + k <= max_deg; ++k) {
                        next[static_cast<std::size_t>(d + k)] +=
                            series[static_cast<std::size_t>(d)] * power;
                        power *= MultiPoly::variable(i);
                    }
                }
                series = std::move(next);
            }
            break;
        }
        case Generator::p:
            for (int i = 0; i < n; ++i) {
                MultiPoly power = MultiPoly::variable(i);
                for (int k = 1; k <= max_deg; ++k) {
                    series[static_cast<std::size_t>(k)] += power;
                    power *= MultiPoly::variable(i);
                }
            }
            break;
    }
    int first = kind == Generator::p ? 1 : 0;
    for (int d = first; d <= max_deg; ++d)
        if (series[static_cast<std::size_t>(d)] != generator_poly(kind, d, n)) return false;
    return true;
}

}  // namespace schurkit
