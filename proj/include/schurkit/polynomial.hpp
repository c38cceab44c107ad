#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "schurkit/composition.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

/// Exact integer coefficients throughout; no modular shortcuts.
using Int = mpz_class;

/// Monomial exponent vector, one byte per variable, stored without trailing
/// zeros. The byte-string comparison of canonical keys coincides with the
/// zero-extended lexicographic order on exponents (X0 most significant).
class Exponents {
public:
    Exponents() = default;
    explicit Exponents(const std::vector<int>& exps) {
        for (int e : exps) {
            if (e < 0) throw domain_error("exponents must be nonnegative");
            if (e > 255) throw domain_error("exponent exceeds the supported bound of 255");
        }
        bytes_.reserve(exps.size());
        for (int e : exps) bytes_.push_back(static_cast<char>(e));
        while (!bytes_.empty() && bytes_.back() == 0) bytes_.pop_back();
        for (int e : exps) degree_ += e;
    }
    explicit Exponents(const Composition& alpha) : Exponents(alpha.parts()) {}

    static Exponents variable(int i, int power = 1) {
        std::vector<int> exps(static_cast<std::size_t>(i) + 1, 0);
        exps.back() = power;
        return Exponents(exps);
    }

    int operator[](std::size_t i) const {
        return i < bytes_.size() ? static_cast<unsigned char>(bytes_[i]) : 0;
    }
    std::size_t length() const { return bytes_.size(); }
    int degree() const { return degree_; }
    bool is_constant() const { return bytes_.empty(); }

    Exponents operator+(const Exponents& other) const {
        Exponents out;
        const Exponents& longer = bytes_.size() >= other.bytes_.size() ? *this : other;
        const Exponents& shorter = bytes_.size() >= other.bytes_.size() ? other : *this;
        out.bytes_ = longer.bytes_;
        for (std::size_t i = 0; i < shorter.bytes_.size(); ++i) {
            int sum = static_cast<unsigned char>(out.bytes_[i]) +
                      static_cast<unsigned char>(shorter.bytes_[i]);
            if (sum > 255) throw domain_error("exponent exceeds the supported bound of 255");
            out.bytes_[i] = static_cast<char>(sum);
        }
        out.degree_ = degree_ + other.degree_;
        return out;
    }

    bool divisible_by(const Exponents& other) const {
        if (other.bytes_.size() > bytes_.size()) return false;
        for (std::size_t i = 0; i < other.bytes_.size(); ++i)
            if ((*this)[i] < other[i]) return false;
        return true;
    }

    /// Componentwise difference; requires divisible_by(other).
    Exponents operator-(const Exponents& other) const {
        Exponents out;
        out.bytes_ = bytes_;
        for (std::size_t i = 0; i < other.bytes_.size(); ++i)
            out.bytes_[i] = static_cast<char>((*this)[i] - other[i]);
        while (!out.bytes_.empty() && out.bytes_.back() == 0) out.bytes_.pop_back();
        out.degree_ = degree_ - other.degree_;
        return out;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out(bytes_.size());
        for (std::size_t i = 0; i < bytes_.size(); ++i) out[i] = (*this)[i];
        return out;
    }
    Composition to_composition() const { return Composition(to_vector()); }

    const std::string& bytes() const { return bytes_; }

    friend bool operator==(const Exponents& a, const Exponents& b) { return a.bytes_ == b.bytes_; }

private:
    std::string bytes_;
    int degree_ = 0;
};

/// Graded lexicographic order, highest term first. std::string comparison is
/// unsigned bytewise, so canonical keys order correctly.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.degree() != b.degree()) return a.degree() > b.degree();
        return a.bytes() > b.bytes();
    }
};

/// Sparse multivariate polynomial with exact integer coefficients. Terms are
/// kept in graded-lex order with the leading term first; zero coefficients
/// are never stored. nvars is an upper bound on the variable indices in use.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Int, GradedLexGreater>;

    MultiPoly() = default;
    explicit MultiPoly(Int constant) {
        if (constant != 0) terms_.emplace(Exponents(), std::move(constant));
    }
    explicit MultiPoly(long constant) : MultiPoly(Int(constant)) {}

    static MultiPoly monomial(Exponents exps, Int coeff) {
        MultiPoly p;
        p.nvars_ = static_cast<int>(exps.length());
        if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
        return p;
    }
    static MultiPoly variable(int i) { return monomial(Exponents::variable(i), 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    int nvars() const { return nvars_; }
    MultiPoly& with_vars(int n) {
        nvars_ = std::max(nvars_, n);
        return *this;
    }

    int total_degree() const { return terms_.empty() ? 0 : terms_.begin()->first.degree(); }

    Int coeff(const Exponents& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Int(0) : it->second;
    }
    Int coeff_of(const Composition& alpha) const { return coeff(Exponents(alpha)); }

    MultiPoly& operator+=(const MultiPoly& other) {
        for (const auto& [e, c] : other.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        nvars_ = std::max(nvars_, other.nvars_);
        return *this;
    }

    MultiPoly& operator-=(const MultiPoly& other) {
        for (const auto& [e, c] : other.terms_) {
            auto [it, inserted] = terms_.try_emplace(e, -c);
            if (!inserted) {
                it->second -= c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        nvars_ = std::max(nvars_, other.nvars_);
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

    MultiPoly operator-() const {
        MultiPoly out(*this);
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly out;
        out.nvars_ = std::max(a.nvars_, b.nvars_);
        const MultiPoly& outer = a.term_count() <= b.term_count() ? a : b;
        const MultiPoly& inner = a.term_count() <= b.term_count() ? b : a;
        for (const auto& [ea, ca] : outer.terms_) {
            for (const auto& [eb, cb] : inner.terms_) {
                auto [it, inserted] = out.terms_.try_emplace(ea + eb, 0);
                mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            }
        }
        std::erase_if(out.terms_, [](const auto& term) { return term.second == 0; });
        return out;
    }

    MultiPoly& operator*=(const MultiPoly& other) { return *this = *this * other; }

    MultiPoly& operator*=(const Int& factor) {
        if (factor == 0) {
            terms_.clear();
        } else {
            for (auto& [e, c] : terms_) c *= factor;
        }
        return *this;
    }

    /// Image under X_i := 0: drops every term with a positive exponent at i.
    MultiPoly substitute_zero(int var) const {
        MultiPoly out;
        out.nvars_ = nvars_;
        for (const auto& [e, c] : terms_)
            if (e[static_cast<std::size_t>(var)] == 0) out.terms_.emplace(e, c);
        return out;
    }

    /// Equality is on terms; nvars is bookkeeping, not value.
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    /// "2*X0^3*X1 + -1*X2" with terms in graded-lex order; "0" when zero.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [e, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += c.get_str();
            for (std::size_t i = 0; i < e.length(); ++i) {
                if (e[i] == 0) continue;
                out += "*X" + std::to_string(i);
                if (e[i] > 1) out += "^" + std::to_string(e[i]);
            }
        }
        return out;
    }

    /// JSON: [{"coeff": c, "exp": [a0,a1,...]}, ...] in graded-lex order.
    nlohmann::json to_json() const {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& [e, c] : terms_) {
            if (!c.fits_slong_p()) throw domain_error("coefficient too large for JSON");
            out.push_back({{"coeff", c.get_si()}, {"exp", e.to_vector()}});
        }
        return out;
    }

    static MultiPoly from_json(const nlohmann::json& j) {
        if (!j.is_array()) throw parse_error("polynomial JSON must be a list of terms");
        MultiPoly out;
        for (const auto& term : j) {
            if (!term.contains("coeff") || !term.contains("exp"))
                throw parse_error("polynomial term needs \"coeff\" and \"exp\"");
            std::vector<int> exps;
            for (const auto& e : term.at("exp")) exps.push_back(e.get<int>());
            out += monomial(Exponents(exps), Int(term.at("coeff").get<long>()));
        }
        return out;
    }

private:
    TermMap terms_;
    int nvars_ = 0;
};

}  // namespace schurkit
