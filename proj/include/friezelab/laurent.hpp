#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "friezelab/numeric.hpp"

namespace friezelab {

/// Dense exponent vector of a Laurent monomial; entries may be negative.
using Exponents = std::vector<int>;

/// Multivariate Laurent polynomial over arbitrary-precision integers.
///
/// The representation is canonical: a map from exponent vector to nonzero
/// coefficient, so structural equality is mathematical equality. Variables
/// are named x1..xn (1-based in every public entry point).
class LaurentPoly {
public:
    using TermMap = std::map<Exponents, BigInt>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const BigInt& c);
    static LaurentPoly monomial(std::size_t nvars, const BigInt& c, Exponents exps);
    /// The coordinate monomial x_i, 1 <= i <= nvars.
    static LaurentPoly variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return nvars_; }
    const TermMap& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    /// Adds c * x^exps in place, pruning a cancelled term.
    void add_term(const Exponents& exps, const BigInt& c);

    /// Per-variable minimum exponent over all terms (zeros for the zero polynomial).
    Exponents min_exponents() const;

    /// Exact value at a point with positive rational coordinates.
    Rational evaluate(std::span<const Rational> point) const;
    /// Sum of coefficients, i.e. the value at (1,...,1).
    BigInt evaluate_at_ones() const;

    bool has_nonnegative_coefficients() const;

    /// Human-readable "(numerator)/(monomial)" form, e.g. "(1 + x1 + x2)/(x1*x2)".
    std::string to_string() const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);

    friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& q) { return p += q; }
    friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& q) { return p -= q; }
    friend LaurentPoly operator-(const LaurentPoly& p);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);

    friend bool operator==(const LaurentPoly& p, const LaurentPoly& q) {
        return p.nvars_ == q.nvars_ && p.terms_ == q.terms_;
    }
    /// Total order: nvars, then term maps lexicographically by (exponents, coefficient).
    friend std::strong_ordering operator<=>(const LaurentPoly& p, const LaurentPoly& q);

private:
    std::size_t nvars_ = 0;
    TermMap terms_;
};

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q);
LaurentPoly pow(const LaurentPoly& p, unsigned exponent);

/// Returns r with r * q == p. Throws NotDivisible when no Laurent polynomial
/// quotient exists and InvalidInput when q is zero.
LaurentPoly div_exact(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace friezelab
