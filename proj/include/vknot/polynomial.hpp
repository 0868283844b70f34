#ifndef VKNOT_POLYNOMIAL_HPP
#define VKNOT_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vknot {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent triple of a bracket-polynomial term c * A^a * B^b * d^k.
struct Monomial {
    std::int32_t a = 0;
    std::int32_t b = 0;
    std::int32_t k = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Exact integer polynomial in the commuting variables A, B, d.
///
/// Terms are kept sorted by exponent triple (lexicographic on (a, b, k));
/// zero coefficients are never stored, so equality of values is equality
/// of the term vectors.
class BracketPoly {
public:
    using Term = std::pair<Monomial, BigInt>;

    BracketPoly() = default;

    static BracketPoly zero() { return {}; }
    static BracketPoly one() { return monomial({0, 0, 0}); }
    static BracketPoly monomial(Monomial m, BigInt coeff = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const BracketPoly&) const = default;

    BracketPoly& operator+=(const BracketPoly& rhs);
    BracketPoly& operator-=(const BracketPoly& rhs);
    friend BracketPoly operator+(BracketPoly lhs, const BracketPoly& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend BracketPoly operator-(BracketPoly lhs, const BracketPoly& rhs) {
        lhs -= rhs;
        return lhs;
    }
    friend BracketPoly operator*(const BracketPoly& lhs, const BracketPoly& rhs);

    /// Multiply by c * A^da * B^db * d^dk (an exponent shift).
    BracketPoly shifted(std::int32_t da, std::int32_t db, std::int32_t dk,
                        const BigInt& c = 1) const;

    /// Multiply by the monomial A^da * B^db * d^dk in place.
    void shift_inplace(std::int32_t da, std::int32_t db, std::int32_t dk);

    /// Accumulate a single term in place.
    void add_term(Monomial m, const BigInt& coeff);

    /// Swap the roles of A and B in every term.
    BracketPoly swapped_ab() const;

    std::string to_string() const;
    std::string to_json() const;

private:
    std::vector<Term> terms_;
};

/// Exact integer Laurent polynomial in one variable with integer exponents.
///
/// Used both for the Jones polynomial (exponents count quarter powers of t)
/// and for the normalized bracket (exponents count powers of A).
class Laurent {
public:
    using Term = std::pair<std::int64_t, BigInt>;

    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent one() { return monomial(0); }
    static Laurent monomial(std::int64_t exponent, BigInt coeff = 1);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const Laurent&) const = default;

    Laurent& operator+=(const Laurent& rhs);
    friend Laurent operator+(Laurent lhs, const Laurent& rhs) {
        lhs += rhs;
        return lhs;
    }
    friend Laurent operator*(const Laurent& lhs, const Laurent& rhs);

    /// Multiply by c * x^shift.
    Laurent shifted(std::int64_t shift, const BigInt& c = 1) const;

    void add_term(std::int64_t exponent, const BigInt& coeff);

    /// Substitute x -> x^-1.
    Laurent mirrored() const;

    /// Render with exponents divided by 4 and written as reduced fractions,
    /// e.g. "-t^-4 + t^-3 + t^-1" or "t^(3/4)". Ascending exponent order.
    std::string to_string_quarter() const;

    /// Render with plain integer exponents in the given variable name.
    std::string to_string_plain(const std::string& var) const;

    std::string to_json_quarter() const;

private:
    std::vector<Term> terms_;
};

/// Exponents are stored in quarter units of t, so this is the Laurent
/// polynomial in q = t^(1/4).
using QuarterLaurent = Laurent;

/// Substitute A -> t^(-1/4), B -> t^(1/4), d -> -(t^(-1/2) + t^(1/2)).
QuarterLaurent specialize_jones(const BracketPoly& p);

/// specialize_jones(p) times (-1)^w * t^(3w/4); the writhe correction
/// (-A^3)^(-w) evaluated at A = t^(-1/4).
QuarterLaurent normalize_writhe(const BracketPoly& p, std::int64_t w);

/// Substitute B -> A^-1, d -> -(A^2 + A^-2); exponents count powers of A.
Laurent specialize_bracket_normalized(const BracketPoly& p);

}  // namespace vknot

#endif
