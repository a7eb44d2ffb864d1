#pragma once

#include <string>
#include <vector>

#include "latproj/numeric.hpp"

namespace latproj {

/*
 * Integer polynomial in one indeterminate w. Coefficients ascending by
 * degree, trailing zeros trimmed; the zero polynomial has no coefficients.
 */
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c) { if (c != 0) c_.push_back(Int(c)); }
    IntPoly(const Int& c) { if (c != 0) c_.push_back(c); }
    explicit IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly monomial(std::size_t deg, const Int& coeff);
    // "w" as a convenience
    static IntPoly var() { return monomial(1, 1); }

    bool is_zero() const { return c_.empty(); }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Int& leading() const;
    Int coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Int(0); }
    const std::vector<Int>& coeffs() const { return c_; }

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }

    // exact division; throws argument_error when the division is not exact
    IntPoly divexact(const IntPoly& d) const;

    Int eval(const Int& w) const;

    bool is_constant() const { return c_.size() <= 1; }

    // "16w^5+20w^3+5w"
    std::string pretty(const std::string& var = "w") const;
    // ascending coefficient list "c0 c1 ... cd"
    std::string coeff_text() const;
    static IntPoly from_coeff_text(const std::string& text);

private:
    void trim();
    std::vector<Int> c_;
};

}  // namespace latproj
