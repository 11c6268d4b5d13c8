#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

namespace resolvent::ssq {

/// Finitely supported integer series in t. Intermediate products may carry
/// negative exponents; callers check nonnegativity where it matters.
class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    /// Sum of c * t^d over the given (d, c) pairs.
    PoincarePolynomial(std::initializer_list<std::pair<int, long>> terms);

    static PoincarePolynomial monomial(int degree, long coefficient = 1);

    [[nodiscard]] long coefficient(int degree) const;
    [[nodiscard]] const std::map<int, long>& coefficients() const noexcept { return c_; }
    [[nodiscard]] bool is_zero() const noexcept { return c_.empty(); }
    /// No negative coefficients and no negative degrees.
    [[nodiscard]] bool nonnegative() const;
    /// Value at t = 1 (total rank).
    [[nodiscard]] long total() const;
    [[nodiscard]] std::string to_string() const;

    PoincarePolynomial& operator+=(const PoincarePolynomial& o);
    friend PoincarePolynomial operator+(PoincarePolynomial a, const PoincarePolynomial& b) { return a += b; }
    friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    void add(int degree, long coefficient);
    std::map<int, long> c_;
};

}  // namespace resolvent::ssq
