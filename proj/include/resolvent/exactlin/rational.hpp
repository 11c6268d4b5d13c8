#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace resolvent::exactlin {

/**
 * Exact rational number in lowest terms with a positive denominator.
 *
 * Values whose numerator and denominator fit in a signed 64-bit word are kept
 * inline and combined with 128-bit intermediates; any result that does not fit
 * is promoted to a GMP rational. Promotion is invisible to callers: equality,
 * ordering and printing do not depend on the representation.
 */
class Rational {
public:
    Rational() noexcept = default;
    Rational(std::int64_t n);  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);
    explicit Rational(const mpq_class& q);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    [[nodiscard]] bool is_zero() const noexcept { return !big_ && num_ == 0; }
    [[nodiscard]] int sign() const noexcept;
    /// True when the value is held inline (both parts fit in 64 bits).
    [[nodiscard]] bool is_small() const noexcept { return !big_; }

    [[nodiscard]] mpz_class numerator() const;
    [[nodiscard]] mpz_class denominator() const;
    [[nodiscard]] mpq_class to_mpq() const;
    [[nodiscard]] std::string to_string() const;

    /// Throws std::domain_error on zero.
    [[nodiscard]] Rational inverse() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    void set_from_wide(__int128 n, __int128 d);
    void set_from_mpq(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace resolvent::exactlin
