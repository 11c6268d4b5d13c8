#include "resolvent/exactlin/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace resolvent::exactlin {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kSmallMax = std::numeric_limits<std::int64_t>::max();

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// INT64_MIN is excluded so that negation and products stay inside 127 bits.
bool fits_small(i128 v) { return v <= kSmallMax && v >= -kSmallMax; }

mpz_class to_mpz(i128 v) {
    const bool negative = v < 0;
    u128 mag = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
    mpz_class out = (hi << 64) + lo;
    return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(std::int64_t n) {
    if (n == std::numeric_limits<std::int64_t>::min()) {
        set_from_mpq(mpq_class(mpz_class(static_cast<long>(n)), 1));
    } else {
        num_ = n;
    }
}

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    set_from_wide(static_cast<i128>(n), static_cast<i128>(d));
}

Rational::Rational(const mpq_class& q) { set_from_mpq(q); }

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_),
      big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this != &other) {
        num_ = other.num_;
        den_ = other.den_;
        big_ = other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr;
    }
    return *this;
}

void Rational::set_from_wide(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        num_ = 0;
        den_ = 1;
        big_.reset();
        return;
    }
    const u128 g = gcd128(uabs(n), static_cast<u128>(d));
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
    if (fits_small(n) && d <= kSmallMax) {
        num_ = static_cast<std::int64_t>(n);
        den_ = static_cast<std::int64_t>(d);
        big_.reset();
        return;
    }
    mpq_class q(to_mpz(n), to_mpz(d));
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::set_from_mpq(mpq_class q) {
    q.canonicalize();
    const mpz_class& n = q.get_num();
    const mpz_class& d = q.get_den();
    if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != std::numeric_limits<long>::min()) {
        num_ = n.get_si();
        den_ = d.get_si();
        big_.reset();
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(q));
    num_ = 0;
    den_ = 1;
}

int Rational::sign() const noexcept {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpz_class Rational::numerator() const {
    return big_ ? mpz_class(big_->get_num()) : mpz_class(static_cast<long>(num_));
}

mpz_class Rational::denominator() const {
    return big_ ? mpz_class(big_->get_den()) : mpz_class(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
}

std::string Rational::to_string() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    Rational out;
    if (big_) {
        out.set_from_mpq(1 / *big_);
    } else {
        out.set_from_wide(den_, num_);
    }
    return out;
}

Rational Rational::operator-() const {
    Rational out;
    if (big_) {
        out.set_from_mpq(-*big_);
    } else {
        out.num_ = -num_;
        out.den_ = den_;
    }
    return out;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (den_ == rhs.den_) {
            set_from_wide(static_cast<i128>(num_) + rhs.num_, den_);
        } else {
            const i128 n = static_cast<i128>(num_) * rhs.den_ + static_cast<i128>(rhs.num_) * den_;
            set_from_wide(n, static_cast<i128>(den_) * rhs.den_);
        }
        return *this;
    }
    set_from_mpq(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        set_from_wide(static_cast<i128>(num_) * rhs.num_, static_cast<i128>(den_) * rhs.den_);
        return *this;
    }
    set_from_mpq(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) { return *this *= rhs.inverse(); }

bool operator==(const Rational& a, const Rational& b) {
    // Both sides are canonical, and a value has exactly one representation.
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

}  // namespace resolvent::exactlin
