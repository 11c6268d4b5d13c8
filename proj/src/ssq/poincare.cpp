#include "resolvent/ssq/poincare.hpp"

#include <sstream>

namespace resolvent::ssq {

PoincarePolynomial::PoincarePolynomial(std::initializer_list<std::pair<int, long>> terms) {
    for (const auto& [d, c] : terms) add(d, c);
}

PoincarePolynomial PoincarePolynomial::monomial(int degree, long coefficient) {
    PoincarePolynomial p;
    p.add(degree, coefficient);
    return p;
}

void PoincarePolynomial::add(int degree, long coefficient) {
    if (coefficient == 0) return;
    long& slot = c_[degree];
    slot += coefficient;
    if (slot == 0) c_.erase(degree);
}

long PoincarePolynomial::coefficient(int degree) const {
    auto it = c_.find(degree);
    return it == c_.end() ? 0 : it->second;
}

bool PoincarePolynomial::nonnegative() const {
    for (const auto& [d, c] : c_) {
        if (d < 0 || c < 0) return false;
    }
    return true;
}

long PoincarePolynomial::total() const {
    long s = 0;
    for (const auto& [d, c] : c_) s += c;
    return s;
}

std::string PoincarePolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : c_) {
        long mag = c;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (mag < 0) mag = -mag;
        first = false;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag;
        os << 't';
        if (d != 1) os << '^' << d;
    }
    return os.str();
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& o) {
    for (const auto& [d, c] : o.c_) add(d, c);
    return *this;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
    PoincarePolynomial out;
    for (const auto& [da, ca] : a.c_)
        for (const auto& [db, cb] : b.c_) out.add(da + db, ca * cb);
    return out;
}

}  // namespace resolvent::ssq
