#include "ordss/field.hpp"

#include <ostream>
#include <string>
#include <utility>

namespace ordss {

bool is_prime(std::uint32_t x) {
    if (x < 2) return false;
    if (x % 2 == 0) return x == 2;
    for (std::uint32_t d = 3; static_cast<std::uint64_t>(d) * d <= x; d += 2) {
        if (x % d == 0) return false;
    }
    return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t x) {
    std::uint32_t p = x < 2 ? 2 : x;
    while (!is_prime(p)) ++p;
    return p;
}

FieldOrder::FieldOrder(std::uint32_t q) : q_(q) {
    if (!is_prime(q)) {
        throw std::invalid_argument("field order must be prime, got " + std::to_string(q));
    }
}

Fp::Fp(long long constant) {
    if (constant < 0) {
        throw std::invalid_argument("order-free field constant must be non-negative");
    }
    value_ = static_cast<std::uint32_t>(constant);
}

Fp::Fp(std::uint64_t value, FieldOrder order)
    : value_(static_cast<std::uint32_t>(value % order.value())), order_(order.value()) {}

std::uint32_t Fp::joint_order(const Fp& a, const Fp& b) {
    if (a.order_ == b.order_) return a.order_;
    if (a.order_ == 0) return b.order_;
    if (b.order_ == 0) return a.order_;
    throw FieldMismatchError("field order mismatch: GF(" + std::to_string(a.order_) +
                             ") vs GF(" + std::to_string(b.order_) + ")");
}

std::uint32_t Fp::reduced(const Fp& x, std::uint32_t q) {
    if (q == 0 || x.order_ == q) return x.value_;
    return x.value_ % q;
}

Fp& Fp::operator+=(const Fp& rhs) {
    const std::uint32_t q = joint_order(*this, rhs);
    std::uint64_t s = static_cast<std::uint64_t>(reduced(*this, q)) + reduced(rhs, q);
    if (q != 0 && s >= q) s -= q;
    value_ = static_cast<std::uint32_t>(s);
    order_ = q;
    return *this;
}

Fp& Fp::operator-=(const Fp& rhs) {
    const std::uint32_t q = joint_order(*this, rhs);
    if (q == 0) {
        if (rhs.value_ > value_) {
            throw std::invalid_argument("order-free field constant must stay non-negative");
        }
        value_ -= rhs.value_;
        return *this;
    }
    std::uint64_t s = static_cast<std::uint64_t>(reduced(*this, q)) + q - reduced(rhs, q);
    if (s >= q) s -= q;
    value_ = static_cast<std::uint32_t>(s);
    order_ = q;
    return *this;
}

Fp& Fp::operator*=(const Fp& rhs) {
    const std::uint32_t q = joint_order(*this, rhs);
    std::uint64_t p = static_cast<std::uint64_t>(reduced(*this, q)) * reduced(rhs, q);
    value_ = static_cast<std::uint32_t>(q != 0 ? p % q : p);
    order_ = q;
    return *this;
}

Fp& Fp::operator/=(const Fp& rhs) { return *this *= rhs.inverse(); }

Fp Fp::operator-() const {
    if (order_ == 0) {
        if (value_ != 0) {
            throw std::invalid_argument("cannot negate a nonzero order-free field constant");
        }
        return *this;
    }
    Fp r = *this;
    r.value_ = value_ == 0 ? 0 : order_ - value_;
    return r;
}

Fp Fp::inverse() const {
    if (order_ == 0) {
        throw FieldMismatchError("cannot invert an order-free field constant");
    }
    if (value_ == 0) {
        throw ZeroDivisionError("inverse of zero in GF(" + std::to_string(order_) + ")");
    }
    // Extended Euclid on (q, value).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = order_, new_r = value_;
    while (new_r != 0) {
        const std::int64_t quot = r / new_r;
        t = std::exchange(new_t, t - quot * new_t);
        r = std::exchange(new_r, r - quot * new_r);
    }
    if (t < 0) t += order_;
    Fp result = *this;
    result.value_ = static_cast<std::uint32_t>(t);
    return result;
}

bool operator==(const Fp& a, const Fp& b) {
    if (a.order_ != 0 && b.order_ != 0 && a.order_ != b.order_) return false;
    const std::uint32_t q = a.order_ != 0 ? a.order_ : b.order_;
    return Fp::reduced(a, q) == Fp::reduced(b, q);
}

std::ostream& operator<<(std::ostream& os, const Fp& x) {
    os << x.value();
    if (x.order() != 0) os << "_" << x.order();
    return os;
}

}  // namespace ordss
