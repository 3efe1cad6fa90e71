#pragma once

#include <cstdint>
#include <iosfwd>

#include <Eigen/Core>

#include "ordss/errors.hpp"

namespace ordss {

bool is_prime(std::uint32_t x);

// Smallest prime p with p >= x (x >= 1).
std::uint32_t smallest_prime_at_least(std::uint32_t x);

// Order q of a prime field GF(q). Primality is checked once here so that
// element-level arithmetic never has to re-check it.
class FieldOrder {
  public:
    explicit FieldOrder(std::uint32_t q);

    std::uint32_t value() const { return q_; }

    friend bool operator==(FieldOrder a, FieldOrder b) { return a.q_ == b.q_; }
    friend bool operator!=(FieldOrder a, FieldOrder b) { return a.q_ != b.q_; }

  private:
    std::uint32_t q_;
};

// Element of GF(q), q prime. The modulus travels with the value, so mixing
// elements of different fields throws FieldMismatchError instead of silently
// wrapping.
//
// A default- or integer-constructed element is an order-free constant: it
// adopts the modulus of the first tagged operand it meets. Eigen builds
// Scalar(0)/Scalar(1) literals inside matrix kernels, and this rule makes
// those literals behave in any field.
class Fp {
  public:
    Fp() = default;

    // Order-free non-negative constant (reduced on first contact with a
    // tagged element).
    explicit Fp(long long constant);

    Fp(std::uint64_t value, FieldOrder order);

    std::uint32_t value() const { return value_; }

    // 0 while order-free.
    std::uint32_t order() const { return order_; }

    bool is_zero() const { return value_ == 0; }

    // Multiplicative inverse; throws ZeroDivisionError on zero.
    Fp inverse() const;

    Fp& operator+=(const Fp& rhs);
    Fp& operator-=(const Fp& rhs);
    Fp& operator*=(const Fp& rhs);
    Fp& operator/=(const Fp& rhs);

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    friend Fp operator/(Fp a, const Fp& b) { return a /= b; }

    Fp operator-() const;

    friend bool operator==(const Fp& a, const Fp& b);
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  private:
    // Joint modulus of two operands; throws FieldMismatchError when both are
    // tagged with different orders.
    static std::uint32_t joint_order(const Fp& a, const Fp& b);

    // Value reduced into [0, q); identity when already tagged with q.
    static std::uint32_t reduced(const Fp& x, std::uint32_t q);

    std::uint32_t value_ = 0;
    std::uint32_t order_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Fp& x);

}  // namespace ordss

namespace Eigen {

template <>
struct NumTraits<ordss::Fp> : GenericNumTraits<ordss::Fp> {
    typedef ordss::Fp Real;
    typedef ordss::Fp NonInteger;
    typedef ordss::Fp Nested;
    typedef ordss::Fp Literal;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 3,
        MulCost = 9,
    };
    static inline Real epsilon() { return ordss::Fp(0); }
    static inline Real dummy_precision() { return ordss::Fp(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
