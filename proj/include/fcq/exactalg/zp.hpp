#pragma once

#include "fcq/exactalg/integer.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <ostream>

namespace fcq {

/// Element of the prime field F_P. The modulus is a template parameter so
/// that Zp<P> can be used as an Eigen scalar; runtime primes are dispatched
/// through with_prime().
template <int P>
class Zp {
    static_assert(P > 2, "odd primes only");

public:
    static constexpr int modulus = P;

    constexpr Zp() = default;
    constexpr Zp(long long x) : v_(static_cast<std::int32_t>(((x % P) + P) % P)) {} // NOLINT

    constexpr std::int32_t value() const { return v_; }

    /// Symmetric representative in (-P/2, P/2].
    constexpr std::int32_t centered() const { return v_ > P / 2 ? v_ - P : v_; }

    constexpr bool is_zero() const { return v_ == 0; }

    Zp inverse() const { return Zp(inverse_mod(v_, P)); }

    constexpr Zp pow(std::uint64_t e) const
    {
        Zp r(1), b(*this);
        while (e) {
            if (e & 1)
                r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    constexpr Zp operator-() const { return Zp(-static_cast<long long>(v_)); }
    constexpr Zp& operator+=(Zp o) { v_ = (v_ + o.v_) % P; return *this; }
    constexpr Zp& operator-=(Zp o) { v_ = (v_ - o.v_ + P) % P; return *this; }
    constexpr Zp& operator*=(Zp o)
    {
        v_ = static_cast<std::int32_t>(static_cast<std::int64_t>(v_) * o.v_ % P);
        return *this;
    }
    Zp& operator/=(Zp o) { return *this *= o.inverse(); }

    friend constexpr Zp operator+(Zp a, Zp b) { return a += b; }
    friend constexpr Zp operator-(Zp a, Zp b) { return a -= b; }
    friend constexpr Zp operator*(Zp a, Zp b) { return a *= b; }
    friend Zp operator/(Zp a, Zp b) { return a /= b; }
    friend constexpr bool operator==(Zp a, Zp b) { return a.v_ == b.v_; }
    friend constexpr bool operator!=(Zp a, Zp b) { return a.v_ != b.v_; }

    friend std::ostream& operator<<(std::ostream& os, Zp a) { return os << a.v_; }

private:
    std::int32_t v_ = 0;
};

template <class T>
struct is_prime_field : std::false_type {};
template <int P>
struct is_prime_field<Zp<P>> : std::true_type {};
template <class T>
inline constexpr bool is_prime_field_v = is_prime_field<T>::value;

/// Characteristic of a scalar type (0 for the integers).
template <class T>
inline constexpr int characteristic_v = 0;
template <int P>
inline constexpr int characteristic_v<Zp<P>> = P;

inline constexpr int supported_primes[] = {3, 5, 7, 11, 13};

/// Calls fn.template operator()<P>() for the runtime prime p.
template <class Fn>
decltype(auto) with_prime(int p, Fn&& fn)
{
    switch (p) {
    case 3: return fn.template operator()<3>();
    case 5: return fn.template operator()<5>();
    case 7: return fn.template operator()<7>();
    case 11: return fn.template operator()<11>();
    case 13: return fn.template operator()<13>();
    default:
        throw AlgebraError("prime " + std::to_string(p) + " is not among the supported field characteristics {3,5,7,11,13}");
    }
}

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

} // namespace fcq

namespace Eigen {

template <int P>
struct NumTraits<fcq::Zp<P>> : GenericNumTraits<fcq::Zp<P>> {
    using Real = fcq::Zp<P>;
    using NonInteger = fcq::Zp<P>;
    using Literal = fcq::Zp<P>;
    enum {
        IsComplex = 0,
        IsInteger = 1,
        IsSigned = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 3
    };
    static inline int digits10() { return 0; }
};

} // namespace Eigen
