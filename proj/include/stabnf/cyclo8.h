#pragma once

#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace stabnf {

/// Exact element of Z[zeta, 1/sqrt2], zeta = e^{i pi/4}: (c0 + c1 zeta + c2 zeta^2 +
/// c3 zeta^3) / sqrt2^m. Kept normalized (m = 0 or the numerator is not a multiple of
/// sqrt2 = zeta - zeta^3), so equal values have equal representations.
class Cyclo8 {
   public:
    using Int = boost::multiprecision::cpp_int;

    Cyclo8() = default;
    Cyclo8(Int c0, Int c1, Int c2, Int c3, unsigned m = 0);

    static Cyclo8 zero() { return {}; }
    static Cyclo8 one() { return Cyclo8(1, 0, 0, 0); }
    static Cyclo8 zeta_power(int k);
    /// 1/sqrt2^m.
    static Cyclo8 inv_sqrt2_power(unsigned m);

    const std::array<Int, 4> &coefficients() const { return c_; }
    unsigned sqrt2_exponent() const { return m_; }
    bool is_zero() const;

    Cyclo8 &operator+=(const Cyclo8 &other);
    Cyclo8 &operator-=(const Cyclo8 &other);
    Cyclo8 operator-() const;
    friend Cyclo8 operator+(Cyclo8 x, const Cyclo8 &y) { return x += y; }
    friend Cyclo8 operator-(Cyclo8 x, const Cyclo8 &y) { return x -= y; }
    friend Cyclo8 operator*(const Cyclo8 &x, const Cyclo8 &y);
    Cyclo8 &operator*=(const Cyclo8 &other) { return *this = *this * other; }

    /// Multiplication by zeta^k, a signed rotation of the coefficients.
    Cyclo8 &mul_zeta(int k);
    Cyclo8 &div_sqrt2();
    Cyclo8 &mul_sqrt2();
    /// Complex conjugate: zeta -> zeta^{-1} = -zeta^3.
    Cyclo8 conj() const;

    bool operator==(const Cyclo8 &other) const { return m_ == other.m_ && c_ == other.c_; }
    std::string str() const;

   private:
    void normalize();
    // Numerator times sqrt2 without touching m.
    void scale_numerator_sqrt2();

    std::array<Int, 4> c_{};
    unsigned m_ = 0;
};

}  // namespace stabnf
