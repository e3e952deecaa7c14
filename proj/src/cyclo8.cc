#include "stabnf/cyclo8.h"

#include <sstream>

namespace stabnf {

namespace {

bool is_odd(const Cyclo8::Int &x) { return bit_test(x, 0); }

}  // namespace

Cyclo8::Cyclo8(Int c0, Int c1, Int c2, Int c3, unsigned m)
    : c_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)}, m_(m) {
    normalize();
}

Cyclo8 Cyclo8::zeta_power(int k) { return one().mul_zeta(k); }

Cyclo8 Cyclo8::inv_sqrt2_power(unsigned m) { return Cyclo8(1, 0, 0, 0, m); }

bool Cyclo8::is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

void Cyclo8::scale_numerator_sqrt2() {
    // (c0 + c1 z + c2 z^2 + c3 z^3)(z - z^3) with z^4 = -1
    Int n0 = c_[1] - c_[3];
    Int n1 = c_[0] + c_[2];
    Int n2 = c_[1] + c_[3];
    Int n3 = c_[2] - c_[0];
    c_ = {std::move(n0), std::move(n1), std::move(n2), std::move(n3)};
}

void Cyclo8::normalize() {
    if (is_zero()) {
        m_ = 0;
        return;
    }
    // x is a multiple of sqrt2 iff x sqrt2 / 2 is integral, i.e. c0 = c2 and c1 = c3 mod 2.
    while (m_ > 0 && is_odd(c_[0]) == is_odd(c_[2]) && is_odd(c_[1]) == is_odd(c_[3])) {
        scale_numerator_sqrt2();
        for (auto &c : c_) {
            c >>= 1;
        }
        m_--;
    }
}

Cyclo8 &Cyclo8::operator+=(const Cyclo8 &other) {
    if (other.is_zero()) {
        return *this;
    }
    if (m_ >= other.m_) {
        Cyclo8 y = other;
        for (unsigned k = y.m_; k < m_; k++) {
            y.scale_numerator_sqrt2();
        }
        for (int i = 0; i < 4; i++) {
            c_[i] += y.c_[i];
        }
    } else {
        for (unsigned k = m_; k < other.m_; k++) {
            scale_numerator_sqrt2();
        }
        m_ = other.m_;
        for (int i = 0; i < 4; i++) {
            c_[i] += other.c_[i];
        }
    }
    normalize();
    return *this;
}

Cyclo8 Cyclo8::operator-() const {
    Cyclo8 out = *this;
    for (auto &c : out.c_) {
        c = -c;
    }
    return out;
}

Cyclo8 &Cyclo8::operator-=(const Cyclo8 &other) { return *this += -other; }

Cyclo8 operator*(const Cyclo8 &x, const Cyclo8 &y) {
    Cyclo8 out;
    if (x.is_zero() || y.is_zero()) {
        return out;
    }
    for (int i = 0; i < 4; i++) {
        if (x.c_[i].is_zero()) {
            continue;
        }
        for (int j = 0; j < 4; j++) {
            if (i + j < 4) {
                out.c_[i + j] += x.c_[i] * y.c_[j];
            } else {
                out.c_[i + j - 4] -= x.c_[i] * y.c_[j];
            }
        }
    }
    out.m_ = x.m_ + y.m_;
    out.normalize();
    return out;
}

Cyclo8 &Cyclo8::mul_zeta(int k) {
    k = ((k % 8) + 8) % 8;
    if (k >= 4) {
        for (auto &c : c_) {
            c = -c;
        }
        k -= 4;
    }
    for (int step = 0; step < k; step++) {
        // z (c0 + c1 z + c2 z^2 + c3 z^3) = -c3 + c0 z + c1 z^2 + c2 z^3
        Int last = -c_[3];
        c_[3] = std::move(c_[2]);
        c_[2] = std::move(c_[1]);
        c_[1] = std::move(c_[0]);
        c_[0] = std::move(last);
    }
    return *this;
}

Cyclo8 &Cyclo8::div_sqrt2() {
    if (!is_zero()) {
        m_++;
        normalize();
    }
    return *this;
}

Cyclo8 &Cyclo8::mul_sqrt2() {
    if (m_ > 0) {
        m_--;
    } else {
        scale_numerator_sqrt2();
    }
    return *this;
}

Cyclo8 Cyclo8::conj() const {
    // z^{-1} = -z^3, z^{-2} = -z^2, z^{-3} = -z
    Cyclo8 out = *this;
    out.c_[1] = -c_[3];
    out.c_[2] = -c_[2];
    out.c_[3] = -c_[1];
    return out;
}

std::string Cyclo8::str() const {
    std::ostringstream out;
    out << "(" << c_[0] << ", " << c_[1] << ", " << c_[2] << ", " << c_[3] << ")/sqrt2^" << m_;
    return out.str();
}

}  // namespace stabnf
