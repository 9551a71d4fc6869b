#pragma once

#include <string>

namespace oinv {

// The two-element group. Torsion coefficients and the mod-2 invariant
// values (M, Q, Uhat differences) live here.
class Z2 {
  public:
    constexpr Z2() = default;
    constexpr Z2(long long v) : v_(static_cast<unsigned long long>(v) & 1u) {}

    constexpr unsigned value() const { return v_; }
    constexpr bool is_zero() const { return v_ == 0; }

    friend constexpr Z2 operator+(Z2 a, Z2 b) { return Z2(static_cast<long long>(a.v_ ^ b.v_)); }
    friend constexpr Z2 operator-(Z2 a, Z2 b) { return a + b; }
    friend constexpr Z2 operator*(Z2 a, Z2 b) { return Z2(static_cast<long long>(a.v_ & b.v_)); }
    constexpr Z2 operator-() const { return *this; }
    constexpr Z2& operator+=(Z2 o) {
        v_ ^= o.v_;
        return *this;
    }
    friend constexpr bool operator==(Z2, Z2) = default;

  private:
    unsigned v_ = 0;
};

inline std::string describe(Z2 v) { return v.value() ? "1" : "0"; }

}  // namespace oinv
