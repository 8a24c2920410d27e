#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>

namespace cfcalc {

/// Exact integer used for every function value and multiplicity.
using Integer = boost::multiprecision::cpp_int;

/// Element of the field with two elements.
class Mod2 {
 public:
  constexpr Mod2() = default;
  constexpr explicit Mod2(bool bit) : bit_(bit) {}
  explicit Mod2(const Integer& n) : bit_(boost::multiprecision::bit_test(abs(n), 0)) {}
  constexpr explicit Mod2(int n) : bit_((n % 2) != 0) {}

  constexpr bool bit() const { return bit_; }

  constexpr Mod2 operator+(Mod2 o) const { return Mod2(bit_ != o.bit_); }
  constexpr Mod2 operator-(Mod2 o) const { return *this + o; }
  constexpr Mod2 operator-() const { return *this; }
  constexpr Mod2 operator*(Mod2 o) const { return Mod2(bit_ && o.bit_); }
  constexpr Mod2& operator+=(Mod2 o) { return *this = *this + o; }
  constexpr Mod2& operator-=(Mod2 o) { return *this = *this + o; }
  constexpr bool operator==(const Mod2&) const = default;

 private:
  bool bit_ = false;
};

inline std::ostream& operator<<(std::ostream& os, Mod2 v) { return os << (v.bit() ? 1 : 0); }

inline Mod2 reduce_mod2(const Integer& n) { return Mod2(n); }

inline bool odd(const Integer& n) { return Mod2(n).bit(); }

/// `(-1)^k * v` for any ring element.
template <class V>
V signed_by(int k, const V& v) {
  return (k % 2 == 0) ? v : V(-v);
}

inline std::string to_string(const Integer& n) { return n.str(); }
inline std::string to_string(Mod2 v) { return v.bit() ? "1" : "0"; }

}  // namespace cfcalc
