#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace klsb {

using int128 = __int128;

// Called on any checked-arithmetic failure. Exact arithmetic is the whole
// point of this library, so a silent wrap is never acceptable; we print the
// location and abort.
[[noreturn]] void arithmetic_abort(const char* where);

int128 checked_add(int128 a, int128 b, const char* where);
int128 checked_sub(int128 a, int128 b, const char* where);
int128 checked_mul(int128 a, int128 b, const char* where);
long long checked_add_ll(long long a, long long b, const char* where);
long long checked_mul_ll(long long a, long long b, const char* where);

std::string int128_to_string(int128 v);

// Exact rational number with 128-bit numerator and denominator, always kept
// in lowest terms with den > 0. All operations are overflow checked.
struct Rat {
  int128 num = 0;
  int128 den = 1;

  Rat() = default;
  Rat(long long n) : num(n), den(1) {}
  Rat(int128 n, int128 d);

  static Rat frac(long long n, long long d) { return Rat(int128(n), int128(d)); }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  bool is_nonneg() const { return num >= 0; }
  long long as_ll(const char* where = "Rat::as_ll") const;

  Rat operator-() const;
  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat& operator+=(const Rat& o) { *this = *this + o; return *this; }
  Rat& operator-=(const Rat& o) { *this = *this - o; return *this; }
  Rat& operator*=(const Rat& o) { *this = *this * o; return *this; }
  Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool operator<=(const Rat& o) const { return *this < o || *this == o; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool operator>=(const Rat& o) const { return o <= *this; }

  // "3", "-1/2"
  std::string str() const;
};

}  // namespace klsb
