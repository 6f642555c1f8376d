#include "klsb/rational.hpp"

#include <cstdio>

namespace klsb {

[[noreturn]] void arithmetic_abort(const char* where) {
  std::fprintf(stderr, "klsb: exact arithmetic failure in %s\n", where);
  std::abort();
}

int128 checked_add(int128 a, int128 b, const char* where) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) arithmetic_abort(where);
  return r;
}

int128 checked_sub(int128 a, int128 b, const char* where) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) arithmetic_abort(where);
  return r;
}

int128 checked_mul(int128 a, int128 b, const char* where) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) arithmetic_abort(where);
  return r;
}

long long checked_add_ll(long long a, long long b, const char* where) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) arithmetic_abort(where);
  return r;
}

long long checked_mul_ll(long long a, long long b, const char* where) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) arithmetic_abort(where);
  return r;
}

std::string int128_to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // -2^127 negates to itself; it never appears because checked ops reject it
  // earlier, but guard anyway.
  unsigned __int128 u = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
  char buf[48];
  int n = 0;
  while (u > 0) {
    buf[n++] = char('0' + int(u % 10));
    u /= 10;
  }
  std::string s;
  if (neg) s.push_back('-');
  while (n > 0) s.push_back(buf[--n]);
  return s;
}

namespace {

int128 gcd128(int128 a, int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

Rat::Rat(int128 n, int128 d) {
  if (d == 0) arithmetic_abort("Rat: zero denominator");
  if (d < 0) {
    n = checked_sub(0, n, "Rat ctor");
    d = checked_sub(0, d, "Rat ctor");
  }
  int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  num = n;
  den = d;
}

long long Rat::as_ll(const char* where) const {
  if (den != 1) arithmetic_abort(where);
  if (num > int128(INT64_MAX) || num < int128(INT64_MIN)) arithmetic_abort(where);
  return (long long)num;
}

Rat Rat::operator-() const {
  Rat r;
  r.num = checked_sub(0, num, "Rat neg");
  r.den = den;
  return r;
}

Rat Rat::operator+(const Rat& o) const {
  // Reduce via gcd of denominators first to keep intermediates small.
  int128 g = gcd128(den, o.den);
  int128 da = den / g, db = o.den / g;
  int128 n = checked_add(checked_mul(num, db, "Rat+"), checked_mul(o.num, da, "Rat+"), "Rat+");
  int128 d = checked_mul(den, db, "Rat+");
  return Rat(n, d);
}

Rat Rat::operator-(const Rat& o) const { return *this + (-o); }

Rat Rat::operator*(const Rat& o) const {
  int128 g1 = gcd128(num, o.den);
  int128 g2 = gcd128(o.num, den);
  int128 n = checked_mul(num / g1, o.num / g2, "Rat*");
  int128 d = checked_mul(den / g2, o.den / g1, "Rat*");
  return Rat(n, d);
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) arithmetic_abort("Rat: division by zero");
  // Rat ctor normalizes the sign.
  return *this * Rat(o.den, o.num);
}

bool Rat::operator<(const Rat& o) const {
  // num/den < o.num/o.den with positive denominators.
  return checked_mul(num, o.den, "Rat<") < checked_mul(o.num, den, "Rat<");
}

std::string Rat::str() const {
  std::string s = int128_to_string(num);
  if (den != 1) {
    s.push_back('/');
    s += int128_to_string(den);
  }
  return s;
}

}  // namespace klsb
