#pragma once

#include <string>
#include <vector>

#include "klsb/rational.hpp"

namespace klsb {

// Dense polynomial with integer coefficients, used for Kazhdan-Lusztig
// polynomials in the classical variable q. Invariant: no trailing zeros.
struct PolyZ {
  std::vector<long long> c;

  PolyZ() = default;
  explicit PolyZ(long long c0) { if (c0 != 0) c.push_back(c0); }

  static PolyZ monomial(long long a, int deg) {
    PolyZ p;
    if (a != 0) {
      p.c.assign(deg + 1, 0);
      p.c[deg] = a;
    }
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }  // -1 for zero
  long long coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[k] : 0; }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  PolyZ& operator+=(const PolyZ& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] = checked_add_ll(c[i], o.c[i], "PolyZ+");
    trim();
    return *this;
  }

  PolyZ& operator-=(const PolyZ& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] = checked_add_ll(c[i], -o.c[i], "PolyZ-");
    trim();
    return *this;
  }

  PolyZ operator+(const PolyZ& o) const { PolyZ r = *this; r += o; return r; }
  PolyZ operator-(const PolyZ& o) const { PolyZ r = *this; r -= o; return r; }

  PolyZ operator*(const PolyZ& o) const {
    PolyZ r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = checked_add_ll(r.c[i + j], checked_mul_ll(c[i], o.c[j], "PolyZ*"), "PolyZ*");
    }
    r.trim();
    return r;
  }

  // Add a * q^deg * o to this.
  void add_scaled_shifted(long long a, int deg, const PolyZ& o) {
    if (a == 0 || o.is_zero()) return;
    if (o.c.size() + deg > c.size()) c.resize(o.c.size() + deg, 0);
    for (size_t i = 0; i < o.c.size(); ++i)
      c[i + deg] = checked_add_ll(c[i + deg], checked_mul_ll(a, o.c[i], "PolyZ ss"), "PolyZ ss");
    trim();
  }

  long long eval_one() const {
    long long s = 0;
    for (long long v : c) s = checked_add_ll(s, v, "PolyZ(1)");
    return s;
  }

  bool operator==(const PolyZ& o) const { return c == o.c; }

  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (int k = 0; k < int(c.size()); ++k) {
      if (c[k] == 0) continue;
      if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
      else if (c[k] < 0) s += "-";
      long long a = c[k] > 0 ? c[k] : -c[k];
      if (a != 1 || k == 0) s += std::to_string(a);
      if (k >= 1) {
        s += "q";
        if (k >= 2) s += "^" + std::to_string(k);
      }
    }
    return s;
  }
};

// Dense polynomial with rational coefficients; used for dimension polynomials.
struct PolyQ {
  std::vector<Rat> c;

  PolyQ() = default;

  bool is_zero() const { return c.empty(); }
  int degree() const { return int(c.size()) - 1; }
  Rat coeff(int k) const { return (k >= 0 && k < int(c.size())) ? c[k] : Rat(0); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  static PolyQ constant(const Rat& a) {
    PolyQ p;
    if (!a.is_zero()) p.c.push_back(a);
    return p;
  }

  // a*t + b
  static PolyQ linear(const Rat& a, const Rat& b) {
    PolyQ p;
    p.c = {b, a};
    p.trim();
    return p;
  }

  PolyQ& operator+=(const PolyQ& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    trim();
    return *this;
  }

  PolyQ operator+(const PolyQ& o) const { PolyQ r = *this; r += o; return r; }

  PolyQ operator*(const PolyQ& o) const {
    PolyQ r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, Rat(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] += c[i] * o.c[j];
    r.trim();
    return r;
  }

  PolyQ scaled(const Rat& a) const {
    PolyQ r = *this;
    for (auto& x : r.c) x *= a;
    r.trim();
    return r;
  }

  void add_scaled(const Rat& a, const PolyQ& o) { *this += o.scaled(a); }

  Rat eval(const Rat& x) const {
    Rat s(0);
    for (int k = degree(); k >= 0; --k) s = s * x + c[k];
    return s;
  }

  int low_degree() const {
    for (int k = 0; k < int(c.size()); ++k)
      if (!c[k].is_zero()) return k;
    return -1;
  }

  bool operator==(const PolyQ& o) const { return c == o.c; }

  // "1/4q + 11/24q^2"; variable name is caller's choice.
  std::string str(const char* var = "q") const {
    if (c.empty()) return "0";
    std::string s;
    for (int k = 0; k < int(c.size()); ++k) {
      if (c[k].is_zero()) continue;
      Rat a = c[k];
      if (!s.empty()) {
        s += a.num > 0 ? " + " : " - ";
        if (a.num < 0) a = -a;
      }
      bool unit = (a == Rat(1)) && k > 0;
      if (!unit) s += a.str();
      if (k >= 1) {
        if (!unit) s += "*";
        s += var;
        if (k >= 2) s += "^" + std::to_string(k);
      }
    }
    return s;
  }
};

// Sparse-window Laurent polynomial over the integers, used for Hecke algebra
// coefficients in the variable v (v^2 = q). Stored densely over [lo, lo+n).
struct LaurentZ {
  int lo = 0;
  std::vector<long long> c;

  LaurentZ() = default;

  static LaurentZ monomial(long long a, int exp) {
    LaurentZ p;
    if (a != 0) {
      p.lo = exp;
      p.c.assign(1, a);
    }
    return p;
  }

  bool is_zero() const { return c.empty(); }
  int min_exp() const { return lo; }                      // undefined on zero
  int max_exp() const { return lo + int(c.size()) - 1; }  // undefined on zero

  long long coeff(int e) const {
    int k = e - lo;
    return (k >= 0 && k < int(c.size())) ? c[k] : 0;
  }

  void normalize() {
    size_t b = 0;
    while (b < c.size() && c[b] == 0) ++b;
    size_t t = c.size();
    while (t > b && c[t - 1] == 0) --t;
    if (b == t) {
      c.clear();
      lo = 0;
      return;
    }
    if (b > 0) c.erase(c.begin(), c.begin() + b);
    c.resize(t - b);
    lo += int(b);
  }

  void add_scaled_shifted(long long a, int exp, const LaurentZ& o) {
    if (a == 0 || o.is_zero()) return;
    int nlo = o.lo + exp;
    if (is_zero()) {
      lo = nlo;
      c.assign(o.c.size(), 0);
    } else {
      int merged_lo = std::min(lo, nlo);
      int merged_hi = std::max(max_exp(), nlo + int(o.c.size()) - 1);
      if (merged_lo < lo) {
        c.insert(c.begin(), size_t(lo - merged_lo), 0);
        lo = merged_lo;
      }
      if (merged_hi > max_exp()) c.resize(size_t(merged_hi - lo + 1), 0);
    }
    for (size_t i = 0; i < o.c.size(); ++i) {
      size_t k = size_t(nlo - lo) + i;
      c[k] = checked_add_ll(c[k], checked_mul_ll(a, o.c[i], "LaurentZ ss"), "LaurentZ ss");
    }
    normalize();
  }

  LaurentZ& operator+=(const LaurentZ& o) { add_scaled_shifted(1, 0, o); return *this; }
  LaurentZ& operator-=(const LaurentZ& o) { add_scaled_shifted(-1, 0, o); return *this; }
  LaurentZ operator+(const LaurentZ& o) const { LaurentZ r = *this; r += o; return r; }
  LaurentZ operator-(const LaurentZ& o) const { LaurentZ r = *this; r -= o; return r; }

  LaurentZ operator*(const LaurentZ& o) const {
    LaurentZ r;
    if (is_zero() || o.is_zero()) return r;
    r.lo = lo + o.lo;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j)
        r.c[i + j] = checked_add_ll(r.c[i + j], checked_mul_ll(c[i], o.c[j], "LaurentZ*"), "LaurentZ*");
    }
    r.normalize();
    return r;
  }

  // v -> v^{-1}
  LaurentZ bar() const {
    LaurentZ r;
    if (is_zero()) return r;
    r.c.assign(c.rbegin(), c.rend());
    r.lo = -max_exp();
    return r;
  }

  long long eval_one() const {
    long long s = 0;
    for (long long v : c) s = checked_add_ll(s, v, "LaurentZ(1)");
    return s;
  }

  bool operator==(const LaurentZ& o) const { return lo == o.lo && c == o.c; }
  bool operator!=(const LaurentZ& o) const { return !(*this == o); }

  std::string str() const {
    if (c.empty()) return "0";
    std::string s;
    for (int k = 0; k < int(c.size()); ++k) {
      if (c[k] == 0) continue;
      int e = lo + k;
      if (!s.empty()) s += c[k] > 0 ? " + " : " - ";
      else if (c[k] < 0) s += "-";
      long long a = c[k] > 0 ? c[k] : -c[k];
      if (a != 1 || e == 0) s += std::to_string(a);
      if (e != 0) {
        s += "v";
        if (e != 1) s += "^" + std::to_string(e);
      }
    }
    return s;
  }
};

}  // namespace klsb
