#ifndef GOLIE_SCALAR_HPP
#define GOLIE_SCALAR_HPP

#include <cmath>
#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace golie {

/// Arbitrary-precision rational; the scalar type of exact-mode instances.
using Rat = mpq_class;

enum class Mode { exact, approx };

inline const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "approx"; }

inline Mode mode_from_string(const std::string& s) {
  if (s == "exact") return Mode::exact;
  if (s == "approx") return Mode::approx;
  throw std::runtime_error("unknown mode '" + s + "' (expected 'exact' or 'approx')");
}

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised by loaders/validators on malformed or contract-violating input.
struct ValidationError : Error {
  using Error::Error;
};

template <class K>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
  static constexpr bool is_exact = true;
  static constexpr Mode mode = Mode::exact;
  static double to_double(const Rat& x) { return x.get_d(); }
  static Rat from_long(long n) { return Rat(n); }
  static bool is_zero(const Rat& x, double /*eps*/ = 0) { return sgn(x) == 0; }
};

template <>
struct scalar_traits<double> {
  static constexpr bool is_exact = false;
  static constexpr Mode mode = Mode::approx;
  static double to_double(double x) { return x; }
  static double from_long(long n) { return static_cast<double>(n); }
  static bool is_zero(double x, double eps) { return std::abs(x) <= eps; }
};

template <class K>
inline double to_double(const K& x) {
  return scalar_traits<K>::to_double(x);
}

inline double abs_double(const Rat& x) { return std::abs(x.get_d()); }
inline double abs_double(double x) { return std::abs(x); }

/// Parses "p/q", "p", or a plain decimal string like "-1.25" into a rational.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw ValidationError("bad rational literal '" + s + "'");
    if (den == 0) throw ValidationError("zero denominator in '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) {
    mpz_class num;
    if (num.set_str(s, 10) != 0) throw ValidationError("bad rational literal '" + s + "'");
    return Rat(num);
  }
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  mpz_class num;
  if (num.set_str(digits, 10) != 0) throw ValidationError("bad rational literal '" + s + "'");
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

/// Best rational approximation of x with denominator <= max_den (continued fractions).
/// Used to recover exact subspace bases from floating-point eigenvector data.
inline Rat rat_from_double_approx(double x, unsigned long max_den = 1000000UL) {
  if (!std::isfinite(x)) throw Error("cannot rationalize non-finite value");
  bool neg = x < 0;
  double v = neg ? -x : x;
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(frac);
    if (fl > 9e18) break;
    mpz_class a(static_cast<unsigned long>(fl));
    mpz_class p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > mpz_class(max_den)) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return Rat(0);
  Rat r(p1, q1);
  r.canonicalize();
  return neg ? Rat(-r) : r;
}

}  // namespace golie

#endif
