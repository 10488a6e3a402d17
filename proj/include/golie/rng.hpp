#ifndef GOLIE_RNG_HPP
#define GOLIE_RNG_HPP

#include <cstdint>
#include <random>

#include "golie/linalg.hpp"
#include "golie/scalar.hpp"

namespace golie {

/// Deterministic seeded generator. Raw mt19937_64 output is reduced by hand
/// (no std distributions) so sample streams are identical across platforms.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  /// Uniform-ish integer in [lo, hi]; bias is irrelevant for sampling duty.
  long int_in(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  /// Small rational with numerator in [-4,4] and denominator in {1,2,3}.
  Rat rat_small() {
    long num = int_in(-4, 4);
    long den = int_in(1, 3);
    Rat r(num, den);
    r.canonicalize();
    return r;
  }

  Rat rat_small_nonzero() {
    for (;;) {
      Rat r = rat_small();
      if (sgn(r) != 0) return r;
    }
  }

  /// Small dyadic double in [-2, 2]; dyadics keep report bytes reproducible.
  double double_small() { return static_cast<double>(int_in(-16, 16)) / 8.0; }

  template <class K>
  K scalar_small() {
    if constexpr (scalar_traits<K>::is_exact)
      return rat_small();
    else
      return double_small();
  }

  template <class K>
  Vec<K> vec_small(int n) {
    Vec<K> v(n);
    for (auto& e : v) e = scalar_small<K>();
    return v;
  }

  template <class K>
  Vec<K> vec_small_nonzero(int n) {
    for (;;) {
      Vec<K> v = vec_small<K>(n);
      if (!is_zero_vec(v, 0.0)) return v;
    }
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace golie

#endif
