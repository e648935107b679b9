#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace cohenlab {

// seeded rng with explicit modulo reduction so frozen fixtures stay stable
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }

  bool coin() { return (eng_() & 1u) != 0; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[below(i)]);
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

 private:
  std::mt19937_64 eng_;
};

inline std::uint64_t fnv1a64(std::string_view s,
                             std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace cohenlab
