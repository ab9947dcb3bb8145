#pragma once

#include <cstdint>

namespace tracekit {

// Arithmetic in F_p for a word-sized prime p.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t s = std::uint64_t(a) + b;
    return s >= p_ ? std::uint32_t(s - p_) : std::uint32_t(s);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : std::uint32_t(a + std::uint64_t(p_) - b);
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return std::uint32_t((std::uint64_t(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // Multiplicative inverse; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;
  // Reduce an arbitrary signed integer into [0, p).
  std::uint32_t reduce(long long v) const;

  static bool is_prime(std::uint32_t n);

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_;
};

inline constexpr std::uint32_t kDefaultPrime = 32003;

}  // namespace tracekit
