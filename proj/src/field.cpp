#include "tracekit/field.hpp"

#include <stdexcept>
#include <string>

namespace tracekit {

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) {
    throw std::runtime_error("field modulus " + std::to_string(p) +
                             " is not prime");
  }
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t base = a % p_;
  std::uint64_t acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return std::uint32_t(acc);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a == 0) throw std::runtime_error("division by zero in F_p");
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return std::uint32_t(r);
}

bool PrimeField::is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace tracekit
