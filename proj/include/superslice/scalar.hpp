#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace superslice {

/// Exact rational number, always in lowest terms with positive denominator.
using Scalar = mpq_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Scalar make_scalar(long num, long den = 1) {
  if (den == 0) throw Error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline Scalar make_scalar(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error("zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Scalar& q) { return q.get_str(); }

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline int bit(Parity p) { return static_cast<int>(p); }
inline Parity parity_of(int b) { return (b & 1) ? Parity::Odd : Parity::Even; }
inline Parity operator+(Parity a, Parity b) { return parity_of(bit(a) + bit(b)); }
inline Parity flip(Parity p) { return parity_of(bit(p) + 1); }

/// (-1)^e as a small integer.
inline int sign_pow(int e) { return (e & 1) ? -1 : 1; }

inline const char* parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

}  // namespace superslice
