#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lorenz {

/// Integer Laurent polynomial in one formal variable. Exponents are stored in
/// quarter units: key e stands for var^(e/4), so t^(1/2) is key 2 and A^3 is
/// key 12. Zero coefficients are never stored. Arithmetic throws Overflow
/// rather than wrapping.
class LaurentPoly {
public:
  using Coeff = std::int64_t;

  LaurentPoly() = default;
  /// Constant polynomial.
  LaurentPoly(Coeff c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int quarter_exponent, Coeff coeff = 1);
  /// var^power for a whole power.
  static LaurentPoly power(int power, Coeff coeff = 1) { return monomial(4 * power, coeff); }

  const std::map<int, Coeff>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Coeff coefficient(int quarter_exponent) const;
  int min_exponent() const;  // quarter units; zero polynomial throws
  int max_exponent() const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Substitute var -> var^(num/den) on every exponent; throws if some
  /// exponent does not stay on the quarter grid.
  LaurentPoly rescale_exponents(int num, int den) const;

  /// Sorted [quarter_exponent, coefficient] pairs.
  std::vector<std::pair<int, Coeff>> pairs() const;
  static LaurentPoly from_pairs(const std::vector<std::pair<int, Coeff>>& pairs);

  /// Human-readable form, e.g. "t + t^3 - t^4" or "-A^4 - A^-4".
  std::string to_string(std::string_view var = "t") const;

private:
  void add_term(int e, Coeff c);

  std::map<int, Coeff> terms_;
};

/// Exact division. Returns (quotient, remainder) with the remainder's
/// exponents strictly below the divisor's span; the divisor's lowest and
/// highest coefficients must be +-1.
std::pair<LaurentPoly, LaurentPoly> divide(const LaurentPoly& numerator, const LaurentPoly& divisor);

/// Quotient of a division that must be exact; throws DivisionRemainder otherwise.
LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& divisor);

}  // namespace lorenz
