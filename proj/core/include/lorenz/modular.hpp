#pragma once

#include <cstdint>
#include <string>

#include "lorenz/words.hpp"

namespace lorenz {

/// 2x2 integer matrix of determinant 1, compared projectively (A ~ -A).
struct Mat2Z {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  std::int64_t trace() const noexcept { return a + d; }
  std::int64_t det() const noexcept { return a * d - b * c; }
  bool is_hyperbolic() const noexcept { return trace() > 2 || trace() < -2; }

  /// Representative with non-negative trace (and c >= 0 when the trace is 0).
  Mat2Z normalized() const noexcept;
  Mat2Z inverse() const noexcept { return {d, -b, -c, a}; }

  friend Mat2Z operator*(const Mat2Z& x, const Mat2Z& y);
  friend bool operator==(const Mat2Z& x, const Mat2Z& y) noexcept
  {
    return (x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d) ||
           (x.a == -y.a && x.b == -y.b && x.c == -y.c && x.d == -y.d);
  }

  std::string to_string() const;
};

/// L = [[1,1],[0,1]], R = [[1,0],[1,1]].
Mat2Z letter_matrix(char letter);

/// Product of letter matrices in word order. Throws Parabolic unless the
/// word contains both letters.
Mat2Z matrix_of_word(const CyclicWord& w);

/// Canonical cyclic word whose matrix is conjugate to A in PSL(2,Z).
/// Throws NotHyperbolic for |trace| <= 2, PeriodicWord if A is a proper
/// power of a primitive class.
CyclicWord word_of_matrix(const Mat2Z& m);

/// Rademacher function via letter counts: #L - #R. Throws Parabolic.
std::int64_t rademacher(const CyclicWord& w);

/// Dedekind sum s(h, k) for k >= 1 as an exact fraction (reduced).
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};
Fraction dedekind_sum(std::int64_t h, std::int64_t k);

/// Rademacher Phi from the Dedekind-sum transformation law:
/// Phi(A) = (a + d)/c - 12 s(d, c) for c > 0 (A is replaced by -A when c < 0).
/// Exact; throws ParityError if the value is not an integer.
std::int64_t rademacher_phi(const Mat2Z& m);

/// Psi(A) = Phi(A) - 3 sign(c (a + d)). Conjugacy invariant on hyperbolic
/// classes. Throws NotHyperbolic.
std::int64_t rademacher_psi(const Mat2Z& m);

}  // namespace lorenz
