#include "lorenz/modular.hpp"

#include <numeric>
#include <sstream>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

__extension__ typedef __int128 i128;

std::int64_t narrow(i128 v)
{
  if (v > INT64_MAX || v < INT64_MIN)
    throw Error(ErrorKind::Overflow, "matrix entry exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

int sign(i128 v) { return (v > 0) - (v < 0); }

// sign of (p + sqrt(disc)) for a non-square disc > 0
int sign_plus_sqrt(i128 p, i128 disc)
{
  if (p >= 0)
    return 1;
  return p * p < disc ? 1 : -1;
}

const Mat2Z kL{1, 1, 0, 1};
const Mat2Z kR{1, 0, 1, 1};
const Mat2Z kLinv{1, -1, 0, 1};
const Mat2Z kRinv{1, 0, -1, 1};

}  // namespace

Mat2Z Mat2Z::normalized() const noexcept
{
  const bool flip = trace() < 0 || (trace() == 0 && (c < 0 || (c == 0 && a < 0)));
  return flip ? Mat2Z{-a, -b, -c, -d} : *this;
}

Mat2Z operator*(const Mat2Z& x, const Mat2Z& y)
{
  return {narrow(i128{x.a} * y.a + i128{x.b} * y.c), narrow(i128{x.a} * y.b + i128{x.b} * y.d),
          narrow(i128{x.c} * y.a + i128{x.d} * y.c), narrow(i128{x.c} * y.b + i128{x.d} * y.d)};
}

std::string Mat2Z::to_string() const
{
  std::ostringstream os;
  os << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
  return os.str();
}

Mat2Z letter_matrix(char letter)
{
  if (letter == 'L')
    return kL;
  if (letter == 'R')
    return kR;
  throw Error(ErrorKind::InvalidLetter, "letter '" + std::string(1, letter) + "' is not L or R");
}

Mat2Z matrix_of_word(const CyclicWord& w)
{
  if (!w.has_both_letters())
    throw Error(ErrorKind::Parabolic, w.str() + " uses a single letter; its matrix is parabolic");
  Mat2Z m;
  for (char ch : w.str())
    m = m * letter_matrix(ch);
  return m;
}

CyclicWord word_of_matrix(const Mat2Z& input)
{
  if (input.det() != 1)
    throw Error(ErrorKind::InvalidParams, input.to_string() + " does not have determinant 1");
  if (!input.is_hyperbolic())
    throw Error(ErrorKind::NotHyperbolic, input.to_string() + " has |trace| <= 2");

  Mat2Z m = input.normalized();
  const i128 t = m.trace();
  const i128 disc = t * t - 4;

  // Track the attracting fixed point x = (a - d + sqrt(disc)) / (2c) through
  // conjugations until the matrix lands in the monoid generated by L and R.
  // Once x is positive the moves follow its Stern-Brocot path, which is
  // eventually periodic; on the periodic part the matrix is non-negative.
  constexpr int kMaxSteps = 1'000'000;
  for (int step = 0;; ++step) {
    if (step == kMaxSteps)
      throw Error(ErrorKind::Overflow, "conjugation did not reach the positive monoid");
    if (m.a >= 0 && m.b >= 0 && m.c >= 0 && m.d >= 0)
      break;
    const int sc = sign(m.c);
    const int x_sign = sign_plus_sqrt(i128{m.a} - m.d, disc) * sc;
    if (x_sign < 0) {
      m = kL * m * kLinv;  // x -> x + 1
      continue;
    }
    const int above_one = sign_plus_sqrt(i128{m.a} - m.d - 2 * i128{m.c}, disc) * sc;
    if (above_one > 0)
      m = kLinv * m * kL;  // x -> x - 1
    else
      m = kRinv * m * kR;  // x -> x / (1 - x)
  }

  std::string letters;
  while (!(m.a == 1 && m.b == 0 && m.c == 0 && m.d == 1)) {
    if (m.a >= m.c && m.b >= m.d) {
      letters.push_back('L');
      m = {m.a - m.c, m.b - m.d, m.c, m.d};
    } else if (m.c >= m.a && m.d >= m.b) {
      letters.push_back('R');
      m = {m.a, m.b, m.c - m.a, m.d - m.b};
    } else {
      throw Error(ErrorKind::InvalidParams, "non-negative matrix without a dominating row");
    }
  }
  return CyclicWord::canonicalize(letters);
}

std::int64_t rademacher(const CyclicWord& w)
{
  if (!w.has_both_letters())
    throw Error(ErrorKind::Parabolic, w.str() + " uses a single letter");
  return static_cast<std::int64_t>(w.count('L')) - static_cast<std::int64_t>(w.count('R'));
}

namespace {

// T(h, k) = sum_{i=1}^{k-1} (2i - k)(2 (h i mod k) - k), skipping terms whose
// second sawtooth vanishes; s(h, k) = T / (4 k^2).
i128 dedekind_numerator(std::int64_t h, std::int64_t k)
{
  i128 total = 0;
  const std::int64_t hm = ((h % k) + k) % k;
  for (std::int64_t i = 1; i < k; ++i) {
    const std::int64_t r = static_cast<std::int64_t>((i128{hm} * i) % k);
    if (r == 0)
      continue;
    total += i128{2 * i - k} * i128{2 * r - k};
  }
  return total;
}

}  // namespace

Fraction dedekind_sum(std::int64_t h, std::int64_t k)
{
  if (k < 1)
    throw Error(ErrorKind::InvalidParams, "Dedekind sum needs k >= 1");
  i128 num = dedekind_numerator(h, k);
  i128 den = i128{4} * k * k;
  i128 g = num < 0 ? -num : num;
  i128 d = den;
  while (d != 0) {
    const i128 r = g % d;
    g = d;
    d = r;
  }
  if (g == 0)
    return {0, 1};
  return {narrow(num / g), narrow(den / g)};
}

std::int64_t rademacher_phi(const Mat2Z& input)
{
  Mat2Z m = input;
  if (m.c < 0)
    m = {-m.a, -m.b, -m.c, -m.d};
  if (m.c == 0)
    return m.b * m.d;  // b/d with d = +-1
  // Phi * c^2 = (a + d) c - 3 T(d, c)
  const i128 c = m.c;
  const i128 scaled = (i128{m.a} + m.d) * c - 3 * dedekind_numerator(m.d, m.c);
  if (scaled % (c * c) != 0)
    throw Error(ErrorKind::ParityError, "Rademacher Phi of " + input.to_string() + " is not an integer");
  return narrow(scaled / (c * c));
}

std::int64_t rademacher_psi(const Mat2Z& input)
{
  if (!input.is_hyperbolic())
    throw Error(ErrorKind::NotHyperbolic, input.to_string() + " has |trace| <= 2");
  Mat2Z m = input;
  if (m.c < 0)
    m = {-m.a, -m.b, -m.c, -m.d};
  return rademacher_phi(m) - 3 * sign(i128{m.c} * (i128{m.a} + m.d));
}

}  // namespace lorenz
