#include "lorenz/laurent_poly.hpp"

#include <sstream>

#include "lorenz/error.hpp"

namespace lorenz {

namespace {

using Coeff = LaurentPoly::Coeff;

Coeff checked_add(Coeff a, Coeff b)
{
  Coeff r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "coefficient addition overflowed");
  return r;
}

Coeff checked_mul(Coeff a, Coeff b)
{
  Coeff r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(ErrorKind::Overflow, "coefficient multiplication overflowed");
  return r;
}

}  // namespace

LaurentPoly::LaurentPoly(Coeff c)
{
  add_term(0, c);
}

LaurentPoly LaurentPoly::monomial(int quarter_exponent, Coeff coeff)
{
  LaurentPoly p;
  p.add_term(quarter_exponent, coeff);
  return p;
}

void LaurentPoly::add_term(int e, Coeff c)
{
  if (c == 0)
    return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = checked_add(it->second, c);
  if (it->second == 0)
    terms_.erase(it);
}

LaurentPoly::Coeff LaurentPoly::coefficient(int quarter_exponent) const
{
  auto it = terms_.find(quarter_exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::min_exponent() const
{
  if (terms_.empty())
    throw Error(ErrorKind::InvalidParams, "zero polynomial has no exponents");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
  if (terms_.empty())
    throw Error(ErrorKind::InvalidParams, "zero polynomial has no exponents");
  return terms_.rbegin()->first;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
  for (const auto& [e, c] : o.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
  for (const auto& [e, c] : o.terms_)
    add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
  LaurentPoly out;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_)
      out.add_term(e1 + e2, checked_mul(c1, c2));
  *this = std::move(out);
  return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
  LaurentPoly out;
  for (const auto& [e, c] : terms_)
    out.add_term(e, checked_mul(c, -1));
  return out;
}

LaurentPoly LaurentPoly::rescale_exponents(int num, int den) const
{
  LaurentPoly out;
  for (const auto& [e, c] : terms_) {
    const long long scaled = static_cast<long long>(e) * num;
    if (scaled % den != 0)
      throw Error(ErrorKind::InvalidParams, "exponent leaves the quarter grid");
    out.add_term(static_cast<int>(scaled / den), c);
  }
  return out;
}

std::vector<std::pair<int, LaurentPoly::Coeff>> LaurentPoly::pairs() const
{
  return {terms_.begin(), terms_.end()};
}

LaurentPoly LaurentPoly::from_pairs(const std::vector<std::pair<int, Coeff>>& pairs)
{
  LaurentPoly p;
  for (const auto& [e, c] : pairs)
    p.add_term(e, c);
  return p;
}

std::string LaurentPoly::to_string(std::string_view var) const
{
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Coeff mag = c < 0 ? -c : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << '*';
    os << var;
    if (e % 4 == 0) {
      if (e != 4)
        os << '^' << e / 4;
    } else if (e % 2 == 0) {
      os << "^(" << e / 2 << "/2)";
    } else {
      os << "^(" << e << "/4)";
    }
  }
  return os.str();
}

std::pair<LaurentPoly, LaurentPoly> divide(const LaurentPoly& numerator, const LaurentPoly& divisor)
{
  if (divisor.is_zero())
    throw Error(ErrorKind::InvalidParams, "division by zero polynomial");
  const Coeff lead = divisor.terms().rbegin()->second;
  if (lead != 1 && lead != -1)
    throw Error(ErrorKind::InvalidParams, "divisor must have leading coefficient +-1");

  const int d_hi = divisor.max_exponent();
  const int d_lo = divisor.min_exponent();
  LaurentPoly rem = numerator;
  LaurentPoly quot;
  if (rem.is_zero())
    return {quot, rem};
  // work in the polynomial ring after shifting the numerator's lowest term to 0
  const int n_lo = rem.min_exponent();
  while (!rem.is_zero() && rem.max_exponent() - n_lo >= d_hi - d_lo) {
    const int shift = rem.max_exponent() - d_hi;
    const Coeff factor = rem.terms().rbegin()->second * lead;  // lead is its own inverse
    auto step = LaurentPoly::monomial(shift, factor);
    quot += step;
    rem -= step * divisor;
  }
  return {quot, rem};
}

LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& divisor)
{
  auto [q, r] = divide(numerator, divisor);
  if (!r.is_zero())
    throw Error(ErrorKind::DivisionRemainder,
                "(" + numerator.to_string() + ") / (" + divisor.to_string() + ") leaves " + r.to_string());
  return q;
}

}  // namespace lorenz
