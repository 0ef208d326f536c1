#include "lorenz/words.hpp"

#include <algorithm>
#include <set>

#include "lorenz/error.hpp"

namespace lorenz {

std::string_view to_string(ErrorKind kind) noexcept
{
  switch (kind) {
  case ErrorKind::EmptyWord: return "EmptyWord";
  case ErrorKind::InvalidLetter: return "InvalidLetter";
  case ErrorKind::PeriodicWord: return "PeriodicWord";
  case ErrorKind::DuplicateComponent: return "DuplicateComponent";
  case ErrorKind::OddInterCrossings: return "OddInterCrossings";
  case ErrorKind::NotAKnot: return "NotAKnot";
  case ErrorKind::ParityError: return "ParityError";
  case ErrorKind::InvalidParams: return "InvalidParams";
  case ErrorKind::Infeasible: return "Infeasible";
  case ErrorKind::TooManyCrossings: return "TooManyCrossings";
  case ErrorKind::NotCoprime: return "NotCoprime";
  case ErrorKind::DivisionRemainder: return "DivisionRemainder";
  case ErrorKind::Overflow: return "Overflow";
  case ErrorKind::Parabolic: return "Parabolic";
  case ErrorKind::NotHyperbolic: return "NotHyperbolic";
  case ErrorKind::NonFinite: return "NonFinite";
  case ErrorKind::NoEvents: return "NoEvents";
  case ErrorKind::AmbiguousSymbol: return "AmbiguousSymbol";
  case ErrorKind::BadFilter: return "BadFilter";
  case ErrorKind::IOError: return "IOError";
  case ErrorKind::CapExceeded: return "CapExceeded";
  case ErrorKind::CorruptRecord: return "CorruptRecord";
  }
  return "Unknown";
}

// Booth's least-rotation algorithm, O(n).
std::size_t least_rotation_offset(std::string_view s)
{
  const std::size_t n = s.size();
  if (n == 0)
    return 0;
  std::vector<long> fail(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const char sj = s[j % n];
    long i = fail[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n])
        k = j - i - 1;
      i = fail[i];
    }
    if (sj != s[(k + i + 1) % n]) {
      // i == -1 here
      if (sj < s[k % n])
        k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

bool is_periodic(std::string_view s)
{
  if (s.size() < 2)
    return false;
  std::string doubled;
  doubled.reserve(2 * s.size());
  doubled.append(s);
  doubled.append(s);
  return doubled.find(s, 1) < s.size();
}

bool precedes_infinite(std::string_view u, std::string_view v)
{
  // u+v < v+u without allocating
  const std::size_t total = u.size() + v.size();
  for (std::size_t i = 0; i < total; ++i) {
    const char a = i < u.size() ? u[i] : v[i - u.size()];
    const char b = i < v.size() ? v[i] : u[i - v.size()];
    if (a != b)
      return a < b;
  }
  return false;
}

CyclicWord CyclicWord::canonicalize(std::string_view raw)
{
  if (raw.empty())
    throw Error(ErrorKind::EmptyWord, "word has no letters");
  for (char c : raw) {
    if (c != 'L' && c != 'R')
      throw Error(ErrorKind::InvalidLetter, "letter '" + std::string(1, c) + "' is not L or R");
  }
  if (is_periodic(raw))
    throw Error(ErrorKind::PeriodicWord, std::string(raw) + " is a proper power");

  const std::size_t k = least_rotation_offset(raw);
  std::string out;
  out.reserve(raw.size());
  out.append(raw.substr(k));
  out.append(raw.substr(0, k));
  return CyclicWord(std::move(out));
}

std::size_t CyclicWord::count(char letter) const noexcept
{
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

bool CyclicWord::has_both_letters() const noexcept
{
  return count('L') > 0 && count('R') > 0;
}

std::string CyclicWord::rotation(std::size_t k) const
{
  k %= letters_.size();
  return letters_.substr(k) + letters_.substr(0, k);
}

std::size_t LinkWords::total_length() const noexcept
{
  std::size_t total = 0;
  for (const auto& w : words)
    total += w.size();
  return total;
}

LinkWords validate_link(std::span<const std::string> raw_words)
{
  if (raw_words.empty())
    throw Error(ErrorKind::EmptyWord, "a link needs at least one component");
  LinkWords link;
  std::set<std::string> seen;
  for (const auto& raw : raw_words) {
    auto w = CyclicWord::canonicalize(raw);
    if (!seen.insert(w.str()).second)
      throw Error(ErrorKind::DuplicateComponent, "cyclic word " + w.str() + " appears twice");
    link.words.push_back(std::move(w));
  }
  return link;
}

std::vector<CyclicWord> enumerate_length(std::size_t length)
{
  std::vector<CyclicWord> out;
  if (length == 0)
    return out;
  // Duval's generator: Lyndon words in lexicographic order. Letters are
  // 0 = L, 1 = R; a Lyndon word is exactly a least rotation of an
  // aperiodic word.
  std::vector<int> w{-1};
  while (!w.empty()) {
    ++w.back();
    const std::size_t m = w.size();
    if (m == length) {
      std::string s(length, 'L');
      for (std::size_t j = 0; j < length; ++j)
        s[j] = w[j] ? 'R' : 'L';
      out.push_back(CyclicWord(std::move(s)));
    }
    while (w.size() < length)
      w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == 1)
      w.pop_back();
  }
  return out;
}

std::vector<CyclicWord> enumerate(std::size_t max_len)
{
  std::vector<CyclicWord> out;
  for (std::size_t n = 1; n <= max_len; ++n) {
    auto level = enumerate_length(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

namespace {

int moebius(std::size_t n)
{
  int result = 1;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      result = -result;
    }
  }
  if (n > 1)
    result = -result;
  return result;
}

}  // namespace

std::size_t necklace_count(std::size_t n)
{
  if (n == 0)
    return 0;
  long long sum = 0;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0)
      sum += moebius(d) * (1LL << (n / d));
  }
  return static_cast<std::size_t>(sum / static_cast<long long>(n));
}

CyclicWord involute(const CyclicWord& w)
{
  std::string swapped = w.str();
  for (char& c : swapped)
    c = (c == 'L') ? 'R' : 'L';
  return CyclicWord::canonicalize(swapped);
}

}  // namespace lorenz
