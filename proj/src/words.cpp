#include "hypesi/words.hpp"

#include <algorithm>

namespace hypesi {

namespace {
char inverse_letter(char c) {
  switch (c) {
    case 'A': return 'a';
    case 'a': return 'A';
    case 'B': return 'b';
    case 'b': return 'B';
  }
  throw std::invalid_argument(std::string("not a group letter: ") + c);
}
}  // namespace

bool is_group_word(std::string_view w) {
  return std::all_of(w.begin(), w.end(),
                     [](char c) { return c == 'A' || c == 'B' || c == 'a' || c == 'b'; });
}

std::string free_reduce(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (char c : w) {
    const char inv = inverse_letter(c);
    if (!out.empty() && out.back() == inv)
      out.pop_back();
    else
      out.push_back(c);
  }
  return out;
}

std::string invert_word(std::string_view w) {
  std::string out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse_letter(*it));
  return out;
}

std::string cyclic_reduce(std::string_view w) {
  std::string r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[hi - 1] == inverse_letter(r[lo])) {
    ++lo;
    --hi;
  }
  return r.substr(lo, hi - lo);
}

std::string word_power(std::string_view w, long n) {
  const std::string base = n >= 0 ? std::string(w) : invert_word(w);
  std::string out;
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) out += base;
  return free_reduce(out);
}

MobiusMap evaluate(std::string_view w, const MobiusMap& a, const MobiusMap& b) {
  const MobiusMap ai = inverse(a), bi = inverse(b);
  MobiusMap m;
  for (char c : w) {
    switch (c) {
      case 'A': m = m * a; break;
      case 'a': m = m * ai; break;
      case 'B': m = m * b; break;
      case 'b': m = m * bi; break;
      default: throw std::invalid_argument(std::string("not a group letter: ") + c);
    }
  }
  return m;
}

}  // namespace hypesi
