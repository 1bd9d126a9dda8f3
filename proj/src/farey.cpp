#include "hypesi/farey.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "hypesi/scalar.hpp"

namespace hypesi {

RationalLabel RationalLabel::make(long p, long q) {
  if (p < 0 || q < 0) throw std::invalid_argument("out of scope: negative label");
  if (p == 0 && q == 0) throw std::invalid_argument("0/0 is not a label");
  if (std::gcd(p, q) != 1) throw std::invalid_argument("label not in lowest terms");
  return RationalLabel{p, q};
}

RationalLabel RationalLabel::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw std::invalid_argument("label must look like p/q");
  std::size_t used_p = 0, used_q = 0;
  long p = 0, q = 0;
  try {
    p = std::stol(text.substr(0, slash), &used_p);
    q = std::stol(text.substr(slash + 1), &used_q);
  } catch (const std::exception&) {
    throw std::invalid_argument("label must look like p/q");
  }
  if (used_p != slash || used_q != text.size() - slash - 1)
    throw std::invalid_argument("label must look like p/q");
  return make(p, q);
}

namespace {

// Stern-Brocot descent; 1/1 gets the base pair (0/1, 1/0).
FareyParents descend(const RationalLabel& x) {
  RationalLabel lo{0, 1}, hi{1, 0};
  while (true) {
    const RationalLabel mid{lo.p + hi.p, lo.q + hi.q};
    if (mid == x) return {lo, hi};
    // x < mid  <=>  x.p * mid.q < mid.p * x.q
    if (x.p * mid.q < mid.p * x.q)
      hi = mid;
    else
      lo = mid;
  }
}

bool is_palindrome(const std::string& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

class WordCache {
 public:
  std::optional<PrimitiveWord> find(const RationalLabel& x) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = words_.find({x.p, x.q});
    if (it == words_.end()) return std::nullopt;
    return it->second;
  }
  void insert(const PrimitiveWord& w) {
    std::lock_guard<std::mutex> lock(mutex_);
    words_.emplace(std::make_pair(w.label.p, w.label.q), w);
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<long, long>, PrimitiveWord> words_;
};

WordCache& cache() {
  static WordCache c;
  return c;
}

// Odd-length child of an even label: the palindromic ordering of its parents,
// if either ordering is one.
bool child_has_palindrome(const std::string& left, const std::string& right) {
  return is_palindrome(left + right) || is_palindrome(right + left);
}

PrimitiveWord build(const RationalLabel& x) {
  if (x == RationalLabel{0, 1}) return {"A", x, "", ""};
  if (x == RationalLabel{1, 0}) return {"B", x, "", ""};
  const FareyParents par = descend(x);
  const std::string l = primitive_word(par.left).letters;
  const std::string r = primitive_word(par.right).letters;
  if (!x.even()) {
    if (is_palindrome(l + r)) return {l + r, x, l, r};
    if (is_palindrome(r + l)) return {r + l, x, r, l};
    throw InvariantViolation("no palindromic ordering for " + x.str());
  }
  // Even: the ordering under which both Farey children can be palindromes.
  std::vector<std::pair<std::string, std::string>> good;
  for (const auto& [f, s] : {std::make_pair(l, r), std::make_pair(r, l)}) {
    const std::string w = f + s;
    if (child_has_palindrome(l, w) && child_has_palindrome(w, r)) good.emplace_back(f, s);
  }
  if (good.empty()) throw InvariantViolation("no admissible ordering for " + x.str());
  // Both orderings pass for every even label; left * right is kept.
  return {good.front().first + good.front().second, x, good.front().first, good.front().second};
}

}  // namespace

FareyParents farey_parents(const RationalLabel& x) {
  const RationalLabel chk = RationalLabel::make(x.p, x.q);
  if (chk == RationalLabel{0, 1} || chk == RationalLabel{1, 0} || chk == RationalLabel{1, 1})
    throw std::invalid_argument("no parents");
  return descend(chk);
}

std::vector<long> continued_fraction(const RationalLabel& x) {
  if (x.q == 0) throw std::invalid_argument("continued fraction of 1/0");
  std::vector<long> cf;
  long a = x.p, b = x.q;
  while (b != 0) {
    cf.push_back(a / b);
    const long r = a % b;
    a = b;
    b = r;
  }
  return cf;
}

bool PrimitiveWord::palindrome() const { return is_palindrome(letters); }

PrimitiveWord primitive_word(const RationalLabel& x) {
  const RationalLabel chk = RationalLabel::make(x.p, x.q);
  if (auto hit = cache().find(chk)) return *hit;
  PrimitiveWord w = build(chk);
  cache().insert(w);
  return w;
}

PrimitiveWord conjugate_partner(const RationalLabel& x) {
  const PrimitiveWord w = primitive_word(x);
  if (!x.even() || w.first.empty())
    throw std::invalid_argument("partner defined only for even labels");
  return {w.second + w.first, w.label, w.second, w.first};
}

std::optional<PalindromeSplit> palindrome_decomposition(const PrimitiveWord& w) {
  const std::size_t n = w.letters.size();
  if (n % 2 == 0 || !w.palindrome()) return std::nullopt;
  const std::size_t h = (n - 1) / 2;
  const std::string flank = w.letters.substr(0, h);
  return PalindromeSplit{flank, w.letters[h], std::string(flank.rbegin(), flank.rend())};
}

std::vector<RationalLabel> labels_up_to(long max_sum, bool include_base) {
  std::vector<RationalLabel> out;
  for (long n = 1; n <= max_sum; ++n)
    for (long p = 0; p <= n; ++p) {
      const long q = n - p;
      if (std::gcd(p, q) != 1) continue;
      if (!include_base && (p == 0 || q == 0)) continue;
      out.push_back({p, q});
    }
  return out;
}

}  // namespace hypesi
