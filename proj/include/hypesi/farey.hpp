#pragma once

#include <optional>
#include <string>
#include <vector>

namespace hypesi {

/// Nonnegative rational p/q in lowest terms; 1/0 is allowed.
struct RationalLabel {
  long p = 0;
  long q = 1;

  /// Validates coprimality and sign; throws std::invalid_argument.
  static RationalLabel make(long p, long q);
  /// Parses "p/q". Negative labels raise "out of scope".
  static RationalLabel parse(const std::string& text);

  long sum() const { return p + q; }
  bool even() const { return (p + q) % 2 == 0; }
  std::string str() const { return std::to_string(p) + "/" + std::to_string(q); }

  friend bool operator==(const RationalLabel&, const RationalLabel&) = default;
};

/// l/m < r/s with |ls - mr| = 1 and l + r = p, m + s = q.
struct FareyParents {
  RationalLabel left;
  RationalLabel right;
};

/// Throws std::invalid_argument("no parents") on 0/1, 1/0 and 1/1.
FareyParents farey_parents(const RationalLabel& x);

/// Euclidean expansion [a0; a1, ..., ak], last term >= 2 when k >= 1.
std::vector<long> continued_fraction(const RationalLabel& x);

/// E_{p/q} over {A, B}: #A = q, #B = p. Words of odd length are palindromes;
/// an even-length word is stored with its factorization first * second into
/// the parents' words.
struct PrimitiveWord {
  std::string letters;
  RationalLabel label;
  std::string first;
  std::string second;

  bool palindrome() const;
  std::size_t length() const { return letters.size(); }
};

PrimitiveWord primitive_word(const RationalLabel& x);

/// The other product second * first; defined for even p + q.
PrimitiveWord conjugate_partner(const RationalLabel& x);

struct PalindromeSplit {
  std::string flank;
  char center;
  std::string reversed_flank;
};

/// W U reverse(W) for odd length, nothing for even length.
std::optional<PalindromeSplit> palindrome_decomposition(const PrimitiveWord& w);

/// All coprime labels p/q with p, q >= 0 and p + q <= max_sum, ordered by sum
/// then by p.
std::vector<RationalLabel> labels_up_to(long max_sum, bool include_base = true);

}  // namespace hypesi
