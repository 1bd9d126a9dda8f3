#pragma once

#include <string>
#include <string_view>

#include "hypesi/mobius.hpp"

namespace hypesi {

// Group words are strings over {A, B, a, b}; lowercase letters are inverses.

bool is_group_word(std::string_view w);
std::string free_reduce(std::string_view w);
std::string invert_word(std::string_view w);
/// Free reduction followed by cancellation between the two ends.
std::string cyclic_reduce(std::string_view w);
/// w^n for any integer n, freely reduced.
std::string word_power(std::string_view w, long n);

/// Product of generator matrices in reading order: "AB" is A * B.
MobiusMap evaluate(std::string_view w, const MobiusMap& a, const MobiusMap& b);

}  // namespace hypesi
