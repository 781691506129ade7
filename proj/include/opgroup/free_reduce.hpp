#pragma once

#include <vector>

namespace opgroup {

// Letter must provide `bool is_inverse_of(const Letter&) const`.
//
// Appending through a stack is the same as deleting adjacent inverse pairs
// leftmost-first until nothing changes; free reduction is confluent, so any
// deletion order reaches this result.
template <class Letter>
void append_reduced(std::vector<Letter>& out, const Letter& next) {
  if (!out.empty() && out.back().is_inverse_of(next)) {
    out.pop_back();
  } else {
    out.push_back(next);
  }
}

template <class Letter>
std::vector<Letter> free_reduce(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (const Letter& letter : letters) append_reduced(out, letter);
  return out;
}

template <class Letter>
bool is_freely_reduced(const std::vector<Letter>& letters) {
  for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
    if (letters[i].is_inverse_of(letters[i + 1])) return false;
  }
  return true;
}

}  // namespace opgroup
