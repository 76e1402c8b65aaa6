#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "griddom/tropical.hpp"

namespace griddom {

inline constexpr int kMaxWordLength = 16;

/// A word over {0,1,2} with no adjacent 0/2 pair.
///
/// Letter 0 marks a vertex of the set, 1 a dominated vertex outside it, 2 an
/// undominated vertex. Letters are packed two bits each with the first letter
/// most significant, so numeric order of codes equals lexicographic order.
/// Positions are 0-based in this API.
class Word {
 public:
  Word() = default;

  /// Throws InputError for a bad length, letter, or a 02/20 factor.
  static Word from_letters(const std::vector<int>& letters);
  /// Parses "0121"-style strings.
  static Word parse(std::string_view text);
  /// k copies of `letter`.
  static Word uniform(int k, int letter);
  /// Unchecked construction from a packed code.
  static Word from_code(int k, std::uint32_t code) { return Word(k, code); }

  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] std::uint32_t code() const { return code_; }
  [[nodiscard]] int operator[](int pos) const {
    return static_cast<int>((code_ >> (2 * (length_ - 1 - pos))) & 3U);
  }
  /// |w|_a
  [[nodiscard]] int count(int letter) const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Word(int k, std::uint32_t code) : length_(k), code_(code) {}

  int length_ = 0;
  std::uint32_t code_ = 0;
};

/// True when no two consecutive letters are {0,2} and all letters are < 3.
[[nodiscard]] bool is_valid_code(int k, std::uint32_t code);

/// Number of valid words of length k, via a_k = 2 a_{k-1} + a_{k-2}.
[[nodiscard]] std::uint64_t count_closed_form(int k);

/// All valid words of one length in lexicographic order; index = rank.
class WordTable {
 public:
  explicit WordTable(int k);

  [[nodiscard]] int length() const { return length_; }
  [[nodiscard]] std::size_t size() const { return codes_.size(); }
  [[nodiscard]] Word word(std::size_t index) const { return Word::from_code(length_, codes_[index]); }
  [[nodiscard]] const std::vector<std::uint32_t>& codes() const { return codes_; }

  /// Throws InputError if `w` has the wrong length or is not in the table.
  [[nodiscard]] std::size_t rank(const Word& w) const;
  [[nodiscard]] std::size_t rank_code(std::uint32_t code) const;

 private:
  int length_;
  std::vector<std::uint32_t> codes_;
};

[[nodiscard]] WordTable enumerate_words(int k);

/// w[i] + w2[i] <= 2 for every position except the last one.
[[nodiscard]] bool compatible(const Word& w, const Word& w2);

/// Overlap of the closed neighbourhoods of two glued pieces reading words
/// `w` and `w2` on facing rows.
[[nodiscard]] int overlap_loss(const Word& w, const Word& w2);

/// Gluing matrix: +inf for incompatible pairs, overlap_loss otherwise.
[[nodiscard]] TropicalMatrix build_L(const WordTable& table);

}  // namespace griddom
