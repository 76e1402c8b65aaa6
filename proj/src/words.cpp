#include "griddom/words.hpp"

#include <algorithm>

#include "griddom/errors.hpp"

namespace griddom {
namespace {

void check_length(int k) {
  if (k < 1 || k > kMaxWordLength) {
    throw InputError("word length must be in [1, " + std::to_string(kMaxWordLength) + "], got " +
                     std::to_string(k));
  }
}

void check_same_length(const Word& a, const Word& b) {
  if (a.length() != b.length()) {
    throw InputError("word length mismatch: " + std::to_string(a.length()) + " vs " +
                     std::to_string(b.length()));
  }
}

}  // namespace

bool is_valid_code(int k, std::uint32_t code) {
  int prev = -1;
  for (int pos = 0; pos < k; ++pos) {
    const int letter = static_cast<int>((code >> (2 * (k - 1 - pos))) & 3U);
    if (letter > 2) return false;
    if (prev >= 0 && prev + letter == 2 && prev != letter) return false;
    prev = letter;
  }
  return k == kMaxWordLength || (code >> (2 * k)) == 0;
}

Word Word::from_letters(const std::vector<int>& letters) {
  const int k = static_cast<int>(letters.size());
  check_length(k);
  std::uint32_t code = 0;
  for (int letter : letters) {
    if (letter < 0 || letter > 2) {
      throw InputError("word letters must be 0, 1 or 2, got " + std::to_string(letter));
    }
    code = (code << 2) | static_cast<std::uint32_t>(letter);
  }
  if (!is_valid_code(k, code)) throw InputError("word contains the factor 02 or 20");
  return Word(k, code);
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    if (ch < '0' || ch > '2') throw InputError("word letters must be 0, 1 or 2");
    letters.push_back(ch - '0');
  }
  return from_letters(letters);
}

Word Word::uniform(int k, int letter) { return from_letters(std::vector<int>(k, letter)); }

int Word::count(int letter) const {
  int total = 0;
  for (int pos = 0; pos < length_; ++pos) total += (*this)[pos] == letter;
  return total;
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(static_cast<std::size_t>(length_));
  for (int pos = 0; pos < length_; ++pos) out.push_back(static_cast<char>('0' + (*this)[pos]));
  return out;
}

std::uint64_t count_closed_form(int k) {
  check_length(k);
  std::uint64_t before = 1;  // a_0
  std::uint64_t current = 3; // a_1
  for (int i = 2; i <= k; ++i) {
    const std::uint64_t next = 2 * current + before;
    before = current;
    current = next;
  }
  return current;
}

WordTable::WordTable(int k) : length_(k) {
  check_length(k);
  codes_.reserve(count_closed_form(k));
  // Depth-first extension in letter order yields lexicographic order directly.
  std::vector<std::uint32_t> frontier{0, 1, 2};
  for (int len = 2; len <= k; ++len) {
    std::vector<std::uint32_t> grown;
    grown.reserve(frontier.size() * 3);
    for (auto code : frontier) {
      const auto last = code & 3U;
      for (std::uint32_t letter = 0; letter < 3; ++letter) {
        if (last + letter == 2 && last != letter) continue;
        grown.push_back((code << 2) | letter);
      }
    }
    frontier.swap(grown);
  }
  codes_ = std::move(frontier);
}

std::size_t WordTable::rank_code(std::uint32_t code) const {
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) throw InputError("word not in table");
  return static_cast<std::size_t>(it - codes_.begin());
}

std::size_t WordTable::rank(const Word& w) const {
  if (w.length() != length_) {
    throw InputError("word of length " + std::to_string(w.length()) + " looked up in table of " +
                     std::to_string(length_));
  }
  return rank_code(w.code());
}

WordTable enumerate_words(int k) { return WordTable(k); }

bool compatible(const Word& w, const Word& w2) {
  check_same_length(w, w2);
  for (int pos = 0; pos + 1 < w.length(); ++pos) {
    if (w[pos] + w2[pos] > 2) return false;
  }
  return true;
}

int overlap_loss(const Word& w, const Word& w2) {
  check_same_length(w, w2);
  int total = 0;
  for (int pos = 0; pos < w.length(); ++pos) {
    total += (w[pos] != 2 && w2[pos] == 0);
    total += (w2[pos] != 2 && w[pos] == 0);
  }
  return total;
}

TropicalMatrix build_L(const WordTable& table) {
  const std::size_t dim = table.size();
  TropicalMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const Word w = table.word(r);
    for (std::size_t c = r; c < dim; ++c) {
      const Word w2 = table.word(c);
      if (!compatible(w, w2)) continue;
      const auto v = static_cast<Entry>(overlap_loss(w, w2));
      out(r, c) = v;
      out(c, r) = v;
    }
  }
  return out;
}

}  // namespace griddom
