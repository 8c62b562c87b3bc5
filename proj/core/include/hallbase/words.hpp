#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hallbase/quiver.hpp"

namespace hallbase {

/// A word i_1 i_2 ... i_m over the vertex alphabet.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<int> letters) : letters_(letters) {}

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }
  const std::vector<int>& letters() const { return letters_; }

  /// Letter multiset as a dimension vector on `n` vertices.
  DimVector content(int n) const;

  /// Comma-separated labels, "1,2,3,4,4".
  std::string str() const;
  /// Digit string "12344" when every letter is < 10, otherwise str().
  std::string compact() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<int> letters_;
};

/// One run j^e of a tight form.
struct Run {
  int vertex = 0;
  int exponent = 0;
  friend bool operator==(const Run&, const Run&) = default;
};

using TightForm = std::vector<Run>;

TightForm tight_form(const Word& w);
Word from_tight_form(const TightForm& t);

/// δ(w) = Σ_r e_r(e_r − 1)/2 over the runs of the tight form.
int delta(const Word& w);
/// ε(w) = Σ_{r<s} <dim S_{i_r}, dim S_{i_s}>.
int epsilon(const Quiver& q, const Word& w);

/// Accepts "1,2,3,4,4" always and "12344" when the quiver has at most 9
/// vertices. Letters are validated against 1..vertex_count.
Word parse_word(std::string_view text, int vertex_count);

/// All words with the given letter content, in lexicographic order.
std::vector<Word> words_with_content(const DimVector& content);

}  // namespace hallbase
