#include "hallbase/words.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "hallbase/errors.hpp"

namespace hallbase {

DimVector Word::content(int n) const {
  DimVector d(static_cast<std::size_t>(n));
  for (int i : letters_) {
    if (i < 1 || i > n) throw InputError("letter " + std::to_string(i) + " is not a vertex");
    d[static_cast<std::size_t>(i - 1)] += 1;
  }
  return d;
}

std::string Word::str() const {
  std::string s;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(letters_[k]);
  }
  return s;
}

std::string Word::compact() const {
  if (std::any_of(letters_.begin(), letters_.end(), [](int i) { return i > 9; })) return str();
  std::string s;
  for (int i : letters_) s += static_cast<char>('0' + i);
  return s;
}

TightForm tight_form(const Word& w) {
  TightForm t;
  for (int i : w.letters()) {
    if (i < 1) throw InputError("invalid vertex label " + std::to_string(i));
    if (!t.empty() && t.back().vertex == i)
      ++t.back().exponent;
    else
      t.push_back({i, 1});
  }
  return t;
}

Word from_tight_form(const TightForm& t) {
  std::vector<int> letters;
  for (const auto& r : t) {
    if (r.exponent < 1 || r.vertex < 1) throw InputError("invalid tight form run");
    letters.insert(letters.end(), static_cast<std::size_t>(r.exponent), r.vertex);
  }
  return Word(std::move(letters));
}

int delta(const Word& w) {
  int s = 0;
  for (const auto& r : tight_form(w)) s += r.exponent * (r.exponent - 1) / 2;
  return s;
}

int epsilon(const Quiver& q, const Word& w) {
  // <e_a, e_b> = [a == b] − #{arrows a -> b}
  const int n = q.vertex_count();
  std::vector<int> form(static_cast<std::size_t>(n * n), 0);
  for (int a = 0; a < n; ++a) form[a * n + a] = 1;
  for (const auto& r : q.arrows()) form[(r.tail - 1) * n + (r.head - 1)] -= 1;
  int s = 0;
  std::vector<int> seen(static_cast<std::size_t>(n), 0);
  for (int b : w.letters()) {
    if (b < 1 || b > n) throw InputError("letter " + std::to_string(b) + " is not a vertex");
    for (int a = 0; a < n; ++a) s += seen[a] * form[a * n + (b - 1)];
    ++seen[b - 1];
  }
  return s;
}

Word parse_word(std::string_view text, int vertex_count) {
  std::vector<int> letters;
  const bool has_comma = text.find(',') != std::string_view::npos;
  if (!has_comma && text.size() > 1 && vertex_count > 9)
    throw InputError("words on quivers with more than 9 vertices must be comma-separated");
  if (has_comma) {
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(), [](unsigned char c) { return std::isspace(c); }),
                  token.end());
      if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("malformed word '" + std::string(text) + "'");
      letters.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("malformed word '" + std::string(text) + "'");
      letters.push_back(c - '0');
    }
  }
  for (int i : letters)
    if (i < 1 || i > vertex_count)
      throw InputError("letter " + std::to_string(i) + " is not a vertex of the quiver");
  return Word(std::move(letters));
}

std::vector<Word> words_with_content(const DimVector& content) {
  std::vector<int> letters;
  for (std::size_t i = 0; i < content.size(); ++i)
    letters.insert(letters.end(), static_cast<std::size_t>(content[i]), static_cast<int>(i + 1));
  std::vector<Word> out;
  do {
    out.emplace_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

}  // namespace hallbase
