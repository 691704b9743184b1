#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "greengb/completion.hpp"
#include "greengb/green.hpp"
#include "greengb/presentation.hpp"

namespace greengb::testing {

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(GREENGB_FIXTURE_DIR) + "/" + name);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

inline Presentation fixture_presentation(const std::string& name) {
  return parse_presentation(read_fixture(name));
}

inline Word word_of(const std::string& text, const Alphabet& alphabet) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    auto letter = alphabet.index_of(token);
    if (!letter) throw std::invalid_argument("word_of: unknown generator " + token);
    letters.push_back(*letter);
  }
  return Word(std::move(letters));
}

inline Word random_word(std::mt19937_64& rng, std::size_t alphabet_size, std::size_t max_len,
                        bool allow_empty = false) {
  std::uniform_int_distribution<std::size_t> len_dist(allow_empty ? 0 : 1, max_len);
  std::uniform_int_distribution<int> letter_dist(0, static_cast<int>(alphabet_size) - 1);
  std::vector<int> letters(len_dist(rng));
  for (auto& l : letters) l = letter_dist(rng);
  return Word(std::move(letters));
}

/// Random nonzero polynomial with nonempty words.
inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t alphabet_size, Tag tag,
                                    std::size_t max_terms = 4, std::size_t max_len = 6) {
  std::uniform_int_distribution<std::size_t> terms_dist(1, max_terms);
  std::uniform_int_distribution<long> coeff_dist(-5, 5);
  while (true) {
    std::vector<std::pair<Word, Rational>> terms;
    const std::size_t n = terms_dist(rng);
    for (std::size_t t = 0; t < n; ++t) {
      long c = coeff_dist(rng);
      if (c == 0) c = 1;
      terms.emplace_back(random_word(rng, alphabet_size, max_len), Rational(c));
    }
    Polynomial p = Polynomial::from_terms(terms, tag);
    if (!p.is_zero()) return p;
  }
}

}  // namespace greengb::testing
