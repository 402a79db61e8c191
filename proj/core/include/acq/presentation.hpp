#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace acq {

struct Syllable {
  std::size_t generator = 0;
  long exponent = 1;
  bool operator==(const Syllable&) const = default;
};

// A freely reduced syllable sequence: adjacent syllables use distinct
// generators and no exponent is zero. No cyclic reduction.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> syllables);
  Word(std::initializer_list<Syllable> syllables);

  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool empty() const { return syllables_.empty(); }
  std::size_t size() const { return syllables_.size(); }
  // Sum of |exponent| over syllables.
  std::size_t letter_count() const;
  Word inverse() const;

  friend Word operator*(const Word& a, const Word& b);
  bool operator==(const Word&) const = default;

  static std::vector<Syllable> normalize(std::vector<Syllable> syllables);

 private:
  std::vector<Syllable> syllables_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t generator_count() const { return generators.size(); }
  std::size_t relator_count() const { return relators.size(); }
  bool operator==(const Presentation&) const = default;
};

// Grammar: "<" [name ("," name)*] "|" [word ("," word)*] ">", word = syllable+ or "1",
// syllable = name ["^" integer]. Runs of letters and digits are split into
// declared generator names by longest match, so "xyx^-1y" reads as x y x^-1 y.
Presentation parse_presentation(std::string_view text);
std::string to_string(const Presentation& p);
std::string to_string(const Word& w, const std::vector<std::string>& names);

struct SwapRelators {
  std::size_t j = 0;
  std::size_t k = 0;
};
// R_j <- g R_j g^-1
struct Conjugate {
  std::size_t j = 0;
  Word g;
};
struct InvertRelator {
  std::size_t j = 0;
};
// R_j <- R_j R_k
struct MultiplyRelator {
  std::size_t j = 0;
  std::size_t k = 0;
};
// Adds a generator with the given name and the relator consisting of it.
struct Stabilize {
  std::string name;
};
// Removes a generator whose only occurrence is a relator equal to it (or its inverse).
struct Destabilize {
  std::size_t generator = 0;
};

using ACMove =
    std::variant<SwapRelators, Conjugate, InvertRelator, MultiplyRelator, Stabilize, Destabilize>;

// Throws IndexOutOfRange or IllegalDestabilize.
Presentation apply_move(const Presentation& p, const ACMove& m);
bool can_destabilize(const Presentation& p, std::size_t generator);

ACMove random_move(const Presentation& p, std::mt19937_64& rng);
ACMove random_move(const Presentation& p, std::uint64_t seed);

// One-line forms such as "multiply 0 1" or "conjugate 2 x^-1 y", relative to the
// presentation the move is applied to. Indices are zero-based.
std::string to_string(const ACMove& m, const Presentation& before);
ACMove parse_move(std::string_view text, const Presentation& before);

// E[k][j] = exponent sum of generator k in relator j.
std::vector<std::vector<long>> exponent_matrix(const Presentation& p);

}  // namespace acq
