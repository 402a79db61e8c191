#include "acq/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>
#include <stdexcept>

#include "acq/errors.hpp"

namespace acq {

Word::Word(std::vector<Syllable> syllables) : syllables_(normalize(std::move(syllables))) {}

Word::Word(std::initializer_list<Syllable> syllables)
    : syllables_(normalize(std::vector<Syllable>(syllables))) {}

std::vector<Syllable> Word::normalize(std::vector<Syllable> syllables) {
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (const Syllable& s : syllables) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::size_t Word::letter_count() const {
  std::size_t n = 0;
  for (const Syllable& s : syllables_) n += static_cast<std::size_t>(std::labs(s.exponent));
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> out(syllables_.rbegin(), syllables_.rend());
  for (Syllable& s : out) s.exponent = -s.exponent;
  return Word(std::move(out));
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> out = a.syllables_;
  out.insert(out.end(), b.syllables_.begin(), b.syllables_.end());
  return Word(std::move(out));
}

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : s_(text) {}

  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])) != 0) ++i_;
  }
  char peek() {
    skip_ws();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  bool at_end() {
    skip_ws();
    return i_ >= s_.size();
  }
  bool accept(char c) {
    if (peek() == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw ParseError(std::string("expected '") + c + "'" + found(), i_);
    }
  }
  std::string found() {
    if (at_end()) return ", found end of input";
    return std::string(", found '") + s_[i_] + "'";
  }
  std::size_t pos() const { return i_; }

  std::string identifier() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ >= s_.size() || !is_letter(s_[i_])) {
      throw ParseError("expected a name" + found(), i_);
    }
    while (i_ < s_.size() && (is_letter(s_[i_]) || is_digit(s_[i_]))) ++i_;
    return std::string(s_.substr(start, i_ - start));
  }

  long integer() {
    skip_ws();
    const std::size_t start = i_;
    if (i_ < s_.size() && s_[i_] == '-') ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && is_digit(s_[i_])) ++i_;
    if (i_ == digits) throw ParseError("expected an integer" + found(), i_);
    long value = 0;
    const char* first = s_.data() + start;
    auto [ptr, ec] = std::from_chars(first, s_.data() + i_, value);
    if (ec != std::errc() || ptr != s_.data() + i_) {
      throw ParseError("integer out of range", start);
    }
    return value;
  }

  void consume() { ++i_; }

 private:
  std::string_view s_;
  std::size_t i_ = 0;
};

std::vector<std::size_t> split_names(const std::string& run, std::size_t offset,
                                     const std::vector<std::string>& names) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < run.size()) {
    std::size_t best = names.size();
    std::size_t best_len = 0;
    for (std::size_t g = 0; g < names.size(); ++g) {
      const std::string& n = names[g];
      if (n.size() > best_len && run.compare(i, n.size(), n) == 0) {
        best = g;
        best_len = n.size();
      }
    }
    if (best == names.size()) throw UnknownGenerator(run.substr(i), offset + i);
    out.push_back(best);
    i += best_len;
  }
  return out;
}

Word parse_word(TextCursor& cur, const std::vector<std::string>& names) {
  if (cur.peek() == '1') {
    cur.consume();
    return Word();
  }
  std::vector<Syllable> syllables;
  while (is_letter(cur.peek())) {
    const std::size_t offset = cur.pos();
    const std::string run = cur.identifier();
    for (std::size_t g : split_names(run, offset, names)) syllables.push_back({g, 1});
    if (cur.accept('^')) {
      const std::size_t at = cur.pos();
      const long e = cur.integer();
      if (e == 0) throw ParseError("exponent 0 is not allowed", at);
      syllables.back().exponent = e;
    }
  }
  if (syllables.empty()) throw ParseError("expected a relator" + cur.found(), cur.pos());
  return Word(std::move(syllables));
}

std::string syllable_string(const Syllable& s, const std::vector<std::string>& names) {
  std::string out = names.at(s.generator);
  if (s.exponent != 1) out += "^" + std::to_string(s.exponent);
  return out;
}

void check_relator_index(const Presentation& p, std::size_t j) {
  if (j >= p.relators.size()) {
    throw IndexOutOfRange("relator index " + std::to_string(j) + " out of range");
  }
}

bool valid_name(const std::string& name) {
  if (name.empty() || !is_letter(name[0])) return false;
  return std::all_of(name.begin(), name.end(), [](char c) { return is_letter(c) || is_digit(c); });
}

std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

Presentation parse_presentation(std::string_view text) {
  TextCursor cur(text);
  Presentation p;
  cur.expect('<');
  if (cur.peek() != '|') {
    do {
      const std::size_t at = cur.pos();
      std::string name = cur.identifier();
      if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) {
        throw ParseError("duplicate generator '" + name + "'", at);
      }
      p.generators.push_back(std::move(name));
    } while (cur.accept(','));
  }
  cur.expect('|');
  if (cur.peek() != '>') {
    do {
      p.relators.push_back(parse_word(cur, p.generators));
    } while (cur.accept(','));
  }
  cur.expect('>');
  if (!cur.at_end()) throw ParseError("trailing input", cur.pos());
  return p;
}

std::string to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += syllable_string(s, names);
  }
  return out;
}

std::string to_string(const Presentation& p) {
  std::string out = "<";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    out += (i == 0 ? "" : ", ") + p.generators[i];
  }
  out += p.generators.empty() ? "| " : " | ";
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    out += (j == 0 ? "" : ", ") + to_string(p.relators[j], p.generators);
  }
  return out + ">";
}

bool can_destabilize(const Presentation& p, std::size_t generator) {
  if (generator >= p.generators.size()) return false;
  std::size_t containing = 0;
  bool isolated = false;
  for (const Word& r : p.relators) {
    const auto& s = r.syllables();
    const bool uses = std::any_of(s.begin(), s.end(),
                                  [&](const Syllable& x) { return x.generator == generator; });
    if (!uses) continue;
    ++containing;
    isolated = s.size() == 1 && std::labs(s[0].exponent) == 1;
  }
  return containing == 1 && isolated;
}

Presentation apply_move(const Presentation& p, const ACMove& m) {
  Presentation out = p;
  std::visit(
      [&](const auto& mv) {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, SwapRelators>) {
          check_relator_index(p, mv.j);
          check_relator_index(p, mv.k);
          std::swap(out.relators[mv.j], out.relators[mv.k]);
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          check_relator_index(p, mv.j);
          for (const Syllable& s : mv.g.syllables()) {
            if (s.generator >= p.generators.size()) {
              throw IndexOutOfRange("conjugator uses an unknown generator");
            }
          }
          out.relators[mv.j] = mv.g * p.relators[mv.j] * mv.g.inverse();
        } else if constexpr (std::is_same_v<T, InvertRelator>) {
          check_relator_index(p, mv.j);
          out.relators[mv.j] = p.relators[mv.j].inverse();
        } else if constexpr (std::is_same_v<T, MultiplyRelator>) {
          check_relator_index(p, mv.j);
          check_relator_index(p, mv.k);
          if (mv.j == mv.k) throw IndexOutOfRange("multiply needs two distinct relators");
          out.relators[mv.j] = p.relators[mv.j] * p.relators[mv.k];
        } else if constexpr (std::is_same_v<T, Stabilize>) {
          if (!valid_name(mv.name) ||
              std::find(p.generators.begin(), p.generators.end(), mv.name) != p.generators.end()) {
            throw std::invalid_argument("cannot add generator '" + mv.name + "'");
          }
          out.generators.push_back(mv.name);
          out.relators.push_back(Word{{p.generators.size(), 1}});
        } else if constexpr (std::is_same_v<T, Destabilize>) {
          if (mv.generator >= p.generators.size()) {
            throw IndexOutOfRange("generator index out of range");
          }
          if (!can_destabilize(p, mv.generator)) {
            throw IllegalDestabilize("generator '" + p.generators[mv.generator] +
                                     "' is not isolated in a relator of its own");
          }
          out.generators.erase(out.generators.begin() + static_cast<long>(mv.generator));
          out.relators.clear();
          for (const Word& r : p.relators) {
            if (r.syllables().size() == 1 && r.syllables()[0].generator == mv.generator) continue;
            std::vector<Syllable> s = r.syllables();
            for (Syllable& x : s) {
              if (x.generator > mv.generator) --x.generator;
            }
            out.relators.emplace_back(std::move(s));
          }
        }
      },
      m);
  return out;
}

ACMove random_move(const Presentation& p, std::mt19937_64& rng) {
  const std::size_t n = p.generators.size();
  const std::size_t m = p.relators.size();
  enum Kind { kSwap, kConjugate, kInvert, kMultiply, kStabilize, kDestabilize };
  std::vector<Kind> kinds;
  if (m >= 2) kinds.push_back(kSwap);
  if (m >= 1 && n >= 1) kinds.push_back(kConjugate);
  if (m >= 1) kinds.push_back(kInvert);
  if (m >= 2) kinds.push_back(kMultiply);
  kinds.push_back(kStabilize);
  std::vector<std::size_t> isolated;
  for (std::size_t g = 0; g < n; ++g) {
    if (can_destabilize(p, g)) isolated.push_back(g);
  }
  if (!isolated.empty()) kinds.push_back(kDestabilize);

  switch (kinds[draw(rng, kinds.size())]) {
    case kSwap: {
      const std::size_t j = draw(rng, m);
      std::size_t k = draw(rng, m - 1);
      if (k >= j) ++k;
      return SwapRelators{j, k};
    }
    case kConjugate: {
      const std::size_t j = draw(rng, m);
      const std::size_t len = 1 + draw(rng, 3);
      std::vector<Syllable> g;
      for (std::size_t i = 0; i < len; ++i) {
        const std::size_t gen = draw(rng, n);
        g.push_back({gen, draw(rng, 2) == 0 ? 1L : -1L});
      }
      return Conjugate{j, Word(std::move(g))};
    }
    case kInvert:
      return InvertRelator{draw(rng, m)};
    case kMultiply: {
      const std::size_t j = draw(rng, m);
      std::size_t k = draw(rng, m - 1);
      if (k >= j) ++k;
      return MultiplyRelator{j, k};
    }
    case kStabilize: {
      for (std::size_t i = 1;; ++i) {
        std::string name = "s" + std::to_string(i);
        if (std::find(p.generators.begin(), p.generators.end(), name) == p.generators.end()) {
          return Stabilize{std::move(name)};
        }
      }
    }
    case kDestabilize:
      return Destabilize{isolated[draw(rng, isolated.size())]};
  }
  return InvertRelator{0};
}

ACMove random_move(const Presentation& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_move(p, rng);
}

std::string to_string(const ACMove& m, const Presentation& before) {
  return std::visit(
      [&](const auto& mv) -> std::string {
        using T = std::decay_t<decltype(mv)>;
        if constexpr (std::is_same_v<T, SwapRelators>) {
          return "swap " + std::to_string(mv.j) + " " + std::to_string(mv.k);
        } else if constexpr (std::is_same_v<T, Conjugate>) {
          return "conjugate " + std::to_string(mv.j) + " " + to_string(mv.g, before.generators);
        } else if constexpr (std::is_same_v<T, InvertRelator>) {
          return "invert " + std::to_string(mv.j);
        } else if constexpr (std::is_same_v<T, MultiplyRelator>) {
          return "multiply " + std::to_string(mv.j) + " " + std::to_string(mv.k);
        } else if constexpr (std::is_same_v<T, Stabilize>) {
          return "stabilize " + mv.name;
        } else {
          return "destabilize " + before.generators.at(mv.generator);
        }
      },
      m);
}

ACMove parse_move(std::string_view text, const Presentation& before) {
  TextCursor cur(text);
  const std::string kind = cur.identifier();
  auto index = [&]() {
    const std::size_t at = cur.pos();
    const long v = cur.integer();
    if (v < 0) throw ParseError("negative index", at);
    return static_cast<std::size_t>(v);
  };
  ACMove move;
  if (kind == "swap") {
    const std::size_t j = index();
    move = SwapRelators{j, index()};
  } else if (kind == "conjugate") {
    const std::size_t j = index();
    move = Conjugate{j, parse_word(cur, before.generators)};
  } else if (kind == "invert") {
    move = InvertRelator{index()};
  } else if (kind == "multiply") {
    const std::size_t j = index();
    move = MultiplyRelator{j, index()};
  } else if (kind == "stabilize") {
    move = Stabilize{cur.identifier()};
  } else if (kind == "destabilize") {
    const std::size_t at = cur.pos();
    const std::string name = cur.identifier();
    auto it = std::find(before.generators.begin(), before.generators.end(), name);
    if (it == before.generators.end()) throw UnknownGenerator(name, at);
    move = Destabilize{static_cast<std::size_t>(it - before.generators.begin())};
  } else {
    throw ParseError("unknown move '" + kind + "'", 0);
  }
  if (!cur.at_end()) throw ParseError("trailing input", cur.pos());
  return move;
}

std::vector<std::vector<long>> exponent_matrix(const Presentation& p) {
  std::vector<std::vector<long>> e(p.generators.size(), std::vector<long>(p.relators.size(), 0));
  for (std::size_t j = 0; j < p.relators.size(); ++j) {
    for (const Syllable& s : p.relators[j].syllables()) e.at(s.generator)[j] += s.exponent;
  }
  return e;
}

}  // namespace acq
