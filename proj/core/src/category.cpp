#include "acq/category.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "acq/errors.hpp"
#include "acq/validate.hpp"
#include "hom_cache.hpp"

namespace acq {

ObjectWord ObjectWord::slice(std::size_t first, std::size_t count) const {
  if (first + count > letters_.size()) throw IndexOutOfRange("word slice out of range");
  return ObjectWord(std::vector<SimpleLabel>(letters_.begin() + static_cast<long>(first),
                                             letters_.begin() + static_cast<long>(first + count)));
}

ObjectWord ObjectWord::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != letters_.size()) throw DimensionMismatch("permutation length mismatch");
  std::vector<SimpleLabel> out(letters_.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out.at(perm[i]) = letters_[i];
  return ObjectWord(std::move(out));
}

ObjectWord operator+(const ObjectWord& a, const ObjectWord& b) {
  std::vector<SimpleLabel> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return ObjectWord(std::move(out));
}

Category::Category(CategoryData data)
    : data_(std::make_shared<const CategoryData>(std::move(data))),
      cache_(std::make_shared<HomCache>()) {
  const auto& simples = data_->simples;
  coforms_.resize(simples.size());
  ranks_.resize(simples.size());
  for (std::size_t b = 0; b < simples.size(); ++b) {
    const Matrix& pairing = simples[b].pairing;
    if (pairing.rows() == 0 || pairing.rows() != pairing.cols()) continue;
    try {
      coforms_[b] = mat_inverse(pairing);
    } catch (const SingularMatrix&) {
    }
  }
  // r(b) = λ_{b*} ∘ Λ_b, both read off the stored matrices.
  for (std::size_t b = 0; b < simples.size(); ++b) {
    const std::size_t d = simples[b].dual.index;
    if (!coforms_[b] || d >= simples.size()) continue;
    const Matrix& m = *coforms_[b];
    const Matrix& l = simples[d].pairing;
    if (l.rows() != m.rows() || l.cols() != m.cols()) continue;
    Scalar r = Scalar::zero(data_->field);
    for (std::size_t k = 0; k < m.size(); ++k) r.add_product(m.entries()[k], l.entries()[k]);
    ranks_[b] = r;
  }
}

std::vector<SimpleLabel> Category::labels() const {
  std::vector<SimpleLabel> out;
  for (std::size_t i = 0; i < size(); ++i) out.push_back(SimpleLabel{i});
  return out;
}

const SimpleObject& Category::simple(SimpleLabel b) const {
  if (b.index >= data_->simples.size()) {
    throw IndexOutOfRange("simple label " + std::to_string(b.index) + " out of range");
  }
  return data_->simples[b.index];
}

ObjectWord Category::dual(const ObjectWord& w) const {
  std::vector<SimpleLabel> out;
  out.reserve(w.size());
  for (std::size_t i = w.size(); i-- > 0;) out.push_back(dual(w[i]));
  return ObjectWord(std::move(out));
}

std::vector<std::size_t> Category::dims(const ObjectWord& w) const {
  std::vector<std::size_t> out;
  out.reserve(w.size());
  for (SimpleLabel b : w) out.push_back(dim(b));
  return out;
}

std::size_t Category::carrier(const ObjectWord& w) const {
  // Saturates instead of wrapping, so size guards stay meaningful.
  constexpr std::size_t kMax = std::numeric_limits<std::size_t>::max();
  std::size_t n = 1;
  for (SimpleLabel b : w) {
    const std::size_t d = dim(b);
    if (d != 0 && n > kMax / d) return kMax;
    n *= d;
  }
  return n;
}

std::size_t Category::grade(const ObjectWord& w) const {
  std::size_t g = 0;
  for (SimpleLabel b : w) g = (g + simple(b).grade) % data_->grading;
  return g;
}

Matrix Category::action(const ObjectWord& w, std::size_t generator) const {
  Matrix m = Matrix::identity(field(), 1);
  for (SimpleLabel b : w) m = kron(m, simple(b).action.at(generator));
  return m;
}

bool Category::has_coform(SimpleLabel b) const { return coforms_.at(b.index).has_value(); }

const Matrix& Category::coform(SimpleLabel b) const {
  const auto& m = coforms_.at(b.index);
  if (!m) throw ValidationError("pairing of '" + simple(b).name + "' is degenerate");
  return *m;
}

const Scalar& Category::rank(SimpleLabel b) const {
  const auto& r = ranks_.at(b.index);
  if (!r) throw ValidationError("rank of '" + simple(b).name + "' is undefined");
  return *r;
}

Scalar Category::rank_inverse(SimpleLabel b) const {
  const Scalar& r = rank(b);
  if (r.is_zero()) {
    throw NonInvertibleRank("rank of '" + simple(b).name + "' is zero in " +
                            field().to_string());
  }
  return r.inverse();
}

Scalar Category::rank(const ObjectWord& w) const {
  Scalar r = Scalar::one(field());
  for (SimpleLabel b : w) r *= rank(b);
  return r;
}

std::optional<SimpleLabel> Category::find(std::string_view name) const {
  for (std::size_t i = 0; i < size(); ++i) {
    if (data_->simples[i].name == name) return SimpleLabel{i};
  }
  return std::nullopt;
}

SimpleLabel Category::label(std::string_view name) const {
  if (auto b = find(name)) return *b;
  throw IndexOutOfRange("no simple object named '" + std::string(name) + "'");
}

namespace {

struct Token {
  std::string text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      ++i;
    } else {
      const std::size_t start = i;
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])) == 0 &&
             text[i] != '#') {
        ++i;
      }
      out.push_back({std::string(text.substr(start, i - start)), start});
    }
  }
  return out;
}

class CategoryParser {
 public:
  CategoryParser(std::string_view text, std::string name)
      : tokens_(tokenize(text)), end_offset_(text.size()) {
    data_.name = std::move(name);
  }

  CategoryData run() {
    expect_keyword("field");
    const Token kind = next("field kind");
    if (kind.text == "rational") {
      data_.field = Field::rational();
    } else if (kind.text == "prime") {
      const Token p = next("prime");
      try {
        data_.field = Field::prime(to_count(p));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), p.offset);
      }
    } else {
      throw ParseError("expected 'rational' or 'prime'", kind.offset);
    }
    expect_keyword("generators");
    data_.generator_count = to_count(next("generator count"));
    if (peek_is("grading")) {
      ++pos_;
      const Token n = next("grading modulus");
      data_.grading = to_count(n);
      if (data_.grading == 0) throw ParseError("grading modulus must be positive", n.offset);
    }
    while (pos_ < tokens_.size()) parse_simple();
    if (data_.simples.empty()) throw ParseError("no simple objects", end_offset_);
    resolve_duals();
    return std::move(data_);
  }

 private:
  void parse_simple() {
    expect_keyword("simple");
    const Token name = next("simple name");
    if (names_.count(name.text) != 0) {
      throw ParseError("duplicate simple '" + name.text + "'", name.offset);
    }
    names_[name.text] = data_.simples.size();
    SimpleObject s;
    s.name = name.text;
    const Token dim = next("dimension");
    s.dim = to_count(dim);
    if (s.dim == 0) throw ParseError("dimension must be positive", dim.offset);
    dual_tokens_.push_back(next("dual name"));
    if (peek_is("grade")) {
      ++pos_;
      const Token g = next("grade");
      s.grade = to_count(g);
      if (s.grade >= data_.grading) throw ParseError("grade out of range", g.offset);
    }
    for (std::size_t k = 0; k < data_.generator_count; ++k) {
      expect_keyword("gen");
      s.action.push_back(read_matrix(s.dim));
    }
    expect_keyword("pairing");
    s.pairing = read_matrix(s.dim);
    data_.simples.push_back(std::move(s));
  }

  void resolve_duals() {
    for (std::size_t i = 0; i < data_.simples.size(); ++i) {
      const Token& t = dual_tokens_[i];
      auto it = names_.find(t.text);
      if (it == names_.end()) throw ParseError("unknown dual '" + t.text + "'", t.offset);
      data_.simples[i].dual = SimpleLabel{it->second};
    }
  }

  Matrix read_matrix(std::size_t d) {
    Matrix m(data_.field, d, d);
    for (std::size_t k = 0; k < d * d; ++k) {
      const Token t = next("matrix entry");
      try {
        m.entries()[k] = Scalar::parse(data_.field, t.text);
      } catch (const std::exception&) {
        throw ParseError("malformed matrix entry '" + t.text + "'", t.offset);
      }
    }
    return m;
  }

  const Token& next(const char* what) {
    if (pos_ >= tokens_.size()) {
      throw ParseError(std::string("unexpected end of input, expected ") + what, end_offset_);
    }
    return tokens_[pos_++];
  }

  bool peek_is(const char* word) const {
    return pos_ < tokens_.size() && tokens_[pos_].text == word;
  }

  void expect_keyword(const char* word) {
    const Token& t = next(word);
    if (t.text != word) {
      throw ParseError(std::string("expected '") + word + "', found '" + t.text + "'", t.offset);
    }
  }

  static std::size_t to_count(const Token& t) {
    std::size_t value = 0;
    const char* first = t.text.data();
    const char* last = first + t.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("expected a nonnegative integer, found '" + t.text + "'", t.offset);
    }
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t end_offset_;
  std::size_t pos_ = 0;
  CategoryData data_;
  std::map<std::string, std::size_t> names_;
  std::vector<Token> dual_tokens_;
};

std::string zn_text(std::size_t n) {
  std::ostringstream os;
  os << "field rational\ngenerators 0\ngrading " << n << "\n";
  for (std::size_t b = 0; b < n; ++b) {
    os << "simple " << b << " 1 " << (n - b) % n << " grade " << b << "\n  pairing 1\n";
  }
  return os.str();
}

std::string rep_s3_text(const std::string& field) {
  // s = (1 2), t = (1 2 3); std is realized on e1 - e2, e2 - e3.
  return "field " + field +
         "\n"
         "generators 2\n"
         "simple triv 1 triv\n  gen 1\n  gen 1\n  pairing 1\n"
         "simple sign 1 sign\n  gen -1\n  gen 1\n  pairing 1\n"
         "simple std 2 std\n"
         "  gen -1 1  0 1\n"
         "  gen 0 -1  1 -1\n"
         "  pairing 2 -1  -1 2\n";
}

}  // namespace

CategoryData parse_category(std::string_view text, std::string name) {
  return CategoryParser(text, std::move(name)).run();
}

std::optional<std::string> builtin_category_text(std::string_view name) {
  if (name.substr(0, 3) == "zn:") {
    std::size_t n = 0;
    const std::string_view digits = name.substr(3);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || n == 0 || n > 4096) {
      return std::nullopt;
    }
    return zn_text(n);
  }
  if (name == "rep-z2-q") {
    return std::string(
        "field rational\ngenerators 1\n"
        "simple triv 1 triv\n  gen 1\n  pairing 1\n"
        "simple sign 1 sign\n  gen -1\n  pairing 1\n");
  }
  if (name == "rep-z3-q") {
    // Characters of Z/3 are not rational, so the three one-dimensional
    // characters are carried as Z/3-graded lines.
    return std::string(
        "field rational\ngenerators 0\ngrading 3\n"
        "simple triv 1 triv grade 0\n  pairing 1\n"
        "simple chi 1 chibar grade 1\n  pairing 1\n"
        "simple chibar 1 chi grade 2\n  pairing 1\n");
  }
  if (name == "rep-s3-q") return rep_s3_text("rational");
  if (name == "rep-s3-f5") return rep_s3_text("prime 5");
  return std::nullopt;
}

std::vector<std::string> shipped_categories() {
  return {"zn:1", "zn:2", "zn:3", "zn:4", "zn:5", "zn:6",
          "rep-z2-q", "rep-z3-q", "rep-s3-q", "rep-s3-f5"};
}

Category load_category(const std::string& ref) {
  std::string text;
  if (auto builtin = builtin_category_text(ref)) {
    text = std::move(*builtin);
  } else {
    std::ifstream in(ref);
    if (!in) throw ParseError("cannot open category file '" + ref + "'", 0);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    text = buffer.str();
  }
  Category category(parse_category(text, ref));
  const ValidationReport report = validate_category(category);
  if (!report.ok()) throw ValidationError("category '" + ref + "' failed validation:\n" +
                                          report.summary());
  return category;
}

}  // namespace acq
