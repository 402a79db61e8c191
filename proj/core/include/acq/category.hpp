#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "acq/matrix.hpp"
#include "acq/scalar.hpp"

namespace acq {

struct SimpleLabel {
  std::size_t index = 0;
  auto operator<=>(const SimpleLabel&) const = default;
};

inline constexpr SimpleLabel kUnit{0};

// A tensor word of simple objects; the empty word is the unit object.
class ObjectWord {
 public:
  ObjectWord() = default;
  ObjectWord(std::initializer_list<SimpleLabel> letters) : letters_(letters) {}
  explicit ObjectWord(std::vector<SimpleLabel> letters) : letters_(std::move(letters)) {}
  static ObjectWord repeat(SimpleLabel b, std::size_t count) {
    return ObjectWord(std::vector<SimpleLabel>(count, b));
  }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  SimpleLabel operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<SimpleLabel>& letters() const { return letters_; }

  ObjectWord slice(std::size_t first, std::size_t count) const;
  void push_back(SimpleLabel b) { letters_.push_back(b); }
  // Letter i moves to position perm[i].
  ObjectWord permuted(const std::vector<std::size_t>& perm) const;

  friend ObjectWord operator+(const ObjectWord& a, const ObjectWord& b);
  auto operator<=>(const ObjectWord&) const = default;

 private:
  std::vector<SimpleLabel> letters_;
};

struct SimpleObject {
  std::string name;
  std::size_t dim = 1;
  SimpleLabel dual;
  std::size_t grade = 0;
  std::vector<Matrix> action;  // one matrix per symmetry generator
  Matrix pairing;              // d_b x d_{b*}; entry (i,j) is the form on e_i ⊗ e_j
};

struct CategoryData {
  std::string name;
  Field field;
  std::size_t generator_count = 0;
  std::size_t grading = 1;  // simples carry a grade in Z/grading
  std::vector<SimpleObject> simples;
};

struct HomCache;

// Immutable view of a category plus lazily filled hom-space caches.
// Copies share the cache.
class Category {
 public:
  explicit Category(CategoryData data);

  const CategoryData& data() const { return *data_; }
  const std::string& name() const { return data_->name; }
  Field field() const { return data_->field; }
  std::size_t size() const { return data_->simples.size(); }
  std::vector<SimpleLabel> labels() const;

  const SimpleObject& simple(SimpleLabel b) const;
  std::size_t dim(SimpleLabel b) const { return simple(b).dim; }
  SimpleLabel dual(SimpleLabel b) const { return simple(b).dual; }
  // Reverses the order and dualizes each letter.
  ObjectWord dual(const ObjectWord& w) const;
  std::vector<std::size_t> dims(const ObjectWord& w) const;
  std::size_t carrier(const ObjectWord& w) const;
  std::size_t grade(const ObjectWord& w) const;
  // Kronecker product of the letters' matrices for one symmetry generator.
  Matrix action(const ObjectWord& w, std::size_t generator) const;

  const Matrix& pairing(SimpleLabel b) const { return simple(b).pairing; }
  bool has_coform(SimpleLabel b) const;
  // d_{b*} x d_b matrix of the coform 1 -> b* b; ValidationError if the pairing is degenerate.
  const Matrix& coform(SimpleLabel b) const;
  const Scalar& rank(SimpleLabel b) const;
  // NonInvertibleRank if r(b) = 0 in the field.
  Scalar rank_inverse(SimpleLabel b) const;
  Scalar rank(const ObjectWord& w) const;

  std::optional<SimpleLabel> find(std::string_view name) const;
  SimpleLabel label(std::string_view name) const;
  bool is_self_dual(SimpleLabel b) const { return dual(b) == b; }

  HomCache& hom_cache() const { return *cache_; }

 private:
  std::shared_ptr<const CategoryData> data_;
  std::vector<std::optional<Matrix>> coforms_;
  std::vector<std::optional<Scalar>> ranks_;
  std::shared_ptr<HomCache> cache_;
};

// Reads the text format without checking any axioms.
CategoryData parse_category(std::string_view text, std::string name = "");
// Text for a builtin name ("zn:<n>", "rep-s3-q", ...), or nullopt if unknown.
std::optional<std::string> builtin_category_text(std::string_view name);
// A representative list of builtin names (zn:<n> accepts any n >= 1).
std::vector<std::string> shipped_categories();
// Builtin name or file path; parses, validates and throws ValidationError on failure.
Category load_category(const std::string& ref);

}  // namespace acq
