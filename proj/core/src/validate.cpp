#include "acq/validate.hpp"

#include <functional>
#include <sstream>

#include "acq/errors.hpp"
#include "acq/hom.hpp"
#include "acq/linear_map.hpp"

namespace acq {

bool ValidationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << c.name << ": " << (c.passed ? "pass" : "FAIL") << "\n";
    for (const auto& f : c.failures) os << "  - " << f << "\n";
  }
  return os.str();
}

namespace {

class Checker {
 public:
  explicit Checker(ValidationReport& report) : report_(report) {}

  void run(const std::string& name, const std::function<void(std::vector<std::string>&)>& body) {
    CheckResult result{name, true, {}};
    try {
      body(result.failures);
    } catch (const std::exception& e) {
      result.failures.push_back(std::string("aborted: ") + e.what());
    }
    result.passed = result.failures.empty();
    report_.checks.push_back(std::move(result));
  }

  void skip(const std::string& name) {
    report_.checks.push_back({name, false, {"not run: structural errors"}});
  }

 private:
  ValidationReport& report_;
};

std::string word_name(const Category& c, const ObjectWord& w) {
  std::string s = "(";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i == 0 ? "" : ",") + c.simple(w[i]).name;
  return s + ")";
}

void check_structure(const Category& c, std::vector<std::string>& out) {
  const CategoryData& d = c.data();
  if (d.simples.empty()) {
    out.push_back("no simple objects");
    return;
  }
  const SimpleObject& unit = d.simples[0];
  bool unit_ok = unit.dim == 1 && unit.dual == kUnit && unit.grade == 0 &&
                 unit.pairing.rows() == 1 && unit.pairing.cols() == 1 &&
                 unit.pairing(0, 0).is_one();
  for (const Matrix& g : unit.action) unit_ok = unit_ok && g.is_identity();
  if (!unit_ok) out.push_back("label 0 ('" + unit.name + "') is not the trivial object");
  for (std::size_t i = 0; i < d.simples.size(); ++i) {
    const SimpleObject& s = d.simples[i];
    if (s.dual.index >= d.simples.size()) {
      out.push_back("dual of '" + s.name + "' is out of range");
      continue;
    }
    const SimpleObject& t = d.simples[s.dual.index];
    if (t.dual.index != i) out.push_back("duality is not an involution at '" + s.name + "'");
    if (t.dim != s.dim) out.push_back("'" + s.name + "' and its dual differ in dimension");
    if (s.grade >= d.grading || (s.grade + t.grade) % d.grading != 0) {
      out.push_back("grade of '" + s.name + "' is inconsistent with its dual");
    }
    if (s.action.size() != d.generator_count) {
      out.push_back("'" + s.name + "' has the wrong number of generator matrices");
    }
    for (const Matrix& g : s.action) {
      if (g.rows() != s.dim || g.cols() != s.dim || !(g.field() == d.field)) {
        out.push_back("generator matrix of '" + s.name + "' has the wrong shape or field");
      }
    }
    if (s.pairing.rows() != s.dim || s.pairing.cols() != t.dim ||
        !(s.pairing.field() == d.field)) {
      out.push_back("pairing of '" + s.name + "' has the wrong shape or field");
    }
  }
}

void check_equivariance(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel b : c.labels()) {
    const SimpleObject& s = c.simple(b);
    const SimpleObject& t = c.simple(s.dual);
    for (std::size_t g = 0; g < s.action.size(); ++g) {
      if (matrix_rank(s.action[g]) != s.dim) {
        out.push_back("generator " + std::to_string(g) + " is singular on '" + s.name + "'");
        continue;
      }
      if (!(s.action[g].transpose() * s.pairing * t.action[g] == s.pairing)) {
        out.push_back("pairing of '" + s.name + "' is not invariant under generator " +
                      std::to_string(g));
      }
    }
  }
}

void check_nondegeneracy(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel b : c.labels()) {
    if (!c.has_coform(b)) out.push_back("pairing of '" + c.simple(b).name + "' is degenerate");
  }
}

void check_snakes(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel b : c.labels()) {
    if (!c.has_coform(b)) continue;
    const SimpleLabel bd = c.dual(b);
    const LinearMap id_b = identity_map(c, ObjectWord{b});
    const LinearMap id_bd = identity_map(c, ObjectWord{bd});
    // b -> b b* b -> b
    const LinearMap first =
        compose(tensor(cap(c, b), id_b), tensor(id_b, cup(c, b)));
    // b* -> b* b b* -> b*
    const LinearMap second =
        compose(tensor(id_bd, cap(c, b)), tensor(cup(c, b), id_bd));
    if (!(first == id_b)) out.push_back("first snake fails for '" + c.simple(b).name + "'");
    if (!(second == id_bd)) out.push_back("second snake fails for '" + c.simple(b).name + "'");
  }
}

void check_stability(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel b : c.labels()) {
    const SimpleLabel bd = c.dual(b);
    if (!c.has_coform(b) || !c.has_coform(bd)) continue;
    const LinearMap swapped = compose(swap(c, ObjectWord{b, bd}, 0), cup(c, bd));
    if (!(swapped == cup(c, b))) {
      out.push_back("swapped coform of the dual differs from the coform of '" +
                    c.simple(b).name + "'");
    }
  }
}

void check_schur(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel a : c.labels()) {
    for (SimpleLabel b : c.labels()) {
      const std::size_t n = intertwiner_count(c, a, ObjectWord{b});
      const std::size_t want = a == b ? 1 : 0;
      if (n != want) {
        out.push_back("Hom('" + c.simple(a).name + "', '" + c.simple(b).name + "') has dimension " +
                      std::to_string(n) + ", expected " + std::to_string(want));
      }
    }
  }
}

std::vector<ObjectWord> short_words(const Category& c) {
  std::vector<ObjectWord> words;
  for (SimpleLabel b : c.labels()) words.push_back(ObjectWord{b});
  for (SimpleLabel b : c.labels()) {
    for (SimpleLabel d : c.labels()) words.push_back(ObjectWord{b, d});
  }
  return words;
}

void check_semisimplicity(const Category& c, std::vector<std::string>& out) {
  for (const ObjectWord& w : short_words(c)) {
    for (SimpleLabel a : c.labels()) {
      try {
        (void)hom_basis(c, a, w, HomMethod::direct);
      } catch (const SemisimplicityFailure& e) {
        out.push_back("F('" + c.simple(a).name + "', " + word_name(c, w) + "): " + e.what());
      }
    }
  }
}

void check_completeness(const Category& c, std::vector<std::string>& out) {
  for (const ObjectWord& w : short_words(c)) {
    try {
      Matrix sum(c.field(), c.carrier(w), c.carrier(w));
      for (SimpleLabel a : c.labels()) {
        const auto basis = hom_basis(c, a, w);
        for (std::size_t i = 0; i < basis->size(); ++i) sum += basis->maps[i] * basis->duals[i];
      }
      if (!sum.is_identity()) {
        out.push_back("decomposition of " + word_name(c, w) + " does not sum to the identity");
      }
    } catch (const SemisimplicityFailure& e) {
      out.push_back("decomposition of " + word_name(c, w) + " unavailable: " + e.what());
    }
  }
}

void check_ranks(const Category& c, std::vector<std::string>& out) {
  for (SimpleLabel b : c.labels()) {
    const std::string& name = c.simple(b).name;
    if (!c.has_coform(b) || !c.has_coform(c.dual(b))) {
      out.push_back("rank of '" + name + "' is undefined");
      continue;
    }
    if (c.rank(b).is_zero()) out.push_back("rank of '" + name + "' is not invertible");
    if (!(c.rank(b) == c.rank(c.dual(b)))) {
      out.push_back("rank of '" + name + "' differs from the rank of its dual");
    }
  }
}

}  // namespace

ValidationReport validate_category(const Category& c) {
  ValidationReport report;
  Checker checker(report);
  checker.run("structure", [&](auto& out) { check_structure(c, out); });
  const char* rest[] = {"equivariance", "nondegeneracy", "snake",        "stability",
                        "schur",        "semisimplicity", "completeness", "rank"};
  if (!report.checks.front().passed) {
    for (const char* name : rest) checker.skip(name);
    return report;
  }
  checker.run("equivariance", [&](auto& out) { check_equivariance(c, out); });
  checker.run("nondegeneracy", [&](auto& out) { check_nondegeneracy(c, out); });
  checker.run("snake", [&](auto& out) { check_snakes(c, out); });
  checker.run("stability", [&](auto& out) { check_stability(c, out); });
  checker.run("schur", [&](auto& out) { check_schur(c, out); });
  checker.run("semisimplicity", [&](auto& out) { check_semisimplicity(c, out); });
  checker.run("completeness", [&](auto& out) { check_completeness(c, out); });
  checker.run("rank", [&](auto& out) { check_ranks(c, out); });
  return report;
}

}  // namespace acq
