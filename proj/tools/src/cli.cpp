#include "acq_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "acq/category.hpp"
#include "acq/errors.hpp"
#include "acq/eval_global.hpp"
#include "acq/eval_state.hpp"
#include "acq/presentation.hpp"
#include "acq/probes.hpp"
#include "acq/validate.hpp"

namespace acq::cli {

namespace {

using Json = nlohmann::ordered_json;

struct EvalSettings {
  std::string method = "state";
  std::size_t max_carrier = 1'000'000;
  unsigned jobs = 1;
};

struct EvalResult {
  std::optional<Scalar> global;
  std::optional<Scalar> state;

  bool agree() const { return !global || !state || *global == *state; }
  const Scalar& value() const { return state ? *state : *global; }
};

EvalResult evaluate(const Presentation& p, const Category& c, const EvalSettings& s) {
  EvalResult r;
  if (s.method == "global" || s.method == "both") {
    GlobalOptions o;
    o.max_entries = s.max_carrier;
    o.jobs = s.jobs;
    r.global = q_invariant_global(p, c, o);
  }
  if (s.method == "state" || s.method == "both") {
    StateOptions o;
    o.max_entries = s.max_carrier;
    r.state = q_invariant_state(p, c, o);
  }
  return r;
}

std::string simple_name(const Category& c, SimpleLabel b) { return c.simple(b).name; }

void print(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// Maps library exceptions to the exit-code contract.
template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const EvaluationGuard& e) {
    err << "error: " << e.what() << "\n";
    return kGuard;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IllegalDestabilize& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

int cmd_validate(const std::string& ref, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::string text;
    if (auto builtin = builtin_category_text(ref)) {
      text = *builtin;
    } else {
      std::ifstream in(ref);
      if (!in) throw ParseError("cannot open category file '" + ref + "'", 0);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      text = buffer.str();
    }
    const Category c(parse_category(text, ref));
    const ValidationReport report = validate_category(c);
    Json j;
    j["category"] = ref;
    j["ok"] = report.ok();
    j["checks"] = Json::array();
    for (const CheckResult& check : report.checks) {
      j["checks"].push_back(
          {{"name", check.name}, {"passed", check.passed}, {"failures", check.failures}});
    }
    print(out, j);
    return report.ok() ? kOk : kValidation;
  });
}

int cmd_eval(const std::string& ref, const std::string& text, const EvalSettings& s, bool timing,
             std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Category c = load_category(ref);
    const Presentation p = parse_presentation(text);
    const auto start = std::chrono::steady_clock::now();
    const EvalResult r = evaluate(p, c, s);
    const auto stop = std::chrono::steady_clock::now();
    Json j;
    j["category"] = ref;
    j["presentation"] = to_string(p);
    j["method"] = s.method;
    j["value"] = r.value().to_string();
    if (s.method == "both") {
      j["global"] = r.global->to_string();
      j["state"] = r.state->to_string();
      j["agree"] = r.agree();
    }
    if (timing) {
      j["elapsed_us"] =
          std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
    }
    print(out, j);
    if (!r.agree()) {
      err << "global and state evaluations disagree\n";
      return kInvariance;
    }
    return kOk;
  });
}

std::vector<std::string> split_moves(const std::string& text) {
  std::vector<std::string> moves;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, ';')) {
    const auto first = current.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    const auto last = current.find_last_not_of(" \t");
    moves.push_back(current.substr(first, last - first + 1));
  }
  return moves;
}

struct Trial {
  std::vector<std::string> moves;
  Presentation result;
  std::optional<Scalar> value;
  std::string error;
  int error_code = kOk;
};

Trial run_trial(const Presentation& start, const Category& c, const EvalSettings& s,
                std::uint64_t seed, std::size_t trial, std::size_t max_moves) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  Trial t;
  t.result = start;
  const std::size_t count = max_moves == 0 ? 0 : 1 + rng() % max_moves;
  for (std::size_t i = 0; i < count; ++i) {
    const ACMove m = random_move(t.result, rng);
    t.moves.push_back(to_string(m, t.result));
    t.result = apply_move(t.result, m);
  }
  try {
    const EvalResult r = evaluate(t.result, c, s);
    if (!r.agree()) {
      t.error = "global and state evaluations disagree";
      t.error_code = kInvariance;
    }
    t.value = r.value();
  } catch (const EvaluationGuard& e) {
    t.error = e.what();
    t.error_code = kGuard;
  }
  return t;
}

std::string join_moves(const std::vector<std::string>& moves) {
  std::string s;
  for (std::size_t i = 0; i < moves.size(); ++i) s += (i ? "; " : "") + moves[i];
  return s;
}

int cmd_fuzz(const std::string& ref, const std::string& text, const EvalSettings& s,
             std::size_t max_moves, std::size_t trials, std::uint64_t seed,
             const std::optional<std::string>& replay, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Category c = load_category(ref);
    const Presentation p = parse_presentation(text);
    EvalSettings single = s;
    single.jobs = 1;
    const EvalResult base = evaluate(p, c, s);
    Json j;
    j["category"] = ref;
    j["presentation"] = to_string(p);
    j["method"] = s.method;
    j["baseline"] = base.value().to_string();

    if (replay) {
      Presentation q = p;
      Json steps = Json::array();
      for (const std::string& line : split_moves(*replay)) {
        const ACMove m = parse_move(line, q);
        q = apply_move(q, m);
        steps.push_back({{"move", line}, {"presentation", to_string(q)}});
      }
      const EvalResult r = evaluate(q, c, s);
      j["replay"] = steps;
      j["value"] = r.value().to_string();
      j["match"] = r.agree() && r.value() == base.value();
      print(out, j);
      return j["match"].get<bool>() ? kOk : kInvariance;
    }

    std::vector<Trial> results(trials);
    const unsigned jobs = std::max(1u, std::min<unsigned>(s.jobs, trials));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < trials; t += jobs) {
          results[t] = run_trial(p, c, single, seed, t, max_moves);
        }
      });
    }
    for (auto& th : pool) th.join();

    j["seed"] = seed;
    j["moves"] = max_moves;
    j["trials"] = trials;
    Json discrepancies = Json::array();
    Json guarded_trials = Json::array();
    for (std::size_t t = 0; t < trials; ++t) {
      const Trial& r = results[t];
      if (r.error_code == kGuard) {
        guarded_trials.push_back({{"trial", t}, {"replay", join_moves(r.moves)}, {"error", r.error}});
        continue;
      }
      if (r.error_code == kOk && r.value && *r.value == base.value()) continue;
      Json d{{"trial", t},
             {"replay", join_moves(r.moves)},
             {"presentation", to_string(r.result)},
             {"value", r.value ? r.value->to_string() : std::string()}};
      if (!r.error.empty()) d["error"] = r.error;
      discrepancies.push_back(std::move(d));
    }
    j["discrepancies"] = discrepancies;
    j["guarded"] = guarded_trials;
    print(out, j);
    if (!discrepancies.empty()) return kInvariance;
    return guarded_trials.empty() ? kOk : kGuard;
  });
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

struct ProbeArgs {
  std::size_t bound = 64;
  std::string presentation;
  std::size_t generator = 0;
  std::string simple;
  std::size_t k = 2;
};

int cmd_probe(const std::string& ref, const std::string& name, const ProbeArgs& a,
              std::ostream& out, std::ostream& err) {
  static const std::vector<std::string> known = {"dimensions", "conjecture1b", "circulator-order",
                                                 "corollary", "conjecture2"};
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    err << "unknown probe '" << name << "'; expected one of dimensions, conjecture1b, "
        << "circulator-order, corollary, conjecture2\n";
    return kUsage;
  }
  return guarded(err, [&] {
    const Category c = load_category(ref);
    Json j;
    j["category"] = ref;
    j["probe"] = name;
    Json simples = Json::array();
    for (SimpleLabel b : c.labels()) simples.push_back(simple_name(c, b));
    j["simples"] = simples;
    if (name == "dimensions") {
      j["table"] = dimension_report(c);
    } else if (name == "conjecture1b") {
      const Conjecture1bReport r = conjecture1b_probe(c);
      Json rows = Json::array();
      for (const auto& row : r.rows) {
        rows.push_back({{"simple", simple_name(c, row.b)}, {"value", row.value.to_string()}});
      }
      j["rows"] = rows;
      j["simple_count"] = r.simple_count;
    } else if (name == "circulator-order") {
      j["bound"] = a.bound;
      Json rows = Json::array();
      for (const auto& row : circulator_order_probe(c, a.bound)) {
        Json r{{"a", simple_name(c, row.a)},
               {"b", simple_name(c, row.b)},
               {"dimension", row.block_dimension}};
        r["order"] = row.order ? Json(*row.order) : Json(nullptr);
        rows.push_back(std::move(r));
      }
      j["rows"] = rows;
    } else if (name == "corollary") {
      if (a.presentation.empty()) throw std::invalid_argument("corollary needs --presentation");
      const CorollaryReport r = corollary_probe(parse_presentation(a.presentation), c, a.generator);
      j["generator"] = a.generator;
      j["with_commutator"] = to_string(r.with_commutator);
      j["with_generator"] = to_string(r.with_generator);
      j["lhs"] = r.lhs.to_string();
      j["rhs"] = r.rhs.to_string();
      j["equal"] = r.equal;
    } else {
      const SimpleLabel b = a.simple.empty() ? kUnit : c.label(a.simple);
      j["simple"] = simple_name(c, b);
      j["k"] = a.k;
      Json rows = Json::array();
      for (const auto& row : conjecture2_probe(c, b, a.k)) {
        rows.push_back({{"w", simple_name(c, row.w)},
                        {"zero", row.zero},
                        {"identity", row.identity},
                        {"matrix", matrix_json(row.trace.matrix)}});
      }
      j["rows"] = rows;
    }
    print(out, j);
    return kOk;
  });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact evaluation of presentation invariants over finite tensor categories", "acq"};
  app.require_subcommand(1);

  EvalSettings settings;
  auto add_eval_flags = [&](CLI::App* sub) {
    sub->add_option("--max-carrier", settings.max_carrier,
                    "Largest matrix or state vector, in entries")
        ->capture_default_str();
    sub->add_option("--jobs", settings.jobs, "Worker threads")->capture_default_str();
  };

  std::string ref;
  std::string text;

  CLI::App* validate = app.add_subcommand("validate", "Check the category axioms");
  validate->add_option("category", ref, "Builtin name or .cat file")->required();

  CLI::App* eval = app.add_subcommand("eval", "Evaluate Q for a presentation");
  bool timing = false;
  eval->add_option("category", ref, "Builtin name or .cat file")->required();
  eval->add_option("presentation", text, "Presentation such as \"<x,y | xyx^-1y>\"")->required();
  eval->add_option("--method", settings.method, "global, state or both")
      ->check(CLI::IsMember({"global", "state", "both"}))
      ->capture_default_str();
  eval->add_flag("--timing", timing, "Include elapsed_us in the report");
  add_eval_flags(eval);

  CLI::App* fuzz = app.add_subcommand("fuzz", "Compare Q before and after random AC moves");
  std::size_t moves = 8;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::optional<std::string> replay;
  fuzz->add_option("category", ref, "Builtin name or .cat file")->required();
  fuzz->add_option("presentation", text, "Starting presentation")->required();
  fuzz->add_option("--moves", moves, "Maximum moves per trial")->capture_default_str();
  fuzz->add_option("--trials", trials, "Number of trials")->capture_default_str();
  fuzz->add_option("--seed", seed, "Random seed")->capture_default_str();
  fuzz->add_option("--method", settings.method, "global, state or both")
      ->check(CLI::IsMember({"global", "state", "both"}))
      ->capture_default_str();
  fuzz->add_option("--replay", replay, "Apply the given \"move; move\" list instead of fuzzing");
  add_eval_flags(fuzz);

  CLI::App* probe = app.add_subcommand("probe", "Report probe data for a category");
  std::string probe_name;
  ProbeArgs probe_args;
  probe->add_option("category", ref, "Builtin name or .cat file")->required();
  probe->add_option("name", probe_name,
                    "dimensions, conjecture1b, circulator-order, corollary or conjecture2")
      ->required();
  probe->add_option("--bound", probe_args.bound, "circulator-order: largest power tried")
      ->capture_default_str();
  probe->add_option("--presentation", probe_args.presentation, "corollary: presentation");
  probe->add_option("--generator", probe_args.generator, "corollary: generator index")
      ->capture_default_str();
  probe->add_option("--simple", probe_args.simple, "conjecture2: simple object name");
  probe->add_option("--k", probe_args.k, "conjecture2: number of traced legs")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (validate->parsed()) return cmd_validate(ref, out, err);
  if (eval->parsed()) return cmd_eval(ref, text, settings, timing, out, err);
  if (fuzz->parsed()) {
    return cmd_fuzz(ref, text, settings, moves, trials, seed, replay, out, err);
  }
  return cmd_probe(ref, probe_name, probe_args, out, err);
}

}  // namespace acq::cli
