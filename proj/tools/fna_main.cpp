// fna — command line front end of the free Nijenhuis algebra kernel.
//
// Exit codes: 0 success, 1 law failure (check), 2 usage, parse or input error.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fna/algebra.hpp"
#include "fna/coalgebra.hpp"
#include "fna/enumeration.hpp"
#include "fna/hopf.hpp"
#include "fna/textio.hpp"
#include "fna/verify.hpp"

namespace {

using namespace fna;

std::vector<std::string> split_alphabet(const std::string& spec) {
  std::vector<std::string> names;
  std::string current;
  for (char c : spec) {
    if (c == ',') {
      if (!current.empty()) names.push_back(current);
      current.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      current += c;
    }
  }
  if (!current.empty()) names.push_back(current);
  return names;
}

std::vector<Letter> alphabet_from(const std::string& spec) {
  std::vector<std::string> names = split_alphabet(spec);
  for (const std::string& n : names)
    if (n == "N")
      throw Error("the letter name \"N\" is reserved by the expression syntax");
  return make_alphabet(names);
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw Error("unsupported --format \"" + format + "\" for this command");
}

BracketedWord single_word(const std::string& expr) {
  Element e = eval_string(expr);
  if (e.term_count() != 1 || e.terms().begin()->second != 1)
    throw Error("expected a single basis word with coefficient 1, got: " + print_canonical(e));
  return e.terms().begin()->first;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"free Nijenhuis algebra kernel: bracketed words, diamond product, coproduct, "
               "antipode, basis enumeration and law verification"};
  app.require_subcommand(1);

  std::string expr;
  std::string format = "text";

  auto* eval_cmd = app.add_subcommand("eval", "normalize an expression into the basis");
  eval_cmd->add_option("expr", expr, "expression")->required();
  eval_cmd->add_option("--format", format, "text|json|latex")->capture_default_str();

  auto* coprod_cmd = app.add_subcommand("coprod", "coproduct as a sum of \"a (x) b\" pairs");
  coprod_cmd->add_option("expr", expr, "expression")->required();
  coprod_cmd->add_option("--format", format, "text|json")->capture_default_str();

  auto* counit_cmd = app.add_subcommand("counit", "counit of an expression");
  counit_cmd->add_option("expr", expr, "expression")->required();
  counit_cmd->add_option("--format", format, "text|json")->capture_default_str();

  auto* antipode_cmd = app.add_subcommand("antipode", "right antipode of an expression");
  antipode_cmd->add_option("expr", expr, "expression")->required();
  antipode_cmd->add_option("--format", format, "text|json|latex")->capture_default_str();

  auto* degree_cmd = app.add_subcommand("degree", "graded decomposition table");
  degree_cmd->add_option("expr", expr, "expression")->required();
  degree_cmd->add_option("--format", format, "text|json")->capture_default_str();

  auto* factor_cmd = app.add_subcommand("factor", "width factorization and all measures of a word");
  factor_cmd->add_option("word", expr, "a single basis word")->required();
  factor_cmd->add_option("--format", format, "text|json")->capture_default_str();

  std::string alphabet_spec = "x";
  unsigned max_degree = 0;
  bool counts_only = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "basis words by degree");
  enum_cmd->add_option("--alphabet", alphabet_spec, "comma-separated letters")->required();
  enum_cmd->add_option("--max-degree", max_degree, "largest degree to enumerate")->required();
  enum_cmd->add_flag("--counts-only", counts_only, "print the dimension series only");
  enum_cmd->add_option("--format", format, "text|json")->capture_default_str();

  std::string law = "all";
  std::string check_alphabet = "x";
  std::optional<unsigned> check_degree;
  std::optional<std::uint64_t> sample_count;
  std::uint64_t seed = 0;
  bool as_json = false;
  bool quiet = false;
  auto* check_cmd = app.add_subcommand("check", "run law suites and report");
  check_cmd->add_option("--law", law, "law id or \"all\"")->capture_default_str();
  check_cmd->add_option("--alphabet", check_alphabet, "comma-separated letters")
      ->capture_default_str();
  check_cmd->add_option("--max-degree", check_degree,
                        "degree bound (default: 3 for pair/triple laws, 4 for unary)");
  check_cmd->add_option("--random", sample_count, "sample K tuples instead of exhausting");
  check_cmd->add_option("--seed", seed, "random-mode seed")->capture_default_str();
  check_cmd->add_flag("--json", as_json, "machine-readable report array");
  check_cmd->add_flag("--quiet", quiet, "print only failing suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval_cmd->parsed() || antipode_cmd->parsed()) {
      require_format(format, {"text", "json", "latex"});
      Element e = eval_string(expr);
      if (antipode_cmd->parsed()) e = antipode(e);
      if (format == "json") std::cout << to_json(e) << "\n";
      else if (format == "latex") std::cout << print_latex(e) << "\n";
      else std::cout << print_canonical(e) << "\n";
      return 0;
    }

    if (coprod_cmd->parsed()) {
      require_format(format, {"text", "json"});
      TensorElement t = coproduct(eval_string(expr));
      std::cout << (format == "json" ? to_json(t) : print_canonical(t)) << "\n";
      return 0;
    }

    if (counit_cmd->parsed()) {
      require_format(format, {"text", "json"});
      Rational c = counit(eval_string(expr));
      if (format == "json") {
        nlohmann::ordered_json j;
        j["num"] = numerator_string(c);
        j["den"] = denominator_string(c);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << rational_to_string(c) << "\n";
      }
      return 0;
    }

    if (degree_cmd->parsed()) {
      require_format(format, {"text", "json"});
      GradedDecomposition d = homogeneous_components(eval_string(expr));
      if (format == "json") {
        nlohmann::ordered_json components = nlohmann::ordered_json::array();
        for (const auto& [n, component] : d) {
          nlohmann::ordered_json item;
          item["degree"] = n;
          item["element"] = json_of(component);
          components.push_back(std::move(item));
        }
        nlohmann::ordered_json j;
        j["components"] = std::move(components);
        std::cout << j.dump() << "\n";
      } else if (d.empty()) {
        std::cout << "0\n";
      } else {
        for (const auto& [n, component] : d)
          std::cout << n << ": " << print_canonical(component) << "\n";
      }
      return 0;
    }

    if (factor_cmd->parsed()) {
      require_format(format, {"text", "json"});
      BracketedWord w = single_word(expr);
      std::vector<Factor> factors = diamond_factorize(w);  // EmptyWordError on the unit
      Measures m = measures(w);
      if (format == "json") {
        nlohmann::ordered_json fs = nlohmann::ordered_json::array();
        for (const Factor& f : factors) fs.push_back(json_of(BracketedWord({f})));
        nlohmann::ordered_json mj;
        mj["degree"] = m.degree;
        mj["degree_letters"] = m.degree_letters;
        mj["degree_brackets"] = m.degree_brackets;
        mj["depth"] = m.depth;
        mj["breadth"] = m.breadth;
        mj["width"] = m.width;
        nlohmann::ordered_json j;
        j["word"] = json_of(w);
        j["factors"] = std::move(fs);
        j["measures"] = std::move(mj);
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "word: " << print_word(w) << "\n";
        std::cout << "factors:";
        for (const Factor& f : factors) std::cout << " " << print_word(BracketedWord({f}));
        std::cout << "\n";
        std::cout << "degree=" << m.degree << " letters=" << m.degree_letters
                  << " brackets=" << m.degree_brackets << " depth=" << m.depth
                  << " breadth=" << m.breadth << " width=" << m.width << "\n";
      }
      return 0;
    }

    if (enum_cmd->parsed()) {
      require_format(format, {"text", "json"});
      std::vector<Letter> alphabet = alphabet_from(alphabet_spec);
      BasisCache cache(alphabet);
      if (format == "json") {
        nlohmann::ordered_json counts = nlohmann::ordered_json::array();
        nlohmann::ordered_json degrees = nlohmann::ordered_json::array();
        for (unsigned n = 0; n <= max_degree; ++n) {
          counts.push_back(cache.bucket(n).size());
          if (!counts_only) {
            nlohmann::ordered_json words = nlohmann::ordered_json::array();
            for (const BracketedWord& w : cache.bucket(n)) words.push_back(json_of(w));
            nlohmann::ordered_json item;
            item["degree"] = n;
            item["words"] = std::move(words);
            degrees.push_back(std::move(item));
          }
        }
        nlohmann::ordered_json j;
        nlohmann::ordered_json names = nlohmann::ordered_json::array();
        for (const Letter& l : alphabet) names.push_back(l.name());
        j["alphabet"] = std::move(names);
        j["max_degree"] = max_degree;
        j["counts"] = std::move(counts);
        if (!counts_only) j["degrees"] = std::move(degrees);
        std::cout << j.dump() << "\n";
      } else if (counts_only) {
        for (unsigned n = 0; n <= max_degree; ++n)
          std::cout << (n ? " " : "") << cache.bucket(n).size();
        std::cout << "\n";
      } else {
        for (unsigned n = 0; n <= max_degree; ++n) {
          std::cout << "# degree " << n << ": " << cache.bucket(n).size() << " words\n";
          for (const BracketedWord& w : cache.bucket(n)) std::cout << print_word(w) << "\n";
        }
      }
      return 0;
    }

    if (check_cmd->parsed()) {
      std::vector<Letter> alphabet = alphabet_from(check_alphabet);
      std::vector<LawInfo> selected;
      if (law == "all") {
        selected = law_catalog();
      } else {
        for (const LawInfo& info : law_catalog())
          if (info.id == law) selected.push_back(info);
        if (selected.empty()) throw UnknownLawError(law);
      }
      VerifyMode mode = sample_count ? VerifyMode::random(*sample_count, seed)
                                     : VerifyMode::exhaustive();
      bool all_passed = true;
      nlohmann::ordered_json reports = nlohmann::ordered_json::array();
      for (const LawInfo& info : selected) {
        unsigned bound = check_degree.value_or(info.default_degree);
        LawReport r = run_suite(info.id, alphabet, bound, mode);
        all_passed = all_passed && r.passed;
        if (as_json) reports.push_back(json_of(r));
        else if (!quiet || !r.passed) std::cout << print_report(r) << "\n";
      }
      if (as_json) std::cout << reports.dump() << "\n";
      return all_passed ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  return 2;
}
