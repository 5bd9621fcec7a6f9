#include "bruhat/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bruhat/acceptance.hpp"
#include "bruhat/errors.hpp"
#include "bruhat/report.hpp"

namespace bruhat {

namespace {

class UnknownSelector : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct WordInput {
  std::optional<std::string> word;
  std::optional<std::string> perm;
  std::optional<int> rank;
};

void add_word_options(CLI::App* cmd, WordInput& in) {
  cmd->add_option("--word", in.word, "Reduced word as comma-separated letters, e.g. 2,3,1,2,4,3,2");
  cmd->add_option("--perm", in.perm, "Permutation in one-line notation, e.g. 45132; a canonical word is used");
  cmd->add_option("--rank", in.rank, "Rank n for --word (default: largest letter)");
}

ReducedWord resolve_word(const WordInput& in) {
  if (in.word.has_value() == in.perm.has_value()) throw ParseError("give exactly one of --word and --perm");
  if (in.perm) {
    const Permutation p = parse_permutation(*in.perm);
    if (p.size() < 2) throw ParseError("permutation needs at least two entries");
    return canonical_word(p);
  }
  std::vector<int> letters = parse_letters(*in.word);
  int rank = 1;
  for (int x : letters) rank = std::max(rank, x);
  if (in.rank) {
    if (*in.rank < 1) throw ParseError("--rank must be positive");
    rank = *in.rank;
  }
  return ReducedWord(std::move(letters), rank);
}

SpinWeylElement resolve_selector(const ReducedWord& word, const std::string& selector) {
  const bool numeric = !selector.empty() && selector.find_first_not_of("0123456789") == std::string::npos;
  if (numeric) {
    const auto orbits = orbit_decomposition(word);
    std::size_t index = 0;
    try {
      index = std::stoul(selector);
    } catch (const std::exception&) {
      throw UnknownSelector("orbit index " + selector + " out of range");
    }
    if (index >= orbits.size()) {
      throw UnknownSelector("orbit index " + selector + " out of range (" + std::to_string(orbits.size()) + " orbits)");
    }
    return orbits[index].representative;
  }
  AncestryVector v;
  try {
    v = parse_ancestry(selector);
  } catch (const ParseError&) {
    throw UnknownSelector("selector '" + selector + "' is neither an orbit index nor a sign vector");
  }
  if (v.size() != word.length() || v.dim() != 0) {
    throw UnknownSelector("sign vector must have " + std::to_string(word.length()) + " entries of +-1");
  }
  return lift_word(word, v.signs());
}

void write_output(const std::string& text, const std::optional<std::string>& path, std::ostream& out) {
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + *path + " for writing");
  file << text;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sign-vector strata and click graphs for reduced words"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "Worker threads for enumeration")->check(CLI::Range(1, 256));

  WordInput analyze_in;
  std::optional<std::string> analyze_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "JSON report for a reduced word or permutation");
  add_word_options(analyze_cmd, analyze_in);
  analyze_cmd->add_option("--out", analyze_out, "Write the report here instead of standard output");

  int eta_n = 0;
  auto* eta_cmd = app.add_subcommand("components-eta", "Connected components for the longest element of S_{n+1}");
  eta_cmd->add_option("--n", eta_n, "Rank n, 1..6")->required();

  WordInput export_in;
  std::string selector;
  std::string format = "json";
  std::optional<std::string> export_out;
  auto* export_cmd = app.add_subcommand("export", "Export the 1-skeleton of one BL_z");
  add_word_options(export_cmd, export_in);
  export_cmd->add_option("--z", selector, "Orbit index (as listed by analyze) or a sign vector such as ++-+-")
      ->required();
  export_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  export_cmd->add_option("--out", export_out, "Output file (default: standard output)");

  std::string level = "fast";
  std::vector<int> only;
  auto* check_cmd = app.add_subcommand("check", "Run the acceptance suite");
  check_cmd->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  check_cmd->add_option("--criterion", only, "Run only these criteria")->check(CLI::Range(1, criterion_count));

  std::vector<std::string> args;
  for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  }

  try {
    if (analyze_cmd->parsed()) {
      const ReducedWord word = resolve_word(analyze_in);
      write_output(to_json(analyze(word, threads)).dump(2) + "\n", analyze_out, out);
    } else if (eta_cmd->parsed()) {
      if (eta_n < 1 || eta_n > 6) {
        err << "error: --n must be between 1 and 6\n";
        return exit_parse_error;
      }
      out << components_total(canonical_word(longest_element(eta_n)), threads) << "\n";
    } else if (export_cmd->parsed()) {
      const ReducedWord word = resolve_word(export_in);
      const SpinWeylElement z = resolve_selector(word, selector);
      const StrataExport e = make_export(word, z);
      write_output(format == "dot" ? to_dot(e) : to_json(e).dump(2) + "\n", export_out, out);
    } else if (check_cmd->parsed()) {
      bool all = true;
      run_acceptance(level == "full" ? CheckLevel::full : CheckLevel::fast, only, [&](const CriterionResult& r) {
        all = all && r.passed;
        out << format_result(r) << std::endl;
      });
      out << (all ? "all criteria passed" : "some criteria FAILED") << "\n";
      return all ? exit_ok : exit_check_failed;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_parse_error;
  } catch (const InvalidWord& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid_word;
  } catch (const UnknownSelector& e) {
    err << "error: " << e.what() << "\n";
    return exit_unknown_selector;
  }
  return exit_ok;
}

}  // namespace bruhat
