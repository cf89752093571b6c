#include "beltca_cli/cli.hpp"

#include <CLI11.hpp>

#include <sstream>

#include "beltca/error.hpp"
#include "beltca/serialize.hpp"
#include "beltca_cli/report.hpp"
#include "beltca_cli/spacetime.hpp"
#include "beltca_cli/suites.hpp"
#include "beltca_cli/system.hpp"

namespace beltca::cli {

namespace {

PeriodicConfig resolve_input(const System& s, const std::string& input) {
  if (auto named = s.configuration(input)) return *named;
  return parse_periodic(input, s.table.alphabet());
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, sep);) out.push_back(part);
  return out;
}

struct Args {
  std::string config, word, input, format = "text", alphabet, words;
  std::vector<std::string> suites;
  std::optional<std::size_t> period, ball, k, n0;
  std::optional<std::uint64_t> seed;
};

int cmd_apply(const Args& a, std::ostream& out) {
  const System s = load_system(a.config);
  const auto w = GroupWord::parse(a.word, s.table);
  out << format_periodic(apply_word(s.table, w, resolve_input(s, a.input))) << "\n";
  return kExitOk;
}

int cmd_spacetime(const Args& a, std::ostream& out) {
  const auto fmt = parse_diagram_format(a.format);
  const System s = load_system(a.config);
  const auto w = GroupWord::parse(a.word, s.table);
  out << render(build_spacetime(s.table, w, resolve_input(s, a.input)), fmt);
  return kExitOk;
}

// Suites with something to check in this config; khat and neumann when there is no config.
std::vector<std::string> applicable_suites(const System& s) {
  if (!s.table.alphabet()) return {"khat", "neumann"};
  std::vector<std::string> out;
  if (!s.automorphisms.empty()) out.push_back("core");
  if (!s.afos.empty()) out.push_back("afo");
  if (!s.embedded.empty() || !s.runwise.empty()) out.push_back("belt");
  if (s.pointy) out.push_back("pointy");
  if (s.wreath) out.push_back("wreath");
  if (s.khat_k) out.push_back("khat");
  if (s.neumann) out.push_back("neumann");
  return out;
}

int cmd_verify(const Args& a, std::ostream& out) {
  const System s = a.config.empty() ? System{} : load_system(a.config);
  std::vector<std::string> suites;
  for (const auto& item : a.suites)
    for (const auto& name : split(item, ','))
      if (!name.empty()) suites.push_back(name);
  if (suites.empty()) suites = applicable_suites(s);
  for (const auto& name : suites)
    if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
      throw ParseError("unknown suite '" + name + "'");
  const SuiteOptions opt{a.period, a.ball, a.k, a.seed};
  Report report;
  for (const auto& name : suites) run_suite(name, s, opt, report);
  report.write(out);
  out << report.summary() << "\n";
  return report.ok() ? kExitOk : kExitCheckFailed;
}

std::vector<Word> parse_word_list(const std::string& text, const AlphabetRef& alpha) {
  std::vector<Word> words;
  for (const auto& w : split(text, ';')) {
    Word word;
    for (const auto& c : split(w, ',')) {
      auto v = alpha->find(c);
      if (!v) throw ParseError("unknown symbol '" + c + "'");
      word.push_back(*v);
    }
    words.push_back(std::move(word));
  }
  if (words.empty()) throw ParseError("--words is empty");
  return words;
}

std::string words_text(const Alphabet& alpha, const std::vector<Word>& words) {
  std::string s;
  for (const auto& w : words) {
    if (!s.empty()) s += ';';
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + alpha.label(w[i]);
  }
  return s;
}

void safety_records(Report& r, const AlphabetRef& alpha, const std::vector<Word>& words, std::size_t n0) {
  const auto res = check_safety(*alpha, words, n0);
  const std::string check = words_text(*alpha, words) + ".n0=" + std::to_string(n0);
  std::string witness;
  if (res.collision) {
    const auto& c = *res.collision;
    witness = format_periodic(PeriodicConfig(alpha, c.tape)) + " word" + std::to_string(c.word_a + 1) + "@" +
              std::to_string(c.start_a) + " word" + std::to_string(c.word_b + 1) + "@" + std::to_string(c.start_b);
  }
  r.add("safety", check, res.safe, witness);
  r.add("safety", words_text(*alpha, words) + ".minimal_n0", Status::Pass,
        std::to_string(minimal_safe_threshold(*alpha, words)));
}

int cmd_safety(const Args& a, std::ostream& out) {
  Report r;
  if (!a.config.empty()) {
    const System s = load_system(a.config);
    if (s.afos.empty()) throw ParseError("config declares no afos");
    for (const auto& e : s.afos)
      safety_records(r, e.afo.alphabet(), e.afo.safe().words(), a.n0 ? *a.n0 : e.afo.safe().threshold());
  } else {
    if (a.alphabet.empty() || a.words.empty() || !a.n0)
      throw ParseError("safety-check needs --config, or --alphabet, --words and --n0");
    const auto alpha = parse_alphabet(a.alphabet);
    try {
      safety_records(r, alpha, parse_word_list(a.words, alpha), *a.n0);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  r.write(out);
  return r.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_list(const Args& a, std::ostream& out) {
  const System s = load_system(a.config);
  out << "# alphabet: " << s.table.alphabet()->description() << " (" << s.table.alphabet()->size() << " symbols)\n";
  for (std::size_t i = 0; i < s.table.size(); ++i)
    out << s.table[i].name << (s.table[i].involution ? "\tinvolution" : "") << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reversible cellular automata realizing group embeddings", "beltca"};
  app.require_subcommand(1);
  Args a;

  auto* apply = app.add_subcommand("apply", "Apply a generator word to a configuration");
  apply->add_option("--config", a.config, "System config (JSON)")->required();
  apply->add_option("--word", a.word, "Generator word, rightmost letter first")->required();
  apply->add_option("--input", a.input, "Tape text or configuration name")->required();

  auto* st = app.add_subcommand("spacetime", "Render a spacetime diagram");
  st->add_option("--config", a.config, "System config (JSON)")->required();
  st->add_option("--word", a.word, "Generator word")->required();
  st->add_option("--input", a.input, "Tape text or configuration name")->required();
  st->add_option("--format", a.format, "text, svg or tikz");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--config", a.config, "System config (JSON)");
  verify->add_option("--suite", a.suites, "Suite name(s); default: those the config supports")->delimiter(',');
  verify->add_option("--period", a.period, "Exhaustive period bound P");
  verify->add_option("--ball", a.ball, "Word length bound L");
  verify->add_option("--seed", a.seed, "Seed for sampled checks");
  verify->add_option("--k", a.k, "Number of tracks for the khat suite");

  auto* safety = app.add_subcommand("safety-check", "Check n0-safety of word sets");
  safety->add_option("--config", a.config, "Config with afos");
  safety->add_option("--alphabet", a.alphabet, "Alphabet text, e.g. plain(3)");
  safety->add_option("--words", a.words, "Words as 'c,c,c;c,c'");
  safety->add_option("--n0", a.n0, "Threshold");

  auto* list = app.add_subcommand("list-generators", "List the generator table");
  list->add_option("--config", a.config, "System config (JSON)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(apply)) return cmd_apply(a, out);
    if (app.got_subcommand(st)) return cmd_spacetime(a, out);
    if (app.got_subcommand(verify)) return cmd_verify(a, out);
    if (app.got_subcommand(safety)) return cmd_safety(a, out);
    if (app.got_subcommand(list)) return cmd_list(a, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}

}  // namespace beltca::cli
