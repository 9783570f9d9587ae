/**
 * palfac: generate morphic words, factorize them, dump singular-word tables,
 * run the verification suite, benchmark the engines.
 *
 * Exit codes: 0 success, 2 invalid configuration or input, 3 construction
 * failure (budget, non-prolongable morphism, generation), 4 stall under
 * --strict, 5 verification failure, 6 engine disagreement in bench.
 */

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "palfac/factorization_io.hpp"
#include "palfac/factorizer.hpp"
#include "palfac/families.hpp"
#include "palfac/singular.hpp"
#include "palfac/verify.hpp"
#include "palfac/word.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kBadConfig = 2;
constexpr int kConstruction = 3;
constexpr int kStall = 4;
constexpr int kVerifyFailed = 5;
constexpr int kDisagreement = 6;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

palfac::FamilyHandle resolve_family(const std::string& family, int m,
                                    const std::string& morphism_file, int start) {
  if (family == "fibonacci") return palfac::FamilyHandle::fibonacci();
  if (family == "mbonacci") {
    if (m < 2) throw ConfigError("mbonacci needs -m at least 2");
    return palfac::FamilyHandle::mbonacci(static_cast<palfac::Letter>(m));
  }
  if (family == "thue-morse") return palfac::FamilyHandle::thue_morse();
  if (family == "blocks") return palfac::FamilyHandle::blocks();
  if (family == "morphism") {
    if (morphism_file.empty()) throw ConfigError("--family morphism needs --morphism FILE");
    std::ifstream in(morphism_file);
    if (!in) throw ConfigError("cannot read morphism file: " + morphism_file);
    std::vector<std::string> lines;
    for (std::string line; std::getline(in, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
    if (lines.empty()) throw ConfigError("morphism file has no images");
    const auto alpha = static_cast<palfac::Letter>(lines.size());
    std::vector<palfac::Word> images;
    for (const std::string& line : lines) images.push_back(palfac::parse_word(line, alpha));
    if (start < 0 || start >= static_cast<int>(alpha)) {
      throw ConfigError("--start letter outside the morphism alphabet");
    }
    return palfac::FamilyHandle::custom(palfac::Morphism(std::move(images)),
                                        static_cast<palfac::Letter>(start));
  }
  throw ConfigError("unknown family: " + family +
                    " (expected fibonacci, mbonacci, thue-morse, blocks, morphism)");
}

/// Reads the word for `factorize --input`; "-" means stdin. Understands the
/// optional leading "alphabet=M" line emitted for large alphabets.
palfac::Word read_input_word(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  std::optional<palfac::Letter> alphabet;
  if (text.rfind("alphabet=", 0) == 0) {
    const std::size_t eol = text.find('\n');
    const std::string head = text.substr(9, eol == std::string::npos ? std::string::npos : eol - 9);
    try {
      const int m = std::stoi(head);
      if (m < 1 || m > 255) throw ConfigError("alphabet header out of range");
      alphabet = static_cast<palfac::Letter>(m);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("bad alphabet header: " + head);
    }
    text = eol == std::string::npos ? std::string() : text.substr(eol + 1);
  }
  std::string squeezed;
  squeezed.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) squeezed.push_back(c);
  }
  if (squeezed.empty()) throw ConfigError("input word is empty");
  return palfac::parse_word(squeezed, alphabet);
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ConfigError("cannot write output file: " + path);
  return file;
}

int cmd_gen(const palfac::FamilyHandle& family, std::size_t n, const std::string& format,
            std::ostream& out) {
  if (n < 1) throw ConfigError("window -n must be at least 1");
  const palfac::Word w = family.prefix(n);
  if (format == "plain") {
    if (w.alphabet_size() > 10) out << "alphabet=" << static_cast<int>(w.alphabet_size()) << "\n";
    out << palfac::render(w) << "\n";
  } else if (format == "json") {
    nlohmann::ordered_json j;
    j["family"] = family.name();
    j["alphabet"] = static_cast<int>(w.alphabet_size());
    j["length"] = w.size();
    j["word"] = palfac::render(w);
    out << j.dump() << "\n";
  } else {
    out << "position,letter\n";
    for (std::size_t i = 0; i < w.size(); ++i) {
      out << i << "," << static_cast<int>(w[i]) << "\n";
    }
  }
  return kOk;
}

int cmd_factorize(const std::optional<palfac::FamilyHandle>& family, std::size_t n,
                  const std::string& input, const std::string& mode_text, bool certify,
                  bool strict, const std::string& format, std::ostream& out) {
  const auto mode = palfac::parse_mode(mode_text);
  if (!mode) throw ConfigError("unknown mode: " + mode_text + " (expected z, c, pz, pc)");
  if (family.has_value() == !input.empty()) {
    throw ConfigError("need exactly one word source: --family or --input");
  }
  if (certify && !family) throw ConfigError("--certify needs a generated family word");

  palfac::Word w = palfac::Word::empty_over(2);
  palfac::Factorization f{*mode, 0, {}, std::nullopt, std::nullopt};
  if (family) {
    if (n < 1) throw ConfigError("window -n must be at least 1");
    w = family->prefix(n);
    f = certify ? palfac::certify_by_agreement(*family, *mode, n)
                : palfac::factorize_indexed(w, *mode);
  } else {
    w = read_input_word(input);
    f = palfac::factorize_indexed(w, *mode);
  }

  if (format == "plain") {
    if (w.alphabet_size() > 10) out << "alphabet=" << static_cast<int>(w.alphabet_size()) << "\n";
    out << palfac::factorization_to_plain(f, w);
  } else if (format == "json") {
    out << palfac::factorization_to_json(f, w).dump() << "\n";
  } else {
    out << palfac::factorization_to_csv(f, w);
  }
  if (strict && f.stalled_at.has_value()) return kStall;
  return kOk;
}

int cmd_singular(int m, int upto, const std::string& format, std::ostream& out) {
  if (m < 2) throw ConfigError("singular words need -m at least 2");
  if (upto < 0) throw ConfigError("--upto must be at least 0");
  palfac::PSingularSeq seq(static_cast<palfac::Letter>(m));
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (int n = 0; n <= upto; ++n) {
      const palfac::Word& z = seq.z(n);
      rows.push_back({{"n", n}, {"length", z.size()}, {"word", palfac::render(z)}});
    }
    out << rows.dump() << "\n";
  } else if (format == "csv") {
    out << "n,length,word\n";
    for (int n = 0; n <= upto; ++n) {
      const palfac::Word& z = seq.z(n);
      out << n << "," << z.size() << "," << palfac::csv_field(palfac::render(z)) << "\n";
    }
  } else {
    for (int n = 0; n <= upto; ++n) {
      out << "z_" << n << " = " << palfac::render(seq.z(n)) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(int m_max, int depth, std::size_t window, const std::string& only,
               bool mutate, const std::string& format, std::ostream& out) {
  if (m_max < 2) throw ConfigError("--m-max must be at least 2");
  if (depth < 1) throw ConfigError("--depth must be at least 1");
  if (!only.empty()) {
    const auto& names = palfac::Verifier::check_names();
    if (std::find(names.begin(), names.end(), only) == names.end()) {
      throw ConfigError("unknown check: " + only);
    }
  }
  std::shared_ptr<palfac::SingularProvider> provider =
      std::make_shared<palfac::CachedSingularProvider>();
  if (mutate) {
    provider = std::make_shared<palfac::MutatedSingularProvider>(std::move(provider), 3, 4, 1);
  }
  palfac::Verifier verifier(provider);
  const auto reports =
      verifier.run_matching(static_cast<palfac::Letter>(m_max), depth, window, only);

  bool all_pass = true;
  if (format == "json") {
    for (const auto& r : reports) out << palfac::report_to_json(r).dump() << "\n";
    for (const auto& r : reports) all_pass = all_pass && r.pass;
  } else {
    for (const auto& r : reports) {
      all_pass = all_pass && r.pass;
      std::string params;
      for (const auto& [key, value] : r.parameters) {
        if (!params.empty()) params += " ";
        params += key + "=" + value;
      }
      out << (r.pass ? "PASS  " : "FAIL  ") << std::left << std::setw(30) << r.name << " "
          << std::setw(44) << params << std::right << std::fixed << std::setprecision(3)
          << r.elapsed_seconds << "s\n";
      if (!r.pass && r.counterexample) {
        out << "      at: " << r.counterexample->location << "\n";
        out << "      expected: " << r.counterexample->expected << "\n";
        out << "      actual:   " << r.counterexample->actual << "\n";
      }
    }
    out << (all_pass ? "all checks passed" : "checks FAILED") << " (" << reports.size()
        << " reports)\n";
  }
  return all_pass ? kOk : kVerifyFailed;
}

int cmd_bench(const palfac::FamilyHandle& family, const std::string& mode_text,
              const std::string& windows_text, bool inject_fault, std::ostream& out) {
  std::vector<palfac::FactorizationMode> modes;
  if (mode_text == "all") {
    modes.assign(palfac::kAllModes.begin(), palfac::kAllModes.end());
  } else {
    const auto mode = palfac::parse_mode(mode_text);
    if (!mode) throw ConfigError("unknown mode: " + mode_text);
    modes.push_back(*mode);
  }
  std::vector<std::size_t> windows;
  std::stringstream ss(windows_text);
  for (std::string tok; std::getline(ss, tok, ',');) {
    try {
      const unsigned long long v = std::stoull(tok);
      if (v < 1) throw ConfigError("bench windows must be at least 1");
      windows.push_back(static_cast<std::size_t>(v));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception&) {
      throw ConfigError("bad window list entry: " + tok);
    }
  }
  if (windows.empty()) throw ConfigError("empty window list");

  out << "window,mode,engine,seconds\n";
  bool faulted = false;
  for (std::size_t n : windows) {
    const palfac::Word w = family.prefix(n);
    for (palfac::FactorizationMode mode : modes) {
      const auto t0 = std::chrono::steady_clock::now();
      const palfac::Factorization naive = palfac::factorize_naive(w, mode);
      const auto t1 = std::chrono::steady_clock::now();
      palfac::Factorization indexed = palfac::factorize_indexed(w, mode);
      const auto t2 = std::chrono::steady_clock::now();
      if (inject_fault && !faulted && !indexed.factors.empty()) {
        indexed.factors.back().len += 0;  // keep the tiling; misreport finality instead
        indexed.factors.back().finality =
            indexed.factors.back().finality == palfac::Finality::Certified
                ? palfac::Finality::WindowLocal
                : palfac::Finality::Certified;
        faulted = true;
      }
      if (!(naive == indexed)) {
        std::cerr << "engines disagree: window " << n << ", mode " << palfac::mode_name(mode)
                  << "\n";
        return kDisagreement;
      }
      const double naive_s = std::chrono::duration<double>(t1 - t0).count();
      const double indexed_s = std::chrono::duration<double>(t2 - t1).count();
      out << n << "," << palfac::mode_name(mode) << ",naive," << std::fixed
          << std::setprecision(6) << naive_s << "\n";
      out << n << "," << palfac::mode_name(mode) << ",indexed," << std::fixed
          << std::setprecision(6) << indexed_s << "\n";
    }
  }
  return kOk;
}

void apply_budget(const std::optional<long long>& flag_mb) {
  if (const char* env = std::getenv("PALFAC_BUDGET_MB")) {
    long long mb = 0;
    try {
      mb = std::stoll(env);
    } catch (const std::exception&) {
      throw ConfigError(std::string("bad PALFAC_BUDGET_MB value: ") + env);
    }
    if (mb < 1) throw ConfigError(std::string("bad PALFAC_BUDGET_MB value: ") + env);
    palfac::set_construction_budget_bytes(static_cast<std::size_t>(mb) << 20);
  }
  if (flag_mb) {
    if (*flag_mb < 1) throw ConfigError("--budget-mb must be at least 1");
    palfac::set_construction_budget_bytes(static_cast<std::size_t>(*flag_mb) << 20);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"factorizations and singular words of m-bonacci-style infinite words"};
  app.require_subcommand(1);

  std::string format = "plain";
  std::string output;
  std::optional<long long> budget_mb;
  app.add_option("--budget-mb", budget_mb, "construction budget in MiB")->group("Global");

  std::string family = "fibonacci";
  int m = 2;
  std::string morphism_file;
  int start_letter = 0;
  std::size_t window = 0;
  std::string input;
  std::string mode_text = "z";
  bool certify = false;
  bool strict = false;

  auto add_family_options = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "fibonacci | mbonacci | thue-morse | blocks | morphism");
    cmd->add_option("-m", m, "alphabet size for mbonacci");
    cmd->add_option("--morphism", morphism_file, "file of images, one per letter");
    cmd->add_option("--start", start_letter, "start letter for --family morphism");
  };
  auto add_format_output = [&](CLI::App* cmd) {
    cmd->add_option("-f,--format", format, "plain | json | csv")
        ->check(CLI::IsMember({"plain", "json", "csv"}));
    cmd->add_option("-o,--output", output, "output file (default stdout)");
  };

  CLI::App* gen = app.add_subcommand("gen", "emit a prefix of a family word");
  add_family_options(gen);
  gen->add_option("-n", window, "prefix length")->required();
  add_format_output(gen);

  CLI::App* fact = app.add_subcommand("factorize", "factorize a word");
  add_family_options(fact);
  fact->add_option("-n", window, "prefix length (with --family)");
  fact->add_option("--input", input, "word file, or - for stdin");
  fact->add_option("--mode", mode_text, "z | c | pz | pc");
  fact->add_flag("--certify", certify, "doubled-window agreement factorization");
  fact->add_flag("--strict", strict, "exit 4 when the factorization stalls");
  add_format_output(fact);

  CLI::App* sing = app.add_subcommand("singular", "dump singular words z_0..z_upto");
  sing->add_option("-m", m, "alphabet size");
  int upto = 10;
  sing->add_option("--upto", upto, "largest index");
  add_format_output(sing);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  int m_max = 6;
  int depth = 12;
  std::size_t verify_window = 100000;
  std::string only;
  bool mutate = false;
  verify->add_option("--m-max", m_max, "largest alphabet size");
  verify->add_option("--depth", depth, "index depth for word-level checks");
  verify->add_option("--window", verify_window, "window for factorization checks");
  verify->add_option("--only", only, "run a single check by name");
  verify->add_flag("--mutate", mutate)->group("");  // corrupted-fixture demonstration
  add_format_output(verify);

  CLI::App* bench = app.add_subcommand("bench", "time naive vs indexed engines");
  add_family_options(bench);
  std::string bench_windows = "256,1024,4096";
  bench->add_option("--windows", bench_windows, "comma-separated window sizes");
  bench->add_option("--mode", mode_text, "z | c | pz | pc | all");
  bool inject_fault = false;
  bench->add_flag("--inject-fault", inject_fault)->group("");  // disagreement demonstration
  bench->add_option("-o,--output", output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadConfig;
  }

  try {
    apply_budget(budget_mb);
    std::ofstream out_file;
    std::ostream& out = open_output(output, out_file);
    if (gen->parsed()) {
      return cmd_gen(resolve_family(family, m, morphism_file, start_letter), window, format, out);
    }
    if (fact->parsed()) {
      if (!input.empty() && fact->count("--family")) {
        throw ConfigError("need exactly one word source: --family or --input");
      }
      std::optional<palfac::FamilyHandle> fam;
      if (input.empty()) fam = resolve_family(family, m, morphism_file, start_letter);
      return cmd_factorize(fam, window, input, mode_text, certify, strict, format, out);
    }
    if (sing->parsed()) return cmd_singular(m, upto, format, out);
    if (verify->parsed()) {
      return cmd_verify(m_max, depth, verify_window, only, mutate, format, out);
    }
    if (bench->parsed()) {
      const std::string bench_mode = bench->count("--mode") ? mode_text : "all";
      return cmd_bench(resolve_family(family, m, morphism_file, start_letter), bench_mode,
                       bench_windows, inject_fault, out);
    }
    return kBadConfig;
  } catch (const ConfigError& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kBadConfig;
  } catch (const palfac::BudgetExceeded& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kConstruction;
  } catch (const palfac::NotProlongable& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kConstruction;
  } catch (const palfac::GenerationFailed& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kConstruction;
  } catch (const palfac::StripMismatch& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kConstruction;
  } catch (const std::exception& e) {
    std::cerr << "palfac: " << e.what() << "\n";
    return kBadConfig;
  }
}
