#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plesken/checker.hpp"
#include "plesken/density.hpp"
#include "plesken/error.hpp"
#include "plesken/ffield.hpp"
#include "plesken/meataxe.hpp"
#include "plesken/reptheory.hpp"
#include "report.hpp"

#ifndef PLESKEN_FIXTURE_DIR
#define PLESKEN_FIXTURE_DIR "fixtures"
#endif

using namespace plesken;

namespace {

enum Exit { kOk = 0, kUsage = 1, kMismatch = 2, kLimit = 3 };

struct RunConfig {
  std::string group;
  std::string file;
  std::size_t q = 0;
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::uint64_t seed = 0;
  std::size_t cap = Group::kDefaultCap;
  std::string format = "text";
  unsigned field_degree = 0;
  std::uint64_t bound = 10000;
  unsigned threads = 0;
  bool quick = false;
  std::vector<std::string> fixtures;
};

Group load_group(const RunConfig& cfg) {
  if (cfg.group.empty() == cfg.file.empty()) throw ValidationError("give exactly one of --group and --file");
  if (!cfg.file.empty()) {
    Group g = group_from_file(cfg.file, cfg.cap);
    g.set_name(std::filesystem::path(cfg.file).stem().string());
    return g;
  }
  if (cfg.q && cfg.n) throw ValidationError("give at most one of --q and --n");
  return builtin_group(cfg.group, cfg.q ? cfg.q : cfg.n, cfg.cap);
}

int cmd_analyze(const RunConfig& cfg) {
  if (cfg.p < 3 || !is_prime_number(cfg.p)) throw ValidationError("--p must be an odd prime");
  const Group g = load_group(cfg);
  const bool json = cfg.format == "json-like";
  if (g.order() % cfg.p == 0) {
    const ConjectureReport r = check_conjecture(g, cfg.p, cfg.seed, cfg.field_degree);
    if (json)
      std::cout << to_json(r).dump(2) << "\n";
    else
      std::cout << to_text(r);
    return r.passed() ? kOk : kMismatch;
  }
  const OrdinaryReport r = check_ordinary(g, cfg.p, cfg.seed, cfg.field_degree ? cfg.field_degree : 1);
  if (json)
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return r.passed ? kOk : kMismatch;
}

int cmd_density(const RunConfig& cfg) {
  const DensityResult r = density_experiment(cfg.bound, cfg.threads);
  if (cfg.format == "json-like")
    std::cout << to_json(r).dump(2) << "\n";
  else
    std::cout << to_text(r);
  return kOk;
}

std::vector<CharRow> sorted_rows(std::vector<CharRow> rows) {
  for (auto& r : rows) r.field_orbit_size = 1;
  std::sort(rows.begin(), rows.end(), [](const CharRow& a, const CharRow& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.indicator > b.indicator;
  });
  return rows;
}

std::string rows_text(const std::vector<CharRow>& rows) {
  std::string s;
  for (const auto& r : rows) s += " " + std::to_string(r.degree) + indicator_symbol(r.indicator);
  return s;
}

int cmd_selftest(const RunConfig& cfg) {
  std::vector<std::string> files = cfg.fixtures;
  if (files.empty()) {
    const std::filesystem::path dir(PLESKEN_FIXTURE_DIR);
    files.push_back((dir / "small_groups.txt").string());
    if (!cfg.quick) files.push_back((dir / "reference_tables.txt").string());
  }
  std::vector<CharFixture> fixtures;
  for (const auto& f : files) {
    auto more = read_fixtures(f);
    fixtures.insert(fixtures.end(), more.begin(), more.end());
  }
  if (fixtures.empty()) throw ValidationError("no fixtures found");

  MeatAxe ma(cfg.seed);
  std::size_t failed = 0;
  for (const auto& fx : fixtures) {
    const Group g = builtin_group(fx.group_tag, fx.group_param, cfg.cap);
    const auto cd = conjugacy_classes(g);
    std::vector<CharRow> got;
    if (fx.prime == 0)
      got = ordinary_characters(g, cd, cfg.seed).rows;
    else
      got = modular_irreducibles(g, cd, fx.prime, ma).rows;
    const bool ok = sorted_rows(got) == sorted_rows(fx.rows);
    if (!ok) ++failed;
    std::cout << (ok ? "PASS  " : "FAIL  ") << g.name() << "  "
              << (fx.prime ? "brauer " + std::to_string(fx.prime) : std::string("ordinary")) << ":"
              << rows_text(sorted_rows(fx.rows));
    if (!ok) std::cout << "  (computed" << rows_text(sorted_rows(got)) << ")";
    std::cout << "\n";
  }
  std::cout << fixtures.size() - failed << "/" << fixtures.size() << " fixtures pass\n";
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plesken Lie algebras of finite groups: decomposition and classification"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "Seed for randomized algorithms")->capture_default_str();
    sub->add_option("--cap", cfg.cap, "Largest group order to enumerate")->capture_default_str()->check(
        CLI::Range(std::size_t{1}, Group::kMaxOrder));
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"text", "json-like"}))
        ->capture_default_str();
  };

  auto* analyze = app.add_subcommand("analyze", "Decompose L[G] over a finite field and check the predictions");
  analyze->add_option("--group", cfg.group, "Built-in group: sym, alt, dihedral, cyclic, quaternion, klein, sl2, psl2");
  analyze->add_option("--file", cfg.file, "Group file, one generator per line in cycle notation")
      ->check(CLI::ExistingFile);
  analyze->add_option("--q", cfg.q, "Field size for sl2/psl2");
  analyze->add_option("--n", cfg.n, "Parameter for the other built-in groups");
  analyze->add_option("--p", cfg.p, "Odd prime characteristic")->required();
  analyze->add_option("--field-degree", cfg.field_degree, "Work over F_{p^k} (default: splitting field, or F_p)");
  add_common(analyze);

  auto* density = app.add_subcommand("density", "Splitting frequencies of L_p[PSL2(8)] over ordinary primes");
  density->add_option("--bound", cfg.bound, "Use primes below this bound")->capture_default_str()->check(
      CLI::Range(std::uint64_t{100}, std::uint64_t{1} << 31));
  density->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
  add_common(density);

  auto* selftest = app.add_subcommand("selftest", "Compare computed character data with the fixture tables");
  selftest->add_flag("--quick", cfg.quick, "Small groups only");
  selftest->add_option("--fixtures", cfg.fixtures, "Fixture files to use instead of the built-in ones")
      ->check(CLI::ExistingFile);
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*density) return cmd_density(cfg);
    return cmd_selftest(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUsage;
  } catch (const LimitError& e) {
    std::cerr << "limit exceeded: " << e.what() << "\n";
    return kLimit;
  }
}
