#include "zhou/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "zhou/decompose.hpp"
#include "zhou/error.hpp"
#include "zhou/io.hpp"
#include "zhou/matz.hpp"
#include "zhou/oracle.hpp"

namespace zhou::cli {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

struct Case {
  std::string label;
  MatZ matrix;
};

MatZ random_matrix(std::uint64_t seed, u64 modulus, std::size_t max_dim) {
  std::mt19937_64 rng(seed);
  const std::size_t d = 1 + static_cast<std::size_t>(rng() % max_dim);
  MatZ a(modulus, d);
  for (auto& x : a.data()) x = rng() % modulus;
  return a;
}

bool decompose_ok(const MatZ& a) {
  try {
    return verify(a, decompose_matrix(a)).all_ok();
  } catch (const std::exception&) {
    return false;
  }
}

// Runs decompose+verify over all cases in parallel; returns the index of the
// first failure, if any.
std::optional<std::size_t> check_all(const std::vector<Case>& cases) {
  std::vector<char> ok(cases.size(), 0);
  const auto n = static_cast<long long>(cases.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) ok[i] = decompose_ok(cases[i].matrix);
  for (std::size_t i = 0; i < cases.size(); ++i)
    if (!ok[i]) return i;
  return std::nullopt;
}

void report_failure(std::ostream& out, const char* phase, const Case& c) {
  out << phase << " failure at " << c.label << "; replay with `zhou decompose` on:\n"
      << io::format_matrix_text(c.matrix);
}

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path);
  if (!file) throw ParseError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

int emit(const MatZ& input, const Decomposition& d, const std::string& format, std::ostream& out,
         std::ostream& err) {
  const VerifyReport report = verify(input, d);
  if (!report.all_ok()) {
    err << "error: internal verification failed (sum " << report.sum_ok << ", t1 " << report.t1_tripotent
        << ", t2 " << report.t2_tripotent << ", nil " << report.n_nilpotent << ")\n";
    return kVerificationFailed;
  }
  if (format == "text")
    out << io::certificate_text(d, true);
  else
    out << io::certificate_json(d, true).dump() << '\n';
  return kOk;
}

}  // namespace

int run_selftest(const SelftestOptions& options, std::ostream& out) {
  if (options.max_dim == 0 || options.moduli.empty()) {
    out << "nothing to test\n";
    return kOk;
  }
  std::size_t total = 0;

  std::vector<Case> cases;
  for (std::size_t mi = 0; mi < options.moduli.size(); ++mi) {
    const u64 n = options.moduli[mi];
    for (std::size_t i = 0; i < options.count; ++i) {
      const std::uint64_t s = splitmix64(options.seed ^ splitmix64(mi * 0x100000001ull + i));
      cases.push_back({"random case " + std::to_string(i) + " mod " + std::to_string(n),
                       random_matrix(s, n, options.max_dim)});
    }
  }
  if (auto bad = check_all(cases)) {
    report_failure(out, "random", cases[*bad]);
    return kSelftestFailed;
  }
  out << "random: " << cases.size() << "/" << cases.size() << " verified\n";
  total += cases.size();

  if (options.exhaustive) {
    for (const u64 n : options.moduli) {
      const std::size_t d = options.max_dim;
      const u64 candidates = oracle::candidate_count(n, d);
      const std::string name = "M_" + std::to_string(d) + "(Z_" + std::to_string(n) + ")";
      if (candidates > options.budget) {
        out << "exhaustive " << name << ": skipped, " << candidates << " matrices exceed budget\n";
        continue;
      }
      std::vector<Case> all;
      for (u64 idx = 0; idx < candidates; ++idx) {
        MatZ a(n, d);
        u64 rest = idx;
        for (std::size_t k = a.data().size(); k-- > 0;) {
          a.data()[k] = rest % n;
          rest /= n;
        }
        all.push_back({name + " #" + std::to_string(idx), std::move(a)});
      }
      if (auto bad = check_all(all)) {
        report_failure(out, "exhaustive", all[*bad]);
        return kSelftestFailed;
      }
      out << "exhaustive " << name << ": " << all.size() << "/" << all.size() << " verified\n";
      total += all.size();
    }
  }

  // Oracle cross-check on the random cases that are small enough.
  std::map<std::pair<u64, std::size_t>, std::vector<MatZ>> tables;
  std::vector<std::size_t> picked;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const MatZ& a = cases[i].matrix;
    if (oracle::candidate_count(a.modulus(), a.dim()) > options.budget) continue;
    auto key = std::make_pair(a.modulus(), a.dim());
    if (!tables.contains(key)) tables.emplace(key, oracle::enumerate_tripotents(a.modulus(), a.dim(), options.budget));
    picked.push_back(i);
  }
  std::vector<char> found(picked.size(), 0);
  const auto np = static_cast<long long>(picked.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (long long j = 0; j < np; ++j) {
    const MatZ& a = cases[picked[j]].matrix;
    const auto& table = tables.at({a.modulus(), a.dim()});
    auto d = oracle::oracle_decompose(a, table);
    found[j] = d.has_value() && verify(a, *d).all_ok();
  }
  for (std::size_t j = 0; j < picked.size(); ++j)
    if (!found[j]) {
      report_failure(out, "oracle", cases[picked[j]]);
      return kSelftestFailed;
    }
  out << "oracle: " << picked.size() << "/" << picked.size() << " found\n";
  total += picked.size();

  out << "all " << total << " cases verified\n";
  return kOk;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decompose square matrices over Z_n (n = 2^k 3^l 5^m) into two tripotents and a nilpotent"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string path;
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
  };

  auto* decompose = app.add_subcommand("decompose", "Decompose a matrix read from a file or '-'");
  decompose->add_option("input", path, "Matrix file, or - for stdin")->required();
  add_format(decompose);

  u64 scalar_n = 0;
  std::int64_t scalar_a = 0;
  auto* scalar = app.add_subcommand("scalar", "Decompose an element of Z_n");
  scalar->add_option("n", scalar_n, "Modulus")->required();
  scalar->add_option("a", scalar_a, "Element")->required();
  add_format(scalar);

  auto* triangular = app.add_subcommand("triangular", "Decompose an upper-triangular matrix");
  triangular->add_option("input", path, "Matrix file, or - for stdin")->required();
  add_format(triangular);

  u64 budget = oracle::kDefaultBudget;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force decomposition of a small matrix");
  oracle_cmd->add_option("input", path, "Matrix file, or - for stdin")->required();
  oracle_cmd->add_option("--budget", budget, "Maximum number of candidate matrices");
  add_format(oracle_cmd);

  SelftestOptions st;
  auto* selftest = app.add_subcommand("selftest", "Fuzz the decomposition and cross-check with the oracle");
  selftest->add_option("--max-dim", st.max_dim, "Largest matrix dimension")->check(CLI::Range(1, 64));
  selftest->add_option("--moduli", st.moduli, "Comma-separated moduli")->delimiter(',');
  selftest->add_option("--count", st.count, "Random cases per modulus");
  selftest->add_option("--seed", st.seed, "RNG seed");
  selftest->add_flag("--exhaustive", st.exhaustive, "Also sweep every matrix of dimension --max-dim");
  selftest->add_option("--budget", st.budget, "Candidate limit for oracle and exhaustive sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*selftest) {
      for (u64 n : st.moduli) factor_modulus(n);
      return run_selftest(st, out);
    }
    if (*scalar) {
      const Modulus mod = factor_modulus(scalar_n);
      const Residue a = Residue::of(scalar_a, mod.n());
      MatZ input(mod.n(), 1);
      input.set(0, 0, a.value);
      return emit(input, decompose_scalar(a), format, out, err);
    }
    const MatZ input = io::parse_matrix(read_input(path, in));
    if (*decompose) return emit(input, decompose_matrix(input), format, out, err);
    if (*triangular) return emit(input, decompose_triangular(input), format, out, err);
    if (*oracle_cmd) {
      auto d = oracle::oracle_decompose(input, budget);
      if (!d) {
        err << "error: no decomposition found\n";
        return kOracleNotFound;
      }
      return emit(input, *d, format, out, err);
    }
  } catch (const UnsupportedModulus& e) {
    err << "error: " << e.what() << '\n';
    return kUnsupportedModulus;
  } catch (const ParseError& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const NotUpperTriangular& e) {
    err << "error: malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const std::exception& e) {
    err << "error: internal failure: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}

}  // namespace zhou::cli
