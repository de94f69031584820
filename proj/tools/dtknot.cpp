// dtknot: exact colored HOMFLY-PT invariants of double twist knots,
// cyclotomic coefficient extraction, and self-verification suites.

#include <atomic>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "dtknot/cyclotomic.hpp"
#include "dtknot/output.hpp"
#include "dtknot/selfcheck.hpp"
#include "dtknot/version.hpp"

namespace {

struct Range {
  int lo = 0;
  int hi = 0;
};

// "A..B" with A <= B, both integers (possibly negative).
std::optional<Range> parse_range(const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) return std::nullopt;
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, sep);
    const std::string hi_text = text.substr(sep + 2);
    const int lo = std::stoi(lo_text, &used);
    if (used != lo_text.size()) return std::nullopt;
    const int hi = std::stoi(hi_text, &used);
    if (used != hi_text.size()) return std::nullopt;
    if (lo > hi) return std::nullopt;
    return Range{lo, hi};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

dtknot::OutputFormat parse_format(const std::string& name) {
  if (name == "json") return dtknot::OutputFormat::Json;
  if (name == "latex") return dtknot::OutputFormat::Latex;
  return dtknot::OutputFormat::Text;
}

int run_compute(int p, int s, int N, std::optional<int> sun, const std::string& format) {
  dtknot::OutputRecord rec;
  rec.p = p;
  rec.s = s;
  rec.N = N;
  rec.sun = sun;
  rec.formula = "theorem-1.2";
  const dtknot::LaurentPoly generic = dtknot::homfly_double_twist({p, s, N});
  rec.polynomial = sun ? generic.specialize_a(*sun) : generic;
  std::cout << dtknot::format_output(rec, parse_format(format)) << "\n";
  return 0;
}

int run_expand(int p, int s, int n, int kmax, int extra) {
  const dtknot::CyclotomicData data = dtknot::verify_conjecture(p, s, n, kmax, extra);
  std::cout << "knot (p, s) = (" << p << ", " << s << "), a = q^" << n << "\n";
  for (std::size_t k = 0; k < data.coefficients.size(); ++k)
    std::cout << "H_" << k << " = " << data.coefficients[k] << "\n";
  std::cout << "checked colors:";
  for (int N : data.checked_colors) std::cout << ' ' << N;
  std::cout << "\n";
  if (data.status.ok()) {
    std::cout << "status: verified\n";
    return 0;
  }
  std::cout << "status: "
            << (data.status.kind == dtknot::VerificationStatus::Kind::DivisionFailed
                    ? "division failed"
                    : "mismatch")
            << " at index " << data.status.index << " (" << data.status.detail << ")\n";
  return 1;
}

int run_verify(const std::string& suite, std::uint64_t seed, int cases) {
  namespace checks = dtknot::checks;
  std::vector<checks::CheckResult> results;
  if (suite == "core") {
    results = checks::run_core_checks(seed, cases);
  } else if (suite == "coefficients") {
    results = checks::run_coefficient_checks();
  } else if (suite == "cyclotomic") {
    results = checks::run_cyclotomic_checks();
  } else {
    results = checks::run_all_checks(seed, cases);
  }
  int failures = 0;
  for (const auto& r : results) {
    if (r.passed) {
      std::cout << "PASS " << r.name << "\n";
    } else {
      ++failures;
      std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
    }
  }
  std::cout << results.size() << " checks, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int run_table(const Range& prange, const Range& srange, int nmax, const std::string& path,
              int jobs) {
  struct Row {
    int p, s, N;
  };
  std::vector<Row> rows;
  for (int p = prange.lo; p <= prange.hi; ++p)
    for (int s = srange.lo; s <= srange.hi; ++s)
      for (int N = 0; N <= nmax; ++N) rows.push_back({p, s, N});

  std::vector<std::string> lines(rows.size());
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        dtknot::OutputRecord rec;
        rec.p = rows[i].p;
        rec.s = rows[i].s;
        rec.N = rows[i].N;
        rec.formula = "theorem-1.2";
        rec.polynomial = dtknot::homfly_double_twist({rec.p, rec.s, rec.N});
        lines[i] = dtknot::format_output(rec, dtknot::OutputFormat::Json);
      } catch (const std::exception& e) {
        failed = true;
        lines[i] = e.what();
        return;
      }
    }
  };

  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failed) {
    std::cerr << "table generation failed\n";
    return 1;
  }

  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 2;
  }
  for (const std::string& line : lines) out << line << '\n';
  out.close();
  if (!out) {
    std::cerr << "write failed: " << path << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact colored HOMFLY-PT invariants of double twist knots"};
  app.set_version_flag("--version", std::string(dtknot::kVersion));
  app.require_subcommand(1);

  // compute
  int c_p = 0, c_s = 0, c_n = 0;
  std::optional<int> c_sun;
  std::string c_format = "text";
  CLI::App* compute = app.add_subcommand("compute", "Evaluate one colored invariant");
  compute->add_option("--p", c_p, "First twist parameter")->required();
  compute->add_option("--s", c_s, "Second twist parameter")->required();
  compute->add_option("--N", c_n, "Color (symmetric representation)")
      ->required()
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--sun", c_sun, "Specialize a = q^n")->check(CLI::PositiveNumber);
  compute->add_option("--format", c_format, "Output format")
      ->check(CLI::IsMember({"json", "latex", "text"}));

  // expand
  int e_p = 0, e_s = 0, e_sun = 2, e_kmax = 4, e_extra = 2;
  CLI::App* expand =
      app.add_subcommand("expand", "Extract and verify cyclotomic coefficients");
  expand->add_option("--p", e_p, "First twist parameter")->required();
  expand->add_option("--s", e_s, "Second twist parameter")->required();
  expand->add_option("--sun", e_sun, "Specialize a = q^n")
      ->required()
      ->check(CLI::PositiveNumber);
  expand->add_option("--kmax", e_kmax, "Extract H_0..H_kmax")
      ->required()
      ->check(CLI::NonNegativeNumber);
  expand->add_option("--extra-N", e_extra, "Extra colors to re-verify at")
      ->check(CLI::NonNegativeNumber);

  // verify
  std::string v_suite;
  std::uint64_t v_seed = dtknot::checks::kDefaultSeed;
  int v_cases = dtknot::checks::kDefaultCases;
  CLI::App* verify = app.add_subcommand("verify", "Run self-verification suites");
  verify->add_option("--suite", v_suite, "Which suite to run")
      ->required()
      ->check(CLI::IsMember({"core", "coefficients", "cyclotomic", "all"}));
  verify->add_option("--seed", v_seed, "Seed for the randomized checks");
  verify->add_option("--cases", v_cases, "Randomized cases per check")
      ->check(CLI::PositiveNumber);

  // table
  std::string t_prange, t_srange, t_out;
  int t_nmax = 0, t_jobs = 1;
  CLI::App* table = app.add_subcommand("table", "Batch-generate invariants as NDJSON");
  table->add_option("--p-range", t_prange, "p range, e.g. -2..2")->required();
  table->add_option("--s-range", t_srange, "s range, e.g. 1..2")->required();
  table->add_option("--N-max", t_nmax, "Largest color")
      ->required()
      ->check(CLI::NonNegativeNumber);
  table->add_option("--out", t_out, "Output path")->required();
  table->add_option("--jobs", t_jobs, "Worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    std::cerr << '\n' << app.help();
    return 2;
  }

  try {
    if (compute->parsed()) return run_compute(c_p, c_s, c_n, c_sun, c_format);
    if (expand->parsed()) return run_expand(e_p, e_s, e_sun, e_kmax, e_extra);
    if (verify->parsed()) return run_verify(v_suite, v_seed, v_cases);
    if (table->parsed()) {
      const auto pr = parse_range(t_prange);
      const auto sr = parse_range(t_srange);
      if (!pr || !sr) {
        std::cerr << "invalid range (expected A..B with A <= B)\n\n" << app.help();
        return 2;
      }
      return run_table(*pr, *sr, t_nmax, t_out, t_jobs);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
