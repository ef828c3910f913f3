// One line per acceptance criterion; exit status is nonzero iff any fails.
// argv[1] is the fgcert CLI, used for the byte-level determinism criterion.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "fgcert/verify.hpp"

namespace {

struct SuiteCriterion {
  int number;
  const char* suite;
  const char* what;
  double limit_seconds;
};

// Runtime limits in seconds, per criterion.
constexpr SuiteCriterion kSuites[] = {
    {1, "section2", "rewriting identities, invariance, induced action", 1.0},
    {2, "largeness", "B, eigenlattices, nu, B-commutation", 5.0},
    {3, "magnus", "fundamental identity, Magnus hom, J law, injectivity, local commutators", 60.0},
    {4, "congruence", "n = 1, p = 5 certificate and pi(N) in K", 30.0},
    {5, "affine", "(5,11) and (3,7) irreducibility, two-generation, Vandermonde", 5.0},
    {6, "properties", "words, homs, quotients property suites", 60.0},
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
  bool all_ok = true;
  for (const auto& c : kSuites) {
    const auto start = std::chrono::steady_clock::now();
    fgcert::Report report;
    std::string error;
    try {
      report = fgcert::run_suite(c.suite, {0, false});
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::size_t passed = report.count(fgcert::CheckStatus::pass), total = report.checks.size();
    const bool ok = error.empty() && total > 0 && passed == total && secs < c.limit_seconds;
    all_ok = all_ok && ok;
    std::printf("criterion %d: %s  %s [%s %zu/%zu checks, %.3f s, limit %.0f s]%s%s\n", c.number, ok ? "PASS" : "FAIL",
                c.what, c.suite, passed, total, secs, c.limit_seconds, error.empty() ? "" : " error: ", error.c_str());
    for (const auto& r : report.checks)
      if (r.status != fgcert::CheckStatus::pass)
        std::printf("    %s: expected '%s', computed '%s'\n", r.id.c_str(), r.expected.c_str(), r.computed.c_str());
  }

  bool det_ok = false;
  std::string detail = "no CLI path given";
  if (argc > 1) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "fgcert_acceptance_a.json", b = dir / "fgcert_acceptance_b.json";
    auto run = [&](const std::filesystem::path& out) {
      const std::string cmd = std::string("\"") + argv[1] + "\" verify all --seed 42 --out \"" + out.string() + "\"";
      return std::system(cmd.c_str());
    };
    const int ra = run(a), rb = run(b);
    const std::string sa = slurp(a), sb = slurp(b);
    det_ok = ra == 0 && rb == 0 && !sa.empty() && sa == sb;
    std::ostringstream d;
    d << "exit codes " << ra << "/" << rb << ", " << sa.size() << " and " << sb.size() << " bytes, "
      << (sa == sb ? "identical" : "different");
    detail = d.str();
    std::filesystem::remove(a);
    std::filesystem::remove(b);
  }
  all_ok = all_ok && det_ok;
  std::printf("criterion 7: %s  verify all --seed 42 twice is byte-identical [%s]\n", det_ok ? "PASS" : "FAIL",
              detail.c_str());
  return all_ok ? 0 : 1;
}
