#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "fgcert/affine.hpp"
#include "fgcert/congruence.hpp"
#include "fgcert/errors.hpp"
#include "fgcert/modp.hpp"
#include "fgcert/sampling.hpp"
#include "fgcert/verify.hpp"

namespace {

// Exit codes: 0 success, 1 a check failed, 2 usage or input error.
constexpr int kExitFailed = 1;
constexpr int kExitInput = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + out_path);
  out << text;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  return nlohmann::json::parse(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructive certificates for free groups and their automorphisms"};
  app.set_version_flag("--version", fgcert::kToolVersion);
  app.require_subcommand(1);

  // verify <suite>
  auto* verify = app.add_subcommand("verify", "Run a verification suite against the checks manifest");
  std::string suite;
  std::uint64_t seed = 0;
  std::string out_path, format = "json";
  bool timing = false;
  verify->add_option("suite", suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(fgcert::suite_names()));
  verify->add_option("--seed", seed, "Seed for sampled checks");
  verify->add_option("--out", out_path, "Write the report here instead of stdout");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
  verify->add_flag("--timing", timing, "Record elapsed milliseconds per check");

  // congruence certify
  auto* congruence = app.add_subcommand("congruence", "Congruence subgroup constructions");
  congruence->require_subcommand(1);
  auto* certify = congruence->add_subcommand("certify", "Build N and M for a finite quotient K and certify the index");
  std::string k_path;
  std::uint64_t p = 0;
  std::size_t samples = 1000;
  std::string cert_out;
  certify->add_option("--k-quotient", k_path, "FiniteQuotient JSON for K over a rank-2 alphabet")->required();
  certify->add_option("--p", p, "Odd prime not dividing 6n")->required();
  certify->add_option("--samples", samples, "Sampled N-elements for the pi(N) in K check");
  certify->add_option("--out", cert_out, "Write the certificate here instead of stdout");

  // affine certify
  auto* affine = app.add_subcommand("affine", "Affine group constructions");
  affine->require_subcommand(1);
  auto* affine_certify = affine->add_subcommand("certify", "Irreducibility and two-generation certificates");
  std::uint64_t r = 0, ap = 0, xi = 0;
  bool find_p = false;
  std::string affine_out;
  affine_certify->add_option("--r", r, "Odd prime r")->required();
  auto* p_opt = affine_certify->add_option("--p", ap, "Prime p = 1 mod r");
  auto* xi_opt = affine_certify->add_option("--xi", xi, "Element of order r mod p");
  affine_certify->add_flag("--find-p", find_p, "Use the smallest prime p = 1 mod r when --p is omitted");
  affine_certify->add_option("--out", affine_out, "Write the certificate here instead of stdout");

  // quotients schreier
  auto* quotients = app.add_subcommand("quotients", "Finite quotients and Schreier systems");
  quotients->require_subcommand(1);
  auto* schreier = quotients->add_subcommand("schreier", "Schreier transversal and generators of a point stabilizer");
  std::string q_path;
  schreier->add_option("--quotient", q_path, "FiniteQuotient JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      const auto report = fgcert::run_suite(suite, {seed, timing});
      emit(format == "json" ? fgcert::to_json(report).dump(2) + "\n" : fgcert::to_text(report), out_path);
      return report.all_passed() ? 0 : kExitFailed;
    }

    if (certify->parsed()) {
      const auto input = fgcert::make_congruence_input(fgcert::FiniteQuotient::from_json(read_json(k_path)), p);
      auto n = std::make_shared<const fgcert::NOracle>(input);
      const auto cert = fgcert::certify(input, *n);
      std::mt19937_64 rng(0);
      std::size_t ok = 0;
      for (std::size_t i = 0; i < samples; ++i)
        if (n->pi_lands_in_k(fgcert::random_subgroup_element(n->schreier(), 12, rng))) ++ok;
      auto j = cert.to_json();
      j["piNInKSamples"] = {{"passed", ok}, {"total", samples}};
      emit(j.dump(2) + "\n", cert_out);
      return cert.divides && ok == samples ? 0 : kExitFailed;
    }

    if (affine_certify->parsed()) {
      if (p_opt->count() == 0) {
        if (!find_p) throw fgcert::PreconditionError("--p is required unless --find-p is given");
        ap = fgcert::smallest_prime_one_mod(r);
      }
      std::optional<std::uint64_t> chosen_xi;
      if (xi_opt->count() > 0) chosen_xi = xi;
      const fgcert::AffineGroup g(fgcert::make_affine_params(r, ap, chosen_xi));
      const auto irr = fgcert::irreducibility_certificate(g);
      const auto two = fgcert::two_generation_certificate(g);
      emit(fgcert::to_json(g, irr, two).dump(2) + "\n", affine_out);
      return irr.passed() && two.passed(g) ? 0 : kExitFailed;
    }

    if (schreier->parsed()) {
      const auto q = fgcert::FiniteQuotient::from_json(read_json(q_path));
      const auto s = fgcert::SchreierSystem::build(q);
      nlohmann::ordered_json j;
      j["index"] = s->index();
      auto words = [](const std::vector<fgcert::Word>& ws) {
        auto a = nlohmann::ordered_json::array();
        for (const auto& w : ws) a.push_back(fgcert::to_string(w));
        return a;
      };
      j["transversal"] = words(s->transversal());
      auto table = nlohmann::ordered_json::array();
      const auto rank = q.alphabet()->rank();
      for (std::uint32_t c = 0; c < s->index(); ++c) {
        nlohmann::ordered_json row;
        for (std::uint32_t g = 0; g < rank; ++g) {
          const auto& name = q.alphabet()->name(g);
          row[name] = s->coset_step(c, g, false);
          row[name + "^-1"] = s->coset_step(c, g, true);
        }
        table.push_back(std::move(row));
      }
      j["cosetTable"] = std::move(table);
      j["schreierGenerators"] = words(s->schreier_generators());
      j["rank"] = s->schreier_generators().size();
      std::cout << j.dump(2) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "fgcert: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
