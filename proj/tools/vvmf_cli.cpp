// vvmf: lattices, Weil representation checks, lift bookkeeping and the
// fixture verification harness.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

#include "vvmf/cases.hpp"

namespace fs = std::filesystem;
using namespace vvmf;

namespace {

struct Globals {
  std::string prec;
  std::string format = "text";
  std::string fixtures;
};

fs::path fixture_dir(const Globals& g) {
  if (!g.fixtures.empty()) return g.fixtures;
  if (const char* env = std::getenv("VVMF_FIXTURES")) return env;
  return VVMF_FIXTURE_DIR;
}

Frac prec_or(const Globals& g, const Frac& fallback) { return g.prec.empty() ? fallback : Frac::parse(g.prec); }

void emit(const Globals& g, const Report& r) {
  if (g.format == "machine") {
    r.write_machine(std::cout);
  } else {
    r.write_text(std::cout);
  }
}

int finish(const Report& r) {
  if (r.ok()) return 0;
  std::cerr << "FAILED: " << r.failures() << " check(s), first: " << r.first_failure() << '\n';
  return 1;
}

void require_known_disc(std::int64_t d, bool any) {
  const auto& known = standard_discriminants();
  if (!any && std::find(known.begin(), known.end(), d) == known.end()) {
    throw std::invalid_argument("d = " + std::to_string(d) +
                                " is not one of 4, 7, 8, 11, 15, 19, 20, 24 (use --any-disc)");
  }
}

VVForm load_input(const std::string& file, std::optional<std::int64_t> bb) {
  if (!bb) return load_form_file(file);
  const ScalarForm s = read_scalar_form_file(file);
  if (s.p != *bb) throw std::invalid_argument("--bb " + std::to_string(*bb) + " but the file has p " + std::to_string(s.p));
  return lift_scalar(s, hermitian_lattice(s.p));
}

void print_divisor(const HeegnerDivisor& div) {
  for (const auto& e : div.entries) {
    std::cout << "H(" << e.m << ") " << div.disc->label(e.component.rep) << ' ' << e.multiplicity << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Vector-valued modular forms and Hermitian lift bookkeeping"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--prec", g.prec, "Precision p/q for generated series");
  app.add_option("--format", g.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--fixtures", g.fixtures, "Fixture directory");

  std::int64_t d = 0;
  bool any_disc = false, use_ok = false, serre = false;
  std::string file, with;
  std::optional<std::int64_t> bb;
  std::string max_m;
  std::size_t index = 0;
  std::int64_t n = 4;
  std::vector<std::int64_t> ds;
  std::string case_name;

  auto* lattice = app.add_subcommand("lattice", "Gram matrix, discriminant form and signature");
  lattice->add_option("d", d, "Discriminant magnitude")->required();
  lattice->add_flag("--any-disc", any_disc, "Allow any fundamental discriminant");
  lattice->add_flag("--ok", use_ok, "Use O_K instead of U + U + O_K");

  auto* theta = app.add_subcommand("theta", "Theta series of O_K (default --prec 2)");
  theta->add_option("d", d)->required();
  theta->add_flag("--any-disc", any_disc);
  theta->add_flag("--serre", serre, "Apply the Serre derivative");

  auto* weil = app.add_subcommand("weil-check", "Exact Weil representation relations");
  weil->add_option("d", d)->required();
  weil->add_flag("--any-disc", any_disc);

  auto* product = app.add_subcommand("product", "Weight and divisor of a Borcherds product");
  product->add_option("file", file)->required()->check(CLI::ExistingFile);
  product->add_option("--bb", bb, "Input is a scalar level-p form");
  product->add_option("--max-m", max_m, "Largest divisor norm (default: singular extent)");

  auto* additive = app.add_subcommand("additive", "Weight and poles of a singular additive lift");
  additive->add_option("file", file)->required()->check(CLI::ExistingFile);
  additive->add_option("--bb", bb);
  additive->add_option("--n", n, "Lattice signature is (n, 2)");

  auto* contract = app.add_subcommand("contract", "Theta contraction along one basis vector");
  contract->add_option("file", file)->required()->check(CLI::ExistingFile);
  contract->add_option("--index", index, "Basis index to contract")->required();
  contract->add_option("--bb", bb);

  auto* pair = app.add_subcommand("pair", "Constant term of <F, G>; G defaults to the Serre derivative of theta");
  pair->add_option("file", file)->required()->check(CLI::ExistingFile);
  pair->add_option("--with", with, "G as a .vv file")->check(CLI::ExistingFile);
  pair->add_option("--bb", bb, "Lift a scalar level-p form onto O_K");

  auto* classify = app.add_subcommand("classify", "Solve the pairing for the multiplicity m");
  classify->add_option("d", ds, "Discriminants (default 7 8 11 15 19 20 23 24)");

  auto* verify = app.add_subcommand("verify", "Run a verification case or all");
  verify->add_option("case", case_name)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*lattice) {
      require_known_disc(d, any_disc);
      const EvenLattice l = use_ok ? ok_lattice(d) : hermitian_lattice(d);
      const DiscriminantForm disc(l);
      std::cout << "gram\n";
      write_matrix(std::cout, l.gram());
      std::cout << "|D| " << disc.size() << "\nsig " << signature_mod8(disc) << '\n';
      write_discriminant_form(std::cout, disc);
      return 0;
    }
    if (*theta) {
      require_known_disc(d, any_disc);
      VVForm t = theta_series(ok_lattice(d), prec_or(g, Frac(2)));
      if (serre) t = serre_derivative(t);
      write_vvform(std::cout, t);
      return 0;
    }
    if (*weil) {
      require_known_disc(d, any_disc);
      const DiscriminantForm disc(hermitian_lattice(d));
      const Report r = check_relations(disc, signature_mod8(disc));
      emit(g, r);
      return finish(r);
    }
    if (*product) {
      const PrincipalPart p = principal_part(load_input(file, bb));
      const Frac mm = max_m.empty() ? singular_extent(p) : Frac::parse(max_m);
      std::cout << "weight " << borcherds_weight(p) << '\n';
      print_divisor(borcherds_divisor(p, mm));
      return 0;
    }
    if (*additive) {
      const LiftMeta meta = additive_lift_meta(load_input(file, bb), n);
      std::cout << "weight " << meta.weight << "\npole order " << meta.pole_order << '\n';
      print_divisor(meta.divisor);
      return 0;
    }
    if (*contract) {
      write_vvform(std::cout, theta_contract(load_input(file, bb), index));
      return 0;
    }
    if (*pair) {
      const VVForm f = bb ? lift_scalar(read_scalar_form_file(file), ok_lattice(*bb)) : load_form_file(file);
      const VVForm gform = with.empty() ? serre_derivative(theta_series(f.disc->lattice(), prec_or(g, Frac(3))))
                                        : read_vvform_file(with);
      std::cout << pairing_constant_term(f, gform) << '\n';
      return 0;
    }
    if (*classify) {
      if (ds.empty()) ds = {7, 8, 11, 15, 19, 20, 23, 24};
      Report r;
      for (const auto di : ds) {
        const ClassifyResult c = classify_siegel(di);
        const std::string p = "d" + std::to_string(di);
        r.expect(p + "/m", std::to_string(di), c.m.str());
        r.expect(p + "/wtJ", std::to_string(35 - di), c.wt_j.str());
        r.expect(p + "/feasible", di <= 22 ? "yes" : "no", c.feasible ? "yes" : "no");
      }
      emit(g, r);
      return finish(r);
    }
    if (*verify) {
      const Report r = case_name == "all" ? verify_all(fixture_dir(g)) : verify_case(case_name, fixture_dir(g));
      emit(g, r);
      return finish(r);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
