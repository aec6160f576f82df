// ternalg: command-line front end for the hypermatrix ternary algebra library.
//
// Exit codes: 0 success, 1 a verification check failed, 2 invalid input.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ternalg/acceptance.hpp"
#include "ternalg/codec.hpp"
#include "ternalg/decomp.hpp"
#include "ternalg/qcyclic.hpp"
#include "ternalg/rotation.hpp"
#include "ternalg/schemes.hpp"
#include "ternalg/ternary.hpp"

namespace fs = std::filesystem;
using namespace ternalg;
using acceptance::Check;
using acceptance::fmt;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_bad_input = 2;

std::string fmt_complex(Complex z) {
  return fmt(z.real()) + (std::signbit(z.imag()) ? "-" : "+") + fmt(std::abs(z.imag())) + "i";
}

struct Common {
  std::uint64_t seed = 0;
  double atol = tolerance::atol;
  double rtol = tolerance::rtol;
  std::string format = "text";
  std::string out = ".";
  std::string kind = "diamond";
  std::size_t dim = 3;
  std::size_t trials = 10;
};

void add_seed(CLI::App* c, Common& o) { c->add_option("--seed", o.seed, "PRNG seed")->capture_default_str(); }
void add_tols(CLI::App* c, Common& o) {
  c->add_option("--atol", o.atol, "absolute tolerance")->capture_default_str();
  c->add_option("--rtol", o.rtol, "relative tolerance")->capture_default_str();
}
void add_format(CLI::App* c, Common& o) {
  c->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}
void add_out(CLI::App* c, Common& o) {
  c->add_option("--out", o.out, "output directory")->capture_default_str();
}
void add_kind(CLI::App* c, Common& o) {
  c->add_option("--kind", o.kind, "product: 1, 2, diamond or bullet")
      ->check(CLI::IsMember({"1", "2", "3", "4", "diamond", "bullet"}))
      ->capture_default_str();
}

/// Prints checks in the chosen format; returns the exit code they imply.
int emit_checks(const std::vector<Check>& checks, const std::string& format) {
  bool ok = true;
  if (format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) {
      arr.push_back({{"check", c.name}, {"residual", c.value}, {"tol", c.threshold}, {"pass", c.pass()}});
      ok = ok && c.pass();
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    for (const auto& c : checks) {
      std::cout << c.line() << "\n";
      ok = ok && c.pass();
    }
  }
  return ok ? exit_ok : exit_check_failed;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  std::error_code ec;
  fs::create_directories(p, ec);
  if (ec) throw InputError(dir + ": cannot create output directory: " + ec.message());
  return p;
}

int cmd_info() {
  std::cout << "ternalg " << "0.1.0\n"
            << "ternary algebra of complex third-order hypermatrices\n\n"
            << "q     = " << fmt_complex(constants::q) << "\n"
            << "qbar  = " << fmt_complex(constants::qbar) << "\n"
            << "eps6  = " << fmt_complex(constants::eps6) << "\n\n"
            << "products:\n"
            << "  1        (A.B.C)_ijk = A_ilm B_nlm C_njk\n"
            << "  2        (A.B.C)_ijk = A_ilm B_nml C_njk\n"
            << "  diamond  (A.B.C)_ijk = A_ijl B_nml C_mnk\n"
            << "  bullet   (A.B.C)_ijk = A_ijl B_mnl C_mnk\n";
  return exit_ok;
}

int cmd_invariants(const std::string& file, const Common& o) {
  const auto t = codec::read(file);
  const auto rec = invariants(t);
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (std::size_t n = 0; n < InvariantRecord::count; ++n)
      arr.push_back({{"name", InvariantRecord::name(n)},
                     {"re", rec.value(n).real()},
                     {"im", rec.value(n).imag()}});
    std::cout << arr.dump(2) << "\n";
    return exit_ok;
  }
  for (std::size_t n = 0; n < InvariantRecord::count; ++n) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-5s %s\n", InvariantRecord::name(n).c_str(),
                  fmt_complex(rec.value(n)).c_str());
    std::cout << buf;
  }
  return exit_ok;
}

int cmd_decompose(const std::string& file, const Common& o) {
  const auto t = codec::read(file);
  require_dim3(t);
  const auto parts = weight_decompose(t);
  const auto dir = prepare_out(o.out);
  const double tol = o.atol + o.rtol * norm(t);
  std::vector<Check> checks;
  for (int w = 0; w < 4; ++w) {
    codec::write(dir / ("t" + std::to_string(w) + ".json"), parts.part(w));
    checks.push_back({"membership.t" + std::to_string(w), weight_membership_residual(parts.part(w), w), tol});
  }
  checks.push_back({"reconstruction", max_abs_diff(parts.t0 + parts.t1 + parts.t2 + parts.t3, t), tol});
  const auto [t2q, t2qbar] = cyclic_split_weight2(parts.t2, 1e-10);
  codec::write(dir / "t2_q.json", t2q);
  codec::write(dir / "t2_qbar.json", t2qbar);
  checks.push_back({"split.t2_q.law_T=qbar*T_jki", cyclic_law_residual(t2q, constants::qbar), tol});
  checks.push_back({"split.t2_qbar.law_T=q*T_jki", cyclic_law_residual(t2qbar, constants::q), tol});
  checks.push_back({"split.sum", max_abs_diff(t2q + t2qbar, parts.t2), tol});
  if (o.format == "text") {
    for (int w = 0; w < 4; ++w)
      std::cout << "PART t" << w << " norm=" << fmt(norm(parts.part(w))) << "\n";
    std::cout << "SPLIT t2_q norm=" << fmt(norm(t2q)) << " t2_qbar norm=" << fmt(norm(t2qbar))
              << "\n";
  }
  return emit_checks(checks, o.format);
}

int cmd_product(const std::vector<std::string>& files, const Common& o) {
  const auto kind = *parse_product_kind(o.kind);
  const auto a = codec::read(files[0]);
  const auto b = codec::read(files[1]);
  const auto c = codec::read(files[2]);
  const auto p = ternary_product(kind, a, b, c);
  const auto dir = prepare_out(o.out);
  codec::write(dir / "product.json", p);
  const double tol = o.atol + o.rtol * norm(a) * norm(b) * norm(c);
  return emit_checks({{"product.vs_reference", max_abs_diff(p, ternary_product_reference(kind, a, b, c)), tol}},
                     o.format);
}

int cmd_assoc(const Common& o) {
  const auto kind = *parse_product_kind(o.kind);
  if (o.dim == 0) throw InputError("--dim must be positive");
  Xorshift64Star rng(o.seed);
  std::vector<Check> checks;
  for (std::size_t t = 0; t < o.trials; ++t) {
    std::array<Hypermatrix, 5> x{random_hypermatrix(o.dim, rng), random_hypermatrix(o.dim, rng),
                                 random_hypermatrix(o.dim, rng), random_hypermatrix(o.dim, rng),
                                 random_hypermatrix(o.dim, rng)};
    const double r = associativity_residual(kind, x[0], x[1], x[2], x[3], x[4]);
    const double tol = o.atol + o.rtol * operand_scale(x[0], x[1], x[2], x[3], x[4]);
    checks.push_back({"assoc." + std::string(to_string(kind)) + ".trial" + std::to_string(t), r, tol});
  }
  return emit_checks(checks, o.format);
}

int cmd_biunit(const std::string& file, const Common& o) {
  const auto u = codec::read(file);
  const auto uh = make_biunit(u);
  const auto dir = prepare_out(o.out);
  codec::write(dir / "biunit.json", uh);
  Xorshift64Star rng(o.seed);
  std::vector<Check> checks;
  for (int t = 0; t < 10; ++t) {
    const auto x = random_hypermatrix(3, rng);
    checks.push_back({"right_biunit.trial" + std::to_string(t),
                      biunit_residual(ProductKind::diamond, uh, x, Side::right),
                      o.atol + o.rtol * norm(x)});
  }
  if (o.format == "text") {
    const Complex i2 = quadratic_invariant_i2(u);
    std::cout << "I2(U) = " << fmt_complex(i2) << "\n"
              << "scale = " << fmt_complex(std::sqrt(3.0 / (constants::q * i2))) << "\n";
  }
  return emit_checks(checks, o.format);
}

int cmd_enumerate(const Common& o) {
  const auto report = enumerate_schemes(o.dim, o.trials, o.seed);
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : report.survivors)
      arr.push_back({{"scheme", v.scheme.encoding()},
                     {"free_pattern", v.scheme.free_pattern()},
                     {"product", v.product ? std::string(to_string(*v.product)) : std::string()},
                     {"in_product_pattern", v.in_product_pattern},
                     {"flagged", !v.product},
                     {"max_residual", v.max_residual}});
    std::cout << nlohmann::json{{"schemes_examined", report.schemes_examined},
                                {"survivors", arr},
                                {"reproduces_four_products", report.reproduces_four_products()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << format_report(report);
  }
  return report.reproduces_four_products() ? exit_ok : exit_check_failed;
}

int cmd_selftest(const Common& o, const std::string& mutate) {
  acceptance::Options opts;
  opts.seed = o.seed;
  opts.mutations.flip_tau_sign = mutate == "tau-sign";
  opts.mutations.plain_middle_bracket = mutate == "middle-bracket";
  const auto results = acceptance::run_all(opts);
  bool ok = true;
  for (const auto& c : results) ok = ok && c.pass();
  if (o.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : results)
      for (const auto& ch : c.checks)
        arr.push_back({{"check", ch.name}, {"residual", ch.value}, {"tol", ch.threshold}, {"pass", ch.pass()}});
    std::cout << arr.dump(2) << "\n";
  } else {
    std::cout << acceptance::format_text(results);
  }
  return ok ? exit_ok : exit_check_failed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ternary algebra of complex third-order hypermatrices"};
  app.require_subcommand(1);
  Common o;
  std::string file;
  std::vector<std::string> files;
  std::string mutate = "none";

  auto* info = app.add_subcommand("info", "library constants and products");

  auto* inv = app.add_subcommand("invariants", "linear and quadratic SO(3) invariants of a hypermatrix file");
  inv->add_option("file", file, "hypermatrix JSON")->required();
  add_format(inv, o);

  auto* dec = app.add_subcommand("decompose", "weight decomposition t0..t3 and the q/qbar split of t2");
  dec->add_option("file", file, "hypermatrix JSON")->required();
  add_out(dec, o);
  add_tols(dec, o);
  add_format(dec, o);

  auto* prod = app.add_subcommand("product", "ternary product of three hypermatrix files");
  prod->add_option("files", files, "A B C")->required()->expected(3);
  add_kind(prod, o);
  add_out(prod, o);
  add_tols(prod, o);
  add_format(prod, o);

  auto* assoc = app.add_subcommand("assoc-check", "generalized associativity on seeded random quintuples");
  add_kind(assoc, o);
  assoc->add_option("--dim", o.dim, "hypermatrix dimension")->capture_default_str();
  assoc->add_option("--trials", o.trials, "number of quintuples")->capture_default_str();
  add_seed(assoc, o);
  add_tols(assoc, o);
  add_format(assoc, o);

  auto* biu = app.add_subcommand("biunit", "right biunit of the diamond product from a q-cyclic file");
  biu->add_option("file", file, "traceless q-cyclic hypermatrix JSON")->required();
  add_out(biu, o);
  add_seed(biu, o);
  add_tols(biu, o);
  add_format(biu, o);

  auto* en = app.add_subcommand("enumerate-products", "search all contraction schemes for associative ones");
  en->add_option("--dim", o.dim, "hypermatrix dimension")->capture_default_str();
  en->add_option("--trials", o.trials, "random quintuples per scheme")->capture_default_str();
  add_seed(en, o);
  add_format(en, o);

  auto* st = app.add_subcommand("selftest", "run the acceptance suite");
  add_seed(st, o);
  add_format(st, o);
  st->add_option("--mutate", mutate, "inject a fault (testing the suite itself)")
      ->check(CLI::IsMember({"none", "tau-sign", "middle-bracket"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    std::cerr << app.help();
    return exit_bad_input;
  }

  try {
    if (*info) return cmd_info();
    if (*inv) return cmd_invariants(file, o);
    if (*dec) return cmd_decompose(file, o);
    if (*prod) return cmd_product(files, o);
    if (*assoc) return cmd_assoc(o);
    if (*biu) return cmd_biunit(file, o);
    if (*en) return cmd_enumerate(o);
    if (*st) return cmd_selftest(o, mutate);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_input;
  }
  return exit_bad_input;
}
