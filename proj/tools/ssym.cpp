// ssym: command-line front end for supersymmetric polynomials over F_p.
//
// Exit codes: 0 success, 1 domain rejection, 2 input error, 3 internal invariant violation.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ssym/checks.hpp"
#include "ssym/decompose.hpp"
#include "ssym/errors.hpp"
#include "ssym/generators.hpp"
#include "ssym/oracle.hpp"
#include "ssym/poly_io.hpp"
#include "ssym/supersym.hpp"

namespace {

enum Exit { kOk = 0, kRejected = 1, kInputError = 2, kInternal = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Level {
  unsigned m = 1;
  unsigned n = 1;
  std::uint32_t p = 3;

  ssym::Ring ring() const {
    if (!ssym::is_prime(p) || p == 2 || p >= 65536) throw InputError("--p must be an odd prime below 65536");
    return ssym::Ring(m, n, p);
  }
};

struct PolySource {
  std::string text;
  std::string file;

  std::string read() const {
    if (file.empty()) return text;
    std::ifstream in(file);
    if (!in) throw InputError("cannot read " + file);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
};

void add_level(CLI::App* cmd, Level& lv) {
  cmd->add_option("--m", lv.m, "number of x variables")->capture_default_str();
  cmd->add_option("--n", lv.n, "number of y variables")->capture_default_str();
  cmd->add_option("--p", lv.p, "odd prime characteristic")->capture_default_str();
}

void add_poly(CLI::App* cmd, PolySource& src) {
  auto* poly = cmd->add_option("--poly", src.text, "polynomial, e.g. \"x1^2 - 2*x1*y1\"");
  auto* file = cmd->add_option("--file", src.file, "read the polynomial from a file");
  poly->excludes(file);
  cmd->callback([poly, file] {
    if (poly->count() + file->count() == 0) throw CLI::RequiredError("--poly or --file");
  });
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

int cmd_check(const Level& lv, const PolySource& src) {
  const ssym::Ring R = lv.ring();
  const ssym::Poly f = ssym::parse_poly(src.read(), R);
  const auto v = ssym::is_supersymmetric(f);
  std::cout << "symmetric_x=" << yes_no(v.symmetric_x) << "\n"
            << "symmetric_y=" << yes_no(v.symmetric_y) << "\n"
            << "derivative_vanishes=" << yes_no(v.derivative_vanishes) << "\n"
            << "overall=" << yes_no(v.overall) << "\n"
            << "strict=" << (R.m && R.n ? yes_no(ssym::is_strictly_supersymmetric(f)) : "n/a") << "\n"
            << "p_balanced=" << yes_no(ssym::is_p_balanced(f)) << "\n";
  return v.overall ? kOk : kRejected;
}

int cmd_decompose(const Level& lv, const PolySource& src, bool verify, bool stats) {
  const ssym::Ring R = lv.ring();
  const ssym::Poly f = ssym::parse_poly(src.read(), R);
  ssym::Decomposer d(R);
  const ssym::GenExpr e = d.decompose(f);
  std::cout << ssym::format_genexpr(e) << "\n";
  if (stats) {
    const auto& s = d.stats();
    std::size_t law = 0;
    for (const auto& c : s.cores) law += c.law_holds;
    std::cerr << "calls=" << s.calls << " max_depth=" << s.max_depth << " cores=" << s.cores.size()
              << " cores_with_balanced_exponents=" << law << " span_solves=" << s.span_solves
              << " vk_span_solves=" << s.vk_span_solves << "\n";
  }
  if (verify) {
    if (!ssym::verify_decomposition(f, e)) throw ssym::InternalInvariantViolation("verify: expansion differs from input");
    std::cerr << "verified\n";
  }
  return kOk;
}

int cmd_vk(const Level& lv, unsigned k, bool show_psi) {
  if (lv.m < 1 || lv.n < 1) throw InputError("vk needs --m >= 1 and --n >= 1");
  const ssym::Ring R = lv.ring();
  if (k < 1 || k >= lv.p) throw InputError("vk needs 0 < --k < --p");
  const ssym::Poly v = ssym::v_k(ssym::KSeq(R.field, k), R);
  std::cout << ssym::format_poly(v) << "\n";
  if (show_psi) {
    const ssym::Poly g = ssym::psi(v);
    std::cout << ssym::format_poly(g) << "\n" << ssym::format_poly(ssym::d_dT(g)) << "\n";
  }
  return kOk;
}

int cmd_dims(const Level& lv, std::uint32_t dmax) {
  (void)lv.ring();
  std::cout << ssym::kDimCsvHeader << "\n";
  std::size_t matched = 0;
  for (std::uint32_t d = 0; d <= dmax; ++d) {
    const auto r = ssym::dim_report(lv.m, lv.n, lv.p, d);
    matched += r.match;
    std::cout << ssym::format_csv_row(r) << std::endl;
  }
  std::cerr << matched << "/" << dmax + 1 << " degrees match\n";
  return matched == dmax + 1 ? kOk : kRejected;
}

int cmd_selftest(std::uint64_t seed) {
  int failed = 0;
  for (const auto& r : ssym::checks::run_properties(seed)) {
    std::cout << ssym::checks::format_line("property", r) << std::endl;
    failed += !r.pass;
  }
  for (const auto& c : ssym::checks::run_acceptance(seed)) {
    std::cout << ssym::checks::format_line("criterion " + std::to_string(c.id), c.result) << std::endl;
    failed += !c.result.pass;
  }
  std::cout << (failed ? std::to_string(failed) + " suite(s) failed" : std::string("all suites passed")) << "\n";
  return failed ? kRejected : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Supersymmetric polynomials over F_p: membership, decomposition, v_k lifts, dimension checks"};
  app.require_subcommand(1);

  Level lv;
  PolySource src;
  bool verify = false, stats = false, show_psi = false;
  unsigned k = 1;
  std::uint32_t dmax = 6;
  std::uint64_t seed = 20240601;

  auto* check = app.add_subcommand("check", "membership predicates for a polynomial");
  add_level(check, lv);
  add_poly(check, src);

  auto* dec = app.add_subcommand("decompose", "write a supersymmetric polynomial in the generators");
  add_level(dec, lv);
  add_poly(dec, src);
  dec->add_flag("--verify", verify, "re-expand and compare before exiting");
  dec->add_flag("--stats", stats, "print recursion statistics to stderr");

  auto* vk = app.add_subcommand("vk", "print the lift v_k of u_k(m-1|n)");
  add_level(vk, lv);
  vk->add_option("--k", k, "0 < k < p")->capture_default_str();
  vk->add_flag("--show-psi", show_psi, "also print psi(v_k) and its T-derivative");

  auto* dims = app.add_subcommand("dims", "compare dim A_s with the generated dimension, as CSV");
  add_level(dims, lv);
  dims->add_option("--dmax", dmax, "largest degree")->capture_default_str();

  auto* self = app.add_subcommand("selftest", "run the property suites and acceptance criteria");
  self->add_option("--seed", seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (*check) return cmd_check(lv, src);
    if (*dec) return cmd_decompose(lv, src, verify, stats);
    if (*vk) return cmd_vk(lv, k, show_psi);
    if (*dims) return cmd_dims(lv, dmax);
    if (*self) return cmd_selftest(seed);
  } catch (const ssym::ParseError& e) {
    std::cerr << "parse error at position " << e.position() << ": " << e.what() << "\n";
    return kInputError;
  } catch (const ssym::RingMismatch& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ssym::NotSupersymmetric& e) {
    std::cerr << "rejected: " << e.what() << "\n";
    return kRejected;
  } catch (const ssym::InternalInvariantViolation& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kInputError;
}
