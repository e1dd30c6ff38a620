// krawx: evaluate bivariate Krawtchouk polynomials and oscillator overlap
// coefficients, emit tables, and run the validation suites.
//
// Exit codes: 0 success/pass, 1 usage error or failed validation gate,
// 2 singular parameters, 3 I/O failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krawx/bikraw.hpp"
#include "krawx/errors.hpp"
#include "krawx/oracles.hpp"
#include "krawx/oscrep.hpp"
#include "krawx/overlaps.hpp"
#include "krawx/rotations.hpp"
#include "krawx/su11cg.hpp"
#include "krawx/validate.hpp"

namespace {

using krawx::Complex;
using krawx::Real;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitSingular = 2;
constexpr int kExitIo = 3;

struct Options {
  int n = 0;
  std::vector<int> indices;       // r,s,i,k
  std::vector<Real> euler;        // alpha,beta,gamma
  std::string route = "genfun";
  std::string kind = "poly";      // eval object: poly | cg | wigner | overlap
  std::string overlap_family = "cart-polar";
  std::vector<Real> cg_label;     // nu1,n1,nu2,n2,nu12,n12
  std::vector<int> wigner_index;  // ell,mprime,m
  std::vector<int> bra;
  std::vector<int> ket;
  Real tol = 1e-8;
  std::string format = "csv";
  std::uint64_t seed = 12345;
  bool serial = false;
  bool degrees = false;
  std::string out_path;
  std::string suite;
};

krawx::rotations::EulerAngles euler_of(const Options& opt) {
  krawx::rotations::EulerAngles angles;
  if (opt.euler.size() == 3) {
    angles = {opt.euler[0], opt.euler[1], opt.euler[2]};
    if (opt.degrees) {
      const Real f = std::numbers::pi_v<Real> / 180;
      angles = {angles.alpha * f, angles.beta * f, angles.gamma * f};
    }
  }
  return angles;
}

int write_output(const Options& opt, const std::string& text) {
  if (opt.out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(opt.out_path);
  if (!out) {
    std::cerr << "error: cannot open " << opt.out_path << " for writing\n";
    return kExitIo;
  }
  out << text;
  if (!out.good()) {
    std::cerr << "error: write to " << opt.out_path << " failed\n";
    return kExitIo;
  }
  return kExitOk;
}

Real eval_poly_route(const Options& opt) {
  if (opt.indices.size() != 4)
    throw CLI::ValidationError("--indices", "eval needs --indices r,s,i,k");
  const auto [r, s, i, k] =
      std::tuple{opt.indices[0], opt.indices[1], opt.indices[2], opt.indices[3]};
  const auto angles = euler_of(opt);
  const auto rot = krawx::rotations::euler_to_rotation(angles);
  const krawx::bikraw::BiKrawArgs args{r, s, i, k, opt.n, rot};

  if (opt.route == "aomoto") return krawx::bikraw::p_aomoto(args);
  if (opt.route == "genfun") return krawx::bikraw::p_genfun(args);
  if (opt.route == "interbasis")
    return krawx::bikraw::p_interbasis(r, s, i, k, opt.n, angles);
  if (opt.route == "quadrature") return krawx::oracles::p_quadrature(args);
  if (opt.route == "matexp") {
    const Complex entry = krawx::oscrep::matrix_element_oracle(
        opt.n, angles, {i, k, opt.n - i - k}, {r, s, opt.n - r - s});
    const Real w = krawx::bikraw::weight(i, k, opt.n, rot);
    if (w == Real(0)) throw krawx::SingularParameterError("W_{i,k;N}");
    return entry.real() / w;
  }
  throw CLI::ValidationError("--route", "unknown route " + opt.route);
}

int run_eval(const Options& opt) {
  std::ostringstream os;
  os.precision(17);
  if (opt.kind == "poly") {
    const Real value = eval_poly_route(opt);
    os << "route=" << opt.route << " N=" << opt.n << " r=" << opt.indices[0]
       << " s=" << opt.indices[1] << " i=" << opt.indices[2]
       << " k=" << opt.indices[3];
    const auto angles = euler_of(opt);
    os << " euler=" << angles.alpha << ',' << angles.beta << ',' << angles.gamma
       << '\n';
    os << "P = " << value << '\n';
  } else if (opt.kind == "cg") {
    if (opt.cg_label.size() != 6)
      throw CLI::ValidationError("--cg", "need --cg nu1,n1,nu2,n2,nu12,n12");
    const krawx::su11cg::CgLabel label{
        opt.cg_label[0], static_cast<int>(opt.cg_label[1]), opt.cg_label[2],
        static_cast<int>(opt.cg_label[3]), opt.cg_label[4],
        static_cast<int>(opt.cg_label[5])};
    os << "cg nu1=" << label.nu1 << " n1=" << label.n1 << " nu2=" << label.nu2
       << " n2=" << label.n2 << " nu12=" << label.nu12 << " n12=" << label.n12
       << '\n';
    os << "C = " << krawx::su11cg::cg_explicit(label) << '\n';
  } else if (opt.kind == "wigner") {
    if (opt.wigner_index.size() != 3)
      throw CLI::ValidationError("--wigner", "need --wigner ell,mprime,m");
    const auto angles = euler_of(opt);
    const Complex d = krawx::rotations::wigner_d(
        {opt.wigner_index[0], opt.wigner_index[1], opt.wigner_index[2]}, angles);
    os << "wigner ell=" << opt.wigner_index[0] << " m'=" << opt.wigner_index[1]
       << " m=" << opt.wigner_index[2] << '\n';
    os << "D = " << d.real() << (d.imag() < 0 ? " - " : " + ")
       << std::abs(d.imag()) << "i\n";
  } else if (opt.kind == "overlap") {
    if (opt.bra.size() != 3 || opt.ket.size() != 3)
      throw CLI::ValidationError("--bra", "overlap needs --bra and --ket triples");
    Complex v;
    if (opt.overlap_family == "cart-polar")
      v = krawx::overlaps::cartesian_polar(
          {opt.bra[0], opt.bra[1], opt.bra[2]},
          {opt.ket[0], opt.ket[1], opt.ket[2]});
    else if (opt.overlap_family == "polar-spher")
      v = krawx::overlaps::polar_spherical(
          {opt.bra[0], opt.bra[1], opt.bra[2]},
          {opt.ket[0], opt.ket[1], opt.ket[2]});
    else if (opt.overlap_family == "cart-spher")
      v = krawx::overlaps::cartesian_spherical(
          {opt.bra[0], opt.bra[1], opt.bra[2]},
          {opt.ket[0], opt.ket[1], opt.ket[2]});
    else
      throw CLI::ValidationError("--family", "unknown overlap family");
    os << "overlap " << opt.overlap_family << '\n';
    os << "V = " << v.real() << (v.imag() < 0 ? " - " : " + ")
       << std::abs(v.imag()) << "i\n";
  } else {
    throw CLI::ValidationError("--kind", "unknown eval kind " + opt.kind);
  }
  return write_output(opt, os.str());
}

int run_table(const Options& opt) {
  const auto angles = euler_of(opt);
  const auto rot = krawx::rotations::euler_to_rotation(angles);

  std::ostringstream os;
  os.precision(17);
  const bool json = opt.format == "json";
  if (json)
    os << "{\n  \"schema_version\": 1,\n  \"N\": " << opt.n << ",\n  \"rows\": [\n";
  else
    os << "r,s,i,k,value\n";

  bool first = true;
  for (int r = 0; r <= opt.n; ++r)
    for (int s = 0; r + s <= opt.n; ++s)
      for (int i = 0; i <= opt.n; ++i)
        for (int k = 0; i + k <= opt.n; ++k) {
          Real value;
          const krawx::bikraw::BiKrawArgs args{r, s, i, k, opt.n, rot};
          if (opt.route == "aomoto")
            value = krawx::bikraw::p_aomoto(args);
          else if (opt.route == "interbasis")
            value = krawx::bikraw::p_interbasis(r, s, i, k, opt.n, angles);
          else if (opt.route == "quadrature")
            value = krawx::oracles::p_quadrature(args);
          else
            value = krawx::bikraw::p_genfun(args);
          if (json) {
            if (!first) os << ",\n";
            os << "    [" << r << ", " << s << ", " << i << ", " << k << ", "
               << value << "]";
            first = false;
          } else {
            os << r << ',' << s << ',' << i << ',' << k << ',' << value << '\n';
          }
        }
  if (json) os << "\n  ]\n}\n";
  return write_output(opt, os.str());
}

int run_validate(const Options& opt) {
  krawx::validate::Config cfg;
  cfg.n_max = opt.n;
  cfg.tol = opt.tol;
  cfg.seed = opt.seed;
  const auto report = krawx::validate::run_suite(opt.suite, cfg);
  const std::string text = opt.format == "json"
                               ? krawx::validate::to_json(report)
                               : krawx::validate::to_csv(report);
  const int io = write_output(opt, text);
  if (io != kExitOk) return io;
  return report.pass ? kExitOk : kExitUsage;
}

int run_oracle(const Options& opt) {
  if (opt.bra.size() != 3 || opt.ket.size() != 3)
    throw CLI::ValidationError("--bra", "oracle needs --bra i,k,l and --ket r,s,t");
  const auto angles = euler_of(opt);
  const Complex entry = krawx::oscrep::matrix_element_oracle(
      opt.n, angles, {opt.bra[0], opt.bra[1], opt.bra[2]},
      {opt.ket[0], opt.ket[1], opt.ket[2]});
  std::ostringstream os;
  os.precision(17);
  os << "oracle N=" << opt.n << " bra=" << opt.bra[0] << ',' << opt.bra[1] << ','
     << opt.bra[2] << " ket=" << opt.ket[0] << ',' << opt.ket[1] << ','
     << opt.ket[2] << '\n';
  os << "U = " << entry.real() << (entry.imag() < 0 ? " - " : " + ")
     << std::abs(entry.imag()) << "i\n";
  return write_output(opt, os.str());
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"bivariate Krawtchouk polynomials and oscillator interbasis overlaps"};
  app.require_subcommand(1);

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--N", opt.n, "eigenspace level / max level");
    cmd->add_option("--N-max", opt.n, "alias of --N for validation suites");
    cmd->add_option("--euler", opt.euler, "Euler angles alpha,beta,gamma")
        ->delimiter(',')
        ->expected(3);
    cmd->add_option("--route", opt.route,
                    "aomoto|genfun|interbasis|quadrature|matexp");
    cmd->add_option("--tol", opt.tol, "tolerance")->check(CLI::PositiveNumber);
    cmd->add_option("--format", opt.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", opt.seed, "random seed for sweeps");
    cmd->add_flag("--serial", opt.serial, "single-threaded, reproducible output");
    cmd->add_flag("--degrees", opt.degrees, "interpret --euler in degrees");
    cmd->add_option("--out", opt.out_path, "write output to file");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate a single value");
  add_common(eval);
  eval->add_option("--indices", opt.indices, "r,s,i,k")->delimiter(',')->expected(4);
  eval->add_option("--kind", opt.kind, "poly|cg|wigner|overlap");
  eval->add_option("--cg", opt.cg_label, "nu1,n1,nu2,n2,nu12,n12")
      ->delimiter(',')
      ->expected(6);
  eval->add_option("--wigner", opt.wigner_index, "ell,mprime,m")
      ->delimiter(',')
      ->expected(3);
  eval->add_option("--family", opt.overlap_family,
                   "cart-polar|polar-spher|cart-spher");
  eval->add_option("--bra", opt.bra, "bra label triple")->delimiter(',')->expected(3);
  eval->add_option("--ket", opt.ket, "ket label triple")->delimiter(',')->expected(3);

  CLI::App* table = app.add_subcommand("table", "emit all P_{r,s}(i,k;N)");
  add_common(table);

  CLI::App* validate = app.add_subcommand("validate", "run a validation suite");
  add_common(validate);
  validate->add_option("suite", opt.suite, "suite name")
      ->required()
      ->check(CLI::IsMember(krawx::validate::suite_names()));

  CLI::App* oracle = app.add_subcommand("oracle", "matrix-element oracle entry");
  add_common(oracle);
  oracle->add_option("--bra", opt.bra, "bra occupation i,k,l")
      ->delimiter(',')
      ->expected(3);
  oracle->add_option("--ket", opt.ket, "ket occupation r,s,t")
      ->delimiter(',')
      ->expected(3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(opt);
    if (table->parsed()) return run_table(opt);
    if (validate->parsed()) return run_validate(opt);
    if (oracle->parsed()) return run_oracle(opt);
    return kExitUsage;
  } catch (const krawx::SingularParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitSingular;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
