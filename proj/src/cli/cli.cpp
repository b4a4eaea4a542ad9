// SPDX-License-Identifier: Apache-2.0

#include "hblab/cli.hpp"

#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "hblab/dirichlet.hpp"
#include "hblab/error.hpp"
#include "hblab/hardy.hpp"
#include "hblab/json_io.hpp"
#include "hblab/suites.hpp"

namespace hblab::cli {

namespace {

using json = nlohmann::json;

struct Args {
  std::string format = "json";

  std::string p, lambdas, lambda, pair, f, u_zeros;
  int m = 0;

  std::string suite;
  std::optional<double> tol;
  std::optional<int> N, K, J, order;
  std::uint64_t seed = 1;
  int instances = 100;
  int max_degree = 20;
  int max_m = 3;
};

class Reader {
 public:
  explicit Reader(std::istream& in) : in_(in) {}

  json operator()(const std::string& text) {
    if (text != "-") return json_io::parse_argument(text);
    if (!stdin_) {
      const std::string s{std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
      stdin_ = json::parse(s, nullptr, false);
      if (stdin_->is_discarded()) throw InvalidArgument("stdin does not contain valid JSON");
    }
    return *stdin_;
  }

 private:
  std::istream& in_;
  std::optional<json> stdin_;
};

void emit(std::ostream& out, const json& j, const std::string& format) {
  out << (format == "pretty" ? j.dump(2) : j.dump()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational de Branges-Rovnyak spaces: pairs, norms and verification suites", "hblab"};
  app.require_subcommand(1);
  Args a;
  app.add_option("--format", a.format, "Output format")->check(CLI::IsMember({"json", "pretty"}));

  CLI::App* pair = app.add_subcommand("pair", "Construct a canonical pair (b, a)");
  pair->require_subcommand(1);
  CLI::App* make = pair->add_subcommand("make", "Pair of phi = p / prod (1 - conj(lambda_j) z)");
  make->add_option("--p", a.p, "Numerator polynomial (JSON, file or -)")->required();
  make->add_option("--lambdas", a.lambdas, "Boundary points (JSON array)")->required();
  CLI::App* prop3 = pair->add_subcommand("prop3", "Explicit pair of (conj(lambda) z)^m / (1 - conj(lambda) z)^m");
  prop3->add_option("--lambda", a.lambda, "Boundary point")->required();
  prop3->add_option("--m", a.m, "Pole order")->required();
  CLI::App* sarason = pair->add_subcommand("sarason", "Closed-form pair for m = 1");
  sarason->add_option("--lambda", a.lambda, "Boundary point")->required();

  CLI::App* norm = app.add_subcommand("norm", "Norms of a polynomial");
  norm->require_subcommand(1);
  CLI::App* hb = norm->add_subcommand("hb", "||f||_b^2 = ||f||_2^2 + ||T_{conj phi} f||_2^2");
  hb->add_option("--pair", a.pair, "Pair (JSON, file or -)")->required();
  hb->add_option("--f", a.f, "Polynomial (JSON, file or -)")->required();
  CLI::App* dir = norm->add_subcommand("dirichlet", "||f||_2^2 + D^m_lambda(f)");
  dir->add_option("--f", a.f, "Polynomial (JSON, file or -)")->required();
  dir->add_option("--lambda", a.lambda, "Boundary point")->required();
  dir->add_option("--m", a.m, "Order")->required();

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", a.suite, "lemma1, isometry, theorem1, prop4, fejer-riesz, wandering, dm-norm or all")
      ->required();
  verify->add_option("--tol", a.tol, "Suite tolerance");
  verify->add_option("--N", a.N, "Block size");
  verify->add_option("--K", a.K, "Shift powers in the orthogonality check");
  verify->add_option("--J", a.J, "Shift powers in the membership check");
  CLI::Option* vm = verify->add_option("--m", a.m, "Restrict to one order m");
  verify->add_option("--order", a.order, "Series order for lemma1");
  verify->add_option("--lambda", a.lambda, "Restrict to one boundary point");
  verify->add_option("--seed", a.seed, "PRNG seed");
  verify->add_option("--pair", a.pair, "Pair under test (JSON, file or -)");
  verify->add_option("--u-zeros", a.u_zeros, "Zeros of the Blaschke factor u (JSON array)");
  verify->add_option("--instances", a.instances, "Random instances per suite")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-degree", a.max_degree, "Degree bound for random polynomials")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-m", a.max_m, "Bound on m for random instances")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Reader read(in);
  try {
    if (*make) {
      const Polynomial p = json_io::polynomial_from_json(read(a.p));
      const std::vector<UnimodularPoint> ls = json_io::points_from_json(read(a.lambdas));
      emit(out, json_io::to_json(pair_from_phi(p, ls)), a.format);
    } else if (*prop3) {
      emit(out, json_io::to_json(prop3_pair(json_io::point_from_json(read(a.lambda)), a.m)), a.format);
    } else if (*sarason) {
      emit(out, json_io::to_json(sarason_pair(json_io::point_from_json(read(a.lambda)))), a.format);
    } else if (*hb) {
      const CanonicalPair pr = json_io::pair_from_json(read(a.pair));
      const Polynomial f = json_io::polynomial_from_json(read(a.f));
      const double h2 = f.norm() * f.norm();
      const double t = toeplitz_conj_coeff(pr.phi(), f).norm();
      emit(out, {{"norm_sq", hb_norm_sq(pr, f)}, {"h2_sq", h2}, {"toeplitz_sq", t * t}}, a.format);
    } else if (*dir) {
      const Polynomial f = json_io::polynomial_from_json(read(a.f));
      const UnimodularPoint lambda = json_io::point_from_json(read(a.lambda));
      const double d2 = f.norm() * f.norm();
      const double dm = dirichlet_m(f, lambda, a.m);
      emit(out, {{"d2", d2}, {"dm", dm}, {"norm_sq", d2 + dm}}, a.format);
    } else if (*verify) {
      suites::Options o;
      o.tol = a.tol;
      o.N = a.N;
      o.K = a.K;
      o.J = a.J;
      o.order = a.order;
      if (vm->count()) o.m = a.m;
      if (!a.lambda.empty()) o.lambda = json_io::point_from_json(read(a.lambda));
      if (!a.pair.empty()) o.pair = json_io::pair_from_json(read(a.pair));
      if (!a.u_zeros.empty()) {
        const json z = read(a.u_zeros);
        if (!z.is_array()) throw InvalidArgument("--u-zeros: expected a JSON array of complex numbers");
        std::vector<Complex> zs;
        for (const json& e : z) zs.push_back(json_io::complex_from_json(e));
        o.u_zeros = std::move(zs);
      }
      o.seed = a.seed;
      o.instances = a.instances;
      o.max_degree = a.max_degree;
      o.max_m = a.max_m;
      const suites::Report r = suites::run(a.suite, o);
      emit(out, r.to_json(), a.format);
      return r.overall_pass ? kExitOk : kExitFailure;
    }
    return kExitOk;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hblab::cli
