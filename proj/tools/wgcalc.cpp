// Copyright 2026 The wgcalc Authors
// SPDX-License-Identifier: Apache-2.0

// wgcalc: Weingarten values, moment formulas, exact expectations and Monte
// Carlo checks from the command line. Every command prints one JSON
// document (or CSV with --format csv) to stdout; diagnostics go to stderr.

#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "wgcalc/config.hpp"
#include "wgcalc/error.hpp"
#include "wgcalc/io.hpp"
#include "wgcalc/moments.hpp"
#include "wgcalc/montecarlo.hpp"
#include "wgcalc/weingarten.hpp"

namespace {

using namespace wgcalc;

constexpr const char* kIndexGrammar =
    "Index grammar: --pairs \"1,1;2,3\" lists (row,col) pairs, here (i1,j1)=(1,1)\n"
    "and (i2,j2)=(2,3); --conj-pairs gives the conjugated factors (i',j') the same\n"
    "way; --indices \"1,1,2,2\" is a plain sequence. Indices are one-based.\n"
    "Exit codes: 0 ok, 1 internal error, 2 usage, 3 capacity guard,\n"
    "4 outside the validity range, 5 verification failed.";

struct Output {
  std::string format = "json";

  void emit(const Json& doc) const {
    if (format == "csv") {
      std::cout << to_csv(doc);
    } else {
      std::cout << doc.dump(2) << '\n';
    }
  }
};

struct WgArgs {
  std::string ensemble;
  int k = 0;
  std::string z;
  std::optional<std::string> w;
  std::optional<std::string> type;
};

struct MomentArgs {
  std::string pairs;
  std::string conj_pairs;
  std::string indices;
  int n = 0;
  int p = 0;
};

// Flags shared by `exact` and `verify`.
struct ModelArgs {
  int n = 0;
  int p = 0;
  std::string sigma;
  std::string b;
  std::string pairs;
  std::string conj_pairs;
  std::string indices;
  std::string perm;
  std::string pairing;
  std::string type;
};

struct VerifyArgs {
  std::string model;
  std::int64_t samples = 200000;
  std::uint64_t seed = 42;
  int threads = 0;
  int chunk_size = 4096;
  double tolerance_z = 5.0;
  std::optional<std::string> expect;
};

void add_model_flags(CLI::App* cmd, ModelArgs& a) {
  cmd->add_option("--n", a.n, "Dimension n (defaults to the size of --sigma)");
  cmd->add_option("--p", a.p, "Dimension p (defaults to the size of --b for compound models)");
  cmd->add_option("--sigma", a.sigma, "Scale matrix file (default: identity)");
  cmd->add_option("--b", a.b, "Shape matrix file for compound models (default: identity)");
  cmd->add_option("--pairs", a.pairs, "Index pairs \"i1,j1;i2,j2;...\"");
  cmd->add_option("--conj-pairs", a.conj_pairs, "Conjugated index pairs (default: same as --pairs)");
  cmd->add_option("--indices", a.indices, "Index sequence \"i1,i2,...\" (compound-inv-r)");
  cmd->add_option("--perm", a.perm, "Permutation as one-based image word (inv-wishart-c)");
  cmd->add_option("--pairing", a.pairing, "Pair partition as canonical word (inv-wishart-r)");
  cmd->add_option("--type", a.type, "Partition selecting a representative π (inv-wishart-*)");
}

ModelSpec build_model(Model model, const ModelArgs& a) {
  ModelSpec s;
  s.model = model;
  s.n = a.n;
  s.p = a.p;
  if (!a.sigma.empty()) s.sigma = load_matrix_file(a.sigma);
  if (!a.b.empty()) s.b = load_matrix_file(a.b);

  const bool needs_pairs = model == Model::haar_u || model == Model::haar_o || model == Model::ginibre_pinv_c ||
                           model == Model::ginibre_pinv_r || model == Model::compound_inv_c ||
                           model == Model::conj_invariant_demo;
  if (needs_pairs) {
    if (a.pairs.empty()) throw InvalidArgument(std::string(model_name(model)) + " needs --pairs");
    std::tie(s.i, s.j) = parse_index_pairs(a.pairs);
  }
  if (model == Model::haar_u || model == Model::ginibre_pinv_c) {
    if (a.conj_pairs.empty()) {
      s.i_prime = s.i;
      s.j_prime = s.j;
    } else {
      std::tie(s.i_prime, s.j_prime) = parse_index_pairs(a.conj_pairs);
    }
  }
  if (model == Model::compound_inv_r) {
    if (a.indices.empty()) throw InvalidArgument("compound-inv-r needs --indices");
    s.i = parse_index_list(a.indices);
  }
  if (model == Model::inv_wishart_c) {
    if (!a.perm.empty()) {
      s.word = parse_index_list(a.perm);
    } else if (!a.type.empty()) {
      s.word = representative_permutation(Partition::parse(a.type)).images();
    } else {
      throw InvalidArgument("inv-wishart-c needs --perm or --type");
    }
  }
  if (model == Model::inv_wishart_r) {
    if (!a.pairing.empty()) {
      s.word = parse_index_list(a.pairing);
    } else if (!a.type.empty()) {
      s.word = representative_pairing(Partition::parse(a.type)).word();
    } else {
      throw InvalidArgument("inv-wishart-r needs --pairing or --type");
    }
  }
  return s;
}

Json exact_json(const std::variant<Rational, std::complex<double>>& v, bool real_model) {
  if (const auto* r = std::get_if<Rational>(&v)) return to_json(*r);
  const auto z = std::get<std::complex<double>>(v);
  if (real_model) return z.real();
  return to_json(z);
}

int run_wg(const WgArgs& a, const Output& out) {
  const Rational z = parse_rational(a.z);
  const bool unitary = a.ensemble == "u";
  if (!unitary && a.ensemble != "o") throw InvalidArgument("--ensemble must be 'u' or 'o'");
  Json table;
  std::optional<Rational> single;
  if (unitary) {
    const auto f = a.w ? wg_unitary_double(a.k, z, parse_rational(*a.w)) : wg_unitary(a.k, z);
    if (a.type) single = f.at(Partition::parse(*a.type));
    table = to_json(f);
  } else {
    const auto f = a.w ? wg_orthogonal_double(a.k, z, parse_rational(*a.w)) : wg_orthogonal(a.k, z);
    if (a.type) single = f.at(Partition::parse(*a.type));
    table = to_json(f);
  }
  out.emit(single ? to_json(*single) : table);
  return 0;
}

int run_moment(const std::string& which, const MomentArgs& a, const Output& out) {
  auto pairs = [&] {
    if (a.pairs.empty()) throw InvalidArgument(which + " needs --pairs");
    return parse_index_pairs(a.pairs);
  };
  MomentFormula f;
  if (which == "conj-u") {
    const auto [i, j] = pairs();
    f = conj_invariant_moment_u(i, j, a.n);
  } else if (which == "conj-o") {
    if (a.indices.empty()) throw InvalidArgument("conj-o needs --indices");
    f = conj_invariant_moment_o(parse_index_list(a.indices), a.n);
  } else if (which == "lr-u") {
    const auto [i, j] = pairs();
    const auto [ip, jp] = a.conj_pairs.empty() ? std::pair{i, j} : parse_index_pairs(a.conj_pairs);
    f = lr_invariant_moment_u(i, j, ip, jp, a.n, a.p);
  } else {
    const auto [i, j] = pairs();
    f = lr_invariant_moment_o(i, j, a.n, a.p);
  }
  out.emit(to_json(f));
  return 0;
}

int run_exact(const std::string& which, const ModelArgs& a, const Output& out) {
  const Model model = parse_model(which);
  const auto value = exact_value(build_model(model, a));
  out.emit(exact_json(value, is_real_model(model)));
  return 0;
}

// "1/60", "-3" or a decimal such as "0.0167".
double parse_number(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return to_double(parse_rational(text));
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || text.find_first_not_of(" \t", used) != std::string::npos) {
    throw InvalidArgument("bad number '" + text + "'");
  }
  return v;
}

std::complex<double> parse_expect(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_number(text), 0.0};
  return {parse_number(text.substr(0, comma)), parse_number(text.substr(comma + 1))};
}

int run_verify(const VerifyArgs& v, const ModelArgs& a, const Output& out) {
  const Model model = parse_model(v.model);
  EstimatorOptions opt;
  opt.samples = v.samples;
  opt.seed = v.seed;
  opt.threads = v.threads;
  opt.chunk_size = v.chunk_size;
  if (v.expect) opt.expected = parse_expect(*v.expect);
  const auto result = estimate_moment(build_model(model, a), opt);
  out.emit(to_json(result));
  const double z = result.z_score.value_or(std::numeric_limits<double>::infinity());
  if (!(z <= v.tolerance_z)) {
    std::cerr << "verification failed: z-score " << z << " exceeds tolerance " << v.tolerance_z << '\n';
    return static_cast<int>(ExitCode::verification);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Weingarten calculus and Monte Carlo checks for invariant random matrices."};
  app.footer(kIndexGrammar);
  app.require_subcommand(1);
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

  WgArgs wg;
  auto* wg_cmd = app.add_subcommand("wg", "Weingarten function values");
  wg_cmd->add_option("--ensemble", wg.ensemble, "u (unitary) or o (orthogonal)")->required();
  wg_cmd->add_option("--k", wg.k, "Order k")->required();
  wg_cmd->add_option("--z", wg.z, "Parameter z, e.g. 5 or -3/2")->required();
  wg_cmd->add_option("--w", wg.w, "Second parameter for the double Weingarten function");
  wg_cmd->add_option("--type", wg.type, "Print only the value at this partition, e.g. 2,1");

  MomentArgs moment;
  auto* moment_cmd = app.add_subcommand("moment", "Local moments of invariant matrices via global moments");
  moment_cmd->require_subcommand(1);
  for (const char* name : {"conj-u", "conj-o", "lr-u", "lr-o"}) {
    auto* sub = moment_cmd->add_subcommand(name, std::string(name) + " moment formula");
    sub->add_option("--n", moment.n, "Dimension n")->required();
    if (name[0] == 'l') sub->add_option("--p", moment.p, "Dimension p")->required();
    if (std::string(name) == "conj-o") {
      sub->add_option("--indices", moment.indices, "Index sequence i1,...,i2k");
    } else {
      sub->add_option("--pairs", moment.pairs, "Index pairs \"i1,j1;i2,j2;...\"");
    }
    if (std::string(name) == "lr-u") {
      sub->add_option("--conj-pairs", moment.conj_pairs, "Conjugated pairs (default: same as --pairs)");
    }
  }

  ModelArgs model;
  auto* exact_cmd = app.add_subcommand("exact", "Exact expectation for a random matrix model");
  exact_cmd->require_subcommand(1);
  for (const char* name : {"inv-wishart-c", "inv-wishart-r", "ginibre-pinv-c", "ginibre-pinv-r",
                           "compound-inv-c", "compound-inv-r", "haar-u", "haar-o"}) {
    add_model_flags(exact_cmd->add_subcommand(name, std::string(name) + " expectation"), model);
  }

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Monte Carlo estimate compared with the exact value");
  verify_cmd->add_option("--model", verify.model, "Model name, e.g. haar-u, ginibre-pinv-c")->required();
  verify_cmd->add_option("--samples", verify.samples, "Number of draws (>= 1000)");
  verify_cmd->add_option("--seed", verify.seed, "Random seed");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0: all cores); never changes results");
  verify_cmd->add_option("--chunk-size", verify.chunk_size, "Draws per random stream");
  verify_cmd->add_option("--tolerance-z", verify.tolerance_z, "Largest accepted z-score");
  verify_cmd->add_option("--expect", verify.expect, "Override the exact reference: \"re\" or \"re,im\"");
  add_model_flags(verify_cmd, model);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::usage);
  }

  try {
    if (*wg_cmd) return run_wg(wg, out);
    if (*moment_cmd) return run_moment(moment_cmd->get_subcommands().front()->get_name(), moment, out);
    if (*exact_cmd) return run_exact(exact_cmd->get_subcommands().front()->get_name(), model, out);
    if (*verify_cmd) return run_verify(verify, model, out);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::failure);
  }
  return static_cast<int>(ExitCode::usage);
}
