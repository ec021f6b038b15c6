#pragma once

// Command-line driver: crystal, verify and embed subcommands.
//
// Exit codes: 0 pass, 1 verification failure, 2 usage or parse error,
// 3 vertex cap exceeded, 4 input outside the image of ξ.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include "kac/kac.hpp"

namespace kac::cli {

enum Exit : int { kOk = 0, kFailed = 1, kUsage = 2, kCap = 3, kOutOfImage = 4 };

struct CliConfig {
  std::string rank;
  std::string lambda;
  std::string out;
  std::string in;
  std::string format = "json";
  std::string sweep;
  std::string checks = "axioms,connected,character,rho,compat";
  std::size_t cap = kDefaultVertexCap;
  std::uint64_t seed = 0;
  int spot = 0;
  int threads = 0;
  bool timing = false;
  bool corrupt = false;
  bool inverse = false;
};

inline Rank parse_rank(const std::string& text) {
  auto v = detail::parse_int_list(text, 0);
  if (v.size() != 2) throw Error(ErrorCode::ParseError, "--rank expects m,n");
  return Rank(v[0], v[1]);
}

inline Weight parse_dominant(const Rank& r, const std::string& text) {
  Weight w = parse_weight(r, text);
  if (!w.is_dominant()) throw Error(ErrorCode::NotDominant, "λ = " + to_string(w) + " is not dominant");
  return w;
}

/// KAC_CRYSTAL_THREADS wins over --threads; 0 means available parallelism.
inline int resolve_threads(int flag) {
  if (const char* env = std::getenv("KAC_CRYSTAL_THREADS")) {
    try {
      int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return flag > 0 ? flag : default_threads();
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot write " + path);
  f << text;
}

inline std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::ParseError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

inline int cmd_crystal(const CliConfig& cfg, std::ostream& out) {
  Rank r = parse_rank(cfg.rank);
  Weight lam = parse_dominant(r, cfg.lambda);
  if (cfg.format != "json" && cfg.format != "dot") throw Error(ErrorCode::ParseError, "--format is json or dot");
  KacGraph g = generate_graph(r, lam, cfg.cap);
  if (!cfg.out.empty()) {
    std::string text = cfg.format == "dot" ? to_dot(g.graph, "kac") : to_json(g).dump(1) + "\n";
    emit(text, cfg.out, out);
  }
  out << "vertices=" << g.graph.size() << " edges=" << g.graph.edge_count() << "\n";
  return kOk;
}

inline int cmd_verify(const CliConfig& cfg, std::ostream& out) {
  CheckSelection sel = CheckSelection::parse(cfg.checks);
  sel.cap = cfg.cap;
  sel.seed = cfg.seed;
  sel.spot = cfg.spot;
  sel.corrupt = cfg.corrupt;
  std::vector<Instance> insts;
  if (!cfg.sweep.empty()) {
    if (cfg.sweep != "default") throw Error(ErrorCode::ParseError, "unknown sweep '" + cfg.sweep + "'");
    insts = default_sweep();
  } else {
    if (cfg.rank.empty() || cfg.lambda.empty()) {
      throw Error(ErrorCode::ParseError, "verify needs --sweep default or --rank and --lambda");
    }
    Rank r = parse_rank(cfg.rank);
    insts.push_back({r, parse_dominant(r, cfg.lambda)});
  }
  auto reports = run_sweep(insts, sel, resolve_threads(cfg.threads));
  nlohmann::ordered_json j;
  auto arr = nlohmann::ordered_json::array();
  long long failed = 0;
  for (const auto& rep : reports) {
    arr.push_back(to_json(rep, cfg.timing));
    if (!rep.pass()) ++failed;
  }
  j["reports"] = arr;
  j["summary"] = {{"instances", static_cast<long long>(reports.size())}, {"failed", failed}, {"pass", failed == 0}};
  emit(j.dump(1) + "\n", cfg.out, out);
  return failed == 0 ? kOk : kFailed;
}

/// λ of a standard-model element with polynomial λ: row lengths of T+ and
/// column lengths of T-.
inline Weight weight_from_shapes(const Rank& r, const KacElement& x) {
  Weight lam(r);
  const Partition& plus = x.t_plus.shape().outer();
  for (int i = 1; i <= r.m; ++i) lam.bar(r.m - i + 1) = part(plus, i - 1);
  Partition cols = conjugate(trimmed(x.t_minus.shape().outer()));
  for (int j = 1; j <= r.n; ++j) lam.unbar(j) = part(cols, j - 1);
  return lam;
}

inline int cmd_embed(const CliConfig& cfg, std::istream& in, std::ostream& out) {
  Rank r = parse_rank(cfg.rank);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(read_input(cfg.in, in));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("input JSON: ") + e.what());
  }
  if (!cfg.inverse) {
    Tableau t = tableau_from_json(j);
    if (t.alphabet() != Alphabet::B || !t.shape().is_straight()) {
      throw Error(ErrorCode::ShapeViolation, "embed expects a straight-shape tableau over B");
    }
    Weight lam = hook_bijection(r, t.shape().outer());
    PolynomialEmbedding emb(r, lam);
    emit(to_json(r, emb.xi(t)).dump() + "\n", cfg.out, out);
    return kOk;
  }
  KacElement x = kac_element_from_json(r, j);
  Weight lam = cfg.lambda.empty() ? weight_from_shapes(r, x) : parse_dominant(r, cfg.lambda);
  if (!lam.is_polynomial_dominant()) {
    emit("null\n", cfg.out, out);
    return kOutOfImage;
  }
  PolynomialEmbedding emb(r, lam);
  auto t = emb.pi_bar(x);
  if (!t) {
    emit("null\n", cfg.out, out);
    return kOutOfImage;
  }
  emit(to_json(*t).dump() + "\n", cfg.out, out);
  return kOk;
}

/// Entry point shared by the binary and the tests; `args` excludes argv[0].
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Crystals of Kac modules over U_q(gl(m|n))", "kac_crystal"};
  app.require_subcommand(1);
  CliConfig cfg;

  auto* crystal = app.add_subcommand("crystal", "Generate the crystal graph of K(λ)");
  crystal->add_option("--rank", cfg.rank, "m,n")->required();
  crystal->add_option("--lambda", cfg.lambda, "weight as \"λ_m̄,…,λ_1̄|λ_1,…,λ_n\"")->required();
  crystal->add_option("--format", cfg.format, "json or dot")->capture_default_str();
  crystal->add_option("--out", cfg.out, "output file for the graph");
  crystal->add_option("--cap", cfg.cap, "vertex cap")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("--sweep", cfg.sweep, "named sweep (default)");
  verify->add_option("--rank", cfg.rank, "m,n");
  verify->add_option("--lambda", cfg.lambda, "weight");
  verify->add_option("--checks", cfg.checks, "comma-separated checks")->capture_default_str();
  verify->add_option("--out", cfg.out, "report file (stdout if omitted)");
  verify->add_option("--cap", cfg.cap, "vertex cap")->capture_default_str();
  verify->add_option("--threads", cfg.threads, "worker threads (0 = available parallelism)");
  verify->add_option("--seed", cfg.seed, "seed for spot-check sampling");
  verify->add_option("--spot", cfg.spot, "number of sampled spot checks");
  verify->add_flag("--timing", cfg.timing, "record elapsed milliseconds in the report");
  verify->add_flag("--corrupt", cfg.corrupt)->group("");

  auto* embed = app.add_subcommand("embed", "Apply ξ_λ to a tableau, or π̄_λ with --inverse");
  embed->add_option("--rank", cfg.rank, "m,n")->required();
  embed->add_option("--in", cfg.in, "input JSON file (stdin if omitted)");
  embed->add_option("--out", cfg.out, "output file (stdout if omitted)");
  embed->add_option("--lambda", cfg.lambda, "weight for --inverse (inferred from shapes if omitted)");
  embed->add_flag("--inverse", cfg.inverse, "map a Kac element back to a tableau");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*crystal) return cmd_crystal(cfg, out);
    if (*verify) return cmd_verify(cfg, out);
    return cmd_embed(cfg, in, out);
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\ncardinality=" << e.cardinality() << "\n";
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::NotInImage) {
      out << "null\n";
      return kOutOfImage;
    }
    return kUsage;
  }
}

}  // namespace kac::cli
