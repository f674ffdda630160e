#include "hardy/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hardy/errors.hpp"
#include "hardy/fixtures.hpp"
#include "hardy/hardy_ops.hpp"

namespace hardy::cli {

using io::Json;

namespace {

Tolerance tolerance(const Json& opts) {
  Tolerance tol;
  if (opts.contains("tol")) tol.abs = opts.at("tol").get<double>();
  if (opts.contains("rank_rel")) tol.rank_rel = opts.at("rank_rel").get<double>();
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return tol;
}

int option_int(const Json& opts, const char* key, int fallback) {
  if (!opts.contains(key) || opts.at(key).is_null()) return fallback;
  if (!opts.at(key).is_number_integer()) throw InputError(std::string("option ") + key + " must be an integer");
  return opts.at(key).get<int>();
}

RationalMatFn function_input(const Json& inputs, const char* key, const Json& opts) {
  if (!inputs.contains(key)) throw InputError(std::string("missing input \"") + key + "\"");
  const RationalMatFn f = io::function_from_json(inputs.at(key));
  const int g = option_int(opts, "grid_log2", 0);
  return g > f.grid_log2() ? f.with_grid_log2(g) : f;
}

Json error_json(const char* kind, const std::exception& e) { return {{"error", kind}, {"message", e.what()}}; }

Json factorize(const Json& opts, const Json& inputs) {
  const Tolerance tol = tolerance(opts);
  const RationalMatFn f = function_input(inputs, "function", opts);
  if (inputs.contains("theta")) {
    const PeelResult r = potapov_peel(f, io::theta_from_json(inputs.at("theta")), tol);
    return {{"product", io::to_json(r.product)}, {"trace", io::to_json(r.trace)}};
  }
  return {{"product", io::to_json(inner_rational_to_bp(f, tol))}};
}

Json divisors_zn(const Json& opts, const Json& inputs) {
  const Tolerance tol = tolerance(opts);
  const RationalMatFn f = function_input(inputs, "function", opts);
  const int N = option_int(opts, "N", -1);
  if (N < 0) throw InputError("divisors-zn requires --N");
  const cplx alpha = opts.contains("alpha") ? io::complex_from_json(opts.at("alpha")) : cplx{};
  const ZnDivisorCertificate cert = alpha == cplx{} && f.den_zeros().empty() ? classify_zn(f.numerator(), N, tol)
                                                                              : classify_b_alpha_n(f, alpha, N, tol);
  const auto w = nontriviality_witness(cert, tol);
  return {{"certificate", io::to_json(cert)}, {"nontriviality_witness", w ? Json(*w) : Json()}};
}

Json coprime(const Json& opts, const Json& inputs, int& code) {
  const Tolerance tol = tolerance(opts);
  const RationalMatFn f = function_input(inputs, "function", opts);
  if (!inputs.contains("theta")) throw InputError("coprime requires --theta");
  const FiniteBlaschkeProduct theta = io::theta_from_json(inputs.at("theta"));
  const std::string side = opts.value("side", "left");
  if (side != "left" && side != "right") throw InputError("side must be left or right");
  const CoprimeReport r = side == "left" ? left_coprime_with_theta(f, theta, tol) : right_coprime_with_theta(f, theta, tol);
  if (!r.verdict) code = negative;
  return {{"report", io::to_json(r)}};
}

Json rational(const Json& opts, const Json& inputs, int& code) {
  const Tolerance tol = tolerance(opts);
  const RationalMatFn f = function_input(inputs, "function", opts);
  const int K = option_int(opts, "K", 24);
  if (inputs.contains("theta")) {
    const FiniteBlaschkeProduct theta = io::theta_from_json(inputs.at("theta"));
    const double defect = rationality_defect(f, theta, K);
    const bool verdict = defect <= tol.abs;
    if (!verdict) code = negative;
    return {{"rational", verdict}, {"defect", defect}, {"K", K}};
  }
  return {{"factorization", io::to_json(coprime_factorize(f, K, tol))}};
}

Json gcd(const Json& opts, const Json& inputs) {
  const Tolerance tol = tolerance(opts);
  const RationalMatFn a = function_input(inputs, "a", opts);
  const RationalMatFn b = function_input(inputs, "b", opts);
  const int K = option_int(opts, "K", 24);
  if (opts.value("side", "left") == "left") return {{"left_gcd", io::to_json(RationalMatFn(left_gcd(a, b, K, tol)))}};
  return {{"right_divisor", io::to_json(RationalMatFn(common_right_divisor(a, b, K, tol)))}};
}

Json gallery_report(const Json& opts) {
  using namespace gallery;
  const std::string ex = opts.value("example", "");
  const long W = option_int(opts, "window", 8);
  if (W < 1 || W > 64) throw InputError("window must be in 1..64");
  if (ex == "1.3") {
    auto verdicts = [](long w) {
      const Window win{-w, w};
      const ShiftSymbol d = delta_example(win), th = theta_example(win);
      return std::tuple{left_divides(d, th), right_divides(d, th), is_analytic(compose(th, adjoint(d)))};
    };
    const auto [left, right, rep] = verdicts(W);
    const auto [left4, right4, rep4] = verdicts(W + 4);
    const Window win{-W, W};
    const ShiftSymbol d = delta_example(win), th = theta_example(win);
    Json witness;
    if (rep.witness) witness = {{"index", *rep.witness}, {"term", io::to_json(*rep.witness_term)}};
    return {{"left_divides", left},
            {"right_divides", right},
            {"right_quotient_witness", witness},
            {"stable_under_window_growth", left == left4 && right == right4 && rep.witness == rep4.witness},
            {"delta_two_sided_inner", is_two_sided_inner_symbolic(d)},
            {"theta_two_sided_inner", is_two_sided_inner_symbolic(th)},
            {"delta_adjoint", io::table_json(adjoint(d))},
            {"left_quotient", io::table_json(compose(adjoint(d), th))}};
  }
  if (ex == "1.4") {
    const Window win{0, W};
    const ShiftSymbol s = shift_symbol(win), id = identity_symbol(Domain::unilateral, win);
    return {{"right_divides", right_divides(s, id)},
            {"left_divides", left_divides(s, id)},
            {"two_sided_inner", is_two_sided_inner_symbolic(s)},
            {"shift_shift_adjoint", io::table_json(compose(s, adjoint(s)))}};
  }
  if (ex == "5.1") {
    Json rows = Json::array();
    for (int n : {0, 1, 2}) {
      const QuasinormalReport r = quasinormal_check(shift_symbol({0, W}, n));
      rows.push_back({{"n", n},
                      {"isometric", r.isometric},
                      {"non_normal", r.non_normal},
                      {"normality_witness", r.normality_witness ? Json(*r.normality_witness) : Json()}});
    }
    return {{"symbols", rows}};
  }
  if (ex == "5.2") {
    const FormalVector f{{{0, 1}, GaussRational{1}}};
    return {{"bracket", io::to_json(toeplitz_bracket(backward_shift_symbol({0, W}), f))}, {"f", "e_0 z"}};
  }
  if (ex == "shift-coprime") {
    const CoprimePair p = shift_vs_coordinate_coprime(W);
    const CoprimePair q = shift_vs_coordinate_coprime(W + 4);
    return {{"right", p.right},
            {"left", p.left},
            {"left_witnesses", p.left_witnesses},
            {"right_witnesses", p.right_witnesses},
            {"stable_under_window_growth", p.right == q.right && p.left == q.left}};
  }
  throw InputError("unknown gallery example \"" + ex + "\"");
}

Json gen_fixture(const Json& opts, int& code) {
  fixtures::Rng rng(static_cast<std::uint64_t>(opts.value("seed", 1LL)));
  fixtures::BPSpec spec;
  spec.dim = option_int(opts, "d", 3);
  spec.factors = option_int(opts, "factors", 3);
  spec.max_radius = opts.value("max_radius", 0.9);
  spec.repeat_probability = opts.value("repeat", 0.0);
  if (spec.dim < 1 || spec.dim > 64 || spec.factors < 0 || spec.factors > 64) throw InputError("fixture size out of range");
  if (!(spec.max_radius > 0.0 && spec.max_radius < 1.0)) throw InputError("max_radius must be in (0, 1)");
  const BPProduct b = fixtures::random_bp_product(spec, rng);
  const RationalMatFn e = expand(b);
  const double res = two_sided_inner_residual(e);
  if (res > tolerance(opts).abs) code = numerical;
  return {{"product", io::to_json(b)},
          {"expansion", io::to_json(e)},
          {"theta", io::to_json(FiniteBlaschkeProduct{1.0, b.alphas()})},
          {"inner_residual", res}};
}

Json dispatch(const std::string& cmd, const Json& opts, const Json& inputs, int& code) {
  if (cmd == "factorize") return factorize(opts, inputs);
  if (cmd == "divisors-zn") return divisors_zn(opts, inputs);
  if (cmd == "coprime") return coprime(opts, inputs, code);
  if (cmd == "rational") return rational(opts, inputs, code);
  if (cmd == "gcd") return gcd(opts, inputs);
  if (cmd == "gallery") return gallery_report(opts);
  if (cmd == "gen-fixture") return gen_fixture(opts, code);
  throw InputError("unknown command \"" + cmd + "\"");
}

Json read_json(const std::string& source, std::istream& in) {
  try {
    if (source == "-") return Json::parse(in);
    if (!source.empty() && (source.front() == '[' || source.front() == '{')) return Json::parse(source);
    std::ifstream f(source);
    if (!f) throw InputError("cannot open " + source);
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw InputError(std::string("invalid JSON in ") + (source.size() > 40 ? "input" : source) + ": " + e.what());
  }
}

}  // namespace

Outcome execute(const Json& request) {
  if (!request.is_object() || !request.contains("command")) throw InputError("request lacks a command");
  const std::string cmd = request.at("command").get<std::string>();
  const Json opts = request.value("options", Json::object());
  const Json inputs = request.value("inputs", Json::object());
  Outcome out;
  out.document = {{"command", cmd}, {"options", opts}, {"inputs", inputs}};
  try {
    out.document["result"] = dispatch(cmd, opts, inputs, out.code);
  } catch (const InputError&) {
    throw;
  } catch (const NotADivisor& e) {
    Json j = error_json("NotADivisor", e);
    j["condition"] = e.condition();
    j["index"] = e.index();
    out.document["result"] = j;
    out.code = negative;
  } catch (const NotRational& e) {
    out.document["result"] = error_json("NotRational", e);
    out.code = negative;
  } catch (const NotInner& e) {
    out.document["result"] = error_json("NotInner", e);
    out.code = negative;
  } catch (const TrivialGcd& e) {
    out.document["result"] = error_json("TrivialGcd", e);
    out.code = negative;
  } catch (const NegativeVerdict& e) {
    out.document["result"] = error_json("NegativeVerdict", e);
    out.code = negative;
  } catch (const NumericalFailure& e) {
    Json j = error_json("NumericalFailure", e);
    j["residual"] = e.residual();
    out.document["result"] = j;
    out.code = numerical;
  }
  out.document["exit_code"] = out.code;
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inner divisors, Blaschke-Potapov factorization and coprimeness tools"};
  app.require_subcommand(1);
  app.fallthrough();
  double tol = Tolerance{}.abs;
  int grid_log2 = 0;
  int K = 24;
  int window = 8;
  long long seed = 1;
  std::string input_path, theta, side_left_right, example;
  app.add_option("--tol", tol, "absolute tolerance")->capture_default_str();
  app.add_option("--grid-log2", grid_log2, "minimum grid exponent");

  Json opts = Json::object();
  Json inputs = Json::object();

  auto* factorize = app.add_subcommand("factorize", "Blaschke-Potapov factorization of an inner function");
  factorize->add_option("--input", input_path, "function JSON")->required();
  factorize->add_option("--theta", theta, "zeros JSON");

  int N = -1;
  std::vector<double> alpha;
  auto* zn = app.add_subcommand("divisors-zn", "classify an inner divisor of z^N I or b_alpha^N I");
  zn->add_option("--input", input_path, "function JSON")->required();
  zn->add_option("--N", N, "power")->required();
  zn->add_option("--alpha", alpha, "re im")->expected(2);

  bool left = false, right = false;
  auto* cop = app.add_subcommand("coprime", "coprimeness with theta I");
  cop->add_option("--input", input_path, "function JSON")->required();
  cop->add_option("--theta", theta, "zeros JSON")->required();
  auto* cl = cop->add_flag("--left", left);
  auto* cr = cop->add_flag("--right", right);
  cl->excludes(cr);

  auto* rat = app.add_subcommand("rational", "rationality test, or coprime factorization without --theta");
  rat->add_option("--input", input_path, "function JSON")->required();
  rat->add_option("--theta", theta, "zeros JSON");
  rat->add_option("--K", K, "Hankel truncation");

  std::vector<std::string> pair;
  bool gl = false, gr = false;
  auto* g = app.add_subcommand("gcd", "greatest common left inner divisor or common right divisor");
  g->add_option("files", pair, "two function JSON files")->expected(2)->required();
  auto* gfl = g->add_flag("--left", gl);
  auto* gfr = g->add_flag("--right", gr);
  gfl->excludes(gfr);
  g->add_option("--K", K, "Hankel truncation");

  auto* gal = app.add_subcommand("gallery", "exact symbolic examples");
  gal->add_option("--example", example, "1.3, 1.4, 5.1, 5.2 or shift-coprime")
      ->required()
      ->check(CLI::IsMember({"1.3", "1.4", "5.1", "5.2", "shift-coprime"}));
  gal->add_option("--window", window, "window half-width");

  auto* ver = app.add_subcommand("verify", "replay a previous output and compare");
  ver->add_option("--input", input_path, "output JSON")->required();

  int d = 3, factors = 3;
  double max_radius = 0.9, repeat = 0.0;
  auto* gen = app.add_subcommand("gen-fixture", "random Blaschke-Potapov product with its expansion");
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--d", d, "dimension");
  gen->add_option("--factors", factors, "number of factors");
  gen->add_option("--max-radius", max_radius, "largest |alpha|");
  gen->add_option("--repeat", repeat, "probability of reusing the previous alpha");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return ExitCode::input;
  }

  try {
    Json request;
    auto* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    opts["tol"] = tol;
    if (grid_log2 > 0) opts["grid_log2"] = grid_log2;
    if (cmd == "verify") {
      const Json previous = read_json(input_path, in);
      if (!previous.contains("result")) throw InputError("verify expects a previous output document");
      request = {{"command", previous.at("command")}, {"options", previous.at("options")}, {"inputs", previous.at("inputs")}};
      const Outcome again = execute(request);
      const bool same = again.document.dump() == previous.dump();
      out << Json{{"verified", same}, {"command", request.at("command")}, {"exit_code", again.code}}.dump(2) << "\n";
      if (!same) err << "replayed output differs from the given document\n";
      return same ? ok : numerical;
    }
    if (cmd == "factorize" || cmd == "divisors-zn" || cmd == "coprime" || cmd == "rational")
      inputs["function"] = read_json(input_path, in);
    if (!theta.empty()) inputs["theta"] = read_json(theta, in);
    if (cmd == "divisors-zn") {
      opts["N"] = N;
      if (!alpha.empty()) opts["alpha"] = Json::array({alpha[0], alpha[1]});
    }
    if (cmd == "coprime") opts["side"] = right ? "right" : "left";
    if (cmd == "rational" || cmd == "gcd") opts["K"] = K;
    if (cmd == "gcd") {
      opts["side"] = gr ? "right" : "left";
      inputs["a"] = read_json(pair[0], in);
      inputs["b"] = read_json(pair[1], in);
    }
    if (cmd == "gallery") {
      opts["example"] = example;
      opts["window"] = window;
    }
    if (cmd == "gen-fixture") {
      opts["seed"] = seed;
      opts["d"] = d;
      opts["factors"] = factors;
      opts["max_radius"] = max_radius;
      opts["repeat"] = repeat;
    }
    request = {{"command", cmd}, {"options", opts}, {"inputs", inputs}};
    const Outcome o = execute(request);
    out << o.document.dump(2) << "\n";
    if (o.code != ok) err << o.document["result"].value("message", std::string("negative verdict")) << "\n";
    return o.code;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return ExitCode::input;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << "\n";
    return ExitCode::input;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return ExitCode::input;
  }
}

}  // namespace hardy::cli
