#include "jackprod/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <sstream>

#include "jackprod/bessel.hpp"
#include "jackprod/errors.hpp"
#include "jackprod/harness.hpp"
#include "jackprod/jack.hpp"
#include "jackprod/partition.hpp"

namespace jackprod::cli {

namespace {

using nlohmann::json;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
  std::vector<Rational> out;
  for (const auto& s : split_commas(text)) out.push_back(parse_rational(s));
  if (out.empty()) throw ParseError("empty list");
  return out;
}

Pair parse_pair(const std::string& text, const char* name) {
  const auto v = parse_rational_list(text);
  if (v.size() != 2) throw ParseError(std::string(name) + " must have exactly two coordinates");
  return {to_double(v[0]), to_double(v[1])};
}

std::string format_double(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

json summary(const std::vector<VerificationReport>& cases) {
  std::size_t passed = 0;
  for (const auto& c : cases) passed += c.pass;
  return {{"total", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed}};
}

void emit_cases(std::ostream& out, const std::string& format, const json& doc,
                const std::vector<VerificationReport>& cases) {
  if (format == "json") {
    out << doc.dump(2) << "\n";
  } else if (format == "csv") {
    out << "identity,params,lhs,rhs,abs_err,rel_err,tol,pass\n";
    for (const auto& c : cases) {
      std::string params = c.params.dump();
      std::string quoted;
      for (char ch : params) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      out << c.identity << ",\"" << quoted << "\"," << format_double(c.lhs) << "," << format_double(c.rhs)
          << "," << format_double(c.abs_err) << "," << format_double(c.rel_err) << "," << format_double(c.tol)
          << "," << (c.pass ? "true" : "false") << "\n";
    }
  } else {
    for (const auto& c : cases) {
      out << (c.pass ? "PASS " : "FAIL ") << c.identity << " " << c.params.dump() << " lhs=" << format_double(c.lhs)
          << " rhs=" << format_double(c.rhs) << " rel_err=" << format_double(c.rel_err) << "\n";
    }
    const json s = doc["summary"];
    out << "summary: " << s["passed"] << "/" << s["total"] << " passed\n";
  }
}

struct Options {
  std::string output = "json";
  // jack
  std::string lambda;
  std::string k = "1";
  int n = 2;
  std::string x;
  std::string y;
  // bessel
  std::string kappa;
  std::string method = "series";
  int max_degree = 30;
  int nodes = 64;
  // verify
  std::string identity;
  std::string k_list;
  std::string kappa_list;
  int lambda_max = -1;
  int samples = -1;
  double tol = -1;
  int npoints = -1;
  int ntheta = -1;
  std::uint64_t seed = 42;
  bool serial = false;
};

int cmd_jack(const Options& o, std::ostream& out) {
  const Partition lambda = Partition::parse(o.lambda);
  const JackParameter k(o.k);
  if (o.n < 1) throw ParseError("--n must be >= 1");
  if (lambda.length() > o.n) throw ParseError("partition has more parts than --n");
  const JackPolynomial p = jack_p(lambda, k, o.n);
  json result = to_json(p);
  json config = {{"lambda", o.lambda}, {"k", to_string(k.value())}, {"n", o.n}};
  std::optional<Rational> value;
  if (!o.x.empty()) {
    const auto x = parse_rational_list(o.x);
    if (static_cast<int>(x.size()) != o.n) throw ParseError("--x must have n coordinates");
    value = p(x);
    config["x"] = o.x;
    result["value"] = to_string(*value);
    result["value_float"] = to_double(*value);
  }
  json doc = {{"command", "jack"}, {"config", config}, {"result", result}};
  if (o.output == "json") {
    out << doc.dump(2) << "\n";
  } else if (o.output == "csv") {
    out << "partition,coeff\n";
    for (const auto& t : result["terms"]) {
      std::string parts;
      for (const auto& v : t["partition"]) parts += (parts.empty() ? "" : " ") + std::to_string(v.get<int>());
      out << parts << "," << t["coeff"].get<std::string>() << "\n";
    }
    if (value) out << "value," << to_string(*value) << "\n";
  } else {
    out << "P" << lambda.to_string() << " k=" << to_string(k.value()) << " n=" << o.n << ":\n";
    for (const auto& t : result["terms"]) out << "  " << t["coeff"].get<std::string>() << " * m" << t["partition"].dump() << "\n";
    if (value) out << "value = " << to_string(*value) << "\n";
  }
  return kOk;
}

int cmd_bessel(const Options& o, std::ostream& out) {
  const Multiplicity kappa = Multiplicity::parse(o.kappa);
  const Pair x = parse_pair(o.x, "--x");
  const Pair y = parse_pair(o.y, "--y");
  json config = {{"kappa", o.kappa}, {"x", {x[0], x[1]}}, {"y", {y[0], y[1]}}, {"method", o.method}};
  json result = {{"method", o.method}, {"order_mu", kappa.order_mu()}};
  if (o.method == "series") {
    const SeriesValue v = bessel_b2_series(kappa, x, y, o.max_degree);
    config["max_degree"] = o.max_degree;
    result["value"] = v.value;
    result["truncation_estimate"] = v.truncation;
  } else if (o.method == "theorem3") {
    for (double c : {x[0], x[1], y[0], y[1]}) {
      if (c < 0) throw ParseError("theorem3 needs nonnegative coordinates");
    }
    const OrderResolution res = resolve_theorem3_order(kappa);
    config["nodes"] = o.nodes;
    result["value"] = bessel_b2_theorem3(kappa, x, y, o.nodes, o.nodes, res.order);
    result["resolved_order"] = res.order;
    result["order_candidate"] = to_string(res.selected);
    result["series_value"] = bessel_b2_series(kappa, x, y, o.max_degree).value;
  } else if (o.method == "lemma4") {
    // J(x, (c, 0)) = 0F1(mu, (c^2/4) x^2, (1, 0)) by homogeneity of each term
    if (y[1] != 0) throw ParseError("lemma4 needs y of the form c,0");
    const double scale = 0.25 * y[0] * y[0];
    const Pair z{scale * x[0] * x[0], scale * x[1] * x[1]};
    config["nodes"] = o.nodes;
    result["value"] = hyp0f1_lemma4(kappa.order_mu(), kappa.k2(), z, o.nodes);
  } else {
    throw ParseError("unknown method '" + o.method + "'");
  }
  json doc = {{"command", "bessel"}, {"config", config}, {"result", result}};
  if (o.output == "json") {
    out << doc.dump(2) << "\n";
  } else if (o.output == "csv") {
    out << "method,value\n" << o.method << "," << format_double(result["value"].get<double>()) << "\n";
  } else {
    out << "J_B2 (" << o.method << ") = " << format_double(result["value"].get<double>()) << "\n";
    if (result.contains("truncation_estimate")) {
      out << "truncation estimate = " << format_double(result["truncation_estimate"].get<double>()) << "\n";
    }
    if (result.contains("resolved_order")) {
      out << "resolved order = " << format_double(result["resolved_order"].get<double>()) << "\n";
    }
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  harness::SweepConfig cfg;
  if (!o.k_list.empty()) cfg.k_values = parse_rational_list(o.k_list);
  for (const auto& k : cfg.k_values) {
    if (k <= 0) throw ParseError("--k values must be positive");
  }
  if (!o.kappa_list.empty()) {
    std::stringstream ss(o.kappa_list);
    std::string item;
    while (std::getline(ss, item, ';')) cfg.kappas.push_back(Multiplicity::parse(item));
  }
  if (o.lambda_max >= 0) cfg.lambda_max = o.lambda_max;
  if (o.samples >= 0) cfg.samples = o.samples;
  if (o.tol >= 0) {
    if (o.tol == 0) throw ParseError("--tol must be positive");
    cfg.tol = o.tol;
  }
  if (o.npoints >= 0) {
    if (o.npoints == 0) throw ParseError("--npoints must be >= 1");
    cfg.npoints = o.npoints;
  }
  if (o.ntheta >= 0) cfg.ntheta = o.ntheta;
  cfg.seed = o.seed;
  cfg.parallel = !o.serial;

  const auto cases = harness::run_sweep(o.identity, cfg);
  json config = {{"identity", o.identity}, {"seed", o.seed}};
  if (!o.k_list.empty()) config["k"] = o.k_list;
  if (!o.kappa_list.empty()) config["kappa"] = o.kappa_list;
  if (cfg.lambda_max) config["lambda_max"] = *cfg.lambda_max;
  if (cfg.samples) config["samples"] = *cfg.samples;
  if (cfg.tol) config["tol"] = *cfg.tol;
  if (cfg.npoints) config["npoints"] = *cfg.npoints;
  if (cfg.ntheta) config["ntheta"] = *cfg.ntheta;
  json case_docs = json::array();
  for (const auto& c : cases) case_docs.push_back(to_json(c));
  json doc = {{"command", "verify"}, {"config", config}, {"cases", case_docs}, {"summary", summary(cases)}};
  emit_cases(out, o.output, doc, cases);
  return doc["summary"]["failed"].get<std::size_t>() == 0 ? kOk : kIdentityFailure;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jack polynomials, their two-variable product formula and B2 Bessel functions"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> formats{"json", "csv", "pretty"};

  auto* jack = app.add_subcommand("jack", "Expand P_lambda^k in the monomial basis");
  jack->add_option("--lambda", o.lambda, "Partition, e.g. 3,1")->required();
  jack->add_option("--k", o.k, "Jack parameter k = 1/alpha (p/q or decimal)");
  jack->add_option("--n", o.n, "Number of variables");
  jack->add_option("--x", o.x, "Evaluation point, comma separated");
  jack->add_option("--output", o.output)->check(CLI::IsMember(formats));

  auto* bessel = app.add_subcommand("bessel", "Generalized Bessel function of type B2");
  bessel->add_option("--kappa", o.kappa, "Multiplicity kappa1,kappa2")->required();
  bessel->add_option("--x", o.x)->required();
  bessel->add_option("--y", o.y)->required();
  bessel->add_option("--method", o.method)->check(CLI::IsMember({"series", "theorem3", "lemma4"}));
  bessel->add_option("--max-degree", o.max_degree)->check(CLI::NonNegativeNumber);
  bessel->add_option("--nodes", o.nodes)->check(CLI::PositiveNumber);
  bessel->add_option("--output", o.output)->check(CLI::IsMember(formats));

  auto* verify = app.add_subcommand("verify", "Run an identity sweep and report every case");
  std::vector<std::string> identities = harness::identity_names();
  identities.push_back("all");
  verify->add_option("identity", o.identity)->required()->check(CLI::IsMember(identities));
  verify->add_option("--k", o.k_list, "Comma separated k values");
  verify->add_option("--kappa", o.kappa_list, "Multiplicities 'k1,k2;k1,k2'");
  verify->add_option("--lambda-max", o.lambda_max)->check(CLI::NonNegativeNumber);
  verify->add_option("--samples", o.samples)->check(CLI::NonNegativeNumber);
  verify->add_option("--tol", o.tol)->check(CLI::NonNegativeNumber);
  verify->add_option("--npoints", o.npoints)->check(CLI::NonNegativeNumber);
  verify->add_option("--ntheta", o.ntheta)->check(CLI::PositiveNumber);
  verify->add_option("--seed", o.seed);
  verify->add_flag("--serial", o.serial, "Use the serial reference kernels");
  verify->add_option("--output", o.output)->check(CLI::IsMember(formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (*jack) return cmd_jack(o, out);
    if (*bessel) return cmd_bessel(o, out);
    return cmd_verify(o, out);
  } catch (const ResolutionFailure& e) {
    err << "error: " << e.what() << "\n";
    return kResolutionFailure;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const PoleError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace jackprod::cli
