#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ellgen/bundles.hpp"
#include "ellgen/error.hpp"
#include "ellgen/genera.hpp"
#include "ellgen/json_io.hpp"
#include "ellgen/modular.hpp"
#include "ellgen/sampling.hpp"
#include "ellgen/sobolev.hpp"
#include "ellgen/theta.hpp"

namespace ellgen::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string format = "text";
  std::optional<int> uorder;
  std::uint64_t seed = 20240607;

  std::string manifold_path;
  std::string genus_name;

  int n = 2;
  std::string twist = "theta2";

  std::string check;
  int samples = 0;
  std::string tau = "i";

  int ambient = 0;
  int degree = 0;

  int m = 0;
  double b = 0.0;
  double diam = 1.0;
  double tol = 1e-12;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int default_uorder() {
  if (const char* env = std::getenv("GENUS_DEFAULT_UORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1 || v > 100000) {
      throw UsageError(std::string("GENUS_DEFAULT_UORDER must be a positive integer, got '") + env + "'");
    }
    return static_cast<int>(v);
  }
  return kDefaultUOrder;
}

int resolve_uorder(const Options& o, int fallback) {
  const int k = o.uorder ? *o.uorder : fallback;
  if (k < 1) throw UsageError("--uorder must be >= 1");
  return k;
}

Manifold load_manifold(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read manifold file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_manifold(buf.str());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Parse) throw Error(ErrorKind::Parse, path + ": " + e.what());
    throw;
  }
}

// Accepts "i", "2i", "-0.5+1.5i", "3" (the last is rejected later as not in H).
std::complex<double> parse_tau(const std::string& text) {
  auto number = [&](const std::string& s, double unit) {
    if (s.empty() || s == "+") return unit;
    if (s == "-") return -unit;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw UsageError("cannot parse --tau '" + text + "'");
    }
    if (used != s.size()) throw UsageError("cannot parse --tau '" + text + "'");
    return v;
  };
  if (text.empty()) throw UsageError("empty --tau");
  if (text.back() != 'i') return {number(text, 0.0), 0.0};
  const std::string body = text.substr(0, text.size() - 1);
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(body, 1.0)};
  return {number(body.substr(0, split), 0.0), number(body.substr(split), 1.0)};
}

std::string first_difference(const USeries& a, const USeries& b) {
  const USeries d = a - b;
  if (d.is_zero()) return "0";
  const int k = d.support().front();
  return rat_string(d[k]) + " at u^" + std::to_string(k);
}

struct Report {
  std::string check;
  json fields = json::object();
  std::vector<std::pair<std::string, std::string>> residuals;  // label, value
  bool pass = true;
};

int emit(const Report& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    json j = {{"check", r.check}};
    for (const auto& [k, v] : r.fields.items()) j[k] = v;
    json res = json::array();
    for (const auto& [label, value] : r.residuals) res.push_back({{"case", label}, {"residual", value}});
    j["residuals"] = res;
    j["pass"] = r.pass;
    out << j.dump() << "\n";
  } else {
    for (const auto& [label, value] : r.residuals) out << r.check << " " << label << ": residual " << value << "\n";
    out << r.check << ": " << (r.pass ? "pass" : "FAIL") << "\n";
  }
  return r.pass ? kOk : kCheckFailed;
}

int cmd_genus(const Options& o, std::ostream& out) {
  const auto kind = parse_genus_kind(o.genus_name);
  if (!kind) throw UsageError("unknown genus '" + o.genus_name + "' (ahat, lhat, signature, ell1, ell2, witten)");
  const Manifold m = load_manifold(o.manifold_path);
  const int k = resolve_uorder(o, default_uorder());
  const USeries s = genus(m, *kind, k);
  if (o.format == "json") {
    out << print_useries(s) << "\n";
  } else if (*kind == GenusKind::AHat || *kind == GenusKind::LHat) {
    out << rat_string(s[0]) << "\n";
  } else {
    out << to_text(s) << "\n";
  }
  return kOk;
}

int cmd_bundles(const Options& o, std::ostream& out) {
  WittenTwist which;
  if (o.twist == "theta1") {
    which = WittenTwist::Theta1Twist;
  } else if (o.twist == "theta2") {
    which = WittenTwist::Theta2Twist;
  } else {
    throw UsageError("--twist must be theta1 or theta2");
  }
  if (o.n < 1) throw Error(ErrorKind::DimMismatch, "--n must be >= 1");
  const int k = resolve_uorder(o, default_uorder());
  const BundleQSeries s = expand_witten(which, o.n, k);
  if (o.format == "json") {
    json coeffs = json::array();
    for (int j = 0; j < s.order; ++j) {
      if (s[j].is_zero()) continue;
      coeffs.push_back({{"u", j}, {"bundle", s[j].to_text()}, {"virtual_rank", s[j].virtual_rank().get_str()}});
    }
    out << json{{"twist", o.twist}, {"n", o.n}, {"order", s.order}, {"coeffs", coeffs}}.dump() << "\n";
  } else {
    for (int j = 0; j < s.order; ++j) {
      if (!s[j].is_zero()) out << "u^" << j << ": " << s[j].to_text() << "\n";
    }
  }
  return kOk;
}

Report verify_cancellation(const Options& o) {
  Report r;
  r.check = "cancellation";
  const int samples = o.samples > 0 ? o.samples : 100;
  std::mt19937_64 rng(o.seed);
  r.fields = {{"samples", samples}, {"seed", o.seed}};
  for (int s = 0; s < samples; ++s) {
    const Rat p11 = random_rat(rng, 1000, 97);
    const Rat p2 = random_rat(rng, 1000, 97);
    const Rat res = cancellation_residual(p11, p2);
    r.residuals.emplace_back("p1^2=" + rat_string(p11) + ",p2=" + rat_string(p2), rat_string(res));
    r.pass = r.pass && res == 0;
  }
  return r;
}

Report verify_modular(const Options& o) {
  Report r;
  r.check = "modular-relation";
  const int k = resolve_uorder(o, 12);
  const int samples = o.samples > 0 ? o.samples : 5;
  if (o.n < 1) throw Error(ErrorKind::DimMismatch, "--n must be >= 1");
  std::mt19937_64 rng(o.seed);
  r.fields = {{"n", o.n}, {"uorder", k}, {"samples", samples}, {"seed", o.seed}};
  for (int s = 0; s < samples; ++s) {
    const Manifold m = random_manifold(o.n, rng);
    std::string res;
    try {
      const ModBasisDecomp d = expand_in_basis(genus(m, GenusKind::Ell2, k), o.n);
      res = first_difference(genus(m, GenusKind::Ell1, k), reconstruct_ell1(d, k));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ResidualNonzero) throw;
      res = e.what();
    }
    r.residuals.emplace_back("sample " + std::to_string(s), res);
    r.pass = r.pass && res == "0";
  }
  return r;
}

Report verify_routes(const Options& o) {
  Report r;
  r.check = "route-equivalence";
  const int k = resolve_uorder(o, 6);
  const int samples = o.samples > 0 ? o.samples : 5;
  if (o.n < 1) throw Error(ErrorKind::DimMismatch, "--n must be >= 1");
  std::mt19937_64 rng(o.seed);
  r.fields = {{"n", o.n}, {"uorder", k}, {"samples", samples}, {"seed", o.seed}};
  for (int s = 0; s < samples; ++s) {
    const Manifold m = random_manifold(o.n, rng);
    const std::string r2 = first_difference(ell2_via_bundles(m, k), genus(m, GenusKind::Ell2, k));
    const std::string r1 = first_difference(ell1_via_bundles(m, k), genus(m, GenusKind::Ell1, k));
    r.residuals.emplace_back("sample " + std::to_string(s) + " ell2", r2);
    r.residuals.emplace_back("sample " + std::to_string(s) + " ell1", r1);
    r.pass = r.pass && r1 == "0" && r2 == "0";
  }
  return r;
}

Report verify_transformation(const Options& o) {
  Report r;
  r.check = "transformation-laws";
  const int k = resolve_uorder(o, 80);
  const std::complex<double> tau = parse_tau(o.tau);
  const std::complex<double> inv = -1.0 / tau;
  constexpr double kTol = 1e-9;
  r.fields = {{"tau", o.tau}, {"uorder", k}, {"tolerance", kTol}};

  // delta1(-1/tau) = tau^2 delta2(tau), eps1(-1/tau) = tau^4 eps2(tau).
  auto law = [&](const USeries& f1, const USeries& f2, int weight, const char* label) {
    const NumericValue a = numeric_eval(f1, inv);
    const NumericValue b = numeric_eval(f2, tau);
    const double res = std::abs(a.value - std::pow(tau, weight) * b.value);
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << res;
    r.residuals.emplace_back(label, s.str());
    r.pass = r.pass && res + a.tail_bound + std::abs(std::pow(tau, weight)) * b.tail_bound < kTol;
  };
  law(delta1(k), delta2(k), 2, "delta");
  law(eps1(k), eps2(k), 4, "eps");
  return r;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Report r;
  if (o.check == "cancellation") {
    r = verify_cancellation(o);
  } else if (o.check == "modular-relation") {
    r = verify_modular(o);
  } else if (o.check == "route-equivalence") {
    r = verify_routes(o);
  } else if (o.check == "transformation-laws") {
    r = verify_transformation(o);
  } else {
    throw UsageError("unknown check '" + o.check +
                     "' (cancellation, modular-relation, route-equivalence, transformation-laws)");
  }
  return emit(r, o, out);
}

int cmd_hypersurface(const Options& o, std::ostream& out) {
  const Hypersurface h{o.ambient, o.degree};
  const Manifold m = hypersurface_pont(h);
  const int k = resolve_uorder(o, 6);
  const Rat sigma = genus(m, GenusKind::LHat, 1)[0];
  const Rat ahat = genus(m, GenusKind::AHat, 1)[0];
  const USeries ell2 = genus(m, GenusKind::Ell2, k);
  if (o.format == "json") {
    out << json{{"manifold", to_json(m)},
                {"signature", rat_string(sigma)},
                {"ahat", rat_string(ahat)},
                {"ell2", to_json(ell2)}}
               .dump()
        << "\n";
  } else {
    out << print_manifold(m) << "\n";
    out << "signature = " << rat_string(sigma) << "\n";
    out << "ahat = " << rat_string(ahat) << "\n";
    out << "ell2 = " << to_text(ell2) << "\n";
  }
  return kOk;
}

int cmd_sobolev(const Options& o, std::ostream& out) {
  if (!(o.diam > 0.0)) throw Error(ErrorKind::InvalidArgument, "--diam must be positive");
  const SobolevRoot root = sobolev_solve(o.m, o.b, o.tol);
  const double R = o.diam / (o.b * root.x);
  out << json{{"m", o.m}, {"b", o.b}, {"C_b", root.x}, {"R", R}, {"residual", root.residual}}.dump() << "\n";
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact elliptic genera, Witten bundles and related constants"};
  app.name("ellgen");
  app.require_subcommand(1, 1);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_uorder = [&](CLI::App* sub) {
    sub->add_option("--uorder", o.uorder, "Truncation order in u = q^(1/2)");
  };

  auto* g = app.add_subcommand("genus", "Genus of a manifold given by Pontryagin numbers");
  g->add_option("--manifold", o.manifold_path, "Manifold JSON file")->required();
  g->add_option("--genus", o.genus_name, "ahat, lhat|signature, ell1, ell2, witten")->required();
  add_uorder(g);
  add_common(g);

  auto* bu = app.add_subcommand("bundles", "Witten bundle expansion coefficients");
  bu->add_option("--n", o.n, "Manifold dimension / 4");
  bu->add_option("--twist", o.twist, "theta1 (A_k) or theta2 (B_k)");
  add_uorder(bu);
  add_common(bu);

  auto* v = app.add_subcommand("verify", "Run an identity check");
  v->add_option("--check", o.check, "cancellation, modular-relation, route-equivalence, transformation-laws")
      ->required();
  v->add_option("--n", o.n, "Manifold dimension / 4");
  v->add_option("--samples", o.samples, "Number of random cases");
  v->add_option("--seed", o.seed, "RNG seed");
  v->add_option("--tau", o.tau, "Point in the upper half plane, e.g. i or 0.3+1.2i");
  add_uorder(v);
  add_common(v);

  auto* h = app.add_subcommand("hypersurface", "Degree-d hypersurface in CP^N");
  h->add_option("--ambient", o.ambient, "N")->required();
  h->add_option("--degree", o.degree, "d")->required();
  add_uorder(h);
  add_common(h);

  auto* s = app.add_subcommand("sobolev", "Poincare-Sobolev constant C(b) and radius R");
  s->add_option("--m", o.m, "Dimension m >= 2")->required();
  s->add_option("--b", o.b, "b > 0")->required();
  s->add_option("--diam", o.diam, "Diameter bound");
  s->add_option("--tol", o.tol, "Residual tolerance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ellgen: " << e.what() << "\n";
    return kMalformedInput;
  }

  try {
    if (g->parsed()) return cmd_genus(o, out);
    if (bu->parsed()) return cmd_bundles(o, out);
    if (v->parsed()) return cmd_verify(o, out);
    if (h->parsed()) return cmd_hypersurface(o, out);
    return cmd_sobolev(o, out);
  } catch (const UsageError& e) {
    err << "ellgen: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const Error& e) {
    err << "ellgen: " << e.what() << "\n";
    return e.kind() == ErrorKind::Parse ? kMalformedInput : kDomainError;
  }
}

}  // namespace ellgen::cli
