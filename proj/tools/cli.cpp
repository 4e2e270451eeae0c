#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "consta/cdft.hpp"
#include "consta/codes.hpp"
#include "consta/oracle.hpp"
#include "consta/serialize.hpp"
#include "consta/verify.hpp"

namespace consta::cli {

namespace {

using nlohmann::json;

struct JobSpec {
  std::uint64_t p = 0;
  std::vector<unsigned> degrees{1};
  std::size_t n = 0;
  std::vector<std::string> lambdas;
  std::vector<std::string> generators;
  std::vector<std::string> gen_sets;
  std::vector<std::string> code_files;
  std::string vector;
  std::string method = "all";
  std::string format = "json";
  std::vector<std::uint64_t> grid_q{2, 3, 5};
  std::size_t grid_n = 10;
  std::string out_file;
  bool inject_fault = false;
};

class InputError : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A command's result: the JSON document plus the exit code it implies.
struct Result {
  json doc;
  int code = kOk;
  std::string text;                         // text format
  std::vector<std::vector<std::string>> csv;  // csv format, first row is the header
};

// Accept "2", "[1,2]" and "1,2".
json parse_value(const std::string& s) {
  std::string t = s;
  t.erase(0, t.find_first_not_of(" \t"));
  if (!t.empty() && t.front() != '[' && t.find(',') != std::string::npos) t = "[" + t + "]";
  try {
    return json::parse(t);
  } catch (const json::parse_error&) {
    throw InputError("cannot parse \"" + s + "\" as an element or coefficient list");
  }
}

std::vector<std::int64_t> parse_residues(const std::string& s) {
  std::string t = s;
  std::replace_if(t.begin(), t.end(), [](char c) { return c == ',' || c == '[' || c == ']'; }, ' ');
  std::istringstream is(t);
  std::vector<std::int64_t> out;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw InputError("bad residue \"" + tok + "\" in generating set \"" + s + "\"");
    }
  }
  return out;
}

FieldCtx field_of(const JobSpec& js) {
  if (js.p == 0) throw InputError("--p is required");
  return build_field(js.p, js.degrees);
}

FieldElem lambda_at(const JobSpec& js, const FieldCtx& f, std::size_t i) {
  if (js.lambdas.empty()) return f.one();
  const std::string& s = js.lambdas[std::min(i, js.lambdas.size() - 1)];
  return io::elem_from_json(f, parse_value(s));
}

CodeParams params_at(const JobSpec& js, const FieldCtx& f, std::size_t i) {
  if (js.n == 0) throw InputError("--n is required");
  return CodeParams::make(f, js.n, lambda_at(js, f, i));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

// Codes in input order: --code files, then --generator, then --gen-set.
// The i-th generator or set uses the i-th --lambda (or the last one given).
std::vector<ConstaCode> codes_of(const JobSpec& js) {
  std::vector<ConstaCode> out;
  for (const auto& path : js.code_files) {
    json j = read_json_file(path);
    if (j.contains("code")) j = j["code"];
    out.push_back(io::code_from_json(j));
  }
  if (js.generators.empty() && js.gen_sets.empty()) return out;
  const FieldCtx f = field_of(js);
  std::size_t i = 0;
  for (const auto& g : js.generators) {
    const CodeParams params = params_at(js, f, i++);
    json coeffs = parse_value(g);
    if (!coeffs.is_array()) coeffs = json::array({coeffs});  // a constant generator
    out.push_back(code_from_generator(params, io::poly_from_json(f, coeffs)));
  }
  for (const auto& s : js.gen_sets) {
    const CodeParams params = params_at(js, f, i++);
    out.push_back(code_from_generating_set(build_basis(params), ZnSet(js.n, parse_residues(s))));
  }
  return out;
}

ConstaCode one_code(const JobSpec& js) {
  auto codes = codes_of(js);
  if (codes.size() != 1)
    throw InputError("expected exactly one code (--generator, --gen-set or --code), got " + std::to_string(codes.size()));
  return codes.front();
}

std::string join(const json& arr, const char* sep = " ") {
  std::string s;
  for (const auto& x : arr) {
    if (!s.empty()) s += sep;
    s += x.dump();
  }
  return s;
}

std::string flags_of(const ConstaCode& c) {
  if (c.is_zero()) return "zero";
  std::string f = pattern_polynomial(c).trivial() ? "nondegenerate" : "degenerate";
  if (c.is_full()) f += ";full";
  return f;
}

const std::vector<std::string> kCodeColumns{"q", "n", "lambda", "generator", "dim", "r", "bounds", "flags"};

std::vector<std::string> code_row(const ConstaCode& c) {
  std::string r = "", bounds = "";
  if (!c.is_zero()) {
    const BoundsReport b = bounds_report(c);
    r = std::to_string(b.sequence.regularity);
    if (b.regularity.applicable) {
      std::ostringstream os;
      os << "regularity<=" << b.regularity.bound << (b.regularity.holds ? ":holds" : ":violated");
      bounds = os.str();
    }
  }
  return {std::to_string(c.field().cardinality()), std::to_string(c.n()), io::to_json(c.lambda()).dump(),
          io::to_json(c.generator()).dump(), std::to_string(c.dim()), r, bounds, flags_of(c)};
}

std::string code_text(const ConstaCode& c) {
  std::ostringstream os;
  os << "code of length " << c.n() << " over F_" << c.field().cardinality() << ", lambda " << io::to_json(c.lambda())
     << "\n  generator " << io::to_json(c.generator()) << "\n  dim " << c.dim() << ", G = {"
     << join(json(c.generating_set().elements()), ",") << "}\n  " << flags_of(c) << "\n";
  return os.str();
}

// --- commands ------------------------------------------------------------

Result cmd_factor(const JobSpec& js) {
  const FieldCtx f = field_of(js);
  const CodeParams params = params_at(js, f, 0);
  const RootBasis basis = build_basis(params);
  const auto factors = factor_xn_minus_lambda(basis);
  const auto orbits = affine_orbits(basis);
  Result r;
  json fs = json::array();
  for (const auto& g : factors) fs.push_back(io::to_json(g));
  r.doc = json{{"q", params.q},
               {"n", params.n},
               {"lambda", io::to_json(params.lambda)},
               {"order_lambda", params.order_lambda},
               {"basis", io::to_json(basis)},
               {"factors", fs},
               {"orbits", orbits}};
  r.csv.push_back({"orbit", "factor"});
  std::ostringstream os;
  os << "x^" << params.n << " - " << io::to_json(params.lambda) << " over F_" << params.q << " (t = " << basis.t()
     << ", splitting degree " << basis.family()->splitting_degree() << ")\n";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const json orbit = orbits[i];
    r.csv.push_back({join(orbit), io::to_json(factors[i]).dump()});
    os << "  {" << join(orbit, ",") << "}  " << io::to_json(factors[i]).dump() << "\n";
  }
  r.text = os.str();
  return r;
}

Result cmd_code(const JobSpec& js) {
  const ConstaCode c = one_code(js);
  Result r;
  r.doc = json{{"code", io::to_json(c)}, {"basis", io::to_json(c.basis())}};
  r.text = code_text(c);
  r.csv = {kCodeColumns, code_row(c)};
  return r;
}

Result cmd_product(const JobSpec& js) {
  const auto codes = codes_of(js);
  if (codes.size() != 2) throw InputError("product needs exactly two codes, got " + std::to_string(codes.size()));
  const ConstaCode& c1 = codes[0];
  const ConstaCode& c2 = codes[1];
  if (c1.n() != c2.n()) throw InputError("codes have different lengths");
  const std::string& m = js.method;
  if (m != "sumset" && m != "gcd" && m != "oracle" && m != "all") throw InputError("unknown method " + m);

  Result r;
  json reports = json::array();
  std::vector<ConstaCode> results;
  std::optional<OracleProduct> oracle;
  if (m == "oracle" || m == "all") oracle = oracle_schur_product(c1, c2);
  const auto agrees = [&](const ConstaCode& c) -> std::optional<bool> {
    if (!oracle) return std::nullopt;
    return c.generator() == oracle->generator && c.dim() == oracle->dim;
  };
  if (m == "sumset" || m == "all") {
    results.push_back(schur_product_sumset(c1, c2));
    reports.push_back(io::product_report("sumset", results.back(), agrees(results.back())));
  }
  if (m == "gcd" || m == "all") {
    results.push_back(schur_product_gcd(c1, c2));
    reports.push_back(io::product_report("gcd", results.back(), agrees(results.back())));
  }
  if (oracle) {
    reports.push_back(json{{"method", "oracle"},
                           {"lambda", io::to_json(c1.lambda() * c2.lambda())},
                           {"generator", io::to_json(oracle->generator)},
                           {"dim", oracle->dim}});
    if (m == "oracle") {
      results.push_back(code_from_generator(c1.basis().times(c2.basis()), oracle->generator));
      reports.back()["G"] = results.back().generating_set().elements();
    }
  }
  r.doc = json{{"products", reports}};
  if (m == "all") {
    const bool agree = results[0].same_code(results[1]) && agrees(results[0]).value_or(false);
    r.doc["agree"] = agree;
    if (!agree) r.code = kVerificationFailed;
  }
  r.doc["code"] = io::to_json(results.front());

  std::ostringstream os;
  for (const auto& rep : reports)
    os << rep["method"].get<std::string>() << ": generator " << rep["generator"].dump() << ", dim " << rep["dim"]
       << "\n";
  if (r.doc.contains("agree")) os << "agree: " << (r.doc["agree"].get<bool>() ? "yes" : "NO") << "\n";
  r.text = os.str();
  r.csv.push_back(kCodeColumns);
  for (const auto& c : results) r.csv.push_back(code_row(c));
  return r;
}

Result cmd_powers(const JobSpec& js) {
  const ConstaCode c = one_code(js);
  if (c.is_zero()) throw InputError("powers of the zero code are not defined here");
  const BoundsReport b = bounds_report(c);
  Result r;
  r.doc = json{{"code", io::to_json(c)}, {"bounds", io::to_json(b)}};
  std::ostringstream os;
  os << "dimensions " << join(json(b.sequence.dims)) << ", r = " << b.sequence.regularity
     << (b.sequence.fills ? ", fills" : ", never fills") << "\n";
  if (b.regularity.applicable)
    os << "regularity bound " << b.regularity.bound << (b.regularity.holds ? " (holds)" : " (VIOLATED)") << "\n";
  os << "square fill by size: " << (b.square_fill.applies ? (b.square_fill.holds ? "holds" : "VIOLATED") : "n/a")
     << "\n";
  os << "fourier cover: bias " << b.fourier.bias << ", " << b.fourier.status << "\n";
  r.text = os.str();
  r.csv = {kCodeColumns, code_row(c)};
  return r;
}

Result cmd_dual(const JobSpec& js) {
  const ConstaCode c = one_code(js);
  const DualResult d = dual_generating_set(c);
  const OracleDual od = oracle_dual(c);
  const bool agree = d.set == d.code.generating_set() && od.dim == d.code.dim() &&
                     od.basis.same_span(generator_matrix(c.field(), c.n(), d.code.generator()));
  Result r;
  r.doc = json{{"set", d.set.elements()}, {"dual", io::to_json(d.code)}, {"oracle_dim", od.dim}, {"agree", agree}};
  if (!agree) r.code = kVerificationFailed;
  r.text = "dual generating set {" + join(json(d.set.elements()), ",") + "} against beta^-1\n" + code_text(d.code) +
           "oracle nullspace dim " + std::to_string(od.dim) + (agree ? ", agrees\n" : ", DISAGREES\n");
  r.csv = {kCodeColumns, code_row(d.code)};
  return r;
}

Result cmd_transform(const JobSpec& js) {
  const FieldCtx f = field_of(js);
  const CodeParams params = params_at(js, f, 0);
  const RootBasis basis = build_basis(params);
  if (js.vector.empty()) throw InputError("--vector is required");
  const Vec a = io::vec_from_json(f, parse_value(js.vector));
  if (a.size() != params.n) throw InputError("--vector must have exactly n entries");
  const Spectrum s = forward(a, basis);
  const Vec back = inverse(s);
  bool round_trip = true;
  for (std::size_t i = 0; i < a.size(); ++i) round_trip = round_trip && back[i] == a[i];
  Result r;
  r.doc = json{{"basis", io::to_json(basis)},
               {"spectrum", io::to_json(s.values)},
               {"support", spectral_support(a, basis).elements()},
               {"rational", is_rational_spectrum(s)},
               {"round_trip", round_trip}};
  if (!round_trip) r.code = kVerificationFailed;
  std::ostringstream os;
  r.csv.push_back({"j", "A_j"});
  for (std::size_t j = 0; j < s.values.size(); ++j) {
    os << "A_" << j << " = " << io::to_json(s.values[j]).dump() << "\n";
    r.csv.push_back({std::to_string(j), io::to_json(s.values[j]).dump()});
  }
  r.text = os.str();
  return r;
}

Result cmd_verify(const JobSpec& js) {
  VerifyOptions opt;
  opt.q_values = js.grid_q;
  opt.n_max = js.grid_n;
  opt.inject_fault = js.inject_fault;
  const VerifyReport rep = run_verification(opt);
  Result r;
  r.doc = rep.to_json();
  r.code = rep.ok() ? kOk : kVerificationFailed;
  std::ostringstream os;
  r.csv.push_back({"check", "checked", "failed"});
  for (const auto& [name, t] : rep.checks) {
    os << (t.failed ? "FAIL " : "ok   ") << name << "  " << t.checked - t.failed << "/" << t.checked << "\n";
    r.csv.push_back({name, std::to_string(t.checked), std::to_string(t.failed)});
  }
  os << rep.codes_checked << " codes, " << rep.pairs_checked << " pairs, " << rep.failures << " failures\n";
  if (rep.first_counterexample) os << "first counterexample: " << rep.first_counterexample->dump() << "\n";
  r.text = os.str();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

std::string render(const Result& r, const std::string& format) {
  if (format == "text") return r.text;
  if (format == "csv") {
    std::string s;
    for (const auto& row : r.csv) {
      for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + csv_field(row[i]);
      s += "\n";
    }
    return s;
  }
  return io::dump(r.doc) + "\n";
}

void emit(const std::string& body, const JobSpec& js, std::ostream& out) {
  if (js.out_file.empty()) {
    out << body;
    return;
  }
  std::ofstream f(js.out_file);
  if (!f) throw InputError("cannot write " + js.out_file);
  f << body;
}

json error_doc(const std::string& kind, const std::string& message) {
  return json{{"error", json{{"kind", kind}, {"message", message}}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constacyclic codes over finite fields: spectra, Schur products and patterns", "consta"};
  app.require_subcommand(1);
  JobSpec js;

  // Repeatable values that may themselves be JSON arrays; plain vector options would split "[1,2]".
  const auto add_values = [](CLI::App* sub, const std::string& name, std::vector<std::string>& into,
                             const std::string& help) {
    sub->add_option_function<std::string>(name, [&into](const std::string& s) { into.push_back(s); }, help)
        ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll)
        ->trigger_on_parse();
  };
  const auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", js.p, "Characteristic of the base field")->required();
    sub->add_option("--degrees", js.degrees, "Extension degrees of the tower over F_p (default 1)");
  };
  const auto add_params = [&](CLI::App* sub) {
    add_field(sub);
    sub->add_option("--n", js.n, "Code length")->required();
    add_values(sub, "--lambda", js.lambdas, "Constant lambda as a coefficient array (repeatable)");
  };
  const auto add_codes = [&](CLI::App* sub) {
    sub->add_option("--p", js.p, "Characteristic of the base field");
    sub->add_option("--degrees", js.degrees, "Extension degrees of the tower over F_p (default 1)");
    sub->add_option("--n", js.n, "Code length");
    add_values(sub, "--lambda", js.lambdas, "Constant lambda as a coefficient array (repeatable)");
    add_values(sub, "--generator", js.generators, "Generator coefficients, constant term first (repeatable)");
    add_values(sub, "--gen-set", js.gen_sets, "Generating set residues, e.g. 2,3 (repeatable)");
    sub->add_option("--code", js.code_files, "JSON code descriptor file (repeatable)");
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", js.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", js.out_file, "Write output to FILE");
  };

  auto* factor = app.add_subcommand("factor", "Factor x^n - lambda along the affine orbits");
  add_params(factor);
  add_output(factor);
  auto* code = app.add_subcommand("code", "Describe one code");
  add_codes(code);
  add_output(code);
  auto* product = app.add_subcommand("product", "Schur product of two codes");
  add_codes(product);
  product->add_option("--method", js.method, "sumset, gcd, oracle or all")
      ->check(CLI::IsMember({"sumset", "gcd", "oracle", "all"}));
  add_output(product);
  auto* powers = app.add_subcommand("powers", "Schur power dimensions, regularity and bounds");
  add_codes(powers);
  add_output(powers);
  auto* dual = app.add_subcommand("dual", "Dual code and its generating set");
  add_codes(dual);
  add_output(dual);
  auto* transform = app.add_subcommand("transform", "Constacyclic DFT of a vector");
  add_params(transform);
  transform->add_option("--vector", js.vector, "Vector entries as a coefficient array")->required();
  add_output(transform);
  auto* verify = app.add_subcommand("verify", "Exhaustive cross-check over a grid");
  verify->add_option("--grid-q", js.grid_q, "Field sizes (default 2 3 5)");
  verify->add_option("--grid-n", js.grid_n, "Largest length (default 10)");
  verify->add_flag("--inject-fault", js.inject_fault, "Corrupt one product generator (negative control)");
  add_output(verify);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << io::dump(error_doc("input", e.what())) << "\n";
    return kInputError;
  }

  try {
    Result r;
    if (*factor) r = cmd_factor(js);
    else if (*code) r = cmd_code(js);
    else if (*product) r = cmd_product(js);
    else if (*powers) r = cmd_powers(js);
    else if (*dual) r = cmd_dual(js);
    else if (*transform) r = cmd_transform(js);
    else r = cmd_verify(js);
    emit(render(r, js.format), js, out);
    return r.code;
  } catch (const std::invalid_argument& e) {
    out << io::dump(error_doc("input", e.what())) << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    out << io::dump(error_doc("input", e.what())) << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    out << io::dump(error_doc("internal", e.what())) << "\n";
    return kVerificationFailed;
  }
}

}  // namespace consta::cli
