#include "consta/verify.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>

#include "consta/cdft.hpp"
#include "consta/codes.hpp"
#include "consta/oracle.hpp"
#include "consta/serialize.hpp"

namespace consta {

using nlohmann::json;

std::pair<std::uint64_t, unsigned> split_prime_power(std::uint64_t q) {
  const auto f = q >= 2 ? prime_factors(q) : std::vector<std::uint64_t>{};
  if (f.size() != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  unsigned m = 0;
  for (std::uint64_t r = q; r > 1; r /= f[0]) ++m;
  return {f[0], m};
}

json VerifyReport::to_json() const {
  json checks_j = json::object();
  for (const auto& [name, t] : checks) checks_j[name] = json{{"checked", t.checked}, {"failed", t.failed}};
  json out{{"checks", checks_j},
           {"info", info},
           {"fields", fields},
           {"codes_checked", codes_checked},
           {"pairs_checked", pairs_checked},
           {"failures", failures},
           {"ok", ok()}};
  out["first_counterexample"] = first_counterexample ? *first_counterexample : json(nullptr);
  return out;
}

namespace {

class Runner {
 public:
  explicit Runner(const VerifyOptions& opt) : opt_(opt) {
    for (const char* k : {"regularity_bound_ceiling_violations", "regularity_bound_misses_prime_n",
                          "regularity_bound_misses_composite_n", "fourier_cover_evaluated",
                          "fourier_cover_not_applicable"})
      rep_.info[k] = 0;
  }

  VerifyReport run() {
    for (auto q : opt_.q_values) {
      const auto [p, m] = split_prime_power(q);
      const FieldCtx f = build_field(p, {m});
      ++rep_.fields;
      for (std::size_t n = 1; n <= opt_.n_max; ++n)
        if (n % p) run_length(f, n);
    }
    return std::move(rep_);
  }

 private:
  void check(const std::string& name, bool ok, const std::function<json()>& detail) {
    auto& t = rep_.checks[name];
    ++t.checked;
    if (ok) return;
    ++t.failed;
    ++rep_.failures;
    if (!rep_.first_counterexample) {
      json d = detail();
      d["check"] = name;
      rep_.first_counterexample = std::move(d);
    }
  }

  static json describe(const ConstaCode& c) {
    return json{{"q", c.field().cardinality()},
                {"n", c.n()},
                {"lambda", io::to_json(c.lambda())},
                {"generator", io::to_json(c.generator())}};
  }

  void run_length(const FieldCtx& f, std::size_t n) {
    const auto family = RootFamily::get(f, n);
    std::vector<std::vector<ConstaCode>> by_lambda;
    for (std::uint64_t li = 1; li < f.cardinality(); ++li) {
      const RootBasis basis = RootBasis::canonical(family, f.make(li));
      std::vector<ConstaCode> codes;
      for (const auto& g : monic_divisors(basis)) codes.push_back(code_from_generator(basis, g));
      for (const auto& c : codes) check_code(c);
      by_lambda.push_back(std::move(codes));
    }
    for (const auto& l1 : by_lambda)
      for (const auto& l2 : by_lambda)
        for (const auto& c1 : l1)
          for (const auto& c2 : l2) check_pair(c1, c2);
  }

  void check_code(const ConstaCode& c) {
    ++rep_.codes_checked;
    const std::size_t n = c.n();
    const auto who = [&] { return describe(c); };

    check("code.dimension", c.dim() == n - static_cast<std::size_t>(c.generator().degree()), who);

    // G is a union of cosets of <n/v> exactly when g(x) = u(x^v)
    for (std::size_t v = 2; v < n; ++v) {
      if (n % v) continue;
      const std::size_t step = n / v;
      bool union_of_cosets = true;
      for (auto a : c.generating_set().elements())
        union_of_cosets = union_of_cosets && c.generating_set().contains(static_cast<std::int64_t>((a + step) % n));
      bool in_xv = true;
      for (std::size_t i = 0; i < c.generator().coeffs().size(); ++i)
        if (i % v && !c.generator().coeffs()[i].is_zero()) in_xv = false;
      check("code.union_of_cosets_iff_polynomial_in_x^v", union_of_cosets == in_xv, who);
    }

    const DualResult dual = dual_generating_set(c);
    const OracleDual od = oracle_dual(c);
    check("code.dual_set_matches_dual_code", dual.set == dual.code.generating_set(), who);
    check("code.dual_matches_nullspace",
          od.dim + c.dim() == n && od.basis.same_span(generator_matrix(c.field(), n, dual.code.generator())), who);

    if (c.is_zero()) return;

    const PatternPoly pat = pattern_polynomial(c);
    const PatternPoly opat = oracle_pattern(c);
    check("code.pattern_matches_oracle", pat == opat, [&] {
      json d = who();
      d["pattern"] = io::to_json(pat);
      d["oracle_pattern"] = io::to_json(opat);
      return d;
    });

    const ZnSet coset = smallest_coset(c.generating_set()).elements();
    check("code.smallest_coset_is_pattern_support", coset == spectral_support(pat.to_poly(c.field()), c.basis()), who);

    const DimensionSequence seq = dimension_sequence(c);
    check("code.fills_iff_nondegenerate", seq.fills == pat.trivial(), who);

    if (!pat.trivial()) {
      for (unsigned i = 1; i <= seq.regularity + 1; ++i)
        check("code.factored_power_generator", schur_power(c, i).generator() == schur_power_factored(c, i), [&] {
          json d = who();
          d["power"] = i;
          return d;
        });
    }

    const BoundsReport b = bounds_report(c);
    if (b.regularity.applicable) {
      check("code.regularity_bound", b.regularity.holds, [&] {
        json d = who();
        d["bounds"] = io::to_json(b);
        return d;
      });
      if (std::ceil(b.regularity.bound - 1e-9) < b.sequence.regularity) ++rep_.info["regularity_bound_ceiling_violations"];
      if (!b.regularity.holds) ++rep_.info[b.regularity.n_prime ? "regularity_bound_misses_prime_n" : "regularity_bound_misses_composite_n"];
    }
    ++rep_.info[b.fourier.applicable ? "fourier_cover_evaluated" : "fourier_cover_not_applicable"];
  }

  void check_pair(const ConstaCode& c1, const ConstaCode& c2) {
    ++rep_.pairs_checked;
    const auto who = [&] { return json{{"c1", describe(c1)}, {"c2", describe(c2)}}; };

    const ConstaCode by_sum = schur_product_sumset(c1, c2);
    const ConstaCode by_gcd = schur_product_gcd(c1, c2);
    const OracleProduct by_oracle = oracle_schur_product(c1, c2);

    Poly gcd_gen = by_gcd.generator();
    if (opt_.inject_fault && !fault_injected_) {
      gcd_gen = gcd_gen + Poly::constant(gcd_gen.field(), gcd_gen.field().one());
      fault_injected_ = true;
    }

    const auto products = [&] {
      json d = who();
      d["sumset"] = io::to_json(by_sum.generator());
      d["gcd"] = io::to_json(gcd_gen);
      d["oracle"] = io::to_json(by_oracle.generator);
      return d;
    };
    check("product.sumset_equals_gcd", by_sum.generator() == gcd_gen && by_sum.generating_set() == by_gcd.generating_set(),
          products);
    check("product.sumset_equals_oracle", by_sum.generator() == by_oracle.generator && by_sum.dim() == by_oracle.dim,
          products);
    check("product.oracle_span_is_constacyclic", span_shift_closed(by_oracle.span, c1.lambda() * c2.lambda()), who);

    const FillBySize fill = fill_by_size(c1, c2);
    if (fill.applies) check("product.fills_when_dimensions_exceed_n", fill.holds, who);

    if (!c1.is_zero() && !c2.is_zero()) {
      const PatternPoly predicted = pattern_of_product(c1, c2);
      const PatternPoly actual = pattern_polynomial(by_sum);
      check("product.pattern", predicted == actual, [&] {
        json d = who();
        d["predicted"] = io::to_json(predicted);
        d["actual"] = io::to_json(actual);
        return d;
      });
    }
  }

  const VerifyOptions& opt_;
  VerifyReport rep_;
  bool fault_injected_ = false;
};

}  // namespace

VerifyReport run_verification(const VerifyOptions& opt) {
  if (opt.n_max > VerifyOptions::kMaxN)
    throw std::invalid_argument("grid too large: n_max must be at most " + std::to_string(VerifyOptions::kMaxN));
  if (opt.q_values.empty()) throw std::invalid_argument("grid has no field sizes");
  for (auto q : opt.q_values) {
    if (q > VerifyOptions::kMaxQ)
      throw std::invalid_argument("grid too large: q must be at most " + std::to_string(VerifyOptions::kMaxQ));
    split_prime_power(q);
  }
  return Runner(opt).run();
}

}  // namespace consta
