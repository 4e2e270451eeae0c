#include "consta/serialize.hpp"

#include <stdexcept>

namespace consta::io {

namespace {

std::vector<std::uint64_t> level_sizes(const FieldCtx& f) {
  std::vector<std::uint64_t> s{f.characteristic()};
  for (unsigned d : f.degrees()) s.push_back(ipow(s.back(), d));
  return s;
}

json elem_at(const FieldCtx& f, const std::vector<std::uint64_t>& sizes, std::size_t level, std::uint64_t idx) {
  if (level == 0) return idx;
  const unsigned d = f.degrees()[level - 1];
  if (d == 1) return elem_at(f, sizes, level - 1, idx);
  const std::uint64_t Q = sizes[level - 1];
  json arr = json::array();
  for (unsigned i = 0; i < d; ++i) {
    arr.push_back(elem_at(f, sizes, level - 1, idx % Q));
    idx /= Q;
  }
  return arr;
}

std::uint64_t parse_at(const FieldCtx& f, const std::vector<std::uint64_t>& sizes, std::size_t level, const json& j) {
  if (j.is_number_integer()) {
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t v = j.get<std::int64_t>() % p;
    if (v < 0) v += p;
    return static_cast<std::uint64_t>(v);
  }
  if (!j.is_array()) throw std::invalid_argument("field element must be an integer or an array, got " + j.dump());
  if (level == 0) throw std::invalid_argument("too much nesting in field element " + j.dump());
  const unsigned d = f.degrees()[level - 1];
  if (d == 1) return parse_at(f, sizes, level - 1, j);
  if (j.size() > d)
    throw std::invalid_argument("field element " + j.dump() + " has more than " + std::to_string(d) + " coefficients");
  const std::uint64_t Q = sizes[level - 1];
  std::uint64_t idx = 0;
  std::uint64_t scale = 1;
  for (const auto& c : j) {
    idx += parse_at(f, sizes, level - 1, c) * scale;
    scale *= Q;
  }
  return idx;
}

template <class T>
T required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad field \"") + key + "\": " + e.what());
  }
}

}  // namespace

json to_json(const FieldCtx& f) {
  json moduli = json::array();
  const auto sizes = level_sizes(f);
  for (std::size_t l = 0; l < f.levels(); ++l) {
    json m = json::array();
    for (auto c : f.moduli()[l]) m.push_back(elem_at(f, sizes, l, c));
    moduli.push_back(std::move(m));
  }
  return json{{"p", f.characteristic()}, {"degrees", f.degrees()}, {"moduli", moduli}};
}

FieldCtx field_from_json(const json& j) {
  const auto p = required<std::uint64_t>(j, "p");
  std::vector<unsigned> degrees{1};
  if (j.contains("degrees")) degrees = required<std::vector<unsigned>>(j, "degrees");
  FieldCtx f = build_field(p, degrees);
  if (j.contains("moduli") && to_json(f)["moduli"] != j["moduli"])
    throw std::invalid_argument("moduli in input do not match the canonical tower for p = " + std::to_string(p));
  return f;
}

json to_json(const FieldElem& x) {
  const FieldCtx f = x.field();
  return elem_at(f, level_sizes(f), f.levels(), x.index());
}

FieldElem elem_from_json(const FieldCtx& f, const json& j) {
  return f.make(parse_at(f, level_sizes(f), f.levels(), j));
}

json to_json(const Poly& a) {
  json arr = json::array();
  for (const auto& c : a.coeffs()) arr.push_back(to_json(c));
  return arr;
}

Poly poly_from_json(const FieldCtx& f, const json& j) {
  return Poly(f, vec_from_json(f, j));
}

json to_json(const Vec& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(to_json(c));
  return arr;
}

Vec vec_from_json(const FieldCtx& f, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of coefficients, got " + j.dump());
  Vec v;
  v.reserve(j.size());
  for (const auto& c : j) v.push_back(elem_from_json(f, c));
  return v;
}

json to_json(const ZnSet& s) { return json{{"n", s.modulus()}, {"elements", s.elements()}}; }

ZnSet znset_from_json(const json& j) {
  const auto n = required<std::size_t>(j, "n");
  if (n == 0) throw std::invalid_argument("Z_n needs n >= 1");
  return ZnSet(n, required<std::vector<std::int64_t>>(j, "elements"));
}

json to_json(const PatternPoly& p) { return json{{"v", p.v}, {"alpha", to_json(p.alpha)}}; }

json to_json(const ConstaCode& c) {
  json out{{"field", to_json(c.field())},
           {"q", c.field().cardinality()},
           {"n", c.n()},
           {"lambda", to_json(c.lambda())},
           {"generator", to_json(c.generator())},
           {"G", c.generating_set().elements()},
           {"dim", c.dim()}};
  if (c.is_zero()) {
    out["pattern"] = nullptr;
    out["degenerate"] = false;
  } else {
    const PatternPoly p = pattern_polynomial(c);
    out["pattern"] = to_json(p);
    out["degenerate"] = !p.trivial();
  }
  return out;
}

ConstaCode code_from_json(const json& j) {
  if (!j.is_object() || !j.contains("field")) throw std::invalid_argument("code descriptor needs a \"field\" object");
  const FieldCtx f = field_from_json(j["field"]);
  if (j.contains("q") && required<std::uint64_t>(j, "q") != f.cardinality())
    throw std::invalid_argument("q does not match the field");
  const auto n = required<std::size_t>(j, "n");
  if (!j.contains("lambda") || !j.contains("generator"))
    throw std::invalid_argument("code descriptor needs \"lambda\" and \"generator\"");
  const FieldElem lambda = elem_from_json(f, j["lambda"]);
  ConstaCode c = code_from_generator(CodeParams::make(f, n, lambda), poly_from_json(f, j["generator"]));
  if (j.contains("G") && ZnSet(n, required<std::vector<std::int64_t>>(j, "G")) != c.generating_set())
    throw std::invalid_argument("G in the descriptor does not match the generator");
  if (j.contains("dim") && required<std::size_t>(j, "dim") != c.dim())
    throw std::invalid_argument("dim in the descriptor does not match the generator");
  return c;
}

json to_json(const RootBasis& b) {
  const CodeParams p = b.params();
  json orbits = json::array();
  for (const auto& o : affine_orbits(b)) orbits.push_back(o);
  return json{{"q", b.q()},
              {"n", b.n()},
              {"lambda", to_json(b.lambda())},
              {"splitting_degree", b.family()->splitting_degree()},
              {"splitting_field", to_json(b.splitting())},
              {"delta", to_json(b.delta())},
              {"delta_order", b.family()->delta_order()},
              {"xi", to_json(b.xi())},
              {"beta", to_json(b.beta())},
              {"beta_exponent", b.exponent()},
              {"t", b.t()},
              {"m1", p.m1},
              {"m2", p.m2},
              {"orbits", orbits}};
}

json product_report(const std::string& method, const ConstaCode& c, std::optional<bool> agrees) {
  json out{{"method", method},
           {"lambda", to_json(c.lambda())},
           {"generator", to_json(c.generator())},
           {"G", c.generating_set().elements()},
           {"dim", c.dim()}};
  if (agrees) out["agrees_with_oracle"] = *agrees;
  return out;
}

json to_json(const BoundsReport& r) {
  json reg{{"applicable", r.regularity.applicable}};
  if (r.regularity.applicable) {
    reg["n_prime"] = r.regularity.n_prime;
    reg["bound"] = r.regularity.bound;
    reg["holds"] = r.regularity.holds;
  }
  json fourier{{"bias", r.fourier.bias}, {"applicable", r.fourier.applicable}, {"status", r.fourier.status}};
  fourier["value"] = r.fourier.applicable ? json(r.fourier.value) : json(nullptr);
  json fill{{"applies", r.square_fill.applies}, {"holds", r.square_fill.holds}};
  return json{{"n", r.n},
              {"k", r.k},
              {"v", r.v},
              {"degenerate", r.degenerate},
              {"sequence", r.sequence.dims},
              {"r", r.sequence.regularity},
              {"fills", r.sequence.fills},
              {"square_fill", fill},
              {"regularity_bound", reg},
              {"fourier_cover", fourier}};
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace consta::io
