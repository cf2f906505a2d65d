#include "extlab/json_io.hpp"

#include <sstream>

namespace extlab {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

int positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 1)
    throw std::invalid_argument(std::string(what) + " must be a positive integer");
  return j.get<int>();
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

}  // namespace

Json to_json(const LatticePoint& p) { return Json(p.coords()); }

Json to_json(const Domain& d) {
  Json arr = Json::array();
  for (const auto& p : d) arr.push_back(to_json(p));
  return arr;
}

Domain domain_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("a domain is a nonempty array of integer arrays");
  std::vector<LatticePoint> pts;
  std::size_t dim = 0;
  for (const auto& p : j) {
    if (!p.is_array() || p.empty()) throw std::invalid_argument("a lattice point is a nonempty integer array");
    std::vector<Coord> c;
    for (const auto& x : p) {
      if (!x.is_number_integer()) throw std::invalid_argument("lattice coordinates must be integers");
      c.push_back(x.get<Coord>());
    }
    if (dim == 0) dim = c.size();
    pts.emplace_back(std::move(c));
  }
  return Domain(dim, std::move(pts));
}

std::vector<Domain> schedule_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("a window schedule is a nonempty array of domains");
  std::vector<Domain> out;
  for (const auto& d : j) out.push_back(domain_from_json(d));
  return out;
}

PeriodVector periods_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("periods must be an integer array");
  std::vector<Coord> p;
  for (const auto& x : j) p.push_back(positive_int(x, "a period"));
  return PeriodVector(std::move(p));
}

std::string symbols_key(const Symbols& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

Symbols symbols_from_key(const std::string& key, std::size_t length, int alphabet) {
  Symbols s;
  std::stringstream ss(key);
  std::string item;
  if (!key.empty())
    while (std::getline(ss, item, ',')) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed word '" + key + "'");
      }
      if (used != item.size() || v < 0 || v >= alphabet) throw std::invalid_argument("malformed word '" + key + "'");
      s.push_back(v);
    }
  if (s.size() != length) throw std::invalid_argument("word '" + key + "' has the wrong length");
  return s;
}

Json to_json(const SignedMeasure& mu) {
  Json masses = Json::object();
  for (std::size_t i = 0; i < mu.word_count(); ++i)
    if (sgn(mu.mass(i)) != 0) masses[symbols_key(mu.word(i))] = to_string(mu.mass(i));
  return Json{{"dim", mu.domain().dim()}, {"alphabet", mu.alphabet()}, {"domain", to_json(mu.domain())}, {"masses", masses}};
}

SignedMeasure signed_measure_from_json(const Json& j) {
  const int dim = positive_int(field(j, "dim"), "dim");
  const int a = positive_int(field(j, "alphabet"), "alphabet");
  Domain d = domain_from_json(field(j, "domain"));
  if (static_cast<int>(d.dim()) != dim) throw std::invalid_argument("domain points do not have dimension dim");
  const Json& masses = field(j, "masses");
  if (!masses.is_object()) throw std::invalid_argument("masses must be an object");
  std::vector<Rational> m(checked_word_count(d.size(), a));
  for (const auto& [key, value] : masses.items()) {
    Rational q;
    if (value.is_string())
      q = parse_rational(value.get<std::string>());
    else if (value.is_number_integer())
      q = BigInt(std::to_string(value.get<long long>()));
    else
      throw std::invalid_argument("mass of '" + key + "' must be a \"p/q\" string");
    m[word_index(symbols_from_key(key, d.size(), a), a)] = q;
  }
  return SignedMeasure(std::move(d), a, std::move(m));
}

Measure measure_from_json(const Json& j) {
  SignedMeasure s = signed_measure_from_json(j);
  return Measure(s.domain(), s.alphabet(), s.masses());
}

Json to_json(const WordSet& w) {
  Json words = Json::array();
  for (const auto& s : w.words) words.push_back(symbols_key(s));
  return Json{{"dim", w.domain.dim()}, {"alphabet", w.alphabet}, {"domain", to_json(w.domain)}, {"words", words}};
}

WordSet word_set_from_json(const Json& j) {
  const int dim = positive_int(field(j, "dim"), "dim");
  const int a = positive_int(field(j, "alphabet"), "alphabet");
  Domain d = domain_from_json(field(j, "domain"));
  if (static_cast<int>(d.dim()) != dim) throw std::invalid_argument("domain points do not have dimension dim");
  const Json& words = field(j, "words");
  if (!words.is_array()) throw std::invalid_argument("words must be an array of strings");
  std::vector<Symbols> w;
  for (const auto& s : words) {
    if (!s.is_string()) throw std::invalid_argument("words must be an array of strings");
    w.push_back(symbols_from_key(s.get<std::string>(), d.size(), a));
  }
  return WordSet(std::move(d), a, std::move(w));
}

Json to_json(const TorusMeasure& nu) {
  Json masses = Json::object();
  for (const auto& [cfg, q] : nu.masses) masses[symbols_key(cfg)] = to_string(q);
  return Json{{"periods", nu.module.periods().periods()},
              {"alphabet", nu.alphabet},
              {"cells", to_json(nu.module.cells())},
              {"masses", masses}};
}

Json to_json(const RefutationReport& r) {
  Json j{{"verdict", r.verdict == RefutationReport::Verdict::Refuted ? "refuted" : "unknown"},
         {"methods", r.methods},
         {"seed", r.seed}};
  j["window"] = r.window ? to_json(*r.window) : Json(nullptr);
  j["system_fingerprint"] = r.system_fingerprint ? Json(hex(*r.system_fingerprint)) : Json(nullptr);
  if (r.empty_window) j["empty_window"] = to_json(*r.empty_window);
  if (!r.chain.empty()) {
    Json chain = Json::array();
    for (const auto& p : r.chain) chain.push_back(to_json(p));
    j["entropy_chain"] = chain;
  }
  j["largest_window_tried"] = r.largest_window_tried ? to_json(*r.largest_window_tried) : Json(nullptr);
  if (!r.reason.empty()) j["reason"] = r.reason;
  return j;
}

Json to_json(const CharacterTable& t) {
  Json coeffs = Json::object();
  for (std::size_t i = 0; i < t.coefficients.size(); ++i) {
    const auto& z = t.coefficients[i];
    if (std::abs(z) < 1e-12) continue;
    coeffs[character_key(t.character(i))] = Json::array({z.real(), z.imag()});
  }
  return Json{{"window", to_json(t.window)}, {"alphabet", t.alphabet}, {"approximate", true}, {"coefficients", coeffs}};
}

}  // namespace extlab
