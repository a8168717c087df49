#include "gfan3/poly.hpp"

#include <json.hpp>

namespace gfan3 {

std::vector<Exponent> monomial_basis(int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  out.reserve((d + 1) * (d + 2) / 2);
  for (int e3 = 0; e3 <= d; ++e3)
    for (int e2 = 0; e2 + e3 <= d; ++e2)
      out.push_back({d - e2 - e3, e2, e3});
  return out;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p;
  p.add_term(e, c);
  return p;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

bool Poly::homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.degree();
  for (const auto& [e, c] : terms_)
    if (e.degree() != d) return false;
  return true;
}

int Poly::degree() const {
  if (terms_.empty())
    throw std::logic_error("degree of the zero polynomial");
  return terms_.begin()->first.degree();
}

Poly Poly::operator+(const Poly& o) const {
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  Poly out;
  for (const auto& [e, c] : terms_)
    for (const auto& [f, d] : o.terms_)
      out.add_term({e.e1 + f.e1, e.e2 + f.e2, e.e3 + f.e3}, c * d);
  return out;
}

Poly Poly::operator*(const Rational& c) const {
  Poly out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

LinearChange LinearChange::identity() {
  LinearChange g;
  g.m = RationalMatrix::identity(3);
  return g;
}

Poly apply_linear_change(const LinearChange& g, const Poly& f) {
  Poly images[3];
  for (int v = 0; v < 3; ++v) {
    images[v].add_term({1, 0, 0}, g.m.at(v, 0));
    images[v].add_term({0, 1, 0}, g.m.at(v, 1));
    images[v].add_term({0, 0, 1}, g.m.at(v, 2));
  }
  Poly out;
  for (const auto& [e, c] : f.terms()) {
    Poly term = Poly::monomial({0, 0, 0}, c);
    for (int k = 0; k < e.e1; ++k) term = term * images[0];
    for (int k = 0; k < e.e2; ++k) term = term * images[1];
    for (int k = 0; k < e.e3; ++k) term = term * images[2];
    out = out + term;
  }
  return out;
}

IdealSpec apply_linear_change(const LinearChange& g, const IdealSpec& I) {
  IdealSpec out;
  out.generators.reserve(I.generators.size());
  for (const Poly& f : I.generators)
    out.generators.push_back(apply_linear_change(g, f));
  return out;
}

DegreeMatrix degree_matrix(const IdealSpec& I, int e) {
  DegreeMatrix dm;
  dm.degree = e;
  dm.columns = monomial_basis(e);
  std::map<Exponent, std::size_t, MonomialOrder> colIndex;
  for (std::size_t j = 0; j < dm.columns.size(); ++j)
    colIndex.emplace(dm.columns[j], j);

  std::vector<std::vector<Rational>> rows;
  for (std::size_t gi = 0; gi < I.generators.size(); ++gi) {
    const Poly& f = I.generators[gi];
    if (f.zero()) continue;
    const int df = f.degree();
    if (df > e) continue;
    for (const Exponent& mult : monomial_basis(e - df)) {
      Poly prod = f * Poly::monomial(mult);
      std::vector<Rational> row(dm.columns.size());
      for (const auto& [exp, c] : prod.terms()) row[colIndex.at(exp)] = c;
      rows.push_back(std::move(row));
      dm.rowLabels.emplace_back(gi, mult);
    }
  }
  dm.A = RationalMatrix(rows.size(), dm.columns.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < dm.columns.size(); ++j)
      dm.A.at(i, j) = std::move(rows[i][j]);
  return dm;
}

namespace {

Rational rational_from_json(const nlohmann::json& num,
                            const nlohmann::json& den) {
  if (!num.is_number_integer() || !den.is_number_integer())
    throw ParseError("coefficient entries must be integers");
  long long n = num.get<long long>();
  long long d = den.get<long long>();
  if (d == 0) throw ParseError("coefficient denominator is zero");
  Rational r(static_cast<long>(n), static_cast<long>(d));
  r.canonicalize();
  return r;
}

}  // namespace

IdealSpec parse_ideal_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("generators") ||
      !doc["generators"].is_array())
    throw ParseError("expected an object with a \"generators\" array");
  IdealSpec I;
  for (const auto& gen : doc["generators"]) {
    if (!gen.is_array()) throw ParseError("each generator must be a term list");
    Poly p;
    for (const auto& term : gen) {
      if (!term.is_array() || term.size() != 3 || !term[2].is_array() ||
          term[2].size() != 3)
        throw ParseError("each term must be [num, den, [e1,e2,e3]]");
      Exponent e{term[2][0].get<int>(), term[2][1].get<int>(),
                 term[2][2].get<int>()};
      if (e.e1 < 0 || e.e2 < 0 || e.e3 < 0)
        throw ParseError("negative exponent");
      p.add_term(e, rational_from_json(term[0], term[1]));
    }
    if (p.zero()) throw ParseError("zero generator");
    if (!p.homogeneous()) throw ParseError("non-homogeneous generator");
    I.generators.push_back(std::move(p));
  }
  if (I.generators.empty()) throw ParseError("ideal has no generators");
  return I;
}

std::string ideal_to_json(const IdealSpec& I) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Poly& p : I.generators) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, c] : p.terms()) {
      nlohmann::json num_den_exp = nlohmann::json::array();
      num_den_exp.push_back(std::stoll(c.get_num().get_str()));
      num_den_exp.push_back(std::stoll(c.get_den().get_str()));
      num_den_exp.push_back({e.e1, e.e2, e.e3});
      terms.push_back(num_den_exp);
    }
    gens.push_back(terms);
  }
  return nlohmann::json{{"generators", gens}}.dump(2);
}

}  // namespace gfan3
