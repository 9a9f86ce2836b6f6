#include "quadforms/io.hpp"

#include <cstdint>
#include <cstdio>

namespace quadforms {

json to_json(const Rational& q) { return q.str(); }

json to_json(const RationalVector& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(q.str());
  return out;
}

json to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& q : m.row(i)) row.push_back(q.str());
    out.push_back(std::move(row));
  }
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational string or an integer, got " + j.dump());
}

RationalMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ParseError("matrix row must be an array");
    std::vector<Rational> values;
    for (const auto& v : row) values.push_back(rational_from_json(v));
    if (!rows.empty() && values.size() != rows.front().size()) {
      throw ParseError("matrix rows have different lengths");
    }
    rows.push_back(std::move(values));
  }
  return RationalMatrix::from_rows(rows);
}

json instance_to_json(const LinearFormSystem& sys) {
  json j;
  j["schema"] = kSchemaVersion;
  j["r"] = sys.r;
  j["m"] = sys.m;
  j["A"] = to_json(sys.A);
  return j;
}

namespace {

std::size_t size_field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const json& v = j.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

ParsedInstance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance must be a JSON object");
  if (j.contains("schema") && j.at("schema") != kSchemaVersion) {
    throw ParseError("unsupported schema " + j.at("schema").dump());
  }
  if (j.contains("forms")) {
    const RationalMatrix forms = matrix_from_json(j.at("forms"));
    if (forms.rows() == 0 || forms.cols() == 0) throw ParseError("\"forms\" must be non-empty");
    try {
      NormalForm nf = normalize(forms);
      LinearFormSystem sys = nf.system;
      return {std::move(sys), std::move(nf)};
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  const std::size_t r = size_field(j, "r");
  const std::size_t m = size_field(j, "m");
  if (!j.contains("A")) throw ParseError("missing field \"A\"");
  RationalMatrix a = matrix_from_json(j.at("A"));
  if (a.rows() == 0 && m > 0) throw ParseError("\"A\" has no rows but m = " + std::to_string(m));
  if (a.rows() == 0) a = RationalMatrix(0, r, Rational(0));
  try {
    return {LinearFormSystem(r, m, std::move(a)), std::nullopt};
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

ParsedInstance parse_instance(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return instance_from_json(j);
}

json report_to_json(const IndependenceReport& report) {
  json j;
  j["verdict"] = std::string(to_string(report.verdict));
  j["rank"] = report.rank;
  if (report.witness) j["witness"] = to_json(*report.witness);
  return j;
}

json classification_to_json(const Cor22Classification& c) {
  json j;
  j["kind"] = std::string(to_string(c.kind));
  j["verdict"] = std::string(to_string(c.verdict));
  if (c.proportional) j["proportional"] = {c.proportional->first, c.proportional->second};
  if (c.support) j["support"] = {c.support->first, c.support->second};
  return j;
}

json normal_form_to_json(const NormalForm& nf) {
  json j;
  j["basis_rows"] = nf.basis_rows;
  j["dependent_rows"] = nf.dependent_rows;
  j["change_of_basis"] = to_json(nf.change_of_basis);
  return j;
}

std::string summand_text(const IdentityInstance& inst, const Summand& s) {
  const std::size_t n = inst.base_squares.size() / 2;
  std::string out = "(" + s.coefficient.str() + ")";
  for (std::size_t f : s.factors) {
    if (f < n) {
      out += "*z" + std::to_string(f + 1) + "^2";
      continue;
    }
    const std::string& letter = inst.letters[f - n];
    out += "*(";
    for (std::size_t j = 1; j <= n; ++j) {
      if (j > 1) out += " + ";
      out += letter + std::to_string(j) + "*z" + std::to_string(j);
    }
    out += ")^2";
  }
  return out;
}

json identity_to_json(const IdentityInstance& inst, bool with_summands) {
  json j;
  j["name"] = inst.name;
  j["variables"] = std::vector<std::string>(inst.vars.names().begin(), inst.vars.names().end());
  j["letters"] = inst.letters;
  j["summand_count"] = inst.summands.size();
  j["precancellation_terms"] = precancellation_term_count(inst);
  j["lhs_terms"] = inst.lhs.term_count();
  if (with_summands) {
    std::string lhs;
    for (const auto& s : inst.summands) lhs += (lhs.empty() ? "" : " + ") + summand_text(inst, s);
    j["lhs"] = lhs;
  }
  j["rhs"] = inst.rhs.str();
  if (with_summands) {
    json list = json::array();
    for (const auto& s : inst.summands) {
      json item;
      item["coefficient"] = s.coefficient.str();
      item["factors"] = s.factors;
      list.push_back(std::move(item));
    }
    j["summands"] = std::move(list);
  }
  return j;
}

json traced_system_to_json(const TracedSystem& sys) {
  const VarSet& ring = identity_ring();
  json j;
  j["case"] = std::string(to_string(sys.id));
  json assumptions = json::object();
  for (const auto& [k, v] : sys.assumptions) assumptions[k] = v.str();
  j["assumptions"] = std::move(assumptions);
  j["unknowns"] = sys.unknowns;
  json monomials = json::array();
  for (const auto& m : sys.monomials) {
    monomials.push_back(Polynomial::term(ring, m, Rational(1)).str());
  }
  j["monomials"] = std::move(monomials);
  json rows = json::array();
  for (std::size_t i = 0; i < sys.matrix.rows(); ++i) {
    json row = json::array();
    for (const auto& p : sys.matrix.row(i)) row.push_back(p.str());
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  if (sys.rhs_unknown) j["rhs_unknown"] = *sys.rhs_unknown;
  if (sys.rhs) {
    json rhs = json::array();
    for (const auto& p : *sys.rhs) rhs.push_back(p.str());
    j["rhs"] = std::move(rhs);
  }
  j["leaked_unknowns"] = sys.leaked_unknowns;
  return j;
}

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string instance_digest(const LinearFormSystem& sys) {
  return fnv1a_hex(instance_to_json(sys).dump());
}

}  // namespace quadforms
