/*
   Copyright 2026 The u2split Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "io.hpp"

#include <algorithm>
#include <sstream>

#include "u2split/forms.hpp"

namespace u2split::io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

std::string join(const std::vector<Scalar>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

void dump_to(const json& j, int indent, std::string& out) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += inner + json(it.key()).dump() + ": ";
      dump_to(it.value(), indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
    return;
  }
  if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const json& e) { return e.is_structured(); });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += inner;
      dump_to(j[i], indent + 2, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
    return;
  }
  out += j.dump();
}

}  // namespace

std::string dump(const json& j) {
  std::string out;
  dump_to(j, 0, out);
  return out + "\n";
}

Field parse_field(const json& j) {
  if (j.is_number_integer()) return Field::prime(j.get<std::uint64_t>());
  if (!j.is_string()) bad("field must be a string or a prime");
  std::string s = j.get<std::string>();
  if (s == "Q") return Field::rationals();
  std::string digits;
  if (s.rfind("F_", 0) == 0) digits = s.substr(2);
  else if (s.rfind("GF(", 0) == 0 && s.back() == ')') digits = s.substr(3, s.size() - 4);
  else if (s.rfind("F", 0) == 0) digits = s.substr(1);
  else digits = s;
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) bad("unknown field '" + s + "'");
  return Field::prime(std::stoull(digits));
}

json field_json(const Field& f) { return f.name(); }

Scalar parse_scalar(const Field& f, const json& j) {
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_string()) return f.parse(j.get<std::string>());
  bad("matrix entries must be integers or strings");
}

json scalar_json(const Scalar& s) {
  if (!s.is_rational()) return s.residue();
  return s.str();
}

Matrix parse_matrix(const Field& f, const json& j) {
  if (!j.is_array()) bad("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = parse_scalar(f, j[i][k]);
  }
  return m;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(scalar_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json poly_json(const Poly& p) {
  json c = json::array();
  for (const Scalar& s : p.coeffs()) c.push_back(scalar_json(s));
  return c;
}

Isopair Problem::isopair() const {
  if (!eps || !gram) bad("this mode needs \"eps\" and \"gram\"");
  return Isopair(*eps, BilForm(*gram, kind_for_eps(*eps)), u);
}

Problem parse_problem(const json& j) {
  if (!j.is_object()) bad("problem file must be a JSON object");
  if (j.contains("schema") && j["schema"] != kSchema) bad("unsupported schema " + j["schema"].dump());
  Problem p;
  p.field = parse_field(member(j, "field"));
  p.u = parse_matrix(p.field, member(j, "u"));
  if (!p.u.is_square() || p.u.rows() == 0) fail(ErrorCode::DimensionMismatch, "u must be square and nonempty");
  if (j.contains("eps")) {
    if (!j["eps"].is_number_integer()) bad("eps must be 1 or -1");
    p.eps = j["eps"].get<int>();
    if (*p.eps != 1 && *p.eps != -1) bad("eps must be 1 or -1");
  }
  if (j.contains("gram")) {
    p.gram = parse_matrix(p.field, j["gram"]);
    if (p.gram->rows() != p.u.rows() || p.gram->cols() != p.u.rows())
      fail(ErrorCode::DimensionMismatch, "gram and u differ in size");
  }
  if (j.contains("factors")) {
    if (!j["factors"].is_array()) bad("factors must be an array");
    U2Factorization f;
    for (const json& m : j["factors"]) {
      f.factors.push_back(parse_matrix(p.field, m));
      if (f.factors.back().rows() != p.u.rows() || !f.factors.back().is_square())
        fail(ErrorCode::DimensionMismatch, "factor and u differ in size");
    }
    p.factors = std::move(f);
  }
  return p;
}

json isopair_json(const Isopair& p) {
  return json{{"schema", kSchema},
              {"field", field_json(p.field())},
              {"eps", p.eps()},
              {"gram", matrix_json(p.gram())},
              {"u", matrix_json(p.u())}};
}

json wall_json(const WallData& w) {
  json out{{"schema", kSchema}, {"field", field_json(w.field)}};
  if (w.eps != 0) out["eps"] = w.eps;
  json jordan = json::array();
  for (const auto& [key, n] : w.jordan)
    jordan.push_back({{"p", poly_json(key.first)}, {"p_text", key.first.str()}, {"r", key.second}, {"n", n}});
  out["jordan"] = std::move(jordan);
  json quad = json::array();
  for (const auto& [key, form] : w.quad) {
    json q{{"eta", key.first}, {"r", key.second}, {"gram", matrix_json(form.gram())}};
    if (w.field.is_prime()) {
      json classes = json::array();
      for (const Scalar& s : square_class_tuple(form)) classes.push_back(scalar_json(s));
      q["square_classes"] = std::move(classes);
    }
    quad.push_back(std::move(q));
  }
  out["quad"] = std::move(quad);
  json herm = json::array();
  for (const auto& [key, h] : w.herm) {
    json gram = json::array();
    for (std::size_t i = 0; i < h.dim(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < h.dim(); ++k) row.push_back(poly_json(h.entry(i, k)));
      gram.push_back(std::move(row));
    }
    herm.push_back({{"p", poly_json(key.first)},
                    {"p_text", key.first.str()},
                    {"r", key.second},
                    {"flavor", flavor_name(h.flavor())},
                    {"gram", std::move(gram)}});
  }
  out["herm"] = std::move(herm);
  return out;
}

json verdict_json(const Verdict& v) {
  json out{{"schema", kSchema}, {"splittable", v.splittable}, {"failed", v.failed}, {"details", v.details}};
  if (v.witness) out["witness"] = factors_json(*v.witness);
  return out;
}

json factors_json(const U2Factorization& f) {
  json out = json::array();
  for (const Matrix& m : f.factors) out.push_back(matrix_json(m));
  return out;
}

json report_json(const VerificationReport& r) {
  return json{{"square_zero", r.square_zero}, {"isometries", r.isometries},   {"product", r.product},
              {"commutation", r.commutation}, {"stabilization", r.stabilization}, {"messages", r.messages}};
}

json theorem_json(const oracle::TheoremReport& r, const oracle::GroupSpec& g) {
  json ce = json::array();
  for (const Matrix& m : r.counterexamples) ce.push_back(matrix_json(m));
  json out{{"schema", kSchema},
           {"group", r.group},
           {"field", field_json(g.field)},
           {"theorem", r.theorem},
           {"depth", r.depth},
           {"group_order", r.group_order},
           {"set_size", r.set_size},
           {"predicate_size", r.predicate_size},
           {"agree", r.agree},
           {"mismatches", r.mismatches},
           {"counterexamples", std::move(ce)}};
  if (g.kind == oracle::GroupSpec::Kind::isometry) out["gram"] = matrix_json(g.gram);
  return out;
}

std::string wall_text(const WallData& w) {
  std::ostringstream os;
  os << "field " << w.field.name() << ", eps " << w.eps << "\n";
  os << "jordan numbers\n";
  for (const auto& [key, n] : w.jordan) os << "  (" << key.first.str() << ")^" << key.second << "  x" << n << "\n";
  if (!w.quad.empty()) os << "quadratic invariants\n";
  for (const auto& [key, form] : w.quad) {
    os << "  eta " << (key.first > 0 ? "+1" : "-1") << ", r " << key.second << ", rank " << form.dim();
    if (w.field.is_prime()) os << "  " << join(square_class_tuple(form));
    os << "\n";
  }
  if (!w.herm.empty()) os << "hermitian invariants\n";
  for (const auto& [key, h] : w.herm)
    os << "  " << key.first.str() << ", r " << key.second << ", " << flavor_name(h.flavor()) << ", rank "
       << herm_rank(h) << (herm_is_hyperbolic(h) ? ", hyperbolic" : "") << "\n";
  return os.str();
}

std::string verdict_text(const Verdict& v) {
  std::ostringstream os;
  os << (v.splittable ? "splittable" : "not splittable") << "\n";
  for (const auto& f : v.failed) os << "  failed " << f << "\n";
  for (const auto& d : v.details) os << "  " << d << "\n";
  return os.str();
}

std::string theorem_text(const oracle::TheoremReport& r) {
  std::ostringstream os;
  os << r.group << "  " << r.theorem << "  depth " << r.depth << "\n"
     << "  group order     " << r.group_order << "\n"
     << "  product set     " << r.set_size << "\n"
     << "  predicate set   " << r.predicate_size << "\n"
     << "  mismatches      " << r.mismatches << "\n"
     << "  " << (r.agree ? "agree" : "DISAGREE") << "\n";
  return os.str();
}

}  // namespace u2split::io
