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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "io.hpp"
#include "u2split/forms.hpp"

namespace u2split::cli {

namespace {

using io::json;

struct Args {
  std::string file;
  std::string format = "json";
  std::string mode;
  std::uint64_t budget = TransportOptions{}.budget;
  std::uint64_t seed = TransportOptions{}.seed;
  bool verify_only = false;
  // oracle
  std::string group;
  std::size_t dim = 2;
  std::uint64_t prime = 3;
  std::string form = "standard";
  int depth = 0;
  std::string theorem;
  std::uint64_t max_group = oracle::Limits{}.max_group;
  std::uint64_t max_params = oracle::Limits{}.max_params;
  // model
  int eps = 1;
  int k = 1;
  std::string scale = "1";
  std::string v, b, c;
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
}

json parse_inline(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

void emit(std::ostream& out, const json& j) { out << io::dump(j); }

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return kParse;
    case ErrorCode::NotSplittable: return kNo;
    case ErrorCode::TransportBudgetExceeded: return kTransport;
    case ErrorCode::BudgetExceeded: return kBudget;
    default: return kInvalid;
  }
}

int cmd_invariants(const Args& a, std::ostream& out) {
  const io::Problem p = io::parse_problem(read_json_file(a.file));
  WallData w;
  if (p.eps && p.gram) {
    const Isopair pair = p.isopair();
    require_valid(pair);
    w = wall_data(pair);
  } else {
    // gl mode: similarity data only.
    if (!is_invertible(p.u)) fail(ErrorCode::NotInvertible, "u is singular");
    w.field = p.field;
    w.eps = 0;
    w.jordan = jordan_numbers(p.u);
  }
  if (a.format == "text") out << io::wall_text(w);
  else emit(out, io::wall_json(w));
  return kOk;
}

Verdict decide(const io::Problem& p, const std::string& mode) {
  if (mode == "gl") {
    if (!is_invertible(p.u)) fail(ErrorCode::NotInvertible, "u is singular");
    return gl_decide(p.u);
  }
  const Isopair pair = p.isopair();
  require_valid(pair);
  if (mode == "sp") {
    if (pair.eps() != -1) fail(ErrorCode::EpsMismatch, "sp mode needs eps = -1");
    return sp_decide(pair);
  }
  if (pair.eps() != 1) fail(ErrorCode::EpsMismatch, "orth mode needs eps = 1");
  return orth_decide(pair);
}

int cmd_decide(const Args& a, std::ostream& out) {
  const io::Problem p = io::parse_problem(read_json_file(a.file));
  const Verdict v = decide(p, a.mode);
  if (a.format == "text") out << io::verdict_text(v);
  else emit(out, io::verdict_json(v));
  return v.splittable ? kOk : kNo;
}

json verification(const io::Problem& p, const U2Factorization& f, bool& ok) {
  VerificationReport r;
  if (p.eps && p.gram) {
    const Isopair pair = p.isopair();
    r = verify_factorization(p.u, f, &pair);
  } else {
    r = verify_factorization(p.u, f);
  }
  ok = r.ok();
  return io::report_json(r);
}

int verify_only(const io::Problem& p, std::ostream& out) {
  if (!p.factors) fail(ErrorCode::ParseError, "no \"factors\" to verify");
  bool ok = false;
  json diag = verification(p, *p.factors, ok);
  emit(out, json{{"schema", io::kSchema}, {"verified", ok}, {"diagnostics", std::move(diag)}});
  return ok ? kOk : kInvalid;
}

int cmd_factor(const Args& a, std::ostream& out) {
  const io::Problem p = io::parse_problem(read_json_file(a.file));
  if (a.verify_only) return verify_only(p, out);
  const TransportOptions opt{a.budget, a.seed};
  const std::string dmode = a.mode == "gl" ? "gl" : (a.mode == "orth2" ? "orth" : "sp");
  U2Factorization f;
  try {
    if (a.mode != "sp3") {
      const Verdict v = decide(p, dmode);
      if (!v.splittable) {
        json j = io::verdict_json(v);
        j["mode"] = a.mode;
        emit(out, j);
        return kNo;
      }
    }
    if (a.mode == "gl") {
      f = gl_factor(p.u);
    } else {
      const Isopair pair = p.isopair();
      require_valid(pair);
      if (a.mode == "sp2") f = sp_factor2(pair, opt);
      else if (a.mode == "sp3") {
        if (pair.eps() != -1) fail(ErrorCode::EpsMismatch, "sp3 mode needs eps = -1");
        f = sp_factor3(pair, opt);
      } else f = orth_factor2(pair, opt);
    }
  } catch (const TransportFailure& e) {
    json cert{{"schema", io::kSchema},
              {"error", "TransportBudgetExceeded"},
              {"message", e.what()},
              {"mode", a.mode},
              {"candidates_tried", e.candidates_tried()},
              {"model", io::isopair_json(e.model())},
              {"model_factors", io::factors_json(e.model_factors())},
              {"invariants_match", isometric(e.model(), p.isopair())}};
    emit(out, cert);
    return kTransport;
  }
  bool ok = false;
  json diag = verification(p, f, ok);
  if (!ok) fail(ErrorCode::VerificationFailed, "factorization did not re-verify");
  json j{{"schema", io::kSchema},
         {"mode", a.mode},
         {"field", io::field_json(p.field)},
         {"u", io::matrix_json(p.u)},
         {"factors", io::factors_json(f)},
         {"verified", ok},
         {"diagnostics", std::move(diag)}};
  if (a.mode != "gl") {
    j["eps"] = *p.eps;
    j["gram"] = io::matrix_json(*p.gram);
  }
  emit(out, j);
  return kOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  const io::Problem p = io::parse_problem(read_json_file(a.file));
  std::vector<std::string> violations;
  if (p.eps && p.gram) violations = validate_isopair(p.isopair());
  else if (!is_invertible(p.u)) violations.push_back("u is singular");
  json j{{"schema", io::kSchema}, {"valid", violations.empty()}, {"violations", violations}};
  bool ok = violations.empty();
  if (p.factors && ok) {
    bool fok = false;
    j["diagnostics"] = verification(p, *p.factors, fok);
    j["verified"] = fok;
    ok = fok;
  }
  emit(out, j);
  return ok ? kOk : kInvalid;
}

oracle::GroupSpec group_spec(const Args& a) {
  const Field f = Field::prime(a.prime);
  const std::size_t n = a.dim;
  if (a.group == "gl") return oracle::GroupSpec::gl(f, n);
  if (a.group == "sp") {
    if (n % 2) fail(ErrorCode::BadParameters, "symplectic groups need even dimension");
    Matrix g(f, n, n);
    for (std::size_t i = 0; i < n / 2; ++i) {
      g(i, n / 2 + i) = f.one();
      g(n / 2 + i, i) = -f.one();
    }
    return oracle::GroupSpec::isometry(-1, g);
  }
  // orth: --form standard (identity), hyperbolic, diag:a,b,... or a JSON gram.
  Matrix g(f, n, n);
  if (a.form == "standard") {
    g = Matrix::identity(f, n);
  } else if (a.form == "hyperbolic") {
    if (n % 2) fail(ErrorCode::BadParameters, "hyperbolic forms need even dimension");
    g = hyperbolic_gram(f, n / 2, 1);
  } else if (a.form.rfind("diag:", 0) == 0) {
    std::vector<Scalar> d;
    std::stringstream ss(a.form.substr(5));
    for (std::string tok; std::getline(ss, tok, ',');) d.push_back(f.parse(tok));
    if (d.size() != n) fail(ErrorCode::DimensionMismatch, "diag entries must match --dim");
    g = Matrix::diag(f, d);
  } else {
    g = io::parse_matrix(f, parse_inline(a.form));
    if (g.rows() != n) fail(ErrorCode::DimensionMismatch, "gram must match --dim");
  }
  return oracle::GroupSpec::isometry(1, g);
}

int cmd_oracle(const Args& a, std::ostream& out) {
  const oracle::GroupSpec g = group_spec(a);
  oracle::Theorem t;
  if (!a.theorem.empty()) t = oracle::parse_theorem(a.theorem);
  else if (a.group == "gl") t = oracle::Theorem::botha;
  else if (a.group == "sp") t = a.depth == 3 ? oracle::Theorem::symplectic3 : oracle::Theorem::symplectic2;
  else t = oracle::Theorem::orthogonal2;
  oracle::Limits lim;
  lim.max_group = a.max_group;
  lim.max_params = a.max_params;
  const oracle::TheoremReport r = oracle::theorem_check(g, t, lim);
  if (a.depth != 0 && a.depth != r.depth)
    fail(ErrorCode::BadParameters, "theorem " + r.theorem + " runs at depth " + std::to_string(r.depth));
  if (a.format == "text") out << io::theorem_text(r);
  else emit(out, io::theorem_json(r, g));
  return r.agree ? kOk : kNo;
}

int emit_model(const Isopair& p, const U2Factorization& f, std::ostream& out) {
  json j = io::isopair_json(p);
  j["factors"] = io::factors_json(f);
  emit(out, j);
  return kOk;
}

int cmd_model(const std::string& kind, const Args& a, std::ostream& out) {
  const Field f = Field::prime(a.prime);
  if (kind == "twisted") {
    const TwistedModel m = twisted_model(f, a.k, f.parse(a.scale));
    return emit_model(m.pair, m.factors, out);
  }
  if (kind == "boxed") {
    const FormKind fk = a.eps == 1 ? FormKind::skewsymmetric : FormKind::symmetric;
    const BilForm b(io::parse_matrix(f, parse_inline(a.b)), fk);
    const BilForm c(io::parse_matrix(f, parse_inline(a.c)), fk);
    const BoxedProduct m = boxed_product(b, c, a.eps);
    return emit_model(m.pair, m.factors, out);
  }
  const Matrix v = io::parse_matrix(f, parse_inline(a.v));
  if (!v.is_square() || !is_invertible(v)) fail(ErrorCode::NotInvertible, "v must be square and invertible");
  emit(out, io::isopair_json(hyperbolic_ext(v, a.eps)));
  return kOk;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("U2SPLIT_SEED")) {
    try {
      return std::stoull(s, nullptr, 0);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "U2SPLIT_SEED is not an integer");
    }
  }
  return TransportOptions{}.seed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Args a;
  CLI::App app{"U2-splitting of isometries over finite fields and Q", "u2split"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", a.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto* inv = app.add_subcommand("invariants", "Jordan numbers and Wall invariants");
  inv->add_option("file", a.file)->required();

  auto* dec = app.add_subcommand("decide", "Decide U2-splittability");
  dec->add_option("file", a.file)->required();
  dec->add_option("--mode", a.mode)->required()->check(CLI::IsMember({"gl", "sp", "orth"}));

  auto* fac = app.add_subcommand("factor", "Construct a verified U2 factorization");
  fac->add_option("file", a.file)->required();
  fac->add_option("--mode", a.mode)->check(CLI::IsMember({"sp2", "sp3", "orth2", "gl"}));
  fac->add_option("--transport-budget", a.budget);
  fac->add_option("--seed", a.seed, "defaults to U2SPLIT_SEED");
  fac->add_flag("--verify-only", a.verify_only, "re-verify the factors stored in the file");

  auto* ver = app.add_subcommand("verify", "Validate a problem file and any stored factors");
  ver->add_option("file", a.file)->required();

  auto* orc = app.add_subcommand("oracle", "Brute-force product sets against the decision procedures");
  orc->add_option("--group", a.group)->required()->check(CLI::IsMember({"gl", "sp", "orth"}));
  orc->add_option("--dim", a.dim);
  orc->add_option("--field", a.prime, "odd prime");
  orc->add_option("--form", a.form, "orth only: standard, hyperbolic, diag:a,b,.. or a JSON gram");
  orc->add_option("--depth", a.depth)->check(CLI::IsMember({2, 3}));
  orc->add_option("--theorem", a.theorem);
  orc->add_option("--max-group", a.max_group);
  orc->add_option("--max-params", a.max_params);

  auto* mod = app.add_subcommand("model", "Emit fixture isopairs");
  mod->require_subcommand(1);
  mod->add_option("--field", a.prime);
  mod->add_option("--eps", a.eps)->check(CLI::IsMember({1, -1}));
  auto* m_hyp = mod->add_subcommand("hyperbolic-ext", "H_eps(v)");
  m_hyp->add_option("--v", a.v, "JSON matrix")->required();
  auto* m_box = mod->add_subcommand("boxed", "boxed product of two forms");
  m_box->add_option("--b", a.b, "JSON matrix")->required();
  m_box->add_option("--c", a.c, "JSON matrix")->required();
  auto* m_tw = mod->add_subcommand("twisted", "twisted unipotent pair");
  m_tw->add_option("--k", a.k)->check(CLI::PositiveNumber);
  m_tw->add_option("--scale", a.scale);

  try {
    a.seed = default_seed();
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }

  try {
    if (*inv) return cmd_invariants(a, out);
    if (*dec) return cmd_decide(a, out);
    if (*fac) {
      if (a.mode.empty() && !a.verify_only) fail(ErrorCode::ParseError, "--mode is required");
      return cmd_factor(a, out);
    }
    if (*ver) return cmd_verify(a, out);
    if (*orc) return cmd_oracle(a, out);
    if (*m_hyp) return cmd_model("hyperbolic-ext", a, out);
    if (*m_box) return cmd_model("boxed", a, out);
    if (*m_tw) return cmd_model("twisted", a, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}

}  // namespace u2split::cli
