#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "liegc/admissible.hpp"
#include "liegc/json_io.hpp"
#include "liegc/leftinv.hpp"

namespace liegc::cli {

namespace {

using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitInconclusive = 3;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return json::parse(in);
}

struct VerifyData {
  RealForm form;
  Subalgebra k;
  WeylConnection D;
  std::string connection;
  Kind kind;
  SMatrix epsilon;
  bool has_params = false;
  EpsilonParams params;
};

VerifyData load_triple(const json& j) {
  TripleSpec spec = triple_from_json(j);
  RootSystem rs = RootSystem::build(spec.vogan.type);
  WeylAlgebra w = WeylAlgebra::build(rs);
  RealForm form = RealForm::build(w, spec.vogan);
  FieldSpecPtr field = w.field();

  SMatrix h_k;
  if (spec.h_k.is_string() && spec.h_k.get<std::string>() == "full")
    h_k = SMatrix::identity(rs.rank());
  else
    h_k = matrix_from_json(spec.h_k, field);
  Subalgebra k = regular_subalgebra(form, h_k, spec.R0);

  VerifyData data{std::move(form), std::move(k), {}, spec.connection, spec.kind, {}, false, {}};
  if (spec.connection == "D0") data.D = d0_weyl(data.form);
  else if (spec.connection == "Dc") data.D = dc_weyl(data.form);
  else throw std::runtime_error("unknown connection: " + spec.connection);

  EpsilonParams p;
  const json& pj = spec.params;
  if (pj.contains("epsilon0")) p.epsilon0 = matrix_from_json(pj.at("epsilon0"), field);
  else p.epsilon0 = SMatrix(data.k.h_k.cols(), data.k.h_k.cols());
  auto read_map = [&](const char* name, std::map<int, Scalar>& dst) {
    if (!pj.contains(name)) return;
    for (auto& [key, val] : pj.at(name).items())
      dst[std::stoi(key)] = Scalar::parse(val.get<std::string>(), field);
  };
  read_map("mu", p.mu);
  read_map("nu", p.nu);
  if (pj.contains("nu_from_heights") && pj.at("nu_from_heights").get<bool>())
    p.nu = nu_from_heights(data.form, data.k.symmetric_part);
  data.params = std::move(p);
  data.has_params = true;
  data.epsilon = build_epsilon(data.form, data.k, data.params, /*bypass_validation=*/true);
  return data;
}

void emit(std::ostream& out, const json& j, const std::string& format) {
  if (format == "json") out << j.dump(2) << "\n";
  else out << j.dump() << "\n";
}

int cmd_algebra(const std::string& type, const std::string& format, std::ostream& out,
                std::ostream& err) {
  try {
    RootSystem rs = RootSystem::build(CartanType::parse(type));
    WeylAlgebra w = WeylAlgebra::build(rs);
    if (format == "text") {
      out << "type " << rs.type().str() << ": rank " << rs.rank() << ", " << rs.num_roots()
          << " roots, dim " << w.dim() << "\n";
      out << "radicands:";
      for (auto r : w.field()->radicands()) out << " " << r;
      out << "\n";
      return kExitPass;
    }
    emit(out, algebra_dump(w), format);
    return kExitPass;
  } catch (const UnknownType& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_verify(const std::string& triple_path, const std::string& format, std::ostream& out,
               std::ostream& err) {
  json j;
  try {
    j = load_json(triple_path);
  } catch (const json::parse_error& e) {
    err << "error: parse failure at byte " << e.byte << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    VerifyData data = load_triple(j);
    AdmissibleTriple t{&data.form, data.k, data.D, data.epsilon, data.kind};
    Certificate cert = check_admissible(t);
    if (data.connection == "D0" && data.kind == Kind::symmetric) {
      Certificate applic = check_mainapplic(data.form, data.k, data.params);
      cert.hypothesis_failed = applic.hypothesis_failed;
      for (auto& c : applic.clauses) cert.clauses.push_back(c);
    }
    emit(out, to_json(cert), format);
    switch (cert.verdict()) {
      case Verdict::pass: return kExitPass;
      case Verdict::fail: return kExitFail;
      case Verdict::inconclusive: return kExitInconclusive;
    }
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

int cmd_search(const std::string& vogan_path, bool sigma_positive_only, std::uint64_t budget,
               std::uint64_t seed, std::size_t max_results, const std::string& format,
               std::ostream& out, std::ostream& err) {
  json vj;
  try {
    vj = load_json(vogan_path);
  } catch (const json::parse_error& e) {
    err << "error: parse failure at byte " << e.byte << ": " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  try {
    VoganDiagram vd = vogan_from_json(vj);
    RootSystem rs = RootSystem::build(vd.type);
    WeylAlgebra w = WeylAlgebra::build(rs);
    RealForm form = RealForm::build(w, vd);
    SMatrix h_full = SMatrix::identity(rs.rank());

    EnumerateOptions opts;
    opts.sigma_positive_only = sigma_positive_only;
    opts.budget = budget;
    EnumerateOutcome outcome =
        enumerate_sigma_parabolic_partial(rs, form.sigma(), max_results, opts);

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(-3, 3);
    json verified = json::array();
    for (const RootSubset& r0 : outcome.subsets) {
      Subalgebra k;
      try {
        k = regular_subalgebra(form, h_full, r0.members);
      } catch (const std::exception&) {
        continue;
      }
      auto cls = classify_subset(r0, form.sigma());

      std::vector<EpsilonParams> templates;
      if (cls.sigma_positive) {
        if (form.inner()) {
          EpsilonParams p;
          p.epsilon0 = SMatrix(rs.rank(), rs.rank());
          for (int d = 0; d < rs.rank(); ++d) p.epsilon0.at(d, d) = Scalar::i();
          templates.push_back(p);
        } else {
          OuterEpsilon0 oe = outer_epsilon0(form, k);
          if (oe.ok) {
            EpsilonParams p;
            p.epsilon0 = oe.epsilon0;
            p.nu = nu_from_heights(form, k.symmetric_part);
            templates.push_back(p);
          }
        }
      } else {
        EpsilonParams p;
        p.epsilon0 = SMatrix(rs.rank(), rs.rank());
        for (int d = 0; d < rs.rank(); ++d) p.epsilon0.at(d, d) = Scalar::i();
        p.nu = nu_from_heights(form, k.symmetric_part);
        templates.push_back(p);
      }
      if (seed != 0 && !templates.empty()) {
        EpsilonParams p = templates.front();
        for (int g : r0.members) p.mu[g] = Scalar(draw(rng));
        templates.push_back(p);
      }
      for (std::size_t ti = 0; ti < templates.size(); ++ti) {
        SMatrix eps;
        try {
          eps = build_epsilon(form, k, templates[ti]);
        } catch (const std::exception&) {
          continue;
        }
        AdmissibleTriple t{&form, k, d0_weyl(form), eps, Kind::symmetric};
        Certificate cert = check_admissible(t);
        if (!cert.passed()) continue;
        TripleSpec ts;
        ts.vogan = vd;
        ts.h_k = "full";
        ts.R0 = r0.members;
        ts.connection = "D0";
        ts.kind = Kind::symmetric;
        json params{{"epsilon0", to_json(templates[ti].epsilon0)}};
        json mu = json::object(), nu = json::object();
        for (auto& [g, v] : templates[ti].mu) mu[std::to_string(g)] = v.str();
        for (auto& [g, v] : templates[ti].nu) nu[std::to_string(g)] = v.str();
        params["mu"] = mu;
        params["nu"] = nu;
        ts.params = params;
        verified.push_back(json{{"triple", to_json(ts)}, {"template", ti}});
      }
    }
    json result{{"type", to_json(vd.type)},
                {"complete", outcome.complete},
                {"subsets_scanned", outcome.subsets.size()},
                {"verified", verified}};
    emit(out, result, format);
    return kExitPass;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generalized-complex toolkit for semisimple Lie algebras"};
  app.require_subcommand(1);

  std::string type, format = "json", triple_path, vogan_path;
  std::uint64_t budget = std::uint64_t{1} << 20;
  std::uint64_t seed = 0;
  std::size_t max_results = 10000;
  bool sigma_positive_only = false;

  CLI::App* algebra = app.add_subcommand("algebra", "build a Weyl-basis algebra and dump it");
  algebra->add_option("--type", type, "Cartan type, e.g. A2 or A1+A1")->required();
  algebra->add_option("--format", format, "json or text");

  CLI::App* verify = app.add_subcommand("verify", "verify a triple description");
  verify->add_option("--triple", triple_path, "triple JSON file")->required();
  verify->add_option("--format", format, "json or text");

  CLI::App* search = app.add_subcommand("search", "enumerate verified triples for a Vogan diagram");
  search->add_option("--vogan", vogan_path, "Vogan diagram JSON file")->required();
  search->add_option("--budget", budget, "subset-scan budget");
  search->add_option("--seed", seed, "extra randomized parameter template (0 = off)");
  search->add_option("--max", max_results, "cap on enumerated subsets");
  search->add_flag("--sigma-positive", sigma_positive_only, "restrict to sigma-positive systems");
  search->add_option("--format", format, "json or text");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  if (algebra->parsed()) return cmd_algebra(type, format, out, err);
  if (verify->parsed()) return cmd_verify(triple_path, format, out, err);
  if (search->parsed())
    return cmd_search(vogan_path, sigma_positive_only, budget, seed, max_results, format, out, err);
  err << "error: no subcommand\n";
  return kExitBadInput;
}

}  // namespace liegc::cli
