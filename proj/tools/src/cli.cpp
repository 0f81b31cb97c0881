// Copyright 2026 The tropfan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tropfan/cli/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "tropfan/cli/io.hpp"
#include "tropfan/cli/render.hpp"
#include "tropfan/criteria.hpp"

namespace tropfan::cli {

namespace {

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(thread_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

std::string cone_label(const Fan& fan, ConeId c) {
  std::string s = "{";
  for (std::size_t i = 0; i < fan.cone(c).size(); ++i)
    s += (i ? "," : "") + std::to_string(fan.cone(c)[i]);
  return s + "}";
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

Coefficients parse_coeff(const std::string& s) {
  return s == "Q" ? Coefficients::kQ : Coefficients::kZ;
}

Weights fan_weights(const Fan& fan) {
  auto w = fan.weights();
  return w ? *w : unit_weights(fan);
}

std::string combination(const Fan& fan, int degree, const RatVector& coeffs) {
  std::string s;
  const auto& gens = fan.cones_of_dim(degree);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string c = coeffs[i].get_str();
    if (!s.empty()) {
      if (c[0] == '-') {
        s += " - ";
        c = c.substr(1);
      } else {
        s += " + ";
      }
    }
    if (c == "1")
      c.clear();
    else if (c == "-1")
      c = "-";
    else
      c += " ";
    s += c + "x" + cone_label(fan, gens[i]);
  }
  return s.empty() ? "0" : s;
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

int cmd_diagnostics(Context& ctx, const std::string& path, bool geometric, bool as_json) {
  FanFile file = parse_fan(read_json_file(path));
  Diagnostics d = validate(file.data, geometric ? ValidationLevel::kGeometric
                                                : ValidationLevel::kCombinatorial);
  json j;
  j["name"] = file.data.name;
  j["valid"] = d.ok();
  j["issues"] = d.issues;
  j["primitive"] = d.primitive;
  j["simplicial"] = d.simplicial;
  j["distinct_rays"] = d.distinct_rays;
  j["well_indexed"] = d.well_indexed;
  if (d.geometric_checked) j["geometric"] = d.geometric_ok;
  if (d.ok()) {
    Fan fan(prepare_fan(file));
    UnimodularityReport u = is_unimodular(fan);
    j["lattice"] = file.lattice;
    j["dimension"] = fan.dim();
    j["pure"] = fan.is_pure();
    j["unimodular"] = u.all;
    std::vector<std::string> bad;
    for (std::size_t c = 0; c < fan.num_cones(); ++c)
      if (!u.per_cone[c]) bad.push_back(cone_label(fan, static_cast<ConeId>(c)));
    j["non_unimodular_cones"] = bad;
    j["saturated"] = is_saturated(fan);
    if (fan.is_pure()) j["balanced"] = is_balanced(fan, fan_weights(fan));
  }
  if (as_json) {
    ctx.out << j.dump(2) << "\n";
  } else {
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"name", file.data.name});
    rows.push_back({"valid", bool_str(d.ok())});
    rows.push_back({"primitive", bool_str(d.primitive)});
    rows.push_back({"simplicial", bool_str(d.simplicial)});
    rows.push_back({"distinct rays", bool_str(d.distinct_rays)});
    rows.push_back({"indices", bool_str(d.well_indexed)});
    if (d.geometric_checked) rows.push_back({"geometric", bool_str(d.geometric_ok)});
    if (d.ok()) {
      rows.push_back({"lattice", file.lattice});
      rows.push_back({"dimension", std::to_string(j["dimension"].get<int>())});
      rows.push_back({"pure", bool_str(j["pure"])});
      rows.push_back({"unimodular", bool_str(j["unimodular"])});
      rows.push_back({"saturated", bool_str(j["saturated"])});
      rows.push_back({"balanced", j.contains("balanced") ? bool_str(j["balanced"]) : "n/a"});
    }
    ctx.out << render_columns(rows);
    for (const auto& s : d.issues) ctx.out << "issue: " << s << "\n";
  }
  return d.ok() ? 0 : 1;
}

GroupTable cohomology_table(const Fan& fan, const std::string& space, const std::string& variant,
                            const std::string& coeff) {
  Compactification comp(fan);
  Sheaf sheaf(comp);
  const Space sp = space == "fan" ? Space::kFan : Space::kCompactification;
  Variant v = Variant::kCohomology;
  std::string symbol = "H^{p,q}";
  if (variant == "hom") {
    v = Variant::kHomology;
    symbol = "H_{p,q}";
  } else if (variant == "bm") {
    v = Variant::kBorelMoore;
    symbol = "H^BM_{p,q}";
  } else if (variant == "c") {
    v = Variant::kCompactSupport;
    symbol = "H_c^{p,q}";
  }
  GroupTable t;
  t.space = space;
  t.variant = variant;
  t.coeff = coeff;
  t.title = symbol + "(" + (sp == Space::kFan ? "fan" : "compactification") + " of " +
            fan.name() + "; " + coeff + ")";
  t.cells.resize(static_cast<std::size_t>(fan.dim() + 1));
  parallel_for(t.cells.size(), [&](std::size_t p) {
    t.cells[p] = groups(build_complex(sheaf, sp, static_cast<int>(p), v), parse_coeff(coeff));
  });
  return t;
}

int cmd_chow(Context& ctx, const Fan& fan, int degree, const std::string& coeff, bool products,
             bool as_json) {
  const Coefficients c = parse_coeff(coeff);
  std::vector<int> degrees;
  if (degree >= 0)
    degrees.push_back(degree);
  else
    for (int k = 0; k <= fan.dim(); ++k) degrees.push_back(k);
  json j;
  j["coeff"] = coeff;
  j["degrees"] = json::array();
  for (int k : degrees) {
    ChowPresentation pres = chow_group(fan, k, c);
    json d;
    d["degree"] = k;
    d["group"] = pres.group.to_string();
    d["generators"] = json::array();
    for (ConeId s : pres.generators) d["generators"].push_back(fan.cone(s));
    j["degrees"].push_back(d);
    if (!as_json) ctx.out << "A^" << k << " = " << pres.group.to_string() << "\n";
  }
  if (products) {
    j["products"] = json::array();
    if (!as_json) ctx.out << "products:\n";
    for (int k1 = 1; k1 <= fan.dim(); ++k1)
      for (int k2 = k1; k1 + k2 <= fan.dim(); ++k2) {
        if (degree >= 0 && k1 + k2 != degree) continue;
        for (ConeId a : fan.cones_of_dim(k1))
          for (ConeId b : fan.cones_of_dim(k2)) {
            if (k1 == k2 && b < a) continue;
            ChowClass prod = chow_multiply(fan, chow_generator(fan, a), chow_generator(fan, b), c);
            std::string rhs = combination(fan, k1 + k2, prod.coeffs);
            std::string lhs = "x" + cone_label(fan, a) + " * x" + cone_label(fan, b);
            j["products"].push_back({{"left", fan.cone(a)}, {"right", fan.cone(b)}, {"product", rhs}});
            if (!as_json) ctx.out << "  " << lhs << " = " << rhs << "\n";
          }
      }
  }
  if (as_json) ctx.out << j.dump(2) << "\n";
  return 0;
}

int cmd_mw(Context& ctx, const Fan& fan, int p) {
  if (p < 0 || p > fan.dim()) throw InputError("--dim must lie between 0 and the fan dimension");
  IntMatrix basis = minkowski_weights(fan, p);
  const auto& cones = fan.cones_of_dim(p);
  ctx.out << "MW_" << p << " rank " << basis.rows() << "\n";
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> head{"cone"};
  for (std::size_t i = 0; i < basis.rows(); ++i) head.push_back("w" + std::to_string(i));
  rows.push_back(head);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    std::vector<std::string> r{cone_label(fan, cones[c])};
    for (std::size_t i = 0; i < basis.rows(); ++i) r.push_back(basis(i, c).get_str());
    rows.push_back(r);
  }
  ctx.out << render_columns(rows);
  return 0;
}

int cmd_pd(Context& ctx, const Fan& fan, const std::string& coeff) {
  PdReport r = chow_pd_check(fan, fan_weights(fan), parse_coeff(coeff));
  const bool holds = r.verdict == Verdict::kTrue;
  ctx.out << bool_str(holds);
  if (r.verdict == Verdict::kNotApplicable) ctx.out << " (not applicable: " << r.reason << ")";
  else if (!holds) ctx.out << " (" << r.reason << ")";
  ctx.out << "\n";
  for (std::size_t k = 0; k < r.chow.size(); ++k)
    ctx.out << "A^" << k << " = " << r.chow[k].to_string() << "\n";
  for (std::size_t k = 0; k < r.gram_determinants.size(); ++k)
    ctx.out << "|det Gram(A^" << k << " x A^" << r.chow.size() - 1 - k
            << ")| = " << r.gram_determinants[k].get_str() << "\n";
  return holds ? 0 : 1;
}

int cmd_manifold(Context& ctx, const Fan& fan, const std::string& coeff) {
  ManifoldReport r = homology_manifold_check(fan, fan_weights(fan), parse_coeff(coeff));
  ctx.out << bool_str(r.holds) << "\n";
  for (const auto& f : r.faces)
    if (f.pd != Verdict::kTrue || !f.vanishing)
      ctx.out << "star of " << cone_label(fan, f.cone) << ": " << f.witness << "\n";
  return r.holds ? 0 : 1;
}

int cmd_ample(Context& ctx, const Fan& fan, const RatVector& f, const std::string& mode) {
  bool ok = true;
  std::optional<bool> lp, kl;
  if (mode == "lp" || mode == "both") {
    lp = is_ample(fan, f).holds;
    ctx.out << "lp: " << bool_str(*lp) << "\n";
    ok = ok && *lp;
  }
  if (mode == "kleiman" || mode == "both") {
    KleimanReport k = kleiman_check(fan, f);
    kl = k.holds;
    ctx.out << "kleiman: " << bool_str(*kl) << "\n";
    ok = ok && *kl;
  }
  if (lp && kl) ctx.out << "agree: " << bool_str(*lp == *kl) << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(Context& ctx, const Fan& fan) {
  Theorem1Report r = theorem1_report(fan);
  ctx.out << "unimodular: " << bool_str(r.unimodular) << "\n";
  ctx.out << "saturated: " << bool_str(r.saturated) << "\n";
  GroupTable t;
  t.title = "H^{p,q}(compactification of " + fan.name() + "; Z)";
  t.cells = r.cohomology;
  ctx.out << render_text(t);
  std::vector<std::vector<std::string>> rows{{"p", "A^p", "coeff", "psi"}};
  for (std::size_t p = 0; p < r.chow.size(); ++p)
    rows.push_back({std::to_string(p), r.chow[p].to_string(),
                    r.chow_coeff[p] == Coefficients::kZ ? "Z" : "Q", r.psi_status[p]});
  ctx.out << render_columns(rows);
  ctx.out << "vanishing (p < q, p > q = 0): " << bool_str(r.vanishing());
  for (auto [p, q] : r.vanishing_failures)
    ctx.out << " [fails at (" << p << "," << q << "): " << r.cohomology[p][q].to_string() << "]";
  ctx.out << "\n";
  ctx.out << "psi round trips: " << r.round_trip_checks - r.round_trip_failures << "/"
          << r.round_trip_checks << "\n";
  ctx.out << "ring morphism checks: " << r.ring_checks - r.ring_failures << "/" << r.ring_checks
          << "\n";
  bool ok = r.round_trip_failures == 0 && r.ring_failures == 0;
  for (const auto& q : r.psi_q) ok = ok && q.well_defined && q.surjective() && q.injective();
  if (r.unimodular) ok = ok && r.vanishing();
  if (r.unimodular && r.saturated)
    for (const auto& z : r.psi_z) ok = ok && z && z->surjective() && z->injective();
  ctx.out << "verdict: " << bool_str(ok) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

unsigned thread_count() {
  const char* env = std::getenv("TROPFAN_THREADS");
  if (env && *env) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1) throw InputError("TROPFAN_THREADS must be a positive integer");
    return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err};
  CLI::App app{"Tropical cohomology, Chow rings and duality checks for simplicial fans",
               "tropfan"};
  app.require_subcommand(1);

  std::string fan_path, matroid_path, function_path, output_path, table_path;
  std::string space = "comp", variant = "std", coeff = "Z", mode = "both";
  bool as_json = false, geometric = false, products = false;
  int degree = -1, dim = 0;
  const std::vector<std::string> coeffs{"Z", "Q"};

  auto* diag = app.add_subcommand("diagnostics", "Validate a fan and report its properties");
  diag->add_option("--fan", fan_path, "Fan JSON file")->required();
  diag->add_flag("--geometric", geometric, "Also check that cones meet along common faces");
  diag->add_flag("--json", as_json, "JSON output");

  auto* coh = app.add_subcommand("cohomology", "Table of (co)homology groups");
  coh->add_option("--fan", fan_path, "Fan JSON file")->required();
  coh->add_option("--space", space, "fan or comp")->check(CLI::IsMember({"fan", "comp"}));
  coh->add_option("--variant", variant, "std, hom, bm or c")
      ->check(CLI::IsMember({"std", "hom", "bm", "c"}));
  coh->add_option("--coeff", coeff, "Z or Q")->check(CLI::IsMember(coeffs));
  coh->add_flag("--json", as_json, "JSON output");

  auto* chow = app.add_subcommand("chow", "Chow groups and products of generators");
  chow->add_option("--fan", fan_path, "Fan JSON file")->required();
  chow->add_option("--degree", degree, "Single degree");
  chow->add_option("--coeff", coeff, "Z or Q")->check(CLI::IsMember(coeffs));
  chow->add_flag("--products", products, "Multiplication table of generators");
  chow->add_flag("--json", as_json, "JSON output");

  auto* mw = app.add_subcommand("mw", "Basis of Minkowski weights");
  mw->add_option("--fan", fan_path, "Fan JSON file")->required();
  mw->add_option("--dim", dim, "Dimension p")->required();

  auto* berg = app.add_subcommand("bergman", "Bergman fan of a matroid");
  berg->add_option("--matroid", matroid_path, "Matroid JSON file")->required();
  berg->add_option("-o,--output", output_path, "Output fan file (default: stdout)");

  auto* pd = app.add_subcommand("pd", "Poincare duality of the Chow ring");
  pd->add_option("--fan", fan_path, "Fan JSON file")->required();
  pd->add_option("--coeff", coeff, "Z or Q")->check(CLI::IsMember(coeffs));

  auto* man = app.add_subcommand("manifold-check", "Tropical homology manifold criterion");
  man->add_option("--fan", fan_path, "Fan JSON file")->required();
  man->add_option("--coeff", coeff, "Z or Q")->check(CLI::IsMember(coeffs));

  auto* amp = app.add_subcommand("ample", "Strict convexity and Kleiman tests");
  amp->add_option("--fan", fan_path, "Fan JSON file")->required();
  amp->add_option("--function", function_path, "Ray values JSON (default: ray_values of the fan)");
  amp->add_option("--mode", mode, "lp, kleiman or both")
      ->check(CLI::IsMember({"lp", "kleiman", "both"}));

  auto* ver = app.add_subcommand("verify", "Chow/cohomology comparison report");
  ver->add_option("--fan", fan_path, "Fan JSON file")->required();

  auto* ren = app.add_subcommand("render", "Render a JSON group table");
  ren->add_option("--table", table_path, "Table JSON file")->required();
  ren->add_flag("--json", as_json, "JSON output");

  std::vector<const char*> argv{"tropfan"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    auto load = [&] { return Fan(prepare_fan(parse_fan(read_json_file(fan_path)))); };
    if (*diag) return cmd_diagnostics(ctx, fan_path, geometric, as_json);
    if (*coh) {
      GroupTable t = cohomology_table(load(), space, variant, coeff);
      out << (as_json ? table_to_json(t).dump(2) + "\n" : render_text(t));
      return 0;
    }
    if (*chow) return cmd_chow(ctx, load(), degree, coeff, products, as_json);
    if (*mw) return cmd_mw(ctx, load(), dim);
    if (*berg) {
      FanFile f;
      f.data = bergman_fan(parse_matroid(read_json_file(matroid_path)));
      const std::string text = fan_to_json(f).dump(2) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream o(output_path);
        if (!o) throw InputError(output_path + ": cannot write");
        o << text;
        out << "wrote " << output_path << ": " << f.data.rays.size() << " rays, "
            << f.data.maximal_cones.size() << " maximal cones\n";
      }
      return 0;
    }
    if (*pd) return cmd_pd(ctx, load(), coeff);
    if (*man) return cmd_manifold(ctx, load(), coeff);
    if (*amp) {
      Fan fan = load();
      RatVector f;
      if (!function_path.empty())
        f = parse_function(read_json_file(function_path));
      else if (fan.data().ray_values)
        f = *fan.data().ray_values;
      else
        throw InputError("no --function given and the fan has no ray_values");
      if (f.size() != fan.num_rays()) throw InputError("function has " + std::to_string(f.size()) +
                                                       " values for " + std::to_string(fan.num_rays()) + " rays");
      return cmd_ample(ctx, fan, f, mode);
    }
    if (*ver) return cmd_verify(ctx, load());
    if (*ren) {
      GroupTable t = table_from_json(read_json_file(table_path));
      out << (as_json ? table_to_json(t).dump(2) + "\n" : render_text(t));
      return 0;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace tropfan::cli
