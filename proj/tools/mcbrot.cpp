// Command-line front door for the multicomplex Multibrot toolkit.
//
// Subcommands: member, axis, dims, classify, canon, render, octa, verify.
// Exit codes: 0 success/pass, 1 failure/fail, 2 usage error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mcbrot/mcbrot.hpp"

namespace {

using nlohmann::json;

struct TripleFlag {
  std::string text;
  int order = 0;  // 0 = infer from the units
};

mcbrot::UnitTriple make_triple(const TripleFlag& flag) {
  const auto units = mcbrot::parse_triple_units(flag.text);
  int order = mcbrot::min_order_for_units(units);
  if (flag.order > 0) {
    if (flag.order < order)
      throw mcbrot::ParseError("triple needs order >= " + std::to_string(order), 0);
    order = flag.order;
  }
  return mcbrot::UnitTriple(order, units);
}

std::array<int, 3> parse_res(const std::string& text) {
  std::array<int, 3> res{};
  char sep1, sep2;
  std::istringstream in(text);
  if (!(in >> res[0] >> sep1 >> res[1] >> sep2 >> res[2]) || sep1 != ',' || sep2 != ',')
    throw mcbrot::ParseError("expected NX,NY,NZ", 0);
  return res;
}

std::array<mcbrot::Interval, 3> parse_bounds(const std::string& text) {
  std::array<mcbrot::Interval, 3> b{};
  std::string part;
  std::istringstream in(text);
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, part, ',')) throw mcbrot::ParseError("expected x0:x1,y0:y1,z0:z1", 0);
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw mcbrot::ParseError("expected lo:hi in bounds", 0);
    b[i].lo = std::stod(part.substr(0, colon));
    b[i].hi = std::stod(part.substr(colon + 1));
  }
  return b;
}

std::string triple_text(const mcbrot::UnitTriple& t) {
  return mcbrot::unit_name(t.units[0]) + "," + mcbrot::unit_name(t.units[1]) + "," +
         mcbrot::unit_name(t.units[2]);
}

int run_member(int power, int order, const std::string& literal, const std::string& method,
               int max_iter) {
  const auto c = mcbrot::parse_literal(literal, order);
  mcbrot::EscapeParams params;
  params.max_iter = max_iter;
  const auto res = method == "direct" ? mcbrot::member_direct(c, power, params)
                                      : mcbrot::member_idempotent(c, power, params);
  if (res.bounded())
    std::cout << "bounded\n";
  else
    std::cout << "escaped at iteration " << *res.escape_iteration << "\n";
  return 0;
}

int run_axis(int power, bool scan, int max_iter) {
  const auto interval = mcbrot::real_axis_interval(power);
  std::cout << std::fixed << std::setprecision(3) << "[" << interval.left << ", "
            << interval.right << "]" << std::defaultfloat << "\n";
  if (scan) {
    const auto scanned = mcbrot::real_axis_scan(power, 1e-3, -2.1, 1.0, max_iter);
    if (!scanned) {
      std::cout << "scan: no bounded points\n";
      return 1;
    }
    std::cout << std::fixed << std::setprecision(3) << "scan: [" << scanned->left << ", "
              << scanned->right << "]" << std::defaultfloat << "\n";
  }
  return 0;
}

int run_dims(int power, int order, const std::optional<TripleFlag>& triple, int samples,
             int orbit_len, std::uint64_t seed, bool as_json) {
  if (triple) {
    const auto v =
        mcbrot::verify_characterization(make_triple(*triple), power, samples, orbit_len, seed);
    if (as_json) {
      json j{{"triple", triple_text(v.triple)},   {"p", v.power},
             {"case", mcbrot::case_name(v.case_label)}, {"predicted_dim", v.predicted_dim},
             {"rank", v.rank},                     {"max_leak", v.max_leak},
             {"pass", v.pass}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << v.triple.name() << " p=" << v.power << " case=" << mcbrot::case_name(v.case_label)
                << " rank=" << v.rank << " predicted=" << v.predicted_dim
                << " leak=" << v.max_leak << (v.pass ? " pass" : " FAIL") << "\n";
    }
    return v.pass ? 0 : 1;
  }
  std::size_t pass = 0, fail = 0;
  const auto triples = mcbrot::all_unit_triples(order);
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto v = mcbrot::verify_characterization(triples[i], power, samples, orbit_len,
                                                   mcbrot::mix_seed(seed, i));
    if (v.pass) {
      ++pass;
    } else {
      ++fail;
      std::cout << "FAIL " << v.triple.name() << " rank=" << v.rank
                << " predicted=" << v.predicted_dim << " leak=" << v.max_leak << "\n";
    }
  }
  std::cout << pass << "/" << (pass + fail) << " triples pass for p=" << power << " in I("
            << order << ")\n";
  return fail == 0 ? 0 : 1;
}

int run_classify(int power, int order, bool as_json) {
  const auto part = mcbrot::enumerate_classes(order, power);
  if (as_json) {
    for (std::size_t i = 0; i < part.classes.size(); ++i) {
      const auto& c = part.classes[i];
      json j{{"class", i + 1},
             {"representative", triple_text(c.representative)},
             {"members", c.member_count},
             {"signature", c.sig.describe()},
             {"marginal", c.marginal}};
      if (!c.label.empty()) j["label"] = c.label;
      if (c.affine_link) j["affine_link"] = *c.affine_link + 1;
      std::cout << j.dump() << "\n";
    }
    json summary{{"order", part.order},
                 {"p", part.power},
                 {"classes", part.class_count()},
                 {"classes_up_to_affine", part.affine_class_count()}};
    std::cout << summary.dump() << "\n";
    return 0;
  }
  std::cout << part.class_count() << " classes\n";
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    const auto& c = part.classes[i];
    std::cout << "class " << i + 1 << ": " << c.representative.name() << "  members "
              << c.member_count << "  [" << c.sig.describe() << "]";
    if (!c.label.empty()) std::cout << "  " << c.label;
    if (c.marginal && c.affine_link)
      std::cout << "  marginal: affine-equivalent to class " << *c.affine_link + 1;
    std::cout << "\n";
  }
  if (part.affine_class_count() != part.class_count())
    std::cout << part.affine_class_count() << " classes up to affine equivalence\n";
  return 0;
}

int run_canon(int power, const TripleFlag& triple, bool as_json) {
  const auto t = make_triple(triple);
  const auto res = mcbrot::canonical_representative(t, power);
  if (as_json) {
    json pairing = json::array();
    for (const auto& p : res.phi.pairing)
      pairing.push_back({{"from", mcbrot::unit_name(p.source)},
                         {"to", mcbrot::unit_name(p.target)},
                         {"sign", p.sign}});
    json j{{"triple", triple_text(t)},
           {"p", power},
           {"marginal", res.marginal},
           {"representative", triple_text(res.representative)},
           {"representative_order", res.representative.order},
           {"pairing", pairing}};
    std::cout << j.dump() << "\n";
    return 0;
  }
  if (res.marginal)
    std::cout << "marginal octahedron class; designated representative "
              << res.representative.name() << " [order " << res.representative.order << "]\n";
  else
    std::cout << "canonical: " << res.representative.name() << " [order "
              << res.representative.order << "]\n";
  for (const auto& p : res.phi.pairing)
    std::cout << "  " << mcbrot::unit_name(p.source) << " -> " << (p.sign < 0 ? "-" : "")
              << mcbrot::unit_name(p.target) << "\n";
  return 0;
}

int run_render(int power, const TripleFlag& triple, const std::string& bounds_text,
               const std::string& res_text, int max_iter, int threads, const std::string& out_path,
               const std::string& obj_path, const std::string& csv_path) {
  mcbrot::SliceSpec spec;
  spec.power = power;
  spec.triple = make_triple(triple);
  spec.bounds = parse_bounds(bounds_text);
  spec.resolution = parse_res(res_text);
  spec.params.max_iter = max_iter;
  const auto grid = mcbrot::sample_slice(spec, threads);
  mcbrot::write_mbv_file(grid, out_path);
  std::cout << "rendered " << spec.resolution[0] << "x" << spec.resolution[1] << "x"
            << spec.resolution[2] << " grid, " << grid.occupied_count() << " occupied, wrote "
            << out_path << "\n";
  if (!obj_path.empty()) {
    std::ofstream obj(obj_path);
    if (!obj) throw std::runtime_error("cannot open " + obj_path);
    mcbrot::export_obj(grid, obj);
    std::cout << "wrote " << obj_path << "\n";
  }
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    mcbrot::export_csv_points(grid, csv);
    std::cout << "wrote " << csv_path << "\n";
  }
  return 0;
}

int run_octa(int power, int res, bool affine, bool as_json) {
  const auto v = mcbrot::octahedron_check(power, res);
  if (as_json) {
    json j{{"p", v.power},       {"res", v.grid_res},   {"radius", v.radius},
           {"tested", v.tested_cells}, {"mismatches", v.mismatches}, {"pass", v.pass}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "octahedron check p=" << v.power << " res=" << v.grid_res << ": radius "
              << v.radius << ", " << v.tested_cells << " cells tested, " << v.mismatches
              << " mismatches -> " << (v.pass ? "PASS" : "FAIL") << "\n";
  }
  bool ok = v.pass;
  if (affine) {
    const auto fit = mcbrot::marginal_affine(power, res);
    const bool fit_ok = fit.residual <= 0.05;
    if (as_json) {
      json j{{"affine_scale", fit.scale},
             {"affine_translation", fit.translation},
             {"affine_residual", fit.residual},
             {"pass", fit_ok}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "affine link to Airbrot: scale " << fit.scale << ", translation ["
                << fit.translation[0] << ", " << fit.translation[1] << ", " << fit.translation[2]
                << "], residual " << fit.residual << " -> " << (fit_ok ? "PASS" : "FAIL") << "\n";
    }
    ok = ok && fit_ok;
  }
  return ok ? 0 : 1;
}

int run_verify(const std::string& suite, std::uint64_t seed, bool as_json) {
  const auto started = std::chrono::steady_clock::now();
  const auto results = mcbrot::verify::run_suite(suite, seed);
  bool all_pass = true;
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    if (as_json) {
      json j{{"check", r.name}, {"pass", r.pass}, {"detail", r.detail}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  " << r.detail << "\n";
    }
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);
  if (!as_json)
    std::cout << results.size() << " checks, " << (all_pass ? "all passed" : "FAILURES") << " ("
              << elapsed.count() << " ms)\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"multicomplex Multibrot slices: membership, classification, equivalence, rendering"};
  app.require_subcommand(1);

  int power = 2;
  int order = 3;
  int max_iter = 500;
  int samples = 50;
  int orbit_len = 8;
  int res = 33;
  int threads = 1;
  std::uint64_t seed = mcbrot::kDefaultSpanSeed;
  bool as_json = false;
  bool scan = false;
  bool affine = false;
  std::string literal, method = "idempotent", suite = "all";
  std::string bounds_text = "-1.1:1.1,-1.1:1.1,-1.1:1.1";
  std::string res_text = "33,33,33";
  std::string out_path, obj_path, csv_path;
  TripleFlag triple;
  bool triple_given = false;

  auto add_common = [&](CLI::App* cmd, bool with_p = true) {
    if (with_p) cmd->add_option("--p", power, "iteration power p >= 2")->check(CLI::Range(2, 16));
    cmd->add_flag("--json", as_json, "machine-readable JSON lines");
  };

  auto* member = app.add_subcommand("member", "escape-time membership for one parameter");
  add_common(member);
  member->add_option("--n", order, "multicomplex order");
  member->add_option("--c", literal, "parameter as a multicomplex literal")->required();
  member->add_option("--method", method, "idempotent (authoritative) or direct")
      ->check(CLI::IsMember({"idempotent", "direct"}));
  member->add_option("--max-iter", max_iter, "iteration budget");

  auto* axis = app.add_subcommand("axis", "real-axis interval of the Multibrot");
  add_common(axis);
  axis->add_flag("--scan", scan, "also run the 1e-3-step escape-time scan");
  axis->add_option("--max-iter", max_iter, "scan iteration budget")->default_val(2000);

  auto* dims = app.add_subcommand("dims", "iterate-subspace rank verification");
  add_common(dims);
  dims->add_option("--n", order, "multicomplex order for the sweep");
  dims->add_option("--triple", triple.text, "single triple, e.g. \"i1,i2,i1i2\"");
  dims->add_option("--samples", samples, "parameter draws per triple");
  dims->add_option("--orbit", orbit_len, "orbit length per draw");
  dims->add_option("--seed", seed, "sampling seed");

  auto* classify = app.add_subcommand("classify", "enumerate slice equivalence classes");
  add_common(classify);
  classify->add_option("--n", order, "multicomplex order");

  auto* canon = app.add_subcommand("canon", "canonical tricomplex representative");
  add_common(canon);
  canon->add_option("--n", triple.order, "order of the source triple");
  canon->add_option("--triple", triple.text, "source triple")->required();

  auto* render = app.add_subcommand("render", "voxelize a principal 3D slice");
  add_common(render);
  render->add_option("--n", triple.order, "order (inferred from the triple when omitted)");
  render->add_option("--triple", triple.text, "slice triple")->required();
  render->add_option("--bounds", bounds_text, "coefficient box x0:x1,y0:y1,z0:z1");
  render->add_option("--res", res_text, "resolution NX,NY,NZ");
  render->add_option("--max-iter", max_iter, "iteration budget");
  render->add_option("--threads", threads, "worker cap (result-independent)");
  render->add_option("--out", out_path, "output MBV1 file")->required();
  render->add_option("--obj", obj_path, "also export an OBJ occupancy mesh");
  render->add_option("--csv", csv_path, "also export occupied voxel centers as CSV");

  auto* octa = app.add_subcommand("octa", "octahedron verdict for the marginal slice");
  add_common(octa);
  octa->add_option("--res", res, "grid resolution")->check(CLI::Range(9, 257));
  octa->add_flag("--affine", affine, "also fit the affine link to the Airbrot");

  auto* verify = app.add_subcommand("verify", "run module invariant suites");
  add_common(verify, false);
  verify->add_option("--suite", suite, "algebra|idempotent|dynamics|dims|equiv|octa|all")
      ->check(CLI::IsMember({"algebra", "idempotent", "dynamics", "dims", "equiv", "octa", "all"}));
  verify->add_option("--seed", seed, "randomized-check seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints help or the error message
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  triple_given = !triple.text.empty();
  try {
    if (member->parsed()) return run_member(power, order, literal, method, max_iter);
    if (axis->parsed()) return run_axis(power, scan, max_iter);
    if (dims->parsed())
      return run_dims(power, order,
                      triple_given ? std::optional<TripleFlag>(triple) : std::nullopt, samples,
                      orbit_len, seed, as_json);
    if (classify->parsed()) return run_classify(power, order, as_json);
    if (canon->parsed()) return run_canon(power, triple, as_json);
    if (render->parsed())
      return run_render(power, triple, bounds_text, res_text, max_iter, threads, out_path,
                        obj_path, csv_path);
    if (octa->parsed()) return run_octa(power, res, affine, as_json);
    if (verify->parsed()) return run_verify(suite, seed, as_json);
  } catch (const mcbrot::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
