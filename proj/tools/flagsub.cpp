// Command-line front end: invariants, constructions, validation and the check suite.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "flagsub/flagsub.hpp"

namespace {

using flagsub::io::json;
namespace fs = flagsub;
namespace io = flagsub::io;
namespace hn = flagsub::harness;

constexpr int kExitTheoremFailure = 2;
constexpr int kExitMalformed = 3;
constexpr double kMaxFaces = 4194304.0;  // 2^22

struct Globals {
  bool force = false;
  std::string field = "gf2";
};

fs::FieldSpec parse_field(const std::string& s) {
  if (s == "gf2") return fs::FieldSpec::gf2();
  if (s == "q") return fs::FieldSpec::rationals();
  if (s.rfind("gf", 0) == 0 && s.size() > 2) {
    try {
      return fs::FieldSpec::gf(static_cast<std::uint32_t>(std::stoul(s.substr(2))));
    } catch (const std::logic_error&) {
    }
  }
  throw fs::Error(fs::Errc::InvalidArgument, "unknown field '" + s + "' (expected gf2, q or gfP)");
}

json read_json(const std::string& path) {
  std::stringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw fs::Error(fs::Errc::InvalidArgument, "cannot open '" + path + "'");
    buf << in.rdbuf();
  }
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw fs::Error(fs::Errc::InvalidArgument, path + ": " + e.what());
  }
}

void guard_size(const json& doc, const Globals& g) {
  double bound = io::face_count_bound(doc);
  for (const char* part : {"base", "total"})
    if (doc.is_object() && doc.contains(part)) bound += io::face_count_bound(doc.at(part));
  if (bound > kMaxFaces && !g.force)
    throw fs::Error(fs::Errc::TooLarge, "input may expand to more than 2^22 faces; pass --force to proceed");
}

fs::SimplicialComplex load_complex(const std::string& path, const Globals& g) {
  const json doc = read_json(path);
  guard_size(doc, g);
  return io::complex_from_json(doc);
}

fs::SubdivisionMap load_subdivision(const std::string& path, const Globals& g) {
  const json doc = read_json(path);
  guard_size(doc, g);
  return io::subdivision_from_json(doc);
}

std::vector<std::string> split_names(const std::string& s) { return io::split_key(s); }

json gamma_result_json(const fs::GammaResult& r) {
  if (const auto* gv = std::get_if<fs::GammaVector>(&r)) return io::to_json(*gv);
  const auto& f = std::get<fs::SymmetryFailure>(r);
  return json{{"symmetry_failure", {{"i", f.i}, {"j", f.j}}}};
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagsub: face enumeration of flag complexes and their subdivisions"};
  app.require_subcommand(1);
  Globals g;
  app.add_flag("--force", g.force, "Process inputs larger than 2^22 faces");

  std::string in_path, in_path2, face_arg, name_arg, facet_arg, labels_arg, out_path, tsv_path, checks_arg;
  bool fast = false, verify = false, timings = false, join_moves = false;
  int dim = 2, steps = 0, count = 10;
  std::vector<int> dims{2};
  std::uint64_t seed = 1;

  auto* generate = app.add_subcommand("generate", "Random flag sphere from edge subdivisions of the cross-polytope");
  generate->add_option("--dim", dim, "Start from the boundary of the d-dimensional cross-polytope")->check(CLI::Range(1, 32));
  generate->add_option("--steps", steps, "Number of random moves")->check(CLI::NonNegativeNumber);
  generate->add_option("--seed", seed, "RNG seed");
  generate->add_flag("--join", join_moves, "Also allow joins with the 0-sphere");
  generate->add_flag("--verify", verify, "Certify the output as a homology sphere");

  auto* suite = app.add_subcommand("suite", "Run checks over generated instances");
  suite->add_option("--checks", checks_arg, "Comma-separated check names")->required();
  suite->add_option("--count", count, "Instances per family")->check(CLI::NonNegativeNumber);
  suite->add_option("--dim", dims, "Dimensions to cycle through")->delimiter(',');
  suite->add_option("--steps", steps, "Maximum random moves per instance")->check(CLI::NonNegativeNumber);
  suite->add_option("--seed", seed, "Base seed");
  suite->add_option("--out", out_path, "Write the JSON report here");
  suite->add_option("--tsv", tsv_path, "Write the TSV summary here");
  suite->add_flag("--timings", timings, "Record per-check wall time");
  suite->add_option("--field", g.field, "gf2, q or gfP");

  auto* hvec = app.add_subcommand("hvec", "h-polynomial of a complex");
  hvec->add_option("complex", in_path)->required();
  auto* gamma = app.add_subcommand("gamma", "gamma-vector of a complex");
  gamma->add_option("complex", in_path)->required();
  auto* localh = app.add_subcommand("local-h", "Local h-polynomial of a subdivision of a simplex");
  localh->add_option("subdivision", in_path)->required();
  auto* localg = app.add_subcommand("local-gamma", "Local gamma-vector of a subdivision of a simplex");
  localg->add_option("subdivision", in_path)->required();
  auto* classify = app.add_subcommand("classify", "Homology sphere / ball / other");
  classify->add_option("complex", in_path)->required();
  classify->add_option("--field", g.field, "gf2, q or gfP");
  auto* check = app.add_subcommand("check-subdivision", "Validate a carrier map");
  check->add_option("subdivision", in_path)->required();
  check->add_flag("--fast", fast, "Combinatorial checks only");
  check->add_option("--field", g.field, "gf2, q or gfP");
  auto* stellar = app.add_subcommand("stellar", "Stellar subdivision at a face");
  stellar->add_option("complex", in_path)->required();
  stellar->add_option("--face", face_arg, "Comma-separated vertex names")->required();
  stellar->add_option("--name", name_arg, "Name of the new vertex");
  auto* bary = app.add_subcommand("barycentric", "Barycentric subdivision of a simplex");
  bary->add_option("--labels", labels_arg, "Comma-separated vertex names")->required();
  auto* compose = app.add_subcommand("compose", "Compose two subdivisions (outer, inner)");
  compose->add_option("outer", in_path)->required();
  compose->add_option("inner", in_path2)->required();
  auto* sigma = app.add_subcommand("sigma-map", "Map a flag sphere onto the cross-polytope");
  sigma->add_option("complex", in_path)->required();
  sigma->add_option("--facet", facet_arg, "Ordered facet, comma-separated");
  sigma->add_flag("--verify", verify, "Certify the input as a homology sphere");
  sigma->add_option("--field", g.field, "gf2, q or gfP");
  auto* b2s = app.add_subcommand("ball-to-sphere", "Extend a subdivision of a simplex to the cross-polytope");
  b2s->add_option("subdivision", in_path)->required();
  b2s->add_flag("--verify", verify, "Full homology validation of the input");
  b2s->add_option("--field", g.field, "gf2, q or gfP");
  auto* fixture = app.add_subcommand("fixture", "Print a built-in example subdivision");
  fixture->add_option("name", name_arg)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const fs::FieldSpec field = parse_field(g.field);
    if (*generate) {
      hn::GeneratorSpec spec{dim, steps, seed, true, join_moves};
      const hn::FlagSphere s = hn::random_flag_sphere(spec);
      json out{{"spec", spec.to_json()}, {"rng", hn::kRngName}, {"complex", io::to_json(s.complex)},
               {"f_vector", fs::f_vector(s.complex).counts}, {"gamma", gamma_result_json(fs::gamma_vector(s.complex))}};
      if (verify) {
        const fs::HomologyClass c = fs::classify(s.complex, field);
        out["classification"] = io::to_json(c);
        if (!c.is_sphere(s.complex.dimension())) {
          emit(out);
          return kExitTheoremFailure;
        }
      }
      emit(out);
    } else if (*suite) {
      hn::SuiteSpec spec{dims, count, steps, seed, split_names(checks_arg)};
      hn::SuiteOptions opts{field, 4, timings};
      const auto reports = hn::run_conjecture_suite(hn::make_instances(spec), spec.checks, opts);
      json header = spec.to_json();
      header["field"] = field.name();
      const json report = hn::report_json(reports, header);
      if (!out_path.empty()) {
        std::ofstream(out_path) << report.dump(2) << '\n';
      }
      if (!tsv_path.empty()) std::ofstream(tsv_path) << hn::report_tsv(reports);
      std::cout << hn::report_tsv(reports);
      if (hn::theorem_tier_failed(reports)) return kExitTheoremFailure;
    } else if (*hvec) {
      const auto k = load_complex(in_path, g);
      emit(json{{"d", k.dimension() + 1}, {"h", io::to_json(fs::h_polynomial(k))}});
    } else if (*gamma) {
      emit(gamma_result_json(fs::gamma_vector(load_complex(in_path, g))));
    } else if (*localh) {
      const auto s = load_subdivision(in_path, g);
      emit(json{{"d", s.simplex_face().size()}, {"local_h", io::to_json(fs::local_h(s))}});
    } else if (*localg) {
      emit(io::to_json(fs::local_gamma(load_subdivision(in_path, g))));
    } else if (*classify) {
      emit(io::to_json(fs::classify(load_complex(in_path, g), field)));
    } else if (*check) {
      const auto v = fs::validate(load_subdivision(in_path, g), {field, fast});
      emit(io::to_json(v));
      if (!v.is_homology_subdivision) return kExitTheoremFailure;
    } else if (*stellar) {
      const auto k = load_complex(in_path, g);
      emit(io::to_json(fs::stellar_subdivision(k, k.face_of(split_names(face_arg)), name_arg)));
    } else if (*bary) {
      emit(io::to_json(fs::barycentric_subdivision(split_names(labels_arg))));
    } else if (*compose) {
      emit(io::to_json(fs::compose(load_subdivision(in_path, g), load_subdivision(in_path2, g))));
    } else if (*sigma) {
      const auto k = load_complex(in_path, g);
      const fs::FacetChoice choice = facet_arg.empty() ? fs::default_facet_choice(k) : fs::FacetChoice{split_names(facet_arg)};
      emit(io::to_json(fs::sigma_cross_polytope_map(k, choice, verify, field)));
    } else if (*b2s) {
      emit(io::to_json(fs::ball_to_sphere(load_subdivision(in_path, g), verify, field)));
    } else if (*fixture) {
      emit(io::to_json(fs::example_fixture(name_arg)));
    }
  } catch (const fs::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed document: " << e.what() << '\n';
    return kExitMalformed;
  }
  return 0;
}
