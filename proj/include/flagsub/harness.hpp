#pragma once

// Instance generators and the check suite. Every generator is a pure function
// of its settings and seed, so reports replay byte for byte.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flagsub/complex.hpp"
#include "flagsub/constructions.hpp"
#include "flagsub/enumeration.hpp"
#include "flagsub/homology.hpp"
#include "flagsub/io.hpp"
#include "flagsub/polynomial.hpp"
#include "flagsub/subdivision.hpp"

namespace flagsub::harness {

using io::json;

inline constexpr const char* kRngName = "mt19937_64";
inline constexpr const char* kEdgeRule = "uniform over the edge list in canonical face order; draw = next() mod n";

/// SplitMix64 step, used to derive per-instance seeds.
inline std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seeded generator with a platform-independent bounded draw.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

struct GeneratorSpec {
  int dimension = 2;  // d: start from Σ_{d-1}
  int steps = 0;
  std::uint64_t seed = 0;
  bool edge_subdivide = true;
  bool join_with_s0 = false;

  json to_json() const {
    json moves = json::array();
    if (edge_subdivide) moves.push_back("edge-subdivide");
    if (join_with_s0) moves.push_back("join-with-S0");
    return json{{"dim", dimension}, {"steps", steps}, {"seed", seed}, {"moves", moves}};
  }
};

/// A flag sphere with its subdivision map onto Σ_{d-1}.
struct FlagSphere {
  SimplicialComplex complex;
  SubdivisionMap trail;
};

/// Σ_{d-1} followed by `steps` random moves (edge subdivisions, joins with S^0).
inline FlagSphere random_flag_sphere(const GeneratorSpec& spec) {
  if (spec.dimension < 1) throw Error(Errc::InvalidArgument, "generator needs d >= 1");
  if (!spec.edge_subdivide && !spec.join_with_s0 && spec.steps > 0)
    throw Error(Errc::InvalidArgument, "generator has no moves enabled");
  Rng rng(spec.seed);
  SubdivisionMap trail = trivial_subdivision(cross_polytope(spec.dimension));
  int d = spec.dimension;
  int fresh = 0;
  for (int step = 0; step < spec.steps; ++step) {
    bool edge = spec.edge_subdivide;
    if (spec.edge_subdivide && spec.join_with_s0) edge = rng.below(2) == 0;
    if (edge) {
      const FaceList edges = trail.total().faces_of_size(2);
      const Face e = edges[rng.below(edges.size())];
      std::string name;
      do name = "w" + std::to_string(++fresh);
      while (trail.total().index_of(name));
      trail = refine_stellar(trail, e, name);
    } else {
      ++d;
      const std::string u = "u" + std::to_string(d), v = "v" + std::to_string(d);
      const SimplicialComplex s0 = SimplicialComplex::from_facets({u, v}, {{u}, {v}});
      trail = join_subdivision(trail, trivial_subdivision(s0));
    }
  }
  return {trail.total(), trail};
}

/// A subdivision of a simplex together with the moves that produced it.
struct SimplexSubdivision {
  std::string recipe;
  SubdivisionMap map;
  /// prefixes[i]: the subdivision after i edge moves (prefixes.back() == map when
  /// the instance is a pure edge trail).
  std::vector<SubdivisionMap> prefixes;
  /// steps[i]: prefixes[i+1].total() → prefixes[i].total(); edges[i] the edge subdivided.
  std::vector<SubdivisionMap> steps;
  FaceList edges;
  std::optional<std::pair<SubdivisionMap, SubdivisionMap>> factors;
};

inline std::vector<std::string> simplex_labels(int d, const std::string& prefix = "") {
  std::vector<std::string> out;
  for (int i = 0; i < d; ++i) out.push_back(prefix + std::string(1, static_cast<char>('a' + i)));
  return out;
}

/// `steps` random edge subdivisions applied to `start` (a subdivision of a simplex).
inline SimplexSubdivision edge_trail(SubdivisionMap start, int steps, std::uint64_t seed, std::string recipe,
                                     const std::string& fresh_prefix = "w") {
  Rng rng(seed);
  SimplexSubdivision out{std::move(recipe), start, {start}, {}, {}, std::nullopt};
  int fresh = 0;
  for (int i = 0; i < steps; ++i) {
    const SubdivisionMap& cur = out.prefixes.back();
    const FaceList edges = cur.total().faces_of_size(2);
    if (edges.empty()) break;  // a single vertex has nothing to subdivide
    const Face e = edges[rng.below(edges.size())];
    std::string name;
    do name = fresh_prefix + std::to_string(++fresh);
    while (cur.total().index_of(name));
    SubdivisionMap step = edge_subdivision(cur.total(), e, name);
    out.prefixes.push_back(compose(cur, step));
    out.steps.push_back(std::move(step));
    out.edges.push_back(e);
  }
  out.map = out.prefixes.back();
  return out;
}

enum class SimplexFamily { EdgeTrail, Barycentric, StellarThenEdges, Join };

inline std::string to_string(SimplexFamily f) {
  switch (f) {
    case SimplexFamily::EdgeTrail: return "edge-trail";
    case SimplexFamily::Barycentric: return "barycentric";
    case SimplexFamily::StellarThenEdges: return "stellar-then-edges";
    case SimplexFamily::Join: return "join";
  }
  return "?";
}

/// Random subdivision of the simplex on d vertices from the given family.
inline SimplexSubdivision random_simplex_subdivision(SimplexFamily family, int d, int steps, std::uint64_t seed) {
  if (d < 1) throw Error(Errc::InvalidArgument, "simplex subdivision needs d >= 1");
  std::ostringstream recipe;
  recipe << to_string(family) << " d=" << d << " steps=" << steps << " seed=" << seed;
  const auto labels = simplex_labels(d);
  switch (family) {
    case SimplexFamily::EdgeTrail:
      return edge_trail(trivial_subdivision(simplex(labels)), steps, seed, recipe.str());
    case SimplexFamily::Barycentric:
      return edge_trail(barycentric_subdivision(labels), steps, seed, recipe.str());
    case SimplexFamily::StellarThenEdges: {
      Rng rng(mix_seed(seed));
      const SimplicialComplex v = simplex(labels);
      FaceList big;
      for (Face f : v.faces())
        if (f.size() >= 2) big.push_back(f);
      const Face f = big.empty() ? v.ground() : big[rng.below(big.size())];
      SubdivisionMap start = f.size() >= 2 ? stellar_subdivision(v, f) : trivial_subdivision(v);
      return edge_trail(start, steps, seed, recipe.str());
    }
    case SimplexFamily::Join: {
      if (d < 2) return edge_trail(trivial_subdivision(simplex(labels)), steps, seed, recipe.str());
      Rng rng(mix_seed(seed));
      const int d1 = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(d - 1)));
      const int s1 = static_cast<int>(rng.below(static_cast<std::size_t>(steps + 1)));
      SimplexSubdivision a = edge_trail(trivial_subdivision(simplex(simplex_labels(d1, "p"))), s1, mix_seed(seed + 1), "", "pw");
      SimplexSubdivision b =
          edge_trail(trivial_subdivision(simplex(simplex_labels(d - d1, "q"))), steps - s1, mix_seed(seed + 2), "", "qw");
      SubdivisionMap joined = join_subdivision(a.map, b.map);
      SimplexSubdivision out{recipe.str(), joined, {joined}, {}, {}, std::make_pair(a.map, b.map)};
      return out;
    }
  }
  throw Error(Errc::InvalidArgument, "unknown family");
}

/// A flag sphere Δ and a flag vertex-induced subdivision Δ′ → Δ by edge moves.
struct SubdivisionPair {
  std::string recipe;
  SimplicialComplex coarse;
  SubdivisionMap refinement;
};

inline SubdivisionPair random_pair(int d, int coarse_steps, int fine_steps, std::uint64_t seed) {
  FlagSphere s = random_flag_sphere({d, coarse_steps, seed});
  SimplexSubdivision r = edge_trail(trivial_subdivision(s.complex), fine_steps, mix_seed(seed), "");
  std::ostringstream recipe;
  recipe << "pair d=" << d << " coarse_steps=" << coarse_steps << " fine_steps=" << fine_steps << " seed=" << seed;
  return {recipe.str(), s.complex, r.map};
}

struct SphereInstance {
  GeneratorSpec spec;
  FlagSphere sphere;
};

using InstanceBody = std::variant<SphereInstance, SimplexSubdivision, SubdivisionPair>;

struct Instance {
  std::string id;
  InstanceBody body;
};

enum class Tier { Theorem, Conjecture };

inline std::string to_string(Tier t) { return t == Tier::Theorem ? "theorem" : "conjecture"; }

enum class Status { Pass, Fail, Skipped };

inline std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct CheckOutcome {
  Status status = Status::Skipped;
  json witness;  // null unless failed (or informative)
  double millis = 0;
};

struct ConjectureReport {
  std::string instance_id;
  std::string recipe;
  std::map<std::string, CheckOutcome> checks;
  json digests = json::object();
};

struct SuiteOptions {
  FieldSpec field = FieldSpec::gf2();
  /// Above this total dimension (d), homology-heavy checks use the combinatorial validator.
  int full_homology_max_d = 4;
  bool timings = false;
};

namespace detail {

inline CheckOutcome pass() { return {Status::Pass, nullptr, 0}; }
inline CheckOutcome skip(std::string why = {}) {
  return {Status::Skipped, why.empty() ? json(nullptr) : json(std::move(why)), 0};
}
inline CheckOutcome fail(json witness) { return {Status::Fail, std::move(witness), 0}; }
inline CheckOutcome verdict(bool ok, json witness) { return ok ? pass() : fail(std::move(witness)); }

inline json poly(const IntPolynomial& p) { return io::to_json(p); }

inline bool reciprocity_holds(const SimplicialComplex& k, const HomologyClass& c) {
  if (c.verdict == Verdict::Other) return true;
  const int d = k.dimension() + 1;
  return h_polynomial(k).reversed(d) == interior_h_polynomial(k, c.interior);
}

// Per-instance memo of the expensive pieces several checks share.
struct SimplexContext {
  const SimplexSubdivision& inst;
  const SuiteOptions& opts;
  std::optional<SubdivisionVerdict> verdict_;
  std::optional<IntPolynomial> local_h_;

  const SubdivisionVerdict& verdict() {
    if (!verdict_) {
      const int d = inst.map.simplex_face().size();
      verdict_ = validate(inst.map, {opts.field, d > opts.full_homology_max_d + 1});
    }
    return *verdict_;
  }
  const IntPolynomial& lh() {
    if (!local_h_) local_h_ = local_h(inst.map);
    return *local_h_;
  }
  int d() const { return inst.map.simplex_face().size(); }
  bool flag_vertex_induced() {
    return verdict().is_vertex_induced && verdict().is_flag_subdivision && is_flag(inst.map.total());
  }
};

inline json gamma_json(const GammaResult& r) {
  if (const auto* g = std::get_if<GammaVector>(&r)) return io::to_json(*g);
  const auto& f = std::get<SymmetryFailure>(r);
  return json{{"symmetry_failure", {f.i, f.j}}};
}

inline CheckOutcome run_simplex_check(const std::string& name, SimplexContext& ctx) {
  const SubdivisionMap& s = ctx.inst.map;
  const int d = ctx.d();
  if (name == "validate") {
    const auto& v = ctx.verdict();
    const bool hierarchy = (!v.is_vertex_induced || v.is_quasi_geometric) &&
                           (!(is_flag(s.total()) && v.is_vertex_induced) || v.is_flag_subdivision);
    return verdict(v.is_homology_subdivision && hierarchy, io::to_json(v));
  }
  if (name == "local-h-symmetry") return verdict(ctx.lh().reversed(d) == ctx.lh(), poly(ctx.lh()));
  if (name == "local-h-nonneg") {
    if (!ctx.verdict().is_quasi_geometric) return skip("not quasi-geometric");
    return verdict(ctx.lh().nonnegative(), poly(ctx.lh()));
  }
  if (name == "h-decomposition") {
    Decomposition dec = check_h_decomposition(s);
    return verdict(dec.lhs == dec.rhs, json{{"lhs", poly(dec.lhs)}, {"rhs", poly(dec.rhs)}});
  }
  if (name == "locality") {
    if (ctx.inst.steps.size() < 2) return skip("needs at least two moves");
    const std::size_t k = ctx.inst.steps.size() / 2;
    SubdivisionMap inner = ctx.inst.steps[k];
    for (std::size_t i = k + 1; i < ctx.inst.steps.size(); ++i) inner = compose(inner, ctx.inst.steps[i]);
    auto [lhs, rhs] = check_locality(ctx.inst.prefixes[k], inner);
    return verdict(lhs == rhs, json{{"split", k}, {"lhs", poly(lhs)}, {"rhs", poly(rhs)}});
  }
  if (name == "edge-recursion") {
    if (ctx.inst.steps.empty()) return skip("no edge moves");
    for (std::size_t i = 0; i < ctx.inst.steps.size(); ++i) {
      const SubdivisionMap& before = ctx.inst.prefixes[i];
      const IntPolynomial expect = local_h(before) + relative_local_h(before, ctx.inst.edges[i]).shifted(1);
      const IntPolynomial got = local_h(ctx.inst.prefixes[i + 1]);
      if (got != expect)
        return fail(json{{"step", i}, {"edge", before.total().key(ctx.inst.edges[i])}, {"expected", poly(expect)},
                         {"got", poly(got)}});
    }
    return pass();
  }
  if (name == "xi-join") {
    if (!ctx.inst.factors) return skip("not a join");
    const auto& [a, b] = *ctx.inst.factors;
    const IntPolynomial l_prod = local_h(a) * local_h(b);
    const IntPolynomial xi_prod = local_gamma(a).polynomial() * local_gamma(b).polynomial();
    const IntPolynomial xi = local_gamma(s).polynomial();
    return verdict(ctx.lh() == l_prod && xi == xi_prod,
                   json{{"l", poly(ctx.lh())}, {"l_product", poly(l_prod)}, {"xi", poly(xi)}, {"xi_product", poly(xi_prod)}});
  }
  if (name == "xi-low-terms") {
    if (d < 1) return skip("d = 0");
    const GammaVector xi = local_gamma(s);
    const InteriorStats st = interior_stats(s);
    auto at = [&xi](std::size_t i) { return i < xi.gammas.size() ? xi.gammas[i] : BigInt(0); };
    bool ok = at(0) == 0 && at(1) == st.f0_interior;
    if (d >= 4) ok = ok && at(2) == -(2 * d - 3) * BigInt(st.f0_interior) + st.f1_interior - st.f0_codim1_relint;
    return verdict(ok, json{{"xi", io::to_json(xi)}, {"stats", io::to_json(st)}});
  }
  if (name == "reciprocity") {
    const auto& v = ctx.verdict();
    if (!v.homology_checked) return skip("fast validation");
    for (const auto& r : v.restrictions)
      if (!reciprocity_holds(r.complex, r.homology))
        return fail(json{{"restriction", s.base().key(r.base_face)}});
    return pass();
  }
  if (name == "ball-to-sphere") {
    const bool full = d <= ctx.opts.full_homology_max_d;
    const SubdivisionMap b = ball_to_sphere(s, false, ctx.opts.field);
    const HomologyClass cls = classify(b.total(), ctx.opts.field);
    const SubdivisionVerdict bv = validate(b, {ctx.opts.field, !full});
    IntPolynomial rhs;
    s.simplex_face().for_each_subset([&](Face f) { rhs += local_gamma_at(s, f).polynomial(); });
    const GammaResult g = gamma_vector(b.total());
    const bool gamma_ok = std::holds_alternative<GammaVector>(g) && std::get<GammaVector>(g).polynomial() == rhs;
    bool ok = cls.is_sphere(d - 1) && bv.is_homology_subdivision && gamma_ok;
    if (ctx.flag_vertex_induced()) ok = ok && is_flag(b.total()) && bv.is_vertex_induced && bv.is_flag_subdivision;
    return verdict(ok, json{{"sphere", cls.is_sphere(d - 1)}, {"validate", io::to_json(bv)}, {"gamma", gamma_json(g)},
                            {"sum_xi", poly(rhs)}});
  }
  // Conjecture tier.
  if (name == "local-gamma") {
    const GammaVector xi = local_gamma(s);
    json w{{"xi", io::to_json(xi)}, {"flag_vertex_induced", ctx.flag_vertex_induced()}};
    return verdict(xi.nonnegative(), w);
  }
  if (name == "unimodality") {
    json w{{"l", poly(ctx.lh())}, {"vertex_induced", ctx.verdict().is_vertex_induced}};
    return verdict(ctx.lh().unimodal(), w);
  }
  if (name == "relative-symmetry") {
    for (Face e : s.total().faces()) {
      const IntPolynomial rel = relative_local_h(s, e);
      if (rel.reversed(d - e.size()) != rel) return fail(json{{"face", s.total().key(e)}, {"relative_l", poly(rel)}});
    }
    return pass();
  }
  if (name == "relative-nonneg") {
    if (!ctx.verdict().is_quasi_geometric) return skip("not quasi-geometric");
    for (Face e : s.total().faces()) {
      const IntPolynomial rel = relative_local_h(s, e);
      if (!rel.nonnegative()) return fail(json{{"face", s.total().key(e)}, {"relative_l", poly(rel)}});
    }
    return pass();
  }
  if (name == "local-h-monotone") {
    if (ctx.inst.steps.empty()) return skip("no edge moves");
    if (!ctx.verdict().is_quasi_geometric) return skip("not quasi-geometric");
    for (std::size_t i = 0; i + 1 < ctx.inst.prefixes.size(); ++i) {
      const IntPolynomial a = local_h(ctx.inst.prefixes[i]), b = local_h(ctx.inst.prefixes[i + 1]);
      if (!dominates(b, a)) return fail(json{{"step", i}, {"before", poly(a)}, {"after", poly(b)}});
    }
    return pass();
  }
  return skip("not applicable to simplex subdivisions");
}

inline IntPolynomial gamma_poly_or_zero(const GammaResult& r) {
  return std::holds_alternative<GammaVector>(r) ? std::get<GammaVector>(r).polynomial() : IntPolynomial{};
}

inline CheckOutcome run_sphere_check(const std::string& name, const SphereInstance& inst, const SuiteOptions& opts) {
  const SimplicialComplex& k = inst.sphere.complex;
  const int d = k.dimension() + 1;
  const bool full = d <= opts.full_homology_max_d;
  if (name == "gal") {
    const GammaResult g = gamma_vector(k);
    const bool ok = std::holds_alternative<GammaVector>(g) && std::get<GammaVector>(g).nonnegative();
    return verdict(ok, json{{"gamma", gamma_json(g)}});
  }
  if (name == "h-decomposition" || name == "gamma-decomposition") {
    Decomposition dec = check_h_decomposition(inst.sphere.trail);
    if (name == "h-decomposition")
      return verdict(dec.lhs == dec.rhs, json{{"lhs", poly(dec.lhs)}, {"rhs", poly(dec.rhs)}});
    if (!dec.gamma_lhs) return skip("base not Eulerian");
    return verdict(dec.gamma_lhs == dec.gamma_rhs, json{{"lhs", poly(*dec.gamma_lhs)}, {"rhs", poly(*dec.gamma_rhs)}});
  }
  if (name == "sigma-map") {
    const SubdivisionMap sigma = sigma_cross_polytope_map(k, default_facet_choice(k), full, opts.field);
    const SubdivisionVerdict v = validate(sigma, {opts.field, !full});
    IntPolynomial h_rhs, g_rhs;
    for (Face f : sigma.base().faces()) {
      const IntPolynomial l = local_h_at(sigma, f);
      h_rhs += l * IntPolynomial::one_plus_x_pow(d - f.size());
      g_rhs += local_gamma_at(sigma, f).polynomial();
    }
    bool vertex_union = true;
    for (Face e : k.faces()) {
      Face u;
      for (std::size_t x : e.members()) u = u | sigma.carrier(Face::singleton(x));
      if (u != sigma.carrier(e)) vertex_union = false;
    }
    const IntPolynomial h = h_polynomial(k);
    const IntPolynomial g = gamma_poly_or_zero(gamma_vector(k));
    const bool ok = v.is_homology_subdivision && v.is_vertex_induced && v.is_flag_subdivision && vertex_union &&
                    h == h_rhs && g == g_rhs;
    return verdict(ok, json{{"validate", io::to_json(v)}, {"vertex_union", vertex_union}, {"h", poly(h)},
                            {"h_rhs", poly(h_rhs)}, {"gamma", poly(g)}, {"gamma_rhs", poly(g_rhs)}});
  }
  if (name == "reciprocity") {
    if (!full) return skip("dimension above the full-homology limit");
    const HomologyClass c = classify(k, opts.field);
    if (!c.is_sphere(d - 1)) return fail(json{{"verdict", to_string(c.verdict)}, {"reason", c.reason}});
    if (!reciprocity_holds(k, c)) return fail(json{{"complex", "total"}});
    const SubdivisionVerdict v = validate(inst.sphere.trail, {opts.field, false});
    for (const auto& r : v.restrictions)
      if (!reciprocity_holds(r.complex, r.homology))
        return fail(json{{"restriction", inst.sphere.trail.base().key(r.base_face)}});
    return pass();
  }
  if (name == "lower-bound") {
    const IntPolynomial h = h_polynomial(k);
    return verdict(dominates(h, IntPolynomial::one_plus_x_pow(d)), json{{"h", poly(h)}});
  }
  if (name == "gamma-one") {
    if (d != 4 && d != 5) return skip("stated for d = 4 and d = 5 only");
    const GammaResult g = gamma_vector(k);
    const long long f0 = k.vertex_set().size();
    const bool ok = std::holds_alternative<GammaVector>(g) && std::get<GammaVector>(g).gammas.at(1) == f0 - 2 * d;
    return verdict(ok, json{{"gamma", gamma_json(g)}, {"f0", f0}});
  }
  if (name == "gamma2-links") {
    if (d != 5) return skip("stated for 4-dimensional spheres");
    const auto g2 = [](const SimplicialComplex& c) {
      auto r = gamma_vector(c);
      const auto& gs = std::get<GammaVector>(r).gammas;
      return gs.size() > 2 ? gs[2] : BigInt(0);
    };
    BigInt sum = 0;
    for (std::size_t v : k.vertex_set().members()) sum += g2(link(k, Face::singleton(v)));
    const BigInt lhs = 2 * g2(k);
    return verdict(lhs == sum, json{{"twice_gamma2", io::to_json(lhs)}, {"sum_link_gamma2", io::to_json(sum)}});
  }
  if (name == "field-agreement") {
    if (!full) return skip("dimension above the full-homology limit");
    const auto a = classify(k, FieldSpec::gf2()).verdict, b = classify(k, FieldSpec::rationals()).verdict;
    return verdict(a == b, json{{"gf2", to_string(a)}, {"q", to_string(b)}});
  }
  return skip("not applicable to spheres");
}

inline CheckOutcome run_pair_check(const std::string& name, const SubdivisionPair& inst, const SuiteOptions& opts) {
  (void)opts;
  if (name == "monotonicity") {
    const IntPolynomial a = gamma_poly_or_zero(gamma_vector(inst.coarse));
    const IntPolynomial b = gamma_poly_or_zero(gamma_vector(inst.refinement.total()));
    return verdict(dominates(b, a), json{{"gamma_coarse", poly(a)}, {"gamma_fine", poly(b)}});
  }
  if (name == "h-decomposition" || name == "gamma-decomposition") {
    Decomposition dec = check_h_decomposition(inst.refinement);
    if (name == "h-decomposition")
      return verdict(dec.lhs == dec.rhs, json{{"lhs", poly(dec.lhs)}, {"rhs", poly(dec.rhs)}});
    if (!dec.gamma_lhs) return skip("base not Eulerian");
    return verdict(dec.gamma_lhs == dec.gamma_rhs, json{{"lhs", poly(*dec.gamma_lhs)}, {"rhs", poly(*dec.gamma_rhs)}});
  }
  return skip("not applicable to subdivision pairs");
}

}  // namespace detail

/// Check name → tier. Open conjectures and questions are report-only.
inline const std::map<std::string, Tier>& check_registry() {
  static const std::map<std::string, Tier> registry{
      {"validate", Tier::Theorem},
      {"local-h-symmetry", Tier::Theorem},     // symmetry of ℓ for homology subdivisions
      {"local-h-nonneg", Tier::Theorem},       // nonnegativity on quasi-geometric subdivisions
      {"h-decomposition", Tier::Theorem},      // h(Δ′) = Σ ℓ_F h(link F)
      {"gamma-decomposition", Tier::Theorem},  // γ form over Eulerian bases
      {"locality", Tier::Theorem},
      {"edge-recursion", Tier::Theorem},
      {"xi-join", Tier::Theorem},
      {"xi-low-terms", Tier::Theorem},
      {"reciprocity", Tier::Theorem},
      {"ball-to-sphere", Tier::Theorem},
      {"sigma-map", Tier::Theorem},
      {"lower-bound", Tier::Theorem},
      {"gamma-one", Tier::Theorem},
      {"gamma2-links", Tier::Theorem},
      {"field-agreement", Tier::Conjecture},  // the field is arbitrary; disagreement is reported, not fatal
      {"gal", Tier::Conjecture},              // γ ≥ 0 for flag spheres; open in general
      {"local-gamma", Tier::Conjecture},      // ξ ≥ 0 for flag vertex-induced subdivisions
      {"monotonicity", Tier::Conjecture},     // γ(Δ′) ≥ γ(Δ); open beyond dimension 4
      {"unimodality", Tier::Conjecture},      // open question for vertex-induced subdivisions
      {"relative-symmetry", Tier::Conjecture},
      {"relative-nonneg", Tier::Conjecture},
      {"local-h-monotone", Tier::Conjecture},
  };
  return registry;
}

inline Tier tier_of(const std::string& check) {
  auto it = check_registry().find(check);
  if (it == check_registry().end()) throw Error(Errc::InvalidArgument, "unknown check '" + check + "'");
  return it->second;
}

inline const std::set<std::string>& sphere_checks() {
  static const std::set<std::string> s{"gal",       "h-decomposition", "gamma-decomposition", "sigma-map",      "reciprocity",
                                       "lower-bound", "gamma-one",     "gamma2-links",      "field-agreement"};
  return s;
}

inline const std::set<std::string>& pair_checks() {
  static const std::set<std::string> s{"monotonicity", "h-decomposition", "gamma-decomposition"};
  return s;
}

inline const std::set<std::string>& simplex_checks() {
  static const std::set<std::string> s = [] {
    std::set<std::string> out;
    for (const auto& [name, tier] : check_registry())
      if (!sphere_checks().count(name) && !pair_checks().count(name)) out.insert(name);
    out.insert({"h-decomposition", "reciprocity"});
    return out;
  }();
  return s;
}

/// Whether a check is meaningful for an instance kind; others are left out of its report.
inline bool applies(const std::string& check, const InstanceBody& body) {
  switch (body.index()) {
    case 0: return sphere_checks().count(check) > 0;
    case 1: return simplex_checks().count(check) > 0;
    default: return pair_checks().count(check) > 0;
  }
}

/// Which instance families a set of checks needs. Shared checks only pull in the
/// sphere family.
struct Families {
  bool spheres = false, simplices = false, pairs = false;
};

inline Families families_for(const std::vector<std::string>& checks) {
  Families f;
  for (const auto& c : checks) {
    tier_of(c);
    if (sphere_checks().count(c)) f.spheres = true;
    else if (c == "monotonicity") f.pairs = true;
    else f.simplices = true;
  }
  return f;
}

inline std::string recipe_of(const Instance& inst) {
  return std::visit(
      [](const auto& body) -> std::string {
        using T = std::decay_t<decltype(body)>;
        if constexpr (std::is_same_v<T, SphereInstance>) return "sphere " + body.spec.to_json().dump();
        else return body.recipe;
      },
      inst.body);
}

/// Evaluates every requested check on every instance. Failures are recorded, never thrown.
inline std::vector<ConjectureReport> run_conjecture_suite(const std::vector<Instance>& instances,
                                                          const std::vector<std::string>& checks,
                                                          const SuiteOptions& opts = {}) {
  for (const auto& c : checks) tier_of(c);
  std::vector<ConjectureReport> out;
  for (const auto& inst : instances) {
    ConjectureReport rep;
    rep.instance_id = inst.id;
    rep.recipe = recipe_of(inst);
    std::optional<detail::SimplexContext> ctx;
    if (const auto* s = std::get_if<SimplexSubdivision>(&inst.body)) {
      if (!is_simplex(s->map.base())) throw Error(Errc::MalformedInstance, inst.id + ": base is not a simplex");
      ctx.emplace(detail::SimplexContext{*s, opts, std::nullopt, std::nullopt});
    }
    for (const auto& check : checks) {
      if (!applies(check, inst.body)) continue;
      const auto t0 = std::chrono::steady_clock::now();
      CheckOutcome res;
      try {
        if (ctx) res = detail::run_simplex_check(check, *ctx);
        else if (const auto* sp = std::get_if<SphereInstance>(&inst.body)) res = detail::run_sphere_check(check, *sp, opts);
        else res = detail::run_pair_check(check, std::get<SubdivisionPair>(inst.body), opts);
      } catch (const Error& e) {
        res = detail::fail(json{{"error", e.what()}});
      }
      if (opts.timings)
        res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      rep.checks.emplace(check, std::move(res));
    }
    std::visit(
        [&rep](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, SphereInstance>) {
            rep.digests["f_vector"] = f_vector(body.sphere.complex).counts;
            rep.digests["gamma"] = detail::gamma_json(gamma_vector(body.sphere.complex));
          } else if constexpr (std::is_same_v<T, SimplexSubdivision>) {
            rep.digests["local_h"] = io::to_json(local_h(body.map));
            auto xi = gamma_from_symmetric(local_h(body.map), body.map.simplex_face().size());
            rep.digests["xi"] = detail::gamma_json(xi);
          } else {
            rep.digests["gamma_coarse"] = detail::gamma_json(gamma_vector(body.coarse));
            rep.digests["gamma_fine"] = detail::gamma_json(gamma_vector(body.refinement.total()));
          }
        },
        inst.body);
    out.push_back(std::move(rep));
  }
  return out;
}

struct CheckTally {
  Tier tier = Tier::Theorem;
  int pass = 0, fail = 0, skipped = 0;
};

inline std::map<std::string, CheckTally> summarize(const std::vector<ConjectureReport>& reports) {
  std::map<std::string, CheckTally> out;
  for (const auto& r : reports)
    for (const auto& [name, res] : r.checks) {
      auto& t = out[name];
      t.tier = tier_of(name);
      if (res.status == Status::Pass) ++t.pass;
      else if (res.status == Status::Fail) ++t.fail;
      else ++t.skipped;
    }
  return out;
}

inline bool theorem_tier_failed(const std::vector<ConjectureReport>& reports) {
  for (const auto& [name, t] : summarize(reports))
    if (t.tier == Tier::Theorem && t.fail > 0) return true;
  return false;
}

inline json report_json(const std::vector<ConjectureReport>& reports, const json& header) {
  json inst = json::array();
  for (const auto& r : reports) {
    json checks = json::object();
    for (const auto& [name, res] : r.checks) {
      json c{{"status", to_string(res.status)}, {"tier", to_string(tier_of(name))}};
      if (!res.witness.is_null()) c["witness"] = res.witness;
      if (res.millis > 0) c["millis"] = res.millis;
      checks[name] = c;
    }
    inst.push_back(json{{"id", r.instance_id}, {"recipe", r.recipe}, {"checks", checks}, {"digests", r.digests}});
  }
  json summary = json::object();
  for (const auto& [name, t] : summarize(reports))
    summary[name] = json{{"tier", to_string(t.tier)}, {"pass", t.pass}, {"fail", t.fail}, {"skipped", t.skipped}};
  return json{{"generator", header}, {"summary", summary}, {"instances", inst}};
}

inline std::string report_tsv(const std::vector<ConjectureReport>& reports) {
  std::ostringstream os;
  os << "check\ttier\tpass\tfail\tskipped\n";
  for (const auto& [name, t] : summarize(reports))
    os << name << '\t' << to_string(t.tier) << '\t' << t.pass << '\t' << t.fail << '\t' << t.skipped << '\n';
  return os.str();
}

struct SuiteSpec {
  std::vector<int> dims{2};
  int count = 10;
  int max_steps = 4;
  std::uint64_t seed = 1;
  std::vector<std::string> checks;

  json to_json() const {
    return json{{"rng", kRngName},      {"edge_choice", kEdgeRule}, {"seed", seed},
                {"count", count},       {"dims", dims},             {"max_steps", max_steps},
                {"checks", checks}};
  }
};

/// Deterministic instance list for a suite run: `count` instances per needed family,
/// cycling through `dims`.
inline std::vector<Instance> make_instances(const SuiteSpec& spec) {
  if (spec.dims.empty()) throw Error(Errc::InvalidArgument, "no dimensions given");
  const Families fam = families_for(spec.checks);
  std::vector<Instance> out;
  for (int i = 0; i < spec.count; ++i) {
    const std::uint64_t seed = mix_seed(spec.seed + static_cast<std::uint64_t>(i));
    Rng rng(seed);
    const int d = spec.dims[static_cast<std::size_t>(i) % spec.dims.size()];
    const int steps = static_cast<int>(rng.below(static_cast<std::size_t>(spec.max_steps + 1)));
    const std::string idx = std::to_string(i);
    if (fam.spheres) {
      GeneratorSpec g{d, steps, seed};
      out.push_back({"sphere-" + idx, SphereInstance{g, random_flag_sphere(g)}});
    }
    if (fam.simplices) {
      const auto family = static_cast<SimplexFamily>(i % 4);
      out.push_back({"simplex-" + idx, random_simplex_subdivision(family, d, steps, seed)});
    }
    if (fam.pairs) {
      const int fine = 1 + static_cast<int>(rng.below(static_cast<std::size_t>(spec.max_steps)));
      out.push_back({"pair-" + idx, random_pair(d, steps, fine, seed)});
    }
  }
  return out;
}

}  // namespace flagsub::harness
