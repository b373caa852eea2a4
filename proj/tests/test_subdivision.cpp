#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace flagsub;
using namespace testsupport;
using flagsub::harness::random_simplex_subdivision;
using flagsub::harness::SimplexFamily;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::InvalidArgument;
}

IntPolynomial x_range(int lo, int hi) {
  IntPolynomial out;
  for (int i = lo; i <= hi; ++i) out += IntPolynomial::monomial(static_cast<std::size_t>(i));
  return out;
}

// Number of chains F1 ⊂ … ⊂ Fk of nonempty subsets of an n-set, for every k.
std::vector<long long> chain_counts(int n) {
  const std::uint64_t full = (std::uint64_t{1} << n);
  // ending[k][S]: chains of length k whose largest set is S
  std::vector<std::vector<long long>> ending(static_cast<std::size_t>(n + 1), std::vector<long long>(full, 0));
  for (std::uint64_t s = 1; s < full; ++s) ending[1][s] = 1;
  for (int k = 2; k <= n; ++k)
    for (std::uint64_t s = 1; s < full; ++s)
      for (std::uint64_t t = (s - 1) & s; t != 0; t = (t - 1) & s) ending[static_cast<std::size_t>(k)][s] += ending[static_cast<std::size_t>(k - 1)][t];
  std::vector<long long> out{1};
  for (int k = 1; k <= n; ++k) {
    long long total = 0;
    for (std::uint64_t s = 1; s < full; ++s) total += ending[static_cast<std::size_t>(k)][s];
    out.push_back(total);
  }
  return out;
}

}  // namespace

TEST_CASE("carrier maps are checked on construction") {
  const auto base = simplex({"a", "b"});
  const auto total = SimplicialComplex::from_facets({"a", "b", "m"}, {{"a", "m"}, {"m", "b"}});
  CHECK(code_of([&] {
          SubdivisionMap(total, base, [](Face e) { return e.contains(2) ? Face(7) : e; });
        }) == Errc::InvalidCarrier);
  CHECK(code_of([&] {
          SubdivisionMap(total, base, [](Face e) { return e.contains(2) ? Face{} : e; });
        }) == Errc::InvalidCarrier);
  CHECK(code_of([&] {
          SubdivisionMap(total, simplex({"a", "b", "c"}), [](Face e) { return e.contains(2) ? Face(3) : e; });
        }) == Errc::InvalidCarrier);
  const SubdivisionMap ok(total, base, [](Face e) { return e.contains(2) ? Face(3) : e; });
  CHECK(validate(ok).is_homology_subdivision);
  CHECK(local_h(ok) == IntPolynomial{0, 1});
}

TEST_CASE("trivial subdivisions have vanishing local invariants") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto s = trivial_subdivision(simplex(labels(n)));
    CHECK(local_h(s).is_zero());
    for (const auto& g : local_gamma(s).gammas) CHECK(g == 0);
  }
  const auto empty = trivial_subdivision(SimplicialComplex{});
  CHECK(local_h(empty) == IntPolynomial{1});
  CHECK(local_gamma(empty).gammas == std::vector<BigInt>{1});
}

TEST_CASE("stellar subdivision on the whole simplex") {
  for (int d = 2; d <= 6; ++d) {
    const auto v = simplex(labels(static_cast<std::size_t>(d)));
    const auto s = stellar_subdivision(v, v.ground());
    CHECK(local_h(s) == x_range(1, d - 1));
    CHECK(interior_stats(s).f0_interior == 1);
  }
  const auto s4 = stellar_subdivision(simplex(labels(4)), Face::range(4));
  CHECK(local_gamma(s4).polynomial() == IntPolynomial{0, 1, -1});
}

TEST_CASE("stellar errors") {
  const auto v = simplex({"a", "b", "c"});
  CHECK(code_of([&] { stellar_subdivision(v, Face::singleton(7)); }) == Errc::NotAFace);
  CHECK(code_of([&] { stellar_subdivision(v, Face(3), "a"); }) == Errc::VertexCollision);
  CHECK(code_of([&] { edge_subdivision(v, Face(7)); }) == Errc::InvalidArgument);
  CHECK(code_of([&] { trivial_subdivision(cross_polytope(2)).simplex_face(); }) == Errc::BaseNotSimplex);
}

TEST_CASE("barycentric subdivision is the order complex") {
  CHECK(local_h(barycentric_subdivision(labels(3))) == IntPolynomial{0, 1, 1});
  CHECK(local_h(barycentric_subdivision(labels(4))) == IntPolynomial{0, 1, 7, 1});
  CHECK(local_gamma(barycentric_subdivision(labels(4))).polynomial() == IntPolynomial{0, 1, 5});
  for (int n = 1; n <= 5; ++n) {
    const auto s = barycentric_subdivision(labels(static_cast<std::size_t>(n)));
    CHECK(f_vector(s.total()).counts == chain_counts(n));
    for (Face e : s.total().faces()) {
      // vertex carriers form a chain whose top is the carrier of the face
      Face top;
      for (std::size_t a : e.members())
        for (std::size_t b : e.members()) {
          const Face ca = s.carrier(Face::singleton(a)), cb = s.carrier(Face::singleton(b));
          CHECK((ca.subset_of(cb) || cb.subset_of(ca)));
        }
      for (std::size_t a : e.members()) top = top | s.carrier(Face::singleton(a));
      CHECK(top == s.carrier(e));
    }
    CHECK(is_flag(s.total()));
  }
}

TEST_CASE("quasi-geometric criterion matches the quantifier definition") {
  // No face E has all vertex carriers inside a base face of dimension < dim E.
  auto literal = [](const SubdivisionMap& s) {
    for (Face e : s.total().faces())
      for (Face g : s.base().faces()) {
        if (g.size() >= e.size()) continue;
        bool inside = true;
        for (std::size_t v : e.members())
          if (!s.carrier(Face::singleton(v)).subset_of(g)) inside = false;
        if (inside) return false;
      }
    return true;
  };
  std::vector<SubdivisionMap> cases;
  for (const auto& name : fixture_names()) cases.push_back(example_fixture(name));
  for (std::uint64_t seed = 0; seed < 30; ++seed)
    cases.push_back(random_simplex_subdivision(static_cast<SimplexFamily>(seed % 4), 2 + static_cast<int>(seed % 3), 3, seed).map);
  for (const auto& s : cases) CHECK(validate(s, {FieldSpec::gf2(), true}).is_quasi_geometric == literal(s));
}

TEST_CASE("vertex-induced means restrictions are induced subcomplexes") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_simplex_subdivision(static_cast<SimplexFamily>(seed % 4), 3, 3, seed).map;
    bool induced = true;
    for (Face f : s.base().faces()) {
      const FaceList faces = s.restricted_faces(f);
      Face verts;
      for (Face e : faces) verts = verts | e;
      FaceList ind;
      for (Face e : s.total().faces())
        if (e.subset_of(verts)) ind.push_back(e);
      if (ind != faces) induced = false;
    }
    CHECK(validate(s).is_vertex_induced == induced);
  }
}

TEST_CASE("fixture invariants") {
  CHECK(local_h(example_fixture("ex-2.3a")) == IntPolynomial{0, 0, -1});
  CHECK(local_h(example_fixture("ex-2.3b")) == IntPolynomial{0, 1, 0, 1});
  CHECK(local_gamma(example_fixture("ex-2.3b")).polynomial() == IntPolynomial{0, 1, -2});
  CHECK(local_h(example_fixture("ex-2.3c")) == IntPolynomial{0, 1, 0, 1});

  const auto a = validate(example_fixture("ex-2.3a"));
  CHECK(a.is_homology_subdivision);
  CHECK_FALSE(a.is_quasi_geometric);
  for (const char* name : {"ex-2.3b", "ex-2.3c"}) {
    const auto v = validate(example_fixture(name));
    CHECK(v.is_homology_subdivision);
    CHECK(v.is_quasi_geometric);
    CHECK_FALSE(v.is_vertex_induced);
  }
  CHECK(is_flag(example_fixture("ex-2.3c").total()));
  CHECK_FALSE(is_flag(example_fixture("ex-2.3b").total()));
  CHECK_FALSE(validate(example_fixture("ex-2.3c")).is_flag_subdivision);
  CHECK(code_of([] { example_fixture("nope"); }) == Errc::UnknownFixture);
}

TEST_CASE("a non-subdivision fails validation") {
  // a circle declared as a subdivision of an edge
  const auto total = SimplicialComplex::from_facets({"a", "b", "m"}, {{"a", "m"}, {"m", "b"}, {"a", "b"}});
  const SubdivisionMap s(total, simplex({"a", "b"}), [](Face e) { return e.contains(2) ? Face(3) : e; });
  const auto v = validate(s);
  CHECK_FALSE(v.is_homology_subdivision);
  CHECK_FALSE(v.failures.empty());
  CHECK_FALSE(validate(s, {FieldSpec::gf2(), true}).is_homology_subdivision);
  CHECK(code_of([&] { check_h_decomposition(s); }) == Errc::NotHomologySubdivision);
}

TEST_CASE("random simplex subdivisions satisfy the structural identities") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int d = 1 + static_cast<int>(seed % 4);
    const auto inst = random_simplex_subdivision(static_cast<SimplexFamily>(seed % 4), d, 1 + static_cast<int>(seed % 5), seed);
    const auto& s = inst.map;
    const auto v = validate(s);
    REQUIRE(v.is_homology_subdivision);
    CHECK(v.is_quasi_geometric);  // stellar moves are geometric
    const IntPolynomial l = local_h(s);
    CHECK(l.reversed(d) == l);
    CHECK(l.nonnegative());
    CHECK(relative_local_h(s, Face{}) == l);
    const Decomposition dec = check_h_decomposition(s, true);
    CHECK(dec.lhs == dec.rhs);
    for (std::size_t i = 0; i < inst.steps.size(); ++i)
      CHECK(local_h(inst.prefixes[i + 1]) == local_h(inst.prefixes[i]) + relative_local_h(inst.prefixes[i], inst.edges[i]).shifted(1));
  }
}

TEST_CASE("locality of the local h-polynomial") {
  const auto inst = random_simplex_subdivision(SimplexFamily::EdgeTrail, 3, 4, 5);
  SubdivisionMap inner = inst.steps[2];
  inner = compose(inner, inst.steps[3]);
  const auto [lhs, rhs] = check_locality(inst.prefixes[2], inner);
  CHECK(lhs == rhs);
  CHECK(code_of([&] { compose(inst.steps[0], inst.steps[2]); }) == Errc::BaseMismatch);
}

TEST_CASE("joins multiply local invariants") {
  const auto a = stellar_subdivision(simplex({"a", "b"}), Face(3));
  const auto b = barycentric_subdivision({"p", "q", "r"});
  const auto j = join_subdivision(a, b);
  CHECK(local_h(j) == local_h(a) * local_h(b));
  CHECK(local_gamma(j).polynomial() == local_gamma(a).polynomial() * local_gamma(b).polynomial());
  CHECK(validate(j).is_homology_subdivision);
}

TEST_CASE("links of vertex-induced subdivisions") {
  const auto inst = random_simplex_subdivision(SimplexFamily::EdgeTrail, 4, 4, 12);
  const auto lk = link_subdivision(inst.map, {"a"});
  CHECK(lk.base() == simplex({"b", "c", "d"}));
  const auto v = validate(lk);
  CHECK(v.is_homology_subdivision);
  CHECK(v.is_vertex_induced == true);
  CHECK(v.is_flag_subdivision);
  const auto bary = barycentric_subdivision({"a", "b", "c"});
  CHECK(code_of([&] { link_subdivision(bary, {"b{a.b.c}"}); }) == Errc::UnknownVertex);
}

TEST_CASE("restriction to a face") {
  const auto s = barycentric_subdivision({"a", "b", "c"});
  const auto r = restriction(s, s.base().face_of({"a", "b"}));
  CHECK(r.base() == simplex({"a", "b"}));
  CHECK(f_vector(r.total()).counts == std::vector<long long>{1, 3, 2});
}
