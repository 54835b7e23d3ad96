#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/variety.hpp"

using namespace qcy;

namespace {
const GroupTable& table() {
    static GroupTable T = GroupTable::build();
    return T;
}
const NodeTable& node_table() {
    static NodeTable N(table());
    return N;
}

ProjectivePoint smooth_sample() {
    // [0, sqrt2, 0, sqrt2, 1, i, 0, 0] lies on all four quadrics
    std::array<FieldScalar, 8> c{};
    c[1] = FieldScalar::sqrt2();
    c[3] = FieldScalar::sqrt2();
    c[4] = FieldScalar::one();
    c[5] = FieldScalar::i();
    return ProjectivePoint::make(std::move(c));
}
} // namespace

TEST_CASE("defining quadrics vanish at the standard node") {
    auto f = defining_quadrics();
    ProjectivePoint eta = standard_node();
    for (int k = 0; k < 4; ++k) CHECK(f[k].eval(eta.coords).is_zero());

    // Y0^2 at eta before canonical scaling is 2; after scaling by sqrt2 it is 1.
    std::array<FieldScalar, 8> raw{};
    raw[0] = FieldScalar::sqrt2();
    raw[2] = FieldScalar::sqrt2();
    raw[4] = FieldScalar::one();
    raw[5] = FieldScalar::one();
    SparsePolynomial y0sq = SparsePolynomial::variable(0) * SparsePolynomial::variable(0);
    CHECK(y0sq.eval(raw) == FieldScalar::integer(2));
}

TEST_CASE("evaluate on divisor seed generators at eta") {
    ProjectivePoint eta = standard_node();
    SparsePolynomial x2mx3 = SparsePolynomial::variable(6) - SparsePolynomial::variable(7);
    CHECK(x2mx3.eval(eta.coords).is_zero());
    SparsePolynomial q = SparsePolynomial::variable(4) * SparsePolynomial::variable(6) +
                         SparsePolynomial::variable(5) * SparsePolynomial::variable(7);
    CHECK(q.eval(eta.coords).is_zero());
}

TEST_CASE("jacobian rank detects nodes") {
    CHECK(jacobian_rank(standard_node()) == 3);
    ProjectivePoint p = smooth_sample();
    CHECK(on_variety(p));
    CHECK(node_table().find(p) == -1);
    CHECK(jacobian_rank(p) == 4);
}

TEST_CASE("node orbit: 96 nodes, stabilizer 256, ruling subgroup 128") {
    const NodeTable& N = node_table();
    CHECK(N.nodes().size() == 96);
    CHECK(N.stabilizer_eta().order() == 256);
    CHECK(N.ruling_subgroup_eta().order() == 128);

    int eta_id = N.find(standard_node());
    REQUIRE(eta_id >= 0);
    CHECK(N.node(eta_id).transporter == table().id_idx);

    // orbit-stabilizer
    CHECK(table().size() == 96u * 256u);

    // generator five of the ruling list is a member
    Mono g5 = Mono::identity();
    for (int idx : {1, 3}) g5.scale[idx] = ScaleCode{2, 0};
    CHECK(N.ruling_subgroup_eta().contains(table().require(g5)));

    // index two: normality comes free
    for (uint32_t s : N.stabilizer_eta().elems) {
        Subgroup conj = table().conjugate(s, N.ruling_subgroup_eta());
        CHECK(conj.elems == N.ruling_subgroup_eta().elems);
    }
}

TEST_CASE("preserves_ruling at eta") {
    const NodeTable& N = node_table();
    const GroupTable& T = table();
    int eta_id = N.find(standard_node());

    for (const Mono& m : ruling_generator_monos())
        CHECK(N.preserves_ruling(T.require(m), eta_id));
    CHECK(N.preserves_ruling(T.id_idx, eta_id));

    int outside = 0;
    for (uint32_t s : N.stabilizer_eta().elems)
        if (!N.preserves_ruling(s, eta_id)) ++outside;
    CHECK(outside == 128);
}

TEST_CASE("ruling sign independent of transporter choice") {
    const NodeTable& N = node_table();
    const GroupTable& T = table();
    // pick an element g and node a with g a = a; conjugating the transporter by a
    // ruling element must not change the sign
    int eta_id = N.find(standard_node());
    uint32_t sA = N.sigmaA();
    CHECK(N.act(sA, eta_id) == eta_id);
    int s = N.ruling_sign(sA, eta_id);
    CHECK(s == 1);
    // spot-check equivariance of the action
    for (uint32_t g : T.gens_G) {
        int img = N.act(g, eta_id);
        CHECK(N.node(img).point == N.node(eta_id).point.apply(T.elts[g]));
    }
}

TEST_CASE("node classes for the trivial group and sigma2") {
    const NodeTable& N = node_table();
    const GroupTable& T = table();

    Subgroup trivial = T.close({});
    auto [A0, B0] = N.node_classes(trivial);
    CHECK(A0.empty());
    CHECK(B0.size() == 96);

    Subgroup s2 = T.close({T.require(sigma2_mono())});
    auto [A2, B2] = N.node_classes(s2);
    CHECK(B2.size() == 96);
    CHECK(A2.size() == 16);   // sigma2 fixes 16 nodes and sits in the class-A conjugacy class
}

TEST_CASE("sigmaA is the product of ruling generators five and six") {
    auto gens = ruling_generator_monos();
    CHECK((gens[4] * gens[5]).canonical() == sigmaA_mono().canonical());
}
