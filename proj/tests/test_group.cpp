#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcy/group.hpp"

using namespace qcy;

namespace {
const GroupTable& table() {
    static GroupTable T = GroupTable::build();
    return T;
}
} // namespace

TEST_CASE("canonicalization is idempotent and constant on Z-cosets") {
    Mono j = gen_J(), t = gen_T();
    Mono prod = j * t * j;
    Mono c = prod.canonical();
    CHECK(c == c.canonical());
    for (int k = 0; k < 4; ++k) CHECK(prod.times_i(k).canonical() == c);
}

TEST_CASE("generator sanity") {
    // U1 swaps Y2<->Y3 and X1<->X3 with unit scales; an involution.
    Mono u1 = gen_U1();
    CHECK(u1 * u1 == Mono::identity());
    CHECK(u1.entry(2, 3) == FieldScalar::one());
    CHECK(u1.entry(5, 7) == FieldScalar::one());

    // J^2 is the scalar sqrt2 * sqrt2/2 = 1 times a block-preserving map; here exactly 1.
    Mono j = gen_J();
    Mono j2 = j * j;
    CHECK(j2.is_scalar());
    CHECK(j2.scale[0].value() == FieldScalar::one());

    // T carries scales {1, -i}
    Mono t = gen_T();
    CHECK(t.entry(1, 1) == -FieldScalar::i());
}

TEST_CASE("group orders 24576 and 12288") {
    const GroupTable& T = table();
    CHECK(T.size() == 24576);
    std::size_t h = 0;
    for (uint32_t e = 0; e < T.size(); ++e) h += T.in_H[e];
    CHECK(h == 12288);
}

TEST_CASE("H contains the scalar subgroup Z as matrices") {
    // Closure of the H generators as honest matrices (no Z-quotient) has size
    // 4 * 12288 and contains i * identity.
    Mono u1 = gen_U1(), u2 = gen_U2(), t = gen_T(), j = gen_J();
    std::vector<Mono> gens = {u1 * u2, u1 * t, u2 * t, j};
    std::unordered_map<Mono, char, MonoHash> seen;
    std::vector<Mono> queue = {Mono::identity()};
    seen.emplace(Mono::identity(), 1);
    while (!queue.empty()) {
        Mono cur = queue.back();
        queue.pop_back();
        for (const Mono& g : gens) {
            Mono nxt = g * cur;
            if (seen.emplace(nxt, 1).second) queue.push_back(nxt);
        }
    }
    CHECK(seen.size() == 4 * 12288);
    CHECK(seen.count(Mono::identity().times_i(1)) == 1);
}

TEST_CASE("closure of the identity alone") {
    const GroupTable& T = table();
    Subgroup S = T.close({});
    CHECK(S.order() == 1);
}

TEST_CASE("ten conjugacy classes of involutions in Hbar") {
    const GroupTable& T = table();
    std::vector<uint32_t> involutions;
    for (uint32_t e : T.h_elements())
        if (e != T.id_idx && T.mul(e, e) == T.id_idx) involutions.push_back(e);
    ClassPartition P = partition_classes(T, involutions, T.gens_H);
    CHECK(P.reps.size() == 10);

    for (uint32_t rep : P.reps) CHECK(T.mul(rep, rep) == T.id_idx);
}

TEST_CASE("sigma2 has six conjugates in Hbar") {
    const GroupTable& T = table();
    // sigma2 = (Y0, -Y1, -Y2, Y3, X0, -X1, -X2, X3)
    Mono s2 = Mono::identity();
    for (int idx : {1, 2, 5, 6}) s2.scale[idx] = ScaleCode{2, 0};
    uint32_t g = T.require(s2);
    CHECK(T.in_H[g]);
    auto cls = T.conj_class(g, T.gens_H);
    CHECK(cls.size() == 6);

    // the listed conjugate (Y0,-Y1,Y2,-Y3,X0,X1,-X2,-X3) is among them
    Mono sA = Mono::identity();
    for (int idx : {1, 3, 6, 7}) sA.scale[idx] = ScaleCode{2, 0};
    uint32_t a = T.require(sA);
    CHECK(std::binary_search(cls.begin(), cls.end(), a));
}

TEST_CASE("conjugacy class of the identity") {
    const GroupTable& T = table();
    auto cls = T.conj_class(T.id_idx, T.gens_G);
    CHECK(cls == std::vector<uint32_t>{T.id_idx});
}

TEST_CASE("subgroup conjugacy basics") {
    const GroupTable& T = table();
    // sigma1 = (Y, -X): scales -1 on the X block
    Mono s1m = Mono::identity();
    for (int idx : {4, 5, 6, 7}) s1m.scale[idx] = ScaleCode{2, 0};
    Mono s2m = Mono::identity();
    for (int idx : {1, 2, 5, 6}) s2m.scale[idx] = ScaleCode{2, 0};
    uint32_t s1 = T.require(s1m), s2 = T.require(s2m);

    Subgroup A = T.close({s1}), B = T.close({s2});
    CHECK(A.order() == 2);
    CHECK(subgroups_conjugate(T, A, A, T.gens_H));
    CHECK_FALSE(subgroups_conjugate(T, A, B, T.gens_H));

    Subgroup C = T.conjugate(T.gens_H[1], B);
    CHECK(subgroups_conjugate(T, B, C, T.gens_H));
}
