#ifndef QCY_GROUP_HPP
#define QCY_GROUP_HPP

#include "qcy/mono.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace qcy {

// Closed set of canonical elements with generator list.
struct Subgroup {
    std::vector<uint32_t> gens;
    std::vector<uint32_t> elems;   // sorted ascending

    uint32_t order() const { return static_cast<uint32_t>(elems.size()); }
    bool contains(uint32_t e) const {
        auto it = std::lower_bound(elems.begin(), elems.end(), e);
        return it != elems.end() && *it == e;
    }
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
};

// The projective symmetry group interned as canonical Z-coset lifts.
// Index 0..|Gbar|-1 is the global element id used everywhere downstream.
class GroupTable {
public:
    static constexpr uint32_t npos = UINT32_MAX;

    std::vector<Mono> elts;
    std::vector<uint32_t> invtab;
    std::vector<uint8_t> in_H;
    uint32_t id_idx = 0;
    std::vector<uint32_t> gens_G;   // U1, U2, T, J
    std::vector<uint32_t> gens_H;   // U1U2, U1T, U2T, J

    static GroupTable build(std::size_t cap = 1000000);

    std::size_t size() const { return elts.size(); }
    uint32_t lookup(const Mono& m) const {
        auto it = index_.find(m.canonical());
        return it == index_.end() ? npos : it->second;
    }
    uint32_t require(const Mono& m) const {
        uint32_t r = lookup(m);
        QCY_CHECK(r != npos, "element does not belong to the symmetry group");
        return r;
    }

    uint32_t mul(uint32_t a, uint32_t b) const {
        auto it = index_.find((elts[a] * elts[b]).canonical());
        QCY_CHECK(it != index_.end(), "group not closed under product");
        return it->second;
    }
    uint32_t inv(uint32_t a) const { return invtab[a]; }
    uint32_t conj(uint32_t h, uint32_t g) const { return mul(mul(h, g), inv(h)); }

    int order_of(uint32_t g) const;

    // i-exponent c with [lift(a), lift(b)] = i^c, when a and b commute projectively.
    int commutator_i_exponent(uint32_t a, uint32_t b) const;

    Subgroup close(std::vector<uint32_t> gens, std::size_t cap = 1u << 20) const;
    Subgroup whole_H() const;

    std::vector<uint32_t> conj_class(uint32_t g, const std::vector<uint32_t>& ambient_gens) const;

    Subgroup conjugate(uint32_t h, const Subgroup& S) const;
    std::vector<uint32_t> centralizer_in(const std::vector<uint32_t>& ambient,
                                         const std::vector<uint32_t>& of) const;
    std::vector<uint32_t> normalizer_in(const std::vector<uint32_t>& ambient,
                                        const Subgroup& S) const;
    std::vector<uint32_t> h_elements() const;

private:
    std::unordered_map<Mono, uint32_t, MonoHash> index_;
    uint32_t intern(const Mono& canonical);
};

// Paper generators in the coordinate order (Y0..Y3, X0..X3).
Mono gen_U1();
Mono gen_U2();
Mono gen_T();
Mono gen_J();

// Conjugation-orbit partition of a subset of the table.
struct ClassPartition {
    std::vector<int> id;                          // per global element id, -1 if outside
    std::vector<uint32_t> reps;
    std::vector<std::vector<uint32_t>> members;   // sorted
};
ClassPartition partition_classes(const GroupTable& T, const std::vector<uint32_t>& subset,
                                 const std::vector<uint32_t>& ambient_gens);

// Registers whole conjugation orbits so repeated queries are O(1) lookups.
class SubgroupClassifier {
public:
    SubgroupClassifier(const GroupTable& T, std::vector<uint32_t> ambient_gens)
        : T_(T), ambient_gens_(std::move(ambient_gens)) {}

    int resolve(const Subgroup& S);     // class id, orbit registered on first contact
    int find(const Subgroup& S) const;  // -1 if unknown
    const std::vector<Subgroup>& reps() const { return reps_; }
    const std::vector<std::size_t>& orbit_sizes() const { return orbit_sizes_; }

private:
    const GroupTable& T_;
    std::vector<uint32_t> ambient_gens_;
    std::unordered_map<uint64_t, std::vector<std::pair<std::vector<uint32_t>, int>>> reg_;
    std::vector<Subgroup> reps_;
    std::vector<std::size_t> orbit_sizes_;

    static uint64_t key(const std::vector<uint32_t>& sorted);
};

bool subgroups_conjugate(const GroupTable& T, const Subgroup& A, const Subgroup& B,
                         const std::vector<uint32_t>& ambient_gens);

// All (Z/2Z)^m subgroups of Hbar up to conjugacy, trivial subgroup included.
std::vector<Subgroup> elementary_abelian_2_subgroups(const GroupTable& T,
                                                     std::size_t cap = 5000000);

} // namespace qcy

#endif
