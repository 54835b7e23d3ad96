#ifndef QCY_VARIETY_HPP
#define QCY_VARIETY_HPP

#include "qcy/group.hpp"
#include "qcy/poly8.hpp"

#include <array>
#include <optional>
#include <vector>

namespace qcy {

// Point of P^7 scaled so that the first nonzero coordinate is 1.
struct ProjectivePoint {
    std::array<FieldScalar, 8> coords{};

    static ProjectivePoint make(std::array<FieldScalar, 8> raw) {
        ProjectivePoint p;
        p.coords = std::move(raw);
        p.canonicalize();
        return p;
    }
    void canonicalize() {
        for (auto& v : coords)
            if (!v.is_zero()) {
                FieldScalar inv = v.inverse();
                for (auto& w : coords) w = w * inv;
                return;
            }
        QCY_CHECK(false, "zero projective point");
    }
    ProjectivePoint apply(const Mono& M) const {
        std::array<FieldScalar, 8> out{};
        for (int j = 0; j < 8; ++j) out[M.perm[j]] = M.scale[j].value() * coords[j];
        return make(std::move(out));
    }
    bool operator==(const ProjectivePoint& o) const { return coords == o.coords; }
    bool operator<(const ProjectivePoint& o) const {
        for (int k = 0; k < 8; ++k) {
            int c = coords[k].compare(o.coords[k]);
            if (c) return c < 0;
        }
        return false;
    }
    std::size_t hash() const {
        std::size_t h = 0;
        for (const auto& v : coords) h = hash_combine(h, v.hash());
        return h;
    }
};

struct ProjectivePointHash {
    std::size_t operator()(const ProjectivePoint& p) const { return p.hash(); }
};

// The four defining quadrics Yk^2 - (sign pattern) sum Xj^2.
std::array<SparsePolynomial, 4> defining_quadrics();

// +1/-1 sign matrix of the X-part per quadric row.
extern const int quadric_signs[4][4];

ProjectivePoint standard_node();

int jacobian_rank(const ProjectivePoint& p);
bool on_variety(const ProjectivePoint& p);

struct Node {
    int id = -1;
    ProjectivePoint point;
    uint32_t transporter = 0;   // g with g(eta) = point
};

class NodeTable {
public:
    explicit NodeTable(const GroupTable& T);

    const GroupTable& group() const { return *T_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const Node& node(int id) const { return nodes_[id]; }
    int find(const ProjectivePoint& p) const;   // -1 if not a node
    int act(uint32_t g, int id) const;          // node permutation action

    const Subgroup& stabilizer_eta() const { return stab_eta_; }      // order 256 in Gbar
    const Subgroup& ruling_subgroup_eta() const { return ruling_; }   // order 128

    bool preserves_ruling(uint32_t g, int node_id) const;
    // +1 if the comparison element at this node preserves rulings, else -1
    int ruling_sign(uint32_t g, int node_id) const;

    std::vector<uint32_t> stabilizer_in(const std::vector<uint32_t>& subgroup_elems,
                                        int node_id) const;

    // class-A test data: the Gbar conjugacy class of the distinguished involution
    const std::vector<uint32_t>& classA_involutions(bool ambient_G = true) const {
        return ambient_G ? classA_G_ : classA_H_;
    }
    uint32_t sigmaA() const { return sigmaA_; }

    // (A, B) node id sets for a subgroup of Hbar; stabilizers taken inside G.
    std::pair<std::vector<int>, std::vector<int>> node_classes(const Subgroup& G,
                                                               bool ambient_G = true) const;

private:
    const GroupTable* T_;
    std::vector<Node> nodes_;
    std::unordered_map<ProjectivePoint, int, ProjectivePointHash> lookup_;
    Subgroup stab_eta_;
    Subgroup ruling_;
    uint32_t sigmaA_ = 0;
    std::vector<uint32_t> classA_G_, classA_H_;
    std::vector<std::vector<int>> act_cache_;   // lazy per-generator? full per-element map
    mutable std::unordered_map<uint32_t, std::vector<int>> act_map_;
};

// The seven transformations of the ruling-preserving stabilizer generators at eta.
std::vector<Mono> ruling_generator_monos();

Mono sigmaA_mono();
Mono sigma1_mono();
Mono sigma2_mono();

} // namespace qcy

#endif
