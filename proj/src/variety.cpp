#include "qcy/variety.hpp"

#include "qcy/linalg.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace qcy {

const int quadric_signs[4][4] = {
    {1, 1, 1, 1},
    {1, -1, 1, -1},
    {1, 1, -1, -1},
    {1, -1, -1, 1},
};

std::array<SparsePolynomial, 4> defining_quadrics() {
    std::array<SparsePolynomial, 4> f;
    for (int k = 0; k < 4; ++k) {
        SparsePolynomial yk = SparsePolynomial::variable(k);
        SparsePolynomial q = yk * yk;
        for (int j = 0; j < 4; ++j) {
            SparsePolynomial xj = SparsePolynomial::variable(4 + j);
            q = q - (xj * xj).scaled(FieldScalar::integer(quadric_signs[k][j]));
        }
        f[k] = std::move(q);
    }
    return f;
}

ProjectivePoint standard_node() {
    std::array<FieldScalar, 8> c{};
    c[0] = FieldScalar::sqrt2();
    c[2] = FieldScalar::sqrt2();
    c[4] = FieldScalar::one();
    c[5] = FieldScalar::one();
    return ProjectivePoint::make(std::move(c));
}

bool on_variety(const ProjectivePoint& p) {
    for (const auto& f : defining_quadrics())
        if (!f.eval(p.coords).is_zero()) return false;
    return true;
}

int jacobian_rank(const ProjectivePoint& p) {
    QCY_CHECK(on_variety(p), "jacobian_rank: point not on the variety");
    static const auto quadrics = defining_quadrics();
    Matrix<FieldScalar> jac(4, std::vector<FieldScalar>(8));
    for (int k = 0; k < 4; ++k)
        for (int j = 0; j < 8; ++j) jac[k][j] = quadrics[k].partial(j).eval(p.coords);
    return rank(jac);
}

std::vector<Mono> ruling_generator_monos() {
    auto from_rows = [](std::array<std::pair<int, ScaleCode>, 8> rows) {
        Mono m;
        for (int r = 0; r < 8; ++r) {
            m.perm[rows[r].first] = static_cast<uint8_t>(r);
            m.scale[rows[r].first] = rows[r].second;
        }
        return m;
    };
    const ScaleCode one{0, 0}, minus{2, 0}, pi{1, 0}, mi{3, 0}, two{0, 2};
    std::vector<Mono> g;
    g.push_back(from_rows({{{0, one}, {3, one}, {2, one}, {1, one}, {4, one}, {5, one}, {7, one}, {6, one}}}));
    g.push_back(from_rows({{{0, one}, {1, pi}, {2, one}, {3, pi}, {5, one}, {4, one}, {7, one}, {6, one}}}));
    g.push_back(from_rows({{{2, one}, {3, one}, {0, one}, {1, one}, {4, one}, {5, one}, {6, mi}, {7, mi}}}));
    g.push_back(from_rows({{{0, one}, {1, one}, {2, one}, {3, minus}, {4, one}, {5, one}, {6, one}, {7, minus}}}));
    g.push_back(from_rows({{{0, one}, {1, minus}, {2, one}, {3, minus}, {4, one}, {5, one}, {6, one}, {7, one}}}));
    g.push_back(from_rows({{{0, one}, {1, one}, {2, one}, {3, one}, {4, one}, {5, one}, {6, minus}, {7, minus}}}));
    g.push_back(from_rows({{{4, two}, {6, two}, {5, two}, {7, two}, {0, one}, {2, one}, {1, one}, {3, one}}}));
    return g;
}

Mono sigmaA_mono() {
    Mono m = Mono::identity();
    for (int idx : {1, 3, 6, 7}) m.scale[idx] = ScaleCode{2, 0};
    return m;
}
Mono sigma1_mono() {
    Mono m = Mono::identity();
    for (int idx : {4, 5, 6, 7}) m.scale[idx] = ScaleCode{2, 0};
    return m;
}
Mono sigma2_mono() {
    Mono m = Mono::identity();
    for (int idx : {1, 2, 5, 6}) m.scale[idx] = ScaleCode{2, 0};
    return m;
}

NodeTable::NodeTable(const GroupTable& T) : T_(&T) {
    ProjectivePoint eta = standard_node();

    // orbit with transporters
    std::unordered_map<ProjectivePoint, uint32_t, ProjectivePointHash> orbit;
    std::deque<ProjectivePoint> queue;
    orbit.emplace(eta, T.id_idx);
    queue.push_back(eta);
    while (!queue.empty()) {
        ProjectivePoint cur = queue.front();
        queue.pop_front();
        uint32_t t = orbit.at(cur);
        for (uint32_t g : T.gens_G) {
            ProjectivePoint img = cur.apply(T.elts[g]);
            if (orbit.emplace(img, T.mul(g, t)).second) queue.push_back(img);
        }
    }
    QCY_CHECK(orbit.size() == 96, "node orbit size is not 96");

    std::vector<ProjectivePoint> pts;
    pts.reserve(orbit.size());
    for (const auto& [p, t] : orbit) pts.push_back(p);
    std::sort(pts.begin(), pts.end());
    nodes_.resize(pts.size());
    for (std::size_t k = 0; k < pts.size(); ++k) {
        nodes_[k].id = static_cast<int>(k);
        nodes_[k].point = pts[k];
        nodes_[k].transporter = orbit.at(pts[k]);
        lookup_.emplace(pts[k], static_cast<int>(k));
        QCY_CHECK(jacobian_rank(pts[k]) == 3, "node with Jacobian rank != 3");
    }

    // stabilizer of eta in Gbar
    std::vector<uint32_t> stab;
    for (uint32_t e = 0; e < T.size(); ++e)
        if (eta.apply(T.elts[e]) == eta) stab.push_back(e);
    QCY_CHECK(stab.size() == 256, "stabilizer of the standard node is not 256");
    stab_eta_.elems = std::move(stab);
    std::sort(stab_eta_.elems.begin(), stab_eta_.elems.end());

    std::vector<uint32_t> rgens;
    for (const Mono& m : ruling_generator_monos()) rgens.push_back(T.require(m));
    ruling_ = T.close(rgens);
    QCY_CHECK(ruling_.order() == 128, "ruling subgroup order is not 128");
    for (uint32_t e : ruling_.elems)
        QCY_CHECK(stab_eta_.contains(e), "ruling subgroup not inside the stabilizer");

    sigmaA_ = T.require(sigmaA_mono());
    QCY_CHECK(ruling_.contains(sigmaA_), "distinguished involution not ruling-preserving");
    classA_G_ = T.conj_class(sigmaA_, T.gens_G);
    classA_H_ = T.conj_class(sigmaA_, T.gens_H);
}

int NodeTable::find(const ProjectivePoint& p) const {
    auto it = lookup_.find(p);
    return it == lookup_.end() ? -1 : it->second;
}

int NodeTable::act(uint32_t g, int id) const {
    auto it = act_map_.find(g);
    if (it == act_map_.end()) {
        std::vector<int> perm(nodes_.size());
        for (const Node& n : nodes_) {
            int img = find(n.point.apply(T_->elts[g]));
            QCY_CHECK(img >= 0, "group element does not permute the nodes");
            perm[n.id] = img;
        }
        it = act_map_.emplace(g, std::move(perm)).first;
    }
    return it->second[id];
}

bool NodeTable::preserves_ruling(uint32_t g, int node_id) const {
    QCY_CHECK(act(g, node_id) == node_id, "preserves_ruling: element does not stabilize the node");
    return ruling_sign(g, node_id) > 0;
}

int NodeTable::ruling_sign(uint32_t g, int node_id) const {
    const GroupTable& T = *T_;
    uint32_t ta = nodes_[node_id].transporter;
    uint32_t tga = nodes_[act(g, node_id)].transporter;
    uint32_t c = T.mul(T.mul(T.inv(tga), g), ta);
    QCY_CHECK(stab_eta_.contains(c), "ruling_sign: comparison element not in the stabilizer");
    return ruling_.contains(c) ? 1 : -1;
}

std::vector<uint32_t> NodeTable::stabilizer_in(const std::vector<uint32_t>& subgroup_elems,
                                               int node_id) const {
    std::vector<uint32_t> r;
    for (uint32_t g : subgroup_elems)
        if (act(g, node_id) == node_id) r.push_back(g);
    return r;
}

std::pair<std::vector<int>, std::vector<int>> NodeTable::node_classes(const Subgroup& G,
                                                                      bool ambient_G) const {
    const std::vector<uint32_t>& clsA = classA_involutions(ambient_G);
    std::vector<int> A, B;
    for (const Node& n : nodes_) {
        bool inA = false, inB = true;
        for (uint32_t g : G.elems) {
            if (g == T_->id_idx || act(g, n.id) != n.id) continue;
            if (std::binary_search(clsA.begin(), clsA.end(), g)) inA = true;
            if (ruling_sign(g, n.id) < 0) inB = false;
        }
        if (inA) A.push_back(n.id);
        if (inB) B.push_back(n.id);
    }
    return {A, B};
}

std::string SparsePolynomial::str() const {
    static const char* names[8] = {"Y0", "Y1", "Y2", "Y3", "X0", "X1", "X2", "X3"};
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (int k = 0; k < 8; ++k)
            for (int p = 0; p < e[k]; ++p) out << "*" << names[k];
    }
    return out.str();
}

bool SparsePolynomial::operator<(const SparsePolynomial& o) const {
    auto it = terms.begin();
    auto jt = o.terms.begin();
    for (; it != terms.end() && jt != o.terms.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        int c = it->second.compare(jt->second);
        if (c) return c < 0;
    }
    return jt != o.terms.end();
}

} // namespace qcy
