#include "qcy/group.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace qcy {

namespace {

// Build a Mono from the "row spec" reading of a displayed transformation:
// the tuple entry at slot r says new coordinate r = coeff * old coordinate src.
Mono from_rows(const std::array<std::pair<int, ScaleCode>, 8>& rows) {
    Mono m;
    for (int r = 0; r < 8; ++r) {
        auto [src, s] = rows[r];
        m.perm[src] = static_cast<uint8_t>(r);
        m.scale[src] = s;
    }
    return m;
}

constexpr ScaleCode one{0, 0};
constexpr ScaleCode minus{2, 0};
constexpr ScaleCode plus_i{1, 0};
constexpr ScaleCode minus_i{3, 0};
constexpr ScaleCode rt2{0, 1};
constexpr ScaleCode rt2_half{0, -1};

} // namespace

Mono gen_U1() {
    return from_rows({{{0, one}, {1, one}, {3, one}, {2, one}, {4, one}, {7, one}, {6, one}, {5, one}}});
}
Mono gen_U2() {
    return from_rows({{{0, one}, {3, one}, {2, one}, {1, one}, {4, one}, {5, one}, {7, one}, {6, one}}});
}
Mono gen_T() {
    return from_rows({{{0, one}, {1, minus_i}, {2, one}, {3, minus_i}, {5, one}, {4, one}, {7, one}, {6, one}}});
}
Mono gen_J() {
    return from_rows({{{4, rt2}, {5, rt2}, {6, rt2}, {7, rt2}, {0, rt2_half}, {1, rt2_half}, {2, rt2_half}, {3, rt2_half}}});
}

uint32_t GroupTable::intern(const Mono& canonical) {
    auto [it, fresh] = index_.emplace(canonical, static_cast<uint32_t>(elts.size()));
    if (fresh) elts.push_back(canonical);
    return it->second;
}

GroupTable GroupTable::build(std::size_t cap) {
    GroupTable T;
    Mono u1 = gen_U1(), u2 = gen_U2(), t = gen_T(), j = gen_J();
    T.id_idx = T.intern(Mono::identity().canonical());

    std::vector<Mono> gens = {u1, u2, t, j};
    std::deque<uint32_t> queue = {T.id_idx};
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        for (const Mono& g : gens) {
            Mono prod = (g * T.elts[cur]).canonical();
            std::size_t before = T.elts.size();
            uint32_t idx = T.intern(prod);
            QCY_CHECK(T.elts.size() <= cap, "group closure exceeded cap");
            if (T.elts.size() != before) queue.push_back(idx);
        }
    }

    T.invtab.resize(T.elts.size());
    for (uint32_t e = 0; e < T.elts.size(); ++e) {
        uint32_t ie = T.lookup(T.elts[e].inverse());
        QCY_CHECK(ie != npos, "closure not inverse-closed");
        T.invtab[e] = ie;
    }

    T.gens_G = {T.require(u1), T.require(u2), T.require(t), T.require(j)};
    T.gens_H = {T.require(u1 * u2), T.require(u1 * t), T.require(u2 * t), T.require(j)};

    // mark the index-two subgroup
    T.in_H.assign(T.elts.size(), 0);
    std::deque<uint32_t> hq = {T.id_idx};
    T.in_H[T.id_idx] = 1;
    while (!hq.empty()) {
        uint32_t cur = hq.front();
        hq.pop_front();
        for (uint32_t g : T.gens_H) {
            uint32_t nxt = T.mul(g, cur);
            if (!T.in_H[nxt]) {
                T.in_H[nxt] = 1;
                hq.push_back(nxt);
            }
        }
    }
    return T;
}

int GroupTable::order_of(uint32_t g) const {
    uint32_t p = g;
    int n = 1;
    while (p != id_idx) {
        p = mul(p, g);
        ++n;
        QCY_CHECK(n <= 1 << 16, "order_of runaway");
    }
    return n;
}

int GroupTable::commutator_i_exponent(uint32_t a, uint32_t b) const {
    Mono c = elts[a] * elts[b] * elts[a].inverse() * elts[b].inverse();
    QCY_CHECK(c.is_scalar(), "commutator_i_exponent: elements do not commute projectively");
    ScaleCode s = c.scale[0];
    QCY_CHECK(s.m == 0, "commutator scalar not in Z");
    return s.k;
}

Subgroup GroupTable::close(std::vector<uint32_t> gens, std::size_t cap) const {
    std::unordered_set<uint32_t> seen = {id_idx};
    std::deque<uint32_t> queue = {id_idx};
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        for (uint32_t g : gens) {
            uint32_t nxt = mul(g, cur);
            if (seen.insert(nxt).second) {
                QCY_CHECK(seen.size() <= cap, "subgroup closure exceeded cap");
                queue.push_back(nxt);
            }
        }
    }
    Subgroup S;
    S.gens = std::move(gens);
    S.elems.assign(seen.begin(), seen.end());
    std::sort(S.elems.begin(), S.elems.end());
    return S;
}

Subgroup GroupTable::whole_H() const {
    Subgroup S;
    S.gens = gens_H;
    for (uint32_t e = 0; e < elts.size(); ++e)
        if (in_H[e]) S.elems.push_back(e);
    return S;
}

std::vector<uint32_t> GroupTable::h_elements() const {
    std::vector<uint32_t> r;
    for (uint32_t e = 0; e < elts.size(); ++e)
        if (in_H[e]) r.push_back(e);
    return r;
}

std::vector<uint32_t> GroupTable::conj_class(uint32_t g,
                                             const std::vector<uint32_t>& ambient_gens) const {
    std::unordered_set<uint32_t> seen = {g};
    std::deque<uint32_t> queue = {g};
    while (!queue.empty()) {
        uint32_t cur = queue.front();
        queue.pop_front();
        for (uint32_t s : ambient_gens) {
            uint32_t nxt = conj(s, cur);
            if (seen.insert(nxt).second) queue.push_back(nxt);
        }
    }
    std::vector<uint32_t> r(seen.begin(), seen.end());
    std::sort(r.begin(), r.end());
    return r;
}

Subgroup GroupTable::conjugate(uint32_t h, const Subgroup& S) const {
    Subgroup R;
    R.gens.reserve(S.gens.size());
    for (uint32_t g : S.gens) R.gens.push_back(conj(h, g));
    R.elems.reserve(S.elems.size());
    for (uint32_t e : S.elems) R.elems.push_back(conj(h, e));
    std::sort(R.elems.begin(), R.elems.end());
    return R;
}

std::vector<uint32_t> GroupTable::centralizer_in(const std::vector<uint32_t>& ambient,
                                                 const std::vector<uint32_t>& of) const {
    std::vector<uint32_t> r;
    for (uint32_t h : ambient) {
        bool ok = true;
        for (uint32_t g : of)
            if (mul(h, g) != mul(g, h)) {
                ok = false;
                break;
            }
        if (ok) r.push_back(h);
    }
    return r;
}

std::vector<uint32_t> GroupTable::normalizer_in(const std::vector<uint32_t>& ambient,
                                                const Subgroup& S) const {
    std::vector<uint32_t> r;
    for (uint32_t h : ambient) {
        bool ok = true;
        for (uint32_t g : S.gens)
            if (!S.contains(conj(h, g))) {
                ok = false;
                break;
            }
        if (ok) r.push_back(h);
    }
    return r;
}

ClassPartition partition_classes(const GroupTable& T, const std::vector<uint32_t>& subset,
                                 const std::vector<uint32_t>& ambient_gens) {
    ClassPartition P;
    P.id.assign(T.size(), -1);
    for (uint32_t e : subset) P.id[e] = -2;   // pending
    for (uint32_t e : subset) {
        if (P.id[e] != -2) continue;
        auto cls = T.conj_class(e, ambient_gens);
        int cid = static_cast<int>(P.reps.size());
        for (uint32_t x : cls) {
            QCY_CHECK(P.id[x] == -2, "class escapes the subset");
            P.id[x] = cid;
        }
        P.reps.push_back(cls.front());
        P.members.push_back(std::move(cls));
    }
    return P;
}

uint64_t SubgroupClassifier::key(const std::vector<uint32_t>& sorted) {
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : sorted) {
        h ^= v;
        h *= 1099511628211ull;
    }
    return h;
}

int SubgroupClassifier::find(const Subgroup& S) const {
    auto it = reg_.find(key(S.elems));
    if (it == reg_.end()) return -1;
    for (const auto& [elems, id] : it->second)
        if (elems == S.elems) return id;
    return -1;
}

int SubgroupClassifier::resolve(const Subgroup& S) {
    int known = find(S);
    if (known >= 0) return known;

    int cid = static_cast<int>(reps_.size());
    reps_.push_back(S);

    std::size_t orbit = 0;
    std::deque<std::vector<uint32_t>> queue = {S.elems};
    reg_[key(S.elems)].emplace_back(S.elems, cid);
    ++orbit;
    std::vector<uint32_t> img;
    while (!queue.empty()) {
        std::vector<uint32_t> cur = std::move(queue.front());
        queue.pop_front();
        for (uint32_t s : ambient_gens_) {
            img.clear();
            img.reserve(cur.size());
            for (uint32_t e : cur) img.push_back(T_.conj(s, e));
            std::sort(img.begin(), img.end());
            auto& bucket = reg_[key(img)];
            bool fresh = true;
            for (const auto& [elems, id] : bucket)
                if (elems == img) {
                    QCY_CHECK(id == cid, "conjugation orbit merged two classes");
                    fresh = false;
                    break;
                }
            if (fresh) {
                bucket.emplace_back(img, cid);
                ++orbit;
                queue.push_back(img);
            }
        }
    }
    orbit_sizes_.push_back(orbit);
    return cid;
}

bool subgroups_conjugate(const GroupTable& T, const Subgroup& A, const Subgroup& B,
                         const std::vector<uint32_t>& ambient_gens) {
    if (A.order() != B.order()) return false;
    if (A.elems == B.elems) return true;
    // orbit of A, early exit on B
    std::unordered_set<uint64_t> seen;
    auto keyfn = [](const std::vector<uint32_t>& v) {
        uint64_t h = 1469598103934665603ull;
        for (uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    };
    std::deque<std::vector<uint32_t>> queue = {A.elems};
    seen.insert(keyfn(A.elems));
    while (!queue.empty()) {
        auto cur = std::move(queue.front());
        queue.pop_front();
        for (uint32_t s : ambient_gens) {
            std::vector<uint32_t> img;
            img.reserve(cur.size());
            for (uint32_t e : cur) img.push_back(T.conj(s, e));
            std::sort(img.begin(), img.end());
            if (img == B.elems) return true;
            if (seen.insert(keyfn(img)).second) queue.push_back(std::move(img));
        }
    }
    return false;
}

std::vector<Subgroup> elementary_abelian_2_subgroups(const GroupTable& T, std::size_t cap) {
    std::vector<uint32_t> H = T.h_elements();
    std::vector<uint32_t> involutions;
    for (uint32_t e : H)
        if (e != T.id_idx && T.mul(e, e) == T.id_idx) involutions.push_back(e);

    SubgroupClassifier cls(T, T.gens_H);
    std::vector<Subgroup> out;

    Subgroup trivial;
    trivial.elems = {T.id_idx};
    cls.resolve(trivial);
    out.push_back(trivial);

    std::vector<Subgroup> layer;
    ClassPartition inv_classes = partition_classes(T, involutions, T.gens_H);
    for (uint32_t rep : inv_classes.reps) {
        Subgroup S;
        S.gens = {rep};
        S.elems = {T.id_idx, rep};
        if (rep < T.id_idx) std::swap(S.elems[0], S.elems[1]);
        cls.resolve(S);
        layer.push_back(S);
        out.push_back(S);
    }

    std::size_t touched = 0;
    while (!layer.empty()) {
        std::vector<Subgroup> next;
        for (const Subgroup& A : layer) {
            std::vector<uint32_t> cz = T.centralizer_in(H, A.gens);
            for (uint32_t tau : cz) {
                if (tau == T.id_idx || T.mul(tau, tau) != T.id_idx) continue;
                if (A.contains(tau)) continue;
                Subgroup B;
                B.gens = A.gens;
                B.gens.push_back(tau);
                B.elems.reserve(A.elems.size() * 2);
                for (uint32_t e : A.elems) {
                    B.elems.push_back(e);
                    B.elems.push_back(T.mul(e, tau));
                }
                std::sort(B.elems.begin(), B.elems.end());
                QCY_CHECK(B.elems.size() == A.elems.size() * 2, "extension not doubling");
                QCY_CHECK(++touched <= cap, "elementary abelian enumeration exceeded cap");
                int before = static_cast<int>(cls.reps().size());
                int id = cls.resolve(B);
                if (id >= before) {
                    next.push_back(B);
                    out.push_back(B);
                }
            }
        }
        layer = std::move(next);
    }
    return out;
}

} // namespace qcy
