#include "a4link/group.hpp"

#include <algorithm>
#include <map>

namespace a4link {

std::string Perm::str() const {
    std::array<bool, 4> seen{};
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (seen[static_cast<size_t>(i)] || img[static_cast<size_t>(i)] == i) continue;
        out += "(";
        int j = i;
        bool first = true;
        while (!seen[static_cast<size_t>(j)]) {
            seen[static_cast<size_t>(j)] = true;
            if (!first) out += ",";
            out += std::to_string(j + 1);
            first = false;
            j = img[static_cast<size_t>(j)];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

RepMatrix RepMatrix::transpose() const {
    RepMatrix r;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
}

int RepMatrix::det() const {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

static Perm perm_from_cycle3(int a, int b, int c) {
    // cycle (a,b,c) on {1,2,3,4}, 1-based input
    Perm p;
    p.img[static_cast<size_t>(a - 1)] = static_cast<uint8_t>(b - 1);
    p.img[static_cast<size_t>(b - 1)] = static_cast<uint8_t>(c - 1);
    p.img[static_cast<size_t>(c - 1)] = static_cast<uint8_t>(a - 1);
    return p;
}

A4::A4() {
    const Perm s = perm_from_cycle3(1, 2, 3);
    const Perm g2{std::array<uint8_t, 4>{1, 0, 3, 2}}; // (1,2)(3,4)
    const Perm g3{std::array<uint8_t, 4>{2, 3, 0, 1}}; // (1,3)(2,4)
    const RepMatrix rho_s{{{{0, 1, 0}, {0, 0, -1}, {-1, 0, 0}}}};
    const RepMatrix rho_g2{{{{1, 0, 0}, {0, -1, 0}, {0, 0, -1}}}};
    const RepMatrix rho_g3{{{{-1, 0, 0}, {0, 1, 0}, {0, 0, -1}}}};

    // close under the generators, carrying matrices along
    std::map<Perm, RepMatrix> table{{Perm{}, RepMatrix::identity()}};
    bool grew = true;
    while (grew) {
        grew = false;
        auto snapshot = table;
        for (const auto& [p, mp] : snapshot) {
            for (const auto& [q, mq] : {std::pair{s, rho_s}, {g2, rho_g2}, {g3, rho_g3}}) {
                Perm r = p * q;
                if (!table.count(r)) {
                    table.emplace(r, mp * mq);
                    grew = true;
                }
            }
        }
    }
    if (table.size() != order) throw VerificationError("A4: generated group has wrong order");

    for (const auto& [p, m] : table) {
        elements_.push_back(p); // std::map iterates in lex one-line order
        rho_.push_back(m);
    }

    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b)
            mul_[static_cast<size_t>(a)][static_cast<size_t>(b)] =
                index_of(elements_[static_cast<size_t>(a)] * elements_[static_cast<size_t>(b)]);
        inv_[static_cast<size_t>(a)] = index_of(elements_[static_cast<size_t>(a)].inverse());
    }

    id_ = index_of(Perm{});
    s_ = index_of(s);
    c1_ = index_of(perm_from_cycle3(1, 3, 4));
    c2_ = index_of(perm_from_cycle3(2, 4, 3));

    // hard checks: homomorphism on all 144 products, orthogonality, det +1
    for (int a = 0; a < order; ++a) {
        const RepMatrix& ma = rho_[static_cast<size_t>(a)];
        if (!(ma * ma.transpose() == RepMatrix::identity()) || ma.det() != 1)
            throw VerificationError("A4: representation matrix not special orthogonal");
        for (int b = 0; b < order; ++b) {
            if (!(ma * rho_[static_cast<size_t>(b)] == rho_[static_cast<size_t>(mul(a, b))]))
                throw VerificationError("A4: homomorphism property failed");
        }
    }
    // the printed matrices for the cable generators
    const RepMatrix c1_expect{{{{0, -1, 0}, {0, 0, 1}, {-1, 0, 0}}}};
    const RepMatrix c2_expect{{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}};
    if (!(rho(c1_) == c1_expect) || !(rho(c2_) == c2_expect))
        throw VerificationError("A4: rho(c1)/rho(c2) do not match the expected matrices");
    if (!(index_of(perm_from_cycle3(1, 3, 4)) == mul(s_, index_of(g2))))
        throw VerificationError("A4: c1 != s*g2");
}

const A4& A4::instance() {
    static const A4 group;
    return group;
}

int A4::index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || !(*it == p)) throw DomainError("A4: permutation not in group");
    return static_cast<int>(it - elements_.begin());
}

std::array<std::array<int, 3>, 4> A4::strut_triangles() const {
    std::array<std::array<int, 3>, 4> tris{};
    std::array<bool, order> used{};
    size_t t = 0;
    for (int g = 0; g < order; ++g) {
        if (used[static_cast<size_t>(g)]) continue;
        int gs = mul(g, s_);
        int gss = mul(gs, s_);
        tris[t] = {g, gs, gss};
        used[static_cast<size_t>(g)] = used[static_cast<size_t>(gs)] = used[static_cast<size_t>(gss)] = true;
        ++t;
    }
    if (t != 4) throw VerificationError("A4: strut cosets do not partition into 4 triangles");
    return tris;
}

} // namespace a4link
