#ifndef A4LINK_GROUP_HPP
#define A4LINK_GROUP_HPP

#include "a4link/errors.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace a4link {

/// Even permutation of {0,1,2,3} in one-line notation; composition is
/// right-to-left: (a*b)(i) = a(b(i)).
struct Perm {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    friend Perm operator*(const Perm& a, const Perm& b) {
        Perm r;
        for (int i = 0; i < 4; ++i) r.img[static_cast<size_t>(i)] = a.img[b.img[static_cast<size_t>(i)]];
        return r;
    }
    Perm inverse() const {
        Perm r;
        for (int i = 0; i < 4; ++i) r.img[img[static_cast<size_t>(i)]] = static_cast<uint8_t>(i);
        return r;
    }
    bool is_identity() const { return img == std::array<uint8_t, 4>{0, 1, 2, 3}; }
    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;
    std::string str() const; // cycle notation on {1,2,3,4}
};

/// Integer 3x3 matrix of the representation; always orthogonal with det +1.
struct RepMatrix {
    std::array<std::array<int, 3>, 3> m{};

    friend RepMatrix operator*(const RepMatrix& a, const RepMatrix& b) {
        RepMatrix r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                int s = 0;
                for (int k = 0; k < 3; ++k)
                    s += a.m[static_cast<size_t>(i)][static_cast<size_t>(k)] *
                         b.m[static_cast<size_t>(k)][static_cast<size_t>(j)];
                r.m[static_cast<size_t>(i)][static_cast<size_t>(j)] = s;
            }
        return r;
    }
    friend bool operator==(const RepMatrix&, const RepMatrix&) = default;
    static RepMatrix identity() { return RepMatrix{{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}}; }
    RepMatrix transpose() const;
    int det() const;
};

/// The alternating group A4 with its 3-dimensional integer representation.
/// Elements are enumerated canonically (lexicographic one-line order), so
/// indices, exports and tests are reproducible.
class A4 {
public:
    // Generates the group from s=(1,2,3), c1=(1,3,4), c2=(2,4,3), builds the
    // representation from the explicit generator matrices, and verifies the
    // homomorphism property on all 144 products plus orthogonality and the
    // printed matrices for rho(c1), rho(c2). Throws VerificationError on any
    // mismatch.
    static const A4& instance();

    static constexpr int order = 12;

    const std::vector<Perm>& elements() const { return elements_; }
    const RepMatrix& rho(int index) const { return rho_[static_cast<size_t>(index)]; }
    int index_of(const Perm& p) const;
    int mul(int a, int b) const { return mul_[static_cast<size_t>(a)][static_cast<size_t>(b)]; }
    int inv(int a) const { return inv_[static_cast<size_t>(a)]; }

    int s() const { return s_; }
    int c1() const { return c1_; }
    int c2() const { return c2_; }
    int identity() const { return id_; }

    // The four strut triangles: left cosets g<s> = {g, gs, gs^2}, each listed
    // starting from its lexicographically smallest element; triangles sorted
    // by that representative.
    std::array<std::array<int, 3>, 4> strut_triangles() const;

private:
    A4();
    std::vector<Perm> elements_;
    std::vector<RepMatrix> rho_;
    std::array<std::array<int, 12>, 12> mul_{};
    std::array<int, 12> inv_{};
    int s_ = -1, c1_ = -1, c2_ = -1, id_ = -1;
};

} // namespace a4link

#endif
