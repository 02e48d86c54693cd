#ifndef A4LINK_GEOM_HPP
#define A4LINK_GEOM_HPP

#include "a4link/group.hpp"

#include <array>
#include <cmath>

namespace a4link {

template <class T>
struct Vec3 {
    T x{}, y{}, z{};

    friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(const T& c, const Vec3& v) { return {c * v.x, c * v.y, c * v.z}; }
    friend bool operator==(const Vec3&, const Vec3&) = default;

    friend T dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
    friend Vec3 cross(const Vec3& a, const Vec3& b) {
        return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
    }
    friend T norm2(const Vec3& a) { return dot(a, a); }
};

template <class T>
Vec3<T> apply(const RepMatrix& m, const Vec3<T>& v) {
    auto row = [&](size_t i) {
        return T(m.m[i][0]) * v.x + T(m.m[i][1]) * v.y + T(m.m[i][2]) * v.z;
    };
    return {row(0), row(1), row(2)};
}

inline double norm(const Vec3<double>& v) { return std::sqrt(norm2(v)); }

} // namespace a4link

#endif
