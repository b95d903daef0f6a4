#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddcut {

// Lattice coordinates are signed and bounded: |x| <= 2^31. Arithmetic that
// would leave this range throws instead of wrapping.
using Coord = std::int64_t;
inline constexpr Coord kCoordLimit = Coord{1} << 31;

struct Vertex {
    std::vector<Coord> c;

    Vertex() = default;
    Vertex(std::initializer_list<Coord> xs) : c(xs) {}
    explicit Vertex(std::vector<Coord> xs) : c(std::move(xs)) {}

    int dim() const { return static_cast<int>(c.size()); }
    Coord operator[](int i) const { return c[static_cast<std::size_t>(i)]; }
    Coord& operator[](int i) { return c[static_cast<std::size_t>(i)]; }

    auto operator<=>(const Vertex&) const = default;
};

enum class Parity { Even, Odd };

inline void check_coord(Coord x) {
    if (x > kCoordLimit || x < -kCoordLimit)
        throw std::overflow_error("coordinate overflow: |x| > 2^31");
}

inline void check_vertex(const Vertex& v) {
    if (v.dim() < 2) throw std::invalid_argument("vertex dimension must be >= 2");
    for (Coord x : v.c) check_coord(x);
}

// Parity by coordinate sum; the origin is even.
inline Parity parity(const Vertex& v) {
    Coord s = 0;
    for (Coord x : v.c) s ^= x;  // only the low bit matters
    return (s & 1) ? Parity::Odd : Parity::Even;
}
inline bool is_even(const Vertex& v) { return parity(v) == Parity::Even; }
inline bool is_odd(const Vertex& v) { return parity(v) == Parity::Odd; }

inline Vertex origin(int d) { return Vertex(std::vector<Coord>(static_cast<std::size_t>(d), 0)); }

// Unit step along +/- e_{axis}. Directions are indexed 0..2d-1 in the fixed
// order +e1, -e1, +e2, -e2, ..., +ed, -ed.
inline Vertex unit_vector(int d, int axis, int sign) {
    Vertex e = origin(d);
    e[axis] = sign >= 0 ? 1 : -1;
    return e;
}
inline int direction_count(int d) { return 2 * d; }
inline Vertex direction(int d, int dir_index) {
    return unit_vector(d, dir_index / 2, dir_index % 2 == 0 ? +1 : -1);
}

inline Vertex vertex_add(const Vertex& a, const Vertex& b) {
    Vertex r = a;
    for (int i = 0; i < a.dim(); ++i) {
        r[i] += b[i];
        check_coord(r[i]);
    }
    return r;
}
inline Vertex vertex_sub(const Vertex& a, const Vertex& b) {
    Vertex r = a;
    for (int i = 0; i < a.dim(); ++i) {
        r[i] -= b[i];
        check_coord(r[i]);
    }
    return r;
}
inline Vertex vertex_negate(const Vertex& a) {
    Vertex r = a;
    for (int i = 0; i < a.dim(); ++i) r[i] = -r[i];
    return r;
}

inline Coord l1_distance(const Vertex& a, const Vertex& b) {
    Coord s = 0;
    for (int i = 0; i < a.dim(); ++i) {
        Coord diff = a[i] - b[i];
        s += diff < 0 ? -diff : diff;
    }
    return s;
}

// The 2d lattice neighbors of v, in direction-index order.
inline std::vector<Vertex> neighbors(const Vertex& v) {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(2 * v.dim()));
    for (int k = 0; k < direction_count(v.dim()); ++k)
        out.push_back(vertex_add(v, direction(v.dim(), k)));
    return out;
}

inline std::string to_string(const Vertex& v) {
    std::string s = "(";
    for (int i = 0; i < v.dim(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    s += ")";
    return s;
}

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::size_t h = 1469598103934665603ull;
        for (Coord x : v.c) {
            h ^= static_cast<std::size_t>(x);
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Axis-aligned box, inclusive on both ends.
struct Box {
    Vertex lo, hi;

    int dim() const { return lo.dim(); }
    bool contains(const Vertex& v) const {
        for (int i = 0; i < dim(); ++i)
            if (v[i] < lo[i] || v[i] > hi[i]) return false;
        return true;
    }
    Box expanded(Coord by) const {
        Box b = *this;
        for (int i = 0; i < dim(); ++i) {
            b.lo[i] -= by;
            b.hi[i] += by;
            check_coord(b.lo[i]);
            check_coord(b.hi[i]);
        }
        return b;
    }
    std::uint64_t volume() const {
        std::uint64_t n = 1;
        for (int i = 0; i < dim(); ++i) {
            if (hi[i] < lo[i]) return 0;
            n *= static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
        }
        return n;
    }
    bool on_shell(const Vertex& v) const {
        for (int i = 0; i < dim(); ++i)
            if (v[i] == lo[i] || v[i] == hi[i]) return true;
        return false;
    }
    auto operator<=>(const Box&) const = default;
};

}  // namespace oddcut
