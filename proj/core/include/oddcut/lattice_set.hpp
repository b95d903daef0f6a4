#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "oddcut/types.hpp"

namespace oddcut {

// A finite subset of Z^d in canonical form: members sorted lexicographically,
// no duplicates. Immutable after construction; equality is member-list
// equality.
class LatticeSet {
  public:
    LatticeSet() : d_(2) {}
    explicit LatticeSet(int d) : d_(d) {
        if (d < 2) throw std::invalid_argument("lattice dimension must be >= 2");
    }
    LatticeSet(int d, std::vector<Vertex> members) : d_(d), members_(std::move(members)) {
        if (d < 2) throw std::invalid_argument("lattice dimension must be >= 2");
        for (const Vertex& v : members_) {
            if (v.dim() != d_) throw std::invalid_argument("member dimension mismatch");
            check_vertex(v);
        }
        canonicalize();
    }

    int d() const { return d_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<Vertex>& members() const { return members_; }

    bool contains(const Vertex& v) const {
        return std::binary_search(members_.begin(), members_.end(), v);
    }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const LatticeSet& o) const { return d_ == o.d_ && members_ == o.members_; }
    bool operator<(const LatticeSet& o) const {
        if (d_ != o.d_) return d_ < o.d_;
        return members_ < o.members_;
    }

    LatticeSet set_union(const LatticeSet& o) const {
        require_same_d(o);
        std::vector<Vertex> out;
        out.reserve(size() + o.size());
        std::set_union(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
        return LatticeSet(d_, std::move(out));
    }
    LatticeSet set_intersection(const LatticeSet& o) const {
        require_same_d(o);
        std::vector<Vertex> out;
        std::set_intersection(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
        return LatticeSet(d_, std::move(out));
    }
    LatticeSet set_minus(const LatticeSet& o) const {
        require_same_d(o);
        std::vector<Vertex> out;
        std::set_difference(begin(), end(), o.begin(), o.end(), std::back_inserter(out));
        return LatticeSet(d_, std::move(out));
    }
    bool subset_of(const LatticeSet& o) const {
        return std::includes(o.begin(), o.end(), begin(), end());
    }
    bool disjoint_from(const LatticeSet& o) const {
        return set_intersection(o).empty();
    }

    LatticeSet filtered(auto&& pred) const {
        std::vector<Vertex> out;
        for (const Vertex& v : members_)
            if (pred(v)) out.push_back(v);
        return LatticeSet(d_, std::move(out));
    }
    LatticeSet even_part() const { return filtered([](const Vertex& v) { return is_even(v); }); }
    LatticeSet odd_part() const { return filtered([](const Vertex& v) { return is_odd(v); }); }

    LatticeSet translated(const Vertex& by) const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (const Vertex& v : members_) out.push_back(vertex_add(v, by));
        return LatticeSet(d_, std::move(out));
    }

    // Negate the first two coordinates (reflection through {x1+x2=0}).
    LatticeSet reflected_first_two() const {
        std::vector<Vertex> out;
        out.reserve(size());
        for (const Vertex& v : members_) {
            Vertex w = v;
            w[0] = -w[0];
            w[1] = -w[1];
            out.push_back(w);
        }
        return LatticeSet(d_, std::move(out));
    }

    std::optional<Box> bounding_box() const {
        if (empty()) return std::nullopt;
        Box b{members_.front(), members_.front()};
        for (const Vertex& v : members_)
            for (int i = 0; i < d_; ++i) {
                b.lo[i] = std::min(b.lo[i], v[i]);
                b.hi[i] = std::max(b.hi[i], v[i]);
            }
        return b;
    }

    std::size_t hash() const {
        VertexHash vh;
        std::size_t h = 14695981039346656037ull ^ static_cast<std::size_t>(d_);
        for (const Vertex& v : members_) h = h * 1099511628211ull ^ vh(v);
        return h;
    }

  private:
    void require_same_d(const LatticeSet& o) const {
        if (d_ != o.d_) throw std::invalid_argument("dimension mismatch between lattice sets");
    }
    void canonicalize() {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    int d_;
    std::vector<Vertex> members_;
};

struct LatticeSetHash {
    std::size_t operator()(const LatticeSet& s) const { return s.hash(); }
};

}  // namespace oddcut
