#include "oddcut/json_io.hpp"

#include <json.hpp>

#include "oddcut/approx.hpp"

namespace oddcut {

namespace {

using nlohmann::json;

json vertex_json(const Vertex& v) {
    json arr = json::array();
    for (Coord x : v.c) arr.push_back(x);
    return arr;
}

json set_json(const LatticeSet& s) {
    json members = json::array();
    for (const Vertex& v : s) members.push_back(vertex_json(v));
    return json{{"d", s.d()}, {"members", members}};
}

Vertex vertex_from(const json& arr) {
    std::vector<Coord> c;
    for (const auto& x : arr) c.push_back(x.get<Coord>());
    return Vertex(std::move(c));
}

LatticeSet set_from(const json& obj) {
    const int d = obj.at("d").get<int>();
    std::vector<Vertex> members;
    for (const auto& v : obj.at("members")) members.push_back(vertex_from(v));
    return LatticeSet(d, std::move(members));
}

}  // namespace

std::string to_json(const Vertex& v) { return vertex_json(v).dump(); }

std::string to_json(const LatticeSet& s) { return set_json(s).dump(); }

std::string to_json(const OddSetReport& r) {
    json j{{"is_odd", r.is_odd},         {"is_even", r.is_even},
           {"is_regular", r.is_regular}, {"is_cutset", r.is_cutset},
           {"is_r_cutset", r.is_r_cutset}, {"r", r.r}};
    if (r.defect_witness) {
        j["defect_witness"] = vertex_json(*r.defect_witness);
        j["violated"] = r.violated;
    } else {
        j["defect_witness"] = nullptr;
    }
    return j.dump();
}

std::string to_json(const Approximation& a) {
    json j{{"d", a.d},
           {"black", set_json(a.black).at("members")},
           {"white", set_json(a.white).at("members")},
           {"window", json{{"lo", vertex_json(a.window.lo)}, {"hi", vertex_json(a.window.hi)}}}};
    return j.dump();
}

LatticeSet lattice_set_from_json(const std::string& text) {
    return set_from(json::parse(text));
}

Approximation approximation_from_json(const std::string& text) {
    const json j = json::parse(text);
    Approximation a;
    a.d = j.at("d").get<int>();
    std::vector<Vertex> black, white;
    for (const auto& v : j.at("black")) black.push_back(vertex_from(v));
    for (const auto& v : j.at("white")) white.push_back(vertex_from(v));
    a.black = LatticeSet(a.d, std::move(black));
    a.white = LatticeSet(a.d, std::move(white));
    a.window.lo = vertex_from(j.at("window").at("lo"));
    a.window.hi = vertex_from(j.at("window").at("hi"));
    a.validate();
    return a;
}

}  // namespace oddcut
