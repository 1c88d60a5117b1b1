// Quivers and their combinatorics: the text DSL, underlying-graph ADE
// classification, simple reflections and positive-root enumeration.
//
// Vertices keep declaration order everywhere; every vector indexed by vertex
// (dim, c, p, q) uses that order.

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "kothe/field.hpp"

namespace kothe::qv {

struct Arrow {
    std::string label;
    std::size_t src;
    std::size_t dst;
};

class Quiver {
public:
    Quiver() = default;
    // arrows given as (label, source name, target name)
    static Quiver make(std::string name, std::vector<std::string> vertices,
                       std::vector<std::array<std::string, 3>> arrows);

    const std::string& name() const { return name_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    std::size_t num_arrows() const { return arrows_.size(); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::string& vertex_name(std::size_t i) const { return vertices_[i]; }
    std::size_t vertex_index(const std::string& name) const;  // throws if unknown
    std::size_t arrow_index(const std::string& label) const;  // throws if unknown

    bool has_loop() const;
    bool has_multi_edge() const;  // in the underlying graph
    bool has_oriented_cycle() const;
    bool is_connected() const;
    bool is_sink(std::size_t v) const;    // no outgoing arrows
    bool is_source(std::size_t v) const;  // no incoming arrows

    Quiver reversed() const;  // all arrows flipped
    // flip every arrow incident to v (the BGP reflected quiver)
    Quiver reflected_at(std::size_t v) const;

    std::string print() const;  // canonical DSL; parse(print(q)) == q

    bool operator==(const Quiver& o) const;

private:
    std::string name_;
    std::vector<std::string> vertices_;
    std::vector<Arrow> arrows_;
};

// Parses the quiver block at the start of `text`. If trailing_out is given,
// the unconsumed tail (e.g. a rep block) is stored there; otherwise trailing
// non-whitespace input is an error.
Quiver parse_quiver(const std::string& text, std::string* trailing_out = nullptr);

// non-negative entries, one per vertex in declaration order
using DimVector = std::vector<long>;

struct DynkinClass {
    enum class Type { A, D, E, none };
    Type type = Type::none;
    int n = 0;  // A(n), D(n), E(n)
    // node_of_vertex[v] = standard (Bourbaki) node number, 1-based; empty when
    // not Dynkin
    std::vector<std::size_t> node_of_vertex;
    bool is_dynkin() const { return type != Type::none; }
    std::string str() const;
};

DynkinClass classify_dynkin(const Quiver& q);

// Tits form q(d) = sum d_i^2 - sum_{arrows} d_src * d_dst.
long tits_form(const Quiver& q, const DimVector& d);

// Simple reflection at v in the symmetrized form: only coordinate v changes,
// to -d_v + sum of d over neighbors in the underlying graph.
DimVector simple_reflection(const Quiver& q, std::size_t v, const DimVector& d);

// All positive roots (q(d)=1), by breadth-first reflection closure from the
// simple roots. Requires a Dynkin quiver; output sorted lexicographically.
std::vector<DimVector> positive_roots(const Quiver& q);

// expected |Phi+| for the ADE types; enumeration is cross-checked against it
std::size_t root_count(const DynkinClass& d);

}  // namespace kothe::qv
