// Quiver representations = modules over path algebras: morphism spaces,
// radical/top/socle, indecomposability via local endomorphism rings, Fitting
// decomposition, BGP reflection functors, and the full enumeration of
// indecomposables for Dynkin quivers (one per positive root).

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "kothe/algebra.hpp"
#include "kothe/mat.hpp"
#include "kothe/quiver.hpp"

namespace kothe::rep {

using la::Field;
using la::Mat;
using la::Rng;
using qv::DimVector;
using qv::Quiver;

struct Rep {
    Quiver quiver;
    Field field = Field::gfp(2);
    DimVector dim;           // per vertex, declaration order
    std::vector<Mat> maps;   // per arrow: dim[dst] x dim[src]

    static Rep make(Quiver q, const Field& f, DimVector dim, std::vector<Mat> maps);
    static Rep zero_rep(const Quiver& q, const Field& f);
    static Rep simple(const Quiver& q, const Field& f, std::size_t v);
    // indecomposable projective at v: basis = paths starting at v
    static Rep projective(const Quiver& q, const Field& f, std::size_t v);

    long total_dim() const;
    bool operator==(const Rep& o) const;
};

// a morphism is one block per vertex (target.dim[v] x source.dim[v])
using RepHom = std::vector<Mat>;

// basis of Hom(x, y); the intertwining system is solved exactly
std::vector<RepHom> hom_space(const Rep& x, const Rep& y);
bool hom_is_invertible(const RepHom& h);
RepHom compose(const RepHom& g, const RepHom& h);  // g after h

// isomorphism testing: equal dimension vectors plus an invertible hom found
// by seeded sampling of the hom space (certified; failure after the retry
// bound throws rather than misclassifying)
bool isomorphic(const Rep& x, const Rep& y, Rng& rng);
std::optional<RepHom> find_iso(const Rep& x, const Rep& y, Rng& rng);

struct SubRep {
    Rep sub;
    std::vector<Mat> incl;  // per vertex: m.dim[v] x sub.dim[v]
};
struct QuotRep {
    Rep quot;
    std::vector<Mat> proj;  // per vertex: quot.dim[v] x m.dim[v]
};

// rad M = JM: at each vertex the sum of images of incoming arrow maps
SubRep radical(const Rep& m);
QuotRep top(const Rep& m);
SubRep socle(const Rep& m);

DimVector c_total(const Rep& m);
DimVector c_top(const Rep& m);
DimVector c_soc(const Rep& m);

Rep direct_sum(const Rep& a, const Rep& b);

bool is_indecomposable(const Rep& m, Rng& rng);

// complete Fitting decomposition; summands certified indecomposable, grouped
// into isomorphism classes with multiplicities; deterministic given the rng
std::vector<std::pair<Rep, std::size_t>> decompose(const Rep& m, Rng& rng);

// BGP reflection functors; the result lives over q.reflected_at(v)
Rep reflect_plus(const Rep& m, std::size_t sink);     // C+ at a sink
Rep reflect_minus(const Rep& m, std::size_t source);  // C- at a source

// one indecomposable per positive root, built by reflection-functor walks
// from simples; every entry certified indecomposable with dim = its root
std::vector<Rep> enumerate_indecomposables(const Quiver& q, const Field& f, Rng& rng);

// the left module over the path algebra realized by a representation
alg::AModule to_amodule(const Rep& m, const alg::PathAlgebra& pa,
                        std::shared_ptr<const alg::FDAlgebra> aptr);

// ---------------------------------------------------------------------------
// text format:  rep { dim: 2 1 1 1; map a: [[1,0]]; ... }

Rep parse_rep(const std::string& text, const Quiver& q, const Field& f);
std::string print_rep(const Rep& m);

// a full input file: quiver block optionally followed by a rep block
struct InputFile {
    Quiver quiver;
    std::optional<Rep> representation;
};
InputFile parse_input(const std::string& text, const Field& f);

}  // namespace kothe::rep
