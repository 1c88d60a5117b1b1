// Finite-dimensional associative algebras by structure constants, and their
// module theory: Jacobson radical (trace form over QQ, iterated trace
// refinement in characteristic p), Wedderburn splitting of the semisimple
// quotient, idempotent lifting, corner algebras, matrix rings, opposite
// algebras, and modules via multiplication matrices.
//
// Elements are 1 x dim coordinate rows. Module action matrices act on column
// coordinate vectors.
//
// Correctness of the pipeline is self-certifying: the radical is verified to
// be a nilpotent ideal, the lifted idempotents are verified orthogonal with
// sum 1, and every corner claimed to be a division ring carries an exact
// certificate (commutative + Frobenius bijective with fixed space of
// dimension 1 over GF(p); irreducible primitive-element minimal polynomial
// over QQ). A wrong radical cannot pass all checks.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kothe/mat.hpp"
#include "kothe/poly.hpp"
#include "kothe/quiver.hpp"

namespace kothe::alg {

using la::Fel;
using la::Field;
using la::Mat;
using la::Rng;

class FDAlgebra {
public:
    FDAlgebra() : f_(Field::gfp(2)) {}  // empty placeholder; use make()

    // table row i*dim+j holds the coordinates of b_i * b_j. When trusted is
    // false the unit laws and full associativity tensor are checked.
    static FDAlgebra make(const Field& f, std::vector<std::string> basis_names, Mat unit_row,
                          Mat table, bool trusted = false);

    const Field& field() const { return f_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Mat& unit() const { return unit_; }
    const Mat& table() const { return table_; }

    Mat basis_row(std::size_t i) const;
    Mat table_row(std::size_t i, std::size_t j) const { return table_.row(i * dim_ + j); }

    Mat mul(const Mat& x, const Mat& y) const;  // 1 x dim rows
    Mat pow_el(const Mat& x, uint64_t e) const;
    // dim x dim matrix of left multiplication by x, acting on column coords
    Mat left_action(const Mat& x) const;
    Mat right_action(const Mat& x) const;
    bool is_idempotent(const Mat& x) const;
    bool is_commutative() const;
    la::Poly min_poly_of(const Mat& x) const;
    Mat eval_poly(const la::Poly& p, const Mat& x) const;

    // a small set of basis elements that generates A as a unital algebra
    std::vector<std::size_t> generator_indices() const;

private:
    explicit FDAlgebra(const Field& f) : f_(f) {}
    Field f_;
    std::size_t dim_ = 0;
    std::vector<std::string> names_;
    Mat unit_;   // 1 x dim
    Mat table_;  // dim^2 x dim
};

// ---------------------------------------------------------------------------
// constructions

struct PathAlgebra {
    FDAlgebra algebra;
    qv::Quiver quiver;
    // basis i corresponds to paths[i]; the first num_vertices entries are the
    // length-0 paths (vertex idempotents)
    struct Path {
        std::size_t src, dst;
        std::vector<std::size_t> arrows;  // arrow indices, source side first
    };
    std::vector<Path> paths;
    Mat vertex_idem(std::size_t v) const;
};

// basis = all paths; throws on loops/oriented cycles (infinite dimensional)
PathAlgebra path_algebra(const qv::Quiver& q, const Field& f);

FDAlgebra matrix_ring(const FDAlgebra& a, std::size_t n);
FDAlgebra opposite(const FDAlgebra& a);
FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b);

struct Corner {
    FDAlgebra algebra;  // eAe with unit e
    Mat embed;          // rows: corner basis written in A coordinates
    Mat idem;           // e itself
};
Corner corner_algebra(const FDAlgebra& a, const Mat& e);

struct Quotient {
    FDAlgebra algebra;
    Mat ideal_rref;                      // ideal row basis in rref
    std::vector<std::size_t> comp_cols;  // complement coordinates
    Mat lift;                            // rows: section of the quotient basis inside A
    Mat project(const Mat& x) const;     // element of A -> quotient coordinates
};
Quotient quotient_by_ideal(const FDAlgebra& a, const Mat& ideal_rows);

// ---------------------------------------------------------------------------
// radical and idempotents

// rows form a basis of J(A); verified nilpotent two-sided ideal
Mat jacobson_radical(const FDAlgebra& a);

struct Basics {
    Mat jrad;                          // J basis rows
    std::vector<Mat> prim;             // complete orthogonal primitive idempotents
    std::vector<std::size_t> class_of; // Wedderburn class of each primitive
    std::size_t m = 0;                 // number of classes
    std::vector<std::size_t> p;        // multiplicity p(i) per class
    std::vector<std::size_t> rep_of;   // index into prim: representative per class
    std::vector<std::size_t> div_dim;  // dim over the base field of End(S_i)
    Mat basic_idem;                    // sum of the representatives
    bool basic = false;                // all p(i) == 1
};

// complete primitive idempotent analysis; Las Vegas, deterministic given rng
Basics basics(const FDAlgebra& a, Rng& rng);

// row basis of the two-sided ideal AeA
Mat trace_ideal(const FDAlgebra& a, const Mat& e);
bool is_full_idempotent(const FDAlgebra& a, const Mat& e);
// Re == eRe as subspaces
bool is_left_semicentral(const FDAlgebra& a, const Mat& e);

// exact division-ring certificate for a semisimple algebra (see file header)
bool wedderburn_is_division(const FDAlgebra& b, Rng& rng);
// End(M) local, i.e. End/J(End) is a division ring
bool is_local_algebra(const FDAlgebra& e, Rng& rng);

// all idempotents of a small algebra over GF(p), by exhaustive enumeration
std::vector<Mat> all_idempotents_exhaustive(const FDAlgebra& a);

// ---------------------------------------------------------------------------
// modules

class AModule {
public:
    static AModule make(std::shared_ptr<const FDAlgebra> a, std::vector<Mat> action,
                        bool trusted = false);
    const FDAlgebra& algebra() const { return *a_; }
    std::shared_ptr<const FDAlgebra> algebra_ptr() const { return a_; }
    std::size_t dim() const { return dim_; }
    const Mat& action(std::size_t i) const { return act_[i]; }
    Mat act_of(const Mat& x) const;  // action of an element (1 x dim row)

private:
    std::shared_ptr<const FDAlgebra> a_;
    std::size_t dim_ = 0;
    std::vector<Mat> act_;
};

AModule regular_module(std::shared_ptr<const FDAlgebra> a);
// left module A*e for an idempotent e
AModule projective_module(std::shared_ptr<const FDAlgebra> a, const Mat& e, Mat* basis_out = nullptr);
AModule direct_sum(const AModule& m, const AModule& n);

struct SubQuot {
    AModule mod;
    Mat map;  // inclusion (dim x d) or projection (d x dim)
};
// subspace columns must be action-invariant
SubQuot submodule(const AModule& m, const Mat& subspace_cols);
SubQuot quotient_module(const AModule& m, const Mat& subspace_cols);

Mat radical_subspace(const AModule& m, const Mat& jrad);  // columns spanning J*M
Mat socle_subspace(const AModule& m, const Mat& jrad);    // columns spanning {x : J x = 0}

// basis of A-module homomorphisms M -> N (each dim(N) x dim(M))
std::vector<Mat> hom_amod(const AModule& m, const AModule& n);

struct EndAlgebra {
    FDAlgebra algebra;
    std::vector<Mat> basis;  // endomorphism matrices
};
EndAlgebra end_algebra(const AModule& m);

bool is_indecomposable_amod(const AModule& m, Rng& rng);

struct ModuleInvariants {
    std::size_t length = 0;
    std::vector<std::size_t> c_total, c_top, c_soc;
    bool multiplicity_free_top = false;
    bool simple_top = false;
    bool uniserial = false;
};
// c-vectors via the Hom-length formula c_i(M) = dim(e_i M) / dim End(S_i)
ModuleInvariants module_invariants(const AModule& m, const Basics& b);
// independent second route: composition counting along the radical series,
// with per-layer multiplicities from Hom(S_i, layer)
std::vector<std::size_t> c_total_radical_route(const AModule& m, const Basics& b);

std::size_t min_generators(const AModule& m, const Basics& b);
bool is_k_generated(const AModule& m, const Basics& b, std::size_t k);
// exhaustive search over k-tuples of module elements (finite fields, small);
// tuple_budget caps the number of tuples inspected per k
std::size_t brute_force_min_generators(const AModule& m, std::size_t tuple_budget = 200000000);

bool is_uniserial_module(const AModule& m, const Basics& b);
// oracle via full submodule lattice; requires |M| <= 256
bool is_uniserial_exhaustive(const AModule& m);
// all submodules as column bases (closure of cyclic submodules under sum)
std::vector<Mat> all_submodules(const AModule& m, std::size_t cap = 1u << 20);

// every right ideal is principal; exhaustive over |A| <= 2^16, GF only
bool brute_force_principal_right_ideals(const FDAlgebra& a);

// ---------------------------------------------------------------------------
// Morita-equivalence functors, concrete form

// M over A gives the column module M^n over Mat_n(A)
AModule column_module(const FDAlgebra& matn, std::size_t n, const AModule& m);
// M over A gives e*M over the corner eAe
AModule corner_module(const Corner& c, const AModule& m);

// ---------------------------------------------------------------------------
// algebra file format (JSON, bit-exact round trip)

std::string algebra_to_json(const FDAlgebra& a);
FDAlgebra algebra_from_json(const std::string& text);

}  // namespace kothe::alg
