// The decision layer: algebra profiles (m, p, q, representation-finiteness),
// k-cyclicity and Koethe verdicts with witnesses, minimal k, matrix degrees,
// and the Morita-consistency suite that recomputes profiles of Mat_n(A) and
// eAe from scratch and checks the transport arithmetic.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kothe/algebra.hpp"
#include "kothe/rep.hpp"

namespace kothe::decide {

using la::Field;
using la::Mat;
using la::Rng;

struct AlgebraProfile {
    std::size_t m = 0;
    std::vector<std::size_t> p;
    std::vector<std::size_t> q;  // valid only when has_q
    bool representation_finite = false;
    bool has_q = false;
    bool basic = false;
    std::vector<std::string> class_labels;
    std::string source;  // provenance of the computation
};

struct Witness {
    std::string indecomposable;  // e.g. "dim (2,1,1,1)"
    std::size_t class_index = 0;
    std::string class_label;
    std::size_t c_top = 0;
    std::size_t bound = 0;
    bool operator==(const Witness&) const = default;
};

struct CheckResult {
    bool value = false;
    std::vector<Witness> witnesses;  // nonempty when value is false
};

struct Verdict {
    std::string algebra_id;
    AlgebraProfile profile;
    std::optional<std::size_t> k_tested;
    std::optional<bool> is_k_cyclic;
    std::optional<bool> is_kothe;
    std::optional<bool> is_multiplicity_free_top;
    std::optional<bool> is_local_type;
    std::optional<std::size_t> min_cyclic_k;
    std::optional<std::size_t> matrix_degree_minimal;
    std::optional<std::size_t> matrix_degree_sum_q;
    std::vector<Witness> witnesses;
    bool operator==(const Verdict& o) const;
};

// ---------------------------------------------------------------------------
// profiles

struct HereditaryAnalysis {
    AlgebraProfile profile;
    qv::DynkinClass dynkin;
    std::vector<rep::Rep> indecomposables;  // complete when Dynkin
};

// classes indexed by vertex (path algebras are basic); q from the enumerated
// indecomposables when the quiver is Dynkin
HereditaryAnalysis analyze_quiver(const qv::Quiver& q, const Field& f, Rng& rng);

// structure-constant route; q is computed only when a complete list of
// indecomposables is supplied (the caller owns that completeness claim,
// recorded in `source`)
AlgebraProfile profile_algebra(const alg::FDAlgebra& a,
                               const std::vector<alg::AModule>* indecomposables, Rng& rng,
                               alg::Basics* basics_out = nullptr);

// ---------------------------------------------------------------------------
// decisions (profile arithmetic)

CheckResult is_left_k_cyclic(const AlgebraProfile& p, std::size_t k);
CheckResult is_left_kothe(const AlgebraProfile& p);
std::size_t min_cyclic_k(const AlgebraProfile& p);  // requires q

struct MatrixDegree {
    std::size_t minimal = 0;  // least n with Mat_n(A) left Koethe
    std::size_t sum_q = 0;    // the constructive degree q(1) + ... + q(m)
};
MatrixDegree kothe_matrix_degree(const AlgebraProfile& p);

bool is_multiplicity_free_top(const std::vector<rep::Rep>& indecomposables);
bool is_left_local_type(const std::vector<rep::Rep>& indecomposables);

// full verdict assembly. For representation-infinite (or q-less) input,
// allow_partial must be set; the partial verdict is sound (not Koethe when
// representation-infinite) but carries no k arithmetic.
Verdict verdict_for_quiver(const qv::Quiver& q, const Field& f,
                           std::optional<std::size_t> k, Rng& rng, bool allow_partial);
Verdict verdict_for_algebra(const alg::FDAlgebra& a, std::optional<std::size_t> k, Rng& rng,
                            bool allow_partial, const std::string& id);

// ---------------------------------------------------------------------------
// Morita consistency

struct MoritaReport {
    bool ok = true;
    std::vector<std::string> lines;  // "PASS ..." / "FAIL ..." entries
    void check(bool cond, const std::string& what);
};

// recomputes the profiles of Mat_n(A) and of the basic corner eAe from
// scratch (structure constants, not shortcuts) and asserts the transport
// arithmetic: same m, q preserved under the class matching, p scaled by n
// (restricted to 1 on the corner), min-k identity, and top-commutation of
// the explicit functors on the supplied modules
MoritaReport morita_consistency_suite(const qv::Quiver& q, const Field& f, std::size_t n,
                                      Rng& rng);

// corner consistency for one full idempotent of an arbitrary algebra with a
// supplied complete indecomposable list: Koethe verdicts agree between A and
// eAe (modules transported through the corner functor)
MoritaReport corner_consistency(const alg::FDAlgebra& a,
                                const std::vector<alg::AModule>& indecomposables,
                                const Mat& full_idem, Rng& rng);

// class matching through an explicit functor: sigma[i] = class of the functor
// image of the i-th simple; fails loudly if the image is not simple
std::vector<std::size_t> match_classes(const std::vector<alg::AModule>& simples_a,
                                       const std::vector<alg::AModule>& images,
                                       const alg::Basics& basics_target);

}  // namespace kothe::decide
