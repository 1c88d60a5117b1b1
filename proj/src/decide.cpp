#include "kothe/decide.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace kothe::decide {

namespace {

std::string dim_str(const qv::DimVector& d) {
    std::ostringstream os;
    os << "dim (";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    os << ")";
    return os.str();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

bool Verdict::operator==(const Verdict& o) const {
    return algebra_id == o.algebra_id && profile.m == o.profile.m && profile.p == o.profile.p &&
           profile.q == o.profile.q && profile.has_q == o.profile.has_q &&
           profile.representation_finite == o.profile.representation_finite &&
           profile.basic == o.profile.basic && profile.class_labels == o.profile.class_labels &&
           profile.source == o.profile.source && k_tested == o.k_tested &&
           is_k_cyclic == o.is_k_cyclic && is_kothe == o.is_kothe &&
           is_multiplicity_free_top == o.is_multiplicity_free_top &&
           is_local_type == o.is_local_type && min_cyclic_k == o.min_cyclic_k &&
           matrix_degree_minimal == o.matrix_degree_minimal &&
           matrix_degree_sum_q == o.matrix_degree_sum_q && witnesses == o.witnesses;
}

HereditaryAnalysis analyze_quiver(const qv::Quiver& q, const Field& f, Rng& rng) {
    HereditaryAnalysis out;
    out.dynkin = qv::classify_dynkin(q);
    const std::size_t nv = q.num_vertices();
    out.profile.m = nv;
    out.profile.p.assign(nv, 1);  // path algebras are basic
    out.profile.basic = true;
    for (std::size_t v = 0; v < nv; ++v) out.profile.class_labels.push_back(q.vertex_name(v));
    if (!out.dynkin.is_dynkin()) {
        out.profile.representation_finite = false;
        out.profile.has_q = false;
        out.profile.source = "hereditary path algebra; the underlying graph is not ADE, so "
                             "the algebra is representation-infinite";
        return out;
    }
    out.indecomposables = rep::enumerate_indecomposables(q, f, rng);
    out.profile.representation_finite = true;
    out.profile.has_q = true;
    out.profile.q.assign(nv, 0);
    for (const rep::Rep& m : out.indecomposables) {
        qv::DimVector ct = rep::c_top(m);
        for (std::size_t v = 0; v < nv; ++v)
            out.profile.q[v] = std::max(out.profile.q[v], static_cast<std::size_t>(ct[v]));
    }
    out.profile.source = "hereditary path algebra over " + f.str() + "; type " +
                         out.dynkin.str() + "; q from the complete enumeration of " +
                         std::to_string(out.indecomposables.size()) + " indecomposables";
    return out;
}

AlgebraProfile profile_algebra(const alg::FDAlgebra& a,
                               const std::vector<alg::AModule>* indecomposables, Rng& rng,
                               alg::Basics* basics_out) {
    alg::Basics b = alg::basics(a, rng);
    AlgebraProfile prof;
    prof.m = b.m;
    prof.p = b.p;
    prof.basic = b.basic;
    for (std::size_t c = 0; c < b.m; ++c) prof.class_labels.push_back("P" + std::to_string(c));
    if (indecomposables) {
        prof.representation_finite = true;
        prof.has_q = true;
        prof.q.assign(b.m, 0);
        for (const alg::AModule& m : *indecomposables) {
            alg::ModuleInvariants inv = alg::module_invariants(m, b);
            for (std::size_t c = 0; c < b.m; ++c)
                prof.q[c] = std::max(prof.q[c], inv.c_top[c]);
        }
        prof.source = "structure constants; q from a supplied complete list of " +
                      std::to_string(indecomposables->size()) + " indecomposables";
    } else {
        prof.representation_finite = false;
        prof.has_q = false;
        prof.source = "structure constants; no complete indecomposable list supplied, so "
                      "representation-finiteness and q are undetermined";
    }
    if (basics_out) *basics_out = std::move(b);
    return prof;
}

CheckResult is_left_k_cyclic(const AlgebraProfile& p, std::size_t k) {
    KOTHE_CHECK(k >= 1, "k must be positive");
    CheckResult res;
    if (!p.representation_finite) {
        res.value = false;
        res.witnesses.push_back({"(not representation-finite)", 0, "", 0, 0});
        return res;
    }
    KOTHE_CHECK(p.has_q, "profile has no q vector");
    res.value = true;
    for (std::size_t i = 0; i < p.m; ++i)
        if (p.q[i] > k * p.p[i]) {
            res.value = false;
            res.witnesses.push_back(
                {"(attaining indecomposable)", i, p.class_labels[i], p.q[i], k * p.p[i]});
        }
    return res;
}

CheckResult is_left_kothe(const AlgebraProfile& p) { return is_left_k_cyclic(p, 1); }

std::size_t min_cyclic_k(const AlgebraProfile& p) {
    KOTHE_CHECK(p.representation_finite && p.has_q,
                "min_cyclic_k requires a representation-finite profile");
    std::size_t k = 1;
    for (std::size_t i = 0; i < p.m; ++i) k = std::max(k, ceil_div(p.q[i], p.p[i]));
    return k;
}

MatrixDegree kothe_matrix_degree(const AlgebraProfile& p) {
    KOTHE_CHECK(p.representation_finite && p.has_q,
                "kothe_matrix_degree requires a representation-finite profile");
    MatrixDegree d;
    d.minimal = min_cyclic_k(p);
    d.sum_q = 0;
    for (std::size_t x : p.q) d.sum_q += x;
    KOTHE_CHECK(d.minimal <= d.sum_q, "internal: minimal degree exceeds the sum bound");
    return d;
}

bool is_multiplicity_free_top(const std::vector<rep::Rep>& indecomposables) {
    for (const rep::Rep& m : indecomposables)
        for (long c : rep::c_top(m))
            if (c > 1) return false;
    return true;
}

bool is_left_local_type(const std::vector<rep::Rep>& indecomposables) {
    for (const rep::Rep& m : indecomposables) {
        long s = 0;
        for (long c : rep::c_top(m)) s += c;
        if (s != 1) return false;
    }
    return true;
}

namespace {

void fill_witnesses(Verdict& v, const AlgebraProfile& prof,
                    const std::vector<rep::Rep>& indecs, std::size_t k) {
    // pin each violated bound to an attaining indecomposable so the witness
    // can be revalidated independently
    for (std::size_t i = 0; i < prof.m; ++i) {
        if (prof.q[i] <= k * prof.p[i]) continue;
        for (const rep::Rep& m : indecs) {
            qv::DimVector ct = rep::c_top(m);
            if (static_cast<std::size_t>(ct[i]) == prof.q[i]) {
                v.witnesses.push_back(
                    {dim_str(m.dim), i, prof.class_labels[i], prof.q[i], k * prof.p[i]});
                break;
            }
        }
    }
}

}  // namespace

Verdict verdict_for_quiver(const qv::Quiver& q, const Field& f,
                           std::optional<std::size_t> k, Rng& rng, bool allow_partial) {
    HereditaryAnalysis ha = analyze_quiver(q, f, rng);
    Verdict v;
    v.algebra_id = "path algebra of " + q.name() + " over " + f.str();
    v.profile = ha.profile;
    if (!ha.profile.representation_finite) {
        KOTHE_CHECK(allow_partial,
                    "quiver " + q.name() +
                        " is representation-infinite (not ADE); pass --allow-partial for a "
                        "partial verdict");
        v.is_kothe = false;  // sound: a left Koethe ring is representation-finite
        v.witnesses.push_back({"(not representation-finite)", 0, "", 0, 0});
        if (k) {
            v.k_tested = k;
            v.is_k_cyclic = false;
        }
        return v;
    }
    CheckResult kothe = is_left_kothe(ha.profile);
    v.is_kothe = kothe.value;
    v.min_cyclic_k = min_cyclic_k(ha.profile);
    MatrixDegree md = kothe_matrix_degree(ha.profile);
    v.matrix_degree_minimal = md.minimal;
    v.matrix_degree_sum_q = md.sum_q;
    v.is_multiplicity_free_top = is_multiplicity_free_top(ha.indecomposables);
    v.is_local_type = is_left_local_type(ha.indecomposables);
    if (k) {
        v.k_tested = k;
        CheckResult ck = is_left_k_cyclic(ha.profile, *k);
        v.is_k_cyclic = ck.value;
        if (!ck.value) fill_witnesses(v, ha.profile, ha.indecomposables, *k);
    }
    if (!kothe.value && v.witnesses.empty())
        fill_witnesses(v, ha.profile, ha.indecomposables, 1);
    return v;
}

Verdict verdict_for_algebra(const alg::FDAlgebra& a, std::optional<std::size_t> k, Rng& rng,
                            bool allow_partial, const std::string& id) {
    KOTHE_CHECK(allow_partial,
                "structure-constant input has no complete indecomposable list; pass "
                "--allow-partial for the basic/multiplicity data");
    Verdict v;
    v.algebra_id = id;
    v.profile = profile_algebra(a, nullptr, rng, nullptr);
    if (k) v.k_tested = k;
    return v;  // p, m, basic only; the Koethe arithmetic stays undetermined
}

// ---------------------------------------------------------------------------
// Morita consistency

void MoritaReport::check(bool cond, const std::string& what) {
    lines.push_back(std::string(cond ? "PASS  " : "FAIL  ") + what);
    if (!cond) ok = false;
}

std::vector<std::size_t> match_classes(const std::vector<alg::AModule>& simples_a,
                                       const std::vector<alg::AModule>& images,
                                       const alg::Basics& basics_target) {
    KOTHE_CHECK(simples_a.size() == images.size(), "class matching size mismatch");
    std::vector<std::size_t> sigma(simples_a.size(), 0);
    std::vector<bool> taken(basics_target.m, false);
    for (std::size_t i = 0; i < images.size(); ++i) {
        alg::ModuleInvariants inv = alg::module_invariants(images[i], basics_target);
        std::size_t hits = 0, cls = 0;
        for (std::size_t c = 0; c < basics_target.m; ++c) {
            KOTHE_CHECK(inv.c_top[c] == inv.c_total[c],
                        "internal: functor image of a simple is not semisimple");
            if (inv.c_total[c] != 0) {
                KOTHE_CHECK(inv.c_total[c] == 1,
                            "internal: functor image of a simple is not simple");
                ++hits;
                cls = c;
            }
        }
        KOTHE_CHECK(hits == 1, "internal: functor image of a simple is not simple");
        KOTHE_CHECK(!taken[cls], "internal: class matching is not injective");
        taken[cls] = true;
        sigma[i] = cls;
    }
    return sigma;
}

namespace {

std::vector<alg::AModule> simple_modules(std::shared_ptr<const alg::FDAlgebra> aptr,
                                         const alg::Basics& b) {
    std::vector<alg::AModule> out;
    for (std::size_t c = 0; c < b.m; ++c) {
        alg::AModule p = alg::projective_module(aptr, b.prim[b.rep_of[c]]);
        Mat rad = alg::radical_subspace(p, b.jrad);
        out.push_back(rad.cols() == 0 ? p : alg::quotient_module(p, rad).mod);
    }
    return out;
}

}  // namespace

MoritaReport morita_consistency_suite(const qv::Quiver& q, const Field& f, std::size_t n,
                                      Rng& rng) {
    MoritaReport out;
    HereditaryAnalysis ha = analyze_quiver(q, f, rng);
    KOTHE_CHECK(ha.profile.representation_finite, "Morita suite needs a Dynkin quiver");

    alg::PathAlgebra pa = alg::path_algebra(q, f);
    auto aptr = std::make_shared<const alg::FDAlgebra>(pa.algebra);
    alg::Basics ba;
    std::vector<alg::AModule> amods;
    for (const rep::Rep& m : ha.indecomposables) amods.push_back(rep::to_amodule(m, pa, aptr));
    AlgebraProfile prof_a = profile_algebra(*aptr, &amods, rng, &ba);
    out.check(prof_a.m == ha.profile.m, "base: class count matches the hereditary route");
    out.check(prof_a.basic, "base: path algebra is basic");
    {
        std::multiset<std::size_t> q1(prof_a.q.begin(), prof_a.q.end());
        std::multiset<std::size_t> q2(ha.profile.q.begin(), ha.profile.q.end());
        out.check(q1 == q2, "base: q multiset matches the hereditary route");
    }

    alg::FDAlgebra t = alg::matrix_ring(*aptr, n);
    alg::Basics bt;
    std::vector<alg::AModule> tmods;
    for (const alg::AModule& m : amods) tmods.push_back(alg::column_module(t, n, m));
    AlgebraProfile prof_t = profile_algebra(t, &tmods, rng, &bt);
    out.check(prof_t.m == prof_a.m, "matrix ring: class count preserved");

    std::vector<alg::AModule> simples_a = simple_modules(aptr, ba);
    std::vector<alg::AModule> simple_images;
    for (const alg::AModule& s : simples_a)
        simple_images.push_back(alg::column_module(t, n, s));
    std::vector<std::size_t> sigma = match_classes(simples_a, simple_images, bt);
    bool p_scales = true, q_same = true;
    for (std::size_t i = 0; i < prof_a.m; ++i) {
        if (prof_t.p[sigma[i]] != n * prof_a.p[i]) p_scales = false;
        if (prof_t.q[sigma[i]] != prof_a.q[i]) q_same = false;
    }
    out.check(p_scales, "matrix ring: p scales by n under the class matching");
    out.check(q_same, "matrix ring: q preserved under the class matching");
    out.check(min_cyclic_k(prof_t) == ceil_div(min_cyclic_k(prof_a), n),
              "matrix ring: minimal k transports as ceil(k/n)");

    bool tops_commute = true;
    for (std::size_t j = 0; j < amods.size(); ++j) {
        alg::ModuleInvariants ia = alg::module_invariants(amods[j], ba);
        alg::ModuleInvariants it = alg::module_invariants(tmods[j], bt);
        for (std::size_t i = 0; i < prof_a.m; ++i)
            if (ia.c_top[i] != it.c_top[sigma[i]]) tops_commute = false;
    }
    out.check(tops_commute, "matrix ring: top commutes with the column functor");

    out.check(alg::is_full_idempotent(t, bt.basic_idem), "corner: the basic idempotent is full");
    alg::Corner corner = alg::corner_algebra(t, bt.basic_idem);
    std::vector<alg::AModule> cmods;
    for (const alg::AModule& m : tmods) cmods.push_back(alg::corner_module(corner, m));
    alg::Basics bc;
    AlgebraProfile prof_c = profile_algebra(corner.algebra, &cmods, rng, &bc);
    out.check(prof_c.m == prof_a.m, "corner: class count preserved");
    out.check(prof_c.basic, "corner: corner at the basic idempotent is basic");
    {
        std::multiset<std::size_t> q1(prof_c.q.begin(), prof_c.q.end());
        std::multiset<std::size_t> q2(prof_a.q.begin(), prof_a.q.end());
        out.check(q1 == q2, "corner: q multiset preserved");
    }
    out.check(is_left_kothe(prof_c).value == is_left_kothe(prof_a).value,
              "corner: Koethe verdict agrees with the base algebra");
    return out;
}

MoritaReport corner_consistency(const alg::FDAlgebra& a,
                                const std::vector<alg::AModule>& indecomposables,
                                const Mat& full_idem, Rng& rng) {
    MoritaReport out;
    KOTHE_CHECK(alg::is_full_idempotent(a, full_idem),
                "corner_consistency needs a full idempotent");
    alg::Basics ba;
    AlgebraProfile prof_a = profile_algebra(a, &indecomposables, rng, &ba);
    alg::Corner corner = alg::corner_algebra(a, full_idem);
    std::vector<alg::AModule> cmods;
    for (const alg::AModule& m : indecomposables)
        cmods.push_back(alg::corner_module(corner, m));
    alg::Basics bc;
    AlgebraProfile prof_c = profile_algebra(corner.algebra, &cmods, rng, &bc);
    out.check(prof_c.m == prof_a.m, "corner: class count preserved");
    {
        std::multiset<std::size_t> q1(prof_c.q.begin(), prof_c.q.end());
        std::multiset<std::size_t> q2(prof_a.q.begin(), prof_a.q.end());
        out.check(q1 == q2, "corner: q multiset preserved");
    }
    out.check(is_left_kothe(prof_c).value == is_left_kothe(prof_a).value,
              "corner: Koethe verdict agrees");
    return out;
}

}  // namespace kothe::decide
