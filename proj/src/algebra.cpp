#include "kothe/algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "kothe/kernels.hpp"

namespace kothe::alg {

using la::Poly;

namespace {

constexpr std::size_t kGfDimCap = 200;
constexpr std::size_t kQqDimCap = 60;

void check_dim_cap(const Field& f, std::size_t dim) {
    std::size_t cap = f.is_gf() ? kGfDimCap : kQqDimCap;
    KOTHE_CHECK(dim <= cap, "algebra dimension " + std::to_string(dim) +
                                " exceeds the desk-scale cap for " + f.str());
}

bool flat_equal(const Mat& a, const Mat& b) {
    if (a.rows() * a.cols() != b.rows() * b.cols() || a.field() != b.field()) return false;
    std::size_t n = a.rows() * a.cols();
    if (n == 0) return true;
    if (a.field().is_gf()) {
        const uint32_t* pa = a.gf_row(0);
        const uint32_t* pb = b.gf_row(0);
        return std::equal(pa, pa + n, pb);
    }
    for (std::size_t i = 0; i < n; ++i)
        if (a.q_at(i / a.cols(), i % a.cols()) != b.q_at(i / b.cols(), i % b.cols()))
            return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// FDAlgebra

FDAlgebra FDAlgebra::make(const Field& f, std::vector<std::string> basis_names, Mat unit_row,
                          Mat table, bool trusted) {
    FDAlgebra a(f);
    a.dim_ = unit_row.cols();
    KOTHE_CHECK(a.dim_ >= 1, "algebra must have positive dimension");
    check_dim_cap(f, a.dim_);
    KOTHE_CHECK(unit_row.rows() == 1, "unit must be a single row");
    KOTHE_CHECK(table.rows() == a.dim_ * a.dim_ && table.cols() == a.dim_,
                "structure-constant table must be dim^2 x dim");
    KOTHE_CHECK(unit_row.field() == f && table.field() == f, "field mismatch");
    if (basis_names.empty())
        for (std::size_t i = 0; i < a.dim_; ++i) basis_names.push_back("b" + std::to_string(i));
    KOTHE_CHECK(basis_names.size() == a.dim_, "basis name count mismatch");
    a.names_ = std::move(basis_names);
    a.unit_ = std::move(unit_row);
    a.table_ = std::move(table);

    for (std::size_t j = 0; j < a.dim_; ++j) {
        Mat bj = a.basis_row(j);
        KOTHE_CHECK(a.mul(a.unit_, bj) == bj, "unit law fails: 1*" + a.names_[j]);
        KOTHE_CHECK(a.mul(bj, a.unit_) == bj, "unit law fails: " + a.names_[j] + "*1");
    }
    if (!trusted) {
        // associativity tensor, blockwise per first index:
        //   lhs_i[j][k,l] = sum_m c_{ij}^m c_{mk}^l
        //   rhs_i[j,k][l] = sum_m c_{jk}^m c_{im}^l
        const std::size_t d = a.dim_;
        Mat m2 = Mat::zeros(f, d, d * d);
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l)
                    m2.set(m, k * d + l, a.table_.get(m * d + k, l));
        for (std::size_t i = 0; i < d; ++i) {
            Mat ti = Mat::zeros(f, d, d);
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t l = 0; l < d; ++l) ti.set(j, l, a.table_.get(i * d + j, l));
            Mat lhs = la::mul(ti, m2);
            Mat rhs = la::mul(a.table_, ti);
            KOTHE_CHECK(flat_equal(lhs, rhs),
                        "structure constants are not associative (around " + a.names_[i] + ")");
        }
    }
    return a;
}

Mat FDAlgebra::basis_row(std::size_t i) const {
    Mat r = Mat::zeros(f_, 1, dim_);
    r.set_int(0, i, 1);
    return r;
}

Mat FDAlgebra::mul(const Mat& x, const Mat& y) const {
    KOTHE_CHECK(x.cols() == dim_ && y.cols() == dim_ && x.rows() == 1 && y.rows() == 1,
                "element shape mismatch");
    Mat acc = Mat::zeros(f_, 1, dim_);
    if (f_.is_gf()) {
        const uint32_t p = f_.p();
        for (std::size_t i = 0; i < dim_; ++i) {
            uint32_t xi = x.gf_at(0, i);
            if (!xi) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                uint32_t yj = y.gf_at(0, j);
                if (!yj) continue;
                uint32_t c = la::gf::mul(xi, yj, p);
                la::kern::axpy(acc.gf_row(0), table_.gf_row(i * dim_ + j), c, dim_, p);
            }
        }
    } else {
        for (std::size_t i = 0; i < dim_; ++i) {
            const Rat& xi = x.q_at(0, i);
            if (xi == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                const Rat& yj = y.q_at(0, j);
                if (yj == 0) continue;
                Rat c = xi * yj;
                for (std::size_t l = 0; l < dim_; ++l)
                    acc.q_at(0, l) += c * table_.q_at(i * dim_ + j, l);
            }
        }
    }
    return acc;
}

Mat FDAlgebra::pow_el(const Mat& x, uint64_t e) const {
    Mat acc = unit_;
    Mat base = x;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

Mat FDAlgebra::left_action(const Mat& x) const {
    Mat m = Mat::zeros(f_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Mat col = mul(x, basis_row(j));
        for (std::size_t l = 0; l < dim_; ++l) m.set(l, j, col.get(0, l));
    }
    return m;
}

Mat FDAlgebra::right_action(const Mat& x) const {
    Mat m = Mat::zeros(f_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Mat col = mul(basis_row(j), x);
        for (std::size_t l = 0; l < dim_; ++l) m.set(l, j, col.get(0, l));
    }
    return m;
}

bool FDAlgebra::is_idempotent(const Mat& x) const { return mul(x, x) == x; }

bool FDAlgebra::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j)
            if (table_.row(i * dim_ + j) != table_.row(j * dim_ + i)) return false;
    return true;
}

Poly FDAlgebra::min_poly_of(const Mat& x) const {
    Mat powers = unit_;  // rows: 1, x, x^2, ...
    Mat cur = x;
    for (std::size_t d = 1; d <= dim_ + 1; ++d) {
        auto sol = la::solve(la::transpose(powers), la::transpose(cur));
        if (sol) {
            std::vector<Fel> coeffs;
            for (std::size_t i = 0; i < d; ++i) coeffs.push_back(-sol->get(i, 0));
            coeffs.push_back(Fel::one(f_));
            return Poly::from_coeffs(f_, std::move(coeffs));
        }
        powers = la::vstack(powers, cur);
        cur = mul(cur, x);
    }
    throw Error("min_poly_of failed to terminate");
}

Mat FDAlgebra::eval_poly(const Poly& p, const Mat& x) const {
    Mat acc = Mat::zeros(f_, 1, dim_);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = mul(acc, x);
        acc = la::add(acc, la::scale(p.coeff(i), unit_));
    }
    return acc;
}

std::vector<std::size_t> FDAlgebra::generator_indices() const {
    // greedy: add basis elements outside the unital subalgebra generated so far
    std::vector<std::size_t> gens;
    Mat span = la::row_space(unit_);
    auto contains = [&](const Mat& v) {
        return la::solve(la::transpose(span), la::transpose(v)).has_value();
    };
    auto close = [&]() {
        for (;;) {
            std::size_t before = span.rows();
            Mat prods = span;
            for (std::size_t r = 0; r < span.rows(); ++r)
                for (std::size_t s = 0; s < span.rows(); ++s)
                    prods = la::vstack(prods, mul(span.row(r), span.row(s)));
            span = la::row_space(prods);
            if (span.rows() == before || span.rows() == dim_) break;
        }
    };
    for (std::size_t i = 0; i < dim_ && span.rows() < dim_; ++i) {
        Mat bi = basis_row(i);
        if (contains(bi)) continue;
        gens.push_back(i);
        span = la::row_space(la::vstack(span, bi));
        close();
    }
    return gens;
}

// ---------------------------------------------------------------------------
// constructions

Mat PathAlgebra::vertex_idem(std::size_t v) const {
    Mat r = Mat::zeros(algebra.field(), 1, algebra.dim());
    r.set_int(0, v, 1);
    return r;
}

PathAlgebra path_algebra(const qv::Quiver& q, const Field& f) {
    KOTHE_CHECK(!q.has_oriented_cycle(),
                "path algebra is infinite dimensional: quiver has a loop or oriented cycle");
    PathAlgebra pa;
    pa.quiver = q;
    const std::size_t nv = q.num_vertices();
    KOTHE_CHECK(nv >= 1, "path algebra needs at least one vertex");
    std::vector<PathAlgebra::Path> paths;
    std::vector<std::string> names;
    for (std::size_t v = 0; v < nv; ++v) {
        paths.push_back({v, v, {}});
        names.push_back("e_" + q.vertex_name(v));
    }
    // breadth-first by length, deterministic
    std::size_t lo = 0, hi = paths.size();
    while (lo < hi) {
        for (std::size_t pi = lo; pi < hi; ++pi)
            for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
                const qv::Arrow& ar = q.arrows()[ai];
                if (ar.src != paths[pi].dst) continue;
                PathAlgebra::Path np{paths[pi].src, ar.dst, paths[pi].arrows};
                np.arrows.push_back(ai);
                paths.push_back(np);
                names.push_back(paths[pi].arrows.empty() ? ar.label
                                                         : ar.label + "*" + names[pi]);
            }
        lo = hi;
        hi = paths.size();
        check_dim_cap(f, paths.size());
    }
    const std::size_t d = paths.size();
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[{paths[i].src, paths[i].arrows}] = i;

    Mat table = Mat::zeros(f, d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            // paths[i] * paths[j] traverses j first, then i
            if (paths[j].dst != paths[i].src) continue;
            std::vector<std::size_t> arrows = paths[j].arrows;
            arrows.insert(arrows.end(), paths[i].arrows.begin(), paths[i].arrows.end());
            auto it = index.find({paths[j].src, arrows});
            KOTHE_CHECK(it != index.end(), "internal: path concatenation not in basis");
            table.set_int(i * d + j, it->second, 1);
        }
    Mat unit = Mat::zeros(f, 1, d);
    for (std::size_t v = 0; v < nv; ++v) unit.set_int(0, v, 1);
    pa.algebra = FDAlgebra::make(f, std::move(names), unit, table, /*trusted=*/true);
    pa.paths = std::move(paths);
    return pa;
}

FDAlgebra matrix_ring(const FDAlgebra& a, std::size_t n) {
    KOTHE_CHECK(n >= 1, "matrix_ring needs n >= 1");
    const std::size_t da = a.dim(), d = n * n * da;
    check_dim_cap(a.field(), d);
    const Field& f = a.field();
    // basis index (r*n + s)*da + i  <->  E_rs (x) b_i
    auto idx = [&](std::size_t r, std::size_t s, std::size_t i) { return (r * n + s) * da + i; };
    Mat table = Mat::zeros(f, d * d, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < da; ++i)
                for (std::size_t v = 0; v < n; ++v)
                    for (std::size_t j = 0; j < da; ++j) {
                        Mat prod = a.table_row(i, j);
                        std::size_t row = idx(r, s, i) * d + idx(s, v, j);
                        for (std::size_t l = 0; l < da; ++l)
                            table.set(row, idx(r, v, l), prod.get(0, l));
                    }
    Mat unit = Mat::zeros(f, 1, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i < da; ++i) unit.set(0, idx(r, r, i), a.unit().get(0, i));
    std::vector<std::string> names;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < da; ++i)
                names.push_back("E" + std::to_string(r + 1) + std::to_string(s + 1) + "*" +
                                a.basis_names()[i]);
    return FDAlgebra::make(f, std::move(names), unit, table, /*trusted=*/true);
}

FDAlgebra opposite(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Mat table = Mat::zeros(a.field(), d * d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat row = a.table_row(j, i);
            for (std::size_t l = 0; l < d; ++l) table.set(i * d + j, l, row.get(0, l));
        }
    std::vector<std::string> names = a.basis_names();
    return FDAlgebra::make(a.field(), std::move(names), a.unit(), table, /*trusted=*/true);
}

FDAlgebra direct_product(const FDAlgebra& a, const FDAlgebra& b) {
    KOTHE_CHECK(a.field() == b.field(), "direct_product needs one field");
    const std::size_t da = a.dim(), db = b.dim(), d = da + db;
    const Field& f = a.field();
    Mat table = Mat::zeros(f, d * d, d);
    for (std::size_t i = 0; i < da; ++i)
        for (std::size_t j = 0; j < da; ++j) {
            Mat row = a.table_row(i, j);
            for (std::size_t l = 0; l < da; ++l) table.set(i * d + j, l, row.get(0, l));
        }
    for (std::size_t i = 0; i < db; ++i)
        for (std::size_t j = 0; j < db; ++j) {
            Mat row = b.table_row(i, j);
            for (std::size_t l = 0; l < db; ++l)
                table.set((da + i) * d + (da + j), da + l, row.get(0, l));
        }
    Mat unit = Mat::zeros(f, 1, d);
    for (std::size_t i = 0; i < da; ++i) unit.set(0, i, a.unit().get(0, i));
    for (std::size_t i = 0; i < db; ++i) unit.set(0, da + i, b.unit().get(0, i));
    std::vector<std::string> names;
    for (const auto& n : a.basis_names()) names.push_back(n + ".L");
    for (const auto& n : b.basis_names()) names.push_back(n + ".R");
    return FDAlgebra::make(f, std::move(names), unit, table, /*trusted=*/true);
}

Corner corner_algebra(const FDAlgebra& a, const Mat& e) {
    KOTHE_CHECK(a.is_idempotent(e), "corner_algebra requires an idempotent");
    KOTHE_CHECK(!e.is_zero(), "corner of the zero idempotent is empty");
    const std::size_t d = a.dim();
    Mat rows = Mat::zeros(a.field(), 0, d);
    for (std::size_t i = 0; i < d; ++i) {
        Mat v = a.mul(a.mul(e, a.basis_row(i)), e);
        rows = rows.rows() == 0 ? v : la::vstack(rows, v);
    }
    Mat basis = la::row_space(rows);
    const std::size_t k = basis.rows();
    Mat basis_t = la::transpose(basis);
    auto coords = [&](const Mat& x) {
        auto sol = la::solve(basis_t, la::transpose(x));
        KOTHE_CHECK(sol.has_value(), "internal: corner not closed");
        return la::transpose(*sol);
    };
    Mat table = Mat::zeros(a.field(), k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Mat c = coords(a.mul(basis.row(i), basis.row(j)));
            for (std::size_t l = 0; l < k; ++l) table.set(i * k + j, l, c.get(0, l));
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("c" + std::to_string(i));
    return {FDAlgebra::make(a.field(), std::move(names), coords(e), table, /*trusted=*/true),
            basis, e};
}

Mat Quotient::project(const Mat& x) const {
    Mat v = x;
    for (std::size_t r = 0; r < ideal_rref.rows(); ++r) {
        std::size_t pc = 0;
        while (pc < v.cols() && ideal_rref.get(r, pc).is_zero()) ++pc;
        Fel c = v.get(0, pc);
        if (!c.is_zero()) v = la::sub(v, la::scale(c, ideal_rref.row(r)));
    }
    Mat out = Mat::zeros(v.field(), 1, comp_cols.size());
    for (std::size_t i = 0; i < comp_cols.size(); ++i) out.set(0, i, v.get(0, comp_cols[i]));
    return out;
}

Quotient quotient_by_ideal(const FDAlgebra& a, const Mat& ideal_rows) {
    Quotient q;
    q.ideal_rref = la::row_space(ideal_rows);
    std::vector<bool> is_pivot(a.dim(), false);
    {
        la::RrefResult rr = la::rref(ideal_rows);
        for (std::size_t c : rr.pivots) is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < a.dim(); ++c)
        if (!is_pivot[c]) q.comp_cols.push_back(c);
    const std::size_t k = q.comp_cols.size();
    KOTHE_CHECK(k >= 1, "quotient by the whole algebra");
    q.lift = Mat::zeros(a.field(), k, a.dim());
    for (std::size_t i = 0; i < k; ++i) q.lift.set_int(i, q.comp_cols[i], 1);
    Mat table = Mat::zeros(a.field(), k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Mat c = q.project(a.mul(q.lift.row(i), q.lift.row(j)));
            for (std::size_t l = 0; l < k; ++l) table.set(i * k + j, l, c.get(0, l));
        }
    std::vector<std::string> names;
    for (std::size_t c : q.comp_cols) names.push_back(a.basis_names()[c] + "~");
    q.algebra = FDAlgebra::make(a.field(), std::move(names), q.project(a.unit()), table,
                                /*trusted=*/true);
    return q;
}

// ---------------------------------------------------------------------------
// radical

namespace {

// dense square matrices over Z/m for the characteristic-p trace refinement;
// m < 2^40, so products accumulate safely in unsigned __int128
struct U64Mat {
    std::size_t n;
    uint64_t m;
    std::vector<uint64_t> a;
    U64Mat(std::size_t n_, uint64_t m_) : n(n_), m(m_), a(n_ * n_, 0) {}
    uint64_t& at(std::size_t r, std::size_t c) { return a[r * n + c]; }
    uint64_t at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

U64Mat u64_mul(const U64Mat& x, const U64Mat& y) {
    U64Mat z(x.n, x.m);
    std::vector<unsigned __int128> acc(x.n);
    for (std::size_t i = 0; i < x.n; ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < x.n; ++k) {
            uint64_t v = x.at(i, k);
            if (!v) continue;
            unsigned __int128 vv = v;
            const uint64_t* yr = &y.a[k * y.n];
            for (std::size_t j = 0; j < x.n; ++j) acc[j] += vv * yr[j];
        }
        for (std::size_t j = 0; j < x.n; ++j)
            z.at(i, j) = static_cast<uint64_t>(acc[j] % x.m);
    }
    return z;
}

U64Mat u64_pow(U64Mat base, uint64_t e) {
    U64Mat acc(base.n, base.m);
    for (std::size_t i = 0; i < base.n; ++i) acc.at(i, i) = 1 % base.m;
    while (e) {
        if (e & 1) acc = u64_mul(acc, base);
        base = u64_mul(base, base);
        e >>= 1;
    }
    return acc;
}

uint64_t u64_trace(const U64Mat& x) {
    unsigned __int128 t = 0;
    for (std::size_t i = 0; i < x.n; ++i) t += x.at(i, i);
    return static_cast<uint64_t>(t % x.m);
}

// reduce a row vector by rref rows; zero residual means membership
Mat reduce_by_rref(const Mat& rref_rows, const Mat& v) {
    Mat r = v;
    for (std::size_t i = 0; i < rref_rows.rows(); ++i) {
        std::size_t pc = 0;
        while (pc < r.cols() && rref_rows.get(i, pc).is_zero()) ++pc;
        if (pc == r.cols()) continue;
        Fel c = r.get(0, pc);
        if (!c.is_zero()) r = la::sub(r, la::scale(c, rref_rows.row(i)));
    }
    return r;
}

bool is_two_sided_ideal(const FDAlgebra& a, const Mat& rows) {
    if (rows.rows() == 0) return true;
    Mat span = la::row_space(rows);
    for (std::size_t r = 0; r < span.rows(); ++r)
        for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!reduce_by_rref(span, a.mul(a.basis_row(i), span.row(r))).is_zero())
                return false;
            if (!reduce_by_rref(span, a.mul(span.row(r), a.basis_row(i))).is_zero())
                return false;
        }
    return true;
}

// J nilpotent iff the chain V_0 = A, V_{t+1} = J*V_t of column spans reaches 0
bool is_nilpotent_subspace(const FDAlgebra& a, const Mat& rows) {
    if (rows.rows() == 0) return true;
    std::vector<Mat> lact;
    for (std::size_t r = 0; r < rows.rows(); ++r) lact.push_back(a.left_action(rows.row(r)));
    Mat v = Mat::identity(a.field(), a.dim());
    for (;;) {
        if (v.cols() == 0) return true;
        Mat cols = Mat::zeros(a.field(), a.dim(), 0);
        for (const Mat& l : lact) cols = la::hstack(cols, la::mul(l, v));
        Mat nv = la::image_basis(cols);
        if (nv.cols() >= v.cols()) return false;  // chain stalled above zero
        v = nv;
    }
}

// T[l] = trace of left multiplication by b_l
std::vector<Fel> regular_trace_vector(const FDAlgebra& a) {
    std::vector<Fel> t;
    for (std::size_t l = 0; l < a.dim(); ++l) {
        Fel acc = Fel::zero(a.field());
        for (std::size_t k = 0; k < a.dim(); ++k) acc = acc + a.table_row(l, k).get(0, k);
        t.push_back(acc);
    }
    return t;
}

}  // namespace

Mat jacobson_radical(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    const Field& f = a.field();
    std::vector<Fel> tvec = regular_trace_vector(a);
    auto gram = [&](const Mat& basis) {
        Mat g = Mat::zeros(f, basis.rows(), basis.rows());
        for (std::size_t r = 0; r < basis.rows(); ++r)
            for (std::size_t s = r; s < basis.rows(); ++s) {
                Mat prod = a.mul(basis.row(r), basis.row(s));
                Fel acc = Fel::zero(f);
                for (std::size_t l = 0; l < d; ++l) acc = acc + prod.get(0, l) * tvec[l];
                g.set(r, s, acc);
                g.set(s, r, acc);
            }
        return g;
    };
    auto contract = [&](const Mat& basis, const Mat& g) {
        Mat k = la::kernel_basis(la::transpose(g));
        return la::row_space(la::mul(la::transpose(k), basis));
    };

    Mat cur = contract(Mat::identity(f, d), gram(Mat::identity(f, d)));

    if (f.is_q()) {
        // characteristic zero: the trace-form radical is the radical
        KOTHE_CHECK(is_two_sided_ideal(a, cur) && is_nilpotent_subspace(a, cur),
                    "internal: radical verification failed over QQ");
        return cur;
    }

    auto done = [&](const Mat& cand) {
        // a nilpotent two-sided ideal containing nothing extra: since the
        // refinement chain always contains J, candidate == J exactly when it
        // is itself a nilpotent ideal
        return is_two_sided_ideal(a, cand) && is_nilpotent_subspace(a, cand);
    };
    if (done(cur)) return cur;

    // characteristic-p refinement (iterated trace conditions on integer
    // lifts): f_i(x,y) = Tr((XY)^(p^i)) / p^i mod p on the previous level
    const uint32_t p = f.p();
    for (uint64_t pk = p; pk <= d; pk *= p) {
        const std::size_t k = cur.rows();
        if (k == 0) return cur;
        const uint64_t mod = pk * p;
        std::vector<U64Mat> reps;
        for (std::size_t r = 0; r < k; ++r) {
            Mat lm = a.left_action(cur.row(r));
            U64Mat u(d, mod);
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j) u.at(i, j) = lm.gf_at(i, j) % mod;
            reps.push_back(std::move(u));
        }
        Mat g = Mat::zeros(f, k, k);
        for (std::size_t r = 0; r < k; ++r)
            for (std::size_t s = r; s < k; ++s) {
                U64Mat prod = u64_mul(reps[r], reps[s]);
                uint64_t tr = u64_trace(u64_pow(prod, pk));
                KOTHE_CHECK(tr % pk == 0, "internal: trace refinement divisibility failed");
                Fel v = Fel::from_gf(f, static_cast<uint32_t>((tr / pk) % p));
                g.set(r, s, v);
                g.set(s, r, v);
            }
        cur = contract(cur, g);
        if (done(cur)) return cur;
    }
    throw Error("internal: radical computation did not certify");
}

// ---------------------------------------------------------------------------
// Wedderburn machinery

namespace {

struct Subalgebra {
    FDAlgebra algebra;
    Mat embed;  // rows in parent coordinates
};

// subalgebra on independent rows, multiplicatively closed, containing the unit
Subalgebra subalgebra_on_rows(const FDAlgebra& a, const Mat& rows, const Mat& unit_in_parent) {
    const std::size_t k = rows.rows();
    Mat rows_t = la::transpose(rows);
    auto coords = [&](const Mat& x) {
        auto sol = la::solve(rows_t, la::transpose(x));
        KOTHE_CHECK(sol.has_value(), "internal: element not in subalgebra");
        return la::transpose(*sol);
    };
    Mat table = Mat::zeros(a.field(), k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Mat c = coords(a.mul(rows.row(i), rows.row(j)));
            for (std::size_t l = 0; l < k; ++l) table.set(i * k + j, l, c.get(0, l));
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("z" + std::to_string(i));
    return {FDAlgebra::make(a.field(), std::move(names), coords(unit_in_parent), table,
                            /*trusted=*/true),
            rows};
}

Subalgebra center_of(const FDAlgebra& a) {
    const std::size_t d = a.dim();
    Mat cond = Mat::zeros(a.field(), d, 0);
    for (std::size_t i = 0; i < d; ++i) {
        Mat ra = Mat::zeros(a.field(), d, d), lft = Mat::zeros(a.field(), d, d);
        for (std::size_t kk = 0; kk < d; ++kk) {
            Mat r1 = a.table_row(kk, i);  // b_k * b_i
            Mat r2 = a.table_row(i, kk);  // b_i * b_k
            for (std::size_t l = 0; l < d; ++l) {
                ra.set(kk, l, r1.get(0, l));
                lft.set(kk, l, r2.get(0, l));
            }
        }
        cond = la::hstack(cond, la::sub(ra, lft));
    }
    Mat z = la::row_space(la::transpose(la::kernel_basis(la::transpose(cond))));
    return subalgebra_on_rows(a, z, a.unit());
}

// Frobenius x -> x^p on a commutative GF(p)-algebra, on column coordinates
Mat frobenius_matrix(const FDAlgebra& b) {
    const std::size_t d = b.dim();
    Mat fr = Mat::zeros(b.field(), d, d);
    for (std::size_t j = 0; j < d; ++j) {
        Mat v = b.pow_el(b.basis_row(j), b.field().p());
        for (std::size_t l = 0; l < d; ++l) fr.set(l, j, v.get(0, l));
    }
    return fr;
}

Mat random_element(const FDAlgebra& b, Rng& rng) {
    Mat x = Mat::zeros(b.field(), 1, b.dim());
    for (std::size_t i = 0; i < b.dim(); ++i) x.set(0, i, rng.fel(b.field()));
    return x;
}

// a coprime minimal-polynomial split mu = mu1 * mu2 yields the idempotent
// h(x), h = 1 mod mu1 and 0 mod mu2
std::optional<Mat> idempotent_from_minpoly(const FDAlgebra& b, const Mat& x, Rng& rng) {
    Poly mu = b.min_poly_of(x);
    if (mu.degree() < 1) return std::nullopt;
    auto facs = la::factor(mu, rng);
    if (facs.size() < 2) return std::nullopt;
    Poly mu1 = Poly::one(b.field());
    for (int i = 0; i < facs[0].mult; ++i) mu1 = la::mul(mu1, facs[0].f);
    Poly mu2 = Poly::one(b.field());
    for (std::size_t i = 1; i < facs.size(); ++i)
        for (int j = 0; j < facs[i].mult; ++j) mu2 = la::mul(mu2, facs[i].f);
    la::ExtGcd eg = la::ext_gcd(mu1, mu2);
    KOTHE_CHECK(eg.g.degree() == 0 && !eg.g.is_zero(), "internal: minpoly factors not coprime");
    Poly h = la::mul(eg.t, mu2);  // s*mu1 + t*mu2 = 1
    Mat e = b.eval_poly(h, x);
    if (e.is_zero() || e == b.unit() || !b.is_idempotent(e)) return std::nullopt;
    return e;
}

void decompose_idempotent(const FDAlgebra& bar, const Mat& e, Rng& rng, std::vector<Mat>& out) {
    Corner d = corner_algebra(bar, e);
    if (wedderburn_is_division(d.algebra, rng)) {
        out.push_back(e);
        return;
    }
    for (int tries = 0; tries < 512; ++tries) {
        Mat x = random_element(d.algebra, rng);
        auto g = idempotent_from_minpoly(d.algebra, x, rng);
        if (!g) continue;
        Mat g_in_bar = la::mul(*g, d.embed);
        Mat rest = la::sub(e, g_in_bar);
        KOTHE_CHECK(bar.is_idempotent(g_in_bar) && bar.is_idempotent(rest) &&
                        bar.mul(g_in_bar, rest).is_zero() && bar.mul(rest, g_in_bar).is_zero(),
                    "internal: idempotent split not orthogonal");
        decompose_idempotent(bar, g_in_bar, rng, out);
        decompose_idempotent(bar, rest, rng, out);
        return;
    }
    throw Error("idempotent splitting did not converge");
}

}  // namespace

bool wedderburn_is_division(const FDAlgebra& b, Rng& rng) {
    if (b.dim() == 1) return true;
    if (b.field().is_gf()) {
        // finite division rings are fields; a commutative GF(p)-algebra is a
        // field iff Frobenius is bijective with a one-dimensional fixed space
        if (!b.is_commutative()) return false;
        Mat fr = frobenius_matrix(b);
        if (la::rank(fr) != b.dim()) return false;
        Mat fixed = la::kernel_basis(la::sub(fr, Mat::identity(b.field(), b.dim())));
        return fixed.cols() == 1;
    }
    for (int tries = 0; tries < 64; ++tries) {
        Mat x = random_element(b, rng);
        Poly mu = b.min_poly_of(x);
        if (mu.degree() < 1) continue;
        auto facs = la::factor(mu, rng);
        if (facs.size() >= 2 || facs[0].mult >= 2) return false;  // zero divisor / nilpotent
        if (mu.degree() == static_cast<long>(b.dim())) return true;  // primitive + irreducible
    }
    if (!b.is_commutative())
        throw Error(
            "cannot certify a division algebra over QQ at desk scale (noncommutative "
            "semisimple quotient)");
    throw Error("division certification over QQ did not converge");
}

bool is_local_algebra(const FDAlgebra& e, Rng& rng) {
    Mat j = jacobson_radical(e);
    KOTHE_CHECK(j.rows() < e.dim(), "internal: radical cannot be the whole algebra");
    Quotient q = quotient_by_ideal(e, j);
    return wedderburn_is_division(q.algebra, rng);
}

std::vector<Mat> all_idempotents_exhaustive(const FDAlgebra& a) {
    KOTHE_CHECK(a.field().is_gf(), "exhaustive idempotent search needs a finite field");
    const uint32_t p = a.field().p();
    double total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) total *= p;
    KOTHE_CHECK(total <= 65536.0, "exhaustive idempotent search cap exceeded");
    std::vector<Mat> out;
    std::vector<uint32_t> odo(a.dim(), 0);
    for (;;) {
        Mat x = Mat::zeros(a.field(), 1, a.dim());
        for (std::size_t i = 0; i < a.dim(); ++i) x.set(0, i, Fel::from_gf(a.field(), odo[i]));
        if (a.is_idempotent(x)) out.push_back(x);
        std::size_t i = 0;
        while (i < a.dim() && ++odo[i] == p) odo[i++] = 0;
        if (i == a.dim()) break;
    }
    return out;
}

Basics basics(const FDAlgebra& a, Rng& rng) {
    Basics out;
    out.jrad = jacobson_radical(a);
    Quotient qt = quotient_by_ideal(a, out.jrad);
    const FDAlgebra& bar = qt.algebra;

    // central primitive idempotents, found inside the center
    Subalgebra z = center_of(bar);
    std::size_t expected_blocks = 0;
    if (a.field().is_gf()) {
        Mat fr = frobenius_matrix(z.algebra);
        expected_blocks =
            la::kernel_basis(la::sub(fr, Mat::identity(a.field(), z.algebra.dim()))).cols();
    }
    std::vector<Mat> central{z.algebra.unit()};  // in Z coordinates
    for (;;) {
        bool changed = false;
        std::vector<Mat> next;
        for (const Mat& fidem : central) {
            Corner zf = corner_algebra(z.algebra, fidem);
            if (zf.algebra.dim() <= 1 || wedderburn_is_division(zf.algebra, rng)) {
                next.push_back(fidem);
                continue;
            }
            bool split = false;
            for (int tries = 0; tries < 512 && !split; ++tries) {
                Mat x = random_element(zf.algebra, rng);
                auto g = idempotent_from_minpoly(zf.algebra, x, rng);
                if (!g) continue;
                Mat g_in_z = la::mul(*g, zf.embed);
                next.push_back(g_in_z);
                next.push_back(la::sub(fidem, g_in_z));
                split = changed = true;
            }
            KOTHE_CHECK(split, "central idempotent splitting did not converge");
        }
        central = std::move(next);
        if (!changed) break;
    }
    if (expected_blocks)
        KOTHE_CHECK(central.size() == expected_blocks, "internal: central splitting incomplete");

    std::vector<Mat> prim_bar;
    std::vector<std::size_t> class_of;
    std::vector<std::size_t> div_dim;
    for (std::size_t blk = 0; blk < central.size(); ++blk) {
        Mat eps = la::mul(central[blk], z.embed);
        std::vector<Mat> prims;
        decompose_idempotent(bar, eps, rng, prims);
        Corner dc = corner_algebra(bar, prims.front());
        for (const Mat& e : prims) {
            prim_bar.push_back(e);
            class_of.push_back(blk);
        }
        div_dim.push_back(dc.algebra.dim());
        Corner block = corner_algebra(bar, eps);
        KOTHE_CHECK(block.algebra.dim() == prims.size() * prims.size() * dc.algebra.dim(),
                    "internal: Wedderburn block dimensions inconsistent");
    }

    // grouping certificate: e_i bar e_j vanishes iff different blocks
    for (std::size_t c1 = 0; c1 < central.size(); ++c1)
        for (std::size_t c2 = 0; c2 < central.size(); ++c2) {
            std::size_t i = std::find(class_of.begin(), class_of.end(), c1) - class_of.begin();
            std::size_t j = std::find(class_of.begin(), class_of.end(), c2) - class_of.begin();
            bool nonzero = false;
            for (std::size_t t = 0; t < bar.dim() && !nonzero; ++t)
                nonzero = !bar.mul(bar.mul(prim_bar[i], bar.basis_row(t)), prim_bar[j]).is_zero();
            KOTHE_CHECK(nonzero == (c1 == c2),
                        "internal: projective isomorphism grouping inconsistent");
        }

    // lift the orthogonal system to A, one corner at a time
    std::vector<Mat> lifted;
    Mat sum = Mat::zeros(a.field(), 1, a.dim());
    for (const Mat& ebar : prim_bar) {
        Mat f = la::sub(a.unit(), sum);
        Mat b = a.mul(a.mul(f, la::mul(ebar, qt.lift)), f);
        bool ok = false;
        for (int it = 0; it < 70; ++it) {
            if (a.is_idempotent(b)) {
                ok = true;
                break;
            }
            Mat b2 = a.mul(b, b);
            Mat b3 = a.mul(b2, b);
            b = la::sub(la::scale(Fel::from_int(a.field(), 3), b2),
                        la::scale(Fel::from_int(a.field(), 2), b3));
        }
        KOTHE_CHECK(ok, "internal: idempotent lifting did not terminate");
        lifted.push_back(b);
        sum = la::add(sum, b);
    }
    KOTHE_CHECK(sum == a.unit(), "internal: lifted idempotents do not sum to 1");
    for (std::size_t i = 0; i < lifted.size(); ++i)
        for (std::size_t j = 0; j < lifted.size(); ++j)
            if (i != j)
                KOTHE_CHECK(a.mul(lifted[i], lifted[j]).is_zero(),
                            "internal: lifted idempotents not orthogonal");

    out.prim = std::move(lifted);
    out.class_of = std::move(class_of);
    out.m = central.size();
    out.div_dim = std::move(div_dim);
    out.p.assign(out.m, 0);
    out.rep_of.assign(out.m, 0);
    std::vector<bool> seen(out.m, false);
    for (std::size_t i = 0; i < out.prim.size(); ++i) {
        ++out.p[out.class_of[i]];
        if (!seen[out.class_of[i]]) {
            seen[out.class_of[i]] = true;
            out.rep_of[out.class_of[i]] = i;
        }
    }
    out.basic_idem = Mat::zeros(a.field(), 1, a.dim());
    for (std::size_t c = 0; c < out.m; ++c)
        out.basic_idem = la::add(out.basic_idem, out.prim[out.rep_of[c]]);
    out.basic = std::all_of(out.p.begin(), out.p.end(), [](std::size_t x) { return x == 1; });
    return out;
}

Mat trace_ideal(const FDAlgebra& a, const Mat& e) {
    KOTHE_CHECK(a.is_idempotent(e), "trace_ideal requires an idempotent");
    Mat rows = Mat::zeros(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Mat bie = a.mul(a.basis_row(i), e);
        if (bie.is_zero()) continue;
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Mat v = a.mul(bie, a.basis_row(j));
            if (!v.is_zero()) rows = rows.rows() == 0 ? v : la::vstack(rows, v);
        }
    }
    if (rows.rows() == 0) return rows;
    return la::row_space(rows);
}

bool is_full_idempotent(const FDAlgebra& a, const Mat& e) {
    return trace_ideal(a, e).rows() == a.dim();
}

bool is_left_semicentral(const FDAlgebra& a, const Mat& e) {
    KOTHE_CHECK(a.is_idempotent(e), "is_left_semicentral requires an idempotent");
    Mat ae = Mat::zeros(a.field(), 0, a.dim());
    Mat eae = Mat::zeros(a.field(), 0, a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Mat v = a.mul(a.basis_row(i), e);
        ae = ae.rows() == 0 ? v : la::vstack(ae, v);
        Mat w = a.mul(e, v);
        eae = eae.rows() == 0 ? w : la::vstack(eae, w);
    }
    return la::row_space(ae) == la::row_space(eae);
}

// ---------------------------------------------------------------------------
// modules

AModule AModule::make(std::shared_ptr<const FDAlgebra> a, std::vector<Mat> action, bool trusted) {
    AModule m;
    KOTHE_CHECK(action.size() == a->dim(), "one action matrix per basis element required");
    m.dim_ = action.empty() ? 0 : action[0].rows();
    for (const Mat& x : action)
        KOTHE_CHECK(x.rows() == m.dim_ && x.cols() == m.dim_ && x.field() == a->field(),
                    "action matrix shape mismatch");
    m.a_ = std::move(a);
    m.act_ = std::move(action);
    Mat uact = Mat::zeros(m.a_->field(), m.dim_, m.dim_);
    for (std::size_t i = 0; i < m.a_->dim(); ++i) {
        Fel c = m.a_->unit().get(0, i);
        if (!c.is_zero()) uact = la::add(uact, la::scale(c, m.act_[i]));
    }
    KOTHE_CHECK(uact == Mat::identity(m.a_->field(), m.dim_), "unit does not act as identity");
    if (!trusted) {
        for (std::size_t i = 0; i < m.a_->dim(); ++i)
            for (std::size_t j = 0; j < m.a_->dim(); ++j)
                KOTHE_CHECK(la::mul(m.act_[i], m.act_[j]) == m.act_of(m.a_->table_row(i, j)),
                            "action does not respect the structure constants");
    }
    return m;
}

Mat AModule::act_of(const Mat& x) const {
    Mat acc = Mat::zeros(a_->field(), dim_, dim_);
    for (std::size_t i = 0; i < a_->dim(); ++i) {
        Fel c = x.get(0, i);
        if (!c.is_zero()) acc = la::add(acc, la::scale(c, act_[i]));
    }
    return acc;
}

AModule regular_module(std::shared_ptr<const FDAlgebra> a) {
    std::vector<Mat> act;
    for (std::size_t i = 0; i < a->dim(); ++i) act.push_back(a->left_action(a->basis_row(i)));
    return AModule::make(std::move(a), std::move(act), /*trusted=*/true);
}

SubQuot submodule(const AModule& m, const Mat& subspace_cols) {
    Mat u = la::image_basis(subspace_cols);
    std::vector<Mat> act;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        auto x = la::solve(u, la::mul(m.action(i), u));
        KOTHE_CHECK(x.has_value(), "subspace is not action-invariant");
        act.push_back(*x);
    }
    return {AModule::make(m.algebra_ptr(), std::move(act), /*trusted=*/true), u};
}

AModule projective_module(std::shared_ptr<const FDAlgebra> a, const Mat& e, Mat* basis_out) {
    KOTHE_CHECK(a->is_idempotent(e), "projective_module requires an idempotent");
    Mat rows = Mat::zeros(a->field(), 0, a->dim());
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Mat v = a->mul(a->basis_row(i), e);
        rows = rows.rows() == 0 ? v : la::vstack(rows, v);
    }
    Mat basis = la::row_space(rows);
    if (basis_out) *basis_out = basis;
    AModule reg = regular_module(a);
    return submodule(reg, la::transpose(basis)).mod;
}

AModule direct_sum(const AModule& m, const AModule& n) {
    KOTHE_CHECK(m.algebra().dim() == n.algebra().dim() &&
                    m.algebra().table() == n.algebra().table(),
                "direct_sum needs modules over the same algebra");
    std::vector<Mat> act;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        act.push_back(la::block_diag({m.action(i), n.action(i)}, m.algebra().field()));
    return AModule::make(m.algebra_ptr(), std::move(act), /*trusted=*/true);
}

SubQuot quotient_module(const AModule& m, const Mat& subspace_cols) {
    const Field& f = m.algebra().field();
    Mat s = la::image_basis(subspace_cols);
    const std::size_t n = m.dim(), k = s.cols(), q = n - k;
    la::RrefResult rr = la::rref(la::transpose(s));
    std::vector<bool> pivot_row(n, false);
    for (std::size_t c : rr.pivots) pivot_row[c] = true;
    Mat ec = Mat::zeros(f, n, q);
    std::size_t ci = 0;
    for (std::size_t r = 0; r < n; ++r)
        if (!pivot_row[r]) ec.set_int(r, ci++, 1);
    Mat t = la::hstack(s, ec);
    auto tinv = la::inverse(t);
    KOTHE_CHECK(tinv.has_value(), "internal: complement construction failed");
    Mat proj = Mat::zeros(f, q, n);
    for (std::size_t r = 0; r < q; ++r)
        for (std::size_t c = 0; c < n; ++c) proj.set(r, c, tinv->get(k + r, c));
    std::vector<Mat> act;
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        act.push_back(la::mul(proj, la::mul(m.action(i), ec)));
    return {AModule::make(m.algebra_ptr(), std::move(act), /*trusted=*/true), proj};
}

Mat radical_subspace(const AModule& m, const Mat& jrad) {
    Mat cols = Mat::zeros(m.algebra().field(), m.dim(), 0);
    for (std::size_t r = 0; r < jrad.rows(); ++r)
        cols = la::hstack(cols, m.act_of(jrad.row(r)));
    return la::image_basis(cols);
}

Mat socle_subspace(const AModule& m, const Mat& jrad) {
    if (jrad.rows() == 0) return Mat::identity(m.algebra().field(), m.dim());
    Mat stack = Mat::zeros(m.algebra().field(), 0, m.dim());
    for (std::size_t r = 0; r < jrad.rows(); ++r) {
        Mat ar = m.act_of(jrad.row(r));
        stack = stack.rows() == 0 ? ar : la::vstack(stack, ar);
    }
    return la::kernel_basis(stack);
}

std::vector<Mat> hom_amod(const AModule& m, const AModule& n) {
    KOTHE_CHECK(m.algebra().table() == n.algebra().table() &&
                    m.algebra().field() == n.algebra().field(),
                "hom_amod needs modules over the same algebra");
    const Field& f = m.algebra().field();
    const std::size_t nm = m.dim(), nn = n.dim();
    if (nm == 0 || nn == 0) return {};
    auto gens = m.algebra().generator_indices();
    if (gens.empty()) gens.push_back(0);
    // unknowns phi (nn x nm), row-major; conditions phi*A_g = B_g*phi
    Mat sys = Mat::zeros(f, 0, nn * nm);
    for (std::size_t g : gens) {
        const Mat& ag = m.action(g);
        const Mat& bg = n.action(g);
        Mat block = Mat::zeros(f, nn * nm, nn * nm);
        for (std::size_t r = 0; r < nn; ++r)
            for (std::size_t c = 0; c < nm; ++c) {
                for (std::size_t cp = 0; cp < nm; ++cp)
                    block.set(r * nm + c, r * nm + cp, ag.get(cp, c));
                for (std::size_t rp = 0; rp < nn; ++rp) {
                    Fel cur = block.get(r * nm + c, rp * nm + c);
                    block.set(r * nm + c, rp * nm + c, cur - bg.get(r, rp));
                }
            }
        sys = sys.rows() == 0 ? block : la::vstack(sys, block);
    }
    Mat k = la::kernel_basis(sys);
    std::vector<Mat> out;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        Mat phi = Mat::zeros(f, nn, nm);
        for (std::size_t r = 0; r < nn; ++r)
            for (std::size_t c = 0; c < nm; ++c) phi.set(r, c, k.get(r * nm + c, j));
        out.push_back(phi);
    }
    return out;
}

EndAlgebra end_algebra(const AModule& m) {
    std::vector<Mat> basis = hom_amod(m, m);
    const std::size_t k = basis.size();
    KOTHE_CHECK(k >= 1, "end_algebra of the zero module");
    const Field& f = m.algebra().field();
    Mat flat = Mat::zeros(f, k, m.dim() * m.dim());
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c)
                flat.set(i, r * m.dim() + c, basis[i].get(r, c));
    Mat flat_t = la::transpose(flat);
    auto coords = [&](const Mat& phi) {
        Mat v = Mat::zeros(f, 1, m.dim() * m.dim());
        for (std::size_t r = 0; r < m.dim(); ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) v.set(0, r * m.dim() + c, phi.get(r, c));
        auto sol = la::solve(flat_t, la::transpose(v));
        KOTHE_CHECK(sol.has_value(), "internal: End not closed under composition");
        return la::transpose(*sol);
    };
    Mat table = Mat::zeros(f, k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Mat c = coords(la::mul(basis[i], basis[j]));
            for (std::size_t l = 0; l < k; ++l) table.set(i * k + j, l, c.get(0, l));
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("f" + std::to_string(i));
    return {FDAlgebra::make(f, std::move(names), coords(Mat::identity(f, m.dim())), table,
                            /*trusted=*/true),
            std::move(basis)};
}

bool is_indecomposable_amod(const AModule& m, Rng& rng) {
    KOTHE_CHECK(m.dim() > 0, "indecomposability of the zero module is undefined");
    EndAlgebra e = end_algebra(m);
    return is_local_algebra(e.algebra, rng);
}

namespace {

std::vector<std::size_t> c_vector(const AModule& m, const Basics& b) {
    std::vector<std::size_t> c;
    for (std::size_t cls = 0; cls < b.m; ++cls) {
        std::size_t d = la::rank(m.act_of(b.prim[b.rep_of[cls]]));
        KOTHE_CHECK(d % b.div_dim[cls] == 0, "internal: e_iM dimension not divisible");
        c.push_back(d / b.div_dim[cls]);
    }
    return c;
}

}  // namespace

ModuleInvariants module_invariants(const AModule& m, const Basics& b) {
    ModuleInvariants inv;
    inv.c_total = c_vector(m, b);
    std::vector<Mat> jacts;
    for (std::size_t r = 0; r < b.jrad.rows(); ++r) jacts.push_back(m.act_of(b.jrad.row(r)));
    std::vector<Mat> chain{Mat::identity(m.algebra().field(), m.dim())};
    while (chain.back().cols() != 0) {
        const Mat& prev = chain.back();
        Mat cols = Mat::zeros(m.algebra().field(), m.dim(), 0);
        for (const Mat& ja : jacts) cols = la::hstack(cols, la::mul(ja, prev));
        Mat nxt = la::image_basis(cols);
        KOTHE_CHECK(nxt.cols() < prev.cols(), "internal: radical chain stalled");
        chain.push_back(nxt);
    }
    std::vector<std::vector<std::size_t>> cj;
    for (const Mat& s : chain) {
        if (s.cols() == 0)
            cj.push_back(std::vector<std::size_t>(b.m, 0));
        else if (s.cols() == m.dim())
            cj.push_back(inv.c_total);
        else
            cj.push_back(c_vector(submodule(m, s).mod, b));
    }
    inv.c_top.assign(b.m, 0);
    for (std::size_t i = 0; i < b.m && cj.size() >= 2; ++i) inv.c_top[i] = cj[0][i] - cj[1][i];
    if (cj.size() < 2) inv.c_top = inv.c_total;
    Mat soc = socle_subspace(m, b.jrad);
    inv.c_soc = soc.cols() == 0 ? std::vector<std::size_t>(b.m, 0)
                                : (soc.cols() == m.dim() ? inv.c_total
                                                         : c_vector(submodule(m, soc).mod, b));
    inv.length = 0;
    for (std::size_t x : inv.c_total) inv.length += x;
    std::size_t top_sum = 0;
    inv.multiplicity_free_top = true;
    for (std::size_t x : inv.c_top) {
        top_sum += x;
        if (x > 1) inv.multiplicity_free_top = false;
    }
    inv.simple_top = top_sum == 1;
    inv.uniserial = true;
    for (std::size_t k = 0; k + 1 < cj.size(); ++k) {
        std::size_t layer = 0;
        for (std::size_t i = 0; i < b.m; ++i) layer += cj[k][i] - cj[k + 1][i];
        if (layer > 1) inv.uniserial = false;
    }
    return inv;
}

std::vector<std::size_t> c_total_radical_route(const AModule& m, const Basics& b) {
    auto aptr = m.algebra_ptr();
    std::vector<AModule> simples;
    for (std::size_t cls = 0; cls < b.m; ++cls) {
        AModule pi = projective_module(aptr, b.prim[b.rep_of[cls]]);
        Mat rad = radical_subspace(pi, b.jrad);
        simples.push_back(rad.cols() == 0 ? pi : quotient_module(pi, rad).mod);
    }
    std::vector<std::size_t> end_dims;
    for (const AModule& s : simples) end_dims.push_back(hom_amod(s, s).size());

    std::vector<std::size_t> c(b.m, 0);
    AModule cur = m;
    for (;;) {
        if (cur.dim() == 0) break;
        Mat rad = radical_subspace(cur, b.jrad);
        AModule layer = rad.cols() == 0 ? cur : quotient_module(cur, rad).mod;
        for (std::size_t i = 0; i < b.m; ++i) {
            std::size_t h = hom_amod(simples[i], layer).size();
            KOTHE_CHECK(h % end_dims[i] == 0, "internal: Hom dimension not divisible");
            c[i] += h / end_dims[i];
        }
        if (rad.cols() == 0) break;
        cur = submodule(cur, rad).mod;
    }
    return c;
}

std::size_t min_generators(const AModule& m, const Basics& b) {
    if (m.dim() == 0) return 0;
    ModuleInvariants inv = module_invariants(m, b);
    std::size_t k = 0;
    for (std::size_t i = 0; i < b.m; ++i)
        k = std::max(k, (inv.c_top[i] + b.p[i] - 1) / b.p[i]);
    return k;
}

bool is_k_generated(const AModule& m, const Basics& b, std::size_t k) {
    return min_generators(m, b) <= k;
}

namespace {

Mat generated_submodule(const AModule& m, const Mat& cols, const std::vector<std::size_t>& gens) {
    Mat w = la::image_basis(cols);
    for (;;) {
        Mat ext = w;
        for (std::size_t g : gens) ext = la::hstack(ext, la::mul(m.action(g), w));
        Mat nw = la::image_basis(ext);
        if (nw.cols() == w.cols()) return nw;
        w = nw;
    }
}

}  // namespace

std::size_t brute_force_min_generators(const AModule& m, std::size_t tuple_budget) {
    KOTHE_CHECK(m.algebra().field().is_gf(),
                "brute-force generator search needs a finite field");
    if (m.dim() == 0) return 0;
    const uint32_t p = m.algebra().field().p();
    double total = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) total *= p;
    KOTHE_CHECK(total <= 1e6, "element enumeration cap exceeded");
    const std::size_t nel = static_cast<std::size_t>(total);
    auto gens = m.algebra().generator_indices();
    auto element = [&](std::size_t code) {
        Mat v = Mat::zeros(m.algebra().field(), m.dim(), 1);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            v.set(i, 0, Fel::from_gf(m.algebra().field(), code % p));
            code /= p;
        }
        return v;
    };
    std::size_t budget = tuple_budget;
    for (std::size_t k = 1; k <= m.dim(); ++k) {
        std::vector<std::size_t> idx(k, 1);  // combinations with repetition, nonzero elements
        for (;;) {
            KOTHE_CHECK(budget-- > 0, "brute-force tuple budget exceeded");
            Mat cols = Mat::zeros(m.algebra().field(), m.dim(), 0);
            for (std::size_t i : idx) cols = la::hstack(cols, element(i));
            if (generated_submodule(m, cols, gens).cols() == m.dim()) return k;
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == nel - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) idx[j] = idx[pos - 1];
        }
    }
    throw Error("internal: module not generated by itself");
}

bool is_uniserial_module(const AModule& m, const Basics& b) {
    return module_invariants(m, b).uniserial;
}

std::vector<Mat> all_submodules(const AModule& m, std::size_t cap) {
    KOTHE_CHECK(m.algebra().field().is_gf(), "submodule enumeration needs a finite field");
    const uint32_t p = m.algebra().field().p();
    double total = 1;
    for (std::size_t i = 0; i < m.dim(); ++i) total *= p;
    KOTHE_CHECK(total <= 65536.0, "submodule enumeration cap exceeded");
    auto gens = m.algebra().generator_indices();
    std::map<std::string, Mat> subs;
    auto key_of = [&](const Mat& cols) { return la::row_space(la::transpose(cols)).str(); };
    Mat zero = Mat::zeros(m.algebra().field(), m.dim(), 0);
    subs[key_of(zero)] = zero;
    const std::size_t nel = static_cast<std::size_t>(total);
    for (std::size_t code = 1; code < nel; ++code) {
        Mat v = Mat::zeros(m.algebra().field(), m.dim(), 1);
        std::size_t c = code;
        for (std::size_t i = 0; i < m.dim(); ++i) {
            v.set(i, 0, Fel::from_gf(m.algebra().field(), c % p));
            c /= p;
        }
        Mat w = generated_submodule(m, v, gens);
        subs.emplace(key_of(w), w);
    }
    for (;;) {
        bool grew = false;
        std::vector<Mat> cur;
        cur.reserve(subs.size());
        for (auto& [k, v] : subs) cur.push_back(v);
        for (std::size_t i = 0; i < cur.size() && !grew; ++i)
            for (std::size_t j = i + 1; j < cur.size(); ++j) {
                Mat s = la::subspace_sum(cur[i], cur[j]);
                std::string key = key_of(s);
                if (!subs.count(key)) {
                    subs[key] = s;
                    grew = true;
                    KOTHE_CHECK(subs.size() <= cap, "submodule closure cap exceeded");
                }
            }
        if (!grew) break;
    }
    std::vector<Mat> out;
    for (auto& [k, v] : subs) out.push_back(v);
    return out;
}

bool is_uniserial_exhaustive(const AModule& m) {
    auto subs = all_submodules(m);
    std::sort(subs.begin(), subs.end(),
              [](const Mat& a, const Mat& b) { return a.cols() < b.cols(); });
    for (std::size_t i = 0; i + 1 < subs.size(); ++i) {
        if (subs[i].cols() == subs[i + 1].cols()) return false;
        for (std::size_t c = 0; c < subs[i].cols(); ++c)
            if (!la::in_col_span(subs[i + 1], subs[i].col(c))) return false;
    }
    return true;
}

bool brute_force_principal_right_ideals(const FDAlgebra& a) {
    KOTHE_CHECK(a.field().is_gf(), "right-ideal enumeration needs a finite field");
    const uint32_t p = a.field().p();
    double total = 1;
    for (std::size_t i = 0; i < a.dim(); ++i) total *= p;
    KOTHE_CHECK(total <= 65536.0, "right-ideal enumeration cap exceeded (|A| > 2^16)");
    const std::size_t nel = static_cast<std::size_t>(total);

    auto ideal_of = [&](const Mat& x) {
        Mat rows = Mat::zeros(a.field(), 0, a.dim());
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Mat v = a.mul(x, a.basis_row(j));
            rows = rows.rows() == 0 ? v : la::vstack(rows, v);
        }
        return la::row_space(rows);
    };
    std::map<std::string, Mat> cyclic;
    for (std::size_t code = 0; code < nel; ++code) {
        Mat x = Mat::zeros(a.field(), 1, a.dim());
        std::size_t c = code;
        for (std::size_t i = 0; i < a.dim(); ++i) {
            x.set(0, i, Fel::from_gf(a.field(), c % p));
            c /= p;
        }
        Mat id = ideal_of(x);
        cyclic.emplace(id.str(), id);
    }
    std::map<std::string, Mat> ideals = cyclic;
    std::vector<Mat> worklist;
    worklist.reserve(ideals.size());
    for (auto& [k, v] : ideals) worklist.push_back(v);
    while (!worklist.empty()) {
        Mat w = worklist.back();
        worklist.pop_back();
        std::vector<Mat> snapshot;
        snapshot.reserve(ideals.size());
        for (auto& [k, v] : ideals) snapshot.push_back(v);
        for (const Mat& v : snapshot) {
            Mat s;
            if (w.rows() == 0)
                s = v;
            else if (v.rows() == 0)
                s = w;
            else
                s = la::row_space(la::vstack(w, v));
            std::string key = s.str();
            if (!ideals.count(key)) {
                if (!cyclic.count(key)) return false;
                ideals[key] = s;
                worklist.push_back(s);
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// functor realizations

AModule column_module(const FDAlgebra& matn, std::size_t n, const AModule& m) {
    const FDAlgebra& a = m.algebra();
    KOTHE_CHECK(matn.dim() == n * n * a.dim(), "matrix ring dimension mismatch");
    const std::size_t dm = m.dim(), d = n * dm;
    const Field& f = a.field();
    std::vector<Mat> act;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s)
            for (std::size_t i = 0; i < a.dim(); ++i) {
                Mat big = Mat::zeros(f, d, d);
                const Mat& ai = m.action(i);
                for (std::size_t x = 0; x < dm; ++x)
                    for (std::size_t y = 0; y < dm; ++y)
                        big.set(r * dm + x, s * dm + y, ai.get(x, y));
                act.push_back(big);
            }
    auto tp = std::make_shared<const FDAlgebra>(matn);
    return AModule::make(tp, std::move(act), /*trusted=*/true);
}

AModule corner_module(const Corner& c, const AModule& m) {
    Mat u = la::image_basis(m.act_of(c.idem));
    std::vector<Mat> act;
    for (std::size_t i = 0; i < c.algebra.dim(); ++i) {
        Mat w = m.act_of(c.embed.row(i));
        if (u.cols() == 0) {
            act.push_back(Mat::zeros(m.algebra().field(), 0, 0));
            continue;
        }
        auto x = la::solve(u, la::mul(w, u));
        KOTHE_CHECK(x.has_value(), "internal: corner module not invariant");
        act.push_back(*x);
    }
    auto cp = std::make_shared<const FDAlgebra>(c.algebra);
    return AModule::make(cp, std::move(act), /*trusted=*/true);
}

// ---------------------------------------------------------------------------
// JSON format

std::string algebra_to_json(const FDAlgebra& a) {
    nlohmann::json j;
    j["format"] = "algebra-v1";
    j["field"] = a.field().str();
    j["dim"] = a.dim();
    j["basis"] = a.basis_names();
    std::vector<std::string> unit;
    for (std::size_t i = 0; i < a.dim(); ++i) unit.push_back(a.unit().get(0, i).str());
    j["unit"] = unit;
    nlohmann::json mult = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            Mat row = a.table_row(i, k);
            if (row.is_zero()) continue;
            std::vector<std::string> coords;
            for (std::size_t l = 0; l < a.dim(); ++l) coords.push_back(row.get(0, l).str());
            mult.push_back(nlohmann::json::array({i, k, coords}));
        }
    j["mult"] = mult;
    return j.dump(2) + "\n";
}

FDAlgebra algebra_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1, 1);
    }
    KOTHE_CHECK(j.value("format", "") == "algebra-v1", "expected format \"algebra-v1\"");
    Field f = Field::parse(j.at("field").get<std::string>());
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names = j.at("basis").get<std::vector<std::string>>();
    KOTHE_CHECK(names.size() == dim, "basis name count does not match dim");
    auto unit_strs = j.at("unit").get<std::vector<std::string>>();
    KOTHE_CHECK(unit_strs.size() == dim, "unit coordinate count does not match dim");
    Mat unit = Mat::zeros(f, 1, dim);
    for (std::size_t i = 0; i < dim; ++i) unit.set(0, i, Fel::parse(f, unit_strs[i]));
    Mat table = Mat::zeros(f, dim * dim, dim);
    for (const auto& triple : j.at("mult")) {
        KOTHE_CHECK(triple.is_array() && triple.size() == 3, "mult entries must be triples");
        std::size_t i = triple[0].get<std::size_t>();
        std::size_t k = triple[1].get<std::size_t>();
        KOTHE_CHECK(i < dim && k < dim, "mult index out of range");
        auto coords = triple[2].get<std::vector<std::string>>();
        KOTHE_CHECK(coords.size() == dim, "mult coordinate count does not match dim");
        for (std::size_t l = 0; l < dim; ++l)
            table.set(i * dim + k, l, Fel::parse(f, coords[l]));
    }
    return FDAlgebra::make(f, std::move(names), unit, table, /*trusted=*/false);
}

}  // namespace kothe::alg
