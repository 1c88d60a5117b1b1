#include "kothe/mat.hpp"

#include <algorithm>
#include <sstream>

#include "kothe/kernels.hpp"

namespace kothe::la {

Mat Mat::zeros(const Field& f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }

Mat Mat::identity(const Field& f, std::size_t n) {
    Mat m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Mat Mat::from_ints(const Field& f, const std::vector<std::vector<long long>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Mat m(f, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        KOTHE_CHECK(rows[i].size() == c, "ragged row list");
        for (std::size_t j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Mat Mat::row_from_ints(const Field& f, const std::vector<long long>& row) {
    return from_ints(f, {row});
}

Fel Mat::get(std::size_t r, std::size_t c) const {
    if (f_.is_gf()) return Fel::from_gf(f_, g_[r * cols_ + c]);
    return Fel::from_rat(f_, q_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Fel& v) {
    KOTHE_CHECK(v.field() == f_, "field mismatch in Mat::set");
    if (f_.is_gf())
        g_[r * cols_ + c] = v.u();
    else
        q_[r * cols_ + c] = v.q();
}

void Mat::set_int(std::size_t r, std::size_t c, long long v) {
    if (f_.is_gf())
        g_[r * cols_ + c] = gf::from_int(v, f_.p());
    else
        q_[r * cols_ + c] = Rat(static_cast<long>(v));
}

Mat Mat::row(std::size_t r) const {
    Mat m(f_, 1, cols_);
    for (std::size_t j = 0; j < cols_; ++j) m.set(0, j, get(r, j));
    return m;
}

Mat Mat::col(std::size_t c) const {
    Mat m(f_, rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) m.set(i, 0, get(i, c));
    return m;
}

bool Mat::is_zero() const {
    if (f_.is_gf()) return std::all_of(g_.begin(), g_.end(), [](uint32_t x) { return x == 0; });
    return std::all_of(q_.begin(), q_.end(), [](const Rat& x) { return x == 0; });
}

bool Mat::operator==(const Mat& o) const {
    if (f_ != o.f_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    return f_.is_gf() ? g_ == o.g_ : q_ == o.q_;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j).str();
        os << "]";
    }
    return os.str();
}

namespace {

void check_same_shape(const Mat& a, const Mat& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    KOTHE_CHECK(a.rows() == b.rows() && a.cols() == b.cols(), "shape mismatch");
}

}  // namespace

Mat add(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    if (a.field().is_gf()) {
        if (r.rows())
            kern::add(r.gf_row(0), b.gf_row(0), r.rows() * r.cols(), a.field().p());
    } else {
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.q_at(i, j) += b.q_at(i, j);
    }
    return r;
}

Mat sub(const Mat& a, const Mat& b) {
    check_same_shape(a, b);
    Mat r = a;
    if (a.field().is_gf()) {
        if (r.rows())
            kern::sub(r.gf_row(0), b.gf_row(0), r.rows() * r.cols(), a.field().p());
    } else {
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.q_at(i, j) -= b.q_at(i, j);
    }
    return r;
}

Mat neg(const Mat& a) { return sub(Mat::zeros(a.field(), a.rows(), a.cols()), a); }

Mat scale(const Fel& c, const Mat& a) {
    KOTHE_CHECK(c.field() == a.field(), "field mismatch");
    Mat r = a;
    if (a.field().is_gf()) {
        if (r.rows()) kern::scale(r.gf_row(0), c.u(), r.rows() * r.cols(), a.field().p());
    } else {
        for (std::size_t i = 0; i < r.rows(); ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) r.q_at(i, j) *= c.q();
    }
    return r;
}

Mat mul(const Mat& a, const Mat& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    KOTHE_CHECK(a.cols() == b.rows(), "shape mismatch in mul: " + std::to_string(a.cols()) +
                                          " vs " + std::to_string(b.rows()));
    Mat r = Mat::zeros(a.field(), a.rows(), b.cols());
    if (a.field().is_gf()) {
        const uint32_t p = a.field().p();
        for (std::size_t i = 0; i < a.rows(); ++i) {
            uint32_t* out = r.gf_row(i);
            for (std::size_t k = 0; k < a.cols(); ++k) {
                uint32_t c = a.gf_at(i, k);
                if (c) kern::axpy(out, b.gf_row(k), c, b.cols(), p);
            }
        }
    } else {
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t k = 0; k < a.cols(); ++k) {
                const Rat& c = a.q_at(i, k);
                if (c == 0) continue;
                for (std::size_t j = 0; j < b.cols(); ++j) r.q_at(i, j) += c * b.q_at(k, j);
            }
    }
    return r;
}

Mat transpose(const Mat& a) {
    Mat r = Mat::zeros(a.field(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(j, i, a.get(i, j));
    return r;
}

Mat hstack(const Mat& a, const Mat& b) {
    KOTHE_CHECK(a.field() == b.field() && a.rows() == b.rows(), "hstack mismatch");
    Mat r = Mat::zeros(a.field(), a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.get(i, j));
        for (std::size_t j = 0; j < b.cols(); ++j) r.set(i, a.cols() + j, b.get(i, j));
    }
    return r;
}

Mat vstack(const Mat& a, const Mat& b) {
    KOTHE_CHECK(a.field() == b.field() && a.cols() == b.cols(), "vstack mismatch");
    Mat r = Mat::zeros(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(i, j, a.get(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r.set(a.rows() + i, j, b.get(i, j));
    return r;
}

Mat block_diag(const std::vector<Mat>& blocks, const Field& f) {
    std::size_t rows = 0, cols = 0;
    for (const Mat& b : blocks) {
        KOTHE_CHECK(b.field() == f, "field mismatch in block_diag");
        rows += b.rows();
        cols += b.cols();
    }
    Mat r = Mat::zeros(f, rows, cols);
    std::size_t ro = 0, co = 0;
    for (const Mat& b : blocks) {
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t j = 0; j < b.cols(); ++j) r.set(ro + i, co + j, b.get(i, j));
        ro += b.rows();
        co += b.cols();
    }
    return r;
}

Mat pow(const Mat& a, uint64_t e) {
    KOTHE_CHECK(a.rows() == a.cols(), "pow needs a square matrix");
    Mat acc = Mat::identity(a.field(), a.rows());
    Mat base = a;
    while (e) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
        e >>= 1;
    }
    return acc;
}

namespace {

// In-place reduced row echelon form over GF(p); rows are eliminated with the
// runtime-selected kernels.
void rref_gf(Mat& m, std::vector<std::size_t>& pivots) {
    const uint32_t p = m.field().p();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r)
            if (m.gf_at(r, c)) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = c; j < cols; ++j) {
                uint32_t t = m.gf_row(pr)[j];
                m.gf_row(pr)[j] = m.gf_row(sel)[j];
                m.gf_row(sel)[j] = t;
            }
        uint32_t piv = m.gf_at(pr, c);
        if (piv != 1) kern::scale(m.gf_row(pr) + c, gf::inv(piv, p), cols - c, p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr) continue;
            uint32_t v = m.gf_at(r, c);
            if (v) kern::axpy(m.gf_row(r) + c, m.gf_row(pr) + c, p - v, cols - c, p);
        }
        pivots.push_back(c);
        ++pr;
    }
}

void rref_q(Mat& m, std::vector<std::size_t>& pivots) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t pr = 0;
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r)
            if (m.q_at(r, c) != 0) {
                sel = r;
                break;
            }
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = c; j < cols; ++j) std::swap(m.q_at(pr, j), m.q_at(sel, j));
        Rat inv = 1 / m.q_at(pr, c);
        for (std::size_t j = c; j < cols; ++j) m.q_at(pr, j) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == pr || m.q_at(r, c) == 0) continue;
            Rat v = m.q_at(r, c);
            for (std::size_t j = c; j < cols; ++j) m.q_at(r, j) -= v * m.q_at(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
}

}  // namespace

RrefResult rref(const Mat& m) {
    RrefResult res;
    res.r = m;
    if (m.field().is_gf())
        rref_gf(res.r, res.pivots);
    else
        rref_q(res.r, res.pivots);
    res.rank = res.pivots.size();
    return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

Mat kernel_basis(const Mat& m) {
    RrefResult rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : rr.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Mat k = Mat::zeros(m.field(), m.cols(), free_cols.size());
    Fel one = Fel::one(m.field());
    for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
        std::size_t fc = free_cols[fi];
        k.set(fc, fi, one);
        for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
            k.set(rr.pivots[pi], fi, -rr.r.get(pi, fc));
    }
    return k;
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    KOTHE_CHECK(a.field() == b.field(), "field mismatch");
    KOTHE_CHECK(a.rows() == b.rows(), "shape mismatch in solve");
    RrefResult rr = rref(hstack(a, b));
    for (std::size_t c : rr.pivots)
        if (c >= a.cols()) return std::nullopt;
    Mat x = Mat::zeros(a.field(), a.cols(), b.cols());
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.set(rr.pivots[pi], j, rr.r.get(pi, a.cols() + j));
    return x;
}

std::optional<Mat> inverse(const Mat& a) {
    KOTHE_CHECK(a.rows() == a.cols(), "inverse needs a square matrix");
    auto x = solve(a, Mat::identity(a.field(), a.rows()));
    if (!x) return std::nullopt;
    if (mul(a, *x) != Mat::identity(a.field(), a.rows())) return std::nullopt;
    return x;
}

Mat image_basis(const Mat& m) {
    RrefResult rr = rref(m);
    Mat b = Mat::zeros(m.field(), m.rows(), rr.pivots.size());
    for (std::size_t pi = 0; pi < rr.pivots.size(); ++pi)
        for (std::size_t i = 0; i < m.rows(); ++i) b.set(i, pi, m.get(i, rr.pivots[pi]));
    return b;
}

Mat row_space(const Mat& m) {
    RrefResult rr = rref(m);
    Mat b = Mat::zeros(m.field(), rr.rank, m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) b.set(i, j, rr.r.get(i, j));
    return b;
}

bool in_col_span(const Mat& basis, const Mat& v) { return solve(basis, v).has_value(); }

Mat subspace_sum(const Mat& a, const Mat& b) { return image_basis(hstack(a, b)); }

Mat subspace_intersection(const Mat& a, const Mat& b) {
    // x in both spans: a*u = b*w; kernel of [a | -b] gives (u; w).
    if (a.cols() == 0 || b.cols() == 0) return Mat::zeros(a.field(), a.rows(), 0);
    Mat k = kernel_basis(hstack(a, neg(b)));
    Mat u = Mat::zeros(a.field(), a.cols(), k.cols());
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) u.set(i, j, k.get(i, j));
    return image_basis(mul(a, u));
}

Mat random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
    Mat m = Mat::zeros(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.fel(f));
    return m;
}

std::vector<Fel> min_poly(const Mat& a) {
    KOTHE_CHECK(a.rows() == a.cols(), "min_poly needs a square matrix");
    const std::size_t n = a.rows();
    const Field& f = a.field();
    // flatten successive powers; the first linear dependency gives the monic
    // minimal polynomial
    Mat powers = Mat::zeros(f, 0, n * n == 0 ? 1 : n * n);
    Mat cur = Mat::identity(f, n);
    for (std::size_t d = 0;; ++d) {
        Mat flat = Mat::zeros(f, 1, n * n == 0 ? 1 : n * n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) flat.set(0, i * n + j, cur.get(i, j));
        // try to express flat in the span of previous powers
        if (d > 0) {
            auto sol = solve(transpose(powers), transpose(flat));
            if (sol) {
                std::vector<Fel> coeffs;
                for (std::size_t i = 0; i < d; ++i) coeffs.push_back(-sol->get(i, 0));
                coeffs.push_back(Fel::one(f));
                return coeffs;
            }
        }
        powers = powers.rows() == 0 ? flat : vstack(powers, flat);
        cur = mul(cur, a);
        KOTHE_CHECK(d <= n * n + 1, "min_poly failed to terminate");
    }
}

}  // namespace kothe::la
