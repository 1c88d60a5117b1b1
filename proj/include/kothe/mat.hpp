// Dense exact matrices over GF(p) or QQ, with the linear algebra the higher
// modules are built on: rref with deterministic first-nonzero pivoting,
// kernel/image bases, solving, and subspace arithmetic.
//
// GF(p) storage is a flat row-major uint32_t buffer so the elimination and
// multiplication inner loops run on the kern:: row kernels. QQ storage is
// mpq_class, always canonical (lowest terms, positive denominator).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kothe/field.hpp"

namespace kothe::la {

class Mat {
public:
    Mat() : f_(Field::gfp(2)), rows_(0), cols_(0) {}
    static Mat zeros(const Field& f, std::size_t rows, std::size_t cols);
    static Mat identity(const Field& f, std::size_t n);
    // Integer entries reduced into the field.
    static Mat from_ints(const Field& f, const std::vector<std::vector<long long>>& rows);
    static Mat row_from_ints(const Field& f, const std::vector<long long>& row);

    const Field& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Fel get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, const Fel& v);
    void set_int(std::size_t r, std::size_t c, long long v);

    uint32_t* gf_row(std::size_t r) { return g_.data() + r * cols_; }
    const uint32_t* gf_row(std::size_t r) const { return g_.data() + r * cols_; }
    uint32_t gf_at(std::size_t r, std::size_t c) const { return g_[r * cols_ + c]; }
    Rat& q_at(std::size_t r, std::size_t c) { return q_[r * cols_ + c]; }
    const Rat& q_at(std::size_t r, std::size_t c) const { return q_[r * cols_ + c]; }

    Mat row(std::size_t r) const;
    Mat col(std::size_t c) const;
    bool is_zero() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    std::string str() const;  // for diagnostics

private:
    Mat(const Field& f, std::size_t r, std::size_t c) : f_(f), rows_(r), cols_(c) {
        if (f.is_gf())
            g_.assign(r * c, 0);
        else
            q_.assign(r * c, Rat(0));
    }
    Field f_;
    std::size_t rows_, cols_;
    std::vector<uint32_t> g_;
    std::vector<Rat> q_;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat neg(const Mat& a);
Mat mul(const Mat& a, const Mat& b);
Mat scale(const Fel& c, const Mat& a);
Mat transpose(const Mat& a);
Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat block_diag(const std::vector<Mat>& blocks, const Field& f);
// A^e by repeated squaring; e = 0 gives the identity.
Mat pow(const Mat& a, uint64_t e);

struct RrefResult {
    Mat r;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

// Columns form a basis of the right null space; count = cols - rank.
Mat kernel_basis(const Mat& m);
// Some X with A*X = B, or nullopt if inconsistent. Shapes must agree.
std::optional<Mat> solve(const Mat& a, const Mat& b);
std::optional<Mat> inverse(const Mat& a);

// Basis of the column space: the pivot columns of m (deterministic).
Mat image_basis(const Mat& m);
// Canonical basis of the row space: nonzero rows of rref. Two matrices have
// equal row spaces iff these are equal, which makes this the subspace key.
Mat row_space(const Mat& m);

// Subspaces of K^n as column-spans.
bool in_col_span(const Mat& basis, const Mat& v);
Mat subspace_sum(const Mat& a, const Mat& b);
Mat subspace_intersection(const Mat& a, const Mat& b);

Mat random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols);

// Monic minimal polynomial of a square matrix, low-degree-first coefficients.
std::vector<Fel> min_poly(const Mat& a);

}  // namespace kothe::la
