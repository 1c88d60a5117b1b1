#include "kothe/rep.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "kothe/lexer.hpp"

namespace kothe::rep {

using la::Fel;

Rep Rep::make(Quiver q, const Field& f, DimVector dim, std::vector<Mat> maps) {
    KOTHE_CHECK(dim.size() == q.num_vertices(), "dimension vector length mismatch");
    KOTHE_CHECK(maps.size() == q.num_arrows(), "one matrix per arrow required");
    for (long d : dim) KOTHE_CHECK(d >= 0, "negative dimension");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const qv::Arrow& ar = q.arrows()[a];
        KOTHE_CHECK(maps[a].field() == f, "field mismatch in arrow map " + ar.label);
        KOTHE_CHECK(maps[a].rows() == static_cast<std::size_t>(dim[ar.dst]) &&
                        maps[a].cols() == static_cast<std::size_t>(dim[ar.src]),
                    "map shape mismatch for arrow " + ar.label);
    }
    Rep r;
    r.quiver = std::move(q);
    r.field = f;
    r.dim = std::move(dim);
    r.maps = std::move(maps);
    return r;
}

Rep Rep::zero_rep(const Quiver& q, const Field& f) {
    DimVector d(q.num_vertices(), 0);
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) maps.push_back(Mat::zeros(f, 0, 0));
    return make(q, f, d, maps);
}

Rep Rep::simple(const Quiver& q, const Field& f, std::size_t v) {
    DimVector d(q.num_vertices(), 0);
    d[v] = 1;
    std::vector<Mat> maps;
    for (const qv::Arrow& a : q.arrows()) maps.push_back(Mat::zeros(f, d[a.dst], d[a.src]));
    return make(q, f, d, maps);
}

Rep Rep::projective(const Quiver& q, const Field& f, std::size_t v) {
    // paths starting at v, grouped by endpoint; arrows act by concatenation
    alg::PathAlgebra pa = alg::path_algebra(q, f);
    std::vector<std::vector<std::size_t>> at(q.num_vertices());
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < pa.paths.size(); ++i)
        if (pa.paths[i].src == v) {
            pos[i] = at[pa.paths[i].dst].size();
            at[pa.paths[i].dst].push_back(i);
        }
    DimVector d(q.num_vertices(), 0);
    for (std::size_t w = 0; w < q.num_vertices(); ++w) d[w] = static_cast<long>(at[w].size());
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index;
    for (std::size_t i = 0; i < pa.paths.size(); ++i)
        index[{pa.paths[i].src, pa.paths[i].arrows}] = i;
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const qv::Arrow& ar = q.arrows()[a];
        Mat m = Mat::zeros(f, d[ar.dst], d[ar.src]);
        for (std::size_t col = 0; col < at[ar.src].size(); ++col) {
            const auto& path = pa.paths[at[ar.src][col]];
            std::vector<std::size_t> ext = path.arrows;
            ext.push_back(a);
            auto it = index.find({v, ext});
            KOTHE_CHECK(it != index.end(), "internal: extended path missing");
            m.set_int(static_cast<std::size_t>(pos.at(it->second)), col, 1);
        }
        maps.push_back(m);
    }
    return make(q, f, d, maps);
}

long Rep::total_dim() const {
    long s = 0;
    for (long d : dim) s += d;
    return s;
}

bool Rep::operator==(const Rep& o) const {
    if (!(quiver == o.quiver) || field != o.field || dim != o.dim) return false;
    for (std::size_t a = 0; a < maps.size(); ++a)
        if (maps[a] != o.maps[a]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// hom spaces

std::vector<RepHom> hom_space(const Rep& x, const Rep& y) {
    KOTHE_CHECK(x.quiver == y.quiver, "hom_space needs the same quiver");
    KOTHE_CHECK(x.field == y.field, "hom_space needs the same field");
    const Field& f = x.field;
    const std::size_t nv = x.quiver.num_vertices();
    // unknown blocks phi_v (y.dim[v] x x.dim[v]), flattened row-major
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(y.dim[v] * x.dim[v]);
    const std::size_t unknowns = off[nv];
    if (unknowns == 0) return {};
    std::size_t rows = 0;
    for (const qv::Arrow& a : x.quiver.arrows())
        rows += static_cast<std::size_t>(y.dim[a.dst] * x.dim[a.src]);
    Mat sys = Mat::zeros(f, rows, unknowns);
    std::size_t ro = 0;
    for (std::size_t ai = 0; ai < x.quiver.num_arrows(); ++ai) {
        const qv::Arrow& a = x.quiver.arrows()[ai];
        const std::size_t dv = static_cast<std::size_t>(x.dim[a.src]);
        const std::size_t dw = static_cast<std::size_t>(y.dim[a.dst]);
        // (phi_dst * X_a - Y_a * phi_src)[r][c] = 0
        for (std::size_t r = 0; r < dw; ++r)
            for (std::size_t c = 0; c < dv; ++c) {
                std::size_t row = ro + r * dv + c;
                for (std::size_t s = 0; s < static_cast<std::size_t>(x.dim[a.dst]); ++s)
                    sys.set(row, off[a.dst] + r * x.dim[a.dst] + s, x.maps[ai].get(s, c));
                for (std::size_t t = 0; t < static_cast<std::size_t>(y.dim[a.src]); ++t) {
                    std::size_t col = off[a.src] + t * x.dim[a.src] + c;
                    sys.set(row, col, sys.get(row, col) - y.maps[ai].get(r, t));
                }
            }
        ro += dw * dv;
    }
    Mat k = la::kernel_basis(sys);
    std::vector<RepHom> out;
    for (std::size_t j = 0; j < k.cols(); ++j) {
        RepHom h;
        for (std::size_t v = 0; v < nv; ++v) {
            Mat b = Mat::zeros(f, y.dim[v], x.dim[v]);
            for (std::size_t r = 0; r < static_cast<std::size_t>(y.dim[v]); ++r)
                for (std::size_t c = 0; c < static_cast<std::size_t>(x.dim[v]); ++c)
                    b.set(r, c, k.get(off[v] + r * x.dim[v] + c, j));
            h.push_back(b);
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool hom_is_invertible(const RepHom& h) {
    for (const Mat& b : h) {
        if (b.rows() != b.cols()) return false;
        if (b.rows() > 0 && la::rank(b) != b.rows()) return false;
    }
    return true;
}

RepHom compose(const RepHom& g, const RepHom& h) {
    KOTHE_CHECK(g.size() == h.size(), "hom size mismatch");
    RepHom out;
    for (std::size_t v = 0; v < g.size(); ++v) out.push_back(la::mul(g[v], h[v]));
    return out;
}

std::optional<RepHom> find_iso(const Rep& x, const Rep& y, Rng& rng) {
    if (x.dim != y.dim) return std::nullopt;
    if (x.total_dim() == 0) return RepHom{};
    auto basis = hom_space(x, y);
    if (basis.empty()) return std::nullopt;
    const Field& f = x.field;
    for (const RepHom& h : basis)
        if (hom_is_invertible(h)) return h;
    for (int tries = 0; tries < 200; ++tries) {
        RepHom cand;
        for (std::size_t v = 0; v < x.quiver.num_vertices(); ++v)
            cand.push_back(Mat::zeros(f, y.dim[v], x.dim[v]));
        for (const RepHom& h : basis) {
            Fel c = rng.fel(f);
            for (std::size_t v = 0; v < cand.size(); ++v)
                cand[v] = la::add(cand[v], la::scale(c, h[v]));
        }
        if (hom_is_invertible(cand)) return cand;
    }
    return std::nullopt;
}

bool isomorphic(const Rep& x, const Rep& y, Rng& rng) {
    if (x.dim != y.dim) return false;
    if (find_iso(x, y, rng)) return true;
    auto xy = hom_space(x, y);
    if (xy.empty()) return false;
    auto yx = hom_space(y, x);
    if (yx.empty()) return false;
    // exact fallback: an invertible basis-pair composite certifies the
    // isomorphism; with none, refuse to guess
    for (const RepHom& g : xy)
        for (const RepHom& h : yx)
            if (hom_is_invertible(compose(g, h))) return true;
    throw Error("isomorphism test inconclusive after retries");
}

// ---------------------------------------------------------------------------
// radical, top, socle

SubRep radical(const Rep& m) {
    const std::size_t nv = m.quiver.num_vertices();
    std::vector<Mat> r(nv, Mat());
    for (std::size_t w = 0; w < nv; ++w) {
        Mat cols = Mat::zeros(m.field, m.dim[w], 0);
        for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a)
            if (m.quiver.arrows()[a].dst == w) cols = la::hstack(cols, m.maps[a]);
        r[w] = la::image_basis(cols);
    }
    DimVector d(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) d[v] = static_cast<long>(r[v].cols());
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a) {
        const qv::Arrow& ar = m.quiver.arrows()[a];
        auto x = la::solve(r[ar.dst], la::mul(m.maps[a], r[ar.src]));
        KOTHE_CHECK(x.has_value(), "internal: radical not a subrepresentation");
        maps.push_back(*x);
    }
    return {Rep::make(m.quiver, m.field, d, maps), r};
}

QuotRep top(const Rep& m) {
    SubRep rad = radical(m);
    const std::size_t nv = m.quiver.num_vertices();
    std::vector<Mat> proj(nv, Mat());
    DimVector d(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
        const Mat& s = rad.incl[v];
        const std::size_t n = static_cast<std::size_t>(m.dim[v]);
        const std::size_t k = s.cols(), q = n - k;
        d[v] = static_cast<long>(q);
        la::RrefResult rr = la::rref(la::transpose(s));
        std::vector<bool> pivot(n, false);
        for (std::size_t c : rr.pivots) pivot[c] = true;
        Mat ec = Mat::zeros(m.field, n, q);
        std::size_t ci = 0;
        for (std::size_t r = 0; r < n; ++r)
            if (!pivot[r]) ec.set_int(r, ci++, 1);
        Mat t = la::hstack(s, ec);
        auto tinv = la::inverse(t);
        KOTHE_CHECK(tinv.has_value(), "internal: top complement failed");
        Mat pr = Mat::zeros(m.field, q, n);
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < n; ++c) pr.set(r, c, tinv->get(k + r, c));
        proj[v] = pr;
    }
    // the top is semisimple: all arrow maps vanish on it
    std::vector<Mat> maps;
    for (const qv::Arrow& a : m.quiver.arrows())
        maps.push_back(Mat::zeros(m.field, d[a.dst], d[a.src]));
    return {Rep::make(m.quiver, m.field, d, maps), proj};
}

SubRep socle(const Rep& m) {
    const std::size_t nv = m.quiver.num_vertices();
    std::vector<Mat> s(nv, Mat());
    for (std::size_t v = 0; v < nv; ++v) {
        Mat stack = Mat::zeros(m.field, 0, m.dim[v]);
        for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a)
            if (m.quiver.arrows()[a].src == v)
                stack = stack.rows() == 0 ? m.maps[a] : la::vstack(stack, m.maps[a]);
        s[v] = stack.rows() == 0 ? Mat::identity(m.field, m.dim[v]) : la::kernel_basis(stack);
    }
    DimVector d(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) d[v] = static_cast<long>(s[v].cols());
    std::vector<Mat> maps;
    for (const qv::Arrow& a : m.quiver.arrows())
        maps.push_back(Mat::zeros(m.field, d[a.dst], d[a.src]));
    return {Rep::make(m.quiver, m.field, d, maps), s};
}

DimVector c_total(const Rep& m) { return m.dim; }

DimVector c_top(const Rep& m) {
    SubRep rad = radical(m);
    DimVector c(m.quiver.num_vertices(), 0);
    for (std::size_t v = 0; v < c.size(); ++v)
        c[v] = m.dim[v] - static_cast<long>(rad.incl[v].cols());
    return c;
}

DimVector c_soc(const Rep& m) { return socle(m).sub.dim; }

Rep direct_sum(const Rep& a, const Rep& b) {
    KOTHE_CHECK(a.quiver == b.quiver && a.field == b.field, "direct_sum mismatch");
    DimVector d(a.dim);
    for (std::size_t v = 0; v < d.size(); ++v) d[v] += b.dim[v];
    std::vector<Mat> maps;
    for (std::size_t ai = 0; ai < a.maps.size(); ++ai) {
        const qv::Arrow& ar = a.quiver.arrows()[ai];
        Mat m = Mat::zeros(a.field, d[ar.dst], d[ar.src]);
        for (std::size_t r = 0; r < a.maps[ai].rows(); ++r)
            for (std::size_t c = 0; c < a.maps[ai].cols(); ++c)
                m.set(r, c, a.maps[ai].get(r, c));
        for (std::size_t r = 0; r < b.maps[ai].rows(); ++r)
            for (std::size_t c = 0; c < b.maps[ai].cols(); ++c)
                m.set(a.maps[ai].rows() + r, a.maps[ai].cols() + c, b.maps[ai].get(r, c));
        maps.push_back(m);
    }
    return Rep::make(a.quiver, a.field, d, maps);
}

// ---------------------------------------------------------------------------
// indecomposability and decomposition

namespace {

alg::FDAlgebra end_algebra_rep(const Rep& m, const std::vector<RepHom>& basis) {
    const Field& f = m.field;
    const std::size_t k = basis.size();
    KOTHE_CHECK(k >= 1, "endomorphism algebra of the zero representation");
    std::size_t flat_len = 0;
    for (std::size_t v = 0; v < m.quiver.num_vertices(); ++v)
        flat_len += static_cast<std::size_t>(m.dim[v] * m.dim[v]);
    auto flatten = [&](const RepHom& h) {
        Mat row = Mat::zeros(f, 1, flat_len);
        std::size_t o = 0;
        for (const Mat& b : h) {
            for (std::size_t r = 0; r < b.rows(); ++r)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    row.set(0, o + r * b.cols() + c, b.get(r, c));
            o += b.rows() * b.cols();
        }
        return row;
    };
    Mat flat = Mat::zeros(f, k, flat_len);
    for (std::size_t i = 0; i < k; ++i) {
        Mat r = flatten(basis[i]);
        for (std::size_t c = 0; c < r.cols(); ++c) flat.set(i, c, r.get(0, c));
    }
    Mat flat_t = la::transpose(flat);
    auto coords = [&](const RepHom& h) {
        auto sol = la::solve(flat_t, la::transpose(flatten(h)));
        KOTHE_CHECK(sol.has_value(), "internal: End not closed under composition");
        return la::transpose(*sol);
    };
    Mat table = Mat::zeros(f, k * k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Mat c = coords(compose(basis[i], basis[j]));
            for (std::size_t l = 0; l < k; ++l) table.set(i * k + j, l, c.get(0, l));
        }
    RepHom id;
    for (std::size_t v = 0; v < m.quiver.num_vertices(); ++v)
        id.push_back(Mat::identity(f, m.dim[v]));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("f" + std::to_string(i));
    return alg::FDAlgebra::make(f, std::move(names), coords(id), table, /*trusted=*/true);
}

SubRep subrep_on(const Rep& m, const std::vector<Mat>& bases) {
    DimVector d(m.quiver.num_vertices(), 0);
    for (std::size_t v = 0; v < bases.size(); ++v) d[v] = static_cast<long>(bases[v].cols());
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a) {
        const qv::Arrow& ar = m.quiver.arrows()[a];
        auto x = la::solve(bases[ar.dst], la::mul(m.maps[a], bases[ar.src]));
        KOTHE_CHECK(x.has_value(), "internal: subspaces not arrow-invariant");
        maps.push_back(*x);
    }
    return {Rep::make(m.quiver, m.field, d, maps), bases};
}

void decompose_into(const Rep& m, Rng& rng, std::vector<Rep>& out) {
    if (m.total_dim() == 0) return;
    auto basis = hom_space(m, m);
    if (basis.size() == 1) {
        out.push_back(m);  // End = K
        return;
    }
    alg::FDAlgebra end = end_algebra_rep(m, basis);
    if (alg::is_local_algebra(end, rng)) {
        out.push_back(m);
        return;
    }
    const uint64_t n = static_cast<uint64_t>(m.total_dim());
    auto try_split = [&](const RepHom& phi) -> bool {
        std::vector<Mat> kerb, imb;
        long kdim = 0, idim = 0;
        for (std::size_t v = 0; v < m.quiver.num_vertices(); ++v) {
            Mat pw = la::pow(phi[v], n);
            Mat kb = la::kernel_basis(pw);
            Mat ib = la::image_basis(pw);
            kdim += static_cast<long>(kb.cols());
            idim += static_cast<long>(ib.cols());
            kerb.push_back(kb);
            imb.push_back(ib);
        }
        if (kdim == 0 || idim == 0) return false;
        KOTHE_CHECK(kdim + idim == m.total_dim(), "internal: Fitting split not exhaustive");
        decompose_into(subrep_on(m, kerb).sub, rng, out);
        decompose_into(subrep_on(m, imb).sub, rng, out);
        return true;
    };
    for (const RepHom& h : basis)
        if (try_split(h)) return;
    for (int tries = 0; tries < 256; ++tries) {
        RepHom cand;
        for (std::size_t v = 0; v < m.quiver.num_vertices(); ++v)
            cand.push_back(Mat::zeros(m.field, m.dim[v], m.dim[v]));
        for (const RepHom& h : basis) {
            Fel c = rng.fel(m.field);
            for (std::size_t v = 0; v < cand.size(); ++v)
                cand[v] = la::add(cand[v], la::scale(c, h[v]));
        }
        if (try_split(cand)) return;
    }
    throw Error("Fitting decomposition retry bound exceeded");
}

}  // namespace

bool is_indecomposable(const Rep& m, Rng& rng) {
    KOTHE_CHECK(m.total_dim() > 0, "indecomposability of the zero representation is undefined");
    auto basis = hom_space(m, m);
    if (basis.size() == 1) return true;  // End = K
    alg::FDAlgebra end = end_algebra_rep(m, basis);
    return alg::is_local_algebra(end, rng);
}

std::vector<std::pair<Rep, std::size_t>> decompose(const Rep& m, Rng& rng) {
    std::vector<Rep> parts;
    decompose_into(m, rng, parts);
    std::vector<std::pair<Rep, std::size_t>> grouped;
    for (Rep& p : parts) {
        bool found = false;
        for (auto& [g, mult] : grouped)
            if (isomorphic(g, p, rng)) {
                ++mult;
                found = true;
                break;
            }
        if (!found) grouped.push_back({std::move(p), 1});
    }
    std::sort(grouped.begin(), grouped.end(),
              [](const auto& a, const auto& b) { return a.first.dim < b.first.dim; });
    return grouped;
}

// ---------------------------------------------------------------------------
// reflection functors

Rep reflect_plus(const Rep& m, std::size_t sink) {
    KOTHE_CHECK(m.quiver.is_sink(sink), "reflect_plus needs a sink");
    const Field& f = m.field;
    Quiver rq = m.quiver.reflected_at(sink);
    std::vector<std::size_t> in_arrows;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a)
        if (m.quiver.arrows()[a].dst == sink) in_arrows.push_back(a);
    Mat g = Mat::zeros(f, m.dim[sink], 0);
    for (std::size_t a : in_arrows) g = la::hstack(g, m.maps[a]);
    Mat k = la::kernel_basis(g);
    DimVector d = m.dim;
    d[sink] = static_cast<long>(k.cols());
    std::vector<Mat> proj;
    {
        std::size_t off = 0;
        for (std::size_t a : in_arrows) {
            std::size_t dv = static_cast<std::size_t>(m.dim[m.quiver.arrows()[a].src]);
            Mat block = Mat::zeros(f, dv, k.cols());
            for (std::size_t r = 0; r < dv; ++r)
                for (std::size_t c = 0; c < k.cols(); ++c) block.set(r, c, k.get(off + r, c));
            proj.push_back(block);
            off += dv;
        }
    }
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a) {
        auto it = std::find(in_arrows.begin(), in_arrows.end(), a);
        if (it == in_arrows.end())
            maps.push_back(m.maps[a]);
        else
            maps.push_back(proj[static_cast<std::size_t>(it - in_arrows.begin())]);
    }
    return Rep::make(rq, f, d, maps);
}

Rep reflect_minus(const Rep& m, std::size_t source) {
    KOTHE_CHECK(m.quiver.is_source(source), "reflect_minus needs a source");
    const Field& f = m.field;
    Quiver rq = m.quiver.reflected_at(source);
    std::vector<std::size_t> out_arrows;
    std::size_t total = 0;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a)
        if (m.quiver.arrows()[a].src == source) {
            out_arrows.push_back(a);
            total += static_cast<std::size_t>(m.dim[m.quiver.arrows()[a].dst]);
        }
    Mat fmat = Mat::zeros(f, 0, m.dim[source]);
    for (std::size_t a : out_arrows)
        fmat = fmat.rows() == 0 ? m.maps[a] : la::vstack(fmat, m.maps[a]);
    if (fmat.rows() == 0) fmat = Mat::zeros(f, total, m.dim[source]);
    Mat img = la::image_basis(fmat);
    const std::size_t k = img.cols(), q = total - k;
    la::RrefResult rr = la::rref(la::transpose(img));
    std::vector<bool> pivot(total, false);
    for (std::size_t c : rr.pivots) pivot[c] = true;
    Mat ec = Mat::zeros(f, total, q);
    std::size_t ci = 0;
    for (std::size_t r = 0; r < total; ++r)
        if (!pivot[r]) ec.set_int(r, ci++, 1);
    Mat proj = Mat::zeros(f, q, total);
    {
        Mat t = la::hstack(img, ec);
        auto tinv = la::inverse(t);
        KOTHE_CHECK(tinv.has_value(), "internal: cokernel complement failed");
        for (std::size_t r = 0; r < q; ++r)
            for (std::size_t c = 0; c < total; ++c) proj.set(r, c, tinv->get(k + r, c));
    }
    DimVector d = m.dim;
    d[source] = static_cast<long>(q);
    std::vector<Mat> maps;
    for (std::size_t a = 0; a < m.quiver.num_arrows(); ++a) {
        auto it = std::find(out_arrows.begin(), out_arrows.end(), a);
        if (it == out_arrows.end()) {
            maps.push_back(m.maps[a]);
        } else {
            std::size_t off = 0;
            for (auto jt = out_arrows.begin(); jt != it; ++jt)
                off += static_cast<std::size_t>(m.dim[m.quiver.arrows()[*jt].dst]);
            std::size_t dv = static_cast<std::size_t>(m.dim[m.quiver.arrows()[a].dst]);
            Mat inc = Mat::zeros(f, total, dv);
            for (std::size_t r = 0; r < dv; ++r) inc.set_int(off + r, r, 1);
            maps.push_back(la::mul(proj, inc));
        }
    }
    return Rep::make(rq, f, d, maps);
}

// ---------------------------------------------------------------------------
// enumeration

std::vector<Rep> enumerate_indecomposables(const Quiver& q, const Field& f, Rng& rng) {
    qv::DynkinClass dc = qv::classify_dynkin(q);
    KOTHE_CHECK(dc.is_dynkin(), "indecomposable enumeration requires a Dynkin quiver");
    const std::size_t nv = q.num_vertices();
    // admissible vertex order: peel sinks (reverse topological, deterministic)
    std::vector<std::size_t> order;
    {
        std::vector<bool> gone(nv, false);
        while (order.size() < nv) {
            bool progressed = false;
            for (std::size_t v = 0; v < nv && !progressed; ++v) {
                if (gone[v]) continue;
                bool sink = true;
                for (const qv::Arrow& a : q.arrows())
                    if (a.src == v && !gone[a.dst]) {
                        sink = false;
                        break;
                    }
                if (sink) {
                    order.push_back(v);
                    gone[v] = true;
                    progressed = true;
                }
            }
            KOTHE_CHECK(progressed, "internal: no admissible vertex order");
        }
    }
    auto roots = qv::positive_roots(q);
    std::vector<Rep> out;
    for (const qv::DimVector& root : roots) {
        std::vector<std::size_t> applied;
        std::vector<Quiver> quivers{q};
        qv::DimVector d = root;
        std::size_t stop_vertex = nv;
        for (std::size_t step = 0; step < 10000; ++step) {
            std::size_t w = order[step % nv];
            qv::DimVector nd = qv::simple_reflection(q, w, d);
            if (std::any_of(nd.begin(), nd.end(), [](long x) { return x < 0; })) {
                // a positive root sent negative by s_w must be the simple at w
                qv::DimVector ew(nv, 0);
                ew[w] = 1;
                KOTHE_CHECK(d == ew, "internal: root walk detection failed");
                stop_vertex = w;
                break;
            }
            KOTHE_CHECK(quivers.back().is_sink(w), "internal: walk vertex is not a sink");
            applied.push_back(w);
            quivers.push_back(quivers.back().reflected_at(w));
            d = nd;
        }
        KOTHE_CHECK(stop_vertex < nv, "internal: reflection walk did not terminate");
        Rep m = Rep::simple(quivers[applied.size()], f, stop_vertex);
        for (std::size_t s = applied.size(); s-- > 0;) {
            m = reflect_minus(m, applied[s]);
            KOTHE_CHECK(m.quiver == quivers[s], "internal: walk quiver mismatch");
        }
        KOTHE_CHECK(m.dim == root, "internal: constructed dimension vector mismatch");
        KOTHE_CHECK(is_indecomposable(m, rng),
                    "internal: enumerated representation not indecomposable");
        out.push_back(std::move(m));
    }
    return out;
}

// ---------------------------------------------------------------------------
// path-algebra module realization

alg::AModule to_amodule(const Rep& m, const alg::PathAlgebra& pa,
                        std::shared_ptr<const alg::FDAlgebra> aptr) {
    KOTHE_CHECK(pa.quiver == m.quiver, "path algebra and representation quivers differ");
    const Field& f = m.field;
    const std::size_t nv = m.quiver.num_vertices();
    std::vector<std::size_t> off(nv + 1, 0);
    for (std::size_t v = 0; v < nv; ++v)
        off[v + 1] = off[v] + static_cast<std::size_t>(m.dim[v]);
    const std::size_t dm = off[nv];
    std::vector<Mat> act;
    for (const auto& path : pa.paths) {
        Mat block = Mat::identity(f, m.dim[path.src]);
        for (std::size_t a : path.arrows) block = la::mul(m.maps[a], block);
        Mat big = Mat::zeros(f, dm, dm);
        for (std::size_t r = 0; r < block.rows(); ++r)
            for (std::size_t c = 0; c < block.cols(); ++c)
                big.set(off[path.dst] + r, off[path.src] + c, block.get(r, c));
        act.push_back(big);
    }
    return alg::AModule::make(std::move(aptr), std::move(act), /*trusted=*/true);
}

// ---------------------------------------------------------------------------
// text formats

namespace {

Fel parse_entry(qv::Lexer& lex, const Field& f) {
    using qv::Token;
    if (lex.peek().kind != Token::Kind::number) lex.fail("expected a matrix entry");
    Token num = lex.next();
    if (lex.try_punct('/')) {
        if (lex.peek().kind != Token::Kind::number) lex.fail("expected a denominator");
        Token den = lex.next();
        return Fel::parse(f, num.text + "/" + den.text);
    }
    return Fel::parse(f, num.text);
}

Mat parse_matrix(qv::Lexer& lex, const Field& f, std::size_t rows, std::size_t cols,
                 const std::string& label) {
    lex.expect_punct('[');
    std::vector<std::vector<Fel>> data;
    if (!lex.try_punct(']')) {
        do {
            lex.expect_punct('[');
            std::vector<Fel> row;
            if (!lex.try_punct(']')) {
                do {
                    row.push_back(parse_entry(lex, f));
                } while (lex.try_punct(','));
                lex.expect_punct(']');
            }
            data.push_back(std::move(row));
        } while (lex.try_punct(','));
        lex.expect_punct(']');
    }
    if (data.size() != rows)
        lex.fail("map " + label + ": expected " + std::to_string(rows) + " rows, got " +
                 std::to_string(data.size()));
    Mat m = Mat::zeros(f, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (data[r].size() != cols)
            lex.fail("map " + label + ": expected " + std::to_string(cols) + " columns");
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, data[r][c]);
    }
    return m;
}

}  // namespace

Rep parse_rep(const std::string& text, const Quiver& q, const Field& f) {
    qv::Lexer lex(text);
    lex.expect_keyword("rep");
    lex.expect_punct('{');
    lex.expect_keyword("dim");
    lex.expect_punct(':');
    DimVector d;
    while (lex.peek().kind == qv::Token::Kind::number) {
        long v = 0;
        try {
            v = std::stol(lex.peek().text);
        } catch (const std::exception&) {
            lex.fail("dimension out of range");
        }
        lex.next();
        if (v < 0) lex.fail("dimensions must be non-negative");
        d.push_back(v);
    }
    lex.expect_punct(';');
    if (d.size() != q.num_vertices())
        lex.fail("dim: expected " + std::to_string(q.num_vertices()) + " entries");
    std::map<std::string, Mat> given;
    while (!lex.try_punct('}')) {
        lex.expect_keyword("map");
        qv::Token label = lex.expect_word("arrow label");
        lex.expect_punct(':');
        std::size_t ai = 0;
        try {
            ai = q.arrow_index(label.text);
        } catch (const Error&) {
            throw ParseError("unknown arrow in rep block: " + label.text, label.line,
                             label.col);
        }
        const qv::Arrow& ar = q.arrows()[ai];
        Mat m = parse_matrix(lex, f, static_cast<std::size_t>(d[ar.dst]),
                             static_cast<std::size_t>(d[ar.src]), label.text);
        if (!given.emplace(label.text, m).second)
            throw ParseError("duplicate map for arrow " + label.text, label.line, label.col);
        lex.expect_punct(';');
    }
    if (!lex.at_eof()) lex.fail("unexpected trailing input after rep block");
    std::vector<Mat> maps;
    for (const qv::Arrow& a : q.arrows()) {
        auto it = given.find(a.label);
        maps.push_back(it != given.end() ? it->second : Mat::zeros(f, d[a.dst], d[a.src]));
    }
    return Rep::make(q, f, d, maps);
}

std::string print_rep(const Rep& m) {
    std::ostringstream os;
    os << "rep {\n  dim:";
    for (long d : m.dim) os << " " << d;
    os << ";\n";
    for (std::size_t a = 0; a < m.maps.size(); ++a) {
        const Mat& mm = m.maps[a];
        if (mm.rows() == 0 || mm.cols() == 0) continue;
        os << "  map " << m.quiver.arrows()[a].label << ": [";
        for (std::size_t r = 0; r < mm.rows(); ++r) {
            os << (r ? ",[" : "[");
            for (std::size_t c = 0; c < mm.cols(); ++c)
                os << (c ? "," : "") << mm.get(r, c).str();
            os << "]";
        }
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

InputFile parse_input(const std::string& text, const Field& f) {
    std::string trailing;
    Quiver q = qv::parse_quiver(text, &trailing);
    InputFile out{q, std::nullopt};
    bool blank = true;
    for (std::size_t i = 0; i < trailing.size(); ++i) {
        char ch = trailing[i];
        if (ch == '#') {
            while (i < trailing.size() && trailing[i] != '\n') ++i;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            blank = false;
            break;
        }
    }
    if (!blank) out.representation = parse_rep(trailing, q, f);
    return out;
}

}  // namespace kothe::rep
