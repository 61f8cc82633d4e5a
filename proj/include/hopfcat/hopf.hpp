#ifndef HOPFCAT_HOPF_HPP
#define HOPFCAT_HOPF_HPP

#include <string>
#include <vector>

#include "hopfcat/lincat.hpp"

namespace hopfcat {

/// k-linear category whose hom spaces are coalgebras, compatibly with
/// composition.
template <class F>
struct SemiHopfCat {
    LinCat<F> alg;
    std::vector<Mat<F>> comults; // (x,y): d^2 x d
    std::vector<Mat<F>> counits; // (x,y): 1 x d

    int n() const { return alg.n(); }
    int dim(int x, int y) const { return alg.dim(x, y); }
    Mat<F>& comult(int x, int y) { return comults[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& comult(int x, int y) const { return comults[static_cast<std::size_t>(x) * n() + y]; }
    Mat<F>& counit(int x, int y) { return counits[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& counit(int x, int y) const { return counits[static_cast<std::size_t>(x) * n() + y]; }
};

template <class F>
SemiHopfCat<F> make_semi_hopf(LinCat<F> alg) {
    SemiHopfCat<F> h;
    h.alg = std::move(alg);
    int n = h.n();
    h.comults.resize(static_cast<std::size_t>(n) * n);
    h.counits.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = h.dim(x, y);
            h.comult(x, y) = Mat<F>(d * d, d);
            h.counit(x, y) = Mat<F>(1, d);
        }
    return h;
}

template <class F>
struct HopfCat {
    SemiHopfCat<F> base;
    std::vector<Mat<F>> antipodes; // (x,y): S_xy : H_xy -> H_yx

    int n() const { return base.n(); }
    int dim(int x, int y) const { return base.dim(x, y); }
    Mat<F>& antipode(int x, int y) { return antipodes[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& antipode(int x, int y) const {
        return antipodes[static_cast<std::size_t>(x) * n() + y];
    }
};

template <class F>
HopfCat<F> make_hopf(SemiHopfCat<F> base) {
    HopfCat<F> h;
    h.base = std::move(base);
    int n = h.n();
    h.antipodes.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) h.antipode(x, y) = Mat<F>(h.dim(y, x), h.dim(x, y));
    return h;
}

namespace detail {
inline std::string at2(int x, int y) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}
inline std::string at3(int x, int y, int z) {
    return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}
}

template <class F>
Report validate_semi_hopf(const SemiHopfCat<F>& h) {
    Report rep = validate_lincat(h.alg);
    int n = h.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = h.dim(x, y);
            Mat<F> id = Mat<F>::identity(d);
            const Mat<F>& dl = h.comult(x, y);
            rep.require(kron(dl, id) * dl == kron(id, dl) * dl,
                        "coassociativity fails at " + detail::at2(x, y));
            rep.require(kron(h.counit(x, y), id) * dl == id,
                        "left counit fails at " + detail::at2(x, y));
            rep.require(kron(id, h.counit(x, y)) * dl == id,
                        "right counit fails at " + detail::at2(x, y));
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int dxy = h.dim(x, y), dyz = h.dim(y, z);
                const Mat<F>& m = h.alg.mult(x, y, z);
                Mat<F> mid = kron(kron(Mat<F>::identity(dxy), swap_factors<F>(dxy, dyz)),
                                  Mat<F>::identity(dyz));
                Mat<F> rhs = kron(m, m) * mid * kron(h.comult(x, y), h.comult(y, z));
                rep.require(h.comult(x, z) * m == rhs,
                            "comultiplication not multiplicative at " + detail::at3(x, y, z));
                rep.require(h.counit(x, z) * m == kron(h.counit(x, y), h.counit(y, z)),
                            "counit not multiplicative at " + detail::at3(x, y, z));
            }
    for (int x = 0; x < n; ++x) {
        rep.require(h.comult(x, x) * h.alg.unit(x) == kron(h.alg.unit(x), h.alg.unit(x)),
                    "comultiplication of unit fails at " + detail::at2(x, x));
        Mat<F> one(1, 1);
        one(0, 0) = F(1);
        rep.require(h.counit(x, x) * h.alg.unit(x) == one,
                    "counit of unit fails at " + detail::at2(x, x));
    }
    return rep;
}

template <class F>
Report validate_antipode(const HopfCat<F>& h) {
    Report rep;
    int n = h.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = h.dim(x, y);
            Mat<F> id = Mat<F>::identity(d);
            const Mat<F>& s = h.antipode(x, y);
            Mat<F> lhs1 = h.base.alg.mult(x, y, x) * kron(id, s) * h.base.comult(x, y);
            rep.require(lhs1 == h.base.alg.unit(x) * h.base.counit(x, y),
                        "antipode identity h(1) S(h(2)) fails at " + detail::at2(x, y));
            Mat<F> lhs2 = h.base.alg.mult(y, x, y) * kron(s, id) * h.base.comult(x, y);
            rep.require(lhs2 == h.base.alg.unit(y) * h.base.counit(x, y),
                        "antipode identity S(h(1)) h(2) fails at " + detail::at2(x, y));
        }
    return rep;
}

template <class F>
bool antipode_invertible(const HopfCat<F>& h) {
    int n = h.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Mat<F>& s = h.antipode(x, y);
            if (s.rows() != s.cols() || rank(s) != s.rows()) return false;
        }
    return true;
}

/// Dual Hopf category: spaces K_xy each an algebra, comultiplication
/// indexed by triples, counits on the diagonal.
template <class F>
struct DualHopfCat {
    ObjSet objs;
    XFam dims;
    std::vector<Mat<F>> mults;    // (x,y): d x d^2
    std::vector<Mat<F>> units;    // (x,y): d x 1
    std::vector<Mat<F>> comults;  // (x,y,z): (d_xy * d_yz) x d_xz
    std::vector<Mat<F>> counits;  // x: 1 x d_xx
    bool has_antipode = false;
    std::vector<Mat<F>> antipodes; // (x,y): T_xy : K_yx -> K_xy

    int n() const { return objs.size(); }
    int dim(int x, int y) const { return dims.dim(x, y); }
    Mat<F>& mult(int x, int y) { return mults[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& mult(int x, int y) const { return mults[static_cast<std::size_t>(x) * n() + y]; }
    Mat<F>& unit(int x, int y) { return units[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& unit(int x, int y) const { return units[static_cast<std::size_t>(x) * n() + y]; }
    Mat<F>& comult(int x, int y, int z) { return comults[detail::tri(n(), x, y, z)]; }
    const Mat<F>& comult(int x, int y, int z) const { return comults[detail::tri(n(), x, y, z)]; }
    Mat<F>& counit(int x) { return counits[x]; }
    const Mat<F>& counit(int x) const { return counits[x]; }
    Mat<F>& antipode(int x, int y) { return antipodes[static_cast<std::size_t>(x) * n() + y]; }
    const Mat<F>& antipode(int x, int y) const {
        return antipodes[static_cast<std::size_t>(x) * n() + y];
    }
};

/// K_xy = H_yx^* with opposite convolution product; comultiplication is the
/// transpose of composition followed by the tensor-factor swap, which is the
/// unique choice matching the pairing <k(1),h'><k(2),h> = <k,hh'>. The dual
/// basis induced by the primal basis is used throughout.
template <class F>
DualHopfCat<F> dualize(const HopfCat<F>& h) {
    const SemiHopfCat<F>& sh = h.base;
    int n = h.n();
    DualHopfCat<F> k;
    k.objs = sh.alg.objs;
    k.dims = XFam(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) k.dims.dim(x, y) = h.dim(y, x);
    k.mults.resize(static_cast<std::size_t>(n) * n);
    k.units.resize(static_cast<std::size_t>(n) * n);
    k.comults.resize(static_cast<std::size_t>(n) * n * n);
    k.counits.resize(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = h.dim(y, x);
            k.mult(x, y) = (swap_factors<F>(d, d) * sh.comult(y, x)).transpose();
            k.unit(x, y) = sh.counit(y, x).transpose();
        }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                k.comult(x, y, z) = swap_factors<F>(h.dim(z, y), h.dim(y, x)) *
                                    sh.alg.mult(z, y, x).transpose();
    for (int x = 0; x < n; ++x) k.counit(x) = sh.alg.unit(x).transpose();
    k.has_antipode = true;
    k.antipodes.resize(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) k.antipode(x, y) = h.antipode(y, x).transpose();
    return k;
}

template <class F>
Report validate_dual_hopf(const DualHopfCat<F>& k) {
    Report rep;
    int n = k.n();
    // per-(x,y) associative unital algebra
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int d = k.dim(x, y);
            Mat<F> id = Mat<F>::identity(d);
            const Mat<F>& m = k.mult(x, y);
            rep.require(m * kron(m, id) == m * kron(id, m),
                        "component algebra associativity fails at " + detail::at2(x, y));
            rep.require(m * kron(k.unit(x, y), id) == id && m * kron(id, k.unit(x, y)) == id,
                        "component algebra unit fails at " + detail::at2(x, y));
        }
    // coassociativity and counits of the triple-indexed comultiplication
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    Mat<F> lhs = kron(k.comult(x, y, z), Mat<F>::identity(k.dim(z, w))) *
                                 k.comult(x, z, w);
                    Mat<F> rhs = kron(Mat<F>::identity(k.dim(x, y)), k.comult(y, z, w)) *
                                 k.comult(x, y, w);
                    rep.require(lhs == rhs, "dual coassociativity fails at " +
                                                detail::at3(x, y, z) + "," + std::to_string(w));
                }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Mat<F> id = Mat<F>::identity(k.dim(x, y));
            rep.require(kron(k.counit(x), id) * k.comult(x, x, y) == id,
                        "dual left counit fails at " + detail::at2(x, y));
            rep.require(kron(id, k.counit(y)) * k.comult(x, y, y) == id,
                        "dual right counit fails at " + detail::at2(x, y));
        }
    // comultiplication is multiplicative K_xz -> K_xy (x) K_yz
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int dxy = k.dim(x, y), dyz = k.dim(y, z);
                Mat<F> mid = kron(kron(Mat<F>::identity(dxy), swap_factors<F>(dxy, dyz)),
                                  Mat<F>::identity(dyz));
                Mat<F> rhs = kron(k.mult(x, y), k.mult(y, z)) * mid *
                             kron(k.comult(x, y, z), k.comult(x, y, z));
                rep.require(k.comult(x, y, z) * k.mult(x, z) == rhs,
                            "dual comultiplication not multiplicative at " + detail::at3(x, y, z));
                rep.require(k.comult(x, y, z) * k.unit(x, z) == kron(k.unit(x, y), k.unit(y, z)),
                            "dual comultiplication of unit fails at " + detail::at3(x, y, z));
            }
    // counits are algebra maps
    for (int x = 0; x < n; ++x) {
        rep.require(k.counit(x) * k.mult(x, x) == kron(k.counit(x), k.counit(x)),
                    "dual counit not multiplicative at " + detail::at2(x, x));
        Mat<F> one(1, 1);
        one(0, 0) = F(1);
        rep.require(k.counit(x) * k.unit(x, x) == one,
                    "dual counit of unit fails at " + detail::at2(x, x));
    }
    if (k.has_antipode) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                Mat<F> lhs1 = k.mult(x, y) *
                              kron(Mat<F>::identity(k.dim(x, y)), k.antipode(x, y)) *
                              k.comult(x, y, x);
                rep.require(lhs1 == k.unit(x, y) * k.counit(x),
                            "dual antipode identity l(1) T(l(2)) fails at " + detail::at2(x, y));
                Mat<F> lhs2 = k.mult(y, x) *
                              kron(k.antipode(y, x), Mat<F>::identity(k.dim(y, x))) *
                              k.comult(x, y, x);
                rep.require(lhs2 == k.unit(y, x) * k.counit(x),
                            "dual antipode identity T(l(1)) l(2) fails at " + detail::at2(x, y));
            }
    }
    return rep;
}

/// Inverse construction: from a locally finite dual Hopf category back to a
/// Hopf category, using the evaluation identification on the dual basis.
template <class F>
HopfCat<F> dualize_back(const DualHopfCat<F>& k) {
    int n = k.n();
    XFam dims(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) dims.dim(x, y) = k.dim(y, x);
    LinCat<F> alg = make_lincat<F>(k.objs, dims);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                alg.mult(a, b, c) =
                    (swap_factors<F>(k.dim(c, b), k.dim(b, a)) * k.comult(c, b, a)).transpose();
    for (int a = 0; a < n; ++a) alg.unit(a) = k.counit(a).transpose();
    SemiHopfCat<F> sh = make_semi_hopf(std::move(alg));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int d = k.dim(b, a);
            sh.comult(a, b) = swap_factors<F>(d, d) * k.mult(b, a).transpose();
            sh.counit(a, b) = k.unit(b, a).transpose();
        }
    HopfCat<F> h = make_hopf(std::move(sh));
    if (k.has_antipode)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) h.antipode(a, b) = k.antipode(b, a).transpose();
    return h;
}

template <class F>
Report double_dual_compare(const HopfCat<F>& h) {
    Report rep;
    DualHopfCat<F> k = dualize(h);
    HopfCat<F> h2 = dualize_back(k);
    int n = h.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            rep.require(h2.base.comult(x, y) == h.base.comult(x, y),
                        "double dual comultiplication differs at " + detail::at2(x, y));
            rep.require(h2.base.counit(x, y) == h.base.counit(x, y),
                        "double dual counit differs at " + detail::at2(x, y));
            rep.require(h2.antipode(x, y) == h.antipode(x, y),
                        "double dual antipode differs at " + detail::at2(x, y));
            for (int z = 0; z < n; ++z)
                rep.require(h2.base.alg.mult(x, y, z) == h.base.alg.mult(x, y, z),
                            "double dual composition differs at " + detail::at3(x, y, z));
        }
    for (int x = 0; x < n; ++x)
        rep.require(h2.base.alg.unit(x) == h.base.alg.unit(x),
                    "double dual unit differs at " + std::to_string(x));
    return rep;
}

} // namespace hopfcat

#endif
