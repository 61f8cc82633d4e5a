#ifndef HOPFCAT_LINCAT_HPP
#define HOPFCAT_LINCAT_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcat/matrix.hpp"
#include "hopfcat/report.hpp"

namespace hopfcat {

/// Finite ordered object set. Index arithmetic everywhere depends on the
/// ordering, so it is fixed at construction.
struct ObjSet {
    std::vector<std::string> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int index(const std::string& name) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i] == name) return i;
        throw std::invalid_argument("ObjSet: unknown object " + name);
    }
    bool operator==(const ObjSet& o) const { return labels == o.labels; }
};

/// X x X indexed family of dimensions.
struct XFam {
    int n = 0;
    std::vector<int> d; // n*n, row-major

    XFam() = default;
    explicit XFam(int n_) : n(n_), d(static_cast<std::size_t>(n_) * n_, 0) {}
    int& dim(int x, int y) { return d[static_cast<std::size_t>(x) * n + y]; }
    int dim(int x, int y) const { return d[static_cast<std::size_t>(x) * n + y]; }
    bool operator==(const XFam& o) const { return n == o.n && d == o.d; }
};

/// X indexed family of dimensions.
struct DiagFam {
    std::vector<int> d;
    int dim(int x) const { return d[x]; }
};

namespace detail {
inline std::size_t tri(int n, int x, int y, int z) {
    return (static_cast<std::size_t>(x) * n + y) * n + z;
}
}

/// k-linear category over a finite object set: hom spaces A_xy with
/// composition tensors m_xyz : A_xy (x) A_yz -> A_xz and unit vectors.
template <class F>
struct LinCat {
    ObjSet objs;
    XFam dims;
    std::vector<Mat<F>> mults; // n^3 entries, (x,y,z)
    std::vector<Mat<F>> units; // n column vectors, dim(x,x) x 1

    int n() const { return objs.size(); }
    int dim(int x, int y) const { return dims.dim(x, y); }
    Mat<F>& mult(int x, int y, int z) { return mults[detail::tri(n(), x, y, z)]; }
    const Mat<F>& mult(int x, int y, int z) const { return mults[detail::tri(n(), x, y, z)]; }
    Mat<F>& unit(int x) { return units[x]; }
    const Mat<F>& unit(int x) const { return units[x]; }

    /// Left multiplication by a fixed element a of A_xy, as a map A_yz -> A_xz.
    Mat<F> lmul(int x, int y, int z, const Mat<F>& a) const {
        return mult(x, y, z) * kron(a, Mat<F>::identity(dim(y, z)));
    }
    /// Right multiplication by a fixed element a of A_yz, as a map A_xy -> A_xz.
    Mat<F> rmul(int x, int y, int z, const Mat<F>& a) const {
        return mult(x, y, z) * kron(Mat<F>::identity(dim(x, y)), a);
    }
};

template <class F>
LinCat<F> make_lincat(ObjSet objs, XFam dims) {
    LinCat<F> a;
    a.objs = std::move(objs);
    a.dims = std::move(dims);
    int n = a.n();
    a.mults.resize(static_cast<std::size_t>(n) * n * n);
    a.units.resize(n);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                a.mult(x, y, z) = Mat<F>(a.dim(x, z), a.dim(x, y) * a.dim(y, z));
        a.unit(x) = Mat<F>(a.dim(x, x), 1);
    }
    return a;
}

/// Family of finite-dimensional unital algebras B_x; the diagonal
/// k-linear categories of the theory.
template <class F>
struct DiagAlgebra {
    ObjSet objs;
    std::vector<int> dims;
    std::vector<Mat<F>> mults; // d_x x d_x^2
    std::vector<Mat<F>> units; // d_x x 1

    int n() const { return objs.size(); }
    int dim(int x) const { return dims[x]; }
    const Mat<F>& mult(int x) const { return mults[x]; }
    const Mat<F>& unit(int x) const { return units[x]; }

    LinCat<F> as_lincat() const {
        XFam xf(n());
        for (int x = 0; x < n(); ++x) xf.dim(x, x) = dims[x];
        LinCat<F> a = make_lincat<F>(objs, xf);
        for (int x = 0; x < n(); ++x) {
            a.mult(x, x, x) = mults[x];
            a.unit(x) = units[x];
        }
        return a;
    }
};

/// Right A-module: spaces M_xy with actions M_xy (x) A_yz -> M_xz.
template <class F>
struct RightModule {
    LinCat<F> over;
    XFam dims;
    std::vector<Mat<F>> acts; // (x,y,z): dM_xz x (dM_xy * dA_yz)

    int n() const { return over.n(); }
    int dim(int x, int y) const { return dims.dim(x, y); }
    Mat<F>& act(int x, int y, int z) { return acts[detail::tri(n(), x, y, z)]; }
    const Mat<F>& act(int x, int y, int z) const { return acts[detail::tri(n(), x, y, z)]; }
};

/// Left A-module: spaces M_xy with actions A_xy (x) M_yz -> M_xz.
template <class F>
struct LeftModule {
    LinCat<F> over;
    XFam dims;
    std::vector<Mat<F>> acts; // (x,y,z): dM_xz x (dA_xy * dM_yz)

    int n() const { return over.n(); }
    int dim(int x, int y) const { return dims.dim(x, y); }
    Mat<F>& act(int x, int y, int z) { return acts[detail::tri(n(), x, y, z)]; }
    const Mat<F>& act(int x, int y, int z) const { return acts[detail::tri(n(), x, y, z)]; }
};

template <class F>
RightModule<F> make_right_module(const LinCat<F>& a, XFam dims) {
    RightModule<F> m;
    m.over = a;
    m.dims = std::move(dims);
    int n = a.n();
    m.acts.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                m.act(x, y, z) = Mat<F>(m.dim(x, z), m.dim(x, y) * a.dim(y, z));
    return m;
}

template <class F>
LeftModule<F> make_left_module(const LinCat<F>& a, XFam dims) {
    LeftModule<F> m;
    m.over = a;
    m.dims = std::move(dims);
    int n = a.n();
    m.acts.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                m.act(x, y, z) = Mat<F>(m.dim(x, z), a.dim(x, y) * m.dim(y, z));
    return m;
}

/// A as a right module over itself.
template <class F>
RightModule<F> regular_right_module(const LinCat<F>& a) {
    RightModule<F> m = make_right_module(a, a.dims);
    m.acts = a.mults;
    return m;
}

template <class F>
LeftModule<F> regular_left_module(const LinCat<F>& a) {
    LeftModule<F> m = make_left_module(a, a.dims);
    m.acts = a.mults;
    return m;
}

template <class F>
Report validate_lincat(const LinCat<F>& a) {
    Report rep;
    int n = a.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u) {
                    Mat<F> lhs = a.mult(x, z, u) * kron(a.mult(x, y, z), Mat<F>::identity(a.dim(z, u)));
                    Mat<F> rhs = a.mult(x, y, u) * kron(Mat<F>::identity(a.dim(x, y)), a.mult(y, z, u));
                    rep.require(lhs == rhs, "associativity fails at (" + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + "," +
                                                std::to_string(u) + ")");
                }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Mat<F> lu = a.mult(x, x, y) * kron(a.unit(x), Mat<F>::identity(a.dim(x, y)));
            Mat<F> ru = a.mult(x, y, y) * kron(Mat<F>::identity(a.dim(x, y)), a.unit(y));
            rep.require(lu == Mat<F>::identity(a.dim(x, y)),
                        "left unit fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            rep.require(ru == Mat<F>::identity(a.dim(x, y)),
                        "right unit fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
    return rep;
}

template <class F>
Report validate_diag_algebra(const DiagAlgebra<F>& b) {
    return validate_lincat(b.as_lincat());
}

template <class F>
Report validate_right_module(const RightModule<F>& m) {
    Report rep;
    const LinCat<F>& a = m.over;
    int n = a.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u) {
                    Mat<F> lhs = m.act(x, z, u) * kron(m.act(x, y, z), Mat<F>::identity(a.dim(z, u)));
                    Mat<F> rhs = m.act(x, y, u) * kron(Mat<F>::identity(m.dim(x, y)), a.mult(y, z, u));
                    rep.require(lhs == rhs, "module associativity fails at (" + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + "," +
                                                std::to_string(u) + ")");
                }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rep.require(m.act(x, y, y) * kron(Mat<F>::identity(m.dim(x, y)), a.unit(y)) ==
                            Mat<F>::identity(m.dim(x, y)),
                        "module unit fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return rep;
}

template <class F>
Report validate_left_module(const LeftModule<F>& m) {
    Report rep;
    const LinCat<F>& a = m.over;
    int n = a.n();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u) {
                    Mat<F> lhs = m.act(x, y, u) * kron(Mat<F>::identity(a.dim(x, y)), m.act(y, z, u));
                    Mat<F> rhs = m.act(x, z, u) * kron(a.mult(x, y, z), Mat<F>::identity(m.dim(z, u)));
                    rep.require(lhs == rhs, "module associativity fails at (" + std::to_string(x) + "," +
                                                std::to_string(y) + "," + std::to_string(z) + "," +
                                                std::to_string(u) + ")");
                }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            rep.require(m.act(x, x, y) * kron(a.unit(x), Mat<F>::identity(m.dim(x, y))) ==
                            Mat<F>::identity(m.dim(x, y)),
                        "module unit fails at (" + std::to_string(x) + "," + std::to_string(y) + ")");
    return rep;
}

// ---------------------------------------------------------------------------
// Single-algebra actions and the module-theoretic classifiers of the theory.
// ---------------------------------------------------------------------------

/// Action of one algebra B on one space V, given per algebra basis element
/// as a dV x dV matrix. Used for both left and right actions; for a right
/// action, by[k] is the matrix of v -> v.b_k.
template <class F>
struct AlgAction {
    int alg_dim = 0;
    int space_dim = 0;
    std::vector<Mat<F>> by;
};

/// Left regular action of B_x on itself.
template <class F>
AlgAction<F> regular_left_action(const DiagAlgebra<F>& b, int x) {
    AlgAction<F> a;
    a.alg_dim = a.space_dim = b.dim(x);
    for (int k = 0; k < b.dim(x); ++k) {
        Mat<F> ek(b.dim(x), 1);
        ek(k, 0) = F(1);
        a.by.push_back(b.mult(x) * kron(ek, Mat<F>::identity(b.dim(x))));
    }
    return a;
}

/// Right regular action of B_x on itself.
template <class F>
AlgAction<F> regular_right_action(const DiagAlgebra<F>& b, int x) {
    AlgAction<F> a;
    a.alg_dim = a.space_dim = b.dim(x);
    for (int k = 0; k < b.dim(x); ++k) {
        Mat<F> ek(b.dim(x), 1);
        ek(k, 0) = F(1);
        a.by.push_back(b.mult(x) * kron(Mat<F>::identity(b.dim(x)), ek));
    }
    return a;
}

/// Trivial action of the one-dimensional algebra k on a space.
template <class F>
AlgAction<F> scalar_action(int space_dim) {
    AlgAction<F> a;
    a.alg_dim = 1;
    a.space_dim = space_dim;
    a.by.push_back(Mat<F>::identity(space_dim));
    return a;
}

/// Tensor product over B: (M (x) N) / span{ m.b (x) n - m (x) b.n }.
template <class F>
Quotient<F> tensor_over_diag(const AlgAction<F>& right, const AlgAction<F>& left) {
    if (right.alg_dim != left.alg_dim)
        throw std::invalid_argument("tensor_over_diag: algebra dimension mismatch");
    int dm = right.space_dim, dn = left.space_dim, db = right.alg_dim;
    Mat<F> rel(dm * db * dn, dm * dn);
    int row = 0;
    for (int i = 0; i < dm; ++i)
        for (int k = 0; k < db; ++k)
            for (int j = 0; j < dn; ++j, ++row) {
                for (int ii = 0; ii < dm; ++ii)
                    rel(row, ii * dn + j) += right.by[k](ii, i);
                for (int jj = 0; jj < dn; ++jj)
                    rel(row, i * dn + jj) -= left.by[k](jj, j);
            }
    return quotient_by(dm * dn, rel);
}

/// Basis of the space of B-equivariant maps f : V -> W, i.e. maps with
/// f(b.v) = b.f(v) for every algebra basis element. Maps are returned as
/// dW x dV matrices, echelon-ordered.
template <class F>
std::vector<Mat<F>> hom_linear(const AlgAction<F>& dom, const AlgAction<F>& cod) {
    if (dom.alg_dim != cod.alg_dim)
        throw std::invalid_argument("hom_linear: algebra dimension mismatch");
    int dv = dom.space_dim, dw = cod.space_dim, db = dom.alg_dim;
    // unknown vec(f), row-major; constraint f.D_k - C_k.f = 0
    Mat<F> sys(0, dw * dv);
    for (int k = 0; k < db; ++k) {
        Mat<F> c = kron(Mat<F>::identity(dw), dom.by[k].transpose()) -
                   kron(cod.by[k], Mat<F>::identity(dv));
        sys = sys.rows() == 0 ? c : vstack(sys, c);
    }
    Mat<F> ker = db == 0 ? Mat<F>::identity(dw * dv) : kernel_basis(sys);
    std::vector<Mat<F>> basis;
    for (int c = 0; c < ker.cols(); ++c) {
        Mat<F> f(dw, dv);
        for (int i = 0; i < dw; ++i)
            for (int j = 0; j < dv; ++j) f(i, j) = ker(i * dv + j, c);
        basis.push_back(f);
    }
    return basis;
}

/// Express a map in the span of a hom basis; nullopt if outside the span.
template <class F>
std::optional<Mat<F>> coords_in_basis(const std::vector<Mat<F>>& basis, const Mat<F>& f) {
    int dw = f.rows(), dv = f.cols();
    Mat<F> sys(dw * dv, static_cast<int>(basis.size()));
    for (std::size_t b = 0; b < basis.size(); ++b)
        for (int i = 0; i < dw; ++i)
            for (int j = 0; j < dv; ++j) sys(i * dv + j, static_cast<int>(b)) = basis[b](i, j);
    Mat<F> rhs(dw * dv, 1);
    for (int i = 0; i < dw; ++i)
        for (int j = 0; j < dv; ++j) rhs(i * dv + j, 0) = f(i, j);
    return solve(sys, rhs);
}

struct ModuleClass {
    bool finite_projective = false;
    bool flat = false;
    bool generator = false;
    bool faithfully_flat = false;
};

/// Splitting of the free cover B^dM ->> M for a left B-module M, if one
/// exists. The result maps M into B^dM, stored as a (dM*dB) x dM matrix
/// whose block row j is the functional component e_j^*.
template <class F>
std::optional<Mat<F>> projective_splitting(const DiagAlgebra<F>& b, int x, const AlgAction<F>& mod) {
    int dm = mod.space_dim, db = b.dim(x);
    if (dm == 0) return Mat<F>(0, 0);
    AlgAction<F> lreg = regular_left_action(b, x);
    // cover pi : B^dm -> M, pi(e_j (x) b_t) = b_t . e_j
    Mat<F> pi(dm, dm * db);
    for (int j = 0; j < dm; ++j)
        for (int t = 0; t < db; ++t)
            for (int i = 0; i < dm; ++i) pi(i, j * db + t) = mod.by[t](i, j);
    int dfree = dm * db;
    Mat<F> sys(0, dfree * dm);
    Mat<F> rhs(0, 1);
    for (int k = 0; k < db; ++k) {
        Mat<F> free_act = kron(Mat<F>::identity(dm), lreg.by[k]);
        Mat<F> c = kron(Mat<F>::identity(dfree), mod.by[k].transpose()) -
                   kron(free_act, Mat<F>::identity(dm));
        sys = sys.rows() == 0 ? c : vstack(sys, c);
        rhs = vstack(rhs, Mat<F>(c.rows(), 1));
    }
    Mat<F> c2 = kron(pi, Mat<F>::identity(dm));
    Mat<F> r2(dm * dm, 1);
    for (int i = 0; i < dm; ++i) r2(i * dm + i, 0) = F(1);
    sys = sys.rows() == 0 ? c2 : vstack(sys, c2);
    rhs = rhs.rows() == 0 ? r2 : vstack(rhs, r2);
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    Mat<F> s(dfree, dm);
    for (int i = 0; i < dfree; ++i)
        for (int j = 0; j < dm; ++j) s(i, j) = (*sol)(i * dm + j, 0);
    return s;
}

/// Decides finite projectivity, flatness, the generator property and
/// faithful flatness for a finite-dimensional left B_x-module. In this
/// finite regime flat coincides with finitely generated projective.
template <class F>
ModuleClass classify_module(const DiagAlgebra<F>& b, int x, const AlgAction<F>& mod) {
    ModuleClass c;
    c.finite_projective = projective_splitting(b, x, mod).has_value();
    c.flat = c.finite_projective;
    // trace ideal: span of f(v) over B-linear functionals f and v in M
    AlgAction<F> lreg = regular_left_action(b, x);
    std::vector<Mat<F>> duals = hom_linear(mod, lreg);
    int db = b.dim(x);
    Mat<F> tr(db, static_cast<int>(duals.size()) * mod.space_dim);
    int col = 0;
    for (const auto& f : duals)
        for (int j = 0; j < mod.space_dim; ++j, ++col)
            for (int i = 0; i < db; ++i) tr(i, col) = f(i, j);
    c.generator = (rank(tr) == db);
    c.faithfully_flat = c.flat && c.generator;
    return c;
}

/// Dual basis pairs (e_i^*, e_i) with sum_i e_i^*(m) e_i = m.
template <class F>
struct DualBasis {
    std::vector<Mat<F>> functionals; // dB x dM each
    std::vector<Mat<F>> elements;    // dM x 1 each
};

template <class F>
DualBasis<F> dual_basis(const DiagAlgebra<F>& b, int x, const AlgAction<F>& mod) {
    auto s = projective_splitting(b, x, mod);
    if (!s)
        throw std::domain_error("dual_basis: module is not finitely generated projective (no splitting)");
    int dm = mod.space_dim, db = b.dim(x);
    DualBasis<F> res;
    for (int j = 0; j < dm; ++j) {
        Mat<F> f(db, dm);
        for (int t = 0; t < db; ++t)
            for (int c = 0; c < dm; ++c) f(t, c) = (*s)(j * db + t, c);
        Mat<F> e(dm, 1);
        e(j, 0) = F(1);
        res.functionals.push_back(f);
        res.elements.push_back(e);
    }
    // sum_i e_i^*(m) e_i = m
    Mat<F> total(dm, dm);
    for (int j = 0; j < dm; ++j) {
        Mat<F> ej_act(dm, db); // b -> b.e_j
        for (int t = 0; t < db; ++t)
            for (int i = 0; i < dm; ++i) ej_act(i, t) = mod.by[t](i, j);
        total = total + ej_act * res.functionals[j];
    }
    if (total != Mat<F>::identity(dm))
        throw std::logic_error("dual_basis: first dual basis identity failed");
    // sum_i e_i^* m^*(e_i) = m^* for every B-linear functional m^*
    AlgAction<F> lreg = regular_left_action(b, x);
    AlgAction<F> rreg = regular_right_action(b, x);
    for (const auto& mstar : hom_linear(mod, lreg)) {
        Mat<F> acc(db, dm);
        for (int j = 0; j < dm; ++j) {
            Mat<F> val = mstar * res.elements[j]; // m^*(e_j) in B
            Mat<F> rmulv(db, db);
            for (int t = 0; t < db; ++t) rmulv = rmulv + rreg.by[t] * val(t, 0);
            acc = acc + rmulv * res.functionals[j];
        }
        if (acc != mstar) throw std::logic_error("dual_basis: second dual basis identity failed");
    }
    return res;
}

/// The evaluation isomorphism P (x)_B M -> Hom_B(M^*, P) for M finite
/// projective, together with its inverse; both returned as matrices in the
/// quotient/hom-basis coordinates.
template <class F>
struct EvalIso {
    Quotient<F> domain;           // P (x)_B M
    std::vector<Mat<F>> hom_basis; // basis of Hom_B(M^*, P), dP x dim(M^*)
    Mat<F> forward;               // hom coords x qdim
    Mat<F> backward;              // qdim x hom coords
};

template <class F>
EvalIso<F> eval_iso_alpha(const DiagAlgebra<F>& b, int x, const AlgAction<F>& p_right,
                          const AlgAction<F>& m_left) {
    EvalIso<F> iso;
    int dp = p_right.space_dim, dm = m_left.space_dim, db = b.dim(x);
    iso.domain = tensor_over_diag(p_right, m_left);
    AlgAction<F> lreg = regular_left_action(b, x);
    AlgAction<F> rreg = regular_right_action(b, x);
    // M^* = B-linear functionals M -> B, a right B-module via (f.b)(m) = f(m)b
    std::vector<Mat<F>> mstar = hom_linear(m_left, lreg);
    int ds = static_cast<int>(mstar.size());
    AlgAction<F> mstar_right;
    mstar_right.alg_dim = db;
    mstar_right.space_dim = ds;
    for (int k = 0; k < db; ++k) {
        Mat<F> actk(ds, ds);
        for (int l = 0; l < ds; ++l) {
            auto co = coords_in_basis(mstar, rreg.by[k] * mstar[l]);
            if (!co) throw std::logic_error("eval_iso_alpha: dual space not closed under action");
            for (int i = 0; i < ds; ++i) actk(i, l) = (*co)(i, 0);
        }
        mstar_right.by.push_back(actk);
    }
    iso.hom_basis = hom_linear(mstar_right, p_right);
    int dh = static_cast<int>(iso.hom_basis.size());
    // forward on ambient basis p_i (x) m_j : the map f -> p_i . f(m_j)
    Mat<F> fwd_amb(dh, dp * dm);
    for (int i = 0; i < dp; ++i)
        for (int j = 0; j < dm; ++j) {
            Mat<F> g(dp, ds);
            for (int l = 0; l < ds; ++l) {
                Mat<F> val = mstar[l].col(j); // f_l(m_j) in B
                Mat<F> acted(dp, 1);
                for (int t = 0; t < db; ++t)
                    acted = acted + p_right.by[t].col(i) * val(t, 0);
                for (int r = 0; r < dp; ++r) g(r, l) = acted(r, 0);
            }
            auto co = coords_in_basis(iso.hom_basis, g);
            if (!co) throw std::logic_error("eval_iso_alpha: image outside Hom_B(M^*,P)");
            for (int h = 0; h < dh; ++h) fwd_amb(h, i * dm + j) = (*co)(h, 0);
        }
    iso.forward = fwd_amb * iso.domain.section;
    // backward: f -> sum_i f(e_i^*) (x) e_i
    DualBasis<F> dbasis = dual_basis(b, x, m_left);
    Mat<F> bwd(iso.domain.dim(), dh);
    for (int h = 0; h < dh; ++h) {
        Mat<F> amb(dp * dm, 1);
        for (std::size_t i = 0; i < dbasis.functionals.size(); ++i) {
            auto co = coords_in_basis(mstar, dbasis.functionals[i]);
            if (!co) throw std::logic_error("eval_iso_alpha: dual basis functional outside M^*");
            Mat<F> val = iso.hom_basis[h] * *co; // in P
            for (int r = 0; r < dp; ++r)
                for (int j = 0; j < dm; ++j)
                    amb(r * dm + j, 0) += val(r, 0) * dbasis.elements[i](j, 0);
        }
        Mat<F> q = iso.domain.projection * amb;
        for (int r = 0; r < iso.domain.dim(); ++r) bwd(r, h) = q(r, 0);
    }
    iso.backward = bwd;
    return iso;
}

} // namespace hopfcat

#endif
