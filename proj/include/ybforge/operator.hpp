#ifndef YBFORGE_OPERATOR_HPP
#define YBFORGE_OPERATOR_HPP

#include <ybforge/algebra.hpp>
#include <ybforge/errors.hpp>
#include <ybforge/matrix.hpp>

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace ybforge {

/// Linear operator on V (x) V with dim V = n. Basis e_i (x) e_j has index
/// i*n + j (zero-based); mat(row, col) is the row-coefficient of the image
/// of the col-th basis tensor.
struct LinOp2 {
    std::size_t n = 0;
    Mat mat;

    LinOp2() = default;
    LinOp2(std::size_t n_, Mat m) : n(n_), mat(std::move(m))
    {
        if (mat.rows() != n * n || mat.cols() != n * n) throw ShapeError("LinOp2: matrix must be n^2 x n^2");
    }

    static LinOp2 zero(std::size_t n) { return LinOp2(n, Mat(n * n, n * n)); }

    friend bool operator==(const LinOp2&, const LinOp2&) = default;
};

/// Operator on V (x) V (x) V, index (i, j, k) -> i*n^2 + j*n + k.
struct LinOp3 {
    std::size_t n = 0;
    Mat mat;

    LinOp3() = default;
    LinOp3(std::size_t n_, Mat m) : n(n_), mat(std::move(m))
    {
        if (mat.rows() != n * n * n || mat.cols() != n * n * n) throw ShapeError("LinOp3: matrix must be n^3 x n^3");
    }

    bool is_zero() const { return mat.is_zero(); }
    friend bool operator==(const LinOp3&, const LinOp3&) = default;
};

inline LinOp2 twist(std::size_t n)
{
    if (n == 0) throw PreconditionError("twist: n must be >= 1");
    return LinOp2(n, twist_matrix(n));
}

inline LinOp2 identity2(std::size_t n)
{
    if (n == 0) throw PreconditionError("identity2: n must be >= 1");
    return LinOp2(n, Mat::identity(n * n));
}

/// R o S
inline LinOp2 compose(const LinOp2& r, const LinOp2& s)
{
    if (r.n != s.n) throw ShapeError("compose: base dimensions differ");
    return LinOp2(r.n, mat_mul(r.mat, s.mat));
}

inline LinOp3 compose(const LinOp3& r, const LinOp3& s)
{
    if (r.n != s.n) throw ShapeError("compose: base dimensions differ");
    return LinOp3(r.n, mat_mul(r.mat, s.mat));
}

enum class Slot { s12, s13, s23 };

inline LinOp3 lift(const LinOp2& r, Slot slot)
{
    const Mat id = Mat::identity(r.n);
    switch (slot) {
    case Slot::s12: return LinOp3(r.n, kron(r.mat, id));
    case Slot::s23: return LinOp3(r.n, kron(id, r.mat));
    case Slot::s13: {
        // (I (x) tau)(R (x) I)(I (x) tau)
        const Mat swap23 = kron(id, twist_matrix(r.n));
        return LinOp3(r.n, mat_mul(swap23, mat_mul(kron(r.mat, id), swap23)));
    }
    }
    throw PreconditionError("lift: bad slot");
}

struct Lifts {
    LinOp3 r12, r13, r23;
};

inline Lifts all_lifts(const LinOp2& r) { return {lift(r, Slot::s12), lift(r, Slot::s13), lift(r, Slot::s23)}; }

/// Left and right sides of R12 R23 R12 = R23 R12 R23.
inline std::pair<Mat, Mat> braid_sides(const LinOp2& r)
{
    const Mat r12 = lift(r, Slot::s12).mat;
    const Mat r23 = lift(r, Slot::s23).mat;
    return {mat_mul(r12, mat_mul(r23, r12)), mat_mul(r23, mat_mul(r12, r23))};
}

/// Left and right sides of R12 R13 R23 = R23 R13 R12.
inline std::pair<Mat, Mat> qybe_sides(const LinOp2& r)
{
    const Lifts l = all_lifts(r);
    return {mat_mul(l.r12.mat, mat_mul(l.r13.mat, l.r23.mat)), mat_mul(l.r23.mat, mat_mul(l.r13.mat, l.r12.mat))};
}

inline bool braid_check(const LinOp2& r)
{
    const auto [lhs, rhs] = braid_sides(r);
    return lhs == rhs;
}

inline bool qybe_check(const LinOp2& r)
{
    const auto [lhs, rhs] = qybe_sides(r);
    return lhs == rhs;
}

struct YbReport {
    bool braid = false;
    bool invertible = false;
    bool yb = false;
};

inline YbReport is_yb_operator(const LinOp2& r)
{
    YbReport rep;
    rep.braid = braid_check(r);
    rep.invertible = mat_inverse(r.mat).has_value();
    rep.yb = rep.braid && rep.invertible;
    return rep;
}

/// braid(R) == qybe(R o tau) == qybe(tau o R). Holds for every R; a false
/// value would indicate a defect in the lifts.
inline bool braid_qybe_equiv(const LinOp2& r)
{
    const LinOp2 t = twist(r.n);
    const bool b = braid_check(r);
    return b == qybe_check(compose(r, t)) && b == qybe_check(compose(t, r));
}

/// [R,S,T] = R12 S13 T23 - T23 S13 R12.
inline LinOp3 yb_commutator(const LinOp2& r, const LinOp2& s, const LinOp2& t)
{
    if (r.n != s.n || s.n != t.n) throw ShapeError("yb_commutator: base dimensions differ");
    const Mat r12 = lift(r, Slot::s12).mat;
    const Mat s13 = lift(s, Slot::s13).mat;
    const Mat t23 = lift(t, Slot::s23).mat;
    return LinOp3(r.n, mat_mul(r12, mat_mul(s13, t23)) - mat_mul(t23, mat_mul(s13, r12)));
}

struct WxzReport {
    bool www = false, zzz = false, wxx = false, xxz = false;
    bool all() const { return www && zzz && wxx && xxz; }
};

/// V = V' only: all three operators act on the same V (x) V.
inline WxzReport wxz_check(const LinOp2& w, const LinOp2& x, const LinOp2& z)
{
    if (w.n != x.n || x.n != z.n) throw ShapeError("wxz_check: base dimensions differ");
    WxzReport r;
    r.www = yb_commutator(w, w, w).is_zero();
    r.zzz = yb_commutator(z, z, z).is_zero();
    r.wxx = yb_commutator(w, x, x).is_zero();
    r.xxz = yb_commutator(x, x, z).is_zero();
    return r;
}

/// (R12 R23 R12 - R23 R12 R23) v = 0 for every spanning vector v of V^{(x)3}.
inline bool restricted_braid_check(const LinOp2& r, std::span<const VecQ> spanning)
{
    const std::size_t dim3 = r.n * r.n * r.n;
    for (const auto& v : spanning)
        if (v.dim() != dim3) throw ShapeError("restricted_braid_check: spanning vector has wrong dimension");
    const auto [lhs, rhs] = braid_sides(r);
    const Mat defect = lhs - rhs;
    for (const auto& v : spanning)
        if (!mat_vec(defect, v).is_zero()) return false;
    return true;
}

} // namespace ybforge

#endif // YBFORGE_OPERATOR_HPP
