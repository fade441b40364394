#include "reflgroups/orthon.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>

namespace reflgroups {

Hyperplane::Hyperplane(const VecN& normal) : normal_(canonical_unit(normal)) {
    if (normal_.size() < 1) {
        throw Error(ErrorKind::DimensionMismatch, "hyperplane normal must be nonempty");
    }
}

void WordN::validate() const {
    if (dimension < 2) {
        throw Error(ErrorKind::DimensionMismatch, "dimension must be at least 2");
    }
    for (const auto& h : mirrors) {
        if (h.dimension() != dimension) {
            throw Error(ErrorKind::DimensionMismatch, "mirror normal has length " + std::to_string(h.dimension()) +
                                                          ", expected " + std::to_string(dimension));
        }
    }
}

MatN SpectralSplit::matrix() const {
    MatN m = MatN::Identity(dimension, dimension);
    for (const auto& block : blocks) {
        if (const auto* neg = std::get_if<blocks::NegatedLine>(&block)) {
            m -= 2.0 * neg->direction * neg->direction.transpose();
        } else if (const auto* rot = std::get_if<blocks::RotationPlane>(&block)) {
            const double c = std::cos(rot->angle) - 1.0;
            const double s = std::sin(rot->angle);
            const VecN& f = rot->first;
            const VecN& g = rot->second;
            m += c * (f * f.transpose() + g * g.transpose()) + s * (g * f.transpose() - f * g.transpose());
        }
    }
    return m;
}

MatN householder(const Hyperplane& h) {
    const VecN& v = h.normal();
    return MatN::Identity(v.size(), v.size()) - 2.0 * v * v.transpose();
}

MatN word_matrix_n(const WordN& w) {
    MatN result = MatN::Identity(w.dimension, w.dimension);
    for (const auto& h : w.mirrors) {
        // (I - 2 v v^T) R without forming the Householder.
        const VecN& v = h.normal();
        result -= 2.0 * v * (v.transpose() * result);
    }
    return result;
}

namespace {

bool parallel_normals(const VecN& a, const VecN& b, const Tolerance& tol) {
    return (a - a.dot(b) * b).norm() <= tol.eps_coincide;
}

// Orthonormal basis (e1, e2) of span(a, b) with e1 = a.
std::pair<VecN, VecN> plane_basis(const VecN& a, const VecN& b) {
    return {a, (b - b.dot(a) * a).normalized()};
}

double plane_angle(const VecN& x, const VecN& e1, const VecN& e2) { return std::atan2(x.dot(e2), x.dot(e1)); }

double plane_gap(const VecN& x, const VecN& y, const VecN& e1, const VecN& e2) {
    return wrap_half_angle(plane_angle(y, e1, e2) - plane_angle(x, e1, e2));
}

bool in_plane(const VecN& x, const VecN& e1, const VecN& e2, const Tolerance& tol) {
    return (x - x.dot(e1) * e1 - x.dot(e2) * e2).norm() <= tol.eps_coincide;
}

// y with [p, q] == [x, y]; x must lie in the plane of p and q.
VecN pair_starting_with(const VecN& p, const VecN& q, const VecN& x) {
    const auto [e1, e2] = plane_basis(p, q);
    return rotate_in_plane(x, e1, e2, plane_angle(q, e1, e2));
}

void strip_involutions(Rewriter<Hyperplane>& rw, std::size_t limit, const Tolerance& tol) {
    std::size_t i = 0;
    while (i + 1 < std::min(limit, rw.size())) {
        if (same_hyperplane(rw[i], rw[i + 1], tol)) {
            rw.cancel(i);
            i = i > 0 ? i - 1 : 0;
        } else {
            ++i;
        }
    }
}

// Length of the shortest prefix whose last normal lies in the span of the others.
std::size_t dependent_prefix(const Rewriter<Hyperplane>& rw, std::size_t count, const Tolerance& tol) {
    const Eigen::Index n = rw[0].normal().size();
    MatN basis(n, 0);
    for (std::size_t j = 0; j < count; ++j) {
        if (basis.cols() == n) {
            return j + 1;
        }
        const VecN& a = rw[j].normal();
        const VecN r = a - basis * (basis.transpose() * a);
        if (r.norm() <= 1e-3 * tol.eps_coincide) {
            return j + 1;
        }
        basis.conservativeResize(Eigen::NoChange, basis.cols() + 1);
        basis.col(basis.cols() - 1) = r.normalized();
    }
    return count;
}

// Prefix [0, k): the first k-1 normals are independent and the last lies in
// their span W. Each round rotates the trailing pair within its plane so that
// its first mirror drops into the span of the mirrors before it, shrinking the
// dependent prefix by one, until two adjacent mirrors coincide.
void steer_and_cancel(Rewriter<Hyperplane>& rw, std::size_t k, const Tolerance& tol) {
    for (; k > 2; --k) {
        const VecN p = rw[k - 2].normal();
        const VecN q = rw[k - 1].normal();
        if (parallel_normals(p, q, tol)) {
            rw.cancel(k - 2);
            return;
        }
        VecN x;
        if (k == 3) {
            x = rw[0].normal();
        } else {
            MatN prefix(p.size(), static_cast<Eigen::Index>(k - 2));
            for (std::size_t j = 0; j + 2 < k; ++j) {
                prefix.col(static_cast<Eigen::Index>(j)) = rw[j].normal();
            }
            const Eigen::HouseholderQR<MatN> qr(prefix);
            const MatN q_basis = qr.householderQ() * MatN::Identity(p.size(), prefix.cols());
            const VecN rp = p - q_basis * (q_basis.transpose() * p);
            const VecN rq = q - q_basis * (q_basis.transpose() * q);
            // p and q project onto the one-dimensional complement of U inside W.
            const VecN e = rp.norm() >= rq.norm() ? rp : rq;
            if (e.norm() <= 1e-3 * tol.eps_coincide) {
                continue;  // p already lies in U
            }
            const VecN dir = e.normalized();
            x = dir.dot(rq) * p - dir.dot(rp) * q;
            x.normalize();
        }
        const Hyperplane first(x);
        rw.pencil(k - 2, first, Hyperplane(pair_starting_with(p, q, first.normal())));
    }
    rw.cancel(0);
}

}  // namespace

bool same_hyperplane(const Hyperplane& a, const Hyperplane& b, const Tolerance& tol) {
    return a.normal().size() == b.normal().size() && parallel_normals(a.normal(), b.normal(), tol);
}

void require_orthogonal(const MatN& m, const Tolerance& tol) {
    if (m.rows() != m.cols() || m.rows() < 1 ||
        (m.transpose() * m - MatN::Identity(m.rows(), m.cols())).norm() > tol.eps_verify) {
        throw Error(ErrorKind::NotOrthogonal, "matrix is not orthogonal");
    }
}

SpectralSplit spectral_split(const MatN& m, const Tolerance& tol) {
    require_orthogonal(m, tol);
    const Eigen::Index n = m.rows();
    const Eigen::RealSchur<MatN> schur(m);
    const MatN& t = schur.matrixT();
    const MatN& u = schur.matrixU();

    SpectralSplit split{static_cast<int>(n), {}};
    std::vector<VecN> fixed;
    for (Eigen::Index i = 0; i < n;) {
        if (i + 1 < n && t(i + 1, i) != 0.0) {
            // 2x2 block of a normal quasi-triangular matrix is a plane rotation.
            const double angle = std::atan2((t(i + 1, i) - t(i, i + 1)) / 2, (t(i, i) + t(i + 1, i + 1)) / 2);
            if (std::abs(angle) <= tol.eps_coincide) {
                fixed.push_back(u.col(i));
                fixed.push_back(u.col(i + 1));
            } else if (angle > 0) {
                split.blocks.push_back(blocks::RotationPlane{u.col(i), u.col(i + 1), angle});
            } else {
                split.blocks.push_back(blocks::RotationPlane{u.col(i), -u.col(i + 1), -angle});
            }
            i += 2;
        } else {
            if (t(i, i) > 0) {
                fixed.push_back(u.col(i));
            } else {
                split.blocks.push_back(blocks::NegatedLine{u.col(i)});
            }
            i += 1;
        }
    }
    if (!fixed.empty()) {
        MatN basis(n, static_cast<Eigen::Index>(fixed.size()));
        for (std::size_t j = 0; j < fixed.size(); ++j) {
            basis.col(static_cast<Eigen::Index>(j)) = fixed[j];
        }
        split.blocks.insert(split.blocks.begin(), blocks::Fixed{basis});
    }
    return split;
}

WordN decompose(const MatN& m, const Tolerance& tol) {
    const SpectralSplit split = spectral_split(m, tol);
    WordN word{split.dimension, {}};
    for (const auto& block : split.blocks) {
        if (const auto* neg = std::get_if<blocks::NegatedLine>(&block)) {
            word.mirrors.emplace_back(neg->direction);
        } else if (const auto* rot = std::get_if<blocks::RotationPlane>(&block)) {
            // A plane rotation by t is two reflections whose normals are t/2 apart.
            word.mirrors.emplace_back(rot->first);
            word.mirrors.emplace_back(VecN(std::cos(rot->angle / 2) * rot->first + std::sin(rot->angle / 2) * rot->second));
        }
    }
    return word;
}

Hyperplane pencil_completion_n(const Hyperplane& l, const Hyperplane& m, const Hyperplane& l2, const Tolerance& tol) {
    if (l.dimension() != m.dimension() || l.dimension() != l2.dimension()) {
        throw Error(ErrorKind::DimensionMismatch, "hyperplanes live in different dimensions");
    }
    if (same_hyperplane(l, m, tol)) {
        return l2;
    }
    const auto [e1, e2] = plane_basis(l.normal(), m.normal());
    if (!in_plane(l2.normal(), e1, e2, tol)) {
        throw Error(ErrorKind::NotCoplanarNormals, "normals do not span a common 2-plane");
    }
    return Hyperplane(rotate_in_plane(l2.normal(), e1, e2, plane_angle(m.normal(), e1, e2)));
}

bool verify_pencil_relation_n(const Hyperplane& l, const Hyperplane& m, const Hyperplane& l2, const Hyperplane& m2,
                              const Tolerance& tol) {
    const std::array<const Hyperplane*, 4> planes{&l, &m, &l2, &m2};
    for (const Hyperplane* h : planes) {
        if (h->dimension() != l.dimension()) {
            return false;
        }
    }
    const Hyperplane* a = nullptr;
    const Hyperplane* b = nullptr;
    for (std::size_t i = 0; i < 4 && b == nullptr; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (!same_hyperplane(*planes[i], *planes[j], tol)) {
                a = planes[i];
                b = planes[j];
                break;
            }
        }
    }
    if (b == nullptr) {
        return true;
    }
    const auto [e1, e2] = plane_basis(a->normal(), b->normal());
    for (const Hyperplane* h : planes) {
        if (!in_plane(h->normal(), e1, e2, tol)) {
            return false;
        }
    }
    const double gap_lm = plane_gap(l.normal(), m.normal(), e1, e2);
    const double gap_l2m2 = plane_gap(l2.normal(), m2.normal(), e1, e2);
    const double gap_ll2 = plane_gap(l.normal(), l2.normal(), e1, e2);
    const double gap_mm2 = plane_gap(m.normal(), m2.normal(), e1, e2);
    return std::abs(wrap_half_angle(gap_lm - gap_l2m2)) <= tol.eps_coincide &&
           std::abs(wrap_half_angle(gap_ll2 - gap_mm2)) <= tol.eps_coincide;
}

WordN reduce_n_plus_one(const WordN& w, const Tolerance& tol, Trace<Hyperplane>* trace) {
    w.validate();
    const auto n = static_cast<std::size_t>(w.dimension);
    if (w.mirrors.size() != n + 1) {
        throw Error(ErrorKind::WrongLength, "expected " + std::to_string(n + 1) + " mirrors, got " +
                                                std::to_string(w.mirrors.size()));
    }
    Rewriter<Hyperplane> rw(w.mirrors, trace);
    for (std::size_t i = 0; i + 1 < rw.size(); ++i) {
        if (same_hyperplane(rw[i], rw[i + 1], tol)) {
            rw.cancel(i);
            return {w.dimension, rw.release()};
        }
    }
    steer_and_cancel(rw, dependent_prefix(rw, n + 1, tol), tol);
    return {w.dimension, rw.release()};
}

WordN normalize_n(const WordN& w, const Tolerance& tol, Trace<Hyperplane>* trace) {
    w.validate();
    const auto n = static_cast<std::size_t>(w.dimension);
    Rewriter<Hyperplane> rw(w.mirrors, trace);
    strip_involutions(rw, rw.size(), tol);
    while (rw.size() > n) {
        bool cancelled = false;
        for (std::size_t i = 0; i < n && !cancelled; ++i) {
            if (same_hyperplane(rw[i], rw[i + 1], tol)) {
                rw.cancel(i);
                cancelled = true;
            }
        }
        if (!cancelled) {
            steer_and_cancel(rw, dependent_prefix(rw, n + 1, tol), tol);
        }
        strip_involutions(rw, rw.size(), tol);
    }
    return {w.dimension, rw.release()};
}

bool is_valid_step_n(const RewriteStep<Hyperplane>& step, const Tolerance& tol) {
    switch (step.relation) {
        case Relation::Involution:
            return step.removed.size() == 2 && step.inserted.empty() &&
                   same_hyperplane(step.removed[0], step.removed[1], tol);
        case Relation::Pencil:
            return step.removed.size() == 2 && step.inserted.size() == 2 &&
                   verify_pencil_relation_n(step.removed[0], step.removed[1], step.inserted[0], step.inserted[1], tol);
        case Relation::PolarFrame:
            return false;
    }
    return false;
}

}  // namespace reflgroups
