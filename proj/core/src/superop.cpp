#include "slgen/superop.hpp"

#include <cstring>
#include <istream>
#include <ostream>

#include <Eigen/Eigenvalues>

namespace slgen {

namespace {

const Complex kI{0.0, 1.0};

SpMat sparse_identity(long d) {
    SpMat m(d, d);
    m.setIdentity();
    return m;
}

// permuted-conjugate T conj(M) T with T the vec-transpose involution;
// hermiticity preservation of the map is exactly M == T conj(M) T
SpMat transpose_conjugate_permuted(const SpMat& m, long d) {
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(m.nonZeros()));
    for (int k = 0; k < m.outerSize(); ++k) {
        for (SpMat::InnerIterator it(m, k); it; ++it) {
            const long row = it.row(), col = it.col();
            const long r = row % d, c = row / d;
            const long rp = col % d, cp = col / d;
            trip.emplace_back(r * d + c, rp * d + cp, std::conj(it.value()));
        }
    }
    SpMat out(d * d, d * d);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

// hermitian, traceless, Hilbert-Schmidt-orthonormal basis; index 0 is I/sqrt(d)
std::vector<Eigen::MatrixXcd> gellmann_basis(long d) {
    std::vector<Eigen::MatrixXcd> basis;
    basis.reserve(static_cast<size_t>(d * d));
    basis.push_back(Eigen::MatrixXcd::Identity(d, d) / std::sqrt(double(d)));
    const double s = 1.0 / std::sqrt(2.0);
    for (long j = 0; j < d; ++j) {
        for (long k = j + 1; k < d; ++k) {
            Eigen::MatrixXcd re = Eigen::MatrixXcd::Zero(d, d);
            re(j, k) = s;
            re(k, j) = s;
            basis.push_back(re);
            Eigen::MatrixXcd im = Eigen::MatrixXcd::Zero(d, d);
            im(j, k) = -kI * s;
            im(k, j) = kI * s;
            basis.push_back(im);
        }
    }
    for (long l = 1; l < d; ++l) {
        Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(d, d);
        const double f = 1.0 / std::sqrt(double(l) * double(l + 1));
        for (long j = 0; j < l; ++j) diag(j, j) = f;
        diag(l, l) = -double(l) * f;
        basis.push_back(diag);
    }
    return basis;
}

void write_le_f64(std::ostream& os, double v) {
    static_assert(sizeof(double) == 8);
    unsigned char buf[8];
    std::memcpy(buf, &v, 8);
    // host is little-endian on every supported target; enforce at runtime
    os.write(reinterpret_cast<const char*>(buf), 8);
}

double read_le_f64(std::istream& is) {
    unsigned char buf[8];
    is.read(reinterpret_cast<char*>(buf), 8);
    double v;
    std::memcpy(&v, buf, 8);
    return v;
}

bool host_is_little_endian() {
    const unsigned int x = 1;
    unsigned char b;
    std::memcpy(&b, &x, 1);
    return b == 1;
}

} // namespace

Eigen::VectorXcd vectorize(const SpMat& x) {
    const long d = x.rows();
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d * d);
    for (int k = 0; k < x.outerSize(); ++k)
        for (SpMat::InnerIterator it(x, k); it; ++it)
            v(it.col() * d + it.row()) = it.value();
    return v;
}

Eigen::VectorXcd vectorize(const Eigen::MatrixXcd& x) {
    const long d = x.rows();
    Eigen::VectorXcd v(d * d);
    for (long c = 0; c < d; ++c)
        for (long r = 0; r < d; ++r) v(c * d + r) = x(r, c);
    return v;
}

Eigen::MatrixXcd unvectorize(const Eigen::VectorXcd& v, long d) {
    Eigen::MatrixXcd x(d, d);
    for (long c = 0; c < d; ++c)
        for (long r = 0; r < d; ++r) x(r, c) = v(c * d + r);
    return x;
}

SpMat kron(const SpMat& a, const SpMat& b) {
    SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(a.nonZeros()) * static_cast<size_t>(b.nonZeros()));
    for (int ka = 0; ka < a.outerSize(); ++ka) {
        for (SpMat::InnerIterator ia(a, ka); ia; ++ia) {
            for (int kb = 0; kb < b.outerSize(); ++kb) {
                for (SpMat::InnerIterator ib(b, kb); ib; ++ib) {
                    trip.emplace_back(ia.row() * b.rows() + ib.row(),
                                      ia.col() * b.cols() + ib.col(),
                                      ia.value() * ib.value());
                }
            }
        }
    }
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

SpMat left_mult(const SpMat& a) { return kron(sparse_identity(a.rows()), a); }

SpMat right_mult(const SpMat& b) { return kron(SpMat(b.transpose()), sparse_identity(b.rows())); }

SpMat commutator_super(const SpMat& h) { return SpMat(left_mult(h) - right_mult(h)); }

SpMat sl_dissipator(Complex gamma, const SpMat& l) {
    const SpMat ld = l.adjoint();
    const SpMat ldl = SpMat(ld * l);
    const SpMat sandwich = kron(SpMat(l.transpose()), ld); // X -> L^dag X L
    SpMat out = (gamma + std::conj(gamma)) * sandwich;
    out -= gamma * right_mult(ldl);
    out -= std::conj(gamma) * left_mult(ldl);
    return out;
}

SparseOp apply(const Superoperator& sop, const SparseOp& x) {
    if (sop.picture != Picture::Heisenberg)
        throw PictureMismatchError("apply: superoperator must be in the Heisenberg picture");
    if (!sop.space->same_as(*x.space()))
        throw SpaceMismatchError("apply: operand lives on a different space");
    const long d = sop.dim();
    Eigen::VectorXcd v = sop.matrix * vectorize(x.matrix());
    return SparseOp(x.space(), unvectorize(v, d).sparseView());
}

Superoperator to_schrodinger(const Superoperator& sop) {
    if (sop.picture == Picture::Schrodinger) return sop;
    const long d = sop.dim();
    std::vector<Triplet> trip;
    trip.reserve(static_cast<size_t>(sop.matrix.nonZeros()));
    for (int k = 0; k < sop.matrix.outerSize(); ++k) {
        for (SpMat::InnerIterator it(sop.matrix, k); it; ++it) {
            // M[(a,b),(e,f)] contributes to the dual at [(f,e),(b,a)]
            const long a = it.row() % d, b = it.row() / d;
            const long e = it.col() % d, f = it.col() / d;
            trip.emplace_back(e * d + f, a * d + b, it.value());
        }
    }
    SpMat dual(d * d, d * d);
    dual.setFromTriplets(trip.begin(), trip.end());
    Superoperator out;
    out.space = sop.space;
    out.picture = Picture::Schrodinger;
    out.matrix = std::move(dual);
    out.provenance = sop.provenance + " (dual)";
    return out;
}

double hermiticity_preservation_defect(const Superoperator& sop) {
    const long d = sop.dim();
    const SpMat diff = SpMat(transpose_conjugate_permuted(sop.matrix, d) - sop.matrix);
    const double n = sop.matrix.norm();
    return diff.norm() / std::max(1e-300, n);
}

double identity_kernel_defect(const Superoperator& sop) {
    const long d = sop.dim();
    Eigen::VectorXcd id = Eigen::VectorXcd::Zero(d * d);
    for (long r = 0; r < d; ++r) id(r * d + r) = 1.0;
    const double n = sop.matrix.norm();
    return (sop.matrix * id).norm() / std::max(1e-300, n);
}

KossakowskiReport kossakowski_check(const Superoperator& sop) {
    if (sop.picture != Picture::Heisenberg)
        throw PictureMismatchError("kossakowski_check expects a Heisenberg generator");
    const long d = sop.dim();
    if (d > 32)
        throw ValidationError("kossakowski_check: dimension " + std::to_string(d) +
                              " too large for a dense decomposition (max 32)");

    KossakowskiReport report;
    report.hermiticity_defect = hermiticity_preservation_defect(sop);
    if (report.hermiticity_defect > 1e-9)
        throw DecompositionFailure("kossakowski_check: generator does not preserve "
                                   "hermiticity (defect " +
                                   std::to_string(report.hermiticity_defect) + ")");

    const Eigen::MatrixXcd ms = to_schrodinger(sop).dense();

    // reshuffle: R[r'*d + r, c'*d + c] = MS[c*d + r, c'*d + r']
    Eigen::MatrixXcd R(d * d, d * d);
    for (long col = 0; col < d * d; ++col) {
        const long rp = col % d, cp = col / d;
        for (long row = 0; row < d * d; ++row) {
            const long r = row % d, c = row / d;
            R(rp * d + r, cp * d + c) = ms(c * d + r, cp * d + rp);
        }
    }

    const std::vector<Eigen::MatrixXcd> basis = gellmann_basis(d);
    const long nb = static_cast<long>(basis.size());
    Eigen::MatrixXcd U(d * d, nb);
    for (long a = 0; a < nb; ++a) U.col(a) = vectorize(basis[static_cast<size_t>(a)]);

    const Eigen::MatrixXcd q = U.adjoint() * R * U;
    Eigen::MatrixXcd A = q.block(1, 1, nb - 1, nb - 1);
    A = 0.5 * (A + A.adjoint()).eval();

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(A, Eigen::EigenvaluesOnly);
    report.eigenvalues = es.eigenvalues();
    report.min_eigenvalue = report.eigenvalues.size() ? report.eigenvalues.minCoeff() : 0.0;
    return report;
}

void write_superoperator(std::ostream& os, const Superoperator& sop) {
    if (!host_is_little_endian())
        throw ValidationError("superoperator export requires a little-endian host");
    const long d = sop.dim();
    os.write("SLGENSO1", 8);
    const std::uint32_t d32 = static_cast<std::uint32_t>(d);
    os.write(reinterpret_cast<const char*>(&d32), 4);
    const std::uint8_t tag = sop.picture == Picture::Heisenberg ? 0 : 1;
    os.write(reinterpret_cast<const char*>(&tag), 1);
    Eigen::VectorXcd col(d * d);
    for (long c = 0; c < d * d; ++c) {
        col = sop.matrix.col(c);
        for (long r = 0; r < d * d; ++r) {
            write_le_f64(os, col(r).real());
            write_le_f64(os, col(r).imag());
        }
    }
}

Superoperator read_superoperator(std::istream& is, SpacePtr space) {
    if (!host_is_little_endian())
        throw ValidationError("superoperator import requires a little-endian host");
    char magic[8];
    is.read(magic, 8);
    if (!is || std::memcmp(magic, "SLGENSO1", 8) != 0)
        throw ValidationError("superoperator file: bad magic");
    std::uint32_t d32 = 0;
    is.read(reinterpret_cast<char*>(&d32), 4);
    std::uint8_t tag = 0;
    is.read(reinterpret_cast<char*>(&tag), 1);
    const long d = static_cast<long>(d32);
    if (space->dim() != d)
        throw SpaceMismatchError("superoperator file dimension " + std::to_string(d) +
                                 " does not match space dimension " +
                                 std::to_string(space->dim()));
    Eigen::MatrixXcd m(d * d, d * d);
    for (long c = 0; c < d * d; ++c)
        for (long r = 0; r < d * d; ++r) {
            const double re = read_le_f64(is);
            const double im = read_le_f64(is);
            m(r, c) = Complex(re, im);
        }
    if (!is) throw ValidationError("superoperator file: truncated payload");
    Superoperator out;
    out.space = std::move(space);
    out.picture = tag == 0 ? Picture::Heisenberg : Picture::Schrodinger;
    out.matrix = m.sparseView();
    out.provenance = "imported";
    return out;
}

} // namespace slgen
