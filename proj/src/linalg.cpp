#include "gromzeta/linalg.hpp"

#include <algorithm>
#include <utility>

#include "gromzeta/errors.hpp"

namespace gromzeta {

namespace {

// Clears denominators row by row; returns the integer matrix and the product
// of the row scale factors, so det(input) = det(integer matrix) / scale.
std::pair<std::vector<std::vector<Int>>, Int> integer_rows(const Matrix& m) {
    std::vector<std::vector<Int>> a(static_cast<std::size_t>(m.rows()),
                                    std::vector<Int>(static_cast<std::size_t>(m.cols())));
    Int scale(1);
    for (int i = 0; i < m.rows(); ++i) {
        Int l(1);
        for (int j = 0; j < m.cols(); ++j) l = lcm(l, m.at(i, j).get_den());
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& e = m.at(i, j);
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                e.get_num() * (l / e.get_den());
        }
        scale *= l;
    }
    return {std::move(a), scale};
}

Int bareiss_det(std::vector<std::vector<Int>> a) {
    const std::size_t n = a.size();
    int sign = 1;
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return Int(0);
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

Rat det_exact(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    if (m.is_empty()) return Rat(1);
    auto [a, scale] = integer_rows(m);
    return make_rat(bareiss_det(std::move(a)), scale);
}

Polynomial charpoly_rev(const Matrix& m) {
    if (!m.is_square()) throw DimensionError("characteristic polynomial of a non-square matrix");
    const int n = m.rows();
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n) + 1);
    coeffs.emplace_back(1);
    Matrix acc = m;
    for (int k = 1; k <= n; ++k) {
        Rat c = acc.trace() / k;
        coeffs.push_back(-c);
        if (k < n) acc = m * (acc - Matrix::identity(n).scaled(c));
    }
    return Polynomial(std::move(coeffs));
}

Rat power_trace(const Matrix& m, unsigned long n) {
    if (!m.is_square()) throw DimensionError("power trace of a non-square matrix");
    if (n == 0) return Rat(m.rows());
    return m.pow(n).trace();
}

namespace {

struct SmithWork {
    std::vector<std::vector<Int>> a, u, v;
    int rows, cols;

    void swap_rows(int i, int j) {
        std::swap(a[static_cast<std::size_t>(i)], a[static_cast<std::size_t>(j)]);
        std::swap(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]);
    }
    void swap_cols(int i, int j) {
        for (auto& row : a) std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
        for (auto& row : v) std::swap(row[static_cast<std::size_t>(i)], row[static_cast<std::size_t>(j)]);
    }
    // row i += q * row j
    void add_row(int i, int j, const Int& q) {
        for (int k = 0; k < cols; ++k)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                q * a[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
        for (int k = 0; k < rows; ++k)
            u[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +=
                q * u[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
    }
    // col i += q * col j
    void add_col(int i, int j, const Int& q) {
        for (auto& row : a)
            row[static_cast<std::size_t>(i)] += q * row[static_cast<std::size_t>(j)];
        for (auto& row : v)
            row[static_cast<std::size_t>(i)] += q * row[static_cast<std::size_t>(j)];
    }
    void negate_row(int i) {
        for (auto& e : a[static_cast<std::size_t>(i)]) e = -e;
        for (auto& e : u[static_cast<std::size_t>(i)]) e = -e;
    }
};

Matrix to_matrix(const std::vector<std::vector<Int>>& a) {
    const int r = static_cast<int>(a.size());
    const int c = r == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<Rat> e;
    e.reserve(static_cast<std::size_t>(r) * c);
    for (const auto& row : a)
        for (const Int& x : row) e.emplace_back(x);
    return Matrix(r, c, std::move(e));
}

}  // namespace

SmithDecomposition smith_normal_form(const Matrix& m) {
    if (!m.is_integral()) throw DomainError("Smith normal form requires an integer matrix");
    const int r = m.rows(), c = m.cols();

    SmithWork w;
    w.rows = r;
    w.cols = c;
    w.a.assign(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(c), Int(0)));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j)
            w.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j).get_num();
    w.u.assign(static_cast<std::size_t>(r), std::vector<Int>(static_cast<std::size_t>(r), Int(0)));
    for (int i = 0; i < r; ++i) w.u[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    w.v.assign(static_cast<std::size_t>(c), std::vector<Int>(static_cast<std::size_t>(c), Int(0)));
    for (int i = 0; i < c; ++i) w.v[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;

    const int d = std::min(r, c);
    for (int t = 0; t < d; ++t) {
        for (;;) {
            // Move a nonzero entry of least magnitude in the trailing block
            // to the pivot slot.
            int pi = -1, pj = -1;
            for (int i = t; i < r; ++i)
                for (int j = t; j < c; ++j) {
                    const Int& e = w.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    if (e == 0) continue;
                    if (pi < 0 ||
                        mpz_cmpabs(e.get_mpz_t(), w.a[static_cast<std::size_t>(pi)]
                                                      [static_cast<std::size_t>(pj)]
                                                          .get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) {
                t = d;  // trailing block is zero, done
                break;
            }
            if (pi != t) w.swap_rows(t, pi);
            if (pj != t) w.swap_cols(t, pj);

            const Int pivot = w.a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
            bool clean = true;
            for (int i = t + 1; i < r; ++i) {
                const Int& e = w.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
                if (e == 0) continue;
                w.add_row(i, t, -Int(e / pivot));
                if (w.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0)
                    clean = false;
            }
            for (int j = t + 1; j < c; ++j) {
                const Int& e = w.a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
                if (e == 0) continue;
                w.add_col(j, t, -Int(e / pivot));
                if (w.a[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0)
                    clean = false;
            }
            if (!clean) continue;  // remainders shrink the least magnitude

            // Pull any entry the pivot misses into its row, forcing the
            // divisibility chain.
            bool divides = true;
            for (int i = t + 1; i < r && divides; ++i)
                for (int j = t + 1; j < c; ++j)
                    if (w.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % pivot !=
                        0) {
                        w.add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (t == d) break;
    }

    for (int t = 0; t < d; ++t)
        if (w.a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] < 0) w.negate_row(t);

    SmithDecomposition out;
    out.diagonal.reserve(static_cast<std::size_t>(d));
    for (int t = 0; t < d; ++t)
        out.diagonal.push_back(w.a[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)]);
    out.u = to_matrix(w.u);
    out.v = to_matrix(w.v);
    return out;
}

CokernelDecomposition cokernel_decomposition(const Matrix& m) {
    SmithDecomposition s = smith_normal_form(m);
    CokernelDecomposition out;
    long nonzero = 0;
    for (const Int& e : s.diagonal) {
        if (e == 0) continue;
        ++nonzero;
        if (e > 1) out.torsion.push_back(e);
    }
    out.free_rank = m.rows() - nonzero;
    return out;
}

Matrix symplectic_form(int dim, JConvention convention) {
    if (dim < 2 || dim % 2 != 0)
        throw DimensionError("symplectic form needs even dimension >= 2");
    std::vector<Rat> e(static_cast<std::size_t>(dim) * dim, Rat(0));
    const int n = dim / 2;
    if (convention == JConvention::Interleaved) {
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(2 * i) * dim + (2 * i + 1)] = -1;
            e[static_cast<std::size_t>(2 * i + 1) * dim + 2 * i] = 1;
        }
    } else {
        for (int i = 0; i < n; ++i) {
            e[static_cast<std::size_t>(i) * dim + (n + i)] = -1;
            e[static_cast<std::size_t>(n + i) * dim + i] = 1;
        }
    }
    return Matrix(dim, dim, std::move(e));
}

bool symplectic_check(const Matrix& m, JConvention convention) {
    if (!m.is_square()) throw DimensionError("symplectic check of a non-square matrix");
    if (m.rows() < 2 || m.rows() % 2 != 0)
        throw DimensionError("symplectic check needs even dimension >= 2");
    Matrix j = symplectic_form(m.rows(), convention);
    return m.transpose() * j * m == j;
}

Matrix symplectic_transvection(const std::vector<Int>& v, JConvention convention) {
    const int dim = static_cast<int>(v.size());
    Matrix j = symplectic_form(dim, convention);
    std::vector<Rat> col(v.begin(), v.end());
    Matrix cv(dim, 1, std::move(col));
    return Matrix::identity(dim) - cv * cv.transpose() * j;
}

}  // namespace gromzeta
