#include "vkcgs/linalg.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>

namespace vkcgs {

namespace {

void requireSquare(const IntMatrix& m) {
    if (m.empty()) {
        throw InvalidDimension("determinant of an empty matrix");
    }
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw DimensionMismatch("matrix is not square");
        }
    }
}

/// Scales every row by the least common multiple of its denominators.
/// Row scaling by positive factors leaves kernels and sign structure intact.
IntMatrix clearDenominators(const RatMatrix& m, std::vector<BigInt>* scales = nullptr) {
    IntMatrix out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        BigInt scale = 1;
        for (const auto& entry : m[i]) {
            scale = lcm(scale, denominator(entry));
        }
        out[i].reserve(m[i].size());
        for (const auto& entry : m[i]) {
            out[i].push_back(numerator(entry) * (scale / denominator(entry)));
        }
        if (scales != nullptr) {
            scales->push_back(scale);
        }
    }
    return out;
}

/// Kernel of a full-row-rank m x (m+1) integer matrix via signed maximal
/// minors: lambda_j = (-1)^j det(M with column j removed). If the rank is
/// deficient all minors vanish.
std::vector<BigInt> signedMinorKernel(const IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows + 1;
    std::vector<BigInt> lambda;
    lambda.reserve(cols);
    IntMatrix minor(rows, std::vector<BigInt>(rows));
    for (std::size_t skip = 0; skip < cols; ++skip) {
        for (std::size_t i = 0; i < rows; ++i) {
            std::size_t c = 0;
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == skip) continue;
                minor[i][c++] = m[i][j];
            }
        }
        BigInt det = intDeterminant(minor);
        if (skip % 2 == 1) {
            det = -det;
        }
        lambda.push_back(std::move(det));
    }
    return lambda;
}

/// Interprets a kernel vector as a canonical SignVector, raising the
/// degeneracy errors the callers rely on.
SignVector signsFromKernel(const std::vector<BigInt>& lambda, const char* what) {
    const bool allZero = std::all_of(lambda.begin(), lambda.end(),
                                     [](const BigInt& v) { return v == 0; });
    if (allZero) {
        std::vector<int> all(lambda.size());
        std::iota(all.begin(), all.end(), 0);
        throw DegenerateConfiguration(
            std::string(what) + ": dependence space dimension is not 1", all);
    }
    for (std::size_t j = 0; j < lambda.size(); ++j) {
        if (lambda[j] == 0) {
            // The remaining entries form a dependent proper subset.
            std::vector<int> others;
            for (std::size_t i = 0; i < lambda.size(); ++i) {
                if (i != j) others.push_back(static_cast<int>(i));
            }
            throw DegenerateConfiguration(
                std::string(what) + ": vanishing dependence coefficient", others);
        }
    }
    SignVector sv;
    sv.signs.reserve(lambda.size());
    for (const auto& v : lambda) {
        sv.signs.push_back(v > 0 ? 1 : -1);
    }
    if (sv.signs.front() < 0) {
        for (int& s : sv.signs) s = -s;
    }
    return sv;
}

int checkedDimension(const std::vector<Point>& pts, const char* what) {
    if (pts.empty()) {
        throw DimensionMismatch(std::string(what) + ": no points");
    }
    const std::size_t dim = pts.front().size();
    if (dim == 0) {
        throw DimensionMismatch(std::string(what) + ": zero-dimensional points");
    }
    for (const auto& p : pts) {
        if (p.size() != dim) {
            throw DimensionMismatch(std::string(what) + ": ragged coordinate lists");
        }
    }
    return static_cast<int>(dim);
}

}  // namespace

BigInt intDeterminant(IntMatrix a) {
    requireSquare(a);
    const std::size_t n = a.size();
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) {
                return 0;
            }
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

Rational determinant(const RatMatrix& m) {
    if (m.empty()) {
        throw InvalidDimension("determinant of an empty matrix");
    }
    for (const auto& row : m) {
        if (row.size() != m.size()) {
            throw DimensionMismatch("matrix is not square");
        }
    }
    std::vector<BigInt> scales;
    const IntMatrix scaled = clearDenominators(m, &scales);
    Rational det(intDeterminant(scaled));
    for (const auto& s : scales) {
        det /= Rational(s);
    }
    return det;
}

int rank(RatMatrix a) {
    if (a.empty()) {
        return 0;
    }
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] != 0) {
                const Rational f = a[i][c] / a[r][c];
                for (std::size_t j = c; j < cols; ++j) {
                    a[i][j] -= f * a[r][j];
                }
            }
        }
        ++r;
    }
    return static_cast<int>(r);
}

SignVector affineDependence(const std::vector<Point>& points) {
    const int k = checkedDimension(points, "affineDependence");
    if (points.size() != static_cast<std::size_t>(k) + 2) {
        throw DimensionMismatch("affineDependence needs exactly k+2 points in R^k");
    }
    // Homogeneous system: column j is (1, p_j); rows scaled to integers.
    RatMatrix m(static_cast<std::size_t>(k) + 1,
                std::vector<Rational>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        m[0][j] = 1;
        for (int c = 0; c < k; ++c) {
            m[static_cast<std::size_t>(c) + 1][j] = points[j][static_cast<std::size_t>(c)];
        }
    }
    return signsFromKernel(signedMinorKernel(clearDenominators(m)), "affineDependence");
}

SignVector linearDependence(const std::vector<Point>& vectors) {
    const int k = checkedDimension(vectors, "linearDependence");
    if (vectors.size() != static_cast<std::size_t>(k) + 1) {
        throw DimensionMismatch("linearDependence needs exactly k+1 vectors in R^k");
    }
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (std::all_of(vectors[j].begin(), vectors[j].end(),
                        [](const Rational& v) { return v == 0; })) {
            throw DegenerateConfiguration("linearDependence: zero vector",
                                          {static_cast<int>(j)});
        }
    }
    RatMatrix m(static_cast<std::size_t>(k), std::vector<Rational>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        for (int c = 0; c < k; ++c) {
            m[static_cast<std::size_t>(c)][j] = vectors[j][static_cast<std::size_t>(c)];
        }
    }
    return signsFromKernel(signedMinorKernel(clearDenominators(m)), "linearDependence");
}

bool affinelyIndependent(const std::vector<Point>& points, int dim) {
    if (points.empty()) {
        return true;
    }
    if (points.size() > static_cast<std::size_t>(dim) + 1) {
        return false;
    }
    RatMatrix m(static_cast<std::size_t>(dim) + 1, std::vector<Rational>(points.size()));
    for (std::size_t j = 0; j < points.size(); ++j) {
        m[0][j] = 1;
        for (int c = 0; c < dim; ++c) {
            m[static_cast<std::size_t>(c) + 1][j] = points[j][static_cast<std::size_t>(c)];
        }
    }
    return rank(std::move(m)) == static_cast<int>(points.size());
}

bool linearlyIndependent(const std::vector<Point>& vectors, int dim) {
    if (vectors.empty()) {
        return true;
    }
    if (vectors.size() > static_cast<std::size_t>(dim)) {
        return false;
    }
    RatMatrix m(static_cast<std::size_t>(dim), std::vector<Rational>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        for (int c = 0; c < dim; ++c) {
            m[static_cast<std::size_t>(c)][j] = vectors[j][static_cast<std::size_t>(c)];
        }
    }
    return rank(std::move(m)) == static_cast<int>(vectors.size());
}

}  // namespace vkcgs
