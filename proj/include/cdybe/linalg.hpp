#pragma once

#include <optional>
#include <vector>

#include "cdybe/rat.hpp"

namespace cdybe {

using Vec = std::vector<Rat>;
using Mat = std::vector<Vec>;  // row-major

Mat mat_identity(int n);
Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_transpose(const Mat& a);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
bool mat_is_zero(const Mat& a);

Rat dot(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const Rat& c);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);

// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(Mat& m);

int rank(Mat m);

std::optional<Mat> mat_inverse(const Mat& a);

// Basis of the right nullspace of a (deterministic echelon construction).
std::vector<Vec> nullspace(const Mat& a);

struct LinearSolution {
    bool consistent = false;
    Vec particular;               // minimum-support echelon solution
    std::vector<Vec> kernel;      // basis of the homogeneous solutions
};

// All solutions of a x = b.
LinearSolution solve_linear(const Mat& a, const Vec& b);

// Hermite-style basis of the lattice spanned by integer rows (full row
// reduction; returned rows are linearly independent).
std::vector<std::vector<long>> lattice_basis(std::vector<std::vector<long>> rows);

}  // namespace cdybe
