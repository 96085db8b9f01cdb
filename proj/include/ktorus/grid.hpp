#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <functional>
#include <ostream>
#include <vector>

#include "ktorus/errors.hpp"
#include "ktorus/rieffel.hpp"

namespace ktorus {

/// Uniform periodic grid on the 1-, 2- or 3-torus; node j of axis d sits at
/// j / sizes[d] turns, index N wraps to 0.
struct TorusGrid {
    std::vector<int> sizes;

    explicit TorusGrid(std::vector<int> dims);

    int dims() const { return static_cast<int>(sizes.size()); }
    std::size_t node_count() const;
    double coord(int axis, int index) const {
        return static_cast<double>(index) / sizes[static_cast<std::size_t>(axis)];
    }
    int wrap(int axis, int index) const {
        int n = sizes[static_cast<std::size_t>(axis)];
        index %= n;
        return index < 0 ? index + n : index;
    }
    /// Row-major flattening (last axis fastest).
    std::size_t flat(std::span<const int> idx) const;
    std::vector<int> unflat(std::size_t flat_index) const;
    std::vector<double> point(std::span<const int> idx) const;

    friend bool operator==(const TorusGrid&, const TorusGrid&) = default;
};

template <class T>
struct SampledField {
    TorusGrid grid;
    std::vector<T> values;

    SampledField(TorusGrid g, std::vector<T> v) : grid(std::move(g)), values(std::move(v)) {
        if (values.size() != grid.node_count())
            throw InputError("SampledField: value count does not match grid");
    }
    explicit SampledField(TorusGrid g) : grid(std::move(g)), values(grid.node_count()) {}

    const T& at(std::span<const int> idx) const { return values[grid.flat(idx)]; }
    T& at(std::span<const int> idx) { return values[grid.flat(idx)]; }
};

using ScalarField = SampledField<std::complex<double>>;
using MatrixField = SampledField<Eigen::Matrix2cd>;

ScalarField sample_scalar(const TorusGrid& grid, const AlgebraElement& e);
MatrixField sample_matrix(const TorusGrid& grid, const Matrix2Alg& m);
ScalarField sample_scalar_fn(const TorusGrid& grid,
                             const std::function<std::complex<double>(std::span<const double>)>& f);
MatrixField sample_matrix_fn(const TorusGrid& grid,
                             const std::function<Eigen::Matrix2cd(std::span<const double>)>& f);

/// CSV dump, one row per node: coordinates in turns, then re/im of each entry
/// in row-major entry order.  Header names the columns.
void write_csv(std::ostream& os, const ScalarField& f);
void write_csv(std::ostream& os, const MatrixField& f);

}  // namespace ktorus
