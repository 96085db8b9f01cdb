#include "ktorus/grid.hpp"

#include <charconv>
#include <cstdio>

#include "ktorus/parallel.hpp"

namespace ktorus {

TorusGrid::TorusGrid(std::vector<int> dims) : sizes(std::move(dims)) {
    if (sizes.empty() || sizes.size() > 3) throw InputError("TorusGrid: 1 to 3 axes required");
    for (int n : sizes)
        if (n < 8) throw InputError("TorusGrid: each axis needs at least 8 nodes");
}

std::size_t TorusGrid::node_count() const {
    std::size_t total = 1;
    for (int n : sizes) total *= static_cast<std::size_t>(n);
    return total;
}

std::size_t TorusGrid::flat(std::span<const int> idx) const {
    std::size_t f = 0;
    for (std::size_t d = 0; d < sizes.size(); ++d)
        f = f * static_cast<std::size_t>(sizes[d]) + static_cast<std::size_t>(idx[d]);
    return f;
}

std::vector<int> TorusGrid::unflat(std::size_t flat_index) const {
    std::vector<int> idx(sizes.size());
    for (std::size_t d = sizes.size(); d-- > 0;) {
        auto n = static_cast<std::size_t>(sizes[d]);
        idx[d] = static_cast<int>(flat_index % n);
        flat_index /= n;
    }
    return idx;
}

std::vector<double> TorusGrid::point(std::span<const int> idx) const {
    std::vector<double> p(sizes.size());
    for (std::size_t d = 0; d < sizes.size(); ++d) p[d] = coord(static_cast<int>(d), idx[d]);
    return p;
}

namespace {

template <class T, class Fn>
SampledField<T> sample_impl(const TorusGrid& grid, Fn&& f) {
    SampledField<T> out(grid);
    detail::parallel_chunks(grid.node_count(), [&](std::size_t, std::size_t lo, std::size_t hi) {
        std::vector<int> idx = grid.unflat(lo);
        std::vector<double> pt(idx.size());
        for (std::size_t k = lo; k < hi; ++k) {
            for (std::size_t d = 0; d < idx.size(); ++d)
                pt[d] = grid.coord(static_cast<int>(d), idx[d]);
            out.values[k] = f(std::span<const double>(pt));
            // advance the multi-index (last axis fastest)
            for (std::size_t d = idx.size(); d-- > 0;) {
                if (++idx[d] < grid.sizes[d]) break;
                idx[d] = 0;
            }
        }
    });
    return out;
}

}  // namespace

ScalarField sample_scalar(const TorusGrid& grid, const AlgebraElement& e) {
    if (e.vars() != grid.dims()) throw InputError("sample_scalar: dimension mismatch");
    return sample_impl<std::complex<double>>(grid,
                                             [&](std::span<const double> p) { return eval(e, p); });
}

MatrixField sample_matrix(const TorusGrid& grid, const Matrix2Alg& m) {
    if (m.vars() != grid.dims()) throw InputError("sample_matrix: dimension mismatch");
    return sample_impl<Eigen::Matrix2cd>(grid, [&](std::span<const double> p) {
        Eigen::Matrix2cd v;
        v << eval(m(0, 0), p), eval(m(0, 1), p), eval(m(1, 0), p), eval(m(1, 1), p);
        return v;
    });
}

ScalarField sample_scalar_fn(
    const TorusGrid& grid,
    const std::function<std::complex<double>(std::span<const double>)>& f) {
    return sample_impl<std::complex<double>>(grid, f);
}

MatrixField sample_matrix_fn(const TorusGrid& grid,
                             const std::function<Eigen::Matrix2cd(std::span<const double>)>& f) {
    return sample_impl<Eigen::Matrix2cd>(grid, f);
}

namespace {

const char* axis_names[3][3] = {{"theta", "", ""}, {"theta", "phi", ""}, {"theta", "phi", "psi"}};

void write_number(std::ostream& os, double v) {
    char buf[32];
    auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
    os.write(buf, p - buf);
}

template <class T, class EntryWriter>
void write_csv_impl(std::ostream& os, const SampledField<T>& f, int entries, EntryWriter&& w) {
    os << "#";
    for (int d = 0; d < f.grid.dims(); ++d) os << (d ? "," : " ") << axis_names[f.grid.dims() - 1][d];
    for (int k = 0; k < entries; ++k) {
        int i = k / 2 + 1, j = k % 2 + 1;
        if (entries == 1)
            os << ",re,im";
        else
            os << ",re_" << i << j << ",im_" << i << j;
        if (entries == 1) break;
    }
    os << "\n";
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        auto idx = f.grid.unflat(k);
        for (std::size_t d = 0; d < idx.size(); ++d) {
            if (d) os << ",";
            write_number(os, f.grid.coord(static_cast<int>(d), idx[d]));
        }
        w(os, f.values[k]);
        os << "\n";
    }
}

}  // namespace

void write_csv(std::ostream& os, const ScalarField& f) {
    write_csv_impl(os, f, 1, [](std::ostream& o, const std::complex<double>& v) {
        o << ",";
        write_number(o, v.real());
        o << ",";
        write_number(o, v.imag());
    });
}

void write_csv(std::ostream& os, const MatrixField& f) {
    write_csv_impl(os, f, 4, [](std::ostream& o, const Eigen::Matrix2cd& v) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                o << ",";
                write_number(o, v(i, j).real());
                o << ",";
                write_number(o, v(i, j).imag());
            }
    });
}

}  // namespace ktorus
