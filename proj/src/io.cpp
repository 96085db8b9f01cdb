#include "ktorus/io.hpp"

#include "ktorus/parse.hpp"

namespace ktorus {

Json to_json(const Verdict& v) {
    Json checks = Json::array();
    for (const auto& it : v.items)
        checks.push_back({{"equation", it.equation}, {"exact", it.exact}, {"residual", it.residual}});
    return {{"pass", v.pass()}, {"checks", checks}};
}

Json to_json(const WindingResult& r) {
    return {{"winding", r.winding},
            {"min_abs", r.min_abs},
            {"max_phase_step", r.max_step},
            {"integer_distance", r.integer_distance}};
}

Json to_json(const ChernResult& r) {
    return {{"chern", r.chern},
            {"max_projection_residual", r.max_projection_residual},
            {"max_eigen_deviation", r.max_eigen_deviation},
            {"min_link_modulus", r.min_link_modulus},
            {"min_plaquette_margin", r.min_plaquette_margin},
            {"integer_distance", r.integer_distance}};
}

Json to_json(const BoundaryResult& r) {
    return {{"winding", r.winding},
            {"max_main1_residual", r.max_main1_residual},
            {"max_selfadjoint_residual", r.max_selfadjoint_residual},
            {"max_branch_mismatch", r.max_branch_mismatch},
            {"max_u_jump", r.max_u_jump},
            {"u_jump_tol", r.u_jump_tol},
            {"support_entire", r.support_entire},
            {"support_single_arc", r.support_single_arc},
            {"l_constant_on_support", r.l_constant_on_support}};
}

Json to_json(const K3Report& r) {
    Json beta = Json::array();
    for (const auto& row : r.beta) beta.push_back(Json(row));
    Json out{{"beta_matrix", beta},
             {"coordinate_windings", Json(r.coordinate_windings)},
             {"u_product_invariant", r.u_product_invariant},
             {"max_projection_residual", r.max_projection_residual}};
    if (r.direct_integral) out["direct_integral"] = *r.direct_integral;
    return out;
}

namespace {

int common_vars(std::initializer_list<const char*> texts) {
    int n = 1;
    for (const char* t : texts) n = std::max(n, scan_max_var(t));
    return n;
}

std::string field_or_zero(const Json& j, const char* key) {
    if (!j.contains(key)) return "0";
    if (!j.at(key).is_string()) throw InputError(std::string("expected string for ") + key);
    return j.at(key).get<std::string>();
}

}  // namespace

ScalarData scalar_data_from_json(const Json& j) {
    std::string a = field_or_zero(j, "a"), b = field_or_zero(j, "b"),
                al = field_or_zero(j, "alpha"), be = field_or_zero(j, "beta"),
                ga = field_or_zero(j, "gamma");
    int n = common_vars({a.c_str(), b.c_str(), al.c_str(), be.c_str(), ga.c_str()});
    return {parse_expr(a, n), parse_expr(b, n), parse_expr(al, n), parse_expr(be, n),
            parse_expr(ga, n)};
}

RieffelPair pair_from_json(const Json& j) {
    auto entries = [&](const char* key) {
        const Json& m = j.at(key);
        if (!m.is_array() || m.size() != 2 || !m[0].is_array() || m[0].size() != 2 ||
            !m[1].is_array() || m[1].size() != 2)
            throw InputError(std::string(key) + " must be a 2x2 array of expressions");
        std::array<std::string, 4> out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) out[static_cast<std::size_t>(2 * r + c)] =
                m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<std::string>();
        return out;
    };
    auto x0 = entries("X0"), x1 = entries("X1");
    int n = 1;
    for (const auto& t : x0) n = std::max(n, scan_max_var(t));
    for (const auto& t : x1) n = std::max(n, scan_max_var(t));
    auto mat = [&](const std::array<std::string, 4>& t) {
        return Matrix2Alg(parse_expr(t[0], n), parse_expr(t[1], n), parse_expr(t[2], n),
                          parse_expr(t[3], n));
    };
    return {mat(x0), mat(x1)};
}

Eigen::MatrixXcd matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix: nonempty array of rows required");
    const auto rows = static_cast<Eigen::Index>(j.size());
    const auto cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Json& row = j[static_cast<std::size_t>(r)];
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw InputError("matrix: ragged rows");
        for (Eigen::Index c = 0; c < cols; ++c) {
            const Json& cell = row[static_cast<std::size_t>(c)];
            if (!cell.is_array() || cell.size() != 2)
                throw InputError("matrix: entries must be [re, im] pairs");
            m(r, c) = std::complex<double>(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    return m;
}

Json matrix_to_json(const Eigen::MatrixXcd& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back({m(r, c).real(), m(r, c).imag()});
        rows.push_back(std::move(row));
    }
    return rows;
}

Json coeffseq_to_json(const CoeffSeq& a) {
    Json out = Json::object();
    for (int k = a.lo; k <= a.hi(); ++k)
        if (a.at(k) != 0.0) out[std::to_string(k)] = a.at(k);
    return out;
}

}  // namespace ktorus
