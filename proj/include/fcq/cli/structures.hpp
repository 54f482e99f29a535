#pragma once

#include "fcq/cli/json.hpp"
#include "fcq/homalg/complex.hpp"
#include "fcq/twist/superalgebra.hpp"

namespace fcq::cli {

/// Residues in [0, p).
template <class S>
Json matrix_to_json(const Matrix<S>& m)
{
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(m(i, j).value());
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class S>
Matrix<S> matrix_from_json(const Json& j, Eigen::Index rows, Eigen::Index cols)
{
    if (static_cast<Eigen::Index>(j.size()) != rows)
        throw AlgebraError("matrix JSON: expected " + std::to_string(rows) + " rows");
    Matrix<S> m = zero_matrix<S>(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const auto& row = j.at(static_cast<std::size_t>(i));
        if (static_cast<Eigen::Index>(row.size()) != cols)
            throw AlgebraError("matrix JSON: expected " + std::to_string(cols) + " columns");
        for (Eigen::Index k = 0; k < cols; ++k)
            m(i, k) = S(row.at(static_cast<std::size_t>(k)).template get<long long>());
    }
    return m;
}

/// {"p":3,"degrees":{"0":1,"1":1},"d":{"0":[[1]]},"sigma":{...}}
template <class S>
Json to_json(const homalg::CyclicComplex<S>& M)
{
    Json degrees = Json::object(), d = Json::object(), sigma = Json::object();
    for (int n : M.complex().degrees()) {
        degrees[std::to_string(n)] = M.dim(n);
        if (M.dim(n + 1) > 0)
            d[std::to_string(n)] = matrix_to_json(M.d(n));
        sigma[std::to_string(n)] = matrix_to_json(M.sigma(n));
    }
    return {{"p", M.order()}, {"degrees", degrees}, {"d", d}, {"sigma", sigma}};
}

template <class S>
homalg::CyclicComplex<S> cyclic_complex_from_json(const Json& j)
{
    const int p = j.at("p").get<int>();
    if (p != characteristic_v<S>)
        throw AlgebraError("complex JSON: characteristic mismatch");
    std::map<int, Eigen::Index> dims;
    for (const auto& [k, v] : j.at("degrees").items())
        dims[std::stoi(k)] = v.template get<Eigen::Index>();
    const auto dim = [&dims](int n) { return dims.count(n) ? dims.at(n) : Eigen::Index{0}; };
    std::map<int, Matrix<S>> d, sigma;
    for (const auto& [k, v] : j.at("d").items()) {
        const int n = std::stoi(k);
        d[n] = matrix_from_json<S>(v, dim(n + 1), dim(n));
    }
    for (const auto& [k, v] : j.at("sigma").items()) {
        const int n = std::stoi(k);
        sigma[n] = matrix_from_json<S>(v, dim(n), dim(n));
    }
    return homalg::CyclicComplex<S>(homalg::Complex<S>(dims, d), sigma, p);
}

/// Basis names, degrees, unit, and the dense tensor mult[i][j][k], the
/// coefficient of e_k in e_i e_j.
template <class S>
Json to_json(const twist::SuperAlgebra<S>& A)
{
    const auto n = A.dim();
    Json mult = Json::array();
    for (Eigen::Index i = 0; i < n; ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < n; ++j) {
            Json v = Json::array();
            const Vector<S> c = A.product(i, j);
            for (Eigen::Index k = 0; k < n; ++k)
                v.push_back(c(k).value());
            row.push_back(std::move(v));
        }
        mult.push_back(std::move(row));
    }
    Json unit = Json::array();
    for (Eigen::Index k = 0; k < n; ++k)
        unit.push_back(A.unit()(k).value());
    return {{"p", characteristic_v<S>},
            {"names", A.names()},
            {"degrees", A.degrees()},
            {"unit", unit},
            {"graded_commutative", A.graded_commutative()},
            {"mult", mult}};
}

template <class S>
twist::SuperAlgebra<S> superalgebra_from_json(const Json& j)
{
    if (j.at("p").get<int>() != characteristic_v<S>)
        throw AlgebraError("algebra JSON: characteristic mismatch");
    const auto names = j.at("names").get<std::vector<std::string>>();
    const auto degrees = j.at("degrees").get<std::vector<int>>();
    const auto n = static_cast<Eigen::Index>(degrees.size());
    Matrix<S> mult = zero_matrix<S>(n, n * n);
    const auto& m = j.at("mult");
    if (static_cast<Eigen::Index>(m.size()) != n)
        throw AlgebraError("algebra JSON: mult has the wrong shape");
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto tab = matrix_from_json<S>(m.at(static_cast<std::size_t>(i)), n, n);
        for (Eigen::Index jj = 0; jj < n; ++jj)
            mult.col(i * n + jj) = tab.row(jj).transpose();
    }
    const auto u = matrix_from_json<S>(Json::array({j.at("unit")}), 1, n);
    return twist::SuperAlgebra<S>(names, degrees, mult, u.row(0).transpose(), j.value("graded_commutative", false));
}

} // namespace fcq::cli
