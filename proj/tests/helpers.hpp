#pragma once

#include <string>
#include <vector>

#include "quotcone/binary_form.hpp"
#include "quotcone/poly_matrix.hpp"

namespace testing_helpers {

using namespace quotcone;

inline Field fp() { return Field::prime(); }
inline Field qq() { return Field::rational(); }

/// Form from integer coefficients of x^t y^(m-t), t ascending.
inline BinaryForm F(const Field& field, std::vector<long> c) { return make_form(field, c); }

/// Matrix from rows of integer coefficient lists; column degrees are read
/// off the first row.
inline PolyMatrix M(const Field& field, const std::vector<std::vector<std::vector<long>>>& rows) {
    std::vector<int> degs;
    for (const auto& c : rows.at(0)) degs.push_back(static_cast<int>(c.size()) - 1);
    std::vector<BinaryForm> entries;
    for (const auto& row : rows)
        for (const auto& c : row) entries.push_back(make_form(field, c));
    return PolyMatrix(field, rows.size(), degs, std::move(entries));
}

} // namespace testing_helpers
