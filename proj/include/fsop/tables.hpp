#pragma once

#include "fsop/holonomic.hpp"

#include <array>
#include <iosfwd>

namespace fsop {

/// One row of the Q_5 / Q_4 zero tables: eta_{5,2}, eta_{4,2}, eta_{5,3}, eta_{4,3}, eta_{5,4}.
struct ZeroTableRow {
    Real M0 = 0, M1 = 0;
    std::array<Real, 5> eta{};
    bool rupture = false;
    std::array<bool, 5> flagged{};  // cell holds a zero of Q_5 outside its interlacing slot
};

extern const std::array<const char*, 5> kZeroTableColumns;

// Masses used by zero tables 1 and 2.
Real zero_table_M0(int id);
std::vector<Real> zero_table_M1(int id);

std::vector<ZeroTableRow> compute_zero_table(const FreudTable& ft, Real M0, const std::vector<Real>& m1_values);
std::vector<ZeroTableRow> read_zero_reference(std::istream& is);

/// Cell-by-cell distance to a reference; rows are matched on (M0, M1).
struct ZeroTableComparison {
    std::vector<std::array<Real, 5>> abs_err;  // aligned with the computed rows
    std::vector<bool> rupture_match;
    Real max_err = 0;
    int unmatched = 0;
};

ZeroTableComparison compare_zero_table(const std::vector<ZeroTableRow>& computed,
                                       const std::vector<ZeroTableRow>& reference);

/// Roots of u for one (M1, odd degree) cell.
struct UTableRow {
    Real M1 = 0;
    int n = 0;
    Real re_root = 0, im_root = 0;
};

std::vector<Real> u_table_M1();
std::vector<int> u_table_degrees();

std::vector<UTableRow> compute_u_table(const FreudTable& ft, const std::vector<Real>& m1_values,
                                       const std::vector<int>& degrees);
std::vector<UTableRow> read_u_reference(std::istream& is);

// Rows matched on (M1, n); errors in |real root| and |imaginary root|.
struct UTableComparison {
    std::vector<std::pair<Real, Real>> abs_err;
    Real max_err = 0;
    int unmatched = 0;
};

UTableComparison compare_u_table(const std::vector<UTableRow>& computed, const std::vector<UTableRow>& reference);

}  // namespace fsop
