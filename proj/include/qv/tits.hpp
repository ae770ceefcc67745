#pragma once

#include <map>
#include <string>
#include <vector>

#include "qv/quiver.hpp"
#include "qv/scalar.hpp"

namespace qv {

// Integral quadratic form attached to a presentation:
//   q(x) = sum_v x_v^2  -  sum_{arrows a} x_{ta} x_{ha}
//        + sum_{relations r} x_{source(r)} x_{target(r)}.
// Stored as diagonal coefficients plus cross terms (i < j). A relation
// whose source equals its target lands on the diagonal.
struct TitsForm {
    std::vector<std::string> labels;
    std::vector<Int> diag;
    std::map<std::pair<int, int>, Int> cross;

    Int evaluate(const std::vector<Int>& x) const;
    // symmetric Gram matrix G with q(x) = x^T G x (entries in (1/2)Z)
    std::vector<std::vector<Rational>> gram() const;
    std::string to_string() const;
};

TitsForm tits_form(const QuiverPresentation& pres);

// positive semidefiniteness by exact rational symmetric pivoting
bool is_psd(const TitsForm& form);

// basis of the integer kernel lattice of the Gram matrix, canonicalized
// (Hermite-style triangular, positive leading entries); for a PSD form this
// is the radical {x : q(x) = 0}
std::vector<std::vector<Int>> radical_lattice(const TitsForm& form);

}  // namespace qv
