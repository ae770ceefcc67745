#pragma once

#include <map>
#include <string>
#include <vector>

#include "qv/matrix.hpp"
#include "qv/scalar.hpp"

namespace qv::moment {

// Sparse multivariate polynomial over Q. Variables are nonnegative integer
// ids; evaluation points are vectors indexed by id.
struct Monomial {
    std::map<int, int> exps;  // var -> exponent > 0
    friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps < b.exps; }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(int var);

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(int e) const;
    MultiPoly derivative(int var) const;

    // throws if the polynomial mentions a variable the point does not assign
    Rational eval(const std::vector<Rational>& point) const;

    std::string to_string(const std::vector<std::string>& var_names) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms_ == b.terms_;
    }

private:
    std::map<Monomial, Rational> terms_;
    void add_term(Monomial m, const Rational& c);
};

// Variable layout for the cotangent space of an r x c matrix space:
// position variables x_{ij} then momentum variables y_{ij}, row-major.
struct MatrixVars {
    int rows = 0;
    int cols = 0;
    int x(int i, int j) const { return (i - 1) * cols + (j - 1); }
    int y(int i, int j) const { return rows * cols + (i - 1) * cols + (j - 1); }
    int total() const { return 2 * rows * cols; }
    std::vector<std::string> names() const;
};

// Lie algebra of matrix pairs (A, B) acting on r x c matrices by
// xi . x = A x - x B. The basis elements are linearly independent.
struct LinearAction {
    int rows = 0;
    int cols = 0;
    struct Pair {
        Matrix<Rational> a;  // rows x rows
        Matrix<Rational> b;  // cols x cols
    };
    std::vector<Pair> basis;
};

LinearAction gl_gl_action(int m, int n);

// standard symplectic form pairing e_i with e_{i+n} on C^{2n}
Matrix<Rational> sp_standard_form(int two_n);
// sp(J) x gl_m: the sp factor is solved from the constraint that J A is
// symmetric; basis elements are paired with B = 0, followed by gl_m units
LinearAction sp_gl_action(int two_n, int m);

struct MomentSystem {
    LinearAction action;
    MatrixVars vars;
    std::vector<MultiPoly> h_polys;  // H_xi = <xi . x, y>, bilinear of bidegree (1,1)
};

MomentSystem make_moment_system(LinearAction action);

// rank of the matrix of gradients dH_xi at the point (x, y)
int jacobian_rank(const MomentSystem& sys, const std::vector<Rational>& point);
// rank of the span of the induced cotangent vector fields (xi.x, -xi*.y)
int orbit_tangent_rank(const MomentSystem& sys, const std::vector<Rational>& point);

// ---- the 4x3 verification data -----------------------------------------

struct CheckItem {
    std::string name;
    Rational value;
    bool expected_zero = true;
};

struct LemmaM2Data {
    MatrixVars vars;                       // 4 x 3
    std::vector<MultiPoly> generator_symbols;
    std::vector<std::string> generator_names;
    MultiPoly h;
    std::vector<Rational> point;           // the distinguished conormal point
};

// Order-1 principal symbols of the two transcribed operator families on the
// 4 x 3 matrix space (invariant vector fields for the symplectic factor,
// column Euler operators for the general linear factor, with the two cubes
// kept as cubes and additive constants dropped), the cubic polynomial h
// certified to lie in the characteristic ideal, and the evaluation point.
LemmaM2Data lemma_m2_data();

struct LemmaM2Report {
    std::vector<CheckItem> generator_values;  // all must vanish at the point
    Rational h_value;                         // must be nonzero
    bool pass = false;
};

LemmaM2Report lemma_m2_check();

}  // namespace qv::moment
