#include "qv/moment.hpp"

#include <sstream>

namespace qv::moment {

void MultiPoly::add_term(Monomial m, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::constant(const Rational& c) {
    MultiPoly p;
    p.add_term(Monomial{}, c);
    return p;
}

MultiPoly MultiPoly::variable(int var) {
    MultiPoly p;
    Monomial m;
    m.exps[var] = 1;
    p.add_term(std::move(m), Rational(1));
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            Monomial m = ma;
            for (const auto& [v, e] : mb.exps) m.exps[v] += e;
            r.add_term(std::move(m), ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r;
    for (const auto& [m, coeff] : terms_) r.add_term(m, coeff * c);
    return r;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw Error("MultiPoly::pow: negative exponent");
    MultiPoly r = constant(Rational(1));
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r;
    for (const auto& [m, c] : terms_) {
        auto it = m.exps.find(var);
        if (it == m.exps.end()) continue;
        Monomial d = m;
        int e = it->second;
        if (e == 1)
            d.exps.erase(var);
        else
            d.exps[var] = e - 1;
        r.add_term(std::move(d), c * e);
    }
    return r;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [var, e] : m.exps) {
            if (var < 0 || var >= static_cast<int>(point.size()))
                throw Error("eval: point does not assign variable " + std::to_string(var));
            for (int i = 0; i < e; ++i) v *= point[static_cast<size_t>(var)];
        }
        total += v;
    }
    return total;
}

std::string MultiPoly::to_string(const std::vector<std::string>& var_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = c < 0 ? Rational(-c) : c;
        bool need_coeff = a != 1 || m.exps.empty();
        if (need_coeff) os << qv::to_string(a);
        bool star = need_coeff;
        for (const auto& [v, e] : m.exps) {
            if (star) os << "*";
            os << var_names.at(static_cast<size_t>(v));
            if (e > 1) os << "^" << e;
            star = true;
        }
        first = false;
    }
    return os.str();
}

std::vector<std::string> MatrixVars::names() const {
    std::vector<std::string> out;
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            out.push_back("x" + std::to_string(i) + std::to_string(j));
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            out.push_back("y" + std::to_string(i) + std::to_string(j));
    return out;
}

LinearAction gl_gl_action(int m, int n) {
    if (m < 1 || n < 1) throw Error("gl_gl_action: sizes must be positive");
    LinearAction act;
    act.rows = m;
    act.cols = n;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            LinearAction::Pair p{Matrix<Rational>(m, m, Rational(0)),
                                 Matrix<Rational>(n, n, Rational(0))};
            p.a.at(a, b) = 1;
            act.basis.push_back(std::move(p));
        }
    for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
            LinearAction::Pair p{Matrix<Rational>(m, m, Rational(0)),
                                 Matrix<Rational>(n, n, Rational(0))};
            p.b.at(c, d) = 1;
            act.basis.push_back(std::move(p));
        }
    return act;
}

Matrix<Rational> sp_standard_form(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw Error("sp_standard_form: size must be even");
    int n = two_n / 2;
    Matrix<Rational> j(two_n, two_n, Rational(0));
    for (int i = 0; i < n; ++i) {
        j.at(i, n + i) = 1;
        j.at(n + i, i) = -1;
    }
    return j;
}

LinearAction sp_gl_action(int two_n, int m) {
    Matrix<Rational> j = sp_standard_form(two_n);
    // sp(J) = { A : J A symmetric }; solve the linear constraints on A
    int n2 = two_n * two_n;
    int eqs = two_n * (two_n - 1) / 2;
    Matrix<Rational> sys(eqs, n2, Rational(0));
    int row = 0;
    for (int r = 0; r < two_n; ++r)
        for (int c = r + 1; c < two_n; ++c) {
            // (J A)_{rc} - (J A)_{cr} = 0
            for (int k = 0; k < two_n; ++k) {
                sys.at(row, k * two_n + c) += j.at(r, k);
                sys.at(row, k * two_n + r) -= j.at(c, k);
            }
            ++row;
        }
    auto kernel = nullspace(std::move(sys), Rational(0), Rational(1));
    LinearAction act;
    act.rows = two_n;
    act.cols = m;
    for (const auto& vec : kernel) {
        LinearAction::Pair p{Matrix<Rational>(two_n, two_n, Rational(0)),
                             Matrix<Rational>(m, m, Rational(0))};
        for (int r = 0; r < two_n; ++r)
            for (int c = 0; c < two_n; ++c) p.a.at(r, c) = vec[static_cast<size_t>(r * two_n + c)];
        act.basis.push_back(std::move(p));
    }
    for (int c = 0; c < m; ++c)
        for (int d = 0; d < m; ++d) {
            LinearAction::Pair p{Matrix<Rational>(two_n, two_n, Rational(0)),
                                 Matrix<Rational>(m, m, Rational(0))};
            p.b.at(c, d) = 1;
            act.basis.push_back(std::move(p));
        }
    return act;
}

MomentSystem make_moment_system(LinearAction action) {
    MomentSystem sys;
    sys.vars = MatrixVars{action.rows, action.cols};
    for (const auto& xi : action.basis) {
        // H_xi = sum_{ij} (A x - x B)_{ij} y_{ij}
        MultiPoly h;
        for (int i = 1; i <= action.rows; ++i)
            for (int jj = 1; jj <= action.cols; ++jj) {
                MultiPoly entry;
                for (int k = 1; k <= action.rows; ++k) {
                    const Rational& a = xi.a.at(i - 1, k - 1);
                    if (a != 0)
                        entry = entry + MultiPoly::variable(sys.vars.x(k, jj)).scaled(a);
                }
                for (int k = 1; k <= action.cols; ++k) {
                    const Rational& b = xi.b.at(k - 1, jj - 1);
                    if (b != 0)
                        entry = entry - MultiPoly::variable(sys.vars.x(i, k)).scaled(b);
                }
                h = h + entry * MultiPoly::variable(sys.vars.y(i, jj));
            }
        sys.h_polys.push_back(std::move(h));
    }
    sys.action = std::move(action);
    return sys;
}

namespace {

void check_point(const MomentSystem& sys, const std::vector<Rational>& point) {
    if (static_cast<int>(point.size()) != sys.vars.total())
        throw Error("moment point must assign all " + std::to_string(sys.vars.total()) +
                    " coordinates");
}

}  // namespace

int jacobian_rank(const MomentSystem& sys, const std::vector<Rational>& point) {
    check_point(sys, point);
    int nv = sys.vars.total();
    Matrix<Rational> grads(static_cast<int>(sys.h_polys.size()), nv, Rational(0));
    for (size_t b = 0; b < sys.h_polys.size(); ++b)
        for (int v = 0; v < nv; ++v)
            grads.at(static_cast<int>(b), v) = sys.h_polys[b].derivative(v).eval(point);
    return rank(std::move(grads));
}

int orbit_tangent_rank(const MomentSystem& sys, const std::vector<Rational>& point) {
    check_point(sys, point);
    int r = sys.action.rows, c = sys.action.cols;
    Matrix<Rational> x0(r, c, Rational(0)), y0(r, c, Rational(0));
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= c; ++j) {
            x0.at(i - 1, j - 1) = point[static_cast<size_t>(sys.vars.x(i, j))];
            y0.at(i - 1, j - 1) = point[static_cast<size_t>(sys.vars.y(i, j))];
        }
    Matrix<Rational> vecs(static_cast<int>(sys.action.basis.size()), 2 * r * c, Rational(0));
    for (size_t b = 0; b < sys.action.basis.size(); ++b) {
        const auto& xi = sys.action.basis[b];
        Matrix<Rational> xdot = xi.a * x0 - x0 * xi.b;                                  // xi . x
        Matrix<Rational> ydot = (xi.a.transposed() * y0 - y0 * xi.b.transposed());      // xi* . y
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                vecs.at(static_cast<int>(b), i * c + j) = xdot.at(i, j);
                vecs.at(static_cast<int>(b), r * c + i * c + j) = -ydot.at(i, j);
            }
    }
    return rank(std::move(vecs));
}

namespace {

// row pairing: sum_k x_{ik} y_{jk} (k over columns)
MultiPoly row_symbol(const MatrixVars& v, int i, int j) {
    MultiPoly p;
    for (int k = 1; k <= v.cols; ++k)
        p = p + MultiPoly::variable(v.x(i, k)) * MultiPoly::variable(v.y(j, k));
    return p;
}

// column pairing: sum_k x_{ki} y_{kj} (k over rows)
MultiPoly col_symbol(const MatrixVars& v, int i, int j) {
    MultiPoly p;
    for (int k = 1; k <= v.rows; ++k)
        p = p + MultiPoly::variable(v.x(k, i)) * MultiPoly::variable(v.y(k, j));
    return p;
}

}  // namespace

LemmaM2Data lemma_m2_data() {
    LemmaM2Data d;
    d.vars = MatrixVars{4, 3};
    auto g = [&](int i, int j) { return row_symbol(d.vars, i, j); };
    auto hh = [&](int i, int j) { return col_symbol(d.vars, i, j); };
    auto add = [&](const std::string& name, MultiPoly p) {
        d.generator_names.push_back(name);
        d.generator_symbols.push_back(std::move(p));
    };
    add("g(1,1)-g(3,3)", g(1, 1) - g(3, 3));
    add("g(1,2)-g(4,3)", g(1, 2) - g(4, 3));
    add("g(2,1)-g(3,4)", g(2, 1) - g(3, 4));
    add("g(2,2)-g(4,4)", g(2, 2) - g(4, 4));
    add("g(1,4)+g(2,3)", g(1, 4) + g(2, 3));
    add("g(1,3)", g(1, 3));
    add("g(2,4)", g(2, 4));
    add("g(3,1)", g(3, 1));
    add("g(3,2)+g(4,1)", g(3, 2) + g(4, 1));
    add("g(4,2)", g(4, 2));
    add("h(1,1)+2 (constant dropped)", hh(1, 1));
    add("h(2,1)", hh(2, 1));
    add("h(3,1)", hh(3, 1));
    add("h(2,2)", hh(2, 2));
    add("h(3,3)", hh(3, 3));
    add("h(2,3)", hh(2, 3));
    add("h(3,2)", hh(3, 2));
    add("h(1,3)^3", hh(1, 3).pow(3));
    add("h(1,2)^3", hh(1, 2).pow(3));

    auto xv = [&](int i, int j) { return MultiPoly::variable(d.vars.x(i, j)); };
    auto yv = [&](int i, int j) { return MultiPoly::variable(d.vars.y(i, j)); };
    d.h = xv(2, 1) * yv(2, 3) * yv(3, 2) - xv(2, 1) * yv(2, 2) * yv(3, 3) -
          xv(1, 1) * yv(2, 3) * yv(4, 2) + xv(1, 1) * yv(2, 2) * yv(4, 3) -
          xv(4, 1) * yv(3, 3) * yv(4, 2) + xv(4, 1) * yv(3, 2) * yv(4, 3);

    d.point.assign(static_cast<size_t>(d.vars.total()), Rational(0));
    d.point[static_cast<size_t>(d.vars.x(1, 1))] = 1;
    d.point[static_cast<size_t>(d.vars.y(2, 2))] = 1;
    d.point[static_cast<size_t>(d.vars.y(4, 3))] = 1;
    return d;
}

LemmaM2Report lemma_m2_check() {
    LemmaM2Data d = lemma_m2_data();
    LemmaM2Report rep;
    bool all_zero = true;
    for (size_t i = 0; i < d.generator_symbols.size(); ++i) {
        Rational v = d.generator_symbols[i].eval(d.point);
        if (v != 0) all_zero = false;
        rep.generator_values.push_back({d.generator_names[i], v, true});
    }
    rep.h_value = d.h.eval(d.point);
    rep.pass = all_zero && rep.h_value != 0;
    return rep;
}

}  // namespace qv::moment
