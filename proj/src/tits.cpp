#include "qv/tits.hpp"

#include <algorithm>
#include <sstream>

#include "qv/matrix.hpp"

namespace qv {

Int TitsForm::evaluate(const std::vector<Int>& x) const {
    if (x.size() != diag.size()) throw Error("tits form: bad vector length");
    Int q = 0;
    for (size_t i = 0; i < diag.size(); ++i) q += diag[i] * x[i] * x[i];
    for (const auto& [ij, c] : cross)
        q += c * x[static_cast<size_t>(ij.first)] * x[static_cast<size_t>(ij.second)];
    return q;
}

std::vector<std::vector<Rational>> TitsForm::gram() const {
    size_t n = diag.size();
    std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n, Rational(0)));
    for (size_t i = 0; i < n; ++i) g[i][i] = Rational(diag[i]);
    for (const auto& [ij, c] : cross) {
        auto [i, j] = ij;
        g[static_cast<size_t>(i)][static_cast<size_t>(j)] = Rational(c, 2);
        g[static_cast<size_t>(j)][static_cast<size_t>(i)] = Rational(c, 2);
    }
    return g;
}

std::string TitsForm::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Int& c, const std::string& mono) {
        if (c == 0) return;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1) os << a.str() << "*";
        os << mono;
        first = false;
    };
    for (size_t i = 0; i < diag.size(); ++i) term(diag[i], "x" + std::to_string(i + 1) + "^2");
    for (const auto& [ij, c] : cross)
        term(c, "x" + std::to_string(ij.first + 1) + "*x" + std::to_string(ij.second + 1));
    if (first) os << "0";
    return os.str();
}

TitsForm tits_form(const QuiverPresentation& pres) {
    TitsForm f;
    f.labels = pres.quiver.vertices;
    size_t n = f.labels.size();
    f.diag.assign(n, Int(1));
    auto add_cross = [&](int a, int b, int delta) {
        if (a == b) {
            f.diag[static_cast<size_t>(a)] += delta;
            return;
        }
        auto key = std::minmax(a, b);
        f.cross[{key.first, key.second}] += delta;
        if (f.cross[{key.first, key.second}] == 0) f.cross.erase({key.first, key.second});
    };
    for (const auto& a : pres.quiver.arrows) add_cross(a.tail, a.head, -1);
    for (const auto& r : pres.relations) {
        int src = pres.quiver.arrows[static_cast<size_t>(r.front())].tail;
        int tgt = pres.quiver.arrows[static_cast<size_t>(r.back())].head;
        add_cross(src, tgt, +1);
    }
    return f;
}

bool is_psd(const TitsForm& form) {
    auto g = form.gram();
    size_t n = g.size();
    // LDL^T-style sweep: a PSD block with zero diagonal entry must have the
    // whole row zero; a negative pivot or a zero pivot with a nonzero row
    // witnesses indefiniteness
    std::vector<bool> done(n, false);
    for (size_t k = 0; k < n; ++k) {
        if (g[k][k] < 0) return false;
        if (g[k][k] == 0) {
            for (size_t j = 0; j < n; ++j)
                if (!done[j] && g[k][j] != 0) return false;
            done[k] = true;
            continue;
        }
        Rational pivot = g[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (done[i] || g[i][k] == 0) continue;
            Rational factor = g[i][k] / pivot;
            for (size_t j = 0; j < n; ++j) g[i][j] -= factor * g[k][j];
        }
        for (size_t j = 0; j < n; ++j) g[k][j] = (j == k) ? pivot : Rational(0);
        done[k] = true;
    }
    return true;
}

namespace {

// Integer kernel of an integer matrix via column reduction: apply
// unimodular column operations to [A; I]; columns that zero out A give a
// lattice basis of the kernel.
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a, size_t cols) {
    size_t rows = a.size();
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
    for (size_t i = 0; i < cols; ++i) u[i][i] = 1;
    auto col_swap = [&](size_t c1, size_t c2) {
        for (size_t r = 0; r < rows; ++r) std::swap(a[r][c1], a[r][c2]);
        std::swap(u[c1], u[c2]);
    };
    auto col_axpy = [&](size_t dst, size_t src, const Int& f) {
        for (size_t r = 0; r < rows; ++r) a[r][dst] += f * a[r][src];
        for (size_t r = 0; r < cols; ++r) u[dst][r] += f * u[src][r];
    };
    size_t lead = 0;
    for (size_t r = 0; r < rows && lead < cols; ++r) {
        while (true) {
            size_t best = cols;
            for (size_t c = lead; c < cols; ++c)
                if (a[r][c] != 0 && (best == cols || abs(a[r][c]) < abs(a[r][best]))) best = c;
            if (best == cols) break;
            col_swap(lead, best);
            bool clean = true;
            for (size_t c = lead + 1; c < cols; ++c) {
                if (a[r][c] == 0) continue;
                Int f = -(a[r][c] / a[r][lead]);
                col_axpy(c, lead, f);
                if (a[r][c] != 0) clean = false;
            }
            if (clean) { ++lead; break; }
        }
    }
    std::vector<std::vector<Int>> kernel;
    for (size_t c = 0; c < cols; ++c) {
        bool zero = true;
        for (size_t r = 0; r < rows; ++r)
            if (a[r][c] != 0) { zero = false; break; }
        if (zero) kernel.push_back(u[c]);
    }
    return kernel;
}

void canonicalize_basis(std::vector<std::vector<Int>>& basis) {
    for (auto& v : basis) {
        Int g = 0;
        for (const auto& x : v) g = gcd(g, x);
        if (g > 1)
            for (auto& x : v) x /= g;
        for (const auto& x : v) {
            if (x == 0) continue;
            if (x < 0)
                for (auto& y : v) y = -y;
            break;
        }
    }
    std::sort(basis.begin(), basis.end());
}

}  // namespace

std::vector<std::vector<Int>> radical_lattice(const TitsForm& form) {
    // kernel of 2G, an integer matrix with the same kernel as G
    size_t n = form.diag.size();
    std::vector<std::vector<Int>> two_g(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) two_g[i][i] = 2 * form.diag[i];
    for (const auto& [ij, c] : form.cross) {
        two_g[static_cast<size_t>(ij.first)][static_cast<size_t>(ij.second)] = c;
        two_g[static_cast<size_t>(ij.second)][static_cast<size_t>(ij.first)] = c;
    }
    auto kernel = integer_kernel(std::move(two_g), n);
    canonicalize_basis(kernel);
    return kernel;
}

}  // namespace qv
