#include "hrc/order.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

#include "hrc/arith.hpp"
#include "hrc/modp.hpp"
#include "hrc/sturm.hpp"

namespace hrc {

namespace {

using ZVec = std::vector<mpz_class>;
using ZMat = std::vector<ZVec>;
using FpVec = std::vector<uint64_t>;
using FpMat = std::vector<FpVec>;

/* ----------------------------------------------------------- integer HNF
 * Row Hermite normal form, pivot of row i on column i (full rank input),
 * positive pivots, entries above a pivot reduced into [0, pivot).
 */
ZMat hnf_rows(ZMat rows, int n) {
    size_t pr = 0;
    for (int col = 0; col < n && pr < rows.size(); col++) {
        while (true) {
            size_t best = SIZE_MAX;
            for (size_t i = pr; i < rows.size(); i++) {
                if (rows[i][col] == 0) continue;
                if (best == SIZE_MAX || cmp(abs(rows[i][col]), abs(rows[best][col])) < 0)
                    best = i;
            }
            if (best == SIZE_MAX) break;
            std::swap(rows[pr], rows[best]);
            bool others = false;
            for (size_t i = pr + 1; i < rows.size(); i++) {
                if (rows[i][col] == 0) continue;
                mpz_class q = rows[i][col] / rows[pr][col];
                if (q != 0)
                    for (int j = 0; j < n; j++) rows[i][j] -= q * rows[pr][j];
                if (rows[i][col] != 0) others = true;
            }
            if (!others) break;
        }
        if (pr < rows.size() && rows[pr][col] != 0) {
            if (rows[pr][col] < 0)
                for (int j = 0; j < n; j++) rows[pr][j] = -rows[pr][j];
            for (size_t i = 0; i < pr; i++) {
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[pr][col].get_mpz_t());
                if (q != 0)
                    for (int j = 0; j < n; j++) rows[i][j] -= q * rows[pr][j];
            }
            pr++;
        }
    }
    rows.resize(pr);
    return rows;
}

// multiply integer coefficient vectors and reduce mod monic integral f
ZVec zmulmod_f(const ZVec& a, const ZVec& b, const ZVec& f) {
    int n = (int)f.size() - 1;
    ZVec r(2 * n, mpz_class(0));
    for (size_t i = 0; i < a.size(); i++) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); j++) r[i + j] += a[i] * b[j];
    }
    for (int i = (int)r.size() - 1; i >= n; i--) {
        if (r[i] == 0) continue;
        mpz_class c = r[i];
        for (int j = 0; j < n; j++) r[i - n + j] -= c * f[j];
        r[i] = 0;
    }
    r.resize(n);
    return r;
}

/* -------------------------------------------------- F_p linear algebra */

// nullspace of A (rows x cols, column-vector convention Av = 0), basis rows
FpMat fp_nullspace(const ModP& R, FpMat A, int cols) {
    int rows = (int)A.size();
    std::vector<int> pivot_col;
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; c++) {
        int sel = -1;
        for (int i = pr; i < rows; i++)
            if (A[i][c]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[pr], A[sel]);
        uint64_t inv = R.inv(A[pr][c]);
        for (int j = 0; j < cols; j++) A[pr][j] = R.mul(A[pr][j], inv);
        for (int i = 0; i < rows; i++) {
            if (i == pr || !A[i][c]) continue;
            uint64_t t = A[i][c];
            for (int j = 0; j < cols; j++) A[i][j] = R.sub(A[i][j], R.mul(t, A[pr][j]));
        }
        pivot_col.push_back(c);
        pr++;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    FpMat basis;
    for (int c = 0; c < cols; c++) {
        if (is_pivot[c]) continue;
        FpVec v(cols, 0);
        v[c] = 1;
        for (int i = 0; i < (int)pivot_col.size(); i++)
            v[pivot_col[i]] = R.sub(0, A[i][c]);
        basis.push_back(std::move(v));
    }
    return basis;
}

int fp_rank(const ModP& R, FpMat A, int cols) {
    int rows = (int)A.size(), pr = 0;
    for (int c = 0; c < cols && pr < rows; c++) {
        int sel = -1;
        for (int i = pr; i < rows; i++)
            if (A[i][c]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[pr], A[sel]);
        for (int i = pr + 1; i < rows; i++) {
            if (!A[i][c]) continue;
            uint64_t t = R.mul(A[i][c], R.inv(A[pr][c]));
            for (int j = c; j < cols; j++) A[i][j] = R.sub(A[i][j], R.mul(t, A[pr][j]));
        }
        pr++;
    }
    return pr;
}

// solve A x = b for consistent systems; A as rows x cols, b length rows
FpVec fp_solve(const ModP& R, FpMat A, FpVec b, int cols) {
    int rows = (int)A.size();
    for (int i = 0; i < rows; i++) A[i].push_back(b[i]);
    int pr = 0;
    std::vector<int> pcol;
    for (int c = 0; c < cols && pr < rows; c++) {
        int sel = -1;
        for (int i = pr; i < rows; i++)
            if (A[i][c]) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(A[pr], A[sel]);
        uint64_t inv = R.inv(A[pr][c]);
        for (int j = 0; j <= cols; j++) A[pr][j] = R.mul(A[pr][j], inv);
        for (int i = 0; i < rows; i++) {
            if (i == pr || !A[i][c]) continue;
            uint64_t t = A[i][c];
            for (int j = 0; j <= cols; j++) A[i][j] = R.sub(A[i][j], R.mul(t, A[pr][j]));
        }
        pcol.push_back(c);
        pr++;
    }
    for (int i = pr; i < rows; i++)
        if (A[i][cols]) throw std::logic_error("fp_solve: inconsistent system");
    FpVec x(cols, 0);
    for (int i = 0; i < (int)pcol.size(); i++) x[pcol[i]] = A[i][cols];
    return x;
}

} // namespace

/* ------------------------------------------------------------ the Impl */

struct NumberField::Impl {
    QPoly f;
    ZVec f_int;
    int n = 0, r1 = 0, r2 = 0;
    mpz_class poly_d, disc, index;
    ZMat mat;
    mpz_class den;
    std::vector<mpq_class> theta_traces;

    mutable std::mutex mu;
    mutable ZMat mult_table;
    mutable std::map<uint64_t, SplittingType> split_cache;

    // mat is row echelon with pivot of row i on column i, so coordinates
    // resolve by forward substitution
    ZVec solve_in_order(const ZVec& v, const mpz_class& extra_den) const {
        std::vector<mpq_class> w(n);
        for (int j = 0; j < n; j++) {
            w[j] = mpq_class(v[j] * den);
            w[j] /= extra_den;
            w[j].canonicalize();
        }
        ZVec c(n);
        for (int j = 0; j < n; j++) {
            mpq_class acc = w[j];
            for (int s = 0; s < j; s++) acc -= mpq_class(c[s] * mat[s][j]);
            mpq_class q = acc / mat[j][j];
            if (q.get_den() != 1)
                throw std::logic_error("solve_in_order: element not in order");
            c[j] = q.get_num();
        }
        return c;
    }

    const ZMat& table() const {
        std::lock_guard<std::mutex> lock(mu);
        if (mult_table.empty()) {
            ZMat t(n * (size_t)n);
            for (int i = 0; i < n; i++)
                for (int j = 0; j <= i; j++) {
                    ZVec prod = zmulmod_f(mat[i], mat[j], f_int);
                    ZVec c = solve_in_order(prod, den);
                    if (i != j) t[j * n + i] = c;
                    t[i * n + j] = std::move(c);
                }
            mult_table = std::move(t);
        }
        return mult_table;
    }
};

namespace {

/* O/pO as an F_p-algebra on the order basis */
struct FpAlgebra {
    ModP R;
    int n;
    FpMat tab;  // row i*n+j = coords of b_i b_j

    FpAlgebra(const NumberField::Impl& I, uint64_t p) : R(p), n(I.n) {
        const ZMat& T = I.table();
        tab.assign(n * (size_t)n, FpVec(n));
        for (int i = 0; i < n * n; i++)
            for (int j = 0; j < n; j++) {
                mpz_class m = T[i][j] % (long)p;
                if (m < 0) m += (long)p;
                tab[i][j] = m.get_ui();
            }
    }

    FpVec mul(const FpVec& u, const FpVec& v) const {
        FpVec r(n, 0);
        for (int i = 0; i < n; i++) {
            if (!u[i]) continue;
            for (int j = 0; j < n; j++) {
                if (!v[j]) continue;
                uint64_t c = R.mul(u[i], v[j]);
                const FpVec& row = tab[i * n + j];
                for (int k = 0; k < n; k++) r[k] = R.add(r[k], R.mul(c, row[k]));
            }
        }
        return r;
    }

    FpVec one() const {
        FpVec v(n, 0);
        v[0] = 1;  // order basis row 0 is the element 1
        return v;
    }

    // x -> x^(p^k) with p^k >= n
    FpVec frobenius_power(FpVec x) const {
        int k = 0;
        {
            mpz_class pk = 1;
            while (pk < n) { pk *= (long)R.p; k++; }
        }
        for (int it = 0; it < k; it++) {
            FpVec result;
            bool started = false;
            uint64_t e = R.p;
            FpVec base = x;
            while (e) {
                if (e & 1) {
                    if (!started) { result = base; started = true; }
                    else result = mul(result, base);
                }
                e >>= 1;
                if (e) base = mul(base, base);
            }
            x = std::move(result);
        }
        return x;
    }

    // nilradical basis rows
    FpMat nilradical() const {
        FpMat M(n, FpVec(n, 0));
        for (int t = 0; t < n; t++) {
            FpVec e(n, 0);
            e[t] = 1;
            FpVec img = frobenius_power(std::move(e));
            for (int i = 0; i < n; i++) M[i][t] = img[i];
        }
        return fp_nullspace(R, std::move(M), n);
    }
};

/* Decomposition of the semisimple quotient B = A/N into fields, returning
 * (residue degree, unit idempotent of the factor as an element of A).
 */
struct SemisimpleSplitter {
    const FpAlgebra& A;
    FpMat nil_rref;          // nilradical in reduced row echelon form
    std::vector<int> piv, comp;
    int m;                   // dim of B
    uint64_t rng_state = 0x243f6a8885a308d3ULL;

    explicit SemisimpleSplitter(const FpAlgebra& alg) : A(alg) {
        nil_rref = A.nilradical();
        const ModP& R = A.R;
        int pr = 0;
        for (int c = 0; c < A.n && pr < (int)nil_rref.size(); c++) {
            int sel = -1;
            for (int i = pr; i < (int)nil_rref.size(); i++)
                if (nil_rref[i][c]) { sel = i; break; }
            if (sel < 0) continue;
            std::swap(nil_rref[pr], nil_rref[sel]);
            uint64_t inv = R.inv(nil_rref[pr][c]);
            for (int j = 0; j < A.n; j++) nil_rref[pr][j] = R.mul(nil_rref[pr][j], inv);
            for (int i = 0; i < (int)nil_rref.size(); i++) {
                if (i == pr || !nil_rref[i][c]) continue;
                uint64_t t = nil_rref[i][c];
                for (int j = 0; j < A.n; j++)
                    nil_rref[i][j] = R.sub(nil_rref[i][j], R.mul(t, nil_rref[pr][j]));
            }
            piv.push_back(c);
            pr++;
        }
        std::vector<bool> isp(A.n, false);
        for (int c : piv) isp[c] = true;
        for (int c = 0; c < A.n; c++)
            if (!isp[c]) comp.push_back(c);
        m = (int)comp.size();
    }

    FpVec project(FpVec v) const {
        const ModP& R = A.R;
        for (int i = 0; i < (int)piv.size(); i++) {
            uint64_t t = v[piv[i]];
            if (!t) continue;
            for (int j = 0; j < A.n; j++) v[j] = R.sub(v[j], R.mul(t, nil_rref[i][j]));
        }
        FpVec w(m);
        for (int j = 0; j < m; j++) w[j] = v[comp[j]];
        return w;
    }

    FpVec embed(const FpVec& w) const {
        FpVec v(A.n, 0);
        for (int j = 0; j < m; j++) v[comp[j]] = w[j];
        return v;
    }

    FpVec mulB(const FpVec& u, const FpVec& v) const {
        return project(A.mul(embed(u), embed(v)));
    }

    uint64_t rnd() {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        return rng_state;
    }

    // out: (field dim, unit idempotent in B coords)
    void split(const FpMat& basis, const FpVec& unit,
               std::vector<std::pair<int, FpVec>>& out) {
        const ModP& R = A.R;
        int d = (int)basis.size();
        if (d == 1) {
            out.emplace_back(1, unit);
            return;
        }
        // coords relative to `basis` (consistent by construction)
        auto solveS = [&](const FpVec& v) {
            FpMat M(m, FpVec(d));
            for (int i = 0; i < m; i++)
                for (int j = 0; j < d; j++) M[i][j] = basis[j][i];
            return fp_solve(R, std::move(M), v, d);
        };
        for (int attempt = 0; attempt < 400; attempt++) {
            FpVec x(m, 0);
            if (attempt < d) x = basis[attempt];
            else {
                for (int j = 0; j < d; j++) {
                    uint64_t c = rnd() % R.p;
                    if (!c) continue;
                    for (int i = 0; i < m; i++) x[i] = R.add(x[i], R.mul(c, basis[j][i]));
                }
            }
            // minimal polynomial of x in (S, unit) via Krylov
            PolyP mp;
            {
                FpMat reduced, combos;
                FpVec cur = unit;
                for (int k = 0; k <= d; k++) {
                    FpVec row = solveS(cur), combo(d + 1, 0);
                    combo[k] = 1;
                    for (size_t r2 = 0; r2 < reduced.size(); r2++) {
                        int lead = -1;
                        for (int c = 0; c < d; c++)
                            if (reduced[r2][c]) { lead = c; break; }
                        if (lead >= 0 && row[lead]) {
                            uint64_t t = R.mul(row[lead], R.inv(reduced[r2][lead]));
                            for (int c = 0; c < d; c++) row[c] = R.sub(row[c], R.mul(t, reduced[r2][c]));
                            for (int c = 0; c <= d; c++) combo[c] = R.sub(combo[c], R.mul(t, combos[r2][c]));
                        }
                    }
                    bool zero = true;
                    for (int c = 0; c < d; c++)
                        if (row[c]) { zero = false; break; }
                    if (zero) {
                        mp.assign(combo.begin(), combo.begin() + k + 1);
                        break;
                    }
                    reduced.push_back(std::move(row));
                    combos.push_back(std::move(combo));
                    cur = mulB(cur, x);
                }
                if (mp.empty()) throw std::logic_error("algebra split: no minimal polynomial");
            }
            ModP::trim(mp);
            mp = R.monic(std::move(mp));
            auto factors = R.factor(mp, 0x6a09e667);
            for (auto& [h, e] : factors)
                if (e != 1) throw std::logic_error("algebra split: non-semisimple quotient");
            if (factors.size() == 1 && R.deg(factors[0].first) == d) {
                out.emplace_back(d, unit);
                return;
            }
            if (factors.size() <= 1) continue;  // proper subfield generator; retry

            // kernels of h_j(x) on S give the CRT decomposition
            std::vector<FpMat> part_bases;
            bool ok = true;
            int total = 0;
            for (auto& [hj, e] : factors) {
                // h_j evaluated at x (Horner in B)
                FpVec hx(m, 0);
                for (int k2 = R.deg(hj); k2 >= 0; k2--) {
                    hx = mulB(hx, x);
                    if (hj[k2]) {
                        for (int i = 0; i < m; i++) hx[i] = R.add(hx[i], R.mul(hj[k2], unit[i]));
                    }
                }
                FpMat M(d, FpVec(d));
                for (int j = 0; j < d; j++) {
                    FpVec img = solveS(mulB(hx, basis[j]));
                    for (int i = 0; i < d; i++) M[i][j] = img[i];
                }
                FpMat kerS = fp_nullspace(R, std::move(M), d);
                if (kerS.empty() || (int)kerS.size() == d) { ok = false; break; }
                FpMat sb;
                for (auto& kc : kerS) {
                    FpVec v(m, 0);
                    for (int j = 0; j < d; j++) {
                        if (!kc[j]) continue;
                        for (int i = 0; i < m; i++) v[i] = R.add(v[i], R.mul(kc[j], basis[j][i]));
                    }
                    sb.push_back(std::move(v));
                }
                total += (int)sb.size();
                part_bases.push_back(std::move(sb));
            }
            if (!ok || total != d) continue;

            // decompose the unit: 1_S = sum of the factor idempotents
            FpMat M(m, FpVec(total));
            {
                int col = 0;
                for (auto& sb : part_bases)
                    for (auto& v : sb) {
                        for (int i = 0; i < m; i++) M[i][col] = v[i];
                        col++;
                    }
            }
            FpVec sol = fp_solve(R, std::move(M), unit, total);
            int col = 0;
            for (auto& sb : part_bases) {
                FpVec u(m, 0);
                for (auto& v : sb) {
                    if (sol[col])
                        for (int i = 0; i < m; i++) u[i] = R.add(u[i], R.mul(sol[col], v[i]));
                    col++;
                }
                split(sb, u, out);
            }
            return;
        }
        throw std::logic_error("algebra split: did not converge");
    }
};

// splitting type of p when p divides the index: decompose O/pO
SplittingType algebra_splitting(const NumberField::Impl& I, uint64_t p) {
    FpAlgebra A(I, p);
    SemisimpleSplitter S(A);
    FpMat Bbasis(S.m);
    for (int j = 0; j < S.m; j++) {
        FpVec e(A.n, 0);
        e[S.comp[j]] = 1;
        Bbasis[j] = S.project(std::move(e));
    }
    std::vector<std::pair<int, FpVec>> comps;
    S.split(Bbasis, S.project(A.one()), comps);

    SplittingType st;
    const ModP& R = A.R;
    int check = 0;
    for (auto& [fdeg, unitB] : comps) {
        // lift to an idempotent of A: x <- 3x^2 - 2x^3 until stable
        FpVec e = S.embed(unitB);
        for (int it = 0; it < 40; it++) {
            FpVec e2 = A.mul(e, e);
            if (e2 == e) break;
            FpVec e3 = A.mul(e2, e);
            FpVec nx(A.n);
            for (int i = 0; i < A.n; i++) {
                uint64_t t = R.mul(3 % R.p, e2[i]);
                nx[i] = R.sub(t, R.mul(2 % R.p, e3[i]));
            }
            e = std::move(nx);
            if (it == 39) throw std::logic_error("algebra split: idempotent lift stalled");
        }
        // local dimension = rank of multiplication by e on A
        FpMat M(A.n, FpVec(A.n));
        for (int j = 0; j < A.n; j++) {
            FpVec ej(A.n, 0);
            ej[j] = 1;
            FpVec img = A.mul(e, ej);
            for (int i = 0; i < A.n; i++) M[i][j] = img[i];
        }
        int dloc = fp_rank(R, std::move(M), A.n);
        if (dloc % fdeg != 0) throw std::logic_error("algebra split: f does not divide local dim");
        st.ef.emplace_back(dloc / fdeg, fdeg);
        check += dloc;
    }
    if (check != A.n) throw std::logic_error("algebra split: local dims do not sum to n");
    return st;
}

std::vector<mpz_class> lift_poly(const PolyP& g) {
    std::vector<mpz_class> r(g.size());
    for (size_t i = 0; i < g.size(); i++) r[i] = (unsigned long)g[i];
    return r;
}

bool dedekind_ok(const ZVec& f_int, uint64_t p) {
    ModP R(p);
    PolyP fp = R.reduce(QPoly::from_int_coeffs(f_int));
    auto fac = R.factor(fp, p);
    PolyP gbar = {1}, hbar = {1};
    for (auto& [g, e] : fac) {
        gbar = R.mulp(gbar, g);
        for (int i = 1; i < e; i++) hbar = R.mulp(hbar, g);
    }
    ZVec g = lift_poly(gbar), h = lift_poly(hbar);
    ZVec gh(g.size() + h.size() - 1, mpz_class(0));
    for (size_t i = 0; i < g.size(); i++)
        for (size_t j = 0; j < h.size(); j++) gh[i + j] += g[i] * h[j];
    PolyP Tbar;
    {
        size_t len = std::max(gh.size(), f_int.size());
        Tbar.resize(len);
        for (size_t i = 0; i < len; i++) {
            mpz_class x = (i < gh.size() ? gh[i] : mpz_class(0)) -
                          (i < f_int.size() ? f_int[i] : mpz_class(0));
            if (!mpz_divisible_ui_p(x.get_mpz_t(), p))
                throw std::logic_error("dedekind: g*h != f mod p");
            x /= (long)p;
            mpz_class mres = x % (long)p;
            if (mres < 0) mres += (long)p;
            Tbar[i] = mres.get_ui();
        }
        ModP::trim(Tbar);
    }
    PolyP U = R.gcd(R.gcd(Tbar, gbar), hbar);
    return R.deg(U) <= 0;
}

} // namespace

/* ----------------------------------------------------------- accessors */

int NumberField::degree() const { return impl_->n; }
int NumberField::r1() const { return impl_->r1; }
int NumberField::r2() const { return impl_->r2; }
const mpz_class& NumberField::disc() const { return impl_->disc; }
mpz_class NumberField::abs_disc() const { return abs(impl_->disc); }
const mpz_class& NumberField::index() const { return impl_->index; }
const QPoly& NumberField::poly() const { return impl_->f; }
const std::vector<std::vector<mpz_class>>& NumberField::order_mat() const { return impl_->mat; }
const mpz_class& NumberField::order_den() const { return impl_->den; }

std::string NumberField::label() const {
    return std::to_string(degree()) + "." + abs_disc().get_str();
}

QPoly NumberField::element_poly(const std::vector<mpz_class>& oc) const {
    const auto& I = *impl_;
    std::vector<mpq_class> v(I.n, mpq_class(0));
    for (int s = 0; s < I.n && s < (int)oc.size(); s++) {
        if (oc[s] == 0) continue;
        for (int j = 0; j < I.n; j++) v[j] += mpq_class(oc[s] * I.mat[s][j], I.den);
    }
    for (auto& c : v) c.canonicalize();
    return QPoly(std::move(v));
}

mpq_class NumberField::element_norm(const QPoly& elem) const {
    if (elem.is_zero()) return 0;
    if (elem.degree() == 0) {
        mpq_class r = 1;
        for (int i = 0; i < degree(); i++) r *= elem[0];
        return r;
    }
    return resultant(impl_->f, elem);
}

mpq_class NumberField::element_trace(const QPoly& elem) const {
    mpq_class t = 0;
    for (int k = 0; k <= elem.degree(); k++) t += elem[k] * impl_->theta_traces[k];
    return t;
}

std::vector<std::vector<mpq_class>> NumberField::trace_gram() const {
    const auto& I = *impl_;
    const auto& T = I.table();
    int n = I.n;
    std::vector<std::vector<mpq_class>> G(n, std::vector<mpq_class>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j <= i; j++) {
            QPoly prod = element_poly(T[i * n + j]);
            mpq_class tr = element_trace(prod);
            G[i][j] = tr;
            G[j][i] = tr;
        }
    return G;
}

/* --------------------------------------------------------- construction */

NumberField NumberField::create(const QPoly& f, bool assume_irreducible) {
    return create_impl(f, assume_irreducible, nullptr);
}

NumberField NumberField::create_with_disc_support(const QPoly& f,
                                                  const std::vector<mpz_class>& disc_primes) {
    return create_impl(f, true, &disc_primes);
}

/* disc_primes, when given, must contain every prime dividing the field
 * discriminant (the caller knows this from relative-discriminant data).
 * Any unfactored cofactor of disc(f) is then a perfect square belonging
 * entirely to the index, so the expensive complete factorization of
 * disc(f) can be skipped; the returned order is still p-maximal at every
 * prime of the field discriminant and at every prime below 10^5.
 */
NumberField NumberField::create_impl(const QPoly& f, bool assume_irreducible,
                                     const std::vector<mpz_class>* disc_primes) {
    if (!f.is_monic() || !f.is_integral() || f.degree() < 1)
        throw std::invalid_argument("NumberField: need monic integral polynomial");
    if (!assume_irreducible && !is_irreducible(f))
        throw std::invalid_argument("NumberField: reducible polynomial");

    auto impl = std::make_shared<Impl>();
    impl->f = f;
    impl->f_int = f.int_coeffs();
    int n = impl->n = f.degree();

    SturmChain chain(f);
    impl->r1 = chain.count_real_roots();
    impl->r2 = (n - impl->r1) / 2;

    impl->theta_traces.assign(n, mpq_class(0));
    impl->theta_traces[0] = n;
    for (int k = 1; k < n; k++) {
        mpq_class s = mpq_class(-k) * f[n - k];
        for (int j = 1; j < k; j++) s -= f[n - j] * impl->theta_traces[k - j];
        impl->theta_traces[k] = s;
    }

    impl->poly_d = poly_disc(f);
    if (impl->poly_d == 0) throw std::invalid_argument("NumberField: non-squarefree polynomial");

    impl->den = 1;
    impl->mat.assign(n, ZVec(n, mpz_class(0)));
    for (int i = 0; i < n; i++) impl->mat[i][i] = 1;

    for (auto& [pz, e] : factor_integer(impl->poly_d)) {
        if (e < 2) continue;
        if (!pz.fits_ulong_p())
            throw std::runtime_error("NumberField: discriminant prime exceeds word size");
        uint64_t p = pz.get_ui();
        // Z[theta] p-maximal certifies any overorder p-maximal (the index so
        // far is supported at earlier primes)
        if (dedekind_ok(impl->f_int, p)) continue;

        for (int round = 0;; round++) {
            if (round > 64) throw std::runtime_error("NumberField: p-maximalization did not stabilize");
            FpAlgebra A(*impl, p);
            FpMat nil = A.nilradical();
            // radical ideal I of pO, order coordinates, HNF
            ZMat rows;
            for (auto& v : nil) {
                ZVec r(n);
                for (int j = 0; j < n; j++) r[j] = (unsigned long)v[j];
                rows.push_back(std::move(r));
            }
            for (int i = 0; i < n; i++) {
                ZVec r(n, mpz_class(0));
                r[i] = (long)p;
                rows.push_back(std::move(r));
            }
            ZMat HI = hnf_rows(std::move(rows), n);
            if ((int)HI.size() != n) throw std::logic_error("radical ideal not full rank");

            const ZMat& T = impl->table();
            // I-coordinates (mod p) of an order-coordinate vector lying in I
            auto icoords_mod_p = [&](ZVec acc) {
                FpVec c(n);
                for (int j = 0; j < n; j++) {
                    if (acc[j] % HI[j][j] != 0)
                        throw std::logic_error("multiplier: product not in radical");
                    mpz_class q = acc[j] / HI[j][j];
                    for (int t2 = j; t2 < n; t2++) acc[t2] -= q * HI[j][t2];
                    mpz_class m = q % (long)p;
                    if (m < 0) m += (long)p;
                    c[j] = m.get_ui();
                }
                return c;
            };
            // conditions: for y = sum y_t b_t (mod p), y * I_s has I-coords = 0 mod p
            FpMat cond(n * (size_t)n, FpVec(n, 0));
            for (int t = 0; t < n; t++) {
                for (int s = 0; s < n; s++) {
                    ZVec w(n, mpz_class(0));
                    for (int u = 0; u < n; u++) {
                        if (HI[s][u] == 0) continue;
                        const ZVec& tu = T[t * n + u];
                        for (int k2 = 0; k2 < n; k2++) w[k2] += HI[s][u] * tu[k2];
                    }
                    FpVec c = icoords_mod_p(std::move(w));
                    for (int k2 = 0; k2 < n; k2++) cond[s * n + k2][t] = c[k2];
                }
            }
            FpMat ker = fp_nullspace(ModP(p), std::move(cond), n);
            if (ker.empty()) break;  // p-maximal

            // O' = O + (1/p) span(ker), in power-basis coordinates over den*p
            ZMat prows;
            for (auto& y : ker) {
                ZVec pw(n, mpz_class(0));
                for (int t = 0; t < n; t++) {
                    if (!y[t]) continue;
                    for (int j = 0; j < n; j++)
                        pw[j] += mpz_class((unsigned long)y[t]) * impl->mat[t][j];
                }
                prows.push_back(std::move(pw));
            }
            for (int i = 0; i < n; i++) {
                ZVec pw(n);
                for (int j = 0; j < n; j++) pw[j] = impl->mat[i][j] * (long)p;
                prows.push_back(std::move(pw));
            }
            ZMat H2 = hnf_rows(std::move(prows), n);
            if ((int)H2.size() != n) throw std::logic_error("order update lost rank");
            mpz_class nden = impl->den * (long)p;
            mpz_class g = nden;
            for (auto& row : H2)
                for (auto& x : row)
                    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            if (g > 1) {
                nden /= g;
                for (auto& row : H2)
                    for (auto& x : row) x /= g;
            }
            bool same = (nden == impl->den && H2 == impl->mat);
            impl->mat = std::move(H2);
            impl->den = nden;
            {
                std::lock_guard<std::mutex> lock(impl->mu);
                impl->mult_table.clear();
            }
            if (same) break;
        }
    }

    mpz_class diag = 1;
    for (int i = 0; i < n; i++) diag *= impl->mat[i][i];
    mpz_class denn;
    mpz_pow_ui(denn.get_mpz_t(), impl->den.get_mpz_t(), n);
    if (denn % diag != 0) throw std::logic_error("NumberField: index not integral");
    impl->index = denn / diag;
    mpz_class idx2 = impl->index * impl->index;
    if (impl->poly_d % idx2 != 0) throw std::logic_error("NumberField: index^2 does not divide disc");
    impl->disc = impl->poly_d / idx2;
    if ((impl->r2 % 2 == 0) != (impl->disc > 0))
        throw std::logic_error("NumberField: discriminant sign/(r1,r2) mismatch");
    if (impl->mat[0][0] != impl->den)
        throw std::logic_error("NumberField: 1 not the first basis row");

    NumberField F;
    F.impl_ = std::move(impl);
    return F;
}

/* ------------------------------------------------------ splitting types */

SplittingType NumberField::splitting(uint64_t p) const {
    const auto& I = *impl_;
    bool cache = p <= 10000;
    if (cache) {
        std::lock_guard<std::mutex> lock(I.mu);
        auto it = I.split_cache.find(p);
        if (it != I.split_cache.end()) return it->second;
    }
    SplittingType st;
    if (!mpz_divisible_ui_p(I.index.get_mpz_t(), p)) {
        ModP R(p);
        for (auto& [d, e] : R.factor_shape(R.reduce(I.f))) st.ef.emplace_back(e, d);
    } else {
        st = algebra_splitting(I, p);
    }
    std::sort(st.ef.begin(), st.ef.end());
    int tot = 0;
    for (auto& [e, fdeg] : st.ef) tot += e * fdeg;
    if (tot != I.n) throw std::logic_error("splitting: sum e*f != degree");
    if (cache) {
        std::lock_guard<std::mutex> lock(I.mu);
        I.split_cache.emplace(p, st);
    }
    return st;
}

std::vector<mpz_class> NumberField::residue_norms(uint64_t p) const {
    std::vector<mpz_class> out;
    for (auto& [e, f] : splitting(p).ef) {
        mpz_class n;
        mpz_ui_pow_ui(n.get_mpz_t(), p, f);
        out.push_back(n);
    }
    return out;
}

/* ------------------------------------------------- real root predicates */

static bool all_roots_sign(const NumberField& F, const QPoly& delta, int want) {
    SturmChain chain(F.poly());
    auto roots = chain.isolate_roots();
    for (auto& iv : roots)
        if (sign_at_root(chain, iv, delta) != want) return false;
    return true;
}

bool is_totally_real_poly(const QPoly& f) {
    SturmChain c(f);
    return c.count_real_roots() == f.degree();
}

bool is_totally_negative(const NumberField& F, const QPoly& delta) {
    if (delta.is_zero()) return false;
    return all_roots_sign(F, delta, -1);
}

bool is_totally_positive(const NumberField& F, const QPoly& delta) {
    if (delta.is_zero()) return false;
    return all_roots_sign(F, delta, +1);
}

/* ---------------------------------------------------------- isomorphism */

bool is_isomorphic(const NumberField& a, const NumberField& b) {
    if (a.degree() != b.degree() || a.disc() != b.disc()) return false;
    mpz_class bad = poly_disc(a.poly()) * poly_disc(b.poly());
    int used = 0;
    for (uint32_t p : primes_below(100000)) {
        if (mpz_divisible_ui_p(bad.get_mpz_t(), p)) continue;
        if (!(a.splitting(p) == b.splitting(p))) return false;
        if (++used >= 50) break;
    }
    if (used < 50) throw std::logic_error("is_isomorphic: exhausted test primes");
    return true;
}

/* --------------------------------------------------- absolute extension */

NumberField absolute_quadratic_extension(const NumberField& F, const QPoly& delta) {
    if (!is_totally_negative(F, delta))
        throw std::invalid_argument("absolute_quadratic_extension: delta not totally negative");
    int n = F.degree();
    const QPoly& f = F.poly();
    for (int ctry = 0;; ctry++) {
        if (ctry > 40)
            throw std::runtime_error("absolute_quadratic_extension: no separable generator");
        long c = ((ctry + 1) / 2) * ((ctry % 2) ? 1 : -1);  // 0, 1, -1, 2, -2, ...
        /* charpoly of sqrt(delta) + c*theta over Q is
         *     prod_i ((x - c y_i)^2 - delta(y_i))  =  Res_y(f(y), (x-cy)^2 - delta(y)),
         * computed by resultants at 2n+1 points plus Newton interpolation.
         */
        int m = 2 * n;
        std::vector<mpq_class> xs(m + 1), ys(m + 1);
        for (int k = 0; k <= m; k++) {
            mpq_class xk(k - n);
            QPoly lin = QPoly::constant(xk) - QPoly::x() * mpq_class(c);
            QPoly g = lin * lin - delta;
            xs[k] = xk;
            ys[k] = resultant(f, g);
        }
        std::vector<mpq_class> dd = ys;
        for (int j = 1; j <= m; j++)
            for (int i = m; i >= j; i--)
                dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
        QPoly R = QPoly::constant(dd[m]);
        for (int i = m - 1; i >= 0; i--)
            R = R * (QPoly::x() - QPoly::constant(xs[i])) + QPoly::constant(dd[i]);
        if (R.degree() != m || !R.is_monic())
            throw std::logic_error("absolute extension: malformed characteristic polynomial");
        if (!R.is_integral())
            throw std::invalid_argument("absolute extension: delta is not an algebraic integer");
        if (!is_squarefree(R)) continue;
        // delta totally negative makes F[sqrt(delta)] a field, so a squarefree
        // characteristic polynomial is the (irreducible) minimal polynomial
        return NumberField::create(R, /*assume_irreducible=*/true);
    }
}

} // namespace hrc
